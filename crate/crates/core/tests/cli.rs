//! End-to-end tests of the `dqcap` binary: exit codes, output shapes, and
//! determinism at the process boundary.

use std::process::{Command, Output};

fn dqcap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqcap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn capacity_happy_path() {
    let out = dqcap(&[
        "capacity",
        "classical",
        "--channel",
        "attenuation",
        "--lambda",
        "0.5",
        "--power",
        "8",
        "--integer-levels",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"dq_bits\":3,"), "{text}");
    // Exactly one JSON object on one line.
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with('{') && text.ends_with("}\n"));
}

#[test]
fn invalid_lambda_exits_2() {
    let out = dqcap(&[
        "capacity",
        "classical",
        "--channel",
        "attenuation",
        "--lambda",
        "1.5",
        "--power",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn sub_vacuum_power_exits_2() {
    let out = dqcap(&[
        "capacity",
        "classical",
        "--channel",
        "attenuation",
        "--lambda",
        "0.5",
        "--power",
        "0.1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let out = dqcap(&["capacity", "classical", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_reference_exits_3() {
    let out = dqcap(&[
        "compare",
        "classical",
        "--channel",
        "thermal",
        "--lambda",
        "0.8",
        "--ne",
        "1",
        "--power",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quantum_compare_attenuation_is_exact() {
    let out = dqcap(&[
        "compare",
        "quantum",
        "--channel",
        "attenuation",
        "--lambda",
        "0.8",
        "--power",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"dq_bits\":2,"), "{text}");
    assert!(text.contains("\"gap_bits\":0,"), "{text}");
}

#[test]
fn region_csv_shape_and_corners() {
    let out = dqcap(&[
        "region",
        "broadcast",
        "--lambda",
        "0.8",
        "--power",
        "50.5",
        "--points",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x_rate,y_rate");
    assert_eq!(lines.len(), 65);
    assert!(lines[1].starts_with("2,4.33628338786"), "{}", lines[1]);
    assert_eq!(*lines.last().unwrap(), "6.33628338786,0");
}

#[test]
fn region_unsupported_regime_exits_2() {
    let out = dqcap(&["region", "broadcast", "--lambda", "0.4", "--power", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mac_region_uses_both_powers() {
    let out = dqcap(&[
        "region",
        "mac",
        "--lambda",
        "0.5",
        "--power-a",
        "16",
        "--power-b",
        "16",
        "--points",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "0,4");
    assert_eq!(lines[2], "4,0");
}

#[test]
fn sweep_attenuation_gap_stays_bounded() {
    let out = dqcap(&[
        "sweep",
        "classical",
        "--channel",
        "attenuation",
        "--sweep",
        "lambda",
        "--start",
        "0.05",
        "--stop",
        "1",
        "--steps",
        "20",
        "--sweep2",
        "power",
        "--start2",
        "1",
        "--stop2",
        "100",
        "--steps2",
        "40",
        "--scale2",
        "log",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,power,dq_bits,reference_bits,gap_bits");
    assert_eq!(lines.len(), 1 + 20 * 40);
    let max_gap = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(4).unwrap().parse::<f64>().unwrap().abs())
        .fold(0.0f64, f64::max);
    assert!(max_gap <= 1.4, "max |gap| = {max_gap}");
}

#[test]
fn byte_identical_across_runs() {
    let args = [
        "sweep",
        "classical",
        "--channel",
        "classical-noise",
        "--power",
        "10",
        "--sweep",
        "mu2",
        "--start",
        "0.1",
        "--stop",
        "10",
        "--steps",
        "13",
        "--scale",
        "log",
    ];
    let a = dqcap(&args);
    let b = dqcap(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("dqcap-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("capacity.json");
    let out = dqcap(&[
        "capacity",
        "quantum",
        "--channel",
        "thermal",
        "--lambda",
        "0.8",
        "--ne",
        "1",
        "--power",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"dq_bits\":1.26303440583,"), "{text}");
    std::fs::remove_file(&path).ok();
}
