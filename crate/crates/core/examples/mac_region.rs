//! Multiple-access channel: two senders share one beamsplitter output.
//!
//! A's high-order tiles stay distinguishable whatever B sends; the
//! low-order tile positions are shared, so the senders split them rather
//! than add. In the regime lambda W_A >= (1 - lambda) W_B the sum rate is
//! pinned to A's own bound.
//!
//! Run with: cargo run --example mac_region

use dqcap::multiuser::mac_region;
use dqcap::PowerBudget;

fn main() {
    let budget = |w: f64| PowerBudget::new(w).unwrap();

    println!("symmetric case: lambda = 0.5, W_A = W_B = 16");
    let region = mac_region(0.5, budget(16.0), budget(16.0)).unwrap();
    for c in region.constraints() {
        let lhs: Vec<&str> = region
            .labels()
            .iter()
            .zip(&c.coeffs)
            .filter(|(_, a)| **a == 1.0)
            .map(|(l, _)| l.as_str())
            .collect();
        println!("  {} <= {:.4} bits", lhs.join(" + "), c.bound_bits);
    }
    println!("  boundary (R_A, R_B):");
    for (ra, rb) in region.boundary(5) {
        println!("    {ra:>8.4} {rb:>8.4}");
    }

    println!("\nasymmetric case: lambda = 0.7, W_A = 40, W_B = 12");
    let region = mac_region(0.7, budget(40.0), budget(12.0)).unwrap();
    let pts = region.boundary(5);
    println!("  corner where B peaks: ({:.4}, {:.4})", pts[0].0, pts[0].1);
    println!("  corner where A peaks: ({:.4}, {:.4})", pts[4].0, pts[4].1);
    println!(
        "  sum along the frontier is constant: {:.4} bits",
        pts[0].0 + pts[0].1
    );

    println!("\ndegenerate sender: W_B at the vacuum floor");
    let region = mac_region(0.5, budget(16.0), PowerBudget::vacuum()).unwrap();
    println!(
        "  R_B <= {} bits; the channel reduces to single-user attenuation for A",
        region.constraints()[1].bound_bits
    );

    println!("\nout of regime: lambda W_A < (1 - lambda) W_B is rejected:");
    match mac_region(0.3, budget(1.0), budget(100.0)) {
        Err(e) => println!("  {e}"),
        Ok(_) => unreachable!(),
    }
}
