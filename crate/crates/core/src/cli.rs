//! Command-line front end: single capacity queries, model-vs-reference
//! comparisons, rate-region traces, and parameter sweeps.
//!
//! Single results print as one JSON object; regions and sweeps print
//! plot-ready CSV. Output is deterministic: identical invocations produce
//! byte-identical bytes. Numbers carry 12 significant digits, with a
//! lowercase `inf` for infinite capacity. Exit codes: 0 success, 2 invalid
//! input, 3 comparison requested for a family with no reference formula.

use crate::dq_engine::{
    classical_capacity, cq_tradeoff_region, private_capacity, quantum_capacity, CapacityResult,
};
use crate::error::{Error, Result};
use crate::multiuser::{broadcast_region, mac_region, RateRegion};
use crate::phase_model::{ChannelModel, PowerBudget};
use crate::reference::{
    attenuation_capacity_exact, attenuation_quantum_exact, classical_noise_lower_bound,
    dephasing_holevo, gap_report, GapReport, ReferenceKind,
};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

// ---------------------------------------------------------------------------
// Argument surface
// ---------------------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "dqcap",
    version,
    about = "Discrete-quadrature capacities of bosonic gaussian channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one capacity value, printed as a JSON object
    Capacity(CapacityArgs),
    /// Compare the model against a known gaussian reference formula
    Compare(CompareArgs),
    /// Trace the Pareto boundary of a rate region as CSV
    Region(RegionArgs),
    /// Sweep one or two parameters, emitting a CSV table
    Sweep(SweepArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapacityKind {
    Classical,
    Quantum,
    Private,
}

impl CapacityKind {
    fn label(&self) -> &'static str {
        match self {
            Self::Classical => "classical",
            Self::Quantum => "quantum",
            Self::Private => "private",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChannelFamily {
    Attenuation,
    Thermal,
    ClassicalNoise,
    Dephasing,
    Additive,
}

impl ChannelFamily {
    fn label(&self) -> &'static str {
        match self {
            Self::Attenuation => "attenuation",
            Self::Thermal => "thermal",
            Self::ClassicalNoise => "classical-noise",
            Self::Dephasing => "dephasing",
            Self::Additive => "additive",
        }
    }
}

/// Channel family plus its parameters, shared by every subcommand.
#[derive(Args, Debug)]
pub struct ChannelArgs {
    /// Channel family
    #[arg(long, value_enum)]
    pub channel: ChannelFamily,
    /// Transmissivity in (0, 1] (attenuation, thermal, additive)
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Noise power (classical-noise, dephasing)
    #[arg(long)]
    pub mu2: Option<f64>,
    /// Environment mean photon number (thermal)
    #[arg(long)]
    pub ne: Option<f64>,
    /// Environment P quadrature std (additive)
    #[arg(long)]
    pub sigma_r: Option<f64>,
    /// Environment Q quadrature std (additive)
    #[arg(long)]
    pub sigma_s: Option<f64>,
}

impl ChannelArgs {
    pub fn build(&self) -> Result<ChannelModel> {
        self.build_with(None, None, None)
    }

    /// Reject flags that do not belong to the selected family.
    fn check_applicable(&self, allowed: &[&str]) -> Result<()> {
        let given = [
            ("lambda", self.lambda.is_some()),
            ("mu2", self.mu2.is_some()),
            ("ne", self.ne.is_some()),
            ("sigma-r", self.sigma_r.is_some()),
            ("sigma-s", self.sigma_s.is_some()),
        ];
        for (name, present) in given {
            if present && !allowed.contains(&name) {
                return Err(Error::Domain(format!(
                    "--{name} does not apply to --channel {}",
                    self.channel.label()
                )));
            }
        }
        Ok(())
    }

    /// Build the channel, with optional overrides for swept parameters.
    fn build_with(
        &self,
        lambda: Option<f64>,
        mu2: Option<f64>,
        ne: Option<f64>,
    ) -> Result<ChannelModel> {
        let lambda = lambda.or(self.lambda);
        let mu2 = mu2.or(self.mu2);
        let ne = ne.or(self.ne);
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| {
                Error::Domain(format!(
                    "--{name} is required for --channel {}",
                    self.channel.label()
                ))
            })
        };
        match self.channel {
            ChannelFamily::Attenuation => {
                self.check_applicable(&["lambda"])?;
                ChannelModel::attenuation(need(lambda, "lambda")?)
            }
            ChannelFamily::Thermal => {
                self.check_applicable(&["lambda", "ne"])?;
                ChannelModel::thermal(need(lambda, "lambda")?, need(ne, "ne")?)
            }
            ChannelFamily::ClassicalNoise => {
                self.check_applicable(&["mu2"])?;
                ChannelModel::classical_noise(need(mu2, "mu2")?)
            }
            ChannelFamily::Dephasing => {
                self.check_applicable(&["mu2"])?;
                ChannelModel::dephasing(need(mu2, "mu2")?)
            }
            ChannelFamily::Additive => {
                self.check_applicable(&["lambda", "sigma-r", "sigma-s"])?;
                ChannelModel::additive(
                    need(lambda, "lambda")?,
                    need(self.sigma_r, "sigma-r")?,
                    need(self.sigma_s, "sigma-s")?,
                )
            }
        }
    }
}

#[derive(Args, Debug)]
pub struct CapacityArgs {
    /// Capacity kind
    #[arg(value_enum)]
    pub kind: CapacityKind,
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Mean power budget W (>= 1/2)
    #[arg(long)]
    pub power: f64,
    /// Apply ceilings to state counts before the log
    #[arg(long)]
    pub integer_levels: bool,
    /// Write output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Capacity kind to compare
    #[arg(value_enum, default_value = "classical")]
    pub kind: CapacityKind,
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Mean power budget W (>= 1/2)
    #[arg(long)]
    pub power: f64,
    /// Write output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionKind {
    Broadcast,
    Mac,
    CqTradeoff,
}

#[derive(Args, Debug)]
pub struct RegionArgs {
    /// Region kind
    #[arg(value_enum)]
    pub kind: RegionKind,
    /// Beamsplitter transmissivity
    #[arg(long)]
    pub lambda: f64,
    /// Power budget W (broadcast sender, or cq-tradeoff input)
    #[arg(long)]
    pub power: Option<f64>,
    /// Sender A power (mac)
    #[arg(long)]
    pub power_a: Option<f64>,
    /// Sender B power (mac)
    #[arg(long)]
    pub power_b: Option<f64>,
    /// Number of boundary points
    #[arg(long, default_value_t = 64)]
    pub points: usize,
    /// Write output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParameter {
    Lambda,
    Power,
    Mu2,
    Ne,
}

impl SweepParameter {
    fn label(&self) -> &'static str {
        match self {
            Self::Lambda => "lambda",
            Self::Power => "power",
            Self::Mu2 => "mu2",
            Self::Ne => "ne",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Log,
}

/// One sweep axis: a parameter and the grid to walk it over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub scale: SweepScale,
}

impl SweepSpec {
    pub fn new(
        parameter: SweepParameter,
        start: f64,
        stop: f64,
        steps: usize,
        scale: SweepScale,
    ) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(Error::Domain(format!(
                "sweep needs finite start < stop, got {start}..{stop}"
            )));
        }
        if steps < 2 {
            return Err(Error::Domain(format!(
                "sweep needs >= 2 steps, got {steps}"
            )));
        }
        if scale == SweepScale::Log && start <= 0.0 {
            return Err(Error::Domain(format!(
                "log scale requires start > 0, got {start}"
            )));
        }
        Ok(Self {
            parameter,
            start,
            stop,
            steps,
            scale,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    SweepScale::Linear => self.start + t * (self.stop - self.start),
                    SweepScale::Log => {
                        (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                    }
                }
            })
            .collect()
    }
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Capacity kind
    #[arg(value_enum)]
    pub kind: CapacityKind,
    #[command(flatten)]
    pub channel: ChannelArgs,
    /// Fixed power budget W (required unless power is swept)
    #[arg(long)]
    pub power: Option<f64>,
    /// Swept parameter
    #[arg(long, value_enum)]
    pub sweep: SweepParameter,
    #[arg(long)]
    pub start: f64,
    #[arg(long)]
    pub stop: f64,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, value_enum, default_value = "linear")]
    pub scale: SweepScale,
    /// Optional second axis (inner loop of the row-major grid)
    #[arg(long, value_enum)]
    pub sweep2: Option<SweepParameter>,
    #[arg(long)]
    pub start2: Option<f64>,
    #[arg(long)]
    pub stop2: Option<f64>,
    #[arg(long)]
    pub steps2: Option<usize>,
    #[arg(long, value_enum, default_value = "linear")]
    pub scale2: SweepScale,
    /// Apply ceilings to state counts before the log
    #[arg(long)]
    pub integer_levels: bool,
    /// Write output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

// ---------------------------------------------------------------------------
// Deterministic formatting
// ---------------------------------------------------------------------------

/// Format with 12 significant digits, trailing zeros trimmed; `inf` for
/// infinite capacity.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf" } else { "inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{x:.11e}")
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

enum Json<'a> {
    Num(f64),
    Str(&'a str),
    Bool(bool),
}

fn json_object(fields: &[(&str, Json)]) -> String {
    let mut s = String::from("{");
    for (i, (key, value)) in fields.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push('"');
        s.push_str(key);
        s.push_str("\":");
        match value {
            Json::Num(x) => s.push_str(&format_number(*x)),
            Json::Str(t) => {
                s.push('"');
                s.push_str(t);
                s.push('"');
            }
            Json::Bool(b) => s.push_str(if *b { "true" } else { "false" }),
        }
    }
    s.push_str("}\n");
    s
}

/// One serialized result: channel tag and parameters, power, the model
/// rate, optional reference and gap, and the advisory flags.
fn record_json(
    kind: CapacityKind,
    channel: &ChannelModel,
    power: f64,
    result: &CapacityResult,
    report: Option<&GapReport>,
) -> String {
    let mut fields: Vec<(&str, Json)> = vec![
        ("kind", Json::Str(kind.label())),
        ("channel", Json::Str(channel.label())),
    ];
    match *channel {
        ChannelModel::Attenuation { lambda } => fields.push(("lambda", Json::Num(lambda))),
        ChannelModel::ThermalNoise { lambda, n_e } => {
            fields.push(("lambda", Json::Num(lambda)));
            fields.push(("ne", Json::Num(n_e)));
        }
        ChannelModel::ClassicalNoise { mu2 } | ChannelModel::Dephasing { mu2 } => {
            fields.push(("mu2", Json::Num(mu2)));
        }
        ChannelModel::AdditiveGaussian {
            lambda,
            sigma_r,
            sigma_s,
        } => {
            fields.push(("lambda", Json::Num(lambda)));
            fields.push(("sigma_r", Json::Num(sigma_r)));
            fields.push(("sigma_s", Json::Num(sigma_s)));
        }
    }
    fields.push(("power", Json::Num(power)));
    fields.push(("integer_levels", Json::Bool(result.integer_levels)));
    fields.push(("dq_bits", Json::Num(result.bits)));
    fields.push(("method", Json::Str(result.method.label())));
    if let Some(r) = report {
        fields.push(("reference_bits", Json::Num(r.reference_bits)));
        fields.push(("gap_bits", Json::Num(r.gap_bits)));
        fields.push(("reference_kind", Json::Str(r.reference_kind.label())));
    }
    fields.push(("power_limited", Json::Bool(result.flags.power_limited)));
    fields.push(("below_one_level", Json::Bool(result.flags.below_one_level)));
    json_object(&fields)
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

fn compute_capacity(
    kind: CapacityKind,
    channel: &ChannelModel,
    budget: PowerBudget,
    integer_levels: bool,
) -> Result<CapacityResult> {
    match kind {
        CapacityKind::Classical => classical_capacity(channel, budget, integer_levels),
        CapacityKind::Quantum | CapacityKind::Private => {
            if integer_levels {
                return Err(Error::Domain(
                    "--integer-levels applies to the classical capacity".into(),
                ));
            }
            match kind {
                CapacityKind::Quantum => quantum_capacity(channel, budget),
                _ => private_capacity(channel, budget),
            }
        }
    }
}

/// Reference formula for a (kind, family) pair, when one exists.
fn reference_for(
    kind: CapacityKind,
    channel: &ChannelModel,
    budget: PowerBudget,
) -> Result<(f64, ReferenceKind)> {
    match (kind, *channel) {
        (CapacityKind::Classical, ChannelModel::Attenuation { lambda }) => Ok((
            attenuation_capacity_exact(lambda, budget),
            ReferenceKind::ExactCapacity,
        )),
        (CapacityKind::Classical, ChannelModel::ClassicalNoise { mu2 }) => Ok((
            classical_noise_lower_bound(mu2, budget),
            ReferenceKind::LowerBound,
        )),
        (CapacityKind::Classical, ChannelModel::Dephasing { mu2 }) => Ok((
            dephasing_holevo(mu2, budget),
            ReferenceKind::AchievableHolevo,
        )),
        (CapacityKind::Quantum | CapacityKind::Private, ChannelModel::Attenuation { lambda }) => {
            Ok((
                attenuation_quantum_exact(lambda),
                ReferenceKind::ExactCapacity,
            ))
        }
        _ => Err(Error::NoReference(format!(
            "no {} reference for the {} channel",
            kind.label(),
            channel.label()
        ))),
    }
}

fn cmd_capacity(args: &CapacityArgs) -> Result<String> {
    let channel = args.channel.build()?;
    let budget = PowerBudget::new(args.power)?;
    let result = compute_capacity(args.kind, &channel, budget, args.integer_levels)?;
    Ok(record_json(args.kind, &channel, args.power, &result, None))
}

fn cmd_compare(args: &CompareArgs) -> Result<String> {
    let channel = args.channel.build()?;
    let budget = PowerBudget::new(args.power)?;
    let (reference_bits, reference_kind) = reference_for(args.kind, &channel, budget)?;
    let result = compute_capacity(args.kind, &channel, budget, false)?;
    let report = gap_report(&result, reference_bits, reference_kind)?;
    Ok(record_json(
        args.kind,
        &channel,
        args.power,
        &result,
        Some(&report),
    ))
}

fn region_csv(region: &RateRegion, points: usize) -> String {
    let mut s = String::from("x_rate,y_rate\n");
    for (x, y) in region.boundary(points) {
        s.push_str(&format_number(x));
        s.push(',');
        s.push_str(&format_number(y));
        s.push('\n');
    }
    s
}

fn cmd_region(args: &RegionArgs) -> Result<String> {
    if args.points < 2 {
        return Err(Error::Domain(format!(
            "--points must be >= 2, got {}",
            args.points
        )));
    }
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| Error::Domain(format!("--{name} is required for this region")))
    };
    let region = match args.kind {
        RegionKind::Broadcast => {
            let w = PowerBudget::new(need(args.power, "power")?)?;
            broadcast_region(args.lambda, w)?
        }
        RegionKind::Mac => {
            let a = PowerBudget::new(need(args.power_a, "power-a")?)?;
            let b = PowerBudget::new(need(args.power_b, "power-b")?)?;
            mac_region(args.lambda, a, b)?
        }
        RegionKind::CqTradeoff => {
            let w = PowerBudget::new(need(args.power, "power")?)?;
            let channel = ChannelModel::attenuation(args.lambda)?;
            cq_tradeoff_region(&channel, w)?
        }
    };
    Ok(region_csv(&region, args.points))
}

fn sweep_applicable(param: SweepParameter, family: ChannelFamily) -> bool {
    match param {
        SweepParameter::Power => true,
        SweepParameter::Lambda => matches!(
            family,
            ChannelFamily::Attenuation | ChannelFamily::Thermal | ChannelFamily::Additive
        ),
        SweepParameter::Mu2 => matches!(
            family,
            ChannelFamily::ClassicalNoise | ChannelFamily::Dephasing
        ),
        SweepParameter::Ne => family == ChannelFamily::Thermal,
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<String> {
    let axis1 = SweepSpec::new(args.sweep, args.start, args.stop, args.steps, args.scale)?;
    let axis2 = match (args.sweep2, args.start2, args.stop2, args.steps2) {
        (None, None, None, None) => None,
        (Some(p), Some(a), Some(b), Some(n)) => Some(SweepSpec::new(p, a, b, n, args.scale2)?),
        _ => {
            return Err(Error::Domain(
                "second axis needs all of --sweep2, --start2, --stop2, --steps2".into(),
            ))
        }
    };

    let mut params = vec![axis1.parameter];
    if let Some(a2) = &axis2 {
        if a2.parameter == axis1.parameter {
            return Err(Error::Domain("the two sweep axes must differ".into()));
        }
        params.push(a2.parameter);
    }
    for p in &params {
        if !sweep_applicable(*p, args.channel.channel) {
            return Err(Error::Domain(format!(
                "parameter {} does not apply to --channel {}",
                p.label(),
                args.channel.channel.label()
            )));
        }
        let fixed = match p {
            SweepParameter::Lambda => args.channel.lambda.is_some(),
            SweepParameter::Mu2 => args.channel.mu2.is_some(),
            SweepParameter::Ne => args.channel.ne.is_some(),
            SweepParameter::Power => args.power.is_some(),
        };
        if fixed {
            return Err(Error::Domain(format!(
                "{} is both swept and fixed",
                p.label()
            )));
        }
    }
    let sweeps_power = params.contains(&SweepParameter::Power);
    if !sweeps_power && args.power.is_none() {
        return Err(Error::Domain("--power is required when not swept".into()));
    }

    let mut csv = params
        .iter()
        .map(|p| p.label())
        .collect::<Vec<_>>()
        .join(",");
    csv.push_str(",dq_bits,reference_bits,gap_bits\n");

    let inner = axis2
        .as_ref()
        .map(|a| a.values())
        .unwrap_or_else(|| vec![f64::NAN]);
    for v1 in axis1.values() {
        for (j, &v2) in inner.iter().enumerate() {
            let mut point = vec![(axis1.parameter, v1)];
            if let Some(a2) = &axis2 {
                point.push((a2.parameter, v2));
            }
            let mut lambda = None;
            let mut mu2 = None;
            let mut ne = None;
            let mut power = args.power;
            for (p, v) in &point {
                match p {
                    SweepParameter::Lambda => lambda = Some(*v),
                    SweepParameter::Mu2 => mu2 = Some(*v),
                    SweepParameter::Ne => ne = Some(*v),
                    SweepParameter::Power => power = Some(*v),
                }
            }
            let channel = args.channel.build_with(lambda, mu2, ne)?;
            let budget = PowerBudget::new(power.expect("validated above"))?;
            let result = compute_capacity(args.kind, &channel, budget, args.integer_levels)?;
            let reference = reference_for(args.kind, &channel, budget).ok();

            for (i, (_, v)) in point.iter().enumerate() {
                if i > 0 {
                    csv.push(',');
                }
                csv.push_str(&format_number(*v));
            }
            csv.push(',');
            csv.push_str(&format_number(result.bits));
            csv.push(',');
            match reference {
                Some((ref_bits, _)) => {
                    csv.push_str(&format_number(ref_bits));
                    csv.push(',');
                    if result.bits.is_finite() && ref_bits.is_finite() {
                        csv.push_str(&format_number(result.bits - ref_bits));
                    }
                }
                None => csv.push(','),
            }
            csv.push('\n');
            let _ = j;
        }
    }
    Ok(csv)
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Run a parsed invocation, writing to `out` unless `--out` redirects to a
/// file.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<()> {
    let (text, path) = match &cli.command {
        Command::Capacity(a) => (cmd_capacity(a)?, a.out.as_ref()),
        Command::Compare(a) => (cmd_compare(a)?, a.out.as_ref()),
        Command::Region(a) => (cmd_region(a)?, a.out.as_ref()),
        Command::Sweep(a) => (cmd_sweep(a)?, a.out.as_ref()),
    };
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Io(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(e.to_string())),
    }
}

/// Process exit code for an error: 3 when no reference formula exists,
/// 2 for any other invalid input.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NoReference(_) => 3,
        _ => 2,
    }
}
