//! Single-user capacities in the discrete-quadrature model: classical,
//! quantum/private, and the classical-quantum trade-off region.
//!
//! The classical capacity is the log of the number of distinguishable
//! output tiles,
//!
//! ```text
//! C = max log2( lambda * sigma_p * sigma_q / (dp~ * dq~) )
//! ```
//!
//! maximized over valid modulation schemes. The named channel families all
//! have closed-form optima; anything else goes through the grid search in
//! [`crate::optimizer`]. The quantum capacity is the number of output
//! levels the environment knows nothing about, which reduces to
//! `log2 lambda - log2(1 - lambda/G)` with gain `G = (1 - lambda) N_E + 1`.

use crate::error::{Error, Result};
use crate::multiuser::RateRegion;
use crate::optimizer::{self, GridSpec};
use crate::phase_model::{
    effective_tile, ChannelModel, ModulationScheme, PowerBudget, MIN_TILE_AREA,
};

/// How a capacity value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    GridSearch,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Self::ClosedForm => "closed_form",
            Self::GridSearch => "grid_search",
        }
    }
}

/// Advisory flags attached to a capacity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CapacityFlags {
    /// The raw state count fell below one distinguishable state and the
    /// rate was clamped to zero.
    pub below_one_level: bool,
    /// The budget is under the W >= 1/lambda advisory needed for the level
    /// counts to be meaningful integers.
    pub power_limited: bool,
}

/// A rate in bits together with the scheme that achieves it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityResult {
    /// Rate in bits, clamped at zero (infinite for the lossless quantum
    /// capacity).
    pub bits: f64,
    /// The maximizing modulation scheme.
    pub optimizer_scheme: ModulationScheme,
    pub method: Method,
    /// Whether ceilings were applied to state counts before the log.
    pub integer_levels: bool,
    pub flags: CapacityFlags,
}

/// Loss + amplifier decomposition of a thermal channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalDecomposition {
    /// Transmissivity of the pure-loss stage, lambda / G.
    pub lambda_tilde: f64,
    /// Amplifier gain G = (1 - lambda) N_E + 1.
    pub gain: f64,
}

// Grid resolution used when a channel has no closed form and the
// computation falls through to the optimizer.
const FALLBACK_GRID_N: usize = 129;
const FALLBACK_REFINE_ROUNDS: u32 = 2;
const FALLBACK_SHRINK: f64 = 0.5;

/// Rate in bits of one specific scheme through a channel (the quantity the
/// capacity maximizes). Not clamped; negative values mean fewer than one
/// distinguishable output state.
pub fn scheme_rate(channel: &ChannelModel, scheme: &ModulationScheme) -> f64 {
    let tile = effective_tile(channel, scheme);
    let lambda = channel.transmissivity();
    (lambda * scheme.sigma_p * scheme.sigma_q / tile.area()).log2()
}

/// Round a state count up to the next integer, tolerating 1e-9 of relative
/// rounding noise just below an integer boundary.
pub(crate) fn ceil_levels(count: f64) -> f64 {
    (count - 1e-9 * count.max(1.0)).ceil().max(1.0)
}

fn finish_classical(
    count: f64,
    scheme: ModulationScheme,
    method: Method,
    integer_levels: bool,
) -> CapacityResult {
    let below = count < 1.0;
    let levels = if integer_levels {
        ceil_levels(count)
    } else {
        count
    };
    CapacityResult {
        bits: levels.log2().max(0.0),
        optimizer_scheme: scheme,
        method,
        integer_levels,
        flags: CapacityFlags {
            below_one_level: below,
            power_limited: false,
        },
    }
}

/// Classical capacity of `channel` under `budget`.
///
/// Uses the closed-form optimum for the named families:
///
/// * attenuation: `log2(2 W lambda)` (ceiling inside the log with
///   `integer_levels`)
/// * classical noise: `log2(W / mu2)` for `mu2 >= 1/2`, else `log2(2 W)`
/// * dephasing: `log2(2 W)` regardless of noise, via squeezed tiles
/// * thermal: `log2(lambda W / max(1/2, (1 - lambda)(N_E + 1/2)))`
///
/// General additive gaussian channels go through the grid search. Rates
/// below zero clamp to zero with the `below_one_level` flag set.
pub fn classical_capacity(
    channel: &ChannelModel,
    budget: PowerBudget,
    integer_levels: bool,
) -> Result<CapacityResult> {
    channel.validate()?;
    let w = budget.w();
    let (count, scheme) = match *channel {
        ChannelModel::Attenuation { lambda } => (2.0 * w * lambda, ModulationScheme::symmetric(w)),
        ChannelModel::ThermalNoise { lambda, n_e } => {
            let merged = MIN_TILE_AREA.max((1.0 - lambda) * (n_e + 0.5));
            (lambda * w / merged, ModulationScheme::symmetric(w))
        }
        ChannelModel::ClassicalNoise { mu2 } => {
            let count = if mu2 >= 0.5 { w / mu2 } else { 2.0 * w };
            (count, ModulationScheme::symmetric(w))
        }
        ChannelModel::Dephasing { .. } => {
            // Squeeze into the noiseless quadrature: narrow in P, wide in Q.
            let s = w.sqrt();
            let scheme = ModulationScheme::new(s, s, 1.0 / (2.0 * s), s);
            (2.0 * w, scheme)
        }
        ChannelModel::AdditiveGaussian { .. } => {
            let grid = GridSpec::covering(budget, FALLBACK_GRID_N);
            let coarse = optimizer::maximize_classical(channel, budget, &grid)?;
            let refined = optimizer::refine(
                channel,
                budget,
                &coarse,
                FALLBACK_SHRINK,
                FALLBACK_REFINE_ROUNDS,
            )?;
            let count = 2f64.powf(scheme_rate(channel, &refined.optimizer_scheme));
            return Ok(finish_classical(
                count,
                refined.optimizer_scheme,
                Method::GridSearch,
                integer_levels,
            ));
        }
    };
    Ok(finish_classical(
        count,
        scheme,
        Method::ClosedForm,
        integer_levels,
    ))
}

/// Loss + amplifier decomposition of a thermal (or pure-loss) channel.
pub fn thermal_decomposition(channel: &ChannelModel) -> Result<ThermalDecomposition> {
    channel.validate()?;
    let (lambda, n_e) = thermal_params(channel)?;
    let gain = (1.0 - lambda) * n_e + 1.0;
    Ok(ThermalDecomposition {
        lambda_tilde: lambda / gain,
        gain,
    })
}

/// Bits leaked to the two environment modes of a thermal channel, clamped
/// at zero: `S1 = log2(2 (1 - lambda/G) sigma_p sigma_q)` for the loss
/// stage (its tiles reach area 1/2) and
/// `S2 = log2(2 (G - 1) sigma_p sigma_q / G)` for the amplifier idler
/// (tile area G/2).
pub fn environment_leakage(
    channel: &ChannelModel,
    scheme: &ModulationScheme,
) -> Result<(f64, f64)> {
    let decomp = thermal_decomposition(channel)?;
    let spread = scheme.sigma_p * scheme.sigma_q;
    let s1 = (2.0 * (1.0 - decomp.lambda_tilde) * spread).log2().max(0.0);
    let s2 = (2.0 * (decomp.gain - 1.0) * spread / decomp.gain)
        .log2()
        .max(0.0);
    Ok((s1, s2))
}

/// Quantum capacity of an attenuation or thermal channel:
/// `max(0, log2 lambda - log2(1 - lambda/G))`, achieved with output tiles
/// of area 1/2. The same value is the private capacity of the model.
///
/// The result is flagged `power_limited` when W falls under the 1/lambda
/// advisory; the value itself does not depend on W.
pub fn quantum_capacity(channel: &ChannelModel, budget: PowerBudget) -> Result<CapacityResult> {
    channel.validate()?;
    let (lambda, _) = thermal_params(channel)?;
    let decomp = thermal_decomposition(channel)?;
    let raw = lambda.log2() - (1.0 - decomp.lambda_tilde).log2();
    Ok(CapacityResult {
        bits: raw.max(0.0),
        optimizer_scheme: ModulationScheme::symmetric(budget.w()),
        method: Method::ClosedForm,
        integer_levels: false,
        flags: CapacityFlags {
            below_one_level: raw < 0.0,
            power_limited: budget.w() < 1.0 / lambda,
        },
    })
}

/// Private capacity: identical to the quantum capacity in this model,
/// since both count output levels invisible to the environment.
pub fn private_capacity(channel: &ChannelModel, budget: PowerBudget) -> Result<CapacityResult> {
    quantum_capacity(channel, budget)
}

/// Simultaneous classical/quantum rate region of an attenuation channel:
/// `{ (C, Q) : C, Q >= 0, Q <= Q_max, C + Q <= C_max }`.
///
/// The high-order output levels are visible to the environment and carry
/// classical data for free: quantum transmission is undiminished until the
/// classical rate exceeds `C_max - Q_max = log2(2 W (1 - lambda))`.
pub fn cq_tradeoff_region(channel: &ChannelModel, budget: PowerBudget) -> Result<RateRegion> {
    let lambda = match *channel {
        ChannelModel::Attenuation { lambda } => lambda,
        _ => {
            return Err(Error::UnsupportedRegime(format!(
                "trade-off region is defined for the attenuation channel, got {}",
                channel.label()
            )))
        }
    };
    channel.validate()?;
    if lambda >= 1.0 {
        return Err(Error::UnsupportedRegime(
            "quantum capacity is unbounded at lambda = 1".into(),
        ));
    }
    let c_max = classical_capacity(channel, budget, false)?.bits;
    let q_max = quantum_capacity(channel, budget)?.bits;
    RateRegion::new(
        vec!["C".into(), "Q".into()],
        vec![(vec![0.0, 1.0], q_max), (vec![1.0, 1.0], c_max)],
    )
}

fn thermal_params(channel: &ChannelModel) -> Result<(f64, f64)> {
    match *channel {
        ChannelModel::Attenuation { lambda } => Ok((lambda, 0.0)),
        ChannelModel::ThermalNoise { lambda, n_e } => Ok((lambda, n_e)),
        _ => Err(Error::UnsupportedRegime(format!(
            "operation is defined for attenuation and thermal channels, got {}",
            channel.label()
        ))),
    }
}
