//! Core phase-space domain types and the effective-tile algebra.
//!
//! A signal ensemble is modeled as a uniform mixture of perfectly
//! distinguishable phase-space rectangles ("tiles") of width `delta_q` and
//! height `delta_p`, filling an ensemble region of spread `sigma_q` by
//! `sigma_p`. Everything is in hbar = 1 units: the vacuum quadrature
//! standard deviation is 1/sqrt(2) and the smallest physical tile has
//! area 1/2.
//!
//! A channel shrinks the tiles (attenuation), merges tiles closer than the
//! added noise, and finally enlarges any tile that would violate the
//! uncertainty-area floor. [`effective_tile`] computes the resulting output
//! tile; counting how many such tiles fit in the attenuated ensemble region
//! is what the capacity computations in [`crate::dq_engine`] reduce to.

use crate::error::{Error, Result};

/// Vacuum quadrature standard deviation, 1/sqrt(2) in hbar = 1 units.
pub const VACUUM_STD: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Smallest tile area allowed by the uncertainty principle.
pub const MIN_TILE_AREA: f64 = 0.5;

/// Relative slack when checking closed constraints, so schemes built by
/// floating-point arithmetic that land exactly on a constraint boundary are
/// not rejected by one-ulp rounding noise.
const CONSTRAINT_SLACK: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Input-state geometry: ensemble spreads and tile shape.
///
/// A scheme is *valid* for a given [`PowerBudget`] when it satisfies the
/// three physicality constraints checked by [`validate_scheme`]:
/// uncertainty (`delta_p * delta_q >= 1/2`), fit (`delta_p <= sigma_p`,
/// `delta_q <= sigma_q`) and finite power
/// (`(sigma_p^2 + sigma_q^2) / 2 <= W`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulationScheme {
    /// Ensemble spread along P (quadrature std).
    pub sigma_p: f64,
    /// Ensemble spread along Q.
    pub sigma_q: f64,
    /// Tile height.
    pub delta_p: f64,
    /// Tile width.
    pub delta_q: f64,
}

impl ModulationScheme {
    pub fn new(sigma_p: f64, sigma_q: f64, delta_p: f64, delta_q: f64) -> Self {
        Self {
            sigma_p,
            sigma_q,
            delta_p,
            delta_q,
        }
    }

    /// Symmetric scheme using the full budget: spreads sqrt(W), minimum
    /// uncertainty tiles of 1/sqrt(2) on a side.
    pub fn symmetric(w: f64) -> Self {
        let s = w.sqrt();
        Self::new(s, s, VACUUM_STD, VACUUM_STD)
    }

    /// Vacuum scheme: a single minimum-uncertainty tile.
    pub fn vacuum() -> Self {
        Self::new(VACUUM_STD, VACUUM_STD, VACUUM_STD, VACUUM_STD)
    }

    /// Mean power (sigma_p^2 + sigma_q^2) / 2.
    pub fn mean_power(&self) -> f64 {
        0.5 * (self.sigma_p * self.sigma_p + self.sigma_q * self.sigma_q)
    }

    /// Input tile area delta_p * delta_q.
    pub fn tile_area(&self) -> f64 {
        self.delta_p * self.delta_q
    }

    /// True when the scheme passes all constraints for `budget`.
    pub fn is_valid(&self, budget: PowerBudget) -> bool {
        matches!(validate_scheme(self, budget), Ok(v) if v.is_empty())
    }
}

/// Mean power constraint W, with W = 1/2 the vacuum floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerBudget {
    w: f64,
}

impl PowerBudget {
    pub fn new(w: f64) -> Result<Self> {
        if !w.is_finite() || w < 0.5 {
            return Err(Error::InvalidPower(w));
        }
        Ok(Self { w })
    }

    /// The vacuum budget W = 1/2.
    pub fn vacuum() -> Self {
        Self { w: 0.5 }
    }

    pub fn w(&self) -> f64 {
        self.w
    }
}

/// A gaussian channel family with its parameters.
///
/// The three beamsplitter families mix the signal with an environment mode:
/// `P -> sqrt(lambda) P + sqrt(1 - lambda) r`, and likewise for Q with `s`.
/// `ClassicalNoise` and `Dephasing` are the lambda -> 1 limits with
/// `sqrt(1 - lambda) * sigma_r = mu` held fixed, kept as their own variants
/// so no numerical limit is ever taken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    /// Beamsplitter of transmissivity `lambda` with a gaussian environment
    /// mode of quadrature stds (`sigma_r`, `sigma_s`).
    AdditiveGaussian {
        lambda: f64,
        sigma_r: f64,
        sigma_s: f64,
    },
    /// Pure loss: vacuum environment, sigma_r = sigma_s = 1/sqrt(2).
    Attenuation { lambda: f64 },
    /// Thermal environment with mean photon number `n_e`, quadrature std
    /// sqrt(n_e + 1/2).
    ThermalNoise { lambda: f64, n_e: f64 },
    /// Gaussian phase-space kicks of power `mu2` in both quadratures.
    ClassicalNoise { mu2: f64 },
    /// Classical noise of power `mu2` on Q only; P untouched.
    Dephasing { mu2: f64 },
}

impl ChannelModel {
    pub fn attenuation(lambda: f64) -> Result<Self> {
        let ch = Self::Attenuation { lambda };
        ch.validate()?;
        Ok(ch)
    }

    pub fn thermal(lambda: f64, n_e: f64) -> Result<Self> {
        let ch = Self::ThermalNoise { lambda, n_e };
        ch.validate()?;
        Ok(ch)
    }

    pub fn classical_noise(mu2: f64) -> Result<Self> {
        let ch = Self::ClassicalNoise { mu2 };
        ch.validate()?;
        Ok(ch)
    }

    pub fn dephasing(mu2: f64) -> Result<Self> {
        let ch = Self::Dephasing { mu2 };
        ch.validate()?;
        Ok(ch)
    }

    pub fn additive(lambda: f64, sigma_r: f64, sigma_s: f64) -> Result<Self> {
        let ch = Self::AdditiveGaussian {
            lambda,
            sigma_r,
            sigma_s,
        };
        ch.validate()?;
        Ok(ch)
    }

    /// Check parameter ranges: lambda in (0, 1], noise powers >= 0,
    /// environment stds at or above the vacuum floor.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidChannel(msg));
        let check_lambda = |lambda: f64| {
            if !lambda.is_finite() || lambda <= 0.0 || lambda > 1.0 {
                bad(format!("lambda = {lambda} outside (0, 1]"))
            } else {
                Ok(())
            }
        };
        match *self {
            Self::AdditiveGaussian {
                lambda,
                sigma_r,
                sigma_s,
            } => {
                check_lambda(lambda)?;
                for (name, s) in [("sigma_r", sigma_r), ("sigma_s", sigma_s)] {
                    if !s.is_finite() || s < VACUUM_STD * (1.0 - CONSTRAINT_SLACK) {
                        return bad(format!("{name} = {s} below the vacuum std 1/sqrt(2)"));
                    }
                }
                Ok(())
            }
            Self::Attenuation { lambda } => check_lambda(lambda),
            Self::ThermalNoise { lambda, n_e } => {
                check_lambda(lambda)?;
                if !n_e.is_finite() || n_e < 0.0 {
                    return bad(format!("n_e = {n_e} must be >= 0"));
                }
                Ok(())
            }
            Self::ClassicalNoise { mu2 } | Self::Dephasing { mu2 } => {
                if !mu2.is_finite() || mu2 < 0.0 {
                    return bad(format!("mu2 = {mu2} must be >= 0"));
                }
                Ok(())
            }
        }
    }

    /// Transmissivity lambda; 1 for the classical-noise and dephasing
    /// limits.
    pub fn transmissivity(&self) -> f64 {
        match *self {
            Self::AdditiveGaussian { lambda, .. }
            | Self::Attenuation { lambda }
            | Self::ThermalNoise { lambda, .. } => lambda,
            Self::ClassicalNoise { .. } | Self::Dephasing { .. } => 1.0,
        }
    }

    /// Expand beamsplitter families to (lambda, sigma_r, sigma_s).
    /// `None` for the lambda -> 1 limit channels.
    pub fn beamsplitter_params(&self) -> Option<(f64, f64, f64)> {
        match *self {
            Self::AdditiveGaussian {
                lambda,
                sigma_r,
                sigma_s,
            } => Some((lambda, sigma_r, sigma_s)),
            Self::Attenuation { lambda } => Some((lambda, VACUUM_STD, VACUUM_STD)),
            Self::ThermalNoise { lambda, n_e } => {
                let s = (n_e + 0.5).sqrt();
                Some((lambda, s, s))
            }
            Self::ClassicalNoise { .. } | Self::Dephasing { .. } => None,
        }
    }

    /// Short tag used in serialized records.
    pub fn label(&self) -> &'static str {
        match self {
            Self::AdditiveGaussian { .. } => "additive",
            Self::Attenuation { .. } => "attenuation",
            Self::ThermalNoise { .. } => "thermal",
            Self::ClassicalNoise { .. } => "classical-noise",
            Self::Dephasing { .. } => "dephasing",
        }
    }
}

/// Effective output tile after attenuation, noise merging and the
/// uncertainty floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TileDims {
    /// Effective tile height.
    pub dp: f64,
    /// Effective tile width.
    pub dq: f64,
}

impl TileDims {
    pub fn area(&self) -> f64 {
        self.dp * self.dq
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// A physicality constraint violated by a modulation scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintViolation {
    /// Tile area below 1/2.
    Uncertainty,
    /// delta_p exceeds sigma_p.
    FitP,
    /// delta_q exceeds sigma_q.
    FitQ,
    /// Mean power exceeds the budget.
    Power,
}

impl std::fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Self::Uncertainty => "uncertainty: delta_p * delta_q < 1/2",
            Self::FitP => "fit: delta_p > sigma_p",
            Self::FitQ => "fit: delta_q > sigma_q",
            Self::Power => "power: (sigma_p^2 + sigma_q^2)/2 > W",
        };
        f.write_str(s)
    }
}

/// Check a scheme against the physicality constraints for `budget`.
///
/// Returns the (possibly empty) list of violated constraints. Non-finite
/// fields, non-positive tile dimensions or negative spreads are rejected as
/// malformed input instead of being reported as violations.
pub fn validate_scheme(
    scheme: &ModulationScheme,
    budget: PowerBudget,
) -> Result<Vec<ConstraintViolation>> {
    let fields = [
        scheme.sigma_p,
        scheme.sigma_q,
        scheme.delta_p,
        scheme.delta_q,
    ];
    if fields.iter().any(|x| !x.is_finite()) {
        return Err(Error::MalformedScheme(format!(
            "non-finite field in {scheme:?}"
        )));
    }
    if scheme.delta_p <= 0.0 || scheme.delta_q <= 0.0 {
        return Err(Error::MalformedScheme(format!(
            "tile dimensions must be positive in {scheme:?}"
        )));
    }
    if scheme.sigma_p < 0.0 || scheme.sigma_q < 0.0 {
        return Err(Error::MalformedScheme(format!(
            "spreads must be nonnegative in {scheme:?}"
        )));
    }

    let mut violations = Vec::new();
    if scheme.tile_area() < MIN_TILE_AREA * (1.0 - CONSTRAINT_SLACK) {
        violations.push(ConstraintViolation::Uncertainty);
    }
    if scheme.delta_p > scheme.sigma_p * (1.0 + CONSTRAINT_SLACK) {
        violations.push(ConstraintViolation::FitP);
    }
    if scheme.delta_q > scheme.sigma_q * (1.0 + CONSTRAINT_SLACK) {
        violations.push(ConstraintViolation::FitQ);
    }
    if scheme.mean_power() > budget.w() * (1.0 + CONSTRAINT_SLACK) {
        violations.push(ConstraintViolation::Power);
    }
    Ok(violations)
}

/// Effective output tile of `scheme` sent through `channel`.
///
/// For a beamsplitter channel each component is the larger of the
/// attenuated input tile and the added noise,
/// `max(sqrt(lambda) delta, sqrt(1 - lambda) sigma_env)`; for the limit
/// channels the noise component is `mu` directly (Q only for dephasing).
/// If the resulting area falls below 1/2 both components are scaled up to
/// area exactly 1/2, preserving their aspect ratio; this is the choice of
/// uncertainty tile (dn, dm) with dn * dm = 1/2 that minimizes the final
/// area.
pub fn effective_tile(channel: &ChannelModel, scheme: &ModulationScheme) -> TileDims {
    let (raw_p, raw_q) = match *channel {
        ChannelModel::ClassicalNoise { mu2 } => {
            let mu = mu2.sqrt();
            (scheme.delta_p.max(mu), scheme.delta_q.max(mu))
        }
        ChannelModel::Dephasing { mu2 } => (scheme.delta_p, scheme.delta_q.max(mu2.sqrt())),
        _ => {
            let (lambda, sigma_r, sigma_s) = channel
                .beamsplitter_params()
                .expect("beamsplitter families are the only remaining variants");
            let t = lambda.sqrt();
            let n = (1.0 - lambda).sqrt();
            (
                (t * scheme.delta_p).max(n * sigma_r),
                (t * scheme.delta_q).max(n * sigma_s),
            )
        }
    };
    floor_to_uncertainty(raw_p, raw_q)
}

/// Lift a raw meta-tile to the uncertainty floor, keeping its aspect ratio.
fn floor_to_uncertainty(raw_p: f64, raw_q: f64) -> TileDims {
    let area = raw_p * raw_q;
    if area >= MIN_TILE_AREA {
        TileDims {
            dp: raw_p,
            dq: raw_q,
        }
    } else {
        let scale = (MIN_TILE_AREA / area).sqrt();
        TileDims {
            dp: raw_p * scale,
            dq: raw_q * scale,
        }
    }
}

/// Number of distinguishable input states,
/// `sigma_p * sigma_q / (delta_p * delta_q)`.
pub fn state_count(scheme: &ModulationScheme) -> f64 {
    (scheme.sigma_p * scheme.sigma_q) / (scheme.delta_p * scheme.delta_q)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
