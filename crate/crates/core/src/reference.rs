//! Known gaussian-model capacities and bounds, for gap reporting against
//! the discrete-quadrature estimates.
//!
//! Everything here is built on the thermal entropy function
//! `g(x) = (x + 1) ln(x + 1) - x ln x` (nats), the von Neumann entropy of a
//! thermal state with mean photon number `x`.

use crate::dq_engine::CapacityResult;
use crate::error::{Error, Result};
use crate::phase_model::PowerBudget;

use std::f64::consts::LN_2;

/// Thermal entropy function g(x) = (x+1) ln(x+1) - x ln x, in nats.
///
/// `g(0) = 0` by continuity. Negative arguments are a domain error.
pub fn g(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "g(x) requires finite x >= 0, got {x}"
        )));
    }
    Ok(g_unchecked(x))
}

/// g evaluated through the cancellation-free form
/// `x ln(1 + 1/x) + ln(1 + x)`, exact algebraic rewrite of the definition.
fn g_unchecked(x: f64) -> f64 {
    if x < 1e-12 {
        return 0.0;
    }
    x * (1.0 / x).ln_1p() + x.ln_1p()
}

/// Exact classical capacity of the attenuation channel,
/// `g(lambda (W - 1/2)) / ln 2` bits.
pub fn attenuation_capacity_exact(lambda: f64, budget: PowerBudget) -> f64 {
    g_unchecked(lambda * (budget.w() - 0.5)) / LN_2
}

/// Achievable rate for the classical noise channel using displaced vacuum
/// states, `(g(W - 1/2 + mu2) - g(mu2)) / ln 2` bits. A lower bound on the
/// true capacity.
pub fn classical_noise_lower_bound(mu2: f64, budget: PowerBudget) -> f64 {
    (g_unchecked(budget.w() - 0.5 + mu2) - g_unchecked(mu2)) / LN_2
}

/// Holevo quantity of the maximally-squeezed ensemble through the dephasing
/// channel, in bits. An achievable classical rate.
pub fn dephasing_holevo(mu2: f64, budget: PowerBudget) -> f64 {
    let w = budget.w();
    let root = (1.0 + mu2 / (2.0 * w)).sqrt();
    let hot = (2.0 * w * root - 1.0) / 2.0;
    let cold = (root - 1.0) / 2.0;
    (g_unchecked(hot) - g_unchecked(cold.max(0.0))) / LN_2
}

/// Exact quantum capacity of the gaussian attenuation channel,
/// `max(0, log2 lambda - log2(1 - lambda))` bits. Infinite at lambda = 1.
pub fn attenuation_quantum_exact(lambda: f64) -> f64 {
    if lambda >= 1.0 {
        return f64::INFINITY;
    }
    (lambda.log2() - (1.0 - lambda).log2()).max(0.0)
}

/// What kind of reference value a gap is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceKind {
    ExactCapacity,
    LowerBound,
    AchievableHolevo,
}

impl ReferenceKind {
    pub fn label(&self) -> &'static str {
        match self {
            Self::ExactCapacity => "exact_capacity",
            Self::LowerBound => "lower_bound",
            Self::AchievableHolevo => "achievable_holevo",
        }
    }
}

/// A discrete-quadrature rate next to its gaussian reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub dq_bits: f64,
    pub reference_bits: f64,
    /// dq_bits - reference_bits, exactly.
    pub gap_bits: f64,
    pub reference_kind: ReferenceKind,
}

/// Pair a capacity result with a reference value. Both must be finite.
pub fn gap_report(
    dq: &CapacityResult,
    reference_bits: f64,
    kind: ReferenceKind,
) -> Result<GapReport> {
    if !dq.bits.is_finite() || !reference_bits.is_finite() {
        return Err(Error::Domain(format!(
            "gap report requires finite rates, got dq = {}, reference = {}",
            dq.bits, reference_bits
        )));
    }
    Ok(GapReport {
        dq_bits: dq.bits,
        reference_bits,
        gap_bits: dq.bits - reference_bits,
        reference_kind: kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dq_engine::{classical_capacity, quantum_capacity};
    use crate::phase_model::ChannelModel;
    use proptest::prelude::*;

    fn budget(w: f64) -> PowerBudget {
        PowerBudget::new(w).unwrap()
    }

    /// Textbook form of g, kept independent of the stable rewrite.
    fn g_naive(x: f64) -> f64 {
        if x == 0.0 {
            0.0
        } else {
            (x + 1.0) * (x + 1.0).ln() - x * x.ln()
        }
    }

    #[test]
    fn g_known_values() {
        assert_eq!(g(0.0).unwrap(), 0.0);
        assert!((g(1.0).unwrap() - 2.0 * LN_2).abs() < 1e-15);
        // High-precision evaluations of the definition.
        assert!((g(1.0).unwrap() - 1.3862943611198906).abs() < 1e-14);
        assert!((g(3.75).unwrap() - 2.444602535787414).abs() < 1e-13);
        assert!((g(10.5).unwrap() - 3.397550706529335).abs() < 1e-13);
    }

    #[test]
    fn g_rejects_negative() {
        assert!(g(-0.5).is_err());
        assert!(g(f64::NAN).is_err());
    }

    #[test]
    fn attenuation_exact_values() {
        assert!((attenuation_capacity_exact(0.5, budget(8.0)) - 3.5268159553250866).abs() < 1e-12);
        assert_eq!(attenuation_capacity_exact(0.7, PowerBudget::vacuum()), 0.0);
        assert!((attenuation_capacity_exact(1.0, budget(1.5)) - 2.0).abs() < 1e-13);
    }

    #[test]
    fn classical_noise_bound_values() {
        assert!((classical_noise_lower_bound(1.0, budget(10.0)) - 2.901629555478665).abs() < 1e-12);
        // mu2 = 0 reduces to the lossless attenuation formula.
        for w in [0.5, 1.0, 7.3, 40.0] {
            let b = budget(w);
            assert!(
                (classical_noise_lower_bound(0.0, b) - attenuation_capacity_exact(1.0, b)).abs()
                    < 1e-13
            );
        }
        assert_eq!(classical_noise_lower_bound(3.0, PowerBudget::vacuum()), 0.0);
    }

    #[test]
    fn dephasing_holevo_values() {
        // Noiseless limit collapses to g(W - 1/2) / ln 2.
        for w in [0.5, 1.0, 8.0, 64.0] {
            let b = budget(w);
            let chi = dephasing_holevo(0.0, b);
            assert!((chi - g_unchecked(w - 0.5) / LN_2).abs() < 1e-12);
        }
        let chi = dephasing_holevo(1.0, budget(8.0));
        assert!((chi - 4.370502809805944).abs() < 1e-12);
        assert!((3.0..=5.0).contains(&chi));
    }

    #[test]
    fn dephasing_holevo_gap_stays_bounded() {
        // chi - log2(2W) stays bounded as W grows at fixed mu2.
        let mu2 = 1.0;
        let mut last = f64::NAN;
        for exp in 0..9 {
            let w = 10f64.powi(exp).max(0.5);
            let diff = dephasing_holevo(mu2, budget(w)) - (2.0 * w).log2();
            assert!(diff.abs() <= 1.0, "unbounded gap {diff} at W = {w}");
            last = diff;
        }
        // Settles near log2(e/2).
        assert!((last - (std::f64::consts::E / 2.0).log2()).abs() < 1e-3);
    }

    #[test]
    fn attenuation_quantum_values() {
        assert!((attenuation_quantum_exact(0.8) - 2.0).abs() < 1e-12);
        assert_eq!(attenuation_quantum_exact(0.5), 0.0);
        assert_eq!(attenuation_quantum_exact(0.3), 0.0);
        assert!((attenuation_quantum_exact(2.0 / 3.0) - 1.0).abs() < 1e-12);
        assert!(attenuation_quantum_exact(1.0).is_infinite());
    }

    #[test]
    fn gap_report_arithmetic() {
        let ch = ChannelModel::attenuation(0.5).unwrap();
        let dq = classical_capacity(&ch, budget(8.0), false).unwrap();
        let report = gap_report(
            &dq,
            attenuation_capacity_exact(0.5, budget(8.0)),
            ReferenceKind::ExactCapacity,
        )
        .unwrap();
        assert!((report.gap_bits - (-0.5268159553250866)).abs() < 1e-12);
        assert_eq!(report.gap_bits, report.dq_bits - report.reference_bits);

        let same = gap_report(&dq, dq.bits, ReferenceKind::LowerBound).unwrap();
        assert_eq!(same.gap_bits, 0.0);

        let cn = ChannelModel::classical_noise(1.0).unwrap();
        let dq = classical_capacity(&cn, budget(10.0), false).unwrap();
        let report = gap_report(
            &dq,
            classical_noise_lower_bound(1.0, budget(10.0)),
            ReferenceKind::LowerBound,
        )
        .unwrap();
        assert!((report.gap_bits - 0.4202985394086973).abs() < 1e-12);
    }

    #[test]
    fn gap_report_rejects_infinite() {
        let ch = ChannelModel::attenuation(1.0).unwrap();
        let dq = quantum_capacity(&ch, budget(8.0)).unwrap();
        assert!(dq.bits.is_infinite());
        assert!(gap_report(&dq, 1.0, ReferenceKind::ExactCapacity).is_err());
    }

    #[test]
    fn g_asymptotic_approach() {
        // 0 <= g(x)/ln2 - log2(e x), decreasing to 0 on a log-spaced grid.
        let mut prev = f64::INFINITY;
        for exp in 0..9 {
            let x = 10f64.powi(exp);
            let diff = g_unchecked(x) / LN_2 - (std::f64::consts::E * x).log2();
            assert!(diff >= 0.0, "negative asymptotic diff {diff} at x = {x}");
            assert!(diff <= prev + 1e-12);
            prev = diff;
        }
        assert!(prev < 1e-6);
    }

    #[test]
    fn g_concave_and_increasing_on_grid() {
        // Finite differences over a wide grid.
        let xs: Vec<f64> = (1..400).map(|i| i as f64 * 0.05).collect();
        let h = 1e-4;
        for &x in &xs {
            let fm = g_unchecked(x - h);
            let f0 = g_unchecked(x);
            let fp = g_unchecked(x + h);
            assert!(fp > f0 && f0 > fm, "g not increasing at {x}");
            let second = (fp - 2.0 * f0 + fm) / (h * h);
            assert!(second < 1e-6, "g not concave at {x}: g'' ~ {second}");
        }
    }

    proptest! {
        #[test]
        fn g_stable_matches_naive(x in 1e-6..1e6f64) {
            let stable = g_unchecked(x);
            let naive = g_naive(x);
            prop_assert!((stable - naive).abs() <= 1e-9 * naive.abs().max(1.0));
        }

        #[test]
        fn attenuation_exact_monotone_in_lambda(
            l1 in 0.01..1.0f64,
            l2 in 0.01..1.0f64,
            w in 0.5..200.0f64,
        ) {
            let (lo, hi) = if l1 < l2 { (l1, l2) } else { (l2, l1) };
            let b = budget(w);
            prop_assert!(
                attenuation_capacity_exact(hi, b) >= attenuation_capacity_exact(lo, b) - 1e-12
            );
        }

        #[test]
        fn classical_noise_bound_nonincreasing_in_mu2(
            m1 in 0.0..30.0f64,
            m2 in 0.0..30.0f64,
            w in 0.5..200.0f64,
        ) {
            let (lo, hi) = if m1 < m2 { (m1, m2) } else { (m2, m1) };
            let b = budget(w);
            prop_assert!(
                classical_noise_lower_bound(hi, b) <= classical_noise_lower_bound(lo, b) + 1e-12
            );
        }
    }
}
