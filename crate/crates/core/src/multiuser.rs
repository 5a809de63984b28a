//! Rate regions for the two-sender multiple-access channel and the
//! two-receiver broadcast channel.
//!
//! Every region here is the intersection of at most three halfplanes
//! `sum_i a_i R_i <= b` with 0/1 coefficients and nonnegative rates, so it
//! is downward closed and contains the origin by construction. Boundaries
//! are traced by exact corner arithmetic rather than vertex enumeration.

use crate::error::{Error, Result};
use crate::phase_model::PowerBudget;

/// Tolerance for membership tests on the closed region, absorbing the
/// rounding of boundary points built from the constraint bounds.
const CONTAIN_TOL: f64 = 1e-9;

/// One halfplane constraint `sum_i coeffs[i] * R_i <= bound_bits`.
#[derive(Debug, Clone, PartialEq)]
pub struct RateConstraint {
    /// Coefficients, each 0 or 1.
    pub coeffs: Vec<f64>,
    /// Bound in bits, >= 0.
    pub bound_bits: f64,
}

/// A polytope of achievable rate tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct RateRegion {
    labels: Vec<String>,
    constraints: Vec<RateConstraint>,
}

impl RateRegion {
    /// Build a region from labeled rates and `(coefficients, bound)` pairs.
    /// Negative bounds (fewer than one distinguishable state) clamp to 0.
    /// Every rate must be bounded by at least one constraint.
    pub fn new(labels: Vec<String>, constraints: Vec<(Vec<f64>, f64)>) -> Result<Self> {
        let dim = labels.len();
        let mut built = Vec::with_capacity(constraints.len());
        for (coeffs, bound) in constraints {
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch {
                    region: dim,
                    point: coeffs.len(),
                });
            }
            if coeffs.iter().any(|c| *c != 0.0 && *c != 1.0) {
                return Err(Error::InvalidGrid(format!(
                    "rate constraint coefficients must be 0 or 1, got {coeffs:?}"
                )));
            }
            if bound.is_nan() || bound == f64::INFINITY {
                return Err(Error::InvalidGrid(format!(
                    "constraint bound must be finite or -inf, got {bound}"
                )));
            }
            built.push(RateConstraint {
                coeffs,
                bound_bits: bound.max(0.0),
            });
        }
        for (axis, label) in labels.iter().enumerate() {
            if !built.iter().any(|c| c.coeffs[axis] == 1.0) {
                return Err(Error::InvalidGrid(format!("rate {label} is unbounded")));
            }
        }
        Ok(Self {
            labels,
            constraints: built,
        })
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constraints(&self) -> &[RateConstraint] {
        &self.constraints
    }

    /// Membership in the closed region (all constraints and nonnegativity).
    pub fn contains(&self, point: &[f64]) -> Result<bool> {
        if point.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                region: self.dimension(),
                point: point.len(),
            });
        }
        if point.iter().any(|r| *r < -CONTAIN_TOL) {
            return Ok(false);
        }
        Ok(self.constraints.iter().all(|c| {
            let lhs: f64 = c.coeffs.iter().zip(point).map(|(a, r)| a * r).sum();
            lhs <= c.bound_bits + CONTAIN_TOL
        }))
    }

    /// Largest feasible value along `axis` with the other coordinates at
    /// the given values (2D only).
    fn max_along(&self, axis: usize, other: f64) -> f64 {
        self.constraints
            .iter()
            .filter(|c| c.coeffs[axis] == 1.0)
            .map(|c| c.bound_bits - c.coeffs[1 - axis] * other)
            .fold(f64::INFINITY, f64::min)
            .max(0.0)
    }

    /// Trace `n >= 2` points along the dominant (Pareto) boundary of a 2D
    /// region, sorted by first coordinate. Each point satisfies at least
    /// one constraint with equality. Runs from the corner where the second
    /// rate peaks down to the first rate's axis intercept.
    pub fn boundary(&self, n: usize) -> Vec<(f64, f64)> {
        assert!(self.dimension() == 2, "boundary tracing is 2-dimensional");
        assert!(n >= 2, "need at least the two extreme corners");
        let y_max = self.max_along(1, 0.0);
        let x_max = self.max_along(0, 0.0);
        // Leftmost undominated point: push x as far as it goes at y_max.
        let x_lo = self.max_along(0, y_max).min(x_max);
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                let x = x_lo + t * (x_max - x_lo);
                (x, self.max_along(1, x))
            })
            .collect()
    }
}

/// Broadcast channel region at transmissivity `lambda` in (1/2, 1]:
/// receiver B sees the lambda branch, C the reflected one.
///
/// `R_C <= log2(2 (1 - lambda) W)` and `R_B + R_C <= log2(2 lambda W)`,
/// with tiles fixed at the optimal 1/sqrt(2) square.
pub fn broadcast_region(lambda: f64, budget: PowerBudget) -> Result<RateRegion> {
    if !(lambda > 0.5 && lambda <= 1.0) {
        return Err(Error::UnsupportedRegime(format!(
            "broadcast region requires lambda in (1/2, 1], got {lambda}; \
             below 1/2 the receivers swap roles"
        )));
    }
    let w = budget.w();
    let r_c = (2.0 * (1.0 - lambda) * w).log2();
    let sum = (2.0 * lambda * w).log2();
    RateRegion::new(
        vec!["R_B".into(), "R_C".into()],
        vec![(vec![0.0, 1.0], r_c), (vec![1.0, 1.0], sum)],
    )
}

/// Multiple-access region for senders A and B through a beamsplitter of
/// transmissivity `lambda`, in the regime `lambda W_A >= (1 - lambda) W_B`
/// where A's spread dominates the output.
///
/// A's surviving tiles bound `R_A <= log2(2 lambda W_A)`, B's bound
/// `R_B <= log2(2 (1 - lambda) W_B)`, and the shared low-order tile
/// positions cap the sum at A's bound.
pub fn mac_region(lambda: f64, budget_a: PowerBudget, budget_b: PowerBudget) -> Result<RateRegion> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::UnsupportedRegime(format!(
            "multiple-access region requires lambda in (0, 1), got {lambda}"
        )));
    }
    let (w_a, w_b) = (budget_a.w(), budget_b.w());
    if lambda * w_a < (1.0 - lambda) * w_b {
        return Err(Error::UnsupportedRegime(format!(
            "multiple-access region requires lambda W_A >= (1 - lambda) W_B, \
             got {} < {}",
            lambda * w_a,
            (1.0 - lambda) * w_b
        )));
    }
    let r_a = (2.0 * lambda * w_a).log2();
    let r_b = (2.0 * (1.0 - lambda) * w_b).log2();
    RateRegion::new(
        vec!["R_A".into(), "R_B".into()],
        vec![
            (vec![1.0, 0.0], r_a),
            (vec![0.0, 1.0], r_b),
            (vec![1.0, 1.0], r_a),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn budget(w: f64) -> PowerBudget {
        PowerBudget::new(w).unwrap()
    }

    const LOG2_20_2: f64 = 4.336283387864432;
    const LOG2_80_8: f64 = 6.336283387864432;

    #[test]
    fn broadcast_reproduces_caption_bounds() {
        let region = broadcast_region(0.8, budget(50.5)).unwrap();
        let bounds: Vec<f64> = region.constraints().iter().map(|c| c.bound_bits).collect();
        assert!((bounds[0] - LOG2_20_2).abs() < 1e-9);
        assert!((bounds[1] - LOG2_80_8).abs() < 1e-9);
        assert!(region.contains(&[1.0, 1.0]).unwrap());
        assert!(!region.contains(&[0.0, 5.0]).unwrap());
        assert!(region.contains(&[0.0, 0.0]).unwrap());
    }

    #[test]
    fn broadcast_rejects_low_lambda() {
        assert!(broadcast_region(0.5, budget(8.0)).is_err());
        assert!(broadcast_region(0.2, budget(8.0)).is_err());
    }

    #[test]
    fn broadcast_lossless_clamps_weak_receiver() {
        // lambda -> 1: everything to B, the R_C bound clamps to 0.
        let region = broadcast_region(0.999999, budget(1.0)).unwrap();
        assert_eq!(region.constraints()[0].bound_bits, 0.0);
        assert!(!region.contains(&[0.0, 0.1]).unwrap());

        // At exactly lambda = 1 the raw bound is -inf; still clamps.
        let region = broadcast_region(1.0, budget(8.0)).unwrap();
        assert_eq!(region.constraints()[0].bound_bits, 0.0);
        assert!((region.constraints()[1].bound_bits - 4.0).abs() < 1e-12);
    }

    #[test]
    fn mac_symmetric_example() {
        let region = mac_region(0.5, budget(16.0), budget(16.0)).unwrap();
        let bounds: Vec<f64> = region.constraints().iter().map(|c| c.bound_bits).collect();
        assert!((bounds[0] - 4.0).abs() < 1e-12);
        assert!((bounds[1] - 4.0).abs() < 1e-12);
        assert!((bounds[2] - 4.0).abs() < 1e-12);
        assert!(region.contains(&[4.0, 0.0]).unwrap());
        assert!(region.contains(&[0.0, 4.0]).unwrap());
        assert!(!region.contains(&[3.0, 2.0]).unwrap()); // sum bound
    }

    #[test]
    fn mac_vacuum_sender_collapses() {
        let region = mac_region(0.5, budget(16.0), PowerBudget::vacuum()).unwrap();
        assert_eq!(region.constraints()[1].bound_bits, 0.0);
        assert!(!region.contains(&[0.0, 0.5]).unwrap());
        assert!(region.contains(&[4.0, 0.0]).unwrap());
    }

    #[test]
    fn mac_rejects_out_of_regime() {
        assert!(mac_region(0.3, budget(1.0), budget(100.0)).is_err());
        assert!(mac_region(1.0, budget(8.0), budget(8.0)).is_err());
    }

    #[test]
    fn contains_checks_dimension() {
        let region = broadcast_region(0.8, budget(50.5)).unwrap();
        assert!(matches!(
            region.contains(&[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn boundary_endpoints_broadcast() {
        let region = broadcast_region(0.8, budget(50.5)).unwrap();
        let pts = region.boundary(3);
        assert_eq!(pts.len(), 3);
        // Corner where R_C peaks, then down the sum line to the R_B axis.
        assert!((pts[0].0 - (LOG2_80_8 - LOG2_20_2)).abs() < 1e-9);
        assert!((pts[0].1 - LOG2_20_2).abs() < 1e-9);
        assert!((pts[2].0 - LOG2_80_8).abs() < 1e-9);
        assert!(pts[2].1.abs() < 1e-12);
        for w in pts.windows(2) {
            assert!(w[0].0 <= w[1].0);
        }
    }

    #[test]
    fn boundary_of_degenerate_region() {
        let region = RateRegion::new(
            vec!["R_B".into(), "R_C".into()],
            vec![(vec![0.0, 1.0], -1.0), (vec![1.0, 1.0], -2.0)],
        )
        .unwrap();
        for pt in region.boundary(5) {
            assert_eq!(pt, (0.0, 0.0));
        }
    }

    #[test]
    fn boundary_points_are_members() {
        for region in [
            broadcast_region(0.8, budget(50.5)).unwrap(),
            mac_region(0.6, budget(20.0), budget(10.0)).unwrap(),
        ] {
            for pt in region.boundary(33) {
                assert!(region.contains(&[pt.0, pt.1]).unwrap(), "{pt:?} escaped");
            }
        }
    }

    #[test]
    fn mac_time_sharing_corner_on_sum_boundary() {
        let (lambda, w_a, w_b) = (0.7, 40.0, 12.0);
        let region = mac_region(lambda, budget(w_a), budget(w_b)).unwrap();
        let r_a_bound = (2.0 * lambda * w_a).log2();
        let r_b_bound = (2.0 * (1.0 - lambda) * w_b).log2();
        let corner = (r_a_bound - r_b_bound, r_b_bound);
        assert!(region.contains(&[corner.0, corner.1]).unwrap());
        // Lies exactly on the sum constraint.
        assert!((corner.0 + corner.1 - r_a_bound).abs() < 1e-12);
        // And is the leftmost Pareto point.
        let pts = region.boundary(9);
        assert!((pts[0].0 - corner.0).abs() < 1e-9);
        assert!((pts[0].1 - corner.1).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn downward_closure(
            lambda in 0.51..0.99f64,
            w in 0.5..200.0f64,
            sx in 0.0..1.0f64,
            sy in 0.0..1.0f64,
            n in 2usize..20,
        ) {
            let region = broadcast_region(lambda, budget(w)).unwrap();
            for (x, y) in region.boundary(n) {
                prop_assert!(region.contains(&[x * sx, y * sy]).unwrap());
            }
        }

        #[test]
        fn broadcast_sum_dominates_rc(lambda in 0.51..1.0f64, w in 0.5..200.0f64) {
            let region = broadcast_region(lambda, budget(w)).unwrap();
            let c = region.constraints();
            prop_assert!(c[1].bound_bits >= c[0].bound_bits - 1e-12);
        }

        #[test]
        fn doubling_power_adds_one_bit(lambda in 0.51..0.99f64, w in 1.0..100.0f64) {
            // In the unclamped regime every bound is log-linear in W.
            prop_assume!(2.0 * (1.0 - lambda) * w >= 1.0);
            let r1 = broadcast_region(lambda, budget(w)).unwrap();
            let r2 = broadcast_region(lambda, budget(2.0 * w)).unwrap();
            for (a, b) in r1.constraints().iter().zip(r2.constraints()) {
                prop_assert!((b.bound_bits - a.bound_bits - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn mac_sum_equals_dominant_sender(
            lambda in 0.05..0.95f64,
            w_a in 0.5..200.0f64,
            w_b in 0.5..200.0f64,
        ) {
            prop_assume!(lambda * w_a >= (1.0 - lambda) * w_b);
            let region = mac_region(lambda, budget(w_a), budget(w_b)).unwrap();
            let c = region.constraints();
            prop_assert_eq!(c[0].bound_bits, c[2].bound_bits);
        }
    }
}
