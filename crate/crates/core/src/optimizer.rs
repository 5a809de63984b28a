//! Brute-force maximization of the distinguishable-states rate over
//! modulation schemes.
//!
//! The search space is two-dimensional once the cheap reductions are
//! applied: the power split `sigma_p = sqrt(2W) cos(theta)`,
//! `sigma_q = sqrt(2W) sin(theta)` uses the full budget (the rate only
//! grows with spread), and the tile area is pinned to exactly 1/2 (the
//! effective tile is componentwise nondecreasing in `delta_p`, `delta_q`,
//! so enlarging tiles beyond the uncertainty floor never helps). What
//! remains is a `theta` grid times a log-spaced grid over the tile aspect
//! ratio `delta_p / delta_q`.
//!
//! This is the general path for channels with no closed form, and the
//! independent oracle the closed forms are tested against.

use crate::dq_engine::{scheme_rate, CapacityFlags, CapacityResult, Method};
use crate::error::{Error, Result};
use crate::phase_model::{ChannelModel, ModulationScheme, PowerBudget};

use std::f64::consts::FRAC_PI_2;

/// Two rates within this band are treated as tied and broken by aspect.
const TIE_EPS: f64 = 1e-9;

/// Grid resolution used inside each refinement round.
const REFINE_GRID_N: usize = 65;

/// Search-grid shape for [`maximize_classical`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Points along the power-split angle theta in [0, pi/2].
    pub n_sigma: usize,
    /// Points along the log-aspect of delta_p / delta_q.
    pub n_aspect: usize,
    /// Maximum squeeze ratio searched; the aspect grid spans
    /// [1/aspect_range, aspect_range]. Must be at least max(1, 4W) to
    /// cover the squeezed optimum delta_p = 1/(2 sqrt(W)).
    pub aspect_range: f64,
}

impl GridSpec {
    pub fn new(n_sigma: usize, n_aspect: usize, aspect_range: f64) -> Result<Self> {
        if n_sigma < 2 || n_aspect < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points per axis, got {n_sigma} x {n_aspect}"
            )));
        }
        if !aspect_range.is_finite() || aspect_range <= 1.0 {
            return Err(Error::InvalidGrid(format!(
                "aspect_range must be finite and > 1, got {aspect_range}"
            )));
        }
        Ok(Self {
            n_sigma,
            n_aspect,
            aspect_range,
        })
    }

    /// An `n` x `n` grid whose aspect range covers every squeeze the
    /// budget can pay for.
    pub fn covering(budget: PowerBudget, n: usize) -> Self {
        Self {
            n_sigma: n.max(2),
            n_aspect: n.max(2),
            aspect_range: (4.0 * budget.w()).max(8.0),
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |i| lo + step * i as f64)
}

/// Scheme at a grid point: full power split by `theta`, tile area 1/2 with
/// `ln(delta_p / delta_q) = ln_aspect`.
fn scheme_at(w: f64, theta: f64, ln_aspect: f64) -> ModulationScheme {
    let r = (2.0 * w).sqrt();
    let delta_p = (0.5 * ln_aspect.exp()).sqrt();
    ModulationScheme::new(r * theta.cos(), r * theta.sin(), delta_p, 0.5 / delta_p)
}

fn feasible(s: &ModulationScheme) -> bool {
    s.delta_p <= s.sigma_p * (1.0 + 1e-12) && s.delta_q <= s.sigma_q * (1.0 + 1e-12)
}

struct Eval {
    bits: f64,
    theta: f64,
    ln_aspect: f64,
}

/// Evaluate the full grid, skipping infeasible points, then pick the best
/// rate. Ties within [`TIE_EPS`] prefer the least-squeezed scheme (aspect
/// ratio nearest 1), then the smaller log-aspect, then theta nearest pi/4,
/// then the smaller theta; the total order makes the winner independent of
/// evaluation order.
fn search_window(
    channel: &ChannelModel,
    w: f64,
    thetas: impl Iterator<Item = f64>,
    ln_aspects: &[f64],
) -> Option<Eval> {
    let mut evals: Vec<Eval> = Vec::new();
    for theta in thetas {
        for &la in ln_aspects {
            let s = scheme_at(w, theta, la);
            if !feasible(&s) {
                continue;
            }
            evals.push(Eval {
                bits: scheme_rate(channel, &s),
                theta,
                ln_aspect: la,
            });
        }
    }
    let best_bits = evals
        .iter()
        .map(|e| e.bits)
        .fold(f64::NEG_INFINITY, f64::max);
    evals
        .into_iter()
        .filter(|e| e.bits >= best_bits - TIE_EPS)
        .min_by(|a, b| {
            let ka = (
                a.ln_aspect.abs(),
                a.ln_aspect,
                (a.theta - FRAC_PI_2 / 2.0).abs(),
                a.theta,
            );
            let kb = (
                b.ln_aspect.abs(),
                b.ln_aspect,
                (b.theta - FRAC_PI_2 / 2.0).abs(),
                b.theta,
            );
            ka.partial_cmp(&kb).expect("grid keys are finite")
        })
}

fn to_result(eval: &Eval, w: f64) -> CapacityResult {
    CapacityResult {
        bits: eval.bits.max(0.0),
        optimizer_scheme: scheme_at(w, eval.theta, eval.ln_aspect),
        method: Method::GridSearch,
        integer_levels: false,
        flags: CapacityFlags {
            below_one_level: eval.bits < 0.0,
            power_limited: false,
        },
    }
}

/// Exhaustive grid search for the classical rate of `channel` under
/// `budget`. Infeasible grid points (tiles wider than the spread) are
/// skipped; if nothing is feasible the vacuum scheme is returned at zero
/// rate.
pub fn maximize_classical(
    channel: &ChannelModel,
    budget: PowerBudget,
    grid: &GridSpec,
) -> Result<CapacityResult> {
    channel.validate()?;
    GridSpec::new(grid.n_sigma, grid.n_aspect, grid.aspect_range)?;
    let w = budget.w();
    let la_max = grid.aspect_range.ln();
    let ln_aspects: Vec<f64> = linspace(-la_max, la_max, grid.n_aspect).collect();
    let best = search_window(
        channel,
        w,
        linspace(0.0, FRAC_PI_2, grid.n_sigma),
        &ln_aspects,
    );
    Ok(match best {
        Some(eval) => to_result(&eval, w),
        None => CapacityResult {
            bits: 0.0,
            optimizer_scheme: ModulationScheme::vacuum(),
            method: Method::GridSearch,
            integer_levels: false,
            flags: CapacityFlags {
                below_one_level: true,
                power_limited: false,
            },
        },
    })
}

/// Shrink the search window around the incumbent and re-search, `rounds`
/// times. The incumbent is kept unless a round finds a strictly better
/// rate (or an equal rate with a less squeezed scheme), so the value never
/// decreases.
pub fn refine(
    channel: &ChannelModel,
    budget: PowerBudget,
    coarse: &CapacityResult,
    shrink_factor: f64,
    rounds: u32,
) -> Result<CapacityResult> {
    if !(shrink_factor > 0.0 && shrink_factor < 1.0) {
        return Err(Error::InvalidGrid(format!(
            "shrink factor must lie in (0, 1), got {shrink_factor}"
        )));
    }
    if rounds == 0 {
        return Ok(*coarse);
    }
    let w = budget.w();
    let mut best = *coarse;
    let mut theta_window = FRAC_PI_2;
    let mut la_window = 2.0 * GridSpec::covering(budget, 2).aspect_range.ln();

    for _ in 0..rounds {
        theta_window *= shrink_factor;
        la_window *= shrink_factor;
        let s = best.optimizer_scheme;
        let theta_c = s.sigma_q.atan2(s.sigma_p);
        let la_c = (s.delta_p / s.delta_q).ln();

        let theta_lo = (theta_c - 0.5 * theta_window).max(0.0);
        let theta_hi = (theta_c + 0.5 * theta_window).min(FRAC_PI_2);
        let ln_aspects: Vec<f64> = linspace(
            la_c - 0.5 * la_window,
            la_c + 0.5 * la_window,
            REFINE_GRID_N,
        )
        .collect();

        if let Some(eval) = search_window(
            channel,
            w,
            linspace(theta_lo, theta_hi, REFINE_GRID_N),
            &ln_aspects,
        ) {
            let candidate = to_result(&eval, w);
            let better_rate = candidate.bits > best.bits;
            let less_squeezed = candidate.bits == best.bits
                && la_c.abs()
                    > (candidate.optimizer_scheme.delta_p / candidate.optimizer_scheme.delta_q)
                        .ln()
                        .abs();
            if better_rate || less_squeezed {
                best = candidate;
            }
        }
    }
    Ok(best)
}
