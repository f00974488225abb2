//! Large-database, small-error approximations and the tolerance criterion.
//!
//! In the regime `sin(beta) << 1`, `|delta| << 1` the spectral angles
//! admit leading-order expansions, the success probability collapses to
//! `sin^2(m w) sin^2(2x)`, and its ceiling `sin^2(2x)` becomes an explicit
//! ratio in `beta`, `theta` and `delta`. Inverting that ratio gives the
//! largest phase error tolerable for a target success probability. The
//! exact routines in [`crate::probability`] are never substituted by these
//! estimates; comparisons between the two are always explicit.

use std::f64::consts::FRAC_PI_2;

use crate::error::Error;
use crate::kernel::PhaseConfig;

/// Leading-order expansions of the spectral quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expansions {
    /// `cos(w) ~ 1 - (delta^2/8 + 2 beta^2 sin^2(theta/2))`
    pub cos_w: f64,
    /// `sin(w) ~ sqrt(delta^2 + 16 beta^2 sin^2(theta/2)) / 2`
    pub sin_w: f64,
    /// `sin(2x) ~ 4 beta sin(theta/2) / sqrt(delta^2 + 16 beta^2 sin^2(theta/2))`
    pub sin_2x: f64,
}

/// Evaluates the three leading-order expansions. Intended for
/// `sin(beta) << 1` and `|delta| << 1`; outside that regime the values are
/// still returned but approximate nothing. `sin_2x` is NaN in the 0/0 case
/// `delta = 0`, `beta sin(theta/2) = 0`.
pub fn approx_expansions(cfg: PhaseConfig) -> Expansions {
    let delta = cfg.delta();
    let beta = cfg.beta();
    let overlap = beta * (cfg.theta() / 2.0).sin();
    let root = (delta * delta + 16.0 * overlap * overlap).sqrt();
    Expansions {
        cos_w: 1.0 - (delta * delta / 8.0 + 2.0 * overlap * overlap),
        sin_w: root / 2.0,
        sin_2x: 4.0 * overlap / root,
    }
}

/// Approximate success probability `sin^2(m w) sin^2(2x)` built from the
/// leading-order expansions. Drops the O(beta^2) initial overlap, so it is
/// exactly 0 at `m = 0`.
pub fn p_approx(cfg: PhaseConfig, m: u64) -> f64 {
    let e = approx_expansions(cfg);
    let w = e.sin_w.atan2(e.cos_w);
    let s = (m as f64 * w).sin();
    s * s * e.sin_2x * e.sin_2x
}

/// The amplitude-ceiling estimate of the maximum success probability,
/// `16 beta^2 sin^2(theta/2) / (delta^2 + 16 beta^2 sin^2(theta/2))`.
pub fn p_max_improved(cfg: PhaseConfig) -> Result<f64, Error> {
    ceiling_ratio(cfg, 16.0)
}

/// The earlier, coarser estimate
/// `4 beta^2 sin^2(theta/2) / (delta^2 + 4 beta^2 sin^2(theta/2))`,
/// kept for comparison curves.
pub fn p_max_long(cfg: PhaseConfig) -> Result<f64, Error> {
    ceiling_ratio(cfg, 4.0)
}

fn ceiling_ratio(cfg: PhaseConfig, coefficient: f64) -> Result<f64, Error> {
    let delta = cfg.delta();
    let overlap = cfg.beta() * (cfg.theta() / 2.0).sin();
    let numerator = coefficient * overlap * overlap;
    let denominator = delta * delta + numerator;
    if denominator == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(numerator / denominator)
}

/// A target maximum success probability together with the geometry it is
/// to be reached in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceQuery {
    p_target: f64,
    theta: f64,
    beta: f64,
}

impl ToleranceQuery {
    pub fn new(p_target: f64, theta: f64, beta: f64) -> Result<Self, Error> {
        if !p_target.is_finite() || p_target <= 0.0 || p_target >= 1.0 {
            return Err(Error::InvalidToleranceQuery(
                "p_target must lie strictly between 0 and 1",
            ));
        }
        if !theta.is_finite() || (theta / 2.0).sin() == 0.0 {
            return Err(Error::InvalidToleranceQuery(
                "sin(theta/2) must be nonzero",
            ));
        }
        if !beta.is_finite() || beta <= 0.0 || beta >= FRAC_PI_2 {
            return Err(Error::InvalidToleranceQuery(
                "beta must lie strictly between 0 and pi/2",
            ));
        }
        Ok(Self {
            p_target,
            theta,
            beta,
        })
    }

    pub fn p_target(&self) -> f64 {
        self.p_target
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// The largest phase-error magnitude that still reaches the target ceiling:
/// `delta_tol = 4 beta sin(theta/2) sqrt((1 - p) / p)`.
///
/// Round-trips through [`p_max_improved`]: plugging `delta_tol` back in
/// recovers `p_target` to machine precision.
pub fn tolerated_delta(query: ToleranceQuery) -> f64 {
    let p = query.p_target();
    4.0 * query.beta() * (query.theta() / 2.0).sin().abs() * ((1.0 - p) / p).sqrt()
}
