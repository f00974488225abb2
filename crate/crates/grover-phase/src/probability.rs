//! Success probability after `m` iterations and the iteration counts that
//! maximize it.
//!
//! The exact probability comes from the closed-form kernel power; the
//! continuous minimizer `m_min` of the maximum-probability condition is a
//! real number, so integer maximization evaluates its neighbors plus a
//! full-period safety scan.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::Error;
use crate::kernel::{apply, kernel_power_brute, PhaseConfig, SubspaceState};
use crate::spectral::{spectral_params, SpectralParams};

/// Rounding excursions of the squared-cosine argument beyond [0, 1] up to
/// this size are clamped; larger ones are reported as errors.
pub const EXTREMUM_CLAMP_TOL: f64 = 1e-12;

/// `phi` and `theta` must agree to this tolerance for the matched-condition
/// iteration formula.
pub const MATCHED_TOL: f64 = 1e-14;

/// Below this value of `b^2` the stationarity condition carries no
/// information (the probability is constant in the iteration count).
const B_SQUARED_TOL: f64 = 1e-14;

/// The full-period safety scan is capped at this many points; when the
/// period exceeds the cap the scan is strided, while the analytic
/// candidates are still evaluated exactly.
const SCAN_CAP: u64 = 2_000_000;

/// An iteration count paired with its exact success probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOutcome {
    pub m: u64,
    pub p: f64,
}

/// The continuous minimizer of the maximum-probability condition together
/// with the intermediate quantities `a` and `b` it is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MminReal {
    pub m_real: f64,
    pub a: f64,
    pub b: f64,
}

/// Probability of finding the marked state after `m` iterations,
/// `P = 1 - |<tau_perp| G^m |s>|^2`, via the expanded trigonometric form.
///
/// Falls back to brute-force evolution when the spectral decomposition is
/// degenerate, so it is total on valid configurations.
pub fn success_probability(cfg: PhaseConfig, m: u64) -> f64 {
    match spectral_params(cfg) {
        Ok(sp) => probability_at(cfg, &sp, m as f64),
        Err(_) => {
            let state = apply(kernel_power_brute(cfg, m), SubspaceState::initial(cfg));
            1.0 - state.amp_perp.norm_sqr()
        }
    }
}

/// Success probability at a continuous iteration count.
pub fn success_probability_real(cfg: PhaseConfig, m_real: f64) -> f64 {
    match spectral_params(cfg) {
        Ok(sp) => probability_at(cfg, &sp, m_real),
        // Degenerate kernels are a phase times the identity: constant P.
        Err(_) => SubspaceState::initial(cfg).marked_probability(),
    }
}

pub(crate) fn probability_at(cfg: PhaseConfig, sp: &SpectralParams, m_real: f64) -> f64 {
    let (sin_mw, cos_mw) = (m_real * sp.w).sin_cos();
    let (sin_2x, cos_2x) = (2.0 * sp.x).sin_cos();
    let (sin_b, cos_b) = cfg.beta().sin_cos();
    let (sin_half_phi, cos_half_phi) = (cfg.phi() / 2.0).sin_cos();

    let in_phase = cos_mw * cos_b - sin_mw * sin_half_phi * sin_2x * sin_b;
    let quadrature = sin_mw * (cos_half_phi * sin_2x * sin_b - cos_2x * cos_b);
    1.0 - in_phase * in_phase - quadrature * quadrature
}

/// The continuous iteration count minimizing the time to the maximum
/// probability: `m_min = acos(sqrt((b - 2a) / (2b))) / w`.
pub fn m_min_general(cfg: PhaseConfig) -> Result<MminReal, Error> {
    let sp = spectral_params(cfg)?;
    let (sin_2x, cos_2x) = (2.0 * sp.x).sin_cos();
    let sin_4x = (4.0 * sp.x).sin();
    let beta = cfg.beta();
    let (sin_2b, cos_2b) = (2.0 * beta).sin_cos();
    let (sin_4b, cos_4b) = (4.0 * beta).sin_cos();
    let cos_half_phi = (cfg.phi() / 2.0).cos();

    let a = sin_2x * cos_2b + cos_2x * cos_half_phi * sin_2b;
    let b_squared = 2.0
        + sin_2x * sin_2x
        + (3.0 * sin_2x * sin_2x - 2.0) * cos_4b
        - 2.0 * sin_2x * sin_2x * cfg.phi().cos() * sin_2b * sin_2b
        + 2.0 * sin_4x * cos_half_phi * sin_4b;

    if b_squared <= B_SQUARED_TOL {
        return Err(Error::DegenerateExtremum {
            b: b_squared.max(0.0).sqrt(),
            ratio: f64::NAN,
        });
    }
    let b = b_squared.sqrt();

    let ratio = (b - 2.0 * a) / (2.0 * b);
    if !(-EXTREMUM_CLAMP_TOL..=1.0 + EXTREMUM_CLAMP_TOL).contains(&ratio) {
        return Err(Error::DegenerateExtremum { b, ratio });
    }
    let m_real = ratio.clamp(0.0, 1.0).sqrt().acos() / sp.w;
    Ok(MminReal { m_real, a, b })
}

/// The matched-condition (`phi = theta`) iteration formula,
/// `m_min = (pi/2 - asin(sin(phi/2) sin(beta))) / w`.
pub fn m_min_matched(cfg: PhaseConfig) -> Result<f64, Error> {
    if cfg.delta().abs() > MATCHED_TOL {
        return Err(Error::NotMatched {
            phi: cfg.phi(),
            theta: cfg.theta(),
        });
    }
    let sp = spectral_params(cfg)?;
    Ok((FRAC_PI_2 - ((cfg.phi() / 2.0).sin() * cfg.beta().sin()).asin()) / sp.w)
}

/// Exact maximum success probability over integer iteration counts.
///
/// Evaluates the floor and ceiling of the continuous minimizer and scans a
/// full period of the probability as a safety net; ties go to the smaller
/// iteration count. Total on valid configurations: degenerate kernels have
/// constant probability, reported at `m = 0`.
pub fn p_max_exact(cfg: PhaseConfig) -> SearchOutcome {
    let sp = match spectral_params(cfg) {
        Ok(sp) => sp,
        Err(_) => {
            return SearchOutcome {
                m: 0,
                p: success_probability(cfg, 0),
            }
        }
    };

    let mut best = SearchOutcome {
        m: 0,
        p: probability_at(cfg, &sp, 0.0),
    };
    let consider = |m: u64, best: &mut SearchOutcome| {
        let p = probability_at(cfg, &sp, m as f64);
        if p > best.p {
            *best = SearchOutcome { m, p };
        }
    };

    // The probability has period pi/w in the iteration count.
    let period = (PI / sp.w).ceil() as u64 + 1;
    let stride = period.div_ceil(SCAN_CAP).max(1);
    let mut m = stride;
    while m <= period {
        consider(m, &mut best);
        m += stride;
    }

    if let Ok(mm) = m_min_general(cfg) {
        let floor = mm.m_real.floor();
        if floor >= 0.0 && floor.is_finite() {
            consider(floor as u64, &mut best);
            consider(mm.m_real.ceil() as u64, &mut best);
        }
    }
    best
}

/// The exact ceiling of the success probability: its value at the
/// continuous minimizer, before rounding to an integer iteration count.
pub fn p_max_continuous(cfg: PhaseConfig) -> f64 {
    match m_min_general(cfg) {
        Ok(mm) => success_probability_real(cfg, mm.m_real),
        // Degenerate cases have constant probability.
        Err(_) => success_probability(cfg, 0),
    }
}
