//! Spectral data of the kernel: the per-iteration rotation angle `w`, the
//! mixing angle `x`, and the normalizer `l_m` behind `sin(x)`.
//!
//! Up to a global phase the kernel is a rotation of the invariant plane by
//! `w` per iteration about an axis tilted by `2x`; every closed-form result
//! in this crate is phrased in these two angles.

use crate::error::Error;
use crate::kernel::PhaseConfig;

/// Below this value of `sin(w)` the kernel is treated as a phase times the
/// identity and the decomposition is reported as degenerate.
pub const TOL_DEGENERATE: f64 = 1e-14;

/// A negative factored-form normalizer within this margin is rounding noise
/// and is clamped to zero; anything more negative is an internal error.
pub const LM_NEGATIVE_CLAMP: f64 = 1e-14;

/// Derived angles of the kernel's eigendecomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParams {
    /// Rotation angle per iteration, in [0, pi].
    pub w: f64,
    /// Mixing angle, in [-pi/2, pi/2].
    pub x: f64,
    /// Normalizer under the square root defining `sin(x)`.
    pub l_m: f64,
    /// `sin(w)` computed from its own closed form, not from `w`.
    pub sin_w: f64,
}

/// Computes `w`, `x` and `l_m` for a configuration.
///
/// `cos(w)` and `sin(w)` come from two independent closed forms whose
/// squares must sum to one; `w = atan2(sin w, cos w)` picks the branch in
/// [0, pi]. Degenerate configurations (for example `phi = theta = 0`)
/// return [`Error::SpectralDegenerate`].
pub fn spectral_params(cfg: PhaseConfig) -> Result<SpectralParams, Error> {
    let sin_b_sq = cfg.beta().sin().powi(2);
    let (sin_half_phi, cos_half_phi) = (cfg.phi() / 2.0).sin_cos();
    let sin_half_theta = (cfg.theta() / 2.0).sin();
    let (sin_half_delta, cos_half_delta) = (cfg.delta() / 2.0).sin_cos();

    let cos_w = cos_half_delta - 2.0 * sin_half_phi * sin_half_theta * sin_b_sq;
    // Components of sin(w): axis_cos = sin(w) cos(2x), axis_sin = sin(w) sin(2x).
    let axis_cos = sin_half_delta + 2.0 * cos_half_phi * sin_half_theta * sin_b_sq;
    let axis_sin = sin_half_theta * (2.0 * cfg.beta()).sin();
    let sin_w = axis_cos.hypot(axis_sin);

    if sin_w <= TOL_DEGENERATE {
        return Err(Error::SpectralDegenerate { sin_w });
    }

    let w = sin_w.atan2(cos_w);

    let l_m = (sin_w + axis_cos).powi(2) + axis_sin * axis_sin;
    let l_m_factored = 2.0 * sin_w * (sin_w + axis_cos);
    if l_m_factored < -LM_NEGATIVE_CLAMP {
        return Err(Error::NegativeNormalizer { l_m: l_m_factored });
    }

    // Equivalent to asin(axis_sin / sqrt(l_m)) on the branch [-pi/2, pi/2],
    // but stays well conditioned when l_m is tiny (axis_cos close to
    // -sin(w), e.g. beta = pi/2 with phi + theta beyond 2*pi).
    let x = axis_sin.atan2(axis_cos) / 2.0;

    Ok(SpectralParams { w, x, l_m, sin_w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, PI};

    fn cfg(beta: f64, phi: f64, theta: f64) -> PhaseConfig {
        PhaseConfig::new(beta, phi, theta).unwrap()
    }

    #[test]
    fn matched_pi_reduces_to_double_overlap() {
        // phi = theta = pi gives w = 2*beta, x = pi/4 and l_m = 2 sin^2(w).
        let sp = spectral_params(cfg(FRAC_PI_6, PI, PI)).unwrap();
        assert!((sp.w - PI / 3.0).abs() < 1e-14);
        assert!((sp.x - FRAC_PI_4).abs() < 1e-14);
        assert!((sp.l_m - 1.5).abs() < 1e-14);
        assert!((sp.sin_w - (3f64).sqrt() / 2.0).abs() < 1e-14);

        for i in 1..40 {
            let beta = f64::from(i) * FRAC_PI_2 / 40.0;
            let sp = spectral_params(cfg(beta, PI, PI)).unwrap();
            assert!((sp.w - 2.0 * beta).abs() < 1e-13, "beta = {beta}");
            assert!((sp.x - FRAC_PI_4).abs() < 1e-13, "beta = {beta}");
        }
    }

    #[test]
    fn zero_phases_degenerate() {
        match spectral_params(cfg(0.3, 0.0, 0.0)) {
            Err(Error::SpectralDegenerate { sin_w }) => assert!(sin_w <= TOL_DEGENERATE),
            other => panic!("expected degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn near_matched_consistency() {
        let beta = 2f64.powi(-5).asin();
        let sp = spectral_params(cfg(beta, PI + 0.01, PI)).unwrap();
        assert!(sp.w.is_finite() && sp.x.is_finite());
        let cos_w = sp.w.cos();
        assert!((cos_w * cos_w + sp.sin_w * sp.sin_w - 1.0).abs() < 1e-12);
    }

    #[test]
    fn angle_identities_on_a_grid() {
        // sin(w) sin(2x) always equals sin(theta/2) sin(2 beta), and the two
        // normalizer forms agree: both follow from the defining formulas.
        for &beta in &[0.05, 0.4, 1.0, 1.5] {
            for &phi in &[0.3, 2.0, 4.9] {
                for &theta in &[0.7, 3.1, 5.5] {
                    let c = cfg(beta, phi, theta);
                    let sp = spectral_params(c).unwrap();
                    let lhs = sp.sin_w * (2.0 * sp.x).sin();
                    let rhs = (theta / 2.0).sin() * (2.0 * beta).sin();
                    assert!((lhs - rhs).abs() < 1e-12, "axis identity at {c:?}");

                    let axis_cos = (c.delta() / 2.0).sin()
                        + 2.0 * (phi / 2.0).cos() * (theta / 2.0).sin() * beta.sin().powi(2);
                    let factored = 2.0 * sp.sin_w * (sp.sin_w + axis_cos);
                    assert!(
                        (sp.l_m - factored).abs() <= 1e-12 * sp.l_m.max(1.0),
                        "normalizer forms disagree at {c:?}"
                    );

                    // x agrees with the defining arcsine ratio
                    let x_defining = (rhs / sp.l_m.sqrt()).clamp(-1.0, 1.0).asin();
                    assert!((sp.x - x_defining).abs() < 1e-12, "x branch at {c:?}");
                }
            }
        }
    }

    #[test]
    fn mixing_angle_stays_in_range() {
        for &(beta, phi, theta) in &[
            (0.2, 1.0, 2.0),
            (1.2, 5.9, 0.4),
            (FRAC_PI_2, 2.0, 2.5),
            (0.9, 0.05, 6.2),
        ] {
            let sp = spectral_params(cfg(beta, phi, theta)).unwrap();
            assert!(sp.x >= -FRAC_PI_2 && sp.x <= FRAC_PI_2);
            assert!(sp.w >= 0.0 && sp.w <= PI);
            assert!(sp.l_m >= 0.0);
        }
    }

    #[test]
    fn saturated_mixing_angle_corner() {
        // beta = pi/2 with phi + theta > 2*pi: sin(w) > 0 but the normalizer
        // vanishes; the mixing angle saturates and the closed-form power
        // still reproduces the brute force.
        let c = cfg(FRAC_PI_2, 4.8, 4.8);
        let sp = spectral_params(c).unwrap();
        assert!(sp.sin_w > 0.5);
        assert!(sp.l_m.abs() < 1e-15);
        assert!((sp.x.abs() - FRAC_PI_2).abs() < 1e-12);

        let closed = crate::kernel::kernel_power_closed(c, 7).unwrap();
        let brute = crate::kernel::kernel_power_brute(c, 7);
        assert!(closed.max_abs_diff(&brute) < 1e-12);
    }
}
