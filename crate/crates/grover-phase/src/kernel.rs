//! The generalized search kernel in its two-dimensional invariant subspace.
//!
//! A search iteration composes two phase rotations: one by `phi` about the
//! marked state and one by `theta` about the uniform superposition. Both
//! leave the plane spanned by the marked state `|tau>` and its in-plane
//! complement `|tau_perp>` invariant, so the whole dynamics reduces to a
//! unitary 2x2 matrix `G`. This module builds `G`, raises it to integer
//! powers either in closed form or by repeated multiplication, and applies
//! it to states of the subspace.

use std::f64::consts::FRAC_PI_2;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::Error;
use crate::spectral::{spectral_params, SpectralParams};

/// Entrywise tolerance when comparing kernel powers against each other.
pub const TOL_MATRIX: f64 = 1e-10;
/// Tolerance on the unitarity defect of kernel-derived matrices.
pub const TOL_UNITARY: f64 = 1e-12;
/// Tolerance on state-vector norm preservation.
pub const TOL_NORM: f64 = 1e-12;

/// Search parameters: the overlap angle `beta` (with `sin(beta)` the
/// amplitude of the marked state in the uniform superposition) and the two
/// rotation angles `phi` and `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConfig {
    beta: f64,
    phi: f64,
    theta: f64,
    qubits: Option<u32>,
}

impl PhaseConfig {
    /// Builds a configuration from an explicit overlap angle in (0, pi/2].
    pub fn new(beta: f64, phi: f64, theta: f64) -> Result<Self, Error> {
        if !beta.is_finite() || beta <= 0.0 || beta > FRAC_PI_2 {
            return Err(Error::InvalidBeta(beta));
        }
        if !phi.is_finite() {
            return Err(Error::NonFiniteAngle {
                name: "phi",
                value: phi,
            });
        }
        if !theta.is_finite() {
            return Err(Error::NonFiniteAngle {
                name: "theta",
                value: theta,
            });
        }
        Ok(Self {
            beta,
            phi,
            theta,
            qubits: None,
        })
    }

    /// Builds a configuration for an `n`-qubit database of `N = 2^n`
    /// elements, where `sin(beta) = 2^(-n/2)`.
    pub fn from_qubits(n: u32, phi: f64, theta: f64) -> Result<Self, Error> {
        let beta = (-(f64::from(n)) / 2.0).exp2().asin();
        let mut cfg = Self::new(beta, phi, theta)?;
        cfg.qubits = Some(n);
        Ok(cfg)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// The systematic phase error `delta = phi - theta`.
    pub fn delta(&self) -> f64 {
        self.phi - self.theta
    }

    /// The qubit count, when the configuration was derived from one.
    pub fn qubits(&self) -> Option<u32> {
        self.qubits
    }
}

/// Row-major 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat2 {
    entries: [[Complex64; 2]; 2],
}

impl ComplexMat2 {
    pub const fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        Self::new([
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ])
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new([
            [self.entries[0][0].conj(), self.entries[1][0].conj()],
            [self.entries[0][1].conj(), self.entries[1][1].conj()],
        ])
    }

    pub fn det(&self) -> Complex64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut entries = self.entries;
        for row in &mut entries {
            for e in row {
                *e *= factor;
            }
        }
        Self::new(entries)
    }

    /// Largest entrywise absolute difference between two matrices.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        worst
    }

    /// Max-norm of `M M^dagger - I`; zero for an exactly unitary matrix.
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.adjoint()).max_abs_diff(&Self::identity())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }
}

impl Mul for ComplexMat2 {
    type Output = ComplexMat2;

    fn mul(self, rhs: ComplexMat2) -> ComplexMat2 {
        let a = &self.entries;
        let b = &rhs.entries;
        ComplexMat2::new([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

/// A unit vector of the invariant plane, written in the
/// `{|tau>, |tau_perp>}` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubspaceState {
    pub amp_tau: Complex64,
    pub amp_perp: Complex64,
}

impl SubspaceState {
    /// The uniform superposition: `sin(beta)|tau> + cos(beta)|tau_perp>`.
    pub fn initial(cfg: PhaseConfig) -> Self {
        let (sb, cb) = cfg.beta().sin_cos();
        Self {
            amp_tau: Complex64::new(sb, 0.0),
            amp_perp: Complex64::new(cb, 0.0),
        }
    }

    pub fn norm(&self) -> f64 {
        (self.amp_tau.norm_sqr() + self.amp_perp.norm_sqr()).sqrt()
    }

    /// Probability of observing the marked state.
    pub fn marked_probability(&self) -> f64 {
        self.amp_tau.norm_sqr()
    }
}

/// Builds the kernel `G = -G_eta * G_tau`, where `G_tau` rotates the marked
/// state by `phi` and `G_eta` rotates the uniform superposition by `theta`.
pub fn build_kernel(cfg: PhaseConfig) -> ComplexMat2 {
    let (sb, cb) = cfg.beta().sin_cos();
    let e_phi = Complex64::from_polar(1.0, cfg.phi());
    let k = Complex64::from_polar(1.0, cfg.theta()) - 1.0;
    ComplexMat2::new([
        [-(e_phi * (1.0 + k * sb * sb)), -(k * sb * cb)],
        [-(e_phi * k * sb * cb), -(1.0 + k * cb * cb)],
    ])
}

/// `G^m` in closed form, including the global phase
/// `(-1)^m e^(i m (phi + theta) / 2)`.
///
/// O(1) in `m`; the spectral decomposition must exist (propagates
/// [`Error::SpectralDegenerate`] otherwise, in which case callers can fall
/// back to [`kernel_power_brute`]).
pub fn kernel_power_closed(cfg: PhaseConfig, m: u64) -> Result<ComplexMat2, Error> {
    let sp = spectral_params(cfg)?;
    Ok(kernel_power_from_params(cfg, &sp, m))
}

pub(crate) fn kernel_power_from_params(cfg: PhaseConfig, sp: &SpectralParams, m: u64) -> ComplexMat2 {
    let mf = m as f64;
    let e_imw = Complex64::from_polar(1.0, mf * sp.w);
    let e_miw = e_imw.conj();
    let (sx, cx) = sp.x.sin_cos();
    let (cos2_x, sin2_x) = (cx * cx, sx * sx);
    let sin_mw = (mf * sp.w).sin();
    let sin_2x = (2.0 * sp.x).sin();
    let off = Complex64::new(0.0, 1.0) * (sin_mw * sin_2x);
    let half_phi = cfg.phi() / 2.0;

    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let global = Complex64::from_polar(1.0, mf * (cfg.phi() + cfg.theta()) / 2.0) * sign;

    ComplexMat2::new([
        [
            e_imw * cos2_x + e_miw * sin2_x,
            Complex64::from_polar(1.0, -half_phi) * off,
        ],
        [
            Complex64::from_polar(1.0, half_phi) * off,
            e_imw * sin2_x + e_miw * cos2_x,
        ],
    ])
    .scale(global)
}

/// `G^m` by repeated multiplication: the ground-truth oracle for the closed
/// form. Accumulated rounding makes it unsuitable past `m ~ 10^6`.
pub fn kernel_power_brute(cfg: PhaseConfig, m: u64) -> ComplexMat2 {
    let g = build_kernel(cfg);
    let mut acc = ComplexMat2::identity();
    for _ in 0..m {
        acc = acc * g;
    }
    acc
}

/// Applies a matrix to a subspace state.
pub fn apply(matrix: ComplexMat2, state: SubspaceState) -> SubspaceState {
    SubspaceState {
        amp_tau: matrix.entry(0, 0) * state.amp_tau + matrix.entry(0, 1) * state.amp_perp,
        amp_perp: matrix.entry(1, 0) * state.amp_tau + matrix.entry(1, 1) * state.amp_perp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

    fn cfg(beta: f64, phi: f64, theta: f64) -> PhaseConfig {
        PhaseConfig::new(beta, phi, theta).unwrap()
    }

    /// Builds `-G_eta * G_tau` from the defining rank-1 operators instead of
    /// the expanded matrix, as an independent check of `build_kernel`.
    fn kernel_from_operators(c: PhaseConfig) -> ComplexMat2 {
        let (sb, cb) = c.beta().sin_cos();
        let g_tau = ComplexMat2::new([
            [Complex64::from_polar(1.0, c.phi()), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ]);
        // G_eta = I + (e^{i theta} - 1) |s><s| with |s> = (sin b, cos b)
        let k = Complex64::from_polar(1.0, c.theta()) - 1.0;
        let g_eta = ComplexMat2::new([
            [1.0 + k * sb * sb, k * sb * cb],
            [k * sb * cb, 1.0 + k * cb * cb],
        ]);
        (g_eta * g_tau).scale(Complex64::new(-1.0, 0.0))
    }

    #[test]
    fn config_validation() {
        assert!(PhaseConfig::new(0.0, 0.0, 0.0).is_err());
        assert!(PhaseConfig::new(-0.1, 0.0, 0.0).is_err());
        assert!(PhaseConfig::new(FRAC_PI_2 + 0.1, 0.0, 0.0).is_err());
        assert!(PhaseConfig::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(PhaseConfig::new(0.3, f64::INFINITY, 0.0).is_err());
        assert!(PhaseConfig::new(FRAC_PI_2, 1.0, 2.0).is_ok());
    }

    #[test]
    fn from_qubits_sets_overlap() {
        let c = PhaseConfig::from_qubits(10, PI, PI).unwrap();
        assert_eq!(c.qubits(), Some(10));
        assert!((c.beta().sin() - 2f64.powi(-5)).abs() < 1e-16);
        // delta is an exact difference
        let c = PhaseConfig::from_qubits(4, PI + 0.25, PI).unwrap();
        assert_eq!(c.delta(), 0.25);
    }

    #[test]
    fn kernel_single_element_database() {
        // beta = pi/2 kills the off-diagonal terms and G collapses to -I.
        let g = build_kernel(cfg(FRAC_PI_2, PI, PI));
        let minus_i = ComplexMat2::identity().scale(Complex64::new(-1.0, 0.0));
        assert!(g.max_abs_diff(&minus_i) < 1e-15);
    }

    #[test]
    fn kernel_zero_phases_is_minus_identity() {
        for beta in [0.1, FRAC_PI_6, 1.0, FRAC_PI_2] {
            let g = build_kernel(cfg(beta, 0.0, 0.0));
            let minus_i = ComplexMat2::identity().scale(Complex64::new(-1.0, 0.0));
            assert!(g.max_abs_diff(&minus_i) < 1e-15);
        }
    }

    #[test]
    fn kernel_matches_operator_product() {
        let c = cfg(FRAC_PI_6, PI, PI);
        assert!(build_kernel(c).max_abs_diff(&kernel_from_operators(c)) < 1e-15);
        // and on a non-matched configuration
        let c = cfg(0.37, 2.1, 4.4);
        assert!(build_kernel(c).max_abs_diff(&kernel_from_operators(c)) < 1e-15);
        assert!(build_kernel(c).is_unitary(TOL_UNITARY));
        assert!((build_kernel(c).det().norm() - 1.0).abs() < TOL_UNITARY);
    }

    #[test]
    fn closed_power_trivial_cases() {
        let c = cfg(FRAC_PI_6, PI, PI);
        let id = kernel_power_closed(c, 0).unwrap();
        assert!(id.max_abs_diff(&ComplexMat2::identity()) < 1e-15);
        let g1 = kernel_power_closed(c, 1).unwrap();
        assert!(g1.max_abs_diff(&build_kernel(c)) < TOL_MATRIX);
    }

    #[test]
    fn closed_power_matches_brute_cube() {
        let c = cfg(FRAC_PI_6, PI, PI);
        let g = build_kernel(c);
        let cube = g * g * g;
        let closed = kernel_power_closed(c, 3).unwrap();
        assert!(closed.max_abs_diff(&cube) < TOL_MATRIX);
        assert!(closed.max_abs_diff(&kernel_power_brute(c, 3)) < TOL_MATRIX);
    }

    #[test]
    fn closed_power_degenerate_is_reported() {
        let c = cfg(0.4, 0.0, 0.0);
        assert!(matches!(
            kernel_power_closed(c, 5),
            Err(Error::SpectralDegenerate { .. })
        ));
        // the brute-force fallback still works: (-I)^5 = -I
        let minus_i = ComplexMat2::identity().scale(Complex64::new(-1.0, 0.0));
        assert!(kernel_power_brute(c, 5).max_abs_diff(&minus_i) < 1e-14);
    }

    #[test]
    fn brute_power_squares_by_hand() {
        let c = cfg(0.9, 1.3, 5.1);
        let g = build_kernel(c);
        let sq = kernel_power_brute(c, 2);
        for r in 0..2 {
            for col in 0..2 {
                let expect = g.entry(r, 0) * g.entry(0, col) + g.entry(r, 1) * g.entry(1, col);
                assert!((sq.entry(r, col) - expect).norm() < 1e-15);
            }
        }
        assert!(kernel_power_brute(c, 0).max_abs_diff(&ComplexMat2::identity()) == 0.0);
        assert!(kernel_power_brute(c, 1).max_abs_diff(&g) == 0.0);
    }

    #[test]
    fn apply_identity_and_sign_flip() {
        let c = cfg(0.7, 0.0, 0.0);
        let s = SubspaceState::initial(c);
        let same = apply(ComplexMat2::identity(), s);
        assert_eq!(same, s);

        let flipped = apply(build_kernel(c), s);
        assert!((flipped.amp_tau + s.amp_tau).norm() < 1e-15);
        assert!((flipped.amp_perp + s.amp_perp).norm() < 1e-15);
        assert!((flipped.norm() - 1.0).abs() < TOL_NORM);
    }

    #[test]
    fn apply_reaches_marked_state_in_one_step() {
        // The four-element database with pi phases: one iteration lands the
        // whole amplitude on the marked state.
        let c = cfg(FRAC_PI_6, PI, PI);
        let s = apply(build_kernel(c), SubspaceState::initial(c));
        assert!((s.marked_probability() - 1.0).abs() < 1e-14);
        assert!((s.norm() - 1.0).abs() < TOL_NORM);
    }

    #[test]
    fn global_phase_does_not_change_moduli() {
        let c = cfg(0.52, 2.9, 3.4);
        let m = 17;
        let g = kernel_power_closed(c, m).unwrap();
        let phase = Complex64::from_polar(
            1.0,
            -(m as f64) * (c.phi() + c.theta()) / 2.0,
        ) * if m % 2 == 0 { 1.0 } else { -1.0 };
        let stripped = g.scale(phase);
        for r in 0..2 {
            for col in 0..2 {
                assert!((g.entry(r, col).norm() - stripped.entry(r, col).norm()).abs() < 1e-15);
            }
        }
        let p = 1.0 - apply(g, SubspaceState::initial(c)).amp_perp.norm_sqr();
        let p_stripped = 1.0 - apply(stripped, SubspaceState::initial(c)).amp_perp.norm_sqr();
        assert!((p - p_stripped).abs() < 1e-14);
    }
}
