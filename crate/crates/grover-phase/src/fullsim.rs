//! Brute-force n-qubit state-vector simulation of the search iteration.
//!
//! This is the independent oracle for the two-dimensional model: the
//! iteration is built directly from its defining operators on all `2^n`
//! amplitudes, with the rotation about the uniform superposition applied
//! as a rank-1 update (O(2^n) per step instead of materializing the
//! transform).

use num_complex::Complex64;

use crate::error::Error;

/// Default cap on the qubit count (about a million amplitudes); raise it
/// through [`init_uniform_with_limit`] when more is really needed.
pub const DEFAULT_MAX_QUBITS: u32 = 20;

/// A normalized state of `2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    qubits: u32,
}

impl StateVector {
    pub fn qubits(&self) -> u32 {
        self.qubits
    }

    /// Hilbert-space dimension, `2^n`.
    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }
}

/// The uniform superposition over `2^n` basis states, i.e. the
/// Walsh-Hadamard transform of `|0...0>`.
pub fn init_uniform(n: u32) -> Result<StateVector, Error> {
    init_uniform_with_limit(n, DEFAULT_MAX_QUBITS)
}

/// As [`init_uniform`], with an explicit qubit cap.
pub fn init_uniform_with_limit(n: u32, max_qubits: u32) -> Result<StateVector, Error> {
    if n == 0 {
        return Err(Error::ZeroQubits);
    }
    if n > max_qubits {
        return Err(Error::SizeExceeded { n, max: max_qubits });
    }
    let amp = Complex64::new((-f64::from(n) / 2.0).exp2(), 0.0);
    Ok(StateVector {
        amplitudes: vec![amp; 1usize << n],
        qubits: n,
    })
}

/// One search iteration `-G_eta G_tau`: multiply the marked amplitude by
/// `e^(i phi)`, shift every amplitude by the rank-1 rotation about the
/// uniform axis, and flip the overall sign. No renormalization is applied.
pub fn grover_step(
    state: &StateVector,
    tau: usize,
    phi: f64,
    theta: f64,
) -> Result<StateVector, Error> {
    let dim = state.dimension();
    if tau >= dim {
        return Err(Error::IndexOutOfRange { index: tau, dim });
    }

    let mut amplitudes = state.amplitudes.clone();
    amplitudes[tau] *= Complex64::from_polar(1.0, phi);

    let inv_root = 1.0 / (dim as f64).sqrt();
    let overlap = amplitudes.iter().sum::<Complex64>() * inv_root;
    let shift = (Complex64::from_polar(1.0, theta) - 1.0) * overlap * inv_root;
    for amp in &mut amplitudes {
        *amp = -(*amp + shift);
    }

    Ok(StateVector {
        amplitudes,
        qubits: state.qubits,
    })
}

/// Probability of observing basis state `tau`.
pub fn marked_probability(state: &StateVector, tau: usize) -> Result<f64, Error> {
    let dim = state.dimension();
    if tau >= dim {
        return Err(Error::IndexOutOfRange { index: tau, dim });
    }
    Ok(state.amplitudes[tau].norm_sqr())
}
