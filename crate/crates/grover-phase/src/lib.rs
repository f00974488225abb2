//! Analysis of Grover-style quantum search under imperfect phase rotations.
//!
//! The search iteration generalizes the textbook algorithm by rotating the
//! marked state by `phi` and the uniform superposition by `theta` instead
//! of inverting both. A systematic mismatch `delta = phi - theta` caps the
//! reachable success probability; this crate computes that cap and the
//! iteration counts attaining it, exactly and in closed form, alongside
//! the large-database estimates used to budget tolerable phase errors.
//!
//! Everything exact lives in the two-dimensional invariant subspace
//! ([`kernel`], [`spectral`], [`probability`]); [`approx`] holds the
//! leading-order estimates and the error-tolerance inversion; [`fullsim`]
//! is a brute-force state-vector simulator used as an independent oracle.
//!
//! All operations are pure functions of their inputs and safe to call from
//! any number of threads.

pub mod approx;
mod error;
pub mod fullsim;
pub mod kernel;
pub mod probability;
pub mod spectral;

pub use error::Error;
pub use kernel::{ComplexMat2, PhaseConfig, SubspaceState};
pub use num_complex::Complex64;
pub use probability::{MminReal, SearchOutcome};
pub use spectral::SpectralParams;
