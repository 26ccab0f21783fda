//! Absolute quantum phase of a single harmonic-oscillator mode.
//!
//! The phase states |φ⟩ = π^{-1/2}|0⟩ + (2/π)^{1/2} Σ cos(nφ)|n⟩ on (0, π)
//! resolve the identity on Fock space, and Φ = ∫₀^π φ|φ⟩⟨φ| dφ is a bounded
//! Hermitian observable for |phase|. This crate builds Φ and its functions in
//! truncated Fock space, checks them against closed forms, and follows their
//! coherent-state averages into the classical limit.
//!
//! Modules:
//!
//! * [`fock`]: dense truncated operators, phase/coherent state amplitudes,
//!   expectation values.
//! * [`quadrature`]: Gauss–Legendre grids on (0, π).
//! * [`phase_ops`]: N, Φ, cos Φ, sin Φ, sin²Φ, the shift operators E/E† and
//!   the C/S comparison operators, number-state phase statistics.
//! * [`classical_limit`]: exact coherent-state averages and Fourier-series
//!   targets.
//! * [`restricted`]: the periodic box, its bounded position operator and
//!   the finite-dimensional angle operator.
//! * [`oscillator`]: the classical oscillator's mod-π angle and action.
//! * [`report`]: CSV/JSON tables behind the command-line tool.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classical_limit;
pub mod error;
pub mod fock;
pub mod oscillator;
pub mod phase_ops;
pub mod quadrature;
pub mod report;
pub mod restricted;

pub use error::{PhaseError, Result};
pub use fock::{CoherentAmplitude, TruncatedOperator};
pub use quadrature::{make_phase_grid, PhaseGrid};

pub use num_complex::Complex64;
