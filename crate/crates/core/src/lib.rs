//! Bound states of the radial Dirac equation with an attractive spherical
//! delta-shell potential `V(r) = −a·δ(r − r0)`.
//!
//! Everything is in natural units: energies `ε = E/mc²`, shell radius
//! `ρ = r0/(ħ/mc)`, coupling `A = a/ħc`.
//!
//! * [`kinematics`]: channel quantum numbers and the dimensionless point `(ε, ρ)`
//! * [`special`]: half-integer-order modified Bessel functions
//! * [`matching`]: the transfer matrix across the shell and the phase mismatch
//! * [`solver`]: bound-state search, critical and threshold couplings, sweeps
//! * [`oracle`]: finite-width square-well integration used as a cross-check
//!
//! With the default `parallel` feature, sweeps, bracket scans and
//! convergence studies fan out over rayon; without it they run sequentially
//! and produce identical output.

// `!(x > 0.0)` style guards are deliberate: they reject NaN too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod command;
pub mod error;
pub mod kinematics;
pub mod matching;
pub mod oracle;
mod par;
pub mod solver;
pub mod special;

pub use error::{Error, Result};
pub use kinematics::{channel_from_kappa, dimensionless_point, DimensionlessPoint, QuantumChannel};
pub use matching::{
    alpha_avn_printed, alpha_matching, autoval_residual, inner_ratio, outer_ratio, phase_mismatch, transfer_matrix,
    AlphaComparison, PhasePair, ShellCoupling, TransferMatrix,
};
pub use oracle::{convergence_study, integrate_radial, well_bound_state, ConvergenceRow, RadialState, WellProfile};
pub use solver::{
    critical_coupling, find_bound_states, ground_state_energy, sweep, sweep_sequential, threshold_coupling,
    BoundStatus, CriticalCoupling, GroundState, SpectrumResult, SweepRow,
};
pub use special::{bessel_i_half, bessel_k_half, ik_ratio, HalfIntegerOrder, Region};
