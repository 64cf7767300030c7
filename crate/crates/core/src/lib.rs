//! Quantum scattering and binding on a sharply bent wire.
//!
//! A particle confined to a thin curved channel feels, on top of the
//! one-dimensional kinetic term, the attractive geometric potential
//! U(s) = -curvature(s)^2 / 4 (units hbar^2/2m = 1). This crate treats
//! a single bend of total turning angle 2 eta through three routes:
//!
//! * [`openbook`]: the bend is a circular arc of radius R ("open
//!   book"), where U is a square well and everything is elementary.
//! * [`expmodel`]: curvature decaying exponentially over a length
//!   Lambda, solvable in Bessel functions of imaginary order.
//! * [`numeric`]: any curvature profile, integrated directly.
//!
//! The point of having all three is the limit k R << 1 (or k Lambda
//! << 1): every regularization of the sharp corner collapses onto the
//! idealized zero-length junction of [`boundary`], parametrized by a
//! real unimodular matrix K and a phase. The effective K of a concrete
//! bend comes from its zero-energy solutions; [`numeric`] fits it for
//! arbitrary profiles and the two exact models supply it in closed
//! form, so the collapse is testable to high precision.
//!
//! Wavenumbers are in units of inverse length, energies are k^2, and
//! bound states are reported through their decay rate kappa > 0 with
//! E = -kappa^2.

pub mod boundary;
pub mod error;
pub mod expmodel;
pub mod numeric;
pub mod openbook;
pub mod specfun;
pub mod sweep;

mod mat2;
mod rootfind;

pub use boundary::{
    bound_state_idealized, scatter_idealized, to_ab, validate_ab, ABPair, BoundaryCondition,
    ScatteringAmplitudes,
};
pub use error::{Error, Result};
pub use expmodel::{bound_state_exponential, coeffs_exponential, scatter_exponential, ExpParams};
pub use numeric::{
    bound_state_numeric, effective_junction, fit_coefficients, potential_from_curvature,
    scatter_numeric, transfer_matrix, transfer_matrix_with_steps, CurvatureProfile,
    EffectiveCoefficients, TransferMatrix, DEFAULT_RK4_STEPS,
};
pub use openbook::{bound_state_openbook, coeffs_openbook, scatter_openbook, OpenBookParams};
pub use sweep::{
    parse_profile, run_bound_state, run_coeffs, run_compare, run_scatter, Axis, ModelSpec, Range,
};
