//! Special functions needed by the exponentially smoothed corner model:
//! the complex gamma function and Bessel J of complex order for the
//! scattering amplitudes, plus the small-argument Y0/Y1 series entering
//! the static (k = 0) effective coefficients.
//!
//! Everything here targets the small-argument regime of the model
//! (Bessel arguments at most eta/2 < pi/2 in production use); the series
//! are validated up to the x = 10 wall and refuse larger arguments.

mod bessel;
mod gamma;

pub use bessel::{
    bessel_j0, bessel_j1, bessel_j_complex_order, bessel_y0, bessel_y1, MAX_BESSEL_ARG,
};
pub use gamma::gamma_complex;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.57721566490153286061;
