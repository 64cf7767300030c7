//! The exponentially smoothed corner: curvature decaying as
//! e^{-|s|/2 Lambda}, tuned so the turning angle is 2 eta and the
//! geometric potential is exactly
//!
//! ```text
//! U(s) = -lambda e^{-|s|/Lambda},   lambda = eta^2 / (16 Lambda^2).
//! ```
//!
//! Substituting x = (eta/2) e^{-(s)/(2 Lambda)} on each half-line maps
//! the Schrodinger equation onto Bessel's equation of order
//! nu = 2 i Lambda k, so scattering is exact in J_{+-nu} evaluated at
//! x = eta/2 < pi/2, comfortably inside the power-series range.
//!
//! The bound state uses the evenness of U: the ground state has
//! psi'(0) = 0, and with E = -kappa^2 the decaying half-line solution
//! is J_{2 kappa Lambda}((eta/2) e^{-|s|/(2 Lambda)}), so the matching
//! condition collapses to J'_{2 kappa Lambda}(eta/2) = 0.

use num_complex::Complex64;

use crate::boundary::ScatteringAmplitudes;
use crate::error::{Error, Result};
use crate::numeric::EffectiveCoefficients;
use crate::rootfind::{brent, scan_brackets};
use crate::specfun::{
    bessel_j0, bessel_j1, bessel_j_complex_order, bessel_y0, bessel_y1, gamma_complex,
    EULER_GAMMA,
};

/// Smoothing length and half turning angle of an exponential bend.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpParams {
    lambda_len: f64,
    eta: f64,
}

impl ExpParams {
    pub fn new(lambda_len: f64, eta: f64) -> Result<Self> {
        if !(lambda_len > 0.0) || !lambda_len.is_finite() {
            return Err(Error::Domain(format!(
                "lambda_len must be positive, got {lambda_len}"
            )));
        }
        if !(eta > 0.0 && eta < std::f64::consts::PI) {
            return Err(Error::Domain(format!("eta must lie in (0, pi), got {eta}")));
        }
        Ok(ExpParams { lambda_len, eta })
    }

    pub fn lambda_len(&self) -> f64 {
        self.lambda_len
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Well strength lambda = eta^2 / (16 Lambda^2).
    pub fn well_strength(&self) -> f64 {
        let q = self.eta / (4.0 * self.lambda_len);
        q * q
    }
}

/// dJ_nu/dx at x, via J'_nu = (J_{nu-1} - J_{nu+1}) / 2.
fn bessel_j_prime(nu: Complex64, x: f64) -> Result<Complex64> {
    let jm = bessel_j_complex_order(nu - 1.0, x)?;
    let jp = bessel_j_complex_order(nu + 1.0, x)?;
    Ok(0.5 * (jm - jp))
}

/// Scattering amplitudes of the exponential bend.
///
/// Both half-line solutions are combinations of J_{+-nu} at argument
/// (eta/2) e^{-|s|/(2 Lambda)}; expanding them back into plane waves
/// as s -> -+infinity and matching psi, psi' at s = 0 gives, with
/// nu = 2 i Lambda k and z = eta/2,
///
/// ```text
/// r = -Phi (p + q)/2,   t = Phi (p - q)/2,
/// p = J_nu(z)/J_{-nu}(z),   q = J'_nu(z)/J'_{-nu}(z),
/// Phi = (eta/4)^{-2 nu} Gamma(1 + nu)/Gamma(1 - nu),
/// ```
///
/// where Phi (a pure phase) converts the Bessel normalization into the
/// plane-wave one. J_{-nu}(z) = conj(J_nu(z)) would make unitarity a
/// tautology, so the two orders are summed independently and the
/// reported unitarity defect is a real measurement of series error.
pub fn scatter_exponential(p: &ExpParams, k: f64) -> Result<ScatteringAmplitudes> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!("scattering needs finite k > 0, got {k}")));
    }
    let two_kl = 2.0 * k * p.lambda_len();
    if two_kl > 10.0 {
        return Err(Error::SpecFunDomain(format!(
            "exponential model needs 2 k Lambda <= 10, got {two_kl}"
        )));
    }
    let eta = p.eta();
    let z = 0.5 * eta;
    let nu = Complex64::new(0.0, two_kl);

    let j_p = bessel_j_complex_order(nu, z)?;
    let j_m = bessel_j_complex_order(-nu, z)?;
    let jd_p = bessel_j_prime(nu, z)?;
    let jd_m = bessel_j_prime(-nu, z)?;
    if j_m.norm() < 1e-280 || jd_m.norm() < 1e-280 {
        return Err(Error::SpecFunDomain(format!(
            "denominator Bessel value vanished at eta = {eta}, k = {k}"
        )));
    }

    let phi = (-2.0 * nu * (0.25 * eta).ln()).exp() * gamma_complex(Complex64::new(1.0, 0.0) + nu)?
        / gamma_complex(Complex64::new(1.0, 0.0) - nu)?;
    let ratio_j = j_p / j_m;
    let ratio_jd = jd_p / jd_m;
    let r = -phi * 0.5 * (ratio_j + ratio_jd);
    let t = phi * 0.5 * (ratio_j - ratio_jd);
    Ok(ScatteringAmplitudes { r, t, k })
}

/// Effective junction coefficients of the exponential bend:
/// with z = eta/2 and l = ln(eta/4) + gamma_E,
///
/// ```text
/// a = (eta/4) [J0(z) (4 l J1(z) - pi Y1(z)) - pi J1(z) Y0(z)],
/// b = (eta Lambda / 2) (2 l J0(z) - pi Y0(z)) (pi Y1(z) - 2 l J1(z)),
/// c = -eta J0(z) J1(z) / (2 Lambda),     d = (1 + bc)/a.
/// ```
///
/// The static (k = 0) half-line solutions are J0 and Y0 of the mapped
/// argument; a^2 - bc = 1 follows from the Bessel Wronskian, so d = a.
pub fn coeffs_exponential(p: &ExpParams) -> Result<EffectiveCoefficients> {
    let eta = p.eta();
    let lambda = p.lambda_len();
    let z = 0.5 * eta;
    let l = (0.25 * eta).ln() + EULER_GAMMA;
    let pi = std::f64::consts::PI;
    let j0 = bessel_j0(z)?;
    let j1 = bessel_j1(z)?;
    let y0 = bessel_y0(z)?;
    let y1 = bessel_y1(z)?;

    let a = 0.25 * eta * (j0 * (4.0 * l * j1 - pi * y1) - pi * j1 * y0);
    let b = 0.5 * eta * lambda * (2.0 * l * j0 - pi * y0) * (pi * y1 - 2.0 * l * j1);
    let c = -eta * j0 * j1 / (2.0 * lambda);
    EffectiveCoefficients::from_abc(a, b, c)
}

const BOUND_SCAN_POINTS: usize = 400;

/// The exponential bend's single bound state (E = -kappa^2).
///
/// Roots of J'_{2 kappa Lambda}(eta/2) over kappa in (0, eta/(4 Lambda));
/// the window top is the well-depth bound kappa^2 < lambda. The
/// derivative is negative at the bottom (J'_0 = -J1 < 0) and positive
/// at the top (J'_nu just below x = nu is climbing toward the first
/// maximum), so exactly one sign change is bracketed.
pub fn bound_state_exponential(p: &ExpParams) -> Result<f64> {
    let z = 0.5 * p.eta();
    let lambda = p.lambda_len();
    let kappa_max = p.eta() / (4.0 * lambda);

    // the argument z < pi/2 keeps the series deep in its convergent
    // range for every order in the window, so evaluation cannot fail
    let f = |kappa: f64| -> f64 {
        bessel_j_prime(Complex64::new(2.0 * kappa * lambda, 0.0), z)
            .expect("series converges for x < pi/2")
            .re
    };

    let lo = kappa_max * 1e-9;
    let hi = kappa_max * (1.0 - 1e-9);
    let brackets = scan_brackets(f, lo, hi, BOUND_SCAN_POINTS);
    let (a, b) = *brackets.first().ok_or(Error::NoBoundState { kappa_max })?;
    Ok(brent(f, a, b, 1e-12))
}
