//! The "open book" bend: a circular arc of radius R turning through
//! 2 eta, joined smoothly to straight arms.
//!
//! On the arc the geometric potential is the constant square well
//! U = -1/(4R^2) over |s| <= R eta, so everything is elementary. The
//! scattering amplitudes are referenced to plane waves extrapolated to
//! s = 0; the factors e^{-2 i eta k R} carry the arc length.
//!
//! The bound state (exactly one for eta in (0, pi)) solves the even
//! channel mu tan(mu L) = kappa with mu = sqrt(1/(4R^2) - kappa^2) and
//! L = R eta. The matching determinant used here,
//!
//! ```text
//! W(kappa) = -2 kappa mu cos(2 mu L) + (mu^2 - kappa^2) sin(2 mu L)
//!          = 2 (mu sin(mu L) - kappa cos(mu L)) (mu cos(mu L) + kappa sin(mu L)),
//! ```
//!
//! factors into the even and odd channels; the odd factor cannot
//! vanish for mu L < pi/2, so the single sign change in
//! (0, 1/(2R)) is the ground state. W vanishes identically at
//! kappa = 1/(2R) (where mu = 0), which the search window excludes.

use num_complex::Complex64;

use crate::boundary::ScatteringAmplitudes;
use crate::error::{Error, Result};
use crate::numeric::EffectiveCoefficients;
use crate::rootfind::{brent, scan_brackets};

/// Arc radius and half turning angle of an open-book bend.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpenBookParams {
    radius: f64,
    eta: f64,
}

impl OpenBookParams {
    pub fn new(radius: f64, eta: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Domain(format!("radius must be positive, got {radius}")));
        }
        if !(eta > 0.0 && eta < std::f64::consts::PI) {
            return Err(Error::Domain(format!("eta must lie in (0, pi), got {eta}")));
        }
        Ok(OpenBookParams { radius, eta })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// Closed-form amplitudes of the arc junction.
///
/// With w = sqrt(1 + 4 k^2 R^2) (the interior wavenumber in units of
/// 1/(2R) times 2kR... precisely: interior momentum mu = w/(2R)),
///
/// ```text
/// den = (w - 2kR)^2 e^{2 i eta w} - (w + 2kR)^2,
/// r = e^{-2 i eta k R} (1 - e^{2 i eta w}) / den,
/// t = -8 k R w e^{i eta w} e^{-2 i eta k R} / den.
/// ```
///
/// Since w^2 - 4k^2R^2 = 1, the factor (w - 2kR) is computed as
/// 1/(w + 2kR) to dodge cancellation at large kR. Unitarity is exact:
/// |1 - P^2|^2 + (8kRw)^2 = |den|^2 with |P| = 1.
pub fn scatter_openbook(p: &OpenBookParams, k: f64) -> Result<ScatteringAmplitudes> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!("scattering needs finite k > 0, got {k}")));
    }
    let eta = p.eta();
    let kr = k * p.radius();
    let w = (1.0 + 4.0 * kr * kr).sqrt();
    let wp = w + 2.0 * kr;
    let wm = 1.0 / wp;
    let p2 = Complex64::from_polar(1.0, 2.0 * eta * w);
    let den = wm * wm * p2 - Complex64::new(wp * wp, 0.0);
    let outer = Complex64::from_polar(1.0, -2.0 * eta * kr);
    let r = outer * (Complex64::new(1.0, 0.0) - p2) / den;
    let t = -8.0 * kr * w * Complex64::from_polar(1.0, eta * w) * outer / den;
    Ok(ScatteringAmplitudes { r, t, k })
}

/// Effective junction coefficients of the arc in the k -> 0 limit:
///
/// ```text
/// a = (eta/2) sin eta + cos eta,
/// b = -(R/2) (eta^2 sin eta + 4 eta cos eta - 4 sin eta),
/// c = -sin eta / (2R),      d = (1 + bc)/a  (= a analytically).
/// ```
pub fn coeffs_openbook(p: &OpenBookParams) -> Result<EffectiveCoefficients> {
    let eta = p.eta();
    let r = p.radius();
    let (sin, cos) = eta.sin_cos();
    let a = 0.5 * eta * sin + cos;
    let b = -0.5 * r * (eta * eta * sin + 4.0 * eta * cos - 4.0 * sin);
    let c = -sin / (2.0 * r);
    EffectiveCoefficients::from_abc(a, b, c)
}

fn matching_determinant(p: &OpenBookParams, kappa: f64) -> f64 {
    let r = p.radius();
    let l = r * p.eta();
    let mu2 = 1.0 / (4.0 * r * r) - kappa * kappa;
    let mu = mu2.max(0.0).sqrt();
    -2.0 * kappa * mu * (2.0 * mu * l).cos() + (mu2 - kappa * kappa) * (2.0 * mu * l).sin()
}

const BOUND_SCAN_POINTS: usize = 10_000;

/// The arc's single bound state, as the decay rate kappa (E = -kappa^2).
///
/// Searches (1e-12/R, (1 - 1e-6)/(2R)): the well depth 1/(4R^2) caps
/// kappa at 1/(2R), and the top margin skips the spurious identical
/// zero there. W(0+) = sin(eta)/(4R^2) > 0 guarantees the scan sees
/// the sign change for every valid eta.
pub fn bound_state_openbook(p: &OpenBookParams) -> Result<f64> {
    let kappa_max = 0.5 / p.radius();
    let lo = 1e-12 / p.radius();
    let hi = kappa_max * (1.0 - 1e-6);
    let brackets = scan_brackets(
        |x| matching_determinant(p, x),
        lo,
        hi,
        BOUND_SCAN_POINTS,
    );
    let (a, b) = *brackets.first().ok_or(Error::NoBoundState { kappa_max })?;
    Ok(brent(|x| matching_determinant(p, x), a, b, 1e-12))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn amp(eta: f64, kr: f64) -> ScatteringAmplitudes {
        let p = OpenBookParams::new(1.0, eta).unwrap();
        scatter_openbook(&p, kr).unwrap()
    }

    // |t|^2 references from a 30-digit evaluation of the closed forms,
    // cross-checked against direct ODE integration.
    #[test]
    fn transmission_reference_curve() {
        let cases = [
            (0.1, 0.244005643444274322),
            (0.25, 0.678546307422240661),
            (0.5, 0.908796589786167041),
            (1.0, 0.988068868185655472),
            (2.0, 0.999991434569206607),
        ];
        for (kr, want) in cases {
            let got = amp(PI / 4.0, kr).transmission();
            assert!(
                (got - want).abs() < 1e-14,
                "kR = {kr}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn low_energy_is_total_reflection() {
        let s = amp(PI / 4.0, 1e-8);
        assert!((s.r + Complex64::new(1.0, 0.0)).norm() < 1e-6);
        assert!(s.t.norm() < 1e-6);
    }

    #[test]
    fn unitarity_across_parameter_grid() {
        for i in 1..10 {
            let eta = PI * i as f64 / 10.0;
            for j in 0..60 {
                let kr = 1e-3 * 1.2f64.powi(j);
                let s = amp(eta, kr);
                assert!(
                    s.unitarity_defect() < 1e-12,
                    "eta = {eta}, kR = {kr}: {:e}",
                    s.unitarity_defect()
                );
            }
        }
    }

    #[test]
    fn coefficients_reference_values() {
        let p = OpenBookParams::new(1.0, PI / 8.0).unwrap();
        let co = coeffs_openbook(&p).unwrap();
        assert!((co.a - 0.99901924874683003997).abs() < 1e-15);
        assert!((co.b - 0.010246279130521228124).abs() < 1e-15);
        assert!((co.c + 0.19134171618254488586).abs() < 1e-15);

        // eta = pi/2: cot term drops out, b = -(pi^2/4 - 4)/2
        let p = OpenBookParams::new(1.0, PI / 2.0).unwrap();
        let co = coeffs_openbook(&p).unwrap();
        assert!((co.a - PI / 4.0).abs() < 1e-15);
        assert!((co.b - 0.76629944986383017265).abs() < 1e-15);
        assert!((co.c + 0.5).abs() < 1e-15);
        assert!((co.residual()).abs() < 1e-15);
    }

    #[test]
    fn coefficients_scale_with_radius() {
        // b carries length, c carries 1/length, a and d are pure numbers
        let unit = coeffs_openbook(&OpenBookParams::new(1.0, 0.9).unwrap()).unwrap();
        let scaled = coeffs_openbook(&OpenBookParams::new(3.0, 0.9).unwrap()).unwrap();
        assert_eq!(unit.a, scaled.a);
        assert!((scaled.b - 3.0 * unit.b).abs() < 1e-15);
        assert!((scaled.c - unit.c / 3.0).abs() < 1e-16);
    }

    #[test]
    fn straight_wire_limit() {
        let co = coeffs_openbook(&OpenBookParams::new(1.0, 1e-4).unwrap()).unwrap();
        assert!((co.a - 1.0).abs() < 1e-8);
        // b -> R eta^3 / 6, c -> -eta / (2R)
        assert!((co.b - 1e-12 / 6.0).abs() < 1e-16);
        assert!((co.c + 5e-5).abs() < 1e-12);
    }

    #[test]
    fn bound_state_reference_values() {
        let p = OpenBookParams::new(1.0, PI / 4.0).unwrap();
        let kappa = bound_state_openbook(&p).unwrap();
        assert!(
            (kappa - 0.179223679861908).abs() < 5e-13,
            "kappa = {kappa}"
        );
        let p = OpenBookParams::new(1.0, PI / 16.0).unwrap();
        let kappa = bound_state_openbook(&p).unwrap();
        assert!((kappa - 0.0487755705361028).abs() < 5e-13, "kappa = {kappa}");
    }

    #[test]
    fn bound_state_scales_inversely_with_radius() {
        let k1 = bound_state_openbook(&OpenBookParams::new(1.0, 1.1).unwrap()).unwrap();
        let k2 = bound_state_openbook(&OpenBookParams::new(2.0, 1.1).unwrap()).unwrap();
        assert!((k2 - 0.5 * k1).abs() < 1e-12 * k1);
    }

    #[test]
    fn bound_state_stays_above_well_bottom() {
        for i in 1..16 {
            let eta = PI * i as f64 / 16.0;
            let p = OpenBookParams::new(0.7, eta).unwrap();
            let kappa = bound_state_openbook(&p).unwrap();
            assert!(kappa > 0.0 && kappa < 0.5 / 0.7, "eta = {eta}: kappa = {kappa}");
            assert!(
                matching_determinant(&p, kappa).abs() < 1e-10,
                "residual at eta = {eta}"
            );
        }
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(OpenBookParams::new(0.0, 1.0).is_err());
        assert!(OpenBookParams::new(-1.0, 1.0).is_err());
        assert!(OpenBookParams::new(1.0, 0.0).is_err());
        assert!(OpenBookParams::new(1.0, PI).is_err());
        let p = OpenBookParams::new(1.0, 1.0).unwrap();
        assert!(scatter_openbook(&p, 0.0).is_err());
        assert!(scatter_openbook(&p, -1.0).is_err());
    }
}
