//! Adaptive Simpson quadrature.

/// Integrate f over [a, b] to absolute tolerance tol.
///
/// Simpson on the whole panel vs two half panels, recursing where the
/// Richardson estimate exceeds the (split) tolerance. Depth is capped;
/// on pathological integrands the last estimate is returned rather
/// than recursing forever, which keeps the caller deterministic.
pub(crate) fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_integrals() {
        let s = adaptive_simpson(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-12);
        assert!((s - 2.0).abs() < 1e-12);
        let e = adaptive_simpson(&|x: f64| (-x).exp(), 0.0, 30.0, 1e-12);
        assert!((e - 1.0).abs() < 1e-11);
        let p = adaptive_simpson(&|x: f64| x * x * x, -2.0, 2.0, 1e-13);
        assert!(p.abs() < 1e-13);
        assert_eq!(adaptive_simpson(&|_| 1.0, 3.0, 3.0, 1e-12), 0.0);
    }

    #[test]
    fn kinked_integrand() {
        // |x| integrates exactly once the kink is subdivided onto
        let v = adaptive_simpson(&|x: f64| x.abs(), -1.0, 3.0, 1e-12);
        assert!((v - 5.0).abs() < 1e-11);
    }
}
