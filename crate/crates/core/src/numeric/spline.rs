//! Natural cubic spline through user-supplied curvature samples.

use crate::error::{Error, Result};

/// Interpolates sample points with a natural cubic spline and clamps
/// to zero outside the sampled range. The clamp can introduce a step
/// at the edges when the outermost samples are nonzero; that is the
/// caller's profile choice, not smoothed over here.
#[derive(Debug, Clone)]
pub(crate) struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    y2: Vec<f64>,
}

impl CubicSpline {
    pub fn natural(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidProfile(format!(
                "need at least 2 samples, got {}",
                points.len()
            )));
        }
        for pair in points.windows(2) {
            if !(pair[1].0 > pair[0].0) {
                return Err(Error::InvalidProfile(format!(
                    "sample abscissae must be strictly increasing, got {} then {}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        for &(s, c) in points {
            if !s.is_finite() || !c.is_finite() {
                return Err(Error::InvalidProfile(format!(
                    "samples must be finite, got ({s}, {c})"
                )));
            }
        }
        let n = points.len();
        let x: Vec<f64> = points.iter().map(|p| p.0).collect();
        let y: Vec<f64> = points.iter().map(|p| p.1).collect();

        // tridiagonal sweep for the interior second derivatives;
        // natural ends: y2 = 0 at both boundaries
        let mut y2 = vec![0.0; n];
        let mut u = vec![0.0; n];
        for i in 1..n - 1 {
            let sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
            let p = sig * y2[i - 1] + 2.0;
            y2[i] = (sig - 1.0) / p;
            let slope_r = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
            let slope_l = (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
            u[i] = (6.0 * (slope_r - slope_l) / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (1..n - 1).rev() {
            y2[i] = y2[i] * y2[i + 1] + u[i];
        }
        Ok(CubicSpline { x, y, y2 })
    }

    pub fn x_min(&self) -> f64 {
        self.x[0]
    }

    pub fn x_max(&self) -> f64 {
        *self.x.last().unwrap()
    }

    pub fn eval(&self, s: f64) -> f64 {
        if s < self.x_min() || s > self.x_max() {
            return 0.0;
        }
        // rightmost interval whose left knot is <= s
        let hi = self.x.partition_point(|&xi| xi < s).max(1).min(self.x.len() - 1);
        let lo = hi - 1;
        let h = self.x[hi] - self.x[lo];
        let a = (self.x[hi] - s) / h;
        let b = (s - self.x[lo]) / h;
        a * self.y[lo]
            + b * self.y[hi]
            + ((a * a * a - a) * self.y2[lo] + (b * b * b - b) * self.y2[hi]) * h * h / 6.0
    }
}
