//! Shared helpers for the integration suites: independently coded
//! oracles (shifted Stirling gamma, term-by-term Bessel series) and a
//! well-conditioned random junction sampler.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng as _;
use rand::SeedableRng as _;
use rand_chacha::ChaCha8Rng;

/// Stirling coefficients B_{2n} / (2n (2n-1)) for n = 1..7.
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
];

/// ln Gamma via the asymptotic series; needs Re(z) >= 40 to push the
/// series truncation error below 1e-25.
fn ln_gamma_asymptotic(z: Complex64) -> Complex64 {
    let half_ln_two_pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let inv2 = 1.0 / (z * z);
    let mut power = 1.0 / z;
    let mut series = Complex64::new(0.0, 0.0);
    for c in STIRLING {
        series += c * power;
        power *= inv2;
    }
    (z - 0.5) * z.ln() - z + half_ln_two_pi + series
}

/// Independent Gamma oracle: recurrence shift into Re(z) >= 40, then
/// the asymptotic series. exp() of the log difference makes the result
/// insensitive to log branch choices. Keep z away from the poles.
pub fn gamma_oracle(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut log_shift = Complex64::new(0.0, 0.0);
    while w.re < 40.0 {
        log_shift += w.ln();
        w += 1.0;
    }
    (ln_gamma_asymptotic(w) - log_shift).exp()
}

/// Independent Bessel J oracle: every term computed from scratch as
/// exp((nu + 2m) ln(x/2)) / (m! Gamma(nu + m + 1)), no term recurrence
/// shared with the production code. Needs x > 0.
pub fn bessel_j_oracle(nu: Complex64, x: f64) -> Complex64 {
    let ln_half_x = (0.5 * x).ln();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut m_factorial = 1.0f64;
    for m in 0..80 {
        if m > 0 {
            m_factorial *= m as f64;
        }
        let term = ((nu + 2.0 * m as f64) * ln_half_x).exp()
            / (m_factorial * gamma_oracle(nu + (m as f64 + 1.0)));
        sum += if m % 2 == 0 { term } else { -term };
        if m > 4 && term.norm() < 1e-20 * sum.norm().max(1e-300) {
            break;
        }
    }
    sum
}

/// Seeded sampler of self-adjoint junction data. K is built as
/// rotation * diag(e^l, e^-l) * rotation, which reaches every matrix
/// in SL2(R) while keeping entries bounded by e^1.5, so determinant
/// and unitarity hold near machine precision.
pub struct JunctionSampler(ChaCha8Rng);

impl JunctionSampler {
    pub fn new(seed: u64) -> Self {
        JunctionSampler(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn k_matrix(&mut self) -> [[f64; 2]; 2] {
        let tau = std::f64::consts::TAU;
        let th1 = self.0.gen_range(0.0..tau);
        let th2 = self.0.gen_range(0.0..tau);
        let u = self.0.gen_range(-1.5..1.5f64).exp();
        let (s1, c1) = th1.sin_cos();
        let (s2, c2) = th2.sin_cos();
        [
            [c1 * u * c2 - s1 / u * s2, -c1 * u * s2 - s1 / u * c2],
            [s1 * u * c2 + c1 / u * s2, -s1 * u * s2 + c1 / u * c2],
        ]
    }

    pub fn gamma(&mut self) -> f64 {
        self.0.gen_range(-std::f64::consts::PI..std::f64::consts::PI)
    }

    /// Uniform in (0, hi], floored away from zero.
    pub fn wavenumber(&mut self, hi: f64) -> f64 {
        self.0.gen_range(0.0..1.0f64).max(1e-7) * hi
    }
}
