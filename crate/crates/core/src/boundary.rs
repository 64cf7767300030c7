//! Idealized zero-length corner: a self-adjoint point junction.
//!
//! The wire is straight on both sides of s = 0 and the bend is
//! compressed into a boundary condition linking the boundary vector
//! Y = (psi, psi') across the origin:
//!
//! ```text
//! Y(0+) = e^{i gamma} K Y(0-),        K real, det K = 1.
//! ```
//!
//! Unimodularity of K plus the single phase gamma is exactly the
//! self-adjointness constraint, so (K, gamma) is the most general
//! point interaction with no probability loss. Time-reversal-invariant
//! bends have gamma = 0; a smooth symmetric bend further forces the
//! diagonal entries of K equal.

use num_complex::Complex64;

use crate::error::{Error, Result};

const DET_TOL_STRICT: f64 = 1e-12;

/// Self-adjoint junction data: a unimodular real matrix K and a phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCondition {
    k: [[f64; 2]; 2],
    gamma: f64,
}

impl BoundaryCondition {
    /// Build from K = [[a, b], [c, d]] and the phase gamma.
    /// Requires |det K - 1| <= 1e-12; gamma is wrapped into (-pi, pi].
    pub fn new(k: [[f64; 2]; 2], gamma: f64) -> Result<Self> {
        Self::new_with_tolerance(k, gamma, DET_TOL_STRICT)
    }

    /// Same as [`new`](Self::new) with a caller-chosen determinant
    /// tolerance, for matrices arriving through fits or text parsing.
    /// The matrix is kept as given, never renormalized.
    pub fn new_with_tolerance(k: [[f64; 2]; 2], gamma: f64, det_tol: f64) -> Result<Self> {
        for row in &k {
            for &x in row {
                if !x.is_finite() {
                    return Err(Error::Domain(format!(
                        "junction matrix entries must be finite, got {x}"
                    )));
                }
            }
        }
        if !gamma.is_finite() {
            return Err(Error::Domain(format!("junction phase must be finite, got {gamma}")));
        }
        let det = k[0][0] * k[1][1] - k[0][1] * k[1][0];
        if (det - 1.0).abs() > det_tol {
            return Err(Error::Domain(format!(
                "junction matrix must have det = 1 within {det_tol:e}, got det = {det}"
            )));
        }
        // map into (-pi, pi]
        let mut g = gamma.rem_euclid(2.0 * std::f64::consts::PI);
        if g > std::f64::consts::PI {
            g -= 2.0 * std::f64::consts::PI;
        }
        Ok(BoundaryCondition { k, gamma: g })
    }

    /// The trivial junction: K = I, gamma = 0 (an unbroken straight wire).
    pub fn identity() -> Self {
        BoundaryCondition {
            k: [[1.0, 0.0], [0.0, 1.0]],
            gamma: 0.0,
        }
    }

    pub fn k_matrix(&self) -> [[f64; 2]; 2] {
        self.k
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn a(&self) -> f64 {
        self.k[0][0]
    }

    pub fn b(&self) -> f64 {
        self.k[0][1]
    }

    pub fn c(&self) -> f64 {
        self.k[1][0]
    }

    pub fn d(&self) -> f64 {
        self.k[1][1]
    }
}

/// Reflection and transmission amplitudes at wavenumber k.
#[derive(Debug, Clone, Copy)]
pub struct ScatteringAmplitudes {
    pub r: Complex64,
    pub t: Complex64,
    pub k: f64,
}

impl ScatteringAmplitudes {
    /// |r|^2
    pub fn reflection(&self) -> f64 {
        self.r.norm_sqr()
    }

    /// |t|^2
    pub fn transmission(&self) -> f64 {
        self.t.norm_sqr()
    }

    /// | |r|^2 + |t|^2 - 1 |, zero for any flux-conserving junction.
    pub fn unitarity_defect(&self) -> f64 {
        (self.r.norm_sqr() + self.t.norm_sqr() - 1.0).abs()
    }
}

/// The same junction in the linear-relation form A Y(0+) + B Y(0-) = 0.
#[derive(Debug, Clone, Copy)]
pub struct ABPair {
    pub a_matrix: [[Complex64; 2]; 2],
    pub b_matrix: [[Complex64; 2]; 2],
}

/// Rewrite (K, gamma) as the pair A = I, B = -e^{i gamma} K.
pub fn to_ab(bc: &BoundaryCondition) -> ABPair {
    let eg = Complex64::from_polar(1.0, bc.gamma());
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let m = bc.k_matrix();
    ABPair {
        a_matrix: [[one, z], [z, one]],
        b_matrix: [
            [-eg * m[0][0], -eg * m[0][1]],
            [-eg * m[1][0], -eg * m[1][1]],
        ],
    }
}

/// Check the two conditions that make A Y(0+) + B Y(0-) = 0 a
/// self-adjoint junction: the 2x4 block (A B) has full rank, and
/// A E A^dag = B E B^dag with E = [[0, -1], [1, 0]].
pub fn validate_ab(pair: &ABPair) -> bool {
    const TOL: f64 = 1e-10;

    // Gram matrix of the rows of (A B); rank 2 iff det != 0.
    let row = |i: usize| {
        [
            pair.a_matrix[i][0],
            pair.a_matrix[i][1],
            pair.b_matrix[i][0],
            pair.b_matrix[i][1],
        ]
    };
    let dot = |u: [Complex64; 4], v: [Complex64; 4]| -> Complex64 {
        (0..4).map(|j| u[j] * v[j].conj()).sum()
    };
    let g00 = dot(row(0), row(0));
    let g01 = dot(row(0), row(1));
    let g11 = dot(row(1), row(1));
    let gram_det = (g00 * g11 - g01 * g01.conj()).re;
    let scale = (g00.re * g11.re).max(1.0);
    if gram_det <= TOL * scale {
        return false;
    }

    // M E M^dag for a 2x2 M, with E = [[0, -1], [1, 0]]:
    // (M E M^dag)_{ij} = M_{i1} conj(M_{j0}) - M_{i0} conj(M_{j1}).
    let sympl = |m: &[[Complex64; 2]; 2], i: usize, j: usize| -> Complex64 {
        m[i][1] * m[j][0].conj() - m[i][0] * m[j][1].conj()
    };
    let mut norm = 0.0f64;
    let mut diff = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let sa = sympl(&pair.a_matrix, i, j);
            let sb = sympl(&pair.b_matrix, i, j);
            diff = diff.max((sa - sb).norm());
            norm = norm.max(sa.norm().max(sb.norm()));
        }
    }
    diff <= TOL * norm.max(1.0)
}

/// Scatter a unit plane wave incoming from s < 0 off the junction.
///
/// The ansatz psi = e^{iks} + r e^{-iks} on the left, t e^{iks} on the
/// right turns the junction relation into a 2x2 complex linear system
/// for (r, t), solved by Cramer's rule. The determinant
/// e^{i gamma} [c - b k^2 - i k (a + d)] cannot vanish at real k > 0
/// for any unimodular K (it would need a + d = 0 and c = b k^2
/// simultaneously, which det K = 1 forbids), so the singularity guard
/// is purely defensive.
pub fn scatter_idealized(bc: &BoundaryCondition, k: f64) -> Result<ScatteringAmplitudes> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!("scattering needs finite k > 0, got {k}")));
    }
    let [a, b] = [bc.a(), bc.b()];
    let [c, d] = [bc.c(), bc.d()];
    let eg = Complex64::from_polar(1.0, bc.gamma());
    let ik = Complex64::new(0.0, k);

    // rows: junction relation evaluated on (psi, psi') at 0- and 0+
    let m00 = eg * Complex64::new(a, -b * k);
    let m01 = Complex64::new(-1.0, 0.0);
    let m10 = eg * Complex64::new(c, -d * k);
    let m11 = -ik;
    let rhs0 = -eg * Complex64::new(a, b * k);
    let rhs1 = -eg * Complex64::new(c, d * k);

    let det = m00 * m11 - m01 * m10;
    let scale = m00.norm() * m11.norm() + m01.norm() * m10.norm();
    if det.norm() <= 1e-14 * scale.max(1.0) {
        return Err(Error::SingularJunction { k });
    }

    let r = (rhs0 * m11 - m01 * rhs1) / det;
    let t = (m00 * rhs1 - m10 * rhs0) / det;
    Ok(ScatteringAmplitudes { r, t, k })
}

/// Bound-state decay rates kappa of the junction, sorted ascending.
///
/// A state psi = e^{kappa s} (s < 0), proportional to e^{-kappa s}
/// (s > 0) satisfies the junction relation iff (1, -kappa) is parallel
/// to K (1, kappa)^T, i.e.
///
/// ```text
/// b kappa^2 + (a + d) kappa + c = 0,
/// ```
///
/// with energy E = -kappa^2. Only roots kappa > 0 are normalizable.
/// The phase gamma drops out entirely. Zero, one, or two states can
/// exist; the returned vector is empty when there are none.
pub fn bound_state_idealized(bc: &BoundaryCondition) -> Vec<f64> {
    let [a, b] = [bc.a(), bc.b()];
    let [c, d] = [bc.c(), bc.d()];
    let trace = a + d;

    let mut roots: Vec<f64> = if b == 0.0 {
        // det K = ad = 1 forbids a + d = 0 here, so this never divides by zero
        vec![-c / trace]
    } else {
        let disc = trace * trace - 4.0 * b * c;
        if disc < 0.0 {
            Vec::new()
        } else if disc == 0.0 {
            vec![-trace / (2.0 * b)]
        } else {
            // q carries the large root; the small one comes from c/q,
            // dodging the cancellation in the textbook formula
            let q = -0.5 * (trace + disc.sqrt().copysign(trace));
            vec![q / b, c / q]
        }
    };
    roots.retain(|&x| x > 0.0 && x.is_finite());
    roots.sort_by(|p, q| p.partial_cmp(q).unwrap());
    roots.dedup();
    roots
}
