use thiserror::Error;

/// Failure modes shared by the solver modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma evaluated at (or within 1e-14 of) a non-positive integer.
    #[error("gamma pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    /// A power series failed to reach its stopping criterion.
    #[error("series did not converge within {max_terms} terms (argument {x})")]
    NonConvergence { max_terms: usize, x: f64 },

    /// Argument outside the validity region of a special function.
    #[error("special-function domain: {0}")]
    SpecFunDomain(String),

    /// Invalid physical parameter or argument.
    #[error("domain: {0}")]
    Domain(String),

    /// The junction linear system is singular at the requested wavenumber.
    #[error("junction system singular at k = {k}")]
    SingularJunction { k: f64 },

    /// The effective coefficient a vanished; the idealized reduction needs a != 0.
    #[error("degenerate coefficients: |a| = {a_abs:e} below tolerance")]
    DegenerateCoefficient { a_abs: f64 },

    /// No root of the bound-state condition inside the search window.
    #[error("no bound state in (0, {kappa_max})")]
    NoBoundState { kappa_max: f64 },

    /// Transfer-matrix determinant drifted past the accuracy guard.
    #[error("RK4 step too coarse: |det M - 1| = {drift:e}")]
    StepTooCoarse { drift: f64 },

    /// Malformed curvature profile (ordering, support, or file contents).
    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    /// Malformed sweep request (axis/range/model combination).
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    /// Computed |r|^2 + |t|^2 strayed from 1 beyond the model's stated
    /// tolerance; checked before any CSV row is emitted.
    #[error("unitarity defect {defect:e} at k = {k} exceeds the model tolerance")]
    UnitarityViolation { defect: f64, k: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
