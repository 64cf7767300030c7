//! Python bindings: thin wrappers over the bentwire crate, one class
//! per bend description plus shared result types. Library failures
//! surface as ValueError carrying the Rust error text.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bentwire as bw;

fn err(e: bw::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Reflection and transmission amplitudes at one wavenumber.
#[pyclass(frozen, module = "bentwire")]
struct Scattering {
    inner: bw::ScatteringAmplitudes,
}

#[pymethods]
impl Scattering {
    #[getter]
    fn r(&self) -> Complex64 {
        self.inner.r
    }

    #[getter]
    fn t(&self) -> Complex64 {
        self.inner.t
    }

    #[getter]
    fn k(&self) -> f64 {
        self.inner.k
    }

    fn reflection(&self) -> f64 {
        self.inner.reflection()
    }

    fn transmission(&self) -> f64 {
        self.inner.transmission()
    }

    fn unitarity_defect(&self) -> f64 {
        self.inner.unitarity_defect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Scattering(k={}, r={}, t={})",
            self.inner.k, self.inner.r, self.inner.t
        )
    }
}

/// Effective junction coefficients (a, b, c, d) with ad - bc = 1.
#[pyclass(frozen, module = "bentwire")]
struct Coefficients {
    inner: bw::EffectiveCoefficients,
}

#[pymethods]
impl Coefficients {
    #[getter]
    fn a(&self) -> f64 {
        self.inner.a
    }

    #[getter]
    fn b(&self) -> f64 {
        self.inner.b
    }

    #[getter]
    fn c(&self) -> f64 {
        self.inner.c
    }

    #[getter]
    fn d(&self) -> f64 {
        self.inner.d
    }

    fn residual(&self) -> f64 {
        self.inner.residual()
    }

    /// View as an idealized junction with gamma = 0.
    fn as_boundary_condition(&self) -> PyResult<BoundaryCondition> {
        Ok(BoundaryCondition {
            inner: self.inner.to_boundary_condition().map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Coefficients(a={}, b={}, c={}, d={})",
            self.inner.a, self.inner.b, self.inner.c, self.inner.d
        )
    }
}

/// Idealized corner: a point junction Y(0+) = e^{i gamma} K Y(0-)
/// with K in SL(2, R).
#[pyclass(frozen, module = "bentwire")]
struct BoundaryCondition {
    inner: bw::BoundaryCondition,
}

#[pymethods]
impl BoundaryCondition {
    #[new]
    #[pyo3(signature = (k_matrix, gamma = 0.0))]
    fn new(k_matrix: [[f64; 2]; 2], gamma: f64) -> PyResult<Self> {
        Ok(BoundaryCondition {
            inner: bw::BoundaryCondition::new(k_matrix, gamma).map_err(err)?,
        })
    }

    /// The transparent junction K = I, gamma = 0.
    #[staticmethod]
    fn identity() -> Self {
        BoundaryCondition {
            inner: bw::BoundaryCondition::identity(),
        }
    }

    #[getter]
    fn k_matrix(&self) -> [[f64; 2]; 2] {
        self.inner.k_matrix()
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.inner.gamma()
    }

    fn scatter(&self, k: f64) -> PyResult<Scattering> {
        Ok(Scattering {
            inner: bw::scatter_idealized(&self.inner, k).map_err(err)?,
        })
    }

    /// Decay rates kappa of the bound states (E = -kappa^2), ascending.
    fn bound_states(&self) -> Vec<f64> {
        bw::bound_state_idealized(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "BoundaryCondition(k_matrix={:?}, gamma={})",
            self.inner.k_matrix(),
            self.inner.gamma()
        )
    }
}

/// Open-book bend: a circular arc of radius R turning through 2 eta.
#[pyclass(frozen, module = "bentwire")]
struct OpenBook {
    params: bw::OpenBookParams,
}

#[pymethods]
impl OpenBook {
    #[new]
    fn new(radius: f64, eta: f64) -> PyResult<Self> {
        Ok(OpenBook {
            params: bw::OpenBookParams::new(radius, eta).map_err(err)?,
        })
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.params.radius()
    }

    #[getter]
    fn eta(&self) -> f64 {
        self.params.eta()
    }

    fn scatter(&self, k: f64) -> PyResult<Scattering> {
        Ok(Scattering {
            inner: bw::scatter_openbook(&self.params, k).map_err(err)?,
        })
    }

    /// Effective junction coefficients in the k -> 0 limit.
    fn coeffs(&self) -> PyResult<Coefficients> {
        Ok(Coefficients {
            inner: bw::coeffs_openbook(&self.params).map_err(err)?,
        })
    }

    /// Decay rate kappa of the single bound state.
    fn bound_state(&self) -> PyResult<f64> {
        bw::bound_state_openbook(&self.params).map_err(err)
    }

    /// The same bend as a curvature profile for the ODE route.
    fn profile(&self) -> PyResult<Profile> {
        Ok(Profile {
            inner: bw::CurvatureProfile::open_book(self.params.radius(), self.params.eta())
                .map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("OpenBook(radius={}, eta={})", self.params.radius(), self.params.eta())
    }
}

/// Exponentially smoothed corner with curvature
/// (eta / 2 Lambda) e^{-|s| / 2 Lambda}.
#[pyclass(frozen, module = "bentwire")]
struct ExponentialModel {
    params: bw::ExpParams,
}

#[pymethods]
impl ExponentialModel {
    #[new]
    fn new(lambda_len: f64, eta: f64) -> PyResult<Self> {
        Ok(ExponentialModel {
            params: bw::ExpParams::new(lambda_len, eta).map_err(err)?,
        })
    }

    #[getter]
    fn lambda_len(&self) -> f64 {
        self.params.lambda_len()
    }

    #[getter]
    fn eta(&self) -> f64 {
        self.params.eta()
    }

    fn scatter(&self, k: f64) -> PyResult<Scattering> {
        Ok(Scattering {
            inner: bw::scatter_exponential(&self.params, k).map_err(err)?,
        })
    }

    fn coeffs(&self) -> PyResult<Coefficients> {
        Ok(Coefficients {
            inner: bw::coeffs_exponential(&self.params).map_err(err)?,
        })
    }

    fn bound_state(&self) -> PyResult<f64> {
        bw::bound_state_exponential(&self.params).map_err(err)
    }

    fn profile(&self) -> PyResult<Profile> {
        Ok(Profile {
            inner: bw::CurvatureProfile::exponential(
                self.params.lambda_len(),
                self.params.eta(),
            )
            .map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "ExponentialModel(lambda_len={}, eta={})",
            self.params.lambda_len(),
            self.params.eta()
        )
    }
}

/// Arbitrary bend described by signed curvature over a finite support,
/// handled by direct integration of the wire equation.
#[pyclass(frozen, module = "bentwire")]
struct Profile {
    inner: bw::CurvatureProfile,
}

#[pymethods]
impl Profile {
    #[staticmethod]
    fn open_book(radius: f64, eta: f64) -> PyResult<Self> {
        Ok(Profile {
            inner: bw::CurvatureProfile::open_book(radius, eta).map_err(err)?,
        })
    }

    #[staticmethod]
    fn exponential(lambda_len: f64, eta: f64) -> PyResult<Self> {
        Ok(Profile {
            inner: bw::CurvatureProfile::exponential(lambda_len, eta).map_err(err)?,
        })
    }

    #[staticmethod]
    fn straight(s_min: f64, s_max: f64) -> PyResult<Self> {
        Ok(Profile {
            inner: bw::CurvatureProfile::straight(s_min, s_max).map_err(err)?,
        })
    }

    /// Cubic spline through (s, curvature) samples, zero outside.
    #[staticmethod]
    fn from_samples(samples: Vec<(f64, f64)>) -> PyResult<Self> {
        Ok(Profile {
            inner: bw::CurvatureProfile::from_samples(&samples).map_err(err)?,
        })
    }

    fn curvature(&self, s: f64) -> f64 {
        self.inner.curvature(s)
    }

    fn support(&self) -> (f64, f64) {
        self.inner.support()
    }

    fn turning_angle(&self) -> f64 {
        self.inner.turning_angle()
    }

    fn scatter(&self, k: f64) -> PyResult<Scattering> {
        Ok(Scattering {
            inner: bw::scatter_numeric(&self.inner, k).map_err(err)?,
        })
    }

    /// Effective coefficients at k = 0, with the fit-quality gate.
    fn fit_coefficients(&self) -> PyResult<Coefficients> {
        Ok(Coefficients {
            inner: bw::fit_coefficients(&self.inner).map_err(err)?,
        })
    }

    /// The k-dependent junction K(k), ungated.
    fn effective_junction(&self, k: f64) -> PyResult<Coefficients> {
        Ok(Coefficients {
            inner: bw::effective_junction(&self.inner, k).map_err(err)?,
        })
    }

    fn bound_states(&self) -> Vec<f64> {
        bw::bound_state_numeric(&self.inner)
    }

    fn __repr__(&self) -> String {
        let (lo, hi) = self.inner.support();
        format!("Profile(support=({lo}, {hi}))")
    }
}

#[pymodule(name = "bentwire")]
fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<BoundaryCondition>()?;
    m.add_class::<OpenBook>()?;
    m.add_class::<ExponentialModel>()?;
    m.add_class::<Profile>()?;
    m.add_class::<Scattering>()?;
    m.add_class::<Coefficients>()?;
    Ok(())
}
