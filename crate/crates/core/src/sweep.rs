//! Sweep plumbing behind the command-line interface: models resolved
//! from flag-level data, inclusive axis ranges, and CSV writers.
//!
//! Output rules the CLI promises:
//! * every float is printed with 15 significant digits ({:.14e}),
//!   missing values as a literal lowercase `nan`, so identical
//!   invocations produce byte-identical CSV;
//! * every scattering row is checked for |r|^2 + |t|^2 = 1 against the
//!   model's tolerance before it is written (exact models 1e-12, series
//!   and RK4 backed models 1e-10) and the whole sweep aborts on a
//!   violation;
//! * a missing bound state is a `nan` field, not an error.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::boundary::{bound_state_idealized, scatter_idealized, BoundaryCondition, ScatteringAmplitudes};
use crate::error::{Error, Result};
use crate::expmodel::{bound_state_exponential, coeffs_exponential, scatter_exponential, ExpParams};
use crate::numeric::{
    bound_state_numeric, fit_coefficients, scatter_numeric, CurvatureProfile,
    EffectiveCoefficients,
};
use crate::openbook::{bound_state_openbook, coeffs_openbook, scatter_openbook, OpenBookParams};

pub const SCATTER_HEADER: &str = "axis,|r|^2,|t|^2,re_r,im_r,re_t,im_t";
pub const COEFFS_HEADER: &str = "axis,a,b,c,d,residual";
pub const BOUND_STATE_HEADER: &str = "eta,kappa,kappa_idealized";

/// Inclusive sweep range `lo:hi:n`; a bare number is the single-point
/// range `x:x:1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Range {
    pub fn single(x: f64) -> Self {
        Range { lo: x, hi: x, n: 1 }
    }

    /// More than one grid point, i.e. this range can serve as an axis.
    pub fn is_sweep(&self) -> bool {
        self.n >= 2
    }

    /// The n grid points, endpoints included.
    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n).map(|i| self.lo + step * i as f64).collect()
    }
}

impl std::str::FromStr for Range {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSweep(format!("range `{s}`: {msg}"));
        let parts: Vec<&str> = s.split(':').collect();
        let (lo, hi, n) = match parts.as_slice() {
            [x] => {
                let x: f64 = x.trim().parse().map_err(|_| bad("not a number"))?;
                (x, x, 1)
            }
            [lo, hi, n] => {
                let lo: f64 = lo.trim().parse().map_err(|_| bad("lo is not a number"))?;
                let hi: f64 = hi.trim().parse().map_err(|_| bad("hi is not a number"))?;
                let n: usize = n.trim().parse().map_err(|_| bad("n is not a count"))?;
                (lo, hi, n)
            }
            _ => return Err(bad("expected `lo:hi:n` or a single number")),
        };
        if !lo.is_finite() || !hi.is_finite() {
            return Err(bad("endpoints must be finite"));
        }
        if n == 0 {
            return Err(bad("n must be at least 1"));
        }
        if n == 1 && lo != hi {
            return Err(bad("a single-point range needs lo = hi"));
        }
        if n >= 2 && !(lo < hi) {
            return Err(bad("needs lo < hi for n >= 2"));
        }
        Ok(Range { lo, hi, n })
    }
}

/// Which quantity runs along the CSV's first column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    K,
    Eta,
}

/// Flag-level model description. `eta: None` on the bend models means
/// the eta axis supplies it per grid point.
#[derive(Debug, Clone)]
pub enum ModelSpec {
    Idealized { k_matrix: [[f64; 2]; 2], gamma: f64 },
    OpenBook { radius: f64, eta: Option<f64> },
    Exponential { lambda_len: f64, eta: Option<f64> },
    Numeric { profile: CurvatureProfile },
}

impl ModelSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::Idealized { .. } => "idealized",
            ModelSpec::OpenBook { .. } => "openbook",
            ModelSpec::Exponential { .. } => "exponential",
            ModelSpec::Numeric { .. } => "numeric",
        }
    }

    /// Instantiate at a concrete eta (from the axis) or at the stored
    /// fixed parameters. Supplying an axis eta to a model without an
    /// eta parameter is a spec error, as is omitting it on a bend.
    fn resolve(&self, axis_eta: Option<f64>) -> Result<Resolved> {
        match self {
            ModelSpec::Idealized { k_matrix, gamma } => {
                if axis_eta.is_some() {
                    return Err(Error::InvalidSweep(
                        "the idealized model has no eta parameter to sweep".into(),
                    ));
                }
                let bc = BoundaryCondition::new_with_tolerance(*k_matrix, *gamma, 1e-9)?;
                Ok(Resolved::Idealized(bc))
            }
            ModelSpec::OpenBook { radius, eta } => {
                let eta = axis_eta.or(*eta).ok_or_else(|| {
                    Error::InvalidSweep("the open-book model needs --eta".into())
                })?;
                Ok(Resolved::OpenBook(OpenBookParams::new(*radius, eta)?))
            }
            ModelSpec::Exponential { lambda_len, eta } => {
                let eta = axis_eta.or(*eta).ok_or_else(|| {
                    Error::InvalidSweep("the exponential model needs --eta".into())
                })?;
                Ok(Resolved::Exponential(ExpParams::new(*lambda_len, eta)?))
            }
            ModelSpec::Numeric { profile } => {
                if axis_eta.is_some() {
                    return Err(Error::InvalidSweep(
                        "a numeric profile fixes its own shape; sweep eta with openbook or exponential".into(),
                    ));
                }
                Ok(Resolved::Numeric(profile.clone()))
            }
        }
    }
}

enum Resolved {
    Idealized(BoundaryCondition),
    OpenBook(OpenBookParams),
    Exponential(ExpParams),
    Numeric(CurvatureProfile),
}

impl Resolved {
    fn scatter(&self, k: f64) -> Result<ScatteringAmplitudes> {
        match self {
            Resolved::Idealized(bc) => scatter_idealized(bc, k),
            Resolved::OpenBook(p) => scatter_openbook(p, k),
            Resolved::Exponential(p) => scatter_exponential(p, k),
            Resolved::Numeric(p) => scatter_numeric(p, k),
        }
    }

    fn coeffs(&self) -> Result<EffectiveCoefficients> {
        match self {
            // the junction matrix already is the coefficient set; keep
            // d as given so the residual reports the actual det drift
            Resolved::Idealized(bc) => Ok(EffectiveCoefficients {
                a: bc.a(),
                b: bc.b(),
                c: bc.c(),
                d: bc.d(),
            }),
            Resolved::OpenBook(p) => coeffs_openbook(p),
            Resolved::Exponential(p) => coeffs_exponential(p),
            Resolved::Numeric(p) => fit_coefficients(p),
        }
    }

    /// Ground-state decay rate, `None` when nothing is bound.
    fn bound_state(&self) -> Result<Option<f64>> {
        let squash = |r: Result<f64>| match r {
            Ok(kappa) => Ok(Some(kappa)),
            Err(Error::NoBoundState { .. }) => Ok(None),
            Err(e) => Err(e),
        };
        match self {
            Resolved::Idealized(bc) => Ok(bound_state_idealized(bc).last().copied()),
            Resolved::OpenBook(p) => squash(bound_state_openbook(p)),
            Resolved::Exponential(p) => squash(bound_state_exponential(p)),
            Resolved::Numeric(p) => Ok(bound_state_numeric(p).last().copied()),
        }
    }

    /// Prediction of the idealized junction built from this model's
    /// effective coefficients.
    fn bound_state_idealized_prediction(&self) -> Result<Option<f64>> {
        let bc = self.coeffs()?.to_boundary_condition()?;
        Ok(bound_state_idealized(&bc).last().copied())
    }

    /// The eta to print on single-shot rows; NaN when not applicable.
    fn eta_label(&self) -> f64 {
        match self {
            Resolved::Idealized(_) => f64::NAN,
            Resolved::OpenBook(p) => p.eta(),
            Resolved::Exponential(p) => p.eta(),
            Resolved::Numeric(p) => 0.5 * p.turning_angle(),
        }
    }

    fn unitarity_tol(&self) -> f64 {
        match self {
            Resolved::Idealized(_) | Resolved::OpenBook(_) => 1e-12,
            Resolved::Exponential(_) | Resolved::Numeric(_) => 1e-10,
        }
    }
}

fn check_unitarity(s: &ScatteringAmplitudes, tol: f64) -> Result<()> {
    let defect = s.unitarity_defect();
    if defect > tol {
        return Err(Error::UnitarityViolation { defect, k: s.k });
    }
    Ok(())
}

/// 15 significant digits; NaN prints as a lowercase `nan` field.
fn fmt_field(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.14e}")
    }
}

fn push_row(out: &mut String, fields: &[f64]) {
    for (i, &x) in fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&fmt_field(x));
    }
    out.push('\n');
}

fn scatter_row(out: &mut String, axis: f64, s: &ScatteringAmplitudes) {
    push_row(
        out,
        &[axis, s.reflection(), s.transmission(), s.r.re, s.r.im, s.t.re, s.t.im],
    );
}

/// The per-point model instances of a sweep: one shared instance on a
/// k axis, a fresh one per eta on an eta axis.
fn resolve_axis(
    model: &ModelSpec,
    axis: Axis,
    range: &Range,
    k_fixed: Option<f64>,
) -> Result<Vec<(f64, Resolved, f64)>> {
    let mut rows = Vec::with_capacity(range.n);
    match axis {
        Axis::K => {
            for k in range.points() {
                rows.push((k, model.resolve(None)?, k));
            }
        }
        Axis::Eta => {
            let k = k_fixed.ok_or_else(|| {
                Error::InvalidSweep("an eta axis needs a fixed --k value".into())
            })?;
            for eta in range.points() {
                rows.push((eta, model.resolve(Some(eta))?, k));
            }
        }
    }
    Ok(rows)
}

/// Scattering sweep: one CSV row per grid point of `range`, which is
/// the k axis unless `axis` says eta (then `k_fixed` holds the
/// wavenumber and the model is rebuilt per point).
pub fn run_scatter(
    model: &ModelSpec,
    axis: Axis,
    range: &Range,
    k_fixed: Option<f64>,
    out: &mut String,
) -> Result<()> {
    out.push_str(SCATTER_HEADER);
    out.push('\n');
    for (axis_value, resolved, k) in resolve_axis(model, axis, range, k_fixed)? {
        let s = resolved.scatter(k)?;
        check_unitarity(&s, resolved.unitarity_tol())?;
        scatter_row(out, axis_value, &s);
    }
    Ok(())
}

/// Effective-coefficient table. With an eta range the bend is rebuilt
/// per point; without one, a single row at the model's own eta.
pub fn run_coeffs(model: &ModelSpec, eta_range: Option<&Range>, out: &mut String) -> Result<()> {
    out.push_str(COEFFS_HEADER);
    out.push('\n');
    let mut write = |axis: f64, co: &EffectiveCoefficients| {
        push_row(out, &[axis, co.a, co.b, co.c, co.d, co.residual()]);
    };
    match eta_range {
        Some(range) => {
            for eta in range.points() {
                let resolved = model.resolve(Some(eta))?;
                write(eta, &resolved.coeffs()?);
            }
        }
        None => {
            let resolved = model.resolve(None)?;
            write(resolved.eta_label(), &resolved.coeffs()?);
        }
    }
    Ok(())
}

/// Bound-state table (eta, kappa, kappa_idealized). Missing states
/// print as nan fields; kappa_idealized comes from the idealized
/// junction built out of the model's own effective coefficients.
pub fn run_bound_state(
    model: &ModelSpec,
    eta_range: Option<&Range>,
    out: &mut String,
) -> Result<()> {
    out.push_str(BOUND_STATE_HEADER);
    out.push('\n');
    let write = |out: &mut String, eta: f64, resolved: &Resolved| -> Result<()> {
        let kappa = resolved.bound_state()?.unwrap_or(f64::NAN);
        let kappa_ideal = resolved
            .bound_state_idealized_prediction()?
            .unwrap_or(f64::NAN);
        push_row(out, &[eta, kappa, kappa_ideal]);
        Ok(())
    };
    match eta_range {
        Some(range) => {
            for eta in range.points() {
                let resolved = model.resolve(Some(eta))?;
                write(out, eta, &resolved)?;
            }
        }
        None => {
            let resolved = model.resolve(None)?;
            write(out, resolved.eta_label(), &resolved)?;
        }
    }
    Ok(())
}

/// Transmission comparison: shared axis column, one |t|^2 column per
/// model, suffixed with the model name.
pub fn run_compare(
    models: &[ModelSpec],
    axis: Axis,
    range: &Range,
    k_fixed: Option<f64>,
    out: &mut String,
) -> Result<()> {
    if models.len() < 2 {
        return Err(Error::InvalidSweep("compare needs two models".into()));
    }
    out.push_str("axis");
    for m in models {
        let _ = write!(out, ",|t|^2_{}", m.name());
    }
    out.push('\n');

    let mut columns: Vec<Vec<(f64, f64)>> = Vec::new();
    for m in models {
        let mut col = Vec::with_capacity(range.n);
        for (axis_value, resolved, k) in resolve_axis(m, axis, range, k_fixed)? {
            let s = resolved.scatter(k)?;
            check_unitarity(&s, resolved.unitarity_tol())?;
            col.push((axis_value, s.transmission()));
        }
        columns.push(col);
    }
    for i in 0..range.n {
        let mut fields = vec![columns[0][i].0];
        fields.extend(columns.iter().map(|col| col[i].1));
        push_row(out, &fields);
    }
    Ok(())
}

/// On-disk curvature profile: `kind` picks the preset or table form.
///
/// ```json
/// {"kind": "openbook", "params": {"R": 1.0, "eta": 0.785398}}
/// {"kind": "exponential", "params": {"Lambda": 0.3, "eta": 0.196}}
/// {"kind": "table", "samples": [[-1.0, 0.0], [0.0, 1.0], [1.0, 0.0]]}
/// ```
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileFile {
    kind: String,
    #[serde(default)]
    params: Option<ProfileParams>,
    #[serde(default)]
    samples: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileParams {
    #[serde(rename = "R")]
    radius: Option<f64>,
    #[serde(rename = "Lambda")]
    lambda: Option<f64>,
    eta: Option<f64>,
}

/// Parse a profile document (JSON) into a curvature profile.
pub fn parse_profile(text: &str) -> Result<CurvatureProfile> {
    let file: ProfileFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidProfile(format!("parse: {e}")))?;
    let need = |x: Option<f64>, name: &str, kind: &str| {
        x.ok_or_else(|| Error::InvalidProfile(format!("kind `{kind}` needs params.{name}")))
    };
    match file.kind.as_str() {
        "openbook" => {
            let p = file
                .params
                .ok_or_else(|| Error::InvalidProfile("kind `openbook` needs params".into()))?;
            CurvatureProfile::open_book(need(p.radius, "R", "openbook")?, need(p.eta, "eta", "openbook")?)
        }
        "exponential" => {
            let p = file
                .params
                .ok_or_else(|| Error::InvalidProfile("kind `exponential` needs params".into()))?;
            CurvatureProfile::exponential(
                need(p.lambda, "Lambda", "exponential")?,
                need(p.eta, "eta", "exponential")?,
            )
        }
        "table" => {
            let samples = file
                .samples
                .ok_or_else(|| Error::InvalidProfile("kind `table` needs samples".into()))?;
            let pairs: Vec<(f64, f64)> = samples.iter().map(|&[s, c]| (s, c)).collect();
            CurvatureProfile::from_samples(&pairs)
        }
        other => Err(Error::InvalidProfile(format!(
            "unknown kind `{other}` (expected table, openbook, or exponential)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn idealized(k_matrix: [[f64; 2]; 2]) -> ModelSpec {
        ModelSpec::Idealized { k_matrix, gamma: 0.0 }
    }

    #[test]
    fn range_parsing() {
        let r: Range = "0.1:5:50".parse().unwrap();
        assert_eq!(r, Range { lo: 0.1, hi: 5.0, n: 50 });
        let r: Range = "1:1:1".parse().unwrap();
        assert_eq!(r, Range { lo: 1.0, hi: 1.0, n: 1 });
        let r: Range = "0.7".parse().unwrap();
        assert_eq!(r, Range::single(0.7));

        for bad in ["", "1:2", "2:1:5", "1:2:0", "1:1:3", "a:b:c", "1:2:3:4", "inf:2:3"] {
            assert!(bad.parse::<Range>().is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn range_points_hit_both_endpoints() {
        let pts = Range { lo: 0.5, hi: 2.5, n: 5 }.points();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], 0.5);
        assert_eq!(pts[4], 2.5);
        assert!((pts[2] - 1.5).abs() < 1e-15);
        assert_eq!(Range::single(3.0).points(), vec![3.0]);
    }

    #[test]
    fn field_formatting() {
        assert_eq!(fmt_field(f64::NAN), "nan");
        assert_eq!(fmt_field(1.0), "1.00000000000000e0");
        assert_eq!(fmt_field(4.0 / 9.0), "4.44444444444444e-1");
        assert_eq!(fmt_field(-0.25), "-2.50000000000000e-1");
    }

    #[test]
    fn scatter_single_point_resonance() {
        let mut out = String::new();
        run_scatter(
            &idealized([[2.0, 1.0], [1.0, 1.0]]),
            Axis::K,
            &"1:1:1".parse().unwrap(),
            None,
            &mut out,
        )
        .unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), SCATTER_HEADER);
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "1.00000000000000e0");
        let t2: f64 = row[2].parse().unwrap();
        assert!((t2 - 4.0 / 9.0).abs() < 1e-14);
        assert!(lines.next().is_none());
    }

    #[test]
    fn scatter_eta_axis_rebuilds_the_bend() {
        let model = ModelSpec::OpenBook { radius: 1.0, eta: None };
        let mut out = String::new();
        run_scatter(&model, Axis::Eta, &"0.3:1.2:4".parse().unwrap(), Some(0.5), &mut out)
            .unwrap();
        assert_eq!(out.lines().count(), 5);
        // larger bend angle scatters more at fixed k
        let t2: Vec<f64> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
            .collect();
        assert!(t2[0] > t2[3]);
    }

    #[test]
    fn eta_axis_requires_fixed_k_and_an_eta_bearing_model() {
        let mut out = String::new();
        let ob = ModelSpec::OpenBook { radius: 1.0, eta: None };
        assert!(matches!(
            run_scatter(&ob, Axis::Eta, &"0.3:1.2:4".parse().unwrap(), None, &mut out),
            Err(Error::InvalidSweep(_))
        ));
        assert!(matches!(
            run_scatter(
                &idealized([[1.0, 0.0], [0.0, 1.0]]),
                Axis::Eta,
                &"0.3:1.2:4".parse().unwrap(),
                Some(1.0),
                &mut out
            ),
            Err(Error::InvalidSweep(_))
        ));
    }

    #[test]
    fn coeffs_single_row_echoes_junction_matrix() {
        let mut out = String::new();
        run_coeffs(&idealized([[2.0, 1.0], [1.0, 1.0]]), None, &mut out).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), COEFFS_HEADER);
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "nan");
        assert_eq!(row[1], "2.00000000000000e0");
        assert_eq!(row[5], "0.00000000000000e0");
    }

    #[test]
    fn coeffs_eta_sweep_on_the_arc() {
        let model = ModelSpec::OpenBook { radius: 2.0, eta: None };
        let mut out = String::new();
        run_coeffs(&model, Some(&"0.2:1.4:7".parse().unwrap()), &mut out).unwrap();
        assert_eq!(out.lines().count(), 8);
        for line in out.lines().skip(1) {
            let resid: f64 = line.split(',').nth(5).unwrap().parse().unwrap();
            assert!(resid.abs() < 1e-13);
        }
    }

    #[test]
    fn bound_state_identity_junction_prints_nan_row() {
        let mut out = String::new();
        run_bound_state(&idealized([[1.0, 0.0], [0.0, 1.0]]), None, &mut out).unwrap();
        assert_eq!(out, format!("{BOUND_STATE_HEADER}\nnan,nan,nan\n"));
    }

    #[test]
    fn bound_state_openbook_row_carries_both_kappas() {
        let model = ModelSpec::OpenBook { radius: 1.0, eta: Some(PI / 16.0) };
        let mut out = String::new();
        run_bound_state(&model, None, &mut out).unwrap();
        let row: Vec<f64> = out
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .map(|f| f.parse().unwrap())
            .collect();
        assert!((row[0] - PI / 16.0).abs() < 1e-15);
        assert!((row[1] - 0.0487755705361028).abs() < 1e-10);
        // small angle: idealized prediction within 1%
        assert!((row[2] / row[1] - 1.0).abs() < 0.01);
    }

    #[test]
    fn compare_duplicates_agree_exactly() {
        let m = ModelSpec::OpenBook { radius: 1.0, eta: Some(PI / 4.0) };
        let mut out = String::new();
        run_compare(
            &[m.clone(), m],
            Axis::K,
            &"0.2:1.0:5".parse().unwrap(),
            None,
            &mut out,
        )
        .unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), "axis,|t|^2_openbook,|t|^2_openbook");
        for line in lines {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f[1], f[2]);
        }
    }

    #[test]
    fn profile_documents_parse() {
        let p = parse_profile(r#"{"kind": "openbook", "params": {"R": 1.0, "eta": 0.5}}"#).unwrap();
        assert!((p.turning_angle() - 1.0).abs() < 1e-12);
        let p =
            parse_profile(r#"{"kind": "exponential", "params": {"Lambda": 0.3, "eta": 0.5}}"#)
                .unwrap();
        assert!((p.turning_angle() - 1.0).abs() < 1e-8);
        let p = parse_profile(
            r#"{"kind": "table", "samples": [[-1.0, 0.0], [0.0, 1.0], [1.0, 0.0]]}"#,
        )
        .unwrap();
        assert_eq!(p.support(), (-1.0, 1.0));

        for bad in [
            "not json",
            r#"{"kind": "wiggly"}"#,
            r#"{"kind": "openbook"}"#,
            r#"{"kind": "openbook", "params": {"R": 1.0}}"#,
            r#"{"kind": "openbook", "params": {"R": 1.0, "eta": 0.5}, "extra": 1}"#,
            r#"{"kind": "table"}"#,
            r#"{"kind": "table", "samples": [[0.5, 1.0], [1.0, 0.0]]}"#,
        ] {
            assert!(
                matches!(parse_profile(bad), Err(Error::InvalidProfile(_))),
                "accepted: {bad}"
            );
        }
    }

    #[test]
    fn byte_identical_reruns() {
        let model = ModelSpec::Exponential { lambda_len: 0.3, eta: Some(0.9) };
        let mut a = String::new();
        let mut b = String::new();
        run_scatter(&model, Axis::K, &"0.1:2:25".parse().unwrap(), None, &mut a).unwrap();
        run_scatter(&model, Axis::K, &"0.1:2:25".parse().unwrap(), None, &mut b).unwrap();
        assert_eq!(a, b);
    }
}
