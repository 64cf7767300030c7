use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bentwire::{
    parse_profile, run_bound_state, run_coeffs, run_compare, run_scatter, Axis, Error, ModelSpec,
    Range, Result,
};

#[derive(Parser)]
#[command(
    name = "bentwire",
    version,
    about = "Scattering and bound states on a sharply bent quantum wire",
    after_help = "Ranges are written lo:hi:n (inclusive endpoints, n points); a bare \
number is a single point. Whichever of --k and --eta is a multi-point range \
becomes the CSV axis. Angles are radians. Exit codes: 0 ok, 2 invalid \
request, 3 numeric failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reflection and transmission along a k or eta sweep
    Scatter(ScatterArgs),
    /// Effective junction coefficients a, b, c, d of a bend
    Coeffs(CoeffsArgs),
    /// Bound-state decay rate, next to the idealized prediction
    BoundState(BoundStateArgs),
    /// Transmission of several models on one shared axis
    Compare(CompareArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// Junction matrix a,b,c,d (row-major, det = 1 within 1e-9)
    #[arg(long = "K", value_name = "a,b,c,d")]
    k_matrix: Option<String>,

    /// Junction phase in radians (idealized model)
    #[arg(long, default_value_t = 0.0, value_name = "RAD")]
    gamma: f64,

    /// Arc radius (openbook model)
    #[arg(long = "R", value_name = "LEN")]
    radius: Option<f64>,

    /// Smoothing length (exponential model)
    #[arg(long = "Lambda", value_name = "LEN")]
    lambda: Option<f64>,

    /// Curvature profile file (numeric model)
    #[arg(long, value_name = "FILE")]
    profile: Option<PathBuf>,
}

#[derive(Args)]
struct ScatterArgs {
    /// idealized | openbook | exponential | numeric
    #[arg(long, value_name = "NAME")]
    model: String,

    #[command(flatten)]
    params: ParamArgs,

    /// Wavenumber: a range makes k the axis, a number fixes it
    #[arg(long, value_name = "lo:hi:n")]
    k: Option<String>,

    /// Half turning angle: a range makes eta the axis, a number fixes it
    #[arg(long, value_name = "lo:hi:n")]
    eta: Option<String>,

    /// Output file, or stdout
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Args)]
struct CoeffsArgs {
    /// idealized | openbook | exponential | numeric
    #[arg(long, value_name = "NAME")]
    model: String,

    #[command(flatten)]
    params: ParamArgs,

    /// Half turning angle, or an eta range to sweep
    #[arg(long, value_name = "lo:hi:n")]
    eta: Option<String>,

    /// Output file, or stdout
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Args)]
struct BoundStateArgs {
    /// idealized | openbook | exponential | numeric
    #[arg(long, value_name = "NAME")]
    model: String,

    #[command(flatten)]
    params: ParamArgs,

    /// Half turning angle, or an eta range to sweep
    #[arg(long, value_name = "lo:hi:n")]
    eta: Option<String>,

    /// Output file, or stdout
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Args)]
struct CompareArgs {
    /// Two comma-separated model names sharing the axis
    #[arg(long, value_delimiter = ',', value_name = "NAME,NAME")]
    models: Vec<String>,

    #[command(flatten)]
    params: ParamArgs,

    /// Wavenumber: a range makes k the axis, a number fixes it
    #[arg(long, value_name = "lo:hi:n")]
    k: Option<String>,

    /// Half turning angle: a range makes eta the axis, a number fixes it
    #[arg(long, value_name = "lo:hi:n")]
    eta: Option<String>,

    /// Output file, or stdout
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

fn main() -> ExitCode {
    // clap itself exits with code 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::InvalidProfile(_) | Error::InvalidSweep(_) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Scatter(a) => {
            let choice = choose_axis(a.k.as_deref(), a.eta.as_deref(), true)?;
            let model = build_model(&a.model, &a.params, choice.fixed_eta)?;
            let mut buf = String::new();
            run_scatter(&model, choice.axis, &choice.range, choice.k_fixed, &mut buf)?;
            emit(&buf, a.out.as_deref())
        }
        Command::Coeffs(a) => {
            let (fixed_eta, sweep) = split_eta(a.eta.as_deref())?;
            let model = build_model(&a.model, &a.params, fixed_eta)?;
            let mut buf = String::new();
            run_coeffs(&model, sweep.as_ref(), &mut buf)?;
            emit(&buf, a.out.as_deref())
        }
        Command::BoundState(a) => {
            let (fixed_eta, sweep) = split_eta(a.eta.as_deref())?;
            let model = build_model(&a.model, &a.params, fixed_eta)?;
            let mut buf = String::new();
            run_bound_state(&model, sweep.as_ref(), &mut buf)?;
            emit(&buf, a.out.as_deref())
        }
        Command::Compare(a) => {
            if a.models.len() != 2 {
                return Err(Error::InvalidSweep(format!(
                    "--models needs exactly two names, got {}",
                    a.models.len()
                )));
            }
            let choice = choose_axis(a.k.as_deref(), a.eta.as_deref(), true)?;
            let models: Vec<ModelSpec> = a
                .models
                .iter()
                .map(|name| build_model(name, &a.params, choice.fixed_eta))
                .collect::<Result<_>>()?;
            let mut buf = String::new();
            run_compare(&models, choice.axis, &choice.range, choice.k_fixed, &mut buf)?;
            emit(&buf, a.out.as_deref())
        }
    }
}

struct AxisChoice {
    axis: Axis,
    range: Range,
    k_fixed: Option<f64>,
    fixed_eta: Option<f64>,
}

/// Decide the axis: whichever of --k / --eta is a multi-point range.
/// Both fixed (or eta absent) means a k axis, possibly of one point.
fn choose_axis(k: Option<&str>, eta: Option<&str>, need_k: bool) -> Result<AxisChoice> {
    let k_range: Option<Range> = k.map(str::parse).transpose()?;
    let eta_range: Option<Range> = eta.map(str::parse).transpose()?;
    let k_sweep = k_range.is_some_and(|r| r.is_sweep());
    let eta_sweep = eta_range.is_some_and(|r| r.is_sweep());
    if k_sweep && eta_sweep {
        return Err(Error::InvalidSweep(
            "only one of --k and --eta may be a range".into(),
        ));
    }
    if eta_sweep {
        return Ok(AxisChoice {
            axis: Axis::Eta,
            range: eta_range.unwrap(),
            k_fixed: k_range.map(|r| r.lo),
            fixed_eta: None,
        });
    }
    let range = match k_range {
        Some(r) => r,
        None if need_k => return Err(Error::InvalidSweep("needs --k".into())),
        None => Range::single(f64::NAN),
    };
    Ok(AxisChoice {
        axis: Axis::K,
        range,
        k_fixed: None,
        fixed_eta: eta_range.map(|r| r.lo),
    })
}

/// For eta-only subcommands: a multi-point --eta is the sweep, a
/// single value is a fixed parameter.
fn split_eta(eta: Option<&str>) -> Result<(Option<f64>, Option<Range>)> {
    match eta.map(str::parse::<Range>).transpose()? {
        Some(r) if r.is_sweep() => Ok((None, Some(r))),
        Some(r) => Ok((Some(r.lo), None)),
        None => Ok((None, None)),
    }
}

fn build_model(name: &str, params: &ParamArgs, fixed_eta: Option<f64>) -> Result<ModelSpec> {
    match name {
        "idealized" => {
            let spec = params.k_matrix.as_deref().ok_or_else(|| {
                Error::InvalidSweep("the idealized model needs --K a,b,c,d".into())
            })?;
            Ok(ModelSpec::Idealized {
                k_matrix: parse_k_matrix(spec)?,
                gamma: params.gamma,
            })
        }
        "openbook" => Ok(ModelSpec::OpenBook {
            radius: params.radius.ok_or_else(|| {
                Error::InvalidSweep("the open-book model needs --R".into())
            })?,
            eta: fixed_eta,
        }),
        "exponential" => Ok(ModelSpec::Exponential {
            lambda_len: params.lambda.ok_or_else(|| {
                Error::InvalidSweep("the exponential model needs --Lambda".into())
            })?,
            eta: fixed_eta,
        }),
        "numeric" => {
            let path = params.profile.as_ref().ok_or_else(|| {
                Error::InvalidSweep("the numeric model needs --profile".into())
            })?;
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidProfile(format!("cannot read {}: {e}", path.display()))
            })?;
            Ok(ModelSpec::Numeric {
                profile: parse_profile(&text)?,
            })
        }
        other => Err(Error::InvalidSweep(format!(
            "unknown model `{other}` (expected idealized, openbook, exponential, or numeric)"
        ))),
    }
}

fn parse_k_matrix(s: &str) -> Result<[[f64; 2]; 2]> {
    let bad = |msg: String| Error::InvalidSweep(format!("--K `{s}`: {msg}"));
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| bad(e.to_string()))?;
    if v.len() != 4 {
        return Err(bad(format!("expected 4 entries, got {}", v.len())));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(bad("entries must be finite".into()));
    }
    let det = v[0] * v[3] - v[1] * v[2];
    if (det - 1.0).abs() > 1e-9 {
        return Err(bad(format!(
            "needs ad - bc = 1 within 1e-9, got {det}; matrices are never renormalized"
        )));
    }
    Ok([[v[0], v[1]], [v[2], v[3]]])
}

fn emit(buf: &str, out: Option<&str>) -> Result<()> {
    use std::io::Write as _;
    match out {
        None | Some("stdout") => std::io::stdout()
            .write_all(buf.as_bytes())
            .map_err(|e| Error::InvalidSweep(format!("cannot write to stdout: {e}"))),
        Some(path) => std::fs::write(path, buf)
            .map_err(|e| Error::InvalidSweep(format!("cannot write {path}: {e}"))),
    }
}
