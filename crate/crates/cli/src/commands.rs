use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use sliceworks::domain::{check_real_path_connected, check_self_stem_preserving};
use sliceworks::slice_fn::{conjugation, symmetrization, Checked, PreconditionCheck};
use sliceworks::testkit::{run_acceptance, OracleConfig, SuiteReport};
use sliceworks::zeros::{emit_plot_data, find_zeros, zero_inclusion_check, zeroset_csv, ZeroOptions};
use sliceworks::{
    sphere_sample, star_product, Complex64, Error, FnHandle, PathCn, Quaternion, SamplingConfig, SliceDomain, SCHEMA,
};

use crate::output::{DomainInfoOutput, EndpointInfo, ExtendOutput, FunctionOutput, PointValue, RootsOutput};
use crate::{Cli, Command, Format, EXIT_CHECK_FAILED, EXIT_NO_CONVERGENCE, EXIT_PARSE, EXIT_PRECONDITION};

/// Units used to sample spheres in reports.
const REPORT_UNITS: usize = 64;

#[derive(Debug)]
pub enum CliError {
    Parse { source: String, line: usize, column: usize, message: String },
    Io { path: String, message: String },
    Usage(String),
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => EXIT_PARSE,
            CliError::Core(Error::NoConvergence(_)) => EXIT_NO_CONVERGENCE,
            CliError::Core(_) => EXIT_PRECONDITION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { source, line, column, message } => {
                write!(f, "parse error in {source} at line {line}, column {column}: {message}")
            }
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn parse_str<T: DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        let (line, column) = if e.line() == 0 { locate(text, &message) } else { (e.line(), e.column()) };
        CliError::Parse { source: source.to_string(), line, column, message }
    })
}

/// Errors raised after buffering (tagged specs) carry no position; point at
/// the first quoted occurrence of the name the message mentions, else 1:1.
fn locate(text: &str, message: &str) -> (usize, usize) {
    let name = message.split('`').nth(1).filter(|n| !n.is_empty());
    let at = name.and_then(|n| text.find(&format!("\"{n}\"")));
    match at {
        Some(i) => {
            let before = &text[..i];
            let line = before.matches('\n').count() + 1;
            let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
            (line, column)
        }
        None => (1, 1),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_str(&text, &path.display().to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.global.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io { path: "<stdout>".into(), message: e.to_string() })
        }
    }
}

fn warnings(errors: &[Error]) -> Vec<String> {
    errors.iter().map(|e| e.to_string()).collect()
}

fn function_csv(f: &FnHandle) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let row = |w: &mut csv::Writer<Vec<u8>>, key: String, c: &Quaternion| {
        let mut rec = vec![key];
        rec.extend(c.to_array().iter().map(f64::to_string));
        w.write_record(&rec)
    };
    let io = |e: csv::Error| CliError::Io { path: "<csv>".into(), message: e.to_string() };
    match f {
        FnHandle::Poly(p) => {
            w.write_record(["exp", "w", "x", "y", "z"]).map_err(io)?;
            for (k, c) in p.terms() {
                let exp = k.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                row(&mut w, exp, c).map_err(io)?;
            }
        }
        FnHandle::Series(s) => {
            w.write_record(["index", "w", "x", "y", "z"]).map_err(io)?;
            for (k, c) in s.coeffs().iter().enumerate() {
                row(&mut w, k.to_string(), c).map_err(io)?;
            }
        }
        FnHandle::Glued(_) => return Err(CliError::Usage("glued functions have no CSV form; use --format json".into())),
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?).expect("utf-8"))
}

fn emit_function(cli: &Cli, checked: Checked<FnHandle>) -> Result<u8> {
    let text = match cli.global.format {
        Format::Json => to_json(&FunctionOutput {
            schema: SCHEMA.into(),
            function: checked.value,
            warnings: warnings(&checked.warnings),
            domain_checks: checked.reports,
        }),
        Format::Csv => function_csv(&checked.value)?,
    };
    emit(cli, &text)?;
    Ok(0)
}

fn suite_csv(report: &SuiteReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io { path: "<csv>".into(), message: e.to_string() };
    w.write_record(["property", "criterion", "trials", "max_residual", "bound", "pass"]).map_err(io)?;
    for p in &report.properties {
        w.write_record([
            p.property.clone(),
            p.criterion.map(|c| c.to_string()).unwrap_or_default(),
            p.trials.to_string(),
            p.max_residual.to_string(),
            p.bound.to_string(),
            p.pass.to_string(),
        ])
        .map_err(io)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?).expect("utf-8"))
}

pub fn run(cli: &Cli) -> Result<u8> {
    let seed = cli.global.seed.unwrap_or(0);
    let sampling = SamplingConfig::with_seed(seed);
    let check = if cli.global.assume_domain { PreconditionCheck::Assert } else { PreconditionCheck::Witness(sampling) };
    match &cli.command {
        Command::Roots { input, domain, tol_root, tol_sph, plot_units } => {
            let f: FnHandle = read_json(input)?;
            let omega = match domain {
                Some(d) => read_json(d)?,
                None => SliceDomain::whole(),
            };
            let Some(p) = f.as_poly() else {
                return Err(Error::InvalidInput(format!("roots needs a polynomial, got {}", f.kind())).into());
            };
            let defaults = ZeroOptions::default();
            let opts = ZeroOptions {
                tol_root: tol_root.unwrap_or(defaults.tol_root),
                tol_sph: tol_sph.unwrap_or(defaults.tol_sph),
                check,
                sampling,
            };
            let checked = find_zeros(p, &omega, &opts)?;
            let zs = &checked.value;
            let text = match (cli.global.format, plot_units) {
                (Format::Csv, Some(n)) => emit_plot_data(zs, &sphere_sample(*n, seed)),
                (Format::Csv, None) => zeroset_csv(zs),
                (Format::Json, _) => {
                    let inclusion = zero_inclusion_check(p, zs, &sphere_sample(REPORT_UNITS, seed))?;
                    to_json(&RootsOutput {
                        schema: SCHEMA.into(),
                        real_roots: zs.real_roots.clone(),
                        isolated: zs.isolated.clone(),
                        spheres: zs.spheres.clone(),
                        total_multiplicity: zs.total_multiplicity(),
                        inclusion,
                        warnings: warnings(&checked.warnings),
                        domain_checks: checked.reports.clone(),
                    })
                }
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::Symmetrize { input, domain } => {
            let f: FnHandle = read_json(input)?;
            let omega = match domain {
                Some(d) => read_json(d)?,
                None => f.domain(),
            };
            emit_function(cli, symmetrization(&f, &omega, check)?)
        }
        Command::Conjugate { input, domain } => {
            let f: FnHandle = read_json(input)?;
            let omega = match domain {
                Some(d) => read_json(d)?,
                None => f.domain(),
            };
            emit_function(cli, conjugation(&f, &omega, check)?)
        }
        Command::Star { left, right } => {
            let f: FnHandle = read_json(left)?;
            let g: FnHandle = read_json(right)?;
            let value = star_product(&f, &g)?;
            emit_function(cli, Checked { value, warnings: Vec::new(), reports: Vec::new() })
        }
        Command::Extend { input, at } => {
            let f: FnHandle = read_json(input)?;
            let mut values = Vec::new();
            for (k, text) in at.iter().enumerate() {
                let q: Vec<Quaternion> = parse_str(text, &format!("--at #{}", k + 1))?;
                let value = f.evaluate_quaternions(&q)?;
                values.push(PointValue { at: q, value });
            }
            let text = match cli.global.format {
                Format::Json => to_json(&ExtendOutput { schema: SCHEMA.into(), values }),
                Format::Csv => {
                    let mut s = String::from("point,w,x,y,z\n");
                    for (k, v) in values.iter().enumerate() {
                        let [w, x, y, z] = v.value.to_array();
                        s.push_str(&format!("{k},{w},{x},{y},{z}\n"));
                    }
                    s
                }
            };
            emit(cli, &text)?;
            Ok(0)
        }
        Command::DomainInfo { domain, endpoint } => {
            let omega: SliceDomain = read_json(domain)?;
            let checks = vec![check_real_path_connected(&omega, &sampling), check_self_stem_preserving(&omega, &sampling)];
            let endpoint = match endpoint {
                None => None,
                Some(text) => {
                    let z: Vec<Complex64> = parse_str(text, "--endpoint")?;
                    if z.len() != omega.dim() {
                        return Err(Error::IncompatibleDomains(format!(
                            "endpoint has {} coordinates, domain has {}",
                            z.len(),
                            omega.dim()
                        ))
                        .into());
                    }
                    let path = PathCn::ray_from_real(&z);
                    let su = omega.slice_units(&path, &sampling);
                    let r = omega.radius_path_ball(&path, &sampling);
                    let (two, note) = match omega.radius_two_units(&path, &sampling) {
                        Ok(r) => (Some(r), None),
                        Err(e) => (None, Some(e.to_string())),
                    };
                    Some(EndpointInfo {
                        endpoint: z,
                        all_units: su.all,
                        units: su.units,
                        radius_path_ball: r.is_finite().then_some(r),
                        radius_two_units: two,
                        note,
                    })
                }
            };
            let out = DomainInfoOutput { schema: SCHEMA.into(), dim: omega.dim(), checks, endpoint };
            if cli.global.format == Format::Csv {
                return Err(CliError::Usage("domain-info supports --format json only".into()));
            }
            emit(cli, &to_json(&out))?;
            Ok(0)
        }
        Command::Check { trials, fd_step, config } => {
            let mut cfg = match config {
                Some(path) => read_json::<OracleConfig>(path)?,
                None => OracleConfig::default(),
            };
            if let Some(s) = cli.global.seed {
                cfg.seed = s;
            }
            if let Some(t) = trials {
                cfg.trials = *t;
            }
            if let Some(h) = fd_step {
                cfg.fd_step = *h;
            }
            let report = run_acceptance(&cfg);
            let text = match cli.global.format {
                Format::Json => to_json(&report),
                Format::Csv => suite_csv(&report)?,
            };
            emit(cli, &text)?;
            Ok(if report.pass { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}
