use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use log::{debug, info};
use pz_core::algebra::{rat, rational_to_f64, Rational};
use pz_core::compactify::{chart_transform, infinity_analysis, Chart};
use pz_core::critical::{classify_point, finite_critical_points, CriticalError};
use pz_core::portrait::{phase_portrait, render, riccati_quadrature_check, verify_pipeline, PortraitError, RenderFormat, Window};
use pz_core::pzfield::{classify_family, planar_system, PzError};
use pz_core::transforms::{full_pipeline, lienard_to_riccati, TransformError};
use pz_core::{FamilyTag, PZParams, PlanarPolySystem};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{Command, PlotArgs};

#[derive(Debug, Error)]
pub enum CliError {
    /// The input does not meet the preconditions of the requested analysis.
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Computation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<PzError> for CliError {
    fn from(e: PzError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        match e.root() {
            TransformError::Algebra(_) | TransformError::IrrationalCoefficient(_) => CliError::Computation(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<CriticalError> for CliError {
    fn from(e: CriticalError) -> Self {
        match e {
            CriticalError::Family(_) | CriticalError::WrongFamily | CriticalError::WrongCase => CliError::Validation(e.to_string()),
            _ => CliError::Computation(e.to_string()),
        }
    }
}

impl From<PortraitError> for CliError {
    fn from(e: PortraitError) -> Self {
        match e {
            PortraitError::InvalidArgument(_) => CliError::Validation(e.to_string()),
            PortraitError::Transform(t) => t.into(),
            _ => CliError::Computation(e.to_string()),
        }
    }
}

fn print_json(out: &mut impl Write, value: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Computation(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize to JSON")
}

pub fn run(command: Command, out: &mut impl Write) -> Result<ExitCode, CliError> {
    match command {
        Command::Classify(p) => {
            let cls = classify_family(&p.params());
            info!("family {}", cls.tag);
            print_json(out, &to_value(&cls))?;
        }
        Command::Transform(p) => {
            let report = full_pipeline(&p.params())?;
            print_json(out, &to_value(&report))?;
        }
        Command::Critical { params, infinity, truncation } => {
            let value = critical(&params.params(), infinity, truncation)?;
            print_json(out, &value)?;
        }
        Command::Portrait { params, plot } => {
            let sys = planar_system(&params.params())?;
            portrait(&sys, &plot, out)?;
        }
        Command::Verify { params, tol, samples } => return verify(&params.params(), tol, samples, out),
        Command::ExamplePz { b, c, portrait: path, seeds } => {
            let value = example(&b, &c, path.as_deref(), seeds)?;
            print_json(out, &value)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn polynomial_system(params: &PZParams) -> Result<(pz_core::FamilyClass, PlanarPolySystem), CliError> {
    let cls = classify_family(params);
    if cls.tag == FamilyTag::NonPolynomial {
        return Err(CliError::Validation(format!("{params} does not give a polynomial system")));
    }
    let sys = planar_system(params)?;
    Ok((cls, sys))
}

fn critical(params: &PZParams, with_infinity: bool, truncation: usize) -> Result<Value, CliError> {
    if truncation == 0 {
        return Err(CliError::Validation("truncation must be positive".into()));
    }
    let (cls, sys) = polynomial_system(params)?;
    let finite = finite_critical_points(&cls)?;
    debug!("{} finite points", finite.points.len());
    let points: Vec<Value> = finite
        .points
        .iter()
        .map(|pt| json!({ "point": to_value(pt), "classification": to_value(&classify_point(&sys, pt, truncation)) }))
        .collect();
    let [p, q] = sys.to_string_in("x", "y");
    let mut value = json!({
        "family": to_value(&cls),
        "system": [format!("x' = {p}"), format!("y' = {q}")],
        "points": points,
        "complex_roots": finite.complex_roots,
        "non_isolated": finite.non_isolated,
        "notes": finite.notes,
    });
    if with_infinity {
        value["infinity"] = to_value(&infinity_analysis(&sys));
    }
    Ok(value)
}

fn write_portrait(
    sys: &PlanarPolySystem,
    window: Window,
    seeds: usize,
    format: RenderFormat,
    path: Option<&Path>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let data = phase_portrait(sys, window, seeds);
    info!("{} trajectories", data.trajectories.len());
    let bytes = render(&data, format);
    match path {
        Some(path) => std::fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    Ok(())
}

fn portrait(sys: &PlanarPolySystem, plot: &PlotArgs, out: &mut impl Write) -> Result<(), CliError> {
    write_portrait(sys, plot.window, plot.seeds, plot.format, plot.output.as_deref(), out)
}

fn verify(params: &PZParams, tol: f64, samples: usize, out: &mut impl Write) -> Result<ExitCode, CliError> {
    if !(tol > 0.0) || samples == 0 {
        return Err(CliError::Validation("--tol and --samples must be positive".into()));
    }
    let report = full_pipeline(params)?;
    let stages = verify_pipeline(&report, samples)?;
    writeln!(out, "{:<16} {:>12} {:>12}  status", "stage", "residual", "control")?;
    let mut failed = 0;
    for s in &stages {
        let ok = s.residual <= tol;
        failed += usize::from(!ok);
        writeln!(out, "{:<16} {:>12.3e} {:>12.3e}  {}", s.stage, s.residual, s.control, if ok { "ok" } else { "FAIL" })?;
    }
    if failed > 0 {
        eprintln!("{failed} stage(s) above tolerance {tol:e}");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn example(b: &Rational, c: &Rational, path: Option<&Path>, seeds: usize) -> Result<Value, CliError> {
    let params = PZParams::new(rat(0, 1), b.clone(), c.clone(), rat(3, 2), rat(1, 2));
    let mut value = critical(&params, true, 8)?;
    let sys = planar_system(&params)?;
    value["charts"] = Value::Array(
        [Chart::U1, Chart::U2]
            .into_iter()
            .map(|chart| {
                let [u, v] = chart_transform(&sys, chart).to_strings();
                json!({ "chart": to_value(&chart), "equations": [u, v] })
            })
            .collect(),
    );
    value["riccati"] = to_value(&lienard_to_riccati(&params));
    let (bf, cf) = (rational_to_f64(b), rational_to_f64(c));
    value["quadrature"] = match riccati_quadrature_check(bf, cf, 0.0, 0.0, 1.0) {
        Ok(chk) => json!({ "t0": 0.0, "z0": 0.0, "t": 1.0, "check": to_value(&chk) }),
        Err(e) => json!({ "skipped": e.to_string() }),
    };
    if let Some(path) = path {
        let format = if path.extension().is_some_and(|e| e == "csv") { RenderFormat::Csv } else { RenderFormat::Svg };
        write_portrait(&sys, Window::default(), seeds, format, Some(path), &mut std::io::sink())?;
        value["portrait"] = json!(path.display().to_string());
    }
    Ok(value)
}
