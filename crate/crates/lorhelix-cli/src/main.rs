//! Command-line front end: synthesize spacelike general helices from their
//! intrinsic equations, evaluate and audit the built-in curve catalog, verify
//! sampled curves against declared intrinsics, and plot 2D projections.
//!
//! Exit codes are part of the scripting interface:
//! 0 success, 1 I/O or domain error, 2 classification rejection,
//! 3 verification discrepancy.

// Monotonicity checks use `!(b > a)` so NaN fails them; `a <= b` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod svg;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use lorhelix::catalog::{
    catalog_eval, catalog_list, catalog_spec, catalog_validate, demo_params, standard_grid,
    CatalogName, Verdict, INTRINSICS_TOL, POSITION_TOL,
};
use lorhelix::io::{
    from_json_str, max_deviation_modulo_translation, read_csv, to_json_string, write_csv,
    SampleGrid,
};
use lorhelix::{
    causal_character, estimate_frame, synthesize, AxisKind, Causality, CurveSamples, HelixSpec,
    IntrinsicPair, LorentzVector, NormalSign, ScalarFunction, SynthesisError, DEFAULT_CAUSAL_TOL,
};
use serde_json::json;
use std::collections::BTreeMap;
use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lorhelix",
    version,
    about = "Spacelike general helices in Minkowski 3-space from intrinsic equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify and synthesize a helix from kappa(s), tau(s), and epsilon
    Synth(SynthArgs),
    /// Sample a catalog entry's closed-form position vector
    Catalog(CatalogArgs),
    /// List the catalog entries with their parameters
    List,
    /// Cross-check a catalog entry or an input file against its intrinsics
    Verify(VerifyArgs),
    /// Render a 2D projection of sampled curves as SVG
    Plot(PlotArgs),
}

#[derive(clap::Args)]
struct SynthArgs {
    /// Curvature descriptor, e.g. const:3, rational-minus:2, rational-plus:0.5,
    /// reciprocal:2, table:PATH (two-column CSV)
    #[arg(long)]
    kappa: String,
    /// Torsion descriptor (same syntax as --kappa)
    #[arg(long)]
    tau: String,
    /// Sign of g(N,N): +1 spacelike normal, -1 timelike normal
    #[arg(long, allow_hyphen_values = true)]
    epsilon: i8,
    /// Arclength grid min:max:step (endpoints included within half a step)
    #[arg(long = "s", allow_hyphen_values = true)]
    grid: String,
    /// Require a spacelike or timelike axis
    #[arg(long)]
    axis: Option<String>,
    /// Select the mirrored solution branch
    #[arg(long)]
    mirror: bool,
    /// Override the gauge point where theta and the position vanish
    #[arg(long, allow_hyphen_values = true)]
    reference: Option<f64>,
    /// Output file (.csv or .json)
    #[arg(long)]
    out: PathBuf,
    /// Output format (defaults to the file extension, then csv)
    #[arg(long)]
    format: Option<String>,
}

#[derive(clap::Args)]
struct CatalogArgs {
    /// Entry name, e.g. wcurve-case1 (see `lorhelix list`)
    #[arg(long)]
    name: String,
    /// Entry parameters, e.g. kappa=3,tau=2 (defaults to the demo values)
    #[arg(long)]
    params: Option<String>,
    /// Arclength grid min:max:step (defaults to the entry's standard grid)
    #[arg(long = "s", allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    format: Option<String>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Catalog entry to audit (three-way differential test)
    #[arg(long, conflicts_with = "input")]
    name: Option<String>,
    /// Entry parameters for --name (defaults to the demo values)
    #[arg(long)]
    params: Option<String>,
    /// Sampled curve (CSV or JSON) to verify against declared intrinsics
    #[arg(long)]
    input: Option<PathBuf>,
    /// Declared curvature for --input (family:param syntax)
    #[arg(long)]
    kappa: Option<String>,
    /// Declared torsion for --input
    #[arg(long)]
    tau: Option<String>,
    /// Declared sign of g(N,N) for --input (defaults to the file's value)
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<i8>,
    /// Gauge point override for the synthesized comparison curve
    #[arg(long, allow_hyphen_values = true)]
    reference: Option<f64>,
    /// Position tolerance for the CONSISTENT verdict
    #[arg(long, default_value_t = POSITION_TOL)]
    tol: f64,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct PlotArgs {
    /// Sampled curve (CSV or JSON)
    #[arg(long)]
    input: PathBuf,
    /// Projection plane: x1x2, x1x3, or x2x3
    #[arg(long, default_value = "x1x2")]
    projection: String,
    /// Output SVG path
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Synth(args) => cmd_synth(args),
        Command::Catalog(args) => cmd_catalog(args),
        Command::List => cmd_list(),
        Command::Verify(args) => cmd_verify(args),
        Command::Plot(args) => cmd_plot(args),
    }
}

/// Causal tolerance, overridable through LORHELIX_TOL.
fn causal_tolerance() -> Result<f64> {
    match std::env::var("LORHELIX_TOL") {
        Ok(text) => {
            let tol: f64 = text
                .parse()
                .with_context(|| format!("LORHELIX_TOL = {text:?} is not a number"))?;
            if tol > 0.0 {
                Ok(tol)
            } else {
                bail!("LORHELIX_TOL must be positive")
            }
        }
        Err(_) => Ok(DEFAULT_CAUSAL_TOL),
    }
}

fn parse_family(text: &str) -> Result<ScalarFunction> {
    let (family, arg) = text
        .split_once(':')
        .with_context(|| format!("descriptor {text:?} must look like family:param"))?;
    let value = || -> Result<f64> {
        arg.parse()
            .with_context(|| format!("parameter {arg:?} is not a number"))
    };
    let function = match family {
        "const" => ScalarFunction::constant(value()?)?,
        "rational-minus" => ScalarFunction::rational_minus(value()?)?,
        "rational-plus" => ScalarFunction::rational_plus(value()?)?,
        "reciprocal" => ScalarFunction::reciprocal(value()?)?,
        "table" => {
            let file = fs::File::open(arg).with_context(|| format!("opening table {arg:?}"))?;
            ScalarFunction::tabulated_from_csv(BufReader::new(file))?
        }
        other => bail!(
            "unknown family {other:?}; expected const, rational-minus, rational-plus, \
             reciprocal, or table"
        ),
    };
    Ok(function)
}

fn parse_grid(text: &str) -> Result<SampleGrid> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        bail!("grid {text:?} must look like min:max:step");
    }
    let parse = |t: &str| -> Result<f64> {
        t.parse()
            .with_context(|| format!("grid component {t:?} is not a number"))
    };
    Ok(SampleGrid::new(
        parse(parts[0])?,
        parse(parts[1])?,
        parse(parts[2])?,
    )?)
}

fn parse_epsilon(value: i8) -> Result<NormalSign> {
    match value {
        1 => Ok(NormalSign::Spacelike),
        -1 => Ok(NormalSign::Timelike),
        other => bail!("epsilon must be +1 or -1, got {other}"),
    }
}

fn parse_params(text: Option<&str>) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    if let Some(text) = text {
        for piece in text.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = piece
                .split_once('=')
                .with_context(|| format!("parameter {piece:?} must look like name=value"))?;
            map.insert(
                key.trim().to_string(),
                value
                    .trim()
                    .parse()
                    .with_context(|| format!("parameter value {value:?} is not a number"))?,
            );
        }
    }
    Ok(map)
}

fn decide_format(path: &Path, format: Option<&str>) -> Result<&'static str> {
    let chosen = match format {
        Some(f) => f.to_ascii_lowercase(),
        None => path
            .extension()
            .and_then(|e| e.to_str())
            .unwrap_or("csv")
            .to_ascii_lowercase(),
    };
    match chosen.as_str() {
        "csv" => Ok("csv"),
        "json" => Ok("json"),
        other => bail!("unsupported output format {other:?} (csv or json)"),
    }
}

fn case_label(spec: &HelixSpec) -> String {
    format!("case{}", spec.case.index())
}

fn synth_json(samples: &CurveSamples, spec: &HelixSpec) -> String {
    let doc = json!({
        "meta": {
            "case": case_label(spec),
            "epsilon": spec.pair.epsilon.value() as i8,
            "m": spec.m,
            "n": spec.n,
            "phi": spec.phi,
        },
        "s": samples.s,
        "psi": samples.positions.iter().map(|p| p.components()).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&doc).expect("static schema serializes")
}

fn write_samples(
    path: &Path,
    samples: &CurveSamples,
    format: &str,
    spec: Option<&HelixSpec>,
) -> Result<()> {
    let payload = match (format, spec) {
        ("csv", _) => {
            let mut buf = Vec::new();
            write_csv(samples, &mut buf)?;
            buf
        }
        ("json", Some(spec)) => {
            let mut text = synth_json(samples, spec);
            text.push('\n');
            text.into_bytes()
        }
        ("json", None) => {
            let mut text = to_json_string(samples)?;
            text.push('\n');
            text.into_bytes()
        }
        _ => unreachable!("format vetted by decide_format"),
    };
    fs::write(path, payload).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Load CSV or JSON samples; JSON may be the library schema or the synth
/// output with its meta block.
fn load_samples(path: &Path) -> Result<CurveSamples> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        if let Ok(samples) = from_json_str(&text) {
            return Ok(samples);
        }
        let value: serde_json::Value = serde_json::from_str(&text)?;
        let epsilon = value
            .pointer("/meta/epsilon")
            .and_then(|v| v.as_i64())
            .ok_or_else(|| anyhow!("json lacks meta.epsilon"))?;
        let s: Vec<f64> = serde_json::from_value(
            value
                .get("s")
                .cloned()
                .ok_or_else(|| anyhow!("json lacks s"))?,
        )?;
        let psi: Vec<[f64; 3]> = serde_json::from_value(
            value
                .get("psi")
                .cloned()
                .ok_or_else(|| anyhow!("json lacks psi"))?,
        )?;
        if s.is_empty() || s.len() != psi.len() || s.windows(2).any(|w| !(w[1] > w[0])) {
            bail!("json samples are empty or not strictly increasing in s");
        }
        return Ok(CurveSamples {
            s,
            positions: psi.into_iter().map(Into::into).collect(),
            frames: None,
            epsilon: if epsilon >= 0 {
                NormalSign::Spacelike
            } else {
                NormalSign::Timelike
            },
        });
    }
    Ok(read_csv(text.as_bytes())?)
}

fn cmd_synth(args: SynthArgs) -> Result<u8> {
    let causal_tol = causal_tolerance()?;
    let kappa = parse_family(&args.kappa)?;
    let tau = parse_family(&args.tau)?;
    let epsilon = parse_epsilon(args.epsilon)?;
    let axis_request = match args.axis.as_deref() {
        None => None,
        Some("spacelike") => Some(AxisKind::Spacelike),
        Some("timelike") => Some(AxisKind::Timelike),
        Some(other) => bail!("axis must be spacelike or timelike, got {other:?}"),
    };
    let format = decide_format(&args.out, args.format.as_deref())?;
    let grid = parse_grid(&args.grid)?;

    let mut pair = IntrinsicPair::new(kappa, tau, epsilon)?;
    if let Some(reference) = args.reference {
        pair = pair.with_reference(reference)?;
    }
    let spec = match HelixSpec::from_pair_with_axis(pair, axis_request, args.mirror) {
        Ok(spec) => spec,
        Err(SynthesisError::Rejected(rejection)) => {
            eprintln!("rejected: {rejection}");
            return Ok(2);
        }
        Err(other) => return Err(other.into()),
    };
    let samples = synthesize(&spec, &grid.points())?;

    // Sanity-check the synthesized tangent's causal character at the gauge
    // point; the tolerance is the place LORHELIX_TOL feeds in.
    let t0 = spec.tangent(0.0);
    if causal_character(&t0, causal_tol).causality != Causality::Spacelike {
        eprintln!(
            "warning: tangent at the gauge point is not spacelike at tolerance {causal_tol:e}"
        );
    }

    write_samples(&args.out, &samples, format, Some(&spec))?;
    println!("case: {}", case_label(&spec));
    println!("m: {}", spec.m);
    println!("n: {}", spec.n);
    println!("phi: {}", spec.phi);
    println!(
        "axis: ({}, {}, {})",
        spec.axis.x1, spec.axis.x2, spec.axis.x3
    );
    println!("samples: {}", samples.len());
    println!("wrote {}", args.out.display());
    Ok(0)
}

fn cmd_catalog(args: CatalogArgs) -> Result<u8> {
    let name = CatalogName::parse(&args.name)?;
    let params = if args.params.is_some() {
        parse_params(args.params.as_deref())?
    } else {
        demo_params(name)
    };
    let grid = match &args.grid {
        Some(text) => parse_grid(text)?,
        None => standard_grid(name, &params)?,
    };
    let spec = catalog_spec(name, &params)?;
    let format = decide_format(&args.out, args.format.as_deref())?;
    let points = grid.points();
    let positions = points
        .iter()
        .map(|&s| catalog_eval(name, &params, s))
        .collect::<Result<Vec<_>, _>>()?;
    let samples = CurveSamples {
        s: points,
        positions,
        frames: None,
        epsilon: spec.pair.epsilon,
    };
    write_samples(&args.out, &samples, format, Some(&spec))?;
    println!(
        "{}: case{} with m = {}, {} samples -> {}",
        name.id(),
        spec.case.index(),
        spec.m,
        samples.len(),
        args.out.display()
    );
    Ok(0)
}

fn cmd_list() -> Result<u8> {
    for entry in catalog_list() {
        let demo: Vec<String> = entry
            .demo_params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        println!(
            "{:<16} params: {:<12} demo: {:<22} {}",
            entry.name.id(),
            entry.param_names.join(","),
            demo.join(","),
            entry.closed_form
        );
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    match (&args.name, &args.input) {
        (Some(name), None) => verify_catalog(&args, name),
        (None, Some(input)) => verify_input(&args, input.clone()),
        _ => bail!("verify needs exactly one of --name or --input"),
    }
}

fn emit_report(out: Option<&Path>, report: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, format!("{report}\n"))
                .with_context(|| format!("writing {}", path.display()))?;
            eprintln!("report written to {}", path.display());
        }
        None => println!("{report}"),
    }
    Ok(())
}

fn verify_catalog(args: &VerifyArgs, name: &str) -> Result<u8> {
    let name = CatalogName::parse(name)?;
    let params = if args.params.is_some() {
        parse_params(args.params.as_deref())?
    } else {
        demo_params(name)
    };
    let report = catalog_validate(name, &params)?;
    emit_report(args.out.as_deref(), &serde_json::to_string_pretty(&report)?)?;
    Ok(if report.verdict == Verdict::Consistent {
        0
    } else {
        3
    })
}

fn verify_input(args: &VerifyArgs, input: PathBuf) -> Result<u8> {
    let samples = load_samples(&input)?;
    let kappa = parse_family(
        args.kappa
            .as_deref()
            .context("--input verification needs --kappa")?,
    )?;
    let tau = parse_family(
        args.tau
            .as_deref()
            .context("--input verification needs --tau")?,
    )?;
    let epsilon = match args.epsilon {
        Some(e) => parse_epsilon(e)?,
        None => samples.epsilon,
    };
    let mut pair = IntrinsicPair::new(kappa, tau, epsilon)?;
    if let Some(reference) = args.reference {
        pair = pair.with_reference(reference)?;
    }

    if samples.len() < 7 {
        bail!("need at least 7 samples to estimate intrinsics");
    }
    if samples.uniform_step().is_none() {
        bail!("--input verification needs a uniform arclength grid");
    }

    // Finite-difference recovery at spread probe points; torsion compared in
    // magnitude with the handedness reported separately.
    let n = samples.len();
    let probes = lorhelix::catalog::probe_indices(n);
    let mut kappa_err = 0.0f64;
    let mut tau_err = 0.0f64;
    let mut chirality_votes = 0i32;
    for &i in &probes {
        let est = estimate_frame(&samples, i)?;
        let k = pair.kappa.value(samples.s[i])?;
        let t = pair.tau.value(samples.s[i])?;
        kappa_err = kappa_err.max((est.kappa - k).abs());
        tau_err = tau_err.max((est.tau.abs() - t.abs()).abs());
        if t.abs() > 1e-6 {
            chirality_votes += if est.tau * t > 0.0 { 1 } else { -1 };
        }
    }
    let chirality = chirality_votes.signum();

    // When the declared pair is a general helix, also compare positions
    // against a fresh synthesis on the same grid (both solution branches;
    // the file does not declare which one it holds).
    let synth_deviation = match HelixSpec::from_pair(pair.clone(), false) {
        Ok(spec) => {
            let upper = synthesize(&spec, &samples.s)?;
            let mirrored = synthesize(
                &HelixSpec::from_pair(pair.clone(), true).expect("same classification"),
                &samples.s,
            )?;
            let dev_upper = max_deviation_modulo_translation(&samples.positions, &upper.positions);
            let dev_mirror =
                max_deviation_modulo_translation(&samples.positions, &mirrored.positions);
            Some(dev_upper.min(dev_mirror))
        }
        Err(_) => None,
    };

    let consistent = kappa_err <= INTRINSICS_TOL
        && tau_err <= INTRINSICS_TOL
        && synth_deviation.is_none_or(|d| d <= args.tol);
    let report = json!({
        "source": format!("file:{}", input.display()),
        "declared": {
            "kappa": args.kappa,
            "tau": args.tau,
            "epsilon": epsilon.value() as i8,
        },
        "samples": n,
        "kappa_max_abs_err": kappa_err,
        "tau_max_abs_err": tau_err,
        "chirality": chirality,
        "synthesized_max_deviation": synth_deviation,
        "position_tolerance": args.tol,
        "intrinsics_tolerance": INTRINSICS_TOL,
        "verdict": if consistent { "CONSISTENT" } else { "DISCREPANT" },
    });
    emit_report(args.out.as_deref(), &serde_json::to_string_pretty(&report)?)?;
    Ok(if consistent { 0 } else { 3 })
}

fn cmd_plot(args: PlotArgs) -> Result<u8> {
    let samples = load_samples(&args.input)?;
    if samples.is_empty() {
        bail!("input contains no samples");
    }
    let pick: fn(&LorentzVector) -> (f64, f64) = match args.projection.as_str() {
        "x1x2" => |p| (p.x1, p.x2),
        "x1x3" => |p| (p.x1, p.x3),
        "x2x3" => |p| (p.x2, p.x3),
        other => bail!("projection must be x1x2, x1x3, or x2x3, got {other:?}"),
    };
    let (x_label, y_label) = match args.projection.as_str() {
        "x1x2" => ("x1", "x2"),
        "x1x3" => ("x1", "x3"),
        _ => ("x2", "x3"),
    };
    let points: Vec<(f64, f64)> = samples.positions.iter().map(pick).collect();
    let rendered = svg::render_polyline(&points, x_label, y_label);
    if rendered.degenerate {
        eprintln!("warning: degenerate projection extent; the curve collapses to a segment");
    }
    fs::write(&args.out, rendered.svg)
        .with_context(|| format!("writing {}", args.out.display()))?;
    println!(
        "plotted {} points ({}) -> {}",
        points.len(),
        args.projection,
        args.out.display()
    );
    Ok(0)
}
