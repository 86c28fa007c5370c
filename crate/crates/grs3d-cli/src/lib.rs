//! Command-line front end: describe / residual / classify / solve / sweep /
//! verify, with JSON (and CSV for sweeps) output suitable for scripting.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error. The environment variable `GRS3D_TOL` overrides the default residual
//! tolerance wherever `--tol` is not given.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use grs3d::algebra::{
    identify_group, l_endomorphism, FamilyInstance, FamilyTag, GroupName, InstanceSpec, SegreLabel,
};
use grs3d::atlas;
use grs3d::curvature::{curvature_report, CurvatureReport};
use grs3d::grs::{
    classify_named, residual, CandidateSolution, Classification, ResidualReport, SolitonParams,
};
use grs3d::solver::{self, SolveConfig, Unknowns};
use grs3d::{Vec3, DEFAULT_TOL, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "grs3d",
    version,
    about = "Curvature and generalized Ricci solitons on 3D Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InstanceArgs {
    /// Family tag (riem-unimodular, riem-nonunimodular, g1..g7, special-riem, special-lor)
    #[arg(long)]
    family: Option<String>,
    /// Structure parameters as K=V pairs, e.g. A=1,B=0.5,C=0
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// JSON file holding {"family": ..., "params": {...}} (e.g. a `describe` report)
    #[arg(long)]
    instance_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SolverArgs {
    /// Multistart count
    #[arg(long, default_value_t = 200)]
    starts: usize,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampling radius for initial points
    #[arg(long = "box", default_value_t = 10.0)]
    box_radius: f64,
    /// Residual acceptance tolerance (defaults to GRS3D_TOL or 1e-9)
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Minimum separation between reported solutions
    #[arg(long, default_value_t = 1e-4)]
    dedup_radius: f64,
    /// Iteration cap per start
    #[arg(long, default_value_t = 200)]
    max_iters: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Curvature report and group identification for one instance
    Describe {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Residual of the soliton equation for an explicit candidate
    Residual {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        /// Vector components, e.g. --x 1,0,0
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_negative_numbers = true)]
        tol: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Classify (alpha, beta, lambda) into the named equations
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
        lambda: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for left-invariant solutions at fixed (alpha, beta)
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Fix lambda instead of solving for it
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve over a parameter grid and emit CSV
    Sweep {
        /// Family tag
        #[arg(long)]
        family: String,
        /// Grid spec: comma-separated `name=lo:hi:count` (or `name=value`)
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify theorem cases and corollary claims by randomized substitution
    Verify {
        /// Theorem case id or `all`
        #[arg(long)]
        theorem: Option<String>,
        /// Corollary claim id or `all`
        #[arg(long)]
        corollary: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, allow_negative_numbers = true)]
        tol: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn default_tol() -> f64 {
    std::env::var("GRS3D_TOL")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .unwrap_or(DEFAULT_TOL)
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl From<grs3d::Error> for CliError {
    fn from(e: grs3d::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn parse_params(text: &str) -> Result<BTreeMap<String, f64>, CliError> {
    let mut map = BTreeMap::new();
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected K=V, got `{piece}`")))?;
        let value: f64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("`{v}` is not a number in `{piece}`")))?;
        map.insert(k.trim().to_string(), value);
    }
    if map.is_empty() {
        return Err(CliError::Usage("empty parameter list".into()));
    }
    Ok(map)
}

fn parse_vec3(text: &str) -> Result<Vec3, CliError> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("`{text}` is not a comma-separated triple")))?;
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "expected 3 components, got {}",
            parts.len()
        )));
    }
    Ok(Vec3::new(parts[0], parts[1], parts[2]))
}

fn parse_grid(text: &str) -> Result<Vec<(String, Vec<f64>)>, CliError> {
    let mut grid = Vec::new();
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, spec) = piece
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected name=lo:hi:count, got `{piece}`")))?;
        let cols: Vec<&str> = spec.split(':').collect();
        let values = match cols.as_slice() {
            [v] => vec![v
                .trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("`{v}` is not a number")))?],
            [lo, hi, n] => {
                let lo: f64 = lo
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad `{lo}`")))?;
                let hi: f64 = hi
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad `{hi}`")))?;
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad `{n}`")))?;
                if n == 0 {
                    return Err(CliError::Usage("grid count must be >= 1".into()));
                }
                if n == 1 {
                    vec![lo]
                } else {
                    (0..n)
                        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
                        .collect()
                }
            }
            _ => return Err(CliError::Usage(format!("bad grid spec `{piece}`"))),
        };
        grid.push((name.trim().to_string(), values));
    }
    Ok(grid)
}

fn build_instance(args: &InstanceArgs) -> Result<FamilyInstance, CliError> {
    match (&args.instance_file, &args.family, &args.params) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(path)?;
            let spec: InstanceSpec = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("cannot parse instance file: {e}")))?;
            Ok(spec.build()?)
        }
        (None, Some(family), Some(params)) => {
            let tag = FamilyTag::from_kebab(family)?;
            Ok(FamilyInstance::new(tag, &parse_params(params)?)?)
        }
        _ => Err(CliError::Usage(
            "provide either --instance-file or both --family and --params".into(),
        )),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
            f.write_all(b"\n")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(output: &Option<PathBuf>, value: &T) -> Result<(), CliError> {
    emit(
        output,
        &serde_json::to_string_pretty(value).expect("report serialization"),
    )
}

#[derive(Serialize)]
struct DescribeReport {
    schema_version: &'static str,
    #[serde(flatten)]
    instance: InstanceSpec,
    group: GroupName,
    unimodular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    segre: Option<SegreLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l_matrix: Option<[[f64; 3]; 3]>,
    curvature: CurvatureReport,
}

#[derive(Serialize)]
struct ResidualCmdReport {
    schema_version: &'static str,
    instance: InstanceSpec,
    x: [f64; 3],
    alpha: f64,
    beta: f64,
    lambda: f64,
    tol: f64,
    residual: ResidualReport,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema_version: &'static str,
    alpha: f64,
    beta: f64,
    lambda: f64,
    #[serde(flatten)]
    classification: Classification,
}

#[derive(Serialize)]
struct LabeledSolution {
    x: [f64; 3],
    lambda: f64,
    residual_inf: f64,
    trivial: bool,
    /// Theorem case reproducing this solution, or UNMATCHED.
    matched_case: String,
}

#[derive(Serialize)]
struct SolveReport {
    schema_version: &'static str,
    instance: InstanceSpec,
    alpha: f64,
    beta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<f64>,
    config: SolveConfig,
    manifold_flag: bool,
    solutions: Vec<LabeledSolution>,
    diagnostics: solver::Diagnostics,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: &'static str,
    samples: usize,
    seed: u64,
    tol: f64,
    theorem_reports: Vec<atlas::CaseReport>,
    corollary_reports: Vec<atlas::ClaimReport>,
    all_passed: bool,
}

fn solve_config(args: &SolverArgs, lambda_fixed: bool) -> SolveConfig {
    SolveConfig {
        unknowns: if lambda_fixed {
            Unknowns::XOnly
        } else {
            Unknowns::XAndLambda
        },
        starts: args.starts,
        seed: args.seed,
        box_radius: args.box_radius,
        tol: args.tol.unwrap_or_else(default_tol),
        dedup_radius: args.dedup_radius,
        max_iters: args.max_iters,
        expected_isolated: None,
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Describe { instance, output } => {
            let inst = build_instance(&instance)?;
            let (segre, l_matrix) = match l_endomorphism(&inst) {
                Ok((l, label)) => (
                    Some(label),
                    Some([
                        [l[(0, 0)], l[(0, 1)], l[(0, 2)]],
                        [l[(1, 0)], l[(1, 1)], l[(1, 2)]],
                        [l[(2, 0)], l[(2, 1)], l[(2, 2)]],
                    ]),
                ),
                Err(_) => (None, None),
            };
            let report = DescribeReport {
                schema_version: SCHEMA_VERSION,
                instance: inst.spec(),
                group: identify_group(&inst),
                unimodular: inst.is_unimodular(),
                segre,
                l_matrix,
                curvature: curvature_report(&inst),
            };
            emit_json(&output, &report)?;
            Ok(0)
        }
        Command::Residual {
            instance,
            alpha,
            beta,
            lambda,
            x,
            tol,
            output,
        } => {
            let inst = build_instance(&instance)?;
            let x = parse_vec3(&x)?;
            let tol = tol.unwrap_or_else(default_tol);
            let cand = CandidateSolution::new(x, SolitonParams::new(alpha, beta, lambda));
            let report = ResidualCmdReport {
                schema_version: SCHEMA_VERSION,
                instance: inst.spec(),
                x: [x[0], x[1], x[2]],
                alpha,
                beta,
                lambda,
                tol,
                residual: residual(&inst, &cand, tol),
            };
            emit_json(&output, &report)?;
            Ok(0)
        }
        Command::Classify {
            alpha,
            beta,
            lambda,
            output,
        } => {
            let report = ClassifyReport {
                schema_version: SCHEMA_VERSION,
                alpha,
                beta,
                lambda,
                classification: classify_named(&SolitonParams::new(alpha, beta, lambda), 3),
            };
            emit_json(&output, &report)?;
            Ok(0)
        }
        Command::Solve {
            instance,
            alpha,
            beta,
            lambda,
            solver: sargs,
            output,
        } => {
            let inst = build_instance(&instance)?;
            let cfg = solve_config(&sargs, lambda.is_some());
            let set = solver::solve(&inst, alpha, beta, lambda, &cfg)?;
            let solutions = set
                .solutions
                .iter()
                .map(|s| LabeledSolution {
                    x: s.x,
                    lambda: s.lambda,
                    residual_inf: s.residual_inf,
                    trivial: s.trivial,
                    matched_case: atlas::label_solution(
                        &inst,
                        alpha,
                        beta,
                        &s.x_vec(),
                        s.lambda,
                        1e-6,
                    )
                    .unwrap_or("UNMATCHED")
                    .to_string(),
                })
                .collect();
            let report = SolveReport {
                schema_version: SCHEMA_VERSION,
                instance: inst.spec(),
                alpha,
                beta,
                lambda,
                config: cfg,
                manifold_flag: set.manifold_flag,
                solutions,
                diagnostics: set.diagnostics,
            };
            emit_json(&output, &report)?;
            Ok(0)
        }
        Command::Sweep {
            family,
            grid,
            alpha,
            beta,
            solver: sargs,
            output,
        } => {
            let tag = FamilyTag::from_kebab(&family)?;
            let grid = parse_grid(&grid)?;
            let cfg = solve_config(&sargs, false);
            let report = solver::sweep(tag, &grid, alpha, beta, &cfg)?;
            let mut text = String::from(solver::SWEEP_CSV_HEADER);
            for row in &report.rows {
                text.push('\n');
                text.push_str(&solver::sweep_row_csv(row));
            }
            emit(&output, &text)?;
            if !report.skipped.is_empty() {
                eprintln!(
                    "skipped {} grid point(s) violating the family constraints",
                    report.skipped.len()
                );
            }
            Ok(0)
        }
        Command::Verify {
            theorem,
            corollary,
            samples,
            seed,
            tol,
            output,
        } => {
            let tol = tol.unwrap_or_else(default_tol);
            let (run_theorems, run_claims) = match (&theorem, &corollary) {
                (None, None) => (Some("all".to_string()), Some("all".to_string())),
                _ => (theorem.clone(), corollary.clone()),
            };
            let theorem_reports = match run_theorems.as_deref() {
                Some("all") => atlas::verify_all(samples, seed, tol)?,
                Some(id) => vec![atlas::verify_case(id, samples, seed, tol)?],
                None => Vec::new(),
            };
            let corollary_reports = match run_claims.as_deref() {
                Some("all") => atlas::verify_all_claims()?,
                Some(id) => vec![atlas::verify_corollary(id)?],
                None => Vec::new(),
            };
            let all_passed = theorem_reports.iter().all(|r| r.passes)
                && corollary_reports.iter().all(|r| r.passes);
            let report = VerifyReport {
                schema_version: SCHEMA_VERSION,
                samples,
                seed,
                tol,
                theorem_reports,
                corollary_reports,
                all_passed,
            };
            emit_json(&output, &report)?;
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            2
        }
    }
}
