//! Multistart damped least-squares search for left-invariant soliton vectors.
//!
//! The six residual components form an overdetermined quadratic system in
//! `X` (and `lambda` when free). Each start runs a Levenberg-Marquardt loop
//! with strictly monotone accepted steps; converged points below the
//! tolerance are canonically ordered and deduplicated, and a saturation
//! heuristic flags solution continua.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{FamilyInstance, FamilyTag};
use crate::curvature::ricci;
use crate::grs::{residual_matrix, SolitonParams, COMPONENT_ORDER};
use crate::{Error, Mat3, Result, Vec3};

/// Which variables the solver treats as unknowns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Unknowns {
    #[serde(rename = "x-only")]
    XOnly,
    #[serde(rename = "x-and-lambda")]
    XAndLambda,
}

/// Solver configuration. All knobs have the documented defaults.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SolveConfig {
    pub unknowns: Unknowns,
    pub starts: usize,
    pub seed: u64,
    /// Sampling radius for the initial points.
    pub box_radius: f64,
    /// Residual acceptance threshold (inf norm).
    pub tol: f64,
    /// Minimum separation between reported solutions in `(X, lambda)` space.
    pub dedup_radius: f64,
    pub max_iters: usize,
    /// Baseline for the manifold saturation heuristic; defaults to
    /// `2^(number of unknowns)`.
    pub expected_isolated: Option<usize>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            unknowns: Unknowns::XAndLambda,
            starts: 200,
            seed: 0,
            box_radius: 10.0,
            tol: crate::DEFAULT_TOL,
            dedup_radius: 1e-4,
            max_iters: 200,
            expected_isolated: None,
        }
    }
}

impl SolveConfig {
    fn validate(&self, lambda_fixed: bool) -> Result<()> {
        if self.starts == 0 {
            return Err(Error::Config("starts must be >= 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Config("tol must be positive".into()));
        }
        if !(self.dedup_radius > 0.0) {
            return Err(Error::Config("dedup_radius must be positive".into()));
        }
        if !(self.box_radius > 0.0) {
            return Err(Error::Config("box must be positive".into()));
        }
        match (lambda_fixed, self.unknowns) {
            (true, Unknowns::XAndLambda) => Err(Error::Config(
                "lambda was fixed but the configuration solves for it".into(),
            )),
            (false, Unknowns::XOnly) => Err(Error::Config(
                "lambda is free but the configuration does not solve for it".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// A solution accepted by the solver.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FoundSolution {
    pub x: [f64; 3],
    pub lambda: f64,
    pub residual_inf: f64,
    /// `X ~ 0` with `beta ~ lambda ~ 0`: the excluded trivial combination.
    pub trivial: bool,
}

impl FoundSolution {
    pub fn x_vec(&self) -> Vec3 {
        Vec3::new(self.x[0], self.x[1], self.x[2])
    }
}

/// Per-run convergence bookkeeping.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Diagnostics {
    pub starts: usize,
    pub converged: usize,
    pub accepted: usize,
    /// Distinct accepted points at radius `dedup_radius / 10`.
    pub distinct_fine: usize,
    /// Saturation threshold that sets the manifold flag.
    pub manifold_threshold: usize,
    /// Best residual inf-norm seen over all starts, accepted or not.
    pub best_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolutionSet {
    pub solutions: Vec<FoundSolution>,
    /// Set when accepted points saturate dedup, i.e. the solutions form a
    /// continuum rather than isolated points.
    pub manifold_flag: bool,
    pub diagnostics: Diagnostics,
}

/// Threshold below which a solution's `X` counts as the zero vector.
pub const NONTRIVIAL_NORM: f64 = 1e-4;

struct Problem {
    inst: FamilyInstance,
    ric: Mat3,
    alpha: f64,
    beta: f64,
    fixed_lambda: Option<f64>,
    /// `d residual / d X_k` is affine in `X`; these are the Lie-derivative
    /// matrices of the basis vectors.
    lie_basis: [Mat3; 3],
    eps: [f64; 3],
    n_unknowns: usize,
}

impl Problem {
    fn new(inst: &FamilyInstance, alpha: f64, beta: f64, fixed_lambda: Option<f64>) -> Self {
        let e = [Vec3::x(), Vec3::y(), Vec3::z()];
        let lie_basis = [0, 1, 2].map(|k| crate::grs::lie_derivative_metric(inst, &e[k]));
        Problem {
            inst: *inst,
            ric: ricci(inst),
            alpha,
            beta,
            fixed_lambda,
            lie_basis,
            eps: inst.signature().causal_signs(),
            n_unknowns: if fixed_lambda.is_some() { 3 } else { 4 },
        }
    }

    fn split(&self, p: &DVector<f64>) -> (Vec3, f64) {
        let x = Vec3::new(p[0], p[1], p[2]);
        let lambda = self.fixed_lambda.unwrap_or_else(|| p[3]);
        (x, lambda)
    }

    fn residual_vec(&self, p: &DVector<f64>) -> DVector<f64> {
        let (x, lambda) = self.split(p);
        let m = residual_matrix(
            &self.inst,
            &self.ric,
            &x,
            &SolitonParams::new(self.alpha, self.beta, lambda),
        );
        DVector::from_iterator(6, COMPONENT_ORDER.iter().map(|&(i, j)| m[(i, j)]))
    }

    fn jacobian(&self, p: &DVector<f64>) -> DMatrix<f64> {
        let (x, _) = self.split(p);
        let mut jac = DMatrix::zeros(6, self.n_unknowns);
        for (row, &(i, j)) in COMPONENT_ORDER.iter().enumerate() {
            for k in 0..3 {
                let d_lie = self.lie_basis[k][(i, j)];
                let mut d_flat = 0.0;
                if i == k {
                    d_flat += self.eps[i] * self.eps[j] * x[j];
                }
                if j == k {
                    d_flat += self.eps[i] * self.eps[j] * x[i];
                }
                jac[(row, k)] = d_lie + 2.0 * self.alpha * d_flat;
            }
            if self.n_unknowns == 4 {
                jac[(row, 3)] = if i == j { -2.0 * self.eps[i] } else { 0.0 };
            }
        }
        jac
    }
}

/// Damped least squares from one start; returns the final point and its
/// residual inf-norm.
fn levenberg_marquardt(
    prob: &Problem,
    start: DVector<f64>,
    max_iters: usize,
) -> (DVector<f64>, f64) {
    let mut p = start;
    let mut f = prob.residual_vec(&p);
    let mut cost = f.norm_squared();
    let mut mu = 1e-3;
    for _ in 0..max_iters {
        let inf = f.amax();
        if inf < 1e-14 {
            break;
        }
        let jac = prob.jacobian(&p);
        let jtj = jac.transpose() * &jac;
        let g = jac.transpose() * &f;
        let mut stepped = false;
        for _ in 0..20 {
            // Marquardt scaling with a small ridge for rank-deficient systems.
            let mut m = jtj.clone();
            for i in 0..prob.n_unknowns {
                m[(i, i)] += mu * jtj[(i, i)].max(1e-12);
            }
            let Some(chol) = m.cholesky() else {
                mu *= 4.0;
                continue;
            };
            let delta = chol.solve(&(-&g));
            let trial = &p + &delta;
            let f_trial = prob.residual_vec(&trial);
            let cost_trial = f_trial.norm_squared();
            if cost_trial < cost {
                p = trial;
                f = f_trial;
                cost = cost_trial;
                mu = (mu / 3.0).max(1e-12);
                stepped = true;
                break;
            }
            mu *= 4.0;
        }
        if !stepped {
            break;
        }
    }
    let inf = f.amax();
    (p, inf)
}

fn point_distance(a: &(Vec3, f64), b: &(Vec3, f64)) -> f64 {
    ((a.0 - b.0).norm_squared() + (a.1 - b.1).powi(2)).sqrt()
}

fn dedup(points: &[(Vec3, f64, f64)], radius: f64) -> Vec<(Vec3, f64, f64)> {
    let mut kept: Vec<(Vec3, f64, f64)> = Vec::new();
    for pt in points {
        if kept
            .iter()
            .all(|k| point_distance(&(k.0, k.1), &(pt.0, pt.1)) >= radius)
        {
            kept.push(*pt);
        }
    }
    kept
}

/// Finds left-invariant solutions of the soliton equation at fixed
/// `(alpha, beta)`, with `lambda` fixed or free per the configuration.
pub fn solve(
    inst: &FamilyInstance,
    alpha: f64,
    beta: f64,
    lambda: Option<f64>,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    cfg.validate(lambda.is_some())?;
    let prob = Problem::new(inst, alpha, beta, lambda);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut converged: Vec<(Vec3, f64, f64)> = Vec::new();
    let mut n_converged = 0usize;
    let mut best = f64::INFINITY;
    for _ in 0..cfg.starts {
        let start = DVector::from_iterator(
            prob.n_unknowns,
            (0..prob.n_unknowns).map(|_| rng.gen_range(-cfg.box_radius..cfg.box_radius)),
        );
        let (p, inf) = levenberg_marquardt(&prob, start, cfg.max_iters);
        best = best.min(inf);
        if inf < cfg.tol {
            n_converged += 1;
            let (x, lam) = prob.split(&p);
            converged.push((x, lam, inf));
        }
    }

    // Canonical order before dedup makes the result independent of start order.
    converged.sort_by(|a, b| {
        a.0[0]
            .total_cmp(&b.0[0])
            .then(a.0[1].total_cmp(&b.0[1]))
            .then(a.0[2].total_cmp(&b.0[2]))
            .then(a.1.total_cmp(&b.1))
    });

    let fine = dedup(&converged, cfg.dedup_radius / 10.0);
    let coarse = dedup(&converged, cfg.dedup_radius);
    let expected = cfg.expected_isolated.unwrap_or(1usize << prob.n_unknowns);
    let threshold = 10 * expected;
    let manifold_flag = fine.len() >= threshold;

    let solutions = coarse
        .iter()
        .map(|&(x, lam, inf)| FoundSolution {
            x: [x[0], x[1], x[2]],
            lambda: lam,
            residual_inf: inf,
            trivial: x.amax() <= NONTRIVIAL_NORM && beta.abs() <= 1e-12 && lam.abs() <= 1e-9,
        })
        .collect();

    Ok(SolutionSet {
        solutions,
        manifold_flag,
        diagnostics: Diagnostics {
            starts: cfg.starts,
            converged: n_converged,
            accepted: coarse.len(),
            distinct_fine: fine.len(),
            manifold_threshold: threshold,
            best_residual: best,
        },
    })
}

/// One grid point of a parameter sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: FamilyTag,
    pub params: Vec<(String, f64)>,
    pub alpha: f64,
    pub beta: f64,
    /// Number of distinct nontrivial solutions (`|X| > 1e-4`) found.
    pub n_solutions: usize,
    /// Best residual seen across all starts, accepted or not.
    pub min_residual: f64,
    pub ew_compat: bool,
    pub ps_compat: bool,
    pub vnh_compat: bool,
    pub einstein: bool,
    pub manifold_flag: bool,
    #[serde(skip)]
    pub solutions: Vec<FoundSolution>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Grid points that violated the family constraints, with the reason.
    pub skipped: Vec<(Vec<(String, f64)>, String)>,
}

/// Runs `solve` over the cartesian product of per-parameter value lists.
/// Grid points violating the family constraints are skipped and logged.
pub fn sweep(
    family: FamilyTag,
    grid: &[(String, Vec<f64>)],
    alpha: f64,
    beta: f64,
    cfg: &SolveConfig,
) -> Result<SweepReport> {
    if grid.is_empty() || grid.iter().any(|(_, vs)| vs.is_empty()) {
        return Err(Error::Config("sweep grid must be non-empty".into()));
    }
    let names: Vec<&str> = grid.iter().map(|(n, _)| n.as_str()).collect();
    {
        let required = family.param_names();
        if names.len() != required.len() || !required.iter().all(|r| names.contains(r)) {
            return Err(Error::Config(format!(
                "grid must cover exactly the parameters {:?} of {}",
                required,
                family.kebab()
            )));
        }
    }

    let sizes: Vec<usize> = grid.iter().map(|(_, v)| v.len()).collect();
    let total: usize = sizes.iter().product();
    let ab = alpha * beta;
    let ew_compat = (ab + 1.0).abs() <= 1e-12;
    let ps_compat = (ab + 0.5).abs() <= 1e-12;
    let vnh_compat = (ab - 0.5).abs() <= 1e-12 || (ab - 1.0).abs() <= 1e-12;

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for flat in 0..total {
        let mut idx = flat;
        let mut point: Vec<(String, f64)> = Vec::with_capacity(grid.len());
        for ((name, values), &size) in grid.iter().zip(&sizes) {
            point.push((name.clone(), values[idx % size]));
            idx /= size;
        }
        let map: std::collections::BTreeMap<String, f64> =
            point.iter().map(|(k, v)| (k.clone(), *v)).collect();
        let inst = match FamilyInstance::new(family, &map) {
            Ok(inst) => inst,
            Err(err) => {
                skipped.push((point, err.to_string()));
                continue;
            }
        };
        let set = solve(&inst, alpha, beta, None, cfg)?;
        let n_solutions = set
            .solutions
            .iter()
            .filter(|s| s.x_vec().amax() > NONTRIVIAL_NORM)
            .count();
        rows.push(SweepRow {
            family,
            params: point,
            alpha,
            beta,
            n_solutions,
            min_residual: set.diagnostics.best_residual,
            ew_compat,
            ps_compat,
            vnh_compat,
            einstein: crate::curvature::curvature_report(&inst).is_einstein,
            manifold_flag: set.manifold_flag,
            solutions: set.solutions,
        });
    }
    Ok(SweepReport { rows, skipped })
}

/// Fixed CSV header used by the CLI for every family; params absent from a
/// family are left blank.
pub const SWEEP_CSV_HEADER: &str =
    "family,A,B,C,D,eta,alpha,beta,n_solutions,min_residual,ew_compat,ps_compat,vnh_compat";

pub fn sweep_row_csv(row: &SweepRow) -> String {
    let mut cells: Vec<String> = vec![row.family.kebab().to_string()];
    for name in ["A", "B", "C", "D", "eta"] {
        let cell = row
            .params
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| format!("{v}"))
            .unwrap_or_default();
        cells.push(cell);
    }
    cells.push(format!("{}", row.alpha));
    cells.push(format!("{}", row.beta));
    cells.push(format!("{}", row.n_solutions));
    cells.push(format!("{:e}", row.min_residual));
    cells.push(format!("{}", row.ew_compat));
    cells.push(format!("{}", row.ps_compat));
    cells.push(format!("{}", row.vnh_compat));
    cells.join(",")
}
