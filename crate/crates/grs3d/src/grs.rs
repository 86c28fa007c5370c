//! The generalized Ricci soliton residual and its per-family scalar systems.
//!
//! The residual is the matrix
//! `L_X g + 2 alpha X^flat (.) X^flat - 2 beta Ric - 2 lambda g`,
//! whose vanishing is the soliton equation. Each family also carries its
//! reference six-equation scalar system in the exact printed layout; the two
//! routes agree line by line up to the per-line scale recorded in the
//! descriptor.

use serde::{Deserialize, Serialize};

use crate::algebra::{FamilyInstance, FamilyTag, MetricSignature};
use crate::curvature::ricci;
use crate::{inf_norm, Mat3, Vec3};

/// The constant triple of the soliton equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolitonParams {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
}

impl SolitonParams {
    pub fn new(alpha: f64, beta: f64, lambda: f64) -> Self {
        SolitonParams {
            alpha,
            beta,
            lambda,
        }
    }
}

/// A left-invariant vector paired with soliton constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CandidateSolution {
    pub x: [f64; 3],
    pub params: SolitonParams,
}

impl CandidateSolution {
    pub fn new(x: Vec3, params: SolitonParams) -> Self {
        CandidateSolution {
            x: [x[0], x[1], x[2]],
            params,
        }
    }

    pub fn x_vec(&self) -> Vec3 {
        Vec3::new(self.x[0], self.x[1], self.x[2])
    }

    /// The excluded trivial combination: `X = 0` with `beta = lambda = 0`.
    pub fn is_trivial(&self, tol: f64) -> bool {
        self.x_vec().amax() <= tol
            && self.params.beta.abs() <= tol
            && self.params.lambda.abs() <= tol
    }
}

/// `(L_X g)(e_i, e_j) = -g([X, e_i], e_j) - g(e_i, [X, e_j])`.
pub fn lie_derivative_metric(inst: &FamilyInstance, x: &Vec3) -> Mat3 {
    let st = inst.structure_tensor();
    let sig = inst.signature();
    let e = [Vec3::x(), Vec3::y(), Vec3::z()];
    let ad_x: Vec<Vec3> = (0..3).map(|i| st.bracket(x, &e[i])).collect();
    Mat3::from_fn(|i, j| -sig.dot(&ad_x[i], &e[j]) - sig.dot(&e[i], &ad_x[j]))
}

/// Symmetric square of the musical flat: entry `(i,j)` is
/// `eps_i eps_j X_i X_j`.
pub fn flat_square(x: &Vec3, sig: MetricSignature) -> Mat3 {
    let eps = sig.causal_signs();
    Mat3::from_fn(|i, j| eps[i] * eps[j] * x[i] * x[j])
}

/// Residual of the soliton equation for one candidate.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub matrix: [[f64; 3]; 3],
    /// Upper-triangle entries in the fixed order (11, 22, 33, 12, 13, 23).
    pub six_equations: [f64; 6],
    pub inf_norm: f64,
    pub passes: bool,
    pub trivial: bool,
}

/// Component order shared by the residual report and the scalar systems.
pub const COMPONENT_ORDER: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];

/// Residual matrix without the report wrapper; `ric` may be precomputed.
pub fn residual_matrix(
    inst: &FamilyInstance,
    ric: &Mat3,
    x: &Vec3,
    params: &SolitonParams,
) -> Mat3 {
    let sig = inst.signature();
    let lie = lie_derivative_metric(inst, x);
    let fs = flat_square(x, sig);
    let g = sig.metric();
    let raw =
        lie + fs * (2.0 * params.alpha) - ric * (2.0 * params.beta) - g * (2.0 * params.lambda);
    // Symmetric by construction up to roundoff; symmetrize exactly.
    (raw + raw.transpose()) * 0.5
}

pub fn residual(inst: &FamilyInstance, cand: &CandidateSolution, tol: f64) -> ResidualReport {
    let ric = ricci(inst);
    residual_with_ricci(inst, &ric, cand, tol)
}

pub fn residual_with_ricci(
    inst: &FamilyInstance,
    ric: &Mat3,
    cand: &CandidateSolution,
    tol: f64,
) -> ResidualReport {
    let m = residual_matrix(inst, ric, &cand.x_vec(), &cand.params);
    let six = COMPONENT_ORDER.map(|(i, j)| m[(i, j)]);
    let norm = inf_norm(&m);
    ResidualReport {
        matrix: [
            [m[(0, 0)], m[(0, 1)], m[(0, 2)]],
            [m[(1, 0)], m[(1, 1)], m[(1, 2)]],
            [m[(2, 0)], m[(2, 1)], m[(2, 2)]],
        ],
        six_equations: six,
        inf_norm: norm,
        passes: norm < tol,
        trivial: cand.is_trivial(1e-12),
    }
}

/// One line of a printed scalar system, as layout metadata: which residual
/// component it encodes, the scale relating the printed line to that
/// component, and the coefficient of `lambda` on the printed right-hand side.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SystemLine {
    pub component: (usize, usize),
    pub scale: f64,
    pub lambda_coeff: f64,
}

/// The six-equation scalar system of a family, in the printed layout.
///
/// `eval` computes the printed lines as `LHS - RHS` directly from the
/// transcribed polynomials; `lines` records how each maps onto the residual
/// components (`LHS - RHS = scale * residual_component`).
#[derive(Debug, Clone)]
pub struct ScalarSystem {
    inst: FamilyInstance,
    pub alpha: f64,
    pub beta: f64,
    pub lines: [SystemLine; 6],
}

pub fn scalar_system(inst: &FamilyInstance, alpha: f64, beta: f64) -> ScalarSystem {
    let diag_scale = match inst.tag() {
        FamilyTag::SpecialRiem | FamilyTag::SpecialLor => 0.5,
        _ => 1.0,
    };
    // Diagonal lines end in (+/-) lambda terms; the time-like slot flips sign
    // in Lorentzian signature. Off-diagonal lines have zero right-hand side.
    let lam = match inst.tag() {
        FamilyTag::SpecialRiem => [1.0, 1.0, 1.0],
        FamilyTag::SpecialLor => [1.0, 1.0, -1.0],
        t if t.signature() == MetricSignature::Riemannian => [2.0, 2.0, 2.0],
        _ => [2.0, 2.0, -2.0],
    };
    let lines = [
        SystemLine {
            component: (0, 0),
            scale: diag_scale,
            lambda_coeff: lam[0],
        },
        SystemLine {
            component: (1, 1),
            scale: diag_scale,
            lambda_coeff: lam[1],
        },
        SystemLine {
            component: (2, 2),
            scale: diag_scale,
            lambda_coeff: lam[2],
        },
        SystemLine {
            component: (0, 1),
            scale: 1.0,
            lambda_coeff: 0.0,
        },
        SystemLine {
            component: (0, 2),
            scale: 1.0,
            lambda_coeff: 0.0,
        },
        SystemLine {
            component: (1, 2),
            scale: 1.0,
            lambda_coeff: 0.0,
        },
    ];
    ScalarSystem {
        inst: *inst,
        alpha,
        beta,
        lines,
    }
}

impl ScalarSystem {
    /// Printed lines evaluated as `LHS - RHS` at `(X, lambda)`.
    ///
    /// The polynomials are transcribed family by family from the reference
    /// systems and are independent of the curvature engine.
    pub fn eval(&self, x: &Vec3, lambda: f64) -> [f64; 6] {
        let (a, b, c, d) = (self.inst.a(), self.inst.b(), self.inst.c(), self.inst.d());
        let eta = self.inst.eta();
        let (al, be) = (self.alpha, self.beta);
        let (x1, x2, x3) = (x[0], x[1], x[2]);
        let l = lambda;
        match self.inst.tag() {
            FamilyTag::RiemUnimodular => [
                2.0 * al * x1 * x1 - be * (a * a - b * b - c * c + 2.0 * b * c) - 2.0 * l,
                2.0 * al * x2 * x2 + be * (a * a - b * b + c * c - 2.0 * a * c) - 2.0 * l,
                2.0 * al * x3 * x3 + be * (a * a + b * b - c * c - 2.0 * a * b) - 2.0 * l,
                (a - b) * x3 + 2.0 * al * x1 * x2,
                (c - a) * x2 + 2.0 * al * x1 * x3,
                (b - c) * x1 + 2.0 * al * x2 * x3,
            ],
            FamilyTag::RiemNonunimodular => [
                2.0 * al * x1 * x1 + be * (2.0 * a * a + b * b + c * c + 2.0 * d * d + 2.0 * b * c)
                    - 2.0 * l,
                -2.0 * a * x1
                    + 2.0 * al * x2 * x2
                    + be * (2.0 * a * a + b * b - c * c + 2.0 * a * d)
                    - 2.0 * l,
                -2.0 * d * x1
                    + 2.0 * al * x3 * x3
                    + be * (2.0 * d * d - b * b + c * c + 2.0 * a * d)
                    - 2.0 * l,
                a * x2 + c * x3 + 2.0 * al * x1 * x2,
                b * x2 + d * x3 + 2.0 * al * x1 * x3,
                -(b + c) * x1 + 2.0 * al * x2 * x3,
            ],
            FamilyTag::G1 => [
                2.0 * a * (x2 - x3) + 2.0 * al * x1 * x1 + be * b * b - 2.0 * l,
                2.0 * a * x3 + 2.0 * al * x2 * x2 + be * (4.0 * a * a + b * b) - 2.0 * l,
                2.0 * a * x2 + 2.0 * al * x3 * x3 + be * (4.0 * a * a - b * b) + 2.0 * l,
                -a * x1 + 2.0 * al * x1 * x2 + 2.0 * be * a * b,
                a * x1 - 2.0 * al * x1 * x3 - 2.0 * be * a * b,
                -a * (x2 + x3) - 2.0 * al * x2 * x3 - 4.0 * be * a * a,
            ],
            FamilyTag::G2 => [
                2.0 * al * x1 * x1 + be * (a * a + 4.0 * c * c) - 2.0 * l,
                2.0 * c * x1 + 2.0 * al * x2 * x2 - be * (a * a - 2.0 * a * b) - 2.0 * l,
                2.0 * c * x1 + 2.0 * al * x3 * x3 + be * (a * a - 2.0 * a * b) + 2.0 * l,
                -c * x2 + (a - b) * x3 + 2.0 * al * x1 * x2,
                (b - a) * x2 - c * x3 - 2.0 * al * x1 * x3,
                -2.0 * al * x2 * x3 - 2.0 * be * c * (a - 2.0 * b),
            ],
            FamilyTag::G3 => [
                2.0 * al * x1 * x1 + be * (a * a - b * b - c * c + 2.0 * b * c) - 2.0 * l,
                2.0 * al * x2 * x2 - be * (a * a - b * b + c * c - 2.0 * a * c) - 2.0 * l,
                2.0 * al * x3 * x3 + be * (a * a + b * b - c * c - 2.0 * a * b) + 2.0 * l,
                (a - b) * x3 + 2.0 * al * x1 * x2,
                (c - a) * x2 - 2.0 * al * x1 * x3,
                (b - c) * x1 - 2.0 * al * x2 * x3,
            ],
            FamilyTag::G4 => [
                2.0 * al * x1 * x1 + be * a * a - 2.0 * l,
                2.0 * x1 + 2.0 * al * x2 * x2
                    - be * (a * a + 4.0 * eta * (a - b) - 2.0 * a * b + 4.0)
                    - 2.0 * l,
                2.0 * x1
                    + 2.0 * al * x3 * x3
                    + be * (a * a - 2.0 * a * b - 4.0 + 4.0 * eta * b)
                    + 2.0 * l,
                -x2 + (a - b) * x3 + 2.0 * al * x1 * x2,
                (b - a - 2.0 * eta) * x2 - x3 - 2.0 * al * x1 * x3,
                2.0 * eta * x1 - 2.0 * al * x2 * x3 - 2.0 * be * (a + 2.0 * (eta - b)),
            ],
            FamilyTag::G5 => [
                2.0 * a * x3 + 2.0 * al * x1 * x1
                    - be * (2.0 * a * a + b * b - c * c + 2.0 * a * d)
                    - 2.0 * l,
                2.0 * d * x3 + 2.0 * al * x2 * x2
                    - be * (2.0 * a * d - b * b + c * c + 2.0 * d * d)
                    - 2.0 * l,
                2.0 * al * x3 * x3
                    + be * (2.0 * a * a + b * b + c * c + 2.0 * d * d + 2.0 * b * c)
                    + 2.0 * l,
                (b + c) * x3 + 2.0 * al * x1 * x2,
                -a * x1 - c * x2 - 2.0 * al * x1 * x3,
                -b * x1 - d * x2 - 2.0 * al * x2 * x3,
            ],
            FamilyTag::G6 => [
                2.0 * al * x1 * x1 + be * (2.0 * a * a - b * b - c * c + 2.0 * d * d + 2.0 * b * c)
                    - 2.0 * l,
                -2.0 * a * x1
                    + 2.0 * al * x2 * x2
                    + be * (2.0 * a * a - b * b + c * c + 2.0 * a * d)
                    - 2.0 * l,
                2.0 * d * x1 + 2.0 * al * x3 * x3
                    - be * (2.0 * a * d + b * b - c * c + 2.0 * d * d)
                    + 2.0 * l,
                a * x2 + c * x3 + 2.0 * al * x1 * x2,
                -b * x2 - d * x3 - 2.0 * al * x1 * x3,
                (b - c) * x1 - 2.0 * al * x2 * x3,
            ],
            FamilyTag::G7 => [
                -2.0 * a * (x2 - x3) + 2.0 * al * x1 * x1 + be * c * c - 2.0 * l,
                2.0 * b * x1
                    + 2.0 * d * x3
                    + 2.0 * al * x2 * x2
                    + be * (2.0 * a * a - 2.0 * a * d - c * c + 2.0 * b * c)
                    - 2.0 * l,
                2.0 * b * x1
                    + 2.0 * d * x2
                    + 2.0 * al * x3 * x3
                    + be * (2.0 * a * a - 2.0 * a * d + c * c + 2.0 * b * c)
                    + 2.0 * l,
                a * x1 - b * x2 + (b + c) * x3 + 2.0 * al * x1 * x2,
                -a * x1 + (b - c) * x2 - b * x3 - 2.0 * al * x1 * x3,
                -2.0 * b * x1
                    - d * x2
                    - d * x3
                    - 2.0 * al * x2 * x3
                    - 2.0 * be * (a * a - a * d + b * c),
            ],
            FamilyTag::SpecialRiem => {
                let q = a * a + b * b + c * c;
                [
                    b * x2 + c * x3 + al * x1 * x1 + 2.0 * be * q - l,
                    a * x1 + c * x3 + al * x2 * x2 + 2.0 * be * q - l,
                    a * x1 + b * x2 + al * x3 * x3 + 2.0 * be * q - l,
                    -b * x1 - a * x2 + 2.0 * al * x1 * x2,
                    -c * x1 - a * x3 + 2.0 * al * x1 * x3,
                    -c * x2 - b * x3 + 2.0 * al * x2 * x3,
                ]
            }
            FamilyTag::SpecialLor => {
                let q = a * a + b * b - c * c;
                [
                    b * x2 + c * x3 + al * x1 * x1 + 2.0 * be * q - l,
                    a * x1 + c * x3 + al * x2 * x2 + 2.0 * be * q - l,
                    -a * x1 - b * x2 + al * x3 * x3 - 2.0 * be * q + l,
                    -b * x1 - a * x2 + 2.0 * al * x1 * x2,
                    -c * x1 + a * x3 - 2.0 * al * x1 * x3,
                    -c * x2 + b * x3 - 2.0 * al * x2 * x3,
                ]
            }
        }
    }
}

/// The named special cases of the soliton equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedEquation {
    #[serde(rename = "KILLING")]
    Killing,
    #[serde(rename = "HOMOTHETIC")]
    Homothetic,
    #[serde(rename = "RICCI_SOLITON")]
    RicciSoliton,
    #[serde(rename = "EINSTEIN_WEYL")]
    EinsteinWeyl,
    #[serde(rename = "PROJECTIVE_SKEW")]
    ProjectiveSkew,
    #[serde(rename = "NEAR_HORIZON")]
    NearHorizon,
    #[serde(rename = "GENERIC")]
    Generic,
}

impl std::fmt::Display for NamedEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            NamedEquation::Killing => "KILLING",
            NamedEquation::Homothetic => "HOMOTHETIC",
            NamedEquation::RicciSoliton => "RICCI_SOLITON",
            NamedEquation::EinsteinWeyl => "EINSTEIN_WEYL",
            NamedEquation::ProjectiveSkew => "PROJECTIVE_SKEW",
            NamedEquation::NearHorizon => "NEAR_HORIZON",
            NamedEquation::Generic => "GENERIC",
        };
        f.write_str(s)
    }
}

/// Compatibility of `(alpha, beta, lambda)` with the named equations under the
/// rescaling `(X, alpha, beta, lambda) -> (cX, alpha/c, c beta, c lambda)`,
/// which preserves the product `alpha*beta` and `lambda/beta`.
#[derive(Debug, Clone, Serialize)]
pub struct CompatReport {
    /// `alpha*beta = -1` (and `alpha != 0`).
    pub einstein_weyl: bool,
    /// `alpha*beta = -1/2` with `lambda = 0`.
    pub projective_skew: bool,
    /// Product matches either reference value for the near-horizon equation
    /// (1/2 from the equation list, 1 from the corollary arguments).
    pub near_horizon: bool,
    /// Sign of `alpha*beta`: the invariant the corollary arguments use.
    pub alpha_beta: f64,
    pub note: &'static str,
}

/// Exact-match classification plus the scaling-compatibility list.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub primary: NamedEquation,
    pub compat: CompatReport,
}

const CLASSIFY_TOL: f64 = 1e-12;

fn eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= CLASSIFY_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Classify a parameter triple into the named equations (`dim` is the
/// manifold dimension; 3 throughout this catalog).
pub fn classify_named(params: &SolitonParams, dim: u32) -> Classification {
    let SolitonParams {
        alpha,
        beta,
        lambda,
    } = *params;
    let n = f64::from(dim);
    let primary = if eq(alpha, 0.0) && eq(beta, 0.0) && eq(lambda, 0.0) {
        NamedEquation::Killing
    } else if eq(alpha, 0.0) && eq(beta, 0.0) {
        NamedEquation::Homothetic
    } else if eq(alpha, 0.0) && eq(beta, 1.0) {
        NamedEquation::RicciSoliton
    } else if eq(alpha, 1.0) && eq(beta, -1.0 / (n - 2.0)) {
        NamedEquation::EinsteinWeyl
    } else if eq(alpha, 1.0) && eq(beta, -1.0 / (n - 1.0)) && eq(lambda, 0.0) {
        NamedEquation::ProjectiveSkew
    } else if eq(alpha, 1.0) && eq(beta, 0.5) {
        NamedEquation::NearHorizon
    } else {
        NamedEquation::Generic
    };
    let ab = alpha * beta;
    let nonzero_alpha = !eq(alpha, 0.0);
    Classification {
        primary,
        compat: CompatReport {
            einstein_weyl: nonzero_alpha && eq(ab, -1.0 / (n - 2.0)),
            projective_skew: nonzero_alpha && eq(ab, -1.0 / (n - 1.0)) && eq(lambda, 0.0),
            near_horizon: nonzero_alpha && (eq(ab, 0.5) || eq(ab, 1.0)),
            alpha_beta: ab,
            note: "near-horizon product: the equation list fixes alpha*beta = 1/2 but the \
                   corollary arguments use alpha*beta = 1; both are accepted and the sign \
                   is what the existence conditions consume",
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ALL_FAMILIES;
    use crate::test_support::{closed_form_lie_derivative, random_instance};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lie_derivative_frozen_examples() {
        let inst = FamilyInstance::riem_unimodular(2.0, 1.0, 1.0).unwrap();
        let l = lie_derivative_metric(&inst, &Vec3::z());
        assert_eq!(l, Mat3::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0));

        let inst = FamilyInstance::g5(1.0, 0.0, 0.0, 1.0).unwrap();
        let l = lie_derivative_metric(&inst, &Vec3::z());
        assert_eq!(l, Mat3::from_diagonal(&Vec3::new(2.0, 2.0, 0.0)));

        assert_eq!(lie_derivative_metric(&inst, &Vec3::zeros()), Mat3::zeros());
    }

    #[test]
    fn lie_derivative_matches_closed_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for tag in ALL_FAMILIES {
            for _ in 0..20 {
                let inst = random_instance(tag, &mut rng);
                let x = Vec3::new(
                    rng.gen_range(-3.0..3.0),
                    rng.gen_range(-3.0..3.0),
                    rng.gen_range(-3.0..3.0),
                );
                if let Some(expected) = closed_form_lie_derivative(&inst, &x) {
                    let got = lie_derivative_metric(&inst, &x);
                    assert!(inf_norm(&(got - expected)) < 1e-12, "{tag:?}");
                }
            }
        }
    }

    #[test]
    fn flat_square_examples() {
        let m = flat_square(&Vec3::new(1.0, 2.0, 3.0), MetricSignature::Riemannian);
        assert_eq!(m, Mat3::new(1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 3.0, 6.0, 9.0));

        let m = flat_square(&Vec3::z(), MetricSignature::Lorentzian);
        assert_eq!(m, Mat3::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0));

        let m = flat_square(&Vec3::new(1.0, 0.0, 2.0), MetricSignature::Lorentzian);
        assert_eq!(m[(0, 2)], -2.0);
        assert_eq!(
            flat_square(&Vec3::zeros(), MetricSignature::Lorentzian),
            Mat3::zeros()
        );
    }

    #[test]
    fn residual_frozen_examples() {
        // trivial combination
        let inst = FamilyInstance::g3(1.0, 2.0, 3.0).unwrap();
        let cand = CandidateSolution::new(Vec3::zeros(), SolitonParams::new(0.7, 0.0, 0.0));
        let rep = residual(&inst, &cand, 1e-9);
        assert!(rep.passes && rep.trivial);

        // unimodular Riemannian case (4) witness
        let inst = FamilyInstance::riem_unimodular(2.0, 1.0, 1.0).unwrap();
        let cand = CandidateSolution::new(
            Vec3::new(2.0_f64.sqrt(), 0.0, 0.0),
            SolitonParams::new(1.0, 1.0, 0.0),
        );
        let rep = residual(&inst, &cand, 1e-9);
        assert!(rep.passes && !rep.trivial, "inf_norm = {}", rep.inf_norm);

        // g4 case (1) witness
        let inst = FamilyInstance::g4(1.0, 2.0, 1).unwrap();
        let cand = CandidateSolution::new(
            Vec3::new(0.0, -1.0, 1.0),
            SolitonParams::new(1.0, -1.0, -0.5),
        );
        assert!(residual(&inst, &cand, 1e-9).passes);
    }

    #[test]
    fn printed_line_spot_checks() {
        // (A - B) X3 + 2 alpha X1 X2 for the unimodular Riemannian family
        let inst = FamilyInstance::riem_unimodular(3.0, 1.0, 1.0).unwrap();
        let sys = scalar_system(&inst, 0.5, 0.0);
        let lines = sys.eval(&Vec3::new(2.0, 3.0, 5.0), 0.0);
        assert_relative_eq!(lines[3], (3.0 - 1.0) * 5.0 + 2.0 * 0.5 * 2.0 * 3.0);

        // g3 line 5 flips the quadratic sign relative to the Riemannian layout
        let inst = FamilyInstance::g3(3.0, 1.0, 2.0).unwrap();
        let sys = scalar_system(&inst, 0.5, 0.0);
        let lines = sys.eval(&Vec3::new(2.0, 3.0, 5.0), 0.0);
        assert_relative_eq!(lines[4], (2.0 - 3.0) * 3.0 - 2.0 * 0.5 * 2.0 * 5.0);

        // abelian: system reduces to 2 alpha Xi^2 = 2 lambda, 2 alpha Xi Xj = 0
        let inst = FamilyInstance::riem_unimodular(0.0, 0.0, 0.0).unwrap();
        let sys = scalar_system(&inst, 1.5, 0.7);
        let x = Vec3::new(1.0, 2.0, 3.0);
        let lines = sys.eval(&x, 2.0);
        for (n, (i, j)) in COMPONENT_ORDER.iter().enumerate() {
            let expect = if i == j {
                2.0 * 1.5 * x[*i] * x[*i] - 2.0 * 2.0
            } else {
                2.0 * 1.5 * x[*i] * x[*j]
            };
            assert_relative_eq!(lines[n], expect);
        }
    }

    #[test]
    fn system_fidelity_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for tag in ALL_FAMILIES {
            for _ in 0..30 {
                let inst = random_instance(tag, &mut rng);
                let alpha = rng.gen_range(-2.0..2.0);
                let beta = rng.gen_range(-2.0..2.0);
                let lambda = rng.gen_range(-2.0..2.0);
                let x = Vec3::new(
                    rng.gen_range(-3.0..3.0),
                    rng.gen_range(-3.0..3.0),
                    rng.gen_range(-3.0..3.0),
                );
                let cand = CandidateSolution::new(x, SolitonParams::new(alpha, beta, lambda));
                let rep = residual(&inst, &cand, 1e-9);
                let sys = scalar_system(&inst, alpha, beta);
                let lines = sys.eval(&x, lambda);
                for (n, line) in sys.lines.iter().enumerate() {
                    let want = line.scale * rep.six_equations[n];
                    let scale = lines[n].abs().max(want.abs()).max(1.0);
                    assert!(
                        (lines[n] - want).abs() <= 1e-10 * scale,
                        "{tag:?} line {} printed={} residual-route={}",
                        n + 1,
                        lines[n],
                        want
                    );
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify_named(&SolitonParams::new(0.0, 0.0, 0.0), 3);
        assert_eq!(c.primary, NamedEquation::Killing);

        let c = classify_named(&SolitonParams::new(0.0, 0.0, 2.0), 3);
        assert_eq!(c.primary, NamedEquation::Homothetic);

        let c = classify_named(&SolitonParams::new(0.0, 1.0, -0.3), 3);
        assert_eq!(c.primary, NamedEquation::RicciSoliton);

        let c = classify_named(&SolitonParams::new(1.0, -1.0, 0.7), 3);
        assert_eq!(c.primary, NamedEquation::EinsteinWeyl);

        let c = classify_named(&SolitonParams::new(1.0, -0.5, 0.0), 3);
        assert_eq!(c.primary, NamedEquation::ProjectiveSkew);

        let c = classify_named(&SolitonParams::new(1.0, 0.5, 2.0), 3);
        assert_eq!(c.primary, NamedEquation::NearHorizon);

        // generic but Einstein-Weyl compatible through c = 2
        let c = classify_named(&SolitonParams::new(2.0, -0.5, 0.0), 3);
        assert_eq!(c.primary, NamedEquation::Generic);
        assert!(c.compat.einstein_weyl);
        assert!(
            !c.compat.projective_skew,
            "alpha*beta = -1 is not the PS product"
        );

        let c = classify_named(&SolitonParams::new(2.0, 0.5, 0.0), 3);
        assert!(c.compat.near_horizon, "alpha*beta = 1 accepted for VN-H");
    }

    #[test]
    fn ricci_soliton_rescaling_identity() {
        // residual(X, 0, beta, lambda) = beta * residual(X/beta, 0, 1, lambda/beta)
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for tag in ALL_FAMILIES {
            let inst = random_instance(tag, &mut rng);
            let x = Vec3::new(1.3, -0.7, 0.4);
            let beta = -1.7;
            let lambda = 0.9;
            let lhs = residual(
                &inst,
                &CandidateSolution::new(x, SolitonParams::new(0.0, beta, lambda)),
                1e-9,
            );
            let rhs = residual(
                &inst,
                &CandidateSolution::new(x / beta, SolitonParams::new(0.0, 1.0, lambda / beta)),
                1e-9,
            );
            for k in 0..6 {
                assert_relative_eq!(
                    lhs.six_equations[k],
                    beta * rhs.six_equations[k],
                    epsilon = 1e-12,
                    max_relative = 1e-12
                );
            }
        }
    }

    proptest! {
        #[test]
        fn scaling_covariance(
            a in -3.0f64..3.0, b in -3.0f64..3.0, cc in -3.0f64..3.0,
            x in prop::array::uniform3(-3.0f64..3.0),
            alpha in -2.0f64..2.0, beta in -2.0f64..2.0, lambda in -2.0f64..2.0,
            c in prop::sample::select(vec![-3.0, -1.5, -0.5, 0.5, 2.0, 4.0]),
        ) {
            prop_assume!(alpha.abs() > 1e-3);
            let inst = FamilyInstance::g3(a, b, cc).unwrap();
            let x = Vec3::from(x);
            let base = residual(&inst, &CandidateSolution::new(x, SolitonParams::new(alpha, beta, lambda)), 1e-9);
            let scaled = residual(
                &inst,
                &CandidateSolution::new(x * c, SolitonParams::new(alpha / c, c * beta, c * lambda)),
                1e-9,
            );
            // 1e-12 relative to the residual's overall scale; individual
            // entries may vanish by cancellation of large terms.
            let scale = (c.abs() * base.inf_norm).max(scaled.inf_norm).max(1.0);
            for k in 0..6 {
                let want = c * base.six_equations[k];
                let got = scaled.six_equations[k];
                prop_assert!((got - want).abs() <= 1e-12 * scale, "k={k} got={got} want={want}");
            }
            // consequence: pass/fail transported along the scaling
            if base.inf_norm < 1e-11 {
                prop_assert!(scaled.inf_norm < 1e-9 * c.abs().max(1.0));
            }
        }

        #[test]
        fn classify_is_total(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, lambda in -3.0f64..3.0) {
            let _ = classify_named(&SolitonParams::new(alpha, beta, lambda), 3);
        }
    }
}
