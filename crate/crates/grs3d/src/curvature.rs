//! Levi-Civita connection and curvature for a catalog instance.
//!
//! For left-invariant metrics the Koszul formula collapses to structure
//! constants: `2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)`.
//! Curvature sign conventions are
//! `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z` and
//! `Ric(X,Y) = sum_i eps_i g(R(e_i,X)Y, e_i)`, which reproduce the catalog's
//! reference Ricci matrices.

use serde::Serialize;

use crate::algebra::{FamilyInstance, MetricSignature};
use crate::{inf_norm, scaled_tol, Error, Mat3, Result, Vec3};

/// Relative tolerance for the curvature predicates.
pub const CURV_REL_TOL: f64 = 1e-10;

/// Connection coefficients `Gamma[i][j][k]` with
/// `nabla_{e_i} e_j = sum_k Gamma[i][j][k] e_k`.
#[derive(Debug, Clone)]
pub struct Connection {
    pub gamma: [[[f64; 3]; 3]; 3],
}

impl Connection {
    /// `nabla_{e_i} v` for a left-invariant `v`.
    pub fn nabla_basis(&self, i: usize, v: &Vec3) -> Vec3 {
        let mut out = Vec3::zeros();
        for j in 0..3 {
            if v[j] != 0.0 {
                for k in 0..3 {
                    out[k] += v[j] * self.gamma[i][j][k];
                }
            }
        }
        out
    }

    /// `nabla_u v` for left-invariant `u`, `v`.
    pub fn nabla(&self, u: &Vec3, v: &Vec3) -> Vec3 {
        let mut out = Vec3::zeros();
        for i in 0..3 {
            if u[i] != 0.0 {
                out += self.nabla_basis(i, v) * u[i];
            }
        }
        out
    }
}

/// Koszul formula specialized to the left-invariant frame.
#[allow(clippy::needless_range_loop)]
pub fn connection(inst: &FamilyInstance) -> Connection {
    let st = inst.structure_tensor();
    let eps = inst.signature().causal_signs();
    // c_low[i][j][k] = g([e_i,e_j], e_k)
    let mut cl = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                cl[i][j][k] = st.c[i][j][k] * eps[k];
            }
        }
    }
    let mut gamma = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let low = 0.5 * (cl[i][j][k] - cl[j][k][i] + cl[k][i][j]);
                gamma[i][j][k] = low * eps[k];
            }
        }
    }
    Connection { gamma }
}

/// Full curvature tensor, `R(e_i,e_j)e_k = sum_l riem[i][j][k][l] e_l`.
#[derive(Debug, Clone)]
pub struct CurvatureTensor {
    pub riem: [[[[f64; 3]; 3]; 3]; 3],
    eps: [f64; 3],
}

impl CurvatureTensor {
    /// `R(u,v)w` by multilinear extension.
    pub fn apply(&self, u: &Vec3, v: &Vec3, w: &Vec3) -> Vec3 {
        let mut out = Vec3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let s = u[i] * v[j] * w[k];
                    if s != 0.0 {
                        for l in 0..3 {
                            out[l] += s * self.riem[i][j][k][l];
                        }
                    }
                }
            }
        }
        out
    }

    /// Ricci tensor `Ric(e_a, e_b) = sum_i <R(e_i,e_a)e_b, e^i>`.
    pub fn ricci(&self) -> Mat3 {
        Mat3::from_fn(|a, b| (0..3).map(|i| self.riem[i][a][b][i]).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.riem
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Max defect of the first Bianchi identity over the frame.
    pub fn bianchi_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let s =
                            self.riem[i][j][k][l] + self.riem[j][k][i][l] + self.riem[k][i][j][l];
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    fn eps(&self) -> [f64; 3] {
        self.eps
    }
}

/// Assemble the curvature tensor from the connection.
#[allow(clippy::needless_range_loop)]
pub fn curvature_tensor(inst: &FamilyInstance, conn: &Connection) -> CurvatureTensor {
    let st = inst.structure_tensor();
    let g = &conn.gamma;
    let mut riem = [[[[0.0; 3]; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let mut v = 0.0;
                    for m in 0..3 {
                        v += g[j][k][m] * g[i][m][l]
                            - g[i][k][m] * g[j][m][l]
                            - st.c[i][j][m] * g[m][k][l];
                    }
                    riem[i][j][k][l] = v;
                }
            }
        }
    }
    CurvatureTensor {
        riem,
        eps: inst.signature().causal_signs(),
    }
}

/// Ricci tensor of the instance.
pub fn ricci(inst: &FamilyInstance) -> Mat3 {
    curvature_tensor(inst, &connection(inst)).ricci()
}

/// Sectional curvature of the plane spanned by `u`, `v`; `None` when the
/// plane is degenerate.
pub fn sectional_curvature(
    curv: &CurvatureTensor,
    sig: MetricSignature,
    u: &Vec3,
    v: &Vec3,
) -> Option<f64> {
    let q = sig.dot(u, u) * sig.dot(v, v) - sig.dot(u, v).powi(2);
    let scale = (u.amax() * v.amax()).powi(2);
    if q.abs() <= 1e-9 * scale.max(1e-9) {
        return None;
    }
    let r = curv.apply(u, v, v);
    Some(sig.dot(&r, u) / q)
}

/// Curvature summary with the geometric predicates.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureReport {
    pub ricci: [[f64; 3]; 3],
    pub scalar_curvature: f64,
    /// Sectional curvatures of the coordinate planes (12, 13, 23).
    pub sectional: [f64; 3],
    pub is_einstein: bool,
    pub is_flat: bool,
    pub constant_sectional: bool,
    pub sectional_constant: Option<f64>,
}

pub fn curvature_report(inst: &FamilyInstance) -> CurvatureReport {
    let conn = connection(inst);
    let curv = curvature_tensor(inst, &conn);
    let ric = curv.ricci();
    let eps = curv.eps();
    let scalar: f64 = (0..3).map(|i| eps[i] * ric[(i, i)]).sum();
    let scale = curv.max_abs().max(inf_norm(&ric));
    let tol = scaled_tol(CURV_REL_TOL, scale);

    let g = inst.signature().metric();
    let einstein_defect = inf_norm(&(ric - g * (scalar / 3.0)));
    let is_einstein = einstein_defect <= tol;
    let is_flat = curv.max_abs() <= tol;

    // Constant curvature K satisfies R(x,y)z = K (g(y,z) x - g(x,z) y);
    // in the frame: riem[i][j][k][l] = K (g_jk d_il - g_ik d_jl), K = S/6.
    let k = scalar / 6.0;
    let mut const_defect: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            for kk in 0..3 {
                for l in 0..3 {
                    let gjk = if j == kk { eps[j] } else { 0.0 };
                    let gik = if i == kk { eps[i] } else { 0.0 };
                    let model =
                        k * (gjk * f64::from(u8::from(i == l)) - gik * f64::from(u8::from(j == l)));
                    const_defect = const_defect.max((curv.riem[i][j][kk][l] - model).abs());
                }
            }
        }
    }
    let constant_sectional = const_defect <= tol;

    let e = [Vec3::x(), Vec3::y(), Vec3::z()];
    let sig = inst.signature();
    let sectional = [
        sectional_curvature(&curv, sig, &e[0], &e[1]).unwrap_or(f64::NAN),
        sectional_curvature(&curv, sig, &e[0], &e[2]).unwrap_or(f64::NAN),
        sectional_curvature(&curv, sig, &e[1], &e[2]).unwrap_or(f64::NAN),
    ];

    CurvatureReport {
        ricci: [
            [ric[(0, 0)], ric[(0, 1)], ric[(0, 2)]],
            [ric[(1, 0)], ric[(1, 1)], ric[(1, 2)]],
            [ric[(2, 0)], ric[(2, 1)], ric[(2, 2)]],
        ],
        scalar_curvature: scalar,
        sectional,
        is_einstein,
        is_flat,
        constant_sectional,
        sectional_constant: constant_sectional.then_some(k),
    }
}

/// Outcome of the parallel-degenerate-line-field probe for a vector `X`.
#[derive(Debug, Clone, Serialize)]
pub struct RecurrenceReport {
    pub g_xx: f64,
    pub is_light_like: bool,
    /// True iff `nabla_{e_i} X` is proportional to `X` for every `i`.
    pub is_recurrent: bool,
    /// Coefficients with `nabla_{e_i} X = omega_i X`, when recurrent.
    pub omega: Option<[f64; 3]>,
    pub max_defect: f64,
}

/// Checks whether `X` spans a parallel degenerate line field:
/// `X` light-like and `nabla X = omega (x) X`.
#[allow(clippy::needless_range_loop)]
pub fn null_recurrence_check(inst: &FamilyInstance, x: &Vec3) -> Result<RecurrenceReport> {
    if inst.signature() != MetricSignature::Lorentzian {
        return Err(Error::Domain(
            "null recurrence is only meaningful for Lorentzian instances".into(),
        ));
    }
    if x.amax() == 0.0 {
        return Err(Error::Domain("X must be nonzero".into()));
    }
    let sig = inst.signature();
    let g_xx = sig.dot(x, x);
    let is_light_like = g_xx.abs() <= scaled_tol(CURV_REL_TOL, x.amax().powi(2));

    let conn = connection(inst);
    let pivot = (0..3)
        .max_by(|&a, &b| x[a].abs().total_cmp(&x[b].abs()))
        .unwrap();
    let mut omega = [0.0; 3];
    let mut defect: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 0..3 {
        let d = conn.nabla_basis(i, x);
        omega[i] = d[pivot] / x[pivot];
        let r = d - x * omega[i];
        defect = defect.max(r.amax());
        scale = scale.max(d.amax());
    }
    let is_recurrent = defect <= scaled_tol(CURV_REL_TOL, scale.max(x.amax()));
    Ok(RecurrenceReport {
        g_xx,
        is_light_like,
        is_recurrent,
        omega: is_recurrent.then_some(omega),
        max_defect: defect,
    })
}
