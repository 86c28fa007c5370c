//! Catalog of three-dimensional metric Lie algebra families.
//!
//! Each family fixes a bracket table with respect to a (pseudo-)orthonormal
//! basis `{e1, e2, e3}` (`e3` time-like in the Lorentzian case) together with
//! the normal-form constraints on its structure parameters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Mat3, Result, Vec3};

/// Tolerance for the normal-form constraint checks on floating parameters.
pub const CONSTRAINT_TOL: f64 = 1e-12;

/// Causal signs of the frame, `(eps1, eps2, eps3)`.
///
/// Only the two patterns used by the catalog are constructible: all-plus
/// (Riemannian) and `(+, +, -)` with `e3` time-like (Lorentzian).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricSignature {
    Riemannian,
    Lorentzian,
}

impl MetricSignature {
    pub fn causal_signs(self) -> [f64; 3] {
        match self {
            MetricSignature::Riemannian => [1.0, 1.0, 1.0],
            MetricSignature::Lorentzian => [1.0, 1.0, -1.0],
        }
    }

    pub fn epsilon(self, i: usize) -> f64 {
        self.causal_signs()[i]
    }

    /// The metric tensor in the fixed frame.
    pub fn metric(self) -> Mat3 {
        let e = self.causal_signs();
        Mat3::from_diagonal(&Vec3::new(e[0], e[1], e[2]))
    }

    /// Inner product of frame-coordinate vectors.
    pub fn dot(self, u: &Vec3, v: &Vec3) -> f64 {
        let e = self.causal_signs();
        e[0] * u[0] * v[0] + e[1] * u[1] * v[1] + e[2] * u[2] * v[2]
    }
}

/// The ten metric Lie algebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    #[serde(rename = "riem-unimodular")]
    RiemUnimodular,
    #[serde(rename = "riem-nonunimodular")]
    RiemNonunimodular,
    #[serde(rename = "g1")]
    G1,
    #[serde(rename = "g2")]
    G2,
    #[serde(rename = "g3")]
    G3,
    #[serde(rename = "g4")]
    G4,
    #[serde(rename = "g5")]
    G5,
    #[serde(rename = "g6")]
    G6,
    #[serde(rename = "g7")]
    G7,
    #[serde(rename = "special-riem")]
    SpecialRiem,
    #[serde(rename = "special-lor")]
    SpecialLor,
}

pub const ALL_FAMILIES: [FamilyTag; 11] = [
    FamilyTag::RiemUnimodular,
    FamilyTag::RiemNonunimodular,
    FamilyTag::G1,
    FamilyTag::G2,
    FamilyTag::G3,
    FamilyTag::G4,
    FamilyTag::G5,
    FamilyTag::G6,
    FamilyTag::G7,
    FamilyTag::SpecialRiem,
    FamilyTag::SpecialLor,
];

impl FamilyTag {
    pub fn kebab(self) -> &'static str {
        match self {
            FamilyTag::RiemUnimodular => "riem-unimodular",
            FamilyTag::RiemNonunimodular => "riem-nonunimodular",
            FamilyTag::G1 => "g1",
            FamilyTag::G2 => "g2",
            FamilyTag::G3 => "g3",
            FamilyTag::G4 => "g4",
            FamilyTag::G5 => "g5",
            FamilyTag::G6 => "g6",
            FamilyTag::G7 => "g7",
            FamilyTag::SpecialRiem => "special-riem",
            FamilyTag::SpecialLor => "special-lor",
        }
    }

    pub fn from_kebab(name: &str) -> Result<Self> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|t| t.kebab() == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn signature(self) -> MetricSignature {
        match self {
            FamilyTag::RiemUnimodular | FamilyTag::RiemNonunimodular | FamilyTag::SpecialRiem => {
                MetricSignature::Riemannian
            }
            _ => MetricSignature::Lorentzian,
        }
    }

    /// Names of the structure parameters the family requires, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyTag::RiemUnimodular
            | FamilyTag::G2
            | FamilyTag::G3
            | FamilyTag::SpecialRiem
            | FamilyTag::SpecialLor => &["A", "B", "C"],
            FamilyTag::RiemNonunimodular | FamilyTag::G5 | FamilyTag::G6 | FamilyTag::G7 => {
                &["A", "B", "C", "D"]
            }
            FamilyTag::G1 => &["A", "B"],
            FamilyTag::G4 => &["A", "B", "eta"],
        }
    }
}

/// Lie group underlying a family instance, where the catalog identifies one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupName {
    #[serde(rename = "SU(2)")]
    Su2,
    #[serde(rename = "SL~(2,R)")]
    SlTilde2R,
    #[serde(rename = "E~(2)")]
    ETilde2,
    #[serde(rename = "E(1,1)")]
    E11,
    #[serde(rename = "H3")]
    Heisenberg,
    #[serde(rename = "R^3")]
    R3,
    #[serde(rename = "UNCLASSIFIED_NONUNIMODULAR")]
    UnclassifiedNonunimodular,
}

impl std::fmt::Display for GroupName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GroupName::Su2 => "SU(2)",
            GroupName::SlTilde2R => "SL~(2,R)",
            GroupName::ETilde2 => "E~(2)",
            GroupName::E11 => "E(1,1)",
            GroupName::Heisenberg => "H3",
            GroupName::R3 => "R^3",
            GroupName::UnclassifiedNonunimodular => "UNCLASSIFIED_NONUNIMODULAR",
        };
        f.write_str(s)
    }
}

/// Segre class of the cross-product endomorphism `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SegreLabel {
    /// Riemannian case: `L` is self-adjoint for a definite metric, hence diagonal.
    #[serde(rename = "DIAGONAL")]
    Diagonal,
    #[serde(rename = "DIAGONAL_{11,1}")]
    Diagonal111,
    #[serde(rename = "COMPLEX_{1zz}")]
    ComplexPair,
    #[serde(rename = "DOUBLE_{21}")]
    DoubleRoot,
    #[serde(rename = "TRIPLE_{3}")]
    TripleRoot,
}

/// A concrete metric Lie algebra: family tag plus structure parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyInstance {
    tag: FamilyTag,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    /// Discrete sign for `g4`; stored exactly, never as a float.
    eta: i8,
}

/// Structure constants `c[i][j][k]` with `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensor {
    pub c: [[[f64; 3]; 3]; 3],
}

impl StructureTensor {
    fn from_brackets(b12: [f64; 3], b13: [f64; 3], b23: [f64; 3]) -> Self {
        let mut c = [[[0.0; 3]; 3]; 3];
        for (i, j, v) in [(0, 1, b12), (0, 2, b13), (1, 2, b23)] {
            for k in 0..3 {
                c[i][j][k] = v[k];
                c[j][i][k] = -v[k];
            }
        }
        StructureTensor { c }
    }

    /// `[u, v]` by bilinear extension.
    pub fn bracket(&self, u: &Vec3, v: &Vec3) -> Vec3 {
        let mut out = Vec3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                let uv = u[i] * v[j];
                if uv != 0.0 {
                    for k in 0..3 {
                        out[k] += uv * self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Max absolute value of the Jacobi cyclic sum over all basis triples.
    pub fn jacobi_defect(&self) -> f64 {
        let e = [Vec3::x(), Vec3::y(), Vec3::z()];
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let s = self.bracket(&self.bracket(&e[i], &e[j]), &e[k])
                        + self.bracket(&self.bracket(&e[j], &e[k]), &e[i])
                        + self.bracket(&self.bracket(&e[k], &e[i]), &e[j]);
                    worst = worst.max(s.amax());
                }
            }
        }
        worst
    }

    /// Matrix of `ad(e_i)` acting on the frame.
    pub fn ad(&self, i: usize) -> Mat3 {
        Mat3::from_fn(|k, j| self.c[i][j][k])
    }
}

fn near_zero(v: f64, scale: f64) -> bool {
    v.abs() <= CONSTRAINT_TOL * scale.max(1.0)
}

impl FamilyInstance {
    /// Validated constructor from a named parameter map.
    ///
    /// The map must contain exactly the parameters the family requires;
    /// missing or extra names are schema errors and violated normal-form
    /// constraints are named in the error.
    pub fn new(tag: FamilyTag, params: &BTreeMap<String, f64>) -> Result<Self> {
        let required = tag.param_names();
        for name in params.keys() {
            if !required.contains(&name.as_str()) {
                return Err(Error::ParamSchema {
                    family: tag.kebab().into(),
                    message: format!("unexpected parameter `{name}`"),
                });
            }
        }
        let get = |name: &str| -> Result<f64> {
            params.get(name).copied().ok_or_else(|| Error::ParamSchema {
                family: tag.kebab().into(),
                message: format!("missing parameter `{name}`"),
            })
        };
        let a = if required.contains(&"A") {
            get("A")?
        } else {
            0.0
        };
        let b = if required.contains(&"B") {
            get("B")?
        } else {
            0.0
        };
        let c = if required.contains(&"C") {
            get("C")?
        } else {
            0.0
        };
        let d = if required.contains(&"D") {
            get("D")?
        } else {
            0.0
        };
        let eta = if required.contains(&"eta") {
            let v = get("eta")?;
            if v == 1.0 {
                1
            } else if v == -1.0 {
                -1
            } else {
                return Err(Error::ParamSchema {
                    family: tag.kebab().into(),
                    message: format!("eta must be +1 or -1, got {v}"),
                });
            }
        } else {
            1
        };
        Self::from_raw(tag, a, b, c, d, eta)
    }

    fn from_raw(tag: FamilyTag, a: f64, b: f64, c: f64, d: f64, eta: i8) -> Result<Self> {
        for v in [a, b, c, d] {
            if !v.is_finite() {
                return Err(Error::ParamSchema {
                    family: tag.kebab().into(),
                    message: "parameters must be finite".into(),
                });
            }
        }
        let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
        let constraint = |ok: bool, text: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::Constraint {
                    family: tag.kebab().into(),
                    constraint: text.into(),
                })
            }
        };
        match tag {
            FamilyTag::RiemNonunimodular | FamilyTag::G5 => {
                constraint(!near_zero(a + d, scale), "A+D != 0")?;
                constraint(near_zero(a * c + b * d, scale * scale), "AC+BD = 0")?;
            }
            FamilyTag::G6 => {
                constraint(!near_zero(a + d, scale), "A+D != 0")?;
                constraint(near_zero(a * c - b * d, scale * scale), "AC-BD = 0")?;
            }
            FamilyTag::G7 => {
                constraint(!near_zero(a + d, scale), "A+D != 0")?;
                constraint(near_zero(a * c, scale * scale), "AC = 0")?;
            }
            FamilyTag::G1 => constraint(!near_zero(a, scale), "A != 0")?,
            FamilyTag::G2 => constraint(!near_zero(c, scale), "C != 0")?,
            _ => {}
        }
        Ok(FamilyInstance {
            tag,
            a,
            b,
            c,
            d,
            eta,
        })
    }

    pub fn riem_unimodular(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::RiemUnimodular, a, b, c, 0.0, 1)
    }
    pub fn riem_nonunimodular(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::RiemNonunimodular, a, b, c, d, 1)
    }
    pub fn g1(a: f64, b: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::G1, a, b, 0.0, 0.0, 1)
    }
    pub fn g2(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::G2, a, b, c, 0.0, 1)
    }
    pub fn g3(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::G3, a, b, c, 0.0, 1)
    }
    pub fn g4(a: f64, b: f64, eta: i8) -> Result<Self> {
        if eta != 1 && eta != -1 {
            return Err(Error::ParamSchema {
                family: "g4".into(),
                message: format!("eta must be +1 or -1, got {eta}"),
            });
        }
        Self::from_raw(FamilyTag::G4, a, b, 0.0, 0.0, eta)
    }
    pub fn g5(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::G5, a, b, c, d, 1)
    }
    pub fn g6(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::G6, a, b, c, d, 1)
    }
    pub fn g7(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::G7, a, b, c, d, 1)
    }
    pub fn special_riem(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::SpecialRiem, a, b, c, 0.0, 1)
    }
    pub fn special_lor(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_raw(FamilyTag::SpecialLor, a, b, c, 0.0, 1)
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }
    pub fn signature(&self) -> MetricSignature {
        self.tag.signature()
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }
    pub fn eta(&self) -> f64 {
        f64::from(self.eta)
    }

    /// Named parameters, in the family's declared order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        self.tag
            .param_names()
            .iter()
            .map(|&n| {
                let v = match n {
                    "A" => self.a,
                    "B" => self.b,
                    "C" => self.c,
                    "D" => self.d,
                    "eta" => self.eta(),
                    _ => unreachable!(),
                };
                (n, v)
            })
            .collect()
    }

    /// The family's bracket table as a structure tensor.
    pub fn structure_tensor(&self) -> StructureTensor {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let eta = self.eta();
        match self.tag {
            FamilyTag::RiemUnimodular => {
                // [e1,e2]=C e3, [e2,e3]=A e1, [e3,e1]=B e2
                StructureTensor::from_brackets([0.0, 0.0, c], [0.0, -b, 0.0], [a, 0.0, 0.0])
            }
            FamilyTag::RiemNonunimodular => {
                // [e1,e2]=A e2+B e3, [e1,e3]=C e2+D e3, [e2,e3]=0
                StructureTensor::from_brackets([0.0, a, b], [0.0, c, d], [0.0, 0.0, 0.0])
            }
            FamilyTag::G1 => {
                // [e1,e2]=A e1-B e3, [e1,e3]=-A e1-B e2, [e2,e3]=B e1+A e2+A e3
                StructureTensor::from_brackets([a, 0.0, -b], [-a, -b, 0.0], [b, a, a])
            }
            FamilyTag::G2 => {
                // [e1,e2]=-C e2-B e3, [e1,e3]=-B e2+C e3, [e2,e3]=A e1
                StructureTensor::from_brackets([0.0, -c, -b], [0.0, -b, c], [a, 0.0, 0.0])
            }
            FamilyTag::G3 => {
                // [e1,e2]=-C e3, [e1,e3]=-B e2, [e2,e3]=A e1
                StructureTensor::from_brackets([0.0, 0.0, -c], [0.0, -b, 0.0], [a, 0.0, 0.0])
            }
            FamilyTag::G4 => {
                // [e1,e2]=-e2+(2 eta-B)e3, [e1,e3]=-B e2+e3, [e2,e3]=A e1
                StructureTensor::from_brackets(
                    [0.0, -1.0, 2.0 * eta - b],
                    [0.0, -b, 1.0],
                    [a, 0.0, 0.0],
                )
            }
            FamilyTag::G5 => {
                // [e1,e2]=0, [e1,e3]=A e1+B e2, [e2,e3]=C e1+D e2
                StructureTensor::from_brackets([0.0, 0.0, 0.0], [a, b, 0.0], [c, d, 0.0])
            }
            FamilyTag::G6 => {
                // [e1,e2]=A e2+B e3, [e1,e3]=C e2+D e3, [e2,e3]=0
                StructureTensor::from_brackets([0.0, a, b], [0.0, c, d], [0.0, 0.0, 0.0])
            }
            FamilyTag::G7 => {
                // [e1,e2]=-[e1,e3]=-A e1-B e2-B e3, [e2,e3]=C e1+D e2+D e3
                StructureTensor::from_brackets([-a, -b, -b], [a, b, b], [c, d, d])
            }
            FamilyTag::SpecialRiem | FamilyTag::SpecialLor => {
                // [e1,e2]=B e1-A e2, [e1,e3]=C e1-A e3, [e2,e3]=C e2-B e3
                StructureTensor::from_brackets([b, -a, 0.0], [c, 0.0, -a], [0.0, c, -b])
            }
        }
    }

    /// True iff every adjoint map is traceless (to 1e-12 of parameter scale).
    pub fn is_unimodular(&self) -> bool {
        let st = self.structure_tensor();
        let scale = self
            .a
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max(self.d.abs());
        (0..3).all(|i| near_zero(st.ad(i).trace(), scale))
    }

    pub fn is_abelian(&self) -> bool {
        let st = self.structure_tensor();
        st.c.iter().flatten().flatten().all(|v| v.abs() <= 1e-15)
    }

    /// Serializable `{family, params}` view.
    pub fn spec(&self) -> InstanceSpec {
        InstanceSpec {
            family: self.tag.kebab().to_string(),
            params: self
                .params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }
}

/// Wire form of an instance: `{"family": "<tag>", "params": {"A": 1.0, ...}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: String,
    pub params: BTreeMap<String, f64>,
}

impl InstanceSpec {
    pub fn build(&self) -> Result<FamilyInstance> {
        let tag = FamilyTag::from_kebab(&self.family)?;
        FamilyInstance::new(tag, &self.params)
    }
}

/// Entry point mirroring the catalog operation name.
pub fn make_instance(tag: FamilyTag, params: &BTreeMap<String, f64>) -> Result<FamilyInstance> {
    FamilyInstance::new(tag, params)
}

/// Cross product adapted to the signature.
///
/// Riemannian: the right-handed product (`e1 x e2 = e3`). Lorentzian: the
/// para-quaternionic product with `e1 x e2 = -e3`, `e2 x e3 = e1`,
/// `e3 x e1 = e2`.
pub fn cross_product(u: &Vec3, v: &Vec3, sig: MetricSignature) -> Vec3 {
    let third = u[0] * v[1] - u[1] * v[0];
    Vec3::new(
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        match sig {
            MetricSignature::Riemannian => third,
            MetricSignature::Lorentzian => -third,
        },
    )
}

/// Matrix of the endomorphism `L` defined by `[Z, Y] = L(Z x Y)`, together
/// with its Segre class.
///
/// Defined only for unimodular instances (where `L` is self-adjoint).
pub fn l_endomorphism(inst: &FamilyInstance) -> Result<(Mat3, SegreLabel)> {
    if !inst.is_unimodular() {
        return Err(Error::Domain(format!(
            "{}: L is defined via the cross product only for unimodular algebras",
            inst.tag().kebab()
        )));
    }
    let st = inst.structure_tensor();
    let (e1, e2, e3) = (Vec3::x(), Vec3::y(), Vec3::z());
    // e2 x e3 = e1 and e3 x e1 = e2 in both signatures; e1 x e2 = +/- e3.
    let col1 = st.bracket(&e2, &e3);
    let col2 = st.bracket(&e3, &e1);
    let mut col3 = st.bracket(&e1, &e2);
    if inst.signature() == MetricSignature::Lorentzian {
        col3 = -col3;
    }
    let l = Mat3::from_columns(&[col1, col2, col3]);
    Ok((l, segre_label(&l, inst.signature())))
}

/// Tolerance knob for eigenvalue coincidence / complexity in Segre labeling.
pub const SEGRE_TOL: f64 = 1e-9;

fn segre_label(l: &Mat3, sig: MetricSignature) -> SegreLabel {
    if sig == MetricSignature::Riemannian {
        return SegreLabel::Diagonal;
    }
    // Eigenvalues of a defective matrix are ill-conditioned, so classify via
    // the characteristic polynomial x^3 - t x^2 + m x - d, whose coefficients
    // are stable in the entries.
    let scale = crate::inf_norm(l).max(1.0);
    let t = l.trace();
    let m = l[(1, 1)] * l[(2, 2)] - l[(1, 2)] * l[(2, 1)] + l[(0, 0)] * l[(2, 2)]
        - l[(0, 2)] * l[(2, 0)]
        + l[(0, 0)] * l[(1, 1)]
        - l[(0, 1)] * l[(1, 0)];
    let d = l.determinant();
    let disc =
        18.0 * t * m * d - 4.0 * t.powi(3) * d + t * t * m * m - 4.0 * m.powi(3) - 27.0 * d * d;
    let tol6 = SEGRE_TOL * scale.powi(6);
    if disc < -tol6 {
        return SegreLabel::ComplexPair;
    }
    if disc > tol6 {
        return SegreLabel::Diagonal111;
    }
    // Repeated root. t^2 - 3m ~ 0 distinguishes a triple root.
    let p = t * t - 3.0 * m;
    if p.abs() <= SEGRE_TOL * scale * scale {
        let lam = t / 3.0;
        let n = l - Mat3::identity() * lam;
        if crate::inf_norm(&n) <= SEGRE_TOL * scale {
            SegreLabel::Diagonal111
        } else if crate::inf_norm(&(n * n)) <= SEGRE_TOL * scale * scale {
            SegreLabel::DoubleRoot
        } else {
            SegreLabel::TripleRoot
        }
    } else {
        // Double root of the characteristic polynomial.
        let lam = (t * m - 9.0 * d) / (2.0 * p);
        let n = l - Mat3::identity() * lam;
        let rank = n.svd(false, false).rank(SEGRE_TOL * scale);
        if rank <= 1 {
            SegreLabel::Diagonal111
        } else {
            SegreLabel::DoubleRoot
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign_of(v: f64) -> Sign {
    // Exact-zero threshold: parameters are exact inputs.
    if v > 0.0 {
        Sign::Pos
    } else if v < 0.0 {
        Sign::Neg
    } else {
        Sign::Zero
    }
}

/// Lie group identification by sign-pattern lookup.
///
/// Published tables exist for the unimodular families; every other family
/// reports [`GroupName::UnclassifiedNonunimodular`].
pub fn identify_group(inst: &FamilyInstance) -> GroupName {
    match inst.tag() {
        FamilyTag::RiemUnimodular => {
            let signs = [sign_of(inst.a()), sign_of(inst.b()), sign_of(inst.c())];
            let pos = signs.iter().filter(|&&s| s == Sign::Pos).count();
            let neg = signs.iter().filter(|&&s| s == Sign::Neg).count();
            let zero = 3 - pos - neg;
            // Basis changes realize all permutations and the global sign flip,
            // so normalize to pos >= neg and match the table rows.
            let (p, n) = if pos >= neg { (pos, neg) } else { (neg, pos) };
            match (p, n, zero) {
                (3, 0, 0) => GroupName::Su2,
                (2, 1, 0) => GroupName::SlTilde2R,
                (2, 0, 1) => GroupName::ETilde2,
                (1, 1, 1) => GroupName::E11,
                (1, 0, 2) => GroupName::Heisenberg,
                _ => GroupName::R3,
            }
        }
        FamilyTag::G1 => {
            if inst.b() != 0.0 {
                GroupName::SlTilde2R
            } else {
                GroupName::E11
            }
        }
        FamilyTag::G2 => {
            if inst.a() != 0.0 {
                GroupName::SlTilde2R
            } else {
                GroupName::E11
            }
        }
        FamilyTag::G3 => identify_g3(inst.a(), inst.b(), inst.c()),
        FamilyTag::G4 => {
            let eta_a = inst.eta() * inst.a();
            let b_is_eta = inst.b() == inst.eta();
            match (sign_of(eta_a), b_is_eta) {
                (Sign::Zero, true) => GroupName::Heisenberg,
                (Sign::Zero, false) => GroupName::E11,
                (Sign::Neg, true) => GroupName::E11,
                (Sign::Pos, true) => GroupName::ETilde2,
                (_, false) => GroupName::SlTilde2R,
            }
        }
        _ => GroupName::UnclassifiedNonunimodular,
    }
}

fn identify_g3(a: f64, b: f64, c: f64) -> GroupName {
    // Allowed basis changes act on (A,B,C) by (A,B,C) -> (-B,-A,-C) and the
    // global flip; normalize through the orbit and look up the printed rows.
    let rows: [([Sign; 3], GroupName); 10] = [
        ([Sign::Pos, Sign::Pos, Sign::Pos], GroupName::SlTilde2R),
        ([Sign::Pos, Sign::Neg, Sign::Neg], GroupName::SlTilde2R),
        ([Sign::Pos, Sign::Pos, Sign::Neg], GroupName::Su2),
        ([Sign::Pos, Sign::Pos, Sign::Zero], GroupName::ETilde2),
        ([Sign::Pos, Sign::Zero, Sign::Neg], GroupName::ETilde2),
        ([Sign::Pos, Sign::Neg, Sign::Zero], GroupName::E11),
        ([Sign::Pos, Sign::Zero, Sign::Pos], GroupName::E11),
        ([Sign::Pos, Sign::Zero, Sign::Zero], GroupName::Heisenberg),
        ([Sign::Zero, Sign::Zero, Sign::Neg], GroupName::Heisenberg),
        ([Sign::Zero, Sign::Zero, Sign::Zero], GroupName::R3),
    ];
    let flip = |s: Sign| match s {
        Sign::Pos => Sign::Neg,
        Sign::Neg => Sign::Pos,
        Sign::Zero => Sign::Zero,
    };
    let base = [sign_of(a), sign_of(b), sign_of(c)];
    let swap = [flip(base[1]), flip(base[0]), flip(base[2])];
    let orbit = [
        base,
        swap,
        [flip(base[0]), flip(base[1]), flip(base[2])],
        [base[1], base[0], base[2]],
    ];
    for pat in orbit {
        if let Some((_, g)) = rows.iter().find(|(row, _)| *row == pat) {
            return *g;
        }
    }
    // The orbit of the ten rows covers all 27 sign patterns.
    unreachable!("g3 sign pattern not covered by Table II orbit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn map(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
        pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn make_instance_validates_params() {
        let inst = make_instance(
            FamilyTag::RiemUnimodular,
            &map(&[("A", 1.0), ("B", 1.0), ("C", 1.0)]),
        )
        .unwrap();
        assert_eq!(inst.signature(), MetricSignature::Riemannian);

        let err = make_instance(
            FamilyTag::G5,
            &map(&[("A", 1.0), ("B", 0.0), ("C", 0.0), ("D", -1.0)]),
        )
        .unwrap_err();
        assert!(err.to_string().contains("A+D != 0"), "{err}");

        let err = make_instance(
            FamilyTag::G7,
            &map(&[("A", 1.0), ("B", 2.0), ("C", 1.0), ("D", 1.0)]),
        )
        .unwrap_err();
        assert!(err.to_string().contains("AC = 0"), "{err}");

        let err =
            make_instance(FamilyTag::G1, &map(&[("A", 1.0), ("B", 0.0), ("C", 3.0)])).unwrap_err();
        assert!(
            err.to_string().contains("unexpected parameter `C`"),
            "{err}"
        );

        let err = make_instance(FamilyTag::G1, &map(&[("A", 1.0)])).unwrap_err();
        assert!(err.to_string().contains("missing parameter `B`"), "{err}");

        let err = make_instance(FamilyTag::G4, &map(&[("A", 1.0), ("B", 0.0), ("eta", 0.5)]))
            .unwrap_err();
        assert!(err.to_string().contains("eta"), "{err}");
    }

    #[test]
    fn structure_tensor_matches_bracket_tables() {
        let st = FamilyInstance::riem_unimodular(2.0, 3.0, 5.0)
            .unwrap()
            .structure_tensor();
        assert_eq!(st.c[0][1][2], 5.0);
        assert_eq!(st.c[1][2][0], 2.0);
        assert_eq!(st.c[2][0][1], 3.0);
        assert_eq!(st.c[1][0][2], -5.0);

        let st = FamilyInstance::g4(7.0, 4.0, 1).unwrap().structure_tensor();
        assert_eq!(st.c[0][1][1], -1.0);
        assert_eq!(st.c[0][1][2], 2.0 - 4.0);
        assert_eq!(st.c[0][2][1], -4.0);
        assert_eq!(st.c[0][2][2], 1.0);
        assert_eq!(st.c[1][2][0], 7.0);

        let abelian = FamilyInstance::riem_unimodular(0.0, 0.0, 0.0).unwrap();
        assert!(abelian.is_abelian());
        assert_eq!(abelian.structure_tensor().jacobi_defect(), 0.0);
    }

    #[test]
    fn unimodularity_split_matches_catalog() {
        assert!(FamilyInstance::riem_unimodular(1.0, -2.0, 0.3)
            .unwrap()
            .is_unimodular());
        assert!(FamilyInstance::g1(1.5, 0.7).unwrap().is_unimodular());
        assert!(FamilyInstance::g2(0.0, 1.0, 2.0).unwrap().is_unimodular());
        assert!(FamilyInstance::g3(1.0, 2.0, 3.0).unwrap().is_unimodular());
        assert!(FamilyInstance::g4(2.0, -1.0, -1).unwrap().is_unimodular());
        assert!(!FamilyInstance::riem_nonunimodular(1.0, 0.0, 0.0, 1.0)
            .unwrap()
            .is_unimodular());
        assert!(!FamilyInstance::g5(1.0, 0.0, 0.0, 1.0)
            .unwrap()
            .is_unimodular());
        assert!(!FamilyInstance::g6(1.0, 0.0, 0.0, 1.0)
            .unwrap()
            .is_unimodular());
        assert!(!FamilyInstance::g7(0.0, 1.0, 1.0, 1.0)
            .unwrap()
            .is_unimodular());
        // trace ad(e1) = -2A for the special family
        let sp = FamilyInstance::special_riem(1.0, 0.0, 0.0).unwrap();
        assert!(!sp.is_unimodular());
        assert!((sp.structure_tensor().ad(0).trace() + 2.0).abs() < 1e-15);
        assert!(FamilyInstance::special_riem(0.0, 0.0, 0.0)
            .unwrap()
            .is_unimodular());
    }

    #[test]
    fn cross_product_conventions() {
        let (e1, e2, e3) = (Vec3::x(), Vec3::y(), Vec3::z());
        assert_eq!(cross_product(&e1, &e2, MetricSignature::Lorentzian), -e3);
        assert_eq!(cross_product(&e2, &e3, MetricSignature::Lorentzian), e1);
        assert_eq!(cross_product(&e3, &e1, MetricSignature::Lorentzian), e2);
        assert_eq!(cross_product(&e1, &e2, MetricSignature::Riemannian), e3);
        let u = Vec3::new(1.0, -2.0, 0.5);
        assert_eq!(
            cross_product(&u, &u, MetricSignature::Lorentzian),
            Vec3::zeros()
        );
    }

    #[test]
    fn l_endomorphism_diagonal_and_segre() {
        let (l, label) =
            l_endomorphism(&FamilyInstance::riem_unimodular(2.0, 3.0, 5.0).unwrap()).unwrap();
        assert_eq!(l, Mat3::from_diagonal(&Vec3::new(2.0, 3.0, 5.0)));
        assert_eq!(label, SegreLabel::Diagonal);

        let (l, label) = l_endomorphism(&FamilyInstance::g3(2.0, 3.0, 5.0).unwrap()).unwrap();
        assert_eq!(l, Mat3::from_diagonal(&Vec3::new(2.0, 3.0, 5.0)));
        assert_eq!(label, SegreLabel::Diagonal111);

        let (_, label) = l_endomorphism(&FamilyInstance::g2(1.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(label, SegreLabel::ComplexPair);

        let (_, label) = l_endomorphism(&FamilyInstance::g1(1.0, 2.0).unwrap()).unwrap();
        assert_eq!(label, SegreLabel::TripleRoot);

        let (_, label) = l_endomorphism(&FamilyInstance::g4(2.0, 1.0, 1).unwrap()).unwrap();
        assert_eq!(label, SegreLabel::DoubleRoot);

        assert!(l_endomorphism(&FamilyInstance::g5(1.0, 0.0, 0.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn l_reconstructs_brackets() {
        for inst in [
            FamilyInstance::riem_unimodular(1.3, -0.4, 2.0).unwrap(),
            FamilyInstance::g1(0.9, -1.7).unwrap(),
            FamilyInstance::g2(1.1, 0.3, -0.8).unwrap(),
            FamilyInstance::g3(-0.2, 1.4, 0.6).unwrap(),
            FamilyInstance::g4(1.2, -0.5, -1).unwrap(),
        ] {
            let (l, _) = l_endomorphism(&inst).unwrap();
            let st = inst.structure_tensor();
            let e = [Vec3::x(), Vec3::y(), Vec3::z()];
            for i in 0..3 {
                for j in 0..3 {
                    let lhs = st.bracket(&e[i], &e[j]);
                    let rhs = l * cross_product(&e[i], &e[j], inst.signature());
                    assert!((lhs - rhs).amax() < 1e-12, "{:?} ({i},{j})", inst.tag());
                }
            }
        }
    }

    #[test]
    fn identify_group_tables() {
        let ru = |a, b, c| identify_group(&FamilyInstance::riem_unimodular(a, b, c).unwrap());
        assert_eq!(ru(1.0, 1.0, 1.0), GroupName::Su2);
        assert_eq!(ru(1.0, 1.0, -1.0), GroupName::SlTilde2R);
        assert_eq!(ru(1.0, 1.0, 0.0), GroupName::ETilde2);
        assert_eq!(ru(1.0, -1.0, 0.0), GroupName::E11);
        assert_eq!(ru(1.0, 0.0, 0.0), GroupName::Heisenberg);
        assert_eq!(ru(0.0, 0.0, 0.0), GroupName::R3);
        // symmetry images
        assert_eq!(ru(-1.0, -1.0, -1.0), GroupName::Su2);
        assert_eq!(ru(-2.0, 3.0, 1.0), GroupName::SlTilde2R);
        assert_eq!(ru(0.0, 2.0, 2.0), GroupName::ETilde2);

        let g3i = |a, b, c| identify_group(&FamilyInstance::g3(a, b, c).unwrap());
        assert_eq!(g3i(1.0, 1.0, 1.0), GroupName::SlTilde2R);
        assert_eq!(g3i(1.0, -1.0, -1.0), GroupName::SlTilde2R);
        assert_eq!(g3i(1.0, 1.0, -1.0), GroupName::Su2);
        assert_eq!(g3i(1.0, 1.0, 0.0), GroupName::ETilde2);
        assert_eq!(g3i(1.0, 0.0, -1.0), GroupName::ETilde2);
        assert_eq!(g3i(1.0, -1.0, 0.0), GroupName::E11);
        assert_eq!(g3i(1.0, 0.0, 1.0), GroupName::E11);
        assert_eq!(g3i(1.0, 0.0, 0.0), GroupName::Heisenberg);
        assert_eq!(g3i(0.0, 0.0, -1.0), GroupName::Heisenberg);
        assert_eq!(g3i(0.0, 0.0, 0.0), GroupName::R3);
        // swap/flip images
        assert_eq!(g3i(0.0, 1.0, 1.0), GroupName::E11);
        assert_eq!(g3i(-1.0, 0.0, 1.0), GroupName::ETilde2);
        assert_eq!(g3i(0.0, -1.0, 0.0), GroupName::Heisenberg);

        assert_eq!(
            identify_group(&FamilyInstance::g4(2.0, 1.0, 1).unwrap()),
            GroupName::ETilde2
        );
        assert_eq!(
            identify_group(&FamilyInstance::g4(-2.0, 1.0, 1).unwrap()),
            GroupName::E11
        );
        assert_eq!(
            identify_group(&FamilyInstance::g4(0.0, 1.0, 1).unwrap()),
            GroupName::Heisenberg
        );
        assert_eq!(
            identify_group(&FamilyInstance::g4(0.0, 0.0, 1).unwrap()),
            GroupName::E11
        );
        assert_eq!(
            identify_group(&FamilyInstance::g4(2.0, 0.0, 1).unwrap()),
            GroupName::SlTilde2R
        );

        assert_eq!(
            identify_group(&FamilyInstance::g1(1.0, 0.0).unwrap()),
            GroupName::E11
        );
        assert_eq!(
            identify_group(&FamilyInstance::g1(1.0, 0.5).unwrap()),
            GroupName::SlTilde2R
        );
        assert_eq!(
            identify_group(&FamilyInstance::g2(0.0, 1.0, 1.0).unwrap()),
            GroupName::E11
        );
        assert_eq!(
            identify_group(&FamilyInstance::g5(1.0, 0.0, 0.0, 1.0).unwrap()),
            GroupName::UnclassifiedNonunimodular
        );
    }

    #[test]
    fn instance_spec_round_trip() {
        let inst = FamilyInstance::g4(2.0, -1.0, -1).unwrap();
        let json = serde_json::to_string(&inst.spec()).unwrap();
        let back: InstanceSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap(), inst);
    }

    proptest! {
        #[test]
        fn jacobi_holds_for_all_families(
            a in -5.0f64..5.0, b in -5.0f64..5.0, c in -5.0f64..5.0, d in -5.0f64..5.0,
        ) {
            // Constraint-satisfying variants of every family.
            let candidates = [
                FamilyInstance::riem_unimodular(a, b, c),
                FamilyInstance::riem_nonunimodular(a.max(0.1), b, -b * d / a.max(0.1), d),
                FamilyInstance::g1(a.abs().max(0.1), b),
                FamilyInstance::g2(a, b, c.abs().max(0.1)),
                FamilyInstance::g3(a, b, c),
                FamilyInstance::g4(a, b, if d > 0.0 { 1 } else { -1 }),
                FamilyInstance::g5(a.max(0.1), b, -b * d / a.max(0.1), d),
                FamilyInstance::g6(a.max(0.1), b, b * d / a.max(0.1), d),
                FamilyInstance::g7(0.0, b, c, d.abs().max(0.1)),
                FamilyInstance::special_riem(a, b, c),
                FamilyInstance::special_lor(a, b, c),
            ];
            for inst in candidates {
                let inst = inst.unwrap();
                prop_assert!(inst.structure_tensor().jacobi_defect() < 1e-12);
            }
        }

        #[test]
        fn identify_group_scale_invariant(
            a in -3.0f64..3.0, b in -3.0f64..3.0, c in -3.0f64..3.0, s in 0.1f64..10.0,
        ) {
            let g1 = identify_group(&FamilyInstance::riem_unimodular(a, b, c).unwrap());
            let g2 = identify_group(&FamilyInstance::riem_unimodular(s * a, s * b, s * c).unwrap());
            prop_assert_eq!(g1, g2);
            let h1 = identify_group(&FamilyInstance::g3(a, b, c).unwrap());
            let h2 = identify_group(&FamilyInstance::g3(s * a, s * b, s * c).unwrap());
            prop_assert_eq!(h1, h2);
        }

        #[test]
        fn cross_product_bilinear_antisymmetric(
            u in prop::array::uniform3(-3.0f64..3.0),
            v in prop::array::uniform3(-3.0f64..3.0),
            s in -2.0f64..2.0,
        ) {
            for sig in [MetricSignature::Riemannian, MetricSignature::Lorentzian] {
                let u = Vec3::from(u);
                let v = Vec3::from(v);
                let anti = cross_product(&u, &v, sig) + cross_product(&v, &u, sig);
                prop_assert!(anti.amax() < 1e-12);
                let lin = cross_product(&(u * s), &v, sig) - cross_product(&u, &v, sig) * s;
                prop_assert!(lin.amax() < 1e-10);
            }
        }
    }
}
