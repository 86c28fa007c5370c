//! The registered solution families, one entry per enumerated item.
//!
//! Builders return every sign branch as a separate candidate. Where the
//! printed statement fails substitution, reading 0 stays the literal text and
//! a corrected reading is registered after it; the corrections were derived by
//! re-solving the corresponding scalar system under the printed ansatz.

use super::{free, interval, nonzero, sign, Branch, CaseNotes, TheoremCase, Values};
use crate::algebra::FamilyInstance;
use crate::grs::{CandidateSolution, SolitonParams};
use crate::{Error, Result, Vec3};

fn g(vals: &Values, k: &str) -> f64 {
    vals[k]
}

fn inadmissible(case: &'static str, violated: &str) -> Error {
    Error::Inadmissible {
        case: case.into(),
        violated: violated.into(),
    }
}

fn mk(inst: FamilyInstance, x: [f64; 3], al: f64, be: f64, la: f64, label: &str) -> Branch {
    Branch {
        instance: inst,
        candidate: CandidateSolution::new(
            Vec3::new(x[0], x[1], x[2]),
            SolitonParams::new(al, be, la),
        ),
        label: label.to_string(),
    }
}

fn vals(pairs: &[(&'static str, f64)]) -> Values {
    pairs.iter().copied().collect()
}

const PLAIN: CaseNotes = CaseNotes {
    einstein: false,
    flat: false,
    killing_continuum: false,
    ricci_soliton: false,
    suspected_typo: None,
};

const PRINTED: &[&str] = &["printed"];

// ------------------------------------------------------------------
// Riemannian unimodular
// ------------------------------------------------------------------

fn b_ru1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, be) = (g(v, "A"), g(v, "beta"));
    let inst = FamilyInstance::riem_unimodular(a, a, a)?;
    let x = [g(v, "x1"), g(v, "x2"), g(v, "x3")];
    Ok(vec![mk(inst, x, 0.0, be, -0.5 * be * a * a, "printed")])
}

fn o_ru1(inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("beta", be),
        ("x1", x[0]),
        ("x2", x[1]),
        ("x3", x[2]),
    ]))
}

fn b_ru2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, al, be) = (g(v, "A"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::riem_unimodular(a, a, a)?;
    Ok(vec![mk(
        inst,
        [0.0; 3],
        al,
        be,
        -0.5 * be * a * a,
        "printed",
    )])
}

fn o_ru2(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("alpha", al), ("beta", be)]))
}

fn b_ru3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, al, be) = (g(v, "B"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::riem_unimodular(0.0, b, b)?;
    Ok(vec![mk(inst, [0.0; 3], al, be, 0.0, "printed")])
}

fn o_ru3(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("B", inst.b()), ("alpha", al), ("beta", be)]))
}

fn b_ru4(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, c, al, be) = (g(v, "A"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    if a == c {
        return Err(inadmissible("riem-unimodular-4", "A != B = C"));
    }
    if !(al * be * a * (a - c) > 0.0) {
        return Err(inadmissible("riem-unimodular-4", "alpha*beta*A*(A-C) > 0"));
    }
    let inst = FamilyInstance::riem_unimodular(a, c, c)?;
    let la = 0.5 * be * a * (a - 2.0 * c);
    let x1 = (be * a * (a - c) / al).sqrt();
    Ok(vec![
        mk(inst, [x1, 0.0, 0.0], al, be, la, "X1 = +sqrt"),
        mk(inst, [-x1, 0.0, 0.0], al, be, la, "X1 = -sqrt"),
    ])
}

fn p_ru4(v: &mut Values) {
    let want = g(v, "alpha") * g(v, "A") * (g(v, "A") - g(v, "C"));
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * want.signum();
}

fn o_ru4(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("C", inst.c()),
        ("alpha", al),
        ("beta", be),
    ]))
}

// ------------------------------------------------------------------
// Riemannian non-unimodular
// ------------------------------------------------------------------

fn b_rn1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, c, al, be) = (g(v, "A"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::riem_nonunimodular(a, -c, c, a)?;
    let la = (2.0 * be + 1.0 / al) * a * a;
    Ok(vec![mk(inst, [-a / al, 0.0, 0.0], al, be, la, "printed")])
}

fn o_rn1(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("C", inst.c()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_rn2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    if !(al * be > 0.0) {
        return Err(inadmissible("riem-nonunimodular-2", "alpha*beta > 0"));
    }
    let inst = FamilyInstance::riem_nonunimodular(a, b, 0.0, 0.0)?;
    let la = 0.5 * be * (2.0 * a * a + b * b);
    let x3 = (be * (a * a + b * b) / al).sqrt();
    Ok(vec![
        mk(inst, [0.0, 0.0, x3], al, be, la, "X3 = +sqrt"),
        mk(inst, [0.0, 0.0, -x3], al, be, la, "X3 = -sqrt"),
    ])
}

fn p_rn2(v: &mut Values) {
    let s = g(v, "alpha").signum();
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * s;
}

fn o_rn2(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_rn3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, c, al, be) = (g(v, "A"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::riem_nonunimodular(a, -c, c, a)?;
    Ok(vec![mk(
        inst,
        [0.0; 3],
        al,
        be,
        2.0 * be * a * a,
        "printed",
    )])
}

fn b_rn4(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, d, be) = (g(v, "A"), g(v, "D"), g(v, "beta"));
    let al = -(a * a + d * d) / (be * (a + d) * (a + d));
    let inst = FamilyInstance::riem_nonunimodular(a, 0.0, 0.0, d)?;
    Ok(vec![mk(
        inst,
        [be * (a + d), 0.0, 0.0],
        al,
        be,
        0.0,
        "printed",
    )])
}

fn o_rn4(inst: &FamilyInstance, _al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("D", inst.d()), ("beta", be)]))
}

fn b_rn5(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, al, be) = (g(v, "A"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::riem_nonunimodular(a, 0.0, 0.0, a)?;
    let la = a * a * (1.0 / al + 2.0 * be);
    Ok(vec![mk(inst, [-a / al, 0.0, 0.0], al, be, la, "printed")])
}

fn o_rn5(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("alpha", al), ("beta", be)]))
}

// ------------------------------------------------------------------
// g1
// ------------------------------------------------------------------

fn b_g1_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al) = (g(v, "A"), g(v, "B"), g(v, "alpha"));
    let inst = FamilyInstance::g1(a, b)?;
    Ok(vec![mk(
        inst,
        [0.0, -a / al, -a / al],
        al,
        0.0,
        0.0,
        "printed",
    )])
}

fn o_g1_1(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("B", inst.b()), ("alpha", al)]))
}

fn b_g1_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, be) = (g(v, "A"), g(v, "B"), g(v, "beta"));
    let inst = FamilyInstance::g1(a, b)?;
    let la = 0.5 * be * b * b;
    Ok(vec![mk(
        inst,
        [2.0 * be * b, -2.0 * be * a, -2.0 * be * a],
        0.0,
        be,
        la,
        "printed",
    )])
}

fn o_g1_2(inst: &FamilyInstance, _al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("B", inst.b()), ("beta", be)]))
}

fn b_g1_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, al, ab) = (g(v, "A"), g(v, "alpha"), g(v, "ab"));
    if !(ab <= 0.125) {
        return Err(inadmissible("g1-3", "alpha*beta <= 1/8"));
    }
    let be = ab / al;
    let inst = FamilyInstance::g1(a, 0.0)?;
    let root = (1.0 - 8.0 * ab).sqrt();
    Ok([1.0, -1.0]
        .iter()
        .map(|&s| {
            let x23 = (-1.0 + s * root) * a / (2.0 * al);
            mk(
                inst,
                [0.0, x23, x23],
                al,
                be,
                0.0,
                if s > 0.0 { "+sqrt" } else { "-sqrt" },
            )
        })
        .collect())
}

fn o_g1_3(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("alpha", al), ("ab", al * be)]))
}

// ------------------------------------------------------------------
// g2
// ------------------------------------------------------------------

fn b_g2_1(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (x2, x3, al) = (g(v, "x2"), g(v, "x3"), g(v, "alpha"));
    let w2 = x3 * x3 - x2 * x2;
    if !(w2 > 0.0) {
        return Err(inadmissible("g2-1", "X3^2 - X2^2 > 0"));
    }
    let w = w2.sqrt();
    let be = -3.0 / (8.0 * al);
    let quartic = 3.0 * x2.powi(4) - 10.0 * x2 * x2 * x3 * x3 + 3.0 * x3.powi(4);
    // The printed lambda omits the factor 6 in the denominator.
    let la = match r {
        0 => al * quartic / (x2 * x2 - x3 * x3),
        _ => al * quartic / (6.0 * (x2 * x2 - x3 * x3)),
    };
    let mut out = Vec::new();
    for eps in [1.0, -1.0] {
        let a = 4.0 * al * x2 * x3 / (3.0 * eps * w);
        let inst = FamilyInstance::g2(a, -a / 2.0, eps * al * w)?;
        let x1 = -eps * (x2 * x2 + x3 * x3) / (2.0 * w);
        out.push(mk(inst, [x1, x2, x3], al, be, la, &format!("eps={eps:+}")));
    }
    Ok(out)
}

fn o_g2_1(_inst: &FamilyInstance, al: f64, _be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("x2", x[1]), ("x3", x[2]), ("alpha", al)]))
}

fn guard_g2_1(v: &Values) -> bool {
    g(v, "x3").powi(2) - g(v, "x2").powi(2) >= 0.15
}

// ------------------------------------------------------------------
// g3
// ------------------------------------------------------------------

fn b_g3_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, be) = (g(v, "A"), g(v, "beta"));
    let inst = FamilyInstance::g3(a, a, a)?;
    let x = [g(v, "x1"), g(v, "x2"), g(v, "x3")];
    Ok(vec![mk(inst, x, 0.0, be, 0.5 * be * a * a, "printed")])
}

fn o_g3_1(inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("beta", be),
        ("x1", x[0]),
        ("x2", x[1]),
        ("x3", x[2]),
    ]))
}

fn b_g3_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, be, x1) = (g(v, "B"), g(v, "beta"), g(v, "x1"));
    let inst = FamilyInstance::g3(0.0, b, b)?;
    Ok(vec![mk(inst, [x1, 0.0, 0.0], 0.0, be, 0.0, "printed")])
}

fn o_g3_2(inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("B", inst.b()), ("beta", be), ("x1", x[0])]))
}

fn b_g3_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, al, be) = (g(v, "B"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::g3(0.0, b, b)?;
    Ok(vec![mk(inst, [0.0; 3], al, be, 0.0, "printed")])
}

fn b_g3_4(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, al, be) = (g(v, "A"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::g3(a, a, a)?;
    Ok(vec![mk(
        inst,
        [0.0; 3],
        al,
        be,
        0.5 * be * a * a,
        "printed",
    )])
}

fn o_g3_4(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("alpha", al), ("beta", be)]))
}

fn b_g3_5(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, c, al, be) = (g(v, "A"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    if a == c {
        return Err(inadmissible("g3-5", "B = C != A"));
    }
    if !(al * be * a * (c - a) > 0.0) {
        return Err(inadmissible("g3-5", "alpha*beta*A*(C-A) > 0"));
    }
    let inst = FamilyInstance::g3(a, c, c)?;
    let la = 0.5 * be * a * (2.0 * c - a);
    let x1 = (be * a * (c - a) / al).sqrt();
    Ok(vec![
        mk(inst, [x1, 0.0, 0.0], al, be, la, "X1 = +sqrt"),
        mk(inst, [-x1, 0.0, 0.0], al, be, la, "X1 = -sqrt"),
    ])
}

fn p_g3_5(v: &mut Values) {
    let want = g(v, "alpha") * g(v, "A") * (g(v, "C") - g(v, "A"));
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * want.signum();
}

fn o_g3_5(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("C", inst.c()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g3_6(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, c, al, be) = (g(v, "B"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    if b == c {
        return Err(inadmissible("g3-6", "A = B != C"));
    }
    if !(al * be * c * (c - b) > 0.0) {
        return Err(inadmissible("g3-6", "alpha*beta*C*(C-B) > 0"));
    }
    let inst = FamilyInstance::g3(b, b, c)?;
    let la = 0.5 * be * c * (2.0 * b - c);
    let x3 = (be * c * (c - b) / al).sqrt();
    Ok(vec![
        mk(inst, [0.0, 0.0, x3], al, be, la, "X3 = +sqrt"),
        mk(inst, [0.0, 0.0, -x3], al, be, la, "X3 = -sqrt"),
    ])
}

fn p_g3_6(v: &mut Values) {
    let want = g(v, "alpha") * g(v, "C") * (g(v, "C") - g(v, "B"));
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * want.signum();
}

fn o_g3_6(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("B", inst.b()),
        ("C", inst.c()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g3_7(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (a, al) = (g(v, "A"), g(v, "alpha"));
    let inst = FamilyInstance::g3(a, -a, 0.0)?;
    let be = -3.0 / (8.0 * al);
    let la = a * a / (2.0 * al);
    let s2 = 2.0_f64.sqrt();
    Ok([1.0, -1.0]
        .iter()
        .map(|&eps| {
            // Printed: X3 = eps A / (2 alpha); corrected: eps on X1 = -X2 only.
            let x3 = match r {
                0 => eps * a / (2.0 * al),
                _ => a / (2.0 * al),
            };
            mk(
                inst,
                [eps * a / (s2 * al), -eps * a / (s2 * al), x3],
                al,
                be,
                la,
                &format!("eps={eps:+}"),
            )
        })
        .collect())
}

fn o_g3_7(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("alpha", al)]))
}

fn b_g3_8(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (x1, x2, be) = (g(v, "x1"), g(v, "x2"), g(v, "beta"));
    let r2 = x1 * x1 + x2 * x2;
    if !(r2 > 0.0) {
        return Err(inadmissible("g3-8", "X1^2 + X2^2 > 0"));
    }
    let rr = r2.sqrt();
    let al = -3.0 / (8.0 * be);
    let la = -(x1.powi(4) + x1 * x1 * x2 * x2 + x2.powi(4)) / (4.0 * be * r2);
    let mut out = Vec::new();
    for eps in [1.0, -1.0] {
        let a = -eps * (2.0 * x1 * x1 + x2 * x2) / (4.0 * be * rr);
        let b = eps * (x1 * x1 + 2.0 * x2 * x2) / (4.0 * be * rr);
        let c = eps * (x1 * x1 - x2 * x2) / (4.0 * be * rr);
        let inst = FamilyInstance::g3(a, b, c)?;
        out.push(mk(
            inst,
            [x1, x2, -eps * x1 * x2 / rr],
            al,
            be,
            la,
            &format!("eps={eps:+}"),
        ));
    }
    Ok(out)
}

fn o_g3_8(_inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("x1", x[0]), ("x2", x[1]), ("beta", be)]))
}

fn guard_g3_8(v: &Values) -> bool {
    g(v, "x1").powi(2) + g(v, "x2").powi(2) >= 0.1
}

// ------------------------------------------------------------------
// g4
// ------------------------------------------------------------------

fn b_g4_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (eta, a, al, be) = (g(v, "eta"), g(v, "A"), g(v, "alpha"), g(v, "beta"));
    if !(eta * a * al * be < 0.0) {
        return Err(inadmissible("g4-1", "eta*A*alpha*beta < 0"));
    }
    let inst = FamilyInstance::g4(a, a + eta, eta as i8)?;
    let la = 0.5 * be * a * a;
    let x3 = (-eta * be * a / al).sqrt();
    Ok(vec![
        mk(inst, [0.0, -eta * x3, x3], al, be, la, "X3 = +sqrt"),
        mk(inst, [0.0, eta * x3, -x3], al, be, la, "X3 = -sqrt"),
    ])
}

fn p_g4_1(v: &mut Values) {
    let want = -g(v, "eta") * g(v, "A") * g(v, "alpha");
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * want.signum();
}

fn o_g4_1(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("eta", inst.eta()),
        ("A", inst.a()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g4_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (eta, a, be, x3) = (g(v, "eta"), g(v, "A"), g(v, "beta"), g(v, "x3"));
    let inst = FamilyInstance::g4(a, a + eta, eta as i8)?;
    let la = 0.5 * be * a * a;
    Ok(vec![mk(
        inst,
        [-eta * be * a, -eta * x3, x3],
        0.0,
        be,
        la,
        "printed",
    )])
}

fn o_g4_2(inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("eta", inst.eta()),
        ("A", inst.a()),
        ("beta", be),
        ("x3", x[2]),
    ]))
}

fn b_g4_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (eta, a, al) = (g(v, "eta"), g(v, "A"), g(v, "alpha"));
    if !(eta * a < 0.0) {
        return Err(inadmissible("g4-3", "eta*A < 0"));
    }
    let inst = FamilyInstance::g4(a, 0.5 * a + eta, eta as i8)?;
    let be = -1.0 / (8.0 * al);
    let x2 = (-eta * a / (4.0 * al * al)).sqrt();
    Ok(vec![
        mk(
            inst,
            [eta * a / (4.0 * al), x2, -eta * x2],
            al,
            be,
            0.0,
            "X2 = +sqrt",
        ),
        mk(
            inst,
            [eta * a / (4.0 * al), -x2, eta * x2],
            al,
            be,
            0.0,
            "X2 = -sqrt",
        ),
    ])
}

fn p_g4_3(v: &mut Values) {
    let eta = g(v, "eta");
    let a = v.get_mut("A").unwrap();
    *a = -eta * a.abs();
}

fn o_g4_3(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("eta", inst.eta()), ("A", inst.a()), ("alpha", al)]))
}

fn b_g4_4(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (eta, a, b, al) = (g(v, "eta"), g(v, "A"), g(v, "B"), g(v, "alpha"));
    let den = a - 2.0 * b + 2.0 * eta;
    if den == 0.0 {
        return Err(inadmissible("g4-4", "A - 2B + 2*eta != 0"));
    }
    let inst = FamilyInstance::g4(a, b, eta as i8)?;
    let be = -a * (a - b + eta) / (al * den * den);
    let la = -0.5 * be * a * den;
    // Printed: X1 = beta*(A - 2B + 2 eta); holds only for eta = +1. The
    // corrected reading carries the eta factor.
    let x1 = match r {
        0 => be * den,
        _ => eta * be * den,
    };
    Ok(vec![mk(inst, [x1, 0.0, 0.0], al, be, la, "printed")])
}

fn guard_g4_4(v: &Values) -> bool {
    (g(v, "A") - 2.0 * g(v, "B") + 2.0 * g(v, "eta")).abs() >= 0.3
}

fn o_g4_4(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("eta", inst.eta()),
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
    ]))
}

fn b_g4_5(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (eta, a, b, al) = (g(v, "eta"), g(v, "A"), g(v, "B"), g(v, "alpha"));
    let rad = (5.0 * eta * a * b - 3.0 * eta * a * a - 5.0 * a - 2.0 * eta + 4.0 * b
        - 2.0 * eta * b * b)
        / a;
    if !(rad >= 0.0) {
        return Err(inadmissible(
            "g4-5",
            "radicand (5*eta*A*B - 3*eta*A^2 - 5A - 2*eta + 4B - 2*eta*B^2)/A >= 0",
        ));
    }
    let inst = FamilyInstance::g4(a, b, eta as i8)?;
    let be = -(a - b + eta) / (4.0 * al * a);
    let la = (a - b + eta) * (a - 2.0 * b + 2.0 * eta) / (8.0 * al);
    let x1 = (a - b + eta) / (2.0 * eta * al);
    let x3 = rad.sqrt() / (2.0 * al);
    Ok(vec![
        mk(inst, [x1, -eta * x3, x3], al, be, la, "X3 = +sqrt"),
        mk(inst, [x1, eta * x3, -x3], al, be, la, "X3 = -sqrt"),
    ])
}

fn guard_g4_5(v: &Values) -> bool {
    let (eta, a, b) = (g(v, "eta"), g(v, "A"), g(v, "B"));
    let rad = (5.0 * eta * a * b - 3.0 * eta * a * a - 5.0 * a - 2.0 * eta + 4.0 * b
        - 2.0 * eta * b * b)
        / a;
    rad >= 0.05
}

fn o_g4_5(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("eta", inst.eta()),
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
    ]))
}

// ------------------------------------------------------------------
// g5
// ------------------------------------------------------------------

fn b_g5_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::g5(a, b, -b, a)?;
    let la = -(1.0 / al + 2.0 * be) * a * a;
    Ok(vec![mk(inst, [0.0, 0.0, -a / al], al, be, la, "printed")])
}

fn o_g5_1(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g5_2(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (a, b, al) = (g(v, "A"), g(v, "B"), g(v, "alpha"));
    let inst = FamilyInstance::g5(a, b, 0.0, 0.0)?;
    let be = -1.0 / (4.0 * al);
    let la = b * b / (8.0 * al);
    let x3 = -a / (2.0 * al);
    Ok([1.0, -1.0]
        .iter()
        .map(|&eps| {
            // Printed: X1 = eps X3; re-solving the system gives X1 = -eps X3.
            let x1 = match r {
                0 => eps * x3,
                _ => -eps * x3,
            };
            mk(
                inst,
                [x1, eps * b / (2.0 * al), x3],
                al,
                be,
                la,
                &format!("eps={eps:+}"),
            )
        })
        .collect())
}

fn o_g5_2(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("B", inst.b()), ("alpha", al)]))
}

fn b_g5_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::g5(a, b, -b, a)?;
    Ok(vec![mk(
        inst,
        [0.0; 3],
        al,
        be,
        -2.0 * be * a * a,
        "printed",
    )])
}

fn b_g5_4(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    if !(al * be < 0.0) {
        return Err(inadmissible("g5-4", "alpha*beta < 0"));
    }
    let inst = FamilyInstance::g5(a, b, 0.0, 0.0)?;
    let la = -0.5 * be * (2.0 * a * a + b * b);
    let x2 = (-be * (a * a + b * b) / al).sqrt();
    Ok(vec![
        mk(inst, [0.0, x2, 0.0], al, be, la, "X2 = +sqrt"),
        mk(inst, [0.0, -x2, 0.0], al, be, la, "X2 = -sqrt"),
    ])
}

fn p_g5_4(v: &mut Values) {
    let s = -g(v, "alpha").signum();
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * s;
}

fn o_g5_4(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g5_5(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, al) = (g(v, "A"), g(v, "alpha"));
    let inst = FamilyInstance::g5(a, 0.0, 0.0, 0.0)?;
    Ok(vec![mk(
        inst,
        [0.0, 0.0, -a / al],
        al,
        -1.0 / al,
        0.0,
        "printed",
    )])
}

fn o_g5_5(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("alpha", al)]))
}

fn b_g5_6(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (a, al, be) = (g(v, "A"), g(v, "alpha"), g(v, "beta"));
    let ab = al * be;
    if 2.0 * ab + 1.0 == 0.0 {
        return Err(inadmissible("g5-6", "2*alpha*beta + 1 != 0"));
    }
    let poly = 32.0 * ab.powi(3) + 28.0 * ab * ab + 9.0 * ab + 1.0;
    let lam_mag = a * a * poly / (4.0 * al * (2.0 * ab + 1.0).powi(2));
    // The printed statement never constrains D and carries lambda with the
    // opposite sign; the diagonal equations pin D and flip it.
    let (d, la) = match r {
        0 => (g(v, "D"), lam_mag),
        _ => (a * (4.0 * ab + 1.0) / (2.0 * (2.0 * ab + 1.0)), -lam_mag),
    };
    let inst = FamilyInstance::g5(a, 0.0, 0.0, d)?;
    let x1 = a * (8.0 * ab * ab + 5.0 * ab + 1.0).sqrt() / (2.0 * al * (2.0 * ab + 1.0));
    let x3 = -a / (2.0 * al);
    Ok(vec![
        mk(inst, [x1, 0.0, x3], al, be, la, "X1 = +sqrt"),
        mk(inst, [-x1, 0.0, x3], al, be, la, "X1 = -sqrt"),
    ])
}

fn guard_g5_6(v: &Values) -> bool {
    let ab = g(v, "alpha") * g(v, "beta");
    (2.0 * ab + 1.0).abs() >= 0.25 && (8.0 * ab + 3.0).abs() >= 0.2
}

fn o_g5_6(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("alpha", al),
        ("beta", be),
        ("D", inst.d()),
    ]))
}

fn b_g5_7(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (a, d, al) = (g(v, "A"), g(v, "D"), g(v, "alpha"));
    if a == d {
        return Err(inadmissible("g5-7", "A != D"));
    }
    let inst = FamilyInstance::g5(a, 0.0, 0.0, d)?;
    let be = -(2.0 * a - d) / (4.0 * al * (a - d));
    let q = 2.0 * a * a - a * d + d * d;
    // Printed lambda has the opposite sign and the printed X2 radical is off
    // by sqrt(2); re-solving the diagonal equations gives the corrected pair.
    let (la, x2) = match r {
        0 => (
            -a * q / (4.0 * al * (a - d)),
            (a * a - 0.5 * a * d + 0.5 * d * d).sqrt() / al,
        ),
        _ => (a * q / (4.0 * al * (a - d)), q.sqrt() / (2.0 * al)),
    };
    let x3 = -d / (2.0 * al);
    Ok(vec![
        mk(inst, [0.0, x2, x3], al, be, la, "X2 = +sqrt"),
        mk(inst, [0.0, -x2, x3], al, be, la, "X2 = -sqrt"),
    ])
}

fn guard_g5_7(v: &Values) -> bool {
    let (a, d) = (g(v, "A"), g(v, "D"));
    (a - d).abs() >= 0.3 && (a + d).abs() >= 0.2
}

fn o_g5_7(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("D", inst.d()), ("alpha", al)]))
}

// ------------------------------------------------------------------
// g6
// ------------------------------------------------------------------

fn b_g6_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::g6(a, b, b, a)?;
    let la = (1.0 / al + 2.0 * be) * a * a;
    Ok(vec![mk(inst, [-a / al, 0.0, 0.0], al, be, la, "printed")])
}

fn o_g6_1(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g6_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::g6(a, b, b, a)?;
    Ok(vec![mk(
        inst,
        [0.0; 3],
        al,
        be,
        2.0 * be * a * a,
        "printed",
    )])
}

fn b_g6_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, d, al, be) = (g(v, "A"), g(v, "D"), g(v, "alpha"), g(v, "beta"));
    let la = 0.5 * be * (a + d) * (a + d);
    let mut out = Vec::new();
    for s in [1.0, -1.0] {
        let inst = FamilyInstance::g6(a, s * a, s * d, d)?;
        out.push(mk(
            inst,
            [0.0; 3],
            al,
            be,
            la,
            &format!("B={s:+}A, C={s:+}D"),
        ));
    }
    Ok(out)
}

fn guard_g6_3(v: &Values) -> bool {
    (g(v, "A") + g(v, "D")).abs() >= 0.2
}

fn o_g6_3(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("D", inst.d()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g6_4(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, al, be) = (g(v, "A"), g(v, "B"), g(v, "alpha"), g(v, "beta"));
    if !(al * be * (b * b - a * a) > 0.0) {
        return Err(inadmissible("g6-4", "alpha*beta*(B^2-A^2) > 0"));
    }
    let inst = FamilyInstance::g6(a, b, 0.0, 0.0)?;
    let la = 0.5 * be * (2.0 * a * a - b * b);
    let x3 = (be * (b * b - a * a) / al).sqrt();
    Ok(vec![
        mk(inst, [0.0, 0.0, x3], al, be, la, "X3 = +sqrt"),
        mk(inst, [0.0, 0.0, -x3], al, be, la, "X3 = -sqrt"),
    ])
}

fn p_g6_4(v: &mut Values) {
    let want = g(v, "alpha") * (g(v, "B").powi(2) - g(v, "A").powi(2));
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * want.signum();
}

fn guard_g6_4(v: &Values) -> bool {
    (g(v, "B").abs() - g(v, "A").abs()).abs() >= 0.2
}

fn o_g6_4(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g6_5(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, d, al) = (g(v, "A"), g(v, "D"), g(v, "alpha"));
    let inst = FamilyInstance::g6(a, 0.0, 0.0, d)?;
    let q = a * a + d * d;
    let be = -q / (al * (a + d) * (a + d));
    Ok(vec![mk(
        inst,
        [-q / (al * (a + d)), 0.0, 0.0],
        al,
        be,
        0.0,
        "printed",
    )])
}

fn guard_g6_5(v: &Values) -> bool {
    (g(v, "A") + g(v, "D")).abs() >= 0.3
}

fn o_g6_5(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("D", inst.d()), ("alpha", al)]))
}

fn b_g6_6(v: &Values, r: usize) -> Result<Vec<Branch>> {
    let (a, d, al) = (g(v, "A"), g(v, "D"), g(v, "alpha"));
    if a == d {
        return Err(inadmissible("g6-6", "A != D"));
    }
    let inst = FamilyInstance::g6(a, 0.0, 0.0, d)?;
    let be = -(2.0 * a - d) / (4.0 * al * (a - d));
    let la = -a * (2.0 * a * a - a * d + d * d) / (4.0 * al * (a - d));
    let x1 = -d / (2.0 * al);
    match r {
        0 => {
            let x3 = (2.0 * a * a - a * d + d * d).sqrt() / (2.0 * al);
            Ok(vec![
                mk(inst, [x1, 0.0, x3], al, be, la, "X3 = +sqrt"),
                mk(inst, [x1, 0.0, -x3], al, be, la, "X3 = -sqrt"),
            ])
        }
        // The stray second statement printed alongside the formula.
        _ => Ok(vec![mk(inst, [x1, 0.0, 0.0], al, be, la, "X3 = 0")]),
    }
}

fn guard_g6_6(v: &Values) -> bool {
    let (a, d) = (g(v, "A"), g(v, "D"));
    (a - d).abs() >= 0.3 && (a + d).abs() >= 0.2
}

fn o_g6_6(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("A", inst.a()), ("D", inst.d()), ("alpha", al)]))
}

fn b_g6_7(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (c, d, al, be) = (g(v, "C"), g(v, "D"), g(v, "alpha"), g(v, "beta"));
    if !(al * be * (d * d - c * c) > 0.0) {
        return Err(inadmissible("g6-7", "alpha*beta*(D^2-C^2) > 0"));
    }
    let inst = FamilyInstance::g6(0.0, 0.0, c, d)?;
    let la = 0.5 * be * (2.0 * d * d - c * c);
    let x2 = (be * (d * d - c * c) / al).sqrt();
    Ok(vec![
        mk(inst, [0.0, x2, 0.0], al, be, la, "X2 = +sqrt"),
        mk(inst, [0.0, -x2, 0.0], al, be, la, "X2 = -sqrt"),
    ])
}

fn p_g6_7(v: &mut Values) {
    let want = g(v, "alpha") * (g(v, "D").powi(2) - g(v, "C").powi(2));
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * want.signum();
}

fn guard_g6_7(v: &Values) -> bool {
    (g(v, "D").abs() - g(v, "C").abs()).abs() >= 0.2
}

fn o_g6_7(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("C", inst.c()),
        ("D", inst.d()),
        ("alpha", al),
        ("beta", be),
    ]))
}

// ------------------------------------------------------------------
// g7
// ------------------------------------------------------------------

fn b_g7_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, d, be, x1) = (g(v, "B"), g(v, "D"), g(v, "beta"), g(v, "x1"));
    let inst = FamilyInstance::g7(0.0, b, 0.0, d)?;
    let t = -b * x1 / d;
    Ok(vec![mk(inst, [x1, t, t], 0.0, be, 0.0, "printed")])
}

fn o_g7_1(inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("B", inst.b()),
        ("D", inst.d()),
        ("beta", be),
        ("x1", x[0]),
    ]))
}

fn b_g7_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, d, be, la) = (g(v, "B"), g(v, "D"), g(v, "beta"), g(v, "lambda"));
    let inst = FamilyInstance::g7(0.5 * d, b, 0.0, d)?;
    let x1 = -4.0 * b * la / (d * d);
    let x2 = (16.0 * la * b * b - 4.0 * la * d * d + be * d.powi(4)) / (4.0 * d.powi(3));
    let x3 = (16.0 * la * b * b + 4.0 * la * d * d + be * d.powi(4)) / (4.0 * d.powi(3));
    Ok(vec![mk(inst, [x1, x2, x3], 0.0, be, la, "printed")])
}

fn o_g7_2(inst: &FamilyInstance, _al: f64, be: f64, _x: &Vec3, la: f64) -> Option<Values> {
    Some(vals(&[
        ("B", inst.b()),
        ("D", inst.d()),
        ("beta", be),
        ("lambda", la),
    ]))
}

fn b_g7_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, d, al, be) = (g(v, "A"), g(v, "B"), g(v, "D"), g(v, "alpha"), g(v, "beta"));
    let disc = d * d - 4.0 * al * be * a * (a - d);
    if !(disc > 0.0) {
        return Err(inadmissible("g7-3", "D^2 - 4*alpha*beta*A*(A-D) > 0"));
    }
    let inst = FamilyInstance::g7(a, b, 0.0, d)?;
    // Roots of alpha x^2 + D x + beta A (A - D) = 0.
    let roots: Vec<f64> = if al.abs() > 1e-12 {
        let s = disc.sqrt();
        vec![(-d + s) / (2.0 * al), (-d - s) / (2.0 * al)]
    } else {
        vec![-be * a * (a - d) / d]
    };
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(i, x)| mk(inst, [0.0, x, x], al, be, 0.0, &format!("root {}", i + 1)))
        .collect())
}

fn guard_g7_3(v: &Values) -> bool {
    let (a, d) = (g(v, "A"), g(v, "D"));
    let disc = d * d - 4.0 * g(v, "alpha") * g(v, "beta") * a * (a - d);
    disc >= 0.1 && (a + d).abs() >= 0.2
}

fn o_g7_3(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("D", inst.d()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g7_4(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, d, al, be) = (g(v, "A"), g(v, "B"), g(v, "D"), g(v, "alpha"), g(v, "beta"));
    Ok(vec![
        mk(
            FamilyInstance::g7(0.0, b, 0.0, d)?,
            [0.0; 3],
            al,
            be,
            0.0,
            "A = C = 0",
        ),
        mk(
            FamilyInstance::g7(a, b, 0.0, a)?,
            [0.0; 3],
            al,
            be,
            0.0,
            "A = D, C = 0",
        ),
    ])
}

fn b_g7_5(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (d, be) = (g(v, "D"), g(v, "beta"));
    let a = 0.5 * d;
    let inst = FamilyInstance::g7(a, 0.0, 0.0, d)?;
    Ok(vec![mk(
        inst,
        [0.0, 0.0, be * a],
        0.0,
        be,
        be * a * a,
        "printed",
    )])
}

fn o_g7_5(inst: &FamilyInstance, _al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[("D", inst.d()), ("beta", be)]))
}

fn b_g7_6(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, c, d, al) = (g(v, "B"), g(v, "C"), g(v, "D"), g(v, "alpha"));
    if !(d * d + 3.0 * b * c > 0.0) {
        return Err(inadmissible("g7-6", "D^2 + 3BC > 0"));
    }
    let inst = FamilyInstance::g7(0.0, b, c, d)?;
    let be = -1.0 / (4.0 * al);
    let la = c * c / (8.0 * al);
    let x1 = -c / (2.0 * al);
    // Roots of 4 alpha^2 x^2 + 4 alpha D x - 3BC = 0.
    let s = (d * d + 3.0 * b * c).sqrt();
    Ok([1.0, -1.0]
        .iter()
        .map(|&sg| {
            let x = (-d + sg * s) / (2.0 * al);
            mk(inst, [x1, x, x], al, be, la, &format!("root {sg:+}"))
        })
        .collect())
}

fn guard_g7_6(v: &Values) -> bool {
    g(v, "D").powi(2) + 3.0 * g(v, "B") * g(v, "C") >= 0.1 && g(v, "D").abs() >= 0.25
}

fn o_g7_6(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("B", inst.b()),
        ("C", inst.c()),
        ("D", inst.d()),
        ("alpha", al),
    ]))
}

fn b_g7_7(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (c, d, al, be) = (g(v, "C"), g(v, "D"), g(v, "alpha"), g(v, "beta"));
    if !(al * be * c * c < 0.0) {
        return Err(inadmissible("g7-7", "alpha*beta*C^2 < 0"));
    }
    let inst = FamilyInstance::g7(0.0, 0.0, c, d)?;
    let la = -0.5 * be * c * c;
    let x1 = (-be * c * c / al).sqrt();
    Ok(vec![
        mk(inst, [x1, 0.0, 0.0], al, be, la, "X1 = +sqrt"),
        mk(inst, [-x1, 0.0, 0.0], al, be, la, "X1 = -sqrt"),
    ])
}

fn p_g7_7(v: &mut Values) {
    let s = -g(v, "alpha").signum();
    let be = v.get_mut("beta").unwrap();
    *be = be.abs() * s;
}

fn o_g7_7(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("C", inst.c()),
        ("D", inst.d()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_g7_8(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (b, c, d, al) = (g(v, "B"), g(v, "C"), g(v, "D"), g(v, "alpha"));
    let inst = FamilyInstance::g7(0.0, b, c, d)?;
    let be = -1.0 / al;
    Ok(vec![mk(
        inst,
        [c / al, 0.0, 0.0],
        al,
        be,
        c * c / (2.0 * al),
        "printed",
    )])
}

fn o_g7_8(inst: &FamilyInstance, al: f64, _be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("B", inst.b()),
        ("C", inst.c()),
        ("D", inst.d()),
        ("alpha", al),
    ]))
}

// ------------------------------------------------------------------
// special Lie algebras
// ------------------------------------------------------------------

fn b_sp_i_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, c, al, be) = (g(v, "A"), g(v, "B"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::special_riem(a, b, c)?;
    let q = a * a + b * b + c * c;
    Ok(vec![mk(inst, [0.0; 3], al, be, 2.0 * be * q, "printed")])
}

fn b_sp_i_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let be = g(v, "beta");
    let inst = FamilyInstance::special_riem(0.0, 0.0, 0.0)?;
    let x = [g(v, "x1"), g(v, "x2"), g(v, "x3")];
    Ok(vec![mk(inst, x, 0.0, be, 0.0, "printed")])
}

fn o_sp_i_2(_inst: &FamilyInstance, _al: f64, be: f64, x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("beta", be),
        ("x1", x[0]),
        ("x2", x[1]),
        ("x3", x[2]),
    ]))
}

fn b_sp_i_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, c, al, be) = (g(v, "A"), g(v, "B"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::special_riem(a, b, c)?;
    let q = a * a + b * b + c * c;
    let la = (1.0 / al + 2.0 * be) * q;
    Ok(vec![mk(
        inst,
        [a / al, b / al, c / al],
        al,
        be,
        la,
        "printed",
    )])
}

fn o_sp_i_3(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("C", inst.c()),
        ("alpha", al),
        ("beta", be),
    ]))
}

fn b_sp_ii_1(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, c, al, be) = (g(v, "A"), g(v, "B"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    let inst = FamilyInstance::special_lor(a, b, c)?;
    let q = a * a + b * b - c * c;
    Ok(vec![mk(inst, [0.0; 3], al, be, 2.0 * be * q, "printed")])
}

fn b_sp_ii_2(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let be = g(v, "beta");
    let inst = FamilyInstance::special_lor(0.0, 0.0, 0.0)?;
    let x = [g(v, "x1"), g(v, "x2"), g(v, "x3")];
    Ok(vec![mk(inst, x, 0.0, be, 0.0, "printed")])
}

fn b_sp_ii_3(v: &Values, _r: usize) -> Result<Vec<Branch>> {
    let (a, b, c, al, be) = (g(v, "A"), g(v, "B"), g(v, "C"), g(v, "alpha"), g(v, "beta"));
    // The printed branches: either A = B = 0 (time-like X) or C = 0
    // (space-like X).
    let time = FamilyInstance::special_lor(0.0, 0.0, c)?;
    let space = FamilyInstance::special_lor(a, b, 0.0)?;
    Ok(vec![
        mk(
            time,
            [0.0, 0.0, -c / al],
            al,
            be,
            (1.0 / al + 2.0 * be) * (-c * c),
            "A = B = 0",
        ),
        mk(
            space,
            [a / al, b / al, 0.0],
            al,
            be,
            (1.0 / al + 2.0 * be) * (a * a + b * b),
            "C = 0",
        ),
    ])
}

fn o_sp_ii_3(inst: &FamilyInstance, al: f64, be: f64, _x: &Vec3, _la: f64) -> Option<Values> {
    Some(vals(&[
        ("A", inst.a()),
        ("B", inst.b()),
        ("C", inst.c()),
        ("alpha", al),
        ("beta", be),
    ]))
}

// ------------------------------------------------------------------
// registry
// ------------------------------------------------------------------

macro_rules! case {
    ($id:literal, $family:ident, [$($fp:expr),* $(,)?], $builder:ident
     $(, notes: $notes:expr)?
     $(, readings: $readings:expr, canonical: $canon:literal)?
     $(, presample: $pre:ident)?
     $(, guard: $guard:ident)?
     $(, observe: $obs:ident)?
     $(,)?) => {
        TheoremCase {
            id: $id,
            family: crate::algebra::FamilyTag::$family,
            free_params: &[$($fp),*],
            notes: { let _n = PLAIN; $(let _n = $notes;)? _n },
            readings: { let _r: &'static [&'static str] = PRINTED; $(let _r = $readings;)? _r },
            canonical_reading: { let _c = 0usize; $(let _c = $canon;)? _c },
            builder: $builder,
            presample: { let _p: Option<super::Presample> = None; $(let _p = Some($pre as super::Presample);)? _p },
            sampling_guard: { let _g: Option<super::Guard> = None; $(let _g = Some($guard as super::Guard);)? _g },
            observe: { let _o: Option<super::Observe> = None; $(let _o = Some($obs as super::Observe);)? _o },
        }
    };
}

pub(super) static REGISTRY: &[TheoremCase] = &[
    case!("riem-unimodular-1", RiemUnimodular,
        [free("A"), free("beta"), free("x1"), free("x2"), free("x3")], b_ru1,
        notes: CaseNotes { einstein: true, killing_continuum: true, ..PLAIN },
        observe: o_ru1),
    case!("riem-unimodular-2", RiemUnimodular,
        [free("A"), free("alpha"), free("beta")], b_ru2,
        notes: CaseNotes { einstein: true, ..PLAIN },
        observe: o_ru2),
    case!("riem-unimodular-3", RiemUnimodular,
        [free("B"), free("alpha"), free("beta")], b_ru3,
        notes: CaseNotes { einstein: true, flat: true, ..PLAIN },
        observe: o_ru3),
    case!("riem-unimodular-4", RiemUnimodular,
        [nonzero("A"), free("C"), nonzero("alpha"), nonzero("beta")], b_ru4,
        presample: p_ru4, observe: o_ru4),
    case!("riem-nonunimodular-1", RiemNonunimodular,
        [nonzero("A"), free("C"), nonzero("alpha"), free("beta")], b_rn1,
        notes: CaseNotes { einstein: true, ..PLAIN },
        observe: o_rn1),
    case!("riem-nonunimodular-2", RiemNonunimodular,
        [nonzero("A"), free("B"), nonzero("alpha"), nonzero("beta")], b_rn2,
        presample: p_rn2, observe: o_rn2),
    case!("riem-nonunimodular-3", RiemNonunimodular,
        [nonzero("A"), free("C"), free("alpha"), free("beta")], b_rn3,
        notes: CaseNotes { einstein: true, ..PLAIN }),
    case!("riem-nonunimodular-4", RiemNonunimodular,
        [free("A"), free("D"), nonzero("beta")], b_rn4,
        guard: guard_g6_5, observe: o_rn4),
    case!("riem-nonunimodular-5", RiemNonunimodular,
        [nonzero("A"), nonzero("alpha"), free("beta")], b_rn5,
        notes: CaseNotes { einstein: true, ..PLAIN },
        observe: o_rn5),
    case!("g1-1", G1, [nonzero("A"), free("B"), nonzero("alpha")], b_g1_1,
        observe: o_g1_1),
    case!("g1-2", G1, [nonzero("A"), free("B"), nonzero("beta")], b_g1_2,
        notes: CaseNotes { ricci_soliton: true, ..PLAIN },
        observe: o_g1_2),
    case!("g1-3", G1,
        [nonzero("A"), nonzero("alpha"), interval("ab", -3.0, 0.124)], b_g1_3,
        observe: o_g1_3),
    case!("g2-1", G2, [free("x2"), nonzero("x3"), nonzero("alpha")], b_g2_1,
        notes: CaseNotes {
            suspected_typo: Some("printed lambda omits the factor 6 in the denominator; \
                                  corrected: lambda = alpha(3X2^4-10X2^2X3^2+3X3^4)/(6(X2^2-X3^2))"),
            ..PLAIN },
        readings: &["printed", "corrected lambda/6"], canonical: 1,
        guard: guard_g2_1, observe: o_g2_1),
    case!("g3-1", G3, [free("A"), free("beta"), free("x1"), free("x2"), free("x3")], b_g3_1,
        notes: CaseNotes { einstein: true, killing_continuum: true, ..PLAIN },
        observe: o_g3_1),
    case!("g3-2", G3, [free("B"), free("beta"), free("x1")], b_g3_2,
        notes: CaseNotes { flat: true, killing_continuum: true, ..PLAIN },
        observe: o_g3_2),
    case!("g3-3", G3, [free("B"), free("alpha"), free("beta")], b_g3_3,
        notes: CaseNotes { flat: true, einstein: true, ..PLAIN }),
    case!("g3-4", G3, [free("A"), free("alpha"), free("beta")], b_g3_4,
        notes: CaseNotes { einstein: true, ..PLAIN },
        observe: o_g3_4),
    case!("g3-5", G3, [nonzero("A"), free("C"), nonzero("alpha"), nonzero("beta")], b_g3_5,
        presample: p_g3_5, observe: o_g3_5),
    case!("g3-6", G3, [free("B"), nonzero("C"), nonzero("alpha"), nonzero("beta")], b_g3_6,
        presample: p_g3_6, observe: o_g3_6),
    case!("g3-7", G3, [nonzero("A"), nonzero("alpha")], b_g3_7,
        notes: CaseNotes {
            suspected_typo: Some("printed X3 = eps A/(2 alpha) fails for eps = -1; \
                                  the sign branch applies to X1 = -X2 only"),
            ..PLAIN },
        readings: &["printed", "corrected X3 sign"], canonical: 1,
        observe: o_g3_7),
    case!("g3-8", G3, [free("x1"), free("x2"), nonzero("beta")], b_g3_8,
        guard: guard_g3_8, observe: o_g3_8),
    case!("g4-1", G4, [sign("eta"), nonzero("A"), nonzero("alpha"), nonzero("beta")], b_g4_1,
        presample: p_g4_1, observe: o_g4_1),
    case!("g4-2", G4, [sign("eta"), free("A"), free("beta"), free("x3")], b_g4_2,
        notes: CaseNotes { ricci_soliton: true, ..PLAIN },
        observe: o_g4_2),
    case!("g4-3", G4, [sign("eta"), nonzero("A"), nonzero("alpha")], b_g4_3,
        notes: CaseNotes {
            suspected_typo: Some("flagged for the square-root domain; the printed statement \
                                  already requires eta*A < 0 and passes as written"),
            ..PLAIN },
        presample: p_g4_3, observe: o_g4_3),
    case!("g4-4", G4, [sign("eta"), nonzero("A"), free("B"), nonzero("alpha")], b_g4_4,
        notes: CaseNotes {
            suspected_typo: Some("printed X1 = beta(A-2B+2eta) satisfies the mixed equation \
                                  only for eta = +1; corrected X1 = eta*beta(A-2B+2eta)"),
            ..PLAIN },
        readings: &["printed", "corrected eta factor"], canonical: 1,
        guard: guard_g4_4, observe: o_g4_4),
    case!("g4-5", G4, [sign("eta"), nonzero("A"), free("B"), nonzero("alpha")], b_g4_5,
        guard: guard_g4_5, observe: o_g4_5),
    case!("g5-1", G5, [nonzero("A"), free("B"), nonzero("alpha"), free("beta")], b_g5_1,
        notes: CaseNotes { einstein: true, ..PLAIN },
        observe: o_g5_1),
    case!("g5-2", G5, [nonzero("A"), free("B"), nonzero("alpha")], b_g5_2,
        notes: CaseNotes {
            suspected_typo: Some("printed X1 = eps X3 leaves the (1,2) equation nonzero; \
                                  re-solving gives X1 = -eps X3 = eps A/(2 alpha)"),
            ..PLAIN },
        readings: &["printed", "corrected X1 sign"], canonical: 1,
        observe: o_g5_2),
    case!("g5-3", G5, [nonzero("A"), free("B"), free("alpha"), free("beta")], b_g5_3,
        notes: CaseNotes { einstein: true, ..PLAIN }),
    case!("g5-4", G5, [nonzero("A"), free("B"), nonzero("alpha"), nonzero("beta")], b_g5_4,
        presample: p_g5_4, observe: o_g5_4),
    case!("g5-5", G5, [nonzero("A"), nonzero("alpha")], b_g5_5,
        observe: o_g5_5),
    case!("g5-6", G5,
        [nonzero("A"), nonzero("alpha"), free("beta"), free("D")], b_g5_6,
        notes: CaseNotes {
            suspected_typo: Some("printed case never constrains D and its lambda carries the \
                                  opposite sign; the diagonal equations force \
                                  D = A(4ab+1)/(2(2ab+1)) (ab = alpha*beta) and \
                                  lambda = -A^2(32ab^3+28ab^2+9ab+1)/(4 alpha (2ab+1)^2); \
                                  the radicand note reads 8 alpha^2 beta^2 + 5 alpha beta + 1"),
            ..PLAIN },
        readings: &["printed (D free)", "corrected (D pinned)"], canonical: 1,
        guard: guard_g5_6, observe: o_g5_6),
    case!("g5-7", G5, [nonzero("A"), nonzero("D"), nonzero("alpha")], b_g5_7,
        notes: CaseNotes {
            suspected_typo: Some("printed lambda carries the opposite sign and the printed X2 \
                                  radical is off by sqrt(2); corrected \
                                  lambda = A(2A^2-AD+D^2)/(4 alpha (A-D)), \
                                  X2 = +/- sqrt(2A^2-AD+D^2)/(2 alpha)"),
            ..PLAIN },
        readings: &["printed", "corrected"], canonical: 1,
        guard: guard_g5_7, observe: o_g5_7),
    case!("g6-1", G6, [nonzero("A"), free("B"), nonzero("alpha"), free("beta")], b_g6_1,
        notes: CaseNotes { einstein: true, ..PLAIN },
        observe: o_g6_1),
    case!("g6-2", G6, [nonzero("A"), free("B"), free("alpha"), free("beta")], b_g6_2,
        notes: CaseNotes { einstein: true, ..PLAIN }),
    case!("g6-3", G6, [free("A"), free("D"), free("alpha"), free("beta")], b_g6_3,
        notes: CaseNotes { einstein: true, ..PLAIN },
        guard: guard_g6_3, observe: o_g6_3),
    case!("g6-4", G6, [nonzero("A"), free("B"), nonzero("alpha"), nonzero("beta")], b_g6_4,
        presample: p_g6_4, guard: guard_g6_4, observe: o_g6_4),
    case!("g6-5", G6, [free("A"), free("D"), nonzero("alpha")], b_g6_5,
        guard: guard_g6_5, observe: o_g6_5),
    case!("g6-6", G6, [nonzero("A"), nonzero("D"), nonzero("alpha")], b_g6_6,
        notes: CaseNotes {
            suspected_typo: Some("the statement prints both an X3 formula and X3 = 0; the \
                                  formula passes and X3 = 0 would need 2A^2-AD+D^2 = 0, \
                                  impossible over the reals"),
            ..PLAIN },
        readings: &["printed (X3 formula)", "printed (X3 = 0)"], canonical: 0,
        guard: guard_g6_6, observe: o_g6_6),
    case!("g6-7", G6, [free("C"), nonzero("D"), nonzero("alpha"), nonzero("beta")], b_g6_7,
        presample: p_g6_7, guard: guard_g6_7, observe: o_g6_7),
    case!("g7-1", G7, [free("B"), nonzero("D"), free("beta"), free("x1")], b_g7_1,
        notes: CaseNotes { flat: true, killing_continuum: true, ricci_soliton: true, ..PLAIN },
        observe: o_g7_1),
    case!("g7-2", G7, [free("B"), nonzero("D"), free("beta"), free("lambda")], b_g7_2,
        notes: CaseNotes { ricci_soliton: true, ..PLAIN },
        observe: o_g7_2),
    case!("g7-3", G7,
        [free("A"), free("B"), free("D"), nonzero("alpha"), free("beta")], b_g7_3,
        guard: guard_g7_3, observe: o_g7_3),
    case!("g7-4", G7,
        [nonzero("A"), free("B"), nonzero("D"), free("alpha"), free("beta")], b_g7_4,
        notes: CaseNotes { flat: true, einstein: true, ..PLAIN }),
    case!("g7-5", G7, [nonzero("D"), nonzero("beta")], b_g7_5,
        notes: CaseNotes { ricci_soliton: true, ..PLAIN },
        observe: o_g7_5),
    case!("g7-6", G7, [free("B"), free("C"), nonzero("D"), nonzero("alpha")], b_g7_6,
        guard: guard_g7_6, observe: o_g7_6),
    case!("g7-7", G7, [nonzero("C"), nonzero("D"), nonzero("alpha"), nonzero("beta")], b_g7_7,
        presample: p_g7_7, observe: o_g7_7),
    case!("g7-8", G7, [free("B"), free("C"), nonzero("D"), nonzero("alpha")], b_g7_8,
        observe: o_g7_8),
    case!("special-I-1", SpecialRiem,
        [free("A"), free("B"), free("C"), free("alpha"), free("beta")], b_sp_i_1,
        notes: CaseNotes { einstein: true, ..PLAIN }),
    case!("special-I-2", SpecialRiem,
        [free("beta"), free("x1"), free("x2"), free("x3")], b_sp_i_2,
        notes: CaseNotes { flat: true, killing_continuum: true, ..PLAIN },
        observe: o_sp_i_2),
    case!("special-I-3", SpecialRiem,
        [free("A"), free("B"), free("C"), nonzero("alpha"), free("beta")], b_sp_i_3,
        observe: o_sp_i_3),
    case!("special-II-1", SpecialLor,
        [free("A"), free("B"), free("C"), free("alpha"), free("beta")], b_sp_ii_1,
        notes: CaseNotes { einstein: true, ..PLAIN }),
    case!("special-II-2", SpecialLor,
        [free("beta"), free("x1"), free("x2"), free("x3")], b_sp_ii_2,
        notes: CaseNotes { flat: true, killing_continuum: true, ..PLAIN }),
    case!("special-II-3", SpecialLor,
        [free("A"), free("B"), free("C"), nonzero("alpha"), free("beta")], b_sp_ii_3,
        observe: o_sp_ii_3),
];
