//! Reference data backing the unit and acceptance test suites: the closed-form
//! Ricci and Lie-derivative matrices transcribed from the catalog's reference
//! tables, plus constraint-respecting random instance generators.
//!
//! Nothing here feeds the engine: the library computes curvature through the
//! Koszul route, and these transcriptions exist so the tests can compare the
//! two independently.

use rand::Rng;

use crate::algebra::{FamilyInstance, FamilyTag};
use crate::{Mat3, Vec3};

/// Closed-form Ricci matrix for the eight families that have a printed one.
pub fn closed_form_ricci(inst: &FamilyInstance) -> Option<Mat3> {
    let (a, b, c, d) = (inst.a(), inst.b(), inst.c(), inst.d());
    let eta = inst.eta();
    let m = match inst.tag() {
        FamilyTag::RiemUnimodular => Mat3::from_diagonal(&Vec3::new(
            0.5 * (a * a - b * b - c * c) + b * c,
            0.5 * (b * b - a * a - c * c) + a * c,
            0.5 * (c * c - a * a - b * b) + a * b,
        )),
        FamilyTag::RiemNonunimodular => Mat3::from_diagonal(&Vec3::new(
            -a * a - 0.5 * b * b - 0.5 * c * c - d * d - b * c,
            -a * a - 0.5 * b * b + 0.5 * c * c - a * d,
            -d * d + 0.5 * b * b - 0.5 * c * c - a * d,
        )),
        FamilyTag::G1 => Mat3::new(
            -0.5 * b * b,
            -a * b,
            a * b,
            -a * b,
            -2.0 * a * a - 0.5 * b * b,
            2.0 * a * a,
            a * b,
            2.0 * a * a,
            -2.0 * a * a + 0.5 * b * b,
        ),
        FamilyTag::G2 => Mat3::new(
            -0.5 * a * a - 2.0 * c * c,
            0.0,
            0.0,
            0.0,
            0.5 * a * a - a * b,
            c * (a - 2.0 * b),
            0.0,
            c * (a - 2.0 * b),
            -0.5 * a * a + a * b,
        ),
        FamilyTag::G3 => Mat3::from_diagonal(&Vec3::new(
            0.5 * (b * b - a * a + c * c) - b * c,
            0.5 * (a * a - b * b + c * c) - a * c,
            0.5 * (c * c - a * a - b * b) + a * b,
        )),
        FamilyTag::G4 => Mat3::new(
            -0.5 * a * a,
            0.0,
            0.0,
            0.0,
            0.5 * a * a + 2.0 * eta * (a - b) - a * b + 2.0,
            a + 2.0 * (eta - b),
            0.0,
            a + 2.0 * (eta - b),
            -0.5 * a * a + a * b + 2.0 - 2.0 * eta * b,
        ),
        FamilyTag::G5 => Mat3::from_diagonal(&Vec3::new(
            a * a + 0.5 * b * b - 0.5 * c * c + a * d,
            a * d - 0.5 * b * b + 0.5 * c * c + d * d,
            -a * a - 0.5 * b * b - 0.5 * c * c - d * d - b * c,
        )),
        FamilyTag::G6 => Mat3::from_diagonal(&Vec3::new(
            0.5 * b * b - a * a + 0.5 * c * c - d * d - b * c,
            0.5 * b * b - a * a - 0.5 * c * c - a * d,
            a * d + 0.5 * b * b - 0.5 * c * c + d * d,
        )),
        FamilyTag::G7 => Mat3::new(
            -0.5 * c * c,
            0.0,
            0.0,
            0.0,
            a * d - a * a + 0.5 * c * c - b * c,
            a * a - a * d + b * c,
            0.0,
            a * a - a * d + b * c,
            a * d - a * a - 0.5 * c * c - b * c,
        ),
        // The special families have no printed Ricci matrix; their oracle is
        // the constant-curvature statement exercised elsewhere.
        FamilyTag::SpecialRiem | FamilyTag::SpecialLor => return None,
    };
    Some(m)
}

/// Closed-form Lie-derivative matrix for the families that have a printed one.
pub fn closed_form_lie_derivative(inst: &FamilyInstance, x: &Vec3) -> Option<Mat3> {
    let (a, b, c, d) = (inst.a(), inst.b(), inst.c(), inst.d());
    let eta = inst.eta();
    let (x1, x2, x3) = (x[0], x[1], x[2]);
    let sym = |d11: f64, d22: f64, d33: f64, d12: f64, d13: f64, d23: f64| {
        Mat3::new(d11, d12, d13, d12, d22, d23, d13, d23, d33)
    };
    let m = match inst.tag() {
        FamilyTag::RiemUnimodular => sym(0.0, 0.0, 0.0, (a - b) * x3, (c - a) * x2, (b - c) * x1),
        FamilyTag::RiemNonunimodular => sym(
            0.0,
            -2.0 * a * x1,
            -2.0 * d * x1,
            a * x2 + c * x3,
            b * x2 + d * x3,
            -(b + c) * x1,
        ),
        FamilyTag::G1 => sym(
            2.0 * a * (x2 - x3),
            2.0 * a * x3,
            2.0 * a * x2,
            -a * x1,
            a * x1,
            -a * (x2 + x3),
        ),
        FamilyTag::G2 => sym(
            0.0,
            2.0 * c * x1,
            2.0 * c * x1,
            -c * x2 + (a - b) * x3,
            (b - a) * x2 - c * x3,
            0.0,
        ),
        FamilyTag::G3 => sym(0.0, 0.0, 0.0, (a - b) * x3, (c - a) * x2, (b - c) * x1),
        FamilyTag::G4 => sym(
            0.0,
            2.0 * x1,
            2.0 * x1,
            -x2 + (a - b) * x3,
            (b - a - 2.0 * eta) * x2 - x3,
            2.0 * eta * x1,
        ),
        FamilyTag::G5 => sym(
            2.0 * a * x3,
            2.0 * d * x3,
            0.0,
            (b + c) * x3,
            -a * x1 - c * x2,
            -b * x1 - d * x2,
        ),
        FamilyTag::G6 => sym(
            0.0,
            -2.0 * a * x1,
            2.0 * d * x1,
            a * x2 + c * x3,
            -b * x2 - d * x3,
            (b - c) * x1,
        ),
        FamilyTag::G7 => sym(
            -2.0 * a * (x2 - x3),
            2.0 * b * x1 + 2.0 * d * x3,
            2.0 * b * x1 + 2.0 * d * x2,
            a * x1 - b * x2 + (b + c) * x3,
            -a * x1 + (b - c) * x2 - b * x3,
            -2.0 * b * x1 - d * x2 - d * x3,
        ),
        FamilyTag::SpecialRiem | FamilyTag::SpecialLor => return None,
    };
    Some(m)
}

fn draw(rng: &mut impl Rng) -> f64 {
    rng.gen_range(-5.0..5.0)
}

fn draw_nonzero(rng: &mut impl Rng) -> f64 {
    loop {
        let v = draw(rng);
        if v.abs() > 0.15 {
            return v;
        }
    }
}

/// Random constraint-satisfying instance with parameters in `[-5, 5]`.
pub fn random_instance(tag: FamilyTag, rng: &mut impl Rng) -> FamilyInstance {
    match tag {
        FamilyTag::RiemUnimodular => {
            FamilyInstance::riem_unimodular(draw(rng), draw(rng), draw(rng)).unwrap()
        }
        FamilyTag::RiemNonunimodular | FamilyTag::G5 => {
            // AC + BD = 0 and A + D != 0: scale a random orthogonal pair.
            loop {
                let (a, b) = (draw(rng), draw(rng));
                let t = rng.gen_range(-2.0..2.0);
                let (c, d) = (-b * t, a * t);
                if (a + d).abs() > 0.2 {
                    let inst = if tag == FamilyTag::G5 {
                        FamilyInstance::g5(a, b, c, d)
                    } else {
                        FamilyInstance::riem_nonunimodular(a, b, c, d)
                    };
                    if let Ok(inst) = inst {
                        return inst;
                    }
                }
            }
        }
        FamilyTag::G1 => FamilyInstance::g1(draw_nonzero(rng), draw(rng)).unwrap(),
        FamilyTag::G2 => FamilyInstance::g2(draw(rng), draw(rng), draw_nonzero(rng)).unwrap(),
        FamilyTag::G3 => FamilyInstance::g3(draw(rng), draw(rng), draw(rng)).unwrap(),
        FamilyTag::G4 => {
            FamilyInstance::g4(draw(rng), draw(rng), if rng.gen() { 1 } else { -1 }).unwrap()
        }
        FamilyTag::G6 => loop {
            let (a, b) = (draw(rng), draw(rng));
            let t = rng.gen_range(-2.0..2.0);
            let (c, d) = (b * t, a * t);
            if (a + d).abs() > 0.2 {
                if let Ok(inst) = FamilyInstance::g6(a, b, c, d) {
                    return inst;
                }
            }
        },
        FamilyTag::G7 => loop {
            // AC = 0: zero out one of A, C at random.
            let (mut a, b, mut c, d) = (draw(rng), draw(rng), draw(rng), draw(rng));
            if rng.gen() {
                a = 0.0;
            } else {
                c = 0.0;
            }
            if (a + d).abs() > 0.2 {
                if let Ok(inst) = FamilyInstance::g7(a, b, c, d) {
                    return inst;
                }
            }
        },
        FamilyTag::SpecialRiem => {
            FamilyInstance::special_riem(draw(rng), draw(rng), draw(rng)).unwrap()
        }
        FamilyTag::SpecialLor => {
            FamilyInstance::special_lor(draw(rng), draw(rng), draw(rng)).unwrap()
        }
    }
}
