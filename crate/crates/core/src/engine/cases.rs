//! The three case runs.

use super::facts::FactTable;
use super::fixtures::CaseFixture;
use super::phases::{self, MINUS_ONE, ORDER, SURVIVOR};
use super::recorder::{Flow, Recorder};
use super::transcript::{CaseTag, ProofTranscript};
use crate::arithmetic::count::fibre_coefficients;
use crate::arithmetic::field::{fp2, fp4, is_prime, multiplicative_generator, Fp};
use crate::arithmetic::{count_points, extension_consistency, supersingular_count_prediction, FiberKind};
use crate::cyclotomic::{divisors, RootOfUnity};
use crate::eigenprofile::{EigenProfile, ProfileConstraint};
use crate::elliptic::{AnyModel, BaseAction, BaseMap, BinaryForm, FibreAction, ModelField, WeierstrassModel};
use crate::error::{Error, Result};
use crate::fixedlocus::{check_lefschetz_consistency, FixedLocus};
use crate::poly::PolyRing;
use crate::ring::{FiniteField, Ring};

const WILD_P: u64 = 11;

fn tame_constraints() -> Vec<ProfileConstraint> {
    vec![
        ProfileConstraint::RequiresEigenvalueOne,
        ProfileConstraint::ContainsFullOrbit(ORDER),
        ProfileConstraint::ExactProfileOrder(ORDER),
    ]
}

fn mathieu_profile() -> EigenProfile {
    "[1.2, z11:10.2]".parse().expect("built-in profile")
}

fn wild_constraints() -> Vec<ProfileConstraint> {
    vec![
        ProfileConstraint::RequiresEigenvalueOne,
        ProfileConstraint::PrescribedPowerProfile(6, mathieu_profile()),
        ProfileConstraint::ExactProfileOrder(ORDER),
    ]
}

fn check_tame_characteristic(c: u64) -> Result<()> {
    match c {
        WILD_P => Err(Error::WildCharacteristic(c)),
        0 => Ok(()),
        2 | 3 => Err(Error::UnsupportedCharacteristic(c)),
        c if !is_prime(c) => Err(Error::InvalidArgument(format!("characteristic {c} is not prime"))),
        _ => Ok(()),
    }
}

fn invariant_form<F: Ring>(field: &F, coeffs: &[(usize, i64)]) -> BinaryForm<F::Elem> {
    let mut v = vec![field.zero(); 13];
    for &(k, c) in coeffs {
        v[k] = field.from_i64(c);
    }
    BinaryForm::new(field, 12, v).expect("degree 12")
}

fn build_model(rec: &mut Recorder, fixture: &CaseFixture, characteristic: u64) -> Flow<AnyModel> {
    let (m, step) = rec
        .step(
            "model.build",
            "Weierstrass model of the fixture in the run's characteristic",
            "elliptic::ModelFixture::build",
        )
        .input("fixture", fixture.model.name.as_deref().unwrap_or("custom"))
        .input("characteristic", characteristic)
        .value(fixture.model.build().and_then(|m| match (m, characteristic) {
            (AnyModel::Rational(q), p) if p > 0 => q.reduce_mod(p).map(AnyModel::Prime),
            (m, _) => Ok(m),
        }))?;
    let got = m.characteristic();
    step.expect(
        format!("characteristic {got}"),
        format!("characteristic {characteristic}"),
    )?;
    Ok(m)
}

fn tame_model_phases<F: ModelField>(
    rec: &mut Recorder,
    model: &WeierstrassModel<F>,
    fixture: &CaseFixture,
) -> Flow<()> {
    let field = model.field();
    let target = invariant_form(field, &[(12, 1), (1, -1)]);
    let action = BaseAction::Multiplicative { order: 11 };
    phases::model(
        rec,
        model,
        &action,
        &target,
        "fixed: t (singular), inf (smooth); orbits: 1 of length 11",
    )?;
    let w = phases::weights(
        rec,
        model,
        fixture,
        "3a - 2b = 0; 2b - 12c = 0; 11c = 0 (mod 66)",
        11,
        Some(phases::tame_family),
        "(2, 3, 6)",
    )?;
    let v: Vec<i64> = w.values.iter().map(|&x| x as i64).collect();
    let g = FibreAction::diagonal(ORDER, v[0], v[1], v[2]).expect("order 66");
    phases::equivariance(rec, model, &g, &RootOfUnity::new(ORDER, 5).expect("valid"), "1.66")
}

fn tame_steps(rec: &mut Recorder, fixture: &CaseFixture, characteristic: u64) -> Flow<()> {
    rec.axiom("order.purely-non-symplectic", "tame-purely-non-symplectic", 0)?;
    rec.axiom("profiles.ample", "invariant-ample-class", 0)?;
    rec.axiom("profiles.primitive", "primitive-eigenvalue", 0)?;
    rec.axiom("profiles.faithful", "faithful-representation", 0)?;
    phases::enumerate(rec, &tame_constraints(), &[MINUS_ONE, SURVIVOR])?;
    phases::eliminate_minus_one(rec)?;
    let remaining = vec![SURVIVOR.parse().expect("built-in profile")];
    let facts = phases::survivor(rec, fixture, characteristic, &remaining, false)?;

    let three = FixedLocus::points(3);
    let p: EigenProfile = fixture.profile.parse().expect("checked");
    let (check, step) = rec
        .step(
            "survivor.fix-g",
            "Fix(g) = {R.F_inf, R.F_0, C10.F_0} agrees with e(g)",
            "fixedlocus::check_lefschetz_consistency",
        )
        .input("locus", &three)
        .value(check_lefschetz_consistency(&three, &p))?;
    step.judge(
        format!("e(locus) = {}, e(g) = {}", check.locus_euler, facts.e_g),
        "equal",
        check.passes(),
    )?;

    match build_model(rec, fixture, characteristic)? {
        AnyModel::Rational(m) => tame_model_phases(rec, &m, fixture),
        AnyModel::Prime(m) => tame_model_phases(rec, &m, fixture),
    }
}

fn finish(case: CaseTag, characteristic: u64, rec: Recorder) -> ProofTranscript {
    ProofTranscript::new(case, characteristic, rec.steps)
}

/// Characteristic 0 or a prime `p >= 5`, `p != 11`.
pub fn run_tame_case(characteristic: u64) -> Result<ProofTranscript> {
    run_tame_with(characteristic, &CaseFixture::tame())
}

pub fn run_tame_with(characteristic: u64, fixture: &CaseFixture) -> Result<ProofTranscript> {
    check_tame_characteristic(characteristic)?;
    let mut rec = Recorder::new(FactTable::declared(CaseTag::Tame));
    let _ = tame_steps(&mut rec, fixture, characteristic);
    Ok(finish(CaseTag::Tame, characteristic, rec))
}

pub fn run_complex_case() -> ProofTranscript {
    run_complex_with(&CaseFixture::tame())
}

/// The characteristic-0 run preceded by the projectivity axiom.
pub fn run_complex_with(fixture: &CaseFixture) -> ProofTranscript {
    let mut rec = Recorder::new(FactTable::declared(CaseTag::Complex));
    let _ = rec
        .axiom("setup.projective", "projective", 0)
        .and_then(|_| tame_steps(&mut rec, fixture, 0));
    finish(CaseTag::Complex, 0, rec)
}

pub fn run_wild_case() -> ProofTranscript {
    run_wild_with(&CaseFixture::wild())
}

pub fn run_wild_with(fixture: &CaseFixture) -> ProofTranscript {
    let mut rec = Recorder::new(FactTable::declared(CaseTag::Wild));
    let _ = wild_steps(&mut rec, fixture);
    finish(CaseTag::Wild, WILD_P, rec)
}

fn wild_steps(rec: &mut Recorder, fixture: &CaseFixture) -> Flow<()> {
    rec.axiom("order.max-symplectic", "max-symplectic-order-11", 0)?;
    let m: Vec<u64> = divisors(ORDER)
        .into_iter()
        .filter(|d| d % WILD_P == 0 && *d <= WILD_P)
        .collect();
    rec.step(
        "order.decomposition",
        "the symplectic part contains the order-11 element and is at most 11",
        "cyclotomic::divisors",
    )
    .input("order", ORDER)
    .input("p", WILD_P)
    .expect(
        m.iter()
            .map(|m| format!("{m}.{}", ORDER / m))
            .collect::<Vec<_>>()
            .join(", "),
        "11.6",
    )?;
    rec.axiom("profiles.ample", "invariant-ample-class", 0)?;
    rec.axiom("profiles.mathieu", "mathieu-profile", 0)?;
    rec.axiom("profiles.faithful", "faithful-representation", 0)?;
    let found = phases::enumerate(rec, &wild_constraints(), &["[1, -1, z33:20]", MINUS_ONE, SURVIVOR])?;

    rec.axiom("eliminate.primitive", "primitive-eigenvalue", 0)?;
    let marks: Vec<String> = found
        .iter()
        .map(|p| {
            format!(
                "{p}: {}",
                if p.power_profile(11).contains_orbit(6) {
                    "z6"
                } else {
                    "no z6"
                }
            )
        })
        .collect();
    rec.step(
        "eliminate.zeta6",
        "g11 is tame of non-symplectic order 6, so z6 must occur in [g11*]",
        "eigenprofile::contains_orbit",
    )
    .input("candidates", found.len())
    .expect(
        marks.join("; "),
        "[1, -1, z33:20]: no z6; [1, -1, z66:20]: z6; [1.2, z66:20]: z6",
    )?;
    rec.axiom("eliminate.tame-powers", "tame-powers", 0)?;
    phases::eliminate_minus_one(rec)?;
    let remaining = vec![SURVIVOR.parse().expect("built-in profile")];
    phases::survivor(rec, fixture, WILD_P, &remaining, true)?;

    let model = match build_model(rec, fixture, WILD_P)? {
        AnyModel::Prime(m) => m,
        AnyModel::Rational(q) => {
            let (m, _) = rec
                .step(
                    "model.reduce",
                    "reduction to characteristic 11",
                    "elliptic::WeierstrassModel::reduce_mod",
                )
                .value(q.reduce_mod(WILD_P))?;
            m
        }
    };
    let field = model.field().clone();
    let target = invariant_form(&field, &[(11, 1), (1, -1)]);
    phases::model(
        rec,
        &model,
        &BaseAction::Translation,
        &target,
        "fixed: inf (singular); orbits: 1 of length 11",
    )?;

    let w = phases::weights(rec, &model, fixture, "3a - 2b = 0 (mod 6)", 1, None, "(2, 3)")?;
    let g = FibreAction {
        x: RootOfUnity::new(6, w.values[0] as i64).expect("valid"),
        y: RootOfUnity::new(6, w.values[1] as i64).expect("valid"),
        base: BaseMap::Translate(1),
    };
    let pr = PolyRing::new(field.clone());
    let t = pr.x();
    let inv = pr.sub(&pr.pow(&t, WILD_P), &t);
    let shifted = pr.add(&t, &pr.one());
    let moved = pr.sub(&pr.pow(&shifted, WILD_P), &shifted);
    rec.step(
        "equivariance.base-invariant",
        "(t+1)^11 - (t+1) = t^11 - t over F_11",
        "poly::PolyRing::pow",
    )
    .expect(pr.format(&moved, "t"), pr.format(&inv, "t"))?;
    phases::equivariance(rec, &model, &g, &RootOfUnity::new(6, -1).expect("valid"), "11.6")?;

    point_counts(rec, &model)?;
    fixed_points_at_infinity(rec, &model, &g)
}

fn point_counts(rec: &mut Recorder, model: &WeierstrassModel<Fp>) -> Flow<()> {
    let f11 = Fp::new(WILD_P).expect("prime");
    let (r, step) = rec
        .step("count.f11", "brute-force count over F_11", "arithmetic::count_points")
        .input("q", 11)
        .value(count_points(model, &f11))?;
    let cusp12 = r
        .per_fiber
        .iter()
        .all(|f| f.kind == FiberKind::Cuspidal && f.count == 12);
    step.judge(
        format!("{r}; all fibres cuspidal with 12 points: {cusp12}"),
        "144, 12 cuspidal fibres of 12 points",
        r.total == 144 && r.per_fiber.len() == 12 && cusp12,
    )?;

    let f121 = fp2(WILD_P).expect("prime");
    let prediction = supersingular_count_prediction(121);
    let (r, step) = rec
        .step(
            "count.f121",
            "brute-force count over F_121 against 1 + 22q + q^2",
            "arithmetic::count_points",
        )
        .input("q", 121)
        .input("prediction", prediction)
        .value(count_points(model, &f121))?;
    let hasse = r.hasse_violations().len();
    step.judge(
        format!("{r}; Hasse violations: {hasse}"),
        format!("{prediction}; Hasse violations: 0"),
        r.total == prediction && hasse == 0,
    )?;

    let f4 = fp4(WILD_P).expect("prime");
    let (checks, step) = rec
        .step(
            "count.extension",
            "smooth F_121 fibres recounted over F_{11^4}: a_{q^2} = a_q^2 - 2q",
            "arithmetic::extension_consistency",
        )
        .input("small", 121)
        .input("big", 14641)
        .value(extension_consistency(model, &f121, &f4, |a| f4.embed(a)))?;
    let bad = checks.iter().filter(|c| !c.passes(121)).count();
    step.judge(
        format!("{} smooth fibres, {bad} inconsistent", checks.len()),
        "0 inconsistent",
        bad == 0 && !checks.is_empty(),
    )
}

/// Fixed points of `g` on the fibre over the base point it fixes.
fn fixed_points_at_infinity(rec: &mut Recorder, model: &WeierstrassModel<Fp>, g: &FibreAction) -> Flow<()> {
    let k = fp2(WILD_P).expect("prime");
    let zeta = k.pow(&multiplicative_generator(&k), (k.order() - 1) / 6);
    let (a, b) = {
        let coeffs = fibre_coefficients(model, &k);
        let (_, a, b) = coeffs.last().expect("infinity").clone();
        (a, b)
    };
    let zx = k.pow(&zeta, g.x.exponent_in(6).expect("order 6"));
    let zy = k.pow(&zeta, g.y.exponent_in(6).expect("order 6"));
    let mut fixed = vec!["O".to_string()];
    for x in k.elements() {
        for y in k.elements() {
            let lhs = k.mul(&y, &y);
            let rhs = k.add(&k.add(&k.pow(&x, 3), &k.mul(&a, &x)), &b);
            if lhs == rhs && k.mul(&zx, &x) == x && k.mul(&zy, &y) == y {
                fixed.push(format!("({}, {})", k.format(&x), k.format(&y)));
            }
        }
    }
    rec.step(
        "fixed.g",
        "g fixes only the fibre over inf; its fixed points there are the section point and the cusp",
        "arithmetic::count::fibre_coefficients",
    )
    .input("fibre", format!("y^2 = x^3 + {} x + {}", k.format(&a), k.format(&b)))
    .input("action", g)
    .expect(
        format!("{} points: {}", fixed.len(), fixed.join(", ")),
        "2 points: O, (0, 0)",
    )
}
