//! Phases shared by the tame, complex and wild runs.

use std::fmt::Write as _;

use num_rational::BigRational;

use super::fixtures::CaseFixture;
use super::recorder::{Flow, Recorder};
use crate::cyclotomic::RootOfUnity;
use crate::eigenprofile::{enumerate_profiles, EigenProfile, ProfileConstraint, K3_H2_DIM};
use crate::elliptic::configurations::{classify_configurations, ConfigurationRules};
use crate::elliptic::model::DEG_A;
use crate::elliptic::{
    base_orbits, ec_automorphism_bound, force_a_zero, verify_equivariance, BaseAction, BinaryForm, FibreAction,
    KodairaType, ModelField, WeierstrassModel,
};
use crate::fixedlocus::{
    check_lefschetz_consistency, hodge_index_genus_bound, is_rational_square, rh_max_fixed_points, rh_quotient_genus,
    CurveComponent, FixedLocus,
};
use crate::weights::{order_decomposition, solve, weights_from_invariance, CongruenceSystem, WeightSolution};

pub(crate) const ORDER: u64 = 66;
pub(crate) const MINUS_ONE: &str = "[1, -1, z66:20]";
pub(crate) const SURVIVOR: &str = "[1.2, z66:20]";

fn profile(s: &str) -> EigenProfile {
    s.parse().expect("built-in profile")
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join("; ")
}

pub(crate) fn enumerate(
    rec: &mut Recorder,
    constraints: &[ProfileConstraint],
    expected: &[&str],
) -> Flow<Vec<EigenProfile>> {
    let cs: Vec<String> = constraints.iter().map(ToString::to_string).collect();
    let (found, step) = rec
        .step(
            "profiles.enumerate",
            "eigenvalue profiles of dimension 22 and exact order 66 meeting the constraints",
            "eigenprofile::enumerate_profiles",
        )
        .input("dim", K3_H2_DIM)
        .input("constraints", cs.join(", "))
        .value(enumerate_profiles(K3_H2_DIM, constraints))?;
    step.expect(join(&found), expected.join("; "))?;
    Ok(found)
}

/// Rules out `[1, z66:20, -1]` from the fixed loci of `g^33`, `g^22`, `g^11`.
pub(crate) fn eliminate_minus_one(rec: &mut Recorder) -> Flow<()> {
    let p = profile(MINUS_ONE);
    let p33 = p.power_profile(33);
    let p22 = p.power_profile(22);
    let p11 = p.power_profile(11);

    let (e33, step) = rec
        .step(
            "eliminate.power-33",
            "[g33*] and e(g33) for the candidate with eigenvalue -1",
            "eigenprofile::power_profile",
        )
        .input("profile", &p)
        .input("k", 33)
        .value(p33.lefschetz_number())?;
    step.expect(
        format!("{p33}; e = {e33}; invariant dim = {}", p33.invariant_dimension()),
        "[1, -1.21]; e = -18; invariant dim = 1",
    )?;
    rec.axiom("eliminate.fix-33", "involution-fixed-locus", 1)?;

    let c10 = FixedLocus::new(0, [10]);
    let (check, step) = rec
        .step(
            "eliminate.lefschetz-33",
            "Fix(g33) = C10 is consistent with e(g33)",
            "fixedlocus::check_lefschetz_consistency",
        )
        .input("locus", &c10)
        .input("profile", &p33)
        .value(check_lefschetz_consistency(&c10, &p33))?;
    step.judge(
        format!("e(locus) = {}, e(g33) = {}", check.locus_euler, check.lefschetz),
        "equal",
        check.passes(),
    )?;

    let pts12 = FixedLocus::points(12);
    let (check, step) = rec
        .step(
            "eliminate.power-11",
            "e(g11) = 12 and Fix(g11) lies in C10, hence is 12 points",
            "fixedlocus::check_lefschetz_consistency",
        )
        .input("profile", &p11)
        .input("locus", &pts12)
        .value(check_lefschetz_consistency(&pts12, &p11))?;
    step.judge(
        format!("{p11}; e = {}", check.lefschetz),
        "e = 12",
        check.passes() && check.lefschetz == 12,
    )?;

    let (e22, step) = rec
        .step("eliminate.power-22", "[g22*] and e(g22)", "eigenprofile::power_profile")
        .input("profile", &p)
        .input("k", 22)
        .value(p22.lefschetz_number())?;
    step.expect(
        format!("{p22}; e = {e22}; invariant dim = {}", p22.invariant_dimension()),
        "[1.2, z3:2.10]; e = -6; invariant dim = 2",
    )?;
    rec.axiom("eliminate.no-rational-curve", "chern-class-injective", 0)?;
    rec.axiom("eliminate.fix-22", "fix22-shape", 0)?;

    let bound = CurveComponent::new(10);
    let (hb, step) = rec
        .step(
            "eliminate.hodge",
            "C_{k+4}.C10 <= #Fix(g11) = 12, so 18(2k+6) <= 144",
            "fixedlocus::hodge_index_genus_bound",
        )
        .input("fixed", "C10")
        .input("max_intersection", 12)
        .input("offset", 4)
        .value(hodge_index_genus_bound(&bound, 12, 4))?;
    step.expect(
        format!("k in {:?}, equality at {:?}", hb.feasible, hb.equality),
        "k in [0, 1], equality at [1]",
    )?;

    let mut bad = Vec::new();
    for &k in &hb.feasible {
        let locus = FixedLocus::new(2 * k, [k + 4]);
        match check_lefschetz_consistency(&locus, &p22) {
            Ok(c) if c.passes() => {}
            _ => bad.push(k),
        }
    }
    rec.step(
        "eliminate.fix-22-euler",
        "C_{k+4} + 2k points has Euler number e(g22) for each feasible k",
        "fixedlocus::check_lefschetz_consistency",
    )
    .input("profile", &p22)
    .input("k", format!("{:?}", hb.feasible))
    .judge(format!("inconsistent k: {bad:?}"), "inconsistent k: []", bad.is_empty())?;

    let ratio = BigRational::new(
        CurveComponent::new(4).self_intersection().into(),
        bound.self_intersection().into(),
    );
    let square = is_rational_square(&ratio);
    let inv = p.invariant_dimension();
    rec.step(
        "eliminate.k0",
        "k = 0: C4^2/C10^2 is not a rational square, so C4 and C10 give two invariant classes",
        "fixedlocus::is_rational_square",
    )
    .input("ratio", &ratio)
    .judge(
        format!("square = {square}; independent invariant classes = 2 > dim H^g = {inv}"),
        "square = false; 2 > dim H^g",
        !square && inv < 2,
    )?;

    let (genus, step) = rec
        .step(
            "eliminate.k1",
            "k = 1: equality gives C5.C10 = 12; g33 fixes those 12 points of C5, so C5/g33 is a conic",
            "fixedlocus::rh_quotient_genus",
        )
        .input("order", 2)
        .input("genus", 5)
        .input("fixed_points", 12)
        .value(rh_quotient_genus(2, 5, 12))?;
    let conic = genus == Some(0) && hb.equality.contains(&1);
    step.judge(
        format!("quotient genus = {genus:?}; image degree = 12/6 = 2"),
        "quotient genus = Some(0)",
        conic,
    )?;
    rec.axiom_all("eliminate.plane-order-3", "plane-order-3")?;
    rec.step(
        "eliminate.k1-locus",
        "Fix of the order-3 map induced by g11 on P^2 would be a conic and a point",
        "fixedlocus::FixedLocus",
    )
    .input("locus", "conic + point")
    .judge("conic + point", "3 points | line + point", conic)?;
    Ok(())
}

pub(crate) struct SurvivorFacts {
    pub e_g: i64,
}

/// Fixed loci and fibre configurations for the surviving profile.
pub(crate) fn survivor(
    rec: &mut Recorder,
    fixture: &CaseFixture,
    characteristic: u64,
    remaining: &[EigenProfile],
    wild: bool,
) -> Flow<SurvivorFacts> {
    let expected = join(remaining);
    let (p, step) = rec
        .step(
            "survivor.profile",
            "the carried profile is the only remaining candidate",
            "eigenprofile::EigenProfile",
        )
        .input("fixture", &fixture.profile)
        .value(fixture.profile.parse::<EigenProfile>())?;
    step.expect(
        format!("{p} (dim {})", p.total_dim()),
        format!("{expected} (dim {K3_H2_DIM})"),
    )?;

    let p33 = p.power_profile(33);
    let (e33, step) = rec
        .step(
            "survivor.power-33",
            "[g33*], e(g33) and the two possible fixed loci",
            "eigenprofile::power_profile",
        )
        .input("profile", &p)
        .input("k", 33)
        .value(p33.lefschetz_number())?;
    let both = [FixedLocus::new(0, [9]), FixedLocus::new(0, [0, 10])]
        .iter()
        .all(|l| check_lefschetz_consistency(l, &p33).is_ok_and(|c| c.passes()));
    step.judge(
        format!(
            "{p33}; e = {e33}; invariant dim = {}; C9 and R + C10 consistent = {both}",
            p33.invariant_dimension()
        ),
        "[1.2, -1.20]; e = -16; invariant dim = 2; C9 and R + C10 consistent = true",
        p33.to_string() == "[1.2, -1.20]" && e33 == -16 && p33.invariant_dimension() == 2 && both,
    )?;
    rec.axiom("survivor.fix-33", "involution-fixed-locus", 0)?;

    let p11 = p.power_profile(11);
    let (e_g, step) = rec
        .step(
            "survivor.lefschetz",
            "e(g) and e(g11)",
            "eigenprofile::lefschetz_number",
        )
        .input("profile", &p)
        .value(p.lefschetz_number())?;
    let (e11, step) = step.value(p11.lefschetz_number())?;
    step.expect(
        format!("e(g) = {e_g}; [g11] = {p11}; e(g11) = {e11}"),
        "e(g) = 3; [g11] = [1.2, z6:2.10]; e(g11) = 14",
    )?;

    let (rh, step) = rec
        .step(
            "survivor.genus-9",
            "g11 acts on Fix(g33) with order 3; a genus 9 curve admits too few fixed points",
            "fixedlocus::rh_max_fixed_points",
        )
        .input("order", 3)
        .input("genus", 9)
        .value(rh_max_fixed_points(3, 9))?;
    step.judge(format!("{rh} < {e11}"), "bound below e(g11)", (rh as i64) < e11)?;
    rec.axiom_all("survivor.fibration", "invariant-fibration")?;

    let d6 = p.power_profile(6).invariant_dimension();
    let d22 = p.power_profile(22).invariant_dimension();
    rec.step(
        "survivor.no-reducible",
        "I2 or III fibres would give g6 or g22 three invariant classes",
        "eigenprofile::invariant_dimension",
    )
    .input("profile", &p)
    .judge(
        format!("dim H^g6 = {d6}; dim H^g22 = {d22}"),
        "both < 3",
        d6 < 3 && d22 < 3,
    )?;
    rec.axiom("survivor.fibrewise", "fibrewise-automorphism", 0)?;

    let (ec, step) = rec
        .step(
            "survivor.curve-bound",
            "an automorphism of an elliptic curve fixing a point has order at most the bound",
            "elliptic::ec_automorphism_bound",
        )
        .input("characteristic", characteristic)
        .value(ec_automorphism_bound(characteristic))?;
    step.judge(format!("bound = {ec} < {}", ORDER / 3), "bound < 22", ec < ORDER / 3)?;
    if wild {
        rec.axiom("survivor.wild-p1", "wild-p1", 0)?;
    }

    let rules = ConfigurationRules {
        order: ORDER,
        base_kernel: 33,
        ec_bound: ec,
        base_fixed_points: if wild { 1 } else { 2 },
        fixed_euler: e11,
        section_euler: 2,
        bounded_power: 11,
    };
    let all = classify_configurations(&rules);
    let alive: Vec<String> = all
        .iter()
        .filter(|(_, r)| r.is_none())
        .map(|(c, _)| c.to_string())
        .collect();
    let mut tally = std::collections::BTreeMap::new();
    for (_, r) in &all {
        if let Some(r) = r {
            *tally.entry(r.to_string()).or_insert(0u64) += 1;
        }
    }
    let mut rejected = String::new();
    for (k, v) in &tally {
        let _ = write!(rejected, "{}{k}: {v}", if rejected.is_empty() { "" } else { "; " });
    }
    rec.step(
        "survivor.configurations",
        "orbit configurations of I1/II fibres with Euler number 24",
        "elliptic::configurations::classify_configurations",
    )
    .input("base_fixed_points", rules.base_fixed_points)
    .input("ec_bound", ec)
    .input("fixed_euler", e11)
    .input("candidates", all.len())
    .input("rejected", rejected)
    .expect(alive.join("; "), "{IIx1, IIx11}")?;
    Ok(SurvivorFacts { e_g })
}

fn summarize_orbits<F: ModelField>(field: &F, d: &crate::elliptic::OrbitDecomposition<F::Elem>) -> String {
    let fixed: Vec<String> = d
        .fixed
        .iter()
        .map(|f| {
            format!(
                "{} ({})",
                f.place.format(field),
                if f.in_set { "singular" } else { "smooth" }
            )
        })
        .collect();
    let orbits: Vec<String> = d
        .groups
        .iter()
        .map(|g| format!("{} of length {}", g.geometric_orbits, g.orbit_length))
        .collect();
    format!("fixed: {}; orbits: {}", fixed.join(", "), orbits.join(", "))
}

/// Discriminant shape, fibre ledger, base orbits and normalization of `B`.
pub(crate) fn model<F: ModelField>(
    rec: &mut Recorder,
    model: &WeierstrassModel<F>,
    action: &BaseAction,
    b_target: &BinaryForm<F::Elem>,
    orbits_expected: &str,
) -> Flow<()> {
    let field = model.field();
    let delta = model.discriminant();
    let shape = b_target.pow(field, 2);
    let c = delta.ratio(field, &shape);
    rec.step(
        "model.discriminant-shape",
        "Delta has one fixed double root and one orbit of double roots",
        "elliptic::discriminant",
    )
    .input("A", model.a().format(field))
    .input("B", model.b().format(field))
    .input("shape", format!("({})^2", b_target.format(field)))
    .judge(
        match &c {
            Some(c) => format!("Delta = {} * shape", field.format(c)),
            None => format!("Delta = {} is not a multiple of the shape", delta.format(field)),
        },
        "Delta = c * shape, c != 0",
        c.is_some_and(|c| !field.is_zero(&c)),
    )?;

    let (ledger, step) = rec
        .step(
            "model.ledger",
            "Kodaira types and Euler numbers of the singular fibres",
            "elliptic::WeierstrassModel::euler_ledger",
        )
        .value(model.euler_ledger())?;
    let cusps = ledger.count(KodairaType::II);
    step.judge(
        format!(
            "II x{cusps}; others = {}; total = {}",
            ledger.places.len() as u64 - ledger.places.iter().filter(|p| p.kodaira == KodairaType::II).count() as u64,
            ledger.total
        ),
        "II x12; others = 0; total = 24",
        cusps == 12 && ledger.places.iter().all(|p| p.kodaira == KodairaType::II) && ledger.is_k3(),
    )?;

    let places: Vec<_> = ledger.places.iter().map(|p| p.place.clone()).collect();
    let (d, step) = rec
        .step(
            "model.base-orbits",
            "orbits of the singular fibres under the base action",
            "elliptic::base_orbits",
        )
        .input("action", action)
        .value(base_orbits(field, action, &places))?;
    step.expect(summarize_orbits(field, &d), orbits_expected)?;

    let forced = force_a_zero(DEG_A as u64, cusps as u64, action, model.characteristic());
    let a_zero = model.a().is_zero(field);
    rec.step(
        "model.force-a-zero",
        "zeros of A form an invariant set of at most 8 places, so A = 0",
        "elliptic::force_a_zero",
    )
    .input("deg_a", DEG_A)
    .input("cusps", cusps)
    .input("action", action)
    .judge(
        format!("forced = {}; A = 0: {a_zero}", forced.forced()),
        "forced = true; A = 0: true",
        forced.forced() && a_zero,
    )?;

    let scalar = model.b_scalar(b_target);
    rec.step(
        "model.normalize-b",
        "B is a constant multiple of the invariant form",
        "elliptic::WeierstrassModel::b_scalar",
    )
    .input("target", b_target.format(field))
    .judge(
        match &scalar {
            Some(a) => format!("B = {} * target", field.format(a)),
            None => "B is not a multiple of the target".into(),
        },
        "B = a * target, a != 0",
        scalar.is_some_and(|a| !field.is_zero(&a)),
    )?;
    Ok(())
}

/// Monomials of `y^2 = x^3 + B(t)` as exponent vectors over the unknowns.
fn equation_monomials<F: ModelField>(model: &WeierstrassModel<F>, unknowns: usize) -> Vec<Vec<u32>> {
    let pad = |v: &[u32]| {
        let mut v = v.to_vec();
        v.resize(unknowns, 0);
        v
    };
    let mut out = vec![pad(&[3]), pad(&[0, 2])];
    if unknowns >= 3 {
        let field = model.field();
        for (k, c) in model.b().coeffs().iter().enumerate().rev() {
            if !field.is_zero(c) {
                out.push(pad(&[0, 0, k as u32]));
            }
        }
    }
    out
}

pub(crate) type FamilyCheck = fn(&[WeightSolution]) -> bool;

/// `a = 2 + 6a'`, `b = 3 + 9a'` or `36 + 9a'` by parity, `c = 6 + 18a'`.
pub(crate) fn tame_family(sols: &[WeightSolution]) -> bool {
    let expected: Vec<Vec<u64>> = (0..11i64)
        .map(|k| {
            let b = if k % 2 == 0 { 3 + 9 * k } else { 36 + 9 * k };
            vec![2 + 6 * k, b, 6 + 18 * k]
                .into_iter()
                .map(|v| v.rem_euclid(66) as u64)
                .collect()
        })
        .collect();
    let mut got: Vec<Vec<u64>> = sols.iter().map(|s| s.values.clone()).collect();
    let mut want = expected;
    got.sort();
    want.sort();
    got == want
}

pub(crate) fn weights<F: ModelField>(
    rec: &mut Recorder,
    model: &WeierstrassModel<F>,
    fixture: &CaseFixture,
    relations: &str,
    family_size: usize,
    family: Option<FamilyCheck>,
    expected: &str,
) -> Flow<WeightSolution> {
    let names: Vec<&str> = fixture.unknowns.iter().map(String::as_str).collect();
    let monos = equation_monomials(model, names.len());
    let (sys, step) = rec
        .step(
            "weights.invariance",
            "linear weights making each monomial of the equation scale alike",
            "weights::weights_from_invariance",
        )
        .input("monomials", format!("{monos:?}"))
        .input("modulus", fixture.modulus)
        .value(weights_from_invariance(&monos, &names, fixture.modulus))?;
    step.expect(&sys, relations)?;
    rec.axiom("weights.cm", "cm-order-6", 0)?;

    let (sys, step) = rec
        .step(
            "weights.family",
            "solutions before normalizing the multiplier on the 2-form",
            "weights::solve",
        )
        .input("system", &sys)
        .input("g11", &fixture.cm_relations)
        .value(sys.with(&fixture.cm_relations))?;
    let (sols, step) = step.value(solve(&sys))?;
    let shape_ok = family.is_none_or(|f| f(&sols));
    step.judge(
        format!("{} solutions: {}", sols.len(), join(&sols)),
        format!(
            "{family_size} solutions{}",
            if family.is_some() { " of the stated family" } else { "" }
        ),
        sols.len() == family_size && shape_ok,
    )?;

    let (sys, step) = rec
        .step(
            "weights.normalize",
            "fixing the primitive root by the multiplier on the 2-form; other choices are Galois conjugate",
            "weights::solve",
        )
        .input("system", &sys)
        .input("normalization", &fixture.normalization)
        .value(normalized(&sys, &fixture.normalization))?;
    let (sols, step) = step.value(solve(&sys))?;
    step.expect(join(&sols), expected)?;
    Ok(sols.into_iter().next().expect("checked unique"))
}

fn normalized(sys: &CongruenceSystem, relation: &str) -> crate::Result<CongruenceSystem> {
    sys.clone().with(relation)
}

pub(crate) fn equivariance<F: ModelField>(
    rec: &mut Recorder,
    model: &WeierstrassModel<F>,
    action: &FibreAction,
    expected_multiplier: &RootOfUnity,
    expected_order: &str,
) -> Flow<()> {
    let (omega, step) = rec
        .step(
            "equivariance.verify",
            "the action preserves the equation; multiplier on dx^dt/y",
            "elliptic::verify_equivariance",
        )
        .input("action", action)
        .value(verify_equivariance(model, action))?;
    step.expect(omega, expected_multiplier)?;
    let (dec, step) = rec
        .step(
            "equivariance.order",
            "ord(g) = m.n from the multiplier",
            "weights::order_decomposition",
        )
        .input("order", ORDER)
        .input("multiplier", omega)
        .value(order_decomposition(ORDER, &omega))?;
    step.expect(dec, expected_order)
}
