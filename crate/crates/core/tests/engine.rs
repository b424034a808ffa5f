use order66::engine::{
    run_complex_case, run_complex_with, run_tame_case, run_tame_with, run_wild_case, run_wild_with,
    supersingularity_report, CaseFixture, CaseTag, FactTable, ProofTranscript, Verdict, PERTURBATIONS,
};
use order66::Error;

fn ids(t: &ProofTranscript) -> Vec<&str> {
    t.steps.iter().map(|s| s.id.as_str()).collect()
}

#[test]
fn tame_runs_pass() {
    for c in [0, 5, 7, 13] {
        let t = run_tame_case(c).unwrap();
        assert!(t.passed(), "{}", t.summary(true));
        assert_eq!(t.step("equivariance.verify").unwrap().computed, "z66^5");
    }
}

#[test]
fn tame_content_is_independent_of_characteristic() {
    let a = run_tame_case(0).unwrap();
    let b = run_tame_case(7).unwrap();
    assert_eq!(ids(&a), ids(&b));
    for (x, y) in a.steps.iter().zip(&b.steps) {
        if !x.id.starts_with("model.") && x.id != "survivor.curve-bound" {
            assert_eq!(x.computed, y.computed, "{}", x.id);
        }
    }
}

#[test]
fn tame_dispatch_errors() {
    assert_eq!(run_tame_case(11).unwrap_err(), Error::WildCharacteristic(11));
    assert!(matches!(run_tame_case(3), Err(Error::UnsupportedCharacteristic(3))));
    assert!(matches!(run_tame_case(2), Err(Error::UnsupportedCharacteristic(2))));
    assert!(run_tame_case(9).is_err());
}

#[test]
fn complex_adds_one_axiom() {
    let tame = run_tame_case(0).unwrap();
    let complex = run_complex_case();
    assert!(complex.passed());
    assert_eq!(complex.case, CaseTag::Complex);
    assert_eq!(complex.steps.len(), tame.steps.len() + 1);
    assert_eq!(complex.steps[0].verdict, Verdict::Axiom);
    assert_eq!(complex.steps[1..], tame.steps[..]);
}

#[test]
fn wild_run_passes_with_counts() {
    let t = run_wild_case();
    assert!(t.passed(), "{}", t.summary(true));
    assert_eq!(t.characteristic, "11");
    assert!(t.step("count.f11").unwrap().computed.starts_with("#X(F_11) = 144"));
    assert!(t.step("count.f121").unwrap().computed.starts_with("#X(F_121) = 17304"));
    assert_eq!(t.steps.last().unwrap().id, "fixed.g");
    assert!(t.steps.last().unwrap().computed.starts_with("2 points"));
    assert_eq!(t.step("equivariance.order").unwrap().computed, "11.6");
}

#[test]
fn transcripts_are_deterministic() {
    assert_eq!(run_tame_case(0).unwrap().to_json(), run_tame_case(0).unwrap().to_json());
    assert_eq!(run_wild_case().to_json(), run_wild_case().to_json());
    let t = run_complex_case();
    let back = ProofTranscript::from_json(&t.to_json()).unwrap();
    assert_eq!(back, t);
}

#[test]
fn json_key_order_is_stable() {
    let j = run_tame_case(0).unwrap().to_json();
    let pos = |k: &str| j.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("case") < pos("characteristic") && pos("characteristic") < pos("steps"));
    let step = &j[pos("steps")..];
    let p = |k: &str| step.find(&format!("\"{k}\"")).unwrap();
    assert!(p("id") < p("desc") && p("desc") < p("inputs") && p("inputs") < p("computed"));
    assert!(p("computed") < p("expected") && p("expected") < p("verdict") && p("verdict") < p("reference"));
    assert!(j.contains("\"characteristic\": \"0\""));
}

#[test]
fn axiom_audit() {
    for t in [run_tame_case(0).unwrap(), run_complex_case(), run_wild_case()] {
        let mut declared = FactTable::declared(t.case);
        let mut cited = t.cited_facts();
        declared.sort();
        cited.sort();
        assert_eq!(cited, declared, "{}", t.case);
    }
}

#[test]
fn perturbations_fail_at_predicted_step() {
    for p in PERTURBATIONS {
        let tame = CaseFixture::tame().perturbed(p);
        let wild = CaseFixture::wild().perturbed(p);
        let runs = [
            run_tame_with(0, &tame).unwrap(),
            run_tame_with(7, &tame).unwrap(),
            run_complex_with(&tame),
            run_wild_with(&wild),
        ];
        for t in runs {
            assert!(!t.passed(), "{p} did not fail {}", t.case);
            assert_eq!(t.failed_step().unwrap().id, p.predicted_step(), "{p} in {}", t.case);
            assert_eq!(t.steps.last().unwrap().verdict, Verdict::Fail);
        }
    }
}

#[test]
fn supersingularity_reports() {
    let r = supersingularity_report(131).unwrap();
    assert!(r.supersingular);
    assert_eq!(r.nu.as_deref(), Some("1"));
    assert!(!supersingularity_report(5).unwrap().supersingular);
    let r = supersingularity_report(11).unwrap();
    assert_eq!(r.counts[0].count, "144");
    assert_eq!(r.counts[1].count, "17304");
    assert_eq!(r.counts[1].matches, Some(true));
    assert!(supersingularity_report(3).is_err());
}
