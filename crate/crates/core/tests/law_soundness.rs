mod common;

use iomkit::fixtures;
use iomkit::laws::{law_registry, run_suite, run_suite_in, LawContext, LawVerdict, Suite};

#[test]
fn involutive_laws_pass_on_e5_and_b2() {
    for alg in [fixtures::e5(), fixtures::b2()] {
        let r = run_suite(&alg, "involutive-be").unwrap();
        assert_eq!(r.failed, 0, "{:?}", r.reports);
        assert_eq!(r.not_applicable, 0);
        assert_eq!(r.passed, 26);
    }
}

#[test]
fn iom_laws_pass_on_e5() {
    let r = run_suite(&fixtures::e5(), "iom").unwrap();
    assert_eq!((r.passed, r.failed, r.not_applicable), (32, 0, 0));
}

#[test]
fn qw_laws_pass_on_b2() {
    let r = run_suite(&fixtures::b2(), "qw").unwrap();
    assert_eq!((r.passed, r.failed, r.not_applicable), (29, 0, 0));
}

#[test]
fn no_applicable_law_fails_anywhere_in_the_census() {
    for m in common::census_upto_5() {
        let ctx = LawContext::new(&m);
        let r = run_suite_in(&ctx, Suite::All);
        assert_eq!(r.failed, 0, "{:?} on {:?}", r.reports, m.rows());
    }
}

#[test]
fn not_applicable_names_the_missing_class() {
    let r = run_suite(&fixtures::e5(), "qw").unwrap();
    for rep in r.reports {
        assert_eq!(rep.verdict, LawVerdict::NotApplicable("not a QW algebra".into()));
    }
}

#[test]
fn witnesses_fail_under_independent_recomputation() {
    let e5 = fixtures::e5();
    let fresh = iomkit::build_derived(&e5).unwrap();
    for law in law_registry() {
        if let Some(w) = law.first_counterexample(&fresh) {
            assert_eq!(w.len(), law.arity);
            let again = iomkit::build_derived(&e5).unwrap();
            assert!(!law.holds_at(&again, &w), "{}", law.id);
        }
    }
}

#[test]
fn be_laws_apply_without_zero() {
    let plain =
        iomkit::FiniteAlgebra::new(vec!["a".into(), "1".into()], vec![vec![1, 1], vec![0, 1]], 1, None).unwrap();
    let r = run_suite(&plain, "be").unwrap();
    assert_eq!((r.passed, r.failed), (2, 0));
    let all = run_suite(&plain, "all").unwrap();
    assert_eq!(all.not_applicable, 85);
}
