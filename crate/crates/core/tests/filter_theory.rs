mod common;

use iomkit::filters::{
    classify_filter, ds_mask, enumerate_subfamilies, extend_filter, filter_mask, generated_filter, is_commutative_ds,
    is_ds, is_filter, FamilyKind,
};
use iomkit::{build_derived, classify::classify, ElementSubset};

#[test]
fn ds_are_filters_and_both_are_subalgebras() {
    for m in common::census_upto_5() {
        let d = build_derived(&m).unwrap();
        let n = m.n();
        for mask in 0..1u64 << n {
            let s = ElementSubset::from_mask(mask);
            let f = is_filter(&d, s).unwrap().holds();
            let ds = is_ds(&d, s).unwrap().holds();
            assert_eq!(f, filter_mask(&d, s));
            assert_eq!(ds, ds_mask(&d, s));
            assert!(!ds || f, "DS that is not a filter: {mask:#x} in {:?}", m.rows());
            if f || ds {
                for x in s.iter() {
                    for y in s.iter() {
                        assert!(s.contains(d.imp(x, y)));
                    }
                }
            }
        }
    }
}

#[test]
fn maximality_properties() {
    for m in common::census_upto_5() {
        let d = build_derived(&m).unwrap();
        let filters = enumerate_subfamilies(&d, FamilyKind::Filter).unwrap();
        let dss = enumerate_subfamilies(&d, FamilyKind::Ds).unwrap();
        for &f in &filters {
            let c = classify_filter(&d, f).unwrap();
            assert!(!c.is_strongly_maximal || c.is_maximal);
            if filters == dss {
                assert!(!c.is_maximal || c.is_strongly_maximal);
            }
            let bigger_proper = filters.iter().any(|&g| g != f && f.is_subset(g) && g != ElementSubset::full(m.n()));
            assert_eq!(c.is_maximal, c.is_proper && !bigger_proper);
            assert_eq!(c.is_maximal, c.maximal_by_powers);
        }
    }
}

#[test]
fn commutativity_properties() {
    for m in common::census_upto_5() {
        let d = build_derived(&m).unwrap();
        let dss = enumerate_subfamilies(&d, FamilyKind::Ds).unwrap();
        let comm: Vec<bool> = dss.iter().map(|&f| is_commutative_ds(&d, f).unwrap().holds()).collect();
        for (i, &f) in dss.iter().enumerate() {
            for (j, &e) in dss.iter().enumerate() {
                if comm[i] && f.is_subset(e) {
                    assert!(comm[j]);
                }
            }
        }
        let one = ElementSubset::singleton(m.one());
        assert_eq!(is_commutative_ds(&d, one).unwrap().holds(), comm.iter().all(|&c| c));
        if classify(&m).labels.is_qw {
            assert!(comm.iter().all(|&c| c));
        }
    }
}

#[test]
fn generated_filters_agree_with_intersections_and_formulas() {
    for m in common::census_upto_5() {
        let d = build_derived(&m).unwrap();
        let n = m.n();
        for mask in 1..1u64 << n {
            let g = generated_filter(&d, ElementSubset::from_mask(mask)).unwrap();
            assert!(filter_mask(&d, g.filter));
            assert_eq!(g.by_intersection, Some(g.filter));
            if d.is_iom() {
                assert_eq!(g.by_formula, Some(g.filter));
            }
        }
        for f in enumerate_subfamilies(&d, FamilyKind::Filter).unwrap() {
            for x in 0..n {
                let g = extend_filter(&d, f, x).unwrap();
                if f.contains(x) {
                    assert_eq!(g.filter, f);
                }
            }
        }
    }
}
