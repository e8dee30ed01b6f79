mod common;

use iomkit::congruence::{
    check_commutativity_transfer, congruence_from_ds, ds_from_congruence, quotient, related, Partition,
};
use iomkit::filters::{enumerate_subfamilies, FamilyKind};
use iomkit::{build_derived, classify::classify};

#[test]
fn every_ds_of_every_iom_model_round_trips() {
    let mut checked = 0;
    for m in common::census_upto_5() {
        let d = build_derived(&m).unwrap();
        if !d.is_iom() {
            continue;
        }
        for f in enumerate_subfamilies(&d, FamilyKind::Ds).unwrap() {
            let p = congruence_from_ds(&d, f).unwrap();
            for x in 0..m.n() {
                for y in 0..m.n() {
                    assert_eq!(related(&d, f, x, y).unwrap(), p.same(x, y));
                }
            }
            assert_eq!(ds_from_congruence(&d, &p).unwrap(), f);
            let q = quotient(&m, f).unwrap();
            assert!(q.supported && q.quotient_is_iom);
            assert!(classify(&q.algebra).labels.is_iom);
            assert_eq!(q.algebra.n(), p.class_count());
            for x in 0..m.n() {
                for y in 0..m.n() {
                    assert_eq!(q.projection[m.imp(x, y)], q.algebra.imp(q.projection[x], q.projection[y]));
                }
            }
            let (base, quot) = check_commutativity_transfer(&m, f).unwrap();
            assert_eq!(base, quot);
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn class_of_one_of_any_congruence_is_a_ds() {
    for m in common::census_upto_5() {
        let d = build_derived(&m).unwrap();
        let n = m.n();
        // every partition via restricted growth strings
        let mut labels = vec![0usize; n];
        loop {
            let p = Partition::from_labels(&labels);
            if iomkit::congruence::is_congruence(&d, &p).unwrap() {
                ds_from_congruence(&d, &p).unwrap();
            }
            let mut i = n;
            let advanced = loop {
                if i <= 1 {
                    break false;
                }
                i -= 1;
                let max = labels[..i].iter().copied().max().unwrap_or(0);
                if labels[i] <= max {
                    labels[i] += 1;
                    labels[i + 1..].iter_mut().for_each(|l| *l = 0);
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
}
