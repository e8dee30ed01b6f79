mod common;

use iomkit::format::{parse_alg, serialize_alg};
use iomkit::search::canonicalize;
use iomkit::FiniteAlgebra;
use proptest::prelude::*;

fn relabel(alg: &FiniteAlgebra, perm: &[usize], names: Vec<String>) -> FiniteAlgebra {
    // perm maps old index to new index
    let n = alg.n();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let rows = (0..n).map(|i| (0..n).map(|j| perm[alg.imp(inv[i], inv[j])]).collect()).collect();
    FiniteAlgebra::new(names, rows, perm[alg.one()], alg.zero().map(|z| perm[z])).unwrap()
}

#[test]
fn census_models_round_trip() {
    for m in common::census_upto_5() {
        let text = serialize_alg(&m);
        let back = parse_alg(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(serialize_alg(&back), text);
    }
}

proptest! {
    #[test]
    fn relabelings_round_trip_and_share_a_canonical_form(
        idx in 0usize..23,
        seed in proptest::collection::vec(any::<u32>(), 5),
        long_names in any::<bool>(),
    ) {
        let models = common::census_upto_5();
        let m = &models[idx % models.len()];
        let n = m.n();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = seed[i % seed.len()] as usize % (i + 1);
            perm.swap(i, j);
        }
        let names: Vec<String> = (0..n)
            .map(|i| if long_names { format!("elt_{i}") } else { format!("x{i}") })
            .collect();
        let r = relabel(m, &perm, names);
        prop_assert_eq!(parse_alg(&serialize_alg(&r)).unwrap(), r.clone());
        prop_assert_eq!(canonicalize(&r).unwrap(), canonicalize(m).unwrap());
    }
}
