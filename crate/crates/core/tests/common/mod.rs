#![allow(dead_code)]

use iomkit::search::enumerate_models;
use iomkit::{fixtures, FiniteAlgebra};

/// Every bounded involutive BE algebra with at most four elements.
pub fn census_upto_4() -> Vec<FiniteAlgebra> {
    (1..=4).flat_map(|n| enumerate_models(n).unwrap()).collect()
}

/// The census up to four elements plus E5 in its original labeling.
pub fn census_with_e5() -> Vec<FiniteAlgebra> {
    let mut v = census_upto_4();
    v.push(fixtures::e5());
    v
}

/// The census up to five elements.
pub fn census_upto_5() -> Vec<FiniteAlgebra> {
    (1..=5).flat_map(|n| enumerate_models(n).unwrap()).collect()
}
