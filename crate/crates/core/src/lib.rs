pub mod algebra;
pub mod classify;
pub mod congruence;
pub mod error;
pub mod exhaust;
pub mod filters;
pub mod format;
pub mod laws;
pub mod search;
pub mod subset;

pub use algebra::{build_derived, fixtures, validate, DerivedTables, FiniteAlgebra, RawAlgebra, MAX_ELEMENTS};
pub use subset::ElementSubset;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
    #[doc = include_str!("../../../book/src/filters.md")]
    mod filters {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
}
