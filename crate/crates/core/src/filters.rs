//! Filters, deductive systems and Bosbach states.
//!
//! Every predicate here works on [`DerivedTables`] and treats subsets as
//! [`ElementSubset`] bitmasks. Witnesses are the lexicographically first
//! tuple of element indices at which a condition fails.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::DerivedTables;
use crate::error::FilterError;
use crate::exhaust::first_failure;
use crate::subset::ElementSubset;

/// Largest universe for which subsets are enumerated exhaustively.
pub const MAX_ENUMERATION: usize = 24;

/// Largest universe for which generated filters are also checked against
/// the intersection of all filters containing the generators.
pub const MAX_INTERSECTION_CHECK: usize = 12;

/// Named membership conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    Nonempty,
    /// `x, y ∈ F ⇒ x ⊙ y ∈ F`
    F1,
    /// `x ∈ F, x ≤_Q y ⇒ y ∈ F`
    F2,
    /// `x ∈ F ⇒ y → x ∈ F`
    F3,
    /// `x ∈ F, x ≤ y ⇒ y ∈ F`
    F4,
    /// `x ∈ F ⇒ x ⊔ y ∈ F`
    F5,
    /// `1 ∈ F`
    Ds1,
    /// `x, x → y ∈ F ⇒ y ∈ F`
    Ds2,
    /// `y → x ∈ F ⇒ (x ⊔ y) → x ∈ F`
    Cf,
    /// `z → (y → x) ∈ F, z ∈ F ⇒ (x ⊔ y) → x ∈ F`
    Cf3,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::Nonempty => "nonempty",
            Condition::F1 => "F1",
            Condition::F2 => "F2",
            Condition::F3 => "F3",
            Condition::F4 => "F4",
            Condition::F5 => "F5",
            Condition::Ds1 => "DS1",
            Condition::Ds2 => "DS2",
            Condition::Cf => "CF",
            Condition::Cf3 => "CF3",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { condition: Condition, witness: Vec<usize> },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails { witness, .. } => Some(witness),
        }
    }

    fn first(checks: impl IntoIterator<Item = (Condition, Option<Vec<usize>>)>) -> Verdict {
        for (condition, w) in checks {
            if let Some(witness) = w {
                return Verdict::Fails { condition, witness };
            }
        }
        Verdict::Holds
    }
}

fn check(d: &DerivedTables, s: ElementSubset, c: Condition) -> Option<Vec<usize>> {
    let n = d.n();
    let inside = |x: usize| s.contains(x);
    match c {
        Condition::Nonempty => s.is_empty().then(Vec::new),
        Condition::Ds1 => (!inside(d.one())).then(Vec::new),
        Condition::F1 => first_failure(n, 2, |t| !(inside(t[0]) && inside(t[1])) || inside(d.prod(t[0], t[1]))),
        Condition::F2 => first_failure(n, 2, |t| !(inside(t[0]) && d.leq_q(t[0], t[1])) || inside(t[1])),
        Condition::F3 => first_failure(n, 2, |t| !inside(t[0]) || inside(d.imp(t[1], t[0]))),
        Condition::F4 => first_failure(n, 2, |t| !(inside(t[0]) && d.leq(t[0], t[1])) || inside(t[1])),
        Condition::F5 => first_failure(n, 2, |t| !inside(t[0]) || inside(d.join(t[0], t[1]))),
        Condition::Ds2 => first_failure(n, 2, |t| !(inside(t[0]) && inside(d.imp(t[0], t[1]))) || inside(t[1])),
        Condition::Cf => first_failure(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            !inside(d.imp(y, x)) || inside(d.imp(d.join(x, y), x))
        }),
        Condition::Cf3 => first_failure(n, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !(inside(z) && inside(d.imp(z, d.imp(y, x)))) || inside(d.imp(d.join(x, y), x))
        }),
    }
}

fn verdict(d: &DerivedTables, s: ElementSubset, conditions: &[Condition]) -> Verdict {
    Verdict::first(conditions.iter().map(|&c| (c, check(d, s, c))))
}

/// Fast membership test for filters: nonempty, closed under `⊙`, and
/// `≤_Q`-upward closed.
pub fn filter_mask(d: &DerivedTables, s: ElementSubset) -> bool {
    if s.is_empty() {
        return false;
    }
    let m = s.mask();
    s.iter().all(|x| d.leq_q_upset(x) & !m == 0 && s.iter().all(|y| s.contains(d.prod(x, y))))
}

/// Fast membership test for deductive systems.
pub fn ds_mask(d: &DerivedTables, s: ElementSubset) -> bool {
    s.contains(d.one()) && s.iter().all(|x| (0..d.n()).all(|y| !s.contains(d.imp(x, y)) || s.contains(y)))
}

/// Whether `s` is a filter: nonempty, `F1` and `F2`.
///
/// On IOM algebras the characterization by `F1` and `F3` is evaluated too
/// and a disagreement is reported as an error.
///
/// ```
/// use iomkit::{build_derived, fixtures, filters::is_filter, ElementSubset};
/// let e5 = fixtures::e5();
/// let d = build_derived(&e5).unwrap();
/// let a1: ElementSubset = [1, 4].into_iter().collect();
/// assert!(is_filter(&d, a1).unwrap().holds());
/// ```
pub fn is_filter(d: &DerivedTables, s: ElementSubset) -> Result<Verdict, FilterError> {
    let primary = verdict(d, s, &[Condition::Nonempty, Condition::F1, Condition::F2]);
    if d.is_iom() {
        let alt = verdict(d, s, &[Condition::Nonempty, Condition::F1, Condition::F3]);
        if alt.holds() != primary.holds() {
            return Err(FilterError::CharacterizationMismatch(format!(
                "F1+F2 gives {}, F1+F3 gives {} on mask {:#x}",
                primary.holds(),
                alt.holds(),
                s.mask()
            )));
        }
    }
    Ok(primary)
}

/// Whether `s` is a deductive system: `DS1` and `DS2`.
///
/// On IOM algebras the two characterizations by `F1` with `F4` or `F5` are
/// evaluated too and must agree.
pub fn is_ds(d: &DerivedTables, s: ElementSubset) -> Result<Verdict, FilterError> {
    let primary = verdict(d, s, &[Condition::Ds1, Condition::Ds2]);
    if d.is_iom() {
        for alt in
            [[Condition::Nonempty, Condition::F1, Condition::F4], [Condition::Nonempty, Condition::F1, Condition::F5]]
        {
            let v = verdict(d, s, &alt);
            if v.holds() != primary.holds() {
                return Err(FilterError::CharacterizationMismatch(format!(
                    "DS1+DS2 gives {}, {}+{} gives {} on mask {:#x}",
                    primary.holds(),
                    alt[1],
                    alt[2],
                    v.holds(),
                    s.mask()
                )));
            }
        }
    }
    Ok(primary)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Filter,
    Ds,
}

impl std::str::FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "filter" | "filters" => Ok(FamilyKind::Filter),
            "ds" => Ok(FamilyKind::Ds),
            other => Err(format!("unknown kind {other:?}; expected filter or ds")),
        }
    }
}

/// All filters or all deductive systems, sorted by size and then by mask.
pub fn enumerate_subfamilies(d: &DerivedTables, kind: FamilyKind) -> Result<Vec<ElementSubset>, FilterError> {
    let n = d.n();
    if n > MAX_ENUMERATION {
        return Err(FilterError::Capacity { n, max: MAX_ENUMERATION });
    }
    let pred = match kind {
        FamilyKind::Filter => filter_mask,
        FamilyKind::Ds => ds_mask,
    };
    let mut out: Vec<ElementSubset> =
        (1u64..1 << n).into_par_iter().map(ElementSubset::from_mask).filter(|&s| pred(d, s)).collect();
    out.sort_by_key(|s| (s.len(), s.mask()));
    Ok(out)
}

/// A generated filter together with the independent computations it was
/// compared against. `None` means the comparison did not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedFilter {
    pub filter: ElementSubset,
    pub by_formula: Option<ElementSubset>,
    pub by_intersection: Option<ElementSubset>,
}

fn closure(d: &DerivedTables, seed: ElementSubset) -> ElementSubset {
    let mut s = seed;
    loop {
        let mut next = s;
        for x in s.iter() {
            next = next.union(ElementSubset::from_mask(d.leq_q_upset(x)));
            for y in s.iter() {
                next.insert(d.prod(x, y));
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

fn up_q(d: &DerivedTables, s: ElementSubset) -> ElementSubset {
    s.iter().fold(ElementSubset::EMPTY, |acc, x| acc.union(ElementSubset::from_mask(d.leq_q_upset(x))))
}

/// Every product `y₁ ⊙ ⋯ ⊙ y_k` of generators, bracketed to the left.
fn products(d: &DerivedTables, gens: ElementSubset) -> ElementSubset {
    let mut p = gens;
    loop {
        let mut next = p;
        for x in p.iter() {
            for g in gens.iter() {
                next.insert(d.prod(x, g));
            }
        }
        if next == p {
            return p;
        }
        p = next;
    }
}

fn intersection_of_filters(d: &DerivedTables, seed: ElementSubset) -> Option<ElementSubset> {
    if d.n() > MAX_INTERSECTION_CHECK {
        return None;
    }
    let all = enumerate_subfamilies(d, FamilyKind::Filter).ok()?;
    Some(all.into_iter().filter(|f| seed.is_subset(*f)).fold(ElementSubset::full(d.n()), |acc, f| acc.intersection(f)))
}

fn finish(
    filter: ElementSubset,
    by_formula: Option<ElementSubset>,
    by_intersection: Option<ElementSubset>,
) -> Result<GeneratedFilter, FilterError> {
    for (name, other) in [("formula", by_formula), ("intersection", by_intersection)] {
        if let Some(o) = other {
            if o != filter {
                return Err(FilterError::CharacterizationMismatch(format!(
                    "closure gives {:#x}, {name} gives {:#x}",
                    filter.mask(),
                    o.mask()
                )));
            }
        }
    }
    Ok(GeneratedFilter { filter, by_formula, by_intersection })
}

/// The smallest filter containing `gens`, computed as a least fixpoint
/// under `F1` and `F2`.
///
/// On IOM algebras the result is compared with the set of elements lying
/// `≥_Q` some product of generators, and on small algebras with the
/// intersection of all filters containing `gens`.
pub fn generated_filter(d: &DerivedTables, gens: ElementSubset) -> Result<GeneratedFilter, FilterError> {
    if gens.is_empty() {
        return Err(FilterError::EmptyGenerators);
    }
    let filter = closure(d, gens);
    let by_formula = d.is_iom().then(|| up_q(d, products(d, gens)));
    finish(filter, by_formula, intersection_of_filters(d, gens))
}

/// `F(x)`, the filter generated by `F ∪ {x}`. On IOM algebras it is compared
/// with `{ y : y ≥_Q f ⊙ xⁿ }`.
pub fn extend_filter(d: &DerivedTables, base: ElementSubset, x: usize) -> Result<GeneratedFilter, FilterError> {
    if !filter_mask(d, base) {
        return Err(FilterError::NotAFilter);
    }
    let seed = base.with(x);
    let filter = closure(d, seed);
    let by_formula = d.is_iom().then(|| {
        let powers = d.power_cycle(x);
        let mut bottoms = ElementSubset::EMPTY;
        for f in base.iter() {
            for &p in &powers {
                bottoms.insert(d.prod(f, p));
            }
        }
        up_q(d, bottoms)
    });
    finish(filter, by_formula, intersection_of_filters(d, seed))
}

/// Properties of one filter. A `*_witness` field names an element or pair
/// at which the corresponding property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterClassification {
    pub is_filter: bool,
    pub is_ds: bool,
    pub ds_witness: Option<Verdict>,
    pub is_proper: bool,
    pub is_maximal: bool,
    /// Outside element `x` with `F(x) ≠ X`.
    pub maximal_witness: Option<usize>,
    /// Verdict of the `f ⊙ xⁿ = 0` characterization.
    pub maximal_by_powers: bool,
    pub is_strongly_maximal: bool,
    /// Outside element `x` with no `(xⁿ)* ∈ F`.
    pub strongly_maximal_witness: Option<usize>,
    pub is_commutative: bool,
    /// Pair `(x, y)` failing `CF`.
    pub commutative_witness: Option<Vec<usize>>,
}

/// Classifies a filter as maximal, strongly maximal and commutative.
///
/// Maximality is decided from the definition by checking that `F(x) = X`
/// for every `x ∉ F`. The `f ⊙ xⁿ = 0` characterization is evaluated as
/// well and must agree on IOM algebras. A filter is strongly maximal when
/// it is proper and every outside `x` has some `(xⁿ)* ∈ F`.
pub fn classify_filter(d: &DerivedTables, f: ElementSubset) -> Result<FilterClassification, FilterError> {
    if !filter_mask(d, f) {
        return Err(FilterError::NotAFilter);
    }
    let n = d.n();
    let full = ElementSubset::full(n);
    let outside: Vec<usize> = (0..n).filter(|&x| !f.contains(x)).collect();
    let is_proper = f != full;

    let maximal_witness = if is_proper {
        let mut w = None;
        for &x in &outside {
            if extend_filter(d, f, x)?.filter != full {
                w = Some(x);
                break;
            }
        }
        w
    } else {
        None
    };
    let is_maximal = is_proper && maximal_witness.is_none();
    let maximal_by_powers = is_proper
        && outside.iter().all(|&x| {
            let powers = d.power_cycle(x);
            f.iter().any(|g| powers.iter().any(|&p| d.prod(g, p) == d.zero()))
        });
    if d.is_iom() && maximal_by_powers != is_maximal {
        return Err(FilterError::CharacterizationMismatch(format!(
            "maximality by definition is {is_maximal}, by powers is {maximal_by_powers}"
        )));
    }

    let strongly_maximal_witness =
        outside.iter().copied().find(|&x| !d.power_cycle(x).iter().any(|&p| f.contains(d.star(p))));
    let is_strongly_maximal = is_proper && strongly_maximal_witness.is_none();

    let commutative_witness = check(d, f, Condition::Cf);
    let ds = verdict(d, f, &[Condition::Ds1, Condition::Ds2]);
    Ok(FilterClassification {
        is_filter: true,
        is_ds: ds.holds(),
        ds_witness: (!ds.holds()).then_some(ds),
        is_proper,
        is_maximal,
        maximal_witness,
        maximal_by_powers,
        is_strongly_maximal,
        strongly_maximal_witness,
        is_commutative: commutative_witness.is_none(),
        commutative_witness,
    })
}

/// Whether a deductive system satisfies `CF`. The characterization by `1 ∈ F`
/// and the three-variable condition `CF3` is checked for agreement.
pub fn is_commutative_ds(d: &DerivedTables, f: ElementSubset) -> Result<Verdict, FilterError> {
    if !ds_mask(d, f) {
        return Err(FilterError::NotADeductiveSystem);
    }
    let cf = verdict(d, f, &[Condition::Cf]);
    let alt = verdict(d, f, &[Condition::Ds1, Condition::Cf3]);
    if cf.holds() != alt.holds() {
        return Err(FilterError::CharacterizationMismatch(format!(
            "CF gives {}, DS1+CF3 gives {} on mask {:#x}",
            cf.holds(),
            alt.holds(),
            f.mask()
        )));
    }
    Ok(cf)
}

/// A map from elements to exact rationals, indexed like the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalState(pub Vec<BigRational>);

impl RationalState {
    pub fn value(&self, x: usize) -> &BigRational {
        &self.0[x]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BosbachViolation {
    OutOfRange {
        element: usize,
    },
    /// `s(0) = 0` or `s(1) = 1` fails at this element.
    Bs1 {
        element: usize,
    },
    /// `s(x) + s(x → y) ≠ s(y) + s(y → x)`.
    Bs2 {
        x: usize,
        y: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BosbachVerdict {
    /// The kernel `{x : s(x) = 1}` has been checked to be a commutative DS.
    Accepted {
        kernel: ElementSubset,
    },
    Rejected(BosbachViolation),
}

/// Checks range, `bs1` and `bs2`. The `bs2` equation is symmetric in `x` and
/// `y`, so each unordered pair is visited once as `(x, y)` with `y < x`.
pub fn verify_bosbach(d: &DerivedTables, s: &RationalState) -> Result<BosbachVerdict, FilterError> {
    let n = d.n();
    if s.len() != n {
        return Err(FilterError::StateLength { expected: n, found: s.len() });
    }
    let (zero, one) = (BigRational::zero(), BigRational::one());
    if let Some(element) = (0..n).find(|&x| *s.value(x) < zero || *s.value(x) > one) {
        return Ok(BosbachVerdict::Rejected(BosbachViolation::OutOfRange { element }));
    }
    if !s.value(d.zero()).is_zero() {
        return Ok(BosbachVerdict::Rejected(BosbachViolation::Bs1 { element: d.zero() }));
    }
    if !s.value(d.one()).is_one() {
        return Ok(BosbachVerdict::Rejected(BosbachViolation::Bs1 { element: d.one() }));
    }
    for x in 0..n {
        for y in 0..x {
            if s.value(x) + s.value(d.imp(x, y)) != s.value(y) + s.value(d.imp(y, x)) {
                return Ok(BosbachVerdict::Rejected(BosbachViolation::Bs2 { x, y }));
            }
        }
    }
    let kernel: ElementSubset = (0..n).filter(|&x| s.value(x).is_one()).collect();
    if !ds_mask(d, kernel) || !is_commutative_ds(d, kernel)?.holds() {
        return Err(FilterError::CharacterizationMismatch(format!(
            "kernel {:#x} of an accepted state is not a commutative DS",
            kernel.mask()
        )));
    }
    Ok(BosbachVerdict::Accepted { kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_derived, fixtures};
    use num_bigint::BigInt;

    fn set(xs: &[usize]) -> ElementSubset {
        xs.iter().copied().collect()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn e5_families() {
        let d = build_derived(&fixtures::e5()).unwrap();
        let filters = enumerate_subfamilies(&d, FamilyKind::Filter).unwrap();
        assert_eq!(filters, vec![set(&[4]), set(&[1, 4]), ElementSubset::full(5)]);
        let ds = enumerate_subfamilies(&d, FamilyKind::Ds).unwrap();
        assert_eq!(ds, vec![set(&[4]), ElementSubset::full(5)]);
    }

    #[test]
    fn e5_witnesses() {
        let d = build_derived(&fixtures::e5()).unwrap();
        assert_eq!(
            is_filter(&d, set(&[3, 4])).unwrap(),
            Verdict::Fails { condition: Condition::F1, witness: vec![3, 3] }
        );
        assert_eq!(is_ds(&d, set(&[1, 4])).unwrap(), Verdict::Fails { condition: Condition::Ds2, witness: vec![1, 3] });
        assert_eq!(
            is_filter(&d, ElementSubset::EMPTY).unwrap(),
            Verdict::Fails { condition: Condition::Nonempty, witness: vec![] }
        );
        assert!(is_ds(&d, set(&[4])).unwrap().holds());
    }

    #[test]
    fn e5_generated() {
        let d = build_derived(&fixtures::e5()).unwrap();
        let g = generated_filter(&d, set(&[1])).unwrap();
        assert_eq!(g.filter, set(&[1, 4]));
        assert_eq!(g.by_formula, Some(set(&[1, 4])));
        assert_eq!(generated_filter(&d, set(&[3])).unwrap().filter, ElementSubset::full(5));
        assert_eq!(generated_filter(&d, set(&[4])).unwrap().filter, set(&[4]));
        assert_eq!(generated_filter(&d, ElementSubset::EMPTY), Err(FilterError::EmptyGenerators));
    }

    #[test]
    fn e5_classification() {
        let d = build_derived(&fixtures::e5()).unwrap();
        let a1 = classify_filter(&d, set(&[1, 4])).unwrap();
        assert!(a1.is_proper && a1.is_maximal && a1.is_strongly_maximal && !a1.is_ds);
        let one = classify_filter(&d, set(&[4])).unwrap();
        assert!(!one.is_maximal);
        assert_eq!(one.maximal_witness, Some(1));
        assert!(!one.is_commutative);
        assert_eq!(one.commutative_witness, Some(vec![1, 2]));
        assert_eq!(
            is_commutative_ds(&d, set(&[4])).unwrap(),
            Verdict::Fails { condition: Condition::Cf, witness: vec![1, 2] }
        );
        assert!(is_commutative_ds(&d, ElementSubset::full(5)).unwrap().holds());
        assert_eq!(classify_filter(&d, set(&[3, 4])), Err(FilterError::NotAFilter));
    }

    #[test]
    fn b2_families_and_classification() {
        let d = build_derived(&fixtures::b2()).unwrap();
        assert_eq!(enumerate_subfamilies(&d, FamilyKind::Ds).unwrap(), vec![set(&[1]), set(&[0, 1])]);
        let c = classify_filter(&d, set(&[1])).unwrap();
        assert!(c.is_maximal && c.is_strongly_maximal && c.is_commutative);
    }

    #[test]
    fn bosbach_on_fixtures() {
        let d = build_derived(&fixtures::b2()).unwrap();
        let s = RationalState(vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(verify_bosbach(&d, &s).unwrap(), BosbachVerdict::Accepted { kernel: set(&[1]) });

        let d = build_derived(&fixtures::e5()).unwrap();
        let s = RationalState(vec![rat(0, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)]);
        assert_eq!(verify_bosbach(&d, &s).unwrap(), BosbachVerdict::Rejected(BosbachViolation::Bs2 { x: 1, y: 0 }));
        let s = RationalState(vec![rat(0, 1), rat(3, 2), rat(1, 1), rat(1, 1), rat(1, 1)]);
        assert_eq!(
            verify_bosbach(&d, &s).unwrap(),
            BosbachVerdict::Rejected(BosbachViolation::OutOfRange { element: 1 })
        );
        let s = RationalState(vec![rat(0, 1)]);
        assert_eq!(verify_bosbach(&d, &s), Err(FilterError::StateLength { expected: 5, found: 1 }));
    }

    #[test]
    fn trivial_algebra() {
        let d = build_derived(&fixtures::trivial()).unwrap();
        assert_eq!(enumerate_subfamilies(&d, FamilyKind::Filter).unwrap(), vec![set(&[0])]);
        let c = classify_filter(&d, set(&[0])).unwrap();
        assert!(!c.is_proper && !c.is_maximal && !c.is_strongly_maximal);
    }
}
