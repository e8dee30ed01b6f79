//! Membership of a finite algebra in the axiom classes: BE, bounded,
//! involutive, IOM, QW and relatives, and the orthomodular (m-BE) axioms on
//! the product-form translation.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{build_derived, DerivedTables, FiniteAlgebra};
use crate::error::{AlgebraError, ClassifyError};
use crate::exhaust::first_failure;

/// Every axiom the classifier knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Be1,
    Be2,
    Be3,
    Be4,
    Bounded,
    Involutive,
    Iom,
    IomPrime,
    Qw,
    Qw1,
    Qw2,
    Iom2,
    Iom2Prime,
    Prel,
    Pu,
    Pcomm,
    Pass,
    ML,
    MRe,
    Pom,
}

impl AxiomId {
    pub const ALL: [AxiomId; 20] = [
        AxiomId::Be1,
        AxiomId::Be2,
        AxiomId::Be3,
        AxiomId::Be4,
        AxiomId::Bounded,
        AxiomId::Involutive,
        AxiomId::Iom,
        AxiomId::IomPrime,
        AxiomId::Qw,
        AxiomId::Qw1,
        AxiomId::Qw2,
        AxiomId::Iom2,
        AxiomId::Iom2Prime,
        AxiomId::Prel,
        AxiomId::Pu,
        AxiomId::Pcomm,
        AxiomId::Pass,
        AxiomId::ML,
        AxiomId::MRe,
        AxiomId::Pom,
    ];

    /// Axioms of the product-form signature `(⊙, *, 1)`.
    pub const PRODUCT_FORM: [AxiomId; 6] =
        [AxiomId::Pu, AxiomId::Pcomm, AxiomId::Pass, AxiomId::ML, AxiomId::MRe, AxiomId::Pom];

    pub fn label(self) -> &'static str {
        match self {
            AxiomId::Be1 => "BE1",
            AxiomId::Be2 => "BE2",
            AxiomId::Be3 => "BE3",
            AxiomId::Be4 => "BE4",
            AxiomId::Bounded => "bounded",
            AxiomId::Involutive => "involutive",
            AxiomId::Iom => "IOM",
            AxiomId::IomPrime => "IOM'",
            AxiomId::Qw => "QW",
            AxiomId::Qw1 => "QW1",
            AxiomId::Qw2 => "QW2",
            AxiomId::Iom2 => "IOM2",
            AxiomId::Iom2Prime => "IOM2'",
            AxiomId::Prel => "Prel",
            AxiomId::Pu => "PU",
            AxiomId::Pcomm => "Pcomm",
            AxiomId::Pass => "Pass",
            AxiomId::ML => "m-L",
            AxiomId::MRe => "m-Re",
            AxiomId::Pom => "Pom",
        }
    }

    /// Lower-case identifier accepted by [`FromStr`].
    pub fn key(self) -> &'static str {
        match self {
            AxiomId::Be1 => "be1",
            AxiomId::Be2 => "be2",
            AxiomId::Be3 => "be3",
            AxiomId::Be4 => "be4",
            AxiomId::Bounded => "bounded",
            AxiomId::Involutive => "involutive",
            AxiomId::Iom => "iom",
            AxiomId::IomPrime => "iom-prime",
            AxiomId::Qw => "qw",
            AxiomId::Qw1 => "qw1",
            AxiomId::Qw2 => "qw2",
            AxiomId::Iom2 => "iom2",
            AxiomId::Iom2Prime => "iom2-prime",
            AxiomId::Prel => "prel",
            AxiomId::Pu => "pu",
            AxiomId::Pcomm => "pcomm",
            AxiomId::Pass => "pass",
            AxiomId::ML => "m-l",
            AxiomId::MRe => "m-re",
            AxiomId::Pom => "pom",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            AxiomId::Be1 => "x → x = 1",
            AxiomId::Be2 => "x → 1 = 1",
            AxiomId::Be3 => "1 → x = x",
            AxiomId::Be4 => "x → (y → z) = y → (x → z)",
            AxiomId::Bounded => "0 → x = 1",
            AxiomId::Involutive => "x** = x",
            AxiomId::Iom => "x ⊓ (y → x) = x",
            AxiomId::IomPrime => "x ⊓ (x* → y) = x",
            AxiomId::Qw => "x → ((x ⊓ y) ⊓ (z ⊓ x)) = (x → y) ⊓ (x → z)",
            AxiomId::Qw1 => "x → (x ⊓ y) = x → y",
            AxiomId::Qw2 => "x → (y ⊓ (z ⊓ x)) = (x → y) ⊓ (x → z)",
            AxiomId::Iom2 => "(x ⊓ y) → (y ⊓ x) = 1",
            AxiomId::Iom2Prime => "(x ⊔ y) → (y ⊔ x) = 1",
            AxiomId::Prel => "(x → y) ⊔ (y → x) = 1",
            AxiomId::Pu => "1 ⊙ x = x = x ⊙ 1",
            AxiomId::Pcomm => "x ⊙ y = y ⊙ x",
            AxiomId::Pass => "x ⊙ (y ⊙ z) = (x ⊙ y) ⊙ z",
            AxiomId::ML => "x ⊙ 0 = 0",
            AxiomId::MRe => "x ⊙ x* = 0",
            AxiomId::Pom => "(x ⊙ y) ⊕ ((x ⊙ y)* ⊙ x) = x",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            AxiomId::Be1
            | AxiomId::Be2
            | AxiomId::Be3
            | AxiomId::Bounded
            | AxiomId::Involutive
            | AxiomId::Pu
            | AxiomId::ML
            | AxiomId::MRe => 1,
            AxiomId::Be4 | AxiomId::Qw | AxiomId::Qw2 | AxiomId::Pass => 3,
            _ => 2,
        }
    }

    fn tier(self) -> Tier {
        match self {
            AxiomId::Be1 | AxiomId::Be2 | AxiomId::Be3 | AxiomId::Be4 => Tier::Structural,
            AxiomId::Bounded | AxiomId::Involutive => Tier::Zero,
            AxiomId::Pu | AxiomId::Pcomm | AxiomId::Pass | AxiomId::ML | AxiomId::MRe | AxiomId::Pom => {
                Tier::ProductForm
            }
            _ => Tier::Derived,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AxiomId {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| a.key() == lower || a.label().to_ascii_lowercase() == lower)
            .ok_or_else(|| ClassifyError::UnknownAxiom(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tier {
    Structural,
    Zero,
    Derived,
    ProductForm,
}

/// Verdict of one exhaustive axiom check. `witness` is the first failing
/// tuple `(x, y, z)` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomResult {
    fn from_failure(axiom: AxiomId, failure: Option<Vec<usize>>) -> Self {
        AxiomResult { axiom, holds: failure.is_none(), witness: failure }
    }
}

/// Evaluates both sides of a structural axiom.
fn structural_sides(alg: &FiniteAlgebra, axiom: AxiomId, t: &[usize]) -> (usize, usize) {
    let one = alg.one();
    let x = t[0];
    match axiom {
        AxiomId::Be1 => (alg.imp(x, x), one),
        AxiomId::Be2 => (alg.imp(x, one), one),
        AxiomId::Be3 => (alg.imp(one, x), x),
        AxiomId::Be4 => {
            let (y, z) = (t[1], t[2]);
            (alg.imp(x, alg.imp(y, z)), alg.imp(y, alg.imp(x, z)))
        }
        AxiomId::Bounded => (alg.imp(alg.zero().expect("bounded needs zero"), x), one),
        AxiomId::Involutive => {
            let zero = alg.zero().expect("involutive needs zero");
            (alg.imp(alg.imp(x, zero), zero), x)
        }
        _ => unreachable!("not a structural axiom"),
    }
}

/// Evaluates both sides of an axiom stated with derived operations.
pub(crate) fn derived_sides(d: &DerivedTables, axiom: AxiomId, t: &[usize]) -> (usize, usize) {
    let one = d.one();
    let x = t[0];
    let y = t.get(1).copied().unwrap_or(0);
    let z = t.get(2).copied().unwrap_or(0);
    match axiom {
        AxiomId::Iom => (d.meet(x, d.imp(y, x)), x),
        AxiomId::IomPrime => (d.meet(x, d.imp(d.star(x), y)), x),
        AxiomId::Qw => (d.imp(x, d.meet(d.meet(x, y), d.meet(z, x))), d.meet(d.imp(x, y), d.imp(x, z))),
        AxiomId::Qw1 => (d.imp(x, d.meet(x, y)), d.imp(x, y)),
        AxiomId::Qw2 => (d.imp(x, d.meet(y, d.meet(z, x))), d.meet(d.imp(x, y), d.imp(x, z))),
        AxiomId::Iom2 => (d.imp(d.meet(x, y), d.meet(y, x)), one),
        AxiomId::Iom2Prime => (d.imp(d.join(x, y), d.join(y, x)), one),
        AxiomId::Prel => (d.join(d.imp(x, y), d.imp(y, x)), one),
        _ => unreachable!("not a derived-operation axiom"),
    }
}

/// Checks one axiom exhaustively.
pub fn check_axiom(alg: &FiniteAlgebra, axiom: AxiomId) -> Result<AxiomResult, ClassifyError> {
    let n = alg.n();
    let unavailable = |source| ClassifyError::DerivedUnavailable { axiom: axiom.label(), source };
    match axiom.tier() {
        Tier::Structural => Ok(AxiomResult::from_failure(
            axiom,
            first_failure(n, axiom.arity(), |t| {
                let (l, r) = structural_sides(alg, axiom, t);
                l == r
            }),
        )),
        Tier::Zero => {
            if alg.zero().is_none() {
                return Err(unavailable(AlgebraError::NoZero));
            }
            Ok(AxiomResult::from_failure(
                axiom,
                first_failure(n, 1, |t| {
                    let (l, r) = structural_sides(alg, axiom, t);
                    l == r
                }),
            ))
        }
        Tier::Derived => {
            let d = build_derived(alg).map_err(unavailable)?;
            Ok(check_derived(&d, axiom))
        }
        Tier::ProductForm => {
            let pf = to_product_form(alg).map_err(unavailable)?;
            Ok(pf.check(axiom))
        }
    }
}

/// Checks an axiom stated with derived operations against prebuilt tables.
pub fn check_derived(d: &DerivedTables, axiom: AxiomId) -> AxiomResult {
    assert!(axiom.tier() == Tier::Derived, "{axiom} is not a derived-operation axiom");
    AxiomResult::from_failure(
        axiom,
        first_failure(d.n(), axiom.arity(), |t| {
            let (l, r) = derived_sides(d, axiom, t);
            l == r
        }),
    )
}

/// Both sides of `axiom` at `tuple`, for reports. `None` when the axiom is
/// not evaluable on `alg`.
pub fn sides(alg: &FiniteAlgebra, axiom: AxiomId, tuple: &[usize]) -> Option<(usize, usize)> {
    if tuple.len() != axiom.arity() || tuple.iter().any(|&v| v >= alg.n()) {
        return None;
    }
    match axiom.tier() {
        Tier::Structural => Some(structural_sides(alg, axiom, tuple)),
        Tier::Zero => alg.zero().map(|_| structural_sides(alg, axiom, tuple)),
        Tier::Derived => build_derived(alg).ok().map(|d| derived_sides(&d, axiom, tuple)),
        Tier::ProductForm => to_product_form(alg).ok().map(|pf| pf.sides(axiom, tuple)),
    }
}

/// The algebra in the signature `(⊙, *, 1)` with `x ⊙ y = (x → y*)*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductForm {
    n: usize,
    one: usize,
    prod: Vec<u8>,
    star: Vec<u8>,
}

/// Translates an involutive algebra into product form.
pub fn to_product_form(alg: &FiniteAlgebra) -> Result<ProductForm, AlgebraError> {
    let d = build_derived(alg)?;
    Ok(ProductForm::from_derived(&d))
}

impl ProductForm {
    pub fn from_derived(d: &DerivedTables) -> Self {
        ProductForm {
            n: d.n(),
            one: d.one(),
            prod: d.prod_table().to_vec(),
            star: d.star_table().into_iter().map(|v| v as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// `0 := 1*`.
    pub fn zero(&self) -> usize {
        self.star(self.one)
    }

    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.prod[x * self.n + y] as usize
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x] as usize
    }

    /// `x ⊕ y = (x* ⊙ y*)*`.
    pub fn sum(&self, x: usize, y: usize) -> usize {
        self.star(self.prod(self.star(x), self.star(y)))
    }

    /// Recovers `→` through `x → y = (x ⊙ y*)*`, row-major.
    pub fn to_arrow(&self) -> Vec<u8> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                out.push(self.star(self.prod(x, self.star(y))) as u8);
            }
        }
        out
    }

    fn sides(&self, axiom: AxiomId, t: &[usize]) -> (usize, usize) {
        let x = t[0];
        let y = t.get(1).copied().unwrap_or(0);
        let z = t.get(2).copied().unwrap_or(0);
        let zero = self.zero();
        match axiom {
            AxiomId::Pu => {
                let left = self.prod(self.one, x);
                if left != x {
                    (left, x)
                } else {
                    (self.prod(x, self.one), x)
                }
            }
            AxiomId::Pcomm => (self.prod(x, y), self.prod(y, x)),
            AxiomId::Pass => (self.prod(x, self.prod(y, z)), self.prod(self.prod(x, y), z)),
            AxiomId::ML => (self.prod(x, zero), zero),
            AxiomId::MRe => (self.prod(x, self.star(x)), zero),
            AxiomId::Pom => {
                let p = self.prod(x, y);
                (self.sum(p, self.prod(self.star(p), x)), x)
            }
            _ => unreachable!("not a product-form axiom"),
        }
    }

    fn check(&self, axiom: AxiomId) -> AxiomResult {
        AxiomResult::from_failure(
            axiom,
            first_failure(self.n, axiom.arity(), |t| {
                let (l, r) = self.sides(axiom, t);
                l == r
            }),
        )
    }
}

/// Evaluates the six m-BE/orthomodular axioms on a product-form view.
pub fn check_om(pf: &ProductForm) -> Vec<AxiomResult> {
    AxiomId::PRODUCT_FORM.iter().map(|&a| pf.check(a)).collect()
}

/// Outcome of one entry of a [`ClassificationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails(Vec<usize>),
    NotEvaluated(String),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Outcome::Fails(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub axiom: AxiomId,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassLabels {
    pub is_be: bool,
    pub is_bounded_be: bool,
    pub is_involutive_be: bool,
    pub is_iom: bool,
    pub is_qw: bool,
    pub is_om: bool,
}

/// One equivalence or implication between axiom verdicts that must hold on
/// every involutive BE algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub entries: Vec<ReportEntry>,
    pub labels: ClassLabels,
}

impl ClassificationReport {
    pub fn outcome(&self, axiom: AxiomId) -> &Outcome {
        &self.entries.iter().find(|e| e.axiom == axiom).expect("every axiom has an entry").outcome
    }

    pub fn holds(&self, axiom: AxiomId) -> bool {
        self.outcome(axiom).holds()
    }

    /// The relationships between classes that the theory guarantees. Empty
    /// unless the algebra is an involutive BE algebra.
    pub fn cross_checks(&self) -> Vec<CrossCheck> {
        if !self.labels.is_involutive_be {
            return Vec::new();
        }
        let h = |a| self.holds(a);
        let om = AxiomId::PRODUCT_FORM.iter().all(|&a| h(a));
        vec![
            CrossCheck { name: "QW ⇔ QW1 ∧ QW2", holds: h(AxiomId::Qw) == (h(AxiomId::Qw1) && h(AxiomId::Qw2)) },
            CrossCheck { name: "IOM ⇔ IOM'", holds: h(AxiomId::Iom) == h(AxiomId::IomPrime) },
            CrossCheck { name: "IOM ⇔ QW2", holds: h(AxiomId::Iom) == h(AxiomId::Qw2) },
            CrossCheck { name: "IOM ∧ IOM2 ⇔ QW", holds: (h(AxiomId::Iom) && h(AxiomId::Iom2)) == h(AxiomId::Qw) },
            CrossCheck { name: "IOM2 ⇔ IOM2'", holds: h(AxiomId::Iom2) == h(AxiomId::Iom2Prime) },
            CrossCheck { name: "QW ⇒ IOM", holds: !h(AxiomId::Qw) || h(AxiomId::Iom) },
            CrossCheck { name: "QW ⇒ Prel", holds: !h(AxiomId::Qw) || h(AxiomId::Prel) },
            CrossCheck { name: "IOM ⇔ Pom", holds: h(AxiomId::Iom) == h(AxiomId::Pom) },
            CrossCheck { name: "IOM ⇔ OM", holds: h(AxiomId::Iom) == om },
        ]
    }

    /// Names of failed cross-checks.
    pub fn violations(&self) -> Vec<&'static str> {
        self.cross_checks().into_iter().filter(|c| !c.holds).map(|c| c.name).collect()
    }
}

fn outcome_of(r: AxiomResult) -> Outcome {
    match r.witness {
        None => Outcome::Holds,
        Some(w) => Outcome::Fails(w),
    }
}

/// Runs every applicable axiom check and derives the class labels.
///
/// Structural axioms come first. Axioms on derived operations are only
/// evaluated when a zero is designated and `x** = x` holds; otherwise they are
/// reported as not evaluated.
pub fn classify(alg: &FiniteAlgebra) -> ClassificationReport {
    let mut entries = Vec::with_capacity(AxiomId::ALL.len());
    for a in [AxiomId::Be1, AxiomId::Be2, AxiomId::Be3, AxiomId::Be4] {
        let r = check_axiom(alg, a).expect("structural axioms always evaluate");
        entries.push(ReportEntry { axiom: a, outcome: outcome_of(r) });
    }
    let is_be = entries.iter().all(|e| e.outcome.holds());

    let derived = match alg.zero() {
        None => {
            for a in [AxiomId::Bounded, AxiomId::Involutive] {
                entries.push(ReportEntry { axiom: a, outcome: Outcome::NotEvaluated("no designated zero".into()) });
            }
            Err("no designated zero".to_string())
        }
        Some(_) => {
            for a in [AxiomId::Bounded, AxiomId::Involutive] {
                let r = check_axiom(alg, a).expect("zero is present");
                entries.push(ReportEntry { axiom: a, outcome: outcome_of(r) });
            }
            build_derived(alg).map_err(|e| e.to_string())
        }
    };
    let bounded = entries.iter().any(|e| e.axiom == AxiomId::Bounded && e.outcome.holds());
    let involutive = entries.iter().any(|e| e.axiom == AxiomId::Involutive && e.outcome.holds());

    match &derived {
        Ok(d) => {
            for a in AxiomId::ALL.into_iter().filter(|a| a.tier() == Tier::Derived) {
                entries.push(ReportEntry { axiom: a, outcome: outcome_of(check_derived(d, a)) });
            }
            let pf = ProductForm::from_derived(d);
            for r in check_om(&pf) {
                entries.push(ReportEntry { axiom: r.axiom, outcome: outcome_of(r) });
            }
        }
        Err(reason) => {
            for a in AxiomId::ALL.into_iter().filter(|a| matches!(a.tier(), Tier::Derived | Tier::ProductForm)) {
                entries.push(ReportEntry { axiom: a, outcome: Outcome::NotEvaluated(reason.clone()) });
            }
        }
    }
    entries.sort_by_key(|e| AxiomId::ALL.iter().position(|&a| a == e.axiom));

    let holds = |a: AxiomId| entries.iter().any(|e| e.axiom == a && e.outcome.holds());
    let is_bounded_be = is_be && bounded;
    let is_involutive_be = is_bounded_be && involutive;
    let labels = ClassLabels {
        is_be,
        is_bounded_be,
        is_involutive_be,
        is_iom: is_involutive_be && holds(AxiomId::Iom),
        is_qw: is_involutive_be && holds(AxiomId::Qw),
        is_om: is_involutive_be && AxiomId::PRODUCT_FORM.iter().all(|&a| holds(a)),
    };
    ClassificationReport { entries, labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{b2, boolean4, e5, trivial};

    #[test]
    fn e5_is_iom_not_qw() {
        let e5 = e5();
        assert!(check_axiom(&e5, AxiomId::Iom).unwrap().holds);
        let qw1 = check_axiom(&e5, AxiomId::Qw1).unwrap();
        assert_eq!(qw1.witness, Some(vec![2, 1]));
        assert_eq!(sides(&e5, AxiomId::Qw1, &[2, 1]), Some((1, 4)));
        assert!(check_axiom(&e5, AxiomId::Prel).unwrap().holds);
        assert!(!check_axiom(&e5, AxiomId::Qw).unwrap().holds);
    }

    #[test]
    fn b2_is_qw() {
        assert!(check_axiom(&b2(), AxiomId::Qw).unwrap().holds);
    }

    #[test]
    fn product_form_of_e5() {
        let pf = to_product_form(&e5()).unwrap();
        assert_eq!(pf.prod(1, 1), 1);
        assert_eq!(pf.prod(3, 3), 0);
        for x in 0..5 {
            assert_eq!(pf.prod(4, x), x);
        }
        assert_eq!(pf.to_arrow(), e5().table());
        assert!(check_om(&pf).iter().all(|r| r.holds));
    }

    #[test]
    fn b2_product_form_is_conjunction() {
        let pf = to_product_form(&b2()).unwrap();
        assert_eq!((pf.prod(0, 0), pf.prod(0, 1), pf.prod(1, 0), pf.prod(1, 1)), (0, 0, 0, 1));
        assert!(check_om(&pf).iter().all(|r| r.holds));
    }

    #[test]
    fn classify_e5() {
        let r = classify(&e5());
        assert!(r.labels.is_involutive_be);
        assert!(r.labels.is_iom);
        assert!(!r.labels.is_qw);
        assert!(r.labels.is_om);
        assert!(r.violations().is_empty());
    }

    #[test]
    fn classify_booleans() {
        for alg in [b2(), boolean4(), trivial()] {
            let r = classify(&alg);
            let l = r.labels;
            assert!(l.is_be && l.is_bounded_be && l.is_involutive_be && l.is_iom && l.is_qw && l.is_om);
            assert!(r.entries.iter().all(|e| e.outcome.holds()));
        }
    }

    #[test]
    fn classify_stops_at_involution() {
        let mut rows = e5().rows();
        rows[3][0] = 1;
        let alg = FiniteAlgebra::new(e5().names().to_vec(), rows, 4, Some(0)).unwrap();
        let r = classify(&alg);
        assert_eq!(r.outcome(AxiomId::Involutive), &Outcome::Fails(vec![3]));
        assert!(!r.labels.is_involutive_be);
        assert!(matches!(r.outcome(AxiomId::Iom), Outcome::NotEvaluated(_)));
        assert!(matches!(r.outcome(AxiomId::Pom), Outcome::NotEvaluated(_)));
        assert!(r.cross_checks().is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!("nope".parse::<AxiomId>(), Err(ClassifyError::UnknownAxiom(_))));
        assert_eq!("QW1".parse::<AxiomId>().unwrap(), AxiomId::Qw1);
        assert_eq!("iom2-prime".parse::<AxiomId>().unwrap(), AxiomId::Iom2Prime);
        let no_zero = FiniteAlgebra::new(vec!["0".into(), "1".into()], vec![vec![1, 1], vec![0, 1]], 1, None).unwrap();
        assert!(matches!(check_axiom(&no_zero, AxiomId::Iom), Err(ClassifyError::DerivedUnavailable { .. })));
        let r = classify(&no_zero);
        assert!(r.labels.is_be && !r.labels.is_bounded_be);
    }

    #[test]
    fn witnesses_reevaluate_to_failures() {
        let mut rows = e5().rows();
        rows[1][3] = 2; // perturb a → c
        let alg = FiniteAlgebra::new(e5().names().to_vec(), rows, 4, Some(0)).unwrap();
        let r = classify(&alg);
        for e in &r.entries {
            if let Outcome::Fails(w) = &e.outcome {
                let (l, rr) = sides(&alg, e.axiom, w).unwrap();
                assert_ne!(l, rr, "{} witness {w:?}", e.axiom);
            }
        }
    }
}
