//! The relation `≡_F` induced by a deductive system, congruences, and
//! quotient algebras.

use crate::algebra::{build_derived, DerivedTables, FiniteAlgebra};
use crate::error::CongruenceError;
use crate::exhaust::first_failure;
use crate::filters::{ds_mask, enumerate_subfamilies, is_commutative_ds, FamilyKind};
use crate::subset::ElementSubset;

/// `x ≡_F y` straight from the definition: some `f` has `x, y ≤_Q f` and
/// `f → x, f → y ∈ F`. No requirement is placed on `F`.
pub fn related_raw(d: &DerivedTables, f: ElementSubset, x: usize, y: usize) -> bool {
    (0..d.n()).any(|g| d.leq_q(x, g) && d.leq_q(y, g) && f.contains(d.imp(g, x)) && f.contains(d.imp(g, y)))
}

/// Some `f₁, f₂ ∈ F` with `x ≤_Q f₁`, `y ≤_Q f₂` and `f₁ → x = f₂ → y`.
fn related_by_targets(d: &DerivedTables, f: ElementSubset, x: usize, y: usize) -> bool {
    f.iter().any(|f1| d.leq_q(x, f1) && f.iter().any(|f2| d.leq_q(y, f2) && d.imp(f1, x) == d.imp(f2, y)))
}

/// Some `f₁, f₂ ∈ F` with `x ≤_Q f₂ → y` and `y ≤_Q f₁ → x`.
fn related_by_bounds(d: &DerivedTables, f: ElementSubset, x: usize, y: usize) -> bool {
    f.iter().any(|f2| d.leq_q(x, d.imp(f2, y))) && f.iter().any(|f1| d.leq_q(y, d.imp(f1, x)))
}

/// `x ≡_F y` for a deductive system `F`. On IOM algebras the two
/// characterizations through pairs of elements of `F` are evaluated as well
/// and must agree with the definition.
pub fn related(d: &DerivedTables, f: ElementSubset, x: usize, y: usize) -> Result<bool, CongruenceError> {
    if !ds_mask(d, f) {
        return Err(CongruenceError::NotADeductiveSystem);
    }
    related_checked(d, f, x, y)
}

fn related_checked(d: &DerivedTables, f: ElementSubset, x: usize, y: usize) -> Result<bool, CongruenceError> {
    let a = related_raw(d, f, x, y);
    if d.is_iom() && (related_by_targets(d, f, x, y) != a || related_by_bounds(d, f, x, y) != a) {
        return Err(CongruenceError::CharacterizationMismatch { x, y });
    }
    Ok(a)
}

/// A partition of the universe. Classes are numbered in order of their
/// least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    count: usize,
}

impl Partition {
    /// Renumbers arbitrary class labels densely by first appearance.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for &l in labels {
            let c = match seen.iter().find(|(k, _)| *k == l) {
                Some(&(_, c)) => c,
                None => {
                    seen.push((l, seen.len()));
                    seen.len() - 1
                }
            };
            class_of.push(c);
        }
        Partition { class_of, count: seen.len() }
    }

    /// Builds a partition from blocks. Fails unless the blocks cover
    /// `0..n` exactly once.
    pub fn from_blocks(n: usize, blocks: &[ElementSubset]) -> Result<Self, CongruenceError> {
        let mut labels = vec![usize::MAX; n];
        let mut covered = 0;
        for (i, b) in blocks.iter().enumerate() {
            for x in b.iter() {
                if x >= n || labels[x] != usize::MAX {
                    return Err(CongruenceError::PartitionSize { expected: n, found: covered + b.len() });
                }
                labels[x] = i;
            }
            covered += b.len();
        }
        if covered != n {
            return Err(CongruenceError::PartitionSize { expected: n, found: covered });
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn identity(n: usize) -> Self {
        Partition { class_of: (0..n).collect(), count: n }
    }

    pub fn single(n: usize) -> Self {
        Partition { class_of: vec![0; n], count: n.min(1) }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.count
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn blocks(&self) -> Vec<ElementSubset> {
        let mut out = vec![ElementSubset::EMPTY; self.count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].insert(x);
        }
        out
    }

    /// Least element of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks().iter().map(|b| b.iter().next().expect("classes are nonempty")).collect()
    }
}

type Op = fn(&DerivedTables, usize, usize) -> usize;

const BINARY_OPS: [(&str, Op); 4] = [
    ("compatibility with ⊙", |d, x, y| d.prod(x, y)),
    ("compatibility with →", |d, x, y| d.imp(x, y)),
    ("compatibility with ⊔", |d, x, y| d.join(x, y)),
    ("compatibility with ⊓", |d, x, y| d.meet(x, y)),
];

/// The partition induced by `≡_F`.
///
/// Before returning, the relation is checked to be reflexive, symmetric and
/// transitive and to be compatible with `*`, `⊙`, `→`, `⊔` and `⊓`. The
/// first failed property is returned as [`CongruenceError::Violation`].
pub fn congruence_from_ds(d: &DerivedTables, f: ElementSubset) -> Result<Partition, CongruenceError> {
    if !ds_mask(d, f) {
        return Err(CongruenceError::NotADeductiveSystem);
    }
    let n = d.n();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            rel[x * n + y] = related_checked(d, f, x, y)?;
        }
    }
    check_relation(d, &rel)?;
    let labels: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| rel[x * n + y]).expect("reflexive")).collect();
    Ok(Partition::from_labels(&labels))
}

/// Runs the equivalence and compatibility checks on a relation matrix.
pub fn check_relation(d: &DerivedTables, rel: &[bool]) -> Result<(), CongruenceError> {
    let n = d.n();
    let r = |x: usize, y: usize| rel[x * n + y];
    let violation = |property, witness| Err(CongruenceError::Violation { property, witness });
    if let Some(w) = first_failure(n, 1, |t| r(t[0], t[0])) {
        return violation("reflexivity", w);
    }
    if let Some(w) = first_failure(n, 2, |t| !r(t[0], t[1]) || r(t[1], t[0])) {
        return violation("symmetry", w);
    }
    if let Some(w) = first_failure(n, 3, |t| !(r(t[0], t[1]) && r(t[1], t[2])) || r(t[0], t[2])) {
        return violation("transitivity", w);
    }
    if let Some(w) = first_failure(n, 2, |t| !r(t[0], t[1]) || r(d.star(t[0]), d.star(t[1]))) {
        return violation("compatibility with *", w);
    }
    for (property, op) in BINARY_OPS {
        let w = first_failure(n, 4, |t| {
            let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
            !(r(x, y) && r(u, v)) || r(op(d, x, u), op(d, y, v))
        });
        if let Some(w) = w {
            return violation(property, w);
        }
    }
    Ok(())
}

/// `None` when `p` is compatible with `→`, otherwise the first `(x, y, u, v)`
/// with `x ≡ y`, `u ≡ v` and `x → u ≢ y → v`.
pub fn congruence_witness(d: &DerivedTables, p: &Partition) -> Result<Option<Vec<usize>>, CongruenceError> {
    let n = d.n();
    if p.len() != n {
        return Err(CongruenceError::PartitionSize { expected: n, found: p.len() });
    }
    Ok(first_failure(n, 4, |t| {
        let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
        !(p.same(x, y) && p.same(u, v)) || p.same(d.imp(x, u), d.imp(y, v))
    }))
}

pub fn is_congruence(d: &DerivedTables, p: &Partition) -> Result<bool, CongruenceError> {
    Ok(congruence_witness(d, p)?.is_none())
}

/// The class of `1` of a congruence, checked to be a deductive system.
pub fn ds_from_congruence(d: &DerivedTables, p: &Partition) -> Result<ElementSubset, CongruenceError> {
    if !is_congruence(d, p)? {
        return Err(CongruenceError::NotACongruence);
    }
    let f: ElementSubset = (0..d.n()).filter(|&x| p.same(x, d.one())).collect();
    if !ds_mask(d, f) {
        return Err(CongruenceError::ClassOfOneNotDs);
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub algebra: FiniteAlgebra,
    pub partition: Partition,
    /// Class index of every source element.
    pub projection: Vec<usize>,
    pub class_of_one: usize,
    pub class_of_zero: usize,
    /// Whether the source algebra is IOM. Quotients of other algebras are
    /// built when the operation happens to be well defined, without any of
    /// the guarantees that hold for IOM algebras.
    pub supported: bool,
    pub quotient_is_iom: bool,
}

/// `X/F`. Each class is represented by its least element and named by its
/// members, as in `{a,1}`. Independence from the choice of representatives
/// is verified on every pair.
pub fn quotient(alg: &FiniteAlgebra, f: ElementSubset) -> Result<QuotientResult, CongruenceError> {
    let d = build_derived(alg)?;
    let partition = congruence_from_ds(&d, f)?;
    let k = partition.class_count();
    let reps = partition.representatives();
    let mut rows = vec![vec![0; k]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = partition.class_of(d.imp(reps[i], reps[j]));
        }
    }
    let n = d.n();
    if let Some(w) = first_failure(n, 2, |t| {
        partition.class_of(d.imp(t[0], t[1])) == rows[partition.class_of(t[0])][partition.class_of(t[1])]
    }) {
        return Err(CongruenceError::Violation { property: "well-definedness", witness: w });
    }
    let names = partition
        .blocks()
        .iter()
        .map(|b| {
            let members: Vec<&str> = b.iter().map(|x| alg.name(x)).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let class_of_one = partition.class_of(d.one());
    let class_of_zero = partition.class_of(d.zero());
    let algebra = FiniteAlgebra::new(names, rows, class_of_one, Some(class_of_zero))?;
    let quotient_is_iom = build_derived(&algebra).map(|q| q.is_iom()).unwrap_or(false);
    Ok(QuotientResult {
        projection: (0..n).map(|x| partition.class_of(x)).collect(),
        algebra,
        partition,
        class_of_one,
        class_of_zero,
        supported: d.is_iom(),
        quotient_is_iom,
    })
}

/// Returns `(F is commutative, every DS of X/F is commutative)` and fails
/// with [`CongruenceError::TransferMismatch`] if they differ.
pub fn check_commutativity_transfer(alg: &FiniteAlgebra, f: ElementSubset) -> Result<(bool, bool), CongruenceError> {
    let d = build_derived(alg)?;
    let base = is_commutative_ds(&d, f)?.holds();
    let q = quotient(alg, f)?;
    let qd = build_derived(&q.algebra)?;
    let mut all = true;
    for g in enumerate_subfamilies(&qd, FamilyKind::Ds)? {
        if !is_commutative_ds(&qd, g)?.holds() {
            all = false;
            break;
        }
    }
    if base != all {
        return Err(CongruenceError::TransferMismatch { base, quotient: all });
    }
    Ok((base, all))
}
