//! Finite algebras `(X, →, 1)` given by an operation table, and the tables of
//! every operation derived from `→` once a zero is designated.
//!
//! Elements are dense indices `0..n` in declaration order. Names are carried
//! for reporting only; every computation works on indices.

use std::collections::HashSet;

use crate::error::AlgebraError;

/// Largest supported universe. Subsets of the universe fit in one `u64`.
pub const MAX_ELEMENTS: usize = 64;

/// Unvalidated input for [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlgebra {
    pub names: Vec<String>,
    pub rows: Vec<Vec<usize>>,
    pub one: Option<usize>,
    pub zero: Option<usize>,
}

/// A validated algebra with one binary operation `→`, a designated one and an
/// optional designated zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    arrow: Vec<u8>,
    one: usize,
    zero: Option<usize>,
}

/// Checks the structural invariants of `raw` and freezes it.
///
/// No axioms are checked here; that is the job of [`crate::classify`].
pub fn validate(raw: RawAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    let n = raw.names.len();
    if n == 0 {
        return Err(AlgebraError::Empty);
    }
    if n > MAX_ELEMENTS {
        return Err(AlgebraError::TooLarge { n, max: MAX_ELEMENTS });
    }
    let mut seen = HashSet::with_capacity(n);
    for name in &raw.names {
        if !is_valid_name(name) {
            return Err(AlgebraError::InvalidName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(AlgebraError::DuplicateName(name.clone()));
        }
    }
    if raw.rows.len() != n {
        return Err(AlgebraError::Ragged { row: raw.rows.len(), expected: n, found: raw.rows.len() });
    }
    let mut arrow = Vec::with_capacity(n * n);
    for (i, row) in raw.rows.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::Ragged { row: i, expected: n, found: row.len() });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(AlgebraError::OutOfRange { row: i, col: j, value: v, n });
            }
            arrow.push(v as u8);
        }
    }
    let one = raw.one.ok_or(AlgebraError::MissingOne)?;
    if one >= n {
        return Err(AlgebraError::ConstantOutOfRange { constant: "one", value: one, n });
    }
    if let Some(zero) = raw.zero {
        if zero >= n {
            return Err(AlgebraError::ConstantOutOfRange { constant: "zero", value: zero, n });
        }
        if zero == one && n > 1 {
            return Err(AlgebraError::OneEqualsZero);
        }
    }
    Ok(FiniteAlgebra { names: raw.names, arrow, one, zero: raw.zero })
}

/// Element names are non-empty tokens without whitespace. `#` is reserved
/// for comments in the text format.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == '#')
}

impl FiniteAlgebra {
    /// Convenience constructor over [`validate`].
    pub fn new(
        names: Vec<String>,
        rows: Vec<Vec<usize>>,
        one: usize,
        zero: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        validate(RawAlgebra { names, rows, one: Some(one), zero })
    }

    /// Builds an algebra from a flat row-major table. Used by search where
    /// tables are produced in that layout.
    pub fn from_flat(
        names: Vec<String>,
        arrow: Vec<u8>,
        one: usize,
        zero: Option<usize>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if arrow.len() != n * n {
            return Err(AlgebraError::Ragged { row: 0, expected: n * n, found: arrow.len() });
        }
        let rows = arrow.chunks(n.max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect();
        Self::new(names, rows, one, zero)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    /// `x → y`.
    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.n() + y] as usize
    }

    /// Row-major arrow table.
    pub fn table(&self) -> &[u8] {
        &self.arrow
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n).map(|x| (0..n).map(|y| self.imp(x, y)).collect()).collect()
    }

    /// Same algebra with different element names.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, AlgebraError> {
        Self::from_flat(names, self.arrow.clone(), self.one, self.zero)
    }

    /// `x ≤ y` iff `x → y = 1`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.imp(x, y) == self.one
    }
}

/// Precomputed tables of the operations derived from `→` in a bounded
/// involutive algebra.
///
/// * `x* = x → 0`
/// * `x ⊓ y = ((x* → y*) → y*)*`
/// * `x ⊔ y = (x → y) → y`
/// * `x ⊙ y = (x → y*)*`
/// * `x ⊕ y = (x* ⊙ y*)*`
/// * `x ≤ y` iff `x → y = 1`, `x ≤_Q y` iff `x = x ⊓ y`
///
/// The tables also keep a copy of `→` so that every downstream computation
/// needs only this value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedTables {
    n: usize,
    one: usize,
    zero: usize,
    arrow: Vec<u8>,
    star: Vec<u8>,
    meet: Vec<u8>,
    join: Vec<u8>,
    prod: Vec<u8>,
    sum: Vec<u8>,
    leq: Vec<u64>,
    leq_q: Vec<u64>,
    involutive: bool,
    iom: bool,
}

/// Builds all derived tables. Fails when `alg` has no zero or when some
/// `x** ≠ x` (the first such `x` is reported).
pub fn build_derived(alg: &FiniteAlgebra) -> Result<DerivedTables, AlgebraError> {
    let tables = DerivedTables::compute(alg)?;
    if let Some(x) = (0..alg.n()).find(|&x| tables.star(tables.star(x)) != x) {
        return Err(AlgebraError::NotInvolutive { element: alg.name(x).to_string() });
    }
    Ok(tables)
}

impl DerivedTables {
    /// Evaluates the defining formulas without requiring involution. Only
    /// a zero is needed for the formulas to be total.
    pub(crate) fn compute(alg: &FiniteAlgebra) -> Result<Self, AlgebraError> {
        let zero = alg.zero().ok_or(AlgebraError::NoZero)?;
        Ok(Self::compute_with_zero(alg, zero))
    }

    /// Same as `compute` with an explicit stand-in for zero. Tables that do
    /// not involve zero (`→`, `⊔`, `≤`) are meaningful for any choice.
    pub(crate) fn compute_with_zero(alg: &FiniteAlgebra, zero: usize) -> Self {
        let n = alg.n();
        let one = alg.one();
        let imp = |x: usize, y: usize| alg.imp(x, y);
        let star: Vec<u8> = (0..n).map(|x| imp(x, zero) as u8).collect();
        let st = |x: usize| star[x] as usize;
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        let mut prod = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                meet.push(st(imp(imp(st(x), st(y)), st(y))) as u8);
                join.push(imp(imp(x, y), y) as u8);
                prod.push(st(imp(x, st(y))) as u8);
            }
        }
        let mut sum = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                sum.push(st(prod[st(x) * n + st(y)] as usize) as u8);
            }
        }
        let mut leq = vec![0u64; n];
        let mut leq_q = vec![0u64; n];
        for x in 0..n {
            for y in 0..n {
                if imp(x, y) == one {
                    leq[x] |= 1 << y;
                }
                if meet[x * n + y] as usize == x {
                    leq_q[x] |= 1 << y;
                }
            }
        }
        let involutive = (0..n).all(|x| st(st(x)) == x);
        let mut tables = DerivedTables {
            n,
            one,
            zero,
            arrow: alg.table().to_vec(),
            star,
            meet,
            join,
            prod,
            sum,
            leq,
            leq_q,
            involutive,
            iom: false,
        };
        tables.iom = involutive && tables.is_be() && tables.satisfies_iom_axiom();
        tables
    }

    fn is_be(&self) -> bool {
        let n = self.n;
        let one = self.one;
        (0..n).all(|x| self.imp(x, x) == one && self.imp(x, one) == one && self.imp(one, x) == x)
            && (0..n)
                .all(|x| (0..n).all(|y| (0..n).all(|z| self.imp(x, self.imp(y, z)) == self.imp(y, self.imp(x, z)))))
    }

    fn satisfies_iom_axiom(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.meet(x, self.imp(y, x)) == x))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// Whether `x** = x` for every `x`. Always true for tables from
    /// [`build_derived`].
    pub fn is_involutive(&self) -> bool {
        self.involutive
    }

    /// Whether the source algebra is an involutive BE algebra satisfying
    /// `x ⊓ (y → x) = x`.
    pub fn is_iom(&self) -> bool {
        self.iom
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.n + y] as usize
    }

    #[inline]
    pub fn star(&self, x: usize) -> usize {
        self.star[x] as usize
    }

    /// `x ⊓ y`.
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    /// `x ⊔ y`.
    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    /// `x ⊙ y`.
    #[inline]
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.prod[x * self.n + y] as usize
    }

    /// `x ⊕ y`.
    #[inline]
    pub fn sum(&self, x: usize, y: usize) -> usize {
        self.sum[x * self.n + y] as usize
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x] >> y & 1 == 1
    }

    #[inline]
    pub fn leq_q(&self, x: usize, y: usize) -> bool {
        self.leq_q[x] >> y & 1 == 1
    }

    /// Bitmask of `{ y : x ≤_Q y }`.
    pub fn leq_q_upset(&self, x: usize) -> u64 {
        self.leq_q[x]
    }

    /// Bitmask of `{ y : x ≤ y }`.
    pub fn leq_upset(&self, x: usize) -> u64 {
        self.leq[x]
    }

    /// `x^k` under `⊙`, with `x^1 = x`.
    pub fn power(&self, x: usize, k: usize) -> Result<usize, AlgebraError> {
        if k == 0 {
            return Err(AlgebraError::ZeroExponent);
        }
        Ok((1..k).fold(x, |acc, _| self.prod(acc, x)))
    }

    /// Distinct values of `x^k` for `k ≥ 1`, in order of first appearance.
    /// The sequence is eventually periodic, so this covers every power.
    pub fn power_cycle(&self, x: usize) -> Vec<usize> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        let mut p = x;
        while seen >> p & 1 == 0 {
            seen |= 1 << p;
            out.push(p);
            p = self.prod(p, x);
        }
        out
    }

    pub fn star_table(&self) -> Vec<usize> {
        self.star.iter().map(|&v| v as usize).collect()
    }

    pub fn prod_table(&self) -> &[u8] {
        &self.prod
    }
}

/// Built-in fixtures used throughout the tests and the guide.
pub mod fixtures {
    use super::FiniteAlgebra;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    /// The five-element IOM algebra `{0, a, b, c, 1}` that is not QW.
    pub fn e5() -> FiniteAlgebra {
        let rows = vec![
            vec![4, 4, 4, 4, 4],
            vec![2, 4, 2, 4, 4],
            vec![1, 4, 4, 4, 4],
            vec![3, 4, 4, 4, 4],
            vec![0, 1, 2, 3, 4],
        ];
        FiniteAlgebra::new(names(&["0", "a", "b", "c", "1"]), rows, 4, Some(0)).expect("E5 is well formed")
    }

    /// Classical two-element implication.
    pub fn b2() -> FiniteAlgebra {
        let rows = vec![vec![1, 1], vec![0, 1]];
        FiniteAlgebra::new(names(&["0", "1"]), rows, 1, Some(0)).expect("B2 is well formed")
    }

    /// The one-element algebra with `0 = 1`.
    pub fn trivial() -> FiniteAlgebra {
        FiniteAlgebra::new(names(&["1"]), vec![vec![0]], 0, Some(0)).expect("trivial algebra is well formed")
    }

    /// Four-element Boolean algebra `{0, p, q, 1}` with `x → y = x* ∨ y`.
    pub fn boolean4() -> FiniteAlgebra {
        let rows = vec![vec![3, 3, 3, 3], vec![2, 3, 2, 3], vec![1, 1, 3, 3], vec![0, 1, 2, 3]];
        FiniteAlgebra::new(names(&["0", "p", "q", "1"]), rows, 3, Some(0)).expect("Boolean4 is well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::{b2, e5};
    use super::*;

    #[test]
    fn e5_star_and_meet() {
        let d = build_derived(&e5()).unwrap();
        assert_eq!(d.star_table(), vec![4, 2, 1, 3, 0]);
        // a ⊓ b = b, b ⊓ a = 0
        assert_eq!(d.meet(1, 2), 2);
        assert_eq!(d.meet(2, 1), 0);
    }

    #[test]
    fn e5_meet_table_matches_printed_table() {
        let d = build_derived(&e5()).unwrap();
        let printed = [[0, 0, 0, 0, 0], [0, 1, 2, 3, 1], [0, 0, 2, 3, 2], [0, 1, 2, 3, 3], [0, 1, 2, 3, 4]];
        for (x, row) in printed.iter().enumerate() {
            for (y, &expected) in row.iter().enumerate() {
                assert_eq!(d.meet(x, y), expected, "meet({x},{y})");
            }
        }
    }

    #[test]
    fn b2_product_is_conjunction() {
        let d = build_derived(&b2()).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(d.prod(x, y), x & y);
            }
        }
    }

    #[test]
    fn powers() {
        let b = build_derived(&b2()).unwrap();
        assert_eq!(b.power(0, 2).unwrap(), 0);
        assert_eq!(b.power(1, 3).unwrap(), 1);
        let d = build_derived(&e5()).unwrap();
        assert_eq!(d.power(1, 2).unwrap(), 1);
        assert_eq!(d.power(3, 2).unwrap(), 0);
        for k in 2..8 {
            assert_eq!(d.power(3, k).unwrap(), 0);
        }
        assert_eq!(d.power(3, 1).unwrap(), 3);
        assert!(matches!(d.power(1, 0), Err(AlgebraError::ZeroExponent)));
        assert_eq!(d.power_cycle(3), vec![3, 0]);
    }

    #[test]
    fn rejects_bad_names() {
        let raw = RawAlgebra {
            names: vec!["x y".into(), "1".into()],
            rows: vec![vec![1, 1], vec![0, 1]],
            one: Some(1),
            zero: Some(0),
        };
        assert!(matches!(validate(raw), Err(AlgebraError::InvalidName(_))));
        let raw = RawAlgebra {
            names: vec!["1".into(), "1".into()],
            rows: vec![vec![1, 1], vec![0, 1]],
            one: Some(1),
            zero: Some(0),
        };
        assert!(matches!(validate(raw), Err(AlgebraError::DuplicateName(_))));
    }

    #[test]
    fn rejects_structural_errors() {
        let base = || RawAlgebra {
            names: vec!["0".into(), "1".into()],
            rows: vec![vec![1, 1], vec![0, 1]],
            one: Some(1),
            zero: Some(0),
        };
        let mut raw = base();
        raw.rows[1] = vec![0];
        assert!(matches!(validate(raw), Err(AlgebraError::Ragged { row: 1, .. })));
        let mut raw = base();
        raw.rows[0][1] = 2;
        assert!(matches!(validate(raw), Err(AlgebraError::OutOfRange { row: 0, col: 1, .. })));
        let mut raw = base();
        raw.one = None;
        assert!(matches!(validate(raw), Err(AlgebraError::MissingOne)));
        let mut raw = base();
        raw.zero = Some(1);
        assert!(matches!(validate(raw), Err(AlgebraError::OneEqualsZero)));
        assert!(validate(base()).is_ok());
    }

    #[test]
    fn involution_failure_names_first_element() {
        let mut rows = e5().rows();
        rows[3][0] = 1; // c → 0 = a
        let alg = FiniteAlgebra::new(e5().names().to_vec(), rows, 4, Some(0)).unwrap();
        match build_derived(&alg) {
            Err(AlgebraError::NotInvolutive { element }) => assert_eq!(element, "c"),
            other => panic!("unexpected {other:?}"),
        }
        let no_zero = FiniteAlgebra::new(vec!["0".into(), "1".into()], vec![vec![1, 1], vec![0, 1]], 1, None).unwrap();
        assert!(matches!(build_derived(&no_zero), Err(AlgebraError::NoZero)));
    }

    #[test]
    fn derived_identities_hold_on_fixtures() {
        for alg in [e5(), b2(), fixtures::boolean4(), fixtures::trivial()] {
            let d = build_derived(&alg).unwrap();
            let n = d.n();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(d.meet(x, y), d.star(d.join(d.star(x), d.star(y))));
                    assert_eq!(d.join(x, y), d.star(d.meet(d.star(x), d.star(y))));
                    assert_eq!(d.star(d.prod(x, d.star(y))), d.imp(x, y));
                    assert_eq!(d.prod(x, y), d.prod(y, x));
                    for z in 0..n {
                        assert_eq!(d.prod(x, d.prod(y, z)), d.prod(d.prod(x, y), z));
                    }
                }
            }
        }
    }
}
