//! Isomorphism-reduced enumeration of bounded involutive BE algebras and
//! search for models with prescribed class membership.
//!
//! Tables are built with `0` at index `0` and `1` at index `n - 1`. The
//! diagonal, the row and column of `1` and the row of `0` are forced. The
//! column `x → 0` is an involution swapping `0` and `1`; every such involution
//! is a separate branch and branches run in parallel. Inside a branch cells
//! are filled row by row, each assignment also fixing the cell required by
//! `x* → y* = y → x`, and partial tables are pruned with `BE4`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::classify::{classify, AxiomId, ClassificationReport};
use crate::error::SearchError;

/// Largest size for exhaustive enumeration.
pub const MAX_EXHAUSTIVE: usize = 5;
/// Largest size accepted at all.
pub const MAX_SEARCH: usize = 8;

const UNSET: u8 = u8::MAX;

/// The lexicographically least relabeled arrow table over all permutations
/// that fix the designated constants. `0` moves to index `0` and `1` to index
/// `n - 1` first, so equal forms mean isomorphic algebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    has_zero: bool,
    table: Vec<u8>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// The canonical algebra, with elements named `0, a, b, …, 1`.
    pub fn to_algebra(&self) -> FiniteAlgebra {
        let n = self.n;
        let (one, zero) = if n == 1 { (0, self.has_zero.then_some(0)) } else { (n - 1, self.has_zero.then_some(0)) };
        FiniteAlgebra::from_flat(standard_names(n, self.has_zero), self.table.clone(), one, zero)
            .expect("canonical tables come from valid algebras")
    }
}

/// `0, a, b, …, 1` with a zero, `a, b, …, 1` without.
pub fn standard_names(n: usize, has_zero: bool) -> Vec<String> {
    if n == 1 {
        return vec!["1".to_string()];
    }
    let letter = |i: usize| {
        if i < 26 {
            ((b'a' + i as u8) as char).to_string()
        } else {
            format!("e{i}")
        }
    };
    let mut names = Vec::with_capacity(n);
    if has_zero {
        names.push("0".to_string());
        names.extend((0..n - 2).map(letter));
    } else {
        names.extend((0..n - 1).map(letter));
    }
    names.push("1".to_string());
    names
}

/// Computes the canonical form by trying every admissible permutation.
///
/// ```
/// use iomkit::{fixtures, search::canonicalize};
/// let b2 = fixtures::b2();
/// assert_eq!(canonicalize(&b2).unwrap().to_algebra().table(), b2.table());
/// ```
pub fn canonicalize(alg: &FiniteAlgebra) -> Result<CanonicalForm, SearchError> {
    let n = alg.n();
    if n > MAX_SEARCH {
        return Err(SearchError::TooLarge { n, max: MAX_SEARCH, mode: "canonicalization" });
    }
    let one = alg.one();
    let zero = alg.zero().filter(|&z| z != one);
    let mut middle: Vec<usize> = (0..n).filter(|&x| x != one && Some(x) != zero).collect();
    // position → old index
    let mut best: Option<Vec<u8>> = None;
    let mut perm = vec![0usize; n];
    loop {
        let mut order = Vec::with_capacity(n);
        order.extend(zero);
        order.extend(middle.iter().copied());
        order.push(one);
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[alg.imp(x, y)] as u8;
            }
        }
        if best.as_ref().is_none_or(|b| table < *b) {
            best = Some(table);
        }
        if !next_permutation(&mut middle) {
            break;
        }
    }
    Ok(CanonicalForm { n, has_zero: alg.zero().is_some(), table: best.expect("at least one permutation") })
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Class conditions usable in `require` and `forbid` lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassFlag {
    Iom,
    Qw,
    Qw1,
    Qw2,
    Iom2,
    Prel,
    Om,
}

impl ClassFlag {
    pub const ALL: [ClassFlag; 7] = [
        ClassFlag::Iom,
        ClassFlag::Qw,
        ClassFlag::Qw1,
        ClassFlag::Qw2,
        ClassFlag::Iom2,
        ClassFlag::Prel,
        ClassFlag::Om,
    ];

    pub fn key(self) -> &'static str {
        match self {
            ClassFlag::Iom => "iom",
            ClassFlag::Qw => "qw",
            ClassFlag::Qw1 => "qw1",
            ClassFlag::Qw2 => "qw2",
            ClassFlag::Iom2 => "iom2",
            ClassFlag::Prel => "prel",
            ClassFlag::Om => "om",
        }
    }

    pub fn holds(self, r: &ClassificationReport) -> bool {
        match self {
            ClassFlag::Iom => r.labels.is_iom,
            ClassFlag::Qw => r.labels.is_qw,
            ClassFlag::Om => r.labels.is_om,
            ClassFlag::Qw1 => r.holds(AxiomId::Qw1),
            ClassFlag::Qw2 => r.holds(AxiomId::Qw2),
            ClassFlag::Iom2 => r.holds(AxiomId::Iom2),
            ClassFlag::Prel => r.holds(AxiomId::Prel),
        }
    }
}

impl FromStr for ClassFlag {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        ClassFlag::ALL.into_iter().find(|c| c.key() == lower).ok_or_else(|| SearchError::UnknownClass(s.to_string()))
    }
}

impl fmt::Display for ClassFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Parses a comma-separated list such as `iom,prel`.
pub fn parse_flags(list: &str) -> Result<Vec<ClassFlag>, SearchError> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSpec {
    pub n: usize,
    pub require: Vec<ClassFlag>,
    pub forbid: Vec<ClassFlag>,
    pub limit: Option<usize>,
    /// Enumerate the whole space. Required for a complete census; only
    /// allowed up to [`MAX_EXHAUSTIVE`].
    pub exhaustive: bool,
    /// Prune partial tables that already violate `x ⊓ (y → x) = x` when IOM
    /// is required. Exhaustive runs ignore it so that the census stays
    /// complete.
    pub iom_cut: bool,
}

impl ModelSpec {
    /// Exhaustive when `n` allows it, with the IOM cut on.
    pub fn new(n: usize) -> Self {
        ModelSpec {
            n,
            require: Vec::new(),
            forbid: Vec::new(),
            limit: None,
            exhaustive: n <= MAX_EXHAUSTIVE,
            iom_cut: true,
        }
    }

    pub fn require(mut self, flags: &[ClassFlag]) -> Self {
        self.require.extend_from_slice(flags);
        self
    }

    pub fn forbid(mut self, flags: &[ClassFlag]) -> Self {
        self.forbid.extend_from_slice(flags);
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.n == 0 {
            return Err(SearchError::ZeroSize);
        }
        if self.exhaustive && self.n > MAX_EXHAUSTIVE {
            return Err(SearchError::TooLarge { n: self.n, max: MAX_EXHAUSTIVE, mode: "exhaustive search" });
        }
        if self.n > MAX_SEARCH {
            return Err(SearchError::TooLarge { n: self.n, max: MAX_SEARCH, mode: "search" });
        }
        if let Some(c) = self.require.iter().find(|c| self.forbid.contains(c)) {
            return Err(SearchError::Contradictory(c.to_string()));
        }
        Ok(())
    }

    fn matches(&self, r: &ClassificationReport) -> bool {
        self.require.iter().all(|c| c.holds(r)) && !self.forbid.iter().any(|c| c.holds(r))
    }
}

/// Counts over the models visited. In exhaustive mode these are counts of
/// isomorphism classes of bounded involutive BE algebras of the given size.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    pub models: usize,
    pub matching: usize,
    pub per_class: Vec<(ClassFlag, usize)>,
    pub cross_check_violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Matching models in canonical order, at most `limit` of them.
    pub models: Vec<FiniteAlgebra>,
    pub census: Census,
    pub exhaustive: bool,
}

struct Branch<'a> {
    n: usize,
    sigma: Vec<u8>,
    free: Vec<usize>,
    spec: &'a ModelSpec,
    iom_cut: bool,
    found: BTreeMap<CanonicalForm, ClassificationReport>,
    matching: usize,
}

impl Branch<'_> {
    fn get(&self, t: &[u8], x: u8, y: u8) -> Option<u8> {
        if x == UNSET || y == UNSET {
            return None;
        }
        let v = t[x as usize * self.n + y as usize];
        (v != UNSET).then_some(v)
    }

    fn consistent(&self, t: &[u8]) -> bool {
        let n = self.n as u8;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let l = self.get(t, y, z).and_then(|yz| self.get(t, x, yz));
                    let r = self.get(t, x, z).and_then(|xz| self.get(t, y, xz));
                    if let (Some(l), Some(r)) = (l, r) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        if self.iom_cut {
            let s = |v: u8| self.sigma[v as usize];
            for x in 0..n {
                for y in 0..n {
                    // x ⊓ (y → x) = ((x* → w*) → w*)* with w = y → x
                    let m = self.get(t, y, x).and_then(|w| {
                        let ws = s(w);
                        self.get(t, s(x), ws).and_then(|v| self.get(t, v, ws)).map(s)
                    });
                    if m.is_some_and(|m| m != x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn limit_reached(&self) -> bool {
        !self.spec.exhaustive && self.spec.limit.is_some_and(|l| self.matching >= l)
    }

    fn dfs(&mut self, t: &mut Vec<u8>, k: usize) {
        if self.limit_reached() {
            return;
        }
        let mut k = k;
        while k < self.free.len() && t[self.free[k]] != UNSET {
            k += 1;
        }
        if k == self.free.len() {
            self.emit(t);
            return;
        }
        let n = self.n;
        let cell = self.free[k];
        let (x, y) = (cell / n, cell % n);
        let mirror = self.sigma[y] as usize * n + self.sigma[x] as usize;
        for v in 0..n as u8 {
            if t[mirror] != UNSET && t[mirror] != v {
                continue;
            }
            let mirror_was = t[mirror];
            t[cell] = v;
            t[mirror] = v;
            if self.consistent(t) {
                self.dfs(t, k + 1);
            }
            t[mirror] = mirror_was;
            t[cell] = UNSET;
            if self.limit_reached() {
                return;
            }
        }
    }

    fn emit(&mut self, t: &[u8]) {
        let n = self.n;
        let names = standard_names(n, true);
        let alg = FiniteAlgebra::from_flat(names, t.to_vec(), n - 1, Some(0)).expect("search tables are valid");
        let form = canonicalize(&alg).expect("size already checked");
        if self.found.contains_key(&form) {
            return;
        }
        let report = classify(&form.to_algebra());
        if self.spec.matches(&report) {
            self.matching += 1;
        }
        self.found.insert(form, report);
    }
}

/// Involutions of `0..n` swapping `0` and `n - 1`, in lexicographic order.
fn involutions(n: usize) -> Vec<Vec<u8>> {
    fn go(p: &mut Vec<u8>, i: usize, out: &mut Vec<Vec<u8>>) {
        let n = p.len();
        if i == n {
            out.push(p.clone());
            return;
        }
        if p[i] != UNSET {
            go(p, i + 1, out);
            return;
        }
        for j in i..n {
            if p[j] == UNSET {
                p[i] = j as u8;
                p[j] = i as u8;
                go(p, i + 1, out);
                p[i] = UNSET;
                p[j] = UNSET;
            }
        }
    }
    let mut p = vec![UNSET; n];
    p[0] = (n - 1) as u8;
    p[n - 1] = 0;
    let mut out = Vec::new();
    go(&mut p, 0, &mut out);
    out
}

fn run_branch(spec: &ModelSpec, sigma: Vec<u8>) -> (BTreeMap<CanonicalForm, ClassificationReport>, usize) {
    let n = spec.n;
    let one = n - 1;
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        t[x * n + x] = one as u8;
        t[x * n + one] = one as u8;
        t[one * n + x] = x as u8;
        t[x] = one as u8;
        t[x * n] = sigma[x];
    }
    let free = (0..n * n).filter(|&c| t[c] == UNSET).collect();
    let iom_cut = spec.iom_cut && !spec.exhaustive && spec.require.contains(&ClassFlag::Iom);
    let mut branch = Branch { n, sigma, free, spec, iom_cut, found: BTreeMap::new(), matching: 0 };
    if branch.consistent(&t) {
        branch.dfs(&mut t, 0);
    }
    (branch.found, branch.matching)
}

/// Searches for models of `spec`.
///
/// In exhaustive mode every bounded involutive BE algebra of size `n` is
/// generated once per isomorphism class, the census covers all of them and
/// `limit` only truncates the returned list. Otherwise each branch stops
/// after `limit` matching models and the census covers what was visited.
pub fn find_models(spec: &ModelSpec) -> Result<SearchResult, SearchError> {
    spec.validate()?;
    let n = spec.n;
    let found: BTreeMap<CanonicalForm, ClassificationReport> = if n == 1 {
        let alg = crate::algebra::fixtures::trivial();
        let form = canonicalize(&alg)?;
        let report = classify(&form.to_algebra());
        BTreeMap::from([(form, report)])
    } else {
        let branches: Vec<_> = involutions(n).into_par_iter().map(|sigma| run_branch(spec, sigma).0).collect();
        let mut merged = BTreeMap::new();
        for b in branches {
            merged.extend(b);
        }
        merged
    };
    let mut census = Census {
        models: found.len(),
        per_class: ClassFlag::ALL.iter().map(|&c| (c, found.values().filter(|r| c.holds(r)).count())).collect(),
        cross_check_violations: found.values().map(|r| r.violations().len()).sum(),
        ..Census::default()
    };
    let mut models = Vec::new();
    for (form, report) in &found {
        if spec.matches(report) {
            census.matching += 1;
            if spec.limit.is_none_or(|l| models.len() < l) {
                models.push(form.to_algebra());
            }
        }
    }
    Ok(SearchResult { models, census, exhaustive: spec.exhaustive })
}

/// Every bounded involutive BE algebra of size `n` up to isomorphism, in
/// canonical order.
pub fn enumerate_models(n: usize) -> Result<Vec<FiniteAlgebra>, SearchError> {
    let spec = ModelSpec { exhaustive: true, ..ModelSpec::new(n) };
    Ok(find_models(&spec)?.models)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn canonical_forms() {
        let b2 = fixtures::b2();
        assert_eq!(canonicalize(&b2).unwrap().table(), b2.table());
        let t = fixtures::trivial();
        assert_eq!(canonicalize(&t).unwrap().to_algebra(), t);
        let e5 = fixtures::e5();
        let swapped = FiniteAlgebra::new(
            ["0", "b", "a", "c", "1"].iter().map(|s| s.to_string()).collect(),
            {
                let p = [0usize, 2, 1, 3, 4];
                let rows = e5.rows();
                (0..5).map(|i| (0..5).map(|j| p[rows[p[i]][p[j]]]).collect()).collect()
            },
            4,
            Some(0),
        )
        .unwrap();
        let c = canonicalize(&e5).unwrap();
        assert_eq!(canonicalize(&swapped).unwrap(), c);
        assert_eq!(canonicalize(&c.to_algebra()).unwrap(), c);
    }

    #[test]
    fn small_sizes() {
        assert_eq!(enumerate_models(1).unwrap().len(), 1);
        let two = enumerate_models(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].table(), fixtures::b2().table());
        let r = find_models(&ModelSpec::new(2).require(&[ClassFlag::Iom]).forbid(&[ClassFlag::Qw])).unwrap();
        assert!(r.models.is_empty());
    }

    #[test]
    fn e5_is_found() {
        let spec = ModelSpec::new(5).require(&[ClassFlag::Iom]).forbid(&[ClassFlag::Qw]);
        let r = find_models(&spec).unwrap();
        let e5 = canonicalize(&fixtures::e5()).unwrap().to_algebra();
        assert!(r.models.contains(&e5));
        let prel = find_models(&spec.clone().require(&[ClassFlag::Prel])).unwrap();
        assert!(!prel.models.is_empty());
    }

    #[test]
    fn spec_errors() {
        assert_eq!(find_models(&ModelSpec::new(0)), Err(SearchError::ZeroSize));
        assert!(matches!(
            find_models(&ModelSpec { exhaustive: true, ..ModelSpec::new(6) }),
            Err(SearchError::TooLarge { .. })
        ));
        assert!(matches!(
            find_models(&ModelSpec::new(3).require(&[ClassFlag::Qw]).forbid(&[ClassFlag::Qw])),
            Err(SearchError::Contradictory(_))
        ));
        assert!(matches!("lattice".parse::<ClassFlag>(), Err(SearchError::UnknownClass(_))));
    }
}
