use std::fmt;

use crate::algebra::FiniteAlgebra;

/// A subset of the universe, one bit per element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSubset(u64);

impl ElementSubset {
    pub const EMPTY: ElementSubset = ElementSubset(0);

    pub fn from_mask(mask: u64) -> Self {
        ElementSubset(mask)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSubset(u64::MAX)
        } else {
            ElementSubset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElementSubset(1 << x)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn with(self, x: usize) -> Self {
        ElementSubset(self.0 | 1 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSubset) -> Self {
        ElementSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSubset) -> Self {
        ElementSubset(self.0 & other.0)
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Whether only indices below `n` are set.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(ElementSubset::full(n))
    }

    /// `{a,1}` style rendering with element names.
    pub fn display<'a>(self, alg: &'a FiniteAlgebra) -> NamedSubset<'a> {
        NamedSubset { set: self, alg }
    }
}

impl FromIterator<usize> for ElementSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSubset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

pub struct NamedSubset<'a> {
    set: ElementSubset,
    alg: &'a FiniteAlgebra,
}

impl fmt::Display for NamedSubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.set.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.alg.name(x))?;
        }
        f.write_str("}")
    }
}
