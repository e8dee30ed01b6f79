//! Registry of the numbered laws of BE, involutive BE, QW and IOM algebras as
//! executable statements, evaluated exhaustively with witnesses.
//!
//! An identifier names a group and an item: `L2.1.5` is item 5 of group
//! `L2.1`, `P3.6.1` is item 1 of group `P3.6`. Items stating a relation
//! with a hypothesis are encoded as conditionals; the conclusion is only
//! tested on tuples satisfying the hypothesis.

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{DerivedTables, FiniteAlgebra};
use crate::classify::{classify, ClassLabels};
use crate::error::LawError;
use crate::exhaust::first_failure;

/// Class an algebra must belong to for a law to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawClass {
    Be,
    BoundedBe,
    InvolutiveBe,
    Iom,
    Qw,
}

impl LawClass {
    pub fn label(self) -> &'static str {
        match self {
            LawClass::Be => "BE",
            LawClass::BoundedBe => "bounded BE",
            LawClass::InvolutiveBe => "involutive BE",
            LawClass::Iom => "IOM",
            LawClass::Qw => "QW",
        }
    }

    fn admits(self, labels: &ClassLabels) -> bool {
        match self {
            LawClass::Be => labels.is_be,
            LawClass::BoundedBe => labels.is_bounded_be,
            LawClass::InvolutiveBe => labels.is_involutive_be,
            LawClass::Iom => labels.is_iom,
            LawClass::Qw => labels.is_qw,
        }
    }
}

impl fmt::Display for LawClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawKind {
    Identity,
    Conditional,
}

type Pred = fn(&DerivedTables, usize, usize, usize) -> bool;

/// One law. Unused variables of a lower-arity law are passed as `0`.
#[derive(Clone)]
pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub arity: usize,
    pub class: LawClass,
    pub kind: LawKind,
    hypothesis: Option<Pred>,
    conclusion: Pred,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("arity", &self.arity)
            .field("class", &self.class)
            .field("kind", &self.kind)
            .finish()
    }
}

impl Law {
    /// Whether the law holds at `tuple`. Tuples failing the hypothesis of a
    /// conditional law hold vacuously.
    pub fn holds_at(&self, d: &DerivedTables, tuple: &[usize]) -> bool {
        let at = |i: usize| tuple.get(i).copied().unwrap_or(0);
        let (x, y, z) = (at(0), at(1), at(2));
        match self.hypothesis {
            Some(h) if !h(d, x, y, z) => true,
            _ => (self.conclusion)(d, x, y, z),
        }
    }

    /// First counterexample over all tuples of the law's arity.
    pub fn first_counterexample(&self, d: &DerivedTables) -> Option<Vec<usize>> {
        first_failure(d.n(), self.arity, |t| self.holds_at(d, t))
    }

    /// Ordering key that sorts `P3.10.1` after `P3.8.9`.
    pub fn sort_key(&self) -> (char, Vec<u32>) {
        let mut chars = self.id.chars();
        let head = chars.next().unwrap_or(' ');
        let nums = chars.as_str().split('.').filter_map(|p| p.parse().ok()).collect();
        (head, nums)
    }
}

fn ident(id: &'static str, class: LawClass, arity: usize, statement: &'static str, conclusion: Pred) -> Law {
    Law { id, statement, arity, class, kind: LawKind::Identity, hypothesis: None, conclusion }
}

fn cond(
    id: &'static str,
    class: LawClass,
    arity: usize,
    statement: &'static str,
    hypothesis: Pred,
    conclusion: Pred,
) -> Law {
    Law { id, statement, arity, class, kind: LawKind::Conditional, hypothesis: Some(hypothesis), conclusion }
}

/// Every registered law, ordered by identifier.
pub fn law_registry() -> &'static [Law] {
    static REGISTRY: OnceLock<Vec<Law>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn find_law(id: &str) -> Result<&'static Law, LawError> {
    law_registry().iter().find(|l| l.id == id).ok_or_else(|| LawError::UnknownLaw(id.to_string()))
}

#[allow(unused_variables)]
fn build_registry() -> Vec<Law> {
    use LawClass::*;
    let mut v = vec![
        // L2.1
        ident("L2.1.1", Be, 2, "x → (y → x) = 1", |d, x, y, z| d.imp(x, d.imp(y, x)) == d.one()),
        ident("L2.1.2", Be, 2, "x ≤ (x → y) → y", |d, x, y, z| d.leq(x, d.imp(d.imp(x, y), y))),
        ident("L2.1.3", BoundedBe, 2, "x → y* = y → x*", |d, x, y, z| d.imp(x, d.star(y)) == d.imp(y, d.star(x))),
        ident("L2.1.4", BoundedBe, 1, "x ≤ x**", |d, x, y, z| d.leq(x, d.star(d.star(x)))),
        ident("L2.1.5", InvolutiveBe, 2, "x* → y = y* → x", |d, x, y, z| {
            d.imp(d.star(x), y) == d.imp(d.star(y), x)
        }),
        ident("L2.1.6", InvolutiveBe, 2, "x* → y* = y → x", |d, x, y, z| {
            d.imp(d.star(x), d.star(y)) == d.imp(y, x)
        }),
        ident("L2.1.7", InvolutiveBe, 3, "(x → y)* → z = x → (y* → z)", |d, x, y, z| {
            d.imp(d.star(d.imp(x, y)), z) == d.imp(x, d.imp(d.star(y), z))
        }),
        ident("L2.1.8", InvolutiveBe, 3, "x → (y → z) = (x → y*)* → z", |d, x, y, z| {
            d.imp(x, d.imp(y, z)) == d.imp(d.star(d.imp(x, d.star(y))), z)
        }),
        ident("L2.1.9", InvolutiveBe, 2, "(x* → y)* → (x* → y) = (x* → x)* → (y* → y)", |d, x, y, z| {
            let u = d.imp(d.star(x), y);
            d.imp(d.star(u), u) == d.imp(d.star(d.imp(d.star(x), x)), d.imp(d.star(y), y))
        }),
        // P2.2
        cond(
            "P2.2.1",
            InvolutiveBe,
            2,
            "x ≤_Q y ⇒ x = y ⊓ x and y = x ⊔ y",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| x == d.meet(y, x) && y == d.join(x, y),
        ),
        ident("P2.2.2", InvolutiveBe, 2, "≤_Q is reflexive and antisymmetric", |d, x, y, z| {
            d.leq_q(x, x) && (!(d.leq_q(x, y) && d.leq_q(y, x)) || x == y)
        }),
        ident("P2.2.3", InvolutiveBe, 2, "x ⊓ y = (x* ⊔ y*)* and x ⊔ y = (x* ⊓ y*)*", |d, x, y, z| {
            d.meet(x, y) == d.star(d.join(d.star(x), d.star(y))) && d.join(x, y) == d.star(d.meet(d.star(x), d.star(y)))
        }),
        cond("P2.2.4", InvolutiveBe, 2, "x ≤_Q y ⇒ x ≤ y", |d, x, y, z| d.leq_q(x, y), |d, x, y, z| d.leq(x, y)),
        ident("P2.2.5", InvolutiveBe, 1, "0 ≤_Q x ≤_Q 1", |d, x, y, z| d.leq_q(d.zero(), x) && d.leq_q(x, d.one())),
        ident("P2.2.6", InvolutiveBe, 1, "0 ⊓ x = x ⊓ 0 = 0 and 1 ⊓ x = x ⊓ 1 = x", |d, x, y, z| {
            let (o, i) = (d.zero(), d.one());
            d.meet(o, x) == o && d.meet(x, o) == o && d.meet(i, x) == x && d.meet(x, i) == x
        }),
        ident("P2.2.7", InvolutiveBe, 3, "(x ⊓ y) → z = (y → x) → (y → z)", |d, x, y, z| {
            d.imp(d.meet(x, y), z) == d.imp(d.imp(y, x), d.imp(y, z))
        }),
        ident("P2.2.8", InvolutiveBe, 3, "z → (x ⊔ y) = (x → y) → (z → y)", |d, x, y, z| {
            d.imp(z, d.join(x, y)) == d.imp(d.imp(x, y), d.imp(z, y))
        }),
        ident("P2.2.9", InvolutiveBe, 2, "x ⊓ y ≤ x, y ≤ x ⊔ y", |d, x, y, z| {
            let (m, j) = (d.meet(x, y), d.join(x, y));
            d.leq(m, x) && d.leq(m, y) && d.leq(x, j) && d.leq(y, j)
        }),
        ident("P2.2.10", InvolutiveBe, 2, "x ⊓ (y ⊓ x) = y ⊓ x and x ⊓ (x ⊓ y) = x ⊓ y", |d, x, y, z| {
            d.meet(x, d.meet(y, x)) == d.meet(y, x) && d.meet(x, d.meet(x, y)) == d.meet(x, y)
        }),
        // P2.3
        cond(
            "P2.3.1",
            InvolutiveBe,
            3,
            "x, y ≤_Q z and z → x = z → y ⇒ x = y",
            |d, x, y, z| d.leq_q(x, z) && d.leq_q(y, z) && d.imp(z, x) == d.imp(z, y),
            |d, x, y, z| x == y,
        ),
        ident("P2.3.2", InvolutiveBe, 3, "(x → (y → z)) → x* = ((y → z) ⊓ x)*", |d, x, y, z| {
            d.imp(d.imp(x, d.imp(y, z)), d.star(x)) == d.star(d.meet(d.imp(y, z), x))
        }),
        ident("P2.3.3", InvolutiveBe, 3, "x → ((y → x*)* ⊔ z) = y ⊔ (x → z)", |d, x, y, z| {
            d.imp(x, d.join(d.star(d.imp(y, d.star(x))), z)) == d.join(y, d.imp(x, z))
        }),
        ident("P2.3.4", InvolutiveBe, 3, "((y → x) ⊓ z) → x = y ⊔ (z → x)", |d, x, y, z| {
            d.imp(d.meet(d.imp(y, x), z), x) == d.join(y, d.imp(z, x))
        }),
        cond(
            "P2.3.5",
            InvolutiveBe,
            2,
            "x ≤_Q y ⇒ (y → x) ⊙ y = x",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.prod(d.imp(y, x), y) == x,
        ),
        ident("P2.3.6", InvolutiveBe, 3, "x → (z ⊙ y*) = ((z → y) ⊙ x)*", |d, x, y, z| {
            d.imp(x, d.prod(z, d.star(y))) == d.star(d.prod(d.imp(z, y), x))
        }),
        ident("P2.3.7", InvolutiveBe, 2, "(x ⊔ y) ⊓ y = y and (x ⊓ y) ⊔ y = y", |d, x, y, z| {
            d.meet(d.join(x, y), y) == y && d.join(d.meet(x, y), y) == y
        }),
        // P2.4
        ident("P2.4.1", Qw, 2, "x → (y ⊓ x) = x → y and (x → y) → (y ⊓ x) = x", |d, x, y, z| {
            d.imp(x, d.meet(y, x)) == d.imp(x, y) && d.imp(d.imp(x, y), d.meet(y, x)) == x
        }),
        ident("P2.4.2", Qw, 2, "x ≤_Q x* → y and x ≤_Q y → x", |d, x, y, z| {
            d.leq_q(x, d.imp(d.star(x), y)) && d.leq_q(x, d.imp(y, x))
        }),
        ident("P2.4.3", Qw, 2, "x → y = 0 iff x = 1 and y = 0", |d, x, y, z| {
            (d.imp(x, y) == d.zero()) == (x == d.one() && y == d.zero())
        }),
        ident("P2.4.4", Qw, 2, "(x → y)* ⊓ x = (x → y)*", |d, x, y, z| {
            d.meet(d.star(d.imp(x, y)), x) == d.star(d.imp(x, y))
        }),
        ident("P2.4.5", Qw, 2, "(x ⊓ y) ⊓ y = x ⊓ y and (x ⊔ y) ⊔ y = x ⊔ y", |d, x, y, z| {
            d.meet(d.meet(x, y), y) == d.meet(x, y) && d.join(d.join(x, y), y) == d.join(x, y)
        }),
        ident("P2.4.6", Qw, 2, "x ⊔ (y ⊓ x) = x and x ⊓ (y ⊔ x) = x", |d, x, y, z| {
            d.join(x, d.meet(y, x)) == x && d.meet(x, d.join(y, x)) == x
        }),
        ident("P2.4.7", Qw, 2, "x ⊓ y ≤_Q y ≤_Q x ⊔ y", |d, x, y, z| {
            d.leq_q(d.meet(x, y), y) && d.leq_q(y, d.join(x, y))
        }),
        ident("P2.4.8", Qw, 2, "(x ⊔ y) → x = (y ⊔ x) → x = y → x", |d, x, y, z| {
            let a = d.imp(d.join(x, y), x);
            a == d.imp(d.join(y, x), x) && a == d.imp(y, x)
        }),
        ident("P2.4.9", Qw, 2, "(x ⊔ y) → y = (y ⊔ x) → y = x → y", |d, x, y, z| {
            let a = d.imp(d.join(x, y), y);
            a == d.imp(d.join(y, x), y) && a == d.imp(x, y)
        }),
        ident("P2.4.10", Qw, 2, "x ≤ y iff y ⊓ x = x", |d, x, y, z| d.leq(x, y) == (d.meet(y, x) == x)),
        // P2.5
        cond("P2.5.1", Qw, 2, "x ≤_Q y ⇒ y = y ⊔ x", |d, x, y, z| d.leq_q(x, y), |d, x, y, z| y == d.join(y, x)),
        cond(
            "P2.5.2",
            Qw,
            2,
            "x ≤_Q y ⇒ y* ≤_Q x*",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.star(y), d.star(x)),
        ),
        cond(
            "P2.5.3",
            Qw,
            3,
            "x ≤_Q y ⇒ y → z ≤_Q x → z and z → x ≤_Q z → y",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.imp(y, z), d.imp(x, z)) && d.leq_q(d.imp(z, x), d.imp(z, y)),
        ),
        cond(
            "P2.5.4",
            Qw,
            3,
            "x ≤_Q y ⇒ x ⊓ z ≤_Q y ⊓ z and x ⊔ z ≤_Q y ⊔ z",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.meet(x, z), d.meet(y, z)) && d.leq_q(d.join(x, z), d.join(y, z)),
        ),
        // P2.6
        ident("P2.6.1", Qw, 3, "(x ⊓ y) ⊓ (y ⊓ z) = (x ⊓ y) ⊓ z", |d, x, y, z| {
            d.meet(d.meet(x, y), d.meet(y, z)) == d.meet(d.meet(x, y), z)
        }),
        cond(
            "P2.6.2",
            Qw,
            3,
            "x ≤_Q y and y ≤_Q z ⇒ x ≤_Q z",
            |d, x, y, z| d.leq_q(x, y) && d.leq_q(y, z),
            |d, x, y, z| d.leq_q(x, z),
        ),
        ident("P2.6.3", Qw, 2, "x ⊔ y ≤_Q x* → y", |d, x, y, z| d.leq_q(d.join(x, y), d.imp(d.star(x), y))),
        ident("P2.6.4", Qw, 2, "(x* → y)* → (x → y*)* = x* → y", |d, x, y, z| {
            d.imp(d.star(d.imp(d.star(x), y)), d.star(d.imp(x, d.star(y)))) == d.imp(d.star(x), y)
        }),
        ident("P2.6.5", Qw, 2, "(x → y)* → (y → x)* = x → y", |d, x, y, z| {
            d.imp(d.star(d.imp(x, y)), d.star(d.imp(y, x))) == d.imp(x, y)
        }),
        ident("P2.6.6", Qw, 2, "(y → x) → (x → y) = x → y", |d, x, y, z| {
            d.imp(d.imp(y, x), d.imp(x, y)) == d.imp(x, y)
        }),
        ident("P2.6.7", Qw, 2, "(x → y) ⊔ (y → x) = 1", |d, x, y, z| d.join(d.imp(x, y), d.imp(y, x)) == d.one()),
        ident("P2.6.8", Qw, 3, "(z ⊓ x) → (y ⊓ x) = (z ⊓ x) → y", |d, x, y, z| {
            d.imp(d.meet(z, x), d.meet(y, x)) == d.imp(d.meet(z, x), y)
        }),
        // P2.7
        ident("P2.7.1", Qw, 3, "x → (y → z) = (x ⊙ y) → z", |d, x, y, z| {
            d.imp(x, d.imp(y, z)) == d.imp(d.prod(x, y), z)
        }),
        cond(
            "P2.7.2",
            Qw,
            3,
            "x ≤_Q y → z ⇒ x ⊙ y ≤ z",
            |d, x, y, z| d.leq_q(x, d.imp(y, z)),
            |d, x, y, z| d.leq(d.prod(x, y), z),
        ),
        cond(
            "P2.7.3",
            Qw,
            3,
            "x ⊙ y ≤ z ⇒ x ≤ y → z",
            |d, x, y, z| d.leq(d.prod(x, y), z),
            |d, x, y, z| d.leq(x, d.imp(y, z)),
        ),
        ident("P2.7.4", Qw, 2, "(x → y) ⊙ x ≤ y", |d, x, y, z| d.leq(d.prod(d.imp(x, y), x), y)),
        cond(
            "P2.7.5",
            Qw,
            3,
            "x ≤_Q y ⇒ x ⊙ z ≤_Q y ⊙ z",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.prod(x, z), d.prod(y, z)),
        ),
        cond(
            "P2.7.6",
            Qw,
            2,
            "x ≤_Q y ⇒ (y → x) ⊙ y = x",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.prod(d.imp(y, x), y) == x,
        ),
        ident("P2.7.7", Qw, 3, "x → (z ⊙ y*) = ((z → y) ⊙ x)*", |d, x, y, z| {
            d.imp(x, d.prod(z, d.star(y))) == d.star(d.prod(d.imp(z, y), x))
        }),
        // P3.5
        ident("P3.5.1", Iom, 2, "x ⊓ (y ⊔ x) = x and x ⊔ (y ⊓ x) = x", |d, x, y, z| {
            d.meet(x, d.join(y, x)) == x && d.join(x, d.meet(y, x)) == x
        }),
        cond(
            "P3.5.2",
            Iom,
            2,
            "x ≤_Q y ⇒ y ⊔ x = y and y* ≤_Q x*",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.join(y, x) == y && d.leq_q(d.star(y), d.star(x)),
        ),
        cond(
            "P3.5.3",
            Iom,
            3,
            "x ≤_Q y ⇒ y → z ≤_Q x → z and z → x ≤_Q z → y",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.imp(y, z), d.imp(x, z)) && d.leq_q(d.imp(z, x), d.imp(z, y)),
        ),
        cond(
            "P3.5.4",
            Iom,
            3,
            "x ≤_Q y ⇒ x ⊓ z ≤_Q y ⊓ z and x ⊔ z ≤_Q y ⊔ z",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.meet(x, z), d.meet(y, z)) && d.leq_q(d.join(x, z), d.join(y, z)),
        ),
        cond(
            "P3.5.5",
            Iom,
            3,
            "x ≤_Q y ⇒ (z → y) ⊔ (z → x) = z → y",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.join(d.imp(z, y), d.imp(z, x)) == d.imp(z, y),
        ),
        // P3.6
        ident("P3.6.1", Iom, 2, "(x → y) ⊔ y = x → y", |d, x, y, z| d.join(d.imp(x, y), y) == d.imp(x, y)),
        ident("P3.6.2", Iom, 2, "(x → y) → (y ⊓ x) = x", |d, x, y, z| d.imp(d.imp(x, y), d.meet(y, x)) == x),
        ident("P3.6.3", Iom, 2, "x → (y ⊓ x) = x → y", |d, x, y, z| d.imp(x, d.meet(y, x)) == d.imp(x, y)),
        ident("P3.6.4", Iom, 2, "(x ⊔ y) → (x → y)* = y*", |d, x, y, z| {
            d.imp(d.join(x, y), d.star(d.imp(x, y))) == d.star(y)
        }),
        ident("P3.6.5", Iom, 3, "x ⊓ ((y → x) ⊓ (z → x)) = x", |d, x, y, z| {
            d.meet(x, d.meet(d.imp(y, x), d.imp(z, x))) == x
        }),
        ident("P3.6.6", Iom, 2, "x ≤ y iff y ⊓ x = x", |d, x, y, z| d.leq(x, y) == (d.meet(y, x) == x)),
        cond(
            "P3.6.7",
            Iom,
            2,
            "x ≤_Q y and y ≤ x ⇒ x = y",
            |d, x, y, z| d.leq_q(x, y) && d.leq(y, x),
            |d, x, y, z| x == y,
        ),
        ident("P3.6.8", Iom, 2, "x ⊓ y ≤_Q y ≤_Q x ⊔ y", |d, x, y, z| {
            d.leq_q(d.meet(x, y), y) && d.leq_q(y, d.join(x, y))
        }),
        ident("P3.6.9", Iom, 2, "(x ⊔ y) → y = x → y", |d, x, y, z| d.imp(d.join(x, y), y) == d.imp(x, y)),
        ident("P3.6.10", Iom, 2, "x ⊓ y, y ⊓ x ≤_Q x → y", |d, x, y, z| {
            d.leq_q(d.meet(x, y), d.imp(x, y)) && d.leq_q(d.meet(y, x), d.imp(x, y))
        }),
        // P3.8
        ident("P3.8.1", Iom, 2, "(x ⊓ y) ⊓ y = x ⊓ y", |d, x, y, z| d.meet(d.meet(x, y), y) == d.meet(x, y)),
        ident("P3.8.2", Iom, 2, "x ⊔ (y ⊓ x) = x", |d, x, y, z| d.join(x, d.meet(y, x)) == x),
        ident("P3.8.3", Iom, 2, "x ⊓ (y ⊔ x) = x", |d, x, y, z| d.meet(x, d.join(y, x)) == x),
        ident("P3.8.4", Iom, 2, "x ⊓ y ≤_Q y ≤_Q x ⊔ y", |d, x, y, z| {
            d.leq_q(d.meet(x, y), y) && d.leq_q(y, d.join(x, y))
        }),
        ident("P3.8.5", Iom, 3, "(x ⊓ y) ⊓ (y ⊓ z) = (x ⊓ y) ⊓ z", |d, x, y, z| {
            d.meet(d.meet(x, y), d.meet(y, z)) == d.meet(d.meet(x, y), z)
        }),
        ident("P3.8.6", Iom, 3, "(x ⊔ y) ⊔ (y ⊔ z) = (x ⊔ y) ⊔ z", |d, x, y, z| {
            d.join(d.join(x, y), d.join(y, z)) == d.join(d.join(x, y), z)
        }),
        cond(
            "P3.8.7",
            Iom,
            3,
            "x ≤_Q y and y ≤_Q z ⇒ x ≤_Q z",
            |d, x, y, z| d.leq_q(x, y) && d.leq_q(y, z),
            |d, x, y, z| d.leq_q(x, z),
        ),
        ident("P3.8.8", Iom, 3, "(x → y) ⊔ (x → (z ⊓ y)) = x → y", |d, x, y, z| {
            d.join(d.imp(x, y), d.imp(x, d.meet(z, y))) == d.imp(x, y)
        }),
        ident("P3.8.9", Iom, 3, "(x → y) ⊔ ((z → x) → y) = x → y", |d, x, y, z| {
            d.join(d.imp(x, y), d.imp(d.imp(z, x), y)) == d.imp(x, y)
        }),
        // P3.10
        ident("P3.10.1", Iom, 3, "(z ⊓ x) → (y ⊓ x) = (z ⊓ x) → y", |d, x, y, z| {
            d.imp(d.meet(z, x), d.meet(y, x)) == d.imp(d.meet(z, x), y)
        }),
        ident("P3.10.2", Iom, 2, "(x → y)* ⊓ x = (x → y)*", |d, x, y, z| {
            d.meet(d.star(d.imp(x, y)), x) == d.star(d.imp(x, y))
        }),
        ident("P3.10.3", Iom, 2, "(x ⊓ y) ⊓ y = x ⊓ y", |d, x, y, z| d.meet(d.meet(x, y), y) == d.meet(x, y)),
        ident("P3.10.4", Iom, 3, "x → (y → z) = (x ⊙ y) → z", |d, x, y, z| {
            d.imp(x, d.imp(y, z)) == d.imp(d.prod(x, y), z)
        }),
        cond(
            "P3.10.5",
            Iom,
            3,
            "x ≤_Q y → z ⇒ x ⊙ y ≤ z",
            |d, x, y, z| d.leq_q(x, d.imp(y, z)),
            |d, x, y, z| d.leq(d.prod(x, y), z),
        ),
        cond(
            "P3.10.6",
            Iom,
            3,
            "x ⊙ y ≤ z ⇒ x ≤ y → z",
            |d, x, y, z| d.leq(d.prod(x, y), z),
            |d, x, y, z| d.leq(x, d.imp(y, z)),
        ),
        ident("P3.10.7", Iom, 2, "(x → y) ⊙ x ≤ y", |d, x, y, z| d.leq(d.prod(d.imp(x, y), x), y)),
        cond(
            "P3.10.8",
            Iom,
            3,
            "x ≤_Q y ⇒ x ⊙ z ≤_Q y ⊙ z",
            |d, x, y, z| d.leq_q(x, y),
            |d, x, y, z| d.leq_q(d.prod(x, z), d.prod(y, z)),
        ),
    ];
    v.sort_by_key(Law::sort_key);
    v
}

/// Named groups of laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Be,
    BoundedBe,
    InvolutiveBe,
    Iom,
    Qw,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Be, Suite::BoundedBe, Suite::InvolutiveBe, Suite::Iom, Suite::Qw, Suite::All];

    pub fn key(self) -> &'static str {
        match self {
            Suite::Be => "be",
            Suite::BoundedBe => "bounded-be",
            Suite::InvolutiveBe => "involutive-be",
            Suite::Iom => "iom",
            Suite::Qw => "qw",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, LawError> {
        Suite::ALL.into_iter().find(|x| x.key() == s).ok_or_else(|| LawError::UnknownSuite(s.to_string()))
    }

    /// Whether `law` belongs to the suite. The BE suites select by class;
    /// the others select by the group of results the law comes from.
    pub fn includes(self, law: &Law) -> bool {
        let group = &law.id[..law.id.rfind('.').unwrap_or(law.id.len())];
        match self {
            Suite::Be => law.class == LawClass::Be,
            Suite::BoundedBe => matches!(law.class, LawClass::Be | LawClass::BoundedBe),
            Suite::InvolutiveBe => matches!(group, "L2.1" | "P2.2" | "P2.3"),
            Suite::Qw => matches!(group, "P2.4" | "P2.5" | "P2.6" | "P2.7"),
            Suite::Iom => matches!(group, "P3.5" | "P3.6" | "P3.8" | "P3.10"),
            Suite::All => true,
        }
    }
}

/// Tables and class membership needed to evaluate laws on one algebra.
#[derive(Debug, Clone)]
pub struct LawContext {
    tables: DerivedTables,
    labels: ClassLabels,
}

impl LawContext {
    pub fn new(alg: &FiniteAlgebra) -> Self {
        let labels = classify(alg).labels;
        // Bounded-only laws use the formulas even when x** = x fails. Without
        // a zero only the BE laws apply and they never read zero.
        let tables = DerivedTables::compute_with_zero(alg, alg.zero().unwrap_or(alg.one()));
        LawContext { tables, labels }
    }

    pub fn tables(&self) -> &DerivedTables {
        &self.tables
    }

    pub fn labels(&self) -> &ClassLabels {
        &self.labels
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawVerdict {
    Pass,
    Fail(Vec<usize>),
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law_id: &'static str,
    pub verdict: LawVerdict,
}

/// Evaluates one law in a prepared context.
pub fn check_law_in(ctx: &LawContext, law: &Law) -> LawReport {
    let verdict = if !law.class.admits(&ctx.labels) {
        LawVerdict::NotApplicable(format!("not a {} algebra", law.class))
    } else {
        match law.first_counterexample(&ctx.tables) {
            None => LawVerdict::Pass,
            Some(w) => LawVerdict::Fail(w),
        }
    };
    LawReport { law_id: law.id, verdict }
}

pub fn check_law(alg: &FiniteAlgebra, law: &Law) -> LawReport {
    check_law_in(&LawContext::new(alg), law)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub reports: Vec<LawReport>,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

impl SuiteReport {
    pub fn all_applicable_pass(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_suite(alg: &FiniteAlgebra, suite: &str) -> Result<SuiteReport, LawError> {
    let suite = Suite::parse(suite)?;
    Ok(run_suite_in(&LawContext::new(alg), suite))
}

pub fn run_suite_in(ctx: &LawContext, suite: Suite) -> SuiteReport {
    let reports: Vec<LawReport> =
        law_registry().iter().filter(|l| suite.includes(l)).map(|l| check_law_in(ctx, l)).collect();
    let count = |f: fn(&LawVerdict) -> bool| reports.iter().filter(|r| f(&r.verdict)).count();
    SuiteReport {
        suite,
        passed: count(|v| matches!(v, LawVerdict::Pass)),
        failed: count(|v| matches!(v, LawVerdict::Fail(_))),
        not_applicable: count(|v| matches!(v, LawVerdict::NotApplicable(_))),
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{b2, e5};
    use std::collections::HashSet;

    #[test]
    fn registry_is_complete_and_unique() {
        let reg = law_registry();
        assert_eq!(reg.len(), 87);
        let ids: HashSet<_> = reg.iter().map(|l| l.id).collect();
        assert_eq!(ids.len(), reg.len());
        let per_group = |g: &str, k: usize| {
            for i in 1..=k {
                let id = format!("{g}.{i}");
                assert!(ids.contains(id.as_str()), "missing {id}");
            }
            assert!(!ids.contains(format!("{g}.{}", k + 1).as_str()));
        };
        per_group("L2.1", 9);
        per_group("P2.2", 10);
        per_group("P2.3", 7);
        per_group("P2.4", 10);
        per_group("P2.5", 4);
        per_group("P2.6", 8);
        per_group("P2.7", 7);
        per_group("P3.5", 5);
        per_group("P3.6", 10);
        per_group("P3.8", 9);
        per_group("P3.10", 8);
        assert_eq!(find_law("L2.1.5").unwrap().class, LawClass::InvolutiveBe);
        assert_eq!(find_law("P3.8.2").unwrap().class, LawClass::Iom);
        assert_eq!(find_law("P2.3.1").unwrap().kind, LawKind::Conditional);
        let pos = |id| reg.iter().position(|l| l.id == id).unwrap();
        assert!(pos("P3.8.9") < pos("P3.10.1"));
        assert!(pos("P2.2.9") < pos("P2.2.10"));
    }

    #[test]
    fn e5_examples() {
        let e5 = e5();
        assert_eq!(check_law(&e5, find_law("P3.6.1").unwrap()).verdict, LawVerdict::Pass);
        assert!(matches!(check_law(&e5, find_law("P2.4.1").unwrap()).verdict, LawVerdict::NotApplicable(_)));
    }

    #[test]
    fn suites_on_e5() {
        let e5 = e5();
        let inv = run_suite(&e5, "involutive-be").unwrap();
        assert_eq!(inv.reports.len(), 26);
        assert_eq!(inv.passed, 26, "{:?}", inv.reports);
        let iom = run_suite(&e5, "iom").unwrap();
        assert_eq!(iom.passed, 32, "{:?}", iom.reports);
        let qw = run_suite(&e5, "qw").unwrap();
        assert_eq!(qw.not_applicable, 29);
        assert!(matches!(run_suite(&e5, "nope"), Err(LawError::UnknownSuite(_))));
    }

    #[test]
    fn b2_passes_everything() {
        let r = run_suite(&b2(), "all").unwrap();
        assert_eq!(r.passed, 87, "{:?}", r.reports);
    }

    #[test]
    fn qw_only_laws_fail_on_e5() {
        let d = crate::algebra::build_derived(&e5()).unwrap();
        let failing: Vec<_> =
            law_registry().iter().filter_map(|l| l.first_counterexample(&d).map(|w| (l.id, w))).collect();
        assert_eq!(failing, vec![("P2.4.8", vec![1, 2]), ("P2.4.9", vec![2, 1])]);
        assert!(!find_law("P2.4.9").unwrap().holds_at(&d, &[2, 1]));
    }
}
