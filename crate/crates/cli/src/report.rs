//! Human and JSON rendering of command results.

use iomkit::{ElementSubset, FiniteAlgebra};
use serde::Serialize;
use serde_json::{json, Value};

/// A failed check, named in element names. `detail` is the text printed
/// after "fails at" in human output.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub check: String,
    pub tuple: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn line(&self) -> String {
        format!("{} fails at {}", self.check, self.detail)
    }
}

/// Everything a command produced. Both renderings are built from the same
/// values, so they always agree on verdicts and witnesses.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub algebra: Option<Value>,
    pub results: Vec<Value>,
    pub witnesses: Vec<Witness>,
    pub census: Option<Value>,
    pub human: String,
    pub code: i32,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            algebra: None,
            results: Vec::new(),
            witnesses: Vec::new(),
            census: None,
            human: String::new(),
            code: 0,
        }
    }

    pub fn line(&mut self, text: impl AsRef<str>) {
        self.human.push_str(text.as_ref());
        self.human.push('\n');
    }

    /// Records a failed check, prints it after `indent` and sets exit code 1.
    pub fn fail(&mut self, indent: &str, w: Witness) {
        self.line(format!("{indent}{}", w.line()));
        self.witnesses.push(w);
        self.code = 1;
    }

    pub fn to_json(&self) -> String {
        let value = json!({
            "command": self.command,
            "algebra": self.algebra,
            "results": self.results,
            "witnesses": self.witnesses,
            "census": self.census,
            "exit_code": self.code,
        });
        let mut s = serde_json::to_string_pretty(&value).expect("report values serialize");
        s.push('\n');
        s
    }
}

pub fn algebra_json(alg: &FiniteAlgebra) -> Value {
    let rows: Vec<Vec<&str>> = alg.rows().iter().map(|r| r.iter().map(|&v| alg.name(v)).collect()).collect();
    json!({
        "elements": alg.names(),
        "one": alg.name(alg.one()),
        "zero": alg.zero().map(|z| alg.name(z)),
        "arrow": rows,
    })
}

/// `X` for the whole universe, brace notation otherwise.
pub fn set_text(alg: &FiniteAlgebra, s: ElementSubset) -> String {
    if s == ElementSubset::full(alg.n()) {
        "X".to_string()
    } else {
        s.display(alg).to_string()
    }
}

pub fn set_json(alg: &FiniteAlgebra, s: ElementSubset) -> Vec<String> {
    s.iter().map(|x| alg.name(x).to_string()).collect()
}

pub fn names(alg: &FiniteAlgebra, tuple: &[usize]) -> Vec<String> {
    tuple.iter().map(|&x| alg.name(x).to_string()).collect()
}

/// Variable letters for a witness tuple of the given length.
pub fn vars_for(len: usize) -> &'static [&'static str] {
    match len {
        0 => &[],
        1 => &["x"],
        2 => &["x", "y"],
        3 => &["x", "y", "z"],
        _ => &["x", "y", "u", "v"],
    }
}

/// `x=b, y=a` for the given variable letters.
pub fn assignment(alg: &FiniteAlgebra, vars: &[&str], tuple: &[usize]) -> String {
    vars.iter().zip(tuple).map(|(v, &x)| format!("{v}={}", alg.name(x))).collect::<Vec<_>>().join(", ")
}

/// Replaces the variables and constants of a statement by element names.
pub fn instantiate(alg: &FiniteAlgebra, statement: &str, tuple: &[usize]) -> String {
    let mut out = String::new();
    for ch in statement.chars() {
        let element = match ch {
            'x' => tuple.first().copied(),
            'y' => tuple.get(1).copied(),
            'z' => tuple.get(2).copied(),
            '1' => Some(alg.one()),
            '0' => alg.zero(),
            _ => None,
        };
        match element {
            Some(e) => out.push_str(alg.name(e)),
            None => out.push(ch),
        }
    }
    out
}

/// Detail text for an equation failing at `tuple`: the assignment followed
/// by each instantiated side with its value, as in
/// `x=b, y=a: b → (b ⊓ a) = a, b → a = 1`.
pub fn equation_detail(alg: &FiniteAlgebra, statement: &str, tuple: &[usize], sides: Option<(usize, usize)>) -> String {
    let head = assignment(alg, &["x", "y", "z"], tuple);
    let parts: Vec<&str> = statement.split(" = ").collect();
    match (sides, parts.as_slice()) {
        (Some((l, r)), [lhs, rhs]) => format!(
            "{head}: {} = {}, {} = {}",
            instantiate(alg, lhs, tuple),
            alg.name(l),
            instantiate(alg, rhs, tuple),
            alg.name(r)
        ),
        (Some((l, r)), _) => format!("{head}: sides evaluate to {} and {}", alg.name(l), alg.name(r)),
        (None, _) => head,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use iomkit::fixtures;

    #[test]
    fn qw1_detail_on_e5() {
        let e5 = fixtures::e5();
        let d = equation_detail(&e5, "x → (x ⊓ y) = x → y", &[2, 1], Some((1, 4)));
        assert_eq!(d, "x=b, y=a: b → (b ⊓ a) = a, b → a = 1");
    }

    #[test]
    fn full_set_is_x() {
        let e5 = fixtures::e5();
        assert_eq!(set_text(&e5, ElementSubset::full(5)), "X");
        assert_eq!(set_text(&e5, ElementSubset::from_mask(0b10010)), "{a,1}");
    }
}
