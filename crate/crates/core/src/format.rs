//! The `.alg` text format and the `name=value` state syntax.
//!
//! ```text
//! # comments run to the end of the line
//! elements: 0 a b c 1
//! one: 1
//! zero: 0
//! arrow:
//! 1 1 1 1 1
//! b 1 b 1 1
//! a 1 1 1 1
//! c 1 1 1 1
//! 0 a b c 1
//! ```
//!
//! Row `i`, column `j` of the `arrow:` block is `eᵢ → eⱼ` in declaration
//! order. `zero:` is optional.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{validate, FiniteAlgebra, RawAlgebra};
use crate::error::{AlgebraError, ParseError};
use crate::filters::RationalState;

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

/// Splits on whitespace and records the 1-based character column of each
/// token. Everything after `#` is dropped.
fn tokenize(number: usize, raw: &str) -> Line<'_> {
    let text = raw.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                tokens.push((c, &text[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        tokens.push((c, &text[b..]));
    }
    Line { number, tokens }
}

fn header<'a>(line: &Line<'a>, key: &str) -> Option<Vec<(usize, &'a str)>> {
    let (col, first) = *line.tokens.first()?;
    let rest = first.strip_prefix(key)?.strip_prefix(':')?;
    let mut out = Vec::new();
    if !rest.is_empty() {
        out.push((col + key.chars().count() + 1, rest));
    }
    out.extend(line.tokens[1..].iter().copied());
    Some(out)
}

fn single<'a>(line: &Line<'a>, key: &str, values: Vec<(usize, &'a str)>) -> Result<(usize, &'a str), ParseError> {
    match values.as_slice() {
        [v] => Ok(*v),
        [] => Err(ParseError::new(line.number, 1, format!("`{key}:` needs an element name"))),
        [_, (col, _), ..] => Err(ParseError::new(line.number, *col, format!("`{key}:` takes a single element name"))),
    }
}

/// Parses an `.alg` document.
///
/// ```
/// let alg = iomkit::format::parse_alg("elements: 0 1\none: 1\nzero: 0\narrow:\n1 1\n0 1\n").unwrap();
/// assert_eq!(alg.n(), 2);
/// ```
pub fn parse_alg(text: &str) -> Result<FiniteAlgebra, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| tokenize(i + 1, l)).filter(|l| !l.tokens.is_empty());
    let last_line = text.lines().count().max(1);

    let line = lines.next().ok_or_else(|| ParseError::new(last_line, 1, "missing `elements:` header"))?;
    let elements = header(&line, "elements")
        .ok_or_else(|| ParseError::new(line.number, line.tokens[0].0, "expected `elements:` header"))?;
    if elements.is_empty() {
        return Err(ParseError::new(line.number, 1, "`elements:` lists no elements"));
    }
    let elements_line = line.number;
    let names: Vec<String> = elements.iter().map(|(_, s)| s.to_string()).collect();
    for (i, (col, name)) in elements.iter().enumerate() {
        if names[..i].iter().any(|n| n == name) {
            return Err(ParseError::new(line.number, *col, format!("duplicate element name {name:?}")));
        }
    }
    let lookup = |line: usize, (col, name): (usize, &str)| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ParseError::new(line, col, format!("unknown element name {name:?}")))
    };

    let line = lines.next().ok_or_else(|| ParseError::new(last_line, 1, "missing `one:` header"))?;
    let one_values =
        header(&line, "one").ok_or_else(|| ParseError::new(line.number, line.tokens[0].0, "missing `one:` header"))?;
    let one = lookup(line.number, single(&line, "one", one_values)?)?;

    let mut line = lines.next().ok_or_else(|| ParseError::new(last_line, 1, "missing `arrow:` header"))?;
    let mut zero = None;
    if let Some(values) = header(&line, "zero") {
        zero = Some(lookup(line.number, single(&line, "zero", values)?)?);
        line = lines.next().ok_or_else(|| ParseError::new(last_line, 1, "missing `arrow:` header"))?;
    }
    match header(&line, "arrow") {
        Some(rest) if rest.is_empty() => {}
        Some(rest) => return Err(ParseError::new(line.number, rest[0].0, "rows start on the line after `arrow:`")),
        None => return Err(ParseError::new(line.number, line.tokens[0].0, "expected `arrow:` header")),
    }
    let arrow_line = line.number;

    let n = names.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines.next().ok_or_else(|| {
            ParseError::new(last_line, 1, format!("`arrow:` needs {n} rows, found {i} after line {arrow_line}"))
        })?;
        if line.tokens.len() != n {
            let col = line.tokens.get(n).map_or(1, |t| t.0);
            return Err(ParseError::new(
                line.number,
                col,
                format!("row {} has {} entries, expected {n}", i + 1, line.tokens.len()),
            ));
        }
        let row = line.tokens.iter().map(|&t| lookup(line.number, t)).collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(ParseError::new(extra.number, extra.tokens[0].0, "unexpected content after the arrow table"));
    }
    validate(RawAlgebra { names, rows, one: Some(one), zero }).map_err(|e| {
        let line = match e {
            AlgebraError::OneEqualsZero => elements_line + 1,
            _ => elements_line,
        };
        ParseError::new(line, 1, e.to_string())
    })
}

/// Writes an algebra in `.alg` form with aligned columns. Parsing the output
/// gives back an equal algebra.
pub fn serialize_alg(alg: &FiniteAlgebra) -> String {
    let width = alg.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    out.push_str("elements: ");
    out.push_str(&alg.names().join(" "));
    out.push('\n');
    out.push_str(&format!("one: {}\n", alg.name(alg.one())));
    if let Some(z) = alg.zero() {
        out.push_str(&format!("zero: {}\n", alg.name(z)));
    }
    out.push_str("arrow:\n");
    for x in 0..alg.n() {
        let cells: Vec<String> = (0..alg.n()).map(|y| format!("{:<width$}", alg.name(alg.imp(x, y)))).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Splits a comma-separated list of element names. Commas inside braces,
/// as in quotient names like `{a,1}`, do not split.
pub fn split_names(text: &str) -> Vec<&str> {
    split_assignments(text).into_iter().map(|(_, s)| s.trim()).filter(|s| !s.is_empty()).collect()
}

/// Splits on commas that are not inside braces, keeping 1-based columns.
fn split_assignments(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = (1, 0);
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push((start.0, &text[start.1..byte]));
                start = (col + 2, byte + 1);
            }
            _ => {}
        }
    }
    out.push((start.0, &text[start.1..]));
    out
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!q.is_zero()).then(|| BigRational::new(p, q))
}

/// Parses `name=p/q` or `name=k` assignments, one per element of `alg`.
///
/// ```
/// let b2 = iomkit::fixtures::b2();
/// let s = iomkit::format::parse_state("0=0, 1=1", &b2).unwrap();
/// assert_eq!(s.len(), 2);
/// ```
pub fn parse_state(text: &str, alg: &FiniteAlgebra) -> Result<RationalState, ParseError> {
    let mut values: Vec<Option<BigRational>> = vec![None; alg.n()];
    for (col, part) in split_assignments(text) {
        let lead = part.chars().take_while(|c| c.is_whitespace()).count();
        let col = col + lead;
        let part = part.trim();
        if part.is_empty() {
            return Err(ParseError::new(1, col, "empty assignment"));
        }
        let (name, value) = part
            .rsplit_once('=')
            .ok_or_else(|| ParseError::new(1, col, format!("expected name=value, got {part:?}")))?;
        let name = name.trim();
        let value_col = col + part.chars().count() - value.chars().count();
        let x = alg.index_of(name).ok_or_else(|| ParseError::new(1, col, format!("unknown element name {name:?}")))?;
        let r = parse_rational(value)
            .ok_or_else(|| ParseError::new(1, value_col, format!("malformed rational {:?}", value.trim())))?;
        if r.is_negative() || r > BigRational::one() {
            return Err(ParseError::new(1, value_col, format!("value {r} for {name} is outside [0,1]")));
        }
        if values[x].is_some() {
            return Err(ParseError::new(1, col, format!("duplicate assignment for {name}")));
        }
        values[x] = Some(r);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| ParseError::new(1, 1, format!("no value for element {}", alg.name(x)))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalState(values))
}
