use std::fs;
use std::path::Path;

use iomkit::classify::{classify, sides, Outcome};
use iomkit::congruence::{check_commutativity_transfer, check_relation, congruence_from_ds, quotient, related_raw};
use iomkit::error::{CongruenceError, FilterError};
use iomkit::filters::{
    classify_filter, ds_mask, enumerate_subfamilies, filter_mask, generated_filter, is_ds, verify_bosbach,
    BosbachVerdict, BosbachViolation, FamilyKind, Verdict,
};
use iomkit::format::{parse_alg, parse_state, serialize_alg, split_names};
use iomkit::laws::{find_law, run_suite_in, LawContext, LawVerdict, Suite};
use iomkit::search::{find_models, parse_flags, ModelSpec};
use iomkit::{build_derived, DerivedTables, ElementSubset, FiniteAlgebra};
use serde_json::json;

use crate::report::{algebra_json, assignment, equation_detail, names, set_json, set_text, vars_for, Report, Witness};
use crate::{Command, UsageError};

type CmdResult = Result<Report, UsageError>;

pub(crate) fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Classify { file } => classify_cmd(&file),
        Command::Laws { file, suite } => laws_cmd(&file, &suite),
        Command::Filters { file, kind, classify } => filters_cmd(&file, &kind, classify),
        Command::Generate { file, elements } => generate_cmd(&file, &elements),
        Command::Congruence { file, ds, allow_filter } => congruence_cmd(&file, &ds, allow_filter),
        Command::Quotient { file, ds, output } => quotient_cmd(&file, &ds, output.as_deref()),
        Command::Transfer { file, ds } => transfer_cmd(&file, &ds),
        Command::State { file, values } => state_cmd(&file, &values),
        Command::Search { size, require, forbid, limit } => search_cmd(size, &require, &forbid, limit),
    }
}

fn load(path: &Path) -> Result<FiniteAlgebra, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    parse_alg(&text).map_err(|e| UsageError(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))
}

fn tables(alg: &FiniteAlgebra) -> Result<DerivedTables, UsageError> {
    build_derived(alg).map_err(|e| UsageError(format!("needs a bounded involutive BE algebra: {e}")))
}

/// Resolves a comma-separated list of element names. `X` stands for the
/// whole universe unless an element is called `X`.
fn resolve_set(alg: &FiniteAlgebra, text: &str) -> Result<ElementSubset, UsageError> {
    let parts = split_names(text);
    if parts.is_empty() {
        return Err(UsageError("empty element list".into()));
    }
    let mut set = ElementSubset::EMPTY;
    for p in parts {
        match alg.index_of(p) {
            Some(x) => set.insert(x),
            None if p == "X" => set = set.union(ElementSubset::full(alg.n())),
            None => return Err(UsageError(format!("unknown element name {p:?}"))),
        }
    }
    Ok(set)
}

fn verdict_witness(alg: &FiniteAlgebra, v: &Verdict) -> Option<Witness> {
    match v {
        Verdict::Holds => None,
        Verdict::Fails { condition, witness } => Some(Witness {
            check: condition.label().to_string(),
            tuple: names(alg, witness),
            detail: assignment(alg, vars_for(witness.len()), witness),
        }),
    }
}

fn tuple_witness(alg: &FiniteAlgebra, check: &str, tuple: &[usize]) -> Witness {
    Witness {
        check: check.to_string(),
        tuple: names(alg, tuple),
        detail: assignment(alg, vars_for(tuple.len()), tuple),
    }
}

/// Turns a failed internal agreement check into a reported failure; any
/// other error is a usage error.
fn filter_failure(rep: &mut Report, e: FilterError) -> Result<(), UsageError> {
    match e {
        FilterError::CharacterizationMismatch(m) => {
            rep.fail("", Witness { check: "characterization agreement".into(), tuple: Vec::new(), detail: m });
            Ok(())
        }
        other => Err(other.into()),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn classify_cmd(file: &Path) -> CmdResult {
    let alg = load(file)?;
    let report = classify(&alg);
    let mut rep = Report::new("classify");
    rep.algebra = Some(algebra_json(&alg));
    rep.line(format!("{}: {} elements", file.display(), alg.n()));
    rep.line("axioms");
    for e in &report.entries {
        let label = e.axiom.label();
        let (verdict, text) = match &e.outcome {
            Outcome::Holds => ("holds", format!("  ✓ {label:<10} {}", e.axiom.statement())),
            Outcome::Fails(t) => {
                let detail = equation_detail(&alg, e.axiom.statement(), t, sides(&alg, e.axiom, t));
                let w = Witness { check: label.to_string(), tuple: names(&alg, t), detail };
                let text = format!("  ✗ {label:<10} fails at {}", w.detail);
                rep.witnesses.push(w);
                ("fails", text)
            }
            Outcome::NotEvaluated(reason) => ("not-evaluated", format!("  - {label:<10} not evaluated: {reason}")),
        };
        rep.line(text);
        rep.results.push(json!({"kind": "axiom", "name": label, "statement": e.axiom.statement(), "verdict": verdict}));
    }
    let l = report.labels;
    rep.line("classes");
    for (name, holds) in [
        ("BE", l.is_be),
        ("bounded BE", l.is_bounded_be),
        ("involutive BE", l.is_involutive_be),
        ("IOM", l.is_iom),
        ("QW", l.is_qw),
        ("OM", l.is_om),
    ] {
        rep.line(format!("  {} {name}", mark(holds)));
        rep.results.push(json!({"kind": "class", "name": name, "verdict": if holds { "yes" } else { "no" }}));
    }
    let checks = report.cross_checks();
    if !checks.is_empty() {
        rep.line("cross-checks");
    }
    for c in checks {
        rep.results
            .push(json!({"kind": "cross-check", "name": c.name, "verdict": if c.holds { "holds" } else { "fails" }}));
        if c.holds {
            rep.line(format!("  ✓ {}", c.name));
        } else {
            rep.fail(
                "  ✗ ",
                Witness { check: c.name.to_string(), tuple: Vec::new(), detail: "the axiom verdicts above".into() },
            );
        }
    }
    Ok(rep)
}

fn laws_cmd(file: &Path, suite: &str) -> CmdResult {
    let alg = load(file)?;
    let suite = Suite::parse(suite)?;
    let ctx = LawContext::new(&alg);
    let report = run_suite_in(&ctx, suite);
    let mut rep = Report::new("laws");
    rep.algebra = Some(algebra_json(&alg));
    rep.line(format!("suite {} on {}", suite.key(), file.display()));
    for r in &report.reports {
        let law = find_law(r.law_id)?;
        let id = r.law_id;
        match &r.verdict {
            LawVerdict::Pass => {
                rep.line(format!("  ✓ {id:<9} {}", law.statement));
                rep.results.push(json!({"law": id, "statement": law.statement, "verdict": "pass"}));
            }
            LawVerdict::Fail(t) => {
                let detail = format!("{}: {}", assignment(&alg, &["x", "y", "z"], t), law.statement);
                rep.fail(&format!("  ✗ {id:<9} "), Witness { check: id.to_string(), tuple: names(&alg, t), detail });
                rep.results.push(json!({"law": id, "statement": law.statement, "verdict": "fail"}));
            }
            LawVerdict::NotApplicable(reason) => {
                rep.line(format!("  - {id:<9} not applicable: {reason}"));
                rep.results.push(
                    json!({"law": id, "statement": law.statement, "verdict": "not-applicable", "reason": reason}),
                );
            }
        }
    }
    rep.line(format!("{} passed, {} failed, {} not applicable", report.passed, report.failed, report.not_applicable));
    Ok(rep)
}

fn filters_cmd(file: &Path, kind: &str, with_classes: bool) -> CmdResult {
    let alg = load(file)?;
    let d = tables(&alg)?;
    let kind: FamilyKind = kind.parse().map_err(UsageError)?;
    let family = enumerate_subfamilies(&d, kind)?;
    let mut rep = Report::new("filters");
    rep.algebra = Some(algebra_json(&alg));
    let title = match kind {
        FamilyKind::Filter => "filters",
        FamilyKind::Ds => "deductive systems",
    };
    rep.line(format!("{title} ({})", family.len()));
    for f in family {
        rep.line(format!("  {}", set_text(&alg, f)));
        let mut entry = json!({"set": set_json(&alg, f), "text": set_text(&alg, f)});
        if with_classes {
            match classify_filter(&d, f) {
                Ok(c) => {
                    let mut notes = Vec::new();
                    notes.push(format!("{} proper", mark(c.is_proper)));
                    notes.push(match c.maximal_witness {
                        None => format!("{} maximal", mark(c.is_maximal)),
                        Some(x) => format!("✗ maximal (F({}) ≠ X)", alg.name(x)),
                    });
                    notes.push(match c.strongly_maximal_witness {
                        Some(x) if c.is_proper => format!("✗ strongly maximal (no (xⁿ)* in F for x={})", alg.name(x)),
                        _ => format!("{} strongly maximal", mark(c.is_strongly_maximal)),
                    });
                    notes.push(format!("{} deductive system", mark(c.is_ds)));
                    notes.push(format!("{} commutative", mark(c.is_commutative)));
                    for n in &notes {
                        rep.line(format!("      {n}"));
                    }
                    if let Some(w) = c.ds_witness.as_ref().and_then(|v| verdict_witness(&alg, v)) {
                        rep.line(format!("      {}", w.line()));
                        entry["ds_witness"] = json!(w);
                    }
                    if let Some(t) = &c.commutative_witness {
                        let w = tuple_witness(&alg, "CF", t);
                        rep.line(format!("      {}", w.line()));
                        entry["commutative_witness"] = json!(w);
                    }
                    entry["proper"] = json!(c.is_proper);
                    entry["maximal"] = json!(c.is_maximal);
                    entry["strongly_maximal"] = json!(c.is_strongly_maximal);
                    entry["ds"] = json!(c.is_ds);
                    entry["commutative"] = json!(c.is_commutative);
                }
                Err(e) => filter_failure(&mut rep, e)?,
            }
        }
        rep.results.push(entry);
    }
    Ok(rep)
}

fn generate_cmd(file: &Path, elements: &str) -> CmdResult {
    let alg = load(file)?;
    let d = tables(&alg)?;
    let gens = resolve_set(&alg, elements)?;
    let mut rep = Report::new("generate");
    rep.algebra = Some(algebra_json(&alg));
    match generated_filter(&d, gens) {
        Ok(g) => {
            rep.line(format!("filter generated by {} = {}", gens.display(&alg), set_text(&alg, g.filter)));
            let agreement = |o: Option<ElementSubset>, skipped: &str| match o {
                Some(_) => "agrees".to_string(),
                None => format!("skipped ({skipped})"),
            };
            rep.line(format!("  product formula: {}", agreement(g.by_formula, "not IOM")));
            rep.line(format!("  intersection of filters: {}", agreement(g.by_intersection, "too many elements")));
            rep.results.push(json!({
                "generators": set_json(&alg, gens),
                "filter": set_json(&alg, g.filter),
                "formula_checked": g.by_formula.is_some(),
                "intersection_checked": g.by_intersection.is_some(),
            }));
        }
        Err(e) => filter_failure(&mut rep, e)?,
    }
    Ok(rep)
}

/// Prints the DS verdict for `f`. Returns whether `f` is a DS.
fn require_ds(rep: &mut Report, alg: &FiniteAlgebra, d: &DerivedTables, f: ElementSubset) -> Result<bool, UsageError> {
    if ds_mask(d, f) {
        return Ok(true);
    }
    let v = match is_ds(d, f) {
        Ok(v) => v,
        Err(e) => {
            filter_failure(rep, e)?;
            return Ok(false);
        }
    };
    rep.line(format!("{} is not a deductive system", set_text(alg, f)));
    if let Some(w) = verdict_witness(alg, &v) {
        rep.fail("  ", w);
    }
    Ok(false)
}

fn congruence_failure(rep: &mut Report, alg: &FiniteAlgebra, e: CongruenceError) -> Result<(), UsageError> {
    match e {
        CongruenceError::Violation { property, witness } => {
            rep.fail("  ", tuple_witness(alg, property, &witness));
            Ok(())
        }
        CongruenceError::CharacterizationMismatch { x, y } => {
            rep.fail("  ", tuple_witness(alg, "characterization agreement", &[x, y]));
            Ok(())
        }
        CongruenceError::TransferMismatch { base, quotient } => {
            let detail = format!("F commutative = {base}, quotient DS all commutative = {quotient}");
            rep.fail("  ", Witness { check: "commutativity transfer".into(), tuple: Vec::new(), detail });
            Ok(())
        }
        CongruenceError::ClassOfOneNotDs => {
            let detail = "class of one".to_string();
            rep.fail("  ", Witness { check: "deductive system".into(), tuple: Vec::new(), detail });
            Ok(())
        }
        CongruenceError::Filter(f) => filter_failure(rep, f),
        other => Err(other.into()),
    }
}

fn class_lines(rep: &mut Report, alg: &FiniteAlgebra, blocks: &[ElementSubset]) {
    for b in blocks {
        rep.line(format!("  {}", b.display(alg)));
    }
}

fn congruence_cmd(file: &Path, ds: &str, allow_filter: bool) -> CmdResult {
    let alg = load(file)?;
    let d = tables(&alg)?;
    let f = resolve_set(&alg, ds)?;
    let mut rep = Report::new("congruence");
    rep.algebra = Some(algebra_json(&alg));
    if require_ds(&mut rep, &alg, &d, f)? {
        match congruence_from_ds(&d, f) {
            Ok(p) => {
                let blocks = p.blocks();
                rep.line(format!("classes of ≡ for F = {} ({})", set_text(&alg, f), blocks.len()));
                class_lines(&mut rep, &alg, &blocks);
                rep.line("  ✓ equivalence, compatible with * ⊙ → ⊔ ⊓");
                let classes: Vec<_> = blocks.iter().map(|b| set_json(&alg, *b)).collect();
                rep.results.push(json!({"ds": set_json(&alg, f), "classes": classes, "congruence": true}));
            }
            Err(e) => congruence_failure(&mut rep, &alg, e)?,
        }
        return Ok(rep);
    }
    if !allow_filter {
        return Ok(rep);
    }
    if !filter_mask(&d, f) {
        rep.line(format!("{} is not a filter either", set_text(&alg, f)));
        return Ok(rep);
    }
    let n = alg.n();
    let rel: Vec<bool> = (0..n * n).map(|i| related_raw(&d, f, i / n, i % n)).collect();
    rep.line(format!("relation for the filter {}", set_text(&alg, f)));
    for x in 0..n {
        let related: Vec<&str> = (0..n).filter(|&y| rel[x * n + y]).map(|y| alg.name(y)).collect();
        rep.line(format!("  {} ≡ {}", alg.name(x), related.join(", ")));
    }
    let pairs: Vec<Vec<&str>> =
        (0..n * n).filter(|&i| rel[i]).map(|i| vec![alg.name(i / n), alg.name(i % n)]).collect();
    let congruence = match check_relation(&d, &rel) {
        Ok(()) => {
            rep.line("  ✓ equivalence, compatible with * ⊙ → ⊔ ⊓");
            true
        }
        Err(e) => {
            congruence_failure(&mut rep, &alg, e)?;
            false
        }
    };
    rep.results.push(json!({"filter": set_json(&alg, f), "pairs": pairs, "congruence": congruence}));
    Ok(rep)
}

fn quotient_cmd(file: &Path, ds: &str, output: Option<&Path>) -> CmdResult {
    let alg = load(file)?;
    let d = tables(&alg)?;
    let f = resolve_set(&alg, ds)?;
    let mut rep = Report::new("quotient");
    rep.algebra = Some(algebra_json(&alg));
    if !require_ds(&mut rep, &alg, &d, f)? {
        return Ok(rep);
    }
    let q = match quotient(&alg, f) {
        Ok(q) => q,
        Err(e) => {
            congruence_failure(&mut rep, &alg, e)?;
            return Ok(rep);
        }
    };
    let text = serialize_alg(&q.algebra);
    let k = q.algebra.n();
    rep.line(format!("X/F for F = {}: {k} {}", set_text(&alg, f), if k == 1 { "class" } else { "classes" }));
    if !q.supported {
        rep.line("  note: the source is not IOM, so nothing is guaranteed about X/F");
    }
    rep.line(format!("  {} quotient is IOM", mark(q.quotient_is_iom)));
    if q.supported && !q.quotient_is_iom {
        rep.fail("  ", Witness { check: "quotient is IOM".into(), tuple: Vec::new(), detail: "X/F".into() });
    }
    if let Some(path) = output {
        fs::write(path, &text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        rep.line(format!("wrote {}", path.display()));
    } else {
        rep.human.push_str(&text);
    }
    let projection: Vec<&str> = q.projection.iter().map(|&c| q.algebra.name(c)).collect();
    rep.results.push(json!({
        "ds": set_json(&alg, f),
        "quotient": algebra_json(&q.algebra),
        "projection": projection,
        "supported": q.supported,
        "quotient_is_iom": q.quotient_is_iom,
    }));
    Ok(rep)
}

fn transfer_cmd(file: &Path, ds: &str) -> CmdResult {
    let alg = load(file)?;
    let d = tables(&alg)?;
    let f = resolve_set(&alg, ds)?;
    let mut rep = Report::new("transfer");
    rep.algebra = Some(algebra_json(&alg));
    if !require_ds(&mut rep, &alg, &d, f)? {
        return Ok(rep);
    }
    match check_commutativity_transfer(&alg, f) {
        Ok((base, all)) => {
            rep.line(format!("F = {}", set_text(&alg, f)));
            rep.line(format!("  {} F is commutative", mark(base)));
            rep.line(format!("  {} every deductive system of X/F is commutative", mark(all)));
            rep.line("  ✓ the two agree");
            rep.results.push(json!({"ds": set_json(&alg, f), "commutative": base, "quotient_all_commutative": all}));
        }
        Err(e) => congruence_failure(&mut rep, &alg, e)?,
    }
    Ok(rep)
}

fn state_cmd(file: &Path, values: &str) -> CmdResult {
    let alg = load(file)?;
    let d = tables(&alg)?;
    let s =
        parse_state(values, &alg).map_err(|e| UsageError(format!("--values, column {}: {}", e.column, e.message)))?;
    let mut rep = Report::new("state");
    rep.algebra = Some(algebra_json(&alg));
    let shown: Vec<String> = (0..alg.n()).map(|x| format!("{}={}", alg.name(x), s.value(x))).collect();
    rep.line(format!("state {}", shown.join(", ")));
    let value_json: Vec<_> = (0..alg.n()).map(|x| json!([alg.name(x), s.value(x).to_string()])).collect();
    match verify_bosbach(&d, &s) {
        Ok(BosbachVerdict::Accepted { kernel }) => {
            rep.line(format!("  ✓ accepted, kernel {} is a commutative deductive system", set_text(&alg, kernel)));
            rep.results.push(json!({"values": value_json, "accepted": true, "kernel": set_json(&alg, kernel)}));
        }
        Ok(BosbachVerdict::Rejected(v)) => {
            let w = match v {
                BosbachViolation::OutOfRange { element } => {
                    let detail =
                        format!("{}: value {} outside [0,1]", assignment(&alg, &["x"], &[element]), s.value(element));
                    Witness { check: "range".into(), tuple: names(&alg, &[element]), detail }
                }
                BosbachViolation::Bs1 { element } => {
                    let detail = format!("s({}) = {}", alg.name(element), s.value(element));
                    Witness { check: "bs1".into(), tuple: names(&alg, &[element]), detail }
                }
                BosbachViolation::Bs2 { x, y } => {
                    let (xy, yx) = (d.imp(x, y), d.imp(y, x));
                    let (nx, ny) = (alg.name(x), alg.name(y));
                    let detail = format!(
                        "x={nx}, y={ny}: s({nx}) + s({nx} → {ny}) = {}, s({ny}) + s({ny} → {nx}) = {}",
                        s.value(x) + s.value(xy),
                        s.value(y) + s.value(yx)
                    );
                    Witness { check: "bs2".into(), tuple: names(&alg, &[x, y]), detail }
                }
            };
            rep.fail("  ✗ rejected: ", w);
            rep.results.push(json!({"values": value_json, "accepted": false}));
        }
        Err(e) => filter_failure(&mut rep, e)?,
    }
    Ok(rep)
}

fn search_cmd(size: usize, require: &str, forbid: &str, limit: Option<usize>) -> CmdResult {
    let require = parse_flags(require)?;
    let forbid = parse_flags(forbid)?;
    let mut spec = ModelSpec::new(size).require(&require).forbid(&forbid);
    if let Some(k) = limit {
        spec = spec.limit(k);
    }
    let result = find_models(&spec)?;
    let mut rep = Report::new("search");
    let list = |flags: &[iomkit::search::ClassFlag]| flags.iter().map(|f| f.key()).collect::<Vec<_>>().join(",");
    let mut title = format!("size {size}");
    if !require.is_empty() {
        title.push_str(&format!(", require {}", list(&require)));
    }
    if !forbid.is_empty() {
        title.push_str(&format!(", forbid {}", list(&forbid)));
    }
    let k = result.models.len();
    rep.line(format!("{title}: {k} {}", if k == 1 { "model" } else { "models" }));
    for (i, m) in result.models.iter().enumerate() {
        rep.line("");
        rep.line(format!("# model {}", i + 1));
        rep.human.push_str(&serialize_alg(m));
        rep.results.push(json!({"index": i + 1, "algebra": algebra_json(m)}));
    }
    let c = &result.census;
    rep.line("");
    let mode = if result.exhaustive { "exhaustive" } else { "partial" };
    rep.line(format!("census ({mode}): {} visited, {} matching", c.models, c.matching));
    for (flag, count) in &c.per_class {
        rep.line(format!("  {:<5} {count}", flag.key()));
    }
    let per_class: serde_json::Map<String, serde_json::Value> =
        c.per_class.iter().map(|(f, n)| (f.key().to_string(), json!(n))).collect();
    rep.census = Some(json!({
        "exhaustive": result.exhaustive,
        "models": c.models,
        "matching": c.matching,
        "per_class": per_class,
        "cross_check_violations": c.cross_check_violations,
    }));
    if c.cross_check_violations > 0 {
        let detail = format!("{} models", c.cross_check_violations);
        rep.fail("  ✗ ", Witness { check: "census cross-checks".into(), tuple: Vec::new(), detail });
    } else {
        rep.line("  ✓ no cross-check violations");
    }
    Ok(rep)
}
