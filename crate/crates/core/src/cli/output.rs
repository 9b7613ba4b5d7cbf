//! Report rendering: JSON lines and aligned text tables.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use super::render::render_poly;
use crate::cubic::CubicFamily;
use crate::solver::{HypothesisReport, Irreducibility, SearchReport, Solution};

/// Agreement of the radical formula with integer roots where `D(y0) < 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CardanoCheck {
    pub checked: usize,
    pub agree: usize,
}

/// Exact JSON number for an arbitrary-size integer.
pub fn big_json(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer is a JSON number"))
}

fn opt_big_json(n: Option<&BigInt>) -> Value {
    n.map_or(Value::Null, big_json)
}

pub fn solution_json(s: &Solution) -> Value {
    let cof = s.cofactor.as_ref();
    json!({
        "y0": big_json(&s.y0),
        "x0": big_json(&s.x0),
        "w0": opt_big_json(s.w0.as_ref()),
        "classification": s.classification.tag(),
        "field_disc": opt_big_json(cof.and_then(|c| c.field_disc.as_ref())),
        "r": opt_big_json(cof.and_then(|c| c.r.as_ref())),
        "comment_holds": cof.and_then(|c| c.comment_holds).map_or(Value::Null, Value::Bool),
    })
}

pub fn hypotheses_json(h: &HypothesisReport) -> Value {
    let witness = match h.irreducibility {
        Irreducibility::ProvenBySpecialization(y) => json!(y),
        Irreducibility::Unknown => Value::Null,
    };
    json!({
        "mod3": h.mod3.tag(),
        "mod3_residues": h.mod3.vanishing_residues(),
        "simple_roots": h.simple_root_count,
        "irreducibility_witness": witness,
        "obstruction": h.obstruction,
        "passed": h.passed(),
        "violations": h.violations(),
        "warnings": h.warnings(),
    })
}

pub fn summary_json(name: Option<&str>, report: &SearchReport, cardano: CardanoCheck) -> Value {
    let mut map = Map::new();
    if let Some(name) = name {
        map.insert("name".into(), json!(name));
    }
    let pc = &report.pass_classes;
    let warnings: Vec<Value> = report
        .budget_warnings
        .iter()
        .map(|w| json!({"y0": big_json(&w.y0), "kind": w.kind.tag(), "detail": w.detail}))
        .collect();
    let fraction = report
        .rational_w_fraction
        .and_then(Number::from_f64)
        .map_or(Value::Null, Value::Number);
    map.insert("tested".into(), json!(report.tested_count));
    map.insert("filter_pass".into(), json!(report.filter_pass_count));
    map.insert("solutions".into(), json!(report.solution_count()));
    map.insert("rational_w_fraction".into(), fraction);
    map.insert("hypotheses".into(), hypotheses_json(&report.hypotheses));
    map.insert("mode".into(), json!(report.mode.tag()));
    map.insert("bound".into(), json!(report.bound));
    map.insert(
        "pass_classes".into(),
        json!({
            "repeated_roots": pc.repeated_roots,
            "reducible": pc.reducible,
            "irreducible_metacyclic": pc.irreducible_metacyclic,
            "irreducible_cyclic_q": pc.irreducible_cyclic_q,
        }),
    );
    map.insert("budget_warnings".into(), Value::Array(warnings));
    map.insert("cardano".into(), json!({"checked": cardano.checked, "agree": cardano.agree}));
    Value::Object(map)
}

/// One solution per line followed by the summary object.
pub fn report_json_lines(name: Option<&str>, report: &SearchReport, cardano: CardanoCheck) -> String {
    let mut out = String::new();
    for s in &report.solutions {
        out.push_str(&solution_json(s).to_string());
        out.push('\n');
    }
    out.push_str(&summary_json(name, report, cardano).to_string());
    out.push('\n');
    out
}

fn opt_str<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn hypotheses_text(fam: &CubicFamily, h: &HypothesisReport) -> String {
    let mut out = format!(
        "f(x, y) = x^3 + ({})*x + ({})\nD(y) = {}\n",
        render_poly(fam.p()),
        render_poly(fam.q()),
        render_poly(fam.disc())
    );
    let witness = match h.irreducibility {
        Irreducibility::ProvenBySpecialization(y) => format!("irreducible (witness y0 = {y})"),
        Irreducibility::Unknown => "irreducibility unknown".to_string(),
    };
    out.push_str(&format!(
        "p mod 3: {} {:?}; simple roots of D: {}; {}; obstruction: {}\n",
        h.mod3.tag(),
        h.mod3.vanishing_residues(),
        opt_str(h.simple_root_count),
        witness,
        if h.obstruction { "yes" } else { "no" }
    ));
    for v in h.violations() {
        out.push_str(&format!("violation: {v}\n"));
    }
    for w in h.warnings() {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

pub fn report_table(name: Option<&str>, fam: &CubicFamily, report: &SearchReport, cardano: CardanoCheck) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(&format!("== {name}\n"));
    }
    out.push_str(&hypotheses_text(fam, &report.hypotheses));

    let header = ["y0", "x0", "w0", "classification", "field_disc", "r", "comment_holds"];
    let rows: Vec<[String; 7]> = report
        .solutions
        .iter()
        .map(|s| {
            let cof = s.cofactor.as_ref();
            [
                s.y0.to_string(),
                s.x0.to_string(),
                opt_str(s.w0.as_ref()),
                s.classification.tag().to_string(),
                opt_str(cof.and_then(|c| c.field_disc.as_ref())),
                opt_str(cof.and_then(|c| c.r.as_ref())),
                opt_str(cof.and_then(|c| c.comment_holds)),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[&str]| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.push_str(&line(&header));
    out.push('\n');
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        out.push_str(&line(&cells));
        out.push('\n');
    }
    out.push_str(&format!(
        "mode {}, bound {}: tested {}, filter passes {}, solutions {}",
        report.mode.tag(),
        report.bound,
        report.tested_count,
        report.filter_pass_count,
        report.solution_count()
    ));
    if let Some(f) = report.rational_w_fraction {
        out.push_str(&format!(", rational w fraction {f:.4}"));
    }
    out.push('\n');
    let pc = &report.pass_classes;
    out.push_str(&format!(
        "filter passes by type: repeated {}, reducible {}, metacyclic {}, cyclic {}\n",
        pc.repeated_roots, pc.reducible, pc.irreducible_metacyclic, pc.irreducible_cyclic_q
    ));
    out.push_str(&format!("cardano cross-check: {}/{} agree\n", cardano.agree, cardano.checked));
    for w in &report.budget_warnings {
        out.push_str(&format!("budget warning at y0 = {} ({}): {}\n", w.y0, w.kind.tag(), w.detail));
    }
    out
}
