//! Output rendering: canonical JSON, plain text and Graphviz DOT.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::Result;
use frobcrit::criteria::ORBIT_LABEL_LIMIT;
use frobcrit::criteria::{ConjugatedCheck, Surjectivity};
use frobcrit::weyl::{enumerate, group_order};
use frobcrit::{CriterionReport, RootSystem, Scalar, Sp4Example, Q};
use serde_json::{Map, Value};

/// Recursively sorts object keys so output bytes do not depend on the map
/// implementation serde_json was built with.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, canonical(v));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn to_json_string(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&canonical(v)).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join("")
    }
}

pub fn report_text(r: &CriterionReport) -> String {
    let mut s = String::new();
    let h = &r.hypotheses;
    let j: Vec<String> = r.input.subset.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        s,
        "embedding {} (G = {}, H = {}), J = {{{}}}, p = {}",
        r.input.embedding,
        r.input.g,
        r.input.h,
        j.join(","),
        r.input.p
    );
    let _ = writeln!(s, "  2 rho_H - rho_J|_T_H = ({})", h.weight.join(", "));
    let _ = writeln!(s, "  dominant: {}, regular: {}", h.dominance, h.regular);
    match &h.surjectivity {
        Surjectivity::Holds { source, reason } => {
            let name = serde_json::to_value(source).unwrap_or(Value::Null);
            let _ = writeln!(
                s,
                "  surjectivity: holds via {} ({reason})",
                name.as_str().unwrap_or("?")
            );
        }
        Surjectivity::Unknown { reason } => {
            let _ = writeln!(s, "  surjectivity: unknown ({reason})");
        }
    }
    let _ = writeln!(
        s,
        "  lie separability: {} ({})",
        h.lie_separability, h.lie_separability_reason
    );
    let _ = writeln!(s, "  lemma53_min_p: {}", r.lemma53_min_p);
    if r.conclusions.is_empty() {
        let _ = writeln!(s, "  no conclusions");
    }
    for c in &r.conclusions {
        let tag = serde_json::to_value(c.tag).unwrap_or(Value::Null);
        let _ = writeln!(s, "  {}: {}", tag.as_str().unwrap_or("?"), c.statement);
    }
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `W_J` under the right weak order, one cluster per report.
pub fn report_dot(
    out: &mut String,
    index: usize,
    rs: &RootSystem,
    r: &CriterionReport,
    cap: u128,
) -> Result<()> {
    let tags: Vec<String> = r
        .conclusions
        .iter()
        .filter_map(|c| {
            serde_json::to_value(c.tag)
                .ok()?
                .as_str()
                .map(str::to_string)
        })
        .collect();
    let subset: Vec<usize> = r.input.subset.iter().map(|i| i - 1).collect();
    let head = format!(
        "{} J={:?} p={}",
        r.input.embedding, r.input.subset, r.input.p
    );
    let verdict = if tags.is_empty() {
        "no conclusions".to_string()
    } else {
        tags.join(", ")
    };
    let _ = writeln!(out, "  subgraph cluster_{index} {{");
    let _ = writeln!(
        out,
        "    label=\"{}\\n{}\";",
        dot_escape(&head),
        dot_escape(&verdict)
    );
    let truncated = group_order(rs, &subset)? > ORBIT_LABEL_LIMIT.min(cap);
    if truncated {
        let _ = writeln!(
            out,
            "    c{index}_note [shape=note, label=\"W_J too large to draw\"];"
        );
    } else {
        let elems = enumerate(rs, &subset, cap)?;
        let pos: HashMap<_, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        for (i, w) in elems.iter().enumerate() {
            let word: Vec<usize> = w.word().iter().map(|i| i + 1).collect();
            let _ = writeln!(out, "    c{index}_{i} [label=\"{}\"];", word_text(&word));
        }
        for (i, w) in elems.iter().enumerate() {
            for &j in &subset {
                if !w.has_right_descent(j) {
                    let next = w.mul_simple(rs, j)?;
                    let _ = writeln!(
                        out,
                        "    c{index}_{i} -> c{index}_{} [label=\"s{}\"];",
                        pos[&next],
                        j + 1
                    );
                }
            }
        }
    }
    let _ = writeln!(out, "  }}");
    Ok(())
}

pub fn sp4_dot(ex: &Sp4Example, checks: &[ConjugatedCheck<Q>]) -> String {
    let mut s = String::from("graph sp4_orbit_closures {\n  rankdir=TB;\n  node [shape=box];\n");
    for node in &ex.nodes {
        let mut lines = vec![node.label.to_string()];
        if let Some(i) = node.conjugator {
            let c = &checks[i];
            lines.push(format!(
                "H-orbit of B_{}: {}",
                i + 1,
                if c.dominant {
                    "dominant"
                } else {
                    "not dominant"
                }
            ));
        }
        if let Some(i) = node.split_by {
            let c = &checks[i];
            let mut tag = format!("SPLIT_PJ via B_{}", i + 1);
            if c.regular {
                tag.push_str(", GLOBALLY_F_REGULAR");
            }
            lines.push(tag);
        }
        let escaped: Vec<String> = lines.iter().map(|l| dot_escape(l)).collect();
        let _ = writeln!(s, "  {} [label=\"{}\"];", node.label, escaped.join("\\n"));
    }
    for e in &ex.edges {
        let style = if e.double {
            " [color=\"black:black\"]"
        } else {
            ""
        };
        let _ = writeln!(
            s,
            "  {} -- {}{};",
            ex.nodes[e.upper].label, ex.nodes[e.lower].label, style
        );
    }
    s.push_str("}\n");
    s
}

pub fn sp4_text(ex: &Sp4Example, checks: &[ConjugatedCheck<Q>]) -> String {
    let mut s = String::from("Sp4 with H the Levi subgroup of the short simple root\n");
    for (i, (x, c)) in ex.conjugators.iter().zip(checks).enumerate() {
        let word: Vec<usize> = x.word().iter().map(|j| j + 1).collect();
        let values: Vec<String> = c.pairings.iter().map(|(_, v)| v.render()).collect();
        let _ = writeln!(
            s,
            "  x{} = {}: dominant {} (expected {}), regular {}, pairings [{}]",
            i + 1,
            word_text(&word),
            c.dominant,
            ex.expected[i],
            c.regular,
            values.join(", ")
        );
    }
    s
}
