use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use frobcrit::charalg::branch;
use frobcrit::criteria::{check_main, conjugated_borel_check, min_prime_for_surjectivity};
use frobcrit::registry::{example_cases, example_sp4, Expectation, EXAMPLE_NAMES};
use frobcrit::weyl::{verify_st_decomp, DEFAULT_ENUM_CAP};
use frobcrit::{CriterionInput, CriterionReport, RootSystem, Scalar, Weight, Q};
use serde_json::{json, Value};

mod descriptor;
mod render;

use descriptor::{parse_weight, CheckDocument, Descriptor};

const CAP_ENV: &str = "FROBCRIT_ENUM_CAP";

#[derive(Parser)]
#[command(
    name = "frobcrit",
    version,
    about = "Check Frobenius-splitting criteria for subgroup pairs acting on flag varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Weyl-group enumeration cap (overrides FROBCRIT_ENUM_CAP).
    #[arg(long, global = true)]
    enum_cap: Option<u128>,
    /// Permit --enum-cap above the default.
    #[arg(long, global = true)]
    allow_large_cap: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a check input document (path, inline JSON, or - for stdin).
    Check { input: String },
    /// List or run the built-in examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Verify sum of R_J^+ = rho_J - w_0^J rho_J over all simple types and subsets.
    VerifyIdentities {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Allow max rank above 6.
        #[arg(long)]
        force: bool,
    },
    /// Smallest p certified by the weight bound for surjectivity.
    MinP { embedding: String },
    /// Branching multiplicities of an irreducible G-module restricted to H.
    Branch { embedding: String, weight: String },
}

#[derive(Subcommand)]
enum ExamplesAction {
    List,
    Run {
        name: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
}

/// Failure classes mapped to exit codes.
enum Outcome {
    Ok,
    Mismatch,
}

fn read_source(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn enum_cap(cli: &Cli) -> Result<u128> {
    if let Some(cap) = cli.enum_cap {
        if cap > DEFAULT_ENUM_CAP && !cli.allow_large_cap {
            bail!(
                "--enum-cap {cap} exceeds the default {DEFAULT_ENUM_CAP}; pass --allow-large-cap"
            );
        }
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{CAP_ENV}={v:?} is not a non-negative integer")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUM_CAP),
        Err(e) => bail!("{CAP_ENV}: {e}"),
    }
}

fn emit(text: String) {
    print!("{text}");
}

fn report_value(r: &CriterionReport) -> Value {
    serde_json::to_value(r).expect("reports always serialize")
}

/// Runs cases, printing one combined document; returns whether all matched.
fn run_cases(
    format: Format,
    title: &str,
    cases: Vec<(String, CriterionInput, Option<Expectation>)>,
    cap: u128,
    single: bool,
) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut dot = format!(
        "digraph \"{}\" {{\n  node [shape=box];\n",
        title.replace('"', "'")
    );
    let mut text = String::new();
    let mut all_ok = true;
    for (i, (name, input, expect)) in cases.into_iter().enumerate() {
        let report = check_main(&input).with_context(|| name.clone())?;
        let mismatches = expect
            .as_ref()
            .map(|e| e.mismatches(&input, &report))
            .unwrap_or_default();
        all_ok &= mismatches.is_empty();
        for m in &mismatches {
            eprintln!("{name}: {m}");
        }
        match format {
            Format::Dot => render::report_dot(&mut dot, i, input.embedding.g(), &report, cap)?,
            Format::Text => {
                text.push_str(&render::report_text(&report));
                for m in &mismatches {
                    text.push_str(&format!("  MISMATCH {m}\n"));
                }
            }
            Format::Json => {}
        }
        rows.push((name, report, mismatches));
    }
    match format {
        Format::Json if single => emit(render::to_json_string(report_value(&rows[0].1))),
        Format::Json => {
            let cases: Vec<Value> = rows
                .iter()
                .map(|(name, r, m)| json!({"name": name, "report": report_value(r), "mismatches": m}))
                .collect();
            emit(render::to_json_string(
                json!({"example": title, "cases": cases, "ok": all_ok}),
            ));
        }
        Format::Text => emit(text),
        Format::Dot => {
            dot.push_str("}\n");
            emit(dot);
        }
    }
    Ok(if all_ok {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

fn run_sp4(format: Format) -> Result<Outcome> {
    let ex = example_sp4::<Q>()?;
    let all = ex.embedding.g().all_nodes();
    let checks = ex
        .conjugators
        .iter()
        .map(|x| conjugated_borel_check(&ex.embedding, x, &all))
        .collect::<frobcrit::Result<Vec<_>>>()?;
    let mut ok = checks.iter().zip(ex.expected).all(|(c, e)| c.dominant == e);
    let mut parabolic = Vec::new();
    for pc in &ex.parabolic_checks {
        let c = conjugated_borel_check(&ex.embedding, &ex.conjugators[pc.conjugator], &pc.subset)?;
        let matched = c.dominant == pc.expected_dominant && c.regular == pc.expected_regular;
        ok &= matched;
        parabolic.push(json!({
            "conjugator": format!("x{}", pc.conjugator + 1),
            "J": pc.subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "dominant": c.dominant,
            "regular": c.regular,
            "expected_dominant": pc.expected_dominant,
            "expected_regular": pc.expected_regular,
            "statement": pc.statement,
            "matched": matched,
        }));
    }
    match format {
        Format::Dot => emit(render::sp4_dot(&ex, &checks)),
        Format::Text => emit(render::sp4_text(&ex, &checks)),
        Format::Json => {
            let conj: Vec<Value> = ex
                .conjugators
                .iter()
                .zip(&checks)
                .enumerate()
                .map(|(i, (x, c))| {
                    json!({
                        "name": format!("x{}", i + 1),
                        "word": x.word().iter().map(|j| j + 1).collect::<Vec<_>>(),
                        "orbit": ex.nodes.iter().find(|n| n.conjugator == Some(i)).map(|n| n.label),
                        "dominant": c.dominant,
                        "regular": c.regular,
                        "expected": ex.expected[i],
                        "pairings": c.pairings.iter().map(|(root, v)| json!({"root": root, "value": v.render()})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let nodes: Vec<Value> = ex
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "label": n.label,
                        "closed_orbit_of": n.conjugator.map(|i| format!("x{}", i + 1)),
                        "split_by": n.split_by.map(|i| format!("x{}", i + 1)),
                    })
                })
                .collect();
            let edges: Vec<Value> = ex
                .edges
                .iter()
                .map(|e| json!({"upper": ex.nodes[e.upper].label, "lower": ex.nodes[e.lower].label, "double": e.double}))
                .collect();
            emit(render::to_json_string(json!({
                "example": "sp4",
                "embedding": ex.embedding.label(),
                "verdicts": checks.iter().map(|c| c.dominant).collect::<Vec<_>>(),
                "conjugators": conj,
                "parabolic_checks": parabolic,
                "diagram": {"nodes": nodes, "edges": edges},
                "compatible_pairs": ex.compatible_pairs,
                "ok": ok,
            })));
        }
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Mismatch })
}

fn identity_systems(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for (kind, lo) in [('A', 1), ('B', 2), ('C', 2), ('D', 4)] {
        for n in lo..=max_rank {
            out.push(format!("{kind}{n}"));
        }
    }
    for extra in ["G2", "F4", "E6"] {
        if !out.iter().any(|s| s == extra) {
            out.push(extra.into());
        }
    }
    out
}

fn verify_identities(format: Format, max_rank: usize, force: bool) -> Result<Outcome> {
    if max_rank > 6 && !force {
        bail!("--max-rank {max_rank} exceeds 6; pass --force");
    }
    let mut systems = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for spec in identity_systems(max_rank) {
        let rs: RootSystem = spec.parse()?;
        let n = rs.rank();
        let mut passed = 0usize;
        for mask in 0..(1usize << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let d = verify_st_decomp::<Q>(&rs, &subset)?;
            checked += 1;
            if d.equal {
                passed += 1;
            } else {
                failures.push(json!({
                    "type": spec,
                    "J": subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "lhs": d.lhs.render(),
                    "rhs": d.rhs.render(),
                }));
            }
        }
        systems.push(json!({"type": spec, "subsets": 1usize << n, "passed": passed}));
    }
    let ok = failures.is_empty();
    match format {
        Format::Text => {
            let mut s = String::new();
            for sys in &systems {
                s.push_str(&format!(
                    "{}: {}/{}\n",
                    sys["type"].as_str().unwrap_or("?"),
                    sys["passed"],
                    sys["subsets"]
                ));
            }
            s.push_str(&format!("checked {checked}, failures {}\n", failures.len()));
            emit(s);
        }
        _ => emit(render::to_json_string(json!({
            "max_rank": max_rank,
            "systems": systems,
            "checked": checked,
            "failures": failures,
            "ok": ok,
        }))),
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Mismatch })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cap = enum_cap(cli)?;
    match &cli.command {
        Command::Check { input } => {
            let text = read_source(input)?;
            let doc = CheckDocument::parse(&text)?;
            let (input, expect) = doc.into_input(cap)?;
            let name = input.embedding.label();
            run_cases(
                cli.format,
                &name,
                vec![(name.clone(), input, expect)],
                cap,
                true,
            )
        }
        Command::Examples {
            action: ExamplesAction::List,
        } => {
            match cli.format {
                Format::Text | Format::Dot => {
                    emit(EXAMPLE_NAMES.iter().map(|n| format!("{n}\n")).collect())
                }
                Format::Json => emit(render::to_json_string(json!({"examples": EXAMPLE_NAMES}))),
            }
            Ok(Outcome::Ok)
        }
        Command::Examples {
            action: ExamplesAction::Run { name, p },
        } => {
            if name == "sp4" {
                return run_sp4(cli.format);
            }
            let cases = example_cases::<Q>(name, *p)?
                .into_iter()
                .map(|c| {
                    let mut input = c.input;
                    input.enum_cap = cap;
                    (c.name, input, Some(c.expected))
                })
                .collect();
            run_cases(cli.format, name, cases, cap, false)
        }
        Command::VerifyIdentities { max_rank, force } => {
            verify_identities(cli.format, *max_rank, *force)
        }
        Command::MinP { embedding } => {
            let emb = Descriptor::parse(&read_source(embedding)?)?.build()?;
            let p = min_prime_for_surjectivity(&emb)?;
            match cli.format {
                Format::Json => emit(render::to_json_string(
                    json!({"embedding": emb.label(), "lemma53_min_p": p}),
                )),
                _ => emit(format!("{p}\n")),
            }
            Ok(Outcome::Ok)
        }
        Command::Branch { embedding, weight } => {
            let emb = Descriptor::parse(&read_source(embedding)?)?.build()?;
            let lambda = parse_weight(weight)?;
            let b = branch(&emb, &lambda)?;
            let mut map = serde_json::Map::new();
            for (nu, m) in &b {
                map.insert(Weight::from_ints(nu).to_string(), json!(m));
            }
            match cli.format {
                Format::Json => emit(render::to_json_string(Value::Object(map))),
                _ => emit(
                    b.iter()
                        .map(|(nu, m)| format!("{} x{m}\n", Weight::from_ints(nu)))
                        .collect(),
                ),
            }
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
