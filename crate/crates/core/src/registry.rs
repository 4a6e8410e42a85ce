//! Curated pairs: Donkin-pair records and ready-to-run example inputs.

use crate::criteria::{CriterionInput, CriterionReport, SurjectivitySource, Tag, TriState};
use crate::embed::{Embedding, Provenance};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weyl::WeylElement;

/// A sufficient condition for restriction to preserve good filtrations.
#[derive(Clone, Debug)]
pub struct DonkinPairRecord {
    pub name: &'static str,
    pub matcher: fn(&Provenance) -> bool,
    pub min_p: u64,
    pub citation: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DonkinVerdict {
    Yes { citation: String },
    Unknown,
}

impl DonkinVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, DonkinVerdict::Yes { .. })
    }
}

pub fn donkin_records() -> Vec<DonkinPairRecord> {
    vec![
        DonkinPairRecord {
            name: "levi",
            matcher: |p| matches!(p, Provenance::Identity { .. } | Provenance::Levi { .. }),
            min_p: 2,
            citation: "Levi subgroup: restriction preserves good filtrations",
        },
        DonkinPairRecord {
            name: "involution-centralizer",
            matcher: |p| {
                matches!(
                    p,
                    Provenance::Diagonal { copies: 2, .. }
                        | Provenance::FoldingAC { .. }
                        | Provenance::FoldingDB { .. }
                        | Provenance::FoldingE6F4
                        | Provenance::FoldingB3G2
                        | Provenance::SoInSl { .. }
                )
            },
            min_p: 3,
            citation: "centralizer of an involution or graph automorphism, p odd",
        },
    ]
}

/// `Yes` when some record matches the embedding's provenance at this `p`;
/// never a negative verdict.
pub fn lookup_donkin<S: Scalar>(emb: &Embedding<S>, p: u64) -> DonkinVerdict {
    donkin_records()
        .into_iter()
        .find(|r| (r.matcher)(emb.provenance()) && p >= r.min_p)
        .map_or(DonkinVerdict::Unknown, |r| DonkinVerdict::Yes {
            citation: r.citation.into(),
        })
}

/// Verdicts a case is expected to reproduce.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectation {
    pub dominance: Option<bool>,
    pub donkin: Option<bool>,
    pub lie_separability: Option<TriState>,
    pub tags: Vec<Tag>,
    pub no_conclusions: bool,
}

impl Expectation {
    /// Human-readable mismatches between the expectation and a report.
    pub fn mismatches<S: Scalar>(
        &self,
        input: &CriterionInput<S>,
        report: &CriterionReport,
    ) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(d) = self.dominance {
            if report.hypotheses.dominance != d {
                out.push(format!(
                    "dominance: expected {d}, got {}",
                    report.hypotheses.dominance
                ));
            }
        }
        if let Some(d) = self.donkin {
            let got = lookup_donkin(&input.embedding, input.p).is_yes();
            if got != d {
                out.push(format!("donkin: expected {d}, got {got}"));
            }
        }
        if let Some(l) = self.lie_separability {
            if report.hypotheses.lie_separability != l {
                out.push(format!(
                    "lie_separability: expected {l}, got {}",
                    report.hypotheses.lie_separability
                ));
            }
        }
        for t in &self.tags {
            if !report.has(*t) {
                out.push(format!("missing conclusion {t:?}"));
            }
        }
        if self.no_conclusions && !report.conclusions.is_empty() {
            out.push(format!(
                "expected no conclusions, got {}",
                report.conclusions.len()
            ));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Case<S> {
    pub name: String,
    pub input: CriterionInput<S>,
    pub expected: Expectation,
}

fn simple(kind: char, rank: usize) -> Result<RootSystem> {
    format!("{kind}{rank}").parse()
}

/// The minimal-rank pairs with `J = I`; each is expected dominant.
pub fn minimal_rank_suite<S: Scalar>(p: u64) -> Result<Vec<Case<S>>> {
    let mut embs = vec![
        Embedding::identity(&simple('A', 2)?)?,
        Embedding::diagonal(&simple('B', 2)?, 2)?,
    ];
    for m in 2..=4 {
        embs.push(Embedding::folding_ac(m)?);
    }
    for n in 4..=6 {
        embs.push(Embedding::folding_db(n)?);
    }
    embs.push(Embedding::folding_e6f4()?);
    embs.push(Embedding::folding_b3g2()?);
    Ok(embs
        .into_iter()
        .map(|e| Case {
            name: e.label(),
            input: CriterionInput::full(e, p),
            expected: Expectation {
                dominance: Some(true),
                donkin: Some(p >= 3),
                ..Default::default()
            },
        })
        .collect())
}

/// `SL_n ⊃ SO_n` with the `J` choices that make `2 rho_H - rho_J|` dominant.
pub fn example_sln_son<S: Scalar>(n: usize, p: u64) -> Result<Vec<Case<S>>> {
    let emb: Embedding<S> = Embedding::so_in_sl(n)?;
    let removed: Vec<usize> = if n.is_multiple_of(2) {
        vec![n / 2]
    } else {
        vec![(n - 1) / 2, n.div_ceil(2)]
    };
    Ok(removed
        .into_iter()
        .map(|r| {
            let subset: Vec<usize> = (1..n).filter(|&i| i != r).map(|i| i - 1).collect();
            Case {
                name: format!("{}, J = I - {{{r}}}", emb.label()),
                input: CriterionInput::new(emb.clone(), subset, p),
                expected: Expectation {
                    dominance: Some(true),
                    donkin: Some(p >= 3),
                    tags: if p >= 3 { vec![Tag::SplitPj] } else { vec![] },
                    ..Default::default()
                },
            }
        })
        .collect())
}

/// `H ⊂ H × H × H`: `rho|_{T_H} = 3 rho_H`, so nothing follows.
pub fn example_triple_diagonal<S: Scalar>(h: &RootSystem, p: u64) -> Result<Case<S>> {
    let emb = Embedding::diagonal(h, 3)?;
    Ok(Case {
        name: emb.label(),
        input: CriterionInput::full(emb, p),
        expected: Expectation {
            dominance: Some(false),
            no_conclusions: true,
            ..Default::default()
        },
    })
}

/// `{(g, F(g))} ⊂ SL_2 × SL_2` with `J` the first factor. Dominance holds,
/// surjectivity is asserted, but separability fails.
pub fn frobenius_twist<S: Scalar>(p: u64) -> Result<Case<S>> {
    let emb = Embedding::frobenius_twisted_diagonal(&simple('A', 1)?, p)?;
    let input = CriterionInput::new(emb, vec![0], p).with_sources(vec![
        SurjectivitySource::DonkinRegistry,
        SurjectivitySource::LargeP,
        SurjectivitySource::UserAsserted,
    ]);
    Ok(Case {
        name: input.embedding.label(),
        input,
        expected: Expectation {
            dominance: Some(true),
            donkin: Some(false),
            lie_separability: Some(TriState::Fails),
            ..Default::default()
        },
    })
}

/// A node of the `Sp_4` orbit-closure diagram, `X1` on top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitNode {
    pub label: &'static str,
    /// Index into the conjugators when this is a closed orbit `H x B / B`.
    pub conjugator: Option<usize>,
    /// Index of the conjugator whose Borel splits this closure compatibly.
    pub split_by: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitEdge {
    pub upper: usize,
    pub lower: usize,
    pub double: bool,
}

/// A dominance check against a conjugated Borel with a restricted `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicCheck {
    pub conjugator: usize,
    /// 0-based.
    pub subset: Vec<usize>,
    pub expected_dominant: bool,
    pub expected_regular: bool,
    pub statement: &'static str,
}

#[derive(Clone, Debug)]
pub struct Sp4Example<S> {
    pub embedding: Embedding<S>,
    /// `x_1 = e, x_2 = s_2, x_3 = s_2 s_1, x_4 = s_2 s_1 s_2` (`s_1` short).
    pub conjugators: Vec<WeylElement>,
    pub expected: [bool; 4],
    pub nodes: Vec<OrbitNode>,
    pub edges: Vec<OrbitEdge>,
    pub parabolic_checks: Vec<ParabolicCheck>,
    /// Orbit pairs `(X_a, X_b)` where `X_a` carries a splitting along an
    /// ample bundle compatible with `X_b`; recorded as stated, not derived.
    pub compatible_pairs: Vec<(&'static str, &'static str)>,
}

/// `Sp_4` with `H` the Levi subgroup of the short simple root.
pub fn example_sp4<S: Scalar>() -> Result<Sp4Example<S>> {
    let c2 = simple('C', 2)?;
    let embedding = Embedding::levi(&c2, &[0])?;
    let conjugators = [vec![], vec![1], vec![1, 0], vec![1, 0, 1]]
        .iter()
        .map(|w| WeylElement::from_word(&c2, w))
        .collect::<Result<Vec<_>>>()?;
    let labels = [
        "X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8", "X9", "X10", "X11",
    ];
    let nodes = labels
        .iter()
        .enumerate()
        .map(|(i, &label)| OrbitNode {
            label,
            conjugator: (7..=10).contains(&i).then(|| i - 7),
            split_by: match i {
                1 | 4 | 7 => Some(0),
                3 | 6 | 10 => Some(3),
                _ => None,
            },
        })
        .collect();
    let edge = |u: usize, l: usize, double| OrbitEdge {
        upper: u - 1,
        lower: l - 1,
        double,
    };
    let edges = vec![
        edge(1, 2, false),
        edge(1, 3, true),
        edge(1, 4, false),
        edge(2, 5, false),
        edge(3, 6, false),
        edge(4, 7, false),
        edge(5, 8, false),
        edge(5, 9, false),
        edge(6, 9, false),
        edge(6, 10, false),
        edge(7, 10, false),
        edge(7, 11, false),
    ];
    let parabolic_checks = vec![
        ParabolicCheck {
            conjugator: 1,
            subset: vec![1],
            expected_dominant: true,
            expected_regular: false,
            statement: "H P_2 / B_2 admits a splitting along an ample bundle compatible with H B_2 / B_2; no F-regularity",
        },
        ParabolicCheck {
            conjugator: 1,
            subset: vec![0],
            expected_dominant: true,
            expected_regular: true,
            statement: "H P_1 / B_2 and H B_2 / B_2 are globally F-regular",
        },
        ParabolicCheck {
            conjugator: 2,
            subset: vec![1],
            expected_dominant: true,
            expected_regular: false,
            statement: "H P_2 / B_3 admits a splitting along an ample bundle compatible with H B_3 / B_3; no F-regularity",
        },
        ParabolicCheck {
            conjugator: 2,
            subset: vec![0],
            expected_dominant: true,
            expected_regular: true,
            statement: "H P_1 / B_3 and H B_3 / B_3 are globally F-regular",
        },
    ];
    Ok(Sp4Example {
        embedding,
        conjugators,
        expected: [true, false, false, true],
        nodes,
        edges,
        parabolic_checks,
        compatible_pairs: vec![("X5", "X9"), ("X6", "X9"), ("X7", "X10"), ("X6", "X10")],
    })
}

/// Names accepted by [`example_cases`].
pub const EXAMPLE_NAMES: [&str; 5] = [
    "minimal-rank",
    "sp4",
    "sln-son:<n>",
    "triple-diagonal:<type><rank>",
    "frobenius-twist",
];

/// Criterion cases behind an example name (`sp4` has none; it is driven by
/// conjugated Borel checks instead).
pub fn example_cases<S: Scalar>(name: &str, p: u64) -> Result<Vec<Case<S>>> {
    if name == "minimal-rank" {
        return minimal_rank_suite(p);
    }
    if name == "frobenius-twist" {
        return Ok(vec![frobenius_twist(p)?]);
    }
    if name == "sp4" {
        return Ok(vec![]);
    }
    if let Some(n) = name.strip_prefix("sln-son:") {
        let n: usize = n.parse().map_err(|_| {
            Error::InvalidParameter(format!("sln-son expects an integer, got {n:?}"))
        })?;
        return example_sln_son(n, p);
    }
    if let Some(h) = name.strip_prefix("triple-diagonal:") {
        return Ok(vec![example_triple_diagonal(&h.parse()?, p)?]);
    }
    Err(Error::InvalidParameter(format!(
        "unknown example {name:?}; expected one of {}",
        EXAMPLE_NAMES.join(", ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::check_main;
    use num_rational::Rational64;

    type E = Embedding<Rational64>;

    #[test]
    fn donkin_lookup() {
        let c2: RootSystem = "C2".parse().unwrap();
        assert!(lookup_donkin(&E::levi(&c2, &[0]).unwrap(), 2).is_yes());
        assert!(lookup_donkin(&E::so_in_sl(6).unwrap(), 3).is_yes());
        assert!(!lookup_donkin(&E::so_in_sl(6).unwrap(), 2).is_yes());
        let a1: RootSystem = "A1".parse().unwrap();
        assert_eq!(
            lookup_donkin(&E::frobenius_twisted_diagonal(&a1, 5).unwrap(), 5),
            DonkinVerdict::Unknown
        );
        assert!(!lookup_donkin(&E::diagonal(&a1, 3).unwrap(), 5).is_yes());
    }

    #[test]
    fn registry_cases_reproduce_expectations() {
        let mut cases: Vec<Case<Rational64>> = minimal_rank_suite(3).unwrap();
        for n in 3..=8 {
            cases.extend(example_sln_son(n, 3).unwrap());
        }
        for h in ["A1", "A2", "G2"] {
            cases.push(example_triple_diagonal(&h.parse().unwrap(), 3).unwrap());
        }
        cases.push(frobenius_twist(5).unwrap());
        for c in cases {
            let r = check_main(&c.input).unwrap();
            let bad = c.expected.mismatches(&c.input, &r);
            assert!(bad.is_empty(), "{}: {bad:?}", c.name);
        }
    }

    #[test]
    fn unknown_example_name() {
        assert!(example_cases::<Rational64>("nope", 3).is_err());
        assert!(example_cases::<Rational64>("sln-son:x", 3).is_err());
        assert_eq!(
            example_cases::<Rational64>("sln-son:5", 3).unwrap().len(),
            2
        );
    }

    #[test]
    fn sp4_diagram_shape() {
        let ex = example_sp4::<Rational64>().unwrap();
        assert_eq!(ex.nodes.len(), 11);
        assert_eq!(ex.edges.len(), 12);
        assert_eq!(ex.nodes[7].conjugator, Some(0));
        assert_eq!(ex.nodes[10].conjugator, Some(3));
    }
}
