//! Hypothesis evaluation for Frobenius splittings of `H P_J / B` and of the
//! orbit closures `H·X(w)`, `w ∈ W_J`.
//!
//! The engine certifies weight-level hypotheses (dominance, regularity,
//! surjectivity of restriction, separability) and names the geometric
//! consequences as tagged conclusion records. It never constructs splittings.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed::Embedding;
use crate::error::{Error, Result};
use crate::registry::{lookup_donkin, DonkinVerdict};
use crate::rootsys::Weight;
use crate::scalar::Scalar;
use crate::weyl::{enumerate, group_order, WeylElement, DEFAULT_ENUM_CAP};

/// Orbit labels are listed only when `|W_J|` is at most this.
pub const ORBIT_LABEL_LIMIT: u128 = 1152;

/// Where a surjectivity verdict may come from, in resolution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurjectivitySource {
    DonkinRegistry,
    LargeP,
    UserAsserted,
}

impl SurjectivitySource {
    pub const ORDER: [SurjectivitySource; 3] =
        [Self::DonkinRegistry, Self::LargeP, Self::UserAsserted];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Holds => "holds",
            TriState::Fails => "fails",
            TriState::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionInput<S> {
    pub embedding: Embedding<S>,
    /// 0-based simple indices of `G`.
    pub subset: Vec<usize>,
    pub p: u64,
    /// Allowed sources; empty means surjectivity is never certified.
    pub surjectivity_sources: Vec<SurjectivitySource>,
    /// User override for the separability relation; `None` uses defaults.
    pub lie_separability: Option<TriState>,
    pub enum_cap: u128,
}

impl<S: Scalar> CriterionInput<S> {
    /// Registry and large-`p` sources allowed, default separability rule.
    pub fn new(embedding: Embedding<S>, subset: Vec<usize>, p: u64) -> Self {
        CriterionInput {
            embedding,
            subset,
            p,
            surjectivity_sources: vec![
                SurjectivitySource::DonkinRegistry,
                SurjectivitySource::LargeP,
            ],
            lie_separability: None,
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }

    /// `J = I`.
    pub fn full(embedding: Embedding<S>, p: u64) -> Self {
        let all = embedding.g().all_nodes();
        Self::new(embedding, all, p)
    }

    pub fn with_sources(mut self, sources: Vec<SurjectivitySource>) -> Self {
        self.surjectivity_sources = sources;
        self
    }

    pub fn with_lie_separability(mut self, value: TriState) -> Self {
        self.lie_separability = Some(value);
        self
    }

    pub fn with_p(mut self, p: u64) -> Self {
        self.p = p;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Surjectivity {
    Holds {
        source: SurjectivitySource,
        reason: String,
    },
    Unknown {
        reason: String,
    },
}

impl Surjectivity {
    pub fn holds(&self) -> bool {
        matches!(self, Surjectivity::Holds { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    #[serde(rename = "SPLIT_PJ")]
    SplitPj,
    #[serde(rename = "GLOBALLY_F_REGULAR")]
    GloballyFRegular,
    #[serde(rename = "CANONICAL_SPLIT")]
    CanonicalSplit,
    #[serde(rename = "COR72_HPJ")]
    HpjSplitting,
    #[serde(rename = "COR73_FLAG")]
    FlagSplitting,
    #[serde(rename = "COHOMOLOGY_VANISHING")]
    CohomologyVanishing,
    #[serde(rename = "CONDITIONAL")]
    Conditional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub tag: Tag,
    pub statement: String,
    pub theorem: String,
    /// Hypothesis names this conclusion rests on; each one holds.
    pub hypotheses: Vec<String>,
    /// Elements of `W_J` as 1-based reduced words, shortest first.
    pub orbit_labels: Vec<Vec<usize>>,
    pub orbit_count: u128,
    pub orbit_labels_truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub embedding: String,
    pub g: String,
    pub h: String,
    #[serde(rename = "J")]
    pub subset: Vec<usize>,
    pub p: u64,
    pub surjectivity_sources: Vec<SurjectivitySource>,
    pub lie_separability_override: Option<TriState>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    #[serde(rename = "dominance_2rhoH_minus_rhoJ")]
    pub dominance: bool,
    pub regular: bool,
    /// `2 rho_H - rho_J|_{T_H}` in fundamental coordinates of `H`.
    #[serde(rename = "weight_2rhoH_minus_rhoJ")]
    pub weight: Vec<String>,
    pub surjectivity: Surjectivity,
    pub lie_separability: TriState,
    pub lie_separability_reason: String,
    /// Dominance of `rho_H - rho_J|_{T_H}`.
    pub canonical_dominance: bool,
    pub h_semisimple: bool,
    /// Splitting of `P_J / B` is always available; for other `X` it is an
    /// assumption.
    pub flag_splitting: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorWeight {
    /// `(p-1) rho_J` in fundamental coordinates of `G`.
    pub weight: Vec<String>,
    pub multiplicity: u64,
    #[serde(rename = "J")]
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub input: InputEcho,
    pub hypotheses: Hypotheses,
    pub lemma53_min_p: u64,
    pub divisor: Option<DivisorWeight>,
    pub conclusions: Vec<Conclusion>,
}

impl CriterionReport {
    pub fn has(&self, tag: Tag) -> bool {
        self.conclusions.iter().any(|c| c.tag == tag)
    }
}

fn ensure_valid<S: Scalar>(emb: &Embedding<S>) -> Result<()> {
    let violations = emb.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Error::InvalidEmbedding {
            label: emb.label(),
            violations: text.join("; "),
        })
    }
}

fn ensure_prime(p: u64) -> Result<()> {
    if crate::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Smallest `p` from which every restriction `∇(λ) → ∇^H(λ|_{T_H})` is
/// surjective by the weight bound: the ceiling of
/// `max_{i, β ∈ R_H^+} <rho_H + omega_i|_{T_H}, β^vee>`, or 0 for a torus.
pub fn min_prime_for_surjectivity<S: Scalar>(emb: &Embedding<S>) -> Result<u64> {
    ensure_valid(emb)?;
    let g = emb.g();
    let rho_h = emb.rho_h();
    let mut best: Option<S> = None;
    for i in 0..g.rank() {
        let shifted = &rho_h + &emb.restrict(&g.fundamental_weight(i)?)?;
        for k in 0..emb.h().positive_roots().len() {
            let v = emb.h_pairing(&shifted, k);
            if best.as_ref().is_none_or(|b| v > *b) {
                best = Some(v);
            }
        }
    }
    Ok(best.map_or(0, |b| b.ceil_to_int().max(0) as u64))
}

/// Surjectivity of restriction at every dominant weight, from the first
/// allowed source that applies.
pub fn resolve_surjectivity<S: Scalar>(
    emb: &Embedding<S>,
    p: u64,
    sources: &[SurjectivitySource],
) -> Result<Surjectivity> {
    let mut tried = Vec::new();
    for source in SurjectivitySource::ORDER {
        if !sources.contains(&source) {
            continue;
        }
        match source {
            SurjectivitySource::DonkinRegistry => match lookup_donkin(emb, p) {
                DonkinVerdict::Yes { citation } => {
                    return Ok(Surjectivity::Holds {
                        source,
                        reason: citation,
                    });
                }
                DonkinVerdict::Unknown => tried.push("no Donkin-pair record applies".to_string()),
            },
            SurjectivitySource::LargeP => {
                let bound = min_prime_for_surjectivity(emb)?;
                if p >= bound {
                    return Ok(Surjectivity::Holds {
                        source,
                        reason: format!("p = {p} is at least the weight bound {bound}"),
                    });
                }
                tried.push(format!("p = {p} is below the weight bound {bound}"));
            }
            SurjectivitySource::UserAsserted => {
                return Ok(Surjectivity::Holds {
                    source,
                    reason: "asserted by the user".into(),
                });
            }
        }
    }
    if tried.is_empty() {
        tried.push("no surjectivity source allowed".into());
    }
    Ok(Surjectivity::Unknown {
        reason: tried.join("; "),
    })
}

/// Dominance checks for a general `λ` in the ample-divisor criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingHypotheses {
    /// `2(p-1) rho_H - λ|_{T_H}` dominant.
    pub twice_dominant: bool,
    /// `(p-1) rho_H - λ|_{T_H}` dominant (`B_H`-canonical splitting).
    pub canonical_dominant: bool,
    pub surjectivity: Surjectivity,
    /// True when `λ = (p-1) rho_J`, where a splitting of `P_J/B` with the
    /// required section is available; otherwise the splitting of `X` is
    /// an assumption.
    pub flag_splitting_supplied: bool,
}

pub fn splitting_hypotheses<S: Scalar>(
    emb: &Embedding<S>,
    lambda: &Weight<S>,
    p: u64,
    sources: &[SurjectivitySource],
) -> Result<SplittingHypotheses> {
    ensure_prime(p)?;
    ensure_valid(emb)?;
    emb.g().check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let pm1 = S::from_int(p as i64 - 1);
    let image = emb.restrict(lambda)?;
    let base = emb.rho_h().scale(&pm1);
    let twice = &base.scale(&S::from_int(2)) - &image;
    let once = &base - &image;
    let supplied = lambda.coords().iter().all(|c| c.is_zero() || *c == pm1);
    Ok(SplittingHypotheses {
        twice_dominant: twice.is_dominant(),
        canonical_dominant: once.is_dominant(),
        surjectivity: resolve_surjectivity(emb, p, sources)?,
        flag_splitting_supplied: supplied,
    })
}

/// `2 rho_H - rho_J|_{T_H}`.
pub fn dominance_weight<S: Scalar>(emb: &Embedding<S>, subset: &[usize]) -> Result<Weight<S>> {
    let rho_j: Weight<S> = emb.g().rho_j(subset)?;
    Ok(&emb.rho_h().scale(&S::from_int(2)) - &emb.restrict(&rho_j)?)
}

fn lie_default<S: Scalar>(input: &CriterionInput<S>, subset: &[usize]) -> (TriState, String) {
    if let Some(v) = input.lie_separability {
        return (v, "set by the user".into());
    }
    if subset.len() == input.embedding.g().rank() {
        (TriState::Holds, "always satisfied for J = I".into())
    } else if input.embedding.detect_twist(input.p) {
        (
            TriState::Fails,
            "Frobenius twist detected: H P_J / B is not reached separably".into(),
        )
    } else {
        (
            TriState::Unknown,
            "not decidable from weights; supply an override".into(),
        )
    }
}

fn orbit_labels(
    input_cap: u128,
    emb_g: &crate::RootSystem,
    subset: &[usize],
) -> Result<(Vec<Vec<usize>>, u128, bool)> {
    let order = group_order(emb_g, subset)?;
    if order > ORBIT_LABEL_LIMIT.min(input_cap) {
        return Ok((Vec::new(), order, true));
    }
    let mut words: Vec<Vec<usize>> = enumerate(emb_g, subset, input_cap)?
        .iter()
        .map(|w| w.word().iter().map(|i| i + 1).collect())
        .collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok((words, order, false))
}

/// Evaluates the splitting criterion for `H P_J / B` and its corollaries.
pub fn check_main<S: Scalar>(input: &CriterionInput<S>) -> Result<CriterionReport> {
    let emb = &input.embedding;
    let p = input.p;
    ensure_prime(p)?;
    ensure_valid(emb)?;
    let subset = emb.g().check_subset(&input.subset)?;
    let full = subset.len() == emb.g().rank();

    let diff = dominance_weight(emb, &subset)?;
    let dominance = diff.is_dominant();
    let regular = diff.is_regular_dominant();
    let rho_j: Weight<S> = emb.g().rho_j(&subset)?;
    let canonical_dominance = (&emb.rho_h() - &emb.restrict(&rho_j)?).is_dominant();
    let surjectivity = resolve_surjectivity(emb, p, &input.surjectivity_sources)?;
    let (lie, lie_reason) = lie_default(input, &subset);
    let min_p = min_prime_for_surjectivity(emb)?;
    let h_semisimple = emb.is_semisimple();

    let (labels, count, truncated) = orbit_labels(input.enum_cap, emb.g(), &subset)?;
    let make = |tag, statement: String, theorem: &str, hyps: &[&str]| Conclusion {
        tag,
        statement,
        theorem: theorem.into(),
        hypotheses: hyps.iter().map(|s| s.to_string()).collect(),
        orbit_labels: labels.clone(),
        orbit_count: count,
        orbit_labels_truncated: truncated,
    };

    let pm1 = p - 1;
    let weight_text = format!("({})", diff.render().join(", "));
    let mut conclusions = Vec::new();
    let split = dominance && surjectivity.holds();
    if split {
        conclusions.push(make(
            Tag::SplitPj,
            format!(
                "H x_{{B_H}} P_J/B admits a Frobenius M_H({pm1}*{weight_text})-splitting compatible with H x_{{B_H}} X(w) for all w in W_J"
            ),
            "splitting criterion for H x_{B_H} P_J/B",
            &["dominance", "surjectivity"],
        ));
        if regular {
            conclusions.push(make(
                Tag::GloballyFRegular,
                "the splitting line bundle is ample and every H x_{B_H} X(w), w in W_J, is globally F-regular".into(),
                "splitting criterion for H x_{B_H} P_J/B, regular case",
                &["dominance", "regular", "surjectivity"],
            ));
        }
        if canonical_dominance && h_semisimple {
            conclusions.push(make(
                Tag::CanonicalSplit,
                "H x_{B_H} P_J/B admits a B_H-canonical Frobenius splitting compatible with each H x_{B_H} X(w), w in W_J".into(),
                "B_H-canonical splitting corollary",
                &["canonical_dominance", "h_semisimple", "surjectivity"],
            ));
        }
        if lie == TriState::Holds {
            let regular_part = if regular {
                "; each H.X(w), w in W_J, is globally F-regular"
            } else {
                ""
            };
            conclusions.push(make(
                Tag::HpjSplitting,
                format!(
                    "HP_J/B admits a Frobenius L({pm1}*rho_J)-splitting compatible with all H.X(w), w in W_J{regular_part}"
                ),
                "splitting of HP_J/B along an ample divisor",
                &["dominance", "surjectivity", "lie_separability"],
            ));
        }
        if full {
            conclusions.push(make(
                Tag::FlagSplitting,
                format!("G/B admits a Frobenius L({pm1}*rho)-splitting compatible with all H.X(w), w in W"),
                "flag variety splitting corollary",
                &["dominance", "surjectivity"],
            ));
            conclusions.push(make(
                Tag::CohomologyVanishing,
                "for every dominant lambda and w in W: H^i(H.X(w), L(lambda)) = 0 for i >= 1, and H^0(G/B, L(lambda)) -> H^0(H.X(w), L(lambda)) is surjective".into(),
                "flag variety splitting corollary",
                &["dominance", "surjectivity"],
            ));
        }
    } else if dominance {
        conclusions.push(make(
            Tag::Conditional,
            format!(
                "if the restriction map from nabla({pm1}*rho_J) to nabla^H({pm1}*rho_J|_T_H) is surjective, H x_{{B_H}} P_J/B admits a Frobenius M_H({pm1}*{weight_text})-splitting compatible with H x_{{B_H}} X(w) for all w in W_J"
            ),
            "splitting criterion for H x_{B_H} P_J/B",
            &["dominance"],
        ));
    }

    let divisor = split.then(|| DivisorWeight {
        weight: rho_j.scale(&S::from_int(pm1 as i64)).render(),
        multiplicity: pm1,
        subset: subset.iter().map(|i| i + 1).collect(),
    });

    Ok(CriterionReport {
        input: InputEcho {
            embedding: emb.label(),
            g: emb.g().to_string(),
            h: emb.h().to_string(),
            subset: subset.iter().map(|i| i + 1).collect(),
            p,
            surjectivity_sources: {
                let mut s = input.surjectivity_sources.clone();
                s.sort();
                s.dedup();
                s
            },
            lie_separability_override: input.lie_separability,
        },
        hypotheses: Hypotheses {
            dominance,
            regular,
            weight: diff.render(),
            surjectivity,
            lie_separability: lie,
            lie_separability_reason: lie_reason,
            canonical_dominance,
            h_semisimple,
            flag_splitting: if full {
                "G/B is Frobenius split".into()
            } else {
                "P_J/B is Frobenius split".into()
            },
        },
        lemma53_min_p: min_p,
        divisor,
        conclusions,
    })
}

/// `(p-1) rho_J`, the weight of the line bundle whose section cuts out the
/// splitting divisor. Requires the report to carry `SPLIT_PJ`.
pub fn divisor_weights<S: Scalar>(input: &CriterionInput<S>) -> Result<Weight<S>> {
    let report = check_main(input)?;
    if !report.has(Tag::SplitPj) {
        return Err(Error::NoSplitting);
    }
    let rho_j: Weight<S> = input.embedding.g().rho_j(&input.subset)?;
    Ok(rho_j.scale(&S::from_int(input.p as i64 - 1)))
}

/// Outcome of the dominance test against a conjugated Borel `x B x^{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugatedCheck<S> {
    pub dominant: bool,
    pub regular: bool,
    /// `<2 rho_H^x - (x rho_J)|_{T_H}, gamma^vee>` over the simple roots
    /// `gamma` of the positive system of `x B x^{-1} ∩ H`, as
    /// (signed `H`-root in simple-root coordinates, value).
    pub pairings: Vec<(Vec<i64>, S)>,
}

/// Dominance of `2 rho_H - (x rho_J)|_{T_H}` with respect to the Borel
/// subgroup `x B x^{-1} ∩ H` of `H`.
pub fn conjugated_borel_check<S: Scalar>(
    emb: &Embedding<S>,
    x: &WeylElement,
    subset: &[usize],
) -> Result<ConjugatedCheck<S>> {
    ensure_valid(emb)?;
    let g = emb.g();
    let h = emb.h();
    if x.rank() != g.rank() {
        return Err(Error::RankMismatch {
            expected: g.rank(),
            found: x.rank(),
        });
    }
    let nh = h.positive_roots().len();
    let mut sign: Vec<Option<i64>> = vec![None; nh];
    for beta in g.positive_roots() {
        let (image, central_zero) = emb.restrict_root(&x.act_root(beta));
        if !central_zero {
            continue;
        }
        if let Some((k, s)) = emb.match_h_root(&image) {
            match sign[k] {
                None => sign[k] = Some(s),
                Some(t) if t == s => {}
                Some(_) => {
                    return Err(Error::NotBorel(format!(
                        "both signs of H-root {:?} occur",
                        h.positive_roots()[k]
                    )))
                }
            }
        }
    }
    let mut system: Vec<(usize, i64, Vec<i64>)> = Vec::with_capacity(nh);
    for (k, s) in sign.iter().enumerate() {
        let s = s.ok_or_else(|| {
            Error::NotBorel(format!("H-root {:?} is not reached", h.positive_roots()[k]))
        })?;
        let v = h.positive_roots()[k].iter().map(|c| s * c).collect();
        system.push((k, s, v));
    }
    let members: HashSet<&Vec<i64>> = system.iter().map(|(_, _, v)| v).collect();
    let is_sum = |v: &Vec<i64>| {
        system.iter().any(|(_, _, a)| {
            let rest: Vec<i64> = v.iter().zip(a).map(|(x, y)| x - y).collect();
            members.contains(&rest)
        })
    };
    let rho_j: Weight<S> = g.rho_j(subset)?;
    let moved = emb.restrict(&x.act(&rho_j)?)?;
    let two = S::from_int(2);
    let mut pairings = Vec::new();
    for (k, s, v) in &system {
        if is_sum(v) {
            continue;
        }
        let value = two.clone() - S::from_int(*s) * emb.h_pairing(&moved, *k);
        pairings.push((v.clone(), value));
    }
    let dominant = pairings.iter().all(|(_, v)| !v.is_negative());
    let regular = pairings.iter().all(|(_, v)| v.is_positive());
    Ok(ConjugatedCheck {
        dominant,
        regular,
        pairings,
    })
}
