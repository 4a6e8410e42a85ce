//! JSON input formats: embedding descriptors, check inputs and weights.

use anyhow::{anyhow, bail, Context, Result};
use frobcrit::criteria::SurjectivitySource;
use frobcrit::registry::Expectation;
use frobcrit::{CriterionInput, Embedding, RootSystem, Scalar, Tag, TriState, Weight, Q};
use serde::Deserialize;
use serde_json::Value;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Descriptor {
    Builder {
        builder: String,
        #[serde(default)]
        params: serde_json::Map<String, Value>,
    },
    Custom {
        custom: CustomSpec,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomSpec {
    pub g: String,
    pub h: String,
    pub matrix: Vec<Vec<Value>>,
    #[serde(default)]
    pub center: Vec<Vec<Value>>,
}

/// A rational given as `"a/b"`, `"a"` or a JSON integer.
pub fn parse_rational(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Q::from_integer)
            .ok_or_else(|| anyhow!("{n} is not an integer; write fractions as \"a/b\"")),
        Value::String(s) => {
            Q::parse_rational(s).ok_or_else(|| anyhow!("cannot parse rational {s:?}"))
        }
        other => bail!("expected a rational, got {other}"),
    }
}

fn matrix(rows: &[Vec<Value>]) -> Result<Vec<Vec<Q>>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
                .with_context(|| format!("matrix row {}", i + 1))
        })
        .collect()
}

fn param<'a>(params: &'a serde_json::Map<String, Value>, names: &[&str]) -> Result<&'a Value> {
    names
        .iter()
        .find_map(|n| params.get(*n))
        .ok_or_else(|| anyhow!("missing parameter {:?}", names[0]))
}

fn param_str(params: &serde_json::Map<String, Value>, names: &[&str]) -> Result<String> {
    param(params, names)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| anyhow!("parameter {:?} must be a string", names[0]))
}

fn param_uint(params: &serde_json::Map<String, Value>, names: &[&str]) -> Result<u64> {
    parse_uint(param(params, names)?).with_context(|| format!("parameter {:?}", names[0]))
}

/// A non-negative integer given as a JSON number or a decimal string.
pub fn parse_uint(v: &Value) -> Result<u64> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .ok_or_else(|| anyhow!("{n} is not a non-negative integer")),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| anyhow!("{s:?} is not a non-negative integer")),
        other => bail!("expected an integer, got {other}"),
    }
}

fn root_system(spec: &str) -> Result<RootSystem> {
    spec.parse().map_err(|e| anyhow!("{e}"))
}

/// 1-based indices to 0-based, range-checked against `rank`.
pub fn subset_from_json(v: &Value, rank: usize) -> Result<Vec<usize>> {
    let items = v
        .as_array()
        .ok_or_else(|| anyhow!("J must be a list of 1-based indices"))?;
    items
        .iter()
        .map(|x| {
            let i = parse_uint(x)? as usize;
            if i == 0 || i > rank {
                bail!("index {i} out of range 1..={rank}");
            }
            Ok(i - 1)
        })
        .collect()
}

impl Descriptor {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed embedding descriptor")
    }

    pub fn build(&self) -> Result<Embedding> {
        match self {
            Descriptor::Custom { custom } => {
                let g = root_system(&custom.g)?;
                let h = root_system(&custom.h)?;
                Ok(Embedding::custom(
                    g,
                    h,
                    matrix(&custom.matrix)?,
                    matrix(&custom.center)?,
                )?)
            }
            Descriptor::Builder { builder, params } => {
                let emb = match builder.as_str() {
                    "identity" => Embedding::identity(&root_system(&param_str(params, &["g"])?)?)?,
                    "levi" => {
                        let g = root_system(&param_str(params, &["g"])?)?;
                        let subset = subset_from_json(param(params, &["J", "subset"])?, g.rank())?;
                        Embedding::levi(&g, &subset)?
                    }
                    "diagonal" => {
                        let h = root_system(&param_str(params, &["h"])?)?;
                        Embedding::diagonal(&h, param_uint(params, &["k", "copies"])? as usize)?
                    }
                    "folding_AC" => Embedding::folding_ac(param_uint(params, &["m"])? as usize)?,
                    "folding_DB" => Embedding::folding_db(param_uint(params, &["n"])? as usize)?,
                    "folding_E6F4" => Embedding::folding_e6f4()?,
                    "folding_B3G2" => Embedding::folding_b3g2()?,
                    "so_in_sl" => Embedding::so_in_sl(param_uint(params, &["n"])? as usize)?,
                    "frobenius_twisted_diagonal" => {
                        let h = root_system(&param_str(params, &["h"])?)?;
                        Embedding::frobenius_twisted_diagonal(&h, param_uint(params, &["p"])?)?
                    }
                    other => bail!(
                        "unknown builder {other:?}; expected identity, levi, diagonal, folding_AC, \
                         folding_DB, folding_E6F4, folding_B3G2, so_in_sl or frobenius_twisted_diagonal"
                    ),
                };
                Ok(emb)
            }
        }
    }
}

/// Top-level document accepted by `check`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckDocument {
    pub embedding: Value,
    #[serde(rename = "J", default)]
    pub subset: Option<Value>,
    pub p: Value,
    #[serde(default)]
    pub surjectivity_source: Option<Value>,
    #[serde(default)]
    pub lie_separability: Option<TriState>,
    #[serde(default)]
    pub expect: Option<ExpectDocument>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectDocument {
    #[serde(default)]
    pub dominance: Option<bool>,
    #[serde(default)]
    pub donkin: Option<bool>,
    #[serde(default)]
    pub lie_separability: Option<TriState>,
    #[serde(default)]
    pub tags: Vec<String>,
    #[serde(default)]
    pub no_conclusions: bool,
}

fn tag_from_name(name: &str) -> Result<Tag> {
    Ok(match name {
        "SPLIT_PJ" => Tag::SplitPj,
        "GLOBALLY_F_REGULAR" => Tag::GloballyFRegular,
        "CANONICAL_SPLIT" => Tag::CanonicalSplit,
        "COR72_HPJ" => Tag::HpjSplitting,
        "COR73_FLAG" => Tag::FlagSplitting,
        "COHOMOLOGY_VANISHING" => Tag::CohomologyVanishing,
        "CONDITIONAL" => Tag::Conditional,
        other => bail!("unknown conclusion tag {other:?}"),
    })
}

fn sources(v: &Value) -> Result<Vec<SurjectivitySource>> {
    let one = |s: &Value| -> Result<Vec<SurjectivitySource>> {
        match s.as_str() {
            Some("none") => Ok(vec![]),
            Some(_) => Ok(vec![serde_json::from_value(s.clone()).map_err(|_| {
                anyhow!("unknown surjectivity source {s}; expected donkin-registry, large-p, user-asserted or none")
            })?]),
            None => bail!("surjectivity source must be a string"),
        }
    };
    match v {
        Value::Array(items) => {
            let mut out = Vec::new();
            for item in items {
                out.extend(one(item)?);
            }
            Ok(out)
        }
        other => one(other),
    }
}

impl CheckDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed check input")
    }

    pub fn into_input(self, enum_cap: u128) -> Result<(CriterionInput, Option<Expectation>)> {
        let desc: Descriptor =
            serde_json::from_value(self.embedding).context("embedding descriptor")?;
        let emb = desc.build()?;
        let p = parse_uint(&self.p).context("p")?;
        let subset = match &self.subset {
            Some(v) => subset_from_json(v, emb.g().rank()).context("J")?,
            None => emb.g().all_nodes(),
        };
        let mut input = CriterionInput::new(emb, subset, p);
        input.enum_cap = enum_cap;
        if let Some(v) = &self.surjectivity_source {
            input.surjectivity_sources = sources(v).context("surjectivity_source")?;
        }
        input.lie_separability = self.lie_separability;
        let expect = match self.expect {
            Some(e) => Some(Expectation {
                dominance: e.dominance,
                donkin: e.donkin,
                lie_separability: e.lie_separability,
                tags: e
                    .tags
                    .iter()
                    .map(|t| tag_from_name(t))
                    .collect::<Result<_>>()?,
                no_conclusions: e.no_conclusions,
            }),
            None => None,
        };
        Ok((input, expect))
    }
}

/// A weight as `"1,0,2"`, `"(1, 0, 2)"` or a JSON list of rationals.
pub fn parse_weight(text: &str) -> Result<Weight> {
    let t = text.trim();
    if t.starts_with('[') {
        let items: Vec<Value> = serde_json::from_str(t).context("malformed weight list")?;
        return Ok(Weight::new(
            items.iter().map(parse_rational).collect::<Result<_>>()?,
        ));
    }
    let inner = t.trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Weight::new(vec![]));
    }
    let coords = inner
        .split(',')
        .map(|s| {
            Q::parse_rational(s.trim()).ok_or_else(|| anyhow!("cannot parse coordinate {s:?}"))
        })
        .collect::<Result<_>>()?;
    Ok(Weight::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_and_custom_descriptors() {
        let e = Descriptor::parse(r#"{"builder":"levi","params":{"g":"C2","J":[1]}}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(e.label(), "levi(C2;{1})");
        let c = Descriptor::parse(r#"{"custom":{"g":"A1,A1","h":"A1","matrix":[["1","1/1"]]}}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(c.h().rank(), 1);
        assert!(Descriptor::parse(r#"{"builder":"nope"}"#)
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn weights_in_several_spellings() {
        assert_eq!(parse_weight("1,0").unwrap(), Weight::from_ints(&[1, 0]));
        assert_eq!(
            parse_weight("(1, -1/2)").unwrap().coords()[1],
            Q::new(-1, 2)
        );
        assert_eq!(
            parse_weight(r#"["2", 3]"#).unwrap(),
            Weight::from_ints(&[2, 3])
        );
        assert!(parse_weight("x").is_err());
    }

    #[test]
    fn p_as_string_or_number() {
        assert_eq!(parse_uint(&Value::String("4".into())).unwrap(), 4);
        assert_eq!(parse_uint(&serde_json::json!(7)).unwrap(), 7);
        assert!(parse_uint(&serde_json::json!(-1)).is_err());
    }
}
