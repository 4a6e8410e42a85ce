//! Root systems, Weyl groups and weight restriction along subgroup
//! embeddings, together with an evaluator for the dominance, regularity and
//! surjectivity hypotheses that yield Frobenius splittings of orbit closures
//! `H·X(w)` in flag varieties `G/B`.
//!
//! All core types are generic over a [`Scalar`]; the aliases at the crate
//! root fix the exact rational scalar [`Q`] used by the registry and the CLI.

pub mod charalg;
pub mod criteria;
pub mod embed;
pub mod error;
pub mod registry;
pub mod rootsys;
pub mod scalar;
pub mod weyl;

pub use criteria::{CriterionReport, SurjectivitySource, Tag, TriState};
pub use error::{Error, Result};
pub use rootsys::{CartanType, Component, RootSystem};
pub use scalar::Scalar;
pub use weyl::WeylElement;

/// Exact scalar used throughout the registry, reports and CLI.
pub type Q = num_rational::Rational64;

pub type Weight = rootsys::Weight<Q>;
pub type Embedding = embed::Embedding<Q>;
pub type CriterionInput = criteria::CriterionInput<Q>;
pub type Case = registry::Case<Q>;
pub type Sp4Example = registry::Sp4Example<Q>;

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
