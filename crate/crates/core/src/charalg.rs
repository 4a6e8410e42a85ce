//! Characteristic-zero characters: Freudenthal multiplicities and branching
//! along an embedding.
//!
//! Integral weights are plain `Vec<i64>` in fundamental coordinates.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::embed::{Embedding, Provenance};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::scalar::Scalar;
use crate::weyl::group_order;

/// Dominant weights of an irreducible module with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCharacter {
    highest_weight: Vec<i64>,
    multiplicities: BTreeMap<Vec<i64>, u64>,
}

impl DominantCharacter {
    pub fn highest_weight(&self) -> &[i64] {
        &self.highest_weight
    }

    pub fn multiplicities(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.multiplicities.get(mu).copied().unwrap_or(0)
    }

    /// Sum over dominant weights of multiplicity times orbit size.
    pub fn dimension(&self, rs: &RootSystem) -> u128 {
        self.multiplicities
            .iter()
            .map(|(mu, &m)| m as u128 * orbit_size(rs, mu))
            .sum()
    }
}

fn reflect(rs: &RootSystem, nu: &mut [i64], i: usize) {
    let a = rs.cartan_matrix();
    let c = nu[i];
    for (k, x) in nu.iter_mut().enumerate() {
        *x -= c * a[k][i];
    }
}

/// The unique dominant weight in the Weyl orbit of `nu`.
pub fn dominant_conjugate(rs: &RootSystem, nu: &[i64]) -> Vec<i64> {
    let mut v = nu.to_vec();
    while let Some(i) = v.iter().position(|&c| c < 0) {
        reflect(rs, &mut v, i);
    }
    v
}

/// All Weyl conjugates of `mu`.
pub fn orbit(rs: &RootSystem, mu: &[i64]) -> Vec<Vec<i64>> {
    let start = dominant_conjugate(rs, mu);
    let mut seen = vec![start.clone()];
    let mut index: HashMap<Vec<i64>, ()> = HashMap::from([(start.clone(), ())]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for i in 0..rs.rank() {
            if v[i] == 0 {
                continue;
            }
            let mut w = v.clone();
            reflect(rs, &mut w, i);
            if index.insert(w.clone(), ()).is_none() {
                seen.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    seen
}

/// `|W| / |Stab(mu)|` for dominant `mu`.
pub fn orbit_size(rs: &RootSystem, mu: &[i64]) -> u128 {
    let zeros: Vec<usize> = (0..rs.rank()).filter(|&i| mu[i] == 0).collect();
    let all = group_order(rs, &rs.all_nodes()).expect("valid subset");
    all / group_order(rs, &zeros).expect("valid subset")
}

/// Weyl dimension formula `prod <lambda + rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> u128 {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for k in 0..rs.positive_roots().len() {
        let cor = rs.positive_coroot(k);
        let top: i64 = cor.iter().zip(lambda).map(|(c, l)| c * (l + 1)).sum();
        let bottom: i64 = cor.iter().sum();
        num *= top;
        den *= bottom;
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

fn check_dominant_integral<S: Scalar>(rs: &RootSystem, lambda: &Weight<S>) -> Result<Vec<i64>> {
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    let ints = lambda
        .to_ints()
        .ok_or_else(|| Error::NotIntegral(lambda.to_string()))?;
    if ints.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(ints)
}

/// Dominant multiplicities of the irreducible module of highest weight
/// `lambda` via Freudenthal's recursion
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{β>0} Σ_{k≥1} m(μ+kβ) (μ+kβ, β)`.
pub fn freudenthal<S: Scalar>(rs: &RootSystem, lambda: &Weight<S>) -> Result<DominantCharacter> {
    let lambda = check_dominant_integral(rs, lambda)?;
    Ok(freudenthal_int(rs, &lambda))
}

pub(crate) fn freudenthal_int(rs: &RootSystem, lambda: &[i64]) -> DominantCharacter {
    let n = rs.rank();
    let nroots = rs.positive_roots().len();
    // dominant weights below lambda, reached through dominant steps mu -> mu - beta
    let mut depth: HashMap<Vec<i64>, Vec<i64>> = HashMap::from([(lambda.to_vec(), vec![0; n])]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        let c = depth[&mu].clone();
        for k in 0..nroots {
            let bw = rs.positive_root_weight(k);
            let next: Vec<i64> = mu.iter().zip(bw).map(|(a, b)| a - b).collect();
            if next.iter().all(|&x| x >= 0) && !depth.contains_key(&next) {
                let nc: Vec<i64> = c
                    .iter()
                    .zip(&rs.positive_roots()[k])
                    .map(|(a, b)| a + b)
                    .collect();
                depth.insert(next.clone(), nc);
                queue.push_back(next);
            }
        }
    }
    let mut order: Vec<(Vec<i64>, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });

    let rho_twice: Vec<i64> = vec![2; n];
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mult.insert(lambda.to_vec(), 1);
    for (mu, c) in order.iter().skip(1) {
        let sum_vec: Vec<i64> = (0..n).map(|j| lambda[j] + mu[j] + rho_twice[j]).collect();
        let denom = rs.weight_root_inner_product(&sum_vec, c);
        let mut numer: i64 = 0;
        for k in 0..nroots {
            let beta = &rs.positive_roots()[k];
            let bw = rs.positive_root_weight(k);
            let mut nu = mu.clone();
            loop {
                for (x, b) in nu.iter_mut().zip(bw) {
                    *x += b;
                }
                let m = mult.get(&dominant_conjugate(rs, &nu)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                numer += m as i64 * rs.weight_root_inner_product(&nu, beta);
            }
        }
        numer *= 2;
        debug_assert!(
            denom > 0 && numer % denom == 0,
            "Freudenthal division {numer}/{denom}"
        );
        let m = numer / denom;
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }
    DominantCharacter {
        highest_weight: lambda.to_vec(),
        multiplicities: mult,
    }
}

/// Every weight of the module with its multiplicity.
pub fn full_character(rs: &RootSystem, ch: &DominantCharacter) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    for (mu, &m) in ch.multiplicities() {
        for nu in orbit(rs, mu) {
            *out.entry(nu).or_insert(0) += m;
        }
    }
    out
}

fn height(rs: &RootSystem, nu: &[i64]) -> Rational64 {
    let inv = rs.inverse_cartan();
    let mut h = Rational64::zero();
    for row in inv {
        for (q, &x) in row.iter().zip(nu) {
            h += *q * x;
        }
    }
    h
}

/// Multiplicities of irreducible `H`-modules in the restriction of the
/// irreducible `G`-module of highest weight `lambda`, keyed by `H`-highest
/// weight.
///
/// The restricted character is peeled from the top: a weight of maximal
/// height (ties broken by the lexicographically largest coordinates) is
/// dominant, and its full character is subtracted with the surviving
/// multiplicity.
pub fn branch<S: Scalar>(
    emb: &Embedding<S>,
    lambda: &Weight<S>,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let g = emb.g();
    let h = emb.h();
    let lam = check_dominant_integral(g, lambda)?;
    if matches!(
        emb.provenance(),
        Provenance::FrobeniusTwistedDiagonal { .. }
    ) {
        return Err(Error::NotBranchable {
            label: emb.label(),
            reason: "a Frobenius twist is not defined over characteristic 0".into(),
        });
    }
    let full = full_character(g, &freudenthal_int(g, &lam));
    // keyed by (height, weight) so the last entry is the next one to peel
    let mut remaining: BTreeMap<(Rational64, Vec<i64>), i64> = BTreeMap::new();
    for (nu, m) in full {
        let image = emb.restrict(&Weight::from_ints(&nu))?;
        let ints = image
            .to_ints()
            .ok_or_else(|| Error::NotIntegral(image.to_string()))?;
        *remaining.entry((height(h, &ints), ints)).or_insert(0) += m as i64;
    }
    let mut result = BTreeMap::new();
    while let Some(((_, top), m)) = remaining.pop_last() {
        if m == 0 {
            continue;
        }
        if m < 0 || top.iter().any(|&c| c < 0) {
            return Err(Error::NotBranchable {
                label: emb.label(),
                reason: format!("restricted character is not a sum of H-characters at {top:?}"),
            });
        }
        for (nu, k) in full_character(h, &freudenthal_int(h, &top)) {
            if nu != top {
                *remaining.entry((height(h, &nu), nu)).or_insert(0) -= m * k as i64;
            }
        }
        result.insert(top, m as u64);
    }
    Ok(result)
}

/// One row of the fundamental-weight surjectivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalRow {
    /// 0-based index `i` of `omega_i`.
    pub index: usize,
    pub restricted: Vec<i64>,
    pub top_multiplicity: u64,
    pub multiplicity_one: bool,
}

/// For each fundamental weight `omega_i` of `G`: the multiplicity of
/// `omega_i|_{T_H}` in the characteristic-zero branching.
pub fn fundamental_weight_surjectivity_scan<S: Scalar>(
    emb: &Embedding<S>,
) -> Result<Vec<FundamentalRow>> {
    let g = emb.g();
    (0..g.rank())
        .map(|i| {
            let omega: Weight<S> = g.fundamental_weight(i)?;
            let top = emb.restrict(&omega)?;
            let top = top
                .to_ints()
                .ok_or_else(|| Error::NotIntegral(top.to_string()))?;
            let b = branch(emb, &omega)?;
            let m = b.get(&top).copied().unwrap_or(0);
            Ok(FundamentalRow {
                index: i,
                restricted: top,
                top_multiplicity: m,
                multiplicity_one: m == 1,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Embedding<Rational64>;
    type W = Weight<Rational64>;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_module() {
        for s in ["A1", "C2", "E6"] {
            let r = rs(s);
            let ch = freudenthal(&r, &W::zero(r.rank())).unwrap();
            assert_eq!(ch.multiplicities().len(), 1);
            assert_eq!(ch.multiplicity(&vec![0; r.rank()]), 1);
            assert_eq!(ch.dimension(&r), 1);
        }
    }

    #[test]
    fn a1_defining_rep() {
        let a1 = rs("A1");
        let ch = freudenthal(&a1, &W::from_ints(&[1])).unwrap();
        assert_eq!(ch.multiplicities(), &BTreeMap::from([(vec![1], 1)]));
        assert_eq!(ch.dimension(&a1), 2);
    }

    #[test]
    fn a2_adjoint() {
        let a2 = rs("A2");
        let ch = freudenthal(&a2, &W::from_ints(&[1, 1])).unwrap();
        assert_eq!(ch.multiplicity(&[0, 0]), 2);
        assert_eq!(ch.dimension(&a2), 8);
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for (s, lams) in [
            ("G2", vec![vec![1, 0], vec![0, 1], vec![2, 1]]),
            ("F4", vec![vec![0, 0, 0, 1], vec![1, 0, 0, 0]]),
            (
                "E6",
                vec![
                    vec![1, 0, 0, 0, 0, 0],
                    vec![0, 1, 0, 0, 0, 0],
                    vec![0, 0, 0, 1, 0, 0],
                ],
            ),
            ("B3", vec![vec![1, 1, 1]]),
        ] {
            let r = rs(s);
            for lam in lams {
                let ch = freudenthal(&r, &W::from_ints(&lam)).unwrap();
                assert_eq!(ch.dimension(&r), weyl_dimension(&r, &lam), "{s} {lam:?}");
            }
        }
        assert_eq!(weyl_dimension(&rs("E6"), &[0, 0, 0, 1, 0, 0]), 2925);
        assert_eq!(weyl_dimension(&rs("G2"), &[1, 0]), 7);
    }

    #[test]
    fn freudenthal_rejects_bad_input() {
        let a2 = rs("A2");
        assert!(matches!(
            freudenthal(&a2, &W::from_ints(&[1, -1])),
            Err(Error::NotDominant(_))
        ));
        let half = W::new(vec![Rational64::new(1, 2), Rational64::zero()]);
        assert!(matches!(
            freudenthal(&a2, &half),
            Err(Error::NotIntegral(_))
        ));
    }

    #[test]
    fn identity_branching_is_trivial() {
        let e = E::identity(&rs("B2")).unwrap();
        let b = branch(&e, &W::from_ints(&[1, 1])).unwrap();
        assert_eq!(b, BTreeMap::from([(vec![1, 1], 1)]));
    }

    #[test]
    fn two_times_two_is_three_plus_one() {
        let e = E::diagonal(&rs("A1"), 2).unwrap();
        let b = branch(&e, &W::from_ints(&[1, 1])).unwrap();
        assert_eq!(b, BTreeMap::from([(vec![2], 1), (vec![0], 1)]));
    }

    #[test]
    fn seven_of_so7_stays_irreducible_on_g2() {
        let e = E::folding_b3g2().unwrap();
        let b = branch(&e, &W::from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(b, BTreeMap::from([(vec![1, 0], 1)]));
        // spin rep 8 = 7 + 1
        let b = branch(&e, &W::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(b, BTreeMap::from([(vec![1, 0], 1), (vec![0, 0], 1)]));
    }

    #[test]
    fn scan_rows() {
        let e = E::identity(&rs("A3")).unwrap();
        let rows = fundamental_weight_surjectivity_scan(&e).unwrap();
        assert!(rows.iter().all(|r| r.multiplicity_one));
        let rows = fundamental_weight_surjectivity_scan(&E::folding_b3g2().unwrap()).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.top_multiplicity >= 1));
        let rows =
            fundamental_weight_surjectivity_scan(&E::diagonal(&rs("A1"), 3).unwrap()).unwrap();
        for r in rows {
            assert_eq!(r.restricted, vec![1]);
            assert_eq!(r.top_multiplicity, 1);
        }
    }

    #[test]
    fn branch_to_a_torus() {
        let e = E::from_parts(
            rs("A1"),
            RootSystem::trivial(),
            vec![],
            vec![vec![Rational64::from_integer(1)]],
            crate::embed::Provenance::Custom,
            None,
        );
        let b = branch(&e, &W::from_ints(&[3])).unwrap();
        assert_eq!(b, BTreeMap::from([(vec![], 4)]));
    }
}
