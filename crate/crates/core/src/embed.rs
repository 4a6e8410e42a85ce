//! Subgroup embeddings `H ⊆ G` as rational restriction maps on weights.
//!
//! Row `k` of the restriction matrix expresses the `k`-th simple coroot of
//! `H` in the simple coroots of `G`, so `restrict(lambda)` has coordinates
//! `<lambda|_{T_H}, gamma_k^vee>`. When `H` has a positive-dimensional centre
//! (Levi subgroups), extra `center` rows record the central part of the
//! character so that roots of `G` outside `H` are not confused with roots of
//! `H`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{pair_with_coroot, CartanType, RootSystem, Weight};
use crate::scalar::Scalar;

/// Which builder produced an embedding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Identity {
        g: String,
    },
    /// Subset holds 0-based node indices.
    Levi {
        g: String,
        subset: Vec<usize>,
    },
    Diagonal {
        h: String,
        copies: usize,
    },
    FoldingAC {
        m: usize,
    },
    FoldingDB {
        n: usize,
    },
    FoldingE6F4,
    FoldingB3G2,
    SoInSl {
        n: usize,
    },
    FrobeniusTwistedDiagonal {
        h: String,
        p: u64,
    },
    Custom,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Identity { g } => write!(f, "identity({g})"),
            Provenance::Levi { g, subset } => {
                let nodes: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "levi({g};{{{}}})", nodes.join(","))
            }
            Provenance::Diagonal { h, copies } => write!(f, "diagonal({h},{copies})"),
            Provenance::FoldingAC { m } => write!(f, "folding_AC({m})"),
            Provenance::FoldingDB { n } => write!(f, "folding_DB({n})"),
            Provenance::FoldingE6F4 => write!(f, "folding_E6F4"),
            Provenance::FoldingB3G2 => write!(f, "folding_B3G2"),
            Provenance::SoInSl { n } => write!(f, "so_in_sl({n})"),
            Provenance::FrobeniusTwistedDiagonal { h, p } => {
                write!(f, "frobenius_twisted_diagonal({h},{p})")
            }
            Provenance::Custom => write!(f, "custom"),
        }
    }
}

/// A failed compatibility condition, naming the offending root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub root: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.root, self.message)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Embedding<S> {
    g: RootSystem,
    h: RootSystem,
    restriction: Vec<Vec<S>>,
    center: Vec<Vec<S>>,
    provenance: Provenance,
    twist_exponent: Option<u64>,
}

fn int_rows<S: Scalar>(rows: Vec<Vec<i64>>) -> Vec<Vec<S>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(S::from_int).collect())
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl<S: Scalar> Embedding<S> {
    /// Assembles an embedding without validating it.
    pub fn from_parts(
        g: RootSystem,
        h: RootSystem,
        restriction: Vec<Vec<S>>,
        center: Vec<Vec<S>>,
        provenance: Provenance,
        twist_exponent: Option<u64>,
    ) -> Self {
        Embedding {
            g,
            h,
            restriction,
            center,
            provenance,
            twist_exponent,
        }
    }

    fn validated(self) -> Result<Self> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
        } else {
            let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
            Err(Error::InvalidEmbedding {
                label: self.label(),
                violations: text.join("; "),
            })
        }
    }

    /// User-supplied restriction matrix, checked by [`Embedding::validate`].
    pub fn custom(
        g: RootSystem,
        h: RootSystem,
        restriction: Vec<Vec<S>>,
        center: Vec<Vec<S>>,
    ) -> Result<Self> {
        Self::from_parts(g, h, restriction, center, Provenance::Custom, None).validated()
    }

    pub fn identity(g: &RootSystem) -> Result<Self> {
        let n = g.rank();
        let rows = (0..n).map(|i| unit(n, i)).collect();
        Self::from_parts(
            g.clone(),
            g.clone(),
            int_rows(rows),
            Vec::new(),
            Provenance::Identity { g: g.to_string() },
            None,
        )
        .validated()
    }

    /// Levi subgroup `L_J`; the centre is recorded through the simple-root
    /// coefficients `alpha_k`, `k ∉ J`.
    pub fn levi(g: &RootSystem, subset: &[usize]) -> Result<Self> {
        let subset = g.check_subset(subset)?;
        let n = g.rank();
        let h = g.subsystem(&subset)?;
        let rows = subset.iter().map(|&j| unit(n, j)).collect();
        let center = (0..n)
            .filter(|k| !subset.contains(k))
            .map(|k| {
                g.inverse_cartan()[k]
                    .iter()
                    .map(|q| S::from_ratio(*q.numer(), *q.denom()))
                    .collect()
            })
            .collect();
        Self::from_parts(
            g.clone(),
            h,
            int_rows(rows),
            center,
            Provenance::Levi {
                g: g.to_string(),
                subset,
            },
            None,
        )
        .validated()
    }

    /// `H` embedded diagonally in `H^k`.
    pub fn diagonal(h: &RootSystem, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::InvalidParameter(
                "diagonal needs at least one copy".into(),
            ));
        }
        let n = h.rank();
        let g = RootSystem::product(&vec![h; copies])?;
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n * copies];
                for c in 0..copies {
                    r[c * n + i] = 1;
                }
                r
            })
            .collect();
        Self::from_parts(
            g,
            h.clone(),
            int_rows(rows),
            Vec::new(),
            Provenance::Diagonal {
                h: h.to_string(),
                copies,
            },
            None,
        )
        .validated()
    }

    /// `g ↦ (g, F(g))` inside `H × H`, `F` the `p`-th power Frobenius.
    pub fn frobenius_twisted_diagonal(h: &RootSystem, p: u64) -> Result<Self> {
        if !crate::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = h.rank();
        let g = RootSystem::product(&[h, h])?;
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; 2 * n];
                r[i] = 1;
                r[n + i] = p as i64;
                r
            })
            .collect();
        Self::from_parts(
            g,
            h.clone(),
            int_rows(rows),
            Vec::new(),
            Provenance::FrobeniusTwistedDiagonal {
                h: h.to_string(),
                p,
            },
            Some(p),
        )
        .validated()
    }

    /// `C_m ⊂ A_{2m-1}` as the fixed points of the diagram flip.
    pub fn folding_ac(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "folding_AC needs m >= 2, got {m}"
            )));
        }
        let g = RootSystem::simple(CartanType::A, 2 * m - 1)?;
        let h = RootSystem::simple(CartanType::C, m)?;
        let n = g.rank();
        let rows = (0..m)
            .map(|i| {
                let mut r = unit(n, i);
                r[n - 1 - i] = 1;
                r
            })
            .collect();
        Self::from_parts(
            g,
            h,
            int_rows(rows),
            Vec::new(),
            Provenance::FoldingAC { m },
            None,
        )
        .validated()
    }

    /// `B_{n-1} ⊂ D_n`, folding the two fork nodes.
    pub fn folding_db(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameter(format!(
                "folding_DB needs n >= 4, got {n}"
            )));
        }
        let g = RootSystem::simple(CartanType::D, n)?;
        let h = RootSystem::simple(CartanType::B, n - 1)?;
        let rows = (0..n - 1)
            .map(|i| {
                let mut r = unit(n, i);
                if i == n - 2 {
                    r[n - 1] = 1;
                }
                r
            })
            .collect();
        Self::from_parts(
            g,
            h,
            int_rows(rows),
            Vec::new(),
            Provenance::FoldingDB { n },
            None,
        )
        .validated()
    }

    /// `F_4 ⊂ E_6`: fixed nodes 2, 4 give the long roots, the orbits
    /// {3,5} and {1,6} the short ones.
    pub fn folding_e6f4() -> Result<Self> {
        let g = RootSystem::simple(CartanType::E, 6)?;
        let h = RootSystem::simple(CartanType::F, 4)?;
        let rows = vec![
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 1, 0, 1, 0],
            vec![1, 0, 0, 0, 0, 1],
        ];
        Self::from_parts(
            g,
            h,
            int_rows(rows),
            Vec::new(),
            Provenance::FoldingE6F4,
            None,
        )
        .validated()
    }

    /// `G_2 ⊂ B_3`, obtained from the triality folding `G_2 ⊂ D_4` through
    /// `B_3 ⊂ D_4`: the short coroot of `G_2` is `alpha_1^vee + alpha_3^vee`.
    pub fn folding_b3g2() -> Result<Self> {
        let g = RootSystem::simple(CartanType::B, 3)?;
        let h = RootSystem::simple(CartanType::G, 2)?;
        let rows = vec![vec![1, 0, 1], vec![0, 1, 0]];
        Self::from_parts(
            g,
            h,
            int_rows(rows),
            Vec::new(),
            Provenance::FoldingB3G2,
            None,
        )
        .validated()
    }

    /// `SO_n ⊂ SL_n` for the anti-diagonal form, with maximal torus
    /// cocharacters `f_k = e_k - e_{n+1-k}`.
    pub fn so_in_sl(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "so_in_sl needs n >= 3, got {n}"
            )));
        }
        let m = n / 2;
        let g = RootSystem::simple(CartanType::A, n - 1)?;
        let h = if n % 2 == 1 {
            RootSystem::simple(CartanType::B, m)?
        } else {
            RootSystem::simple(CartanType::D, m)?
        };
        // cocharacter f_k (0-based k) in the e-basis of GL_n
        let f = |k: usize| {
            let mut v = vec![0i64; n];
            v[k] += 1;
            v[n - 1 - k] -= 1;
            v
        };
        let add = |a: &[i64], b: &[i64], sb: i64| -> Vec<i64> {
            a.iter().zip(b).map(|(x, y)| x + sb * y).collect()
        };
        let mut coroots: Vec<Vec<i64>> = (0..m - 1).map(|k| add(&f(k), &f(k + 1), -1)).collect();
        coroots.push(if n % 2 == 1 {
            f(m - 1).iter().map(|x| 2 * x).collect()
        } else {
            add(&f(m - 2), &f(m - 1), 1)
        });
        // e-basis to simple coroots of SL_n: partial sums
        let rows = coroots
            .into_iter()
            .map(|v| {
                v.iter()
                    .take(n - 1)
                    .scan(0i64, |acc, x| {
                        *acc += x;
                        Some(*acc)
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(
            g,
            h,
            int_rows(rows),
            Vec::new(),
            Provenance::SoInSl { n },
            None,
        )
        .validated()
    }

    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    pub fn h(&self) -> &RootSystem {
        &self.h
    }

    pub fn restriction_matrix(&self) -> &[Vec<S>] {
        &self.restriction
    }

    pub fn center_matrix(&self) -> &[Vec<S>] {
        &self.center
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn label(&self) -> String {
        self.provenance.to_string()
    }

    pub fn twist_exponent(&self) -> Option<u64> {
        self.twist_exponent
    }

    /// `H` is semisimple (no central rows).
    pub fn is_semisimple(&self) -> bool {
        self.center.is_empty()
    }

    fn apply(rows: &[Vec<S>], lambda: &Weight<S>) -> Vec<S> {
        rows.iter()
            .map(|row| {
                row.iter()
                    .zip(lambda.coords())
                    .fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    /// `lambda|_{T_H}` in the fundamental weights of `H`.
    pub fn restrict(&self, lambda: &Weight<S>) -> Result<Weight<S>> {
        self.g.check_weight(lambda)?;
        Ok(Weight::new(Self::apply(&self.restriction, lambda)))
    }

    /// Central coordinates of `lambda|_{T_H}` (empty for semisimple `H`).
    pub fn restrict_central(&self, lambda: &Weight<S>) -> Result<Vec<S>> {
        self.g.check_weight(lambda)?;
        Ok(Self::apply(&self.center, lambda))
    }

    /// Half-sum of the positive roots of `H`: all ones.
    pub fn rho_h(&self) -> Weight<S> {
        self.h.rho()
    }

    /// Restrictions of the positive roots of `G`, deduplicated, in root order.
    pub fn restricted_root_images(&self) -> Vec<Weight<S>> {
        let mut out: Vec<Weight<S>> = Vec::new();
        for k in 0..self.g.positive_roots().len() {
            let beta = Weight::from_ints(self.g.positive_root_weight(k));
            let image = Self::apply(&self.restriction, &beta);
            let image = Weight::new(image);
            if !out.contains(&image) {
                out.push(image);
            }
        }
        out
    }

    /// Index of the positive root `gamma` of `H` with `gamma == v` (sign +1)
    /// or `gamma == -v` (sign -1).
    pub(crate) fn match_h_root(&self, v: &Weight<S>) -> Option<(usize, i64)> {
        let h = &self.h;
        (0..h.positive_roots().len()).find_map(|k| {
            let gamma: Weight<S> = Weight::from_ints(h.positive_root_weight(k));
            if &gamma == v {
                Some((k, 1))
            } else if (&gamma + v).coords().iter().all(|c| c.is_zero()) {
                Some((k, -1))
            } else {
                None
            }
        })
    }

    /// Full restriction of a root of `G` (root coordinates): semisimple part
    /// and whether the central part vanishes.
    pub(crate) fn restrict_root(&self, root: &[i64]) -> (Weight<S>, bool) {
        let w: Weight<S> = self.g.root_to_weight(root);
        let ss = Weight::new(Self::apply(&self.restriction, &w));
        let central_zero = Self::apply(&self.center, &w).iter().all(|c| c.is_zero());
        (ss, central_zero)
    }

    /// Compatibility of `B_H = B ∩ H` with `B`: every positive root of `H` is
    /// the restriction of a positive root of `G`, and no positive root of
    /// `G` restricts to a negative root of `H`.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (gr, hr) = (self.g.rank(), self.h.rank());
        let shape_ok = self.restriction.len() == hr
            && self.restriction.iter().all(|r| r.len() == gr)
            && self.center.iter().all(|r| r.len() == gr);
        if !shape_ok {
            out.push(Violation {
                root: "-".into(),
                message: format!(
                    "restriction matrix must be {hr}x{gr} with {gr} columns of centre data"
                ),
            });
            return out;
        }
        let mut hit = vec![false; self.h.positive_roots().len()];
        for beta in self.g.positive_roots() {
            let (image, central_zero) = self.restrict_root(beta);
            if !central_zero {
                continue;
            }
            match self.match_h_root(&image) {
                Some((k, 1)) => hit[k] = true,
                Some((k, _)) => out.push(Violation {
                    root: format!("{beta:?}"),
                    message: format!(
                        "positive root of G restricts to the negative H-root -{:?}",
                        self.h.positive_roots()[k]
                    ),
                }),
                None => {}
            }
        }
        for (k, ok) in hit.iter().enumerate() {
            if !ok {
                out.push(Violation {
                    root: format!("{:?}", self.h.positive_roots()[k]),
                    message: "positive root of H is not the restriction of a positive root of G"
                        .into(),
                });
            }
        }
        out
    }

    /// Frobenius-twist red flag: an explicit twist exponent, or a factor of
    /// `G` whose restriction columns are all divisible by `p` without
    /// vanishing.
    pub fn detect_twist(&self, p: u64) -> bool {
        if self.twist_exponent.is_some() {
            return true;
        }
        let p = p as i64;
        self.g.components().iter().any(|comp| {
            let entries: Vec<&S> = self
                .restriction
                .iter()
                .flat_map(|row| comp.nodes.iter().map(move |&j| &row[j]))
                .collect();
            let nonzero = entries.iter().any(|x| !x.is_zero());
            let divisible = entries
                .iter()
                .all(|x| x.as_integer().is_some_and(|v| v % p == 0));
            nonzero && divisible
        })
    }

    /// `<lambda|_{T_H}, beta^vee>` for the `k`-th positive root of `H`.
    pub fn h_pairing(&self, mu: &Weight<S>, k: usize) -> S {
        pair_with_coroot(mu, self.h.positive_coroot(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type E = Embedding<Rational64>;
    type W = Weight<Rational64>;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn identity_restricts_identically() {
        let e = E::identity(&rs("B3")).unwrap();
        let lam = W::from_ints(&[1, 2, 3]);
        assert_eq!(e.restrict(&lam).unwrap(), lam);
        assert!(e.validate().is_empty());
    }

    #[test]
    fn triple_diagonal_restricts_rho_to_three_rho_h() {
        for h in ["A1", "A2", "G2"] {
            let h = rs(h);
            let e = E::diagonal(&h, 3).unwrap();
            let rho: W = e.g().rho();
            assert_eq!(
                e.restrict(&rho).unwrap(),
                h.rho::<Rational64>().scale(&q(3))
            );
        }
    }

    #[test]
    fn diagonal_sums_blocks() {
        let e = E::diagonal(&rs("B2"), 2).unwrap();
        let lam = W::from_ints(&[1, 2, 3, 5]);
        assert_eq!(e.restrict(&lam).unwrap(), W::from_ints(&[4, 7]));
        assert_eq!(
            E::diagonal(&rs("A2"), 1).unwrap().restriction_matrix(),
            E::identity(&rs("A2")).unwrap().restriction_matrix()
        );
    }

    #[test]
    fn levi_pairs_against_j_coroots() {
        let c2 = rs("C2");
        let e = E::levi(&c2, &[0]).unwrap();
        assert_eq!(e.h().to_string(), "A1");
        let rho: W = c2.rho();
        let two_rho_h = e.rho_h().scale(&q(2));
        let diff = &two_rho_h - &e.restrict(&rho).unwrap();
        assert_eq!(diff, W::from_ints(&[1]));
        // central part separates beta from -alpha
        let (img, central_zero) = e.restrict_root(&[0, 1]);
        assert_eq!(img, W::from_ints(&[-2]));
        assert!(!central_zero);
    }

    #[test]
    fn rho_h_is_all_ones() {
        let e = E::folding_e6f4().unwrap();
        assert_eq!(e.rho_h(), W::from_ints(&[1, 1, 1, 1]));
        let torus = E::from_parts(
            rs("A1"),
            RootSystem::trivial(),
            vec![],
            vec![vec![q(1)]],
            Provenance::Custom,
            None,
        );
        assert_eq!(torus.rho_h().rank(), 0);
        assert_eq!(E::identity(&rs("A1")).unwrap().rho_h(), W::from_ints(&[1]));
    }

    #[test]
    fn sign_flipped_row_is_rejected() {
        let a2 = rs("A2");
        let rows = vec![vec![q(-1), q(0)], vec![q(0), q(1)]];
        let e = E::from_parts(
            a2.clone(),
            a2.clone(),
            rows.clone(),
            vec![],
            Provenance::Custom,
            None,
        );
        assert!(!e.validate().is_empty());
        assert!(matches!(
            E::custom(a2.clone(), a2, rows, vec![]),
            Err(Error::InvalidEmbedding { .. })
        ));
    }

    #[test]
    fn b3_roots_restrict_onto_g2_roots() {
        let e = E::folding_b3g2().unwrap();
        let images = e.restricted_root_images();
        let g2 = e.h();
        let expected: Vec<W> = (0..6)
            .map(|k| W::from_ints(g2.positive_root_weight(k)))
            .collect();
        for x in &expected {
            assert!(images.contains(x), "{x} not hit");
        }
        for x in &images {
            assert!(
                expected.contains(x) || x.coords().iter().all(|c| c == &q(0)),
                "{x} stray"
            );
        }
    }

    #[test]
    fn frobenius_twist_matrix() {
        let e = E::frobenius_twisted_diagonal(&rs("A1"), 5).unwrap();
        assert_eq!(e.restriction_matrix(), &[vec![q(1), q(5)]]);
        assert_eq!(e.twist_exponent(), Some(5));
        assert!(e.detect_twist(5));
        assert!(matches!(
            E::frobenius_twisted_diagonal(&rs("A1"), 4),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn twist_detection_on_untwisted_builders() {
        let id = E::identity(&rs("A2")).unwrap();
        let levi = E::levi(&rs("C3"), &[0, 2]).unwrap();
        for p in [2, 3, 5, 7] {
            assert!(!id.detect_twist(p));
            assert!(!levi.detect_twist(p));
        }
        // a column block divisible by p without an explicit exponent
        let g = rs("A1,A1");
        let h = rs("A1");
        let rows = vec![vec![q(1), q(3)]];
        let e = E::from_parts(g, h, rows, vec![], Provenance::Custom, None);
        assert!(e.detect_twist(3));
        assert!(!e.detect_twist(2));
    }

    #[test]
    fn builders_validate_over_their_range() {
        for m in 2..=8 {
            E::folding_ac(m).unwrap();
        }
        for n in 4..=8 {
            E::folding_db(n).unwrap();
        }
        for n in 3..=8 {
            E::so_in_sl(n).unwrap();
        }
        E::folding_e6f4().unwrap();
        E::folding_b3g2().unwrap();
        for s in ["A1", "A2", "B2", "G2", "C3"] {
            E::diagonal(&rs(s), 2).unwrap();
            E::diagonal(&rs(s), 3).unwrap();
            E::frobenius_twisted_diagonal(&rs(s), 3).unwrap();
        }
        let f4 = rs("F4");
        for mask in 0u32..16 {
            let j: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
            E::levi(&f4, &j).unwrap();
        }
    }

    #[test]
    fn builder_parameter_errors() {
        assert!(matches!(E::folding_ac(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(E::folding_db(3), Err(Error::InvalidParameter(_))));
        assert!(matches!(E::so_in_sl(2), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            E::diagonal(&rs("A1"), 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            E::levi(&rs("A2"), &[5]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn so_in_sl_small_cases() {
        let e = E::so_in_sl(4).unwrap();
        assert_eq!(e.h().to_string(), "D2");
        assert_eq!(
            e.restriction_matrix(),
            &[vec![q(1), q(0), q(1)], vec![q(1), q(2), q(1)]]
        );
        assert_eq!(
            E::so_in_sl(3).unwrap().restriction_matrix(),
            &[vec![q(2), q(2)]]
        );
    }

    #[test]
    fn minimal_rank_builders_keep_h_simple_roots_positive_against_rho() {
        let all = [
            E::folding_ac(3).unwrap(),
            E::folding_db(5).unwrap(),
            E::folding_e6f4().unwrap(),
            E::folding_b3g2().unwrap(),
            E::diagonal(&rs("A2"), 2).unwrap(),
        ];
        for e in all {
            let r = e.restrict(&e.g().rho()).unwrap();
            assert!(r.coords().iter().all(|c| *c >= q(1)), "{}", e.label());
        }
    }
}
