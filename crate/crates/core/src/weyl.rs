//! Weyl group elements in canonical matrix form.
//!
//! An element is identified by its integer matrix on fundamental-weight
//! coordinates; a companion matrix on simple-root coordinates is kept for
//! root bookkeeping (lengths, descents). Both are exact.

use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::scalar::Scalar;

/// Default bound on `|W_J|` for exhaustive enumeration.
pub const DEFAULT_ENUM_CAP: u128 = 1_000_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    weights: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.weights.hash(state);
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            weights: identity_matrix(rank),
            roots: identity_matrix(rank),
            word: Vec::new(),
        }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<Self> {
        Self::identity(rs.rank()).mul_simple(rs, i)
    }

    /// `s_{w[0]} s_{w[1]} ...`; the empty word gives the identity.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        word.iter()
            .try_fold(Self::identity(rs.rank()), |w, &i| w.mul_simple(rs, i))
    }

    /// Right multiplication `w s_j`.
    pub fn mul_simple(&self, rs: &RootSystem, j: usize) -> Result<Self> {
        let n = rs.rank();
        if j >= n {
            return Err(Error::IndexOutOfRange { index: j, rank: n });
        }
        if self.weights.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: self.weights.len(),
            });
        }
        let a = rs.cartan_matrix();
        let mut weights = self.weights.clone();
        for (r, row) in weights.iter_mut().enumerate() {
            let shift: i64 = (0..n).map(|k| self.weights[r][k] * a[k][j]).sum();
            row[j] -= shift;
        }
        let mut roots = self.roots.clone();
        for (r, row) in roots.iter_mut().enumerate() {
            let m = self.roots[r][j];
            if m != 0 {
                for l in 0..n {
                    row[l] -= m * a[j][l];
                }
            }
        }
        let mut word = self.word.clone();
        word.push(j);
        Ok(WeylElement {
            weights,
            roots,
            word,
        })
    }

    /// Product `self * other`.
    pub fn compose(&self, other: &WeylElement) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(WeylElement {
            weights: matmul(&self.weights, &other.weights),
            roots: matmul(&self.roots, &other.roots),
            word,
        })
    }

    pub fn inverse(&self, rs: &RootSystem) -> Result<Self> {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(rs, &rev)
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// Canonical form: the matrix on fundamental-weight coordinates.
    pub fn weight_matrix(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Some word producing this element (reduced when produced by
    /// [`enumerate`] or [`longest_element`]).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.weights == identity_matrix(self.rank())
    }

    pub fn act<S: Scalar>(&self, lambda: &Weight<S>) -> Result<Weight<S>> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        let c = lambda.coords();
        Ok(Weight::new(
            self.weights
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(c)
                        .fold(S::zero(), |acc, (&m, x)| acc + S::from_int(m) * x.clone())
                })
                .collect(),
        ))
    }

    /// Image of an element of the root lattice (simple-root coordinates).
    pub fn act_root(&self, root: &[i64]) -> Vec<i64> {
        self.roots
            .iter()
            .map(|row| row.iter().zip(root).map(|(m, x)| m * x).sum())
            .collect()
    }

    /// `w(alpha_j) < 0`.
    pub fn has_right_descent(&self, j: usize) -> bool {
        self.roots.iter().any(|row| row[j] < 0)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|beta| self.act_root(beta).iter().any(|&c| c < 0))
            .count()
    }

    /// A reduced word, found by stripping right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(j) = (0..rs.rank()).find(|&j| w.has_right_descent(j)) {
            rev.push(j);
            w = w.mul_simple(rs, j).expect("index in range");
        }
        rev.reverse();
        rev
    }
}

/// Longest element `w_0^J` of the parabolic subgroup `W_J`.
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> Result<WeylElement> {
    let subset = rs.check_subset(subset)?;
    let mut w = WeylElement::identity(rs.rank());
    while let Some(&j) = subset.iter().find(|&&j| !w.has_right_descent(j)) {
        w = w.mul_simple(rs, j)?;
    }
    Ok(w)
}

/// `|W_J|` from the exponents of `R_J`: the root-height distribution is the
/// dual partition of the exponent multiset, and `|W| = prod (m_i + 1)`.
pub fn group_order(rs: &RootSystem, subset: &[usize]) -> Result<u128> {
    let roots = rs.parabolic_positive_roots(subset)?;
    let mut by_height: HashMap<i64, u32> = HashMap::new();
    for k in roots {
        *by_height
            .entry(rs.positive_roots()[k].iter().sum())
            .or_default() += 1;
    }
    let top = by_height.keys().copied().max().unwrap_or(0);
    let mut order: u128 = 1;
    for m in 1..=top {
        let here = by_height.get(&m).copied().unwrap_or(0);
        let above = by_height.get(&(m + 1)).copied().unwrap_or(0);
        order *= (m as u128 + 1).pow(here - above);
    }
    Ok(order)
}

/// All elements of `W_J` by breadth-first closure under right
/// multiplication; each element carries a reduced word.
pub fn enumerate(rs: &RootSystem, subset: &[usize], cap: u128) -> Result<Vec<WeylElement>> {
    let subset = rs.check_subset(subset)?;
    let order = group_order(rs, &subset)?;
    if order > cap {
        return Err(Error::EnumerationCap { order, cap });
    }
    let start = WeylElement::identity(rs.rank());
    let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::with_capacity(order as usize);
    seen.insert(start.weights.clone(), 0);
    let mut out = vec![start];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for &j in &subset {
            let next = out[k].mul_simple(rs, j)?;
            if !seen.contains_key(&next.weights) {
                seen.insert(next.weights.clone(), out.len());
                queue.push_back(out.len());
                out.push(next);
            }
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// Both sides of `sum_{alpha in R_J^+} alpha = rho_J - w_0^J rho_J`.
#[derive(Clone, Debug, PartialEq)]
pub struct StDecomposition<S> {
    pub lhs: Weight<S>,
    pub rhs: Weight<S>,
    pub equal: bool,
}

pub fn verify_st_decomp<S: Scalar>(
    rs: &RootSystem,
    subset: &[usize],
) -> Result<StDecomposition<S>> {
    let n = rs.rank();
    let mut sum = vec![0i64; n];
    for k in rs.parabolic_positive_roots(subset)? {
        for (s, c) in sum.iter_mut().zip(&rs.positive_roots()[k]) {
            *s += c;
        }
    }
    let lhs: Weight<S> = rs.root_to_weight(&sum);
    let rho_j: Weight<S> = rs.rho_j(subset)?;
    let w0 = longest_element(rs, subset)?;
    let rhs = &rho_j - &w0.act(&rho_j)?;
    let equal = lhs == rhs;
    Ok(StDecomposition { lhs, rhs, equal })
}

/// The two tensor-factor weights `(p-1) rho_J` and `(1-p) w_0^J rho_J`.
pub fn steinberg_weights<S: Scalar>(
    rs: &RootSystem,
    subset: &[usize],
    p: u64,
) -> Result<(Weight<S>, Weight<S>)> {
    if !crate::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let rho_j: Weight<S> = rs.rho_j(subset)?;
    let w0 = longest_element(rs, subset)?;
    let pm1 = S::from_int(p as i64 - 1);
    let first = rho_j.scale(&pm1);
    let second = w0.act(&rho_j)?.scale(&-pm1);
    Ok((first, second))
}
