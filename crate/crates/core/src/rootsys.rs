//! Root systems of simple and product type, with weights in the
//! fundamental-weight basis.
//!
//! Simple roots follow Bourbaki numbering. Internally every index is
//! 0-based; the text grammar and the CLI use 1-based node labels.
//!
//! Conventions:
//! * `cartan[i][j] = <alpha_j, alpha_i^vee>`, so column `j` holds the
//!   fundamental-weight coordinates of `alpha_j`.
//! * Roots are integer vectors in the simple-root basis.
//! * A weight `lambda` has `coords[i] = <lambda, alpha_i^vee>`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Upper bound on positive roots accepted from an arbitrary Cartan matrix.
const MAX_POSITIVE_ROOTS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One irreducible (or, for `D2`, formally irreducible) factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: CartanType,
    pub rank: usize,
    /// Global simple-root indices of this factor, in its own Bourbaki order.
    pub nodes: Vec<usize>,
}

impl Component {
    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }
}

/// Bourbaki Cartan matrix of a single factor.
fn cartan_block(kind: CartanType, rank: usize) -> std::result::Result<Vec<Vec<i64>>, String> {
    use CartanType::*;
    let valid = match kind {
        A | B | C => rank >= 1,
        D => rank >= 2,
        E => (6..=8).contains(&rank),
        F => rank == 4,
        G => rank == 2,
    };
    if !valid {
        return Err(format!("rank {rank} is not valid for type {kind}"));
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        A | B | C | F | G => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
        D => {
            if n >= 3 {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
        }
        E => {
            link(0, 2);
            link(1, 3);
            for i in 3..n {
                link(i - 1, i);
            }
        }
    }
    match kind {
        B if n >= 2 => a[n - 1][n - 2] = -2,
        C if n >= 2 => a[n - 2][n - 1] = -2,
        F => a[2][1] = -2,
        G => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

/// Exact rational inverse by Gauss-Jordan elimination.
fn invert(matrix: &[Vec<i64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational64>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn connected_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Root-length symmetrizer `d_i = (alpha_i, alpha_i) / 2`, scaled to the
/// smallest positive integers on each component.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    for comp in connected_components(cartan) {
        d[comp[0]] = Some(Rational64::one());
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i != j && cartan[i][j] != 0 {
                    if cartan[j][i] == 0 {
                        return Err(Error::NotFiniteType("asymmetric zero pattern".into()));
                    }
                    let dj = di * Rational64::new(cartan[i][j], cartan[j][i]);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            queue.push_back(j);
                        }
                        Some(existing) if existing != dj => {
                            return Err(Error::NotFiniteType("not symmetrizable".into()));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let lcm = comp.iter().fold(1i64, |acc, &i| {
            num_integer::lcm(acc, *d[i].unwrap().denom())
        });
        let scaled: Vec<i64> = comp
            .iter()
            .map(|&i| (d[i].unwrap() * lcm).to_integer())
            .collect();
        let g = scaled.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
        for (&i, &s) in comp.iter().zip(&scaled) {
            d[i] = Some(Rational64::from_integer(s / g));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// Positive roots by root strings: `beta + alpha_i` is a root exactly when
/// `p - <beta, alpha_i^vee> > 0`, `p` being the length of the downward
/// `alpha_i`-string through `beta`.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        if all.len() > MAX_POSITIVE_ROOTS {
            return Err(Error::NotFiniteType(
                "root closure does not terminate".into(),
            ));
        }
        layer = next.into_iter().collect();
    }
    let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    Ok(roots)
}

/// Names a connected Cartan subdiagram by rank, root count and bond data.
fn classify(cartan: &[Vec<i64>], nodes: &[usize], npos: usize, d: &[i64]) -> CartanType {
    let r = nodes.len();
    let lengths: Vec<i64> = nodes.iter().map(|&i| d[i]).collect();
    let max = *lengths.iter().max().unwrap();
    let simply_laced = lengths.iter().all(|&x| x == max);
    if r == 1 {
        return CartanType::A;
    }
    if simply_laced {
        return if npos == r * (r + 1) / 2 {
            CartanType::A
        } else if npos == r * (r - 1) {
            CartanType::D
        } else {
            CartanType::E
        };
    }
    let _ = cartan;
    if r == 2 && npos == 6 {
        return CartanType::G;
    }
    if r == 4 && npos == 24 {
        return CartanType::F;
    }
    let long = lengths.iter().filter(|&&x| x == max).count();
    let short = r - long;
    if long > short || (long == short && lengths[0] == max) {
        CartanType::B
    } else {
        CartanType::C
    }
}

/// Cartan data of a (possibly reducible) finite root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    inverse_cartan: Vec<Vec<Rational64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    root_weights: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Product root system with block-diagonal Bourbaki Cartan matrix.
    pub fn new(spec: &[(CartanType, usize)]) -> Result<Self> {
        let total: usize = spec.iter().map(|&(_, r)| r).sum();
        let mut cartan = vec![vec![0i64; total]; total];
        let mut components = Vec::with_capacity(spec.len());
        let mut offset = 0;
        for &(kind, rank) in spec {
            let block = cartan_block(kind, rank).map_err(|reason| Error::InvalidComponent {
                component: format!("{kind}{rank}"),
                reason,
            })?;
            for i in 0..rank {
                for j in 0..rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            components.push(Component {
                kind,
                rank,
                nodes: (offset..offset + rank).collect(),
            });
            offset += rank;
        }
        Self::assemble(cartan, components)
    }

    pub fn simple(kind: CartanType, rank: usize) -> Result<Self> {
        Self::new(&[(kind, rank)])
    }

    /// Rank-0 root system (a torus).
    pub fn trivial() -> Self {
        Self::new(&[]).expect("empty root system")
    }

    /// Root system with an arbitrary finite-type Cartan matrix; factors are
    /// named by classification and keep the given node order.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if cartan.iter().any(|row| row.len() != n) {
            return Err(Error::NotFiniteType("matrix is not square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::NotFiniteType(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::NotFiniteType("positive off-diagonal entry".into()));
                }
            }
        }
        let sym = symmetrizer(&cartan)?;
        let roots = generate_positive_roots(&cartan)?;
        let components = connected_components(&cartan)
            .into_iter()
            .map(|nodes| {
                let npos = roots
                    .iter()
                    .filter(|r| {
                        r.iter()
                            .enumerate()
                            .any(|(i, &c)| c != 0 && nodes.contains(&i))
                    })
                    .count();
                Component {
                    kind: classify(&cartan, &nodes, npos, &sym),
                    rank: nodes.len(),
                    nodes,
                }
            })
            .collect();
        Self::assemble(cartan, components)
    }

    fn assemble(cartan: Vec<Vec<i64>>, components: Vec<Component>) -> Result<Self> {
        let n = cartan.len();
        let sym = symmetrizer(&cartan)?;
        let inverse_cartan =
            invert(&cartan).ok_or_else(|| Error::NotFiniteType("singular Cartan matrix".into()))?;
        let positive_roots = generate_positive_roots(&cartan)?;
        let mut positive_coroots = Vec::with_capacity(positive_roots.len());
        let mut root_weights = Vec::with_capacity(positive_roots.len());
        for beta in &positive_roots {
            // (beta, beta) with (alpha_i, alpha_j) = d_i a_ij
            let norm: i64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| beta[i] * beta[j] * sym[i] * cartan[i][j])
                .sum();
            let coroot: Vec<i64> = (0..n)
                .map(|j| {
                    let num = 2 * beta[j] * sym[j];
                    debug_assert_eq!(num % norm, 0);
                    num / norm
                })
                .collect();
            positive_coroots.push(coroot);
            root_weights.push(
                (0..n)
                    .map(|i| (0..n).map(|j| cartan[i][j] * beta[j]).sum())
                    .collect(),
            );
        }
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        Ok(RootSystem {
            components,
            cartan,
            sym,
            inverse_cartan,
            positive_roots,
            positive_coroots,
            root_weights,
            index,
        })
    }

    /// Block-diagonal product; factors keep their own node order.
    pub fn product(factors: &[&RootSystem]) -> Result<Self> {
        let total: usize = factors.iter().map(|f| f.rank()).sum();
        let mut cartan = vec![vec![0i64; total]; total];
        let mut components = Vec::new();
        let mut offset = 0;
        for f in factors {
            for i in 0..f.rank() {
                for j in 0..f.rank() {
                    cartan[offset + i][offset + j] = f.cartan[i][j];
                }
            }
            components.extend(f.components.iter().map(|c| Component {
                kind: c.kind,
                rank: c.rank,
                nodes: c.nodes.iter().map(|&i| i + offset).collect(),
            }));
            offset += f.rank();
        }
        Self::assemble(cartan, components)
    }

    /// Levi subsystem spanned by the simple roots in `subset` (in that order).
    pub fn subsystem(&self, subset: &[usize]) -> Result<Self> {
        let subset = self.check_subset(subset)?;
        let cartan = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        Self::from_cartan(cartan)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(alpha_i, alpha_i) / 2`, normalized per component.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational64>] {
        &self.inverse_cartan
    }

    /// Positive roots in the simple-root basis, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Coroot of the `k`-th positive root in the simple-coroot basis.
    pub fn positive_coroot(&self, k: usize) -> &[i64] {
        &self.positive_coroots[k]
    }

    /// Fundamental-weight coordinates of the `k`-th positive root.
    pub fn positive_root_weight(&self, k: usize) -> &[i64] {
        &self.root_weights[k]
    }

    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// Symmetric form `(alpha_i, alpha_j) = d_i a_ij` on simple roots.
    pub fn root_inner_product(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i] * b[j] * self.sym[i] * self.cartan[i][j])
            .sum()
    }

    /// `(lambda, beta)` for `lambda` in fundamental coordinates and `beta` in
    /// root coordinates: `sum_j beta_j d_j lambda_j`.
    pub fn weight_root_inner_product(&self, lambda: &[i64], beta: &[i64]) -> i64 {
        (0..self.rank())
            .map(|j| beta[j] * self.sym[j] * lambda[j])
            .sum()
    }

    /// Coroot of an arbitrary root in the simple-coroot basis.
    pub fn coroot(&self, root: &[i64]) -> Result<Vec<i64>> {
        if root.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: root.len(),
            });
        }
        if let Some(k) = self.index.get(root) {
            return Ok(self.positive_coroots[*k].clone());
        }
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        match self.index.get(&neg) {
            Some(k) => Ok(self.positive_coroots[*k].iter().map(|x| -x).collect()),
            None => Err(Error::NotARoot(format!("{root:?}"))),
        }
    }

    /// `<lambda, beta^vee>` for any root `beta` in the simple-root basis.
    pub fn cartan_pairing<S: Scalar>(&self, lambda: &Weight<S>, root: &[i64]) -> Result<S> {
        self.check_weight(lambda)?;
        let coroot = self.coroot(root)?;
        Ok(pair_with_coroot(lambda, &coroot))
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight<S: Scalar>(&self, root: &[i64]) -> Weight<S> {
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|i| S::from_int((0..n).map(|j| self.cartan[i][j] * root[j]).sum()))
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords<S: Scalar>(&self, lambda: &Weight<S>) -> Vec<S> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(S::zero(), |acc, j| {
                    let q = self.inverse_cartan[i][j];
                    acc + S::from_ratio(*q.numer(), *q.denom()) * lambda.coords[j].clone()
                })
            })
            .collect()
    }

    pub fn rho<S: Scalar>(&self) -> Weight<S> {
        Weight::new(vec![S::one(); self.rank()])
    }

    /// `rho_J = sum_{j in J} omega_j`.
    pub fn rho_j<S: Scalar>(&self, subset: &[usize]) -> Result<Weight<S>> {
        let subset = self.check_subset(subset)?;
        let mut coords = vec![S::zero(); self.rank()];
        for j in subset {
            coords[j] = S::one();
        }
        Ok(Weight::new(coords))
    }

    pub fn fundamental_weight<S: Scalar>(&self, i: usize) -> Result<Weight<S>> {
        self.rho_j(&[i])
    }

    /// Indices of positive roots supported on `subset` (the roots of `R_J^+`).
    pub fn parabolic_positive_roots(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let subset = self.check_subset(subset)?;
        Ok(self
            .positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                r.iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || subset.contains(&i))
            })
            .map(|(k, _)| k)
            .collect())
    }

    /// Sorted, deduplicated copy of `subset` after range checking.
    pub fn check_subset(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = subset.to_vec();
        out.sort_unstable();
        out.dedup();
        if let Some(&bad) = out.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: self.rank(),
            });
        }
        Ok(out)
    }

    pub fn all_nodes(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    pub(crate) fn check_weight<S: Scalar>(&self, lambda: &Weight<S>) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        Ok(())
    }
}

pub(crate) fn pair_with_coroot<S: Scalar>(lambda: &Weight<S>, coroot: &[i64]) -> S {
    lambda
        .coords
        .iter()
        .zip(coroot)
        .fold(S::zero(), |acc, (x, &c)| acc + x.clone() * S::from_int(c))
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "T0");
        }
        let labels: Vec<String> = self.components.iter().map(Component::label).collect();
        write!(f, "{}", labels.join(","))
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Comma-separated `X<rank>` tokens, e.g. `"C2"` or `"A3,A3,A3"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut spec = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let mut chars = token.chars();
            let kind = chars
                .next()
                .and_then(CartanType::from_letter)
                .ok_or_else(|| Error::BadRootSystemSpec(s.to_string()))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::BadRootSystemSpec(s.to_string()))?;
            spec.push((kind, rank));
        }
        RootSystem::new(&spec)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Weight<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![S::zero(); rank],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| S::from_int(c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    /// All coordinates `>= 0`.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| *c >= S::zero())
    }

    /// All coordinates `> 0`.
    pub fn is_regular_dominant(&self) -> bool {
        self.coords.iter().all(|c| *c > S::zero())
    }

    pub fn scale(&self, k: &S) -> Self {
        Weight {
            coords: self.coords.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(Scalar::as_integer).collect()
    }

    pub fn render(&self) -> Vec<String> {
        self.coords.iter().map(Scalar::render).collect()
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

impl<S: Scalar> Serialize for Weight<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.render().serialize(serializer)
    }
}

impl<S: Scalar> Add for &Weight<S> {
    type Output = Weight<S>;

    fn add(self, rhs: &Weight<S>) -> Weight<S> {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &Weight<S> {
    type Output = Weight<S>;

    fn sub(self, rhs: &Weight<S>) -> Weight<S> {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Add for Weight<S> {
    type Output = Weight<S>;

    fn add(self, rhs: Weight<S>) -> Weight<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Weight<S> {
    type Output = Weight<S>;

    fn sub(self, rhs: Weight<S>) -> Weight<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Weight<S> {
    type Output = Weight<S>;

    fn neg(self) -> Weight<S> {
        Weight::new(self.coords.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Mul<S> for Weight<S> {
    type Output = Weight<S>;

    fn mul(self, k: S) -> Weight<S> {
        self.scale(&k)
    }
}
