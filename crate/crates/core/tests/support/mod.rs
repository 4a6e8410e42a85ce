//! Independent oracles for rank ≤ 2 root systems: hardcoded Cartan data and
//! positive roots, a Weyl group generated from the reflection formula, and
//! weight multiplicities from Kostant's alternating sum over the partition
//! function.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

pub struct Rank2Data {
    pub name: &'static str,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
}

pub fn table() -> Vec<Rank2Data> {
    vec![
        Rank2Data {
            name: "A1",
            cartan: vec![vec![2]],
            positive_roots: vec![vec![1]],
        },
        Rank2Data {
            name: "A2",
            cartan: vec![vec![2, -1], vec![-1, 2]],
            positive_roots: vec![vec![1, 0], vec![0, 1], vec![1, 1]],
        },
        Rank2Data {
            name: "C2",
            cartan: vec![vec![2, -2], vec![-1, 2]],
            positive_roots: vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]],
        },
        Rank2Data {
            name: "G2",
            cartan: vec![vec![2, -3], vec![-1, 2]],
            positive_roots: vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2],
            ],
        },
    ]
}

pub struct Oracle {
    pub data: Rank2Data,
    /// Weyl group as (matrix on fundamental coordinates, sign).
    pub group: Vec<(Vec<Vec<i64>>, i64)>,
    partitions: HashMap<Vec<i64>, u64>,
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

impl Oracle {
    pub fn new(data: Rank2Data) -> Self {
        let n = data.cartan.len();
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        // s_i(lambda) = lambda - lambda_i alpha_i, alpha_i = column i of the Cartan matrix
        let reflections: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| i64::from(r == c) - if c == i { data.cartan[r][i] } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut seen: HashMap<Vec<Vec<i64>>, i64> = HashMap::from([(id.clone(), 1)]);
        let mut queue = VecDeque::from([id]);
        while let Some(m) = queue.pop_front() {
            let sign = seen[&m];
            for s in &reflections {
                let next: Vec<Vec<i64>> = (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| (0..n).map(|k| s[r][k] * m[k][c]).sum())
                            .collect()
                    })
                    .collect();
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), -sign);
                    queue.push_back(next);
                }
            }
        }
        let mut group: Vec<_> = seen.into_iter().collect();
        group.sort();
        Oracle {
            data,
            group,
            partitions: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.data.cartan.len()
    }

    /// Root coordinates of a fundamental-coordinate vector, if integral.
    fn to_root_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let a = &self.data.cartan;
        // fundamental coords of sum c_j alpha_j are (sum_j a[i][j] c_j)_i
        match self.rank() {
            1 => (v[0] % 2 == 0).then(|| vec![v[0] / 2]),
            2 => {
                let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
                let x = a[1][1] * v[0] - a[0][1] * v[1];
                let y = -a[1][0] * v[0] + a[0][0] * v[1];
                (x % det == 0 && y % det == 0).then(|| vec![x / det, y / det])
            }
            _ => unreachable!(),
        }
    }

    /// Number of ways to write `c` as a sum of positive roots.
    fn partition(&mut self, c: &[i64]) -> u64 {
        if c.iter().any(|&x| x < 0) {
            return 0;
        }
        if c.iter().all(|&x| x == 0) {
            return 1;
        }
        if let Some(&v) = self.partitions.get(c) {
            return v;
        }
        // count multisets by processing roots in a fixed order
        let roots = self.data.positive_roots.clone();
        let v = count(&roots, c, 0, &mut HashMap::new());
        self.partitions.insert(c.to_vec(), v);
        v
    }

    /// `m_lambda(mu) = sum_w sign(w) P(w(lambda + rho) - (mu + rho))`.
    pub fn multiplicity(&mut self, lambda: &[i64], mu: &[i64]) -> u64 {
        let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
        let target: Vec<i64> = mu.iter().map(|x| x + 1).collect();
        let mut total: i64 = 0;
        for (m, sign) in self.group.clone() {
            let image = apply(&m, &shifted);
            let diff: Vec<i64> = image.iter().zip(&target).map(|(a, b)| a - b).collect();
            if let Some(c) = self.to_root_coords(&diff) {
                total += sign * self.partition(&c) as i64;
            }
        }
        assert!(total >= 0);
        total as u64
    }

    pub fn orbit_size(&self, mu: &[i64]) -> usize {
        self.group
            .iter()
            .map(|(m, _)| apply(m, mu))
            .collect::<HashSet<_>>()
            .len()
    }

    /// Dominant weights `mu <= lambda` with nonzero multiplicity.
    pub fn dominant_character(&mut self, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
        let bound = self.to_root_coords_floor(lambda);
        let mut out = BTreeMap::new();
        let ranges: Vec<i64> = bound.clone();
        let mut c = vec![0i64; self.rank()];
        loop {
            let shift: Vec<i64> = (0..self.rank())
                .map(|i| {
                    (0..self.rank())
                        .map(|j| self.data.cartan[i][j] * c[j])
                        .sum()
                })
                .collect();
            let mu: Vec<i64> = lambda.iter().zip(&shift).map(|(a, b)| a - b).collect();
            if mu.iter().all(|&x| x >= 0) {
                let m = self.multiplicity(lambda, &mu);
                if m > 0 {
                    out.insert(mu, m);
                }
            }
            let mut k = 0;
            loop {
                if k == c.len() {
                    return out;
                }
                c[k] += 1;
                if c[k] <= ranges[k] {
                    break;
                }
                c[k] = 0;
                k += 1;
            }
        }
    }

    /// Floor of the (rational) root coordinates of `lambda`.
    fn to_root_coords_floor(&self, lambda: &[i64]) -> Vec<i64> {
        let a = &self.data.cartan;
        match self.rank() {
            1 => vec![lambda[0].div_euclid(2)],
            2 => {
                let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
                let x = a[1][1] * lambda[0] - a[0][1] * lambda[1];
                let y = -a[1][0] * lambda[0] + a[0][0] * lambda[1];
                vec![x.div_euclid(det), y.div_euclid(det)]
            }
            _ => unreachable!(),
        }
    }

    pub fn dimension(&mut self, lambda: &[i64]) -> u64 {
        let ch = self.dominant_character(lambda);
        ch.iter()
            .map(|(mu, m)| m * self.orbit_size(mu) as u64)
            .sum()
    }
}

/// Multisets of roots with index at least `from` summing to `c`.
fn count(
    roots: &[Vec<i64>],
    c: &[i64],
    from: usize,
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if c.iter().all(|&x| x == 0) {
        return 1;
    }
    if let Some(&v) = memo.get(&(c.to_vec(), from)) {
        return v;
    }
    let mut total = 0;
    for k in from..roots.len() {
        let rest: Vec<i64> = c.iter().zip(&roots[k]).map(|(a, b)| a - b).collect();
        if rest.iter().all(|&x| x >= 0) {
            total += count(roots, &rest, k, memo);
        }
    }
    memo.insert((c.to_vec(), from), total);
    total
}
