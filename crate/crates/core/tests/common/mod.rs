//! Independent oracle for the integration tests: roots from a norm-2
//! lattice scan, Weyl elements as integer matrices, lengths by counting
//! negated positive roots, and a Pieri expansion whose length condition is
//! checked directly instead of through root splittings.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use schubert_mf::{Kind, WeylElement};

pub type Vector = Vec<i32>;

/// Columns are the images of the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matrix(pub Vec<Vector>);

pub struct Oracle {
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    pub edges: Vec<(usize, usize)>,
    pub positive: Vec<Vector>,
    positive_set: HashSet<Vector>,
}

/// 0-based Bourbaki edges, written out by hand.
pub fn edges(kind: Kind, rank: usize) -> Vec<(usize, usize)> {
    match kind {
        Kind::A => (0..rank - 1).map(|i| (i, i + 1)).collect(),
        Kind::D => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        Kind::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..rank - 1).map(|i| (i, i + 1)));
            e
        }
    }
}

impl Oracle {
    pub fn new(kind: Kind, rank: usize) -> Self {
        let edges = edges(kind, rank);
        let mut cartan = vec![vec![0; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        let bound = match kind {
            Kind::A => 1,
            Kind::D => 2,
            Kind::E => 6,
        };
        let mut positive = Vec::new();
        let mut v = vec![0i32; rank];
        loop {
            let mut pos = 0;
            loop {
                if pos == rank {
                    positive.sort_by_key(|r: &Vector| (r.iter().sum::<i32>(), r.clone()));
                    let positive_set = positive.iter().cloned().collect();
                    return Oracle {
                        rank,
                        cartan,
                        edges,
                        positive,
                        positive_set,
                    };
                }
                v[pos] += 1;
                if v[pos] <= bound {
                    break;
                }
                v[pos] = 0;
                pos += 1;
            }
            let norm: i32 = (0..rank)
                .map(|i| (0..rank).map(|j| v[i] * cartan[i][j] * v[j]).sum::<i32>())
                .sum();
            if norm == 2 {
                positive.push(v.clone());
            }
        }
    }

    pub fn pair(&self, a: &[i32], b: &[i32]) -> i32 {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| a[i] * self.cartan[i][j] * b[j]).sum::<i32>())
            .sum()
    }

    pub fn is_positive_root(&self, v: &[i32]) -> bool {
        self.positive_set.contains(v)
    }

    pub fn is_root(&self, v: &[i32]) -> bool {
        let neg: Vector = v.iter().map(|x| -x).collect();
        self.is_positive_root(v) || self.is_positive_root(&neg)
    }

    pub fn simple(&self, i: usize) -> Vector {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn identity(&self) -> Matrix {
        Matrix((0..self.rank).map(|i| self.simple(i)).collect())
    }

    pub fn apply(&self, w: &Matrix, v: &[i32]) -> Vector {
        let mut out = vec![0; self.rank];
        for (j, &c) in v.iter().enumerate() {
            for (o, x) in out.iter_mut().zip(&w.0[j]) {
                *o += c * x;
            }
        }
        out
    }

    /// `σ_α ∘ w`.
    pub fn reflect_left(&self, alpha: &[i32], w: &Matrix) -> Matrix {
        Matrix(
            w.0.iter()
                .map(|col| {
                    let p = self.pair(alpha, col);
                    col.iter().zip(alpha).map(|(c, a)| c - p * a).collect()
                })
                .collect(),
        )
    }

    /// `ℓ(w) = #{α > 0 : wα < 0}`.
    pub fn length(&self, w: &Matrix) -> usize {
        self.positive
            .iter()
            .filter(|a| self.apply(w, a).iter().any(|&x| x < 0))
            .count()
    }

    /// `Φ⁺ ∩ wΦ⁻ = {−wβ : β > 0, wβ < 0}`, sorted.
    pub fn inversion_set(&self, w: &Matrix) -> Vec<Vector> {
        let mut out: Vec<Vector> = self
            .positive
            .iter()
            .map(|b| self.apply(w, b))
            .filter(|img| img.iter().any(|&x| x < 0))
            .map(|img| img.iter().map(|x| -x).collect())
            .collect();
        out.sort();
        out
    }

    /// Every element, breadth first from the identity.
    pub fn group(&self) -> Vec<Matrix> {
        let mut seen = HashSet::new();
        let mut order = vec![self.identity()];
        seen.insert(self.identity());
        let mut k = 0;
        while k < order.len() {
            let w = order[k].clone();
            for i in 0..self.rank {
                let next = self.reflect_left(&self.simple(i), &w);
                if seen.insert(next.clone()) {
                    order.push(next);
                }
            }
            k += 1;
        }
        order
    }

    /// `D_1^{n_1} ⋯ D_r^{n_r}` as a map from elements to coefficients.
    pub fn expand(&self, n: &[u32]) -> HashMap<Matrix, u128> {
        let mut v: HashMap<Matrix, u128> = HashMap::new();
        v.insert(self.identity(), 1);
        for (i, &k) in n.iter().enumerate() {
            for _ in 0..k {
                v = self.pieri(&v, i);
            }
        }
        v
    }

    pub fn pieri(&self, v: &HashMap<Matrix, u128>, i: usize) -> HashMap<Matrix, u128> {
        let mut out = HashMap::new();
        for (w, &c) in v {
            let l = self.length(w);
            for alpha in &self.positive {
                if alpha[i] == 0 {
                    continue;
                }
                let next = self.reflect_left(alpha, w);
                if self.length(&next) == l + 1 {
                    *out.entry(next).or_insert(0) += c * alpha[i] as u128;
                }
            }
        }
        out
    }

    /// Every `D^n` with `Σ n = degree`, keyed by `n`.
    pub fn expansions_of_degree(&self, degree: u32) -> BTreeMap<Vec<u32>, HashMap<Matrix, u128>> {
        compositions(degree, self.rank)
            .into_iter()
            .map(|n| {
                let v = self.expand(&n);
                (n, v)
            })
            .collect()
    }
}

/// The oracle matrix of a library element.
pub fn matrix_of(w: &WeylElement) -> Matrix {
    Matrix(w.images().iter().map(|r| r.coeffs().to_vec()).collect())
}

pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All simple Dynkin paths from `start` that avoid `forbidden`.
pub fn paths_from(edges: &[(usize, usize)], start: usize, forbidden: &[usize]) -> Vec<Vec<usize>> {
    let adjacent = |a: usize, b: usize| edges.contains(&(a, b)) || edges.contains(&(b, a));
    let mut out = Vec::new();
    let mut stack = vec![vec![start]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        for v in 0..=edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) {
            if adjacent(last, v) && !path.contains(&v) && !forbidden.contains(&v) {
                let mut p = path.clone();
                p.push(v);
                stack.push(p);
            }
        }
        out.push(path);
    }
    out
}

/// Every multipath of a diagram with `rank` vertices.
pub fn all_multipaths(edges: &[(usize, usize)], rank: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(
        edges: &[(usize, usize)],
        rank: usize,
        beginnings: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        out.push(acc.clone());
        for b in 0..rank {
            if beginnings.contains(&b) {
                continue;
            }
            for p in paths_from(edges, b, beginnings) {
                beginnings.push(b);
                acc.push(p);
                go(edges, rank, beginnings, acc, out);
                acc.pop();
                beginnings.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(edges, rank, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}
