//! Simply-laced root systems of types A, D and E.
//!
//! Roots are integer coefficient vectors over the simple roots. Simple roots
//! are numbered as in Bourbaki; the library uses 0-based indices, so the
//! Bourbaki vertex `k` is index `k - 1`. With all simple roots of squared
//! length 2, the Cartan matrix is the Gram matrix of the pairing and the
//! fundamental weight `ϖ_i` pairs with a root to give its `i`-th coefficient.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// Integer vector in the simple-root basis.
///
/// Ordered by height first and lexicographically within one height, which is
/// the canonical root order used for every deterministic tie-break.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root(SmallVec<[i32; 8]>);

impl Root {
    pub fn new(coeffs: &[i32]) -> Self {
        Root(SmallVec::from_slice(coeffs))
    }

    pub fn zero(rank: usize) -> Self {
        Root(SmallVec::from_elem(0, rank))
    }

    /// The simple root `α_i` (0-based index).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut r = Root::zero(rank);
        r.0[i] = 1;
        r
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Coefficient at `α_i`; equals `⟨ϖ_i, self⟩`.
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coefficients nonnegative and not all zero.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// Indices of the nonzero coefficients.
    pub fn support(&self) -> IndexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Index of the simple root this vector equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: i32, other: &Root) -> Root {
        debug_assert_eq!(self.rank(), other.rank());
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.add_scaled(1, rhs)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self.add_scaled(-1, rhs)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    D,
    E,
}

/// An admissible simply-laced (kind, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    kind: Kind,
    rank: usize,
}

impl CartanType {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let ok = match kind {
            Kind::A => rank >= 1,
            Kind::D => rank >= 4,
            Kind::E => (6..=8).contains(&rank),
        };
        if !ok || rank > IndexSet::CAPACITY {
            return Err(Error::UnsupportedRootSystem(format!("{kind:?}{rank}")));
        }
        Ok(CartanType { kind, rank })
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Dynkin edges as 0-based index pairs `(i, j)` with `i < j`.
    pub fn dynkin_edges(self) -> Vec<(usize, usize)> {
        let r = self.rank;
        let mut edges: Vec<(usize, usize)> = match self.kind {
            Kind::A => (0..r - 1).map(|i| (i, i + 1)).collect(),
            Kind::D => {
                let mut e: Vec<_> = (0..r - 2).map(|i| (i, i + 1)).collect();
                e.push((r - 3, r - 1));
                e
            }
            Kind::E => {
                // Bourbaki: 1-3, 3-4, 4-5, ..., and the branch 2-4.
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..r - 1).map(|i| (i, i + 1)));
                e
            }
        };
        edges.sort_unstable();
        edges
    }

    /// Number of positive roots from the classification.
    pub fn expected_positive_count(self) -> usize {
        let r = self.rank;
        match (self.kind, r) {
            (Kind::A, _) => r * (r + 1) / 2,
            (Kind::D, _) => r * (r - 1),
            (Kind::E, 6) => 36,
            (Kind::E, 7) => 63,
            (Kind::E, _) => 120,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `"A3"`, `"d4"`, `"E8"` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed root system `{s}`"));
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Kind::A,
            Some('D') => Kind::D,
            Some('E') => Kind::E,
            Some(_) => return Err(Error::UnsupportedRootSystem(s.to_string())),
            None => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(kind, rank)
    }
}

/// An irreducible simply-laced root system with its positive roots
/// enumerated in canonical order.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<i32>,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<IndexSet>,
    positive: Vec<Root>,
    positive_index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn build(kind: Kind, rank: usize) -> Result<Self> {
        Ok(Self::from_type(CartanType::new(kind, rank)?))
    }

    pub fn parse(name: &str) -> Result<Self> {
        Ok(Self::from_type(name.parse()?))
    }

    pub fn from_type(cartan_type: CartanType) -> Self {
        let r = cartan_type.rank();
        let edges = cartan_type.dynkin_edges();
        let mut cartan = vec![0; r * r];
        let mut neighbors = vec![IndexSet::empty(); r];
        for i in 0..r {
            cartan[i * r + i] = 2;
        }
        for &(i, j) in &edges {
            cartan[i * r + j] = -1;
            cartan[j * r + i] = -1;
            neighbors[i].insert(j);
            neighbors[j].insert(i);
        }
        let mut rs = RootSystem {
            cartan_type,
            cartan,
            edges,
            neighbors,
            positive: Vec::new(),
            positive_index: HashMap::new(),
        };
        rs.generate_positive_roots();
        rs
    }

    /// Closure of the simple roots under `α, β ↦ α + β` whenever
    /// `(α, β) = -1`. Extending by simple roots suffices: every positive root
    /// of height > 1 is `β + α_i` with `(β, α_i) = -1`.
    fn generate_positive_roots(&mut self) {
        let r = self.rank();
        let mut roots: Vec<Root> = (0..r).map(|i| Root::simple(r, i)).collect();
        let mut seen: std::collections::HashSet<Root> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..r {
                    if self.pair_with_simple(beta, i) == -1 {
                        let mut sum = beta.clone();
                        sum.0[i] += 1;
                        if seen.insert(sum.clone()) {
                            next.push(sum);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            frontier = next;
        }
        roots.sort();
        self.positive_index = roots.iter().cloned().zip(0..).collect();
        self.positive = roots;
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn kind(&self) -> Kind {
        self.cartan_type.kind()
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Entry `(α_i, α_j)` of the Cartan matrix.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i * self.rank() + j]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let r = self.rank();
        (0..r).map(|i| self.cartan[i * r..(i + 1) * r].to_vec()).collect()
    }

    pub fn dynkin_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> IndexSet {
        self.neighbors[i]
    }

    pub fn all_indices(&self) -> IndexSet {
        IndexSet::full(self.rank())
    }

    /// Positive roots in canonical order (by height, then lexicographic).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root system is nonempty")
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn positive_index(&self, root: &Root) -> Option<usize> {
        self.positive_index.get(root).copied()
    }

    pub fn is_positive_root(&self, v: &Root) -> bool {
        self.positive_index.contains_key(v)
    }

    pub fn is_root(&self, v: &Root) -> bool {
        v.rank() == self.rank() && (self.is_positive_root(v) || self.is_positive_root(&-v))
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub(crate) fn check_rank(&self, v: &Root) -> Result<()> {
        if v.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: v.rank(),
            })
        }
    }

    pub(crate) fn check_root(&self, v: &Root) -> Result<()> {
        self.check_rank(v)?;
        if self.is_root(v) {
            Ok(())
        } else {
            Err(Error::NotARoot(v.to_string()))
        }
    }

    pub(crate) fn check_positive_root(&self, v: &Root) -> Result<()> {
        self.check_rank(v)?;
        if self.is_positive_root(v) {
            Ok(())
        } else if self.is_root(v) {
            Err(Error::NotPositive(v.to_string()))
        } else {
            Err(Error::NotARoot(v.to_string()))
        }
    }

    fn pair_with_simple(&self, v: &Root, i: usize) -> i32 {
        let r = self.rank();
        let row = &self.cartan[i * r..(i + 1) * r];
        row.iter().zip(v.coeffs()).map(|(a, b)| a * b).sum()
    }

    /// `vᵀ C w` without rank checks.
    pub(crate) fn pair(&self, v: &Root, w: &Root) -> i32 {
        (0..self.rank())
            .filter(|&i| v.coeff(i) != 0)
            .map(|i| v.coeff(i) * self.pair_with_simple(w, i))
            .sum()
    }

    /// The scalar product `(v, w)`.
    pub fn pairing(&self, v: &Root, w: &Root) -> Result<i32> {
        self.check_rank(v)?;
        self.check_rank(w)?;
        Ok(self.pair(v, w))
    }

    pub(crate) fn reflect_unchecked(&self, alpha: &Root, beta: &Root) -> Root {
        beta.add_scaled(-self.pair(alpha, beta), alpha)
    }

    /// `σ_α β = β − (α, β) α`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        self.check_root(alpha)?;
        self.check_rank(beta)?;
        Ok(self.reflect_unchecked(alpha, beta))
    }

    /// Whether `α + β` is a root. Decided both by membership and by the
    /// pairing criterion `(α, β) = -1`; the two must agree.
    pub fn is_root_sum(&self, alpha: &Root, beta: &Root) -> Result<bool> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        if alpha == beta || *alpha == -beta {
            return Err(Error::Precondition(format!(
                "is_root_sum needs α ≠ ±β, got {alpha} and {beta}"
            )));
        }
        let by_membership = self.is_root(&(alpha + beta));
        let by_pairing = self.pair(alpha, beta) == -1;
        if by_membership != by_pairing {
            return Err(Error::Inconsistent(format!(
                "root-sum test disagrees for {alpha} and {beta}"
            )));
        }
        Ok(by_membership)
    }

    /// `R_I(A)`: roots of `roots` whose support meets `indices`.
    pub fn restrict<'a>(
        &self,
        roots: impl IntoIterator<Item = &'a Root>,
        indices: IndexSet,
    ) -> Vec<Root> {
        roots
            .into_iter()
            .filter(|r| r.support().intersects(indices))
            .cloned()
            .collect()
    }
}

/// `α ≺ β`: `β − α` is a nonzero sum of positive roots, equivalently a
/// nonzero vector with nonnegative coefficients.
pub fn prec(alpha: &Root, beta: &Root) -> bool {
    alpha.rank() == beta.rank()
        && alpha.coeffs().iter().zip(beta.coeffs()).all(|(a, b)| a <= b)
        && alpha != beta
}
