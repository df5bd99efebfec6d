//! Path-originating sequences, Dynkin multipaths and the maximal
//! multiplicity-free degree.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::rootsys::{CartanType, Kind, Root, RootSystem};
use crate::weyl::WeylElement;

/// Partial sums `β_1, …, β_k` of simple roots along a Dynkin path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathOriginatingSequence {
    pub betas: Vec<Root>,
}

impl PathOriginatingSequence {
    /// The vertices `i_1, …, i_k` of the underlying path.
    pub fn path(&self) -> Vec<usize> {
        let mut prev: Option<&Root> = None;
        self.betas
            .iter()
            .map(|b| {
                let step = match prev {
                    None => b.clone(),
                    Some(p) => b - p,
                };
                prev = Some(b);
                step.simple_index().expect("differences are simple roots")
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }
}

/// Successive differences (starting from 0) are simple roots, consecutive
/// ones pair to −1 and all others to 0.
pub fn is_path_originating(rs: &RootSystem, betas: &[Root]) -> bool {
    if betas.iter().any(|b| b.rank() != rs.rank()) {
        return false;
    }
    let mut steps = Vec::with_capacity(betas.len());
    let mut prev = Root::zero(rs.rank());
    for b in betas {
        let step = b - &prev;
        if step.simple_index().is_none() {
            return false;
        }
        steps.push(step);
        prev = b.clone();
    }
    for a in 0..steps.len() {
        for b in a + 1..steps.len() {
            let want = if b == a + 1 { -1 } else { 0 };
            if rs.pair(&steps[a], &steps[b]) != want {
                return false;
            }
        }
    }
    true
}

fn path_to_betas(rank: usize, path: &[usize]) -> Vec<Root> {
    let mut acc = Root::zero(rank);
    path.iter()
        .map(|&i| {
            acc = &acc + &Root::simple(rank, i);
            acc.clone()
        })
        .collect()
}

fn product_of_reflections(rs: &RootSystem, start: WeylElement, betas: &[Root]) -> WeylElement {
    betas
        .iter()
        .fold(start, |w, b| rs.left_reflect(b, &w))
}

/// The path-originating sequence starting at `α_i` whose members are
/// exactly the inversions of `w`, if there is one; this is the case iff
/// `D_i^{ℓ(w)}` contains `Z_w` with coefficient 1.
pub fn single_divisor_classify(
    rs: &RootSystem,
    w: &WeylElement,
    i: usize,
) -> Result<Option<PathOriginatingSequence>> {
    rs.check_index(i)?;
    if w.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: w.rank(),
        });
    }
    if w.is_identity() {
        return Ok(Some(PathOriginatingSequence::default()));
    }
    let simple = rs.simple_root(i);
    if !w.is_inversion(&simple) {
        return Ok(None);
    }
    let mut path = vec![i];
    let mut visited = IndexSet::singleton(i);
    let mut beta = simple;
    while path.len() < w.length() {
        let last = *path.last().expect("nonempty");
        let mut next = rs
            .neighbors(last)
            .difference(visited)
            .iter()
            .filter(|&k| w.is_inversion(&(&beta + &rs.simple_root(k))));
        let Some(k) = next.next() else {
            return Ok(None);
        };
        if next.next().is_some() {
            return Ok(None);
        }
        beta = &beta + &rs.simple_root(k);
        path.push(k);
        visited.insert(k);
    }
    let betas = path_to_betas(rs.rank(), &path);
    if product_of_reflections(rs, rs.identity(), &betas) != *w {
        return Err(Error::Inconsistent(format!(
            "path {path:?} covers the inversion set but its reflection product differs"
        )));
    }
    Ok(Some(PathOriginatingSequence { betas }))
}

/// Vertex count of the longest simple Dynkin path starting at `i`.
pub fn max_single_divisor_power(rs: &RootSystem, i: usize) -> Result<usize> {
    rs.check_index(i)?;
    Ok(longest_path(rs, i, IndexSet::empty()).len())
}

/// The lexicographically least among the longest simple paths from
/// `start` that avoid `forbidden` (`start` itself must not be forbidden).
fn longest_path(rs: &RootSystem, start: usize, forbidden: IndexSet) -> Vec<usize> {
    fn dfs(
        rs: &RootSystem,
        path: &mut Vec<usize>,
        used: IndexSet,
        best: &mut Vec<usize>,
    ) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        let last = *path.last().expect("nonempty");
        for k in rs.neighbors(last).difference(used).iter() {
            path.push(k);
            dfs(rs, path, used.with(k), best);
            path.pop();
        }
    }
    let mut best = Vec::new();
    dfs(rs, &mut vec![start], forbidden.with(start), &mut best);
    best
}

/// All simple paths from `start` avoiding `forbidden`, in DFS order.
pub fn simple_paths_from(rs: &RootSystem, start: usize, forbidden: IndexSet) -> Vec<Vec<usize>> {
    fn dfs(rs: &RootSystem, path: &mut Vec<usize>, used: IndexSet, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().expect("nonempty");
        for k in rs.neighbors(last).difference(used).iter() {
            path.push(k);
            dfs(rs, path, used.with(k), out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if !forbidden.contains(start) {
        dfs(rs, &mut vec![start], forbidden.with(start), &mut out);
    }
    out
}

/// An ordered family of simple Dynkin paths (0-based vertices).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multipath {
    pub paths: Vec<Vec<usize>>,
}

impl Multipath {
    pub fn new(paths: Vec<Vec<usize>>) -> Self {
        Multipath { paths }
    }

    pub fn beginnings(&self) -> Vec<usize> {
        self.paths.iter().filter_map(|p| p.first().copied()).collect()
    }

    pub fn beginning_set(&self) -> IndexSet {
        self.beginnings().into_iter().collect()
    }

    pub fn total_length(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }
}

/// Every path is a nonempty simple Dynkin path, and no beginning occurs
/// in any later path.
pub fn is_multipath(rs: &RootSystem, mp: &Multipath) -> bool {
    let mut earlier = IndexSet::empty();
    for path in &mp.paths {
        let Some(&first) = path.first() else {
            return false;
        };
        let mut seen = IndexSet::empty();
        for (pos, &v) in path.iter().enumerate() {
            if v >= rs.rank() || seen.contains(v) || earlier.contains(v) {
                return false;
            }
            if pos > 0 && !rs.neighbors(path[pos - 1]).contains(v) {
                return false;
            }
            seen.insert(v);
        }
        earlier.insert(first);
    }
    true
}

/// `w = σ_{β_{k,n_k}} ⋯ σ_{β_{1,1}}` built from the partial sums along each
/// path, with `n` putting each path's length on its beginning.
pub fn multipath_witness(rs: &RootSystem, mp: &Multipath) -> Result<(WeylElement, Vec<u32>)> {
    if !is_multipath(rs, mp) {
        return Err(Error::InvalidMultipath(format!("{:?}", mp.paths)));
    }
    let mut w = rs.identity();
    let mut n = vec![0u32; rs.rank()];
    for path in &mp.paths {
        w = product_of_reflections(rs, w, &path_to_betas(rs.rank(), path));
        n[path[0]] = path.len() as u32;
    }
    if w.length() != mp.total_length() {
        return Err(Error::Inconsistent(format!(
            "witness has length {} but the multipath has total length {}",
            w.length(),
            mp.total_length()
        )));
    }
    Ok((w, n))
}

/// Largest number of beginnings the subset search accepts.
pub const MAX_BEGINNINGS: usize = 24;

/// Maximal total length of a multipath with beginnings in `allowed`, and a
/// witness. Ties go to the lexicographically least beginnings sequence;
/// each path is the lexicographically least longest path.
pub fn max_multipath_total_length(rs: &RootSystem, allowed: IndexSet) -> Result<(usize, Multipath)> {
    if allowed.is_empty() {
        return Err(Error::Precondition("the beginning set is empty".into()));
    }
    if let Some(bad) = allowed.iter().find(|&i| i >= rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    if allowed.len() > MAX_BEGINNINGS {
        return Err(Error::Precondition(format!(
            "at most {MAX_BEGINNINGS} beginnings are supported"
        )));
    }

    struct Search<'a> {
        rs: &'a RootSystem,
        allowed: IndexSet,
        paths: HashMap<(usize, IndexSet), Vec<usize>>,
        best: HashMap<IndexSet, usize>,
    }

    impl Search<'_> {
        fn path(&mut self, i: usize, used: IndexSet) -> Vec<usize> {
            let rs = self.rs;
            self.paths
                .entry((i, used))
                .or_insert_with(|| longest_path(rs, i, used))
                .clone()
        }

        fn value(&mut self, used: IndexSet) -> usize {
            if let Some(&v) = self.best.get(&used) {
                return v;
            }
            let mut v = 0;
            for i in self.allowed.difference(used).iter() {
                let here = self.path(i, used).len() + self.value(used.with(i));
                v = v.max(here);
            }
            self.best.insert(used, v);
            v
        }
    }

    let mut search = Search {
        rs,
        allowed,
        paths: HashMap::new(),
        best: HashMap::new(),
    };
    let total = search.value(IndexSet::empty());
    let mut used = IndexSet::empty();
    let mut paths = Vec::new();
    let mut remaining = total;
    while remaining > 0 {
        let (i, path) = allowed
            .difference(used)
            .iter()
            .find_map(|i| {
                let path = search.path(i, used);
                (path.len() + search.value(used.with(i)) == remaining).then_some((i, path))
            })
            .expect("optimal value is attained");
        remaining -= path.len();
        used.insert(i);
        paths.push(path);
    }
    Ok((total, Multipath { paths }))
}

/// `r(r+1)/2` for `A_r`, one less for `D_r`, two less for `E_r`.
pub fn closed_form_max_degree(kind: Kind, rank: usize) -> Result<usize> {
    CartanType::new(kind, rank)?;
    let tri = rank * (rank + 1) / 2;
    Ok(match kind {
        Kind::A => tri,
        Kind::D => tri - 1,
        Kind::E => tri - 2,
    })
}

/// Every multipath of the diagram. The count grows quickly; intended for
/// rank at most 4.
pub fn enumerate_multipaths(rs: &RootSystem) -> Vec<Multipath> {
    fn go(rs: &RootSystem, used: IndexSet, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Multipath>) {
        out.push(Multipath::new(acc.clone()));
        for i in rs.all_indices().difference(used).iter() {
            for path in simple_paths_from(rs, i, used) {
                acc.push(path);
                go(rs, used.with(i), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(rs, IndexSet::empty(), &mut Vec::new(), &mut out);
    out
}
