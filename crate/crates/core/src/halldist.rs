//! Simple-root distributions on sets of positive roots.
//!
//! A distribution assigns to each root `α` of a set `A` a simple-root index
//! in `supp α`; its D-multiplicities count how often each index is used.
//! Existence with prescribed multiplicities is a capacitated Hall problem.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::rootsys::{prec, Root, RootSystem};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Distribution {
    assignment: BTreeMap<Root, usize>,
}

impl Distribution {
    /// Builds a distribution, checking `f(α) ∈ supp α` for every entry.
    pub fn new(assignment: BTreeMap<Root, usize>) -> Result<Self> {
        for (root, &i) in &assignment {
            if !root.support().contains(i) {
                return Err(Error::Precondition(format!(
                    "index {i} is not in the support of {root}"
                )));
            }
        }
        Ok(Distribution { assignment })
    }

    pub fn get(&self, root: &Root) -> Option<usize> {
        self.assignment.get(root).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Root, usize)> {
        self.assignment.iter().map(|(r, &i)| (r, i))
    }

    /// Whether the domain is exactly `roots`.
    pub fn covers(&self, roots: &[Root]) -> bool {
        roots.len() == self.assignment.len() && roots.iter().all(|r| self.assignment.contains_key(r))
    }

    pub fn multiplicities(&self, rank: usize) -> Vec<u32> {
        let mut n = vec![0u32; rank];
        for &i in self.assignment.values() {
            n[i] += 1;
        }
        n
    }
}

/// `R_I(A) = {α ∈ A : supp α ∩ I ≠ ∅}`.
pub fn restricted_set(roots: &[Root], indices: IndexSet) -> Vec<Root> {
    roots
        .iter()
        .filter(|r| r.support().intersects(indices))
        .cloned()
        .collect()
}

fn check_sum(roots: &[Root], n: &[u32]) -> Result<()> {
    let sum: usize = n.iter().map(|&k| k as usize).sum();
    if sum != roots.len() {
        return Err(Error::SizeMismatch {
            size: roots.len(),
            sum,
        });
    }
    if let Some(r) = roots.iter().find(|r| r.rank() != n.len()) {
        return Err(Error::RankMismatch {
            expected: n.len(),
            got: r.rank(),
        });
    }
    Ok(())
}

/// Indices with `n_i > 0`.
pub fn involved(n: &[u32]) -> IndexSet {
    n.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, _)| i)
        .collect()
}

/// Hall condition `|R_I(A)| ≥ Σ_{i∈I} n_i` for every `I` inside the
/// involved set; equivalent to the existence of a distribution with
/// D-multiplicities `n`.
pub fn hall_feasible(roots: &[Root], n: &[u32]) -> Result<bool> {
    check_sum(roots, n)?;
    let supports: Vec<IndexSet> = roots.iter().map(Root::support).collect();
    Ok(involved(n).subsets_by_size().into_iter().all(|sub| {
        let covered = supports.iter().filter(|s| s.intersects(sub)).count();
        let demand: usize = sub.iter().map(|i| n[i] as usize).sum();
        covered >= demand
    }))
}

/// A distribution with D-multiplicities exactly `n`, found by augmenting
/// paths between roots and capacitated simple-root slots. Roots are
/// processed in the given order and slots in ascending index order.
pub fn find_distribution(roots: &[Root], n: &[u32]) -> Result<Option<Distribution>> {
    check_sum(roots, n)?;
    Ok(capacitated_matching(roots, n).map(|assign| Distribution {
        assignment: roots.iter().cloned().zip(assign).collect(),
    }))
}

/// Like [`find_distribution`] with `f(α) = i` forced.
pub fn find_distribution_pinned(
    roots: &[Root],
    n: &[u32],
    alpha: &Root,
    i: usize,
) -> Result<Option<Distribution>> {
    check_sum(roots, n)?;
    if !roots.contains(alpha) {
        return Err(Error::Precondition(format!("{alpha} is not in the root set")));
    }
    if i >= n.len() || !alpha.support().contains(i) {
        return Err(Error::Precondition(format!(
            "index {i} is not in the support of {alpha}"
        )));
    }
    if n[i] == 0 {
        return Err(Error::Precondition(format!("n_{i} is zero")));
    }
    let rest: Vec<Root> = roots.iter().filter(|r| *r != alpha).cloned().collect();
    let mut reduced = n.to_vec();
    reduced[i] -= 1;
    Ok(capacitated_matching(&rest, &reduced).map(|assign| {
        let mut assignment: BTreeMap<Root, usize> = rest.into_iter().zip(assign).collect();
        assignment.insert(alpha.clone(), i);
        Distribution { assignment }
    }))
}

/// Assigns every root a slot in its support with slot `i` used exactly
/// `caps[i]` times (the caller guarantees `Σ caps = |roots|`).
fn capacitated_matching(roots: &[Root], caps: &[u32]) -> Option<Vec<usize>> {
    let supports: Vec<Vec<usize>> = roots
        .iter()
        .map(|r| r.support().iter().filter(|&i| caps[i] > 0).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; roots.len()];
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); caps.len()];

    fn augment(
        root: usize,
        supports: &[Vec<usize>],
        caps: &[u32],
        owner: &mut [Option<usize>],
        holders: &mut [Vec<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &slot in &supports[root] {
            if visited[slot] {
                continue;
            }
            visited[slot] = true;
            if (holders[slot].len() as u32) < caps[slot] {
                holders[slot].push(root);
                owner[root] = Some(slot);
                return true;
            }
            for k in 0..holders[slot].len() {
                let other = holders[slot][k];
                if augment(other, supports, caps, owner, holders, visited) {
                    holders[slot][k] = root;
                    owner[root] = Some(slot);
                    return true;
                }
            }
        }
        false
    }

    for root in 0..roots.len() {
        let mut visited = vec![false; caps.len()];
        if !augment(root, &supports, caps, &mut owner, &mut holders, &mut visited) {
            return None;
        }
    }
    owner.into_iter().collect()
}

fn check_compat_input(w: &WeylElement, f: &Distribution, alpha: &Root) -> Result<()> {
    if !w.is_inversion(alpha) {
        return Err(Error::Precondition(format!(
            "{alpha} is not in the inversion set"
        )));
    }
    if !f.covers(w.inversion_set()) {
        return Err(Error::Precondition(
            "distribution is not defined exactly on the inversion set".into(),
        ));
    }
    Ok(())
}

/// `f` is α-compatible: `σ_α` is admissible for `w`, and every inversion
/// `β` with `α ≺ β`, `(α, β) = 1` and `β − α` not an inversion is assigned
/// an index outside `supp α`.
pub fn is_alpha_compatible(
    rs: &RootSystem,
    w: &WeylElement,
    f: &Distribution,
    alpha: &Root,
) -> Result<bool> {
    check_compat_input(w, f, alpha)?;
    if !rs.classify_unchecked(w, alpha).is_admissible_sorting() {
        return Ok(false);
    }
    let supp = alpha.support();
    Ok(w.inversion_set().iter().all(|beta| {
        let guarded = prec(alpha, beta) && rs.pair(alpha, beta) == 1 && !w.is_inversion(&(beta - alpha));
        !guarded || !supp.contains(f.get(beta).expect("covered"))
    }))
}

/// Same predicate in `≺_w` form: every inversion `β` with `α ≺_w β` and
/// `(α, β) = 1` is assigned an index outside `supp α`.
pub fn is_alpha_compatible_by_order(
    rs: &RootSystem,
    w: &WeylElement,
    f: &Distribution,
    alpha: &Root,
) -> Result<bool> {
    check_compat_input(w, f, alpha)?;
    let inv = rs.inverse(w);
    let a = inv.act(alpha);
    let supp = alpha.support();
    Ok(w.inversion_set().iter().all(|beta| {
        let guarded = rs.pair(alpha, beta) == 1 && prec(&a, &inv.act(beta));
        !guarded || !supp.contains(f.get(beta).expect("covered"))
    }))
}

/// Same predicate in symmetric form: no inversion `β` with `α ≺_w β`,
/// `(α, β) = 1`, `f(β) ∈ supp α` and `f(α) ∈ supp β`.
pub fn is_alpha_compatible_symmetric(
    rs: &RootSystem,
    w: &WeylElement,
    f: &Distribution,
    alpha: &Root,
) -> Result<bool> {
    check_compat_input(w, f, alpha)?;
    let inv = rs.inverse(w);
    let a = inv.act(alpha);
    let fa = f.get(alpha).expect("covered");
    let supp = alpha.support();
    Ok(!w.inversion_set().iter().any(|beta| {
        rs.pair(alpha, beta) == 1
            && prec(&a, &inv.act(beta))
            && supp.contains(f.get(beta).expect("covered"))
            && beta.support().contains(fa)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Kind;

    fn r(c: &[i32]) -> Root {
        Root::new(c)
    }

    fn a2_roots() -> Vec<Root> {
        RootSystem::build(Kind::A, 2).unwrap().positive_roots().to_vec()
    }

    #[test]
    fn restricted_set_examples() {
        let all = a2_roots();
        assert_eq!(
            restricted_set(&all, IndexSet::singleton(0)),
            vec![r(&[1, 0]), r(&[1, 1])]
        );
        assert!(restricted_set(&all, IndexSet::empty()).is_empty());
        assert_eq!(restricted_set(&all, IndexSet::full(2)).len(), 3);
    }

    #[test]
    fn hall_examples() {
        let all = a2_roots();
        assert!(hall_feasible(&all, &[2, 1]).unwrap());
        assert!(!hall_feasible(&all, &[3, 0]).unwrap());
        assert!(hall_feasible(&[], &[0, 0]).unwrap());
        assert!(matches!(
            hall_feasible(&all, &[1, 1]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn distribution_examples() {
        let all = a2_roots();
        let f = find_distribution(&all, &[2, 1]).unwrap().unwrap();
        assert!(f.covers(&all));
        assert_eq!(f.multiplicities(2), vec![2, 1]);
        assert_eq!(f.get(&r(&[0, 1])), Some(1));
        assert!(find_distribution(&all, &[3, 0]).unwrap().is_none());
        let single = find_distribution(&[r(&[1, 0])], &[1, 0]).unwrap().unwrap();
        assert_eq!(single.get(&r(&[1, 0])), Some(0));
    }

    #[test]
    fn pinned_examples() {
        let all = a2_roots();
        // pin α1+α2 ↦ 2: then α1 ↦ 1 and α2 must take the second index-1 slot, impossible
        assert!(find_distribution_pinned(&all, &[2, 1], &r(&[1, 1]), 1)
            .unwrap()
            .is_none());
        let f = find_distribution_pinned(&all, &[1, 2], &r(&[1, 0]), 0)
            .unwrap()
            .unwrap();
        assert_eq!(f.multiplicities(2), vec![1, 2]);
        assert!(find_distribution_pinned(&all, &[2, 1], &r(&[0, 1]), 0).is_err());
        assert!(find_distribution_pinned(&all, &[3, 0], &r(&[1, 1]), 1).is_err());
    }

    #[test]
    fn distribution_rejects_outside_support() {
        let mut m = BTreeMap::new();
        m.insert(r(&[0, 1]), 0);
        assert!(Distribution::new(m).is_err());
    }

    #[test]
    fn compatibility_basics() {
        let rs = RootSystem::build(Kind::A, 2).unwrap();
        let w0 = rs.longest();
        let f = find_distribution(w0.inversion_set(), &[2, 1]).unwrap().unwrap();
        // α1 is antisimple for w0, so every distribution is α1-compatible
        assert!(is_alpha_compatible(&rs, &w0, &f, &r(&[1, 0])).unwrap());
        // α1+α2 is not admissible for w0
        assert!(!is_alpha_compatible(&rs, &w0, &f, &r(&[1, 1])).unwrap());
        assert!(is_alpha_compatible(&rs, &rs.identity(), &f, &r(&[1, 0])).is_err());
    }
}
