//! Clusters, excessive configurations and the recursive peeling search
//! that decides whether a configuration of D-multiplicities has `C = 1`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::chow::{self, SortingCounter};
use crate::error::{Error, Result};
use crate::halldist::{involved, restricted_set};
use crate::index_set::IndexSet;
use crate::rootsys::{Root, RootSystem};
use crate::weyl::WeylElement;

/// A set of positive roots together with multiplicities summing to its size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AConfiguration {
    roots: Vec<Root>,
    n: Vec<u32>,
}

impl AConfiguration {
    /// Roots are sorted and deduplicated before the size check.
    pub fn new(rs: &RootSystem, roots: Vec<Root>, n: Vec<u32>) -> Result<Self> {
        if n.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: n.len(),
            });
        }
        for r in &roots {
            rs.check_positive_root(r)?;
        }
        let mut roots = roots;
        roots.sort();
        roots.dedup();
        let sum: usize = n.iter().map(|&k| k as usize).sum();
        if sum != roots.len() {
            return Err(Error::SizeMismatch {
                size: roots.len(),
                sum,
            });
        }
        Ok(AConfiguration { roots, n })
    }

    /// The configuration of D-multiplicities `(Φ⁺ ∩ wΦ⁻, n)`.
    pub fn of_element(rs: &RootSystem, w: &WeylElement, n: &[u32]) -> Result<Self> {
        if n.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: n.len(),
            });
        }
        let sum: usize = n.iter().map(|&k| k as usize).sum();
        if sum != w.length() {
            return Err(Error::DegreeMismatch {
                length: w.length(),
                sum,
            });
        }
        Ok(AConfiguration {
            roots: w.inversion_set().to_vec(),
            n: n.to_vec(),
        })
    }

    fn from_parts(roots: Vec<Root>, n: Vec<u32>) -> Self {
        AConfiguration { roots, n }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.n
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Indices with `n_i > 0`.
    pub fn involved(&self) -> IndexSet {
        involved(&self.n)
    }
}

/// The three cluster conditions, reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClusterCheck {
    pub coefficients_at_most_one: bool,
    pub no_negative_pairing: bool,
    pub orthogonal_supports_disjoint: bool,
}

impl ClusterCheck {
    pub fn holds(self) -> bool {
        self.coefficients_at_most_one && self.no_negative_pairing && self.orthogonal_supports_disjoint
    }
}

/// Checks whether `roots` is a cluster with essential index set `indices`.
pub fn is_i_cluster(rs: &RootSystem, roots: &[Root], indices: IndexSet) -> ClusterCheck {
    let coefficients_at_most_one = roots
        .iter()
        .all(|r| indices.iter().all(|i| r.coeff(i) <= 1));
    let mut no_negative_pairing = true;
    let mut orthogonal_supports_disjoint = true;
    for (a, alpha) in roots.iter().enumerate() {
        for beta in &roots[a + 1..] {
            match rs.pair(alpha, beta) {
                0 => {
                    if alpha.support().intersection(beta.support()).intersects(indices) {
                        orthogonal_supports_disjoint = false;
                    }
                }
                1 => {}
                _ => no_negative_pairing = false,
            }
        }
    }
    ClusterCheck {
        coefficients_at_most_one,
        no_negative_pairing,
        orthogonal_supports_disjoint,
    }
}

fn demand(n: &[u32], indices: IndexSet) -> usize {
    indices.iter().map(|i| n[i] as usize).sum()
}

/// Equality `|R_I(A)| = Σ n_i` at the involved set `I`, strict surplus on
/// every proper nonempty subset of `I`.
pub fn is_excessive(cfg: &AConfiguration) -> bool {
    let top = cfg.involved();
    if restricted_set(&cfg.roots, top).len() != demand(&cfg.n, top) {
        return false;
    }
    top.subsets_by_size()
        .into_iter()
        .filter(|j| !j.is_empty() && *j != top)
        .all(|j| restricted_set(&cfg.roots, j).len() > demand(&cfg.n, j))
}

pub fn is_excessive_cluster(rs: &RootSystem, cfg: &AConfiguration) -> bool {
    is_i_cluster(rs, &cfg.roots, cfg.involved()).holds() && is_excessive(cfg)
}

/// Excessive cluster with a single involved index `i`, checked directly:
/// `|A| = n_i`, `i` lies in every support, and `A` is an `{i}`-cluster.
pub fn is_simple_excessive_cluster(rs: &RootSystem, cfg: &AConfiguration) -> bool {
    let top = cfg.involved();
    if top.len() != 1 {
        return false;
    }
    let i = top.iter().next().expect("one index");
    cfg.roots.len() == cfg.n[i] as usize
        && cfg.roots.iter().all(|r| r.support().contains(i))
        && is_i_cluster(rs, &cfg.roots, top).holds()
}

/// One peeled layer: the index set `I`, the roots `R_I(A)` and the
/// multiplicities `k` carried by them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub indices: IndexSet,
    pub roots: Vec<Root>,
    pub k: Vec<u32>,
}

/// Layers in peeling order; empty for the empty configuration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    pub layers: Vec<Layer>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

type Key = (Vec<Root>, Vec<u32>);

/// Memoized peeling search. With `singletons_only` every layer uses a
/// single index and must be a simple excessive cluster.
struct Peeler<'a> {
    rs: &'a RootSystem,
    singletons_only: bool,
    memo: HashMap<Key, bool>,
}

impl<'a> Peeler<'a> {
    fn new(rs: &'a RootSystem, singletons_only: bool) -> Self {
        Peeler {
            rs,
            singletons_only,
            memo: HashMap::new(),
        }
    }

    fn candidates(&self, n: &[u32]) -> Vec<IndexSet> {
        let top = involved(n);
        if self.singletons_only {
            top.iter().map(IndexSet::singleton).collect()
        } else {
            top.subsets_by_size()
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect()
        }
    }

    /// The layer for `indices`, with the remaining configuration, if it is
    /// a valid peel.
    fn layer(&self, roots: &[Root], n: &[u32], indices: IndexSet) -> Option<(Layer, Key)> {
        let k: Vec<u32> = (0..n.len())
            .map(|i| if indices.contains(i) { n[i] } else { 0 })
            .collect();
        let peeled = restricted_set(roots, indices);
        if peeled.len() != demand(&k, indices) {
            return None;
        }
        let layer_cfg = AConfiguration::from_parts(peeled, k);
        let ok = if self.singletons_only {
            is_simple_excessive_cluster(self.rs, &layer_cfg)
        } else {
            is_excessive_cluster(self.rs, &layer_cfg)
        };
        if !ok {
            return None;
        }
        let rest_roots: Vec<Root> = roots
            .iter()
            .filter(|r| !r.support().intersects(indices))
            .cloned()
            .collect();
        let rest_n: Vec<u32> = n.iter().zip(&layer_cfg.n).map(|(a, b)| a - b).collect();
        let AConfiguration { roots, n: k } = layer_cfg;
        Some((
            Layer {
                indices,
                roots,
                k,
            },
            (rest_roots, rest_n),
        ))
    }

    fn solvable(&mut self, roots: &[Root], n: &[u32]) -> bool {
        if roots.is_empty() {
            return true;
        }
        let key = (roots.to_vec(), n.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut found = false;
        for indices in self.candidates(n) {
            if let Some((_, (rest_roots, rest_n))) = self.layer(roots, n, indices) {
                if self.solvable(&rest_roots, &rest_n) {
                    found = true;
                    break;
                }
            }
        }
        self.memo.insert(key, found);
        found
    }

    fn trace(&mut self, cfg: &AConfiguration) -> Option<Trace> {
        if !self.solvable(&cfg.roots, &cfg.n) {
            return None;
        }
        let mut layers = Vec::new();
        let (mut roots, mut n) = (cfg.roots.clone(), cfg.n.clone());
        while !roots.is_empty() {
            let mut next = None;
            for indices in self.candidates(&n) {
                if let Some((layer, (rest_roots, rest_n))) = self.layer(&roots, &n, indices) {
                    if self.solvable(&rest_roots, &rest_n) {
                        next = Some((layer, rest_roots, rest_n));
                        break;
                    }
                }
            }
            let (layer, rest_roots, rest_n) = next.expect("solvable state has a valid peel");
            layers.push(layer);
            roots = rest_roots;
            n = rest_n;
        }
        Some(Trace { layers })
    }
}

/// A peeling into excessive-cluster layers, if one exists. Candidate index
/// sets are the nonempty subsets of the involved set, smallest first.
pub fn is_excessively_clusterizable(rs: &RootSystem, cfg: &AConfiguration) -> Option<Trace> {
    Peeler::new(rs, false).trace(cfg)
}

/// As [`is_excessively_clusterizable`] with single-index layers only.
pub fn is_simply_excessively_clusterizable(rs: &RootSystem, cfg: &AConfiguration) -> Option<Trace> {
    Peeler::new(rs, true).trace(cfg)
}

/// The lexicographically least `m`, supported on the involved set of `cfg`
/// and summing to `|A|`, for which `(A, m)` is simply excessively
/// clusterizable.
pub fn simple_reweighting(rs: &RootSystem, cfg: &AConfiguration) -> Option<(Vec<u32>, Trace)> {
    let support: Vec<usize> = cfg.involved().iter().collect();
    let total = cfg.len() as u32;
    let mut peeler = Peeler::new(rs, true);
    let mut m = vec![0u32; cfg.n.len()];
    fn go(
        peeler: &mut Peeler<'_>,
        roots: &[Root],
        support: &[usize],
        left: u32,
        m: &mut Vec<u32>,
    ) -> Option<Vec<u32>> {
        match support.split_first() {
            None => {
                if left == 0 && peeler.solvable(roots, m) {
                    Some(m.clone())
                } else {
                    None
                }
            }
            Some((&i, rest)) => {
                let range: Vec<u32> = if rest.is_empty() {
                    vec![left]
                } else {
                    (0..=left).collect()
                };
                for v in range {
                    m[i] = v;
                    if let Some(found) = go(peeler, roots, rest, left - v, m) {
                        return Some(found);
                    }
                }
                m[i] = 0;
                None
            }
        }
    }
    if support.is_empty() {
        return Some((m, Trace::default()));
    }
    let m = go(&mut peeler, &cfg.roots, &support, total, &mut m)?;
    let reweighted = AConfiguration::from_parts(cfg.roots.clone(), m.clone());
    let trace = peeler.trace(&reweighted)?;
    Some((m, trace))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Unit,
    NonUnit(BigUint),
}

impl Verdict {
    pub fn is_unit(&self) -> bool {
        matches!(self, Verdict::Unit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub trace: Option<Trace>,
}

/// Decides `C_{w,n} = 1` by the cluster criterion. A negative answer
/// carries the coefficient, computed by counting sorting processes.
pub fn classify(rs: &RootSystem, w: &WeylElement, n: &[u32]) -> Result<Classification> {
    let cfg = AConfiguration::of_element(rs, w, n)?;
    match is_excessively_clusterizable(rs, &cfg) {
        Some(trace) => Ok(Classification {
            verdict: Verdict::Unit,
            trace: Some(trace),
        }),
        None => Ok(Classification {
            verdict: Verdict::NonUnit(SortingCounter::new(rs).count(w, n)),
            trace: None,
        }),
    }
}

/// [`classify`], then recomputes `C` from the Pieri expansion and fails
/// with [`Error::Inconsistent`] unless `UNIT ⇔ C = 1`.
pub fn classify_checked(rs: &RootSystem, w: &WeylElement, n: &[u32]) -> Result<Classification> {
    let result = classify(rs, w, n)?;
    let c = chow::coefficient(rs, w, n)?;
    let one = BigUint::from(1u32);
    let consistent = match &result.verdict {
        Verdict::Unit => c == one,
        Verdict::NonUnit(v) => *v == c && c != one,
    };
    if !consistent {
        return Err(Error::Inconsistent(format!(
            "cluster verdict {:?} but C = {c}",
            result.verdict
        )));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Kind;

    fn a2() -> RootSystem {
        RootSystem::build(Kind::A, 2).unwrap()
    }

    fn r(c: &[i32]) -> Root {
        Root::new(c)
    }

    fn cfg(rs: &RootSystem, roots: &[&[i32]], n: &[u32]) -> AConfiguration {
        AConfiguration::new(rs, roots.iter().map(|c| r(c)).collect(), n.to_vec()).unwrap()
    }

    #[test]
    fn cluster_examples() {
        let rs = a2();
        let one = IndexSet::singleton(0);
        assert!(is_i_cluster(&rs, &[r(&[1, 0]), r(&[1, 1])], one).holds());
        let bad = is_i_cluster(&rs, &[r(&[1, 0]), r(&[0, 1])], one);
        assert!(!bad.no_negative_pairing && bad.coefficients_at_most_one);
        assert!(is_i_cluster(&rs, &[], IndexSet::full(2)).holds());
    }

    #[test]
    fn excessive_examples() {
        let rs = a2();
        let full = cfg(&rs, &[&[1, 0], &[0, 1], &[1, 1]], &[2, 1]);
        // |R_{1}| = 2 is not strictly above n_1 = 2
        assert!(!is_excessive(&full));
        assert!(is_excessive(&cfg(&rs, &[&[1, 0]], &[1, 0])));
        assert!(is_excessive(&cfg(&rs, &[], &[0, 0])));
    }

    #[test]
    fn excessive_cluster_examples() {
        let rs = a2();
        let layer = cfg(&rs, &[&[1, 0], &[1, 1]], &[2, 0]);
        assert!(is_excessive_cluster(&rs, &layer));
        assert!(is_simple_excessive_cluster(&rs, &layer));
        assert!(!is_excessive_cluster(&rs, &cfg(&rs, &[&[1, 0], &[0, 1]], &[1, 1])));
        assert!(is_excessive_cluster(&rs, &cfg(&rs, &[], &[0, 0])));
        assert!(!is_simple_excessive_cluster(&rs, &cfg(&rs, &[&[0, 1]], &[1, 0])));
        assert!(!is_simple_excessive_cluster(
            &rs,
            &cfg(&rs, &[&[1, 0], &[0, 1], &[1, 1]], &[3, 0])
        ));
    }

    #[test]
    fn clusterizable_examples() {
        let rs = a2();
        let full = cfg(&rs, &[&[1, 0], &[0, 1], &[1, 1]], &[2, 1]);
        let trace = is_excessively_clusterizable(&rs, &full).unwrap();
        assert_eq!(trace.layers.len(), 2);
        assert_eq!(trace.layers[0].indices, IndexSet::singleton(0));
        assert_eq!(trace.layers[0].roots, vec![r(&[1, 0]), r(&[1, 1])]);
        assert_eq!(trace.layers[1].roots, vec![r(&[0, 1])]);
        assert_eq!(is_simply_excessively_clusterizable(&rs, &full), Some(trace));
        let no = cfg(&rs, &[&[1, 0], &[0, 1], &[1, 1]], &[3, 0]);
        assert!(is_excessively_clusterizable(&rs, &no).is_none());
        let empty = cfg(&rs, &[], &[0, 0]);
        assert_eq!(is_excessively_clusterizable(&rs, &empty), Some(Trace::default()));
    }

    #[test]
    fn configuration_validation() {
        let rs = a2();
        assert!(matches!(
            AConfiguration::new(&rs, vec![r(&[1, 0])], vec![1, 1]),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(AConfiguration::new(&rs, vec![r(&[-1, 0])], vec![1, 0]).is_err());
    }

    #[test]
    fn classify_examples() {
        let rs = a2();
        let w0 = rs.longest();
        assert!(classify_checked(&rs, &w0, &[2, 1]).unwrap().verdict.is_unit());
        assert_eq!(
            classify_checked(&rs, &w0, &[3, 0]).unwrap().verdict,
            Verdict::NonUnit(BigUint::default())
        );
        assert!(classify(&rs, &rs.identity(), &[0, 0]).unwrap().verdict.is_unit());
        assert!(matches!(
            classify(&rs, &w0, &[1, 1]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn reweighting_exists_for_full_a2() {
        let rs = a2();
        let full = cfg(&rs, &[&[1, 0], &[0, 1], &[1, 1]], &[2, 1]);
        let (m, _) = simple_reweighting(&rs, &full).unwrap();
        assert_eq!(m.iter().sum::<u32>(), 3);
    }
}
