//! Exhaustive and sampled cross-checks between the independent algorithms
//! of this crate. Each suite reports how many cases it checked and how
//! many disagreed.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chow::{count_labeled_sortings, pieri_multiply, SchubertVector, SortingCounter};
use crate::cluster::{is_excessively_clusterizable, AConfiguration};
use crate::error::{Error, Result};
use crate::halldist::{
    find_distribution, hall_feasible, is_alpha_compatible, is_alpha_compatible_by_order,
    is_alpha_compatible_symmetric, Distribution,
};
use crate::index_set::IndexSet;
use crate::multipath::{
    closed_form_max_degree, is_multipath, max_multipath_total_length, max_single_divisor_power,
    multipath_witness, single_divisor_classify,
};
use crate::rootsys::{prec, Root, RootSystem};
use crate::weyl::{ReflectionKind, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    MainTheorem,
    DualCoefficient,
    Hall,
    SingleDivisor,
    Multipath,
    PermuteLabels,
    Structural,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::MainTheorem,
        Suite::DualCoefficient,
        Suite::Hall,
        Suite::SingleDivisor,
        Suite::Multipath,
        Suite::PermuteLabels,
        Suite::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::DualCoefficient => "dual-coefficient",
            Suite::Hall => "hall",
            Suite::SingleDivisor => "single-divisor",
            Suite::Multipath => "multipath",
            Suite::PermuteLabels => "permute-labels",
            Suite::Structural => "structural",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest Weyl group the suites may enumerate.
    pub cap: usize,
    /// Elements of length above this are only sampled.
    pub max_length: usize,
    /// Random cases for the sampled parts of a suite.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cap: 100_000,
            max_length: usize::MAX,
            samples: 500,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run_suite(rs: &RootSystem, suite: Suite, opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::EACH
            .into_iter()
            .map(|s| run_one(rs, s, opts))
            .collect();
    }
    Ok(vec![run_one(rs, suite, opts)?])
}

fn run_one(rs: &RootSystem, suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    match suite {
        Suite::MainTheorem => main_theorem(rs, opts),
        Suite::DualCoefficient => dual_coefficient(rs, opts),
        Suite::Hall => hall(rs, opts),
        Suite::SingleDivisor => single_divisor(rs, opts),
        Suite::Multipath => multipath(rs, opts),
        Suite::PermuteLabels => permute_labels(rs, opts),
        Suite::Structural => structural(rs, opts),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(total: u32, parts: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for k in 0..=total {
            acc.push(k);
            go(total - k, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Calls `f(n, D^n)` for every `n` with `Σ n ≤ max_degree`, sharing
/// Pieri work between monomials with a common prefix.
pub fn for_each_monomial(
    rs: &RootSystem,
    max_degree: usize,
    mut f: impl FnMut(&[u32], &SchubertVector) -> Result<()>,
) -> Result<()> {
    fn go(
        rs: &RootSystem,
        i: usize,
        budget: usize,
        v: SchubertVector,
        n: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32], &SchubertVector) -> Result<()>,
    ) -> Result<()> {
        if i == rs.rank() {
            return f(n, &v);
        }
        let mut cur = v;
        for k in 0..=budget {
            n.push(k as u32);
            go(rs, i + 1, budget - k, cur.clone(), n, f)?;
            n.pop();
            if k < budget {
                cur = pieri_multiply(rs, &cur, i)?;
            }
        }
        Ok(())
    }
    go(rs, 0, max_degree, SchubertVector::unit(rs), &mut Vec::new(), &mut f)
}

fn describe(rs: &RootSystem, w: &WeylElement, n: &[u32]) -> String {
    format!("w = [{}], n = {n:?}", rs.format_word(w))
}

fn cluster_unit(rs: &RootSystem, w: &WeylElement, n: &[u32]) -> Result<bool> {
    let cfg = AConfiguration::of_element(rs, w, n)?;
    Ok(is_excessively_clusterizable(rs, &cfg).is_some())
}

fn random_composition(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<u32> {
    let mut n = vec![0u32; parts];
    for _ in 0..total {
        n[rng.gen_range(0..parts)] += 1;
    }
    n
}

fn main_theorem(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::MainTheorem);
    let by_len = rs.elements_by_length(opts.cap)?;
    let one = BigUint::from(1u32);
    let top = by_len.len() - 1;
    let exhaustive = top.min(opts.max_length);
    let mut expansions: HashMap<Vec<u32>, SchubertVector> = HashMap::new();
    for_each_monomial(rs, top, |n, v| {
        let d: usize = n.iter().map(|&k| k as usize).sum();
        if d <= exhaustive {
            for w in &by_len[d] {
                let c = v.coefficient(w);
                let unit = cluster_unit(rs, w, n)?;
                report.check(unit == (c == one), || {
                    format!("{}: cluster says {unit}, C = {c}", describe(rs, w, n))
                });
            }
        } else {
            expansions.insert(n.to_vec(), v.clone());
        }
        Ok(())
    })?;
    if exhaustive < top {
        let longer: Vec<&WeylElement> = by_len[exhaustive + 1..].iter().flatten().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let w = longer[rng.gen_range(0..longer.len())];
            let n = random_composition(&mut rng, w.length(), rs.rank());
            let c = expansions[&n].coefficient(w);
            let unit = cluster_unit(rs, w, &n)?;
            report.check(unit == (c == one), || {
                format!("{}: cluster says {unit}, C = {c}", describe(rs, w, &n))
            });
        }
    }
    Ok(report)
}

fn dual_coefficient(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::DualCoefficient);
    let by_len = rs.elements_by_length(opts.cap)?;
    let top = (by_len.len() - 1).min(opts.max_length);
    let mut counter = SortingCounter::new(rs);
    for_each_monomial(rs, top, |n, v| {
        let d: usize = n.iter().map(|&k| k as usize).sum();
        for w in &by_len[d] {
            let by_pieri = v.coefficient(w);
            let by_count = counter.count(w, n);
            report.check(by_pieri == by_count, || {
                format!("{}: Pieri {by_pieri}, sorting count {by_count}", describe(rs, w, n))
            });
        }
        Ok(())
    })?;
    Ok(report)
}

/// Every distribution on `roots` (each root sends to an index in its
/// support), in lexicographic order of assignments.
pub fn all_distributions(roots: &[Root]) -> Vec<Distribution> {
    let mut out = Vec::new();
    let supports: Vec<Vec<usize>> = roots.iter().map(|r| r.support().iter().collect()).collect();
    let mut choice = vec![0usize; roots.len()];
    loop {
        let assignment = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), supports[k][choice[k]]))
            .collect();
        out.push(Distribution::new(assignment).expect("indices come from supports"));
        let mut pos = 0;
        loop {
            if pos == roots.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < supports[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn hall(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Hall);
    let positive = rs.positive_roots();
    // every subset when that stays small
    if positive.len() <= 10 {
        for mask in 0u32..(1 << positive.len()) {
            let subset: Vec<Root> = (0..positive.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| positive[k].clone())
                .collect();
            for n in compositions(subset.len() as u32, rs.rank()) {
                let feasible = hall_feasible(&subset, &n)?;
                let found = find_distribution(&subset, &n)?;
                let exact = found
                    .as_ref()
                    .map_or(true, |f| f.covers(&subset) && f.multiplicities(rs.rank()) == n);
                report.check(feasible == found.is_some() && exact, || {
                    format!("subset {subset:?}, n = {n:?}: Hall {feasible}")
                });
            }
        }
    }
    let by_len = rs.elements_by_length(opts.cap)?;
    let top = (by_len.len() - 1).min(opts.max_length);
    for_each_monomial(rs, top, |n, v| {
        let d: usize = n.iter().map(|&k| k as usize).sum();
        for w in &by_len[d] {
            let feasible = hall_feasible(w.inversion_set(), n)?;
            let positive = v.coefficient(w) > BigUint::default();
            report.check(feasible == positive, || {
                format!("{}: Hall {feasible}, C > 0 is {positive}", describe(rs, w, n))
            });
        }
        Ok(())
    })?;
    // compatibility: three evaluators agree, and a compatible distribution
    // yields a labeled sorting process starting at α with label f(α)
    for w in by_len.iter().take(7).flatten() {
        for f in all_distributions(w.inversion_set()) {
            let n = f.multiplicities(rs.rank());
            for alpha in w.inversion_set() {
                let a = is_alpha_compatible(rs, w, &f, alpha)?;
                let b = is_alpha_compatible_by_order(rs, w, &f, alpha)?;
                let c = is_alpha_compatible_symmetric(rs, w, &f, alpha)?;
                report.check(a == b && b == c, || {
                    format!("{}: compatibility forms disagree at {alpha}", describe(rs, w, &n))
                });
                if a {
                    let i = f.get(alpha).expect("covered");
                    let mut labels = vec![i];
                    let mut rest = n.clone();
                    rest[i] -= 1;
                    for (j, &k) in rest.iter().enumerate() {
                        labels.extend(std::iter::repeat(j).take(k as usize));
                    }
                    let starts = rs.classify_unchecked(w, alpha).is_admissible_sorting()
                        && count_labeled_sortings(rs, &rs.left_reflect(alpha, w), &labels[1..])?
                            > BigUint::default();
                    report.check(starts, || {
                        format!(
                            "{}: compatible at {alpha} but no process starts there",
                            describe(rs, w, &n)
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}

fn single_divisor(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::SingleDivisor);
    let by_len = rs.elements_by_length(opts.cap)?;
    let top = by_len.len() - 1;
    let one = BigUint::from(1u32);
    for i in 0..rs.rank() {
        let mut v = SchubertVector::unit(rs);
        let mut max_free = 0;
        for (d, layer) in by_len.iter().enumerate() {
            if d > 0 {
                v = pieri_multiply(rs, &v, i)?;
            }
            if d <= opts.max_length {
                let mut n = vec![0u32; rs.rank()];
                n[i] = d as u32;
                for w in layer {
                    let found = single_divisor_classify(rs, w, i)?;
                    let unit = v.coefficient(w) == one;
                    report.check(found.is_some() == unit, || {
                        format!("{}: path sequence {}, C = 1 is {unit}", describe(rs, w, &n), found.is_some())
                    });
                }
            }
            if v.terms().any(|(_, c)| *c == one) {
                max_free = d;
            }
            if v.is_zero() || d == top {
                break;
            }
        }
        let power = max_single_divisor_power(rs, i)?;
        report.check(power == max_free, || {
            format!("index {}: longest path {power}, largest free power {max_free}", i + 1)
        });
    }
    Ok(report)
}

fn multipath(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Multipath);
    let one = BigUint::from(1u32);
    let mut counter = SortingCounter::new(rs);
    let mut optimum: HashMap<IndexSet, usize> = HashMap::new();
    for allowed in rs.all_indices().subsets_by_size().into_iter().skip(1) {
        let (total, mp) = max_multipath_total_length(rs, allowed)?;
        optimum.insert(allowed, total);
        report.check(is_multipath(rs, &mp) && mp.total_length() == total, || {
            format!("optimizer returned an invalid multipath {:?}", mp.paths)
        });
        report.check(mp.beginning_set().is_subset(allowed), || {
            format!("beginnings {:?} escape {allowed:?}", mp.beginnings())
        });
        let (w, n) = multipath_witness(rs, &mp)?;
        let unit = cluster_unit(rs, &w, &n)?;
        let c = counter.count(&w, &n);
        report.check(unit && c == one, || {
            format!("{}: witness has cluster {unit}, C = {c}", describe(rs, &w, &n))
        });
    }
    let all = rs.all_indices();
    report.check(
        optimum[&all] == closed_form_max_degree(rs.kind(), rs.rank())?,
        || format!("optimum {} differs from the closed form", optimum[&all]),
    );
    // the largest multiplicity-free degree with support in I is the optimum
    if let Ok(by_len) = rs.elements_by_length(opts.cap) {
        let mut best: HashMap<IndexSet, usize> = HashMap::new();
        for_each_monomial(rs, by_len.len() - 1, |n, v| {
            if v.terms().any(|(_, c)| *c == one) {
                let d: usize = n.iter().map(|&k| k as usize).sum();
                let support: IndexSet = (0..n.len()).filter(|&i| n[i] > 0).collect();
                for allowed in all.subsets_by_size() {
                    if support.is_subset(allowed) {
                        let e = best.entry(allowed).or_insert(0);
                        *e = (*e).max(d);
                    }
                }
            }
            Ok(())
        })?;
        for (allowed, total) in &optimum {
            let free = best.get(allowed).copied().unwrap_or(0);
            report.check(free == *total, || {
                format!("beginnings in {allowed:?}: optimum {total}, largest free degree {free}")
            });
        }
    }
    Ok(report)
}

fn random_element(rs: &RootSystem, rng: &mut ChaCha8Rng) -> WeylElement {
    let steps = rng.gen_range(0..=2 * rs.num_positive());
    let mut w = rs.identity();
    for _ in 0..steps {
        let i = rng.gen_range(0..rs.rank());
        w = rs.left_reflect(&rs.simple_root(i), &w);
    }
    w
}

fn permute_labels(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::PermuteLabels);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let w = random_element(rs, &mut rng);
        if w.length() > opts.max_length {
            continue;
        }
        let labels: Vec<usize> = (0..w.length()).map(|_| rng.gen_range(0..rs.rank())).collect();
        let mut permuted = labels.clone();
        permuted.shuffle(&mut rng);
        let a = count_labeled_sortings(rs, &w, &labels)?;
        let b = count_labeled_sortings(rs, &w, &permuted)?;
        report.check(a == b, || {
            format!(
                "w = [{}]: labels {labels:?} give {a}, {permuted:?} give {b}",
                rs.format_word(&w)
            )
        });
    }
    Ok(report)
}

fn all_roots(rs: &RootSystem) -> Vec<Root> {
    rs.positive_roots()
        .iter()
        .flat_map(|r| [r.clone(), -r])
        .collect()
}

fn structural(rs: &RootSystem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Structural);
    let roots = all_roots(rs);

    // orbits of a reflection on Φ
    for alpha in &roots {
        for beta in &roots {
            let image = rs.reflect_unchecked(alpha, beta);
            let p = rs.pair(alpha, beta);
            let ok = if beta == alpha || *beta == -alpha {
                image == -beta
            } else {
                match p {
                    0 => image == *beta,
                    1 => image == beta - alpha && rs.pair(alpha, &image) == -1 && *beta == alpha + &image,
                    -1 => image == beta + alpha && rs.pair(alpha, &image) == 1,
                    _ => false,
                }
            };
            report.check(ok && rs.is_root(&image), || {
                format!("σ_{alpha} sends {beta} to {image}")
            });
        }
    }

    // rhombus closure
    for alpha in &roots {
        for beta in &roots {
            if rs.pair(alpha, beta) != 1 {
                continue;
            }
            for gamma in &roots {
                if rs.pair(beta, gamma) != 1 || rs.pair(alpha, gamma) != 0 {
                    continue;
                }
                let delta = &(alpha + gamma) - beta;
                let ok = rs.is_root(&delta)
                    && rs.pair(alpha, &delta) == 1
                    && rs.pair(&delta, gamma) == 1
                    && rs.pair(&delta, beta) == 0;
                report.check(ok, || format!("rhombus {alpha}, {beta}, {gamma} gives {delta}"));
                let shared = alpha
                    .support()
                    .iter()
                    .any(|i| alpha.coeff(i) == 1 && beta.coeff(i) == 1 && gamma.coeff(i) == 1);
                if shared {
                    let i_ok = alpha.support().iter().all(|i| {
                        !(alpha.coeff(i) == 1 && beta.coeff(i) == 1 && gamma.coeff(i) == 1)
                            || delta.coeff(i) == 1
                    });
                    report.check(i_ok && delta.is_positive(), || {
                        format!("rhombus {alpha}, {beta}, {gamma}: {delta} loses a shared coefficient")
                    });
                }
            }
        }
    }

    // reflection classes against lengths, the inversion-set update, and the
    // characterizations of antisimple roots
    for w in rs.enumerate_group(opts.cap)? {
        if w.length() > opts.max_length {
            continue;
        }
        let inv = rs.inverse(&w);
        for alpha in rs.positive_roots() {
            let kind = rs.classify_reflection(&w, alpha)?;
            let change = rs.length_change(&w, alpha)?;
            let sorting = w.is_inversion(alpha);
            let ok = match kind {
                ReflectionKind::Desorting => !sorting,
                ReflectionKind::SortingInadmissible => sorting && change < -1,
                ReflectionKind::AdmissibleSorting | ReflectionKind::AntisimpleSorting => {
                    sorting && change == -1
                }
            };
            report.check(ok, || format!("w = [{}], {alpha}: {kind:?} but Δℓ = {change}", rs.format_word(&w)));
            if !sorting {
                let admissible = rs.is_admissible_desorting(&w, alpha)?;
                report.check(admissible == (change == 1), || {
                    format!("w = [{}], {alpha}: desorting admissible {admissible}, Δℓ = {change}", rs.format_word(&w))
                });
                continue;
            }
            if kind.is_admissible_sorting() {
                let predicted = rs.inversion_set_after(&w, alpha)?;
                let actual = rs.left_reflect(alpha, &w);
                report.check(predicted == actual.inversion_set(), || {
                    format!("w = [{}], {alpha}: update procedure disagrees", rs.format_word(&w))
                });
            }
            let c1 = inv.act(alpha).is_negative() && (-inv.act(alpha)).simple_index().is_some();
            let c2 = !w
                .inversion_set()
                .iter()
                .any(|beta| prec(&inv.act(alpha), &inv.act(beta)));
            let no_split = !w.inversion_set().iter().any(|beta| {
                let rest = alpha - beta;
                prec(beta, alpha) && w.is_inversion(&rest)
            });
            let no_chain = !w.inversion_set().iter().any(|beta| {
                prec(alpha, beta) && rs.pair(alpha, beta) == 1 && !w.is_inversion(&(beta - alpha))
            });
            let c3 = no_split && no_chain;
            let c0 = kind == ReflectionKind::AntisimpleSorting;
            report.check(c0 == c1 && c1 == c2 && c2 == c3, || {
                format!(
                    "w = [{}], {alpha}: antisimple forms {c0} {c1} {c2} {c3}",
                    rs.format_word(&w)
                )
            });
        }
    }
    Ok(report)
}
