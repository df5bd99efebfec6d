//! Weyl group elements, inversion sets and sorting processes.
//!
//! An element `w` is stored by the images `w(α_1), ..., w(α_r)`; its
//! inversion set is `Φ⁺ ∩ wΦ⁻ = {α > 0 : w⁻¹α < 0}`, whose size is `ℓ(w)`.
//! Reflections always act on the left: a sorting step replaces `w` by `σ_α w`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::rootsys::{prec, Root, RootSystem};

#[derive(Clone)]
pub struct WeylElement {
    images: Vec<Root>,
    // sorted in canonical root order
    inversions: Vec<Root>,
}

impl WeylElement {
    fn from_images(rs: &RootSystem, images: Vec<Root>) -> Self {
        let mut inversions = Vec::new();
        for beta in rs.positive_roots() {
            let image = act_on(&images, beta);
            if image.is_negative() {
                inversions.push(-image);
            }
        }
        inversions.sort();
        WeylElement { images, inversions }
    }

    /// `w(α_1), ..., w(α_r)`.
    pub fn images(&self) -> &[Root] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn length(&self) -> usize {
        self.inversions.len()
    }

    /// `Φ⁺ ∩ wΦ⁻` in canonical root order.
    pub fn inversion_set(&self) -> &[Root] {
        &self.inversions
    }

    pub fn is_inversion(&self, root: &Root) -> bool {
        self.inversions.binary_search(root).is_ok()
    }

    pub fn is_identity(&self) -> bool {
        self.inversions.is_empty()
    }

    pub(crate) fn act(&self, v: &Root) -> Root {
        act_on(&self.images, v)
    }

    pub fn apply(&self, v: &Root) -> Result<Root> {
        if v.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: v.rank(),
            });
        }
        Ok(self.act(v))
    }
}

fn act_on(images: &[Root], v: &Root) -> Root {
    let rank = images.len();
    let mut out = Root::zero(rank);
    for (j, img) in images.iter().enumerate() {
        let c = v.coeff(j);
        if c != 0 {
            out = out.add_scaled(c, img);
        }
    }
    out
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[")?;
        for (k, img) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

/// How `σ_α` acts on the length of `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReflectionKind {
    Desorting,
    SortingInadmissible,
    AdmissibleSorting,
    AntisimpleSorting,
}

impl ReflectionKind {
    pub fn is_sorting(self) -> bool {
        self != ReflectionKind::Desorting
    }

    pub fn is_admissible_sorting(self) -> bool {
        matches!(
            self,
            ReflectionKind::AdmissibleSorting | ReflectionKind::AntisimpleSorting
        )
    }
}

/// Sequence of sorting steps `β_1, ..., β_n` applied as
/// `w ↦ σ_{β_1} w ↦ σ_{β_2} σ_{β_1} w ↦ ...`, optionally labeled with one
/// simple-root index per step.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SortingProcess {
    pub steps: Vec<Root>,
    pub labels: Option<Vec<usize>>,
}

impl SortingProcess {
    pub fn unlabeled(steps: Vec<Root>) -> Self {
        SortingProcess {
            steps,
            labels: None,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Product of the label coefficients; `None` when unlabeled or a label
    /// lies outside the support of its step.
    pub fn x_multiplicity(&self) -> Option<u64> {
        let labels = self.labels.as_ref()?;
        if labels.len() != self.steps.len() {
            return None;
        }
        let mut product = 1u64;
        for (beta, &i) in self.steps.iter().zip(labels) {
            let c = *beta.coeffs().get(i)?;
            if c <= 0 {
                return None;
            }
            product *= c as u64;
        }
        Some(product)
    }
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        let images = (0..self.rank()).map(|i| self.simple_root(i)).collect();
        WeylElement::from_images(self, images)
    }

    /// `σ_α w`.
    pub(crate) fn left_reflect(&self, alpha: &Root, w: &WeylElement) -> WeylElement {
        let images = w
            .images
            .iter()
            .map(|img| self.reflect_unchecked(alpha, img))
            .collect();
        WeylElement::from_images(self, images)
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(self.left_reflect(&self.simple_root(i), &self.identity()))
    }

    /// The reflection `σ_α` as a group element.
    pub fn reflection(&self, alpha: &Root) -> Result<WeylElement> {
        self.check_root(alpha)?;
        Ok(self.left_reflect(alpha, &self.identity()))
    }

    /// `σ_α w` for a root `α`.
    pub fn reflect_element(&self, alpha: &Root, w: &WeylElement) -> Result<WeylElement> {
        self.check_root(alpha)?;
        self.check_element(w)?;
        Ok(self.left_reflect(alpha, w))
    }

    fn check_element(&self, w: &WeylElement) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            })
        }
    }

    /// `u ∘ v`: apply `v` first.
    pub fn compose(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        let images = v.images.iter().map(|img| u.act(img)).collect();
        Ok(WeylElement::from_images(self, images))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        // w⁻¹(α_j) is the root γ with w(γ) = α_j
        let r = self.rank();
        let mut images = vec![Root::zero(r); r];
        let mut found = 0;
        for beta in self.positive_roots() {
            for gamma in [beta.clone(), -beta] {
                if let Some(j) = w.act(&gamma).simple_index() {
                    images[j] = gamma;
                    found += 1;
                }
            }
        }
        debug_assert_eq!(found, r);
        WeylElement::from_images(self, images)
    }

    /// The longest element `𝐰`, with inversion set all of `Φ⁺`.
    pub fn longest(&self) -> WeylElement {
        let mut w = self.identity();
        // ℓ(w s_i) > ℓ(w) iff w(α_i) > 0
        while let Some(i) = (0..self.rank()).find(|&i| w.images[i].is_positive()) {
            let s = self.left_reflect(&self.simple_root(i), &self.identity());
            w = self.compose(&w, &s).expect("same rank");
        }
        w
    }

    /// `s_{i_1} s_{i_2} ... s_{i_k}` for 0-based indices.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word.iter().rev() {
            self.check_index(i)?;
            w = self.left_reflect(&self.simple_root(i), &w);
        }
        Ok(w)
    }

    /// Parses whitespace-separated 1-based indices such as `"1 2 1"`.
    pub fn parse_word(&self, text: &str) -> Result<WeylElement> {
        let word = text
            .split_whitespace()
            .map(|tok| {
                let k: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad word letter `{tok}`")))?;
                if k == 0 || k > self.rank() {
                    return Err(Error::Parse(format!(
                        "word letter {k} out of range 1..={}",
                        self.rank()
                    )));
                }
                Ok(k - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_word(&word)
    }

    /// Lexicographically least reduced word (0-based indices).
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while !cur.is_identity() {
            // smallest left descent: α_i ∈ Φ⁺ ∩ wΦ⁻
            let i = (0..self.rank())
                .find(|&i| cur.is_inversion(&self.simple_root(i)))
                .expect("nonidentity element has a left descent");
            word.push(i);
            cur = self.left_reflect(&self.simple_root(i), &cur);
        }
        word
    }

    /// Reduced word rendered with 1-based indices, e.g. `"1 2 1"`.
    pub fn format_word(&self, w: &WeylElement) -> String {
        self.reduced_word(w)
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The positive root `α` splits as `β + δ` with both summands in `set`
    /// (a predicate over positive roots).
    fn splits_within(&self, alpha: &Root, set: impl Fn(&Root) -> bool) -> bool {
        self.positive_roots().iter().any(|beta| {
            if !prec(beta, alpha) {
                return false;
            }
            let delta = alpha - beta;
            self.is_positive_root(&delta) && set(beta) && set(&delta)
        })
    }

    pub fn classify_reflection(&self, w: &WeylElement, alpha: &Root) -> Result<ReflectionKind> {
        self.check_element(w)?;
        self.check_positive_root(alpha)?;
        Ok(self.classify_unchecked(w, alpha))
    }

    pub(crate) fn classify_unchecked(&self, w: &WeylElement, alpha: &Root) -> ReflectionKind {
        if !w.is_inversion(alpha) {
            return ReflectionKind::Desorting;
        }
        if self.splits_within(alpha, |r| w.is_inversion(r)) {
            return ReflectionKind::SortingInadmissible;
        }
        // w⁻¹α = -α_j  iff  w(α_j) = -α
        let neg = -alpha;
        if w.images.iter().any(|img| *img == neg) {
            ReflectionKind::AntisimpleSorting
        } else {
            ReflectionKind::AdmissibleSorting
        }
    }

    /// `ℓ(σ_α w) − ℓ(w)`, computed by rebuilding `σ_α w`.
    pub fn length_change(&self, w: &WeylElement, alpha: &Root) -> Result<i64> {
        let moved = self.reflect_element(alpha, w)?;
        Ok(moved.length() as i64 - w.length() as i64)
    }

    /// Whether `σ_α` raises the length of `w` by exactly one; requires
    /// `α ∈ Φ⁺ ∩ wΦ⁺`.
    pub fn is_admissible_desorting(&self, w: &WeylElement, alpha: &Root) -> Result<bool> {
        self.check_element(w)?;
        self.check_positive_root(alpha)?;
        if w.is_inversion(alpha) {
            return Err(Error::Precondition(format!(
                "{alpha} lies in the inversion set, so σ_α is sorting"
            )));
        }
        Ok(!self.splits_within(alpha, |r| !w.is_inversion(r)))
    }

    /// All `α ∈ Φ⁺` with `ℓ(σ_α w) = ℓ(w) + 1`, in canonical order.
    pub fn admissible_desortings(&self, w: &WeylElement) -> Vec<Root> {
        self.positive_roots()
            .iter()
            .filter(|alpha| {
                !w.is_inversion(alpha) && !self.splits_within(alpha, |r| !w.is_inversion(r))
            })
            .cloned()
            .collect()
    }

    /// All `α` with `ℓ(σ_α w) = ℓ(w) − 1`, in canonical order.
    pub fn admissible_sortings(&self, w: &WeylElement) -> Vec<Root> {
        w.inversions
            .iter()
            .filter(|alpha| !self.splits_within(alpha, |r| w.is_inversion(r)))
            .cloned()
            .collect()
    }

    /// Antisimple sorting roots of `w` (`w⁻¹α ∈ −Π`), in canonical order.
    pub fn antisimple_sortings(&self, w: &WeylElement) -> Vec<Root> {
        let mut out: Vec<Root> = w
            .images
            .iter()
            .filter(|img| img.is_negative())
            .map(|img| -img)
            .collect();
        out.sort();
        out
    }

    /// `Φ⁺ ∩ σ_α wΦ⁻` obtained from `Φ⁺ ∩ wΦ⁻` by the three-case update:
    /// drop `α`; replace `β` by `β − α` when `(α, β) = 1`, `α ≺ β` and
    /// `β − α` is not an inversion; keep everything else.
    pub fn inversion_set_after(&self, w: &WeylElement, alpha: &Root) -> Result<Vec<Root>> {
        if !self.classify_reflection(w, alpha)?.is_admissible_sorting() {
            return Err(Error::Precondition(format!(
                "σ_{alpha} is not an admissible sorting reflection"
            )));
        }
        let mut out = Vec::with_capacity(w.length() - 1);
        for beta in &w.inversions {
            if beta == alpha {
                continue;
            }
            let diff = beta - alpha;
            if self.pair(alpha, beta) == 1 && prec(alpha, beta) && !w.is_inversion(&diff) {
                out.push(diff);
            } else {
                out.push(beta.clone());
            }
        }
        out.sort();
        Ok(out)
    }

    /// `α ≺_w β`: `w⁻¹α ≺ w⁻¹β`.
    pub fn prec_w(&self, w: &WeylElement, alpha: &Root, beta: &Root) -> bool {
        let inv = self.inverse(w);
        prec(&inv.act(alpha), &inv.act(beta))
    }

    /// Antireduced sorting process of `w`; at each step the antisimple root
    /// that is least in canonical order is taken.
    pub fn antireduced_process(&self, w: &WeylElement) -> SortingProcess {
        self.antireduced_prefix_where(w, |_| true)
    }

    /// Antireduced prefix whose step set is `R_I(w)`.
    pub fn antireduced_prefix_for(&self, w: &WeylElement, indices: IndexSet) -> SortingProcess {
        self.antireduced_prefix_where(w, |r| r.support().intersects(indices))
    }

    fn antireduced_prefix_where(
        &self,
        w: &WeylElement,
        wanted: impl Fn(&Root) -> bool,
    ) -> SortingProcess {
        let mut steps = Vec::new();
        let mut cur = w.clone();
        while let Some(beta) = self
            .antisimple_sortings(&cur)
            .into_iter()
            .find(|r| wanted(r))
        {
            cur = self.left_reflect(&beta, &cur);
            steps.push(beta);
        }
        SortingProcess::unlabeled(steps)
    }

    /// Whether `steps` is a sorting process prefix of `w` (every step lowers
    /// the length by exactly one), returning the element reached.
    pub fn run_sorting_prefix(&self, w: &WeylElement, steps: &[Root]) -> Option<WeylElement> {
        let mut cur = w.clone();
        for beta in steps {
            if !self.is_positive_root(beta) {
                return None;
            }
            let next = self.left_reflect(beta, &cur);
            if next.length() + 1 != cur.length() {
                return None;
            }
            cur = next;
        }
        Some(cur)
    }

    /// Every step is antisimple for the current element.
    pub fn is_antireduced_prefix(&self, w: &WeylElement, steps: &[Root]) -> bool {
        let mut cur = w.clone();
        for beta in steps {
            if !self.is_positive_root(beta)
                || self.classify_unchecked(&cur, beta) != ReflectionKind::AntisimpleSorting
            {
                return false;
            }
            cur = self.left_reflect(beta, &cur);
        }
        true
    }

    /// Elements grouped by length, by breadth-first search over left
    /// multiplication by simple reflections. Fails once more than `cap`
    /// elements have been produced.
    pub fn elements_by_length(&self, cap: usize) -> Result<Vec<Vec<WeylElement>>> {
        let simples: Vec<Root> = (0..self.rank()).map(|i| self.simple_root(i)).collect();
        let mut layers = vec![vec![self.identity()]];
        let mut total = 1usize;
        loop {
            let last = layers.last().expect("nonempty");
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for w in last {
                for a in &simples {
                    if !w.is_inversion(a) {
                        let v = self.left_reflect(a, w);
                        if seen.insert(v.clone()) {
                            next.push(v);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            total += next.len();
            if total > cap {
                return Err(Error::CapExceeded(cap));
            }
            next.sort();
            layers.push(next);
        }
        Ok(layers)
    }

    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<WeylElement>> {
        Ok(self.elements_by_length(cap)?.into_iter().flatten().collect())
    }
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

    #[test]
    fn identity_basics() {
        let rs = a2();
        let id = rs.identity();
        assert_eq!(id.length(), 0);
        assert!(id.inversion_set().is_empty());
        let d4 = RootSystem::parse("D4").unwrap();
        let s1 = d4.simple_reflection(0).unwrap();
        assert_eq!(d4.compose(&s1, &s1).unwrap(), d4.identity());
    }

    #[test]
    fn group_operations() {
        let rs = a2();
        let s1 = rs.simple_reflection(0).unwrap();
        let s2 = rs.simple_reflection(1).unwrap();
        assert_eq!(s1.inversion_set(), &[r(&[1, 0])]);
        let s1s2 = rs.compose(&s1, &s2).unwrap();
        assert_eq!(s1s2.length(), 2);
        assert_eq!(rs.inverse(&s1s2), rs.compose(&s2, &s1).unwrap());
        let x = r(&[1, 0]);
        assert_eq!(
            s1s2.apply(&x).unwrap(),
            s1.apply(&s2.apply(&x).unwrap()).unwrap()
        );
        assert!(rs.simple_reflection(2).is_err());
        assert!(s1.apply(&r(&[1, 0, 0])).is_err());
    }

    #[test]
    fn longest_element() {
        let rs = a2();
        let w0 = rs.longest();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.inversion_set(), rs.positive_roots());
        assert_eq!(w0.apply(&r(&[1, 0])).unwrap(), r(&[0, -1]));
        assert_eq!(w0, rs.parse_word("1 2 1").unwrap());
        assert_eq!(RootSystem::parse("D4").unwrap().longest().length(), 12);
    }

    #[test]
    fn classify_examples() {
        let rs = a2();
        let w0 = rs.longest();
        assert_eq!(
            rs.classify_reflection(&w0, &r(&[1, 1])).unwrap(),
            ReflectionKind::SortingInadmissible
        );
        assert_eq!(rs.length_change(&w0, &r(&[1, 1])).unwrap(), -3);
        assert_eq!(
            rs.classify_reflection(&w0, &r(&[1, 0])).unwrap(),
            ReflectionKind::AntisimpleSorting
        );
        assert_eq!(
            rs.classify_reflection(&rs.identity(), &r(&[1, 0])).unwrap(),
            ReflectionKind::Desorting
        );
        assert!(matches!(
            rs.classify_reflection(&w0, &r(&[-1, 0])),
            Err(Error::NotPositive(_))
        ));
    }

    #[test]
    fn desorting_examples() {
        let rs = a2();
        let id = rs.identity();
        assert!(rs.is_admissible_desorting(&id, &r(&[1, 0])).unwrap());
        assert!(!rs.is_admissible_desorting(&id, &r(&[1, 1])).unwrap());
        let s1 = rs.simple_reflection(0).unwrap();
        let by_length = rs.length_change(&s1, &r(&[0, 1])).unwrap() == 1;
        assert_eq!(rs.is_admissible_desorting(&s1, &r(&[0, 1])).unwrap(), by_length);
        assert!(rs.is_admissible_desorting(&s1, &r(&[1, 0])).is_err());
    }

    #[test]
    fn inversion_set_update() {
        let rs = a2();
        let w0 = rs.longest();
        let after = rs.inversion_set_after(&w0, &r(&[1, 0])).unwrap();
        let direct = rs.left_reflect(&r(&[1, 0]), &w0);
        assert_eq!(after, direct.inversion_set());
        // antisimple step only removes the root
        assert_eq!(after, vec![r(&[0, 1]), r(&[1, 1])]);
        let s1 = rs.simple_reflection(0).unwrap();
        assert!(rs.inversion_set_after(&s1, &r(&[1, 0])).unwrap().is_empty());
        assert!(rs.inversion_set_after(&w0, &r(&[1, 1])).is_err());
    }

    #[test]
    fn prec_w_uses_inverse_images() {
        let rs = a2();
        let w0 = rs.longest();
        // w0⁻¹(α1+α2) = -(α1+α2), w0⁻¹(α1) = -α2
        assert!(rs.prec_w(&w0, &r(&[1, 1]), &r(&[1, 0])));
        assert!(!rs.prec_w(&w0, &r(&[1, 0]), &r(&[1, 1])));
    }

    #[test]
    fn antireduced_processes() {
        let rs = a2();
        assert!(rs.antireduced_process(&rs.identity()).is_empty());
        let s1 = rs.simple_reflection(0).unwrap();
        assert_eq!(rs.antireduced_process(&s1).steps, vec![r(&[1, 0])]);
        let w0 = rs.longest();
        let p = rs.antireduced_process(&w0);
        assert_eq!(p.len(), 3);
        let mut steps = p.steps.clone();
        steps.sort();
        assert_eq!(steps, rs.positive_roots());
        assert!(rs.is_antireduced_prefix(&w0, &p.steps));
        assert!(rs.run_sorting_prefix(&w0, &p.steps).unwrap().is_identity());
    }

    #[test]
    fn antireduced_prefixes() {
        let rs = a2();
        let w0 = rs.longest();
        assert!(rs.antireduced_prefix_for(&w0, IndexSet::empty()).is_empty());
        let p = rs.antireduced_prefix_for(&w0, IndexSet::singleton(0));
        let mut steps = p.steps.clone();
        steps.sort();
        assert_eq!(steps, vec![r(&[1, 0]), r(&[1, 1])]);
        let s2 = rs.simple_reflection(1).unwrap();
        assert!(rs.antireduced_prefix_for(&s2, IndexSet::singleton(0)).is_empty());
    }

    #[test]
    fn words_round_trip() {
        let rs = RootSystem::parse("A3").unwrap();
        for w in rs.enumerate_group(100).unwrap() {
            let word = rs.reduced_word(&w);
            assert_eq!(word.len(), w.length());
            assert_eq!(rs.from_word(&word).unwrap(), w);
        }
        assert_eq!(rs.format_word(&rs.parse_word("2 1").unwrap()), "2 1");
        assert!(rs.parse_word("1 4").is_err());
        assert!(rs.parse_word("x").is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(a2().enumerate_group(10).unwrap().len(), 6);
        let d4 = RootSystem::parse("D4").unwrap();
        assert_eq!(d4.enumerate_group(1000).unwrap().len(), 192);
        assert!(matches!(d4.enumerate_group(100), Err(Error::CapExceeded(100))));
    }

    #[test]
    fn x_multiplicity_of_labels() {
        let p = SortingProcess {
            steps: vec![r(&[1, 2]), r(&[1, 0])],
            labels: Some(vec![1, 0]),
        };
        assert_eq!(p.x_multiplicity(), Some(2));
        let bad = SortingProcess {
            steps: vec![r(&[1, 0])],
            labels: Some(vec![1]),
        };
        assert_eq!(bad.x_multiplicity(), None);
    }
}
