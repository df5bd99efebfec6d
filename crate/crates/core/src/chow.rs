//! Schubert-basis arithmetic: the Pieri rule for divisors `D_i`, expansion
//! of divisor monomials and the coefficients `C_{w,n}` of
//! `D_1^{n_1} ... D_r^{n_r} = Σ C_{w,n} Z_w`.
//!
//! Two independent routes compute `C_{w,n}`: forward Pieri expansion from
//! `Z_id`, and a backward count of labeled sorting processes of `w`
//! weighted by their X-multiplicities.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::WeylElement;

/// Homogeneous nonnegative combination of Schubert classes `Z_w`, all with
/// `ℓ(w) = degree`. Stored terms are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertVector {
    degree: usize,
    terms: BTreeMap<WeylElement, BigUint>,
}

impl SchubertVector {
    pub fn zero(degree: usize) -> Self {
        SchubertVector {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single class `Z_w`.
    pub fn class(w: WeylElement) -> Self {
        let mut v = SchubertVector::zero(w.length());
        v.terms.insert(w, BigUint::from(1u32));
        v
    }

    /// `Z_id`, the unit of the Chow ring.
    pub fn unit(rs: &RootSystem) -> Self {
        SchubertVector::class(rs.identity())
    }

    /// `Z_𝐰 = [pt]`.
    pub fn point(rs: &RootSystem) -> Self {
        SchubertVector::class(rs.longest())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &BigUint)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &WeylElement) -> BigUint {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Adds `coeff · Z_w`; `w` must have length equal to the degree.
    pub fn add_term(&mut self, w: WeylElement, coeff: BigUint) -> Result<()> {
        if w.length() != self.degree {
            return Err(Error::DegreeMismatch {
                length: w.length(),
                sum: self.degree,
            });
        }
        if coeff != BigUint::default() {
            *self.terms.entry(w).or_default() += coeff;
        }
        Ok(())
    }
}

fn check_multiplicities(rs: &RootSystem, n: &[u32]) -> Result<usize> {
    if n.len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: n.len(),
        });
    }
    Ok(n.iter().map(|&k| k as usize).sum())
}

/// D-multiplicity vector of a label list.
pub fn multiplicities_of(labels: &[usize], rank: usize) -> Vec<u32> {
    let mut n = vec![0u32; rank];
    for &i in labels {
        n[i] += 1;
    }
    n
}

/// `D_i · v` by the Pieri rule
/// `D_i Z_w = Σ ⟨ϖ_i, α⟩ Z_{σ_α w}` over `α ∈ Φ⁺` with `ℓ(σ_α w) = ℓ(w) + 1`.
pub fn pieri_multiply(rs: &RootSystem, v: &SchubertVector, i: usize) -> Result<SchubertVector> {
    rs.check_index(i)?;
    let mut out = SchubertVector::zero(v.degree + 1);
    for (w, c) in &v.terms {
        for alpha in rs.admissible_desortings(w) {
            let weight = alpha.coeff(i);
            if weight == 0 {
                continue;
            }
            let next = rs.left_reflect(&alpha, w);
            debug_assert_eq!(next.length(), w.length() + 1);
            *out.terms.entry(next).or_default() += c * BigUint::from(weight as u32);
        }
    }
    Ok(out)
}

/// `D_1^{n_1} ... D_r^{n_r}` in the Schubert basis, applying divisors in
/// ascending index order. Degrees beyond `|Φ⁺|` give the zero vector.
pub fn expand_monomial(rs: &RootSystem, n: &[u32]) -> Result<SchubertVector> {
    expand_monomial_capped(rs, n, usize::MAX)
}

/// As [`expand_monomial`], failing once an intermediate vector has more than
/// `cap` terms.
pub fn expand_monomial_capped(rs: &RootSystem, n: &[u32], cap: usize) -> Result<SchubertVector> {
    let degree = check_multiplicities(rs, n)?;
    if degree > rs.num_positive() {
        return Ok(SchubertVector::zero(degree));
    }
    let mut v = SchubertVector::unit(rs);
    for (i, &k) in n.iter().enumerate() {
        for _ in 0..k {
            v = pieri_multiply(rs, &v, i)?;
            if v.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientMethod {
    /// Read the term off the Pieri expansion.
    #[default]
    Pieri,
    /// Count labeled sorting processes for the ascending label list.
    SortingCount,
    /// Run both and fail on disagreement.
    Checked,
}

/// `C_{w,n}`; requires `Σ n_i = ℓ(w)`.
pub fn coefficient(rs: &RootSystem, w: &WeylElement, n: &[u32]) -> Result<BigUint> {
    coefficient_with(rs, w, n, CoefficientMethod::Pieri)
}

pub fn coefficient_with(
    rs: &RootSystem,
    w: &WeylElement,
    n: &[u32],
    method: CoefficientMethod,
) -> Result<BigUint> {
    coefficient_capped(rs, w, n, method, usize::MAX)
}

/// As [`coefficient_with`], with the Pieri expansion limited to `cap`
/// terms per degree.
pub fn coefficient_capped(
    rs: &RootSystem,
    w: &WeylElement,
    n: &[u32],
    method: CoefficientMethod,
    cap: usize,
) -> Result<BigUint> {
    let sum = check_multiplicities(rs, n)?;
    if sum != w.length() {
        return Err(Error::DegreeMismatch {
            length: w.length(),
            sum,
        });
    }
    match method {
        CoefficientMethod::Pieri => Ok(expand_monomial_capped(rs, n, cap)?.coefficient(w)),
        CoefficientMethod::SortingCount => Ok(SortingCounter::new(rs).count(w, n)),
        CoefficientMethod::Checked => {
            let by_pieri = expand_monomial_capped(rs, n, cap)?.coefficient(w);
            let by_count = SortingCounter::new(rs).count(w, n);
            if by_pieri != by_count {
                return Err(Error::Inconsistent(format!(
                    "C = {by_pieri} by Pieri but {by_count} by sorting count"
                )));
            }
            Ok(by_pieri)
        }
    }
}

/// Memoized count of labeled sorting processes for the label list that
/// uses index 0 `n_0` times, then index 1 `n_1` times, and so on.
///
/// For that fixed list the remaining multiplicities determine the position
/// in the list, so `(element, remaining)` is an exact memo key.
pub struct SortingCounter<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(WeylElement, Vec<u32>), BigUint>,
}

impl<'a> SortingCounter<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        SortingCounter {
            rs,
            memo: HashMap::new(),
        }
    }

    /// Caller guarantees `Σ n = ℓ(w)` and `n.len() = rank`.
    pub fn count(&mut self, w: &WeylElement, n: &[u32]) -> BigUint {
        if w.is_identity() {
            return BigUint::from(1u32);
        }
        let key = (w.clone(), n.to_vec());
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let label = n
            .iter()
            .position(|&k| k > 0)
            .expect("multiplicities sum to the length");
        let mut rest = n.to_vec();
        rest[label] -= 1;
        let mut total = BigUint::default();
        for gamma in self.rs.admissible_sortings(w) {
            let g = gamma.coeff(label);
            if g == 0 {
                continue;
            }
            let next = self.rs.left_reflect(&gamma, w);
            total += self.count(&next, &rest) * BigUint::from(g as u32);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Sum over labeled sorting processes of `w` with exactly this label list
/// (0-based indices, `labels[k]` is the label of step `k`) of their
/// X-multiplicities.
pub fn count_labeled_sortings(
    rs: &RootSystem,
    w: &WeylElement,
    labels: &[usize],
) -> Result<BigUint> {
    if labels.len() != w.length() {
        return Err(Error::DegreeMismatch {
            length: w.length(),
            sum: labels.len(),
        });
    }
    for &i in labels {
        rs.check_index(i)?;
    }
    fn go(
        rs: &RootSystem,
        w: &WeylElement,
        labels: &[usize],
        depth: usize,
        memo: &mut HashMap<(WeylElement, usize), BigUint>,
    ) -> BigUint {
        if depth == labels.len() {
            return BigUint::from(1u32);
        }
        if let Some(c) = memo.get(&(w.clone(), depth)) {
            return c.clone();
        }
        let label = labels[depth];
        let mut total = BigUint::default();
        for gamma in rs.admissible_sortings(w) {
            let g = gamma.coeff(label);
            if g > 0 {
                let next = rs.left_reflect(&gamma, w);
                total += go(rs, &next, labels, depth + 1, memo) * BigUint::from(g as u32);
            }
        }
        memo.insert((w.clone(), depth), total.clone());
        total
    }
    Ok(go(rs, w, labels, 0, &mut HashMap::new()))
}

/// Some `w` with `C_{w,n} = 1`, if the monomial is multiplicity-free; the
/// complementary class is then `Z_{w𝐰}`. The least such `w` in element
/// order is returned.
pub fn is_multiplicity_free(rs: &RootSystem, n: &[u32]) -> Result<Option<WeylElement>> {
    is_multiplicity_free_capped(rs, n, usize::MAX)
}

pub fn is_multiplicity_free_capped(
    rs: &RootSystem,
    n: &[u32],
    cap: usize,
) -> Result<Option<WeylElement>> {
    let one = BigUint::from(1u32);
    let v = expand_monomial_capped(rs, n, cap)?;
    let found = v.terms().find(|(_, c)| **c == one).map(|(w, _)| w.clone());
    Ok(found)
}

/// `Z_w = X_{𝐰 w⁻¹}`: the Demazure index of the class `Z_w`.
pub fn z_to_x(rs: &RootSystem, w: &WeylElement) -> WeylElement {
    rs.compose(&rs.longest(), &rs.inverse(w)).expect("same rank")
}

/// Inverse of [`z_to_x`]: `x = 𝐰 w⁻¹` gives `w = x⁻¹ 𝐰`.
pub fn x_to_z(rs: &RootSystem, x: &WeylElement) -> WeylElement {
    rs.compose(&rs.inverse(x), &rs.longest()).expect("same rank")
}
