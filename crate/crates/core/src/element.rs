//! F2 sums of monomials and of monomial pairs.
//!
//! Coefficients are implicit: a term is either present or not, and inserting
//! a term that is already present removes it.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::error::{Error, Result};
use crate::monomial::{Bigrade, Monomial};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    terms: BTreeSet<Monomial>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from(Monomial::one())
    }

    /// F2 sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut e = Element::zero();
        for m in terms {
            e.toggle(m);
        }
        e
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
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

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.try_mul(b)?);
            }
        }
        Ok(out)
    }

    /// Multiplies every term by a single monomial (no cancellation can occur).
    pub fn try_mul_monomial(&self, m: &Monomial) -> Result<Element> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.try_mul(m))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Element { terms })
    }

    /// Squaring is additive over F2: `(Σ m)^2 = Σ m^2`.
    pub fn try_square(&self) -> Result<Element> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.try_pow(2))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Element { terms })
    }

    pub fn try_pow(&self, mut n: u32) -> Result<Element> {
        let mut acc = Element::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_square()?;
            }
        }
        Ok(acc)
    }

    /// Splits the element by `(weight, dim)`; no part is empty.
    pub fn bigrade_components(&self) -> BTreeMap<Bigrade, Element> {
        let mut parts: BTreeMap<Bigrade, Element> = BTreeMap::new();
        for m in &self.terms {
            parts
                .entry(m.bigrade())
                .or_default()
                .terms
                .insert(m.clone());
        }
        parts
    }

    /// The common bigrade of all terms, or `None` for zero or mixed input.
    pub fn homogeneous_bigrade(&self) -> Option<Bigrade> {
        let mut it = self.terms.iter().map(Monomial::bigrade);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

impl From<Monomial> for Element {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Element { terms }
    }
}

impl FromIterator<Monomial> for Element {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        Element::from_terms(iter)
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let terms = self
            .terms
            .symmetric_difference(&rhs.terms)
            .cloned()
            .collect();
        Element { terms }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, m) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An F2 sum of `left ⊗ right` monomial pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tensor {
    terms: BTreeSet<(Monomial, Monomial)>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn pair(left: Monomial, right: Monomial) -> Self {
        let mut t = Tensor::zero();
        t.toggle(left, right);
        t
    }

    /// `a ⊗ b` expanded bilinearly.
    pub fn product_of(a: &Element, b: &Element) -> Self {
        let mut t = Tensor::zero();
        for l in a.terms() {
            for r in b.terms() {
                t.terms.insert((l.clone(), r.clone()));
            }
        }
        t
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Monomial, Monomial)>) -> Self {
        let mut t = Tensor::zero();
        for (l, r) in pairs {
            t.toggle(l, r);
        }
        t
    }

    pub fn toggle(&mut self, left: Monomial, right: Monomial) {
        let key = (left, right);
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
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

    pub fn pairs(&self) -> impl Iterator<Item = &(Monomial, Monomial)> + '_ {
        self.terms.iter()
    }

    /// Multiplication in the tensor square of the algebra.
    pub fn try_mul(&self, other: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for (a, b) in &self.terms {
            for (c, d) in &other.terms {
                out.toggle(a.try_mul(c)?, b.try_mul(d)?);
            }
        }
        Ok(out)
    }

    /// Restriction to the summands `H_s ⊗ H_{total - s}`, keyed by `s`.
    ///
    /// Fails if some pair does not have total dimension `total_dim`.
    pub fn components(&self, total_dim: u64) -> Result<BTreeMap<u64, Tensor>> {
        let mut parts: BTreeMap<u64, Tensor> = BTreeMap::new();
        for (l, r) in &self.terms {
            let (dl, dr) = (l.dim(), r.dim());
            if dl + dr != total_dim {
                return Err(Error::NonHomogeneousTensor {
                    expected: total_dim,
                    found: dl + dr,
                });
            }
            match parts.entry(dl) {
                Entry::Occupied(mut o) => {
                    o.get_mut().terms.insert((l.clone(), r.clone()));
                }
                Entry::Vacant(v) => {
                    v.insert(Tensor::pair(l.clone(), r.clone()));
                }
            }
        }
        Ok(parts)
    }

    /// Groups the pairs by right factor: `Σ_r L_r ⊗ r`.
    pub fn by_right(&self) -> BTreeMap<&Monomial, Element> {
        let mut out: BTreeMap<&Monomial, Element> = BTreeMap::new();
        for (l, r) in &self.terms {
            out.entry(r).or_default().toggle(l.clone());
        }
        out
    }

    pub fn into_pairs(self) -> Vec<(Monomial, Monomial)> {
        self.terms.into_iter().collect()
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, rhs: &Tensor) {
        for (l, r) in &rhs.terms {
            self.toggle(l.clone(), r.clone());
        }
    }
}

impl Add for Tensor {
    type Output = Tensor;
    fn add(mut self, rhs: Tensor) -> Tensor {
        self += &rhs;
        self
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(l, r)| alloc::format!("{l} ⊗ {r}"))
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(g: i64, q: &[(u32, u32)]) -> Monomial {
        Monomial::new(g, q.iter().copied()).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = Element::from(Monomial::g_pow(1));
        let b = Element::from(Monomial::g_pow(-1));
        assert_eq!(a.try_mul(&b).unwrap(), Element::one());
    }

    #[test]
    fn characteristic_two_cancellation() {
        let qg = m(0, &[(1, 1)]);
        assert!(Element::from_terms([qg.clone(), qg.clone()]).is_zero());
        let x = Element::from_terms([qg, Monomial::g_pow(1)]);
        assert_eq!(&x + &x, Element::zero());
        assert_eq!(&x + &Element::zero(), x);
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn square_of_rho_zero() {
        let rho0 = Element::from(m(-1, &[(1, 1)]));
        assert_eq!(
            rho0.try_mul(&rho0).unwrap(),
            Element::from(m(-2, &[(1, 2)]))
        );
        assert_eq!(rho0.try_pow(2).unwrap(), rho0.try_square().unwrap());
    }

    #[test]
    fn bigrade_components_split_by_grade() {
        let g = Monomial::g_pow(1);
        let qg = m(0, &[(1, 1)]);
        let x = Element::from_terms([g.clone(), qg.clone()]);
        let parts = x.bigrade_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&Bigrade::new(1, 0)], Element::from(g));
        assert_eq!(parts[&Bigrade::new(2, 1)], Element::from(qg));
        assert!(Element::zero().bigrade_components().is_empty());

        let rho1 = Element::from_terms([m(-2, &[(2, 1)]), m(-4, &[(1, 3)])]);
        let parts = rho1.bigrade_components();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&Bigrade::new(2, 3)], rho1);
    }

    #[test]
    fn tensor_components_reject_mixed_dimensions() {
        let t = Tensor::from_pairs([
            (m(2, &[]), m(0, &[(1, 1)])),
            (m(0, &[(1, 1)]), m(0, &[(1, 1)])),
        ]);
        assert_eq!(
            t.components(1),
            Err(Error::NonHomogeneousTensor {
                expected: 1,
                found: 2
            })
        );
        assert!(Tensor::zero().components(5).unwrap().is_empty());
    }
}
