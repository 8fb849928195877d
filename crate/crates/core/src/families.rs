//! Generator families of `Bβ_k`, `Rat_k` and `C_k` inside the ambient algebra.
//!
//! | family | generator | label      | weight | dim           | embedding          |
//! |--------|-----------|------------|--------|---------------|--------------------|
//! | Braid  | γ_0       | `g`        | 1      | 0             | `g`                |
//! | Braid  | γ_i, i≥1  | `gamma_i`  | 2^i    | 2^i − 1       | `Q^i g`            |
//! | Rat    | index −1  | `g`        | 1      | 0             | `g`                |
//! | Rat    | ρ_i, i≥0  | `rho_i`    | 2^i    | 2^{i+1} − 1   | `Q^i(g^{-1}Qg)`    |
//! | Conf   | c_i, i≥0  | `c_i`      | 2^i    | 2^{i+1} − 1   | `Q^i(g^{-2}Qg)`    |
//!
//! Family weights of `Conf` monomials are a filtration: their embeddings all
//! live in ambient weight 0. For `Braid` and `Rat` the embedding preserves the
//! bigrade exactly.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::dyer_lashof::iterate_q;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Braid,
    Rat,
    Conf,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Braid, Family::Rat, Family::Conf];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Braid => "braid",
            Family::Rat => "rat",
            Family::Conf => "conf",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Smallest valid generator index.
    pub fn min_index(self) -> i32 {
        match self {
            Family::Rat => -1,
            Family::Braid | Family::Conf => 0,
        }
    }

    /// `(weight, dim)` of the generator with this index.
    pub fn generator_grade(self, index: i32) -> (u64, u64) {
        debug_assert!(index >= self.min_index());
        match (self, index) {
            (Family::Rat, -1) => (1, 0),
            (Family::Braid, i) => (1 << i, (1 << i) - 1),
            (Family::Rat | Family::Conf, i) => (1 << i, (2 << i) - 1),
        }
    }

    pub fn generator_label(self, index: i32) -> String {
        match (self, index) {
            (Family::Braid, 0) | (Family::Rat, -1) => "g".into(),
            (Family::Braid, i) => alloc::format!("gamma_{i}"),
            (Family::Rat, i) => alloc::format!("rho_{i}"),
            (Family::Conf, i) => alloc::format!("c_{i}"),
        }
    }

    pub fn parse_generator_label(self, label: &str) -> Option<i32> {
        if label == "g" {
            return match self {
                Family::Braid => Some(0),
                Family::Rat => Some(-1),
                Family::Conf => None,
            };
        }
        let prefix = match self {
            Family::Braid => "gamma_",
            Family::Rat => "rho_",
            Family::Conf => "c_",
        };
        let i: i32 = label.strip_prefix(prefix)?.parse().ok()?;
        (i >= 0 && !(self == Family::Braid && i == 0)).then_some(i)
    }

    /// Generator indices whose weight is at most `k`, ascending.
    fn generators_up_to(self, k: u32) -> Vec<i32> {
        let top = 31 - k.leading_zeros() as i32;
        (self.min_index()..=top).collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A monomial in the abstract generators of one family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyMonomial {
    family: Family,
    exps: Vec<(i32, u32)>,
}

impl FamilyMonomial {
    pub fn one(family: Family) -> Self {
        FamilyMonomial {
            family,
            exps: Vec::new(),
        }
    }

    pub fn new(family: Family, exps: impl IntoIterator<Item = (i32, u32)>) -> Result<Self> {
        let mut out = FamilyMonomial::one(family);
        for (i, e) in exps {
            if i < family.min_index() {
                return Err(Error::Shape {
                    context: alloc::format!("generator index {i} invalid for {family}"),
                });
            }
            out.add_exp(i, e)?;
        }
        Ok(out)
    }

    pub fn generator(family: Family, index: i32) -> Result<Self> {
        FamilyMonomial::new(family, [(index, 1)])
    }

    fn add_exp(&mut self, i: i32, e: u32) -> Result<()> {
        if e == 0 {
            return Ok(());
        }
        match self.exps.binary_search_by_key(&i, |&(j, _)| j) {
            Ok(pos) => {
                self.exps[pos].1 = self.exps[pos]
                    .1
                    .checked_add(e)
                    .ok_or(Error::ExponentOverflow)?
            }
            Err(pos) => self.exps.insert(pos, (i, e)),
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `(index, exponent)` pairs, ascending index, positive exponents.
    pub fn exps(&self) -> &[(i32, u32)] {
        &self.exps
    }

    pub fn exp(&self, index: i32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(j, _)| j)
            .map(|p| self.exps[p].1)
            .unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.exps
            .iter()
            .map(|&(i, e)| self.family.generator_grade(i).0 * u64::from(e))
            .sum()
    }

    pub fn dim(&self) -> u64 {
        self.exps
            .iter()
            .map(|&(i, e)| self.family.generator_grade(i).1 * u64::from(e))
            .sum()
    }

    pub fn try_mul(&self, other: &FamilyMonomial) -> Result<FamilyMonomial> {
        if self.family != other.family {
            return Err(Error::Shape {
                context: "product of monomials from different families".into(),
            });
        }
        let mut out = self.clone();
        for &(i, e) in &other.exps {
            out.add_exp(i, e)?;
        }
        Ok(out)
    }

    /// Divides by the generator `index` once, if it occurs.
    pub fn divide_generator(&self, index: i32) -> Option<FamilyMonomial> {
        let pos = self.exps.binary_search_by_key(&index, |&(j, _)| j).ok()?;
        let mut out = self.clone();
        if out.exps[pos].1 == 1 {
            out.exps.remove(pos);
        } else {
            out.exps[pos].1 -= 1;
        }
        Some(out)
    }

    /// Dense exponent vector over the indices `min_index..=top`.
    fn dense(&self, top: i32) -> Vec<u32> {
        (self.family.min_index()..=top)
            .map(|i| self.exp(i))
            .collect()
    }

    pub fn label(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for FamilyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, &(i, e)) in self.exps.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.family.generator_label(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Ambient images of the generators of one family, computed once.
#[derive(Clone, Debug)]
pub struct Embedder {
    family: Family,
    table: Vec<Element>,
    max_gen: u32,
}

impl Embedder {
    /// Precomputes generator images for indices up to `top_index`.
    pub fn new(family: Family, top_index: i32, max_gen: u32) -> Result<Self> {
        let mut table = Vec::new();
        let g = Element::from(Monomial::g_pow(1));
        if family == Family::Rat {
            table.push(g.clone());
        }
        let seed = match family {
            Family::Braid => None,
            Family::Rat => Some(Monomial::new(-1, [(1, 1)])?),
            Family::Conf => Some(Monomial::new(-2, [(1, 1)])?),
        };
        let mut current = match &seed {
            Some(s) => Element::from(s.clone()),
            None => g,
        };
        for i in 0..=top_index.max(0) {
            if i > 0 {
                current = iterate_q(&current, 1, max_gen)?;
            }
            table.push(current.clone());
        }
        Ok(Embedder {
            family,
            table,
            max_gen,
        })
    }

    pub fn for_monomials<'a>(
        family: Family,
        monomials: impl IntoIterator<Item = &'a FamilyMonomial>,
        max_gen: u32,
    ) -> Result<Self> {
        let top = monomials
            .into_iter()
            .filter_map(|m| m.exps.last().map(|&(i, _)| i))
            .max()
            .unwrap_or(0);
        Embedder::new(family, top, max_gen)
    }

    pub fn generator(&self, index: i32) -> Result<&Element> {
        let slot = (index - self.family.min_index()) as usize;
        self.table.get(slot).ok_or(Error::GeneratorOverflow {
            index: index.max(0) as u32 + 1,
            max: self.max_gen,
        })
    }

    pub fn embed(&self, fm: &FamilyMonomial) -> Result<Element> {
        debug_assert_eq!(fm.family, self.family);
        let mut out = Element::one();
        for &(i, e) in &fm.exps {
            out = out.try_mul(&self.generator(i)?.try_pow(e)?)?;
        }
        Ok(out)
    }
}

/// Ambient image of a family monomial.
pub fn embed(fm: &FamilyMonomial, limits: &Limits) -> Result<Element> {
    Embedder::for_monomials(fm.family, [fm], limits.max_gen)?.embed(fm)
}

/// Weight-graded basis of the homology of the `k`-th space of `family`:
/// monomials of weight exactly `k` (Braid, Rat) or at most `k` (Conf),
/// sorted by dimension, then by exponent vector in decreasing
/// lexicographic order.
pub fn basis(family: Family, k: u32, limits: &Limits) -> Result<Vec<FamilyMonomial>> {
    limits.check_k(k)?;
    let gens = family.generators_up_to(k);
    let weights: Vec<u64> = gens.iter().map(|&i| family.generator_grade(i).0).collect();
    let exact = family != Family::Conf;
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; gens.len()];
    // largest generators first keeps the remaining weight small
    enumerate(
        &weights,
        gens.len(),
        u64::from(k),
        exact,
        &mut exps,
        &mut |exps| {
            out.push(FamilyMonomial {
                family,
                exps: gens
                    .iter()
                    .zip(exps)
                    .filter(|(_, &e)| e > 0)
                    .map(|(&i, &e)| (i, e))
                    .collect(),
            })
        },
    );
    let top = *gens.last().unwrap_or(&0);
    out.sort_by_cached_key(|m| (m.dim(), Reverse(m.dense(top))));
    Ok(out)
}

fn enumerate(
    weights: &[u64],
    upto: usize,
    remaining: u64,
    exact: bool,
    exps: &mut [u32],
    emit: &mut impl FnMut(&[u32]),
) {
    if upto == 0 {
        if !exact || remaining == 0 {
            emit(exps);
        }
        return;
    }
    let pos = upto - 1;
    let w = weights[pos];
    for e in 0..=(remaining / w) {
        exps[pos] = e as u32;
        enumerate(weights, pos, remaining - e * w, exact, exps, emit);
    }
    exps[pos] = 0;
}

/// The unique top-dimensional basis monomial.
///
/// For `Rat` this is `∏_{j∈J} ρ_j` where `k = Σ_{j∈J} 2^j`. For `Braid` the
/// argument names the space `Bβ_{2k}` and the class is `∏_{j∈J} γ_{j+1}`.
pub fn top_class(family: Family, k: u32) -> Result<FamilyMonomial> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, bound: u32::MAX });
    }
    let shift = match family {
        Family::Rat => 0,
        Family::Braid => 1,
        Family::Conf => return Err(Error::NoTopClass(family)),
    };
    let exps = binary_digits(k).into_iter().map(|j| (j as i32 + shift, 1));
    FamilyMonomial::new(family, exps)
}

/// The set `J` with `k = Σ_{j∈J} 2^j`, ascending.
pub fn binary_digits(k: u32) -> Vec<u32> {
    (0..32).filter(|j| k >> j & 1 == 1).collect()
}

/// Number of basis monomials in each dimension `0..=top`.
pub fn poincare_vector(family: Family, k: u32, limits: &Limits) -> Result<Vec<u64>> {
    let b = basis(family, k, limits)?;
    let top = b.iter().map(FamilyMonomial::dim).max().unwrap_or(0);
    let mut counts = alloc::vec![0u64; top as usize + 1];
    for m in &b {
        counts[m.dim() as usize] += 1;
    }
    Ok(counts)
}
