//! Laurent monomials `g^a · ∏ (Q^i g)^{e_i}` and their bigrading.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::limits::HARD_MAX_GEN;

/// Homological bigrade: the component (weight) and the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bigrade {
    pub weight: i64,
    pub dim: u64,
}

impl Bigrade {
    pub const fn new(weight: i64, dim: u64) -> Self {
        Bigrade { weight, dim }
    }
}

impl fmt::Display for Bigrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.weight, self.dim)
    }
}

/// A monomial in `F2[g, g⁻¹] ⊗ F2[Qg, Q²g, …]`.
///
/// `q` lists `(i, e_i)` with `i ≥ 1` strictly increasing and every `e_i ≥ 1`,
/// so structural equality is monomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    g: i64,
    q: Vec<(u32, u32)>,
}

impl Monomial {
    /// The unit `g^0`.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn g_pow(a: i64) -> Self {
        Monomial {
            g: a,
            q: Vec::new(),
        }
    }

    /// `Q^i g`; index 0 is `g` itself.
    pub fn gen(i: u32) -> Result<Self> {
        if i == 0 {
            return Ok(Monomial::g_pow(1));
        }
        check_index(i)?;
        Ok(Monomial {
            g: 0,
            q: alloc::vec![(i, 1)],
        })
    }

    /// Builds `g^g_exp · ∏ (Q^i g)^e`, merging repeated indices and dropping
    /// zero exponents.
    pub fn new(g_exp: i64, q_exps: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut q: Vec<(u32, u32)> = Vec::new();
        for (i, e) in q_exps {
            if i == 0 {
                return Err(Error::ZeroGeneratorIndex);
            }
            check_index(i)?;
            if e == 0 {
                continue;
            }
            match q.binary_search_by_key(&i, |&(j, _)| j) {
                Ok(pos) => {
                    q[pos].1 = q[pos].1.checked_add(e).ok_or(Error::ExponentOverflow)?;
                }
                Err(pos) => q.insert(pos, (i, e)),
            }
        }
        Ok(Monomial { g: g_exp, q })
    }

    pub fn g_exp(&self) -> i64 {
        self.g
    }

    /// `(i, e_i)` pairs, increasing in `i`, all exponents positive.
    pub fn q_exps(&self) -> &[(u32, u32)] {
        &self.q
    }

    pub fn q_exp(&self, i: u32) -> u32 {
        self.q
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|pos| self.q[pos].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.g == 0 && self.q.is_empty()
    }

    /// True when no `Q^i g` factor occurs (dimension zero).
    pub fn is_pure_g(&self) -> bool {
        self.q.is_empty()
    }

    /// Largest `i` with `e_i > 0`, or 0.
    pub fn max_index(&self) -> u32 {
        self.q.last().map(|&(i, _)| i).unwrap_or(0)
    }

    pub fn try_bigrade(&self) -> Result<Bigrade> {
        let mut weight = i128::from(self.g);
        let mut dim: u128 = 0;
        for &(i, e) in &self.q {
            let w = 1u128 << i;
            weight += (w * u128::from(e)) as i128;
            dim += (w - 1) * u128::from(e);
        }
        Ok(Bigrade {
            weight: i64::try_from(weight).map_err(|_| Error::ExponentOverflow)?,
            dim: u64::try_from(dim).map_err(|_| Error::ExponentOverflow)?,
        })
    }

    /// Panics if the weight leaves the `i64` range; [`Monomial::try_bigrade`]
    /// is the checked form.
    pub fn bigrade(&self) -> Bigrade {
        self.try_bigrade().expect("monomial bigrade overflow")
    }

    pub fn weight(&self) -> i64 {
        self.bigrade().weight
    }

    pub fn dim(&self) -> u64 {
        self.bigrade().dim
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let g = self.g.checked_add(other.g).ok_or(Error::ExponentOverflow)?;
        let mut q = Vec::with_capacity(self.q.len() + other.q.len());
        let (mut a, mut b) = (self.q.iter().peekable(), other.q.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => {
                    if i == j {
                        q.push((i, e.checked_add(f).ok_or(Error::ExponentOverflow)?));
                        a.next();
                        b.next();
                    } else if i < j {
                        q.push((i, e));
                        a.next();
                    } else {
                        q.push((j, f));
                        b.next();
                    }
                }
                (Some(&&p), None) => {
                    q.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    q.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Monomial { g, q })
    }

    pub fn try_pow(&self, n: u32) -> Result<Monomial> {
        let g = self
            .g
            .checked_mul(i64::from(n))
            .ok_or(Error::ExponentOverflow)?;
        if n == 0 {
            return Ok(Monomial::one());
        }
        let q = self
            .q
            .iter()
            .map(|&(i, e)| {
                e.checked_mul(n)
                    .map(|e| (i, e))
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { g, q })
    }

    /// Multiplies by `g^a`.
    pub fn try_shift_g(&self, a: i64) -> Result<Monomial> {
        Ok(Monomial {
            g: self.g.checked_add(a).ok_or(Error::ExponentOverflow)?,
            q: self.q.clone(),
        })
    }

    /// The monomial with `(Q^i g)^{e_i}` replaced by `(Q^i g)^{e}`.
    pub(crate) fn with_q_exp(&self, i: u32, e: u32) -> Monomial {
        let mut q = self.q.clone();
        match q.binary_search_by_key(&i, |&(j, _)| j) {
            Ok(pos) if e == 0 => {
                q.remove(pos);
            }
            Ok(pos) => q[pos].1 = e,
            Err(_) if e == 0 => {}
            Err(pos) => q.insert(pos, (i, e)),
        }
        Monomial { g: self.g, q }
    }

    pub(crate) fn from_raw(g: i64, q: Vec<(u32, u32)>) -> Monomial {
        debug_assert!(q.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(q.iter().all(|&(i, e)| i >= 1 && e >= 1));
        Monomial { g, q }
    }
}

fn check_index(i: u32) -> Result<()> {
    if i > HARD_MAX_GEN {
        return Err(Error::GeneratorOverflow {
            index: i,
            max: HARD_MAX_GEN,
        });
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(" ")
            }
        };
        match self.g {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("g")?;
            }
            a => {
                sep(f)?;
                write!(f, "g^{a}")?;
            }
        }
        for &(i, e) in &self.q {
            sep(f)?;
            let base = if i == 1 {
                alloc::string::String::from("Qg")
            } else {
                alloc::format!("Q^{i}g")
            };
            if e == 1 {
                f.write_str(&base)?;
            } else {
                write!(f, "({base})^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_form_merges_and_drops_zeros() {
        let m = Monomial::new(-1, [(2, 1), (1, 0), (2, 2)]).unwrap();
        assert_eq!(m.q_exps(), &[(2, 3)]);
        assert_eq!(m, Monomial::new(-1, [(2, 3)]).unwrap());
        assert_eq!(Monomial::new(0, [(0, 1)]), Err(Error::ZeroGeneratorIndex));
    }

    #[test]
    fn bigrades_of_generators() {
        assert_eq!(Monomial::g_pow(1).bigrade(), Bigrade::new(1, 0));
        for i in 1..10 {
            let m = Monomial::gen(i).unwrap();
            assert_eq!(m.bigrade(), Bigrade::new(1 << i, (1 << i) - 1));
        }
        // g^{-2} Q^2 g has weight 2 and dimension 3
        let m = Monomial::new(-2, [(2, 1)]).unwrap();
        assert_eq!(m.bigrade(), Bigrade::new(2, 3));
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = Monomial::new(-1, [(1, 1)]).unwrap();
        let sq = a.try_mul(&a).unwrap();
        assert_eq!(sq, Monomial::new(-2, [(1, 2)]).unwrap());
        assert_eq!(sq, a.try_pow(2).unwrap());
        let inv = Monomial::g_pow(1).try_mul(&Monomial::g_pow(-1)).unwrap();
        assert!(inv.is_one());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Monomial::g_pow(i64::MAX);
        assert_eq!(
            big.try_mul(&Monomial::g_pow(1)),
            Err(Error::ExponentOverflow)
        );
        let q = Monomial::new(0, [(3, u32::MAX)]).unwrap();
        assert_eq!(q.try_pow(2), Err(Error::ExponentOverflow));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::one().to_string(), "1");
        let m = Monomial::new(-4, [(1, 3), (2, 1)]).unwrap();
        assert_eq!(m.to_string(), "g^-4 (Qg)^3 Q^2g");
    }
}
