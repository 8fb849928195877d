//! Checks built on the coalgebra machinery: coproduct support sets of top
//! classes, the rational-map versus braid comparison, the `g`-multiplication
//! isomorphism `Bβ_{2k} → Bβ_{2k+1}` and the braid/configuration comparison.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::coalgebra::{FamilyModel, GradedCoalgebra};
use crate::dyer_lashof::{coproduct, for_each_coproduct_term};
use crate::element::Tensor;
use crate::error::Result;
use crate::f2::BitMatrix;
use crate::families::{basis, binary_digits, embed, top_class, Embedder, Family, FamilyMonomial};
use crate::iso::{coalgebras_isomorphic, coalgebras_isomorphic_with, IsoVerdict, LinearAction};
use crate::limits::Limits;
use crate::monomial::Monomial;

/// `S(x) = { s | ψ(x) restricted to H_s ⊗ H_{d−s} is nonzero }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SSet {
    dim: u64,
    elements: BTreeSet<u64>,
}

impl SSet {
    pub fn new(dim: u64, elements: impl IntoIterator<Item = u64>) -> Self {
        SSet {
            dim,
            elements: elements.into_iter().collect(),
        }
    }

    /// Dimension of the class the set was computed for.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn contains(&self, s: u64) -> bool {
        self.elements.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `s ∈ S ⟺ d − s ∈ S`.
    pub fn is_symmetric(&self) -> bool {
        self.iter()
            .all(|s| s <= self.dim && self.contains(self.dim - s))
    }
}

/// S-set of the ambient image of a family monomial.
///
/// Coproduct terms are streamed into one bucket per left dimension, so the
/// full coproduct is never materialised as a single tensor.
pub fn s_set(fm: &FamilyMonomial, limits: &Limits) -> Result<SSet> {
    let d = fm.dim();
    let image = embed(fm, limits)?;
    let mut buckets: Vec<BTreeSet<(Monomial, Monomial)>> = vec![BTreeSet::new(); d as usize + 1];
    for m in image.terms() {
        for_each_coproduct_term(m, |l, r| {
            let bucket = &mut buckets[l.dim() as usize];
            let key = (l, r);
            if !bucket.remove(&key) {
                bucket.insert(key);
            }
        });
    }
    Ok(SSet::new(
        d,
        (0..=d).filter(|&s| !buckets[s as usize].is_empty()),
    ))
}

/// S-set of the braid top class `∏_{j∈J} Q^{j+1} g` read off the product of
/// two-term primitive coproducts: all subset sums of `{2^{j+1} − 1}`.
pub fn braid_top_s_set_closed_form(k: u32) -> SSet {
    let parts: Vec<u64> = binary_digits(k).iter().map(|&j| (2u64 << j) - 1).collect();
    let d: u64 = parts.iter().sum();
    let mut sums = BTreeSet::from([0u64]);
    for p in parts {
        let shifted: Vec<u64> = sums.iter().map(|s| s + p).collect();
        sums.extend(shifted);
    }
    SSet::new(d, sums)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerOfTwoChecks {
    pub two_in_x: bool,
    pub two_in_y: bool,
    pub five_in_x: bool,
    pub five_in_y: bool,
}

impl PowerOfTwoChecks {
    pub fn holds(&self) -> bool {
        !self.two_in_x && !self.two_in_y && self.five_in_x && !self.five_in_y
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `k + 1` is not a power of two; `r ≥ 1` is the least element of `J`
    /// with `r − 1 ∉ J` and `witness = 2^r − 1`.
    NotPowerOfTwo {
        r: u32,
        witness: u64,
        witness_in_x: bool,
        witness_in_y: bool,
    },
    /// `k = 2^{r+1} − 1`; the split checks at 2 and 5 apply when `k > 3`.
    PowerOfTwo {
        r: u32,
        checks: Option<PowerOfTwoChecks>,
    },
}

impl Branch {
    pub fn holds(&self) -> bool {
        match self {
            Branch::NotPowerOfTwo {
                witness_in_x,
                witness_in_y,
                ..
            } => *witness_in_x && !*witness_in_y,
            Branch::PowerOfTwo { checks, .. } => checks.is_none_or(|c| c.holds()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub k: u32,
    pub j_set: Vec<u32>,
    pub top_dim: u64,
    pub x: FamilyMonomial,
    pub y: FamilyMonomial,
    pub s_x: SSet,
    pub s_y: SSet,
    pub distinct: bool,
    pub s_y_matches_closed_form: bool,
    pub branch: Branch,
    /// Isomorphism check of `H_*(Bβ_{2k})` against `H_*(Rat_k)`, restricted to
    /// maps commuting with `Sq_1^*`; run only when the S-sets agree.
    pub isomorphism: Option<IsoVerdict>,
}

impl TheoremReport {
    /// The outcome predicted for this `k`: distinct S-sets with the branch
    /// witnesses for `k ∉ {1, 3}`, isomorphic coalgebras for `k ∈ {1, 3}`.
    pub fn matches_prediction(&self) -> bool {
        if !self.s_y_matches_closed_form || !self.branch.holds() {
            return false;
        }
        if is_exceptional(self.k) {
            !self.distinct && self.isomorphism.as_ref().is_some_and(IsoVerdict::is_yes)
        } else {
            self.distinct
        }
    }
}

pub fn is_exceptional(k: u32) -> bool {
    k == 1 || k == 3
}

/// Least `r ≥ 1` with `r ∈ J` and `r − 1 ∉ J`.
pub fn first_gap_digit(k: u32) -> Option<u32> {
    (1..32).find(|&r| k >> r & 1 == 1 && k >> (r - 1) & 1 == 0)
}

/// Compares the top classes `x ∈ H_*(Rat_k)` and `y ∈ H_*(Bβ_{2k})`.
pub fn theorem_main(k: u32, limits: &Limits) -> Result<TheoremReport> {
    limits.check_k(k)?;
    let x = top_class(Family::Rat, k)?;
    let y = top_class(Family::Braid, k)?;
    let s_x = s_set(&x, limits)?;
    let s_y = s_set(&y, limits)?;
    let distinct = s_x != s_y;
    let s_y_matches_closed_form = braid_top_s_set_closed_form(k) == s_y;

    let branch = match first_gap_digit(k) {
        Some(r) => {
            let witness = (1u64 << r) - 1;
            Branch::NotPowerOfTwo {
                r,
                witness,
                witness_in_x: s_x.contains(witness),
                witness_in_y: s_y.contains(witness),
            }
        }
        None => {
            let r = (k + 1).trailing_zeros() - 1;
            let checks = (k > 3).then(|| PowerOfTwoChecks {
                two_in_x: s_x.contains(2),
                two_in_y: s_y.contains(2),
                five_in_x: s_x.contains(5),
                five_in_y: s_y.contains(5),
            });
            Branch::PowerOfTwo { r, checks }
        }
    };

    let isomorphism = if distinct {
        None
    } else {
        let braid_model = FamilyModel::new(Family::Braid, 2 * k, limits)?;
        let rat_model = FamilyModel::new(Family::Rat, k, limits)?;
        let (braid, rat) = (braid_model.coalgebra()?, rat_model.coalgebra()?);
        let (sq_braid, sq_rat) = (
            braid_model.steenrod_matrices(1)?,
            rat_model.steenrod_matrices(1)?,
        );
        let sq1 = LinearAction {
            shift: 1,
            source: &sq_braid,
            target: &sq_rat,
        };
        Some(coalgebras_isomorphic_with(
            &braid,
            &rat,
            limits.iso_budget,
            &[sq1],
        ))
    };

    Ok(TheoremReport {
        k,
        j_set: binary_digits(k),
        top_dim: x.dim(),
        x,
        y,
        s_x,
        s_y,
        distinct,
        s_y_matches_closed_form,
        branch,
        isomorphism,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaBraidReport {
    pub k: u32,
    pub even_size: usize,
    pub odd_size: usize,
    /// `m ↦ g·m` is a bijection `basis(Bβ_{2k}) → basis(Bβ_{2k+1})`.
    pub bijective: bool,
    /// `ψ(g·m) = (g ⊗ g)·ψ(m)` for every basis monomial.
    pub coproducts_match: bool,
    /// The induced matrices form a coalgebra map between the extracted
    /// coalgebras.
    pub coalgebra_map: bool,
    pub failures: Vec<String>,
}

impl LemmaBraidReport {
    pub fn verified(&self) -> bool {
        self.bijective && self.coproducts_match && self.coalgebra_map
    }
}

/// Checks that multiplication by `g` is a coalgebra isomorphism
/// `H_*(Bβ_{2k}) → H_*(Bβ_{2k+1})`.
pub fn check_lemma_braid(k: u32, limits: &Limits) -> Result<LemmaBraidReport> {
    let even = basis(Family::Braid, 2 * k, limits)?;
    let odd = basis(Family::Braid, 2 * k + 1, limits)?;
    check_lemma_braid_bases(k, even, odd, limits)
}

/// [`check_lemma_braid`] on caller-supplied (possibly reordered) bases.
pub fn check_lemma_braid_bases(
    k: u32,
    even: Vec<FamilyMonomial>,
    odd: Vec<FamilyMonomial>,
    limits: &Limits,
) -> Result<LemmaBraidReport> {
    let g = FamilyMonomial::generator(Family::Braid, 0)?;
    let mut failures = Vec::new();

    let images: Vec<FamilyMonomial> = even.iter().map(|m| m.try_mul(&g)).collect::<Result<_>>()?;
    let image_set: BTreeSet<&FamilyMonomial> = images.iter().collect();
    let odd_set: BTreeSet<&FamilyMonomial> = odd.iter().collect();
    let mut bijective = image_set.len() == even.len() && image_set == odd_set;
    for y in &odd {
        match y.divide_generator(0) {
            Some(x) if even.contains(&x) => {}
            _ => {
                bijective = false;
                failures.push(format!("{y} is not g times an even-weight basis element"));
            }
        }
    }

    let embedder = Embedder::for_monomials(Family::Braid, odd.iter(), limits.max_gen)?;
    let gg = Tensor::pair(Monomial::g_pow(1), Monomial::g_pow(1));
    let mut coproducts_match = true;
    for (m, gm) in even.iter().zip(&images) {
        let lhs = coproduct(&embedder.embed(gm)?);
        let rhs = gg.try_mul(&coproduct(&embedder.embed(m)?))?;
        if lhs != rhs {
            coproducts_match = false;
            failures.push(format!("psi(g * {m}) differs from (g x g) psi({m})"));
        }
    }

    let coalgebra_map = bijective && {
        let a = FamilyModel::from_basis(Family::Braid, 2 * k, even.clone(), limits)?;
        let b = FamilyModel::from_basis(Family::Braid, 2 * k + 1, odd.clone(), limits)?;
        let maps = monomial_maps(&a, &b, |m| m.try_mul(&g).ok());
        match maps {
            Some(maps) => a.coalgebra()?.is_coalgebra_map(&b.coalgebra()?, &maps),
            None => false,
        }
    };
    if bijective && !coalgebra_map {
        failures.push("multiplication by g is not a coalgebra map".into());
    }

    Ok(LemmaBraidReport {
        k,
        even_size: images.len(),
        odd_size: odd.len(),
        bijective,
        coproducts_match,
        coalgebra_map,
        failures,
    })
}

/// Per-degree permutation matrices of a bijection between two monomial bases,
/// or `None` if `f` fails to land in the target basis in the same degree.
fn monomial_maps(
    source: &FamilyModel,
    target: &FamilyModel,
    f: impl Fn(&FamilyMonomial) -> Option<FamilyMonomial>,
) -> Option<Vec<BitMatrix>> {
    if source.degrees().len() != target.degrees().len() {
        return None;
    }
    let mut maps = Vec::with_capacity(source.degrees().len());
    for (d, ms) in source.degrees().iter().enumerate() {
        let mut m = BitMatrix::zeros(target.dim(d), ms.len());
        for (a, x) in ms.iter().enumerate() {
            let (dt, b) = target.position(&f(x)?)?;
            if dt != d {
                return None;
            }
            m.set(b, a, true);
        }
        if !m.is_invertible() {
            return None;
        }
        maps.push(m);
    }
    Some(maps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidConfRoute {
    /// The padding map `c_i ↦ γ_{i+1}`, times `g^{2(k−w)}`, is an isomorphism.
    Candidate,
    /// The candidate failed and the exhaustive search found an isomorphism.
    Search,
    /// Neither route established an isomorphism.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidConfReport {
    pub k: u32,
    pub candidate_is_iso: bool,
    pub route: BraidConfRoute,
    /// Only run when the candidate map fails.
    pub search: Option<IsoVerdict>,
    pub conf: GradedCoalgebra,
    pub braid: GradedCoalgebra,
    /// The isomorphism `H_*(C_k) → H_*(Bβ_{2k})` that was established.
    pub maps: Option<Vec<BitMatrix>>,
}

impl BraidConfReport {
    pub fn verified(&self) -> bool {
        self.route != BraidConfRoute::Failed
    }
}

/// The candidate correspondence `C_k → Bβ_{2k}` on monomials.
pub fn conf_to_braid(c: &FamilyMonomial, k: u32) -> Option<FamilyMonomial> {
    let exps: Vec<(i32, u32)> = c.exps().iter().map(|&(i, e)| (i + 1, e)).collect();
    let core = FamilyMonomial::new(Family::Braid, exps).ok()?;
    let pad = u64::from(2 * k).checked_sub(core.weight())?;
    core.try_mul(&FamilyMonomial::new(Family::Braid, [(0, pad as u32)]).ok()?)
        .ok()
}

/// Establishes `H_*(Bβ_{2k}) ≅ H_*(C_k)` as coalgebras, by the candidate
/// padding map if possible and by exhaustive search otherwise.
pub fn check_braid_conf(k: u32, limits: &Limits) -> Result<BraidConfReport> {
    let conf_model = FamilyModel::new(Family::Conf, k, limits)?;
    let braid_model = FamilyModel::new(Family::Braid, 2 * k, limits)?;
    let conf = conf_model.coalgebra()?;
    let braid = braid_model.coalgebra()?;
    let candidate = monomial_maps(&conf_model, &braid_model, |c| conf_to_braid(c, k))
        .filter(|maps| conf.is_coalgebra_map(&braid, maps));
    let candidate_is_iso = candidate.is_some();
    let (route, search, maps) = match candidate {
        Some(maps) => (BraidConfRoute::Candidate, None, Some(maps)),
        None => {
            let verdict = coalgebras_isomorphic(&conf, &braid, limits.iso_budget);
            let maps = verdict.witness_maps().map(<[BitMatrix]>::to_vec);
            let route = if maps.is_some() {
                BraidConfRoute::Search
            } else {
                BraidConfRoute::Failed
            };
            (route, Some(verdict), maps)
        }
    };
    Ok(BraidConfReport {
        k,
        candidate_is_iso,
        route,
        search,
        conf,
        braid,
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn gap_digits() {
        assert_eq!(first_gap_digit(6), Some(1));
        assert_eq!(first_gap_digit(5), Some(2));
        assert_eq!(first_gap_digit(2), Some(1));
        assert_eq!(first_gap_digit(7), None);
        assert_eq!(first_gap_digit(1), None);
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(braid_top_s_set_closed_form(1).to_vec(), [0, 1]);
        assert_eq!(braid_top_s_set_closed_form(2).to_vec(), [0, 3]);
        assert_eq!(braid_top_s_set_closed_form(3).to_vec(), [0, 1, 3, 4]);
    }

    #[test]
    fn s_sets_of_small_top_classes() {
        let x = top_class(Family::Rat, 1).unwrap();
        assert_eq!(s_set(&x, &lim()).unwrap().to_vec(), [0, 1]);
        let y = top_class(Family::Braid, 1).unwrap();
        assert_eq!(s_set(&y, &lim()).unwrap().to_vec(), [0, 1]);
        let x = top_class(Family::Rat, 2).unwrap();
        assert_eq!(s_set(&x, &lim()).unwrap().to_vec(), [0, 1, 2, 3]);
        let y = top_class(Family::Braid, 2).unwrap();
        assert_eq!(s_set(&y, &lim()).unwrap().to_vec(), [0, 3]);
    }

    #[test]
    fn candidate_map_on_conf_one() {
        let c0 = FamilyMonomial::generator(Family::Conf, 0).unwrap();
        assert_eq!(conf_to_braid(&c0, 1).unwrap().to_string(), "gamma_1");
        let one = FamilyMonomial::one(Family::Conf);
        assert_eq!(conf_to_braid(&one, 1).unwrap().to_string(), "g^2");
        let report = check_braid_conf(1, &lim()).unwrap();
        assert_eq!(report.route, BraidConfRoute::Candidate);
    }

    use alloc::string::ToString;
}
