//! Reference computations that avoid the ambient algebra.
//!
//! Coproducts are expanded directly in family generators: every generator
//! coproduct is written in family monomials and products are taken term by
//! term. `Q^i g` inside the `Rat` formula is rewritten in family generators by
//! the Cartan formula with `Q(g) = g ρ_0` and `Q(ρ_j) = ρ_{j+1}`. No linear
//! solving is involved, so the structure constants come out directly in the
//! family basis.

use std::collections::{BTreeMap, BTreeSet};

use ratcoh_core::{basis, Element, Family, FamilyMonomial, GradedCoalgebra, Limits, Monomial};

pub type Poly = BTreeSet<FamilyMonomial>;
pub type TensorPoly = BTreeSet<(FamilyMonomial, FamilyMonomial)>;

fn toggle<T: Ord>(set: &mut BTreeSet<T>, x: T) {
    if !set.remove(&x) {
        set.insert(x);
    }
}

fn fm(family: Family, exps: &[(i32, u32)]) -> FamilyMonomial {
    FamilyMonomial::new(family, exps.iter().copied()).unwrap()
}

fn one(family: Family) -> FamilyMonomial {
    FamilyMonomial::one(family)
}

pub fn mul_poly(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for x in a {
        for y in b {
            toggle(&mut out, x.try_mul(y).unwrap());
        }
    }
    out
}

pub fn mul_tensor(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::new();
    for (l1, r1) in a {
        for (l2, r2) in b {
            toggle(&mut out, (l1.try_mul(l2).unwrap(), r1.try_mul(r2).unwrap()));
        }
    }
    out
}

/// `Q` on `H_*(⊔Rat_k)` in family generators, by the Cartan formula.
pub fn rat_q(m: &FamilyMonomial) -> Poly {
    let Some(&(i, _)) = m.exps().first() else {
        return Poly::new();
    };
    let head = fm(Family::Rat, &[(i, 1)]);
    let rest = m.divide_generator(i).unwrap();
    let q_head: Poly = if i == -1 {
        [fm(Family::Rat, &[(-1, 1), (0, 1)])].into()
    } else {
        [fm(Family::Rat, &[(i + 1, 1)])].into()
    };
    // Q(head · rest) = head² Q(rest) + Q(head) rest²
    let head_sq: Poly = [head.try_mul(&head).unwrap()].into();
    let rest_sq: Poly = [rest.try_mul(&rest).unwrap()].into();
    let mut out = mul_poly(&head_sq, &rat_q(&rest));
    for t in mul_poly(&q_head, &rest_sq) {
        toggle(&mut out, t);
    }
    out
}

/// `Q^i g` in `Rat` generators.
pub fn rat_iterated_q_of_g(i: u32) -> Poly {
    let mut cur: Poly = [fm(Family::Rat, &[(-1, 1)])].into();
    for _ in 0..i {
        let mut next = Poly::new();
        for m in &cur {
            for t in rat_q(m) {
                toggle(&mut next, t);
            }
        }
        cur = next;
    }
    cur
}

pub fn generator_coproduct(family: Family, i: i32) -> TensorPoly {
    let x = fm(family, &[(i, 1)]);
    match (family, i) {
        (Family::Braid, 0) | (Family::Rat, -1) => [(x.clone(), x)].into(),
        (Family::Braid, i) => {
            let gg = fm(family, &[(0, 1 << i)]);
            [(gg.clone(), x.clone()), (x, gg)].into()
        }
        (Family::Conf, _) => [(one(family), x.clone()), (x, one(family))].into(),
        (Family::Rat, 0) => {
            let g = fm(family, &[(-1, 1)]);
            [(g.clone(), x.clone()), (x, g)].into()
        }
        (Family::Rat, i) => {
            let w = 1u32 << i;
            let gg = fm(family, &[(-1, w)]);
            let rho0 = fm(family, &[(0, w)]);
            let qig = rat_iterated_q_of_g(i as u32);
            let mut out = TensorPoly::new();
            toggle(&mut out, (gg.clone(), x.clone()));
            toggle(&mut out, (x, gg));
            for q in &qig {
                toggle(&mut out, (q.clone(), rho0.clone()));
                toggle(&mut out, (rho0.clone(), q.clone()));
            }
            out
        }
    }
}

pub fn monomial_coproduct(m: &FamilyMonomial) -> TensorPoly {
    let unit = one(m.family());
    let mut out: TensorPoly = [(unit.clone(), unit)].into();
    for &(i, e) in m.exps() {
        let gen = generator_coproduct(m.family(), i);
        for _ in 0..e {
            out = mul_tensor(&out, &gen);
        }
    }
    out
}

pub type LabelPairs = BTreeMap<String, BTreeSet<(String, String)>>;

/// Coproduct of every basis element, as label pairs.
pub fn oracle_structure(family: Family, k: u32, limits: &Limits) -> LabelPairs {
    basis(family, k, limits)
        .unwrap()
        .iter()
        .map(|m| {
            let pairs = monomial_coproduct(m)
                .into_iter()
                .map(|(l, r)| (l.label(), r.label()))
                .collect();
            (m.label(), pairs)
        })
        .collect()
}

pub fn coalgebra_structure(c: &GradedCoalgebra) -> LabelPairs {
    let mut out = LabelPairs::new();
    for d in 0..c.num_degrees() {
        for (a, from) in c.labels(d).iter().enumerate() {
            let entry = out.entry(from.clone()).or_default();
            for s in 0..=d {
                for (l, r) in c.pairs(d, s, a) {
                    entry.insert((c.labels(s)[l].clone(), c.labels(d - s)[r].clone()));
                }
            }
        }
    }
    out
}

/// `Q(g^a)` from `Q(1) = 0` and `Q(g · g^{a−1}) = g² Q(g^{a−1}) + Qg · g^{2(a−1)}`,
/// run upwards for `a > 0` and solved downwards for `a < 0`.
pub fn q_of_g_power(a: i64) -> Element {
    let qg = Monomial::gen(1).unwrap();
    let step_term = |b: i64| Element::from(qg.try_shift_g(2 * b).unwrap());
    let mut cur = Element::zero();
    if a >= 0 {
        for b in 0..a {
            // cur = Q(g^b) → Q(g^{b+1})
            cur = shift(&cur, 2) + step_term(b);
        }
    } else {
        for b in (a..0).rev() {
            // cur = Q(g^{b+1}) → Q(g^b) = g^{-2}(Q(g^{b+1}) + Qg g^{2b})
            cur = shift(&(cur + step_term(b)), -2);
        }
    }
    cur
}

fn shift(e: &Element, a: i64) -> Element {
    e.terms().map(|m| m.try_shift_g(a).unwrap()).collect()
}
