//! Homology operations on the ambient algebra: the Araki–Kudo operation `Q`,
//! the coproduct `ψ` and the dual Steenrod operations `Sq_j^*`.

use alloc::vec::Vec;

use crate::element::{Element, Tensor};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// `Q` applied termwise.
///
/// On a monomial the Cartan formula `Q(xy) = x²Qy + Qx·y²` is applied to the
/// split (first generator power) × (rest), bottoming out at
/// `Q(g^a)` and `Q((Q^i g)^e)`, and `Q(1) = 0`.
pub fn araki_kudo_q(e: &Element, max_gen: u32) -> Result<Element> {
    let mut out = Element::zero();
    for m in e.terms() {
        out += &q_monomial(m, max_gen)?;
    }
    Ok(out)
}

/// `Q^n(e)`.
pub fn iterate_q(e: &Element, n: u32, max_gen: u32) -> Result<Element> {
    let mut x = e.clone();
    for _ in 0..n {
        x = araki_kudo_q(&x, max_gen)?;
    }
    Ok(x)
}

#[derive(Clone, Copy)]
enum Factor {
    G(i64),
    Q(u32, u32),
}

impl Factor {
    fn monomial(self) -> Monomial {
        match self {
            Factor::G(a) => Monomial::g_pow(a),
            Factor::Q(i, e) => Monomial::from_raw(0, alloc::vec![(i, e)]),
        }
    }
}

pub fn q_monomial(m: &Monomial, max_gen: u32) -> Result<Element> {
    let mut factors = Vec::with_capacity(m.q_exps().len() + 1);
    if m.g_exp() != 0 {
        factors.push(Factor::G(m.g_exp()));
    }
    factors.extend(m.q_exps().iter().map(|&(i, e)| Factor::Q(i, e)));
    q_cartan(&factors, max_gen)
}

fn q_cartan(factors: &[Factor], max_gen: u32) -> Result<Element> {
    let Some((&head, rest)) = factors.split_first() else {
        return Ok(Element::zero());
    };
    if rest.is_empty() {
        return q_factor(head, max_gen);
    }
    let head_m = head.monomial();
    let rest_m = rest
        .iter()
        .try_fold(Monomial::one(), |acc, f| acc.try_mul(&f.monomial()))?;
    // Q(u·r) = u²·Q(r) + Q(u)·r²
    let mut out = q_cartan(rest, max_gen)?.try_mul_monomial(&head_m.try_pow(2)?)?;
    out += &q_factor(head, max_gen)?.try_mul_monomial(&rest_m.try_pow(2)?)?;
    Ok(out)
}

/// Closed forms for a single generator power: `Q(g^a) = g^{2(a-1)}Qg` for odd
/// `a`, `Q((Q^i g)^e) = (Q^i g)^{2(e-1)} Q^{i+1} g` for odd `e`, zero for even
/// exponents.
fn q_factor(f: Factor, max_gen: u32) -> Result<Element> {
    match f {
        Factor::G(a) if a % 2 != 0 => {
            check_gen(1, max_gen)?;
            let g = a
                .checked_sub(1)
                .and_then(|x| x.checked_mul(2))
                .ok_or(Error::ExponentOverflow)?;
            Ok(Element::from(Monomial::from_raw(g, alloc::vec![(1, 1)])))
        }
        Factor::Q(i, e) if e % 2 == 1 => {
            check_gen(i + 1, max_gen)?;
            let mut q = Vec::with_capacity(2);
            if e > 1 {
                q.push((i, 2 * (e - 1)));
            }
            q.push((i + 1, 1));
            Ok(Element::from(Monomial::from_raw(0, q)))
        }
        _ => Ok(Element::zero()),
    }
}

fn check_gen(index: u32, max_gen: u32) -> Result<()> {
    if index > max_gen {
        return Err(Error::GeneratorOverflow {
            index,
            max: max_gen,
        });
    }
    Ok(())
}

/// The coproduct `ψ`, extended linearly.
pub fn coproduct(e: &Element) -> Tensor {
    let mut out = Tensor::zero();
    for m in e.terms() {
        for_each_coproduct_term(m, |l, r| out.toggle(l, r));
    }
    out
}

/// Streams the (pre-cancellation) terms of `ψ(m)`.
///
/// `ψ` is multiplicative with `ψ(g^{±1}) = g^{±1} ⊗ g^{±1}` and
/// `ψ(Q^i g) = g^{2^i} ⊗ Q^i g + Q^i g ⊗ g^{2^i}`, so
/// `ψ((Q^i g)^e) = Σ_a C(e, a) (Q^i g)^a g^{2^i(e-a)} ⊗ g^{2^i a} (Q^i g)^{e-a}`.
/// Only the `a` with odd binomial coefficient survive, i.e. the bitwise
/// submasks of `e`. Distinct submask choices give distinct pairs, so no two
/// streamed terms cancel.
pub fn for_each_coproduct_term(m: &Monomial, mut sink: impl FnMut(Monomial, Monomial)) {
    let qs = m.q_exps();
    let mut left = Vec::with_capacity(qs.len());
    let mut right = Vec::with_capacity(qs.len());
    walk_coproduct(qs, m.g_exp(), m.g_exp(), &mut left, &mut right, &mut sink);
}

fn walk_coproduct(
    qs: &[(u32, u32)],
    gl: i64,
    gr: i64,
    left: &mut Vec<(u32, u32)>,
    right: &mut Vec<(u32, u32)>,
    sink: &mut impl FnMut(Monomial, Monomial),
) {
    let Some((&(i, e), rest)) = qs.split_first() else {
        sink(
            Monomial::from_raw(gl, left.clone()),
            Monomial::from_raw(gr, right.clone()),
        );
        return;
    };
    let w = 1i64 << i;
    // enumerate submasks a ⊆ e, including 0 and e
    let mut a = e;
    loop {
        let b = e - a;
        if a > 0 {
            left.push((i, a));
        }
        if b > 0 {
            right.push((i, b));
        }
        walk_coproduct(
            rest,
            gl + w * i64::from(b),
            gr + w * i64::from(a),
            left,
            right,
            sink,
        );
        if a > 0 {
            left.pop();
        }
        if b > 0 {
            right.pop();
        }
        if a == 0 {
            break;
        }
        a = (a - 1) & e;
    }
}

/// The dual Steenrod operation `Sq_1^*`, a derivation with
/// `Sq_1^*(Q^i g) = (Q^{i-1} g)²` for `i ≥ 2` and zero on `g^{±1}` and `Qg`.
pub fn sq1_dual(e: &Element) -> Element {
    let mut out = Element::zero();
    for m in e.terms() {
        for &(i, exp) in m.q_exps() {
            if i < 2 || exp % 2 == 0 {
                continue;
            }
            let hit = m.with_q_exp(i, exp - 1);
            let lower = hit.q_exp(i - 1);
            out.toggle(hit.with_q_exp(i - 1, lower + 2));
        }
    }
    out
}

/// `Sq_j^*` extended to products by the dual Cartan formula
/// `Sq_j^*(xy) = Σ_{a+b=j} Sq_a^*(x) Sq_b^*(y)`.
///
/// On generators only `Sq_0^* = id` and `Sq_1^*` are nonzero, so on a monomial
/// this picks `t_i` of the `e_i` copies of each `Q^i g` (`i ≥ 2`) to hit with
/// `Sq_1^*`, weighted by `C(e_i, t_i) mod 2`, with `Σ t_i = j`.
pub fn sqj_dual(e: &Element, j: u32) -> Element {
    if j == 0 {
        return e.clone();
    }
    if j == 1 {
        return sq1_dual(e);
    }
    let mut out = Element::zero();
    for m in e.terms() {
        let hittable: Vec<(u32, u32)> = m
            .q_exps()
            .iter()
            .copied()
            .filter(|&(i, _)| i >= 2)
            .collect();
        let mut picks = Vec::with_capacity(hittable.len());
        walk_sqj(m, &hittable, j, &mut picks, &mut out);
    }
    out
}

fn walk_sqj(
    m: &Monomial,
    hittable: &[(u32, u32)],
    remaining: u32,
    picks: &mut Vec<(u32, u32)>,
    out: &mut Element,
) {
    let Some((&(i, e), rest)) = hittable.split_first() else {
        if remaining == 0 {
            let mut result = m.clone();
            for &(i, t) in picks.iter() {
                result = result.with_q_exp(i, result.q_exp(i) - t);
            }
            for &(i, t) in picks.iter() {
                let lower = result.q_exp(i - 1);
                result = result.with_q_exp(i - 1, lower + 2 * t);
            }
            out.toggle(result);
        }
        return;
    };
    for t in 0..=e.min(remaining) {
        // C(e, t) is odd iff t ⊆ e bitwise
        if t & !e != 0 {
            continue;
        }
        picks.push((i, t));
        walk_sqj(m, rest, remaining - t, picks, out);
        picks.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(g: i64, q: &[(u32, u32)]) -> Monomial {
        Monomial::new(g, q.iter().copied()).unwrap()
    }

    fn el(terms: &[Monomial]) -> Element {
        Element::from_terms(terms.iter().cloned())
    }

    const MAX: u32 = 32;

    #[test]
    fn q_of_g_inverse() {
        let q = araki_kudo_q(&el(&[m(-1, &[])]), MAX).unwrap();
        assert_eq!(q, el(&[m(-4, &[(1, 1)])]));
    }

    #[test]
    fn q_of_rho_zero() {
        let q = araki_kudo_q(&el(&[m(-1, &[(1, 1)])]), MAX).unwrap();
        assert_eq!(q, el(&[m(-2, &[(2, 1)]), m(-4, &[(1, 3)])]));
    }

    #[test]
    fn q_kills_g_squared_and_unit() {
        assert!(araki_kudo_q(&el(&[m(2, &[])]), MAX).unwrap().is_zero());
        assert!(araki_kudo_q(&Element::one(), MAX).unwrap().is_zero());
    }

    #[test]
    fn q_generator_tower() {
        for i in 1..8 {
            let q = araki_kudo_q(&Element::from(Monomial::gen(i).unwrap()), MAX).unwrap();
            assert_eq!(q, Element::from(Monomial::gen(i + 1).unwrap()));
        }
    }

    #[test]
    fn q_respects_generator_bound() {
        let top = Element::from(Monomial::gen(4).unwrap());
        assert_eq!(
            araki_kudo_q(&top, 4),
            Err(Error::GeneratorOverflow { index: 5, max: 4 })
        );
        // even powers vanish before any generator is produced
        let sq = Element::from(m(0, &[(4, 2)]));
        assert!(araki_kudo_q(&sq, 4).unwrap().is_zero());
    }

    #[test]
    fn coproduct_of_g_and_qg() {
        assert_eq!(
            coproduct(&el(&[m(1, &[])])),
            Tensor::pair(m(1, &[]), m(1, &[]))
        );
        assert_eq!(
            coproduct(&el(&[m(0, &[(1, 1)])])),
            Tensor::from_pairs([(m(2, &[]), m(0, &[(1, 1)])), (m(0, &[(1, 1)]), m(2, &[])),])
        );
    }

    #[test]
    fn coproduct_of_rho_zero_is_primitive_in_its_component() {
        let rho0 = m(-1, &[(1, 1)]);
        assert_eq!(
            coproduct(&Element::from(rho0.clone())),
            Tensor::from_pairs([(m(1, &[]), rho0.clone()), (rho0, m(1, &[]))])
        );
    }

    #[test]
    fn coproduct_components_of_qg() {
        let parts = coproduct(&el(&[m(0, &[(1, 1)])])).components(1).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&0], Tensor::pair(m(2, &[]), m(0, &[(1, 1)])));
        assert_eq!(parts[&1], Tensor::pair(m(0, &[(1, 1)]), m(2, &[])));
    }

    #[test]
    fn sq1_examples() {
        assert_eq!(sq1_dual(&el(&[m(2, &[(2, 1)])])), el(&[m(2, &[(1, 2)])]));
        // g Q(g^{-1}Qg) = g^{-1}Q^2g + g^{-3}(Qg)^3
        let x = el(&[m(-1, &[(2, 1)]), m(-3, &[(1, 3)])]);
        assert_eq!(sq1_dual(&x), el(&[m(-1, &[(1, 2)])]));
        assert!(sq1_dual(&el(&[m(3, &[])])).is_zero());
        assert!(sq1_dual(&el(&[m(0, &[(1, 1)])])).is_zero());
    }

    #[test]
    fn sqj_examples() {
        assert!(sqj_dual(&el(&[m(0, &[(2, 1)])]), 2).is_zero());
        assert_eq!(sqj_dual(&el(&[m(0, &[(2, 2)])]), 2), el(&[m(0, &[(1, 4)])]));
        // degree reasons
        let x = el(&[m(0, &[(2, 1), (3, 1)])]);
        assert!(sqj_dual(&x, 11).is_zero());
        assert_eq!(sqj_dual(&x, 1), sq1_dual(&x));
    }
}
