//! Algebraic invariants checked on random bounded inputs.
//!
//! Each check runs a proptest [`TestRunner`] for the requested number of
//! cases and returns the shrunk counterexample on failure.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use ratcoh_core::dyer_lashof::q_monomial;
use ratcoh_core::{
    araki_kudo_q, coproduct, s_set, sq1_dual, Element, Family, FamilyMonomial, Limits, Monomial,
    Tensor,
};

pub const CASES: u32 = 1000;
const MAX_GEN: u32 = 32;

pub fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    (-8i64..=8, prop::collection::vec(0u32..=3, 3)).prop_map(|(g, es)| {
        Monomial::new(
            g,
            es.into_iter().enumerate().map(|(i, e)| (i as u32 + 1, e)),
        )
        .unwrap()
    })
}

pub fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec(monomial(), 0..=4).prop_map(Element::from_terms)
}

/// Nonzero homogeneous element: a monomial times a product of the
/// homogeneous binomials `(Qg)³ + g²Q²g` and `(Qg)⁷ + g⁶Q³g`.
pub fn homogeneous() -> impl Strategy<Value = Element> {
    (monomial(), any::<bool>(), any::<bool>()).prop_map(|(m, a, b)| {
        let mut x = Element::from(m);
        let binomials = [
            (a, [Monomial::new(0, [(1, 3)]), Monomial::new(2, [(2, 1)])]),
            (b, [Monomial::new(0, [(1, 7)]), Monomial::new(6, [(3, 1)])]),
        ];
        for (take, [p, q]) in binomials {
            if take {
                x = mul(&x, &Element::from_terms([p.unwrap(), q.unwrap()]));
            }
        }
        x
    })
}

pub fn family_monomial(family: Family) -> impl Strategy<Value = FamilyMonomial> {
    let min = family.min_index();
    prop::collection::vec(0u32..=2, 4).prop_map(move |es| {
        FamilyMonomial::new(
            family,
            es.into_iter().enumerate().map(|(n, e)| (min + n as i32, e)),
        )
        .unwrap()
    })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn q(e: &Element) -> Element {
    araki_kudo_q(e, MAX_GEN).unwrap()
}

fn mul(a: &Element, b: &Element) -> Element {
    a.try_mul(b).unwrap()
}

type Triple = BTreeSet<(Monomial, Monomial, Monomial)>;

fn toggle3(set: &mut Triple, t: (Monomial, Monomial, Monomial)) {
    if !set.remove(&t) {
        set.insert(t);
    }
}

pub fn coassociativity(cases: u32) -> Result<(), String> {
    run(cases, element(), |x| {
        let psi = coproduct(&x);
        let (mut left, mut right) = (Triple::new(), Triple::new());
        for (l, r) in psi.pairs() {
            for (ll, lr) in coproduct(&Element::from(l.clone())).pairs() {
                toggle3(&mut left, (ll.clone(), lr.clone(), r.clone()));
            }
            for (rl, rr) in coproduct(&Element::from(r.clone())).pairs() {
                toggle3(&mut right, (l.clone(), rl.clone(), rr.clone()));
            }
        }
        check(left == right, || format!("(ψ⊗1)ψ ≠ (1⊗ψ)ψ on {x}"))
    })
}

pub fn coproduct_multiplicative(cases: u32) -> Result<(), String> {
    run(cases, (element(), element()), |(a, b)| {
        let lhs = coproduct(&mul(&a, &b));
        let rhs = coproduct(&a).try_mul(&coproduct(&b)).unwrap();
        check(lhs == rhs, || {
            format!("ψ(ab) ≠ ψ(a)ψ(b) for a = {a}, b = {b}")
        })
    })
}

pub fn counit(cases: u32) -> Result<(), String> {
    // ε sends g^a to 1 and kills positive dimensions
    run(cases, monomial(), |m| {
        let psi = coproduct(&Element::from(m.clone()));
        let mut recovered = Element::zero();
        for (l, r) in psi.pairs() {
            if l.is_pure_g() {
                recovered.toggle(r.clone());
            }
        }
        check(recovered == Element::from(m.clone()), || {
            format!("(ε⊗1)ψ ≠ id on {m}")
        })
    })
}

/// Closed form: `Q(m) = Σ_{u : e_u(m) odd} m² u⁻² Q(u)` over the generators
/// `u ∈ {g, Qg, Q²g, …}`.
pub fn q_closed_form(m: &Monomial) -> Element {
    let sq = m.try_pow(2).unwrap();
    let mut out = Element::zero();
    if m.g_exp().rem_euclid(2) == 1 {
        out.toggle(
            sq.try_shift_g(-2)
                .unwrap()
                .try_mul(&Monomial::gen(1).unwrap())
                .unwrap(),
        );
    }
    for &(i, e) in m.q_exps() {
        if e % 2 == 1 {
            let mut exps: Vec<(u32, u32)> = sq.q_exps().to_vec();
            for p in exps.iter_mut() {
                if p.0 == i {
                    p.1 -= 2;
                }
            }
            let base = Monomial::new(sq.g_exp(), exps).unwrap();
            out.toggle(base.try_mul(&Monomial::gen(i + 1).unwrap()).unwrap());
        }
    }
    out
}

pub fn cartan_consistency(cases: u32) -> Result<(), String> {
    run(cases, (element(), element()), |(a, b)| {
        let lhs = q(&mul(&a, &b));
        let rhs = mul(&mul(&a, &a), &q(&b)) + mul(&q(&a), &mul(&b, &b));
        check(lhs == rhs, || format!("Cartan fails for a = {a}, b = {b}"))
    })
}

pub fn q_matches_closed_form(cases: u32) -> Result<(), String> {
    run(cases, monomial(), |m| {
        let got = q_monomial(&m, MAX_GEN).unwrap();
        check(got == q_closed_form(&m), || format!("Q({m}) = {got}"))
    })
}

/// `Q(m)` is the same whichever way `m` is split into two factors.
pub fn q_factorization_independent(cases: u32) -> Result<(), String> {
    run(cases, (monomial(), monomial()), |(m, n)| {
        let whole = m.try_mul(&n).unwrap();
        // split whole = m · n and also whole = (m·g) · (n·g⁻¹)
        let (m2, n2) = (m.try_shift_g(1).unwrap(), n.try_shift_g(-1).unwrap());
        let via = |a: &Monomial, b: &Monomial| {
            let (a, b) = (Element::from(a.clone()), Element::from(b.clone()));
            mul(&mul(&a, &a), &q(&b)) + mul(&q(&a), &mul(&b, &b))
        };
        let direct = q(&Element::from(whole.clone()));
        check(direct == via(&m, &n) && direct == via(&m2, &n2), || {
            format!("Q({whole}) depends on the factorization")
        })
    })
}

pub fn q_kills_squares(cases: u32) -> Result<(), String> {
    run(cases, element(), |x| {
        let sq = mul(&x, &x);
        check(q(&sq).is_zero(), || format!("Q(x²) ≠ 0 for x = {x}"))
    })
}

pub fn q_bigrade(cases: u32) -> Result<(), String> {
    run(cases, homogeneous(), |x| {
        let b = x.homogeneous_bigrade().unwrap();
        let qx = q(&x);
        let ok = qx
            .terms()
            .all(|t| t.weight() == 2 * b.weight && t.dim() == 2 * b.dim + 1);
        check(ok, || format!("Q({x}) = {qx} breaks the bigrade law"))
    })
}

pub fn sq1_bigrade(cases: u32) -> Result<(), String> {
    run(cases, homogeneous(), |x| {
        let b = x.homogeneous_bigrade().unwrap();
        let s = sq1_dual(&x);
        let ok = s
            .terms()
            .all(|t| t.weight() == b.weight && t.dim() + 1 == b.dim);
        check(ok, || format!("Sq_1^*({x}) = {s} breaks the bigrade law"))
    })
}

pub fn sq1_squares_to_zero(cases: u32) -> Result<(), String> {
    run(cases, element(), |x| {
        check(sq1_dual(&sq1_dual(&x)).is_zero(), || {
            format!("Sq_1^* Sq_1^* ≠ 0 on {x}")
        })
    })
}

pub fn sq1_derivation(cases: u32) -> Result<(), String> {
    run(cases, (element(), element()), |(a, b)| {
        let lhs = sq1_dual(&mul(&a, &b));
        let rhs = mul(&sq1_dual(&a), &b) + mul(&a, &sq1_dual(&b));
        check(lhs == rhs, || {
            format!("Sq_1^* not a derivation on {a}, {b}")
        })
    })
}

pub fn s_set_symmetry(cases: u32) -> Result<(), String> {
    let limits = Limits::default();
    let strategy = prop_oneof![
        family_monomial(Family::Braid),
        family_monomial(Family::Rat),
        family_monomial(Family::Conf),
    ];
    run(cases, strategy, |x| {
        let s = s_set(&x, &limits).unwrap();
        check(
            s.is_symmetric() && s.contains(0) && s.contains(x.dim()),
            || format!("S({x}) = {:?}", s.to_vec()),
        )
    })
}

pub fn mul_commutative_associative(cases: u32) -> Result<(), String> {
    run(cases, (element(), element(), element()), |(a, b, c)| {
        check(
            mul(&a, &b) == mul(&b, &a) && mul(&mul(&a, &b), &c) == mul(&a, &mul(&b, &c)),
            || format!("ring laws fail on {a}, {b}, {c}"),
        )
    })
}

pub fn mul_grading(cases: u32) -> Result<(), String> {
    run(cases, (homogeneous(), homogeneous()), |(a, b)| {
        let (ga, gb) = (
            a.homogeneous_bigrade().unwrap(),
            b.homogeneous_bigrade().unwrap(),
        );
        let p = mul(&a, &b);
        let ok = p
            .terms()
            .all(|t| t.weight() == ga.weight + gb.weight && t.dim() == ga.dim + gb.dim);
        check(ok, || format!("grading fails on {a} · {b}"))
    })
}

pub fn add_self_is_zero(cases: u32) -> Result<(), String> {
    run(cases, element(), |x| {
        check((&x + &x).is_zero(), || format!("{x} + itself ≠ 0"))
    })
}

pub fn bigrade_components_partition(cases: u32) -> Result<(), String> {
    run(cases, element(), |x| {
        let parts = x.bigrade_components();
        let mut union = Element::zero();
        let mut ok = true;
        for (bg, part) in &parts {
            ok &= !part.is_zero() && part.homogeneous_bigrade() == Some(*bg);
            union += part;
        }
        check(ok && union == x, || format!("bad bigrade split of {x}"))
    })
}

pub fn coproduct_tensor_dims(cases: u32) -> Result<(), String> {
    run(cases, monomial(), |m| {
        let psi: Tensor = coproduct(&Element::from(m.clone()));
        let parts = psi.components(m.dim()).unwrap();
        let total: usize = parts.values().map(Tensor::len).sum();
        check(
            total == psi.len()
                && psi
                    .pairs()
                    .all(|(l, r)| l.weight() == m.weight() && r.weight() == m.weight()),
            || format!("ψ({m}) has inconsistent grading"),
        )
    })
}

pub type Check = fn(u32) -> Result<(), String>;

/// Every property, by name.
pub const ALL: &[(&str, Check)] = &[
    ("ring laws", mul_commutative_associative),
    ("product grading", mul_grading),
    ("x + x = 0", add_self_is_zero),
    ("bigrade components", bigrade_components_partition),
    ("coproduct grading", coproduct_tensor_dims),
    ("coassociativity", coassociativity),
    ("coproduct multiplicative", coproduct_multiplicative),
    ("counit", counit),
    ("Cartan formula", cartan_consistency),
    ("Q closed form", q_matches_closed_form),
    ("Q factorization independence", q_factorization_independent),
    ("Q(x²) = 0", q_kills_squares),
    ("Q bigrade", q_bigrade),
    ("Sq_1^* bigrade", sq1_bigrade),
    ("Sq_1^* Sq_1^* = 0", sq1_squares_to_zero),
    ("Sq_1^* derivation", sq1_derivation),
    ("S-set symmetry", s_set_symmetry),
];
