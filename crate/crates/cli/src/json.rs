//! JSON encodings of the algebraic objects.

use ratcoh_core::f2::BitMatrix;
use ratcoh_core::iso::InvariantWitness;
use ratcoh_core::{Element, Family, FamilyMonomial, GradedCoalgebra, IsoVerdict, Monomial, SSet};
use serde_json::{json, Map, Value};

/// `{"g": a, "q": {"i": e_i, …}}`.
pub fn monomial(m: &Monomial) -> Value {
    let q: Map<String, Value> = m
        .q_exps()
        .iter()
        .map(|&(i, e)| (i.to_string(), json!(e)))
        .collect();
    json!({ "g": m.g_exp(), "q": q })
}

pub fn parse_monomial(v: &Value) -> Option<Monomial> {
    let g = v.get("g")?.as_i64()?;
    let q = v.get("q")?.as_object()?;
    let mut exps = Vec::with_capacity(q.len());
    for (i, e) in q {
        exps.push((i.parse().ok()?, u32::try_from(e.as_u64()?).ok()?));
    }
    Monomial::new(g, exps).ok()
}

pub fn element(e: &Element) -> Value {
    Value::Array(e.terms().map(monomial).collect())
}

pub fn parse_element(v: &Value) -> Option<Element> {
    let mut out = Element::zero();
    for t in v.as_array()? {
        out.toggle(parse_monomial(t)?);
    }
    Some(out)
}

/// `{"family": "rat", "exps": {"g": 1, "rho_1": 1}}`.
pub fn family_monomial(fm: &FamilyMonomial) -> Value {
    let family = fm.family();
    let exps: Map<String, Value> = fm
        .exps()
        .iter()
        .map(|&(i, e)| (family.generator_label(i), json!(e)))
        .collect();
    json!({ "family": family.tag(), "exps": exps })
}

pub fn parse_family_monomial(v: &Value) -> Option<FamilyMonomial> {
    let family = Family::from_tag(v.get("family")?.as_str()?)?;
    let mut exps = Vec::new();
    for (label, e) in v.get("exps")?.as_object()? {
        exps.push((
            family.parse_generator_label(label)?,
            u32::try_from(e.as_u64()?).ok()?,
        ));
    }
    FamilyMonomial::new(family, exps).ok()
}

pub fn s_set(s: &SSet) -> Value {
    json!({ "dim": s.dim(), "elements": s.to_vec() })
}

/// Degree-indexed labels plus one entry per basis element and split with a
/// nonzero coproduct component.
pub fn coalgebra(c: &GradedCoalgebra) -> Value {
    let degrees: Vec<Value> = (0..c.num_degrees()).map(|d| json!(c.labels(d))).collect();
    let mut coproduct = Vec::new();
    for d in 0..c.num_degrees() {
        for (a, from) in c.labels(d).iter().enumerate() {
            for s in 0..=d {
                let pairs: Vec<Value> = c
                    .pairs(d, s, a)
                    .into_iter()
                    .map(|(l, r)| json!([c.labels(s)[l], c.labels(d - s)[r]]))
                    .collect();
                if !pairs.is_empty() {
                    coproduct.push(json!({ "from": from, "split": [s, d - s], "pairs": pairs }));
                }
            }
        }
    }
    json!({ "degrees": degrees, "coproduct": coproduct })
}

/// Each source basis element with the target labels of its image.
pub fn linear_maps(
    maps: &[BitMatrix],
    source: &GradedCoalgebra,
    target: &GradedCoalgebra,
) -> Value {
    let entries: Vec<Value> = maps
        .iter()
        .enumerate()
        .flat_map(|(d, m)| {
            (0..m.ncols()).map(move |a| {
                let to: Vec<&String> = m.column(a).ones().map(|b| &target.labels(d)[b]).collect();
                json!({ "degree": d, "from": source.labels(d)[a], "to": to })
            })
        })
        .collect();
    Value::Array(entries)
}

pub fn matrix(m: &BitMatrix) -> Value {
    let rows: Vec<String> = (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| if m.get(i, j) { '1' } else { '0' })
                .collect()
        })
        .collect();
    json!(rows)
}

pub fn witness(w: &InvariantWitness) -> Value {
    match w {
        InvariantWitness::Dimensions { a, b } => json!({ "kind": "dimensions", "a": a, "b": b }),
        InvariantWitness::TopSSet { a, b } => json!({ "kind": "top_s_set", "a": a, "b": b }),
        InvariantWitness::Rank {
            degree,
            split,
            a,
            b,
        } => {
            json!({ "kind": "rank", "degree": degree, "split": split, "a": a, "b": b })
        }
        InvariantWitness::ActionRank {
            action,
            degree,
            a,
            b,
        } => {
            json!({ "kind": "action_rank", "action": action, "degree": degree, "a": a, "b": b })
        }
        InvariantWitness::ExhaustedSearch {
            search_space,
            visited,
        } => json!({
            "kind": "exhausted_search",
            "search_space": search_space.to_string(),
            "visited": visited,
        }),
    }
}

pub fn verdict(v: &IsoVerdict, source: &GradedCoalgebra, target: &GradedCoalgebra) -> Value {
    match v {
        IsoVerdict::Yes {
            maps,
            search_space,
            visited,
        } => json!({
            "verdict": "yes",
            "search_space": search_space.to_string(),
            "visited": visited,
            "maps": linear_maps(maps, source, target),
        }),
        IsoVerdict::No(w) => json!({ "verdict": "no", "witness": witness(w) }),
        IsoVerdict::Inconclusive {
            search_space,
            budget,
        } => json!({
            "verdict": "inconclusive",
            "search_space": search_space.to_string(),
            "budget": budget,
        }),
    }
}
