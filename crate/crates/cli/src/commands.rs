//! One function per subcommand. Each returns an [`Outcome`] holding the JSON
//! results, a text rendering and whether the verification passed.

use std::fmt::Write as _;

use ratcoh_core::iso::{intertwines, search_space_size};
use ratcoh_core::verify::{check_lemma_braid, BraidConfRoute, Branch, LemmaBraidReport};
use ratcoh_core::{
    basis, check_braid_conf, coalgebras_isomorphic_with, embed, poincare_vector, s_set,
    theorem_main, top_class, Error, Family, FamilyModel, GradedCoalgebra, IsoVerdict, Limits,
    LinearAction, TheoremReport,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::SpaceSpec;
use crate::json as enc;

pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    pub text: String,
    pub passed: bool,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

type Result<T> = std::result::Result<T, CliError>;

fn space_name(family: Family, k: u32) -> String {
    match family {
        Family::Braid => format!("Bβ_{k}"),
        Family::Rat => format!("Rat_{k}"),
        Family::Conf => format!("C_{k}"),
    }
}

fn verdict_word(v: &IsoVerdict) -> &'static str {
    match v {
        IsoVerdict::Yes { .. } => "yes",
        IsoVerdict::No(_) => "no",
        IsoVerdict::Inconclusive { .. } => "inconclusive",
    }
}

fn fmt_set(s: &[u64]) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn basis_cmd(family: Family, k: u32, limits: &Limits) -> Result<Outcome> {
    let monomials = basis(family, k, limits)?;
    let poincare = poincare_vector(family, k, limits)?;
    let mut rows = Vec::with_capacity(monomials.len());
    let mut text = format!(
        "basis of H_*({}), {} elements\n",
        space_name(family, k),
        monomials.len()
    );
    for fm in &monomials {
        let e = embed(fm, limits)?;
        let _ = writeln!(
            text,
            "  {:<24} weight {:>4}  dim {:>4}  ↦ {}",
            fm.label(),
            fm.weight(),
            fm.dim(),
            e
        );
        rows.push(json!({
            "monomial": enc::family_monomial(fm),
            "label": fm.label(),
            "weight": fm.weight(),
            "dim": fm.dim(),
            "embedding": enc::element(&e),
        }));
    }
    let _ = writeln!(text, "poincare {poincare:?}");
    Ok(Outcome {
        inputs: json!({ "family": family.tag(), "k": k }),
        results: json!({ "basis": rows, "poincare": poincare }),
        text,
        passed: true,
    })
}

pub fn s_set_cmd(family: Family, k: u32, limits: &Limits) -> Result<Outcome> {
    if family == Family::Conf {
        return Err(CliError::Usage("s-set needs --family braid or rat".into()));
    }
    limits.check_k(k)?;
    let top = top_class(family, k)?;
    let s = s_set(&top, limits)?;
    let space = space_name(family, top.weight() as u32);
    let text = format!(
        "top class of H_*({space}): {} (dim {})\nS = {}\n",
        top.label(),
        top.dim(),
        fmt_set(&s.to_vec())
    );
    Ok(Outcome {
        inputs: json!({ "family": family.tag(), "k": k }),
        results: json!({
            "space": space,
            "top_class": enc::family_monomial(&top),
            "label": top.label(),
            "s_set": enc::s_set(&s),
        }),
        text,
        passed: true,
    })
}

fn models(a: SpaceSpec, b: SpaceSpec, limits: &Limits) -> Result<(FamilyModel, FamilyModel)> {
    Ok((
        FamilyModel::new(a.family, a.k, limits)?,
        FamilyModel::new(b.family, b.k, limits)?,
    ))
}

fn branch_json(b: &Branch) -> Value {
    match *b {
        Branch::NotPowerOfTwo {
            r,
            witness,
            witness_in_x,
            witness_in_y,
        } => json!({
            "kind": "not_power_of_two",
            "r": r,
            "witness": witness,
            "witness_in_x": witness_in_x,
            "witness_in_y": witness_in_y,
        }),
        Branch::PowerOfTwo { r, checks } => json!({
            "kind": "power_of_two",
            "r": r,
            "checks": checks.map(|c| json!({
                "two_in_x": c.two_in_x,
                "two_in_y": c.two_in_y,
                "five_in_x": c.five_in_x,
                "five_in_y": c.five_in_y,
            })),
        }),
    }
}

fn theorem_entry(report: &TheoremReport, limits: &Limits) -> Result<(Value, String)> {
    let k = report.k;
    let holds = report.matches_prediction();
    let isomorphism = match &report.isomorphism {
        Some(v) => {
            let braid = FamilyModel::new(Family::Braid, 2 * k, limits)?.coalgebra()?;
            let rat = FamilyModel::new(Family::Rat, k, limits)?.coalgebra()?;
            enc::verdict(v, &braid, &rat)
        }
        None => Value::Null,
    };
    let value = json!({
        "k": k,
        "j_set": report.j_set,
        "top_dim": report.top_dim,
        "x": report.x.label(),
        "y": report.y.label(),
        "s_x": enc::s_set(&report.s_x),
        "s_y": enc::s_set(&report.s_y),
        "distinct": report.distinct,
        "s_y_matches_closed_form": report.s_y_matches_closed_form,
        "branch": branch_json(&report.branch),
        "isomorphism": isomorphism,
        "holds": holds,
    });
    let mut line = format!(
        "k = {k:>4}  dim {:>5}  {}  ",
        report.top_dim,
        if report.distinct {
            "S(x) ≠ S(y)"
        } else {
            "S(x) = S(y)"
        }
    );
    match report.branch {
        Branch::NotPowerOfTwo {
            r,
            witness,
            witness_in_x,
            witness_in_y,
        } => {
            let _ = write!(
                line,
                "r = {r}, {witness} ∈ S(x): {witness_in_x}, ∈ S(y): {witness_in_y}"
            );
        }
        Branch::PowerOfTwo { r, checks: Some(c) } => {
            let _ = write!(
                line,
                "k+1 = 2^{}, 2 ∈ S(x): {}, 5 ∈ S(x): {}, 2 ∈ S(y): {}, 5 ∈ S(y): {}",
                r + 1,
                c.two_in_x,
                c.five_in_x,
                c.two_in_y,
                c.five_in_y
            );
        }
        Branch::PowerOfTwo { r, checks: None } => {
            let _ = write!(line, "k+1 = 2^{}", r + 1);
        }
    }
    if let Some(v) = &report.isomorphism {
        let _ = write!(line, ", isomorphic: {}", verdict_word(v));
    }
    let _ = write!(line, "  [{}]", if holds { "ok" } else { "FAIL" });
    Ok((value, line))
}

pub fn theorem_main_cmd(from: u32, to: u32, limits: &Limits) -> Result<Outcome> {
    if from == 0 || from > to {
        return Err(CliError::Usage(format!(
            "need 1 ≤ from ≤ to, got {from}..{to}"
        )));
    }
    let entries: Vec<(Value, String, bool)> = (from..=to)
        .into_par_iter()
        .map(|k| {
            let report = theorem_main(k, limits)?;
            let (value, line) = theorem_entry(&report, limits)?;
            Ok((value, line, report.matches_prediction()))
        })
        .collect::<Result<_>>()?;
    let passed = entries.iter().all(|e| e.2);
    let failures: Vec<u32> = (from..=to)
        .zip(&entries)
        .filter(|(_, e)| !e.2)
        .map(|(k, _)| k)
        .collect();
    let mut text = String::new();
    for (_, line, _) in &entries {
        text.push_str(line);
        text.push('\n');
    }
    let _ = writeln!(
        text,
        "{} of {} values of k match the predicted outcome",
        entries.len() - failures.len(),
        entries.len()
    );
    Ok(Outcome {
        inputs: json!({ "from": from, "to": to }),
        results: json!({
            "per_k": entries.into_iter().map(|e| e.0).collect::<Vec<_>>(),
            "failures": failures,
        }),
        text,
        passed,
    })
}

fn lemma_json(r: &LemmaBraidReport) -> Value {
    json!({
        "k": r.k,
        "even_size": r.even_size,
        "odd_size": r.odd_size,
        "bijective": r.bijective,
        "coproducts_match": r.coproducts_match,
        "coalgebra_map": r.coalgebra_map,
        "failures": r.failures,
        "verified": r.verified(),
    })
}

pub fn lemma_braid_cmd(max_k: u32, limits: &Limits) -> Result<Outcome> {
    if max_k == 0 {
        return Err(CliError::Usage("max-k must be positive".into()));
    }
    let reports: Vec<LemmaBraidReport> = (1..=max_k)
        .into_par_iter()
        .map(|k| Ok(check_lemma_braid(k, limits)?))
        .collect::<Result<_>>()?;
    let passed = reports.iter().all(LemmaBraidReport::verified);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(
            text,
            "k = {:>3}  ·g: H_*(Bβ_{}) → H_*(Bβ_{})  {} basis elements  {}",
            r.k,
            2 * r.k,
            2 * r.k + 1,
            r.even_size,
            if r.verified() {
                "coalgebra isomorphism"
            } else {
                "FAIL"
            }
        );
        for f in &r.failures {
            let _ = writeln!(text, "    {f}");
        }
    }
    Ok(Outcome {
        inputs: json!({ "max_k": max_k }),
        results: json!({ "per_k": reports.iter().map(lemma_json).collect::<Vec<_>>() }),
        text,
        passed,
    })
}

fn iso_core(
    a: &GradedCoalgebra,
    b: &GradedCoalgebra,
    actions: &[LinearAction<'_>],
    limits: &Limits,
) -> IsoVerdict {
    if a.dims() == b.dims() {
        eprintln!(
            "isomorphism search space: {} candidate tuples (budget {})",
            search_space_size(&a.dims()),
            limits.iso_budget
        );
    }
    coalgebras_isomorphic_with(a, b, limits.iso_budget, actions)
}

fn verdict_text(v: &IsoVerdict, a: &GradedCoalgebra, b: &GradedCoalgebra) -> String {
    let mut text = String::new();
    match v {
        IsoVerdict::Yes {
            maps,
            search_space,
            visited,
        } => {
            let _ = writeln!(
                text,
                "isomorphic: yes (search space {search_space}, visited {visited})"
            );
            for (d, m) in maps.iter().enumerate() {
                for col in 0..m.ncols() {
                    let to: Vec<&str> = m
                        .column(col)
                        .ones()
                        .map(|r| b.labels(d)[r].as_str())
                        .collect();
                    let _ = writeln!(text, "  [{d}] {} ↦ {}", a.labels(d)[col], to.join(" + "));
                }
            }
        }
        IsoVerdict::No(w) => {
            let _ = writeln!(text, "isomorphic: no, witness {}", enc::witness(w));
        }
        IsoVerdict::Inconclusive {
            search_space,
            budget,
        } => {
            let _ = writeln!(
                text,
                "isomorphic: inconclusive (search space {search_space} exceeds budget {budget})"
            );
        }
    }
    text
}

/// Exit status is a pass for any definite answer; only an inconclusive search
/// fails.
pub fn iso_cmd(a: SpaceSpec, b: SpaceSpec, sq1: bool, limits: &Limits) -> Result<Outcome> {
    let (ma, mb) = models(a, b, limits)?;
    let (ca, cb) = (ma.coalgebra()?, mb.coalgebra()?);
    let verdict = if sq1 {
        let (sa, sb) = (ma.steenrod_matrices(1)?, mb.steenrod_matrices(1)?);
        if sa.len() != sb.len() {
            iso_core(&ca, &cb, &[], limits)
        } else {
            let action = LinearAction {
                shift: 1,
                source: &sa,
                target: &sb,
            };
            iso_core(&ca, &cb, &[action], limits)
        }
    } else {
        iso_core(&ca, &cb, &[], limits)
    };
    let mut text = format!(
        "H_*({}) vs H_*({}){}\n",
        space_name(a.family, a.k),
        space_name(b.family, b.k),
        if sq1 { ", commuting with Sq_1^*" } else { "" }
    );
    text.push_str(&verdict_text(&verdict, &ca, &cb));
    Ok(Outcome {
        inputs: json!({ "a": a.to_string(), "b": b.to_string(), "sq1": sq1 }),
        results: enc::verdict(&verdict, &ca, &cb),
        text,
        passed: !matches!(verdict, IsoVerdict::Inconclusive { .. }),
    })
}

fn steenrod_entries(
    model: &FamilyModel,
    matrices: &[ratcoh_core::f2::BitMatrix],
    j: u32,
) -> Vec<(usize, String, Vec<String>)> {
    let labels = model.labels();
    let mut out = Vec::new();
    for (d, m) in matrices.iter().enumerate() {
        if d < j as usize {
            continue;
        }
        for (a, from) in labels[d].iter().enumerate() {
            let to = m
                .column(a)
                .ones()
                .map(|r| labels[d - j as usize][r].clone())
                .collect();
            out.push((d, from.clone(), to));
        }
    }
    out
}

pub fn steenrod_cmd(
    family: Family,
    k: u32,
    j: u32,
    extended: bool,
    against: Option<SpaceSpec>,
    limits: &Limits,
) -> Result<Outcome> {
    if j == 0 {
        return Err(CliError::Usage("j must be at least 1".into()));
    }
    if j >= 2 && !extended {
        return Err(CliError::Usage(
            "Sq_j^* for j ≥ 2 requires --extended".into(),
        ));
    }
    let model = FamilyModel::new(family, k, limits)?;
    let matrices = model.steenrod_matrices(j)?;
    let mut text = format!("Sq_{j}^* on H_*({})\n", space_name(family, k));
    let mut images = Vec::new();
    for (d, from, to) in steenrod_entries(&model, &matrices, j) {
        let shown = if to.is_empty() {
            "0".to_string()
        } else {
            to.join(" + ")
        };
        let _ = writeln!(text, "  [{d}] {from} ↦ {shown}");
        images.push(json!({ "degree": d, "from": from, "to": to }));
    }
    let matrices_json: Vec<Value> = matrices.iter().map(enc::matrix).collect();
    let mut results = json!({ "images": images, "matrices": matrices_json });
    let mut passed = true;

    if let Some(other) = against {
        let other_model = FamilyModel::new(other.family, other.k, limits)?;
        let other_matrices = other_model.steenrod_matrices(j)?;
        let (ca, cb) = (model.coalgebra()?, other_model.coalgebra()?);
        let verdict = if matrices.len() == other_matrices.len() {
            let action = LinearAction {
                shift: j as usize,
                source: &matrices,
                target: &other_matrices,
            };
            iso_core(&ca, &cb, &[action], limits)
        } else {
            iso_core(&ca, &cb, &[], limits)
        };
        let checked = verdict.witness_maps().map(|maps| {
            let action = LinearAction {
                shift: j as usize,
                source: &matrices,
                target: &other_matrices,
            };
            ca.is_coalgebra_map(&cb, maps) && intertwines(&action, maps)
        });
        passed = checked == Some(true);
        let _ = writeln!(
            text,
            "against H_*({}): {}",
            space_name(other.family, other.k),
            match checked {
                Some(true) => "a coalgebra isomorphism intertwines the two actions",
                Some(false) => "FAIL: witness does not re-check",
                None => "no isomorphism intertwining the actions",
            }
        );
        text.push_str(&verdict_text(&verdict, &ca, &cb));
        results["against"] = json!({
            "space": other.to_string(),
            "verdict": enc::verdict(&verdict, &ca, &cb),
            "intertwines": checked == Some(true),
            "matrices": other_matrices.iter().map(enc::matrix).collect::<Vec<_>>(),
        });
    }
    Ok(Outcome {
        inputs: json!({
            "family": family.tag(),
            "k": k,
            "j": j,
            "extended": extended,
            "against": against.map(|s| s.to_string()),
        }),
        results,
        text,
        passed,
    })
}

pub fn braid_conf_cmd(max_k: u32, limits: &Limits) -> Result<Outcome> {
    if max_k == 0 {
        return Err(CliError::Usage("max-k must be positive".into()));
    }
    let reports: Vec<_> = (1..=max_k)
        .into_par_iter()
        .map(|k| Ok(check_braid_conf(k, limits)?))
        .collect::<Result<_>>()?;
    let passed = reports.iter().all(|r| r.verified());
    let mut text = String::new();
    let mut per_k = Vec::new();
    for r in &reports {
        let route = match r.route {
            BraidConfRoute::Candidate => "candidate",
            BraidConfRoute::Search => "search",
            BraidConfRoute::Failed => "failed",
        };
        let _ = writeln!(
            text,
            "k = {:>2}  H_*(C_{}) ≅ H_*(Bβ_{})  route: {route}  dims {:?}",
            r.k,
            r.k,
            2 * r.k,
            r.conf.dims()
        );
        per_k.push(json!({
            "k": r.k,
            "route": route,
            "candidate_is_iso": r.candidate_is_iso,
            "search": r.search.as_ref().map(|v| enc::verdict(v, &r.conf, &r.braid)),
            "maps": r.maps.as_ref().map(|m| enc::linear_maps(m, &r.conf, &r.braid)),
            "verified": r.verified(),
        }));
    }
    Ok(Outcome {
        inputs: json!({ "max_k": max_k }),
        results: json!({ "per_k": per_k }),
        text,
        passed,
    })
}

pub fn coalgebra_cmd(family: Family, k: u32, limits: &Limits) -> Result<Outcome> {
    let c = FamilyModel::new(family, k, limits)?.coalgebra()?;
    let mut text = format!("H_*({}), dims {:?}\n", space_name(family, k), c.dims());
    for d in 0..c.num_degrees() {
        for (a, from) in c.labels(d).iter().enumerate() {
            let mut terms = Vec::new();
            for s in 0..=d {
                for (l, r) in c.pairs(d, s, a) {
                    terms.push(format!("{} ⊗ {}", c.labels(s)[l], c.labels(d - s)[r]));
                }
            }
            let _ = writeln!(text, "  ψ({from}) = {}", terms.join(" + "));
        }
    }
    Ok(Outcome {
        inputs: json!({ "family": family.tag(), "k": k }),
        results: enc::coalgebra(&c),
        text,
        passed: true,
    })
}
