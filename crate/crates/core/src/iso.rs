//! Isomorphism invariants of graded coalgebras and exhaustive search for an
//! isomorphism.

use alloc::vec::Vec;

use crate::coalgebra::GradedCoalgebra;
use crate::f2::{general_linear_group, gl_order, BitMatrix};

/// Invariants preserved by graded coalgebra isomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    /// `dim H_d` for each degree.
    pub dims: Vec<usize>,
    /// `ranks[d][s]` is the rank of `Δ_{d;s}: H_d → H_s ⊗ H_{d−s}`.
    pub ranks: Vec<Vec<usize>>,
    /// Splits at which the coproduct of the top class is nonzero; present
    /// only when the top degree is one-dimensional.
    pub top_s_set: Option<Vec<usize>>,
}

/// The first invariant on which two coalgebras differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantWitness {
    Dimensions {
        a: Vec<usize>,
        b: Vec<usize>,
    },
    TopSSet {
        a: Option<Vec<usize>>,
        b: Option<Vec<usize>>,
    },
    Rank {
        degree: usize,
        split: usize,
        a: usize,
        b: usize,
    },
    /// Ranks of a compared linear action differ in some degree.
    ActionRank {
        action: usize,
        degree: usize,
        a: usize,
        b: usize,
    },
    /// Every invariant agreed but the full search found no isomorphism.
    ExhaustedSearch {
        search_space: u128,
        visited: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    No(InvariantWitness),
    /// `maps[d]` sends the degree-`d` basis of the first coalgebra to the
    /// second; `visited` counts the partial assignments examined.
    Yes {
        maps: Vec<BitMatrix>,
        search_space: u128,
        visited: u64,
    },
    Inconclusive {
        search_space: u128,
        budget: u64,
    },
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes { .. })
    }

    pub fn witness_maps(&self) -> Option<&[BitMatrix]> {
        match self {
            IsoVerdict::Yes { maps, .. } => Some(maps),
            _ => None,
        }
    }
}

pub fn coalgebra_invariants(c: &GradedCoalgebra) -> InvariantRecord {
    let dims = c.dims();
    let ranks = (0..c.num_degrees())
        .map(|d| (0..=d).map(|s| c.component(d, s).rank()).collect())
        .collect();
    let top_s_set = c.top_degree().filter(|&d| dims[d] == 1).map(|d| {
        (0..=d)
            .filter(|&s| !c.component(d, s).column(0).is_zero())
            .collect()
    });
    InvariantRecord {
        dims,
        ranks,
        top_s_set,
    }
}

/// Compares dimensions, then the top-class S-set, then the component ranks.
pub fn compare_invariants(a: &InvariantRecord, b: &InvariantRecord) -> Option<InvariantWitness> {
    if a.dims != b.dims {
        return Some(InvariantWitness::Dimensions {
            a: a.dims.clone(),
            b: b.dims.clone(),
        });
    }
    if a.top_s_set != b.top_s_set {
        return Some(InvariantWitness::TopSSet {
            a: a.top_s_set.clone(),
            b: b.top_s_set.clone(),
        });
    }
    for (degree, (ra, rb)) in a.ranks.iter().zip(&b.ranks).enumerate() {
        if let Some(split) = (0..ra.len()).find(|&s| ra[s] != rb[s]) {
            return Some(InvariantWitness::Rank {
                degree,
                split,
                a: ra[split],
                b: rb[split],
            });
        }
    }
    None
}

/// `∏_d |GL(dim H_d, F2)|`, saturating.
pub fn search_space_size(dims: &[usize]) -> u128 {
    dims.iter()
        .fold(1u128, |acc, &n| acc.saturating_mul(gl_order(n)))
}

/// A degree-lowering linear operator given on both coalgebras, e.g. `Sq_1^*`.
///
/// `source[d]` and `target[d]` map degree `d` to degree `d − shift`.
#[derive(Clone, Copy, Debug)]
pub struct LinearAction<'a> {
    pub shift: usize,
    pub source: &'a [BitMatrix],
    pub target: &'a [BitMatrix],
}

impl LinearAction<'_> {
    fn respected(&self, maps: &[BitMatrix], d: usize) -> bool {
        if d < self.shift {
            return true;
        }
        let lhs = maps[d - self.shift].mul(&self.source[d]);
        let rhs = self.target[d].mul(&maps[d]);
        lhs == rhs
    }

    fn rank_mismatch(&self, index: usize) -> Option<InvariantWitness> {
        self.source
            .iter()
            .zip(self.target)
            .enumerate()
            .find_map(|(degree, (s, t))| {
                let (a, b) = (s.rank(), t.rank());
                (a != b).then_some(InvariantWitness::ActionRank {
                    action: index,
                    degree,
                    a,
                    b,
                })
            })
    }
}

/// True iff `maps` intertwines the action: `F_{d−j} ∘ S_d = T_d ∘ F_d`.
pub fn intertwines(action: &LinearAction<'_>, maps: &[BitMatrix]) -> bool {
    (0..maps.len()).all(|d| action.respected(maps, d))
}

/// Decides whether two graded coalgebras are isomorphic.
///
/// Invariants are compared first. If they agree and the product of the
/// per-degree `|GL(n, F2)|` is within `budget`, tuples of invertible
/// matrices are enumerated degree by degree, pruning as soon as the
/// coalgebra-map condition fails in the degree just assigned. The witness
/// returned is the first one in that enumeration order.
pub fn coalgebras_isomorphic(a: &GradedCoalgebra, b: &GradedCoalgebra, budget: u64) -> IsoVerdict {
    coalgebras_isomorphic_with(a, b, budget, &[])
}

/// [`coalgebras_isomorphic`] restricted to isomorphisms that also intertwine
/// every given action.
pub fn coalgebras_isomorphic_with(
    a: &GradedCoalgebra,
    b: &GradedCoalgebra,
    budget: u64,
    actions: &[LinearAction<'_>],
) -> IsoVerdict {
    if let Some(w) = compare_invariants(&coalgebra_invariants(a), &coalgebra_invariants(b)) {
        return IsoVerdict::No(w);
    }
    for (n, action) in actions.iter().enumerate() {
        let n_deg = a.num_degrees();
        if action.source.len() != n_deg || action.target.len() != n_deg {
            panic!("action {n} is not given on every degree");
        }
        if let Some(w) = action.rank_mismatch(n) {
            return IsoVerdict::No(w);
        }
    }
    let dims = a.dims();
    let search_space = search_space_size(&dims);
    if search_space > u128::from(budget) {
        return IsoVerdict::Inconclusive {
            search_space,
            budget,
        };
    }
    let groups: Vec<Vec<BitMatrix>> = dims.iter().map(|&n| general_linear_group(n)).collect();
    let mut maps: Vec<BitMatrix> = Vec::with_capacity(dims.len());
    let mut visited = 0u64;
    if search(a, b, actions, &groups, &mut maps, &mut visited) {
        IsoVerdict::Yes {
            maps,
            search_space,
            visited,
        }
    } else {
        IsoVerdict::No(InvariantWitness::ExhaustedSearch {
            search_space,
            visited,
        })
    }
}

fn search(
    a: &GradedCoalgebra,
    b: &GradedCoalgebra,
    actions: &[LinearAction<'_>],
    groups: &[Vec<BitMatrix>],
    maps: &mut Vec<BitMatrix>,
    visited: &mut u64,
) -> bool {
    let d = maps.len();
    if d == groups.len() {
        return true;
    }
    for f in &groups[d] {
        *visited += 1;
        maps.push(f.clone());
        if a.map_respects_degree(b, maps, d)
            && actions.iter().all(|act| act.respected(maps, d))
            && search(a, b, actions, groups, maps, visited)
        {
            return true;
        }
        maps.pop();
    }
    false
}
