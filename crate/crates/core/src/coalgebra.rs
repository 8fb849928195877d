//! Finite graded coalgebras with F2 structure constants, and their
//! extraction from a family basis.
//!
//! A coalgebra stores, for every degree `d` and split `s ∈ 0..=d`, the matrix
//! of the component `Δ_{d;s}: H_d → H_s ⊗ H_{d−s}`. Rows are indexed by
//! `i * dim H_{d−s} + j` for the pair `(b_i, b_j)`, columns by the basis of
//! `H_d`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dyer_lashof::{for_each_coproduct_term, sqj_dual};
use crate::element::{Element, Tensor};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec, SpanSolver};
use crate::families::{basis, Embedder, Family, FamilyMonomial};
use crate::limits::Limits;
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCoalgebra {
    labels: Vec<Vec<String>>,
    components: Vec<Vec<BitMatrix>>,
}

impl GradedCoalgebra {
    /// Validates shapes and coassociativity.
    pub fn new(labels: Vec<Vec<String>>, components: Vec<Vec<BitMatrix>>) -> Result<Self> {
        if labels.len() != components.len() {
            return Err(Error::Shape {
                context: format!(
                    "{} degrees of labels but {} of components",
                    labels.len(),
                    components.len()
                ),
            });
        }
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        for (d, parts) in components.iter().enumerate() {
            if parts.len() != d + 1 {
                return Err(Error::Shape {
                    context: format!("degree {d} has {} splits", parts.len()),
                });
            }
            for (s, m) in parts.iter().enumerate() {
                if m.nrows() != dims[s] * dims[d - s] || m.ncols() != dims[d] {
                    return Err(Error::Shape {
                        context: format!("component ({d}; {s}, {}) has the wrong shape", d - s),
                    });
                }
            }
        }
        let c = GradedCoalgebra { labels, components };
        c.check_coassociative()?;
        Ok(c)
    }

    /// Number of degrees, i.e. top degree + 1.
    pub fn num_degrees(&self) -> usize {
        self.labels.len()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.labels.len().checked_sub(1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.labels.get(d).map_or(0, Vec::len)
    }

    pub fn labels(&self, d: usize) -> &[String] {
        &self.labels[d]
    }

    pub fn component(&self, d: usize, s: usize) -> &BitMatrix {
        &self.components[d][s]
    }

    /// Nonzero pairs `(i, j)` of `Δ_{d;s}(b_a)`.
    pub fn pairs(&self, d: usize, s: usize, a: usize) -> Vec<(usize, usize)> {
        let nt = self.dim(d - s);
        let m = &self.components[d][s];
        (0..m.nrows())
            .filter(|&row| m.get(row, a))
            .map(|row| (row / nt, row % nt))
            .collect()
    }

    /// `(Δ ⊗ id) Δ = (id ⊗ Δ) Δ` on every degree.
    pub fn check_coassociative(&self) -> Result<()> {
        for d in 0..self.num_degrees() {
            for s in 0..=d {
                for t in 0..=(d - s) {
                    let u = d - s - t;
                    let left = self.components[s + t][s]
                        .kron(&BitMatrix::identity(self.dim(u)))
                        .mul(&self.components[d][s + t]);
                    let right = BitMatrix::identity(self.dim(s))
                        .kron(&self.components[t + u][t])
                        .mul(&self.components[d][s]);
                    if left != right {
                        return Err(Error::NotCoassociative { degree: d });
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff the per-degree matrices `maps[d]` (columns are images of the
    /// basis of `self` in the basis of `target`) commute with the coproducts.
    pub fn is_coalgebra_map(&self, target: &GradedCoalgebra, maps: &[BitMatrix]) -> bool {
        if maps.len() != self.num_degrees() || target.num_degrees() != self.num_degrees() {
            return false;
        }
        for (d, f) in maps.iter().enumerate() {
            if f.ncols() != self.dim(d) || f.nrows() != target.dim(d) {
                return false;
            }
        }
        (0..self.num_degrees()).all(|d| self.map_respects_degree(target, maps, d))
    }

    /// The coalgebra-map condition restricted to coproducts of degree `d`;
    /// only `maps[0..=d]` are read.
    pub(crate) fn map_respects_degree(
        &self,
        target: &GradedCoalgebra,
        maps: &[BitMatrix],
        d: usize,
    ) -> bool {
        (0..=d).all(|s| {
            let lhs = maps[s].kron(&maps[d - s]).mul(&self.components[d][s]);
            let rhs = target.components[d][s].mul(&maps[d]);
            lhs == rhs
        })
    }
}

/// Coordinates of ambient elements of one degree in an embedded basis.
#[derive(Clone, Debug)]
struct DegreeSolver {
    index: BTreeMap<Monomial, usize>,
    solver: SpanSolver,
    n: usize,
}

impl DegreeSolver {
    fn new(degree: u64, embedded: &[Element]) -> Result<Self> {
        let mut index = BTreeMap::new();
        for e in embedded {
            for m in e.terms() {
                let next = index.len();
                index.entry(m.clone()).or_insert(next);
            }
        }
        let n = embedded.len();
        let mut solver = SpanSolver::new(index.len(), n);
        for (a, e) in embedded.iter().enumerate() {
            let v = Self::vector(&index, e).expect("support covers the basis");
            solver
                .insert(v, BitVec::unit(n, a))
                .map_err(|_| Error::DependentBasis { degree })?;
        }
        Ok(DegreeSolver { index, solver, n })
    }

    fn vector(index: &BTreeMap<Monomial, usize>, e: &Element) -> Option<BitVec> {
        let mut v = BitVec::zeros(index.len());
        for m in e.terms() {
            v.set(*index.get(m)?, true);
        }
        Some(v)
    }

    fn coordinates(&self, e: &Element) -> Option<BitVec> {
        if e.is_zero() {
            return Some(BitVec::zeros(self.n));
        }
        self.solver.solve(Self::vector(&self.index, e)?)
    }
}

/// Basis of one space of a family, grouped by dimension, together with the
/// ambient images of the basis elements.
#[derive(Clone, Debug)]
pub struct FamilyModel {
    family: Family,
    k: u32,
    degrees: Vec<Vec<FamilyMonomial>>,
    embedded: Vec<Vec<Element>>,
    solvers: Vec<DegreeSolver>,
}

impl FamilyModel {
    pub fn new(family: Family, k: u32, limits: &Limits) -> Result<Self> {
        let monomials = basis(family, k, limits)?;
        if monomials.len() > limits.max_basis_size {
            return Err(Error::BasisTooLarge {
                size: monomials.len(),
                bound: limits.max_basis_size,
            });
        }
        Self::from_basis(family, k, monomials, limits)
    }

    /// Uses the given monomials, in the given order within each degree.
    pub fn from_basis(
        family: Family,
        k: u32,
        monomials: Vec<FamilyMonomial>,
        limits: &Limits,
    ) -> Result<Self> {
        let embedder = Embedder::for_monomials(family, &monomials, limits.max_gen)?;
        let top = monomials.iter().map(FamilyMonomial::dim).max().unwrap_or(0) as usize;
        let mut degrees: Vec<Vec<FamilyMonomial>> = (0..=top).map(|_| Vec::new()).collect();
        for m in monomials {
            degrees[m.dim() as usize].push(m);
        }
        let embedded = degrees
            .iter()
            .map(|ms| {
                ms.iter()
                    .map(|m| embedder.embed(m))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let solvers = embedded
            .iter()
            .enumerate()
            .map(|(d, es)| DegreeSolver::new(d as u64, es))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyModel {
            family,
            k,
            degrees,
            embedded,
            solvers,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degrees(&self) -> &[Vec<FamilyMonomial>] {
        &self.degrees
    }

    pub fn embedded(&self, d: usize) -> &[Element] {
        &self.embedded[d]
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Position of a basis monomial as `(degree, index)`.
    pub fn position(&self, m: &FamilyMonomial) -> Option<(usize, usize)> {
        let d = m.dim() as usize;
        let i = self.degrees.get(d)?.iter().position(|b| b == m)?;
        Some((d, i))
    }

    /// Coordinates of an ambient element of dimension `d` in the basis.
    pub fn coordinates(&self, d: usize, e: &Element) -> Result<BitVec> {
        let solver = self.solvers.get(d).ok_or_else(|| Error::NotInSpan {
            context: format!("{} k={}: no basis in degree {d}", self.family, self.k),
        })?;
        solver.coordinates(e).ok_or_else(|| Error::NotInSpan {
            context: format!("{} k={}: {e} in degree {d}", self.family, self.k),
        })
    }

    /// Coordinates of a tensor in `H_s ⊗ H_t`, indexed `i * dim H_t + j`.
    ///
    /// Writes the tensor as `Σ_r L_r ⊗ r` over right monomials, solves each
    /// `L_r` in degree `s`, regroups as `Σ_i b_i ⊗ R_i` and solves each `R_i`
    /// in degree `t`.
    pub fn tensor_coordinates(&self, s: usize, t: usize, tensor: &Tensor) -> Result<BitVec> {
        let (ns, nt) = (self.dim(s), self.dim(t));
        let mut right_parts: Vec<Element> = (0..ns).map(|_| Element::zero()).collect();
        for (r, left) in tensor.by_right() {
            let alpha = self.coordinates(s, &left)?;
            for i in alpha.ones() {
                right_parts[i].toggle(r.clone());
            }
        }
        let mut out = BitVec::zeros(ns * nt);
        for (i, part) in right_parts.iter().enumerate() {
            for j in self.coordinates(t, part)?.ones() {
                out.set(i * nt + j, true);
            }
        }
        Ok(out)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.degrees.get(d).map_or(0, Vec::len)
    }

    /// Structure constants of the coproduct in this basis.
    pub fn coalgebra(&self) -> Result<GradedCoalgebra> {
        let mut components = Vec::with_capacity(self.degrees.len());
        for d in 0..self.degrees.len() {
            let mut columns: Vec<Vec<BitVec>> = (0..=d).map(|_| Vec::new()).collect();
            for e in &self.embedded[d] {
                let mut buckets: Vec<Tensor> = (0..=d).map(|_| Tensor::zero()).collect();
                for m in e.terms() {
                    for_each_coproduct_term(m, |l, r| {
                        let s = l.dim() as usize;
                        buckets[s].toggle(l, r);
                    });
                }
                for (s, part) in buckets.iter().enumerate() {
                    columns[s].push(self.tensor_coordinates(s, d - s, part)?);
                }
            }
            components.push(
                columns
                    .iter()
                    .enumerate()
                    .map(|(s, cols)| BitMatrix::from_columns(self.dim(s) * self.dim(d - s), cols))
                    .collect(),
            );
        }
        GradedCoalgebra::new(self.labels(), components)
    }

    pub fn labels(&self) -> Vec<Vec<String>> {
        self.degrees
            .iter()
            .map(|ms| ms.iter().map(FamilyMonomial::label).collect())
            .collect()
    }

    /// Matrices of `Sq_j^*: H_d → H_{d−j}` in this basis, indexed by `d`
    /// (a `0 × dim H_d` matrix when `d < j`).
    pub fn steenrod_matrices(&self, j: u32) -> Result<Vec<BitMatrix>> {
        let j = j as usize;
        (0..self.degrees.len())
            .map(|d| {
                if d < j {
                    return Ok(BitMatrix::zeros(0, self.dim(d)));
                }
                let cols = self.embedded[d]
                    .iter()
                    .map(|e| self.coordinates(d - j, &sqj_dual(e, j as u32)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(BitMatrix::from_columns(self.dim(d - j), &cols))
            })
            .collect()
    }
}

/// The coalgebra `H_*` of the `k`-th space of `family` in its monomial basis.
pub fn extract_coalgebra(family: Family, k: u32, limits: &Limits) -> Result<GradedCoalgebra> {
    FamilyModel::new(family, k, limits)?.coalgebra()
}

/// Per-degree matrices of `Sq_1^*` in the monomial basis.
pub fn steenrod_matrix(family: Family, k: u32, limits: &Limits) -> Result<Vec<BitMatrix>> {
    FamilyModel::new(family, k, limits)?.steenrod_matrices(1)
}
