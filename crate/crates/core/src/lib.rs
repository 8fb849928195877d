//! Exact F2 arithmetic for the mod-2 homology of `Ω²S²` and the three
//! families of spaces that map into it: braid-group classifying spaces
//! `Bβ_k`, labelled configuration spaces `C_k` and spaces of based rational
//! maps `Rat_k`.
//!
//! The crate is `no_std` (it needs `alloc`). Layers, bottom up:
//!
//! * [`monomial`] and [`element`]: the Laurent-polynomial algebra
//!   `F2[g, g⁻¹] ⊗ F2[Qg, Q²g, …]` with its (weight, dimension) bigrading.
//! * [`dyer_lashof`]: the Araki–Kudo operation `Q`, the coproduct `ψ` and
//!   the dual Steenrod operations `Sq_j^*`.
//! * [`families`]: generator families, their embeddings and weight-graded
//!   bases.
//! * [`f2`]: bit-packed linear algebra over F2.
//! * [`coalgebra`], [`iso`] and [`verify`]: finite graded coalgebras,
//!   isomorphism invariants and search, and the top-class checks.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coalgebra;
pub mod dyer_lashof;
pub mod element;
mod error;
pub mod f2;
pub mod families;
pub mod iso;
pub mod limits;
pub mod monomial;
pub mod verify;

pub use coalgebra::{extract_coalgebra, steenrod_matrix, FamilyModel, GradedCoalgebra};
pub use dyer_lashof::{araki_kudo_q, coproduct, sq1_dual, sqj_dual};
pub use element::{Element, Tensor};
pub use error::{Error, Result};
pub use families::{basis, embed, poincare_vector, top_class, Family, FamilyMonomial};
pub use iso::{
    coalgebra_invariants, coalgebras_isomorphic, coalgebras_isomorphic_with, InvariantRecord,
    InvariantWitness, IsoVerdict, LinearAction,
};
pub use limits::Limits;
pub use monomial::{Bigrade, Monomial};
pub use verify::{check_braid_conf, check_lemma_braid, s_set, theorem_main, SSet, TheoremReport};
