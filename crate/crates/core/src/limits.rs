use alloc::format;

use crate::error::{Error, Result};

/// Largest generator index for which `2^i` still fits comfortably in an `i64`
/// weight computation.
pub const HARD_MAX_GEN: u32 = 60;

/// Resource bounds shared by every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed `i` in `Q^i g`.
    pub max_gen: u32,
    /// Largest `k` accepted by basis enumeration.
    pub basis_k_bound: u32,
    /// Largest number of candidate maps the isomorphism search may visit.
    pub iso_budget: u64,
    /// Largest total basis size for coalgebra extraction.
    pub max_basis_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_gen: 32,
            basis_k_bound: 1024,
            iso_budget: 1_000_000,
            max_basis_size: 4096,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        if self.max_gen == 0 || self.max_gen > HARD_MAX_GEN {
            return Err(Error::InvalidLimits {
                context: format!("max_gen must be in 1..={HARD_MAX_GEN}"),
            });
        }
        if self.basis_k_bound == 0 || self.iso_budget == 0 || self.max_basis_size == 0 {
            return Err(Error::InvalidLimits {
                context: "bounds must be positive".into(),
            });
        }
        Ok(())
    }

    pub fn check_k(&self, k: u32) -> Result<()> {
        if k == 0 || k > self.basis_k_bound {
            return Err(Error::KOutOfRange {
                k,
                bound: self.basis_k_bound,
            });
        }
        Ok(())
    }
}
