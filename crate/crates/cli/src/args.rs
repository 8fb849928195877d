use clap::{Args, Parser, Subcommand, ValueEnum};
use ratcoh_core::{Family, Limits};

#[derive(Parser, Debug)]
#[command(name = "ratcoh")]
#[command(about = "Verify F2 homology coalgebra computations for Rat_k, Bβ_2k and C_k")]
#[command(version)]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest generator index i allowed in Q^i g
    #[arg(long, global = true, default_value_t = 32)]
    pub max_gen: u32,

    /// Largest k accepted by basis enumeration
    #[arg(long, global = true, default_value_t = 1024)]
    pub basis_k_bound: u32,

    /// Largest isomorphism search space (product of |GL(n, F2)| over degrees)
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub iso_budget: u64,

    /// Largest total basis size for coalgebra extraction
    #[arg(long, global = true, default_value_t = 4096)]
    pub max_basis_size: usize,

    /// Include wall-clock timing in the report (makes output non-reproducible)
    #[arg(long, global = true)]
    pub timing: bool,
}

impl ConfigArgs {
    pub fn limits(&self) -> Limits {
        Limits {
            max_gen: self.max_gen,
            basis_k_bound: self.basis_k_bound,
            iso_budget: self.iso_budget,
            max_basis_size: self.max_basis_size,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    Braid,
    Rat,
    Conf,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Braid => Family::Braid,
            FamilyArg::Rat => Family::Rat,
            FamilyArg::Conf => Family::Conf,
        }
    }
}

/// A `family:k` pair such as `braid:6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceSpec {
    pub family: Family,
    pub k: u32,
}

impl std::str::FromStr for SpaceSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (tag, k) = s
            .split_once(':')
            .ok_or_else(|| format!("expected FAMILY:K, got {s:?}"))?;
        let family = Family::from_tag(tag).ok_or_else(|| format!("unknown family {tag:?}"))?;
        let k = k.parse().map_err(|_| format!("bad k in {s:?}"))?;
        Ok(SpaceSpec { family, k })
    }
}

impl std::fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.family.tag(), self.k)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the weight-graded basis with bigrades and ambient embeddings
    Basis {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: u32,
    },
    /// Coproduct support set of the top class (braid k means Bβ_2k)
    SSet {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: u32,
    },
    /// Compare the top classes of Rat_k and Bβ_2k over a range of k
    TheoremMain {
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Check that multiplication by g is a coalgebra isomorphism Bβ_2k → Bβ_2k+1
    LemmaBraid {
        #[arg(long)]
        max_k: u32,
    },
    /// Decide whether two homology coalgebras are isomorphic
    Iso {
        #[arg(long)]
        a: SpaceSpec,
        #[arg(long)]
        b: SpaceSpec,
        /// Only accept isomorphisms that also commute with Sq_1^*
        #[arg(long)]
        sq1: bool,
    },
    /// Matrices of the dual Steenrod operation Sq_j^* on a family basis
    Steenrod {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        j: u32,
        /// Allow j ≥ 2, computed with the dual Cartan formula
        #[arg(long)]
        extended: bool,
        /// Compare with another space through an isomorphism commuting with Sq_j^*
        #[arg(long)]
        against: Option<SpaceSpec>,
    },
    /// Establish H_*(C_k) ≅ H_*(Bβ_2k) as coalgebras for k up to max-k
    BraidConf {
        #[arg(long)]
        max_k: u32,
    },
    /// Dump the graded coalgebra of one family
    Coalgebra {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: u32,
    },
}
