use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "subbounds", version, about = "Exact bounds for s-distance sets of subspaces")]
pub struct Cli {
    /// TOML config file; defaults to $SUBBOUNDS_CONFIG when set.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub tol: TolFlags,

    /// Omit the run manifest from JSON output.
    #[arg(long, global = true)]
    pub no_manifest: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct TolFlags {
    #[arg(long, global = true)]
    pub tol_orth: Option<f64>,
    #[arg(long, global = true)]
    pub tol_cluster: Option<f64>,
    #[arg(long, global = true)]
    pub tol_diag: Option<f64>,
    #[arg(long, global = true)]
    pub rank_factor: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one bound.
    Bound(BoundArgs),
    /// Evaluate a bound over a parameter grid and emit CSV.
    Table(TableArgs),
    /// Hilbert functions of the Grassmannian.
    #[command(subcommand)]
    Hilbert(HilbertCommand),
    /// Leading coefficients.
    #[command(subcommand)]
    Coeff(CoeffCommand),
    /// Jack polynomials.
    #[command(subcommand)]
    Jack(JackCommand),
    /// Check a frame file against a metric.
    Verify(VerifyArgs),
    /// Exact rank of the explicit ideal families.
    Lemma51(Lemma51Args),
    /// Write a fixture configuration as a frame file.
    Fixture(FixtureArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoundName {
    Fs,
    Lines,
    Equiangular,
    ChordalLeading,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    pub which: BoundName,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// Include the prior bound and the improvement over it (implies --json).
    #[arg(long)]
    pub baseline: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub which: BoundName,
    /// Inclusive range `a..b`, a list `a,b,c`, or a single value.
    #[arg(long, default_value = "1")]
    pub k: String,
    #[arg(long)]
    pub n: String,
    #[arg(long, default_value = "1")]
    pub s: String,
    /// Output CSV; a `<file>.manifest.json` sidecar is written next to it.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Worker threads (output order does not depend on this).
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum HilbertCommand {
    /// `H_{Gr(k,n)}(m)` in the Plücker embedding.
    Plucker {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
    },
    /// `Σ_{i=1}^{s} H(2i)`.
    EvenSum {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
    },
    /// Numerator and denominator of the Hilbert series.
    Series {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Sampled dimension of degree-`≤ d` polynomials on the projection embedding.
    ProjectionRank {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Closed,
    Series,
}

#[derive(Debug, Subcommand)]
pub enum CoeffCommand {
    /// `d(k, n)`.
    Dkn {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// `d(k, n)` with the dimension and leading coefficient of the Hilbert polynomial.
    Leading {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Coefficient of `n^{2ks}` in the Fubini–Study bound.
    FsLeading {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        s: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum NormArg {
    P,
    J,
}

#[derive(Debug, Subcommand)]
pub enum JackCommand {
    /// Coefficients of `∏_{i<j≤k} (x_i + x_j)` in zonal polynomials.
    Expand {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = NormArg::P)]
        norm: NormArg,
    },
    /// A Jack polynomial in the monomial basis.
    Poly {
        /// Parts, comma separated.
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = NormArg::P)]
        norm: NormArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckArg {
    Spectrum,
    Matrix,
    Rank,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// `chordal`, `fs`, or `angle:i`.
    #[arg(long, default_value = "fs")]
    pub metric: String,
    #[arg(long, value_enum, default_value_t = CheckArg::Rank)]
    pub check: CheckArg,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Lemma51Args {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Also evaluate the family at this many rational projections.
    #[arg(long, default_value_t = 0)]
    pub membership_samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FixtureName {
    Axes,
    Simplex,
    Icosahedron,
    Random,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    pub name: FixtureName,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub count: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
