use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "dqw",
    version,
    about = "Exact star products, Hausdorff series and graph weights"
)]
pub struct Cli {
    /// Output format; `dot` is only understood by `graphs enumerate`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for enumeration and verification batches.
    #[arg(long, global = true, env = "DQW_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bernoulli numbers B_0..B_K, or the polynomials B_k(t).
    Bernoulli {
        #[arg(long)]
        max: usize,
        /// Use B̂_k = (-1)^k B_k.
        #[arg(long)]
        modified: bool,
        #[arg(long)]
        poly: bool,
    },
    /// The Hausdorff series log(e^X e^Y) in the Lyndon basis.
    Hausdorff {
        #[arg(long)]
        degree: usize,
        /// Only the coefficients of ad_X^k(Y).
        #[arg(long)]
        linear_in_y: bool,
    },
    /// Structure-constant files.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// f ⋆ g to a given order in ε.
    Star {
        #[arg(long, value_enum)]
        method: Method,
        /// Built-in name or path to a JSON file. For `moyal` the algebra must
        /// have all brackets on its last coordinate, as `moyal_trick(k)` does.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Weights::Cbh)]
        weights: Weights,
    },
    /// (X)^n ⋆ Y for linear X and Y.
    Xny {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: XnyMethod,
        #[arg(long, default_value = "heisenberg")]
        algebra: String,
        /// Defaults to n.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value = "x1")]
        x: String,
        #[arg(long, default_value = "x2")]
        y: String,
    },
    /// Admissible graphs.
    #[command(subcommand)]
    Graphs(GraphsCommand),
    /// Weight of a single graph, e.g. `--graph "1:(X,Y)"`.
    Weight {
        #[arg(long)]
        graph: String,
    },
    /// Checks that exit 1 when they fail.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCommand {
    /// Antisymmetry, Jacobi and the triangular criterion.
    Validate { file: PathBuf },
    /// Prints a built-in algebra as JSON.
    Export { name: String },
}

#[derive(Subcommand, Debug)]
pub enum GraphsCommand {
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        classify: bool,
    },
}

#[derive(Args, Debug)]
pub struct Sampling {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// (f ⋆ g) ⋆ h - f ⋆ (g ⋆ h) on seeded triples.
    Assoc {
        #[arg(long, value_enum, default_value_t = Method::Uea)]
        method: Method,
        #[arg(long, default_value = "strictly_upper(4)")]
        algebra: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Weights::Cbh)]
        weights: Weights,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Compares two products; prints EQUAL or NOT EQUAL.
    Equiv {
        #[arg(long, value_enum)]
        a: Method,
        #[arg(long, value_enum)]
        b: Method,
        #[arg(long, default_value = "heisenberg")]
        algebra: String,
        /// Monomial pairs up to this total degree.
        #[arg(long, default_value_t = 5)]
        degree: u32,
        #[arg(long, default_value_t = 5)]
        order: usize,
        /// Compare (X)^n ⋆ Y for n up to --degree on seeded X, Y instead.
        #[arg(long)]
        xny: bool,
        #[arg(long, value_enum, default_value_t = Weights::Cbh)]
        weights: Weights,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Bernoulli identities and the linear-in-Y Hausdorff coefficients.
    Identities {
        #[arg(long, default_value_t = 30)]
        max: usize,
    },
    /// Loop operators on an algebra; nonzero loops fail on triangular algebras.
    Loops {
        #[arg(long, default_value = "strictly_upper(5)")]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Moyal,
    Uea,
    Cbh,
    Kontsevich,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum XnyMethod {
    Cbh,
    Uea,
    Assembled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Weights {
    Cbh,
    Independent,
}
