//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "duplicial", version, about = "Distributive laws, duplicial objects and cyclic homology, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the axioms of an algebra, its distributive laws and optional coefficients.
    Check(AlgebraArgs),
    /// Build the duplicial towers and verify their identities.
    Complex(AlgebraArgs),
    /// Hochschild and cyclic homology of the towers.
    Homology(AlgebraArgs),
    /// The nonempty-list bimonad on finite sets and the search for entwined semigroups.
    Setlab(SetlabArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct AlgebraArgs {
    /// Built-in structure, e.g. `group_algebra:Z2`, `sweedler_h4`, `dual_numbers`.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    pub preset: Option<String>,
    /// Structure file in the JSON input format.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// `Q` or a prime field such as `F7`; overrides the field of an input file.
    #[arg(long)]
    pub field: Option<String>,
    /// `trivial`, `twist:antipode`, `twist:inverse_antipode`, or a coefficient file.
    #[arg(long)]
    pub coeff: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub max_degree: usize,
    /// Use the cyclic object of the underlying algebra instead of the coefficient towers.
    #[arg(long)]
    pub classical: bool,
    /// Accept left coefficients whose Yetter–Drinfeld condition fails.
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SetlabArgs {
    /// Carrier size for the entwined search.
    #[arg(long, default_value_t = 3)]
    pub search_entwined: usize,
    /// Alphabet size for the bimonad checks.
    #[arg(long, default_value_t = 3)]
    pub x_size: usize,
    /// Largest number of letters in a nested list for the bimonad checks.
    #[arg(long, default_value_t = 5)]
    pub size_bound: usize,
    /// How many violations to keep in the report.
    #[arg(long, default_value_t = 3)]
    pub witnesses: usize,
    /// Allow carriers or alphabets above 3.
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include every face, degeneracy and cyclic operator as a sparse matrix.
    #[arg(long)]
    pub emit_matrices: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}
