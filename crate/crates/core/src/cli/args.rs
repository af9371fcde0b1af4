use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "legendrian",
    version,
    about = "Chekanov–Eliashberg algebras, twist spuns and their obstructions"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Skip the d², degree and action checks when loading DGA files.
    #[arg(long, global = true)]
    pub no_verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Built-in knots, algebras and inventories.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Check or compute DGA files.
    #[command(subcommand)]
    Dga(DgaCmd),
    /// Twist-spin a DGA along a loop.
    Spin(SpinArgs),
    /// Enumerate augmentations at a coefficient point.
    Augment(AugmentArgs),
    /// Linearised or bilinearised homology.
    Linhom(LinhomArgs),
    /// Exactness feasibility of a cone window such as `-2:0,-3:1,-4:0`.
    ConeCheck {
        #[arg(long, allow_hyphen_values = true)]
        dims: String,
    },
    /// Run an obstruction.
    #[command(subcommand)]
    Obstruct(ObstructCmd),
    /// Augmentation points or a polynomial locus over F_q.
    Variety(VarietyArgs),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    List,
}

#[derive(Debug, Subcommand)]
pub enum DgaCmd {
    /// Load a DGA (file or catalog name) and check every law.
    Check {
        dga: String,
        /// Field for catalog entries.
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Compute the DGA of a diagram file.
    FromDiagram {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SpinArgs {
    pub dga: String,
    /// `id`, or a file with one `x = polynomial` line per changed generator.
    #[arg(long, default_value = "id")]
    pub phi: String,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub lambda_twist: i32,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AugmentArgs {
    pub dga: String,
    #[arg(long)]
    pub p: u32,
    /// Defaults to −1.
    #[arg(long)]
    pub mu: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub lambda: u32,
    #[arg(long)]
    pub graded: bool,
    /// Write the augmentations found as a JSON array.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LinhomArgs {
    pub dga: String,
    /// JSON augmentation, or an array whose first element is used.
    #[arg(long)]
    pub eps: PathBuf,
    #[arg(long)]
    pub eps2: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ObstructCmd {
    /// The exactness obstruction for the unknot times `Λ₂^{2r}`.
    Product {
        #[arg(long)]
        r: u32,
    },
}

#[derive(Debug, Args)]
pub struct VarietyArgs {
    /// A DGA (file or catalog name) or a polynomial (`poly:<name>` or `c[i,j] + …`).
    pub target: String,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub line_test: bool,
    /// Also search basis changes of H₁ with entries bounded by this.
    #[arg(long)]
    pub scan: Option<i32>,
    /// Count ungraded augmentations too.
    #[arg(long)]
    pub ungraded: bool,
}
