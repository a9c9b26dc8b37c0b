use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "skewplane",
    version,
    about = "Count skew plane partitions and overpartitions and check their identities"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached count tables.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for enumeration sweeps.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Pg,
    Ps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Restricted,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Value,
    Occurrence,
    Hybrid,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List skew shapes outer/inner with |outer| <= N.
    Shapes {
        #[arg(long, value_name = "N")]
        max_outer: u32,
        #[arg(long, value_name = "A", default_value_t = 1)]
        min_cells: u32,
        /// Defaults to --max-outer.
        #[arg(long, value_name = "B")]
        max_cells: Option<u32>,
    },
    /// List the fillings of a shape with a given weight.
    Fillings {
        #[arg(long, value_name = "S")]
        shape: String,
        #[arg(long, value_name = "W")]
        weight: u32,
        #[arg(long)]
        square_free_only: bool,
        /// Aligned grid instead of the compact form.
        #[arg(long)]
        pretty: bool,
    },
    /// Value statistics of a filling around a pivot.
    Stats {
        #[command(flatten)]
        input: FillingInput,
        #[arg(long, value_name = "K")]
        k: u32,
    },
    /// List the overlined liftings of a square-free filling.
    Liftings {
        #[command(flatten)]
        input: FillingInput,
        #[arg(long, value_enum, default_value_t = ModelArg::Value)]
        model: ModelArg,
    },
    /// pg or ps at (n, k, m).
    Count {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_name = "M", value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Restricted)]
        variant: VariantArg,
    },
    /// PG or PS count table at (n, k), keyed by (j, l).
    Table {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        point: Point,
        /// Enumerate overlinings explicitly instead of using the closed form.
        #[arg(long)]
        oracle: bool,
    },
    /// Exhaustive identity checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
pub struct FillingInput {
    #[arg(long, value_name = "S")]
    pub shape: String,
    #[arg(long, value_name = "F")]
    pub filling: String,
}

#[derive(Debug, Args)]
pub struct Point {
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// pg against the alternating sum over PG.
    Theorem1(TheoremArgs),
    /// ps against the alternating sum over PS.
    Theorem2(TheoremArgs),
    /// The alternating binomial sum is an indicator of D = R.
    Lemma1 {
        #[arg(long, value_name = "N", default_value_t = 12)]
        max: u32,
    },
    /// Marking models against brute force over cell subsets.
    Models {
        #[arg(long, value_name = "N", default_value_t = 6)]
        max_n: u32,
    },
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
    #[arg(long, value_enum, default_value_t = VariantArg::Restricted)]
    pub variant: VariantArg,
    #[arg(long)]
    pub fail_fast: bool,
}
