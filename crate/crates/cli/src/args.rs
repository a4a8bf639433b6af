use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tate", version, about = "Tate cohomology, complete resolutions and stable Hom over finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraInput {
    /// Preset `name@field`, e.g. `k[t]/t^2@F2`, `kV4@F2`, `T3@Q`; the field defaults to F2.
    #[arg(long, conflicts_with = "algebra", required_unless_present = "algebra")]
    pub preset: Option<String>,
    /// Algebra JSON file.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Bound on the projective resolution of the top used to detect finite global dimension.
    #[arg(long, default_value_t = tate_core::resolutions::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Injective,
    Projective,
    Complete,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the algebra in the JSON algebra format.
    Preset {
        #[command(flatten)]
        input: AlgebraInput,
    },
    /// Detect the regime in which complete resolutions are available.
    Regime {
        #[command(flatten)]
        input: AlgebraInput,
    },
    /// Materialize a resolution of a module over a degree window.
    Resolve {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long, value_enum, default_value_t = Kind::Injective)]
        kind: Kind,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Tate cohomology dimensions, cross-checked across every available route.
    Tate {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, default_value = "k")]
        source: String,
        #[arg(long, default_value = "k")]
        target: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Ext dimensions from minimal resolutions.
    Ext {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, default_value = "k")]
        source: String,
        #[arg(long, default_value = "k")]
        target: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Stable Hom-space modulo maps factoring through injectives.
    StableHom {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, default_value = "k")]
        source: String,
        #[arg(long, default_value = "k")]
        target: String,
    },
    /// The Tate cohomology ring of the trivial module.
    Ring {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Gorenstein injective approximation sequences of a module.
    Approximate {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, default_value = "k")]
        module: String,
    },
    /// Split a complex of injectives into a minimal and a contractible part.
    Minimize {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long)]
        complex: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Long exact Tate cohomology sequences of `0 -> A' -> A -> A/A' -> 0`.
    Les {
        #[command(flatten)]
        input: AlgebraInput,
        /// The middle module `A`.
        #[arg(long)]
        middle: String,
        /// Rows generating the submodule `A'`: an inline JSON matrix or a file.
        #[arg(long)]
        generators: String,
        #[arg(long, default_value = "k")]
        against: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Run every cross-check available for a module and report the results.
    Verify {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Preset { .. } => "preset",
            Command::Regime { .. } => "regime",
            Command::Resolve { .. } => "resolve",
            Command::Tate { .. } => "tate",
            Command::Ext { .. } => "ext",
            Command::StableHom { .. } => "stable-hom",
            Command::Ring { .. } => "ring",
            Command::Approximate { .. } => "approximate",
            Command::Minimize { .. } => "minimize",
            Command::Les { .. } => "les",
            Command::Verify { .. } => "verify",
        }
    }

    pub fn input(&self) -> &AlgebraInput {
        match self {
            Command::Preset { input }
            | Command::Regime { input }
            | Command::Resolve { input, .. }
            | Command::Tate { input, .. }
            | Command::Ext { input, .. }
            | Command::StableHom { input, .. }
            | Command::Ring { input, .. }
            | Command::Approximate { input, .. }
            | Command::Minimize { input, .. }
            | Command::Les { input, .. }
            | Command::Verify { input, .. } => input,
        }
    }
}
