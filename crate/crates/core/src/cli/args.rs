use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "monochar", version, about = "Monopole differential characters on triangulated spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

/// Flags shared by every subcommand. Unset flags fall back to the config
/// file, then to built-in defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Magnetic charge; a comma-separated list for `scan` and `verify cech`
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub g: Option<String>,

    /// Base polyhedron: octahedron or icosahedron
    #[arg(long, global = true)]
    pub scheme: Option<String>,

    /// Subdivision level
    #[arg(long, global = true)]
    pub level: Option<u32>,

    /// Seed for randomized cycles
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Write the JSON (or OFF) output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Pass/fail tolerance
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// key = value file pre-setting any of these flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Gauss–Legendre points per edge
    #[arg(long = "edge-rule-order", global = true)]
    pub edge_rule_order: Option<usize>,

    /// exact_solid_angle, or numeric:<order>
    #[arg(long = "triangle-mode", global = true)]
    pub triangle_mode: Option<String>,

    /// Number of random samples
    #[arg(long, global = true)]
    pub samples: Option<usize>,

    /// Inner shell radius
    #[arg(long = "r-inner", global = true)]
    pub r_inner: Option<f64>,

    /// Outer shell radius
    #[arg(long = "r-outer", global = true)]
    pub r_outer: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a mesh and export it as OFF
    Mesh {
        /// Build the shell instead of the sphere (summary only; OFF holds surfaces)
        #[arg(long)]
        shell: bool,
    },
    /// Magnetic flux through the sphere
    Flux,
    /// Holonomy of a string potential around a named loop
    Holonomy {
        /// Pole the string leaves through
        #[arg(long, default_value = "south")]
        pole: String,
        /// Loop name (equator, zero, latitude:<z>, triangle:<i>, star:<v>)
        #[arg(long = "loop", default_value = "equator")]
        loop_name: String,
    },
    /// Evaluate the character on named loops
    Character {
        /// Comma-separated loop names
        #[arg(long = "loop", default_value = "equator")]
        loops: String,
        /// Accept unquantized charges
        #[arg(long)]
        allow_defective: bool,
    },
    /// Run a verification report
    Verify {
        #[arg(value_enum)]
        which: Which,
    },
    /// Quantization scan over a list of charges
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Uct,
    Sequence5,
    R2,
    Retract,
    Cech,
    Relation,
    Strings,
}
