use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "primex",
    version,
    about = "Solvable primitive permutation groups and 2-adic quartics"
)]
pub struct Cli {
    /// Add `elapsed_ms` to the output envelope.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect a permutation group file.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Low-degree cohomology of a conjugation module or a subgroup of GL(n, l).
    Cohom(CohomArgs),
    /// Split extensions.
    #[command(subcommand)]
    Ext(ExtCommand),
    /// Solvable primitive groups of degree l^n.
    Enumerate(EnumerateArgs),
    /// Eisenstein quartics over Q_2.
    #[command(subcommand)]
    Quartic(QuarticCommand),
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, transitivity, primitivity, solvability and stabilizer maximality.
    Info { file: PathBuf },
    /// The affine structure of a solvable primitive group.
    Affine { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct CohomArgs {
    /// Group file. Holds `L` (with `--normal` or a `normal k` section), or a
    /// subgroup of GL(n, l) on nonzero vectors (with `--gl-subgroup n,l`).
    pub file: Option<PathBuf>,

    /// Generators of N, separated by `;`, each as space- or comma-separated images.
    #[arg(long, conflicts_with = "gl_subgroup")]
    pub normal: Option<String>,

    /// `n,l` to read FILE as a subgroup of GL(n, l), or `n,l,i` for the i-th
    /// irreducible solvable subgroup class of GL(n, l) (no FILE).
    #[arg(long)]
    pub gl_subgroup: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ExtCommand {
    /// Complements of N in L and their conjugacy classes.
    Complements {
        /// Group file of L, optionally followed by a `normal k` section.
        file: PathBuf,
        /// Generators of N, separated by `;`.
        #[arg(long)]
        normal: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub n: usize,
    /// Directory for one group file per entry plus `manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum QuarticCommand {
    /// Classify x^4 + a x^3 + b x^2 + c x + d.
    Classify {
        /// `a,b,c,d` as decimal integers.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Working precision in bits.
        #[arg(long, default_value_t = primex::dyadic::DEFAULT_PRECISION)]
        precision: u32,
    },
    /// Classify every x^4 + 2a x^3 + 2b x^2 + 2c x + 2d with a, b, c, d mod 2^m, d odd.
    Scan {
        #[arg(long)]
        mod_bits: u32,
    },
}
