//! Batch front end: enumeration, crystal graphs, expansions, Hecke
//! insertion, K-jdt, K-Demazure crystals, verification suites, and
//! byte-stable reproduction of the reference figures and tables.

mod commands;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "svtcrystal", version, about = "Crystals on semistandard set-valued tableaux")]
struct Cli {
    /// Output directory for generated files (also honors SVTCRYSTAL_OUT).
    #[arg(long, global = true)]
    out_dir: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate svssyt^n(λ).
    Enumerate {
        #[arg(long, value_parser = commands::parse_shape)]
        shape: svtcrystal::Partition,
        #[arg(long)]
        n: u8,
        /// Cap on the total excess.
        #[arg(long)]
        max_excess: Option<usize>,
        /// Print node and component counts only.
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "text")]
        format: commands::Format,
    },
    /// Build the crystal graph, optionally with K-theory edges.
    CrystalGraph {
        #[arg(long, value_parser = commands::parse_shape)]
        shape: svtcrystal::Partition,
        #[arg(long)]
        n: u8,
        /// Add the excess-raising K edges (single rows and columns only).
        #[arg(long)]
        k_edges: bool,
        #[arg(long, default_value = "dot")]
        format: commands::Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Schur expansion of the Grothendieck polynomial of λ.
    Expand {
        #[arg(long, value_parser = commands::parse_shape)]
        shape: svtcrystal::Partition,
        #[arg(long)]
        n: u8,
        #[arg(long, default_value = "text")]
        format: commands::Format,
    },
    /// Run a verification suite (crystal-axioms, reading-words, involutions,
    /// operators, schur-expansion, cross-model, hecke, kjdt, kcrystal, all).
    Verify {
        suite: String,
        /// Partitions range over the max × max box.
        #[arg(long, default_value_t = 3)]
        max: usize,
        /// Comma-separated list of entry bounds n.
        #[arg(long, default_value = "3,4", value_delimiter = ',')]
        n: Vec<u8>,
    },
    /// Hecke insertion of two-line arrays and its inverse.
    Hecke {
        #[command(subcommand)]
        command: commands::HeckeCommand,
    },
    /// Rectify a skew set-valued tableau with an explicit rectification order.
    Rectify {
        /// JSON file with the rectification order U (a tableau of the inner shape).
        #[arg(long)]
        order: std::path::PathBuf,
        /// JSON file with the skew tableau T: {"outer":[..],"inner":[..],"n":k,"rows":[[[..]]]}.
        tableau: std::path::PathBuf,
    },
    /// K-jeu-de-taquin utilities.
    Kjdt {
        #[command(subcommand)]
        command: commands::KjdtCommand,
    },
    /// Build a K-Demazure crystal svssyt^n_w(λ) for a single row or column.
    Kdemazure {
        /// Shape as row:k or col:k.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u8,
        /// Reduced word, comma separated (empty for the identity).
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value = "text")]
        format: commands::Format,
    },
    /// Marked Gelfand–Tsetlin patterns for λ.
    Gt {
        #[arg(long, value_parser = commands::parse_shape)]
        shape: svtcrystal::Partition,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "text")]
        format: commands::Format,
    },
    /// Excited Young diagrams for λ.
    Eyd {
        #[arg(long, value_parser = commands::parse_shape)]
        shape: svtcrystal::Partition,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "text")]
        format: commands::Format,
    },
    /// Regenerate reference outputs byte-stably
    /// (figure-1, figure-2, figure-3, table-1, appendix-a).
    Reproduce {
        target: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let out_dir = cli
        .out_dir
        .or_else(|| std::env::var_os("SVTCRYSTAL_OUT").map(Into::into));
    match commands::run(cli.command, out_dir) {
        Ok(()) => {}
        Err(err) => {
            let record = serde_json::json!({ "error": err.to_string() });
            eprintln!("{record}");
            std::process::exit(1);
        }
    }
}
