//! `trace-ch`: verify trace Cayley-Hamilton identities on a matrix's
//! weighted digraph, dump the enumerations behind them, and trace the
//! sign-reversing involution.
//!
//! Exit status: 0 when every check holds, 1 when some identity or
//! cancellation fails, 2 on bad input or an exceeded cap.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::InputArgs;

/// Hard cap on enumerated walk/subdigraph pairs; `--force` does not lift it.
pub const MAX_PAIRS_ENV: &str = "TRACE_CH_MAX_PAIRS";

#[derive(Debug, Parser)]
#[command(name = "trace-ch", version, about = "Combinatorial verification of the trace Cayley-Hamilton theorem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Carrier {
    /// Linear subdigraphs of length r.
    Lsd,
    /// Closed walks of length k.
    Walks,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check both forms of the identity for r = 1..=r-max.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Lift the default size caps.
        #[arg(long)]
        force: bool,
    },
    /// List linear subdigraphs or closed walks with weights and totals.
    Enumerate {
        #[arg(value_enum)]
        what: Carrier,
        #[command(flatten)]
        input: InputArgs,
        /// Subdigraph length.
        #[arg(long)]
        r: Option<usize>,
        /// Walk length.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// Run the involution checks at total length r.
    Involution {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        r: usize,
        /// Print each BAD pair with its image and the GOOD pairs by group.
        #[arg(long)]
        show_pairs: bool,
        /// Print before/after DOT pictures for each BAD orbit.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        force: bool,
    },
    /// Write DOT files for the digraph, L_r, and involution pairs.
    ExportDot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value = ".")]
        out: std::path::PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Table of r, ℓ_r, f_r, d_r, c_r.
    Charpoly {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            input,
            r_max,
            format,
            force,
        } => commands::verify(&input, r_max, format, force),
        Command::Enumerate {
            what,
            input,
            r,
            k,
            force,
        } => commands::enumerate(&input, what, r, k, force),
        Command::Involution {
            input,
            r,
            show_pairs,
            dot,
            force,
        } => commands::involution(&input, r, show_pairs, dot, force),
        Command::ExportDot { input, r, out, force } => commands::export_dot(&input, r, &out, force),
        Command::Charpoly { input, format, force } => commands::charpoly(&input, format, force),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
