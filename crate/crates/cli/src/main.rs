//! `normcol`: experiments on normal edge-colorings of cubic graphs.

mod commands;
mod input;
mod plot;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use normcol::graph::GraphFormat;

use input::GraphArgs;
use report::OutFormat;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input; exit status 1.
    Usage(String),
    /// A checked invariant failed; exit status 2.
    Verification(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "normcol", version, about = "Normal edge-colorings of cubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Number of colors
    #[arg(long, default_value_t = 5)]
    pub k: u8,
    /// Accept only colorings with at most this many abnormal edges
    #[arg(long)]
    pub budget: Option<usize>,
    /// Stop the search after this many nodes
    #[arg(long)]
    pub node_limit: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every edge of a colored graph as poor, rich or abnormal
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Find a coloring with the fewest abnormal edges
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Stop at the first coloring within the budget
        #[arg(long)]
        first: bool,
        /// Write the witness coloring here
        #[arg(long)]
        save: Option<PathBuf>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Smallest k admitting a normal k-edge-coloring
    ChiN {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        save: Option<PathBuf>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Minimum abnormal counts over all connected cubic graphs on n vertices
    Scan {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        solver: SolverArgs,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        /// Include wall-clock times (output is then not reproducible)
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Petersen-coloring of a normally colored graph and its pullback
    Jaeger {
        #[command(flatten)]
        graph: GraphArgs,
        /// Normal 5-edge-coloring; the solver finds one when absent
        #[arg(long, conflicts_with = "map")]
        coloring: Option<PathBuf>,
        /// Verify a given edge map into the Petersen graph instead
        #[arg(long)]
        map: Option<PathBuf>,
        /// Write the edge map here
        #[arg(long)]
        map_out: Option<PathBuf>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Build a graph from copies of the input and write it to a file
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        variant: commands::Recipe,
        #[arg(long)]
        t: Option<usize>,
        /// Designated edge (e, e1)
        #[arg(long)]
        edge: Option<usize>,
        /// Second designated edge (e2)
        #[arg(long)]
        edge2: Option<usize>,
        /// Designated vertex for vertex replacement
        #[arg(long)]
        vertex: Option<usize>,
        /// Host graph for vertex replacement: catalog name or path
        #[arg(long)]
        host: Option<String>,
        /// Second graph for the 2-edge-cut connection: catalog name or path
        #[arg(long)]
        other: Option<String>,
        /// Coloring of the input, required by the K4 gadget
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
        /// Format of the written graph
        #[arg(long, value_parser = input::parse_format, default_value = "edge-list")]
        emit: GraphFormat,
        /// Write the gadget's coloring here
        #[arg(long)]
        coloring_out: Option<PathBuf>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Pigeonhole demonstration: find a clean copy and extend its coloring
    Demo {
        #[command(flatten)]
        graph: GraphArgs,
        /// disjoint, cyclic1, vertex_replacement or cyclic2
        #[arg(long)]
        variant: normcol::constructions::Variant,
        #[arg(long)]
        t: usize,
        /// Coloring of the composite; the solver supplies one when absent
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Does a minimum of at most 2 abnormal edges imply a normal coloring?
    Question31 {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
    /// Draw a colored graph as SVG
    Plot {
        #[command(flatten)]
        graph: GraphArgs,
        /// Coloring to draw; the solver supplies a minimum one when absent
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum)]
        out: Option<OutFormat>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            if report.verdict() {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed; see the report");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 1,
                CliError::Verification(_) => 2,
            })
        }
    }
}
