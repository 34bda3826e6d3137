use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use edrg::families::{generate, load_fixture, parse_family};
use edrg::io::{encode_graph6, parse_edge_list, parse_graph6};
use edrg::report::{build_report, ReportDepth};
use edrg::Graph;

/// Decide distance-regularity, edge-distance-regularity, homogeneity,
/// and related structure of a finite graph, entirely in exact rational
/// arithmetic.
#[derive(Parser)]
#[command(name = "edrg", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the combinatorial classifiers and print the verdicts.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify and additionally print the distance and edge-distance
    /// polynomials.
    Polys {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify, compute polynomials, and cross-check every applicable
    /// identity; exits nonzero if any check fails.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the graph in graph6 form.
    Gen {
        #[command(flatten)]
        input: InputArgs,
    },
}

/// Exactly one input source must be given.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// A graph6 string, or a path to a file containing one.
    #[arg(long)]
    graph6: Option<String>,
    /// Path to an edge-list file (`u v` per line, optional `n <count>`
    /// header).
    #[arg(long)]
    edges: Option<PathBuf>,
    /// A family spec such as `hypercube:3`, `kneser:7,3`, `cycle:5`,
    /// `complete:4`, `complete_bipartite:3,3`, `hamming:2,3`,
    /// `odd_graph:4`, or `path:4`.
    #[arg(long)]
    family: Option<String>,
    /// A named data fixture, e.g. `wells`.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of line-oriented text.
    #[arg(long)]
    machine: bool,
    /// Omit the elapsed-time field, making output fully deterministic.
    #[arg(long)]
    no_timing: bool,
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn load_graph(input: &InputArgs) -> Result<Graph, String> {
    if let Some(text) = &input.graph6 {
        let content = match std::fs::read_to_string(text) {
            Ok(file) => file,
            Err(_) => text.clone(),
        };
        return parse_graph6(&content).map_err(|e| e.to_string());
    }
    if let Some(path) = &input.edges {
        let content = std::fs::read_to_string(path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        return parse_edge_list(&content).map_err(|e| e.to_string());
    }
    if let Some(spec) = &input.family {
        let spec = parse_family(spec).map_err(|e| e.to_string())?;
        return generate(&spec).map_err(|e| e.to_string());
    }
    if let Some(name) = &input.fixture {
        return load_fixture(name).map_err(|e| e.to_string());
    }
    Err("no input given".to_string())
}

fn run_report(input: &InputArgs, output: &OutputArgs, depth: ReportDepth) -> ExitCode {
    let g = match load_graph(input) {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let start = Instant::now();
    let mut report = match build_report(&g, depth) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if !output.no_timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    if output.machine {
        println!("{}", report.render_json());
    } else {
        println!("{}", report.render_human());
    }
    if depth == ReportDepth::Verify && !report.all_checks_pass() {
        return ExitCode::from(EXIT_CHECK_FAILED);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Classify { input, output } => run_report(input, output, ReportDepth::Classify),
        Cmd::Polys { input, output } => run_report(input, output, ReportDepth::Polys),
        Cmd::Verify { input, output } => run_report(input, output, ReportDepth::Verify),
        Cmd::Gen { input } => match load_graph(input) {
            Ok(g) => {
                println!("{}", encode_graph6(&g));
                ExitCode::SUCCESS
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_USAGE)
            }
        },
    }
}
