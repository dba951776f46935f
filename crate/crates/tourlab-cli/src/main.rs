//! `tourlab` — command-line access to the tournament pattern toolkit:
//! exact counting, the alternating enumerator, signatures, spine cores,
//! pattern detection, reduction gadgets, named verification suites, and the
//! partition-frequency experiment.
//!
//! Conventions:
//! - Inputs are text files in the toolkit's matrix format (`tournament K`,
//!   `graph K`, `tournament K colored P`, `graph K colored P`).
//! - Numeric output is decimal, one result per line; constructions print
//!   the constructed object in the same text format.
//! - Predicates print `1` or `0` and exit 0; exit 1 signals a verification
//!   failure (a failing suite case, a rejected signature or partition);
//!   exit 2 signals a usage or input error. Output is byte-identical
//!   across runs with identical arguments and seeds.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tourlab_core::counting::{
    count_cf_clique, count_cf_indsub, count_cf_indsub_to, count_cf_sub, count_clique,
    count_cp_indsub, count_cp_sub, count_indsub_to,
};
use tourlab_core::detect::{best_spine_decomposition, core_length, detect_pattern};
use tourlab_core::enumerator::{alternating_enumerator_antimatching, alternating_enumerator_naive};
use tourlab_core::error::Error as CoreError;
use tourlab_core::reductions::{biased_tournament, clique_color_gadget, pied_graph, signature_gadget};
use tourlab_core::signatures::{erdos_moser_signature, is_signature, min_signature};
use tourlab_core::textio::{
    parse_any, serialize_colored_graph, serialize_colored_tournament, serialize_tournament,
    ParsedObject,
};
use tourlab_core::ttunique::{experiment_tt_unique, tt_gadget, TTUniquePartition};
use tourlab_core::verify::run_suite;
use tourlab_core::{ColoredGraph, ColoredTournament, Graph, Tournament};

#[derive(Parser)]
#[command(
    name = "tourlab",
    version,
    about = "Tournament pattern toolkit: exact counts, enumerators, gadgets, verification suites",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count occurrences of a pattern (or cliques) in a host
    Count(CountArgs),
    /// Evaluate the alternating enumerator of a graph against a tournament
    Ae(AeArgs),
    /// Find, construct, or check signatures of a tournament
    Signature(SignatureArgs),
    /// Compute the core length (longest spine) of a tournament
    Core(CoreArgs),
    /// Decide whether a host tournament contains a pattern
    Detect(DetectArgs),
    /// Build a reduction gadget and print it in the text format
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Run a named verification suite and print its manifest
    Verify(VerifyArgs),
    /// Run a reproducible experiment and print its CSV report
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Args)]
struct CountArgs {
    /// Pattern file: a tournament, or a graph when the host is colored
    #[arg(long, conflicts_with = "clique")]
    pattern: Option<PathBuf>,
    /// Count cliques of this order instead of a file-based pattern
    #[arg(long)]
    clique: Option<usize>,
    /// Host file: tournament, graph, or a colored variant
    #[arg(long)]
    host: PathBuf,
    /// Graph patterns: count colorful occurrences (each color exactly
    /// once) instead of color-prescribed ones
    #[arg(long)]
    colorful: bool,
    /// Graph patterns: count induced occurrences (non-edges must match)
    #[arg(long)]
    induced: bool,
}

#[derive(Args)]
struct AeArgs {
    /// Tournament file giving the pattern
    #[arg(long)]
    tournament: PathBuf,
    /// Evaluate on the anti-matching via the closed form
    #[arg(long, conflicts_with = "graph")]
    antimatching: bool,
    /// Graph file to evaluate on (subset-sum evaluation)
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct SignatureArgs {
    /// Tournament file
    #[arg(long)]
    tournament: PathBuf,
    /// Check whether these vertices form a signature (prints 1 or 0)
    #[arg(long, value_delimiter = ',', conflicts_with = "erdos_moser")]
    check: Option<Vec<usize>>,
    /// Build the degree-residue signature with this parameter
    #[arg(long)]
    erdos_moser: Option<usize>,
    /// Also print the signature's vertices on a second line
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct CoreArgs {
    /// Tournament file
    #[arg(long)]
    tournament: PathBuf,
    /// Also print the best decomposition (three lines: out-rib, spine,
    /// in-rib)
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct DetectArgs {
    /// Pattern tournament file
    #[arg(long)]
    pattern: PathBuf,
    /// Host tournament file
    #[arg(long)]
    host: PathBuf,
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Orient a colored graph against a reference tournament
    Biased {
        /// Colored graph file
        #[arg(long)]
        input: PathBuf,
        /// Reference tournament file (order = palette)
        #[arg(long)]
        tournament: PathBuf,
    },
    /// Read the agreement graph back out of a colored tournament
    Pied {
        /// Colored tournament file
        #[arg(long)]
        input: PathBuf,
        /// Reference tournament file (order = palette)
        #[arg(long)]
        tournament: PathBuf,
    },
    /// Attach a signature block to a colored graph
    Signature {
        /// Pattern tournament file
        #[arg(long)]
        tournament: PathBuf,
        /// Signature vertices (comma-separated)
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<usize>,
        /// Colored graph file (palette = order minus signature size)
        #[arg(long)]
        input: PathBuf,
    },
    /// Attach a distinguishing-partition block to a colored graph
    Ttunique {
        /// Pattern tournament file
        #[arg(long)]
        tournament: PathBuf,
        /// Z-part vertices (comma-separated); the rest form D
        #[arg(long, value_delimiter = ',')]
        z: Vec<usize>,
        /// Colored graph file (palette = |Z|)
        #[arg(long)]
        input: PathBuf,
    },
    /// Spread a graph over one layer per color so cliques become colorful
    Cliquecolor {
        /// Graph file
        #[arg(long)]
        input: PathBuf,
        /// Number of layers (clique order)
        #[arg(long)]
        palette: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (see README for the list; `all` runs every suite)
    #[arg(long)]
    suite: String,
    /// Seed driving every randomized choice in the suite
    #[arg(long)]
    seed: u64,
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Sample random tournaments and report how often the fixed prefix
    /// split satisfies the distinguishing-partition conditions
    Ttunique {
        /// Tournament order (at least 4)
        #[arg(long)]
        k: usize,
        /// Number of sampled tournaments
        #[arg(long)]
        trials: u64,
        /// Seed; trial t derives its own stream from seed XOR t
        #[arg(long)]
        seed: u64,
    },
}

/// CLI-level error: wraps core errors and adds I/O and usage classes.
enum CliError {
    Core(CoreError),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// A verification ran to completion and rejected (failing suite).
    Verification,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Verification => write!(f, "verification failed"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// Exit status: 1 for verification failures, 2 for usage and input
    /// problems (including malformed files and out-of-range requests).
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Core(CoreError::NotASignature | CoreError::UnverifiedPartition) => 1,
            CliError::Core(CoreError::Divisibility { .. } | CoreError::Internal(_)) => 1,
            CliError::Core(_) | CliError::Io(..) | CliError::Usage(_) => 2,
        }
    }
}

fn read_object(path: &Path) -> Result<ParsedObject, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse_any(&text).map_err(CliError::Core)
}

fn read_tournament(path: &Path) -> Result<Tournament, CliError> {
    match read_object(path)? {
        ParsedObject::Tournament(t) => Ok(t),
        _ => Err(CliError::Usage(format!(
            "{}: expected a plain tournament",
            path.display()
        ))),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    match read_object(path)? {
        ParsedObject::Graph(g) => Ok(g),
        _ => Err(CliError::Usage(format!(
            "{}: expected a plain graph",
            path.display()
        ))),
    }
}

fn read_colored_graph(path: &Path) -> Result<ColoredGraph, CliError> {
    match read_object(path)? {
        ParsedObject::ColoredGraph(g) => Ok(g),
        _ => Err(CliError::Usage(format!(
            "{}: expected a colored graph",
            path.display()
        ))),
    }
}

fn read_colored_tournament(path: &Path) -> Result<ColoredTournament, CliError> {
    match read_object(path)? {
        ParsedObject::ColoredTournament(t) => Ok(t),
        _ => Err(CliError::Usage(format!(
            "{}: expected a colored tournament",
            path.display()
        ))),
    }
}

fn run_count(args: CountArgs) -> Result<(), CliError> {
    let host = read_object(&args.host)?;
    if let Some(k) = args.clique {
        if args.colorful || args.induced {
            return Err(CliError::Usage(
                "--colorful and --induced do not apply to clique counting".into(),
            ));
        }
        let value = match host {
            ParsedObject::Graph(g) => count_clique(k, &g),
            ParsedObject::ColoredGraph(g) => count_cf_clique(k, &g)?,
            _ => {
                return Err(CliError::Usage(
                    "clique counting needs a graph or colored graph host".into(),
                ))
            }
        };
        println!("{value}");
        return Ok(());
    }
    let pattern_path = args
        .pattern
        .ok_or_else(|| CliError::Usage("provide --pattern FILE or --clique K".into()))?;
    let pattern = read_object(&pattern_path)?;
    let value = match (pattern, host) {
        (ParsedObject::Tournament(p), ParsedObject::Tournament(h)) => {
            if args.colorful || args.induced {
                return Err(CliError::Usage(
                    "tournament-in-tournament counting takes no extra flags".into(),
                ));
            }
            count_indsub_to(&p, &h)
        }
        (ParsedObject::Tournament(p), ParsedObject::ColoredTournament(h)) => {
            if args.colorful || args.induced {
                return Err(CliError::Usage(
                    "colorful tournament counting takes no extra flags".into(),
                ));
            }
            count_cf_indsub_to(&p, &h)?
        }
        (ParsedObject::Graph(p), ParsedObject::ColoredGraph(h)) => {
            match (args.colorful, args.induced) {
                (false, false) => count_cp_sub(&p, &h)?,
                (true, false) => count_cf_sub(&p, &h)?,
                (false, true) => count_cp_indsub(&p, &h)?,
                (true, true) => count_cf_indsub(&p, &h)?,
            }
        }
        _ => {
            return Err(CliError::Usage(
                "unsupported pattern/host combination: use tournament-in-tournament, \
                 tournament-in-colored-tournament, or graph-in-colored-graph"
                    .into(),
            ))
        }
    };
    println!("{value}");
    Ok(())
}

fn run_ae(args: AeArgs) -> Result<(), CliError> {
    let t = read_tournament(&args.tournament)?;
    let value = if args.antimatching {
        alternating_enumerator_antimatching(&t)?
    } else if let Some(path) = args.graph {
        let h = read_graph(&path)?;
        alternating_enumerator_naive(&t, &h)?
    } else {
        return Err(CliError::Usage(
            "provide --antimatching or --graph FILE".into(),
        ));
    };
    println!("{value}");
    Ok(())
}

fn print_vertices(vertices: &[usize]) {
    let words: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    println!("{}", words.join(" "));
}

fn run_signature(args: SignatureArgs) -> Result<(), CliError> {
    let t = read_tournament(&args.tournament)?;
    if let Some(vertices) = args.check {
        let ok = is_signature(&t, &vertices)?;
        println!("{}", u8::from(ok));
        return Ok(());
    }
    let sig = if let Some(p) = args.erdos_moser {
        erdos_moser_signature(&t, p)?
    } else {
        min_signature(&t)?
    };
    println!("{}", sig.len());
    if args.witness {
        print_vertices(sig.vertices());
    }
    Ok(())
}

fn run_core(args: CoreArgs) -> Result<(), CliError> {
    let t = read_tournament(&args.tournament)?;
    println!("{}", core_length(&t)?);
    if args.witness {
        let best = best_spine_decomposition(&t)?;
        print_vertices(&best.r_plus);
        print_vertices(&best.spine);
        print_vertices(&best.r_minus);
    }
    Ok(())
}

fn run_detect(args: DetectArgs) -> Result<(), CliError> {
    let pattern = read_tournament(&args.pattern)?;
    let host = read_tournament(&args.host)?;
    println!("{}", u8::from(detect_pattern(&pattern, &host)));
    Ok(())
}

fn run_gadget(cmd: GadgetCommand) -> Result<(), CliError> {
    match cmd {
        GadgetCommand::Biased { input, tournament } => {
            let g = read_colored_graph(&input)?;
            let t = read_tournament(&tournament)?;
            print!("{}", serialize_colored_tournament(&biased_tournament(&g, &t)?));
        }
        GadgetCommand::Pied { input, tournament } => {
            let ct = read_colored_tournament(&input)?;
            let t = read_tournament(&tournament)?;
            print!("{}", serialize_colored_graph(&pied_graph(&ct, &t)?));
        }
        GadgetCommand::Signature {
            tournament,
            vertices,
            input,
        } => {
            let t = read_tournament(&tournament)?;
            let g = read_colored_graph(&input)?;
            print!("{}", serialize_colored_tournament(&signature_gadget(&t, &vertices, &g)?));
        }
        GadgetCommand::Ttunique {
            tournament,
            z,
            input,
        } => {
            let t = read_tournament(&tournament)?;
            let g = read_colored_graph(&input)?;
            let d: Vec<usize> = (1..=t.order()).filter(|v| !z.contains(v)).collect();
            let mut part = TTUniquePartition::new(&t, &d, &z)?;
            if !part.verify(&t)? {
                return Err(CliError::Core(CoreError::UnverifiedPartition));
            }
            print!("{}", serialize_tournament(&tt_gadget(&t, &part, &g)?));
        }
        GadgetCommand::Cliquecolor { input, palette } => {
            let g = read_graph(&input)?;
            if palette == 0 {
                return Err(CliError::Usage("--palette must be at least 1".into()));
            }
            print!("{}", serialize_colored_graph(&clique_color_gadget(&g, palette)));
        }
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), CliError> {
    let manifest = run_suite(&args.suite, args.seed)?;
    print!("{}", manifest.render());
    if manifest.all_passed() {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn run_experiment(cmd: ExperimentCommand) -> Result<(), CliError> {
    match cmd {
        ExperimentCommand::Ttunique { k, trials, seed } => {
            let report = experiment_tt_unique(k, trials, seed)?;
            print!("{}", report.csv());
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count(args) => run_count(args),
        Command::Ae(args) => run_ae(args),
        Command::Signature(args) => run_signature(args),
        Command::Core(args) => run_core(args),
        Command::Detect(args) => run_detect(args),
        Command::Gadget(cmd) => run_gadget(cmd),
        Command::Verify(args) => run_verify(args),
        Command::Experiment(cmd) => run_experiment(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
