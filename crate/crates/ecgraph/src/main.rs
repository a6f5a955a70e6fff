//! Command-line front end.
//!
//! Exit codes: 0 = ran and produced an answer (including "no witness"),
//! 1 = domain or I/O error, 2 = usage error (clap's default).

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ecgraph::bipartize::{erdos_bipartize_from, lemma7_bipartize_from, potential, Bipartition};
use ecgraph::format::{parse_ecg, serialize_ecg};
use ecgraph::gen::{er_graph, proper_complete, rainbow_complete, Palette};
use ecgraph::graph::EdgeColoredGraph;
use ecgraph::hunt::{
    conjecture10_hunt, problem9_hunt, Conjecture10Params, HuntReport, Problem9Params,
};
use ecgraph::projective::{build_plane, incidence_graph, rainbow_color};
use ecgraph::rainbow::{find_rainbow_c3, find_rainbow_c4, RainbowWitness};
use ecgraph::verify::{case1_exhaustive, check_theorem, TheoremId};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "ecgraph", version, about = "Edge-colored graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Search an .ecg file for a rainbow C3 or C4.
    Detect(DetectArgs),
    /// Extract a spanning bipartite subgraph with a degree guarantee.
    Bipartize(BipartizeArgs),
    /// Emit the rainbow-colored incidence graph of the plane of prime order p.
    Plane(PlaneArgs),
    /// Check a theorem's hypothesis and conclusion on an .ecg file.
    Verify(VerifyArgs),
    /// Exhaustively enumerate proper edge colorings of K_n.
    Case1(Case1Args),
    /// Run a seeded counterexample hunt.
    Hunt(HuntArgs),
    /// Generate a random instance.
    Gen(GenArgs),
}

#[derive(Args)]
struct DetectArgs {
    /// Input .ecg file, or - for stdin.
    input: String,
    /// Search for a rainbow C3.
    #[arg(long, conflicts_with = "c4", required_unless_present = "c4")]
    c3: bool,
    /// Search for a rainbow C4.
    #[arg(long)]
    c4: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Lemma7,
    Erdos,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Init {
    Parity,
    Random,
}

#[derive(Args)]
struct BipartizeArgs {
    /// Input .ecg file, or - for stdin.
    input: String,
    #[arg(long, value_enum)]
    method: Method,
    /// Starting split for the local search.
    #[arg(long, value_enum, default_value = "parity")]
    init: Init,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PlaneArgs {
    /// Prime order of the plane.
    #[arg(long)]
    p: u32,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input .ecg file, or - for stdin.
    input: String,
    /// Theorem id: 1..6 or T1..T6.
    #[arg(long)]
    theorem: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct Case1Args {
    /// Order of the complete graph (4..=6).
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct HuntArgs {
    #[command(subcommand)]
    target: HuntTarget,
}

#[derive(Subcommand)]
enum HuntTarget {
    /// Sample colored graphs looking for one with no half-color-degree split.
    Problem9 {
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sample boundary orientations looking for a hypothesis-true digraph
    /// with no directed C4.
    Conjecture10 {
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        min_part: usize,
        #[arg(long, default_value_t = 9)]
        max_part: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Er,
    ProperComplete,
    RainbowComplete,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    model: Model,
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Edge probability (er model only).
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Palette size for the er model: a number, "half", or "edges".
    #[arg(long, default_value = "edges")]
    palette: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe closes (`ecgraph ... | head`),
    // like every other line-oriented tool, instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type RunResult = Result<(), Box<dyn std::error::Error>>;

fn read_graph(input: &str) -> Result<EdgeColoredGraph, Box<dyn std::error::Error>> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(input)?
    };
    Ok(parse_ecg(&text)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> RunResult {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn witness_line(w: &RainbowWitness) -> String {
    let vs: Vec<String> = w.cycle.vertices().iter().map(u32::to_string).collect();
    let cs: Vec<String> = w.colors.iter().map(u32::to_string).collect();
    format!(
        "C{} {} colors {}",
        w.cycle.len(),
        vs.join(" "),
        cs.join(" ")
    )
}

fn run(command: Command) -> RunResult {
    match command {
        Command::Detect(args) => {
            let g = read_graph(&args.input)?;
            let witness = if args.c3 {
                find_rainbow_c3(&g)
            } else {
                find_rainbow_c4(&g)
            };
            match witness {
                Some(w) => println!("{}", witness_line(&w)),
                None => println!("NONE"),
            }
            Ok(())
        }
        Command::Bipartize(args) => {
            let g = read_graph(&args.input)?;
            let init = match args.init {
                Init::Parity => Bipartition::parity(g.n()),
                Init::Random => {
                    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                    Bipartition::random(g.n(), &mut rng)
                }
            };
            let format_side =
                |vs: Vec<u32>| vs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            match args.method {
                Method::Lemma7 => {
                    let (b, trace) = lemma7_bipartize_from(&g, init)?;
                    println!("method=lemma7");
                    println!("X={}", format_side(b.left()));
                    println!("Y={}", format_side(b.right()));
                    print!("{}", trace.to_text());
                }
                Method::Erdos => {
                    let b = erdos_bipartize_from(&g, init)?;
                    println!("method=erdos");
                    println!("X={}", format_side(b.left()));
                    println!("Y={}", format_side(b.right()));
                    println!("potential={}", potential(&g, &b)?);
                }
            }
            Ok(())
        }
        Command::Plane(args) => {
            let plane = build_plane(args.p)?;
            let g = rainbow_color(&incidence_graph(&plane));
            emit(args.out.as_ref(), &serialize_ecg(&g))
        }
        Command::Verify(args) => {
            let id: TheoremId = args.theorem.parse()?;
            let g = read_graph(&args.input)?;
            let v = check_theorem(&g, id)?;
            match args.format {
                Format::Text => {
                    println!("theorem={}", v.theorem);
                    println!("n={}", g.n());
                    println!("hypothesis={}", v.hypothesis_holds);
                    println!("margin={}", v.margin);
                    println!("conclusion={}", v.conclusion_holds);
                    match &v.witness {
                        Some(w) => println!("witness={}", witness_line(w)),
                        None => println!("witness=NONE"),
                    }
                }
                Format::Json => println!("{}", serde_json::to_string(&v)?),
            }
            Ok(())
        }
        Command::Case1(args) => {
            let report = case1_exhaustive(args.n)?;
            match args.format {
                Format::Text => {
                    println!("n={}", report.n);
                    println!("colorings={}", report.colorings);
                    println!("failures={}", report.failures.len());
                    for (i, g) in report.failures.iter().enumerate() {
                        println!("failure index={i}");
                        for line in serialize_ecg(g).lines() {
                            println!("  {line}");
                        }
                    }
                }
                Format::Json => {
                    let failures: Vec<String> = report.failures.iter().map(serialize_ecg).collect();
                    let doc = json!({
                        "n": report.n,
                        "colorings": report.colorings,
                        "failures": failures,
                    });
                    println!("{doc}");
                }
            }
            Ok(())
        }
        Command::Hunt(args) => {
            let (report, format) = match args.target {
                HuntTarget::Problem9 {
                    budget,
                    seed,
                    min_n,
                    max_n,
                    format,
                } => (
                    problem9_hunt(Problem9Params { min_n, max_n }, budget, seed)?,
                    format,
                ),
                HuntTarget::Conjecture10 {
                    budget,
                    seed,
                    min_part,
                    max_part,
                    format,
                } => (
                    conjecture10_hunt(Conjecture10Params { min_part, max_part }, budget, seed)?,
                    format,
                ),
            };
            print_report(&report, format)
        }
        Command::Gen(args) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let g = match args.model {
                Model::Er => {
                    let palette = parse_palette(&args.palette)?;
                    er_graph(args.n, args.p, palette, &mut rng)
                }
                Model::ProperComplete => proper_complete(args.n),
                Model::RainbowComplete => rainbow_complete(args.n),
            };
            emit(args.out.as_ref(), &serialize_ecg(&g))
        }
    }
}

fn parse_palette(s: &str) -> Result<Palette, Box<dyn std::error::Error>> {
    match s {
        "half" => Ok(Palette::HalfEdges),
        "edges" => Ok(Palette::Edges),
        _ => {
            let k: u32 = s.parse().map_err(|_| {
                format!("palette must be a number, \"half\", or \"edges\", got {s:?}")
            })?;
            Ok(Palette::Fixed(k))
        }
    }
}

fn print_report(report: &HuntReport, format: Format) -> RunResult {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", serde_json::to_string(report)?),
    }
    Ok(())
}
