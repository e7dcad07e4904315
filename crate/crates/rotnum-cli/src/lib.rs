//! Library backing the `rotnum` binary: argument definitions, document
//! formats, rendering, and the command implementations.

use std::fmt;
use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rotnum::{rotation_formula, sample::random_loop, VectorLoop};

pub mod docs;
pub mod render;

use docs::{AnalysisDocument, LoopDocument, OracleDocument, RefinedDocument};

#[derive(Parser, Debug)]
#[command(
    name = "rotnum",
    version,
    about = "Exact rotation numbers of closed loops of primitive lattice vectors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-edge analysis table, rotation number, oracle values, refinement
    Analyze(InputArgs),
    /// Unimodular refinement of a loop, with provenance
    Refine(InputArgs),
    /// Just the rotation number
    Rotation(InputArgs),
    /// Winding-number oracle values
    Oracle(InputArgs),
    /// Cross-check all rotation routes on random loops
    Fuzz(FuzzArgs),
    /// Generate random loop documents
    Gen(GenArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input path; `-` reads standard input
    #[arg(long)]
    pub input: String,

    /// Input format
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    pub format: Format,

    /// Emit machine-readable JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// JSON object with optional name and a vertices array
    Structured,
    /// Two whitespace-separated integers per line
    Plain,
}

#[derive(Args, Debug)]
pub struct FuzzArgs {
    /// Number of random loops to check
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
    pub count: u32,

    /// Largest loop length
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
    pub max_d: u32,

    /// Coordinate bound B: components are drawn from [-B, B]
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
    pub coord_bound: i64,

    /// RNG seed; a fixed seed gives a byte-identical transcript
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Number of loops to emit, one JSON document per line
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub count: u32,

    /// Largest loop length
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
    pub max_d: u32,

    /// Coordinate bound B: components are drawn from [-B, B]
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
    pub coord_bound: i64,

    /// RNG seed
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

/// Failures mapped to exit codes: input problems exit 1, invalid loops
/// exit 2, property violations exit 3.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Loop(rotnum::Error),
    Property(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Loop(_) => 2,
            CliError::Property(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Loop(e) => write!(f, "invalid loop: {e}"),
            CliError::Property(msg) => write!(f, "property violation: {msg}"),
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("<stdin>: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn load_document(args: &InputArgs) -> Result<LoopDocument, CliError> {
    let text = read_input(&args.input)?;
    let parsed = match args.format {
        Format::Structured => LoopDocument::parse_structured(&text),
        Format::Plain => LoopDocument::parse_plain(&text),
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", args.input)))
}

fn load_loop(args: &InputArgs) -> Result<(Option<String>, VectorLoop), CliError> {
    let doc = load_document(args)?;
    let vl = doc.to_loop().map_err(CliError::Loop)?;
    Ok((doc.name, vl))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze(args) => {
            let (name, vl) = load_loop(args)?;
            let doc = AnalysisDocument::build(name, &vl).map_err(tolerance_to_property)?;
            if args.json {
                println!("{}", to_json(&doc));
            } else {
                print!("{}", render::render_analysis(&doc));
            }
            Ok(())
        }
        Command::Refine(args) => {
            let (name, vl) = load_loop(args)?;
            let doc = RefinedDocument::build(name, &vl);
            if args.json {
                println!("{}", to_json(&doc));
            } else {
                print!("{}", render::render_refined_plain(&doc));
            }
            Ok(())
        }
        Command::Rotation(args) => {
            let (_, vl) = load_loop(args)?;
            let report = rotation_formula(&vl);
            if !report.is_consistent() {
                return Err(CliError::Property(format!(
                    "rotation routes disagree: formula = {}, refined = {}, winding = {}",
                    report.formula, report.hm_on_refined, report.winding
                )));
            }
            if args.json {
                println!(
                    "{}",
                    to_json(&serde_json::json!({
                        "rotation": docs::JsonInt(report.rotation_number())
                    }))
                );
            } else {
                println!("{}", report.rotation_number());
            }
            Ok(())
        }
        Command::Oracle(args) => {
            let (_, vl) = load_loop(args)?;
            let doc = OracleDocument::build(&vl).map_err(tolerance_to_property)?;
            if args.json {
                println!("{}", to_json(&doc));
            } else {
                print!("{}", render::render_oracle(&doc));
            }
            Ok(())
        }
        Command::Fuzz(args) => fuzz(args),
        Command::Gen(args) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            for k in 1..=args.count {
                let vl = random_loop(&mut rng, args.max_d as usize, args.coord_bound);
                let doc = LoopDocument::from_loop(
                    Some(format!("random-{}-{}", args.seed, k)),
                    &vl,
                );
                println!(
                    "{}",
                    serde_json::to_string(&doc).expect("documents serialize")
                );
            }
            Ok(())
        }
    }
}

/// A float-oracle tolerance failure on a valid loop is a property violation,
/// not an input error.
fn tolerance_to_property(e: rotnum::Error) -> CliError {
    match e {
        rotnum::Error::WindingTolerance { .. } => CliError::Property(e.to_string()),
        other => CliError::Loop(other),
    }
}

fn fuzz(args: &FuzzArgs) -> Result<(), CliError> {
    println!(
        "fuzz seed={} count={} max-d={} coord-bound={}",
        args.seed, args.count, args.max_d, args.coord_bound
    );
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for trial in 1..=args.count {
        let vl = random_loop(&mut rng, args.max_d as usize, args.coord_bound);
        let report = rotation_formula(&vl);
        let float = rotnum::winding_number_float(&vl);
        let float_ok = float
            .as_ref()
            .map(|fw| fw.rounded == report.winding)
            .unwrap_or(false);
        if !report.is_consistent() || !float_ok {
            let doc = LoopDocument::from_loop(None, &vl);
            println!("counterexample at trial {trial}:");
            println!(
                "{}",
                serde_json::to_string(&doc).expect("documents serialize")
            );
            println!(
                "formula = {}, refined = {}, winding = {}, float = {:?}",
                report.formula, report.hm_on_refined, report.winding, float
            );
            println!("FAIL: {} passed, 1 failed", trial - 1);
            return Err(CliError::Property(format!(
                "rotation routes disagree on trial {trial}"
            )));
        }
    }
    println!("ok: {} passed, 0 failed", args.count);
    Ok(())
}
