//! `jumbled`: build, query and inspect Corner Index files.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage,
//! input-format or I/O errors.

mod bench;
mod commands;
mod experiment;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jumbled::textgen::TextModel;
use jumbled::Alphabet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Parser)]
#[command(name = "jumbled", version, about = "Jumbled pattern matching on binary texts")]
struct Cli {
    /// Letters used in texts: `ab`, or `01` with 0 = a and 1 = b.
    #[arg(long, global = true, default_value = "ab", value_parser = parse_alphabet)]
    alphabet: Alphabet,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Tsv,
    Jsonl,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index a text and write the index file.
    Build {
        /// Text file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        index: PathBuf,
    },
    /// Answer `x y` queries, one per line.
    Query {
        #[arg(long)]
        index: PathBuf,
        /// Query file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Print both prefix normal forms.
    Pnf {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        index: Option<PathBuf>,
        #[arg(long)]
        input: Option<String>,
    },
    /// Print the header and corner lists of an index file.
    Inspect {
        #[arg(long)]
        index: PathBuf,
    },
    /// Cross-check the index against brute force on one text or on random texts.
    Verify {
        /// Text to check; when absent, `--count` random texts are generated.
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        random: RandomArgs,
        /// Longest text the brute-force oracle will accept.
        #[arg(long, default_value_t = jumbled::oracle::DEFAULT_MAX_N)]
        max_oracle_n: usize,
    },
    /// Report index size against run count on random texts, as TSV.
    Experiment {
        /// Use this text instead of random ones.
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Measure query latency and throughput.
    Bench {
        #[arg(long)]
        index: PathBuf,
        /// Number of queries.
        #[arg(long, default_value_t = 1_000_000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Original text; when given, 1% of the queries are re-checked by brute force.
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RandomArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 1024)]
    pub length: usize,
    /// Draw run lengths as 1 + Geometric(P) instead of fair coin flips.
    #[arg(long, value_name = "P", value_parser = parse_probability)]
    pub run_geometric: Option<f64>,
}

impl RandomArgs {
    pub fn model(&self) -> TextModel {
        self.run_geometric.map_or(TextModel::FairCoin, TextModel::GeometricRuns)
    }

    /// The `count` texts determined by the seed.
    pub fn texts(&self) -> impl Iterator<Item = Vec<u8>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let (model, length) = (self.model(), self.length);
        (0..self.count).map(move |_| model.generate(length, &mut rng))
    }
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    s.parse()
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if p > 0.0 && p <= 1.0 {
        Ok(p)
    } else {
        Err(format!("{p} is not in (0, 1]"))
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub alphabet: Alphabet,
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context { alphabet: cli.alphabet, format: cli.format };
    let result = match cli.command {
        Command::Build { input, index } => commands::build(&ctx, &input, &index),
        Command::Query { index, input } => commands::query(&ctx, &index, &input),
        Command::Pnf { index, input } => commands::pnf(&ctx, index.as_deref(), input.as_deref()),
        Command::Inspect { index } => commands::inspect(&ctx, &index),
        Command::Verify { input, random, max_oracle_n } => {
            verify::run(&ctx, input.as_deref(), &random, max_oracle_n)
        }
        Command::Experiment { input, random } => experiment::run(&ctx, input.as_deref(), &random),
        Command::Bench { index, count, threads, seed, input } => {
            bench::run(&ctx, &index, count, threads, seed, input.as_deref())
        }
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
