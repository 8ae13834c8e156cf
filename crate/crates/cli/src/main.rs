// Copyright 2026 The grover2d Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover2d_core::benchmark::{bench_csv, run_bench, BenchConfig};
use grover2d_core::{
    brute_force_filter, build_index, generate_records, linear_search, parse_records, run_grover,
    search_two_dimensional, serialize_records, CensusRecord, Degree, Gender, IterationSchedule,
    MarkedSet, QueryOrder,
};
use serde::Serialize;
use thiserror::Error;

mod report;

use report::{Bucket, ClassicalReport, GroverReport, Search2dReport, SCHEMA_VERSION};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Database {
        path: PathBuf,
        source: grover2d_core::Error,
    },
    #[error(transparent)]
    Core(#[from] grover2d_core::Error),
}

impl CliError {
    /// 0 success, 1 I/O, 2 usage, 3 post-selection exhaustion.
    fn exit_code(&self) -> u8 {
        use grover2d_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Database { .. } => 1,
            CliError::Core(e) => match e {
                E::PostSelectionExhausted { .. } => 3,
                E::Size { .. }
                | E::QubitIndex { .. }
                | E::Validation(_)
                | E::Argument(_)
                | E::Shape { .. } => 2,
                E::Io(_) | E::Parse { .. } | E::Normalization { .. } | E::DoubleAbsorption(_) => 1,
            },
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Grover search and two-dimensional composite-register search simulator.
#[derive(Debug, Parser)]
#[command(name = "grover2d", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a synthetic census CSV.
    Gen(GenArgs),
    /// Run Grover search on a fresh register.
    Grover(GroverArgs),
    /// Two-dimensional (gender × degree) search over a census CSV.
    Search2d(Search2dArgs),
    /// Classical linear scan over a census CSV.
    Classical(ClassicalArgs),
    /// Quantum-vs-classical scaling table as CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long)]
    out: PathBuf,
    /// Probability that a generated record is female.
    #[arg(long, default_value_t = 0.5)]
    gender_split: f64,
    /// Weights for highschool,bachelor,master,doctorate.
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.25, 0.25, 0.25])]
    degree_weights: Vec<f64>,
}

#[derive(Clone, Copy, Debug)]
enum Iterations {
    Auto,
    Fixed(usize),
}

fn parse_iterations(s: &str) -> Result<Iterations, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(Iterations::Auto);
    }
    s.parse()
        .map(Iterations::Fixed)
        .map_err(|_| format!("expected `auto` or a count, got `{s}`"))
}

#[derive(Debug, Args)]
struct GroverArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=24))]
    qubits: u64,
    /// Marked basis indices, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    marked: Vec<usize>,
    #[arg(long, default_value = "auto", value_parser = parse_iterations)]
    iterations: Iterations,
    #[arg(long, default_value_t = 1000)]
    shots: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct Search2dArgs {
    #[arg(long)]
    db: PathBuf,
    #[arg(long)]
    gender: Gender,
    #[arg(long)]
    degree: Degree,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    GenderFirst,
    EducationFirst,
}

impl From<OrderArg> for QueryOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::GenderFirst => QueryOrder::GenderFirst,
            OrderArg::EducationFirst => QueryOrder::EducationFirst,
        }
    }
}

#[derive(Debug, Args)]
struct ClassicalArgs {
    #[arg(long)]
    db: PathBuf,
    #[arg(long)]
    gender: Gender,
    #[arg(long)]
    degree: Degree,
    #[arg(long, value_enum, default_value = "gender-first")]
    order: OrderArg,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    min_qubits: usize,
    #[arg(long)]
    max_qubits: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Shots per row for the empirical success estimate.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    shots: u64,
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_db(path: &Path) -> CliResult<Vec<CensusRecord>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_records(&text).map_err(|source| CliError::Database {
        path: path.to_owned(),
        source,
    })
}

fn emit<T: Serialize>(report: &T, format: Format) -> CliResult<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Usage(format!("report serialization failed: {e}")))?;
            println!("{text}");
        }
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> CliResult<()> {
    let weights: [f64; 4] = args
        .degree_weights
        .as_slice()
        .try_into()
        .map_err(|_| CliError::Usage("--degree-weights takes exactly 4 values".into()))?;
    let records = generate_records(args.seed, args.count as usize, args.gender_split, weights)?;
    write_file(&args.out, &serialize_records(&records)?)
}

fn cmd_grover(args: GroverArgs) -> CliResult<()> {
    let n_qubits = args.qubits as usize;
    let marked = MarkedSet::new(n_qubits, args.marked.iter().copied())?;
    let schedule = match args.iterations {
        Iterations::Auto => IterationSchedule::Auto,
        Iterations::Fixed(k) => IterationSchedule::Fixed(k),
    };
    let result = run_grover(n_qubits, &marked, schedule, args.shots, args.seed)?;

    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &s in result.samples.as_deref().unwrap_or_default() {
        *counts.entry(s).or_default() += 1;
    }
    let shots = args.shots.max(1) as f64;
    let frequencies: BTreeMap<usize, f64> = counts
        .iter()
        .map(|(&k, &v)| (k, v as f64 / shots))
        .collect();
    let marked_frequency = marked.iter().filter_map(|i| frequencies.get(&i)).sum();

    emit(
        &GroverReport {
            schema_version: SCHEMA_VERSION,
            n_qubits,
            marked: marked.iter().collect(),
            iterations_used: result.iterations_used,
            oracle_calls: result.oracle_calls,
            predicted_success: result.predicted_success,
            shots: args.shots,
            seed: args.seed,
            frequencies,
            marked_frequency,
        },
        args.format,
    )
}

fn cmd_search2d(args: Search2dArgs) -> CliResult<()> {
    let records = load_db(&args.db)?;
    let index = build_index(&records);
    let outcome = search_two_dimensional(
        &index,
        args.gender,
        args.degree,
        args.shots as usize,
        args.seed,
    )?;
    let reference = brute_force_filter(&records, args.gender, args.degree);
    let matches =
        outcome.names.iter().collect::<BTreeSet<_>>() == reference.iter().collect::<BTreeSet<_>>();
    emit(
        &Search2dReport {
            schema_version: SCHEMA_VERSION,
            gender: args.gender,
            degree: args.degree,
            photon_mode: outcome.photon_mode,
            oracle_calls: outcome.oracle_calls,
            photon_operations: outcome.photon_operations,
            shots_used: outcome.shots_used,
            post_selected: outcome.post_selected,
            post_selection_rate: outcome.post_selection_rate,
            decoded_bucket: Bucket {
                gender: outcome.decoded_bucket.0,
                degree: outcome.decoded_bucket.1,
            },
            names: outcome.names,
            brute_force_names: reference,
            matches,
            seed: args.seed,
        },
        args.format,
    )
}

fn cmd_classical(args: ClassicalArgs) -> CliResult<()> {
    let records = load_db(&args.db)?;
    let result = linear_search(&records, args.gender, args.degree, args.order.into());
    emit(
        &ClassicalReport {
            schema_version: SCHEMA_VERSION,
            gender: args.gender,
            degree: args.degree,
            order: result.order,
            records: records.len(),
            comparisons: result.comparisons,
            names: result.names,
        },
        args.format,
    )
}

fn cmd_bench(args: BenchArgs) -> CliResult<()> {
    let config = BenchConfig {
        shots: args.shots as usize,
        ..BenchConfig::new(
            args.min_qubits,
            args.max_qubits,
            args.trials as usize,
            args.seed,
        )
    };
    config.validate()?;
    let rows = run_bench(&config)?;
    write_file(&args.out, &bench_csv(&rows))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Grover(a) => cmd_grover(a),
        Command::Search2d(a) => cmd_search2d(a),
        Command::Classical(a) => cmd_classical(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("grover2d: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
