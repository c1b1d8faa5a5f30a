use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palstream::{GenKind, GenSpec};
use palstream_cli::bench::{parse_grid, run_grid, write_csv, DEFAULT_GRID};
use palstream_cli::{generate_bytes, run, verify, CliError, Mode, RunConfig};

/// Longest palindromic substring of a byte stream in one pass.
#[derive(Parser)]
#[command(name = "palstream", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the input through an engine and print a JSON report.
    Run(RunArgs),
    /// Like `run`, then check the answer against an exact offline oracle.
    Verify(RunArgs),
    /// Write a generated test input.
    Gen(GenArgs),
    /// Sweep engines over generated inputs and write a CSV table.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Additive,
    Multiplicative,
    Exact,
    Combined,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Additive error budget E (additive mode, at least 2).
    #[arg(long)]
    error: Option<u64>,
    /// Multiplicative error eps (multiplicative and combined modes).
    #[arg(long)]
    epsilon: Option<f64>,
    /// Exactness window m (exact and combined modes).
    #[arg(long)]
    window: Option<u64>,
    /// Seed for the fingerprint base.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Look for reverse-complement palindromes over A/C/G/T.
    #[arg(long)]
    complement: bool,
    /// Reject input bytes outside this set, e.g. ACGT.
    #[arg(long)]
    alphabet: Option<String>,
    /// Input file; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKindArg {
    Nu,
    Random,
    Planted,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKindArg,
    #[arg(long)]
    length: usize,
    #[arg(long, default_value_t = 4)]
    sigma: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    planted_len: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Sweep description, e.g. `additive:n=1000000:E=2,8,32,128`.
    #[arg(long, default_value = DEFAULT_GRID)]
    grid: String,
    #[arg(long)]
    out: PathBuf,
}

fn required<T>(value: Option<T>, flag: &str, mode: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{mode} mode needs --{flag}")))
}

impl RunArgs {
    fn config(&self) -> Result<RunConfig, CliError> {
        let mode = match self.mode {
            ModeArg::Additive => Mode::Additive {
                error: required(self.error, "error", "additive")?,
            },
            ModeArg::Multiplicative => Mode::Multiplicative {
                eps: required(self.epsilon, "epsilon", "multiplicative")?,
            },
            ModeArg::Exact => Mode::Exact {
                window: required(self.window, "window", "exact")?,
            },
            ModeArg::Combined => Mode::Combined {
                eps: required(self.epsilon, "epsilon", "combined")?,
                window: required(self.window, "window", "combined")?,
            },
        };
        Ok(RunConfig {
            mode,
            seed: self.seed,
            complement: self.complement,
            alphabet: self.alphabet.as_ref().map(|a| a.as_bytes().to_vec()),
        })
    }

    fn input(&self) -> Result<Box<dyn Read>, CliError> {
        match &self.input {
            Some(path) => File::open(path)
                .map(|f| Box::new(f) as Box<dyn Read>)
                .map_err(|e| CliError::io(path.display().to_string(), e)),
            None => Ok(Box::new(io::stdin().lock())),
        }
    }
}

fn create(path: &PathBuf) -> Result<File, CliError> {
    File::create(path).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn print_json(report: &impl serde::Serialize) -> Result<(), CliError> {
    let line = serde_json::to_string(report).expect("report serializes");
    writeln!(io::stdout(), "{line}").map_err(|e| CliError::io("writing report", e))
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Run(args) => {
            let config = args.config()?;
            print_json(&run(&config, args.input()?)?)
        }
        Command::Verify(args) => {
            let config = args.config()?;
            print_json(&verify(&config, args.input()?)?)
        }
        Command::Gen(args) => {
            let spec = GenSpec {
                kind: match args.kind {
                    GenKindArg::Nu => GenKind::Nu,
                    GenKindArg::Random => GenKind::Random,
                    GenKindArg::Planted => GenKind::Planted,
                },
                length: args.length,
                sigma: args.sigma,
                seed: args.seed,
                planted: args.planted_len,
            };
            let bytes = generate_bytes(&spec)?;
            create(&args.out)?
                .write_all(&bytes)
                .map_err(|e| CliError::io(args.out.display().to_string(), e))
        }
        Command::Bench(args) => {
            let cases = parse_grid(&args.grid)?;
            let rows = run_grid(&cases)?;
            write_csv(&rows, create(&args.out)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("palstream: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
