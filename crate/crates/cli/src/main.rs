use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lecalc::commands::{self, Format, InputSpec, Outcome, RunConfig};
use lecalc::corpus::Corpus;
use lecalc::error::{CliError, EXIT_MATH, EXIT_OK, EXIT_USAGE};
use lecalc::selftest;
use lecalc_core::config::DEFAULT_BUDGET;

/// Exact Lê numbers, polar data and equimultiplicity verdicts for
/// hypersurfaces with line singularities.
#[derive(Parser)]
#[command(name = "lecalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a single germ.
    Invariants(InputArgs),
    /// Decomposition, slice records and theorem verdicts of a family.
    Family {
        #[command(flatten)]
        input: InputArgs,
        /// Accept topological V-equisingularity as a hypothesis.
        #[arg(long)]
        assert_equisingular: bool,
        /// Accept irreducibility of the generic polar curve as a hypothesis.
        #[arg(long)]
        assert_gamma1_irreducible: bool,
    },
    /// Iomdine-Lê-Massey tables at t = 0 and generic t.
    Ilm {
        #[command(flatten)]
        input: InputArgs,
        /// Values of j, comma separated (default: four from 2+lambda0).
        #[arg(long, value_delimiter = ',')]
        j: Option<Vec<u32>>,
    },
    /// Runs the bundled acceptance matrix.
    Selftest {
        #[command(flatten)]
        run: RunArgs,
        /// Read the corpus from this directory instead of the bundled copy.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Expression to analyse.
    #[arg(short = 'e', long = "expr", allow_hyphen_values = true, conflicts_with = "file", required_unless_present = "file")]
    expr: Option<String>,
    /// Input file (`vars:` line, optional `param:` line, expression).
    #[arg(short = 'f', long)]
    file: Option<PathBuf>,
    /// Ring variables in order, comma separated.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Parameter name.
    #[arg(long)]
    param: Option<String>,
    /// Reorder the variables by 1-based positions, e.g. 2,3,1.
    #[arg(long)]
    permute: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Seed for random specializations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Reduction steps allowed per basis computation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

impl InputArgs {
    fn config(self) -> RunConfig {
        let input = match (self.expr, self.file) {
            (Some(e), _) => InputSpec::Expr(e),
            (None, Some(f)) => InputSpec::File(f),
            (None, None) => unreachable!("clap requires an input"),
        };
        RunConfig {
            input,
            vars: self.vars,
            param: self.param,
            seed: self.run.seed,
            budget: self.run.budget,
            format: self.run.format.into(),
            assert_equisingular: false,
            assert_gamma1_irreducible: false,
            permute: self.permute,
            j_values: None,
        }
    }
}

fn emit(outcome: Result<Outcome, CliError>, format: Format) -> i32 {
    match outcome {
        Ok(o) => {
            print!("{}", o.render(format));
            o.exit
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> i32 {
    eprintln!("lecalc: {e}");
    e.exit_code()
}

fn selftest_main(run: RunArgs, corpus: Option<PathBuf>) -> i32 {
    let corpus = match corpus {
        Some(dir) => Corpus::from_dir(&dir),
        None => Corpus::bundled(),
    };
    let report = corpus.and_then(|c| selftest::run(&c, run.seed, run.budget));
    match report {
        Ok(r) => {
            print!("{}", r.render(run.format.into()));
            if r.pass {
                EXIT_OK
            } else {
                EXIT_MATH
            }
        }
        Err(e) => fail(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match cli.command {
        Command::Invariants(input) => {
            let cfg = input.config();
            emit(commands::invariants(&cfg), cfg.format)
        }
        Command::Family { input, assert_equisingular, assert_gamma1_irreducible } => {
            let mut cfg = input.config();
            cfg.assert_equisingular = assert_equisingular;
            cfg.assert_gamma1_irreducible = assert_gamma1_irreducible;
            emit(commands::family(&cfg), cfg.format)
        }
        Command::Ilm { input, j } => {
            let mut cfg = input.config();
            cfg.j_values = j;
            emit(commands::ilm(&cfg), cfg.format)
        }
        Command::Selftest { run, corpus } => selftest_main(run, corpus),
    };
    ExitCode::from(code as u8)
}
