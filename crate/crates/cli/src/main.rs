//! `hexmagic`: build the hexagon, run the hyperplane, automorphism and
//! pentagram censuses, and check observable configurations.
//!
//! Exit codes: 0 pass, 1 mismatch or invalid input, 2 I/O error,
//! 3 unknown built-in configuration. Argument errors exit with 2.

mod cache;
mod commands;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hexmagic", version, about = "Split Cayley hexagon and magic three-qubit configurations")]
struct Cli {
    /// Worker threads for the parallel censuses.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,

    /// Output encoding; each command supports a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and validate the hexagon.
    Build,
    /// Enumerate and classify all hyperplanes.
    Hyperplanes {
        /// List every hyperplane with its type instead of the census table.
        #[arg(long)]
        list: bool,
    },
    /// Work with a configuration of contexts.
    Config {
        #[command(subcommand)]
        action: ConfigAction,
    },
    /// Count Mermin pentagrams.
    Pentagrams {
        /// Include every pentagram in the output.
        #[arg(long)]
        list: bool,
    },
    /// Compute the automorphism group of the hexagon.
    Aut,
}

#[derive(Subcommand, Debug)]
enum ConfigAction {
    /// Decide whether the configuration is magic.
    Verify(Source),
    /// Complete the configuration's points along hexagon lines.
    Close(Source),
    /// List the hyperplanes containing the configuration's points.
    Contain(Source),
    /// Apply σ^k.
    Replicate {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=6))]
        k: u8,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// A built-in configuration, e.g. "18_2-12_3".
    #[arg(long)]
    name: Option<String>,
    /// A configuration JSON file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

/// A finished run: what to emit, and the exit status it earned.
pub struct Outcome {
    pub body: String,
    pub passed: bool,
}

#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Io(String),
    UnknownBuiltin(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Io(_) => 2,
            Failure::UnknownBuiltin(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Invalid(m) | Failure::Io(m) | Failure::UnknownBuiltin(m) => f.write_str(m),
        }
    }
}

impl From<hexmagic::Error> for Failure {
    fn from(e: hexmagic::Error) -> Self {
        match e {
            hexmagic::Error::UnknownBuiltin(_) => Failure::UnknownBuiltin(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Build => commands::build(fmt),
        Command::Hyperplanes { list } => commands::hyperplanes(fmt, *list),
        Command::Pentagrams { list } => commands::pentagrams(fmt, *list),
        Command::Aut => commands::aut(fmt),
        Command::Config { action } => match action {
            ConfigAction::Verify(s) => commands::verify(fmt, &load(s)?),
            ConfigAction::Close(s) => commands::close(fmt, &load(s)?),
            ConfigAction::Contain(s) => commands::contain(fmt, &load(s)?),
            ConfigAction::Replicate { source, k } => commands::replicate(fmt, &load(source)?, usize::from(*k)),
        },
    }
}

fn load(source: &Source) -> Result<hexmagic::Configuration, Failure> {
    match (&source.name, &source.input) {
        (Some(name), _) => Ok(hexmagic::magic::builtin(name)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let file: hexmagic::magic::ConfigFile =
                serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            Ok(hexmagic::Configuration::from_file(&file)?)
        }
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn emit(out: Option<&PathBuf>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(usize::from(cli.threads)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start thread pool: {e}");
            return ExitCode::from(2);
        }
    };
    let result = pool.install(|| run(&cli)).and_then(|o| emit(cli.out.as_ref(), &o.body).map(|_| o.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
