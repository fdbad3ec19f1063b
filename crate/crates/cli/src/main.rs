use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use defshadow::report::Report;
use defshadow::suite::{resolve_target, run_suite, Options, Suite};
use defshadow::Error;

/// Exact checks of first-order deformations of noncommutative *-algebras.
#[derive(Parser)]
#[command(name = "defshadow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and run the associativity checks.
    Validate {
        /// An `.alg` path or a built-in fixture name.
        doc: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Run {
        /// An `.alg` path or a built-in fixture name.
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Longest random word in the associativity sample.
    #[arg(long)]
    degree_bound: Option<usize>,
    /// Seed for randomized samples.
    #[arg(long)]
    seed: Option<u64>,
    /// Record elapsed time per check.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Common {
    fn options(&self) -> Options {
        let mut o = Options::default();
        if let Some(d) = self.degree_bound {
            o.degree_bound = d;
        }
        if let Some(s) = self.seed {
            o.seed = s;
        }
        o.timings = self.timings;
        o
    }
}

fn execute(target: &str, suite: Suite, common: &Common) -> Result<Report, Error> {
    let t = resolve_target(target)?;
    let report = run_suite(&t, suite, &common.options())?;
    let text = match common.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &common.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { doc, common } => execute(doc, Suite::Validate, common),
        Command::Run { target, suite, common } => {
            let suite = suite.parse().expect("clap restricts suite names");
            execute(target, suite, common)
        }
    };
    match result {
        Ok(r) if r.passed() => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("defshadow: {e}");
            ExitCode::from(2)
        }
    }
}
