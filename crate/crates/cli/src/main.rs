//! `catpow`: command-line front end to the `catpow` library.

mod commands;
mod selftest;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "catpow", version, about = "Exact checks for symmetric and exterior powers of categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; TSV is a projection of the JSON report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Bound on worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the Schur cocycle table of S_n and optionally verify it.
    Cocycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
        /// Random triples checked when n is too large for the exhaustive check.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Decide c-regularity of every conjugacy class of S_n.
    RegularClasses {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Criterion)]
        mode: ModeArg,
    },
    /// Complexified K-group ranks.
    Kdim {
        #[arg(value_enum)]
        kind: KdimKind,
        #[arg(long)]
        n: usize,
    },
    /// 2-character table over commuting-pair representatives.
    TwoChar {
        /// `sign:n=N` or `perm:FILE`.
        #[arg(long)]
        rep: String,
    },
    /// Graded character series of a symmetric or exterior power.
    Power {
        #[arg(value_enum)]
        kind: PowerKind,
        #[arg(long)]
        gset: PathBuf,
        /// Element in cycle notation on the points of the G-set.
        #[arg(long, default_value = "()")]
        g: String,
        #[arg(long, default_value = "()")]
        h: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long)]
        oracle_check: bool,
    },
    /// Koszul complex checks in the Grothendieck-group model.
    Koszul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify_homotopy: bool,
        #[arg(long)]
        exactness: bool,
        #[arg(long)]
        reciprocity_order: Option<usize>,
        /// Number of points for the reciprocity check.
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Derived)]
        convention: ConventionArg,
    },
    /// List partitions of n.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PartitionKind::All)]
        kind: PartitionKind,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Run the built-in verification suite.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Criterion,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KdimKind {
    Sym,
    Ext,
    Clifford,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PowerKind {
    Sym,
    Ext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Derived,
    LeftLiteral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PartitionKind {
    All,
    Strict,
    OddParts,
    PRegular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

/// The result of one command.
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub ok: bool,
}

/// A failure before or during computation; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<Report, UsageError> {
    match &cli.command {
        Command::Cocycle { n, verify, samples } => commands::cocycle(*n, *verify, *samples, cli.seed),
        Command::RegularClasses { n, mode } => commands::regular_classes(*n, *mode),
        Command::Kdim { kind, n } => commands::kdim(*kind, *n),
        Command::TwoChar { rep } => commands::two_char(rep),
        Command::Power { kind, gset, g, h, order, oracle_check } => {
            commands::power(*kind, gset, g, h, *order, *oracle_check)
        }
        Command::Koszul { n, verify_homotopy, exactness, reciprocity_order, d, convention } => {
            commands::koszul(*n, *verify_homotopy, *exactness, *reciprocity_order, *d, *convention)
        }
        Command::Partitions { n, kind, p } => commands::partitions(*n, *kind, *p),
        Command::Selftest { level } => Ok(selftest::run(*level, cli.seed)),
    }
}

fn emit(report: &Report, format: Format) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &report.json)?;
            writeln!(out)
        }
        Format::Tsv => {
            writeln!(out, "{}", report.header.join("\t"))?;
            for row in &report.rows {
                writeln!(out, "{}", row.join("\t"))?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&report, cli.format) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
