//! Command-line front end: verify individual claims or the whole suite and
//! emit JSON or markdown reports.
//!
//! Exit codes: 0 when every requested claim is verified, 1 on a failed
//! claim, 2 on an indeterminate position, 3 on usage errors.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use flop_verify::report::{emit, emit_set, Format, ReportSet, VerificationReport, SCHEMA_VERSION};
use flop_verify::verify::{
    compare_end_algebras, run_all, verify_lemma, verify_tilting, LemmaId, Side, SweepOptions,
};

#[derive(Parser)]
#[command(
    name = "flop-verify",
    version,
    about = "Exact cohomology checks for the tilting bundles of a 5-fold flop"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Md => Format::Markdown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CliSide {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one cohomology lemma (ids 3.1 through 3.6).
    Lemma {
        #[arg(long)]
        id: String,
        #[arg(long, allow_negative_numbers = true)]
        k_max: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m_max: Option<i64>,
        #[arg(long)]
        degree_max: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Ext vanishing for all sixteen tilting summand pairs on one side.
    Tilting {
        #[arg(long, value_enum)]
        side: CliSide,
        #[arg(long, default_value_t = 50)]
        degree_max: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Degree-by-degree comparison of the two endomorphism algebras.
    Compare {
        #[arg(long, default_value_t = 20)]
        degree_max: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run every claim with its default bounds.
    All {
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

fn configure_threads() {
    if let Ok(value) = std::env::var("FLOP_VERIFY_THREADS") {
        if let Ok(n) = value.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn print_single(report: &VerificationReport, format: OutputFormat) -> i32 {
    println!("{}", emit(report, format.into()));
    report.verdict.exit_code()
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    configure_threads();
    let code = match cli.command {
        Command::Lemma {
            id,
            k_max,
            m_max,
            degree_max,
            format,
        } => {
            let lemma = match LemmaId::parse(&id) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    std::process::exit(3);
                }
            };
            match verify_lemma(
                lemma,
                SweepOptions {
                    k_max,
                    m_max,
                    degree_max,
                },
            ) {
                Ok(report) => print_single(&report, format),
                Err(e) => {
                    eprintln!("error: {e}");
                    3
                }
            }
        }
        Command::Tilting {
            side,
            degree_max,
            format,
        } => {
            let side = match side {
                CliSide::Plus => Side::Plus,
                CliSide::Minus => Side::Minus,
            };
            print_single(&verify_tilting(side, degree_max), format)
        }
        Command::Compare { degree_max, format } => {
            print_single(&compare_end_algebras(degree_max), format)
        }
        Command::All { format } => {
            let set: ReportSet = run_all(SweepOptions::default());
            debug_assert_eq!(set.schema, SCHEMA_VERSION);
            println!("{}", emit_set(&set, format.into()));
            set.exit_code()
        }
    };
    std::process::exit(code);
}
