//! `tercet`: certification of rank decompositions of ternary forms.
//!
//! JSON in (file path or `-` for standard input), JSON out on standard
//! output, diagnostics on standard error. Exit codes: 0 positive verdict,
//! 1 negative verdict (certify: not certified; gup: position fails),
//! 2 malformed input or exceeded budget.

mod input;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use input::{DecSlot, InputDocument, InputError};
use tercet::certifier::{certify, CertifyOptions};
use tercet::gup::{gup_check, GupOptions};
use tercet::hilbert::profile;
use tercet::oracle::{all_decompositions, OracleOptions};
use tercet::prooflab::analyze_pair;
use tercet::{Error, Prefilter};

#[derive(Parser)]
#[command(name = "tercet", version, about = "identifiability certificates for ternary forms")]
struct Cli {
    /// Number of worker threads for subset scans (outputs are identical for
    /// any value).
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,

    /// Screen determinant tests over Q through a random 31-bit prime before
    /// exact recomputation of the zeros. Never changes any answer.
    #[arg(long, global = true)]
    modular_prefilter: bool,

    /// Budget for subset scans (overrides the document's "cap").
    #[arg(long, global = true, value_name = "M")]
    cap: Option<u64>,

    /// Seed reserved for randomized data-generation helpers. Certification
    /// logic never consumes it; accepted so replay scripts can carry it.
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identifiability pipeline on a (form, decomposition) pair.
    Certify(InputArg),
    /// Decide general uniform position for a point set.
    Gup(InputArg),
    /// Hilbert profile of a point set.
    Hilbert(InputArg),
    /// Instrument a pair of decompositions of one form.
    Prooflab(InputArg),
    /// Exhaustively enumerate length-k expressions over a prime field.
    Oracle(OracleArg),
    /// Largest certifiable length per degree: max k with 8k < d^2 + 2d.
    BoundTable(BoundRange),
}

#[derive(Args)]
struct InputArg {
    /// Path of the JSON input document, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct OracleArg {
    /// Path of the JSON input document, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Report scanned-subset counts on standard error every N subsets.
    #[arg(long, value_name = "N")]
    progress: Option<u64>,
}

#[derive(Args)]
struct BoundRange {
    #[arg(long)]
    from: u32,
    #[arg(long)]
    to: u32,
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

fn emit_error(kind: &str, message: String) -> ExitCode {
    let obj = ErrorObject {
        error: ErrorBody { kind, message },
    };
    println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
    eprintln!("error: {}", obj.error.message);
    ExitCode::from(2)
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn read_input(arg: &InputArg) -> Result<InputDocument, InputError> {
    let text = if arg.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| InputError(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&arg.input)
            .map_err(|e| InputError(format!("cannot read {}: {e}", arg.input)))?
    };
    InputDocument::parse(&text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.parallel {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
        {
            return emit_error("input-error", format!("cannot configure thread pool: {e}"));
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(RunError::Input(e)) => emit_error("input-error", e.0),
        Err(RunError::Core(Error::CapExceeded { needed, cap })) => emit_error(
            "cap-exceeded",
            format!("{needed} determinant tests needed, cap is {cap}"),
        ),
        Err(RunError::Core(e)) => emit_error("input-error", e.to_string()),
    }
}

enum RunError {
    Input(InputError),
    Core(Error),
}

impl From<InputError> for RunError {
    fn from(e: InputError) -> Self {
        RunError::Input(e)
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Core(e)
    }
}

fn run(cli: &Cli) -> Result<ExitCode, RunError> {
    let parallel = cli.parallel.is_some_and(|n| n > 1);
    let gup_options = |doc_cap: Option<u64>| {
        let mut o = GupOptions {
            parallel,
            ..GupOptions::default()
        };
        if let Some(cap) = cli.cap.or(doc_cap) {
            o.cap = cap;
        }
        if cli.modular_prefilter {
            o.prefilter = Some(Prefilter::random());
        }
        o
    };

    match &cli.command {
        Command::Certify(arg) => {
            let doc = read_input(arg)?;
            doc.restrict(&["field", "d", "form", "decomposition", "cap"])?;
            let field = doc.field()?;
            let dec = doc.decomposition(field, DecSlot::First)?;
            let form = doc.form(field)?;
            let opts = CertifyOptions {
                gup: gup_options(doc.cap),
            };
            let cert = certify(form.as_ref(), &dec, &opts)?;
            emit(&cert);
            Ok(if cert.is_certified() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gup(arg) => {
            let doc = read_input(arg)?;
            doc.restrict(&["field", "points", "cap"])?;
            let field = doc.field()?;
            let points = doc.points(field)?;
            let report = gup_check(&points, &gup_options(doc.cap))?;
            emit(&report);
            Ok(if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Hilbert(arg) => {
            let doc = read_input(arg)?;
            doc.restrict(&["field", "points"])?;
            let field = doc.field()?;
            let points = doc.points(field)?;
            let prof = profile(&points)?;
            emit(&prof);
            Ok(ExitCode::SUCCESS)
        }
        Command::Prooflab(arg) => {
            let doc = read_input(arg)?;
            doc.restrict(&["field", "d", "form", "decomposition", "decomposition2"])?;
            let field = doc.field()?;
            let dec1 = doc.decomposition(field, DecSlot::First)?;
            let dec2 = doc.decomposition(field, DecSlot::Second)?;
            let form = match doc.form(field)? {
                Some(f) => f,
                None => tercet::geometry::synthesize(&dec1)?,
            };
            let analysis = analyze_pair(&form, &dec1, &dec2)?;
            emit(&analysis);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(arg) => {
            let doc = read_input(&InputArg {
                input: arg.input.clone(),
            })?;
            doc.restrict(&["field", "d", "form", "k", "cap"])?;
            let field = doc.field()?;
            let form = doc
                .form(field)?
                .ok_or_else(|| InputError("missing field \"form\"".into()))?;
            let k = doc
                .k
                .ok_or_else(|| InputError("missing field \"k\"".into()))?;
            let mut opts = OracleOptions {
                parallel,
                progress_every: arg.progress,
                ..OracleOptions::default()
            };
            if let Some(cap) = cli.cap.or(doc.cap) {
                opts.cap = cap;
            }
            let result = all_decompositions(&form, k, &opts)?;
            emit(&result);
            Ok(ExitCode::SUCCESS)
        }
        Command::BoundTable(range) => {
            if range.from < 1 || range.from > range.to {
                return Err(RunError::Input(InputError(
                    "bound-table needs 1 <= from <= to".into(),
                )));
            }
            #[derive(Serialize)]
            struct Row {
                d: u32,
                k_max: u64,
            }
            #[derive(Serialize)]
            struct Table {
                table: Vec<Row>,
            }
            let table: Vec<Row> = (range.from..=range.to)
                .map(|d| {
                    let rhs = d as u64 * d as u64 + 2 * d as u64;
                    // Largest k with 8k < rhs.
                    Row {
                        d,
                        k_max: rhs.div_ceil(8).saturating_sub(1),
                    }
                })
                .collect();
            emit(&Table { table });
            Ok(ExitCode::SUCCESS)
        }
    }
}
