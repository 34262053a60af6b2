mod input;
mod report;
mod tables;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dynkin_core::catalog::enumerate::EnumError;
use dynkin_core::catalog::oracle::{enumerate_unpruned, MAX_ORACLE_RANK};
use dynkin_core::catalog::verify::{verify_catalog, VerifyOptions};
use dynkin_core::catalog::{Catalog, CatalogError};
use dynkin_core::extend::{extend_finite_to_affine, overextend_affine};
use dynkin_core::CartanMatrix;
use serde::Serialize;

use crate::input::{parse_matrix_input, InputError};
use crate::report::{ClassifyRecord, MatrixRecord, OrbitsRecord, SymmetrizeRecord};

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Seed for the randomized checks in `verify-catalog`.
const SEED_VAR: &str = "DYNKIN_SEED";

#[derive(Parser)]
#[command(name = "dynkin", version, about = "Classify generalized Cartan matrices and catalog hyperbolic Dynkin diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Jsonl,
    Tsv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Append the negative highest root to a finite-type matrix.
    Affine,
    /// Append a vertex joined by a single edge to an affine matrix.
    Overextend,
}

#[derive(Args)]
struct MatrixArgs {
    /// Matrix text; rows on separate lines or separated by `;`.
    #[arg(conflicts_with = "input")]
    matrix: Option<String>,
    /// Read the matrix from PATH, or from stdin when PATH is `-`.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Finite/affine/indefinite type, hyperbolicity, symmetrizer, orbit blocks.
    Classify(MatrixArgs),
    /// Normalized symmetrizer and bilinear form, or an unbalanced cycle.
    Symmetrize(MatrixArgs),
    /// Simple-root orbit blocks from the simply laced skeleton.
    Orbits(MatrixArgs),
    /// Affine extension or overextension.
    Extend {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_enum)]
        mode: Mode,
        /// 1-based vertex to attach to (overextend; default: the last vertex).
        #[arg(long, value_name = "K")]
        zero_vertex: Option<usize>,
    },
    /// Enumerate hyperbolic diagrams and write the catalog.
    Enumerate {
        #[arg(long, value_name = "N", default_value_t = 3)]
        min_rank: usize,
        #[arg(long, value_name = "M", default_value_t = 10)]
        max_rank: usize,
        /// Output file, or `-` for stdout.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = TableFormat::Jsonl)]
        format: TableFormat,
        /// Worker threads (0: one per core).
        #[arg(long, value_name = "J", default_value_t = 0)]
        jobs: usize,
        /// Cross-check ranks up to 5 against the unpruned enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Check every catalog property on a catalog file.
    VerifyCatalog {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Starting height window of the reflection oracle.
        #[arg(long, value_name = "H", default_value_t = 8)]
        height: i64,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
    /// The result was printed; only the exit status remains.
    Reported(u8),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Syntax(_) => Failure::Usage(e.into()),
            InputError::Gcm(_) => Failure::Domain(e.into()),
        }
    }
}

fn domain(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Domain(e.into())
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")
            .map_err(usage)?;
    } else {
        text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(usage)?;
    }
    Ok(text)
}

fn load_matrix(args: &MatrixArgs) -> Result<CartanMatrix, Failure> {
    let text = match (&args.matrix, &args.input) {
        (Some(inline), None) => inline.clone(),
        (None, Some(path)) => read_source(path)?,
        _ => {
            return Err(usage(anyhow::anyhow!(
                "give the matrix inline or with --input PATH"
            )))
        }
    };
    Ok(parse_matrix_input(&text)?)
}

fn emit<T: Serialize>(format: Format, record: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Text => print!("{}", text(record)),
        Format::Json => println!(
            "{}",
            serde_json::to_string(record).expect("records serialize")
        ),
    }
}

fn open_out(path: &PathBuf) -> Result<Box<dyn Write>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufWriter::new(io::stdout().lock())));
    }
    let f = File::create(path)
        .with_context(|| format!("creating {}", path.display()))
        .map_err(usage)?;
    Ok(Box::new(BufWriter::new(f)))
}

fn seed() -> Result<u64, Failure> {
    match std::env::var(SEED_VAR) {
        Err(_) => Ok(0),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(anyhow::anyhow!("{SEED_VAR}=`{s}` is not an unsigned integer"))),
    }
}

fn enumerate(
    min_rank: usize,
    max_rank: usize,
    out: &PathBuf,
    format: TableFormat,
    jobs: usize,
    oracle: bool,
) -> Result<(), Failure> {
    let cat = Catalog::enumerate(min_rank, max_rank, jobs).map_err(|e| match e {
        CatalogError::Enumerate(EnumError::BadRange { .. }) => usage(e),
        other => domain(other),
    })?;
    let mut w = open_out(out)?;
    let written = match format {
        TableFormat::Jsonl => cat.write_jsonl(&mut w).map_err(anyhow::Error::from),
        TableFormat::Tsv => tables::write_tsv(&cat, &mut w).map_err(anyhow::Error::from),
        TableFormat::Latex => tables::write_latex(&cat, &mut w).map_err(anyhow::Error::from),
    };
    written
        .and_then(|()| w.flush().map_err(anyhow::Error::from))
        .with_context(|| format!("writing {}", out.display()))
        .map_err(domain)?;
    drop(w);

    // keep stdout clean for the catalog when it goes there
    let mut summary: Box<dyn Write> = if out.as_os_str() == "-" {
        Box::new(io::stderr())
    } else {
        Box::new(io::stdout())
    };
    let _ = writeln!(
        summary,
        "total={} symmetrizable={}",
        cat.len(),
        cat.symmetrizable_count()
    );
    if oracle {
        let lo = min_rank.max(3);
        let hi = max_rank.min(MAX_ORACLE_RANK);
        let mut mismatched = Vec::new();
        for rank in lo..=hi {
            let reference = enumerate_unpruned(rank).expect("rank within oracle range");
            let ours: Vec<CartanMatrix> = cat
                .entries()
                .iter()
                .filter(|e| e.rank == rank)
                .map(|e| e.matrix.clone())
                .collect();
            let _ = writeln!(
                summary,
                "oracle rank {rank}: pruned={} unpruned={}",
                ours.len(),
                reference.len()
            );
            if ours != reference {
                mismatched.push(rank);
            }
        }
        if lo > hi {
            let _ = writeln!(summary, "oracle: no ranks in 3..={MAX_ORACLE_RANK} requested");
        } else if !mismatched.is_empty() {
            eprintln!("error: oracle disagrees on ranks {mismatched:?}");
            return Err(Failure::Reported(EXIT_VERIFY));
        }
    }
    Ok(())
}

fn verify(input: &PathBuf, height: i64) -> Result<(), Failure> {
    if height < 1 {
        return Err(usage(anyhow::anyhow!("--height must be positive")));
    }
    let f = File::open(input)
        .with_context(|| format!("opening {}", input.display()))
        .map_err(usage)?;
    let cat = Catalog::read_jsonl(BufReader::new(f))
        .with_context(|| format!("loading {}", input.display()))
        .map_err(domain)?;
    let opts = VerifyOptions {
        height,
        max_height: height.saturating_mul(8),
        seed: seed()?,
        ..VerifyOptions::default()
    };
    let report = verify_catalog(&cat, &opts);
    println!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Reported(EXIT_VERIFY))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(args) => {
            let a = load_matrix(&args)?;
            let rec = ClassifyRecord::compute(&a).map_err(domain)?;
            emit(args.format, &rec, ClassifyRecord::to_text);
        }
        Command::Symmetrize(args) => {
            let a = load_matrix(&args)?;
            let rec = SymmetrizeRecord::compute(&a).map_err(domain)?;
            emit(args.format, &rec, SymmetrizeRecord::to_text);
            if !rec.symmetrizable {
                return Err(Failure::Reported(EXIT_DOMAIN));
            }
        }
        Command::Orbits(args) => {
            let a = load_matrix(&args)?;
            emit(args.format, &OrbitsRecord::compute(&a), OrbitsRecord::to_text);
        }
        Command::Extend {
            matrix,
            mode,
            zero_vertex,
        } => {
            let a = load_matrix(&matrix)?;
            let ext = match mode {
                Mode::Affine => {
                    if zero_vertex.is_some() {
                        return Err(usage(anyhow::anyhow!(
                            "--zero-vertex applies to --mode overextend only"
                        )));
                    }
                    extend_finite_to_affine(&a)
                }
                Mode::Overextend => {
                    let k = zero_vertex.unwrap_or(a.rank());
                    if k == 0 {
                        return Err(usage(anyhow::anyhow!("--zero-vertex is 1-based")));
                    }
                    overextend_affine(&a, k - 1)
                }
            }
            .map_err(domain)?;
            emit(matrix.format, &MatrixRecord::new(&ext), MatrixRecord::to_text);
        }
        Command::Enumerate {
            min_rank,
            max_rank,
            out,
            format,
            jobs,
            oracle,
        } => enumerate(min_rank, max_rank, &out, format, jobs, oracle)?,
        Command::VerifyCatalog { input, height } => verify(&input, height)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported(code)) => ExitCode::from(code),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}
