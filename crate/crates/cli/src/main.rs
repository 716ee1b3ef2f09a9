//! `glaisher` command-line tool.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage
//! or i/o errors.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use glaisher::bijection::verify_bijections;
use glaisher::recurrence::{zero_coefficient_set, zero_coefficient_set_square_preset};
use glaisher::sequence::{to_bfile, to_csv, Sequence};
use glaisher::table::{ATable, Source};
use glaisher::{
    a_to_c, b_to_c, build_marked_sets, check_p_square_identity, check_pentagonal, check_square,
    check_square_identity, check_triangular, enumerate_partitions, search_both_square,
    verify_main_theorem, Modulus, PartitionConstraint, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "glaisher",
    version,
    about = "Partition statistics a_k(n), b_{k,m}(n), c_{k,m}(n): tables, checks and searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the grid of a_k(n) values.
    Table {
        /// Values of k, `lo..hi` or a single value.
        #[arg(long = "k")]
        k: String,
        /// Values of n, `lo..hi` or a single value.
        #[arg(long = "n")]
        n: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, value_enum, default_value_t = SourceArg::Gf)]
        source: SourceArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verifier and write its JSON report.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long = "k")]
        k: Option<u64>,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the n found by a search, one per line.
    Search {
        #[arg(value_enum)]
        kind: SearchKind,
        #[arg(long = "k")]
        k: u64,
        #[arg(long = "n-max")]
        n_max: u64,
        /// For zero-coeffs: use (-q^m; q^m) instead of the (q; q^2) preset.
        #[arg(long = "m")]
        m: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a sequence as an OEIS b-file or CSV.
    Export {
        #[arg(value_enum)]
        sequence: SequenceArg,
        #[arg(long = "k")]
        k: Option<u64>,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = ExportFormat::Bfile)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print x -> f(x) for every element of a bijection's domain.
    Demo {
        #[arg(value_enum)]
        map: DemoMap,
        #[arg(long = "k")]
        k: u64,
        #[arg(long = "n")]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Direct,
    Gf,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Main,
    Pentagonal,
    Triangular,
    Square,
    SquareIdentity,
    PSquareIdentity,
    Bijections,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    BothSquare,
    ZeroCoeffs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceArg {
    A,
    P,
    PDistinctOdd,
    B0,
    B1,
    C0,
    C1,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Bfile,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoMap {
    BToC,
    AToC,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<glaisher::Error> for CliError {
    fn from(e: glaisher::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

enum Status {
    Ok,
    MathFailure,
}

fn parse_range(s: &str, what: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid {what} range {s:?}, expected lo..hi or a value"
        ))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: u64 = lo.parse().map_err(|_| bad())?;
    let hi: u64 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn modulus(k: Option<u64>, context: &str) -> Result<Modulus, CliError> {
    let k = k.ok_or_else(|| CliError::Usage(format!("{context} needs --k")))?;
    Ok(Modulus::new(k)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn report_status(report: &VerificationReport) -> Status {
    eprintln!("{report}");
    if report.passed {
        Status::Ok
    } else {
        Status::MathFailure
    }
}

fn run(cli: Cli) -> Result<Status, CliError> {
    match cli.command {
        Command::Table {
            k,
            n,
            format,
            source,
            out,
        } => {
            let ks = parse_range(&k, "k")?
                .map(Modulus::new)
                .collect::<Result<Vec<_>, _>>()?;
            let ns = parse_range(&n, "n")?;
            let source = match source {
                SourceArg::Direct => Source::Direct,
                SourceArg::Gf => Source::Gf,
                SourceArg::Both => Source::Both,
            };
            let table = match ATable::build(&ks, ns, source) {
                Ok(t) => t,
                Err(mismatches) => {
                    for m in &mismatches {
                        eprintln!(
                            "mismatch at n={} k={}: direct {} gf {}",
                            m.n, m.k, m.direct, m.gf
                        );
                    }
                    return Ok(Status::MathFailure);
                }
            };
            let text = match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => format!("{}\n", table.to_json()),
                TableFormat::Pretty => table.to_pretty(),
            };
            emit(&out, &text)?;
            Ok(Status::Ok)
        }
        Command::Verify {
            target,
            k,
            n_max,
            out,
        } => {
            let report = match target {
                VerifyTarget::Main => verify_main_theorem(modulus(k, "verify main")?, n_max),
                VerifyTarget::Pentagonal => {
                    check_pentagonal(modulus(k, "verify pentagonal")?, n_max)
                }
                VerifyTarget::Triangular => {
                    check_triangular(modulus(k, "verify triangular")?, n_max)?
                }
                VerifyTarget::Square => check_square(modulus(k, "verify square")?, n_max)?,
                VerifyTarget::SquareIdentity => {
                    check_square_identity(modulus(k, "verify square-identity")?, n_max)?
                }
                VerifyTarget::PSquareIdentity => check_p_square_identity(n_max),
                VerifyTarget::Bijections => {
                    let (report, counts) =
                        verify_bijections(modulus(k, "verify bijections")?, n_max);
                    eprintln!("round trips: {}", counts.total());
                    report
                }
            };
            emit(&out, &format!("{}\n", report.to_json()))?;
            Ok(report_status(&report))
        }
        Command::Search {
            kind,
            k,
            n_max,
            m,
            out,
        } => {
            let k = Modulus::new(k)?;
            let found = match (kind, m) {
                (SearchKind::BothSquare, None) => search_both_square(k, n_max),
                (SearchKind::BothSquare, Some(_)) => {
                    return Err(CliError::Usage("--m only applies to zero-coeffs".into()))
                }
                (SearchKind::ZeroCoeffs, None) => {
                    zero_coefficient_set_square_preset(k, n_max as usize)
                }
                (SearchKind::ZeroCoeffs, Some(0)) => {
                    return Err(CliError::Usage("--m must be at least 1".into()))
                }
                (SearchKind::ZeroCoeffs, Some(m)) => zero_coefficient_set(k, m, n_max as usize),
            };
            let text: String = found.iter().map(|n| format!("{n}\n")).collect();
            emit(&out, &text)?;
            Ok(Status::Ok)
        }
        Command::Export {
            sequence,
            k,
            n_max,
            format,
            out,
        } => {
            let seq = match sequence {
                SequenceArg::A => Sequence::A(modulus(k, "export a")?),
                SequenceArg::P => Sequence::P,
                SequenceArg::PDistinctOdd => Sequence::PDistinctOdd,
                SequenceArg::B0 => Sequence::B0(modulus(k, "export b0")?),
                SequenceArg::B1 => Sequence::B1(modulus(k, "export b1")?),
                SequenceArg::C0 => Sequence::C0(modulus(k, "export c0")?),
                SequenceArg::C1 => Sequence::C1(modulus(k, "export c1")?),
            };
            let values = seq.values(n_max);
            let text = match format {
                ExportFormat::Bfile => to_bfile(&values),
                ExportFormat::Csv => to_csv(&seq.name(), &values),
            };
            emit(&out, &text)?;
            Ok(Status::Ok)
        }
        Command::Demo { map, k, n, out } => {
            let k = Modulus::new(k)?;
            let mut text = String::new();
            match map {
                DemoMap::BToC => {
                    for x in
                        enumerate_partitions(n, PartitionConstraint::ExactlyOneBaseDivisibleBy(k))
                    {
                        text.push_str(&format!("{x} -> {}\n", b_to_c(&x, k)?));
                    }
                }
                DemoMap::AToC => {
                    let (a, a_prime) = build_marked_sets(n, k);
                    for mp in a.iter().chain(&a_prime) {
                        text.push_str(&format!("{mp} -> {}\n", a_to_c(mp, k)?));
                    }
                }
            }
            emit(&out, &text)?;
            Ok(Status::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::MathFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("glaisher: {e}");
            ExitCode::from(2)
        }
    }
}
