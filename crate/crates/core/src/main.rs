//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for unreadable or malformed input, 2 when
//! a computation fails (including a failed `verify`), 3 when `--cross-check`
//! finds the two Hermite algorithms disagreeing.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ore_hermite::detform::{is_unimodular, ore_ddet_degree};
use ore_hermite::euclid::gcrd_ext;
use ore_hermite::hermite::{hermite, hermite_naive, verify_hermite, HermitePair, HermiteReport};
use ore_hermite::text::{format_block, format_matrix_kv, parse_document, Document};
use ore_hermite::{OreMatrix, OrePoly};

#[derive(Parser)]
#[command(name = "ore-hermite", version, about = "Hermite forms of Ore polynomial matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hermite form by the linear-system method
    Hermite(HermiteArgs),
    /// Hermite form by Euclidean elimination
    HermiteNaive(HermiteArgs),
    /// Greatest common right divisor of two polynomials, with cofactors
    Gcrd(Io),
    /// Least common left multiple of two polynomials, with cofactors
    Lclm(Io),
    /// Degree of the Dieudonne determinant of a square matrix
    DdetDegree(Io),
    /// Whether a square matrix is unimodular
    Unimodular(Io),
    /// Check a triple A, H, U (three blocks in one document)
    Verify(Io),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args)]
struct Io {
    /// Input file; standard input when omitted or `-`
    input: Option<PathBuf>,
    /// Output file; standard output when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct HermiteArgs {
    #[command(flatten)]
    io: Io,
    /// Also print the unimodular transform U
    #[arg(long)]
    emit_u: bool,
    /// Append a verification report
    #[arg(long)]
    report: bool,
    /// Use Euclidean elimination instead of linear systems
    #[arg(long)]
    oracle: bool,
    /// Run both algorithms and compare
    #[arg(long)]
    cross_check: bool,
}

enum Failure {
    Input(String),
    Compute(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Compute(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Compute(m) | Failure::Mismatch(m) => m,
        }
    }
}

fn compute(e: ore_hermite::Error) -> Failure {
    Failure::Compute(e.to_string())
}

fn read_doc(io: &Io) -> Result<Document, Failure> {
    let text = match io.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        }
    };
    parse_document(&text).map_err(|e| Failure::Input(format!("parse error: {e}")))
}

fn one_matrix(doc: Document) -> Result<OreMatrix, Failure> {
    if doc.matrices.len() != 1 || !doc.polys.is_empty() {
        return Err(Failure::Input(format!(
            "expected one matrix, found {} matrices and {} loose polynomials",
            doc.matrices.len(),
            doc.polys.len()
        )));
    }
    Ok(doc.matrices.into_iter().next().expect("one matrix"))
}

/// Two polynomials: two loose lines, or a 1x2 / 2x1 matrix.
fn poly_pair(doc: Document) -> Result<(OrePoly, OrePoly), Failure> {
    let mut polys = doc.polys;
    for m in doc.matrices {
        polys.extend(m.entries().iter().cloned());
    }
    match <[OrePoly; 2]>::try_from(polys) {
        Ok([a, b]) => Ok((a, b)),
        Err(v) => Err(Failure::Input(format!("expected two polynomials, found {}", v.len()))),
    }
}

fn emit(io: &Io, out: &str) -> Result<(), Failure> {
    match &io.output {
        Some(p) => fs::write(p, out).map_err(|e| Failure::Compute(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(out.as_bytes())
            .map_err(|e| Failure::Compute(format!("stdout: {e}"))),
    }
}

fn render_report(report: &HermiteReport, format: Format) -> String {
    let kv = report.to_string();
    match format {
        Format::Kv => kv,
        Format::Text => kv.lines().map(|l| format!("# {l}\n")).collect(),
    }
}

fn run_hermite(args: &HermiteArgs, naive: bool) -> Result<(), Failure> {
    let a = one_matrix(read_doc(&args.io)?)?;
    let pair = if naive || args.oracle {
        hermite_naive(&a).0
    } else {
        hermite(&a)
    };
    if args.cross_check {
        let other = if naive || args.oracle {
            hermite(&a)
        } else {
            hermite_naive(&a).0
        };
        cross_check(&a, &pair, &other)?;
    }
    let mut out = String::new();
    match args.io.format {
        Format::Text => {
            out.push_str(&format!("ring {}\n", a.ring()));
            out.push_str(&format_block(&pair.h));
            if args.emit_u {
                out.push_str(&format_block(&pair.u));
            }
        }
        Format::Kv => {
            out.push_str(&format!("ring={}\n", a.ring()));
            out.push_str(&format_matrix_kv("H", &pair.h));
            if args.emit_u {
                out.push_str(&format_matrix_kv("U", &pair.u));
            }
        }
    }
    if args.report {
        out.push_str(&render_report(&verify_hermite(&a, &pair.h, &pair.u), args.io.format));
    }
    emit(&args.io, &out)
}

/// `H` is unique for every input; `U` only when `A` is square of full rank.
fn cross_check(a: &OreMatrix, x: &HermitePair, y: &HermitePair) -> Result<(), Failure> {
    if x.h != y.h {
        return Err(Failure::Mismatch("Hermite forms differ between algorithms".into()));
    }
    let full = a.is_square() && (0..a.rows()).all(|i| !x.h.row_is_zero(i));
    if full && x.u != y.u {
        return Err(Failure::Mismatch("transforms differ between algorithms".into()));
    }
    Ok(())
}

fn run_gcrd(io: &Io, lclm: bool) -> Result<(), Failure> {
    let (a, b) = poly_pair(read_doc(io)?)?;
    let cert = gcrd_ext(&a, &b).map_err(compute)?;
    let lines: Vec<(&str, String)> = if lclm {
        if a.is_zero() || b.is_zero() {
            return Err(Failure::Compute("operand must be nonzero".into()));
        }
        vec![
            ("lclm", cert.lclm(&a).to_string()),
            ("s", cert.s.to_string()),
            ("t", cert.t.to_string()),
        ]
    } else {
        vec![
            ("gcrd", cert.g.to_string()),
            ("u", cert.u.to_string()),
            ("v", cert.v.to_string()),
        ]
    };
    let sep = if io.format == Format::Kv { "=" } else { ": " };
    let out: String = lines.iter().map(|(k, v)| format!("{k}{sep}{v}\n")).collect();
    emit(io, &out)
}

fn run_ddet(io: &Io) -> Result<(), Failure> {
    let m = one_matrix(read_doc(io)?)?;
    let d = ore_ddet_degree(&m).map_err(compute)?;
    let out = match io.format {
        Format::Text => format!("{d}\n"),
        Format::Kv => format!("ddet_degree={d}\n"),
    };
    emit(io, &out)
}

fn run_unimodular(io: &Io) -> Result<(), Failure> {
    let m = one_matrix(read_doc(io)?)?;
    if !m.is_square() {
        return Err(Failure::Compute(format!(
            "matrix is not square ({}x{})",
            m.rows(),
            m.cols()
        )));
    }
    let u = is_unimodular(&m);
    let out = match io.format {
        Format::Text => format!("{u}\n"),
        Format::Kv => format!("unimodular={u}\n"),
    };
    emit(io, &out)
}

fn run_verify(io: &Io) -> Result<(), Failure> {
    let doc = read_doc(io)?;
    let [a, h, u] = <[OreMatrix; 3]>::try_from(doc.matrices).map_err(|v| {
        Failure::Input(format!("verify needs three matrices A, H, U; found {}", v.len()))
    })?;
    let report = verify_hermite(&a, &h, &u);
    emit(io, &report.to_string())?;
    if report.verified() {
        Ok(())
    } else {
        Err(Failure::Compute(format!(
            "verification failed: {}",
            report.failures().join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Hermite(args) => run_hermite(args, false),
        Command::HermiteNaive(args) => run_hermite(args, true),
        Command::Gcrd(io) => run_gcrd(io, false),
        Command::Lclm(io) => run_gcrd(io, true),
        Command::DdetDegree(io) => run_ddet(io),
        Command::Unimodular(io) => run_unimodular(io),
        Command::Verify(io) => run_verify(io),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
