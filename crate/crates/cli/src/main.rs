//! `hasserec`: command-line front end for the recurrence library.
//!
//! Every command prints one JSON line on stdout. Exit codes: 0 success,
//! 2 membership violation, 3 invalid input, 4 usage error.

mod commands;
mod problem;
mod roots;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hasserec::RingDescriptor;

use crate::problem::ProblemFile;

#[derive(Debug, Parser)]
#[command(
    name = "hasserec",
    version,
    about = "Exact linear recurrences over Z, Q and F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct FileArg {
    /// Problem file (JSON); `-` reads stdin.
    #[arg(long)]
    file: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that `seq` satisfies the recurrence.
    Check(FileArg),
    /// Extend `init` to the requested length; prints the problem with `seq` filled in.
    Extend {
        #[command(flatten)]
        file: FileArg,
        /// Target length.
        #[arg(long)]
        to: usize,
    },
    /// Solution basis built from `roots`.
    Basis {
        #[command(flatten)]
        file: FileArg,
        /// Prefix length printed per basis sequence (default 2n).
        #[arg(long)]
        len: Option<usize>,
    },
    /// Coordinates of `seq` (or `init`) in the solution basis.
    Represent(FileArg),
    /// N-th term of the solution starting with `init`.
    Term {
        #[command(flatten)]
        file: FileArg,
        #[arg(short = 'N', value_name = "N")]
        index: String,
        /// Allow N > 10^5 over Z or Q, where terms can be enormous.
        #[arg(long)]
        allow_big: bool,
    },
    /// Divided derivative of a polynomial.
    Hasse {
        /// `int`, `rat` or `mod:P`.
        #[arg(long)]
        ring: String,
        /// JSON array of coefficients, lowest degree first.
        #[arg(long)]
        poly: String,
        #[arg(short = 'n')]
        order: usize,
    },
    /// Prefix of the sequence s(alpha, n).
    BasisSeq {
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(short = 'n')]
        order: usize,
        #[arg(long)]
        len: usize,
    },
    /// Exhaustive root search for `char_poly` over a prime field (p < 2^20).
    /// A convenience for preparing `roots`; not part of the solver.
    FindRoots(FileArg),
}

/// A failed command: the message goes to stderr.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Invalid(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 3,
            Failure::Usage(_) => 4,
        }
    }
}

impl From<hasserec::Error> for Failure {
    fn from(e: hasserec::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// One line of stdout plus the exit code (0 or 2).
pub struct Output {
    pub line: String,
    pub code: u8,
}

impl Output {
    pub fn ok(line: String) -> Self {
        Output { line, code: 0 }
    }
}

fn read_problem(arg: &FileArg) -> Result<ProblemFile, Failure> {
    let text = if arg.file.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&arg.file)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", arg.file.display())))?
    };
    serde_json::from_str(&text)
        .map_err(|e| Failure::Invalid(format!("malformed problem file: {e}")))
}

fn parse_ring(s: &str) -> Result<RingDescriptor, Failure> {
    s.parse()
        .map_err(|e: hasserec::Error| Failure::Usage(e.to_string()))
}

fn execute(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Check(file) => commands::check(&read_problem(&file)?),
        Command::Extend { file, to } => commands::extend(&read_problem(&file)?, to),
        Command::Basis { file, len } => commands::basis(&read_problem(&file)?, len),
        Command::Represent(file) => commands::represent(&read_problem(&file)?),
        Command::Term {
            file,
            index,
            allow_big,
        } => {
            let index = index.parse().map_err(|_| {
                Failure::Usage(format!("-N expects a natural number, got {index:?}"))
            })?;
            commands::term(&read_problem(&file)?, &index, allow_big)
        }
        Command::Hasse { ring, poly, order } => {
            let coeffs: Vec<problem::ElemText> = serde_json::from_str(&poly)
                .map_err(|e| Failure::Usage(format!("--poly expects a JSON array: {e}")))?;
            commands::hasse(&parse_ring(&ring)?, &coeffs, order)
        }
        Command::BasisSeq {
            ring,
            alpha,
            order,
            len,
        } => commands::basis_seq(&parse_ring(&ring)?, &alpha, order, len),
        Command::FindRoots(file) => roots::find_roots(&read_problem(&file)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(out) => {
            println!("{}", out.line);
            ExitCode::from(out.code)
        }
        Err(failure) => {
            let (Failure::Usage(msg) | Failure::Invalid(msg)) = &failure;
            eprintln!("error: {msg}");
            ExitCode::from(failure.code())
        }
    }
}
