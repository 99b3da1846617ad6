//! Command-line front end.
//!
//! stdout carries data only. Exit codes: 0 success, 1 domain error (printed
//! to stderr as `ERROR <kind>: <detail>`), 2 usage error.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};

use crate::codec::{self, parse_list, Combinadic};
use crate::error::Tagged;
use crate::ranking::{self, Combination};
use crate::verify::{self, VerifyReport};
use crate::{parse_natural, Error, Natural};

const ABOUT: &str = "Combinatorial number system: encode, decode, step, rank and verify.";

const LONG_ABOUT: &str = "Combinatorial number system: encode, decode, step, rank and verify.

Representations are written in descending coefficient order, c_r,...,c_1
(e.g. 4,3,0 for 7 with three terms). Combinations are written in ascending
element order, c_1,...,c_r (e.g. 0,3,4). Bitstrings are MSB first: the
leftmost character stands for the highest element index.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.";

#[derive(Debug, Parser)]
#[command(name = "combinadics", about = ABOUT, long_about = LONG_ABOUT, version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A comma-separated list of naturals, parsed but not yet validated.
#[derive(Debug, Clone)]
struct NatList(Vec<Natural>);

fn nat_list(s: &str) -> Result<NatList, String> {
    parse_list(s).map(NatList).map_err(|e| e.to_string())
}

fn natural(s: &str) -> Result<Natural, String> {
    parse_natural(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct RepInput {
    /// Coefficients c_r,...,c_1 in descending order; read one per line from
    /// stdin when omitted
    #[arg(value_name = "C_r,...,C_1", value_parser = nat_list)]
    rep: Option<NatList>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Representation of a natural number with the given number of terms
    Encode {
        #[arg(value_parser = natural)]
        m: Natural,
        /// Number of binomial terms r
        #[arg(long, short = 'r')]
        terms: usize,
    },
    /// Value of a representation
    Decode(RepInput),
    /// Representation of the value plus one
    Succ(RepInput),
    /// Representation of the value minus one
    Pred(RepInput),
    /// Colexicographic rank of a combination
    Rank {
        /// Elements c_1,...,c_r in ascending order; read one per line from
        /// stdin when omitted
        #[arg(value_name = "c_1,...,c_r", value_parser = nat_list)]
        comb: Option<NatList>,
    },
    /// Combination at a colexicographic rank
    Unrank {
        #[arg(value_parser = natural)]
        x: Natural,
        /// Combination size
        #[arg(short = 'k')]
        k: usize,
    },
    /// Consecutive combinations in colexicographic order, one per line
    Enumerate {
        /// Combination size
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, default_value = "0", value_parser = natural)]
        start: Natural,
        #[arg(long, default_value = "10", value_parser = natural)]
        count: Natural,
    },
    /// MSB-first bitstring of a combination
    Bits {
        #[arg(value_name = "c_1,...,c_r", value_parser = nat_list)]
        comb: NatList,
        /// Universe size (bitstring length)
        #[arg(short = 'n')]
        n: usize,
    },
    /// Combination encoded by an MSB-first bitstring
    Unbits {
        /// Read one per line from stdin when omitted
        bits: Option<String>,
    },
    /// Split a rank range into contiguous parts, one `start end` pair per line
    Split {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_parser = natural)]
        start: Natural,
        #[arg(long, value_parser = natural)]
        end: Natural,
        #[arg(long)]
        parts: usize,
    },
    /// Exhaustive existence and uniqueness sweep
    Verify {
        #[arg(long, short = 'r')]
        terms: usize,
        /// Exclusive bound on the top coefficient
        #[arg(long)]
        bound: usize,
    },
    /// Check the Pascal, Hockey-Stick and gap identities
    Identities {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        rmax: usize,
    },
}

enum Failure {
    Domain(Error),
    Io(std::io::Error),
    /// The command ran but its report failed.
    Report,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return e.exit_code();
        }
    };

    let outcome = dispatch(cli.command, stdin, stdout).and_then(|()| Ok(stdout.flush()?));
    match outcome {
        Ok(()) => 0,
        Err(Failure::Report) => 1,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "{}", Tagged(&e));
            1
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Encode { m, terms } => {
            writeln!(out, "{}", codec::encode(&m, terms)?)?;
        }
        Command::Decode(input) => {
            for_each_rep(input, stdin, out, |rep| Ok(codec::decode(&rep).to_string()))?;
        }
        Command::Succ(input) => {
            for_each_rep(input, stdin, out, |rep| {
                Ok(codec::successor(&rep).to_string())
            })?;
        }
        Command::Pred(input) => {
            for_each_rep(input, stdin, out, |rep| {
                Ok(codec::predecessor(&rep)?.to_string())
            })?;
        }
        Command::Rank { comb } => {
            let rank_one = |list: Vec<Natural>| -> Result<String, Error> {
                Ok(ranking::rank(&Combination::new(list)?).to_string())
            };
            match comb {
                Some(NatList(list)) => writeln!(out, "{}", rank_one(list)?)?,
                None => for_each_line(stdin, out, |line| rank_one(parse_list(line)?))?,
            }
        }
        Command::Unrank { x, k } => {
            writeln!(out, "{}", ranking::unrank(&x, k)?)?;
        }
        Command::Enumerate { k, start, count } => {
            for comb in ranking::enumerate(k, &start, &count)? {
                writeln!(out, "{comb}")?;
            }
        }
        Command::Bits {
            comb: NatList(list),
            n,
        } => {
            writeln!(
                out,
                "{}",
                ranking::to_bitstring(&Combination::new(list)?, n)?
            )?;
        }
        Command::Unbits { bits } => match bits {
            Some(bits) => writeln!(out, "{}", ranking::from_bitstring(&bits)?)?,
            None => for_each_line(stdin, out, |line| {
                Ok(ranking::from_bitstring(line)?.to_string())
            })?,
        },
        Command::Split {
            k,
            start,
            end,
            parts,
        } => {
            for (lo, hi) in ranking::split_range(k, &start, &end, parts)? {
                writeln!(out, "{lo} {hi}")?;
            }
        }
        Command::Verify { terms, bound } => {
            emit_report(out, &verify::sweep_uniqueness(terms, bound)?)?;
        }
        Command::Identities { nmax, rmax } => {
            emit_report(out, &verify::sweep_identities(nmax, rmax))?;
        }
    }
    Ok(())
}

fn emit_report(out: &mut dyn Write, report: &VerifyReport) -> Result<(), Failure> {
    write!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Report)
    }
}

fn for_each_rep(
    input: RepInput,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    f: impl Fn(Combinadic) -> Result<String, Error>,
) -> Result<(), Failure> {
    match input.rep {
        Some(NatList(list)) => {
            writeln!(out, "{}", f(codec::validate(list)?)?)?;
            Ok(())
        }
        None => for_each_line(stdin, out, |line| f(line.parse()?)),
    }
}

/// Applies `f` to every non-blank stdin line, stopping at the first error.
fn for_each_line(
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    f: impl Fn(&str) -> Result<String, Error>,
) -> Result<(), Failure> {
    for line in stdin.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        writeln!(out, "{}", f(line)?)?;
    }
    Ok(())
}
