//! The `worms` command line.
//!
//! Exit status: 0 success, 1 usage error, 2 unparsable input, 3 input outside
//! an operation's domain, 4 self-test failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::correspondence::{o_map, word_of};
use crate::gadget::{decode_biorder, encode_biorder, Biorder};
use crate::normal::{enumerate_normal, normalize, NormalWord};
use crate::order::compare;
use crate::ordinal::{cofinal, omega_tail, psi, Ordinal};
use crate::selftest;
use crate::word::{enumerate_words, Symbol, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "worms", version, about = "Word ordinal notations below epsilon_0")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two words; prints <, = or >.
    Cmp { a: String, b: String },
    /// Normal form of a word.
    Nf { a: String },
    /// Append a symbol to a normal word and renormalize.
    Diamond { n: Symbol, a: String },
    /// The ordinal of a word (normalized first).
    Ord { a: String },
    /// The normal word of an ordinal.
    Word {
        alpha: String,
        #[arg(long, default_value_t = 0)]
        base: Symbol,
    },
    /// Increment the last exponent of an ordinal.
    Psi { alpha: String },
    /// The n-th element of a limit ordinal's fundamental sequence.
    Cofinal { alpha: String, n: u64 },
    /// The omega-tail of an ordinal.
    Tail { alpha: String },
    /// List words in shortlex order.
    Enum {
        #[arg(long, default_value_t = 3)]
        alphabet: Symbol,
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
        /// Only normal words.
        #[arg(long)]
        nf: bool,
    },
    /// Encode a biorder file as a word.
    Encode { file: PathBuf },
    /// Decode a word into a biorder.
    Decode { a: String },
    /// Run every invariant suite.
    Selftest {
        #[arg(long, default_value_t = 3)]
        alphabet: Symbol,
        #[arg(long, default_value_t = 5)]
        maxlen: usize,
    },
}

enum Failure {
    Parse(String),
    Domain(String),
}

fn word(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(|e| Failure::Parse(format!("word `{text}`: {e}")))
}

fn ordinal(text: &str) -> Result<Ordinal, Failure> {
    text.parse().map_err(|e| Failure::Parse(format!("ordinal `{text}`: {e}")))
}

fn normal(text: &str) -> Result<NormalWord, Failure> {
    NormalWord::new(word(text)?).map_err(|e| Failure::Domain(e.to_string()))
}

fn domain<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Domain(e.to_string()))
}

// Text lines plus the JSON value for the same result.
struct Output {
    lines: Vec<String>,
    json: Value,
    status: i32,
}

impl Output {
    fn line(s: impl ToString) -> Self {
        let s = s.to_string();
        Output { json: json!(s), lines: vec![s], status: EXIT_OK }
    }
}

fn execute(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Cmp { a, b } => {
            let v = compare(&word(&a)?, &word(&b)?);
            Output::line(match v {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            })
        }
        Command::Nf { a } => Output::line(normalize(&word(&a)?)),
        Command::Diamond { n, a } => Output::line(normal(&a)?.diamond(n)),
        Command::Ord { a } => Output::line(domain(o_map(&normalize(&word(&a)?), 0))?),
        Command::Word { alpha, base } => Output::line(word_of(&ordinal(&alpha)?, base)),
        Command::Psi { alpha } => Output::line(psi(&ordinal(&alpha)?)),
        Command::Cofinal { alpha, n } => Output::line(domain(cofinal(&ordinal(&alpha)?, n))?),
        Command::Tail { alpha } => Output::line(omega_tail(&ordinal(&alpha)?)),
        Command::Enum { alphabet, maxlen, nf } => {
            let words: Vec<String> = if nf {
                enumerate_normal(alphabet, maxlen).iter().map(ToString::to_string).collect()
            } else {
                enumerate_words(alphabet, maxlen).iter().map(ToString::to_string).collect()
            };
            Output { json: json!(words), lines: words, status: EXIT_OK }
        }
        Command::Encode { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))?;
            let m = Biorder::from_json(&text)
                .map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))?;
            Output::line(encode_biorder(&m))
        }
        Command::Decode { a } => {
            let m = domain(decode_biorder(&normal(&a)?))?;
            Output {
                lines: vec![m.to_json()],
                json: serde_json::to_value(&m).expect("serializable"),
                status: EXIT_OK,
            }
        }
        Command::Selftest { alphabet, maxlen } => {
            let reports = selftest::run(alphabet, maxlen);
            let lines = reports
                .iter()
                .map(|r| match &r.failure {
                    None => format!("ok    {} ({} cases, {:.2}s)", r.suite, r.cases, r.seconds),
                    Some(f) => format!("FAIL  {}: {} at {}", r.suite, f.invariant, f.counterexample),
                })
                .collect();
            let status = if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_SELFTEST };
            Output { lines, json: serde_json::to_value(&reports).expect("serializable"), status }
        }
    })
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(output) => {
            let written = match format {
                Format::Text => output.lines.iter().try_for_each(|l| writeln!(out, "{l}")),
                Format::Json => writeln!(out, "{}", json!({ "result": output.json })),
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            output.status
        }
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Parse(m) => (EXIT_PARSE, m),
                Failure::Domain(m) => (EXIT_DOMAIN, m),
            };
            if format == Format::Json {
                let _ = writeln!(out, "{}", json!({ "error": message, "code": code }));
            }
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}
