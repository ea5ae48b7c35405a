//! `automata`: run automata operations on `.mata` files and regexes, and
//! time batches of such runs.

mod bench;
mod input;
mod ops;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use automata::formats::{serialize_mata, to_dot};
use automata::{Alphabet, Nfa, OrdVector, Symbol};
use clap::{Args, Parser, Subcommand, ValueEnum};

use input::{format_word, load_inputs, symbol_names};
use ops::{execute, Operation, Outcome, Policy, Request};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;
pub const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "automata", version, about = "Finite automata operations on .mata files and regexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one operation and print the resulting automaton or verdict.
    #[command(args_override_self = true)]
    Run(RunArgs),
    /// Run every job in a file and print one CSV row per job.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Mata,
    Dot,
}

#[derive(Args, Clone, Debug)]
pub struct RunArgs {
    #[arg(value_enum)]
    op: Operation,
    /// `.mata` files or `regex:PATTERN` arguments.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Alphabet for complement and universality, as comma-separated symbol
    /// names. Defaults to the symbols occurring in the inputs.
    #[arg(long)]
    alphabet: Option<String>,
    /// Limit on the operation's wall time, in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    timeout: u64,
    /// Exploration strategy for inclusion and universality.
    #[arg(long, value_enum, default_value_t)]
    policy: Policy,
    /// Exit with status 1 when a verdict is negative.
    #[arg(long)]
    strict: bool,
    /// Run the operation this many times and report the median time on stderr.
    #[arg(long, default_value_t = 1)]
    repeat: u32,
    /// Word for membership, as comma-separated symbol names (empty for ε).
    #[arg(long)]
    word: Option<String>,
    /// Print a single machine-readable summary line instead of the result.
    #[arg(long, hide = true)]
    report: bool,
}

impl RunArgs {
    pub fn timeout(&self) -> Duration {
        Duration::from_millis(self.timeout)
    }

    pub fn op(&self) -> Operation {
        self.op
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }
}

struct Prepared {
    alphabet: Alphabet,
    inputs: Vec<Nfa>,
    sigma: OrdVector<Symbol>,
    word: Vec<Symbol>,
}

fn prepare(args: &RunArgs) -> Result<Prepared, String> {
    let mut alphabet = Alphabet::new();
    let inputs = load_inputs(&args.inputs, &mut alphabet)?;
    let (lo, hi) = args.op.arity();
    if inputs.len() < lo || inputs.len() > hi {
        let expected = if hi == usize::MAX { format!("at least {lo}") } else if lo == hi { lo.to_string() } else { format!("{lo} to {hi}") };
        return Err(format!("{} takes {expected} automata, got {}", args.op.name(), inputs.len()));
    }
    let sigma = match &args.alphabet {
        Some(list) => symbol_names(list).map(|name| alphabet.intern(name)).collect(),
        None => {
            let used = inputs.iter().fold(OrdVector::new(), |acc, n| acc.union(&n.used_symbols()));
            if args.op.needs_alphabet() && !args.report {
                eprintln!("notice: no --alphabet given; using the {} symbols occurring in the input", used.len());
            }
            used
        }
    };
    let word = match (&args.word, args.op) {
        (Some(list), _) => symbol_names(list)
            .map(|name| alphabet.symbol(name).ok_or_else(|| format!("symbol '{name}' does not occur in the inputs")))
            .collect::<Result<_, _>>()?,
        (None, Operation::Membership) => return Err("membership needs --word".into()),
        (None, _) => Vec::new(),
    };
    Ok(Prepared {
        alphabet,
        inputs,
        sigma,
        word,
    })
}

fn median(mut v: Vec<u128>) -> u128 {
    v.sort_unstable();
    v[v.len() / 2]
}

fn render(outcome: &Outcome, format: Format, alphabet: &Alphabet) -> String {
    match outcome {
        Outcome::Automata(nfas) => nfas
            .iter()
            .map(|nfa| match format {
                Format::Mata => serialize_mata(nfa, Some(alphabet)),
                Format::Dot => to_dot(nfa, Some(alphabet)),
            })
            .collect(),
        Outcome::Verdict { holds, witness } => {
            let mut text = format!("{holds}\n");
            if let Some(w) = witness {
                text += &format!("witness: {}\n", format_word(w, alphabet));
            }
            text
        }
    }
}

/// Summary line read back by `bench`.
fn report_line(outcome: &Outcome, time_us: u128) -> String {
    match outcome {
        Outcome::Automata(nfas) => {
            let states: usize = nfas.iter().map(Nfa::num_states).sum();
            let transitions: usize = nfas.iter().map(Nfa::num_transitions).sum();
            format!("{time_us} {states} {transitions} -")
        }
        Outcome::Verdict { holds, .. } => format!("{time_us} - - {holds}"),
    }
}

fn cmd_run(args: RunArgs) -> u8 {
    let prepared = match prepare(&args) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    let (tx, rx) = mpsc::channel();
    let repeat = args.repeat.max(1);
    let (op, policy) = (args.op, args.policy);
    let worker_inputs = (prepared.inputs, prepared.sigma, prepared.word);
    thread::spawn(move || {
        let (inputs, sigma, word) = worker_inputs;
        let req = Request {
            op,
            inputs: &inputs,
            sigma: &sigma,
            policy,
            word: &word,
        };
        let mut times = Vec::new();
        let mut last = None;
        for _ in 0..repeat {
            let start = Instant::now();
            let result = execute(&req);
            times.push(start.elapsed().as_micros());
            let failed = result.is_err();
            last = Some(result);
            if failed {
                break;
            }
        }
        let _ = tx.send((last.expect("at least one run"), median(times)));
    });

    let (result, time_us) = match rx.recv_timeout(args.timeout()) {
        Ok(r) => r,
        Err(_) => {
            eprintln!("timeout: {} did not finish within {} ms", args.op.name(), args.timeout);
            return EXIT_TIMEOUT;
        }
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    if repeat > 1 && !args.report {
        eprintln!("time_us: {time_us} (median of {repeat})");
    }

    let text = if args.report {
        report_line(&outcome, time_us) + "\n"
    } else {
        render(&outcome, args.format, &prepared.alphabet)
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_ERROR;
            }
        }
        None => print!("{text}"),
    }
    match outcome {
        Outcome::Verdict { holds: false, .. } if args.strict => EXIT_NEGATIVE,
        _ => EXIT_OK,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Bench(args) => bench::cmd_bench(args),
    })
}
