//! Batch timing. Every job runs in a child process so that a timed-out job
//! can be killed without disturbing the others.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Duration;

use clap::{Args, Parser};
use wait_timeout::ChildExt;

use crate::{RunArgs, EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, EXIT_TIMEOUT};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// File with one job per line, written like the arguments of `run`.
    /// Blank lines and lines starting with '#' are skipped.
    jobs_file: PathBuf,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-job limit in milliseconds, overriding the jobs' own settings.
    #[arg(long)]
    timeout: Option<u64>,
    /// Run each job this many times and report the median time.
    #[arg(long, default_value_t = 1)]
    repeat: u32,
    /// Number of jobs to run at once.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Parser)]
#[command(no_binary_name = true, args_override_self = true)]
struct JobLine {
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    Timeout,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Timeout => "timeout",
            Self::Error => "error",
        }
    }
}

#[derive(Debug)]
struct Record {
    job_id: usize,
    operation: String,
    inputs: String,
    status: Status,
    time_us: Option<u128>,
    states_out: String,
    transitions_out: String,
    verdict: String,
}

struct Job {
    id: usize,
    tokens: Vec<String>,
}

fn error_record(job: &Job) -> Record {
    Record {
        job_id: job.id,
        operation: job.tokens.first().cloned().unwrap_or_default(),
        inputs: job.tokens.iter().skip(1).filter(|t| !t.starts_with("--")).cloned().collect::<Vec<_>>().join(" "),
        status: Status::Error,
        time_us: None,
        states_out: String::new(),
        transitions_out: String::new(),
        verdict: String::new(),
    }
}

enum Attempt {
    Done { time_us: u128, summary: Vec<String> },
    Timeout,
    Failed,
}

fn attempt(tokens: &[String], dir: &Path, timeout: Duration, timeout_override: Option<u64>) -> Attempt {
    let Ok(exe) = std::env::current_exe() else {
        return Attempt::Failed;
    };
    let mut cmd = Command::new(exe);
    cmd.arg("run").args(tokens).arg("--report");
    if let Some(ms) = timeout_override {
        cmd.arg("--timeout").arg(ms.to_string());
    }
    let spawned = cmd
        .current_dir(dir)
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn();
    let Ok(mut child) = spawned else {
        return Attempt::Failed;
    };
    // a little slack so the child's own timer normally fires first
    let status = match child.wait_timeout(timeout + Duration::from_millis(500)) {
        Ok(Some(status)) => status,
        Ok(None) => {
            let _ = child.kill();
            let _ = child.wait();
            return Attempt::Timeout;
        }
        Err(_) => return Attempt::Failed,
    };
    let code = status.code().map(|c| c as u8);
    if code == Some(EXIT_TIMEOUT) {
        return Attempt::Timeout;
    }
    if code != Some(EXIT_OK) && code != Some(EXIT_NEGATIVE) {
        return Attempt::Failed;
    }
    let mut out = String::new();
    if child.stdout.take().map(|mut s| s.read_to_string(&mut out)).is_none() {
        return Attempt::Failed;
    }
    let summary: Vec<String> = out.split_whitespace().map(str::to_owned).collect();
    match summary.first().and_then(|t| t.parse().ok()) {
        Some(time_us) if summary.len() == 4 => Attempt::Done { time_us, summary },
        _ => Attempt::Failed,
    }
}

fn run_job(job: &Job, dir: &Path, args: &BenchArgs) -> Record {
    let Ok(parsed) = JobLine::try_parse_from(&job.tokens) else {
        return error_record(job);
    };
    let run = parsed.run;
    let timeout = args.timeout.map_or(run.timeout(), Duration::from_millis);
    let mut record = Record {
        operation: run.op().name(),
        inputs: run.inputs().join(" "),
        ..error_record(job)
    };
    let mut times = Vec::new();
    for _ in 0..args.repeat.max(1) {
        match attempt(&job.tokens, dir, timeout, args.timeout) {
            Attempt::Done { time_us, summary } => {
                times.push(time_us);
                let field = |i: usize| if summary[i] == "-" { String::new() } else { summary[i].clone() };
                record.states_out = field(1);
                record.transitions_out = field(2);
                record.verdict = field(3);
            }
            Attempt::Timeout => {
                record.status = Status::Timeout;
                return record;
            }
            Attempt::Failed => return record,
        }
    }
    times.sort_unstable();
    record.status = Status::Ok;
    record.time_us = Some(times[times.len() / 2]);
    record
}

fn read_jobs(path: &Path) -> io::Result<Vec<Job>> {
    let text = fs::read_to_string(path)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, line)| Job {
            id: i + 1,
            tokens: line.split_whitespace().map(str::to_owned).collect(),
        })
        .collect())
}

fn write_csv(records: &[Record], sink: Box<dyn Write>) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([
        "job_id",
        "operation",
        "inputs",
        "status",
        "time_us",
        "states_out",
        "transitions_out",
        "verdict",
    ])?;
    for r in records {
        w.write_record([
            r.job_id.to_string(),
            r.operation.clone(),
            r.inputs.clone(),
            r.status.as_str().to_owned(),
            r.time_us.map(|t| t.to_string()).unwrap_or_default(),
            r.states_out.clone(),
            r.transitions_out.clone(),
            r.verdict.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_bench(args: BenchArgs) -> u8 {
    let jobs = match read_jobs(&args.jobs_file) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {}: {e}", args.jobs_file.display());
            return EXIT_ERROR;
        }
    };
    let dir = args
        .jobs_file
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."))
        .to_path_buf();

    let slots: Vec<Mutex<Option<Record>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|scope| {
        for _ in 0..args.jobs.max(1).min(jobs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let record = run_job(job, &dir, &args);
                *slots[i].lock().unwrap() = Some(record);
            });
        }
    });
    let records: Vec<Record> = slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("every job ran"))
        .collect();

    let sink: Box<dyn Write> = match &args.out {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_ERROR;
            }
        },
        None => Box::new(io::stdout()),
    };
    if let Err(e) = write_csv(&records, sink) {
        eprintln!("error: {e}");
        return EXIT_ERROR;
    }
    EXIT_OK
}
