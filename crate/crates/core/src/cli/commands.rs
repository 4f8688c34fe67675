use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use super::cache::{atomic_write, file_name, Cache};
use super::{KindArg, RunArgs, EXIT_IO, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use crate::batch::{
    check_prefix, first_mismatch, map_jobs, oracle_prefix, table_jobs, with_workers, Job,
};
use crate::canonical::{render, Format};
use crate::error::Error;
use crate::oracle::FormPair;
use crate::springer::{poincare_series, Kind, PoincareResult};

/// Terms checked before a cache entry is reused.
const CACHE_CHECK_TERMS: usize = 10;
const VERIFY_TERMS: usize = 20;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Math(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Math(Error::InvalidDegree) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
            CliError::Math(_) => EXIT_MISMATCH,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Io(s) => f.write_str(s),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

fn io_err(what: impl fmt::Display, e: io::Error) -> CliError {
    CliError::Io(format!("{what}: {e}"))
}

type Outcome = Result<i32, CliError>;

fn pair_of(a: &RunArgs) -> Result<FormPair, CliError> {
    match (a.d1, a.d2) {
        (Some(d1), Some(d2)) => Ok(FormPair::new(d1, d2)?),
        _ => Err(CliError::Usage("--d1 and --d2 are required".into())),
    }
}

fn label(pair: FormPair, kind: Kind) -> String {
    format!("{}_{}_{}", kind.prefix(), pair.d1(), pair.d2())
}

/// Sends `text` to `--out` if given, else to stdout.
fn emit(a: &RunArgs, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &a.out {
        Some(path) => atomic_write(path, text.as_bytes()).map_err(|e| io_err(path.display(), e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| io_err("stdout", e)),
    }
}

pub fn compute(a: &RunArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> Outcome {
    let pair = pair_of(a)?;
    let kinds = a.kind.unwrap_or(KindArg::Both).kinds();
    let terms = a.terms.unwrap_or(0);
    let format = Format::from(a.format);
    let mut text = String::new();
    for &kind in kinds {
        let mut r = poincare_series(pair, kind);
        if terms > 0 {
            r = r.with_series(terms)?;
        }
        let body = render(&r, format);
        if kinds.len() > 1 && format != Format::Json {
            text.push_str(&format!("{}:\n", label(pair, kind)));
        }
        text.push_str(&body);
        text.push('\n');
    }
    emit(a, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn verify(a: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let pair = pair_of(a)?;
    let kinds = a.kind.unwrap_or(KindArg::Both).kinds();
    let terms = a.terms.unwrap_or(VERIFY_TERMS);
    let cache = a.cache_dir.as_deref().map(Cache::new);
    let mut report = String::new();
    let mut failed = false;
    for &kind in kinds {
        let name = label(pair, kind);
        let (r, source) = match cache.as_ref().map(|c| c.load(pair, kind)) {
            Some(Ok(Some(r))) => (r, "cache"),
            Some(Err(msg)) => {
                let _ = writeln!(stderr, "unreadable cache entry {msg}");
                report.push_str(&format!("FAIL {name}: unreadable cache entry\n"));
                failed = true;
                continue;
            }
            _ => (poincare_series(pair, kind), "computed"),
        };
        let got = if terms == 0 {
            Vec::new()
        } else {
            r.value.series_prefix(terms - 1)?
        };
        let want = oracle_prefix(pair, kind, terms);
        for (n, (g, w)) in got.iter().zip(&want).enumerate() {
            let status = if g == w { "PASS" } else { "FAIL" };
            report.push_str(&format!("{status} {name} z^{n}: series {g}, oracle {w}\n"));
        }
        match first_mismatch(&got, &want) {
            None => report.push_str(&format!("PASS {name} ({source}, {terms} terms)\n")),
            Some(m) => {
                failed = true;
                report.push_str(&format!(
                    "FAIL {name} ({source}): first difference at z^{}: series {}, oracle {}\n",
                    m.n, m.got, m.want
                ));
            }
        }
    }
    emit(a, &report, stdout)?;
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}

enum PairStatus {
    Ok { cached: bool },
    Mismatch(String),
    Io(String),
}

/// Loads a cache entry if it passes the oracle prefix check, otherwise
/// computes and stores a fresh value.
fn obtain(job: &Job, cache: Option<&Cache>, log: &mut Vec<String>) -> (PoincareResult, bool) {
    let name = label(job.pair, job.kind);
    if let Some(c) = cache {
        match c.load(job.pair, job.kind) {
            Ok(Some(r)) => match check_prefix(&r, CACHE_CHECK_TERMS) {
                Ok(None) => return (r, true),
                Ok(Some(m)) => log.push(format!(
                    "{name}: cached entry fails at z^{} (series {}, oracle {}), recomputing",
                    m.n, m.got, m.want
                )),
                Err(e) => log.push(format!("{name}: cached entry unusable ({e}), recomputing")),
            },
            Ok(None) => {}
            Err(msg) => log.push(format!("unreadable cache entry {msg}, recomputing")),
        }
    }
    (poincare_series(job.pair, job.kind), false)
}

fn run_job(
    job: &Job,
    a: &RunArgs,
    out: &std::path::Path,
    cache: Option<&Cache>,
) -> (PairStatus, Vec<String>) {
    let start = Instant::now();
    let mut log = Vec::new();
    let (mut r, cached) = obtain(job, cache, &mut log);
    let name = label(job.pair, job.kind);
    if !cached {
        if let Some(c) = cache {
            if let Err(e) = c.store(&r) {
                log.push(format!("{name}: cache write failed: {e}"));
            }
        }
    }
    let status = (|| {
        match check_prefix(&r, CACHE_CHECK_TERMS) {
            Ok(None) => {}
            Ok(Some(m)) => {
                return PairStatus::Mismatch(format!(
                    "{name}: z^{}: series {}, oracle {}",
                    m.n, m.got, m.want
                ))
            }
            Err(e) => return PairStatus::Mismatch(format!("{name}: {e}")),
        }
        let terms = a.terms.unwrap_or(0);
        if terms > 0 {
            r = match r.clone().with_series(terms) {
                Ok(r) => r,
                Err(e) => return PairStatus::Mismatch(format!("{name}: {e}")),
            };
        }
        let mut text = render(&r, Format::Json);
        text.push('\n');
        let path = out.join(file_name(job.pair, job.kind));
        match atomic_write(&path, text.as_bytes()) {
            Ok(()) => PairStatus::Ok { cached },
            Err(e) => PairStatus::Io(format!("{}: {e}", path.display())),
        }
    })();
    let how = if cached { "cached" } else { "computed" };
    log.push(format!("{name} {how} in {:.3?}", start.elapsed()));
    (status, log)
}

pub fn table(a: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let bound = match (a.max, a.d1, a.d2) {
        (Some(m), _, _) => m,
        (None, Some(x), Some(y)) => x.max(y),
        (None, Some(x), None) | (None, None, Some(x)) => x,
        (None, None, None) => return Err(CliError::Usage("table needs --max".into())),
    };
    if bound == 0 {
        return Err(Error::InvalidDegree.into());
    }
    let out: PathBuf = a.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&out).map_err(|e| io_err(out.display(), e))?;
    let cache = a.cache_dir.as_deref().map(Cache::new);
    let jobs = table_jobs(bound, a.kind.unwrap_or(KindArg::Both).kinds());
    let start = Instant::now();
    let results = with_workers(a.jobs as usize, || {
        map_jobs(&jobs, |job| run_job(job, a, &out, cache.as_ref()))
    });

    let (mut written, mut reused, mut mismatches, mut io_failures) = (0, 0, 0, 0);
    for (status, log) in &results {
        for line in log {
            let _ = writeln!(stderr, "{line}");
        }
        match status {
            PairStatus::Ok { cached } => {
                written += 1;
                reused += usize::from(*cached);
            }
            PairStatus::Mismatch(msg) => {
                mismatches += 1;
                let _ = writeln!(stderr, "FAIL {msg}");
            }
            PairStatus::Io(msg) => {
                io_failures += 1;
                let _ = writeln!(stderr, "error: {msg}");
            }
        }
    }
    let _ = writeln!(
        stderr,
        "{written} of {} files written to {} ({reused} from cache) in {:.3?}",
        jobs.len(),
        out.display(),
        start.elapsed()
    );
    writeln!(stdout, "{written} files written").map_err(|e| io_err("stdout", e))?;
    Ok(if mismatches > 0 {
        EXIT_MISMATCH
    } else if io_failures > 0 {
        EXIT_IO
    } else {
        EXIT_OK
    })
}
