//! Batch computation over many `(pair, kind)` jobs and oracle prefix checks.
//!
//! Jobs are independent, so the parallel path is a plain data-parallel map.
//! [`map_jobs_seq`] is always available; [`map_jobs`] uses rayon when the
//! `parallel` feature is on and falls back to the sequential map otherwise.

use num_bigint::BigInt;

use crate::error::Result;
use crate::oracle::{FormPair, OmegaTable};
use crate::springer::{poincare_series, Kind, PoincareResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Job {
    pub pair: FormPair,
    pub kind: Kind,
}

/// Every `(pair, kind)` with `1 ≤ d1 ≤ d2 ≤ bound`, pairs in order.
pub fn table_jobs(bound: u32, kinds: &[Kind]) -> Vec<Job> {
    FormPair::all_up_to(bound)
        .into_iter()
        .flat_map(|pair| kinds.iter().map(move |&kind| Job { pair, kind }))
        .collect()
}

pub fn map_jobs_seq<T, F>(jobs: &[Job], f: F) -> Vec<T>
where
    F: Fn(&Job) -> T,
{
    jobs.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_jobs<T, F>(jobs: &[Job], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Job) -> T + Sync + Send,
{
    use rayon::prelude::*;
    jobs.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_jobs<T, F>(jobs: &[Job], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Job) -> T + Sync + Send,
{
    map_jobs_seq(jobs, f)
}

/// Runs `f` with at most `jobs` worker threads.
#[cfg(feature = "parallel")]
pub fn with_workers<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<T: Send>(_jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}

pub fn compute(job: &Job, terms: usize) -> Result<PoincareResult> {
    let r = poincare_series(job.pair, job.kind);
    if terms == 0 {
        Ok(r)
    } else {
        r.with_series(terms)
    }
}

pub fn compute_all(jobs: &[Job], terms: usize) -> Vec<Result<PoincareResult>> {
    map_jobs(jobs, |j| compute(j, terms))
}

pub fn compute_all_seq(jobs: &[Job], terms: usize) -> Vec<Result<PoincareResult>> {
    map_jobs_seq(jobs, |j| compute(j, terms))
}

/// Dimensions of degrees `0 .. terms` from the weight-counting oracle.
pub fn oracle_prefix(pair: FormPair, kind: Kind, terms: usize) -> Vec<BigInt> {
    if terms == 0 {
        return Vec::new();
    }
    let table = OmegaTable::build(pair, terms as u32 - 1);
    let dims = match kind {
        Kind::Invariants => table.invariant_dims(),
        Kind::Covariants => table.covariant_dims(),
    };
    dims.into_iter().map(BigInt::from).collect()
}

/// First coefficient where a series disagrees with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub got: BigInt,
    pub want: BigInt,
}

/// Compares the first `terms` coefficients of `r` with the oracle.
pub fn check_prefix(r: &PoincareResult, terms: usize) -> Result<Option<Mismatch>> {
    if terms == 0 {
        return Ok(None);
    }
    let got = r.value.series_prefix(terms - 1)?;
    let want = oracle_prefix(r.pair, r.kind, terms);
    Ok(first_mismatch(&got, &want))
}

pub fn first_mismatch(got: &[BigInt], want: &[BigInt]) -> Option<Mismatch> {
    let zero = BigInt::default();
    (0..got.len().max(want.len())).find_map(|n| {
        let g = got.get(n).unwrap_or(&zero);
        let w = want.get(n).unwrap_or(&zero);
        (g != w).then(|| Mismatch {
            n,
            got: g.clone(),
            want: w.clone(),
        })
    })
}
