//! Parallel survey over all order triples with entries in `2..=n−2`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use permprod_core::solver::{cells, solve_unordered, SurveyError};

use crate::check::{self, Images};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyFailure {
    pub n: usize,
    pub orders: [usize; 3],
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub max_n: usize,
    pub cells: usize,
    pub passed: usize,
    pub distinct_triples: usize,
    pub failures: Vec<SurveyFailure>,
}

impl SurveySummary {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cells
    }
}

#[derive(Debug, Clone)]
pub struct SurveyRun {
    pub summary: SurveySummary,
    pub elapsed: Duration,
    pub max_solve: Duration,
    pub slowest: Option<[usize; 3]>,
}

type Solved = Result<Vec<Images>, String>;

fn check_cell(n: usize, orders: [usize; 3], solved: &Solved) -> Result<(), String> {
    let triple = solved.as_ref().map_err(Clone::clone)?;
    let degree = triple[0].len();
    if degree > n {
        return Err(format!("degree {degree} exceeds {n}"));
    }
    let embedded: Vec<Images> = triple
        .iter()
        .map(|p| p.iter().copied().chain(degree + 1..=n).collect())
        .collect();
    let failed: Vec<String> = check::tuple_checks(&embedded, &orders)
        .into_iter()
        .filter(|c| !c.ok)
        .map(|c| c.name)
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(format!("failed checks: {}", failed.join(", ")))
    }
}

/// Runs the survey on `jobs` worker threads, or rayon's default.
pub fn run(n_max: usize, seed: u64, jobs: Option<usize>) -> Result<SurveyRun, SurveyError> {
    if n_max < 4 {
        return Err(SurveyError::TooSmall(n_max));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().expect("thread pool");
    Ok(pool.install(|| run_in_pool(n_max, seed)))
}

fn run_in_pool(n_max: usize, seed: u64) -> SurveyRun {
    let start = Instant::now();
    let top = n_max - 2;
    let triples: Vec<[usize; 3]> = (2..=top)
        .flat_map(|a| (2..=top).flat_map(move |b| (2..=top).map(move |c| [a, b, c])))
        .collect();
    let solved: BTreeMap<[usize; 3], (Solved, Duration)> = triples
        .par_iter()
        .map(|&orders| {
            let t = Instant::now();
            let r = solve_unordered(orders, seed)
                .map(|t| t.iter().map(|p| p.images()).collect())
                .map_err(|e| e.to_string());
            (orders, (r, t.elapsed()))
        })
        .collect();
    let (slowest, max_solve) = solved
        .iter()
        .map(|(k, (_, d))| (Some(*k), *d))
        .max_by_key(|&(_, d)| d)
        .unwrap_or((None, Duration::ZERO));

    let all: Vec<_> = cells(n_max).collect();
    let mut failures: Vec<SurveyFailure> = all
        .par_iter()
        .filter_map(|cell| {
            let (r, _) = &solved[&cell.orders];
            check_cell(cell.n, cell.orders, r).err().map(|reason| SurveyFailure {
                n: cell.n,
                orders: cell.orders,
                reason,
            })
        })
        .collect();
    failures.sort_by(|a, b| (a.n, a.orders).cmp(&(b.n, b.orders)));
    let summary = SurveySummary {
        max_n: n_max,
        cells: all.len(),
        passed: all.len() - failures.len(),
        distinct_triples: solved.len(),
        failures,
    };
    SurveyRun {
        summary,
        elapsed: start.elapsed(),
        max_solve,
        slowest,
    }
}
