//! Every order triple with entries in `2..=n−2`, embedded in `S_n`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::perm::{product, Permutation};

use super::{solve_unordered, SolveError, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub n: usize,
    /// Orders in slot order, not necessarily sorted.
    pub orders: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellFailure {
    pub cell: Cell,
    pub error: SolveError,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub n_max: usize,
    pub cells: usize,
    pub passed: usize,
    pub failures: Vec<CellFailure>,
}

impl SurveyReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cells
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SurveyError {
    #[error("survey bound must be at least 4, got {0}")]
    TooSmall(usize),
}

/// Solved triples keyed by slot-ordered orders, shared across degrees.
pub type SurveyCache = BTreeMap<[usize; 3], [Permutation; 3]>;

/// All cells with `4 ≤ n ≤ n_max`, in increasing `n` then lexicographic
/// order.
pub fn cells(n_max: usize) -> impl Iterator<Item = Cell> {
    (4..=n_max).flat_map(|n| {
        let top = n - 2;
        (2..=top).flat_map(move |a| {
            (2..=top).flat_map(move |b| (2..=top).map(move |c| Cell { n, orders: [a, b, c] }))
        })
    })
}

/// Solves the cell's orders (through `cache`), embeds the triple in
/// `S_n` and checks product and per-slot orders.
pub fn check_cell(cell: Cell, seed: u64, cache: &mut SurveyCache) -> Result<(), CellFailure> {
    let fail = |error| CellFailure { cell, error };
    let triple = match cache.get(&cell.orders) {
        Some(t) => t.clone(),
        None => {
            let t = solve_unordered(cell.orders, seed).map_err(fail)?;
            cache.insert(cell.orders, t.clone());
            t
        }
    };
    let degree = triple[0].degree();
    if degree > cell.n {
        return Err(fail(SolveError::Verification(vec![Violation::DegreeTooLarge {
            degree,
            limit: cell.n,
        }])));
    }
    let embedded: Vec<Permutation> = triple
        .iter()
        .map(|p| p.embed(cell.n))
        .collect::<Result<_, _>>()
        .map_err(|e| fail(e.into()))?;
    let mut violations = Vec::new();
    if !product(&embedded).map(|p| p.is_identity()).unwrap_or(false) {
        violations.push(Violation::ProductNotIdentity);
    }
    for ((p, &k), slot) in embedded.iter().zip(&cell.orders).zip([super::Slot::X, super::Slot::Y, super::Slot::Z]) {
        if p.order() != k {
            violations.push(Violation::WrongOrder {
                slot,
                expected: k,
                found: p.order(),
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(fail(SolveError::Verification(violations)))
    }
}

/// Sequential survey with seed 0.
pub fn survey(n_max: usize) -> Result<SurveyReport, SurveyError> {
    if n_max < 4 {
        return Err(SurveyError::TooSmall(n_max));
    }
    let mut cache = SurveyCache::new();
    let mut report = SurveyReport {
        n_max,
        cells: 0,
        passed: 0,
        failures: Vec::new(),
    };
    for cell in cells(n_max) {
        report.cells += 1;
        match check_cell(cell, 0, &mut cache) {
            Ok(()) => report.passed += 1,
            Err(f) => report.failures.push(f),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_surveys() {
        let r = survey(4).unwrap();
        assert_eq!(r.cells, 1);
        assert!(r.is_clean());
        let r = survey(6).unwrap();
        assert_eq!(r.cells, 1 + 8 + 27);
        assert!(r.is_clean());
        assert_eq!(cells(6).filter(|c| c.n == 6).count(), 27);
        assert_eq!(survey(3), Err(SurveyError::TooSmall(3)));
    }
}
