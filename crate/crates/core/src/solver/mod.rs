//! Triples `x, y, z` of orders `a, b, c` with `xyz = 1` in `S_{c+2}`.
//!
//! [`solve`] classifies the sorted orders, builds the triple with the
//! matching construction and re-checks every structural claim through
//! [`verify_structure`] before returning. The result also records which
//! element, if any, carries the single extra transposition, and for the
//! `c`-even constructions a point of the `c`-cycle of `z` fixed by `x` or
//! `y`.

mod classify;
mod survey;
mod verify;

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cycle_type::{ClassError, ClassSpec};
use crate::eks::{realize_full_cycle, realize_near_cycle, relabel_fixed_point, RealizationRequest, RealizeError, Variant};
use crate::perm::{PermError, Permutation, Side};

pub use classify::{class_triple_is_odd, classify, CaseKind, CaseTag, Triple};
pub use survey::{cells, check_cell, survey, Cell, CellFailure, SurveyCache, SurveyError, SurveyReport};
pub use verify::{verify_structure, Violation};

use classify::{lemma5_step, modified_slot};

/// Random draws spent before the realizer switches to its constructive stage.
pub const SOLVER_RETRY_CAP: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    X,
    Y,
    Z,
}

impl Slot {
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::X => "x",
            Slot::Y => "y",
            Slot::Z => "z",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("orders ({a}, {b}, {c}) must satisfy 2 <= a <= b <= c")]
    OutOfRange { a: usize, b: usize, c: usize },
    #[error("orders must all be at least 2, got {0:?}")]
    BadOrders([usize; 3]),
    #[error("construction {0} does not apply to these orders")]
    NotApplicable(CaseKind),
    #[error("no point of the big cycle is fixed by a usable element")]
    NoFixedPoint,
    #[error("glued cycle did not merge into exactly one cycle of the product")]
    GlueFailed,
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("verification failed: {0:?}")]
    Verification(Vec<Violation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub x: Permutation,
    pub y: Permutation,
    pub z: Permutation,
    pub orders: Triple,
    pub case: CaseTag,
    pub exceptional_transposition_holder: Option<Slot>,
    /// A point on the `c`-cycle of `z` fixed by the named element.
    pub fixed_point_on_big_cycle: Option<(Slot, usize)>,
}

impl SolveResult {
    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn elements(&self) -> [&Permutation; 3] {
        [&self.x, &self.y, &self.z]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Built {
    x: Permutation,
    y: Permutation,
    z: Permutation,
}

impl Built {
    fn from_pair(x: Permutation, y: Permutation) -> Result<Self, SolveError> {
        let z = x.compose(&y)?.inverse();
        Ok(Built { x, y, z })
    }

    /// `(y⁻¹, x⁻¹, z⁻¹)`, again a product-one triple.
    fn reversed(&self) -> Self {
        Built {
            x: self.y.inverse(),
            y: self.x.inverse(),
            z: self.z.inverse(),
        }
    }
}

fn cycle(n: usize, pts: &[usize]) -> Permutation {
    Permutation::cycle(n, pts).expect("points in range")
}

fn request(c1: ClassSpec, c2: ClassSpec, variant: Variant, seed: u64) -> RealizationRequest {
    RealizationRequest::new(c1, c2, variant)
        .with_seed(seed)
        .with_retry_cap(SOLVER_RETRY_CAP)
}

fn cell_seed(seed: u64, a: usize, b: usize, c: usize) -> u64 {
    seed ^ ((a as u64) << 42 | (b as u64) << 21 | c as u64)
}

/// A point on the `c`-cycle of `z` fixed by `x`, or failing that by `y`.
fn big_cycle_fixed_point(t: &Built, c: usize) -> Option<(Slot, usize)> {
    let big = t.z.cycles().into_iter().find(|cy| cy.len() == c)?;
    let mut pts = big;
    pts.sort_unstable();
    for (slot, p) in [(Slot::X, &t.x), (Slot::Y, &t.y)] {
        if let Some(&d) = pts.iter().find(|&&d| p.fixes(d)) {
            return Some((slot, d));
        }
    }
    None
}

fn finish(
    a: usize,
    b: usize,
    c: usize,
    case: CaseTag,
    t: Built,
    holder: Option<Slot>,
    fixed: Option<(Slot, usize)>,
) -> Result<SolveResult, SolveError> {
    let r = SolveResult {
        x: t.x,
        y: t.y,
        z: t.z,
        orders: (a, b, c),
        case,
        exceptional_transposition_holder: holder,
        fixed_point_on_big_cycle: fixed,
    };
    let violations = verify_structure(&r);
    if violations.is_empty() {
        Ok(r)
    } else {
        Err(SolveError::Verification(violations))
    }
}

/// Solves with the default seed.
pub fn solve(a: usize, b: usize, c: usize) -> Result<SolveResult, SolveError> {
    solve_with_seed(a, b, c, 0)
}

/// Deterministic for a given `(a, b, c, seed)`.
pub fn solve_with_seed(a: usize, b: usize, c: usize, seed: u64) -> Result<SolveResult, SolveError> {
    let tag = classify(a, b, c)?;
    match tag.kind {
        CaseKind::EvenTriple | CaseKind::EvenTripleDropCycle | CaseKind::EvenTripleAddTransposition => {
            even_triple(a, b, c, tag, seed)
        }
        CaseKind::OddWithEven => odd_with_even(a, b, c, tag, seed),
        _ => c_even(a, b, c, tag, seed),
    }
}

fn expect_kind(a: usize, b: usize, c: usize, allowed: &[CaseKind]) -> Result<CaseTag, SolveError> {
    let tag = classify(a, b, c)?;
    if allowed.contains(&tag.kind) {
        Ok(tag)
    } else {
        Err(SolveError::NotApplicable(tag.kind))
    }
}

/// The even-triple constructions in `S_c`, including the drop-cycle and
/// add-transposition variants.
pub fn solve_even_triple(a: usize, b: usize, c: usize) -> Result<SolveResult, SolveError> {
    let tag = expect_kind(
        a,
        b,
        c,
        &[
            CaseKind::EvenTriple,
            CaseKind::EvenTripleDropCycle,
            CaseKind::EvenTripleAddTransposition,
        ],
    )?;
    even_triple(a, b, c, tag, 0)
}

/// The `S_{c+1}` construction for `c` odd with an even order among `a, b`.
pub fn solve_odd_with_even(a: usize, b: usize, c: usize) -> Result<SolveResult, SolveError> {
    let tag = expect_kind(a, b, c, &[CaseKind::OddWithEven])?;
    odd_with_even(a, b, c, tag, 0)
}

/// The `S_{c+2}` constructions with `z` of cycle type `(c, 2)`.
pub fn solve_c_even(a: usize, b: usize, c: usize) -> Result<SolveResult, SolveError> {
    let tag = expect_kind(
        a,
        b,
        c,
        &[
            CaseKind::CEvenAllEqual,
            CaseKind::CEvenCase1,
            CaseKind::CEvenCase1ExceptionHalf,
            CaseKind::CEvenCase1Exception358,
            CaseKind::CEvenCase2,
            CaseKind::CEvenCase3,
        ],
    )?;
    c_even(a, b, c, tag, 0)
}

fn even_triple(a: usize, b: usize, c: usize, tag: CaseTag, seed: u64) -> Result<SolveResult, SolveError> {
    let mut classes = [ClassSpec::uniform(c, a)?, ClassSpec::uniform(c, b)?];
    let slot = modified_slot(a, b);
    let e = [a, b][slot];
    let holder = match tag.kind {
        CaseKind::EvenTriple => None,
        CaseKind::EvenTripleDropCycle => {
            classes[slot] = classes[slot].without_cycle(e)?;
            None
        }
        CaseKind::EvenTripleAddTransposition => {
            classes[slot] = classes[slot].with_extra_transposition()?;
            Some([Slot::X, Slot::Y][slot])
        }
        other => return Err(SolveError::NotApplicable(other)),
    };
    let [ca, cb] = classes;
    let w = realize_full_cycle(&request(ca, cb, Variant::FullCycle, cell_seed(seed, a, b, c)))?;
    let t = Built {
        z: w.product.inverse(),
        x: w.alpha,
        y: w.beta,
    };
    finish(a, b, c, tag, t, holder, None)
}

fn odd_with_even(a: usize, b: usize, c: usize, tag: CaseTag, seed: u64) -> Result<SolveResult, SolveError> {
    let n = c + 1;
    let mut classes = [
        ClassSpec::uniform(c, a)?.lift(n)?,
        ClassSpec::uniform(c, b)?.lift(n)?,
    ];
    let slot = modified_slot(a, b);
    classes[slot] = classes[slot].with_extra_transposition()?;
    let [ca, cb] = classes;
    let w = realize_near_cycle(&request(ca, cb, Variant::NearCycle, cell_seed(seed, a, b, c)))?;
    let t = Built {
        z: w.product.inverse(),
        x: w.alpha,
        y: w.beta,
    };
    finish(a, b, c, tag, t, Some([Slot::X, Slot::Y][slot]), None)
}

fn c_even(a: usize, b: usize, c: usize, tag: CaseTag, seed: u64) -> Result<SolveResult, SolveError> {
    let t = if tag.kind == CaseKind::CEvenAllEqual {
        all_equal(c)?
    } else {
        lemma5(a, b, c, seed)?
    };
    let fixed = big_cycle_fixed_point(&t, c);
    finish(a, b, c, tag, t, Some(Slot::Z), fixed)
}

fn all_equal(c: usize) -> Result<Built, SolveError> {
    if c == 2 {
        let x = cycle(4, &[1, 2]);
        let y = cycle(4, &[3, 4]);
        return Built::from_pair(x, y);
    }
    let n = c + 2;
    let x = cycle(n, &(1..=c).collect::<Vec<_>>());
    let mut ys: Vec<usize> = (1..=c - 4).collect();
    ys.extend([c - 1, c - 3, c + 1, c + 2]);
    Built::from_pair(x, cycle(n, &ys))
}

/// `a, b` odd, `c` even: `z` of type `(c, 2)` in `S_{c+2}`.
fn lemma5(a: usize, b: usize, c: usize, seed: u64) -> Result<Built, SolveError> {
    match lemma5_step(a, b, c) {
        CaseKind::CEvenCase1 => case1(a, b, c, seed),
        CaseKind::CEvenCase1ExceptionHalf => {
            let n = 2 * a;
            let mut xs: Vec<Vec<usize>> = Vec::new();
            xs.push((1..=a).collect());
            xs.push((a + 1..=n).collect());
            let x = Permutation::from_cycles(n, &xs)?;
            let mut ys: Vec<usize> = (1..=a - 2).collect();
            ys.extend([n, n - 2]);
            Built::from_pair(x, cycle(n, &ys))
        }
        CaseKind::CEvenCase1Exception358 => {
            let x = Permutation::from_cycles(10, &[[1, 2, 3], [4, 5, 6], [7, 8, 9]])?;
            Built::from_pair(x, cycle(10, &[1, 4, 8, 9, 10]))
        }
        CaseKind::CEvenCase2 => case2(a, b, c, seed),
        CaseKind::CEvenCase3 => case3(a, b, c, seed),
        other => Err(SolveError::NotApplicable(other)),
    }
}

fn case1(a: usize, b: usize, c: usize, seed: u64) -> Result<Built, SolveError> {
    let n = c + 1;
    let ca = ClassSpec::uniform(c, a)?.lift(n)?;
    let cb = ClassSpec::with_cycles(n, &[b - 1])?;
    let w = realize_near_cycle(&request(ca, cb, Variant::NearCycle, cell_seed(seed, a, b, c)))?;
    let w = relabel_fixed_point(&w, n)?;
    let x = w.alpha.embed(n + 1)?;
    let y = w.beta.attach_cycle(&[n, n + 1], Side::Right)?;
    Built::from_pair(x, y)
}

fn case2(a: usize, b: usize, c: usize, seed: u64) -> Result<Built, SolveError> {
    let c0 = c - (a - 1);
    let base = lemma5(a, b, c0, seed)?;
    let (slot, d) = big_cycle_fixed_point(&base, c0).ok_or(SolveError::NoFixedPoint)?;
    let flip = match slot {
        Slot::X => false,
        _ if a == b => true,
        _ => return Err(SolveError::NoFixedPoint),
    };
    let frame = if flip { base.reversed() } else { base };
    let mut tau = Vec::with_capacity(a);
    tau.push(d);
    tau.extend(c - a + 4..=c + 2);
    let t = glue(&frame, &tau, None, c + 2)?;
    Ok(if flip { t.reversed() } else { t })
}

fn case3(a: usize, b: usize, c: usize, seed: u64) -> Result<Built, SolveError> {
    let c0 = c - (a + b - 2);
    let base = lemma5(a, b, c0, seed)?;
    let (slot, d) = big_cycle_fixed_point(&base, c0).ok_or(SolveError::NoFixedPoint)?;
    let flip = slot != Slot::X;
    let (left, right) = if flip { (b, a) } else { (a, b) };
    let frame = if flip { base.reversed() } else { base };
    let start = c0 + 3;
    let junction = start + left - 2;
    let mut rho = Vec::with_capacity(left);
    rho.push(d);
    rho.extend(start..=junction);
    let tau: Vec<usize> = (junction..=c + 2).collect();
    debug_assert_eq!(tau.len(), right);
    let t = glue(&frame, &rho, Some(&tau), c + 2)?;
    Ok(if flip { t.reversed() } else { t })
}

/// `x ← ρx`, and `y ← yτ` when `τ` is given. Each glued cycle must share
/// exactly one point with the running product, which is checked by
/// rebuilding the product both ways.
fn glue(t: &Built, rho: &[usize], tau: Option<&[usize]>, n: usize) -> Result<Built, SolveError> {
    let xy = t.x.compose(&t.y)?;
    let x = t.x.attach_cycle(rho, Side::Left)?.embed(n)?;
    let mut prod = xy.attach_cycle(rho, Side::Left)?;
    let mut y = t.y.embed(n)?;
    if let Some(tau) = tau {
        y = y.attach_cycle(tau, Side::Right)?;
        prod = prod.attach_cycle(tau, Side::Right)?;
    }
    let prod = prod.embed(n)?;
    let merged = rho.len() - 1 + tau.map_or(0, |t| t.len() - 1);
    let expected = (xy.cycle_count() + n - xy.degree()).checked_sub(merged);
    if x.compose(&y)? != prod || Some(prod.cycle_count()) != expected {
        return Err(SolveError::GlueFailed);
    }
    Ok(Built {
        x,
        y,
        z: prod.inverse(),
    })
}

/// Rearranges a solved sorted triple into the slot order of `orders`,
/// using `(x, y, z) → (y, z, x)` and `(x, y, z) → (y, x, z^x)`.
pub fn restore_slots(r: &SolveResult, orders: [usize; 3]) -> Result<[Permutation; 3], SolveError> {
    let [x, y, z] = r.elements();
    let zx = z.conjugate(x)?;
    let arrangements = [
        [x.clone(), y.clone(), z.clone()],
        [y.clone(), z.clone(), x.clone()],
        [z.clone(), x.clone(), y.clone()],
        [y.clone(), x.clone(), zx.clone()],
        [x.clone(), zx.clone(), y.clone()],
        [zx, y.clone(), x.clone()],
    ];
    arrangements
        .into_iter()
        .find(|t| t.iter().zip(orders).all(|(p, o)| p.order() == o))
        .ok_or(SolveError::BadOrders(orders))
}

/// Solves for orders in any slot order.
pub fn solve_unordered(orders: [usize; 3], seed: u64) -> Result<[Permutation; 3], SolveError> {
    if orders.iter().any(|&o| o < 2) {
        return Err(SolveError::BadOrders(orders));
    }
    let mut s = orders;
    s.sort_unstable();
    let r = solve_with_seed(s[0], s[1], s[2], seed)?;
    restore_slots(&r, orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(n: usize, s: &str) -> Permutation {
        let q: Permutation = s.parse().unwrap();
        q.embed(n).unwrap()
    }

    #[test]
    fn golden_358() {
        let r = solve(3, 5, 8).unwrap();
        assert_eq!(r.x, p(10, "(1,2,3)(4,5,6)(7,8,9)"));
        assert_eq!(r.y, p(10, "(1,4,8,9,10)"));
        assert_eq!(r.z, p(10, "(1,2,3,4,5,6,8,10)(7,9)").inverse());
        assert_eq!(r.case.kind, CaseKind::CEvenCase1Exception358);
        assert_eq!(r.fixed_point_on_big_cycle, Some((Slot::X, 10)));
    }

    #[test]
    fn golden_334_and_444() {
        let r = solve(3, 3, 4).unwrap();
        assert_eq!(r.x, p(6, "(1,2,3)(4,5,6)"));
        assert_eq!(r.y, p(6, "(1,6,4)"));
        assert_eq!(r.z, p(6, "(1,2,3,6)(4,5)").inverse());
        let r = solve(4, 4, 4).unwrap();
        assert_eq!(r.x, p(6, "(1,2,3,4)"));
        assert_eq!(r.y, p(6, "(3,1,5,6)"));
        assert_eq!(r.z, p(6, "(3,4,5,6)(1,2)").inverse());
        let r = solve(2, 2, 2).unwrap();
        assert_eq!(r.z.to_string(), "(1,2)(3,4)@4");
    }

    #[test]
    fn case2_and_case3_examples() {
        let r = solve(3, 5, 10).unwrap();
        assert_eq!(r.case.kind, CaseKind::CEvenCase2);
        assert_eq!(r.x, p(12, "(1,2,3)(4,5,6)(7,8,9)(10,11,12)"));
        assert_eq!(r.degree(), 12);
        assert_eq!(r.z.cycle_type().parts()[..2], [10, 2]);
        let r = solve(3, 3, 10).unwrap();
        assert_eq!(r.case.kind, CaseKind::CEvenCase3);
        assert_eq!(r.degree(), 12);
        assert_eq!(r.z.cycle_type().parts()[..2], [10, 2]);
    }

    #[test]
    fn degrees_by_case() {
        assert_eq!(solve(2, 3, 6).unwrap().degree(), 6);
        assert_eq!(solve(2, 2, 4).unwrap().degree(), 4);
        assert_eq!(solve(2, 4, 6).unwrap().case.kind, CaseKind::EvenTripleDropCycle);
        let r = solve(3, 4, 5).unwrap();
        assert_eq!(r.degree(), 6);
        assert_eq!(r.exceptional_transposition_holder, Some(Slot::Y));
        let r = solve(2, 3, 3).unwrap();
        assert_eq!(r.x.cycle_type().parts(), &[2, 2]);
        let r = solve(2, 5, 5).unwrap();
        assert_eq!(r.x.cycle_type().parts(), &[2, 2, 1]);
        assert_eq!(r.degree(), 5);
    }

    #[test]
    fn sub_solvers_reject_other_cases() {
        assert_eq!(
            solve_even_triple(3, 5, 8),
            Err(SolveError::NotApplicable(CaseKind::CEvenCase1Exception358))
        );
        assert!(solve_odd_with_even(2, 3, 6).is_err());
        assert!(solve_c_even(3, 4, 5).is_err());
        assert!(solve_c_even(4, 4, 4).is_ok());
    }

    #[test]
    fn rejects_unsorted_and_small() {
        assert!(matches!(solve(1, 2, 3), Err(SolveError::OutOfRange { .. })));
        assert!(matches!(solve(3, 2, 4), Err(SolveError::OutOfRange { .. })));
        assert!(solve_unordered([1, 2, 3], 0).is_err());
    }

    #[test]
    fn unordered_slots() {
        for orders in [[5, 3, 8], [8, 5, 3], [4, 2, 3], [7, 7, 2], [3, 4, 3]] {
            let t = solve_unordered(orders, 0).unwrap();
            let prod = crate::perm::product(&t).unwrap();
            assert!(prod.is_identity());
            for (q, o) in t.iter().zip(orders) {
                assert_eq!(q.order(), o);
            }
        }
    }

    #[test]
    fn sweep_small() {
        for c in 2..=24 {
            for b in 2..=c {
                for a in 2..=b {
                    let r = solve(a, b, c).unwrap_or_else(|e| panic!("({a},{b},{c}): {e}"));
                    assert!(r.degree() <= c + 2);
                    assert_eq!(r.degree(), r.case.kind.degree(c));
                }
            }
        }
    }
}
