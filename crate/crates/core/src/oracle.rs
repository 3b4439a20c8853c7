//! Exhaustive searches over small symmetric groups.
//!
//! Nothing here relies on the constructions elsewhere in the crate: the
//! searches enumerate conjugacy classes element by element and test
//! products directly. The first element of a triple is taken from one
//! representative per class, which is sound because conjugating a
//! product-one triple gives another one with the same cycle types.
//!
//! Absence is only reported after the space was fully enumerated. A search
//! that runs past its node budget, or is stopped through [`Interrupt`],
//! returns an error instead.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use thiserror::Error;

use crate::cycle_type::{partitions, ClassSpec, CycleType};
use crate::eks::Variant;
use crate::perm::{is_transitive, PermError, Permutation};

/// Degree above which searches refuse to run.
pub const FEASIBILITY_BOUND: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    pub max_degree: usize,
    pub max_nodes: u64,
    /// Wall-clock cap, enforced by callers through an [`Interrupt`].
    pub time_cap_secs: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_degree: FEASIBILITY_BOUND,
            max_nodes: 2_000_000_000,
            time_cap_secs: 600,
        }
    }
}

/// Polled during long searches.
pub trait Interrupt {
    fn should_stop(&self) -> bool;
}

/// Never stops.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoInterrupt;

impl Interrupt for NoInterrupt {
    fn should_stop(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("node budget of {max_nodes} exhausted; result inconclusive")]
    BudgetExceeded { max_nodes: u64 },
    #[error("search interrupted; result inconclusive")]
    Interrupted,
    #[error("degree {degree} is above the search bound {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("orders must be at least 1, got {0:?}")]
    BadOrders([usize; 3]),
    #[error("classes have different degrees")]
    DegreeMismatch,
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl OracleError {
    pub fn is_inconclusive(&self) -> bool {
        matches!(
            self,
            OracleError::BudgetExceeded { .. } | OracleError::Interrupted | OracleError::DegreeTooLarge { .. }
        )
    }
}

struct Counter<'a> {
    nodes: u64,
    max: u64,
    stop: &'a dyn Interrupt,
}

impl<'a> Counter<'a> {
    fn new(budget: &SearchBudget, stop: &'a dyn Interrupt) -> Self {
        Counter {
            nodes: 0,
            max: budget.max_nodes,
            stop,
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.max {
            return Err(OracleError::BudgetExceeded { max_nodes: self.max });
        }
        if self.nodes & 0xfff == 0 && self.stop.should_stop() {
            return Err(OracleError::Interrupted);
        }
        Ok(())
    }
}

fn check_degree(n: usize, budget: &SearchBudget) -> Result<(), OracleError> {
    let max = budget.max_degree.min(FEASIBILITY_BOUND);
    if n > max {
        return Err(OracleError::DegreeTooLarge { degree: n, max });
    }
    Ok(())
}

/// Calls `f` on every permutation with cycle type `ct`, each exactly once.
pub fn for_each_in_class<B>(
    ct: &CycleType,
    f: &mut dyn FnMut(&Permutation) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = ct.degree();
    let mut remaining = vec![0usize; n + 1];
    for &p in ct.parts() {
        remaining[p] += 1;
    }
    let mut st = ClassWalk {
        n,
        remaining,
        images: vec![u32::MAX; n],
        used: vec![false; n],
    };
    st.next_cycle(f)
}

struct ClassWalk {
    n: usize,
    remaining: Vec<usize>,
    images: Vec<u32>,
    used: Vec<bool>,
}

impl ClassWalk {
    fn next_cycle<B>(&mut self, f: &mut dyn FnMut(&Permutation) -> ControlFlow<B>) -> ControlFlow<B> {
        let Some(start) = (0..self.n).find(|&i| !self.used[i]) else {
            return f(&Permutation::from_raw(self.images.clone()));
        };
        for len in 1..=self.n {
            if self.remaining[len] == 0 {
                continue;
            }
            self.remaining[len] -= 1;
            self.used[start] = true;
            self.extend(start, start, len - 1, f)?;
            self.used[start] = false;
            self.remaining[len] += 1;
        }
        ControlFlow::Continue(())
    }

    fn extend<B>(
        &mut self,
        start: usize,
        cur: usize,
        left: usize,
        f: &mut dyn FnMut(&Permutation) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if left == 0 {
            self.images[cur] = start as u32;
            return self.next_cycle(f);
        }
        for v in start + 1..self.n {
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.images[cur] = v as u32;
            self.extend(start, v, left - 1, f)?;
            self.used[v] = false;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `f` on every element of `S_n`.
pub fn for_each_permutation<B>(n: usize, f: &mut dyn FnMut(&Permutation) -> ControlFlow<B>) -> ControlFlow<B> {
    for ct in partitions(n) {
        for_each_in_class(&ct, f)?;
    }
    ControlFlow::Continue(())
}

/// Cycle types of `S_n` whose elements have order exactly `k`.
pub fn types_of_order(n: usize, k: usize) -> Vec<CycleType> {
    partitions(n).into_iter().filter(|ct| ct.order() == k).collect()
}

fn order_triple_search(
    n: usize,
    orders: [usize; 3],
    reduce: bool,
    budget: &SearchBudget,
    stop: &dyn Interrupt,
) -> Result<Option<[Permutation; 3]>, OracleError> {
    if orders.contains(&0) {
        return Err(OracleError::BadOrders(orders));
    }
    check_degree(n, budget)?;
    let [a, b, c] = orders;
    let xs = types_of_order(n, a);
    let ys = types_of_order(n, b);
    if xs.is_empty() || ys.is_empty() || types_of_order(n, c).is_empty() {
        return Ok(None);
    }
    let mut counter = Counter::new(budget, stop);
    let try_x = |x: &Permutation, counter: &mut Counter| -> Result<Option<[Permutation; 3]>, OracleError> {
        for yt in &ys {
            let mut err = None;
            let found = for_each_in_class(yt, &mut |y| {
                if let Err(e) = counter.tick() {
                    err = Some(e);
                    return ControlFlow::Break(None);
                }
                let xy = x.then(y);
                if xy.order() == c {
                    return ControlFlow::Break(Some([x.clone(), y.clone(), xy.inverse()]));
                }
                ControlFlow::Continue(())
            });
            if let Some(e) = err {
                return Err(e);
            }
            if let ControlFlow::Break(Some(t)) = found {
                return Ok(Some(t));
            }
        }
        Ok(None)
    };
    for xt in &xs {
        if reduce {
            let x = ClassSpec::new(n, xt.clone()).expect("partition of n").representative();
            if let Some(t) = try_x(&x, &mut counter)? {
                return Ok(Some(t));
            }
        } else {
            let mut out = Ok(None);
            let _ = for_each_in_class(xt, &mut |x| match try_x(x, &mut counter) {
                Ok(None) => ControlFlow::Continue(()),
                r => {
                    out = r;
                    ControlFlow::Break(())
                }
            });
            if !matches!(out, Ok(None)) {
                return out;
            }
        }
    }
    Ok(None)
}

/// `x, y, z ∈ S_n` of orders `a, b, c` with `xyz = 1`, or `None` if the
/// full search finds none.
pub fn exhaustive_triple_search(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    budget: &SearchBudget,
) -> Result<Option<[Permutation; 3]>, OracleError> {
    exhaustive_triple_search_with(n, a, b, c, budget, &NoInterrupt)
}

pub fn exhaustive_triple_search_with(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    budget: &SearchBudget,
    stop: &dyn Interrupt,
) -> Result<Option<[Permutation; 3]>, OracleError> {
    order_triple_search(n, [a, b, c], true, budget, stop)
}

/// Same search with `x` running over whole classes instead of one
/// representative each.
pub fn unreduced_triple_search(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    budget: &SearchBudget,
) -> Result<Option<[Permutation; 3]>, OracleError> {
    order_triple_search(n, [a, b, c], false, budget, &NoInterrupt)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDegree {
    pub degree: usize,
    pub witness: [Permutation; 3],
    /// Degrees below `degree` where the search certified absence.
    pub absent_at: Vec<usize>,
}

/// Least `n` with a product-one triple of orders `a, b, c` in `S_n`.
pub fn min_degree(a: usize, b: usize, c: usize, budget: &SearchBudget) -> Result<MinDegree, OracleError> {
    min_degree_with(a, b, c, budget, &NoInterrupt)
}

pub fn min_degree_with(
    a: usize,
    b: usize,
    c: usize,
    budget: &SearchBudget,
    stop: &dyn Interrupt,
) -> Result<MinDegree, OracleError> {
    let mut absent_at = Vec::new();
    let top = budget.max_degree.min(FEASIBILITY_BOUND);
    for n in 1..=top {
        match exhaustive_triple_search_with(n, a, b, c, budget, stop)? {
            Some(witness) => {
                return Ok(MinDegree {
                    degree: n,
                    witness,
                    absent_at,
                })
            }
            None => absent_at.push(n),
        }
    }
    Err(OracleError::DegreeTooLarge { degree: top + 1, max: top })
}

/// `α ∈ c1`, `β ∈ c2` with `(αβ)⁻¹ ∈ c3`.
pub fn class_triple_realizable(
    c1: &ClassSpec,
    c2: &ClassSpec,
    c3: &ClassSpec,
    budget: &SearchBudget,
) -> Result<Option<[Permutation; 3]>, OracleError> {
    let n = c1.degree();
    if c2.degree() != n || c3.degree() != n {
        return Err(OracleError::DegreeMismatch);
    }
    check_degree(n, budget)?;
    let mut counter = Counter::new(budget, &NoInterrupt);
    let x = c1.representative();
    let mut err = None;
    let found = for_each_in_class(c2.cycle_type(), &mut |y| {
        if let Err(e) = counter.tick() {
            err = Some(e);
            return ControlFlow::Break(None);
        }
        let xy = x.then(y);
        if xy.cycle_type() == *c3.cycle_type() {
            return ControlFlow::Break(Some([x.clone(), y.clone(), xy.inverse()]));
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(match found {
        ControlFlow::Break(t) => t,
        ControlFlow::Continue(()) => None,
    })
}

/// `α ∈ c1`, `β ∈ c2` with `αβ` an `n`-cycle, or with `αβ` an
/// `(n−1)`-cycle and `⟨α, β⟩` transitive. Every `α` in `c1` is tried
/// against the fixed target `(1, …, n)` or `(1, …, n−1)`.
pub fn pair_realizable(
    c1: &ClassSpec,
    c2: &ClassSpec,
    variant: Variant,
    budget: &SearchBudget,
) -> Result<Option<(Permutation, Permutation)>, OracleError> {
    let n = c1.degree();
    if c2.degree() != n {
        return Err(OracleError::DegreeMismatch);
    }
    check_degree(n, budget)?;
    let target = match variant {
        Variant::FullCycle => Permutation::long_cycle(n),
        Variant::NearCycle => Permutation::long_cycle(n - 1).embed(n)?,
    };
    let mut counter = Counter::new(budget, &NoInterrupt);
    let mut err = None;
    let found = for_each_in_class(c1.cycle_type(), &mut |alpha| {
        if let Err(e) = counter.tick() {
            err = Some(e);
            return ControlFlow::Break(None);
        }
        let beta = alpha.inverse().then(&target);
        if beta.cycle_type() != *c2.cycle_type() {
            return ControlFlow::Continue(());
        }
        if variant == Variant::NearCycle && !is_transitive(&[alpha.clone(), beta.clone()]).unwrap_or(false) {
            return ControlFlow::Continue(());
        }
        ControlFlow::Break(Some((alpha.clone(), beta)))
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(match found {
        ControlFlow::Break(t) => t,
        ControlFlow::Continue(()) => None,
    })
}

/// Calls `f` on every product-one triple `(x, y, (xy)⁻¹)` of `S_n` with `x`
/// a class representative and `y` arbitrary, optionally only those whose
/// entries generate a transitive group.
pub fn for_each_product_one_triple<B>(
    n: usize,
    transitive_only: bool,
    f: &mut dyn FnMut(&[Permutation; 3]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    for xt in partitions(n) {
        let x = ClassSpec::new(n, xt).expect("partition of n").representative();
        for_each_permutation(n, &mut |y| {
            let t = [x.clone(), y.clone(), x.then(y).inverse()];
            if transitive_only && !is_transitive(&t[..2]).unwrap_or(false) {
                return ControlFlow::Continue(());
            }
            f(&t)
        })?;
    }
    ControlFlow::Continue(())
}
