//! Witnesses for two-class products that are a full cycle, or an
//! `(n−1)`-cycle with a transitive pair.
//!
//! Given classes `C₁`, `C₂` of `S_n`:
//!
//! * [`realize_full_cycle`] needs `ind(C₁) + ind(C₂) = n − 1 + 2k` and
//!   returns `α ∈ C₁`, `β ∈ C₂` with `αβ = (1, 2, …, n)`.
//! * [`realize_near_cycle`] needs `ind(C₁) + ind(C₂) = n + 2k`, excluding
//!   two classes of fixed-point-free involutions, and returns `α`, `β` with
//!   `αβ = (1, 2, …, n−1)` and `⟨α, β⟩` transitive.
//!
//! Both conditions are also necessary. The search runs in three stages:
//! seeded random draws from `C₁`, a direct construction through one-face
//! bipartite maps, and a complete backtracking search for small degrees.
//! Every witness is re-checked before it is returned.

mod construct;
mod search;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cycle_type::ClassSpec;
use crate::perm::{is_transitive, PermError, Permutation};

/// Largest degree for which the backtracking stage runs.
pub const EXHAUSTIVE_DEGREE_LIMIT: usize = 12;

const BACKTRACK_NODE_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("classes have different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("index sum {index_sum} is not of the form {base} + 2k in degree {degree}")]
    ParityViolation {
        index_sum: usize,
        base: usize,
        degree: usize,
    },
    #[error("both classes are fixed-point-free involutions")]
    FixedPointFreeInvolutions,
    #[error("no witness found")]
    SearchExhausted,
    #[error("point {point} outside 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("witness has no distinguished fixed point")]
    NotNearCycle,
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `αβ` is an `n`-cycle.
    FullCycle,
    /// `αβ` is an `(n−1)`-cycle and `⟨α, β⟩` is transitive.
    NearCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Randomized,
    Constructive,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationRequest {
    pub c1: ClassSpec,
    pub c2: ClassSpec,
    pub variant: Variant,
    pub seed: u64,
    /// Number of random draws before the deterministic stages.
    pub retry_cap: u32,
}

impl RealizationRequest {
    /// Request with seed 0 and [`default_retry_cap`](Self::default_retry_cap).
    pub fn new(c1: ClassSpec, c2: ClassSpec, variant: Variant) -> Self {
        let retry_cap = Self::default_retry_cap(c1.degree());
        RealizationRequest {
            c1,
            c2,
            variant,
            seed: 0,
            retry_cap,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_retry_cap(mut self, retry_cap: u32) -> Self {
        self.retry_cap = retry_cap;
        self
    }

    /// Roughly `100 · n · log₂ n`, at least 100.
    pub fn default_retry_cap(n: usize) -> u32 {
        let log = usize::BITS - n.max(2).leading_zeros();
        (100 * n * log as usize).clamp(100, u32::MAX as usize) as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationWitness {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub product: Permutation,
    pub method: Method,
    /// The fixed point of the product, for near-cycle witnesses.
    pub fixed_point: Option<usize>,
}

fn check_indices(req: &RealizationRequest, base: usize) -> Result<usize, RealizeError> {
    let n = req.c1.degree();
    if req.c2.degree() != n {
        return Err(RealizeError::DegreeMismatch(n, req.c2.degree()));
    }
    let index_sum = req.c1.index() + req.c2.index();
    if index_sum < base || (index_sum - base) % 2 != 0 {
        return Err(RealizeError::ParityViolation {
            index_sum,
            base,
            degree: n,
        });
    }
    Ok(n)
}

/// Conjugator `g` with `σ^g = τ` for two permutations of the same cycle type.
pub(crate) fn conjugator(sigma: &Permutation, tau: &Permutation) -> Option<Permutation> {
    if sigma.degree() != tau.degree() || sigma.cycle_type() != tau.cycle_type() {
        return None;
    }
    let mut from = sigma.all_cycles();
    let mut to = tau.all_cycles();
    from.sort_by_key(|c| core::cmp::Reverse(c.len()));
    to.sort_by_key(|c| core::cmp::Reverse(c.len()));
    let mut images = alloc::vec![0usize; sigma.degree()];
    for (cf, ct) in from.iter().zip(&to) {
        for (&a, &b) in cf.iter().zip(ct) {
            images[a - 1] = b;
        }
    }
    Permutation::from_images(&images).ok()
}

fn near_target(n: usize) -> Permutation {
    let pts: alloc::vec::Vec<usize> = (1..n).collect();
    if pts.len() < 2 {
        return Permutation::identity(n);
    }
    Permutation::cycle(n, &pts).expect("points in range")
}

fn finish(
    req: &RealizationRequest,
    alpha: Permutation,
    beta: Permutation,
    target: &Permutation,
    method: Method,
) -> Result<RealizationWitness, RealizeError> {
    let product = alpha.compose(&beta)?;
    let ok = &product == target
        && req.c1.contains(&alpha)
        && req.c2.contains(&beta)
        && (req.variant == Variant::FullCycle || is_transitive(&[alpha.clone(), beta.clone()])?);
    if !ok {
        return Err(RealizeError::SearchExhausted);
    }
    let fixed_point = match req.variant {
        Variant::FullCycle => None,
        Variant::NearCycle => Some(target.degree()),
    };
    Ok(RealizationWitness {
        alpha,
        beta,
        product,
        method,
        fixed_point,
    })
}

fn run(req: &RealizationRequest, target: Permutation) -> Result<RealizationWitness, RealizeError> {
    let n = target.degree();
    let transitive = req.variant == Variant::NearCycle;
    let (l, m) = (req.c1.cycle_type(), req.c2.cycle_type());

    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    if let Some((a, b)) = search::random_search(l, m, &target, transitive, req.retry_cap, &mut rng) {
        return finish(req, a, b, &target, Method::Randomized);
    }

    let built = match req.variant {
        Variant::FullCycle => construct::unicellular(l.parts(), m.parts(), None),
        Variant::NearCycle => construct::near_cycle(l.parts(), m.parts()),
    };
    if let Some((a, b)) = built {
        let sigma = a.then(&b);
        let g = conjugator(&sigma, &target).ok_or(RealizeError::SearchExhausted)?;
        let (a, b) = (a.conjugate_by(&g), b.conjugate_by(&g));
        // For near cycles the conjugator must also send the old fixed point
        // to n; with a single fixed point that is automatic.
        if let Ok(w) = finish(req, a, b, &target, Method::Constructive) {
            return Ok(w);
        }
    }

    if n <= EXHAUSTIVE_DEGREE_LIMIT {
        if let Some((a, b)) = search::backtrack(l, m, &target, transitive, BACKTRACK_NODE_CAP) {
            return finish(req, a, b, &target, Method::Exhaustive);
        }
    }
    Err(RealizeError::SearchExhausted)
}

/// `α ∈ c1`, `β ∈ c2` with `αβ = (1, 2, …, n)`.
pub fn realize_full_cycle(req: &RealizationRequest) -> Result<RealizationWitness, RealizeError> {
    let n = check_indices(req, req.c1.degree().saturating_sub(1))?;
    let req = RealizationRequest {
        variant: Variant::FullCycle,
        ..req.clone()
    };
    run(&req, Permutation::long_cycle(n))
}

/// `α ∈ c1`, `β ∈ c2` with `αβ = (1, 2, …, n−1)` fixing `n` and
/// `⟨α, β⟩` transitive.
///
/// In degree 2 the pair `(1,2), (1,2)` is accepted: its product is the
/// identity, which is the required shape there.
pub fn realize_near_cycle(req: &RealizationRequest) -> Result<RealizationWitness, RealizeError> {
    let n = check_indices(req, req.c1.degree())?;
    if n > 2
        && req.c1.cycle_type().is_fixed_point_free_involution()
        && req.c2.cycle_type().is_fixed_point_free_involution()
    {
        return Err(RealizeError::FixedPointFreeInvolutions);
    }
    let req = RealizationRequest {
        variant: Variant::NearCycle,
        ..req.clone()
    };
    run(&req, near_target(n))
}

/// Dispatches on `req.variant`.
pub fn realize(req: &RealizationRequest) -> Result<RealizationWitness, RealizeError> {
    match req.variant {
        Variant::FullCycle => realize_full_cycle(req),
        Variant::NearCycle => realize_near_cycle(req),
    }
}

/// Conjugates a near-cycle witness by the transposition swapping its
/// product's fixed point with `target`.
pub fn relabel_fixed_point(w: &RealizationWitness, target: usize) -> Result<RealizationWitness, RealizeError> {
    let current = w.fixed_point.ok_or(RealizeError::NotNearCycle)?;
    let n = w.product.degree();
    if target == 0 || target > n {
        return Err(RealizeError::OutOfRange { point: target, degree: n });
    }
    if target == current {
        return Ok(w.clone());
    }
    let g = Permutation::transposition(n, current, target)?;
    Ok(RealizationWitness {
        alpha: w.alpha.conjugate_by(&g),
        beta: w.beta.conjugate_by(&g),
        product: w.product.conjugate_by(&g),
        method: w.method,
        fixed_point: Some(target),
    })
}
