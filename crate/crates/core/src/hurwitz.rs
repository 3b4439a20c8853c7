//! Genus bookkeeping for product-one tuples viewed as monodromy of a
//! branched cover of the sphere: `g = −(n − 1) + ½ Σ ind(α_i)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;

use thiserror::Error;

use crate::chain::{extend, ChainError, ChainResult};
use crate::cycle_type::ClassSpec;
use crate::perm::{orbits, product, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("empty tuple")]
    Empty,
    #[error("product of the tuple is not the identity")]
    ProductNotIdentity,
    #[error("orbit {orbit:?} gives a non-integral genus")]
    NonIntegralGenus { orbit: Vec<usize> },
    #[error("orbit {orbit:?} gives a negative genus")]
    NegativeGenus { orbit: Vec<usize> },
    #[error("classes have different degrees")]
    DegreeMismatch,
    #[error("need at least 3 branch points, got {0}")]
    TooFewPoints(usize),
    #[error("{orders} orders but {labels} labels")]
    LengthMismatch { orders: usize, labels: usize },
    #[error("order {0} is below 2")]
    BadOrder(usize),
    #[error("duplicate branch point label {0:?}")]
    DuplicateLabel(String),
    #[error("point {label} has ramification index {index} outside {{1, 2, {order}}}")]
    Refinement { label: String, index: usize, order: usize },
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitGenus {
    pub orbit: Vec<usize>,
    pub genus: usize,
}

/// Genus of each connected component of the cover described by `tuple`.
pub fn genus(tuple: &[Permutation]) -> Result<Vec<OrbitGenus>, HurwitzError> {
    if tuple.is_empty() {
        return Err(HurwitzError::Empty);
    }
    if !product(tuple)?.is_identity() {
        return Err(HurwitzError::ProductNotIdentity);
    }
    let n = tuple[0].degree();
    let orbs = orbits(tuple)?;
    let mut orbit_of = alloc::vec![0usize; n + 1];
    for (k, o) in orbs.iter().enumerate() {
        for &pt in o {
            orbit_of[pt] = k;
        }
    }
    // Cycles per orbit, summed over the tuple. Each cycle lies in one orbit.
    let mut cycle_count = alloc::vec![0i64; orbs.len()];
    for p in tuple {
        for c in p.all_cycles() {
            cycle_count[orbit_of[c[0]]] += 1;
        }
    }
    let r = tuple.len() as i64;
    let mut out = Vec::new();
    for (orbit, cycles) in orbs.into_iter().zip(cycle_count) {
        let size = orbit.len() as i64;
        let ind_sum = r * size - cycles;
        let twice = ind_sum - 2 * (size - 1);
        if twice % 2 != 0 {
            return Err(HurwitzError::NonIntegralGenus { orbit });
        }
        if twice < 0 {
            return Err(HurwitzError::NegativeGenus { orbit });
        }
        out.push(OrbitGenus {
            orbit,
            genus: (twice / 2) as usize,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Necessity {
    Admissible,
    /// The index sum is odd, so no product-one tuple exists.
    ParityFail,
    /// A transitive realization would have negative genus.
    GenusFail,
}

/// Necessary conditions for `α_i ∈ C_i` with `α_1 ⋯ α_r = 1` generating a
/// transitive group.
pub fn necessity_check(classes: &[ClassSpec]) -> Result<Necessity, HurwitzError> {
    let n = classes.first().ok_or(HurwitzError::Empty)?.degree();
    if classes.iter().any(|c| c.degree() != n) {
        return Err(HurwitzError::DegreeMismatch);
    }
    let sum: usize = classes.iter().map(ClassSpec::index).sum();
    Ok(if sum % 2 == 1 {
        Necessity::ParityFail
    } else if sum < 2 * (n - 1) {
        Necessity::GenusFail
    } else {
        Necessity::Admissible
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSpec {
    orders: Vec<usize>,
    branch_points: Vec<String>,
}

impl BranchSpec {
    pub fn new(orders: Vec<usize>, branch_points: Vec<String>) -> Result<Self, HurwitzError> {
        if orders.len() < 3 {
            return Err(HurwitzError::TooFewPoints(orders.len()));
        }
        if orders.len() != branch_points.len() {
            return Err(HurwitzError::LengthMismatch {
                orders: orders.len(),
                labels: branch_points.len(),
            });
        }
        if let Some(&o) = orders.iter().find(|&&o| o < 2) {
            return Err(HurwitzError::BadOrder(o));
        }
        for (i, l) in branch_points.iter().enumerate() {
            if branch_points[..i].contains(l) {
                return Err(HurwitzError::DuplicateLabel(l.clone()));
            }
        }
        Ok(BranchSpec { orders, branch_points })
    }

    /// Labels `p1, …, pr`.
    pub fn with_default_labels(orders: Vec<usize>) -> Result<Self, HurwitzError> {
        let labels = (1..=orders.len()).map(|i| format!("p{i}")).collect();
        Self::new(orders, labels)
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn branch_points(&self) -> &[String] {
        &self.branch_points
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRamification {
    pub label: String,
    pub order: usize,
    /// Cycle lengths of the monodromy at this point, descending, 1s included.
    pub cycle_lengths: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub degree: usize,
    pub tuple: ChainResult,
    pub per_point_ramification: Vec<PointRamification>,
    pub genus_per_orbit: Vec<OrbitGenus>,
}

/// Monodromy of a cover of degree `max + 2` ramified over the given points
/// with ramification indices `1`, `2` or `a_i` at the point of order `a_i`.
pub fn branch_data_report(spec: &BranchSpec) -> Result<CoverReport, HurwitzError> {
    let tuple = extend(&spec.orders)?;
    let mut per_point = Vec::with_capacity(spec.orders.len());
    for ((p, &order), label) in tuple.elements.iter().zip(&spec.orders).zip(&spec.branch_points) {
        let lengths = p.cycle_type().parts().to_vec();
        if let Some(&index) = lengths.iter().find(|&&l| l != 1 && l != 2 && l != order) {
            return Err(HurwitzError::Refinement {
                label: label.to_string(),
                index,
                order,
            });
        }
        per_point.push(PointRamification {
            label: label.clone(),
            order,
            cycle_lengths: lengths,
        });
    }
    let genus_per_orbit = genus(&tuple.elements)?;
    Ok(CoverReport {
        degree: tuple.degree,
        tuple,
        per_point_ramification: per_point,
        genus_per_orbit,
    })
}
