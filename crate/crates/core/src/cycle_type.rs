//! Cycle types (partitions of the degree) and the conjugacy classes they
//! name.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("cycle type has no parts")]
    Empty,
    #[error("cycle type contains a zero part")]
    ZeroPart,
    #[error("cycle type sums to {sum}, expected degree {degree}")]
    DegreeMismatch { sum: usize, degree: usize },
    #[error("value {value} outside {lo}..={hi}")]
    OutOfRange { value: usize, lo: usize, hi: usize },
    #[error("no room for the requested cycle")]
    NoRoom,
}

/// A partition of the degree, stored in descending order with parts of
/// size 1 included.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ClassError> {
        if parts.is_empty() {
            return Err(ClassError::Empty);
        }
        if parts.contains(&0) {
            return Err(ClassError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// Non-trivial parts padded with fixed points up to `degree`.
    pub fn padded(nontrivial: &[usize], degree: usize) -> Result<Self, ClassError> {
        let mut parts: Vec<usize> = nontrivial.iter().copied().filter(|&p| p != 1).collect();
        let sum: usize = parts.iter().sum();
        if sum > degree {
            return Err(ClassError::DegreeMismatch { sum, degree });
        }
        parts.extend(core::iter::repeat_n(1, degree - sum));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cycles, fixed points included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn index(&self) -> usize {
        self.degree() - self.parts.len()
    }

    /// Lcm of the parts, saturating at `usize::MAX`.
    pub fn order(&self) -> usize {
        self.parts.iter().fold(1usize, |acc, &p| lcm_saturating(acc, p))
    }

    pub fn count(&self, length: usize) -> usize {
        self.parts.iter().filter(|&&p| p == length).count()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().copied().filter(|&p| p > 1)
    }

    /// All parts equal to 2.
    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.parts.iter().all(|&p| p == 2)
    }

    /// Copy with one part of size `from` replaced by the given parts.
    /// Returns `None` if no part of that size exists.
    pub(crate) fn replace_part(&self, from: usize, with: &[usize]) -> Option<CycleType> {
        let pos = self.parts.iter().position(|&p| p == from)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        parts.extend(with.iter().copied().filter(|&p| p > 0));
        CycleType::new(parts).ok()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm_saturating(a: usize, b: usize) -> usize {
    (a / gcd(a, b)).saturating_mul(b)
}

/// A conjugacy class of `S_n`, named by its degree and cycle type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassSpec {
    degree: usize,
    cycle_type: CycleType,
}

impl ClassSpec {
    pub fn new(degree: usize, cycle_type: CycleType) -> Result<Self, ClassError> {
        let sum = cycle_type.degree();
        if sum != degree {
            return Err(ClassError::DegreeMismatch { sum, degree });
        }
        Ok(ClassSpec { degree, cycle_type })
    }

    /// Class with the listed non-trivial cycles and fixed points otherwise.
    pub fn with_cycles(degree: usize, nontrivial: &[usize]) -> Result<Self, ClassError> {
        Self::new(degree, CycleType::padded(nontrivial, degree)?)
    }

    /// `⌊n/k⌋` disjoint `k`-cycles and fixed points otherwise.
    pub fn uniform(degree: usize, k: usize) -> Result<Self, ClassError> {
        if k < 2 || k > degree {
            return Err(ClassError::OutOfRange {
                value: k,
                lo: 2,
                hi: degree,
            });
        }
        Self::with_cycles(degree, &vec![k; degree / k])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    pub fn index(&self) -> usize {
        self.cycle_type.index()
    }

    pub fn order(&self) -> usize {
        self.cycle_type.order()
    }

    pub fn fixed_points(&self) -> usize {
        self.cycle_type.count(1)
    }

    /// Same non-trivial cycles in a larger symmetric group.
    pub fn lift(&self, degree: usize) -> Result<Self, ClassError> {
        let nontrivial: Vec<usize> = self.cycle_type.nontrivial().collect();
        Self::with_cycles(degree, &nontrivial)
    }

    /// Adds one transposition on two fixed points.
    pub fn with_extra_transposition(&self) -> Result<Self, ClassError> {
        if self.fixed_points() < 2 {
            return Err(ClassError::NoRoom);
        }
        let ct = self
            .cycle_type
            .replace_part(1, &[2, 0])
            .and_then(|c| c.replace_part(1, &[]))
            .ok_or(ClassError::NoRoom)?;
        Self::new(self.degree, ct)
    }

    /// Removes one `k`-cycle, turning its points into fixed points.
    pub fn without_cycle(&self, k: usize) -> Result<Self, ClassError> {
        let ones = vec![1; k];
        let ct = self
            .cycle_type
            .replace_part(k, &ones)
            .ok_or(ClassError::NoRoom)?;
        Self::new(self.degree, ct)
    }

    /// A representative with cycles on consecutive points, longest first.
    pub fn representative(&self) -> Permutation {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut next = 1;
        for &p in self.cycle_type.parts() {
            cycles.push((next..next + p).collect());
            next += p;
        }
        Permutation::from_cycles(self.degree, &cycles).expect("parts sum to the degree")
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && p.cycle_type() == self.cycle_type
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.cycle_type, self.degree)
    }
}

/// Index of a permutation made of `⌊n/k⌋` disjoint `k`-cycles in `S_n`:
/// `⌊n/k⌋ · (k − 1)`.
pub fn uniform_class_index(n: usize, k: usize) -> Result<usize, ClassError> {
    if k < 2 || k > n {
        return Err(ClassError::OutOfRange {
            value: k,
            lo: 2,
            hi: n,
        });
    }
    Ok((n / k) * (k - 1))
}

/// Every partition of `n` in descending order, largest first.
pub fn partitions(n: usize) -> Vec<CycleType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All conjugacy classes of `S_n`.
pub fn classes(n: usize) -> Vec<ClassSpec> {
    partitions(n)
        .into_iter()
        .map(|cycle_type| ClassSpec {
            degree: n,
            cycle_type,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_index_examples() {
        assert_eq!(uniform_class_index(9, 2), Ok(4));
        assert_eq!(uniform_class_index(8, 3), Ok(4));
        assert_eq!(uniform_class_index(6, 6), Ok(5));
        assert!(uniform_class_index(6, 7).is_err());
        assert!(uniform_class_index(6, 1).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn class_modifiers() {
        let a = ClassSpec::uniform(10, 4).unwrap();
        assert_eq!(a.cycle_type().parts(), &[4, 4, 1, 1]);
        let a2 = a.with_extra_transposition().unwrap();
        assert_eq!(a2.cycle_type().parts(), &[4, 4, 2]);
        assert_eq!(a2.order(), 4);
        assert!(a2.with_extra_transposition().is_err());
        let a3 = a.without_cycle(4).unwrap();
        assert_eq!(a3.cycle_type().parts(), &[4, 1, 1, 1, 1, 1, 1]);
        assert_eq!(a.lift(11).unwrap().fixed_points(), 3);
    }

    #[test]
    fn representative_is_member() {
        for class in classes(6) {
            assert!(class.contains(&class.representative()));
        }
    }

    #[test]
    fn display() {
        let c = ClassSpec::with_cycles(5, &[3]).unwrap();
        assert_eq!(alloc::format!("{c}"), "[3,1,1]@5");
    }
}
