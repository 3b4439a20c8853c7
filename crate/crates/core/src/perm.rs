//! Permutations of `{1, …, n}` with an explicit degree.
//!
//! Products are read left to right: `p.compose(&q)` applies `p` first, then
//! `q`. Under this convention `(1,2,3)(4,5,6)(7,8,9) · (1,4,8,9,10)` equals
//! `(1,2,3,4,5,6,8,10)(7,9)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cycle_type::CycleType;

/// Errors raised by permutation constructors and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("point {point} is outside 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("attached cycle shares {shared} points with the support")]
    SupportOverlap { shared: usize },
    #[error("cannot shrink degree {degree} to {target}")]
    Shrink { degree: usize, target: usize },
    #[error("no permutations given")]
    Empty,
}

/// Which side a glued cycle is multiplied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `cycle · p`: the cycle acts first.
    Left,
    /// `p · cycle`: the cycle acts last.
    Right,
}

/// A bijection of `{1, …, n}`.
///
/// Points are 1-based in every public method. Storage is 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: position `i` holds the
    /// image of point `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(PermError::OutOfRange {
                    point: img,
                    degree: n,
                });
            }
            if seen[img - 1] {
                return Err(PermError::NotBijective);
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of the given degree from disjoint cycles in
    /// 1-based notation. Singleton cycles are allowed and ignored.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(PermError::OutOfRange { point: pt, degree });
                }
                if used[pt - 1] {
                    return Err(PermError::RepeatedPoint(pt));
                }
                used[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// A single cycle of the given degree.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self, PermError> {
        Self::from_cycles(degree, &[points])
    }

    /// The canonical `n`-cycle `(1, 2, …, n)`.
    pub fn long_cycle(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be at least 1");
        Permutation {
            images: (0..degree as u32)
                .map(|i| (i + 1) % degree as u32)
                .collect(),
        }
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(!images.is_empty());
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    ///
    /// # Panics
    ///
    /// If `point` is not in `1..=degree`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based images in point order.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// The product `self · other`, mapping `i` to `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` raised to a non-negative power.
    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// All cycles including fixed points, each starting at its smallest
    /// point, ordered by that point. 1-based.
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Cycles of length at least 2, in the same canonical order as
    /// [`all_cycles`](Self::all_cycles).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
            }
        }
        count
    }

    pub fn cycle_type(&self) -> CycleType {
        let parts: Vec<usize> = self.all_cycles().iter().map(Vec::len).collect();
        CycleType::new(parts).expect("cycle lengths are positive")
    }

    /// Degree minus the number of cycles, fixed points included.
    pub fn index(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    /// Least `m ≥ 1` with `self^m = 1`: the lcm of the cycle lengths.
    /// Saturates at `usize::MAX`.
    pub fn order(&self) -> usize {
        self.cycle_type().order()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i as u32 == v)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i as u32 != v)
            .map(|(i, _)| i + 1)
            .collect()
    }

    #[inline]
    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }

    /// `g⁻¹ · self · g`. Sends `g(i)` to `g(self(i))`, so cycles of `self`
    /// are relabelled through `g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(g)?;
        Ok(self.conjugate_by(g))
    }

    pub(crate) fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[v as usize];
        }
        Permutation { images }
    }

    /// The same mapping on `{1, …, m}`, fixing every point above the
    /// current degree.
    pub fn embed(&self, m: usize) -> Result<Permutation, PermError> {
        if m < self.degree() {
            return Err(PermError::Shrink {
                degree: self.degree(),
                target: m,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..m as u32);
        Ok(Permutation { images })
    }

    /// Multiplies by the cycle `fresh_cycle`, which may share at most one
    /// point with the support of `self`.
    ///
    /// If the shared point lies on a cycle of length `m` and the attached
    /// cycle has length `k`, that cycle becomes a single `(k + m − 1)`-cycle.
    /// The degree grows to cover the largest listed point.
    pub fn attach_cycle(&self, fresh_cycle: &[usize], side: Side) -> Result<Permutation, PermError> {
        let top = fresh_cycle.iter().copied().max().unwrap_or(0);
        let degree = self.degree().max(top);
        let base = self.embed(degree)?;
        let cyc = Permutation::cycle(degree, fresh_cycle)?;
        let shared = fresh_cycle
            .iter()
            .filter(|&&pt| pt <= self.degree() && !self.fixes(pt))
            .count();
        if shared > 1 {
            return Err(PermError::SupportOverlap { shared });
        }
        Ok(match side {
            Side::Left => cyc.then(&base),
            Side::Right => base.then(&cyc),
        })
    }

    /// The transposition `(i, j)` of the given degree.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Permutation, PermError> {
        Self::cycle(degree, &[i, j])
    }
}

/// Left-to-right product of a non-empty list of equal-degree permutations.
pub fn product(ps: &[Permutation]) -> Result<Permutation, PermError> {
    let first = ps.first().ok_or(PermError::Empty)?;
    let mut acc = first.clone();
    for p in &ps[1..] {
        acc = acc.compose(p)?;
    }
    Ok(acc)
}

/// Orbits of the group generated by `ps`, each sorted, ordered by smallest
/// point.
pub fn orbits(ps: &[Permutation]) -> Result<Vec<Vec<usize>>, PermError> {
    let first = ps.first().ok_or(PermError::Empty)?;
    let n = first.degree();
    for p in ps {
        first.check_degree(p)?;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in ps {
        for (i, &v) in p.raw().iter().enumerate() {
            let (ri, rv) = (find(&mut parent, i), find(&mut parent, v as usize));
            if ri != rv {
                let (lo, hi) = if ri < rv { (ri, rv) } else { (rv, ri) };
                parent[hi] = lo;
            }
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(i + 1);
    }
    Ok(out)
}

pub fn is_transitive(ps: &[Permutation]) -> Result<bool, PermError> {
    Ok(orbits(ps)?.len() == 1)
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
