//! Direct construction of two-class factorizations.
//!
//! A pair `(α, β)` with `αβ` an `n`-cycle is a bipartite map with one face:
//! black vertices are the cycles of `α`, white vertices the cycles of `β`,
//! and the `n` points are the edges. With `ℓ(λ) + ℓ(μ) = n + 1` the map is a
//! plane tree, which exists for any two degree sequences of that size. Each
//! extra unit of genus is obtained by splitting one part into three before
//! building the tree and merging the three resulting cycles afterwards with
//! a 3-cycle whose orientation keeps the face a single `n`-cycle.

use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Colour {
    Black,
    White,
}

struct Pieces {
    sizes: Vec<usize>,
    alive: Vec<bool>,
    designated: Option<usize>,
}

impl Pieces {
    fn new(parts: &[usize], designated: Option<usize>) -> Self {
        Pieces {
            sizes: parts.to_vec(),
            alive: vec![true; parts.len()],
            designated,
        }
    }

    fn split(&mut self, id: usize) -> [usize; 3] {
        let s = self.sizes[id];
        debug_assert!(s >= 3);
        self.alive[id] = false;
        let base = self.sizes.len();
        self.sizes.extend([s - 2, 1, 1]);
        self.alive.extend([true, true, true]);
        if self.designated == Some(id) {
            self.designated = Some(base);
        }
        [base, base + 1, base + 2]
    }

    fn live(&self) -> Vec<usize> {
        (0..self.sizes.len()).filter(|&i| self.alive[i]).collect()
    }
}

struct SplitOp {
    colour: Colour,
    children: [usize; 3],
    parent: usize,
}

fn pick_split(black: &Pieces, white: &Pieces) -> Option<(Colour, usize)> {
    let mut best: Option<((bool, usize), Colour, usize)> = None;
    for (colour, pieces) in [(Colour::Black, black), (Colour::White, white)] {
        for id in pieces.live() {
            let size = pieces.sizes[id];
            if size < 3 {
                continue;
            }
            let key = (pieces.designated != Some(id), size);
            if best.as_ref().is_none_or(|(k, _, _)| key > *k) {
                best = Some((key, colour, id));
            }
        }
    }
    best.map(|(_, c, id)| (c, id))
}

/// Rotation systems of a bipartite tree with the given vertex degrees, the
/// edge between `forced.0` and `forced.1` being edge 0. Returns one rotation
/// per vertex as an ordered edge list.
fn bipartite_tree(black: &[usize], white: &[usize], forced: (usize, usize)) -> Option<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    let edges: usize = black.iter().sum();
    if edges != white.iter().sum::<usize>() || black.len() + white.len() != edges + 1 {
        return None;
    }
    let (b0, w0) = forced;
    if black[b0] + white[w0] < 3 && edges > 1 {
        return None;
    }
    let mut brot: Vec<Vec<u32>> = vec![Vec::new(); black.len()];
    let mut wrot: Vec<Vec<u32>> = vec![Vec::new(); white.len()];
    let mut next_edge = 0u32;
    brot[b0].push(next_edge);
    wrot[w0].push(next_edge);
    next_edge += 1;

    // Open stubs per colour: vertices already in the tree with spare degree.
    let mut bopen: Vec<usize> = Vec::new();
    let mut wopen: Vec<usize> = Vec::new();
    if black[b0] > 1 {
        bopen.push(b0);
    }
    if white[w0] > 1 {
        wopen.push(w0);
    }
    let split_by_leaf = |degs: &[usize], skip: usize| -> (Vec<usize>, Vec<usize>) {
        let (mut inner, mut leaves) = (Vec::new(), Vec::new());
        for (v, &d) in degs.iter().enumerate() {
            if v == skip {
                continue;
            }
            if d > 1 {
                inner.push(v);
            } else {
                leaves.push(v);
            }
        }
        (inner, leaves)
    };
    let (mut b_inner, mut b_leaves) = split_by_leaf(black, b0);
    let (mut w_inner, mut w_leaves) = split_by_leaf(white, w0);

    // Attach `v` of one colour to an open stub of the other colour.
    fn attach(
        v: usize,
        degree: usize,
        own_rot: &mut [Vec<u32>],
        own_open: &mut Vec<usize>,
        other_rot: &mut [Vec<u32>],
        other_open: &mut Vec<usize>,
        other_degrees: &[usize],
        edge: u32,
    ) {
        let host = *other_open.last().expect("caller checked for a stub");
        other_rot[host].push(edge);
        if other_rot[host].len() == other_degrees[host] {
            other_open.pop();
        }
        own_rot[v].push(edge);
        if degree > 1 {
            own_open.push(v);
        }
    }

    while (next_edge as usize) < edges {
        let e = next_edge;
        if !bopen.is_empty() && !w_inner.is_empty() {
            let v = w_inner.pop().unwrap();
            attach(v, white[v], &mut wrot, &mut wopen, &mut brot, &mut bopen, black, e);
        } else if !wopen.is_empty() && !b_inner.is_empty() {
            let v = b_inner.pop().unwrap();
            attach(v, black[v], &mut brot, &mut bopen, &mut wrot, &mut wopen, white, e);
        } else if !bopen.is_empty() && !w_leaves.is_empty() {
            let v = w_leaves.pop().unwrap();
            attach(v, white[v], &mut wrot, &mut wopen, &mut brot, &mut bopen, black, e);
        } else if !wopen.is_empty() && !b_leaves.is_empty() {
            let v = b_leaves.pop().unwrap();
            attach(v, black[v], &mut brot, &mut bopen, &mut wrot, &mut wopen, white, e);
        } else {
            return None;
        }
        next_edge += 1;
    }
    Some((brot, wrot))
}

fn rotations_to_raw(rot: &[Vec<u32>], n: usize) -> Vec<u32> {
    let mut raw = vec![u32::MAX; n];
    for r in rot {
        for (i, &e) in r.iter().enumerate() {
            raw[e as usize] = r[(i + 1) % r.len()];
        }
    }
    raw
}

fn cycle_count(raw: &[u32]) -> usize {
    let mut seen = vec![false; raw.len()];
    let mut count = 0;
    for s in 0..raw.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut p = s;
        while !seen[p] {
            seen[p] = true;
            p = raw[p] as usize;
        }
    }
    count
}

/// `alpha` then `beta`, on raw 0-based images.
fn then(alpha: &[u32], beta: &[u32]) -> Vec<u32> {
    alpha.iter().map(|&v| beta[v as usize]).collect()
}

fn three_cycle(n: usize, pts: [u32; 3]) -> Vec<u32> {
    let mut t: Vec<u32> = (0..n as u32).collect();
    t[pts[0] as usize] = pts[1];
    t[pts[1] as usize] = pts[2];
    t[pts[2] as usize] = pts[0];
    t
}

/// Finds `α` of type `lambda` and `β` of type `mu` with `αβ` a single
/// `n`-cycle, provided `ℓ(λ) + ℓ(μ) = n + 1 − 2k` for some `k ≥ 0`.
///
/// With `designated = Some((i, j))` the cycle of `α` coming from
/// `lambda[i]` and the cycle of `β` coming from `mu[j]` both contain point
/// 1 (raw point 0).
pub(crate) fn unicellular(lambda: &[usize], mu: &[usize], designated: Option<(usize, usize)>) -> Option<(Permutation, Permutation)> {
    let n: usize = lambda.iter().sum();
    if n == 0 || mu.iter().sum::<usize>() != n {
        return None;
    }
    let parts = lambda.len() + mu.len();
    if parts > n + 1 || (n + 1 - parts) % 2 != 0 {
        return None;
    }
    let genus = (n + 1 - parts) / 2;

    let mut black = Pieces::new(lambda, designated.map(|d| d.0));
    let mut white = Pieces::new(mu, designated.map(|d| d.1));
    let mut ops = Vec::with_capacity(genus);
    for _ in 0..genus {
        let (colour, id) = pick_split(&black, &white)?;
        let children = match colour {
            Colour::Black => black.split(id),
            Colour::White => white.split(id),
        };
        ops.push(SplitOp {
            colour,
            children,
            parent: id,
        });
    }

    let bids = black.live();
    let wids = white.live();
    let bdeg: Vec<usize> = bids.iter().map(|&i| black.sizes[i]).collect();
    let wdeg: Vec<usize> = wids.iter().map(|&i| white.sizes[i]).collect();
    let argmax = |d: &[usize]| (0..d.len()).max_by_key(|&i| (d[i], usize::MAX - i)).unwrap();
    let forced = match (black.designated, white.designated) {
        (Some(b), Some(w)) => (
            bids.iter().position(|&i| i == b)?,
            wids.iter().position(|&i| i == w)?,
        ),
        _ => (argmax(&bdeg), argmax(&wdeg)),
    };
    let (brot, wrot) = bipartite_tree(&bdeg, &wdeg, forced)?;

    let mut alpha = rotations_to_raw(&brot, n);
    let mut beta = rotations_to_raw(&wrot, n);
    debug_assert_eq!(cycle_count(&then(&alpha, &beta)), 1);

    let mut brep = vec![u32::MAX; black.sizes.len()];
    for (v, &id) in bids.iter().enumerate() {
        brep[id] = brot[v][0];
    }
    let mut wrep = vec![u32::MAX; white.sizes.len()];
    for (v, &id) in wids.iter().enumerate() {
        wrep[id] = wrot[v][0];
    }

    for op in ops.iter().rev() {
        let reps = match op.colour {
            Colour::Black => &mut brep,
            Colour::White => &mut wrep,
        };
        let [x, y, z] = op.children.map(|c| reps[c]);
        reps[op.parent] = x;
        let mut merged = false;
        for pts in [[x, y, z], [x, z, y]] {
            let t = three_cycle(n, pts);
            let (a2, b2) = match op.colour {
                Colour::Black => (then(&t, &alpha), beta.clone()),
                Colour::White => (alpha.clone(), then(&beta, &t)),
            };
            if cycle_count(&then(&a2, &b2)) == 1 {
                alpha = a2;
                beta = b2;
                merged = true;
                break;
            }
        }
        if !merged {
            return None;
        }
    }
    Some((Permutation::from_raw(alpha), Permutation::from_raw(beta)))
}

/// Finds `α` of type `lambda` and `β` of type `mu` whose product fixes
/// exactly the last point and is an `(n−1)`-cycle on the rest, with
/// `⟨α, β⟩` transitive.
///
/// Built from a one-face solution on `n − 1` points by threading the new
/// point into an `α`-cycle and a `β`-cycle that share a point.
pub(crate) fn near_cycle(lambda: &[usize], mu: &[usize]) -> Option<(Permutation, Permutation)> {
    let n: usize = lambda.iter().sum();
    if n < 2 {
        return None;
    }
    let distinct = |parts: &[usize]| {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p >= 2).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        v
    };
    for p in distinct(lambda) {
        for q in distinct(mu) {
            let ip = lambda.iter().position(|&x| x == p).unwrap();
            let iq = mu.iter().position(|&x| x == q).unwrap();
            let mut l0 = lambda.to_vec();
            l0[ip] -= 1;
            let mut m0 = mu.to_vec();
            m0[iq] -= 1;
            let Some((a0, b0)) = unicellular(&l0, &m0, Some((ip, iq))) else {
                continue;
            };
            let f = (n - 1) as u32;
            let u = 0u32;
            let mut alpha = a0.raw().to_vec();
            let mut beta = b0.raw().to_vec();
            let w = alpha.iter().position(|&v| v == u).unwrap();
            alpha[w] = f;
            alpha.push(u);
            let after = beta[u as usize];
            beta[u as usize] = f;
            beta.push(after);
            return Some((Permutation::from_raw(alpha), Permutation::from_raw(beta)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_type::partitions;
    use crate::perm::is_transitive;

    #[test]
    fn every_admissible_pair_up_to_nine() {
        for n in 1..=9 {
            let ps = partitions(n);
            for l in &ps {
                for m in &ps {
                    let parts = l.len() + m.len();
                    let admissible = parts <= n + 1 && (n + 1 - parts) % 2 == 0;
                    let got = unicellular(l.parts(), m.parts(), None);
                    assert_eq!(got.is_some(), admissible, "{l} {m}");
                    if let Some((a, b)) = got {
                        assert_eq!(a.cycle_type(), *l);
                        assert_eq!(b.cycle_type(), *m);
                        assert_eq!(a.then(&b).cycle_count(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn near_cycle_pairs_up_to_nine() {
        for n in 2..=9 {
            let ps = partitions(n);
            for l in &ps {
                for m in &ps {
                    let s = l.index() + m.index();
                    let fpf = l.is_fixed_point_free_involution() && m.is_fixed_point_free_involution();
                    let admissible = s >= n && (s - n) % 2 == 0 && !(fpf && n > 2);
                    let got = near_cycle(l.parts(), m.parts());
                    assert_eq!(got.is_some(), admissible, "{l} {m}");
                    if let Some((a, b)) = got {
                        assert_eq!(a.cycle_type(), *l);
                        assert_eq!(b.cycle_type(), *m);
                        let prod = a.then(&b);
                        assert!(prod.fixes(n));
                        assert_eq!(prod.cycle_count(), if n == 2 { 2 } else { 2 });
                        assert!(is_transitive(&[a, b]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn large_tight_case() {
        // 29 transpositions times 30 transpositions giving a 60-cycle.
        let mut l = vec![2; 29];
        l.extend([1, 1]);
        let m = vec![2; 30];
        let (a, b) = unicellular(&l, &m, None).unwrap();
        assert_eq!(a.then(&b).cycle_count(), 1);
    }
}
