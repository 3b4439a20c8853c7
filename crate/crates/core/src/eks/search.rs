//! Seeded random draws and complete backtracking for `α ∈ C₁` with
//! `α⁻¹ · target ∈ C₂`.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::RngCore;

use crate::cycle_type::CycleType;
use crate::perm::{is_transitive, Permutation};

/// A uniformly random member of the class with the given cycle type.
pub(crate) fn random_member<R: RngCore>(ct: &CycleType, rng: &mut R) -> Permutation {
    let n = ct.degree();
    let mut pts: Vec<u32> = (0..n as u32).collect();
    pts.shuffle(rng);
    let mut raw = vec![0u32; n];
    let mut at = 0;
    for &len in ct.parts() {
        let cyc = &pts[at..at + len];
        for i in 0..len {
            raw[cyc[i] as usize] = cyc[(i + 1) % len];
        }
        at += len;
    }
    Permutation::from_raw(raw)
}

/// `β` with `α · β = target`, i.e. `β = α⁻¹ · target`.
pub(crate) fn cofactor(alpha: &Permutation, target: &Permutation) -> Permutation {
    alpha.inverse().then(target)
}

pub(crate) fn random_search<R: RngCore>(
    c1: &CycleType,
    c2: &CycleType,
    target: &Permutation,
    transitive: bool,
    attempts: u32,
    rng: &mut R,
) -> Option<(Permutation, Permutation)> {
    for _ in 0..attempts {
        let alpha = random_member(c1, rng);
        let beta = cofactor(&alpha, target);
        if beta.cycle_type() != *c2 {
            continue;
        }
        if transitive && !is_transitive(&[alpha.clone(), beta.clone()]).unwrap_or(false) {
            continue;
        }
        return Some((alpha, beta));
    }
    None
}

const NONE: u32 = u32::MAX;

/// Partial `β`, tracked as a set of paths. Endpoints carry the opposite
/// endpoint and the path length in points.
struct Chains {
    other_end: Vec<u32>,
    len: Vec<usize>,
    remaining: Vec<usize>,
    undo: Vec<Undo>,
}

enum Undo {
    Closed { length: usize },
    Merged {
        head: u32,
        tail: u32,
        head_end: u32,
        tail_end: u32,
        head_len: usize,
        tail_len: usize,
    },
}

impl Chains {
    fn new(n: usize, mu: &CycleType) -> Self {
        let mut remaining = vec![0; n + 1];
        for &p in mu.parts() {
            remaining[p] += 1;
        }
        Chains {
            other_end: (0..n as u32).collect(),
            len: vec![1; n],
            remaining,
            undo: Vec::new(),
        }
    }

    fn max_remaining(&self) -> usize {
        (1..self.remaining.len())
            .rev()
            .find(|&l| self.remaining[l] > 0)
            .unwrap_or(0)
    }

    /// Records `β(u) = w`; `u` is a path tail and `w` a path head.
    fn link(&mut self, u: u32, w: u32) -> bool {
        let head = self.other_end[u as usize];
        if head == w {
            let length = self.len[u as usize];
            if self.remaining[length] == 0 {
                return false;
            }
            self.remaining[length] -= 1;
            self.undo.push(Undo::Closed { length });
            return true;
        }
        let tail = self.other_end[w as usize];
        let total = self.len[u as usize] + self.len[w as usize];
        if total > self.max_remaining() {
            return false;
        }
        self.undo.push(Undo::Merged {
            head,
            tail,
            head_end: self.other_end[head as usize],
            tail_end: self.other_end[tail as usize],
            head_len: self.len[head as usize],
            tail_len: self.len[tail as usize],
        });
        self.other_end[head as usize] = tail;
        self.other_end[tail as usize] = head;
        self.len[head as usize] = total;
        self.len[tail as usize] = total;
        true
    }

    fn unlink(&mut self) {
        match self.undo.pop().expect("unlink without link") {
            Undo::Closed { length } => self.remaining[length] += 1,
            Undo::Merged {
                head,
                tail,
                head_end,
                tail_end,
                head_len,
                tail_len,
            } => {
                self.other_end[head as usize] = head_end;
                self.other_end[tail as usize] = tail_end;
                self.len[head as usize] = head_len;
                self.len[tail as usize] = tail_len;
            }
        }
    }
}

struct Backtracker<'a> {
    n: usize,
    target: &'a [u32],
    lam_remaining: Vec<usize>,
    alpha: Vec<u32>,
    placed: Vec<bool>,
    chains: Chains,
    transitive: bool,
    nodes: u64,
    node_cap: u64,
}

impl Backtracker<'_> {
    fn assign(&mut self, from: u32, to: u32) -> bool {
        self.nodes += 1;
        if !self.chains.link(to, self.target[from as usize]) {
            return false;
        }
        self.alpha[from as usize] = to;
        true
    }

    fn unassign(&mut self, from: u32) {
        self.alpha[from as usize] = NONE;
        self.chains.unlink();
    }

    fn next_cycle(&mut self) -> bool {
        if self.nodes > self.node_cap {
            return false;
        }
        let Some(start) = (0..self.n).find(|&i| !self.placed[i]) else {
            return self.accept();
        };
        for len in (1..self.lam_remaining.len()).rev() {
            if self.lam_remaining[len] == 0 {
                continue;
            }
            self.lam_remaining[len] -= 1;
            self.placed[start] = true;
            if self.grow(start as u32, start as u32, len - 1) {
                return true;
            }
            self.placed[start] = false;
            self.lam_remaining[len] += 1;
        }
        false
    }

    fn grow(&mut self, start: u32, cur: u32, left: usize) -> bool {
        if left == 0 {
            if !self.assign(cur, start) {
                return false;
            }
            if self.next_cycle() {
                return true;
            }
            self.unassign(cur);
            return false;
        }
        for v in 0..self.n {
            if self.placed[v] || self.nodes > self.node_cap {
                continue;
            }
            if !self.assign(cur, v as u32) {
                continue;
            }
            self.placed[v] = true;
            if self.grow(start, v as u32, left - 1) {
                return true;
            }
            self.placed[v] = false;
            self.unassign(cur);
        }
        false
    }

    fn accept(&self) -> bool {
        if !self.transitive {
            return true;
        }
        let alpha = Permutation::from_raw(self.alpha.clone());
        let beta = cofactor(&alpha, &Permutation::from_raw(self.target.to_vec()));
        is_transitive(&[alpha, beta]).unwrap_or(false)
    }
}

/// Complete search over `α` in class `c1`, pruning on the partially built
/// cycle structure of `β = α⁻¹ · target`. Returns `None` when no witness
/// exists or the node cap was hit.
pub(crate) fn backtrack(
    c1: &CycleType,
    c2: &CycleType,
    target: &Permutation,
    transitive: bool,
    node_cap: u64,
) -> Option<(Permutation, Permutation)> {
    let n = target.degree();
    let mut lam_remaining = vec![0; n + 1];
    for &p in c1.parts() {
        lam_remaining[p] += 1;
    }
    let mut bt = Backtracker {
        n,
        target: target.raw(),
        lam_remaining,
        alpha: vec![NONE; n],
        placed: vec![false; n],
        chains: Chains::new(n, c2),
        transitive,
        nodes: 0,
        node_cap,
    };
    if !bt.next_cycle() {
        return None;
    }
    let alpha = Permutation::from_raw(bt.alpha);
    let beta = cofactor(&alpha, target);
    Some((alpha, beta))
}
