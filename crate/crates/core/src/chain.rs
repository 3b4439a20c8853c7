//! Product-one tuples of any length `r ≥ 3` with prescribed orders, all in
//! `S_n` for `n = max + 2`.
//!
//! Longer lists are split in two halves, each prefixed with a prime `p`,
//! `n/2 < p ≤ n − 2`. In both halves the tail multiplies to the inverse of
//! the order-`p` head, which in `S_n` can only be a `p`-cycle. Conjugating
//! the right half so that its tail product inverts the left one lets the
//! two tails be concatenated. Degrees 4 and 6 have no such prime and are
//! handled separately.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::eks::conjugator;
use crate::oracle::{exhaustive_triple_search, OracleError, SearchBudget};
use crate::perm::{product, PermError, Permutation};
use crate::solver::{solve_unordered, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("need at least 3 orders, got {0}")]
    InvalidArity(usize),
    #[error("order {order} at position {index} is below 2")]
    OutOfRange { index: usize, order: usize },
    #[error("no prime p with {n}/2 < p <= {n} - 2")]
    NoSuchPrime { n: usize },
    #[error("cycle types differ, cannot align")]
    TypeMismatch,
    #[error("orders {0:?} have no product-one triple in S_6")]
    NotInTable([usize; 3]),
    #[error("split tree does not match the order list")]
    TreeMismatch,
    #[error("assembled chain failed verification")]
    Verification,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// How each block of the recursion was produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SplitTree {
    /// A three-element block from the triple solver.
    Solver { orders: [usize; 3] },
    /// A three-element block from the degree-6 search table.
    Table { orders: [usize; 3] },
    /// Involutions in `S_4`.
    Involutions { len: usize },
    /// Block `orders` split as `(p, orders[..mid])` and `(p, orders[mid..])`.
    Split {
        prime: usize,
        mid: usize,
        left: Box<SplitTree>,
        right: Box<SplitTree>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainResult {
    pub elements: Vec<Permutation>,
    pub orders: Vec<usize>,
    pub degree: usize,
    pub split_tree: SplitTree,
}

/// Smallest prime `p` with `n/2 < p ≤ n − 2`.
pub fn bertrand_prime(n: usize) -> Result<usize, ChainError> {
    (n / 2 + 1..=n.saturating_sub(2))
        .find(|&p| is_prime(p))
        .ok_or(ChainError::NoSuchPrime { n })
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Conjugates every entry by one `g` so that the product becomes
/// `target⁻¹`.
pub fn align_to_inverse(tuple: &[Permutation], target: &Permutation) -> Result<Vec<Permutation>, ChainError> {
    let prod = product(tuple)?;
    let g = conjugator(&prod, &target.inverse()).ok_or(ChainError::TypeMismatch)?;
    Ok(tuple.iter().map(|p| p.conjugate_by(&g)).collect())
}

fn check_orders(orders: &[usize]) -> Result<(), ChainError> {
    if orders.len() < 3 {
        return Err(ChainError::InvalidArity(orders.len()));
    }
    if let Some((index, &order)) = orders.iter().enumerate().find(|(_, &o)| o < 2) {
        return Err(ChainError::OutOfRange { index, order });
    }
    Ok(())
}

struct Builder {
    n: usize,
    seed: u64,
    table: BTreeMap<[usize; 3], Option<[Permutation; 3]>>,
}

impl Builder {
    fn prime(&self) -> Result<usize, ChainError> {
        if self.n == 6 {
            Ok(5)
        } else {
            bertrand_prime(self.n)
        }
    }

    fn plan(&self, orders: &[usize]) -> Result<SplitTree, ChainError> {
        if self.n == 4 {
            return Ok(SplitTree::Involutions { len: orders.len() });
        }
        if let [a, b, c] = *orders {
            return Ok(if self.n == 6 && orders.contains(&5) {
                SplitTree::Table { orders: [a, b, c] }
            } else {
                SplitTree::Solver { orders: [a, b, c] }
            });
        }
        let prime = self.prime()?;
        let mid = orders.len() / 2;
        let mut left = vec![prime];
        left.extend_from_slice(&orders[..mid]);
        let mut right = vec![prime];
        right.extend_from_slice(&orders[mid..]);
        Ok(SplitTree::Split {
            prime,
            mid,
            left: Box::new(self.plan(&left)?),
            right: Box::new(self.plan(&right)?),
        })
    }

    fn table(&mut self, orders: [usize; 3]) -> Result<[Permutation; 3], ChainError> {
        if !self.table.contains_key(&orders) {
            let [a, b, c] = orders;
            let found = exhaustive_triple_search(6, a, b, c, &SearchBudget::default())?;
            self.table.insert(orders, found);
        }
        self.table[&orders].clone().ok_or(ChainError::NotInTable(orders))
    }

    fn run(&mut self, tree: &SplitTree, orders: &[usize]) -> Result<Vec<Permutation>, ChainError> {
        match *tree {
            SplitTree::Involutions { len } if len == orders.len() && orders.iter().all(|&o| o == 2) => {
                Ok(involutions(len))
            }
            SplitTree::Solver { orders: o } if o[..] == *orders => {
                let t = solve_unordered(o, self.seed)?;
                t.iter().map(|p| p.embed(self.n).map_err(ChainError::from)).collect()
            }
            SplitTree::Table { orders: o } if o[..] == *orders => Ok(self.table(o)?.to_vec()),
            SplitTree::Split {
                prime,
                mid,
                ref left,
                ref right,
            } if orders.len() > 3 && mid > 0 && mid < orders.len() => {
                let mut lo = vec![prime];
                lo.extend_from_slice(&orders[..mid]);
                let mut ro = vec![prime];
                ro.extend_from_slice(&orders[mid..]);
                let l = self.run(left, &lo)?;
                let r = self.run(right, &ro)?;
                let l_tail = &l[1..];
                let aligned = align_to_inverse(&r[1..], &product(l_tail)?)?;
                let mut out = l_tail.to_vec();
                out.extend(aligned);
                Ok(out)
            }
            _ => Err(ChainError::TreeMismatch),
        }
    }
}

/// `r` involutions of `S_4` multiplying to 1.
fn involutions(r: usize) -> Vec<Permutation> {
    let t = Permutation::transposition(4, 1, 2).expect("valid");
    let mut out = Vec::with_capacity(r);
    if r % 2 == 1 {
        let s = Permutation::transposition(4, 3, 4).expect("valid");
        let st = t.then(&s);
        out.extend([t.clone(), s, st]);
    }
    while out.len() < r {
        out.push(t.clone());
    }
    out
}

fn verify(elements: &[Permutation], orders: &[usize], n: usize) -> Result<(), ChainError> {
    let ok = elements.len() == orders.len()
        && elements.iter().all(|p| p.degree() == n)
        && elements.iter().zip(orders).all(|(p, &o)| p.order() == o)
        && product(elements)?.is_identity();
    if ok {
        Ok(())
    } else {
        Err(ChainError::Verification)
    }
}

/// Product-one tuple with `|x_i| = orders[i]` in `S_{max+2}`.
pub fn extend(orders: &[usize]) -> Result<ChainResult, ChainError> {
    extend_with_seed(orders, 0)
}

pub fn extend_with_seed(orders: &[usize], seed: u64) -> Result<ChainResult, ChainError> {
    check_orders(orders)?;
    let n = orders.iter().copied().max().unwrap_or(0) + 2;
    let b = Builder {
        n,
        seed,
        table: BTreeMap::new(),
    };
    let tree = b.plan(orders)?;
    replay_with_seed(&tree, orders, seed)
}

/// Rebuilds the chain following a recorded split tree.
pub fn replay(tree: &SplitTree, orders: &[usize]) -> Result<ChainResult, ChainError> {
    replay_with_seed(tree, orders, 0)
}

pub fn replay_with_seed(tree: &SplitTree, orders: &[usize], seed: u64) -> Result<ChainResult, ChainError> {
    check_orders(orders)?;
    let n = orders.iter().copied().max().unwrap_or(0) + 2;
    let mut b = Builder {
        n,
        seed,
        table: BTreeMap::new(),
    };
    let elements = b.run(tree, orders)?;
    verify(&elements, orders, n)?;
    Ok(ChainResult {
        elements,
        orders: orders.to_vec(),
        degree: n,
        split_tree: tree.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_type::partitions;

    #[test]
    fn primes() {
        assert_eq!(bertrand_prime(10).unwrap(), 7);
        assert_eq!(bertrand_prime(7).unwrap(), 5);
        assert_eq!(bertrand_prime(5).unwrap(), 3);
        assert!(bertrand_prime(4).is_err());
        assert!(bertrand_prime(6).is_err());
        for n in (5..2000).filter(|&n| n != 6) {
            bertrand_prime(n).unwrap();
        }
    }

    #[test]
    fn order_p_elements_are_p_cycles() {
        for n in (5..=30).filter(|&n| n != 6) {
            let p = bertrand_prime(n).unwrap();
            for ct in partitions(n) {
                if ct.order() == p {
                    assert_eq!(ct.nontrivial().collect::<Vec<_>>(), vec![p], "n={n}");
                }
            }
        }
    }

    #[test]
    fn align_examples() {
        let t = [Permutation::cycle(3, &[1, 2, 3]).unwrap()];
        let target = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        let a = align_to_inverse(&t, &target).unwrap();
        assert_eq!(a[0], Permutation::cycle(3, &[1, 3, 2]).unwrap());
        let a = align_to_inverse(&t, &target.inverse()).unwrap();
        assert_eq!(a[0], t[0]);
        assert_eq!(
            align_to_inverse(&t, &Permutation::transposition(3, 1, 2).unwrap()),
            Err(ChainError::TypeMismatch)
        );
    }

    #[test]
    fn examples() {
        let c = extend(&[2, 2, 2, 2]).unwrap();
        assert_eq!(c.degree, 4);
        assert!(c.elements.iter().all(|p| *p == Permutation::transposition(4, 1, 2).unwrap()));
        let c = extend(&[3, 3, 3, 4]).unwrap();
        assert_eq!(c.degree, 6);
        let c = extend(&[5, 5, 5, 5, 5]).unwrap();
        assert_eq!(c.degree, 7);
        assert!(matches!(c.split_tree, SplitTree::Split { prime: 5, .. }));
        assert_eq!(extend(&[2, 3]), Err(ChainError::InvalidArity(2)));
        assert_eq!(extend(&[2, 1, 3]), Err(ChainError::OutOfRange { index: 1, order: 1 }));
    }

    #[test]
    fn small_degree_specials() {
        for r in 3..=9 {
            let c = extend(&vec![2; r]).unwrap();
            assert_eq!(c.degree, 4);
        }
        for orders in [[4, 4, 4, 4, 4].as_slice(), &[2, 3, 4, 2], &[4, 3, 2, 3, 4, 3, 2], &[3, 4, 4]] {
            assert_eq!(extend(orders).unwrap().degree, 6);
        }
    }

    #[test]
    fn replay_matches() {
        let orders = [7, 3, 12, 2, 9, 5];
        let c = extend(&orders).unwrap();
        assert_eq!(replay(&c.split_tree, &orders).unwrap(), c);
        assert_eq!(replay(&c.split_tree, &orders[..5]), Err(ChainError::TreeMismatch));
    }
}
