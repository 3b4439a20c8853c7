//! Product-one permutation tuples of prescribed orders.
//!
//! For `2 ≤ a ≤ b ≤ c` the solver builds `x, y, z ∈ S_{c+2}` of orders
//! `a, b, c` with `xyz = 1`, following a case analysis on the parity of the
//! index sum of three canonical classes. Longer tuples are assembled by
//! splitting around a prime-order cycle. The crate also carries an exhaustive
//! oracle for small degrees and the genus bookkeeping of the associated
//! branched covers.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod chain;
pub mod cycle_type;
pub mod eks;
pub mod hurwitz;
pub mod notation;
pub mod oracle;
pub mod perm;
pub mod solver;

pub use cycle_type::{classes, partitions, uniform_class_index, ClassSpec, CycleType};
pub use perm::{is_transitive, orbits, product, PermError, Permutation, Side};
