use alloc::vec::Vec;
use core::fmt;

use crate::cycle_type::CycleType;
use crate::perm::Permutation;

use super::{Slot, SolveResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DegreeMismatch { slot: Slot, degree: usize, expected: usize },
    ProductNotIdentity,
    WrongOrder { slot: Slot, expected: usize, found: usize },
    BadCycleShape { slot: Slot, cycle_type: CycleType },
    DegreeTooLarge { degree: usize, limit: usize },
    TooManyExceptional { slots: Vec<Slot> },
    HolderMismatch { claimed: Option<Slot>, observed: Vec<Slot> },
    FixedPointClaim { slot: Slot, point: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeMismatch { slot, degree, expected } => {
                write!(f, "{slot} has degree {degree}, expected {expected}")
            }
            Violation::ProductNotIdentity => f.write_str("xyz is not the identity"),
            Violation::WrongOrder { slot, expected, found } => {
                write!(f, "{slot} has order {found}, expected {expected}")
            }
            Violation::BadCycleShape { slot, cycle_type } => {
                write!(f, "{slot} has disallowed cycle type {cycle_type}")
            }
            Violation::DegreeTooLarge { degree, limit } => write!(f, "degree {degree} exceeds {limit}"),
            Violation::TooManyExceptional { slots } => {
                write!(f, "extra transposition in more than one element: {slots:?}")
            }
            Violation::HolderMismatch { claimed, observed } => {
                write!(f, "claimed holder {claimed:?}, observed {observed:?}")
            }
            Violation::FixedPointClaim { slot, point } => {
                write!(f, "{slot} does not fix {point} on the big cycle of z")
            }
        }
    }
}

enum Shape {
    Plain,
    Exceptional,
    /// Order 2 outside `z`: an extra transposition cannot be told apart.
    Ambiguous,
}

fn shape(p: &Permutation, k: usize, is_z: bool) -> Option<Shape> {
    let ct = p.cycle_type();
    if ct.nontrivial().any(|l| l != k && l != 2) {
        return None;
    }
    let (nk, n2) = (ct.count(k), ct.count(2));
    match (is_z, k == 2) {
        (true, true) => match n2 {
            1 => Some(Shape::Plain),
            2 => Some(Shape::Exceptional),
            _ => None,
        },
        (true, false) if nk == 1 && n2 <= 1 => Some(if n2 == 1 { Shape::Exceptional } else { Shape::Plain }),
        (true, false) => None,
        (false, true) => Some(Shape::Ambiguous),
        (false, false) if n2 <= 1 => Some(if n2 == 1 { Shape::Exceptional } else { Shape::Plain }),
        (false, false) => None,
    }
}

/// Re-checks every structural claim of `r` from scratch. An empty list
/// means the result is sound.
pub fn verify_structure(r: &SolveResult) -> Vec<Violation> {
    let mut out = Vec::new();
    let (a, b, c) = r.orders;
    let n = r.x.degree();
    let slots = [(Slot::X, &r.x, a), (Slot::Y, &r.y, b), (Slot::Z, &r.z, c)];
    for &(slot, p, _) in &slots[1..] {
        if p.degree() != n {
            out.push(Violation::DegreeMismatch {
                slot,
                degree: p.degree(),
                expected: n,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    if n > c + 2 {
        out.push(Violation::DegreeTooLarge { degree: n, limit: c + 2 });
    }
    let xyz = r.x.compose(&r.y).and_then(|xy| xy.compose(&r.z));
    if !xyz.map(|p| p.is_identity()).unwrap_or(false) {
        out.push(Violation::ProductNotIdentity);
    }
    let mut exceptional = Vec::new();
    let mut ambiguous = Vec::new();
    for &(slot, p, k) in &slots {
        let found = p.order();
        if found != k {
            out.push(Violation::WrongOrder { slot, expected: k, found });
        }
        match shape(p, k, slot == Slot::Z) {
            None => out.push(Violation::BadCycleShape {
                slot,
                cycle_type: p.cycle_type(),
            }),
            Some(Shape::Exceptional) => exceptional.push(slot),
            Some(Shape::Ambiguous) => ambiguous.push(slot),
            Some(Shape::Plain) => {}
        }
    }
    if exceptional.len() > 1 {
        out.push(Violation::TooManyExceptional {
            slots: exceptional.clone(),
        });
    }
    let claimed = r.exceptional_transposition_holder;
    let consistent = match claimed {
        None => exceptional.is_empty(),
        Some(s) => exceptional.iter().all(|&e| e == s) && (exceptional.contains(&s) || ambiguous.contains(&s)),
    };
    if !consistent {
        out.push(Violation::HolderMismatch {
            claimed,
            observed: exceptional,
        });
    }
    if let Some((slot, point)) = r.fixed_point_on_big_cycle {
        let holder = match slot {
            Slot::X => Some(&r.x),
            Slot::Y => Some(&r.y),
            Slot::Z => None,
        };
        let on_big = r.z.cycles().iter().any(|cy| cy.len() == c && cy.contains(&point));
        if point == 0 || point > n || !on_big || !holder.is_some_and(|p| p.fixes(point)) {
            out.push(Violation::FixedPointClaim { slot, point });
        }
    }
    out
}
