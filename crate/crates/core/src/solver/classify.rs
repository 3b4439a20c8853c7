use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cycle_type::uniform_class_index;

use super::SolveError;

pub type Triple = (usize, usize, usize);

/// Which construction produces the triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseKind {
    /// Even class triple, realized directly in `S_c`.
    EvenTriple,
    /// One `k`-cycle removed from the even-order element's class, in `S_c`.
    EvenTripleDropCycle,
    /// One transposition added to the even-order element's class, in `S_c`.
    EvenTripleAddTransposition,
    /// Odd triple with `c` odd and an even order among `a, b`, in `S_{c+1}`.
    OddWithEven,
    /// `a, b` odd, `c` even, `b > (c+1)/2`.
    CEvenCase1,
    /// `a = b = c/2 + 1`.
    CEvenCase1ExceptionHalf,
    /// `(a, b, c) = (3, 5, 8)`.
    CEvenCase1Exception358,
    /// `a = b = c`, all even.
    CEvenAllEqual,
    /// `2b − 1 ≤ c < 2b + a − 2`, grown from `(a, b, c − a + 1)`.
    CEvenCase2,
    /// `c ≥ 2b + a − 2`, grown from `(a, b, c − a − b + 2)`.
    CEvenCase3,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::EvenTriple => "EvenTriple_Sc",
            CaseKind::EvenTripleDropCycle => "EvenTriple_Sc_DropCycle",
            CaseKind::EvenTripleAddTransposition => "EvenTriple_Sc_AddTransposition",
            CaseKind::OddWithEven => "OddWithEven_Sc1",
            CaseKind::CEvenCase1 => "CEven_Case1",
            CaseKind::CEvenCase1ExceptionHalf => "CEven_Case1_ExceptionHalf",
            CaseKind::CEvenCase1Exception358 => "CEven_Case1_Exception358",
            CaseKind::CEvenAllEqual => "CEven_AllEqual",
            CaseKind::CEvenCase2 => "CEven_Case2",
            CaseKind::CEvenCase3 => "CEven_Case3",
        }
    }

    /// Degree of the produced triple for orders with largest entry `c`.
    pub fn degree(self, c: usize) -> usize {
        match self {
            CaseKind::EvenTriple | CaseKind::EvenTripleDropCycle | CaseKind::EvenTripleAddTransposition => c,
            CaseKind::OddWithEven => c + 1,
            _ => c + 2,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaseTag {
    pub kind: CaseKind,
    /// Triples visited, starting with the input; `c` strictly decreases.
    pub trace: Vec<Triple>,
}

pub(crate) fn check_sorted(a: usize, b: usize, c: usize) -> Result<(), SolveError> {
    if a < 2 || a > b || b > c {
        return Err(SolveError::OutOfRange { a, b, c });
    }
    Ok(())
}

/// Parity of `ind(A) + ind(B) + ind(C)` for `A`, `B` the classes of
/// `⌊c/a⌋` `a`-cycles and `⌊c/b⌋` `b`-cycles in `S_c`, and `C` the
/// `c`-cycles.
pub fn class_triple_is_odd(a: usize, b: usize, c: usize) -> bool {
    let ia = uniform_class_index(c, a).expect("a in 2..=c");
    let ib = uniform_class_index(c, b).expect("b in 2..=c");
    (ia + ib + c - 1) % 2 == 1
}

/// Slot whose class is modified in the drop/add branches: `a` when all
/// three orders are even, otherwise the even one of `a`, `b`.
pub(crate) fn modified_slot(a: usize, _b: usize) -> usize {
    if a % 2 == 0 {
        0
    } else {
        1
    }
}

/// Case split for `a, b` odd and `c` even. Independent of the class
/// parity, so recursion bases land here too.
pub(crate) fn lemma5_step(a: usize, b: usize, c: usize) -> CaseKind {
    if 2 * b > c + 1 {
        if a == b && 2 * a == c + 2 {
            CaseKind::CEvenCase1ExceptionHalf
        } else if (a, b, c) == (3, 5, 8) {
            CaseKind::CEvenCase1Exception358
        } else {
            CaseKind::CEvenCase1
        }
    } else if c < 2 * b + a - 2 {
        CaseKind::CEvenCase2
    } else {
        CaseKind::CEvenCase3
    }
}

fn step(a: usize, b: usize, c: usize) -> CaseKind {
    if !class_triple_is_odd(a, b, c) {
        return CaseKind::EvenTriple;
    }
    let all_even = a % 2 == 0 && b % 2 == 0 && c % 2 == 0;
    if all_even && a == c {
        return CaseKind::CEvenAllEqual;
    }
    if a % 2 == 1 && b % 2 == 1 {
        // An odd triple with a, b odd forces c even.
        lemma5_step(a, b, c)
    } else if c % 2 == 1 {
        CaseKind::OddWithEven
    } else {
        // c even: either all three even, or exactly one of a, b even.
        let e = [a, b][modified_slot(a, b)];
        if c % e == 0 {
            CaseKind::EvenTripleDropCycle
        } else {
            CaseKind::EvenTripleAddTransposition
        }
    }
}

/// Case of `(a, b, c)` with the full recursion trace.
pub fn classify(a: usize, b: usize, c: usize) -> Result<CaseTag, SolveError> {
    check_sorted(a, b, c)?;
    let kind = step(a, b, c);
    let mut trace = vec![(a, b, c)];
    let mut cur = kind;
    let mut cc = c;
    loop {
        cc = match cur {
            CaseKind::CEvenCase2 => cc - (a - 1),
            CaseKind::CEvenCase3 => cc - (a + b - 2),
            _ => break,
        };
        trace.push((a, b, cc));
        cur = lemma5_step(a, b, cc);
    }
    Ok(CaseTag { kind, trace })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(classify(2, 3, 6).unwrap().kind, CaseKind::EvenTriple);
        assert_eq!(
            classify(3, 3, 4).unwrap().kind,
            CaseKind::CEvenCase1ExceptionHalf
        );
        let t = classify(3, 5, 10).unwrap();
        assert_eq!(t.kind, CaseKind::CEvenCase2);
        assert_eq!(t.trace, vec![(3, 5, 10), (3, 5, 8)]);
        let t = classify(3, 3, 10).unwrap();
        assert_eq!(t.kind, CaseKind::CEvenCase3);
        assert_eq!(t.trace, vec![(3, 3, 10), (3, 3, 6), (3, 3, 4)]);
        assert_eq!(classify(4, 4, 4).unwrap().kind, CaseKind::CEvenAllEqual);
        assert_eq!(classify(2, 2, 2).unwrap().kind, CaseKind::CEvenAllEqual);
        assert_eq!(classify(3, 5, 8).unwrap().kind, CaseKind::CEvenCase1Exception358);
        assert_eq!(classify(2, 2, 4).unwrap().kind, CaseKind::EvenTripleDropCycle);
        assert_eq!(classify(3, 4, 5).unwrap().kind, CaseKind::OddWithEven);
        assert_eq!(classify(2, 3, 3).unwrap().kind, CaseKind::OddWithEven);
        assert_eq!(classify(2, 5, 5).unwrap().kind, CaseKind::EvenTriple);
    }

    #[test]
    fn odd_triples_with_a_single_even_order_and_c_even() {
        // Two even orders among a, b, c with an odd class triple.
        assert!(class_triple_is_odd(2, 3, 4));
        assert_eq!(classify(2, 3, 4).unwrap().kind, CaseKind::EvenTripleDropCycle);
        assert!(class_triple_is_odd(3, 4, 8));
        assert_eq!(modified_slot(3, 4), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(classify(1, 2, 3).is_err());
        assert!(classify(3, 2, 4).is_err());
        assert!(classify(2, 5, 4).is_err());
    }

    #[test]
    fn trace_decreases() {
        for c in 2..=60 {
            for b in 2..=c {
                for a in 2..=b {
                    let t = classify(a, b, c).unwrap();
                    assert_eq!(t.trace[0], (a, b, c));
                    assert!(t.trace.windows(2).all(|w| w[1].2 < w[0].2));
                    let last = *t.trace.last().unwrap();
                    assert!(t.trace.len() == 1 || matches!(
                        lemma5_step(last.0, last.1, last.2),
                        CaseKind::CEvenCase1 | CaseKind::CEvenCase1ExceptionHalf | CaseKind::CEvenCase1Exception358
                    ));
                }
            }
        }
    }
}
