//! Cycle notation: `(1,2,3)(4,5)@6`.
//!
//! Printing always writes the `@n` degree suffix so that fixed points above
//! the largest moved point survive a round trip. The identity prints as
//! `()@n`. When parsing, the suffix is optional and the degree defaults to
//! the largest listed point. Whitespace is ignored and singleton cycles
//! such as `(3)` are accepted.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {at}")]
    Unexpected { found: char, at: usize },
    #[error("unterminated cycle")]
    Unterminated,
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("cannot infer degree of an empty permutation without @n")]
    NoDegree,
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            f.write_str("()")?;
        }
        for c in &cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        write!(f, "@{}", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        let mut degree = None;
        let number = |from: usize, to: usize| -> Result<usize, ParseError> {
            let text: String = compact[from..to].iter().map(|&(_, c)| c).collect();
            text.parse::<usize>().map_err(|_| ParseError::BadNumber(text))
        };
        while i < compact.len() {
            let (at, c) = compact[i];
            match c {
                '(' => {
                    i += 1;
                    let mut cycle = Vec::new();
                    loop {
                        let start = i;
                        while i < compact.len() && compact[i].1.is_ascii_digit() {
                            i += 1;
                        }
                        if i > start {
                            cycle.push(number(start, i)?);
                        }
                        match compact.get(i) {
                            Some(&(_, ',')) if i > start => i += 1,
                            Some(&(_, ')')) if i > start || cycle.is_empty() => {
                                i += 1;
                                break;
                            }
                            Some(&(at, found)) => return Err(ParseError::Unexpected { found, at }),
                            None => return Err(ParseError::Unterminated),
                        }
                    }
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                '@' => {
                    let start = i + 1;
                    let end = compact.len();
                    if start == end {
                        return Err(ParseError::BadNumber(String::new()));
                    }
                    degree = Some(number(start, end)?);
                    i = end;
                }
                found => return Err(ParseError::Unexpected { found, at }),
            }
        }
        let degree = match degree {
            Some(d) => d,
            None => cycles
                .iter()
                .flatten()
                .copied()
                .max()
                .ok_or(ParseError::NoDegree)?,
        };
        Ok(Permutation::from_cycles(degree, &cycles)?)
    }
}

/// Parses a list of permutations separated by `;` or whitespace between
/// `@n` suffixes, e.g. `(1,2)@3; (2,3)@3`.
pub fn parse_tuple(s: &str) -> Result<Vec<Permutation>, ParseError> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn prints_canonically() {
        let p = Permutation::from_cycles(6, &[&[5, 4][..], &[3, 1, 2][..]]).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)@6");
        assert_eq!(Permutation::identity(4).to_string(), "()@4");
    }

    #[test]
    fn parses_variants() {
        let p: Permutation = "(1,2)@5".parse().unwrap();
        assert_eq!(p.degree(), 5);
        let q: Permutation = " (1, 2 ,3) (4,5) ".parse().unwrap();
        assert_eq!(q.degree(), 5);
        assert_eq!(q.cycle_type().parts(), &[3, 2]);
        let id: Permutation = "()@3".parse().unwrap();
        assert!(id.is_identity());
        let single: Permutation = "(3)(1,2)".parse().unwrap();
        assert_eq!(single.degree(), 3);
    }

    #[test]
    fn rejects_garbage() {
        assert!("()".parse::<Permutation>().is_err());
        assert!("(1,2".parse::<Permutation>().is_err());
        assert!("(1,,2)".parse::<Permutation>().is_err());
        assert!("(1,2)(2,3)".parse::<Permutation>().is_err());
        assert!("(1,2)@1".parse::<Permutation>().is_err());
        assert!("x".parse::<Permutation>().is_err());
        assert!("(1,2)@".parse::<Permutation>().is_err());
    }

    #[test]
    fn tuple_parsing() {
        let t = parse_tuple("(1,2)@2; (1,2)@2").unwrap();
        assert_eq!(t.len(), 2);
    }
}
