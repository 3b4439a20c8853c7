//! Emit-time re-verification on plain image vectors.
//!
//! These routines deliberately avoid `permprod_core::Permutation`: a tuple
//! is a list of 1-based image vectors and every property is recomputed
//! from scratch.

use serde::Serialize;

pub type Images = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool) -> Self {
        Check { name: name.into(), ok }
    }
}

/// Applies `p` first, then `q`.
pub fn compose(p: &[usize], q: &[usize]) -> Option<Images> {
    if p.len() != q.len() {
        return None;
    }
    p.iter().map(|&i| q.get(i.checked_sub(1)?).copied()).collect()
}

pub fn is_bijection(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| {
        (1..=p.len()).contains(&v) && !std::mem::replace(&mut seen[v - 1], true)
    })
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| v == i + 1)
}

/// Cycle lengths, descending, fixed points included.
pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] - 1;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn order(p: &[usize]) -> u128 {
    cycle_lengths(p).into_iter().fold(1u128, |acc, l| acc / gcd(acc, l as u128) * l as u128)
}

pub fn index(p: &[usize]) -> usize {
    p.len() - cycle_lengths(p).len()
}

pub fn product(tuple: &[Images]) -> Option<Images> {
    let (first, rest) = tuple.split_first()?;
    rest.iter().try_fold(first.clone(), |acc, q| compose(&acc, q))
}

/// Orbits of the generated group, each sorted, ordered by least point.
pub fn orbits(tuple: &[Images]) -> Vec<Vec<usize>> {
    let n = tuple.first().map_or(0, Vec::len);
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let k = out.len();
        let mut stack = vec![s];
        let mut orbit = Vec::new();
        label[s] = k;
        while let Some(i) = stack.pop() {
            orbit.push(i + 1);
            for p in tuple {
                let j = p[i] - 1;
                if label[j] == usize::MAX {
                    label[j] = k;
                    stack.push(j);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// `2g` per orbit, possibly odd or negative for a broken tuple.
pub fn twice_genus_per_orbit(tuple: &[Images]) -> Vec<(Vec<usize>, i64)> {
    orbits(tuple)
        .into_iter()
        .map(|orbit| {
            let size = orbit.len() as i64;
            let ind: i64 = tuple
                .iter()
                .map(|p| {
                    let restricted: Vec<usize> = orbit.iter().map(|&i| p[i - 1]).collect();
                    let pos = |v: usize| orbit.binary_search(&v).unwrap() + 1;
                    let local: Images = restricted.into_iter().map(pos).collect();
                    index(&local) as i64
                })
                .sum();
            (orbit, ind - 2 * (size - 1))
        })
        .collect()
}

/// Bijection, common degree, product one, per-slot orders and cycle lengths
/// drawn from `{1, 2, order}`.
pub fn tuple_checks(tuple: &[Images], orders: &[usize]) -> Vec<Check> {
    let n = tuple.first().map_or(0, Vec::len);
    let mut checks = vec![
        Check::new("bijective", tuple.iter().all(|p| is_bijection(p))),
        Check::new("common_degree", tuple.iter().all(|p| p.len() == n)),
    ];
    let prod_ok = checks.iter().all(|c| c.ok) && product(tuple).is_some_and(|p| is_identity(&p));
    checks.push(Check::new("product_identity", prod_ok));
    let orders_ok = tuple.len() == orders.len() && tuple.iter().zip(orders).all(|(p, &o)| order(p) == o as u128);
    checks.push(Check::new("orders", orders_ok));
    let shape_ok = orders_ok
        && tuple
            .iter()
            .zip(orders)
            .all(|(p, &o)| cycle_lengths(p).iter().all(|&l| l == 1 || l == 2 || l == o));
    checks.push(Check::new("cycle_shape", shape_ok));
    let ind: usize = tuple.iter().map(|p| index(p)).sum();
    checks.push(Check::new("even_index_sum", ind % 2 == 0));
    checks
}
