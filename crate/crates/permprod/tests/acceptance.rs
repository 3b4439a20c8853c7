//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::ops::ControlFlow;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use permprod::survey;
use permprod_core::chain::{extend_with_seed, ChainResult};
use permprod_core::classes;
use permprod_core::eks::{realize, RealizationRequest, RealizeError, Variant};
use permprod_core::hurwitz::genus;
use permprod_core::oracle::{for_each_product_one_triple, min_degree, pair_realizable, SearchBudget};
use permprod_core::solver::{solve, verify_structure};
use permprod_core::{product, uniform_class_index, Permutation};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, cap_secs: u64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < cap_secs as f64, || {
        format!("took {:.1} s, cap {cap_secs} s", elapsed.as_secs_f64())
    })
}

fn index_sum(ps: &[&Permutation]) -> usize {
    ps.iter().map(|p| p.index()).sum()
}

fn sweep() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for c in 2..=60 {
        for b in 2..=c {
            for a in 2..=b {
                let r = solve(a, b, c).map_err(|e| format!("({a},{b},{c}): {e}"))?;
                let v = verify_structure(&r);
                ensure(v.is_empty(), || format!("({a},{b},{c}): {v:?}"))?;
                ensure(r.degree() <= c + 2, || format!("({a},{b},{c}): degree {}", r.degree()))?;
                count += 1;
            }
        }
    }
    let t = start.elapsed();
    within(t, 120)?;
    Ok(format!("{count} triples in {:.2} s", t.as_secs_f64()))
}

fn perm(n: usize, s: &str) -> Permutation {
    s.parse::<Permutation>().unwrap().embed(n).unwrap()
}

fn goldens() -> Outcome {
    let cases = [
        ((3, 5, 8), 10, ["(1,2,3)(4,5,6)(7,8,9)", "(1,4,8,9,10)", "(1,2,3,4,5,6,8,10)(7,9)"]),
        ((4, 4, 4), 6, ["(1,2,3,4)", "(3,1,5,6)", "(3,4,5,6)(1,2)"]),
        ((3, 3, 4), 6, ["(1,2,3)(4,5,6)", "(1,6,4)", "(1,2,3,6)(4,5)"]),
    ];
    for ((a, b, c), n, [x, y, zinv]) in cases {
        let r = solve(a, b, c).map_err(|e| e.to_string())?;
        let want = [perm(n, x), perm(n, y), perm(n, zinv).inverse()];
        ensure([&r.x, &r.y, &r.z] == [&want[0], &want[1], &want[2]], || {
            format!("({a},{b},{c}): got {} {} {}", r.x, r.y, r.z)
        })?;
    }
    Ok("358, 444, 334 match".into())
}

fn sharpness() -> Outcome {
    let budget = SearchBudget::default();
    for ((a, b, c), want) in [((3, 3, 4), 6), ((7, 7, 8), 10)] {
        let m = min_degree(a, b, c, &budget).map_err(|e| format!("({a},{b},{c}): {e}"))?;
        ensure(m.degree == want, || format!("({a},{b},{c}): min degree {}", m.degree))?;
        ensure(m.absent_at == (1..want).collect::<Vec<_>>(), || {
            format!("({a},{b},{c}): absence certified at {:?}", m.absent_at)
        })?;
        ensure(product(&m.witness).map_err(|e| e.to_string())?.is_identity(), || "witness".into())?;
    }
    Ok("6 and 10, absence certified below".into())
}

fn eks_agreement() -> Outcome {
    let budget = SearchBudget::default();
    let mut pairs = 0;
    for n in 1..=7 {
        let cs = classes(n);
        for c1 in &cs {
            for c2 in &cs {
                for variant in [Variant::FullCycle, Variant::NearCycle] {
                    if variant == Variant::NearCycle && n < 2 {
                        continue;
                    }
                    let oracle = pair_realizable(c1, c2, variant, &budget).map_err(|e| e.to_string())?.is_some();
                    let req = RealizationRequest::new(c1.clone(), c2.clone(), variant).with_seed(n as u64);
                    let label = || format!("n={n} {c1} {c2} {variant:?}");
                    match realize(&req) {
                        Ok(w) => {
                            ensure(oracle, || format!("{}: oracle found nothing", label()))?;
                            ensure(c1.contains(&w.alpha) && c2.contains(&w.beta), || format!("{}: bad witness", label()))?;
                        }
                        Err(RealizeError::ParityViolation { .. }) | Err(RealizeError::FixedPointFreeInvolutions) => {
                            ensure(!oracle, || format!("{}: realizer refused a realizable pair", label()))?;
                        }
                        Err(e) => return Err(format!("{}: {e}", label())),
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} class pairs agree"))
}

fn uniform_index() -> Outcome {
    let mut checked = 0;
    for n in 2..=300 {
        let bound = n / 2;
        for k in 2..=n {
            let ind = uniform_class_index(n, k).map_err(|e| format!("n={n} k={k}: {e}"))?;
            ensure(ind >= bound, || format!("n={n} k={k}: {ind} < {bound}"))?;
            let equality = if n % 2 == 1 {
                k == 2 || k == (n + 1) / 2
            } else {
                k == 2 || k == n / 2 + 1 || (n, k) == (8, 3)
            };
            ensure((ind == bound) == equality, || format!("n={n} k={k}: equality case mismatch"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs"))
}

fn check_chain(orders: &[usize], seed: u64) -> Result<ChainResult, String> {
    let c = extend_with_seed(orders, seed).map_err(|e| format!("{orders:?}: {e}"))?;
    let n = orders.iter().max().unwrap() + 2;
    ensure(c.degree == n && c.elements.iter().all(|p| p.degree() == n), || format!("{orders:?}: degree"))?;
    ensure(product(&c.elements).map_err(|e| e.to_string())?.is_identity(), || format!("{orders:?}: product"))?;
    ensure(c.elements.iter().zip(orders).all(|(p, &o)| p.order() == o), || format!("{orders:?}: orders"))?;
    Ok(c)
}

fn random_lists() -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..500)
        .map(|_| {
            let r = rng.random_range(3..=8);
            (0..r).map(|_| rng.random_range(2..=25)).collect()
        })
        .collect()
}

fn small_degree_lists() -> Vec<Vec<usize>> {
    vec![
        vec![2, 2, 2],
        vec![2, 2, 2, 2, 2],
        vec![2; 8],
        vec![3, 3, 3, 4],
        vec![4, 4, 4, 4, 4],
        vec![2, 3, 4, 2],
        vec![4, 3, 2, 3, 4, 3, 2],
        vec![3, 4, 4],
    ]
}

fn chains() -> Outcome {
    let start = Instant::now();
    let lists = random_lists();
    for (i, orders) in lists.iter().enumerate() {
        check_chain(orders, i as u64)?;
    }
    let specials = small_degree_lists();
    for orders in &specials {
        let c = check_chain(orders, 0)?;
        ensure(c.degree == 4 || c.degree == 6, || format!("{orders:?}: degree {}", c.degree))?;
    }
    let t = start.elapsed();
    within(t, 30)?;
    Ok(format!(
        "{} random + {} degree-4/6 chains in {:.2} s",
        lists.len(),
        specials.len(),
        t.as_secs_f64()
    ))
}

fn survey50() -> Outcome {
    let run = survey::run(50, 0, None).map_err(|e| e.to_string())?;
    let s = &run.summary;
    ensure(s.is_clean(), || format!("{} failures, first {:?}", s.failures.len(), s.failures.first()))?;
    within(run.elapsed, 300)?;
    Ok(format!("{} cells, 0 failures in {:.1} s", s.cells, run.elapsed.as_secs_f64()))
}

fn genus_checks() -> Outcome {
    for c in 2..=60 {
        for b in 2..=c {
            for a in 2..=b {
                let r = solve(a, b, c).map_err(|e| e.to_string())?;
                let [x, y, z] = r.elements();
                ensure(index_sum(&[x, y, z]) % 2 == 0, || format!("({a},{b},{c}): odd index sum"))?;
            }
        }
    }
    for (i, orders) in random_lists().iter().chain(&small_degree_lists()).enumerate() {
        let c = extend_with_seed(orders, i as u64).map_err(|e| e.to_string())?;
        let refs: Vec<&Permutation> = c.elements.iter().collect();
        ensure(index_sum(&refs) % 2 == 0, || format!("{orders:?}: odd index sum"))?;
    }
    let mut transitive = 0usize;
    for n in 1..=8 {
        let flow = for_each_product_one_triple(n, true, &mut |t| match genus(t) {
            Ok(g) if g.len() == 1 => {
                transitive += 1;
                ControlFlow::Continue(())
            }
            Ok(g) => ControlFlow::Break(format!("n={n}: {} orbits on a transitive triple", g.len())),
            Err(e) => ControlFlow::Break(format!("n={n}: {e}")),
        });
        if let ControlFlow::Break(e) = flow {
            return Err(e);
        }
    }
    let t = Permutation::transposition(2, 1, 2).unwrap();
    let mut worked = vec![vec![t.clone(), t]];
    for (a, b, c) in [(3, 5, 8), (4, 4, 4)] {
        let r = solve(a, b, c).map_err(|e| e.to_string())?;
        worked.push(vec![r.x, r.y, r.z]);
    }
    for w in &worked {
        let g = genus(w).map_err(|e| e.to_string())?;
        ensure(g.len() == 1 && g[0].genus == 0, || format!("worked example: {g:?}"))?;
    }
    Ok(format!("{transitive} transitive triples up to degree 8, worked examples at genus 0"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 triple sweep c <= 60", sweep),
        ("2 golden constructions", goldens),
        ("3 sharpness of c + 2", sharpness),
        ("4 realizer/oracle agreement n <= 7", eks_agreement),
        ("5 uniform class index bounds n <= 300", uniform_index),
        ("6 chains", chains),
        ("7 survey up to 50", survey50),
        ("8 genus checks", genus_checks),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.2} s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} [{secs:.2} s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
