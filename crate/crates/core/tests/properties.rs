use std::collections::{HashMap, VecDeque};

use permprod_core::{uniform_class_index, Permutation};
use proptest::prelude::*;

fn perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    })
}

fn pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_degree).prop_flat_map(|n| {
        let one = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
        (one.clone(), one).prop_map(|(a, b)| {
            (Permutation::from_images(&a).unwrap(), Permutation::from_images(&b).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn conjugation_keeps_cycle_type((p, g) in pair(40)) {
        prop_assert_eq!(p.conjugate(&g).unwrap().cycle_type(), p.cycle_type());
    }

    #[test]
    fn index_parity_is_additive((p, q) in pair(40)) {
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(pq.index() % 2, (p.index() + q.index()) % 2);
    }

    #[test]
    fn inverse_cancels(p in perm(60)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn order_annihilates(p in perm(30)) {
        let k = p.order() as u64;
        prop_assert!(p.pow(k).is_identity());
        for d in 1..k {
            if k % d == 0 {
                prop_assert!(!p.pow(d).is_identity());
            }
        }
    }

    #[test]
    fn notation_round_trips(p in perm(30)) {
        let s = p.to_string();
        let back: Permutation = s.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn index_counts_cycles(p in perm(50)) {
        prop_assert_eq!(p.index(), p.degree() - p.cycle_count());
        prop_assert_eq!(p.cycle_type().parts().iter().sum::<usize>(), p.degree());
    }
}

#[test]
fn index_is_transposition_distance() {
    for n in 1..=7 {
        let id: Vec<usize> = (1..=n).collect();
        let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            for i in 0..n {
                for j in i + 1..n {
                    let mut q = p.clone();
                    q.swap(i, j);
                    if !dist.contains_key(&q) {
                        dist.insert(q.clone(), d + 1);
                        queue.push_back(q);
                    }
                }
            }
        }
        assert_eq!(dist.len(), (1..=n).product::<usize>());
        for (images, d) in dist {
            assert_eq!(Permutation::from_images(&images).unwrap().index(), d);
        }
    }
}

#[test]
fn uniform_index_bounds_up_to_300() {
    for n in 2..=300 {
        let bound = n / 2;
        for k in 2..=n {
            let ind = uniform_class_index(n, k).unwrap();
            assert!(ind >= bound, "n={n} k={k}");
            let expected_equal = if n % 2 == 1 {
                k == 2 || k == (n + 1) / 2
            } else {
                k == 2 || k == n / 2 + 1 || (n, k) == (8, 3)
            };
            assert_eq!(ind == bound, expected_equal, "n={n} k={k}");
        }
    }
}
