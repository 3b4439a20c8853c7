use permprod_core::chain::{extend_with_seed, replay_with_seed};
use permprod_core::product;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn random_order_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let r = rng.random_range(3..=8);
        let orders: Vec<usize> = (0..r).map(|_| rng.random_range(2..=25)).collect();
        let c = extend_with_seed(&orders, i).unwrap_or_else(|e| panic!("{orders:?}: {e}"));
        assert_eq!(c.degree, orders.iter().max().unwrap() + 2);
        assert!(product(&c.elements).unwrap().is_identity());
        for (p, &o) in c.elements.iter().zip(&orders) {
            assert_eq!(p.order(), o);
        }
        let ind: usize = c.elements.iter().map(|p| p.index()).sum();
        assert_eq!(ind % 2, 0);
        assert_eq!(replay_with_seed(&c.split_tree, &orders, i).unwrap(), c);
    }
}
