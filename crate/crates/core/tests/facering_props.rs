mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use torman_core::{CharacteristicPair, Cohomology, Fan, IntPoly};

use common::*;

fn hirzebruch(k: i64) -> CharacteristicPair {
    let fan = Fan {
        rays: vec![vec![1, 0], vec![0, 1], vec![-1, k], vec![0, -1]],
        max_cones: vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]],
        complete: true,
    };
    CharacteristicPair::from_fan(&fan).unwrap()
}

fn example(i: usize) -> (CharacteristicPair, Cohomology) {
    let (_, pair, _) = examples().swap_remove(i % 4);
    let c = Cohomology::new(&pair).unwrap();
    (pair, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hirzebruch_ranks(k in -4i64..=4) {
        let c = Cohomology::new(&hirzebruch(k)).unwrap();
        let g = c.graded_basis();
        prop_assert_eq!(g.ranks(), vec![1, 0, 2, 0, 1]);
        prop_assert!(g.all_divisors_one());
    }

    #[test]
    fn reduction_is_idempotent_and_linear(i in 0usize..4, seed in any::<u64>()) {
        let (_, c) = example(i);
        let mut rng = rng(seed);
        let x = c.vars().clone();
        let p = random_poly(&mut rng, &x, 4, 3);
        let q = random_poly(&mut rng, &x, 4, 3);
        let np = c.reduce(&p).unwrap();
        prop_assert_eq!(c.reduce(&np).unwrap(), np.clone());
        let k = BigInt::from(-3);
        let lhs = c.reduce(&(&p.scale(&k) + &q)).unwrap();
        let rhs = &np.scale(&k) + &c.reduce(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_depend_on_classes_only(i in 0usize..4, seed in any::<u64>()) {
        let (_, c) = example(i);
        let mut rng = rng(seed);
        let x = c.vars().clone();
        let p = random_poly(&mut rng, &x, 3, 2);
        let q = random_poly(&mut rng, &x, 3, 2);
        let direct = c.multiply(&p, &q).unwrap();
        let via = c.multiply(&c.reduce(&p).unwrap(), &c.reduce(&q).unwrap()).unwrap();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn ideal_elements_vanish(i in 0usize..4, seed in any::<u64>()) {
        let (pair, c) = example(i);
        let mut rng = rng(seed);
        let x = c.vars().clone();
        let sr = random_sr_element(&mut rng, &pair, &x);
        for a in pair.vertices() {
            prop_assert!(c.vertex_restrict(&sr, &a).unwrap().is_zero());
        }
        prop_assert!(c.reduce(&sr).unwrap().is_zero());
        let j = (seed % pair.n() as u64) as usize;
        let lin = &linear_form(&pair, &x, j) * &random_poly(&mut rng, &x, 2, 2);
        prop_assert!(c.reduce(&lin).unwrap().is_zero());
    }

    #[test]
    fn sym_decomposition_round_trip(i in 0usize..4, seed in any::<u64>()) {
        let (pair, c) = example(i);
        let mut rng = rng(seed);
        let p = random_poly(&mut rng, c.vars(), 4, 3);
        let coeffs = c.sym_decompose(&p).unwrap();
        let basis = c.basis_polys();
        prop_assert_eq!(coeffs.len(), basis.len());
        // Under restriction the linear forms become the coordinates t_j.
        for a in pair.vertices() {
            let t = c.sym_vars();
            let recombined = coeffs.iter().zip(&basis).fold(IntPoly::zero(t), |acc, (k, b)| {
                &acc + &(k * &c.vertex_restrict(b, &a).unwrap())
            });
            prop_assert_eq!(recombined, c.vertex_restrict(&p, &a).unwrap());
        }
    }
}

#[test]
fn odd_ranks_vanish_and_total_is_vertex_count() {
    for (name, pair, m) in examples() {
        let ranks = Cohomology::new(&pair).unwrap().betti_numbers();
        assert_eq!(ranks.iter().sum::<usize>(), m, "{name}");
        assert!(ranks.iter().skip(1).step_by(2).all(|&r| r == 0), "{name}: {ranks:?}");
    }
}
