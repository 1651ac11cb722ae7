mod common;

use proptest::prelude::*;
use torman_core::{KFaceRing, LaurentPoly};

use common::*;

fn ring(i: usize) -> KFaceRing {
    let (_, pair, _) = examples().swap_remove(i % 4);
    KFaceRing::new(&pair).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kernel_of_restriction_is_the_ideal(i in 0usize..4, seed in any::<u64>(), in_ideal in any::<bool>()) {
        let k = ring(i);
        let mut rng = rng(seed);
        let y = k.y_vars().clone();
        let p = if in_ideal {
            random_k_ideal_element(&mut rng, k.pair(), &y)
        } else {
            random_laurent(&mut rng, &y, 4, 2)
        };
        let t = k.phi(&p);
        prop_assert_eq!(t.is_zero(), k.in_j1(&p));
        if in_ideal {
            prop_assert!(t.is_zero());
        }
    }

    #[test]
    fn restrictions_are_compatible_and_interpolate(i in 0usize..4, seed in any::<u64>()) {
        let k = ring(i);
        let mut rng = rng(seed);
        let p = random_laurent(&mut rng, k.y_vars(), 4, 2);
        let t = k.phi(&p);
        prop_assert!(k.check_compatibility(&t).unwrap().is_compatible());
        let q = k.interpolate(&t).unwrap();
        prop_assert_eq!(k.phi(&q), t);
        prop_assert!(k.in_j1(&(&p - &q)));
    }

    #[test]
    fn iota_restricts_by_zeta(i in 0usize..4, seed in any::<u64>()) {
        let k = ring(i);
        let mut rng = rng(seed);
        let r = random_laurent(&mut rng, k.t_vars(), 3, 3);
        prop_assert_eq!(k.phi(&k.iota(&r)), k.zeta(&r));
    }

    #[test]
    fn decomposition_reconstructs(i in 0usize..4, seed in any::<u64>()) {
        let k = ring(i);
        let mut rng = rng(seed);
        let p = random_laurent(&mut rng, k.y_vars(), 4, 2);
        let c = k.rt_decompose(&p).unwrap();
        prop_assert!(k.in_j1(&(&k.recompose(&c) - &p)));
        // Coefficients are RT-linear.
        let r = random_laurent(&mut rng, k.t_vars(), 2, 2);
        let scaled = k.rt_decompose(&(&k.iota(&r) * &p)).unwrap();
        let want: Vec<LaurentPoly> = c.iter().map(|ck| &r * ck).collect();
        prop_assert_eq!(scaled, want);
    }
}

#[test]
fn k_ring_ranks_match_vertex_counts() {
    for (name, pair, m) in examples() {
        let k = KFaceRing::new(&pair).unwrap();
        assert_eq!(k.basis().len(), m, "{name}");
        let (rank, torsion) = k.kx_rank();
        assert_eq!(rank, m, "{name}");
        assert!(torsion.is_empty(), "{name}: {torsion:?}");
    }
}

#[test]
fn incompatible_tuples_are_rejected() {
    let k = KFaceRing::new(&cp1()).unwrap();
    let mut t = k.phi(&LaurentPoly::one(k.y_vars()));
    let v = t.entries[0].value.vars().clone();
    t.entries[0].value = LaurentPoly::constant(&v, 2);
    assert!(!k.check_compatibility(&t).unwrap().is_compatible());
    assert!(k.interpolate(&t).is_err());
}
