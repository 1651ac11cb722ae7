//! Acceptance suite. Each criterion runs in isolation and prints one line;
//! the test fails if any criterion fails.
//!
//! Run with `cargo test -p torman-core --test acceptance -- --nocapture`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::Rng;
use torman_core::kfacering::BasisKind;
use torman_core::{
    BaseCohomRing, BaseKRing, BundleCohomology, BundleKRing, Cohomology, FaceAcyclicRing, IntPoly,
    KFaceRing, LaurentPoly, Vars,
};

use common::*;

fn within(start: Instant, limit: Duration, what: &str) {
    let t = start.elapsed();
    assert!(t <= limit, "{what} took {t:?}, limit {limit:?}");
}

/// Torsion-free total rank equal to the vertex count, odd ranks zero.
fn rank_of_cohomology() {
    for (name, pair, m) in examples() {
        let start = Instant::now();
        let c = Cohomology::new(&pair).unwrap();
        let g = c.graded_basis();
        assert!(g.all_divisors_one(), "{name}: torsion");
        assert_eq!(g.total_rank(), m, "{name}: total rank");
        assert!(g.ranks().iter().skip(1).step_by(2).all(|&r| r == 0), "{name}: odd ranks {:?}", g.ranks());
        within(start, Duration::from_secs(1), name);
    }
}

/// `(1 - y_1)^2` vanishes in `K*(CP1)`, which has rank 2.
fn k_ring_of_cp1() {
    let start = Instant::now();
    let b = BundleKRing::new(&cp1(), BaseKRing::point(1)).unwrap();
    let e = b.parse("(1 - y1)^2").unwrap();
    assert!(b.reduce(&e).unwrap().is_zero());
    assert_eq!(b.rank(), 2);
    let (rank, torsion) = b.k_face_ring().kx_rank();
    assert_eq!(rank, 2);
    assert!(torsion.is_empty());
    within(start, Duration::from_secs(1), "K*(CP1)");
}

/// `φ` is injective on the quotient and its image is the compatible tuples.
fn restriction_embedding() {
    let start = Instant::now();
    for (name, pair, _) in examples() {
        let k = KFaceRing::new(&pair).unwrap();
        let y = k.y_vars().clone();
        let mut rng = rng(3);
        let (mut zeros, mut nonzeros) = (0, 0);
        for i in 0..200 {
            let p = if i % 2 == 0 {
                let terms = rng.gen_range(1..=5);
                random_laurent(&mut rng, &y, terms, 2)
            } else {
                &random_k_ideal_element(&mut rng, &pair, &y) + &random_laurent(&mut rng, &y, usize::from(i % 4 == 3), 1)
            };
            let t = k.phi(&p);
            let reduces_to_zero = k.rt_decompose(&p).unwrap().iter().all(LaurentPoly::is_zero);
            assert_eq!(t.is_zero(), reduces_to_zero, "{name}: {p}");
            assert_eq!(t.is_zero(), k.in_j1(&p), "{name}: ideal oracle on {p}");
            assert!(k.check_compatibility(&t).unwrap().is_compatible(), "{name}: {p}");
            let q = k.interpolate(&t).unwrap();
            assert_eq!(k.phi(&q), t, "{name}: interpolation of {p}");
            if t.is_zero() {
                zeros += 1;
            } else {
                nonzeros += 1;
            }
        }
        assert!(zeros >= 40 && nonzeros >= 40, "{name}: {zeros} ideal elements, {nonzeros} others");
    }
    within(start, Duration::from_secs(30), "embedding");
}

/// `φ(ι(r)) = ζ(r)` on characters.
fn characters_restrict_by_zeta() {
    for (name, pair, _) in examples() {
        let k = KFaceRing::new(&pair).unwrap();
        let t = k.t_vars().clone();
        let mut rng = rng(4);
        for i in 0..60 {
            let r = if i < 30 {
                let e: Vec<i32> = (0..t.len()).map(|_| rng.gen_range(-4..=4)).collect();
                LaurentPoly::monomial(&t, e, 1)
            } else {
                random_laurent(&mut rng, &t, 4, 3)
            };
            assert_eq!(k.phi(&k.iota(&r)), k.zeta(&r), "{name}: {r}");
        }
    }
}

fn cp1_bases(n: usize) -> (BaseCohomRing, BaseKRing) {
    let classes: Vec<i64> = (0..n as i64).map(|j| j + 1).collect();
    (cp1_cohom(&classes), cp1_k(&classes))
}

/// Free `RT`-basis from the cohomology basis, exact reconstruction, and
/// ranks of the bundle rings.
fn freeness() {
    for (name, pair, m) in examples() {
        let k = KFaceRing::new(&pair).unwrap();
        assert_eq!(k.basis_kind(), BasisKind::Transplanted, "{name}");
        assert_eq!(k.basis().len(), m, "{name}");
        let y = k.y_vars().clone();
        let mut rng = rng(5);
        for _ in 0..40 {
            let p = random_laurent(&mut rng, &y, 4, 2);
            let c = k.rt_decompose(&p).unwrap();
            assert_eq!(k.phi(&k.recompose(&c)), k.phi(&p), "{name}: {p}");
        }
        let (hc, kc) = cp1_bases(pair.n());
        for base in [BaseCohomRing::point(pair.n()), hc] {
            let r = base.ring().rank();
            let report = BundleCohomology::new(&pair, base).unwrap().verify_rank().unwrap();
            assert!(report.is_ok(), "{name}: {report:?}");
            assert_eq!(report.total, r * m, "{name}: cohomology rank");
        }
        for base in [BaseKRing::point(pair.n()), kc] {
            let r = base.ring().rank();
            let report = BundleKRing::new(&pair, base).unwrap().verify_rank().unwrap();
            assert!(report.is_ok(), "{name}: {report:?}");
            assert_eq!(report.total, r * m, "{name}: K rank");
        }
    }
}

/// `Σ_i ⟨u, v_i⟩ x_i` reduces to `c_1(ξ_u)`.
fn chern_class_identity() {
    for (name, pair, _) in examples() {
        let n = pair.n();
        for classes in [vec![0; n], (1..=n as i64).collect::<Vec<_>>(), (0..n as i64).map(|j| 2 - 3 * j).collect()] {
            let b = BundleCohomology::new(&pair, cp1_cohom(&classes)).unwrap();
            let x = b.algebra().vars().clone();
            for j in 0..n {
                let mut e = b.element(&IntPoly::zero(b.combined_vars())).unwrap();
                e[0] = linear_form(&pair, &x, j);
                for (beta, c) in b.base().char_class(j).iter().enumerate() {
                    e[beta] = &e[beta] - &IntPoly::constant(&x, c.clone());
                }
                assert!(b.reduce(&e).unwrap().is_zero(), "{name}, classes {classes:?}, u = e_{}", j + 1);
            }
        }
    }
}

/// The S⁴ example over CP1 and over a point.
fn s4_bundle() {
    let start = Instant::now();
    let poset = s4();
    let ring = FaceAcyclicRing::new(&poset, cp1_cohom(&[0, 1])).unwrap();
    let p = ring.presentation();
    assert_eq!(p.relation_texts(), vec!["x_G*x_H - x_a - x_b", "x_a*x_b", "x_G", "x_H - t"]);
    assert!(p.notes.iter().any(|n| n.contains("2*codim")), "{:?}", p.notes);
    let point = FaceAcyclicRing::new(&poset, BaseCohomRing::point(2)).unwrap();
    assert_eq!(point.bundle().expected_ranks(), vec![1, 0, 0, 0, 1]);
    let report = point.bundle().verify_rank().unwrap();
    assert!(report.is_ok(), "{report:?}");
    assert_eq!(report.ranks[..5], [1, 0, 0, 0, 1]);
    assert_eq!(report.total, 2);
    within(start, Duration::from_secs(1), "S4");
}

fn one_entry(v: &[Vec<BigInt>]) -> Vec<BigInt> {
    v.iter()
        .map(|c| {
            assert_eq!(c.len(), 1);
            c[0].clone()
        })
        .collect()
}

/// Bundles over a point reproduce the fibre computations.
fn point_base() {
    for (name, pair, _) in examples() {
        let c = Cohomology::new(&pair).unwrap();
        let b = BundleCohomology::new(&pair, BaseCohomRing::point(pair.n())).unwrap();
        let k = KFaceRing::new(&pair).unwrap();
        let bk = BundleKRing::new(&pair, BaseKRing::point(pair.n())).unwrap();
        assert_eq!(b.rank(), c.basis_polys().len());
        let x: Vars = c.vars().clone();
        let mut rng = rng(8);
        for _ in 0..100 {
            let terms = rng.gen_range(1..=5);
            let p = random_poly(&mut rng, &x, terms, 3);
            let nf = b.reduce(std::slice::from_ref(&p)).unwrap();
            assert_eq!(one_entry(&nf.vectors()), c.coordinates(&p).unwrap(), "{name}: {p}");
            let terms = rng.gen_range(1..=4);
            let q = random_laurent(&mut rng, k.y_vars(), terms, 2);
            let nf = bk.reduce(std::slice::from_ref(&q)).unwrap();
            assert_eq!(one_entry(&nf.vectors()), k.k_class(&q).unwrap(), "{name}: {q}");
        }
    }
}

fn run(results: &mut Vec<bool>, index: usize, title: &str, f: fn()) {
    let start = Instant::now();
    let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
    println!("criterion {index}: {} ({title}, {:.2?})", if ok { "PASS" } else { "FAIL" }, start.elapsed());
    results.push(ok);
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    run(&mut results, 1, "cohomology rank equals vertex count", rank_of_cohomology);
    run(&mut results, 2, "K*(CP1) reduction and rank", k_ring_of_cp1);
    run(&mut results, 3, "vertex restriction embedding", restriction_embedding);
    run(&mut results, 4, "characters restrict by zeta", characters_restrict_by_zeta);
    run(&mut results, 5, "RT-freeness and bundle ranks", freeness);
    run(&mut results, 6, "first Chern class identity", chern_class_identity);
    run(&mut results, 7, "S4 bundle over CP1", s4_bundle);
    run(&mut results, 8, "point base specialization", point_base);
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
