mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use torman_core::bundlerings::{BaseElement, BaseRing};
use torman_core::{
    BaseCohomRing, BaseKRing, BundleCohomology, BundleKRing, CharacteristicPair, FaceAcyclicRing, GeneralFacePoset,
    IntPoly, LaurentPoly,
};

use common::*;

fn pair(i: usize) -> CharacteristicPair {
    examples().swap_remove(i % 4).1
}

fn classes(n: usize, seed: u64) -> Vec<i64> {
    let mut rng = rng(seed);
    (0..n).map(|_| rng.gen_range(-3..=3)).collect()
}

fn random_element(b: &BundleCohomology, seed: u64, max_deg: u32) -> Vec<IntPoly> {
    let mut rng = rng(seed);
    (0..b.base().ring().rank()).map(|_| random_poly(&mut rng, b.algebra().vars(), 3, max_deg)).collect()
}

/// `a·e` with `a` acting on the base factor.
fn base_act<P: Clone>(ring: &BaseRing, a: &[BigInt], e: &[P], zero: P, add: impl Fn(&P, &P) -> P, scale: impl Fn(&P, &BigInt) -> P) -> Vec<P> {
    let mut out = vec![zero; ring.rank()];
    for (beta, p) in e.iter().enumerate() {
        let prod = ring.mul(a, &ring.basis_element(beta));
        for (gamma, c) in prod.iter().enumerate() {
            out[gamma] = add(&out[gamma], &scale(p, c));
        }
    }
    out
}

fn cohom_from_coefficients(b: &BundleCohomology, coeffs: &[BaseElement]) -> Vec<IntPoly> {
    let x = b.algebra().vars();
    let mut out = vec![IntPoly::zero(x); b.base().ring().rank()];
    for (c, basis) in coeffs.iter().zip(b.fibre_basis()) {
        for (beta, a) in c.iter().enumerate() {
            out[beta] = &out[beta] + &basis.scale(a);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cohomology_reduction_is_idempotent_and_base_linear(i in 0usize..4, seed in any::<u64>()) {
        let pair = pair(i);
        let b = BundleCohomology::new(&pair, cp1_cohom(&classes(pair.n(), seed))).unwrap();
        let ring = b.base().ring().clone();
        let e = random_element(&b, seed ^ 1, 2);
        let c = b.reduce_coefficients(&e).unwrap();
        prop_assert_eq!(b.reduce_coefficients(&cohom_from_coefficients(&b, &c)).unwrap(), c.clone());
        prop_assert_eq!(b.reduce_via_sym(&e).unwrap(), c.clone());
        let a: BaseElement = vec![BigInt::from(2), BigInt::from(-1)];
        let x = b.algebra().vars().clone();
        let ae = base_act(&ring, &a, &e, IntPoly::zero(&x), |p, q| p + q, |p, k| p.scale(k));
        let want: Vec<BaseElement> = c.iter().map(|ck| ring.mul(&a, ck)).collect();
        prop_assert_eq!(b.reduce_coefficients(&ae).unwrap(), want);
    }

    #[test]
    fn relations_reduce_to_zero(i in 0usize..4, seed in any::<u64>()) {
        let pair = pair(i);
        let b = BundleCohomology::new(&pair, cp1_cohom(&classes(pair.n(), seed))).unwrap();
        let x = b.algebra().vars().clone();
        let mut rng = rng(seed);
        let sr = random_sr_element(&mut rng, &pair, &x);
        let mut e = b.one();
        e[0] = sr;
        prop_assert!(b.reduce(&e).unwrap().is_zero());
    }

    #[test]
    fn linear_forms_reduce_to_chern_classes(i in 0usize..4, seed in any::<u64>(), u in prop::collection::vec(-3i64..=3, 2)) {
        let pair = pair(i);
        let n = pair.n();
        let u = &u[..n];
        let b = BundleCohomology::new(&pair, cp1_cohom(&classes(n, seed))).unwrap();
        let x = b.algebra().vars().clone();
        let mut e = b.one();
        e[0] = (0..pair.d()).fold(IntPoly::zero(&x), |acc, i| &acc + &IntPoly::var(&x, i).scale(&BigInt::from(pair.pairing(u, i))));
        prop_assert!(b.fibre_basis()[0] == IntPoly::one(&x));
        let mut want = vec![b.base().ring().zero(); b.algebra().rank()];
        want[0] = b.base().char_class_of(u);
        prop_assert_eq!(b.reduce_coefficients(&e).unwrap(), want);
    }

    #[test]
    fn characters_reduce_to_line_classes(i in 0usize..4, seed in any::<u64>(), u in prop::collection::vec(-3i64..=3, 2)) {
        let pair = pair(i);
        let n = pair.n();
        let u = &u[..n];
        let b = BundleKRing::new(&pair, cp1_k(&classes(n, seed))).unwrap();
        let y = b.k_face_ring().y_vars().clone();
        let chi = LaurentPoly::monomial(&y, (0..pair.d()).map(|i| pair.pairing(u, i) as i32).collect(), 1);
        let mut e = vec![LaurentPoly::zero(&y); 2];
        e[0] = chi;
        let coeffs = b.reduce_coefficients(&e).unwrap();
        let one_index = b.k_face_ring().basis().iter().position(LaurentPoly::is_one).expect("1 is a basis element");
        for (k, c) in coeffs.iter().enumerate() {
            if k == one_index {
                prop_assert_eq!(c, &b.base().line_class_of(u));
            } else {
                prop_assert!(BaseRing::is_zero(c));
            }
        }
    }

    #[test]
    fn k_reduction_is_idempotent_and_base_linear(i in 0usize..4, seed in any::<u64>()) {
        let pair = pair(i);
        let b = BundleKRing::new(&pair, cp1_k(&classes(pair.n(), seed))).unwrap();
        let ring = b.base().ring().clone();
        let y = b.k_face_ring().y_vars().clone();
        let mut rng = rng(seed ^ 2);
        let e: Vec<LaurentPoly> = (0..2).map(|_| random_laurent(&mut rng, &y, 3, 2)).collect();
        let c = b.reduce_coefficients(&e).unwrap();
        prop_assert_eq!(b.reduce_coefficients(&b.from_coefficients(&c)).unwrap(), c.clone());
        let a: BaseElement = vec![BigInt::from(-1), BigInt::from(3)];
        let ae = base_act(&ring, &a, &e, LaurentPoly::zero(&y), |p, q| p + q, |p, k| p.scale(k));
        let want: Vec<BaseElement> = c.iter().map(|ck| ring.mul(&a, ck)).collect();
        prop_assert_eq!(b.reduce_coefficients(&ae).unwrap(), want);
        let mut gen = vec![LaurentPoly::zero(&y); 2];
        gen[1] = random_k_ideal_element(&mut rng, &pair, &y);
        prop_assert!(b.reduce(&gen).unwrap().is_zero());
    }

    #[test]
    fn pair_posets_match_the_face_ring(i in 0usize..4, seed in any::<u64>()) {
        let pair = pair(i);
        let poset = GeneralFacePoset::from_pair(&pair).unwrap();
        let base = cp1_cohom(&classes(pair.n(), seed));
        let acyclic = FaceAcyclicRing::new(&poset, base.clone()).unwrap();
        let direct = BundleCohomology::new(&pair, base).unwrap();
        let ab = acyclic.bundle();
        prop_assert_eq!(ab.expected_ranks(), direct.expected_ranks());
        // x_F ↦ ∏_{i ∈ F} x_i
        let x = direct.algebra().vars().clone();
        let images: Vec<IntPoly> = (0..poset.faces().len())
            .map(|f| poset.face_facets(f).iter().fold(IntPoly::one(&x), |acc, &i| &acc * &IntPoly::var(&x, i)))
            .collect();
        let map = |e: &[IntPoly]| -> Vec<IntPoly> { e.iter().map(|p| p.substitute(&images, &x)).collect() };
        // Low degree: every new weight costs a quotient table over all faces.
        let e = random_element(ab, seed ^ 3, 1);
        let nf = cohom_from_coefficients(ab, &ab.reduce_coefficients(&e).unwrap());
        let diff: Vec<IntPoly> = map(&e).iter().zip(map(&nf)).map(|(p, q)| p - &q).collect();
        prop_assert!(direct.reduce(&diff).unwrap().is_zero());
    }
}

fn point_and_cp1(n: usize) -> (Vec<BaseCohomRing>, Vec<BaseKRing>) {
    let c: Vec<i64> = (1..=n as i64).collect();
    (vec![BaseCohomRing::point(n), cp1_cohom(&c)], vec![BaseKRing::point(n), cp1_k(&c)])
}

#[test]
fn verified_ranks_are_base_rank_times_vertices() {
    for (name, pair, m) in examples() {
        let (hs, ks) = point_and_cp1(pair.n());
        for base in hs {
            let r = base.ring().rank();
            let report = BundleCohomology::new(&pair, base).unwrap().verify_rank().unwrap();
            assert!(report.is_ok() && report.total == r * m, "{name}: {report:?}");
        }
        for base in ks {
            let r = base.ring().rank();
            let report = BundleKRing::new(&pair, base).unwrap().verify_rank().unwrap();
            assert!(report.is_ok() && report.total == r * m, "{name}: {report:?}");
        }
    }
}

#[test]
fn fixture_bases_load() {
    let h = BaseCohomRing::from_file(&cp1_base_file(), 2).unwrap();
    assert_eq!(h.char_class_of(&[1, 1]), vec![BigInt::from(0), BigInt::from(1)]);
    let k = BaseKRing::from_file(&cp1_kbase_file(), 2).unwrap();
    assert_eq!(k.line_class_of(&[0, -1]), vec![BigInt::from(1), BigInt::from(-1)]);
}
