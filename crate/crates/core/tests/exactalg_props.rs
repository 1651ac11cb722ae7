use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use torman_core::exactalg::{snf, solve_integer, IntMatrix, LaurentPoly, Vars};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn laurent(nvars: usize) -> impl Strategy<Value = Vec<(Vec<i32>, i64)>> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, nvars), -4i64..=4), 0..6)
}

fn build(vars: &Vars, terms: &[(Vec<i32>, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(vars, terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c))))
}

fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_is_a_diagonalisation(rows in matrix(5, 5)) {
        let a = IntMatrix::from_i64(&rows);
        let r = snf(&a);
        let d = r.left.mul(&a).mul(&r.right).to_dense();
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { r.diag[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &want);
            }
        }
        prop_assert!(r.left.determinant().abs().is_one());
        prop_assert!(r.right.determinant().abs().is_one());
        prop_assert!(r.diag.iter().all(|x| !x.is_negative()));
        for w in r.diag.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn solve_finds_planted_solutions(rows in matrix(4, 4), seed in prop::collection::vec(-5i64..=5, 4)) {
        let a = IntMatrix::from_i64(&rows);
        let x: Vec<BigInt> = seed[..a.cols()].iter().map(|&v| BigInt::from(v)).collect();
        let b = a.mul_vec(&x);
        let y = solve_integer(&a, &b).expect("a solution exists");
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn solve_agrees_with_search(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3),
        b in prop::collection::vec(-4i64..=4, 3),
    ) {
        let a = IntMatrix::from_i64(&rows);
        let b: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
        let mut found = false;
        'search: for x0 in -6i64..=6 {
            for x1 in -6i64..=6 {
                for x2 in -6i64..=6 {
                    let x = [x0, x1, x2].map(BigInt::from);
                    if a.mul_vec(&x) == b {
                        found = true;
                        break 'search;
                    }
                }
            }
        }
        let solved = solve_integer(&a, &b);
        if let Some(y) = &solved {
            prop_assert_eq!(&a.mul_vec(y), &b);
        }
        if found {
            prop_assert!(solved.is_some());
        }
    }

    #[test]
    fn laurent_ring_axioms(p in laurent(2), q in laurent(2), r in laurent(2)) {
        let v = Vars::indexed("y", 2);
        let (p, q, r) = (build(&v, &p), build(&v, &q), build(&v, &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &LaurentPoly::one(&v), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn monomials_are_units(e in prop::collection::vec(-4i32..=4, 3), c in prop::sample::select(vec![-1i64, 1])) {
        let v = Vars::indexed("y", 3);
        let m = LaurentPoly::monomial(&v, e, c);
        let inv = m.inverse().expect("unit");
        prop_assert!((&m * &inv).is_one());
    }

    #[test]
    fn exact_division_recovers_factors(p in laurent(2), q in laurent(2)) {
        let v = Vars::indexed("y", 2);
        let (p, q) = (build(&v, &p), build(&v, &q));
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn substitution_is_a_homomorphism(
        p in laurent(2),
        q in laurent(2),
        images in prop::collection::vec((prop::collection::vec(-2i32..=2, 3), prop::sample::select(vec![-1i64, 1])), 2),
    ) {
        let v = Vars::indexed("y", 2);
        let w = Vars::indexed("u", 3);
        let (p, q) = (build(&v, &p), build(&v, &q));
        let images: Vec<LaurentPoly> = images.into_iter().map(|(e, c)| LaurentPoly::monomial(&w, e, c)).collect();
        let s = |f: &LaurentPoly| f.substitute(&images, &w).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
    }
}

#[test]
fn unimodular_inverse() {
    let a = IntMatrix::from_dense(&big(&[vec![2, 1], vec![1, 1]]));
    let inv = a.inverse_unimodular().unwrap();
    assert_eq!(a.mul(&inv), IntMatrix::identity(2));
}
