//! Inputs shared by the benchmarks in `benches/`.

use num_bigint::BigInt;
use torman_core::bundlerings::{BaseRing, BasisEntry};
use torman_core::{BaseCohomRing, BaseKRing, CharacteristicPair, Fan};

/// Hirzebruch surface `F_k`.
pub fn hirzebruch(k: i64) -> CharacteristicPair {
    let fan = Fan {
        rays: vec![vec![1, 0], vec![0, 1], vec![-1, k], vec![0, -1]],
        max_cones: vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]],
        complete: true,
    };
    CharacteristicPair::from_fan(&fan).expect("smooth complete fan")
}

/// `CP^n` with the standard characteristic vectors.
pub fn projective_space(n: usize) -> CharacteristicPair {
    let mut lambda: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    lambda.push(vec![-1; n]);
    let nerve: Vec<Vec<usize>> = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
    CharacteristicPair::new(n, nerve, lambda).expect("well-formed pair")
}

fn cp1_ring(name: &str, exact: bool) -> BaseRing {
    let basis = [BasisEntry { name: "1".into(), degree: 0 }, BasisEntry { name: name.into(), degree: 2 }];
    let mult = [vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
    BaseRing::new(&basis, &mult, exact).expect("valid table")
}

/// `H*(CP1)` with `c_1(ξ_{e_j}) = j·t`.
pub fn cp1_cohom(n: usize) -> BaseCohomRing {
    let classes = (0..n).map(|j| vec![BigInt::from(0), BigInt::from(j)]).collect();
    BaseCohomRing::new(cp1_ring("t", true), classes).expect("valid classes")
}

/// `K(CP1)` with `[ξ_{e_j}] = 1 + j·s`.
pub fn cp1_k(n: usize) -> BaseKRing {
    let classes = (0..n).map(|j| vec![BigInt::from(1), BigInt::from(j)]).collect();
    BaseKRing::new(cp1_ring("s", false), classes).expect("valid classes")
}
