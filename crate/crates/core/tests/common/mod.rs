//! Shared fixtures and random generators for the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torman_core::bundlerings::BasisEntry;
use torman_core::charpair::{PairFile, PosetFile};
use torman_core::exactalg::Exponent;
use torman_core::{
    BaseCohomRing, BaseFile, BaseKRing, CharacteristicPair, Fan, FaceId, GeneralFacePoset, IntPoly, LaurentPoly, Vars,
};

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/", $name))
    };
}

fn pair_from(json: &str) -> CharacteristicPair {
    let file: PairFile = serde_json::from_str(json).unwrap();
    CharacteristicPair::from_file(&file).unwrap()
}

pub fn cp1() -> CharacteristicPair {
    pair_from(fixture!("cp1.pair.json"))
}

pub fn cp2() -> CharacteristicPair {
    pair_from(fixture!("cp2.pair.json"))
}

pub fn cp1xcp1() -> CharacteristicPair {
    pair_from(fixture!("cp1xcp1.pair.json"))
}

pub fn hirzebruch1() -> CharacteristicPair {
    let fan: Fan = serde_json::from_str(fixture!("hirzebruch1.fan.json")).unwrap();
    CharacteristicPair::from_fan(&fan).unwrap()
}

/// The shipped examples with their vertex counts.
pub fn examples() -> Vec<(&'static str, CharacteristicPair, usize)> {
    vec![("CP1", cp1(), 2), ("CP2", cp2(), 3), ("CP1xCP1", cp1xcp1(), 4), ("F1", hirzebruch1(), 4)]
}

pub fn s4() -> GeneralFacePoset {
    let file: PosetFile = serde_json::from_str(fixture!("s4.poset.json")).unwrap();
    GeneralFacePoset::from_file(&file).unwrap()
}

pub fn cp1_base_file() -> BaseFile {
    serde_json::from_str(fixture!("cp1.base.json")).unwrap()
}

pub fn cp1_kbase_file() -> BaseFile {
    serde_json::from_str(fixture!("cp1.kbase.json")).unwrap()
}

fn cp1_table(name: &str) -> (Vec<BasisEntry>, Vec<Vec<Vec<i64>>>) {
    let basis =
        vec![BasisEntry { name: "1".into(), degree: 0 }, BasisEntry { name: name.into(), degree: 2 }];
    (basis, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]])
}

/// `H*(CP1) = Z[t]/t²` with `c_1(ξ_{e_j}) = classes[j]·t`.
pub fn cp1_cohom(classes: &[i64]) -> BaseCohomRing {
    let (basis, mult) = cp1_table("t");
    let ring = torman_core::bundlerings::BaseRing::new(&basis, &mult, true).unwrap();
    BaseCohomRing::new(ring, classes.iter().map(|&c| vec![BigInt::from(0), BigInt::from(c)]).collect()).unwrap()
}

/// `K(CP1) = Z[s]/s²` with `[ξ_{e_j}] = 1 + classes[j]·s`.
pub fn cp1_k(classes: &[i64]) -> BaseKRing {
    let (basis, mult) = cp1_table("s");
    let ring = torman_core::bundlerings::BaseRing::new(&basis, &mult, false).unwrap();
    BaseKRing::new(ring, classes.iter().map(|&c| vec![BigInt::from(1), BigInt::from(c)]).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_laurent(rng: &mut impl Rng, vars: &Vars, terms: usize, spread: i32) -> LaurentPoly {
    LaurentPoly::from_terms(
        vars,
        (0..terms).map(|_| {
            let e: Exponent = (0..vars.len()).map(|_| rng.gen_range(-spread..=spread)).collect();
            (e, BigInt::from(rng.gen_range(-5i64..=5)))
        }),
    )
}

pub fn random_poly(rng: &mut impl Rng, vars: &Vars, terms: usize, max_deg: u32) -> IntPoly {
    (0..terms).fold(IntPoly::zero(vars), |acc, _| {
        let e: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=max_deg)).collect();
        &acc + &IntPoly::monomial(vars, &e, rng.gen_range(-5i64..=5))
    })
}

/// Minimal nonfaces by brute force over subsets.
pub fn min_nonfaces(pair: &CharacteristicPair) -> Vec<Vec<usize>> {
    let d = pair.d();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << d) {
        let s: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        if pair.is_face(&s) {
            continue;
        }
        let minimal = s.iter().all(|&i| {
            let t: Vec<usize> = s.iter().copied().filter(|&j| j != i).collect();
            pair.is_face(&t)
        });
        if minimal {
            out.push(s);
        }
    }
    out
}

/// `∏_{i ∈ s} (1 - y_i)`.
pub fn k_generator(vars: &Vars, s: &[usize]) -> LaurentPoly {
    let one = LaurentPoly::one(vars);
    s.iter().fold(one.clone(), |acc, &i| &acc * &(&one - &LaurentPoly::var(vars, i)))
}

/// A random element of the ideal generated by the `∏ (1 - y_i)` over nonfaces.
pub fn random_k_ideal_element(rng: &mut impl Rng, pair: &CharacteristicPair, vars: &Vars) -> LaurentPoly {
    let gens = min_nonfaces(pair);
    (0..rng.gen_range(1..=2)).fold(LaurentPoly::zero(vars), |acc, _| {
        let g = k_generator(vars, &gens[rng.gen_range(0..gens.len())]);
        &acc + &(&g * &random_laurent(rng, vars, 3, 2))
    })
}

/// A random element of the Stanley–Reisner ideal.
pub fn random_sr_element(rng: &mut impl Rng, pair: &CharacteristicPair, vars: &Vars) -> IntPoly {
    let gens = min_nonfaces(pair);
    (0..rng.gen_range(1..=2)).fold(IntPoly::zero(vars), |acc, _| {
        let s = &gens[rng.gen_range(0..gens.len())];
        let e: Vec<u32> = (0..vars.len()).map(|i| u32::from(s.contains(&i))).collect();
        &acc + &(&IntPoly::monomial(vars, &e, 1) * &random_poly(rng, vars, 3, 2))
    })
}

/// `Σ_i ⟨e_j, v_i⟩ x_i`.
pub fn linear_form(pair: &CharacteristicPair, vars: &Vars, j: usize) -> IntPoly {
    (0..pair.d()).fold(IntPoly::zero(vars), |acc, i| &acc + &IntPoly::var(vars, i).scale(&BigInt::from(pair.v(i)[j])))
}

pub fn vertices(pair: &CharacteristicPair) -> Vec<FaceId> {
    pair.vertices()
}
