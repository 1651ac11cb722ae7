//! Cohomology and K-rings of torus manifold bundles `E(X) → B`, the ring of
//! a face-acyclic orbit space, and the conjectural K-ring presentation for
//! general face posets.
//!
//! A bundle element is written over the combined variables: the fibre
//! generators followed by the non-unit basis names of the base ring, e.g.
//! `x1 - x2 - t`. Internally it is a vector of fibre polynomials indexed by
//! the base basis.

mod acyclic;
mod base;
mod cohom;
mod kring;

pub use acyclic::{emit_conjecture_sj, face_acyclic_relations, FaceAcyclicRing};
pub use base::{BaseCohomRing, BaseElement, BaseFile, BaseKRing, BaseRing, BasisEntry};
pub use cohom::{BundleCohomology, RankReport};
pub use kring::BundleKRing;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{bigint_vec, LaurentPoly, Vars};

#[cfg(test)]
pub(crate) use base::samples;

/// Coefficient of one fibre basis element in a normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalCoefficient {
    pub basis: String,
    pub text: String,
    #[serde(with = "bigint_vec")]
    pub vector: Vec<BigInt>,
}

/// `Σ_k c_k·b_k` with `c_k` in the base ring and `b_k` the fibre basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleNormalForm {
    pub base_basis: Vec<String>,
    pub coefficients: Vec<NormalCoefficient>,
    pub text: String,
}

impl BundleNormalForm {
    pub fn vectors(&self) -> Vec<BaseElement> {
        self.coefficients.iter().map(|c| c.vector.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| BaseRing::is_zero(&c.vector))
    }
}

pub(crate) fn combined_vars(fibre: &Vars, base: &BaseRing) -> Result<Vars> {
    if let Some(clash) = base.names()[1..].iter().find(|n| fibre.position(n).is_some()) {
        return Err(Error::InvalidBase(format!("base basis name '{clash}' clashes with a fibre variable")));
    }
    Ok(Vars::new(fibre.names().iter().chain(&base.names()[1..]).cloned()))
}

/// Splits a combined polynomial into fibre polynomials indexed by the base
/// basis. Base names may carry negative exponents only if they are units.
pub(crate) fn split_combined(p: &LaurentPoly, fibre: &Vars, base: &BaseRing) -> Result<Vec<LaurentPoly>> {
    let nf = fibre.len();
    let mut out = vec![LaurentPoly::zero(fibre); base.rank()];
    for (e, c) in p.terms() {
        let mut coeff = base.scale(&base.one(), c);
        for (k, &a) in e[nf..].iter().enumerate() {
            let b = base.basis_element(k + 1);
            let f = if a >= 0 {
                b
            } else {
                base.inverse(&b)
                    .ok_or_else(|| Error::Input(format!("'{}' is not invertible in the base ring", base.names()[k + 1])))?
            };
            coeff = base.mul(&coeff, &base.pow(&f, a.unsigned_abs()));
        }
        let mono = LaurentPoly::monomial(fibre, e[..nf].to_vec(), 1);
        for (slot, c) in out.iter_mut().zip(coeff) {
            if c != BigInt::from(0) {
                *slot = &*slot + &mono.scale(&c);
            }
        }
    }
    Ok(out)
}

/// Embeds a fibre polynomial times a base element into the combined ring.
pub(crate) fn join_combined(fibre_poly: &LaurentPoly, coeff: &[BigInt], combined: &Vars) -> LaurentPoly {
    let nf = fibre_poly.nvars();
    let mut out = LaurentPoly::zero(combined);
    for (beta, c) in coeff.iter().enumerate() {
        if c == &BigInt::from(0) {
            continue;
        }
        let mut shift = vec![0i32; combined.len()];
        if beta > 0 {
            shift[nf + beta - 1] = 1;
        }
        let embedded = LaurentPoly::from_terms(
            combined,
            fibre_poly.terms().map(|(e, a)| {
                let mut f = e.clone();
                f.resize(combined.len(), 0);
                (f, a * c)
            }),
        );
        out = &out + &embedded.shift(&shift);
    }
    out
}

/// `pos - ξ·neg` in text and LaTeX, leaving out unit factors.
pub(crate) fn twisted_difference(pos: (String, String), xi: (String, String, bool), neg: (String, String)) -> (String, String) {
    let (xt, xl, compound) = xi;
    let (xt, xl) = if compound { (format!("({xt})"), format!("({xl})")) } else { (xt, xl) };
    if xt == "1" {
        return (format!("{} - {}", pos.0, neg.0), format!("{} - {}", pos.1, neg.1));
    }
    if neg.0 == "1" {
        return (format!("{} - {xt}", pos.0), format!("{} - {xl}", pos.1));
    }
    (format!("{} - {xt}*{}", pos.0, neg.0), format!("{} - {xl} {}", pos.1, neg.1))
}

/// `c_1·b_1 + c_2·b_2 + …` for coefficients that are not single monomials.
pub(crate) fn format_terms(terms: &[(String, String)]) -> String {
    let paren = |s: &str| if s.contains(' ') { format!("({s})") } else { s.to_string() };
    let mut out = String::new();
    for (c, b) in terms.iter().filter(|(c, _)| c != "0") {
        // A coefficient that is a single negative term contributes a minus sign.
        let (neg, c) = match c.strip_prefix('-') {
            Some(rest) if !rest.contains(' ') => (true, rest),
            _ => (false, c.as_str()),
        };
        let part = match (c, b.as_str()) {
            (c, "1") => paren(c),
            ("1", b) => paren(b),
            (c, b) => format!("{}*{}", paren(c), paren(b)),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&part);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
