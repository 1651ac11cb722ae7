//! `K*(E(X)) = K*(B)[y^{±1}] / (J + (y^u - [ξ_u]))`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::base::{BaseElement, BaseKRing, BaseRing};
use super::cohom::RankReport;
use super::{combined_vars, format_terms, join_combined, split_combined, twisted_difference, BundleNormalForm, NormalCoefficient};
use crate::charpair::CharacteristicPair;
use crate::error::{Error, Result};
use crate::exactalg::{parse_laurent, snf, IntMatrix, Latex, LaurentPoly, Vars};
use crate::kfacering::{character_monomial, k_presentation, split_character, KFaceRing, KVariant};
use crate::present::{product, ring_names, Factor, Family, Presentation, Relation};

pub type KBundleElement = Vec<LaurentPoly>;

#[derive(Debug)]
pub struct BundleKRing {
    k: KFaceRing,
    base: BaseKRing,
    combined: Vars,
}

impl BundleKRing {
    pub fn new(pair: &CharacteristicPair, base: BaseKRing) -> Result<Self> {
        if base.n() != pair.n() {
            return Err(Error::InvalidBase(format!("{} line classes for a rank {} torus", base.n(), pair.n())));
        }
        let k = KFaceRing::new(pair)?;
        let combined = combined_vars(k.y_vars(), base.ring())?;
        Ok(BundleKRing { k, base, combined })
    }

    pub fn k_face_ring(&self) -> &KFaceRing {
        &self.k
    }

    pub fn base(&self) -> &BaseKRing {
        &self.base
    }

    pub fn combined_vars(&self) -> &Vars {
        &self.combined
    }

    pub fn rank(&self) -> usize {
        self.base.ring().rank() * self.k.basis().len()
    }

    pub fn parse(&self, src: &str) -> Result<KBundleElement> {
        self.element(&parse_laurent(src, &self.combined)?)
    }

    pub fn element(&self, p: &LaurentPoly) -> Result<KBundleElement> {
        split_combined(p, self.k.y_vars(), self.base.ring())
    }

    pub fn to_combined(&self, elem: &[LaurentPoly]) -> LaurentPoly {
        let ring = self.base.ring();
        elem.iter().enumerate().fold(LaurentPoly::zero(&self.combined), |acc, (b, q)| {
            &acc + &join_combined(q, &ring.basis_element(b), &self.combined)
        })
    }

    /// `[ξ_{e_j}]` as text, LaTeX and whether it needs parentheses.
    fn xi(&self, j: usize) -> (String, String, bool) {
        let ring = self.base.ring();
        let l = self.base.line_class(j);
        (ring.format(l), ring.format_latex(l), BaseRing::is_compound(l))
    }

    pub fn presentation(&self, variant: KVariant) -> Presentation {
        let pair = self.k.pair();
        let fibre = k_presentation(pair, variant);
        let mut relations: Vec<Relation> = fibre
            .relations
            .iter()
            .filter(|r| r.family == Family::I)
            .map(|r| Relation { family: Family::I, text: r.text.clone(), latex: r.latex.clone() })
            .collect();
        for j in 0..pair.n() {
            let (pos, neg) = match variant {
                KVariant::Y => {
                    let m = character_monomial(pair, self.k.y_vars(), j);
                    ((m.to_string(), Latex(&m).to_string()), ("1".to_string(), "1".to_string()))
                }
                KVariant::X => {
                    let (p, n) = split_character(pair, j, |i| Factor::one_minus(&fibre.variables[i]));
                    (product(&p), product(&n))
                }
            };
            if pos == neg && self.base.line_class(j) == &self.base.ring().one() {
                continue;
            }
            let (text, latex) = twisted_difference(pos, self.xi(j), neg);
            relations.push(Relation { family: Family::II, text, latex });
        }
        let laurent = variant == KVariant::Y;
        let (ring, ring_latex) = ring_names(("K*(B)", "K^*(B)"), &fibre.variables, laurent);
        let basis = match variant {
            KVariant::Y => self.k.basis().iter().map(ToString::to_string).collect(),
            KVariant::X => Vec::new(),
        };
        Presentation {
            title: "K*(E)".into(),
            ring,
            ring_latex,
            variables: fibre.variables,
            relations,
            ranks: None,
            basis,
            notes: vec!["free K*(B)-module on the listed basis".into()],
            conjectural: false,
        }
    }

    /// Normal-form coefficients: `p_β = Σ_k ι(c_k)·b_k` in the K-face ring,
    /// then `χ^{e_j} ↦ [ξ_{e_j}]`.
    pub fn reduce_coefficients(&self, elem: &[LaurentPoly]) -> Result<Vec<BaseElement>> {
        let ring = self.base.ring();
        let mut coeffs = vec![ring.zero(); self.k.basis().len()];
        for (beta, p) in elem.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (k, c) in self.k.rt_decompose(p)?.iter().enumerate() {
                let v = ring.mul(&ring.basis_element(beta), &self.base.eval_character(c));
                coeffs[k] = ring.add(&coeffs[k], &v);
            }
        }
        Ok(coeffs)
    }

    pub fn reduce(&self, elem: &[LaurentPoly]) -> Result<BundleNormalForm> {
        Ok(self.normal_form(self.reduce_coefficients(elem)?))
    }

    pub fn normal_form(&self, coeffs: Vec<BaseElement>) -> BundleNormalForm {
        let ring = self.base.ring();
        let basis: Vec<String> = self.k.basis().iter().map(ToString::to_string).collect();
        let terms: Vec<(String, String)> = coeffs.iter().zip(&basis).map(|(c, b)| (ring.format(c), b.clone())).collect();
        BundleNormalForm {
            base_basis: ring.names().to_vec(),
            text: format_terms(&terms),
            coefficients: basis
                .into_iter()
                .zip(coeffs)
                .map(|(b, v)| NormalCoefficient { basis: b, text: ring.format(&v), vector: v })
                .collect(),
        }
    }

    /// `Σ_k c_k·b_k` back in `K*(B) ⊗ 𝒦(Q)`.
    pub fn from_coefficients(&self, coeffs: &[BaseElement]) -> KBundleElement {
        let ring = self.base.ring();
        let mut out = vec![LaurentPoly::zero(self.k.y_vars()); ring.rank()];
        for (c, b) in coeffs.iter().zip(self.k.basis()) {
            for (beta, a) in c.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                out[beta] = &out[beta] + &b.scale(a);
            }
        }
        out
    }

    /// Rank and torsion from the polynomial form `x_i = 1 - y_i`, filtered
    /// by `2·|μ| + deg β` and truncated above `2n + top degree of the base`,
    /// where the filtration of the total space vanishes. Columns are the
    /// face-supported monomials, so the monomial relations are built in.
    pub fn verify_rank(&self) -> Result<RankReport> {
        let pair = self.k.pair();
        let ring = self.base.ring();
        let d = pair.d();
        let top = 2 * pair.n() as u32 + ring.top_degree();
        let x = Vars::indexed("x", d);
        let one = LaurentPoly::one(&x);
        let mut monos: Vec<Vec<i32>> = Vec::new();
        let mut cur = vec![0i32; d];
        face_supported(pair, 0, top / 2, &mut cur, &mut monos);
        let weight = |mu: &[i32], beta: usize| 2 * mu.iter().sum::<i32>() as u32 + ring.degrees()[beta];
        let mut columns: Vec<(usize, Vec<i32>)> = Vec::new();
        for beta in 0..ring.rank() {
            for mu in &monos {
                if weight(mu, beta) <= top {
                    columns.push((beta, mu.clone()));
                }
            }
        }
        let index: HashMap<(usize, Vec<i32>), usize> = columns.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        // (∏_{pos} (1 - x_i)^{c}, ∏_{neg} (1 - x_i)^{-c}) for each e_j.
        let sides: Vec<(LaurentPoly, LaurentPoly)> = (0..pair.n())
            .map(|j| {
                let side = |sign: i64| {
                    (0..d).fold(one.clone(), |acc, i| match pair.v(i)[j] * sign {
                        c if c > 0 => &acc * &(&one - &LaurentPoly::var(&x, i)).pow(c).expect("nonnegative power"),
                        _ => acc,
                    })
                };
                (side(1), side(-1))
            })
            .collect();
        let mut rows: Vec<BTreeMap<usize, BigInt>> = Vec::new();
        for (beta, mu) in &columns {
            let m = LaurentPoly::monomial(&x, mu.clone(), 1);
            for (j, (pos, neg)) in sides.iter().enumerate() {
                let mut row = BTreeMap::new();
                let mut add = |g: usize, p: &LaurentPoly, c: &BigInt| {
                    for (e, a) in p.terms() {
                        if let Some(&col) = index.get(&(g, e.clone())) {
                            *row.entry(col).or_insert_with(BigInt::zero) += a * c;
                        }
                    }
                };
                add(*beta, &(pos * &m), &BigInt::from(1));
                let twisted = ring.mul(&ring.basis_element(*beta), self.base.line_class(j));
                let nm = neg * &m;
                for (g, c) in twisted.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    add(g, &nm, &-c);
                }
                row.retain(|_, c| !c.is_zero());
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        let mut a = IntMatrix::zeros(rows.len(), columns.len());
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row {
                a.set(i, *j, c.clone());
            }
        }
        let s = snf(&a);
        let total = columns.len() - s.rank();
        let t = s.torsion();
        let torsion = if t.is_empty() { Vec::new() } else { vec![(top, t.iter().map(ToString::to_string).collect())] };
        Ok(RankReport { ranks: vec![total], total, expected: self.rank(), torsion })
    }
}

fn face_supported(pair: &CharacteristicPair, i: usize, left: u32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    if i == cur.len() {
        let support: Vec<usize> = cur.iter().enumerate().filter(|(_, &a)| a > 0).map(|(k, _)| k).collect();
        if pair.is_face(&support) {
            out.push(cur.clone());
        }
        return;
    }
    for a in 0..=left {
        cur[i] = a as i32;
        face_supported(pair, i + 1, left - a, cur, out);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundlerings::samples::cp1_k;
    use crate::charpair::samples;

    fn cp1_over_cp1() -> BundleKRing {
        BundleKRing::new(&samples::cp1(), cp1_k(&[1])).unwrap()
    }

    #[test]
    fn presentation_texts() {
        let b = cp1_over_cp1();
        let p = b.presentation(KVariant::Y);
        assert_eq!(p.relation_texts(), vec!["(1 - y1)*(1 - y2)", "y1*y2^-1 - (1 + s)"]);
        let p = b.presentation(KVariant::X);
        assert_eq!(p.relation_texts(), vec!["x1*x2", "(1 - x1) - (1 + s)*(1 - x2)"]);
    }

    #[test]
    fn trivial_base_matches_fibre_presentation() {
        let pair = samples::cp2();
        let b = BundleKRing::new(&pair, BaseKRing::point(2)).unwrap();
        let ours: Vec<String> = b.presentation(KVariant::Y).relations.into_iter().map(|r| r.text).collect();
        let fibre: Vec<String> = k_presentation(&pair, KVariant::Y).relations.into_iter().map(|r| r.text).collect();
        assert_eq!(ours, fibre);
    }

    #[test]
    fn reduction_respects_relations() {
        let b = cp1_over_cp1();
        // y1 = (1 + s)·y2 in the bundle ring.
        let lhs = b.reduce(&b.parse("y1").unwrap()).unwrap();
        let rhs = b.reduce(&b.parse("y2 + s*y2").unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(b.reduce(&b.parse("(1 - y1)*(1 - y2)*s").unwrap()).unwrap().is_zero());
        let one = b.reduce(&b.parse("1").unwrap()).unwrap();
        assert_eq!(b.from_coefficients(&one.vectors()), b.parse("1").unwrap());
    }

    #[test]
    fn ranks() {
        let r = cp1_over_cp1().verify_rank().unwrap();
        assert!(r.is_ok(), "{r:?}");
        assert_eq!(r.total, 4);
        let r = BundleKRing::new(&samples::cp2(), cp1_k(&[1, -1])).unwrap().verify_rank().unwrap();
        assert!(r.is_ok(), "{r:?}");
        assert_eq!(r.total, 6);
    }
}
