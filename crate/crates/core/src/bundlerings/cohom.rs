//! `H*(E(X)) = H*(B)[x] / (SR + (ℓ_u - c_1(ξ_u)))`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::base::{BaseCohomRing, BaseElement};
use super::{combined_vars, join_combined, split_combined, BundleNormalForm, NormalCoefficient};
use crate::charpair::CharacteristicPair;
use crate::error::{Error, Result};
use crate::exactalg::{parse_int_poly, snf, IntMatrix, IntPoly, Latex, LaurentPoly, Vars};
use crate::facering::{pair_algebra, GradedAlgebra};
use crate::present::{ring_names, Family, Presentation, Relation};

/// An element of the bundle ring: `Σ_β e_β ⊗ p_β` over the base basis.
pub type BundleElement = Vec<IntPoly>;

#[derive(Debug)]
pub struct BundleCohomology {
    algebra: GradedAlgebra,
    base: BaseCohomRing,
    combined: Vars,
    sym_vars: Vars,
    fuel: usize,
    family_i: Vec<IntPoly>,
    notes: Vec<String>,
}

/// Ranks of the bundle ring by cohomological degree, computed without the
/// reduction machinery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub ranks: Vec<usize>,
    pub total: usize,
    pub expected: usize,
    /// Degrees with torsion, and the non-unit elementary divisors there.
    pub torsion: Vec<(u32, Vec<String>)>,
}

impl RankReport {
    pub fn is_ok(&self) -> bool {
        self.total == self.expected && self.torsion.is_empty()
    }
}

impl BundleCohomology {
    pub fn new(pair: &CharacteristicPair, base: BaseCohomRing) -> Result<Self> {
        if base.n() != pair.n() {
            return Err(Error::InvalidBase(format!("{} characteristic classes for a rank {} torus", base.n(), pair.n())));
        }
        let algebra = pair_algebra(pair)?;
        let family_i = crate::facering::min_nonfaces(pair)
            .iter()
            .map(|f| crate::facering::face_monomial(algebra.vars(), f))
            .collect();
        Self::from_parts(algebra, base, family_i, Vec::new())
    }

    /// Bundle ring over an already computed fibre algebra. `family_i` lists
    /// the relations displayed as family (i).
    pub(crate) fn from_parts(algebra: GradedAlgebra, base: BaseCohomRing, family_i: Vec<IntPoly>, notes: Vec<String>) -> Result<Self> {
        if base.n() != algebra.linear().len() {
            return Err(Error::InvalidBase(format!(
                "{} characteristic classes for {} linear forms",
                base.n(),
                algebra.linear().len()
            )));
        }
        let combined = combined_vars(algebra.vars(), base.ring())?;
        let n = algebra.linear().len();
        let fuel = base.ring().nilpotency() * (2 * n + 1);
        Ok(BundleCohomology { algebra, base, combined, sym_vars: Vars::indexed("t", n), fuel, family_i, notes })
    }

    pub fn with_fuel(mut self, fuel: usize) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn fuel(&self) -> usize {
        self.fuel
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn base(&self) -> &BaseCohomRing {
        &self.base
    }

    /// Fibre generators followed by the base names.
    pub fn combined_vars(&self) -> &Vars {
        &self.combined
    }

    pub fn fibre_basis(&self) -> Vec<IntPoly> {
        self.algebra.basis_flat().iter().map(|(_, e)| IntPoly::monomial(self.algebra.vars(), e, 1)).collect()
    }

    /// Rank of the ring as a Z-module.
    pub fn rank(&self) -> usize {
        self.base.ring().rank() * self.algebra.rank()
    }

    pub fn parse(&self, src: &str) -> Result<BundleElement> {
        self.element(&parse_int_poly(src, &self.combined)?)
    }

    /// Splits a polynomial in the combined variables.
    pub fn element(&self, p: &IntPoly) -> Result<BundleElement> {
        split_combined(p.as_laurent(), self.algebra.vars(), self.base.ring())?
            .into_iter()
            .map(IntPoly::new)
            .collect()
    }

    pub fn to_combined(&self, elem: &[IntPoly]) -> IntPoly {
        let ring = self.base.ring();
        let p = elem.iter().enumerate().fold(LaurentPoly::zero(&self.combined), |acc, (b, q)| {
            &acc + &join_combined(q.as_laurent(), &ring.basis_element(b), &self.combined)
        });
        IntPoly::new(p).expect("nonnegative exponents")
    }

    /// `1 ⊗ 1`.
    pub fn one(&self) -> BundleElement {
        let mut e = vec![IntPoly::zero(self.algebra.vars()); self.base.ring().rank()];
        e[0] = IntPoly::one(self.algebra.vars());
        e
    }

    pub fn multiply(&self, a: &[IntPoly], b: &[IntPoly]) -> BundleElement {
        let ring = self.base.ring();
        let mut out = vec![IntPoly::zero(self.algebra.vars()); ring.rank()];
        for (i, p) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (j, q) in b.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                let pq = p * q;
                for (g, c) in ring.mul(&ring.basis_element(i), &ring.basis_element(j)).iter().enumerate() {
                    if !c.is_zero() {
                        out[g] = &out[g] + &pq.scale(c);
                    }
                }
            }
        }
        out
    }

    /// Normal-form coefficients by repeated reduction: each pass writes
    /// `e_β ⊗ p = e_β ⊗ nf(p) + Σ_u e_β·c_1(ξ_u) ⊗ q_u` and moves the
    /// remainder up one base degree. Fails with `FuelExhausted` if more
    /// than [`BundleCohomology::fuel`] passes are needed.
    pub fn reduce_coefficients(&self, elem: &[IntPoly]) -> Result<Vec<BaseElement>> {
        let ring = self.base.ring();
        let vars = self.algebra.vars();
        let mut work: Vec<IntPoly> = elem.to_vec();
        let mut normal = vec![IntPoly::zero(vars); ring.rank()];
        let mut rounds = 0;
        while work.iter().any(|p| !p.is_zero()) {
            rounds += 1;
            if rounds > self.fuel {
                return Err(Error::FuelExhausted(self.fuel));
            }
            let mut next = vec![IntPoly::zero(vars); ring.rank()];
            for (beta, p) in work.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let red = self.algebra.reduce(p)?;
                normal[beta] = &normal[beta] + &red.normal;
                for (j, q) in red.cert.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                    let shifted = ring.mul(&ring.basis_element(beta), self.base.char_class(j));
                    for (g, c) in shifted.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        next[g] = &next[g] + &q.scale(c);
                    }
                }
            }
            work = next;
        }
        let m = self.algebra.rank();
        let mut coeffs = vec![ring.zero(); m];
        for (beta, p) in normal.iter().enumerate() {
            for (k, c) in self.algebra.coordinates(p).into_iter().enumerate() {
                coeffs[k][beta] += c;
            }
        }
        Ok(coeffs)
    }

    pub fn reduce(&self, elem: &[IntPoly]) -> Result<BundleNormalForm> {
        let coeffs = self.reduce_coefficients(elem)?;
        Ok(self.normal_form(coeffs))
    }

    /// Same coefficients through the `Sym(M)`-module structure: `p = Σ_k
    /// c_k(ℓ)·b_k` in the face ring, then `ℓ_u ↦ c_1(ξ_u)`.
    pub fn reduce_via_sym(&self, elem: &[IntPoly]) -> Result<Vec<BaseElement>> {
        let ring = self.base.ring();
        let images: Vec<BaseElement> = (0..self.base.n()).map(|j| self.base.char_class(j).clone()).collect();
        let mut coeffs = vec![ring.zero(); self.algebra.rank()];
        for (beta, p) in elem.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (k, c) in self.algebra.sym_decompose(p, &self.sym_vars)?.iter().enumerate() {
                let v = ring.mul(&ring.basis_element(beta), &ring.eval_poly(c, &images));
                coeffs[k] = ring.add(&coeffs[k], &v);
            }
        }
        Ok(coeffs)
    }

    pub fn normal_form(&self, coeffs: Vec<BaseElement>) -> BundleNormalForm {
        let ring = self.base.ring();
        let basis = self.fibre_basis();
        let mut elem = vec![IntPoly::zero(self.algebra.vars()); ring.rank()];
        for (b, c) in basis.iter().zip(&coeffs) {
            for (beta, a) in c.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                elem[beta] = &elem[beta] + &b.scale(a);
            }
        }
        BundleNormalForm {
            base_basis: ring.names().to_vec(),
            text: self.to_combined(&elem).to_string(),
            coefficients: basis
                .iter()
                .zip(coeffs)
                .map(|(b, v)| NormalCoefficient { basis: b.to_string(), text: ring.format(&v), vector: v })
                .collect(),
        }
    }

    /// `ℓ_u - c_1(ξ_u)` in the combined variables.
    pub fn twisted_linear_forms(&self) -> Vec<IntPoly> {
        let ring = self.base.ring();
        self.algebra
            .linear()
            .iter()
            .enumerate()
            .map(|(j, l)| {
                let lin = join_combined(l.as_laurent(), &ring.one(), &self.combined);
                let c1 = join_combined(&LaurentPoly::one(self.algebra.vars()), self.base.char_class(j), &self.combined);
                IntPoly::new(&lin - &c1).expect("nonnegative exponents")
            })
            .collect()
    }

    pub fn presentation(&self) -> Presentation {
        let embed = |p: &IntPoly| join_combined(p.as_laurent(), &self.base.ring().one(), &self.combined);
        let mut relations: Vec<Relation> = self
            .family_i
            .iter()
            .map(|r| {
                let e = embed(r);
                Relation { family: Family::I, text: e.to_string(), latex: Latex(&e).to_string() }
            })
            .collect();
        for l in self.twisted_linear_forms() {
            relations.push(Relation { family: Family::II, text: l.to_string(), latex: Latex(l.as_laurent()).to_string() });
        }
        let (ring, ring_latex) = ring_names(("H*(B)", "H^*(B)"), self.algebra.vars().names(), false);
        let mut notes = self.notes.clone();
        notes.push("free H*(B)-module on the listed basis".into());
        Presentation {
            title: "H*(E)".into(),
            ring,
            ring_latex,
            variables: self.combined.names().to_vec(),
            relations,
            ranks: Some(self.expected_ranks()),
            basis: self.fibre_basis().iter().map(ToString::to_string).collect(),
            notes,
            conjectural: false,
        }
    }

    /// Ranks by degree from the Leray-Hirsch product of base and fibre ranks.
    pub fn expected_ranks(&self) -> Vec<usize> {
        let ring = self.base.ring();
        let top = 2 * self.algebra.top() as usize + ring.top_degree() as usize;
        let mut ranks = vec![0; top + 1];
        for (k, b) in self.algebra.basis().iter().enumerate() {
            for d in ring.degrees() {
                ranks[2 * k + *d as usize] += b.len();
            }
        }
        ranks
    }

    /// Ranks and torsion of the bundle ring degree by degree, from the
    /// Smith normal form of the full relation matrix over the base basis.
    pub fn verify_rank(&self) -> Result<RankReport> {
        let alg = &self.algebra;
        let ring = self.base.ring();
        let max_w = alg.weights().iter().copied().max().unwrap_or(1);
        let top = 2 * (alg.top() + max_w) + ring.top_degree();
        let mut ranks = Vec::new();
        let mut torsion = Vec::new();
        for d in 0..=top {
            // Columns: e_β ⊗ μ with 2·w(μ) + deg β = d.
            let mut columns: Vec<(usize, Vec<u32>)> = Vec::new();
            for (beta, &db) in ring.degrees().iter().enumerate() {
                if db <= d && (d - db) % 2 == 0 {
                    for mu in alg.monomials((d - db) / 2) {
                        columns.push((beta, mu));
                    }
                }
            }
            let index: std::collections::HashMap<&(usize, Vec<u32>), usize> =
                columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
            let mut rows: Vec<Vec<(usize, BigInt)>> = Vec::new();
            let mut push = |terms: Vec<(usize, IntPoly)>| {
                let mut row = std::collections::BTreeMap::<usize, BigInt>::new();
                for (beta, p) in terms {
                    for (e, c) in alg.prune(&p).terms() {
                        let col = index[&(beta, e)];
                        *row.entry(col).or_insert_with(BigInt::zero) += c;
                    }
                }
                row.retain(|_, c| !c.is_zero());
                if !row.is_empty() {
                    rows.push(row.into_iter().collect());
                }
            };
            for (beta, &db) in ring.degrees().iter().enumerate() {
                if db > d || (d - db) % 2 != 0 {
                    continue;
                }
                let k = (d - db) / 2;
                for (w, r) in alg.relations() {
                    if *w <= k {
                        for mu in alg.monomials(k - w) {
                            push(vec![(beta, r * &IntPoly::monomial(alg.vars(), &mu, 1))]);
                        }
                    }
                }
                if k >= 1 {
                    for mu in alg.monomials(k - 1) {
                        let m = IntPoly::monomial(alg.vars(), &mu, 1);
                        for (j, l) in alg.linear().iter().enumerate() {
                            let mut terms = vec![(beta, l * &m)];
                            let shifted = ring.mul(&ring.basis_element(beta), self.base.char_class(j));
                            for (g, c) in shifted.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                                terms.push((g, m.scale(&-c)));
                            }
                            push(terms);
                        }
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
            ranks.push(columns.len() - s.rank());
            let t = s.torsion();
            if !t.is_empty() {
                torsion.push((d, t.iter().map(ToString::to_string).collect()));
            }
        }
        let total = ranks.iter().sum();
        Ok(RankReport { ranks, total, expected: self.rank(), torsion })
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundlerings::samples::cp1_cohom;
    use crate::charpair::samples;

    fn cp1_over_cp1() -> BundleCohomology {
        // c_1(ξ_{e_1}) = t.
        BundleCohomology::new(&samples::cp1(), cp1_cohom(&[1])).unwrap()
    }

    #[test]
    fn presentation_texts() {
        let b = cp1_over_cp1();
        let p = b.presentation();
        assert_eq!(p.relation_texts(), vec!["x1*x2", "x1 - x2 - t"]);
        assert_eq!(p.ranks, Some(vec![1, 0, 2, 0, 1]));
    }

    #[test]
    fn reduce_cp1_over_cp1() {
        let b = cp1_over_cp1();
        let nf = b.reduce(&b.parse("x1").unwrap()).unwrap();
        assert_eq!(nf.text, "x2 + t");
        // x2^2 = x2·(x1 - t) = -t·x2.
        let nf = b.reduce(&b.parse("x2^2").unwrap()).unwrap();
        assert_eq!(nf.text, "-x2*t");
        let nf = b.reduce(&b.parse("x2^3").unwrap()).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn loop_agrees_with_sym_route() {
        let b = cp1_over_cp1();
        for s in ["x1^2", "x1*x2 + t*x1", "x1^3 - 2*x2", "t*x2 + x1 + 5"] {
            let e = b.parse(s).unwrap();
            assert_eq!(b.reduce_coefficients(&e).unwrap(), b.reduce_via_sym(&e).unwrap(), "{s}");
        }
    }

    #[test]
    fn fuel_is_enforced() {
        let b = cp1_over_cp1().with_fuel(1);
        // x1 needs a second pass to clear t·1.
        assert!(matches!(b.reduce(&b.parse("x1^2").unwrap()), Err(Error::FuelExhausted(1))));
    }

    #[test]
    fn trivial_bundle_ranks() {
        let b = BundleCohomology::new(&samples::cp2(), cp1_cohom(&[0, 0])).unwrap();
        let r = b.verify_rank().unwrap();
        assert!(r.is_ok(), "{r:?}");
        assert_eq!(r.total, 6);
        assert_eq!(&r.ranks[..7], &[1, 0, 2, 0, 2, 0, 1]);
    }

    #[test]
    fn unit_reduces_to_unit() {
        let b = cp1_over_cp1();
        let nf = b.reduce(&b.one()).unwrap();
        assert_eq!(nf.text, "1");
    }
}
