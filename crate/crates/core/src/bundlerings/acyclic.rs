//! Rings of face-acyclic orbit spaces, given by a general face poset.
//!
//! Generators `x_F` for the proper faces, in degree `2·codim F`. Relations:
//! `x_G x_H - x_{G∨H} Σ_{E ∈ G∩H} x_E` for distinct faces (`x_Q = 1`), and
//! `Σ_i ⟨u, v_i⟩ x_{Q_i} - c_1(ξ_u)`.

use num_bigint::BigInt;

use super::base::{BaseCohomRing, BaseKRing, BaseRing};
use super::cohom::BundleCohomology;
use super::twisted_difference;
use crate::charpair::GeneralFacePoset;
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, Latex, Vars};
use crate::facering::GradedAlgebra;
use crate::present::{product, ring_names, Factor, Family, Presentation, Relation};

fn poset_vars(poset: &GeneralFacePoset) -> Vars {
    Vars::new(poset.faces().iter().map(|f| format!("x_{}", f.id)))
}

/// Nonzero relations of the first kind, one per unordered pair of faces.
pub fn face_acyclic_relations(poset: &GeneralFacePoset) -> Result<Vec<IntPoly>> {
    let vars = poset_vars(poset);
    let x = |f: usize| IntPoly::var(&vars, f);
    let mut out = Vec::new();
    for (a, b) in poset.pairs() {
        let meet = poset.meet_components(a, b);
        let sum = meet.iter().fold(IntPoly::zero(&vars), |acc, &e| &acc + &x(e));
        let tail = if meet.is_empty() {
            sum
        } else {
            match poset.join(a, b) {
                None => sum,
                Some(j) => &x(j) * &sum,
            }
        };
        let r = &(&x(a) * &x(b)) - &tail;
        if !r.is_zero() {
            out.push(r);
        }
    }
    Ok(out)
}

fn linear_forms(poset: &GeneralFacePoset, vars: &Vars) -> Vec<IntPoly> {
    (0..poset.n())
        .map(|j| {
            poset.lambda().iter().enumerate().fold(IntPoly::zero(vars), |acc, (i, v)| {
                &acc + &IntPoly::var(vars, poset.facet_face(i)).scale(&BigInt::from(v[j]))
            })
        })
        .collect()
}

const DEGREE_NOTE: &str = "generator x_F has degree 2*codim(F); the relations of the first kind are homogeneous only under this grading";

/// The ring of a face-acyclic orbit space twisted over a base.
#[derive(Debug)]
pub struct FaceAcyclicRing {
    poset: GeneralFacePoset,
    bundle: BundleCohomology,
}

impl FaceAcyclicRing {
    pub fn new(poset: &GeneralFacePoset, base: BaseCohomRing) -> Result<Self> {
        let vars = poset_vars(poset);
        let relations = face_acyclic_relations(poset)?;
        let weights: Vec<u32> = poset.faces().iter().map(|f| f.codim as u32).collect();
        let algebra = GradedAlgebra::new(
            vars.clone(),
            weights,
            relations.clone(),
            linear_forms(poset, &vars),
            poset.n() as u32,
            Some(poset.euler_characteristic()),
        )
        .map_err(|e| match e {
            Error::Input(m) => Error::InvalidPoset(m),
            other => other,
        })?;
        let mut notes = vec![DEGREE_NOTE.to_string()];
        let degrees: Vec<String> = poset.faces().iter().map(|f| format!("deg x_{} = {}", f.id, 2 * f.codim)).collect();
        notes.push(degrees.join(", "));
        let bundle = BundleCohomology::from_parts(algebra, base, relations, notes)?;
        Ok(FaceAcyclicRing { poset: poset.clone(), bundle })
    }

    pub fn with_fuel(mut self, fuel: usize) -> Self {
        self.bundle = self.bundle.with_fuel(fuel);
        self
    }

    pub fn poset(&self) -> &GeneralFacePoset {
        &self.poset
    }

    pub fn bundle(&self) -> &BundleCohomology {
        &self.bundle
    }

    pub fn presentation(&self) -> Presentation {
        let mut p = self.bundle.presentation();
        if self.bundle.base().ring().rank() == 1 {
            p.title = "H*(X)".into();
            let (ring, latex) = ring_names(("Z", "\\mathbb{Z}"), self.bundle.algebra().vars().names(), false);
            p.ring = ring;
            p.ring_latex = latex;
            p.notes.retain(|n| !n.starts_with("free "));
        }
        p
    }
}

/// Candidate presentation of `K*(E(X))` for a general face poset. It is
/// flagged as conjectural and not checked.
pub fn emit_conjecture_sj(poset: &GeneralFacePoset, base: &BaseKRing) -> Result<Presentation> {
    if base.n() != poset.n() {
        return Err(Error::InvalidBase(format!("{} line classes for a rank {} torus", base.n(), poset.n())));
    }
    let vars = poset_vars(poset);
    let mut relations: Vec<Relation> = face_acyclic_relations(poset)?
        .iter()
        .map(|r| Relation { family: Family::I, text: r.to_string(), latex: Latex(r.as_laurent()).to_string() })
        .collect();
    let ring = base.ring();
    for j in 0..poset.n() {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, v) in poset.lambda().iter().enumerate() {
            let f = || Factor::one_minus(&vars.names()[poset.facet_face(i)]);
            if v[j] > 0 {
                pos.push(f().pow(v[j] as u32));
            } else if v[j] < 0 {
                neg.push(f().pow((-v[j]) as u32));
            }
        }
        let l = base.line_class(j);
        let xi = (ring.format(l), ring.format_latex(l), BaseRing::is_compound(l));
        let (pt, nt) = (product(&pos), product(&neg));
        if pt == nt && l == &ring.one() {
            continue;
        }
        let (text, latex) = twisted_difference(pt, xi, nt);
        relations.push(Relation { family: Family::II, text, latex });
    }
    let (ring_text, ring_latex) = ring_names(("K*(B)", "K^*(B)"), vars.names(), false);
    Ok(Presentation {
        title: "K*(E)".into(),
        ring: ring_text,
        ring_latex,
        variables: vars.names().to_vec(),
        relations,
        ranks: None,
        basis: Vec::new(),
        notes: vec!["candidate presentation; no ring structure is verified".into()],
        conjectural: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundlerings::samples::{cp1_cohom, cp1_k};
    use crate::charpair::poset_samples::s4;
    use crate::charpair::samples;

    #[test]
    fn s4_relations() {
        let r: Vec<String> = face_acyclic_relations(&s4()).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(r, vec!["x_G*x_H - x_a - x_b", "x_a*x_b"]);
    }

    #[test]
    fn s4_ring() {
        let ring = FaceAcyclicRing::new(&s4(), BaseCohomRing::point(2)).unwrap();
        assert_eq!(ring.bundle().expected_ranks(), vec![1, 0, 0, 0, 1]);
        let p = ring.presentation();
        assert_eq!(p.relation_texts(), vec!["x_G*x_H - x_a - x_b", "x_a*x_b", "x_G", "x_H"]);
        assert!(p.notes.iter().any(|n| n.contains("deg x_a = 4")));
    }

    #[test]
    fn s4_over_cp1() {
        let ring = FaceAcyclicRing::new(&s4(), cp1_cohom(&[0, 1])).unwrap();
        let p = ring.presentation();
        assert_eq!(p.relation_texts(), vec!["x_G*x_H - x_a - x_b", "x_a*x_b", "x_G", "x_H - t"]);
        let b = ring.bundle();
        let r = b.verify_rank().unwrap();
        assert!(r.is_ok(), "{r:?}");
        // x_a = -x_b + x_G x_H and x_G = 0.
        let e = b.parse("x_a + x_b").unwrap();
        assert!(b.reduce(&e).unwrap().is_zero());
        let e = b.parse("x_H^2").unwrap();
        assert!(b.reduce(&e).unwrap().is_zero());
    }

    #[test]
    fn pair_poset_agrees_with_face_ring() {
        for pair in [samples::cp1(), samples::cp2(), samples::square()] {
            let poset = GeneralFacePoset::from_pair(&pair).unwrap();
            let ring = FaceAcyclicRing::new(&poset, BaseCohomRing::point(pair.n())).unwrap();
            let betti = crate::facering::Cohomology::new(&pair).unwrap().betti_numbers();
            assert_eq!(ring.bundle().expected_ranks(), betti);
        }
    }

    #[test]
    fn conjecture_is_flagged() {
        let p = emit_conjecture_sj(&s4(), &cp1_k(&[0, 1])).unwrap();
        assert!(p.conjectural);
        assert!(p.to_text().starts_with("CONJECTURAL"));
        assert_eq!(
            p.relation_texts(),
            vec!["x_G*x_H - x_a - x_b", "x_a*x_b", "(1 - x_G) - 1", "(1 - x_H) - (1 + s)"]
        );
    }
}
