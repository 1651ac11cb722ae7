//! Face ring and integral cohomology of a torus manifold.
//!
//! `H*(X) = Z[x_1..x_d] / (SR ideal + linear forms)`, with `x_i` in degree 2.
//! Degree-`2k` pieces are computed by [`GradedAlgebra`] with unit weights.

mod graded;

pub use graded::{DegreeTable, GradedAlgebra, Reduction};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::charpair::{CharacteristicPair, FaceId};
use crate::error::Result;
use crate::exactalg::{IntPoly, Latex, Vars};
use crate::present::{ring_names, Family, Presentation, Relation};

/// Minimal subsets of facets that are not simplices of the nerve, sorted by
/// size and then lexicographically.
pub fn min_nonfaces(pair: &CharacteristicPair) -> Vec<FaceId> {
    let mut out: Vec<FaceId> = Vec::new();
    for f in pair.faces() {
        for i in 0..pair.d() {
            if f.contains_facet(i) {
                continue;
            }
            let mut s = f.facets().to_vec();
            s.push(i);
            let s = FaceId::new(s);
            if pair.is_face(s.facets()) {
                continue;
            }
            let minimal = (0..s.codim()).all(|skip| {
                let sub: Vec<usize> =
                    s.facets().iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, &j)| j).collect();
                pair.is_face(&sub)
            });
            if minimal && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort_by(|a, b| (a.codim(), a.facets()).cmp(&(b.codim(), b.facets())));
    out
}

/// Generators and relations of `H*(X)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CohomPresentation {
    pub variables: Vec<String>,
    /// Minimal non-faces, 0-based.
    pub sr_generators: Vec<FaceId>,
    pub sr_polys: Vec<IntPoly>,
    /// `ℓ_{e_j} = Σ_i v_i[j] x_i`, one per standard basis vector of `M`.
    pub linear_forms: Vec<IntPoly>,
}

/// Basis monomials per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    /// Cohomological degree `2k`.
    pub degree: u32,
    pub rank: usize,
    pub monomials: Vec<Vec<u32>>,
    #[serde(with = "crate::exactalg::bigint_vec")]
    pub elementary_divisors: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBasis {
    pub pieces: Vec<GradedPiece>,
}

impl GradedBasis {
    /// Ranks in degrees `0, 1, …, 2·top`, odd degrees included.
    pub fn ranks(&self) -> Vec<usize> {
        let top = self.pieces.iter().map(|p| p.degree).max().unwrap_or(0);
        (0..=top).map(|d| self.pieces.iter().find(|p| p.degree == d).map_or(0, |p| p.rank)).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.pieces.iter().map(|p| p.rank).sum()
    }

    pub fn all_divisors_one(&self) -> bool {
        self.pieces.iter().all(|p| p.elementary_divisors.iter().all(|d| *d == BigInt::from(1)))
    }
}

pub(crate) fn graded_basis_of(alg: &GradedAlgebra) -> Result<GradedBasis> {
    let mut pieces = Vec::new();
    for k in 0..=alg.top() {
        let t = alg.table(k)?;
        pieces.push(GradedPiece {
            degree: 2 * k,
            rank: t.rank(),
            monomials: t.basis().cloned().collect(),
            elementary_divisors: t.divisors().to_vec(),
        });
    }
    Ok(GradedBasis { pieces })
}

/// `H*(X)` for a valid characteristic pair.
#[derive(Debug)]
pub struct Cohomology {
    pair: CharacteristicPair,
    algebra: GradedAlgebra,
    sym_vars: Vars,
}

pub(crate) fn linear_forms(pair: &CharacteristicPair, vars: &Vars) -> Vec<IntPoly> {
    (0..pair.n())
        .map(|j| {
            let mut l = IntPoly::zero(vars);
            for i in 0..pair.d() {
                let c = pair.v(i)[j];
                if c != 0 {
                    l = &l + &IntPoly::var(vars, i).scale(&BigInt::from(c));
                }
            }
            l
        })
        .collect()
}

pub(crate) fn face_monomial(vars: &Vars, f: &FaceId) -> IntPoly {
    let mut e = vec![0u32; vars.len()];
    for &i in f.facets() {
        e[i] = 1;
    }
    IntPoly::monomial(vars, &e, 1)
}

/// The face ring modulo the linear forms, in variables `x1..xd`.
pub(crate) fn pair_algebra(pair: &CharacteristicPair) -> Result<GradedAlgebra> {
    pair.ensure_valid()?;
    let vars = Vars::indexed("x", pair.d());
    let sr: Vec<IntPoly> = min_nonfaces(pair).iter().map(|f| face_monomial(&vars, f)).collect();
    GradedAlgebra::new(
        vars.clone(),
        vec![1; pair.d()],
        sr,
        linear_forms(pair, &vars),
        pair.n() as u32,
        Some(pair.euler_characteristic()),
    )
}

impl Cohomology {
    pub fn new(pair: &CharacteristicPair) -> Result<Self> {
        let algebra = pair_algebra(pair)?;
        Ok(Cohomology { pair: pair.clone(), algebra, sym_vars: Vars::indexed("t", pair.n()) })
    }

    pub fn pair(&self) -> &CharacteristicPair {
        &self.pair
    }

    pub fn vars(&self) -> &Vars {
        self.algebra.vars()
    }

    /// Variables `t_1..t_n` of `Sym(M)`, dual to the standard basis.
    pub fn sym_vars(&self) -> &Vars {
        &self.sym_vars
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn presentation(&self) -> CohomPresentation {
        let nonfaces = min_nonfaces(&self.pair);
        CohomPresentation {
            variables: self.vars().names().to_vec(),
            sr_polys: nonfaces.iter().map(|f| face_monomial(self.vars(), f)).collect(),
            sr_generators: nonfaces,
            linear_forms: self.algebra.linear().to_vec(),
        }
    }

    pub fn graded_basis(&self) -> GradedBasis {
        graded_basis_of(&self.algebra).expect("degrees up to the top were computed at construction")
    }

    /// Basis monomials of all degrees, as polynomials.
    pub fn basis_polys(&self) -> Vec<IntPoly> {
        self.algebra.basis_flat().iter().map(|(_, e)| IntPoly::monomial(self.vars(), e, 1)).collect()
    }

    /// Normal form of `p` in `H*(X)`.
    pub fn reduce(&self, p: &IntPoly) -> Result<IntPoly> {
        Ok(self.algebra.reduce(p)?.normal)
    }

    /// Coordinates of the class of `p` in the basis of [`Cohomology::basis_polys`].
    pub fn coordinates(&self, p: &IntPoly) -> Result<Vec<BigInt>> {
        Ok(self.algebra.coordinates(&self.reduce(p)?))
    }

    pub fn multiply(&self, p: &IntPoly, q: &IntPoly) -> Result<IntPoly> {
        self.reduce(&(p * q))
    }

    /// Image of `p` at the vertex `a`: `x_i ↦ u_i` for `i ∈ a`, `x_i ↦ 0`
    /// otherwise, in the variables [`Cohomology::sym_vars`].
    pub fn vertex_restrict(&self, p: &IntPoly, a: &FaceId) -> Result<IntPoly> {
        let dual = self.pair.dual_basis_rows(a)?;
        let t = &self.sym_vars;
        let images: Vec<IntPoly> = (0..self.pair.d())
            .map(|i| match a.facets().iter().position(|&j| j == i) {
                Some(k) => dual[k].iter().enumerate().fold(IntPoly::zero(t), |acc, (j, &c)| {
                    &acc + &IntPoly::var(t, j).scale(&BigInt::from(c))
                }),
                None => IntPoly::zero(t),
            })
            .collect();
        Ok(p.substitute(&images, t))
    }

    /// Coefficients `c_j ∈ Sym(M)` with `p = Σ c_j(ℓ)·b_j` in the face ring.
    pub fn sym_decompose(&self, p: &IntPoly) -> Result<Vec<IntPoly>> {
        self.algebra.sym_decompose(p, &self.sym_vars)
    }

    /// Presentation with the Stanley–Reisner monomials as family (i) and
    /// the linear forms as family (ii).
    pub fn to_presentation(&self) -> Presentation {
        let rel = |family, p: &IntPoly| Relation { family, text: p.to_string(), latex: Latex(p.as_laurent()).to_string() };
        let pres = self.presentation();
        let mut relations: Vec<Relation> = pres.sr_polys.iter().map(|p| rel(Family::I, p)).collect();
        relations.extend(pres.linear_forms.iter().map(|p| rel(Family::II, p)));
        let (ring, ring_latex) = ring_names(("Z", "\\mathbb{Z}"), self.vars().names(), false);
        Presentation {
            title: "H*(X)".into(),
            ring,
            ring_latex,
            variables: self.vars().names().to_vec(),
            relations,
            ranks: Some(self.betti_numbers()),
            basis: self.basis_polys().iter().map(ToString::to_string).collect(),
            notes: Vec::new(),
            conjectural: false,
        }
    }

    /// Graded ranks in degrees `0..=2n`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.graded_basis().ranks()
    }
}
