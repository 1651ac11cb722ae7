//! The K-theoretic face ring `𝒦(Q) = Z[y_1^±1..y_d^±1] / J_1`, its
//! restriction to the vertices, and its structure as a free module over
//! `RT = Z[M]`.
//!
//! Variable conventions:
//!
//! * `y1..yd` generate `𝒦(Q)`;
//! * `t1..tn` generate `RT`, with `t_j = χ^{e_j}` for the standard basis of `M`;
//! * at a vertex `a`, `RT_a` is generated by `u{i}` for the facets `i ∈ a`,
//!   standing for `χ^{u_i}` where `(u_i)` is dual to `(v_i)_{i ∈ a}`.
//!
//! The variable `u{i}` at two vertices `a`, `b` containing facet `i` have the
//! same image in `RT_{a∨b}`, so restrictions to joins compare directly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::charpair::{CharacteristicPair, FaceId};
use crate::error::{Error, Result};
use crate::exactalg::{snf, solve_over_fraction_field, IntMatrix, LaurentPoly, Vars};
use crate::facering::Cohomology;
use crate::present::{product, ring_names, Factor, Family, Presentation, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KVariant {
    /// Polynomial generators `x_i = 1 - y_i`.
    #[serde(rename = "x")]
    X,
    /// Laurent generators `y_i`.
    #[serde(rename = "y")]
    Y,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KRelation {
    pub family: Family,
    /// Factored form, e.g. `(1 - x1) - (1 - x2)`.
    pub text: String,
    pub latex: String,
    pub poly: LaurentPoly,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KPresentation {
    pub variant: KVariant,
    pub variables: Vec<String>,
    pub relations: Vec<KRelation>,
}

impl KPresentation {
    pub fn to_presentation(&self) -> Presentation {
        let (ring, ring_latex) = ring_names(("Z", "\\mathbb{Z}"), &self.variables, self.variant == KVariant::Y);
        Presentation {
            title: "K*(X)".into(),
            ring,
            ring_latex,
            variables: self.variables.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation { family: r.family, text: r.text.clone(), latex: r.latex.clone() })
                .collect(),
            ..Presentation::default()
        }
    }
}

/// `∏_{i: ⟨u,v_i⟩>0} f_i^{⟨u,v_i⟩}` and `∏_{i: ⟨u,v_i⟩<0} f_i^{-⟨u,v_i⟩}`
/// as factor lists, for `u = e_j`.
pub(crate) fn split_character(pair: &CharacteristicPair, j: usize, factor: impl Fn(usize) -> Factor) -> (Vec<Factor>, Vec<Factor>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for i in 0..pair.d() {
        let c = pair.v(i)[j];
        if c > 0 {
            pos.push(factor(i).pow(c as u32));
        } else if c < 0 {
            neg.push(factor(i).pow((-c) as u32));
        }
    }
    (pos, neg)
}

/// `∏_i y_i^{⟨e_j, v_i⟩}`.
pub(crate) fn character_monomial(pair: &CharacteristicPair, vars: &Vars, j: usize) -> LaurentPoly {
    LaurentPoly::monomial(vars, (0..pair.d()).map(|i| pair.v(i)[j] as i32).collect(), 1)
}

/// Presentation of `K*(X)` in either variable form.
pub fn k_presentation(pair: &CharacteristicPair, variant: KVariant) -> KPresentation {
    let name = match variant {
        KVariant::X => "x",
        KVariant::Y => "y",
    };
    let vars = Vars::indexed(name, pair.d());
    let one = LaurentPoly::one(&vars);
    let var = |i| LaurentPoly::var(&vars, i);
    let mut relations = Vec::new();
    for f in crate::facering::min_nonfaces(pair) {
        let rel = match variant {
            KVariant::X => {
                let (text, latex) = product(&f.facets().iter().map(|&i| Factor::var(&vars.names()[i])).collect::<Vec<_>>());
                let poly = f.facets().iter().fold(one.clone(), |acc, &i| &acc * &var(i));
                KRelation { family: Family::I, text, latex, poly }
            }
            KVariant::Y => {
                let (text, latex) =
                    product(&f.facets().iter().map(|&i| Factor::one_minus(&vars.names()[i])).collect::<Vec<_>>());
                let poly = f.facets().iter().fold(one.clone(), |acc, &i| &acc * &(&one - &var(i)));
                KRelation { family: Family::I, text, latex, poly }
            }
        };
        relations.push(rel);
    }
    for j in 0..pair.n() {
        let rel = match variant {
            KVariant::X => {
                let (pos, neg) = split_character(pair, j, |i| Factor::one_minus(&vars.names()[i]));
                // ∏ (1 - x_i)^{sign·⟨u,v_i⟩} over the indices where that exponent is positive.
                let expand = |sign: i64| {
                    (0..pair.d()).fold(one.clone(), |acc, i| match pair.v(i)[j] * sign {
                        c if c > 0 => &acc * &(&one - &var(i)).pow(c).expect("nonnegative power"),
                        _ => acc,
                    })
                };
                let poly = &expand(1) - &expand(-1);
                let (pt, pl) = product(&pos);
                let (nt, nl) = product(&neg);
                KRelation { family: Family::II, text: format!("{pt} - {nt}"), latex: format!("{pl} - {nl}"), poly }
            }
            KVariant::Y => {
                let poly = &character_monomial(pair, &vars, j) - &one;
                KRelation {
                    family: Family::II,
                    text: poly.to_string(),
                    latex: crate::exactalg::Latex(&poly).to_string(),
                    poly,
                }
            }
        };
        if !rel.poly.is_zero() {
            relations.push(rel);
        }
    }
    KPresentation { variant, variables: vars.names().to_vec(), relations }
}

/// A vertex with its `RT_a` variables and dual basis.
#[derive(Clone, Debug)]
pub struct Vertex {
    pub face: FaceId,
    pub vars: Vars,
    /// Row `k` is `u_{i_k}` in standard coordinates of `M`.
    pub dual: Vec<Vec<i64>>,
}

/// Element of `∏_{a ∈ 𝒱} RT_a`, one value per vertex in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionTuple {
    pub entries: Vec<RestrictionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionEntry {
    /// Facets through the vertex, 1-based.
    pub vertex: Vec<usize>,
    pub value: LaurentPoly,
}

impl RestrictionTuple {
    pub fn values(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.entries.iter().map(|e| &e.value)
    }

    pub fn is_zero(&self) -> bool {
        self.values().all(LaurentPoly::is_zero)
    }
}

/// Outcome of the compatibility check along joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    /// Restrictions of the values at `a` and `b` to `RT_{a∨b}` differ.
    Incompatible { a: FaceId, b: FaceId, join: FaceId, from_a: LaurentPoly, from_b: LaurentPoly },
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Cohomology basis monomials with `x_i ↦ 1 - y_i`.
    Transplanted,
    /// Found by searching products of `(1 - y_i)` over faces.
    Searched,
}

/// `𝒦(Q)` with a fixed `RT`-basis.
#[derive(Clone, Debug)]
pub struct KFaceRing {
    pair: CharacteristicPair,
    y: Vars,
    t: Vars,
    vertices: Vec<Vertex>,
    basis: Vec<LaurentPoly>,
    basis_kind: BasisKind,
    /// `B[a][k] = ζ_a^{-1}(φ(b_k)_a)`.
    matrix: Vec<Vec<LaurentPoly>>,
}

impl KFaceRing {
    pub fn new(pair: &CharacteristicPair) -> Result<Self> {
        pair.ensure_valid()?;
        let y = Vars::indexed("y", pair.d());
        let t = Vars::indexed("t", pair.n());
        let vertices = pair
            .vertices()
            .into_iter()
            .map(|face| {
                let vars = Vars::new(face.facets().iter().map(|i| format!("u{}", i + 1)));
                let dual = pair.dual_basis_rows(&face)?;
                Ok(Vertex { face, vars, dual })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut ring = KFaceRing {
            pair: pair.clone(),
            y,
            t,
            vertices,
            basis: Vec::new(),
            basis_kind: BasisKind::Transplanted,
            matrix: Vec::new(),
        };
        let cohom = Cohomology::new(pair)?;
        let transplanted: Vec<LaurentPoly> =
            cohom.algebra().basis_flat().iter().map(|(_, e)| ring.one_minus_monomial(e)).collect();
        if ring.try_basis(transplanted, BasisKind::Transplanted).is_ok() {
            return Ok(ring);
        }
        ring.search_basis()?;
        Ok(ring)
    }

    /// `∏ (1 - y_i)^{e_i}`.
    fn one_minus_monomial(&self, e: &[u32]) -> LaurentPoly {
        let one = LaurentPoly::one(&self.y);
        e.iter().enumerate().fold(one.clone(), |acc, (i, &k)| {
            &acc * &(&one - &LaurentPoly::var(&self.y, i)).pow(k as i64).expect("nonnegative power")
        })
    }

    /// Installs `basis` after certifying that it spans `𝒦(Q)` freely: the
    /// matrix `B` is nonsingular, `1` lies in the span, and the span is
    /// stable under multiplication by every `y_i^{±1}`.
    fn try_basis(&mut self, basis: Vec<LaurentPoly>, kind: BasisKind) -> Result<()> {
        if basis.len() != self.vertices.len() {
            return Err(Error::BasisNotFree(format!("{} candidates for rank {}", basis.len(), self.vertices.len())));
        }
        let matrix: Vec<Vec<LaurentPoly>> = (0..self.vertices.len())
            .map(|a| basis.iter().map(|b| self.zeta_inv_at(&self.phi_at(b, a), a)).collect())
            .collect();
        let old = (std::mem::replace(&mut self.basis, basis), std::mem::replace(&mut self.matrix, matrix), self.basis_kind);
        self.basis_kind = kind;
        let check = (|| {
            self.rt_decompose(&LaurentPoly::one(&self.y))?;
            for i in 0..self.pair.d() {
                let yi = LaurentPoly::var(&self.y, i);
                let yinv = yi.inverse().expect("variables are units");
                for b in self.basis.clone() {
                    self.rt_decompose(&(&yi * &b))?;
                    self.rt_decompose(&(&yinv * &b))?;
                }
            }
            Ok(())
        })();
        if check.is_err() {
            self.basis = old.0;
            self.matrix = old.1;
            self.basis_kind = old.2;
        }
        check
    }

    fn search_basis(&mut self) -> Result<()> {
        let mut faces = self.pair.faces();
        faces.sort_by(|a, b| (a.codim(), a.facets()).cmp(&(b.codim(), b.facets())));
        let candidates: Vec<LaurentPoly> = faces
            .iter()
            .map(|f| {
                let mut e = vec![0u32; self.pair.d()];
                f.facets().iter().for_each(|&i| e[i] = 1);
                self.one_minus_monomial(&e)
            })
            .collect();
        let m = self.vertices.len();
        let mut tries = 0usize;
        let mut idx: Vec<usize> = (0..m).collect();
        if m > candidates.len() {
            return Err(Error::BasisNotFree("not enough face monomials".into()));
        }
        loop {
            tries += 1;
            let cand: Vec<LaurentPoly> = idx.iter().map(|&i| candidates[i].clone()).collect();
            if self.try_basis(cand, BasisKind::Searched).is_ok() {
                return Ok(());
            }
            if tries >= 10_000 || !next_combination(&mut idx, candidates.len()) {
                return Err(Error::BasisNotFree("no RT-basis among face monomials".into()));
            }
        }
    }

    pub fn pair(&self) -> &CharacteristicPair {
        &self.pair
    }

    pub fn y_vars(&self) -> &Vars {
        &self.y
    }

    pub fn t_vars(&self) -> &Vars {
        &self.t
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    pub fn basis_kind(&self) -> BasisKind {
        self.basis_kind
    }

    pub fn presentation(&self, variant: KVariant) -> KPresentation {
        k_presentation(&self.pair, variant)
    }

    /// `φ(p)_a`: `y_i ↦ u_i` for `i ∈ a`, `y_i ↦ 1` otherwise.
    pub fn phi_at(&self, p: &LaurentPoly, a: usize) -> LaurentPoly {
        let v = &self.vertices[a];
        let images: Vec<LaurentPoly> = (0..self.pair.d())
            .map(|i| match v.face.facets().iter().position(|&j| j == i) {
                Some(k) => LaurentPoly::var(&v.vars, k),
                None => LaurentPoly::one(&v.vars),
            })
            .collect();
        p.substitute(&images, &v.vars).expect("images are units")
    }

    pub fn phi(&self, p: &LaurentPoly) -> RestrictionTuple {
        RestrictionTuple {
            entries: (0..self.vertices.len())
                .map(|a| RestrictionEntry { vertex: self.vertices[a].face.one_based(), value: self.phi_at(p, a) })
                .collect(),
        }
    }

    fn join_vars(&self, join: &FaceId) -> Vars {
        Vars::new(join.facets().iter().map(|i| format!("u{}", i + 1)))
    }

    /// Projection `RT_a → RT_{a∨b}` of a value at vertex `a`.
    pub fn restrict_to(&self, value: &LaurentPoly, a: usize, join: &FaceId) -> LaurentPoly {
        let v = &self.vertices[a];
        let target = self.join_vars(join);
        let images: Vec<LaurentPoly> = v
            .face
            .facets()
            .iter()
            .map(|i| match join.facets().iter().position(|j| j == i) {
                Some(k) => LaurentPoly::var(&target, k),
                None => LaurentPoly::one(&target),
            })
            .collect();
        value.substitute(&images, &target).expect("images are units")
    }

    fn check_shape(&self, t: &RestrictionTuple) -> Result<()> {
        if t.entries.len() != self.vertices.len() {
            return Err(Error::Input(format!("tuple has {} entries for {} vertices", t.entries.len(), self.vertices.len())));
        }
        for (e, v) in t.entries.iter().zip(&self.vertices) {
            if e.vertex != v.face.one_based() {
                return Err(Error::Input(format!("expected vertex {:?}, found {:?}", v.face.one_based(), e.vertex)));
            }
            if e.value.vars() != &v.vars {
                return Err(Error::VariableMismatch { left: v.vars.names().to_vec(), right: e.value.vars().names().to_vec() });
            }
        }
        Ok(())
    }

    /// Compares restrictions to `RT_{a∨b}` for all pairs of vertices.
    pub fn check_compatibility(&self, t: &RestrictionTuple) -> Result<Compatibility> {
        self.check_shape(t)?;
        for a in 0..self.vertices.len() {
            for b in a + 1..self.vertices.len() {
                let join = self.pair.join(&self.vertices[a].face, &self.vertices[b].face);
                let from_a = self.restrict_to(&t.entries[a].value, a, &join);
                let from_b = self.restrict_to(&t.entries[b].value, b, &join);
                if from_a != from_b {
                    return Ok(Compatibility::Incompatible {
                        a: self.vertices[a].face.clone(),
                        b: self.vertices[b].face.clone(),
                        join,
                        from_a,
                        from_b,
                    });
                }
            }
        }
        Ok(Compatibility::Compatible)
    }

    /// Laurent polynomial `p` with `φ(p) = t`, built vertex by vertex: the
    /// residual at `a_k` is lifted by `u_i ↦ y_i` and subtracted. Values at
    /// earlier vertices stay zero because the residual is compatible.
    pub fn interpolate(&self, t: &RestrictionTuple) -> Result<LaurentPoly> {
        if let Compatibility::Incompatible { a, b, .. } = self.check_compatibility(t)? {
            return Err(Error::IncompatibleTuple { a: a.one_based(), b: b.one_based() });
        }
        let mut residual: Vec<LaurentPoly> = t.values().cloned().collect();
        let mut p = LaurentPoly::zero(&self.y);
        for k in 0..self.vertices.len() {
            if residual[k].is_zero() {
                continue;
            }
            let v = &self.vertices[k];
            let images: Vec<LaurentPoly> = v.face.facets().iter().map(|&i| LaurentPoly::var(&self.y, i)).collect();
            let lift = residual[k].substitute(&images, &self.y).expect("images are units");
            for (a, r) in residual.iter_mut().enumerate() {
                *r = &*r - &self.phi_at(&lift, a);
            }
            debug_assert!(residual[..=k].iter().all(LaurentPoly::is_zero));
            p = &p + &lift;
        }
        if let Some(k) = residual.iter().position(|r| !r.is_zero()) {
            let v = self.vertices[k].face.one_based();
            return Err(Error::IncompatibleTuple { a: v.clone(), b: v });
        }
        Ok(p)
    }

    /// `ι(χ^u) = ∏ y_i^{⟨u,v_i⟩}`.
    pub fn iota(&self, r: &LaurentPoly) -> LaurentPoly {
        let images: Vec<LaurentPoly> = (0..self.pair.n()).map(|j| character_monomial(&self.pair, &self.y, j)).collect();
        r.substitute(&images, &self.y).expect("images are units")
    }

    /// `ζ_a(χ^u) = ∏_{i ∈ a} χ^{⟨u,v_i⟩ u_i}`.
    pub fn zeta_at(&self, r: &LaurentPoly, a: usize) -> LaurentPoly {
        let v = &self.vertices[a];
        let images: Vec<LaurentPoly> = (0..self.pair.n())
            .map(|j| LaurentPoly::monomial(&v.vars, v.face.facets().iter().map(|&i| self.pair.v(i)[j] as i32).collect(), 1))
            .collect();
        r.substitute(&images, &v.vars).expect("images are units")
    }

    pub fn zeta(&self, r: &LaurentPoly) -> RestrictionTuple {
        RestrictionTuple {
            entries: (0..self.vertices.len())
                .map(|a| RestrictionEntry { vertex: self.vertices[a].face.one_based(), value: self.zeta_at(r, a) })
                .collect(),
        }
    }

    /// `ζ_a^{-1}`: `u_i ↦ χ^{u_i} = ∏_j t_j^{u_i[j]}`.
    pub fn zeta_inv_at(&self, value: &LaurentPoly, a: usize) -> LaurentPoly {
        let v = &self.vertices[a];
        let images: Vec<LaurentPoly> =
            v.dual.iter().map(|u| LaurentPoly::monomial(&self.t, u.iter().map(|&x| x as i32).collect(), 1)).collect();
        value.substitute(&images, &self.t).expect("images are units")
    }

    /// Coefficients `c_k ∈ RT` with `p = Σ_k ι(c_k)·b_k` in `𝒦(Q)`.
    pub fn rt_decompose(&self, p: &LaurentPoly) -> Result<Vec<LaurentPoly>> {
        let rhs: Vec<LaurentPoly> = (0..self.vertices.len()).map(|a| self.zeta_inv_at(&self.phi_at(p, a), a)).collect();
        let c = solve_over_fraction_field(&self.matrix, &rhs).map_err(|e| match e {
            Error::Singular => Error::BasisNotFree("restriction matrix is singular".into()),
            Error::NotInRing { .. } => Error::BasisNotFree(format!("{p} has non-Laurent coordinates")),
            other => other,
        })?;
        for ((row, r), v) in self.matrix.iter().zip(&rhs).zip(&self.vertices) {
            let mut sum = LaurentPoly::zero(&self.t);
            for (ck, bk) in c.iter().zip(row) {
                sum = &sum + &(ck * bk);
            }
            if &sum != r {
                return Err(Error::BasisNotFree(format!("reconstruction of {p} failed at vertex {}", v.face)));
            }
        }
        Ok(c)
    }

    /// `Σ_k ι(c_k)·b_k`.
    pub fn recompose(&self, coeffs: &[LaurentPoly]) -> LaurentPoly {
        coeffs.iter().zip(&self.basis).fold(LaurentPoly::zero(&self.y), |acc, (c, b)| &acc + &(&self.iota(c) * b))
    }

    /// Class in `K*(X) = Z ⊗_RT 𝒦(Q)`: coefficients under `χ^u ↦ 1`.
    pub fn augment(&self, coeffs: &[LaurentPoly]) -> Vec<BigInt> {
        coeffs.iter().map(LaurentPoly::augmentation).collect()
    }

    /// Coordinates of the class of `p` in `K*(X)` in the image of the basis.
    pub fn k_class(&self, p: &LaurentPoly) -> Result<Vec<BigInt>> {
        Ok(self.augment(&self.rt_decompose(p)?))
    }

    /// Membership in `J_1`, decided without restrictions: after clearing
    /// denominators and substituting `y_i = 1 - z_i` the ideal becomes the
    /// Stanley–Reisner ideal in `z`, which is saturated with respect to the
    /// units `1 - z_i`.
    pub fn in_j1(&self, p: &LaurentPoly) -> bool {
        let (poly, _) = p.clear_denominators();
        let z = Vars::indexed("z", self.pair.d());
        let one = LaurentPoly::one(&z);
        let images: Vec<LaurentPoly> = (0..self.pair.d()).map(|i| &one - &LaurentPoly::var(&z, i)).collect();
        let q = poly.substitute(&images, &z).expect("polynomial substitution");
        let all_nonface = q.terms().all(|(e, _)| {
            let support: Vec<usize> = e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i).collect();
            !self.pair.is_face(&support)
        });
        all_nonface
    }

    /// Rank and torsion of `K*(X)` computed from the polynomial presentation
    /// `Z[x]/J'`, truncated above degree `n` where all monomials vanish.
    pub fn kx_rank(&self) -> (usize, Vec<BigInt>) {
        let pres = k_presentation(&self.pair, KVariant::X);
        let d = self.pair.d();
        let n = self.pair.n() as u32;
        let x = Vars::indexed("x", d);
        let mut monos: Vec<Vec<i32>> = Vec::new();
        let mut cur = vec![0i32; d];
        face_monomials(&self.pair, 0, n, &mut cur, &mut monos);
        monos.sort();
        let index: std::collections::HashMap<Vec<i32>, usize> = monos.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for rel in pres.relations.iter().filter(|r| r.family == Family::II) {
            let r = rel.poly.with_vars(&x);
            for mu in &monos {
                let prod = &r * &LaurentPoly::monomial(&x, mu.clone(), 1);
                let mut row = vec![BigInt::zero(); monos.len()];
                for (e, c) in prod.terms() {
                    if let Some(&col) = index.get(e) {
                        row[col] += c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let s = snf(&IntMatrix::from_dense_shape(rows.len(), monos.len(), &rows));
        let rank = monos.len() - s.rank();
        let torsion = s.diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
        (rank, torsion)
    }
}

/// Monomials of degree `≤ left` supported on faces.
fn face_monomials(pair: &CharacteristicPair, i: usize, left: u32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    let support: Vec<usize> = cur.iter().enumerate().filter(|(_, &x)| x > 0).map(|(k, _)| k).collect();
    if !pair.is_face(&support) {
        return;
    }
    if i == cur.len() {
        out.push(cur.clone());
        return;
    }
    for a in 0..=left {
        cur[i] = a as i32;
        face_monomials(pair, i + 1, left - a, cur, out);
    }
    cur[i] = 0;
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
