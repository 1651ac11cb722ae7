//! Combinatorial data for a torus manifold: facets, nerve, characteristic
//! vectors, faces and vertices.
//!
//! Facets are indexed from 0 internally. File formats and rendered output
//! use 1-based indices.

mod fan;
mod poset;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{snf, IntMatrix};

pub use fan::Fan;
pub use poset::{GeneralFacePoset, PosetFace, PosetFile};
#[cfg(test)]
pub(crate) use poset::samples as poset_samples;

/// A face of the orbit space, named by the sorted set of facets containing
/// it. The empty set is the whole orbit space `Q`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct FaceId(Vec<usize>);

impl FaceId {
    pub fn new(mut facets: Vec<usize>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        FaceId(facets)
    }

    pub fn whole() -> Self {
        FaceId(Vec::new())
    }

    pub fn facets(&self) -> &[usize] {
        &self.0
    }

    pub fn codim(&self) -> usize {
        self.0.len()
    }

    pub fn is_whole(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_facet(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Face containment: `self` lies inside `other` exactly when every facet
    /// through `other` also passes through `self`.
    pub fn is_contained_in(&self, other: &FaceId) -> bool {
        other.0.iter().all(|i| self.contains_facet(*i))
    }

    /// 1-based facet labels.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("Q");
        }
        let labels: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// Characteristic pair: nerve of the facet covering plus the characteristic
/// vectors `v_i` as the rows of `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPair {
    n: usize,
    facet_names: Vec<String>,
    nerve: Vec<FaceId>,
    lambda: Vec<Vec<i64>>,
}

/// JSON form: `{ "n", "facets", "nerve_maximal", "lambda" }`, nerve 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facets: Vec<String>,
    pub nerve_maximal: Vec<Vec<usize>>,
    pub lambda: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValidationIssue {
    NoFacets,
    NoVertices,
    FacetNotInNerve { facet: usize },
    SimplexTooLarge { simplex: Vec<usize> },
    NonPrimitive { facet: usize, gcd: String },
    NonUnimodularVertex { vertex: Vec<usize>, det: String },
    NotPartOfBasis { simplex: Vec<usize> },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::NoFacets => f.write_str("no facets"),
            ValidationIssue::NoVertices => f.write_str("no vertices (fixed point set would be empty)"),
            ValidationIssue::FacetNotInNerve { facet } => {
                write!(f, "facet {facet} does not appear in the nerve")
            }
            ValidationIssue::SimplexTooLarge { simplex } => {
                write!(f, "simplex {simplex:?} has more than n elements")
            }
            ValidationIssue::NonPrimitive { facet, gcd } => {
                write!(f, "characteristic vector of facet {facet} is not primitive (gcd {gcd})")
            }
            ValidationIssue::NonUnimodularVertex { vertex, det } => {
                write!(f, "vertex {vertex:?}: determinant {det}, expected ±1")
            }
            ValidationIssue::NotPartOfBasis { simplex } => {
                write!(f, "vectors at {simplex:?} do not extend to a lattice basis")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub n: usize,
    pub facets: usize,
    /// Vertices, 1-based.
    pub vertices: Vec<Vec<usize>>,
    pub euler_characteristic: usize,
    pub issues: Vec<ValidationIssue>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            write!(f, "valid, {} vertices, χ={}", self.vertices.len(), self.euler_characteristic)
        } else {
            writeln!(f, "invalid:")?;
            for issue in &self.issues {
                writeln!(f, "  - {issue}")?;
            }
            Ok(())
        }
    }
}

impl CharacteristicPair {
    /// Structural constructor. Only shapes and indices are checked here;
    /// [`CharacteristicPair::validate`] checks the smoothness conditions.
    pub fn new(n: usize, nerve_maximal: Vec<Vec<usize>>, lambda: Vec<Vec<i64>>) -> Result<Self> {
        let d = lambda.len();
        let names = (1..=d).map(|i| format!("Q{i}")).collect();
        Self::with_names(n, names, nerve_maximal, lambda)
    }

    pub fn with_names(
        n: usize,
        facet_names: Vec<String>,
        nerve_maximal: Vec<Vec<usize>>,
        lambda: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let d = lambda.len();
        if facet_names.len() != d {
            return Err(Error::InvalidPair(format!(
                "{} facet names for {d} characteristic vectors",
                facet_names.len()
            )));
        }
        if let Some(row) = lambda.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidPair(format!("characteristic vector {row:?} does not have length {n}")));
        }
        let mut nerve = Vec::new();
        for s in nerve_maximal {
            if let Some(&i) = s.iter().find(|&&i| i >= d) {
                return Err(Error::InvalidPair(format!("nerve refers to facet {} but d = {d}", i + 1)));
            }
            let f = FaceId::new(s);
            if !nerve.contains(&f) {
                nerve.push(f);
            }
        }
        // Keep only maximal simplices, sorted.
        let all = nerve.clone();
        nerve.retain(|s| !all.iter().any(|t| t != s && t.facets().len() > s.facets().len() && s.facets().iter().all(|i| t.contains_facet(*i))));
        nerve.sort();
        Ok(CharacteristicPair { n, facet_names, nerve, lambda })
    }

    pub fn from_file(file: &PairFile) -> Result<Self> {
        let d = file.lambda.len();
        let mut nerve = Vec::new();
        for s in &file.nerve_maximal {
            if s.contains(&0) {
                return Err(Error::InvalidPair("nerve_maximal uses 1-based facet indices".into()));
            }
            nerve.push(s.iter().map(|i| i - 1).collect());
        }
        let names = if file.facets.is_empty() {
            (1..=d).map(|i| format!("Q{i}")).collect()
        } else {
            file.facets.clone()
        };
        Self::with_names(file.n, names, nerve, file.lambda.clone())
    }

    pub fn to_file(&self) -> PairFile {
        PairFile {
            n: self.n,
            facets: self.facet_names.clone(),
            nerve_maximal: self.nerve.iter().map(FaceId::one_based).collect(),
            lambda: self.lambda.clone(),
        }
    }

    /// Torus rank.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of facets.
    pub fn d(&self) -> usize {
        self.lambda.len()
    }

    pub fn facet_names(&self) -> &[String] {
        &self.facet_names
    }

    pub fn nerve_maximal(&self) -> &[FaceId] {
        &self.nerve
    }

    pub fn lambda(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    /// Characteristic vector `v_i`.
    pub fn v(&self, i: usize) -> &[i64] {
        &self.lambda[i]
    }

    /// Pairing `<u, v_i>` for `u` in character coordinates.
    pub fn pairing(&self, u: &[i64], i: usize) -> i64 {
        u.iter().zip(&self.lambda[i]).map(|(a, b)| a * b).sum()
    }

    /// True when `facets` span a simplex of the nerve (a nonempty face, or Q
    /// for the empty set).
    pub fn is_face(&self, facets: &[usize]) -> bool {
        facets.is_empty() || self.nerve.iter().any(|s| facets.iter().all(|i| s.contains_facet(*i)))
    }

    /// All faces, including Q, sorted by codimension then lexicographically.
    pub fn faces(&self) -> Vec<FaceId> {
        let mut set = BTreeSet::new();
        for s in &self.nerve {
            let k = s.facets().len();
            for mask in 0u64..(1u64 << k) {
                let sub: Vec<usize> =
                    (0..k).filter(|b| mask >> b & 1 == 1).map(|b| s.facets()[b]).collect();
                set.insert(FaceId::new(sub));
            }
        }
        if set.is_empty() {
            set.insert(FaceId::whole());
        }
        let mut v: Vec<FaceId> = set.into_iter().collect();
        v.sort_by(|a, b| a.codim().cmp(&b.codim()).then_with(|| a.cmp(b)));
        v
    }

    /// Vertices: the `n`-element simplices, in lexicographic order.
    pub fn vertices(&self) -> Vec<FaceId> {
        let mut v: Vec<FaceId> =
            self.nerve.iter().filter(|s| s.codim() == self.n).cloned().collect();
        v.sort();
        v
    }

    /// Number of vertices, equal to the Euler characteristic.
    pub fn euler_characteristic(&self) -> usize {
        self.vertices().len()
    }

    /// Minimal face containing both arguments. For homology polytopes this is
    /// the face cut out by the common facets.
    pub fn join(&self, a: &FaceId, b: &FaceId) -> FaceId {
        FaceId(a.facets().iter().copied().filter(|i| b.contains_facet(*i)).collect())
    }

    fn submatrix(&self, face: &FaceId) -> IntMatrix {
        IntMatrix::from_i64(&face.facets().iter().map(|&i| self.lambda[i].clone()).collect::<Vec<_>>())
    }

    /// Rows `u_{i_1}, ..., u_{i_n}`: the basis of the character lattice dual
    /// to the characteristic vectors at the vertex, in facet order.
    pub fn dual_basis_at_vertex(&self, a: &FaceId) -> Result<IntMatrix> {
        if a.codim() != self.n || !self.is_face(a.facets()) {
            return Err(Error::InvalidPair(format!("{a} is not a vertex")));
        }
        let v = self.submatrix(a);
        let inv = v.inverse_unimodular().ok_or_else(|| Error::NonUnimodularVertex {
            vertex: a.one_based(),
            det: v.determinant().to_string(),
        })?;
        Ok(inv.transpose())
    }

    /// Dual basis rows as machine integers.
    pub fn dual_basis_rows(&self, a: &FaceId) -> Result<Vec<Vec<i64>>> {
        let u = self.dual_basis_at_vertex(a)?;
        Ok(u.to_dense()
            .into_iter()
            .map(|row| row.into_iter().map(|x| i64::try_from(x).expect("dual basis entry fits in i64")).collect())
            .collect())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let d = self.d();
        if d == 0 {
            issues.push(ValidationIssue::NoFacets);
        }
        for i in 0..d {
            if !self.nerve.iter().any(|s| s.contains_facet(i)) {
                issues.push(ValidationIssue::FacetNotInNerve { facet: i + 1 });
            }
            let g = self.lambda[i].iter().fold(BigInt::zero(), |g, &x| g.gcd(&BigInt::from(x)));
            if !g.is_one() {
                issues.push(ValidationIssue::NonPrimitive { facet: i + 1, gcd: g.to_string() });
            }
        }
        for s in &self.nerve {
            if s.codim() > self.n {
                issues.push(ValidationIssue::SimplexTooLarge { simplex: s.one_based() });
            } else if s.codim() == self.n {
                let det = self.submatrix(s).determinant();
                if !det.abs().is_one() {
                    issues.push(ValidationIssue::NonUnimodularVertex {
                        vertex: s.one_based(),
                        det: det.to_string(),
                    });
                }
            } else if s.codim() > 0 {
                // Part of a basis iff all elementary divisors are 1.
                let r = snf(&self.submatrix(s));
                if r.diag.iter().any(|x| !x.is_one()) {
                    issues.push(ValidationIssue::NotPartOfBasis { simplex: s.one_based() });
                }
            }
        }
        let vertices = self.vertices();
        if vertices.is_empty() {
            issues.push(ValidationIssue::NoVertices);
        }
        ValidationReport {
            valid: issues.is_empty(),
            n: self.n,
            facets: d,
            euler_characteristic: vertices.len(),
            vertices: vertices.iter().map(FaceId::one_based).collect(),
            issues,
        }
    }

    /// Validates and converts failures into an error.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.issues.first() {
            None => Ok(()),
            Some(ValidationIssue::NonUnimodularVertex { vertex, det }) => {
                Err(Error::NonUnimodularVertex { vertex: vertex.clone(), det: det.clone() })
            }
            Some(issue) => Err(Error::InvalidPair(issue.to_string())),
        }
    }
}


#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;

    fn brute_force_det(rows: &[Vec<i64>]) -> i64 {
        // Leibniz expansion; fine for n <= 3.
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            let minor: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &x)| x).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            total += sign * rows[0][c] * brute_force_det(&minor);
        }
        total
    }

    #[test]
    fn cp2_is_valid_with_three_vertices() {
        let r = cp2().validate();
        assert!(r.valid, "{r}");
        assert_eq!(r.vertices, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(r.to_string(), "valid, 3 vertices, χ=3");
    }

    #[test]
    fn non_unimodular_vertex_is_reported() {
        let p = CharacteristicPair::new(2, vec![vec![0, 1]], vec![vec![2, 0], vec![0, 1]]).unwrap();
        let r = p.validate();
        assert!(!r.valid);
        assert!(r.issues.contains(&ValidationIssue::NonUnimodularVertex { vertex: vec![1, 2], det: "2".into() }));
    }

    #[test]
    fn empty_pair_is_invalid() {
        let p = CharacteristicPair::new(2, vec![], vec![]).unwrap();
        let r = p.validate();
        assert!(!r.valid);
        assert!(r.issues.contains(&ValidationIssue::NoVertices));
    }

    #[test]
    fn vertex_enumeration() {
        assert_eq!(cp1().vertices(), vec![FaceId::new(vec![0]), FaceId::new(vec![1])]);
        assert_eq!(cp2().euler_characteristic(), 3);
        // Brute force: 2-subsets of {0..3} that are simplices.
        let sq = square();
        let mut brute = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if sq.is_face(&[i, j]) {
                    brute.push(FaceId::new(vec![i, j]));
                }
            }
        }
        assert_eq!(sq.vertices(), brute);
        assert_eq!(sq.euler_characteristic(), 4);
    }

    #[test]
    fn join_examples() {
        let p = cp2();
        let a = FaceId::new(vec![0, 1]);
        let b = FaceId::new(vec![0, 2]);
        let j = p.join(&a, &b);
        assert_eq!(j, FaceId::new(vec![0]));
        assert!(a.is_contained_in(&j) && b.is_contained_in(&j));
        // Minimality: no smaller face contains both.
        for f in p.faces() {
            if a.is_contained_in(&f) && b.is_contained_in(&f) {
                assert!(j.is_contained_in(&f));
            }
        }
        let q = cp1();
        assert!(q.join(&FaceId::new(vec![0]), &FaceId::new(vec![1])).is_whole());
        assert_eq!(p.join(&a, &a), a);
    }

    #[test]
    fn dual_basis_satisfies_pairing() {
        for p in [cp1(), cp2(), square(), hirzebruch1()] {
            for a in p.vertices() {
                let u = p.dual_basis_rows(&a).unwrap();
                for (j, uj) in u.iter().enumerate() {
                    for (k, &ik) in a.facets().iter().enumerate() {
                        assert_eq!(p.pairing(uj, ik), i64::from(j == k));
                    }
                }
            }
        }
        let p = cp1();
        assert_eq!(p.dual_basis_rows(&FaceId::new(vec![0])).unwrap(), vec![vec![1]]);
        let std = CharacteristicPair::new(2, vec![vec![0, 1]], vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(std.dual_basis_at_vertex(&FaceId::new(vec![0, 1])).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn validate_agrees_with_brute_force_determinants() {
        for p in [cp1(), cp2(), square(), hirzebruch1()] {
            let all_unimodular = p.vertices().iter().all(|a| {
                let rows: Vec<Vec<i64>> = a.facets().iter().map(|&i| p.v(i).to_vec()).collect();
                brute_force_det(&rows).abs() == 1
            });
            assert_eq!(p.validate().valid, all_unimodular);
        }
        // Break one vertex.
        let bad = CharacteristicPair::new(
            2,
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            vec![vec![1, 0], vec![1, 2], vec![-1, -1]],
        )
        .unwrap();
        assert!(!bad.validate().valid);
    }

    #[test]
    fn pair_file_round_trip() {
        let p = cp2();
        let json = serde_json::to_string(&p.to_file()).unwrap();
        let back: PairFile = serde_json::from_str(&json).unwrap();
        assert_eq!(CharacteristicPair::from_file(&back).unwrap(), p);
    }
}
