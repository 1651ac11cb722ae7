//! Face posets of face-acyclic orbit spaces, where an intersection of facets
//! may have several connected components.
//!
//! The poset is supplied in full: faces with their codimension and facets,
//! a join table and a table of intersection components. Missing entries take
//! defaults:
//!
//! * `meet_components(F, G)` defaults to `[F]` when the facets of `G` form a
//!   proper subset of the facets of `F` (and symmetrically), otherwise `[]`;
//! * `join(F, G)` defaults to the unique minimal face containing both, or Q
//!   when there is none.
//!
//! Containment is read off the meet table: `F ⊆ G` iff `F = G` or
//! `meet_components(F, G) = [F]`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{CharacteristicPair, FaceId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFace {
    pub id: String,
    pub codim: usize,
    /// Facet ids (which are themselves face ids) through this face.
    pub facets: Vec<String>,
}

/// JSON form of a face poset together with its characteristic vectors.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    /// Facet ids in the order of the rows of `lambda`.
    pub facets: Vec<String>,
    pub lambda: Vec<Vec<i64>>,
    pub faces: Vec<PosetFace>,
    /// `[F, G, F∨G]`; `"Q"` names the whole orbit space.
    #[serde(default)]
    pub join: Vec<(String, String, String)>,
    /// `[F, G, [components of F∩G]]`.
    #[serde(default)]
    pub meet_components: Vec<(String, String, Vec<String>)>,
}

/// Face poset with characteristic vectors. Face indices refer to
/// [`GeneralFacePoset::faces`]; `None` stands for Q in join results.
#[derive(Clone, Debug)]
pub struct GeneralFacePoset {
    n: usize,
    faces: Vec<PosetFace>,
    /// Face index of facet `i` (row `i` of lambda).
    facet_faces: Vec<usize>,
    /// Facet row indices of each face, sorted.
    face_facets: Vec<Vec<usize>>,
    lambda: Vec<Vec<i64>>,
    join: HashMap<(usize, usize), Option<usize>>,
    meet: HashMap<(usize, usize), Vec<usize>>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl GeneralFacePoset {
    pub fn from_file(file: &PosetFile) -> Result<Self> {
        let bad = |m: String| Error::InvalidPoset(m);
        let index: HashMap<&str, usize> =
            file.faces.iter().enumerate().map(|(i, f)| (f.id.as_str(), i)).collect();
        if index.len() != file.faces.len() {
            return Err(bad("duplicate face ids".into()));
        }
        if index.contains_key("Q") {
            return Err(bad("\"Q\" is reserved for the whole orbit space".into()));
        }
        if file.lambda.len() != file.facets.len() {
            return Err(bad("one characteristic vector per facet is required".into()));
        }
        if let Some(r) = file.lambda.iter().find(|r| r.len() != file.n) {
            return Err(bad(format!("characteristic vector {r:?} does not have length {}", file.n)));
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| bad(format!("unknown face '{id}'")));

        let mut facet_faces = Vec::new();
        for fid in &file.facets {
            let i = lookup(fid)?;
            let f = &file.faces[i];
            if f.codim != 1 || f.facets != [fid.clone()] {
                return Err(bad(format!("facet '{fid}' must have codim 1 and facets [\"{fid}\"]")));
            }
            facet_faces.push(i);
        }
        let facet_row: HashMap<&str, usize> =
            file.facets.iter().enumerate().map(|(i, f)| (f.as_str(), i)).collect();
        let mut face_facets = Vec::new();
        for f in &file.faces {
            if f.codim == 0 || f.codim > file.n {
                return Err(bad(format!("face '{}' has codimension {} outside 1..={}", f.id, f.codim, file.n)));
            }
            let mut rows = Vec::new();
            for g in &f.facets {
                rows.push(*facet_row.get(g.as_str()).ok_or_else(|| bad(format!("'{g}' is not a facet")))?);
            }
            rows.sort_unstable();
            rows.dedup();
            if rows.len() != f.codim {
                return Err(bad(format!("face '{}' lies on {} facets but has codimension {}", f.id, rows.len(), f.codim)));
            }
            face_facets.push(rows);
        }

        let mut meet = HashMap::new();
        for (a, b, comps) in &file.meet_components {
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            let mut cs = comps.iter().map(|c| lookup(c)).collect::<Result<Vec<_>>>()?;
            cs.sort_unstable();
            if let Some(prev) = meet.insert(key(ia, ib), cs.clone()) {
                if prev != cs {
                    return Err(bad(format!("conflicting meet entries for ({a}, {b})")));
                }
            }
        }
        let mut poset = GeneralFacePoset {
            n: file.n,
            faces: file.faces.clone(),
            facet_faces,
            face_facets,
            lambda: file.lambda.clone(),
            join: HashMap::new(),
            meet,
        };
        // Default meets.
        let nf = poset.faces.len();
        for a in 0..nf {
            for b in a + 1..nf {
                if poset.meet.contains_key(&(a, b)) {
                    continue;
                }
                let (fa, fb) = (&poset.face_facets[a], &poset.face_facets[b]);
                let sub = |x: &[usize], y: &[usize]| x.len() < y.len() && x.iter().all(|i| y.contains(i));
                let comps = if sub(fb, fa) {
                    vec![a]
                } else if sub(fa, fb) {
                    vec![b]
                } else {
                    vec![]
                };
                poset.meet.insert((a, b), comps);
            }
        }
        for a in 0..nf {
            poset.meet.insert((a, a), vec![a]);
        }
        let mut join = HashMap::new();
        for (a, b, j) in &file.join {
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            let ij = if j == "Q" { None } else { Some(lookup(j)?) };
            if let Some(prev) = join.insert(key(ia, ib), ij) {
                if prev != ij {
                    return Err(bad(format!("join is not commutative at ({a}, {b})")));
                }
            }
        }
        for a in 0..nf {
            for b in a..nf {
                if a == b {
                    join.insert((a, a), Some(a));
                } else {
                    join.entry((a, b)).or_insert_with(|| poset.default_join(a, b));
                }
            }
        }
        poset.join = join;
        poset.check()?;
        Ok(poset)
    }

    fn default_join(&self, a: usize, b: usize) -> Option<usize> {
        let uppers: Vec<usize> =
            (0..self.faces.len()).filter(|&h| self.contains(a, h) && self.contains(b, h)).collect();
        let minimal: Vec<usize> = uppers
            .iter()
            .copied()
            .filter(|&h| !uppers.iter().any(|&k| k != h && self.contains(k, h)))
            .collect();
        match minimal.as_slice() {
            [one] => Some(*one),
            _ => None,
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPoset(m));
        let nf = self.faces.len();
        let id = |i: usize| self.faces[i].id.clone();
        let jid = |j: Option<usize>| j.map_or("Q".to_string(), id);
        // Containment must be a partial order.
        for a in 0..nf {
            for b in 0..nf {
                if a != b && self.contains(a, b) && self.contains(b, a) {
                    return bad(format!("faces {} and {} contain each other", id(a), id(b)));
                }
                for c in 0..nf {
                    if self.contains(a, b) && self.contains(b, c) && !self.contains(a, c) {
                        return bad(format!("containment is not transitive at {}, {}, {}", id(a), id(b), id(c)));
                    }
                }
            }
        }
        for a in 0..nf {
            for b in 0..nf {
                let j = self.join(a, b);
                if let Some(j) = j {
                    if !self.contains(a, j) || !self.contains(b, j) {
                        return bad(format!("join({}, {}) = {} does not contain both", id(a), id(b), id(j)));
                    }
                }
                for &e in self.meet_components(a, b) {
                    if !self.contains(e, a) || !self.contains(e, b) {
                        return bad(format!("component {} of {}∩{} is not contained in both", id(e), id(a), id(b)));
                    }
                }
                // Monotonicity, where the join actually enters a relation.
                if a == b || self.meet_components(a, b).is_empty() {
                    continue;
                }
                for a2 in 0..nf {
                    if a2 != a && self.contains(a, a2) {
                        let (j1, j2) = (self.join(a, b), self.join(a2, b));
                        let ok = match (j1, j2) {
                            (_, None) => true,
                            (None, Some(_)) => false,
                            (Some(x), Some(y)) => self.contains(x, y),
                        };
                        if !ok {
                            return bad(format!(
                                "join is not monotone: {}∨{} = {} but {}∨{} = {}",
                                id(a), id(b), jid(j1), id(a2), id(b), jid(j2)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Face poset of a homology polytope: faces are the nonempty simplices
    /// of the nerve, joins are facet intersections, and intersections are
    /// connected.
    pub fn from_pair(pair: &CharacteristicPair) -> Result<Self> {
        let faces: Vec<FaceId> = pair.faces().into_iter().filter(|f| !f.is_whole()).collect();
        let name = |f: &FaceId| f.facets().iter().map(|i| pair.facet_names()[*i].clone()).collect::<Vec<_>>().join("");
        let file = PosetFile {
            n: pair.n(),
            facets: pair.facet_names().to_vec(),
            lambda: pair.lambda().to_vec(),
            faces: faces
                .iter()
                .map(|f| PosetFace {
                    id: name(f),
                    codim: f.codim(),
                    facets: f.facets().iter().map(|i| pair.facet_names()[*i].clone()).collect(),
                })
                .collect(),
            join: faces
                .iter()
                .enumerate()
                .flat_map(|(i, a)| faces[i + 1..].iter().map(move |b| (a, b)))
                .map(|(a, b)| {
                    let j = pair.join(a, b);
                    (name(a), name(b), if j.is_whole() { "Q".into() } else { name(&j) })
                })
                .collect(),
            meet_components: faces
                .iter()
                .enumerate()
                .flat_map(|(i, a)| faces[i + 1..].iter().map(move |b| (a, b)))
                .map(|(a, b)| {
                    let u = FaceId::new(a.facets().iter().chain(b.facets()).copied().collect());
                    let comps = if pair.is_face(u.facets()) { vec![name(&u)] } else { vec![] };
                    (name(a), name(b), comps)
                })
                .collect(),
        };
        Self::from_file(&file)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[PosetFace] {
        &self.faces
    }

    pub fn lambda(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    /// Face index of the facet with lambda row `i`.
    pub fn facet_face(&self, i: usize) -> usize {
        self.facet_faces[i]
    }

    pub fn facet_count(&self) -> usize {
        self.facet_faces.len()
    }

    /// Lambda rows of the facets through face `f`.
    pub fn face_facets(&self, f: usize) -> &[usize] {
        &self.face_facets[f]
    }

    /// `a ⊆ b`.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        a == b || self.meet.get(&key(a, b)).is_some_and(|c| c.as_slice() == [a])
    }

    /// `a ∨ b`, `None` for Q.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join.get(&key(a, b)).copied().flatten()
    }

    /// Connected components of `a ∩ b`.
    pub fn meet_components(&self, a: usize, b: usize) -> &[usize] {
        self.meet.get(&key(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Vertices (faces of codimension `n`).
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| self.faces[f].codim == self.n).collect()
    }

    pub fn euler_characteristic(&self) -> usize {
        self.vertices().len()
    }

    /// Join and meet tables restricted to unordered pairs of distinct faces,
    /// in index order. Used to emit relation lists deterministically.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let nf = self.faces.len();
        (0..nf).flat_map(|a| (a + 1..nf).map(move |b| (a, b))).collect()
    }

    pub fn to_file(&self) -> PosetFile {
        let id = |i: usize| self.faces[i].id.clone();
        let mut join = Vec::new();
        let mut meet = Vec::new();
        let sorted: BTreeMap<_, _> = self.join.iter().filter(|((a, b), _)| a != b).collect();
        for (&(a, b), j) in sorted {
            join.push((id(a), id(b), j.map_or("Q".into(), id)));
        }
        let sorted: BTreeMap<_, _> = self.meet.iter().filter(|((a, b), _)| a != b).collect();
        for (&(a, b), cs) in sorted {
            meet.push((id(a), id(b), cs.iter().map(|&c| id(c)).collect()));
        }
        PosetFile {
            n: self.n,
            facets: self.facet_faces.iter().map(|&i| id(i)).collect(),
            lambda: self.lambda.clone(),
            faces: self.faces.clone(),
            join,
            meet_components: meet,
        }
    }
}
