//! Graded quotients `Z[g_1..g_N] / (I + (ℓ_1..ℓ_n))` of weighted polynomial
//! rings, computed one degree at a time.
//!
//! `I` is generated by monomials (pruned from every monomial list) and by
//! homogeneous polynomials; the `ℓ_j` are linear forms of weight 1. Degree
//! `k` of the quotient is the cokernel of an integer matrix whose rows are
//! `r·μ` and `ℓ_j·μ`. Rows are brought to reduced echelon form using only
//! unit pivots, taken over the columns in descending lex order; the columns
//! left without a pivot are the basis monomials of that degree. Every
//! reduced row remembers the combination of original rows it came from,
//! which yields certificates `p = nf(p) + Σ q_j ℓ_j (mod I)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{snf, solve_integer, weighted_degree, IntMatrix, IntPoly, Vars};

pub(crate) type SparseVec = BTreeMap<usize, BigInt>;

/// `dst += c·src`.
pub(crate) fn axpy(dst: &mut SparseVec, c: &BigInt, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let e = dst.entry(*k).or_insert_with(BigInt::zero);
        *e += c * v;
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

/// Where a row of a degree table came from: `relations[index]·mono` or
/// `linear[index]·mono`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Origin {
    Relation { mono: Vec<u32> },
    Linear { index: usize, mono: Vec<u32> },
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    cert: SparseVec,
}

/// Monomials, their column index, row origins and rows of one weight.
type DegreeRows = (Vec<Vec<u32>>, HashMap<Vec<u32>, usize>, Vec<Origin>, Vec<SparseVec>);

/// One degree of the quotient.
#[derive(Debug)]
pub struct DegreeTable {
    degree: u32,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    origins: Vec<Origin>,
    rows: Vec<SparseVec>,
    /// Reduced pivot rows, entry `+1` at the pivot column.
    pivots: Vec<(usize, Row)>,
    basis: Vec<usize>,
    divisors: Vec<BigInt>,
}

impl DegreeTable {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monomials of this degree not killed by a monomial relation, in
    /// descending lex order.
    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.basis.iter().map(|&c| &self.monomials[c])
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Nonzero elementary divisors of the relation matrix.
    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn relation_count(&self) -> usize {
        self.rows.len()
    }
}

/// Result of reducing a polynomial: `p ≡ normal + Σ_j cert[j]·ℓ_j (mod I)`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub normal: IntPoly,
    pub cert: Vec<IntPoly>,
}

#[derive(Debug)]
pub struct GradedAlgebra {
    vars: Vars,
    weights: Vec<u32>,
    zero_monomials: Vec<Vec<u32>>,
    relations: Vec<(u32, IntPoly)>,
    linear: Vec<IntPoly>,
    top: u32,
    basis: Vec<Vec<Vec<u32>>>,
    quotient: Mutex<HashMap<u32, Arc<DegreeTable>>>,
}

fn divides(z: &[u32], e: &[u32]) -> bool {
    z.iter().zip(e).all(|(a, b)| a <= b)
}

fn exponent_u32(e: &[i32]) -> Vec<u32> {
    e.iter().map(|&x| x as u32).collect()
}

impl GradedAlgebra {
    /// Builds the quotient and its monomial basis in degrees `0..=top`.
    ///
    /// Fails with `TorsionDetected` if some degree has torsion, with
    /// `RankMismatch` if some degree above `top` survives or the total rank
    /// differs from `expected_rank`.
    pub fn new(
        vars: Vars,
        weights: Vec<u32>,
        relations: Vec<IntPoly>,
        linear: Vec<IntPoly>,
        top: u32,
        expected_rank: Option<usize>,
    ) -> Result<Self> {
        assert_eq!(weights.len(), vars.len());
        assert!(weights.iter().all(|&w| w > 0), "generator weights are positive");
        let mut zero_monomials: Vec<Vec<u32>> = Vec::new();
        let mut general = Vec::new();
        for r in relations {
            if r.is_zero() {
                continue;
            }
            let terms: Vec<(Vec<u32>, BigInt)> = r.terms().map(|(e, c)| (e, c.clone())).collect();
            if let [(e, c)] = terms.as_slice() {
                if c.abs().is_one() {
                    zero_monomials.push(e.clone());
                    continue;
                }
            }
            general.push(r);
        }
        // Keep only minimal monomial relations.
        zero_monomials.sort();
        zero_monomials.dedup();
        let minimal: Vec<Vec<u32>> = zero_monomials
            .iter()
            .filter(|z| !zero_monomials.iter().any(|y| y != *z && divides(y, z)))
            .cloned()
            .collect();
        let mut alg = GradedAlgebra {
            vars,
            weights,
            zero_monomials: minimal,
            relations: Vec::new(),
            linear: Vec::new(),
            top,
            basis: Vec::new(),
            quotient: Mutex::new(HashMap::new()),
        };
        for r in general {
            let r = alg.prune(&r);
            if r.is_zero() {
                continue;
            }
            let w = alg.homogeneous_degree(&r).ok_or_else(|| Error::Input(format!("relation {r} is not homogeneous")))?;
            alg.relations.push((w, r));
        }
        for l in &linear {
            if !l.is_zero() && alg.homogeneous_degree(l) != Some(1) {
                return Err(Error::Input(format!("linear form {l} does not have weight 1")));
            }
        }
        alg.linear = linear;
        let max_w = alg.weights.iter().copied().max().unwrap_or(1);
        let mut total = 0;
        for k in 0..=top + max_w {
            let t = alg.table(k)?;
            if k > top && t.rank() > 0 {
                return Err(Error::RankMismatch { found: t.rank(), expected: 0 });
            }
            if k <= top {
                total += t.rank();
                alg.basis.push(t.basis().cloned().collect());
            }
        }
        if let Some(m) = expected_rank {
            if total != m {
                return Err(Error::RankMismatch { found: total, expected: m });
            }
        }
        Ok(alg)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn linear(&self) -> &[IntPoly] {
        &self.linear
    }

    pub fn zero_monomials(&self) -> &[Vec<u32>] {
        &self.zero_monomials
    }

    /// Non-monomial relations with their weights.
    pub fn relations(&self) -> &[(u32, IntPoly)] {
        &self.relations
    }

    /// Basis monomials of each degree `0..=top`.
    pub fn basis(&self) -> &[Vec<Vec<u32>>] {
        &self.basis
    }

    /// All basis monomials, by degree and then in table order.
    pub fn basis_flat(&self) -> Vec<(u32, Vec<u32>)> {
        self.basis
            .iter()
            .enumerate()
            .flat_map(|(k, b)| b.iter().map(move |e| (k as u32, e.clone())))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn weight_of(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.weights).map(|(a, w)| a * w).sum()
    }

    fn homogeneous_degree(&self, p: &IntPoly) -> Option<u32> {
        let mut ws = p.as_laurent().terms().map(|(e, _)| weighted_degree(e, &self.weights));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    pub fn is_zero_monomial(&self, e: &[u32]) -> bool {
        self.zero_monomials.iter().any(|z| divides(z, e))
    }

    /// Drops terms killed by monomial relations.
    pub fn prune(&self, p: &IntPoly) -> IntPoly {
        let lp = p.as_laurent();
        let terms = lp
            .terms()
            .filter(|(e, _)| !self.is_zero_monomial(&exponent_u32(e)))
            .map(|(e, c)| (e.clone(), c.clone()));
        IntPoly::new(crate::exactalg::LaurentPoly::from_terms(&self.vars, terms)).expect("pruning keeps exponents")
    }

    /// Surviving monomials of weight `k`, in descending lex order.
    pub fn monomials(&self, k: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.vars.len()];
        self.enumerate(0, k, &mut cur, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn enumerate(&self, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if self.is_zero_monomial(cur) {
            return;
        }
        if i == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = self.weights[i];
        let mut a = 0;
        while a * w <= left {
            cur[i] = a;
            self.enumerate(i + 1, left - a * w, cur, out);
            a += 1;
        }
        cur[i] = 0;
    }

    fn project(&self, p: &IntPoly, index: &HashMap<Vec<u32>, usize>) -> SparseVec {
        let mut v = SparseVec::new();
        for (e, c) in p.terms() {
            if let Some(&col) = index.get(&e) {
                v.insert(col, c.clone());
            }
        }
        v
    }

    fn rows_of_degree(&self, k: u32, with_linear: bool) -> DegreeRows {
        let monomials = self.monomials(k);
        let index: HashMap<Vec<u32>, usize> = monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut origins = Vec::new();
        let mut rows = Vec::new();
        for (w, r) in &self.relations {
            if *w > k {
                continue;
            }
            for mu in self.monomials(k - w) {
                let prod = r * &IntPoly::monomial(&self.vars, &mu, 1);
                let row = self.project(&prod, &index);
                if !row.is_empty() {
                    origins.push(Origin::Relation { mono: mu });
                    rows.push(row);
                }
            }
        }
        if with_linear && k >= 1 {
            let mus = self.monomials(k - 1);
            for (j, l) in self.linear.iter().enumerate() {
                for mu in &mus {
                    let prod = l * &IntPoly::monomial(&self.vars, mu, 1);
                    let row = self.project(&prod, &index);
                    // Zero rows still carry a certificate.
                    origins.push(Origin::Linear { index: j, mono: mu.clone() });
                    rows.push(row);
                }
            }
        }
        (monomials, index, origins, rows)
    }

    /// The quotient in weight `k`, computed on first use.
    pub fn table(&self, k: u32) -> Result<Arc<DegreeTable>> {
        if let Some(t) = self.quotient.lock().expect("table cache").get(&k) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.build_table(k)?);
        self.quotient.lock().expect("table cache").insert(k, t.clone());
        Ok(t)
    }

    fn build_table(&self, k: u32) -> Result<DegreeTable> {
        let (monomials, index, origins, rows) = self.rows_of_degree(k, true);
        let ncols = monomials.len();
        let dense: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| (0..ncols).map(|c| r.get(&c).cloned().unwrap_or_default()).collect())
            .collect();
        let s = snf(&IntMatrix::from_dense_shape(rows.len(), ncols, &dense));
        let divisors: Vec<BigInt> = s.diag.iter().filter(|d| !d.is_zero()).cloned().collect();
        let torsion: Vec<String> = divisors.iter().filter(|d| !d.is_one()).map(ToString::to_string).collect();
        if !torsion.is_empty() {
            return Err(Error::TorsionDetected { degree: 2 * k, divisors: torsion });
        }
        let rank = divisors.len();

        let mut work: Vec<Row> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| Row { vec: r.clone(), cert: SparseVec::from([(i, BigInt::one())]) })
            .collect();
        let mut is_pivot = vec![false; work.len()];
        let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
        for c in 0..ncols {
            let chosen = loop {
                let cand: Vec<usize> =
                    (0..work.len()).filter(|&i| !is_pivot[i] && work[i].vec.contains_key(&c)).collect();
                let Some(&best) = cand.iter().min_by_key(|&&i| work[i].vec[&c].abs()) else {
                    break None;
                };
                if cand.len() == 1 {
                    break Some(best);
                }
                let b = work[best].clone();
                for &i in &cand {
                    if i != best {
                        let q = -(&work[i].vec[&c] / &b.vec[&c]);
                        axpy(&mut work[i].vec, &q, &b.vec);
                        axpy(&mut work[i].cert, &q, &b.cert);
                    }
                }
            };
            let Some(p) = chosen else { continue };
            let e = work[p].vec[&c].clone();
            if !e.abs().is_one() {
                continue;
            }
            if e.is_negative() {
                let row = &mut work[p];
                row.vec.values_mut().for_each(|x| *x = -&*x);
                row.cert.values_mut().for_each(|x| *x = -&*x);
            }
            let prow = work[p].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i != p {
                    if let Some(x) = row.vec.get(&c).cloned() {
                        axpy(&mut row.vec, &-x.clone(), &prow.vec);
                        axpy(&mut row.cert, &-x, &prow.cert);
                    }
                }
            }
            is_pivot[p] = true;
            pivot_rows.push((c, p));
        }
        if pivot_rows.len() != rank {
            return Err(Error::BasisSelectionFailed { degree: 2 * k });
        }
        let pivot_cols: Vec<usize> = pivot_rows.iter().map(|&(c, _)| c).collect();
        let basis = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
        let pivots = pivot_rows.into_iter().map(|(c, p)| (c, work[p].clone())).collect();
        Ok(DegreeTable { degree: k, monomials, index, origins, rows, pivots, basis, divisors })
    }

    /// Reduces `p` to its normal form with a certificate over the linear
    /// forms. Degrees above `top` reduce to zero.
    pub fn reduce(&self, p: &IntPoly) -> Result<Reduction> {
        assert_eq!(p.vars(), &self.vars, "variables of the algebra");
        let mut normal = IntPoly::zero(&self.vars);
        let mut cert = vec![IntPoly::zero(&self.vars); self.linear.len()];
        let mut degrees: Vec<u32> = p.terms().map(|(e, _)| self.weight_of(&e)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        for k in degrees {
            let t = self.table(k)?;
            let mut v = self.project(&p.component(&self.weights, k), &t.index);
            let mut acc = SparseVec::new();
            for (c, row) in &t.pivots {
                if let Some(x) = v.get(c).cloned() {
                    axpy(&mut v, &-x.clone(), &row.vec);
                    axpy(&mut acc, &x, &row.cert);
                }
            }
            for (col, c) in v {
                normal = &normal + &IntPoly::monomial(&self.vars, &t.monomials[col], c);
            }
            for (i, c) in acc {
                if let Origin::Linear { index, mono } = &t.origins[i] {
                    cert[*index] = &cert[*index] + &IntPoly::monomial(&self.vars, mono, c);
                }
            }
        }
        Ok(Reduction { normal, cert })
    }

    /// Coordinates of a normal form in [`GradedAlgebra::basis_flat`].
    pub fn coordinates(&self, normal: &IntPoly) -> Vec<BigInt> {
        let flat = self.basis_flat();
        let terms: HashMap<Vec<u32>, BigInt> = normal.terms().map(|(e, c)| (e, c.clone())).collect();
        debug_assert!(terms.keys().all(|e| flat.iter().any(|(_, b)| b == e)), "normal form outside the basis");
        flat.iter().map(|(_, e)| terms.get(e).cloned().unwrap_or_default()).collect()
    }

    pub fn from_coordinates(&self, coords: &[BigInt]) -> IntPoly {
        let mut p = IntPoly::zero(&self.vars);
        for ((_, e), c) in self.basis_flat().iter().zip(coords) {
            if !c.is_zero() {
                p = &p + &IntPoly::monomial(&self.vars, e, c.clone());
            }
        }
        p
    }

    /// Whether `p` lies in `I` (the linear forms are not used).
    pub fn in_relation_ideal(&self, p: &IntPoly) -> bool {
        let mut degrees: Vec<u32> = p.terms().map(|(e, _)| self.weight_of(&e)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.into_iter().all(|k| {
            let (monomials, index, _, rows) = self.rows_of_degree(k, false);
            let b = self.project(&p.component(&self.weights, k), &index);
            if b.is_empty() {
                return true;
            }
            let a = columns_matrix(monomials.len(), &rows);
            let b: Vec<BigInt> = (0..monomials.len()).map(|c| b.get(&c).cloned().unwrap_or_default()).collect();
            solve_integer(&a, &b).is_some()
        })
    }

    /// Writes `p` as `Σ_j c_j(ℓ)·b_j` modulo `I`, where `b_j` runs over
    /// [`GradedAlgebra::basis_flat`] and `c_j` is a polynomial in `sym_vars`
    /// (one variable per linear form). The result is checked by expanding
    /// it back.
    pub fn sym_decompose(&self, p: &IntPoly, sym_vars: &Vars) -> Result<Vec<IntPoly>> {
        assert_eq!(sym_vars.len(), self.linear.len());
        let flat = self.basis_flat();
        let mut coeffs = vec![IntPoly::zero(sym_vars); flat.len()];
        let mut degrees: Vec<u32> = p.terms().map(|(e, _)| self.weight_of(&e)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let unit_weights = vec![1u32; sym_vars.len()];
        let sym_alg_monos = |k: u32| -> Vec<Vec<u32>> {
            let mut out = Vec::new();
            let mut cur = vec![0u32; sym_vars.len()];
            enumerate_plain(0, k, &unit_weights, &mut cur, &mut out);
            out
        };
        for k in degrees {
            let pk = p.component(&self.weights, k);
            let (monomials, index, _, rel_rows) = self.rows_of_degree(k, false);
            let mut columns: Vec<SparseVec> = Vec::new();
            let mut labels: Vec<(usize, Vec<u32>)> = Vec::new();
            for (j, (w, b)) in flat.iter().enumerate() {
                if *w > k {
                    continue;
                }
                for alpha in sym_alg_monos(k - w) {
                    let mut prod = IntPoly::monomial(&self.vars, b, 1);
                    for (l, &a) in self.linear.iter().zip(&alpha) {
                        prod = &prod * &l.pow(a);
                    }
                    columns.push(self.project(&prod, &index));
                    labels.push((j, alpha));
                }
            }
            let nsym = columns.len();
            columns.extend(rel_rows);
            let a = columns_matrix(monomials.len(), &columns);
            let rhs = self.project(&pk, &index);
            let rhs: Vec<BigInt> = (0..monomials.len()).map(|c| rhs.get(&c).cloned().unwrap_or_default()).collect();
            let z = solve_integer(&a, &rhs)
                .ok_or_else(|| Error::DecompositionFailed(format!("{pk} is not in the span of the basis in degree {}", 2 * k)))?;
            for ((j, alpha), c) in labels.iter().zip(&z[..nsym]) {
                if !c.is_zero() {
                    coeffs[*j] = &coeffs[*j] + &IntPoly::monomial(sym_vars, alpha, c.clone());
                }
            }
        }
        // Reconstruction check.
        let images: Vec<IntPoly> = self.linear.clone();
        let mut recon = IntPoly::zero(&self.vars);
        for ((_, b), c) in flat.iter().zip(&coeffs) {
            recon = &recon + &(&c.substitute(&images, &self.vars) * &IntPoly::monomial(&self.vars, b, 1));
        }
        if !self.in_relation_ideal(&self.prune(&(p - &recon))) {
            return Err(Error::DecompositionFailed(format!("reconstruction of {p} failed")));
        }
        Ok(coeffs)
    }
}

fn enumerate_plain(i: usize, left: u32, weights: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == cur.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let mut a = 0;
    while a * weights[i] <= left {
        cur[i] = a;
        enumerate_plain(i + 1, left - a * weights[i], weights, cur, out);
        a += 1;
    }
    cur[i] = 0;
}

/// Matrix whose columns are the given sparse vectors.
fn columns_matrix(nrows: usize, columns: &[SparseVec]) -> IntMatrix {
    let mut m = IntMatrix::zeros(nrows, columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (&i, v) in col {
            m.set(i, j, v.clone());
        }
    }
    m
}
