//! Integer matrices, Smith normal form and integer linear solving.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix. Absent entries are zero; stored entries never are.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    /// `rows x cols` matrix built from a dense row list, allowing zero rows.
    pub fn from_dense_shape(rows: usize, cols: usize, data: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, row) in data.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.entries.iter()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> Self {
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
        for (&(i, j), v) in &other.entries {
            by_row.entry(i).or_default().push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_default() += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        IntMatrix { rows: self.rows, cols: other.cols, entries: acc }
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i] += v * &x[j];
        }
        out
    }

    /// Determinant by fraction-free elimination. Square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_dense();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Inverse of a unimodular matrix; `None` if the determinant is not ±1.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let s = snf(self);
        if s.diag.iter().any(|d| !d.is_one()) {
            return None;
        }
        // U A V = I  =>  A^{-1} = V U
        Some(s.right.mul(&s.left))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let strs: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", strs.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `left * A * right = diag(diag)`, padded with zeros to the
/// shape of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Elementary divisors, `min(rows, cols)` of them, nonnegative, each
    /// dividing the next (zeros last).
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonzero divisors different from 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }
}

type Dense = Vec<Vec<BigInt>>;

fn identity_dense(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(m: &mut Dense, target: usize, src: usize, q: &BigInt) {
    // row[target] -= q * row[src]
    if q.is_zero() {
        return;
    }
    let (a, b) = if target < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_axpy(m: &mut Dense, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let v = q * &row[src];
            row[target] -= v;
        }
    }
}

fn swap_cols(m: &mut Dense, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.to_dense();
    let mut u = identity_dense(m);
    let mut v = identity_dense(n);
    let steps = m.min(n);

    for t in 0..steps {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in d.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                dirty |= !d[i][t].is_zero();
            }
            for j in t + 1..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                dirty |= !d[t][j].is_zero();
            }
            if dirty {
                // Move the smallest remainder in row/column t into the pivot.
                let mut best = (t, t);
                for i in t + 1..m {
                    if !d[i][t].is_zero() && d[i][t].abs() < d[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !d[t][j].is_zero() && d[t][j].abs() < d[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    d.swap(t, best.0);
                    u.swap(t, best.0);
                } else if best.1 != t {
                    swap_cols(&mut d, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            // Divisibility: fold an offending row into row t.
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[i][j].is_zero() && !d[i][j].is_multiple_of(&d[t][t]))
            });
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }

    let diag = (0..steps).map(|i| d[i][i].clone()).collect();
    SnfResult {
        diag,
        left: IntMatrix::from_dense_shape(m, m, &u),
        right: IntMatrix::from_dense_shape(n, n, &v),
    }
}

/// Solves `A x = b` over the integers. Returns `None` when `b` is not in the
/// integer column span of `A`.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "dimension mismatch");
    let s = snf(a);
    // U A V = D, A x = b  <=>  D (V^{-1} x) = U b.
    let c = s.left.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let di = s.diag.get(i).cloned().unwrap_or_default();
        if di.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ci.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(s.right.mul_vec(&y))
}
