//! Linear systems over the fraction field of a Laurent polynomial ring.

use crate::error::{Error, Result};

use super::poly::{LaurentPoly, Vars};

/// Solves the square system `A x = b` by Bareiss fraction-free elimination.
///
/// The solution is returned only when every entry is an honest Laurent
/// polynomial. Otherwise [`Error::NotInRing`] carries the Cramer numerators
/// and common denominator, and [`Error::Singular`] reports `det A = 0`.
pub fn solve_over_fraction_field(a: &[Vec<LaurentPoly>], b: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Ok(Vec::new());
    }
    let vars: Vars = b[0].vars().clone();

    // Augmented matrix [A | b].
    let mut m: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for row in &m {
        for x in row {
            if x.vars() != &vars {
                return Err(Error::VariableMismatch {
                    left: vars.names().to_vec(),
                    right: x.vars().names().to_vec(),
                });
            }
        }
    }

    let mut prev = LaurentPoly::one(&vars);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => m.swap(k, p),
                None => return Err(Error::Singular),
            }
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = LaurentPoly::zero(&vars);
        }
        prev = m[k][k].clone();
    }

    // With det' = m[n-1][n-1] (= ±det A), y_i = det' * x_i is a ring element
    // by Cramer's rule; back-substitute for y.
    let det = m[n - 1][n - 1].clone();
    let mut y: Vec<LaurentPoly> = vec![LaurentPoly::zero(&vars); n];
    for i in (0..n).rev() {
        let mut acc = &det * &m[i][n];
        for j in i + 1..n {
            acc = &acc - &(&m[i][j] * &y[j]);
        }
        y[i] = acc.div_exact(&m[i][i]).expect("Cramer numerator divides exactly");
    }

    let mut x = Vec::with_capacity(n);
    for yi in &y {
        match yi.div_exact(&det) {
            Some(q) => x.push(q),
            None => {
                return Err(Error::NotInRing {
                    numerators: y.iter().map(ToString::to_string).collect(),
                    denominator: det.to_string(),
                })
            }
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Vars {
        Vars::new(["t"])
    }

    #[test]
    fn identity_returns_rhs() {
        let vars = v();
        let one = LaurentPoly::one(&vars);
        let zero = LaurentPoly::zero(&vars);
        let a = vec![vec![one.clone(), zero.clone()], vec![zero, one]];
        let b = vec![LaurentPoly::monomial(&vars, vec![-3], 2), LaurentPoly::var(&vars, 0)];
        assert_eq!(solve_over_fraction_field(&a, &b).unwrap(), b);
    }

    #[test]
    fn monomial_division() {
        let vars = v();
        let a = vec![vec![LaurentPoly::var(&vars, 0)]];
        let b = vec![LaurentPoly::monomial(&vars, vec![2], 1)];
        assert_eq!(solve_over_fraction_field(&a, &b).unwrap(), vec![LaurentPoly::var(&vars, 0)]);
    }

    #[test]
    fn half_is_not_in_ring() {
        let vars = v();
        let a = vec![vec![LaurentPoly::constant(&vars, 2)]];
        let b = vec![LaurentPoly::one(&vars)];
        assert!(matches!(solve_over_fraction_field(&a, &b), Err(Error::NotInRing { .. })));
    }

    #[test]
    fn singular_is_reported() {
        let vars = v();
        let t = LaurentPoly::var(&vars, 0);
        let a = vec![vec![t.clone(), t.clone()], vec![t.clone(), t.clone()]];
        let b = vec![t.clone(), t];
        assert_eq!(solve_over_fraction_field(&a, &b), Err(Error::Singular));
    }

    #[test]
    fn two_by_two_with_laurent_entries() {
        let vars = v();
        let one = LaurentPoly::one(&vars);
        let t = LaurentPoly::var(&vars, 0);
        let tinv = t.inverse().unwrap();
        // [[1, 1], [1, t]] x = [1 + t^-1, 1 + 1]  has x = [1 + t^-1 - 1... ] check by multiplication
        let a = vec![vec![one.clone(), one.clone()], vec![one.clone(), &one - &t]];
        let x = vec![&tinv + &one, &t * &t];
        let b: Vec<LaurentPoly> = a
            .iter()
            .map(|row| row.iter().zip(&x).fold(LaurentPoly::zero(&vars), |acc, (r, xi)| &acc + &(r * xi)))
            .collect();
        assert_eq!(solve_over_fraction_field(&a, &b).unwrap(), x);
    }
}
