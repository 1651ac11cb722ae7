//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is in
//! lexicographic order and equality/hashing are canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a single term. Negative entries are allowed for Laurent
/// polynomials.
pub type Exponent = Vec<i32>;

/// Ordered, shared list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    /// `prefix1, prefix2, ..., prefix{count}`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        Vars::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn var(vars: &Vars, index: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[index] = 1;
        Self::monomial(vars, e, 1)
    }

    pub fn monomial(vars: &Vars, exponent: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exponent.len(), vars.len(), "exponent length must match variable count");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length must match variable count");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &[i32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next()
    }

    /// Largest total degree among the terms (`None` for zero).
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum()).max()
    }

    /// Sum of coefficients, i.e. the image under every variable `-> 1`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Unit of the Laurent ring: a single term with coefficient `±1`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: other.vars.names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = LaurentPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Integer power. Negative powers exist only for units.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let inv = self.inverse().ok_or_else(|| Error::NonInvertibleImage {
                variable: String::new(),
                image: self.to_string(),
            })?;
            return inv.pow(-k);
        }
        let mut result = LaurentPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Inverse of a unit `±x^e`.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv_e: Exponent = e.iter().map(|x| -x).collect();
        Some(LaurentPoly::monomial(&self.vars, inv_e, c.clone()))
    }

    /// Re-expresses the polynomial over a different variable list with the
    /// same length (renaming only).
    pub fn with_vars(&self, vars: &Vars) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        LaurentPoly { vars: vars.clone(), terms: self.terms.clone() }
    }

    /// Ring homomorphism `var_i -> images[i]`, landing in `target`.
    ///
    /// A variable that occurs with a negative exponent must be sent to a unit.
    pub fn substitute(&self, images: &[LaurentPoly], target: &Vars) -> Result<Self> {
        assert_eq!(images.len(), self.nvars(), "one image per variable is required");
        for img in images {
            if img.vars() != target {
                return Err(Error::VariableMismatch {
                    left: target.names().to_vec(),
                    right: img.vars().names().to_vec(),
                });
            }
        }
        // Cache powers per variable; exponents are small at desk scale.
        let mut cache: Vec<BTreeMap<i32, LaurentPoly>> = vec![BTreeMap::new(); images.len()];
        let mut out = LaurentPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let factor = match cache[i].get(&k) {
                    Some(f) => f.clone(),
                    None => {
                        let f = images[i].pow(k as i64).map_err(|_| Error::NonInvertibleImage {
                            variable: self.vars.names()[i].clone(),
                            image: images[i].to_string(),
                        })?;
                        cache[i].insert(k, f.clone());
                        f
                    }
                };
                term = &term * &factor;
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact division in the Laurent ring. Returns `None` when `divisor` does
    /// not divide `self`.
    ///
    /// Lex order on exponent vectors is a group order, so leading and trailing
    /// terms multiply. A quotient term smaller than
    /// `trailing(self) / trailing(divisor)` certifies non-divisibility.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(self.vars == divisor.vars, "variable lists differ");
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero(&self.vars));
        }
        let (dl_e, dl_c) = divisor.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let (dt_e, _) = divisor.trailing_term()?;
        let (st_e, _) = self.trailing_term()?;
        let floor: Exponent = st_e.iter().zip(dt_e).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(&self.vars);
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exponent = re.iter().zip(&dl_e).map(|(a, b)| a - b).collect();
            if qe.cmp(&floor) == Ordering::Less {
                return None;
            }
            let (qc, r) = rc.div_rem(&dl_c);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::monomial(&self.vars, qe, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Multiplies by a monomial so that every exponent is nonnegative and
    /// each variable attains exponent 0 somewhere. Returns the shift applied.
    pub fn clear_denominators(&self) -> (Self, Exponent) {
        let n = self.nvars();
        let mut mins = vec![0i32; n];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        let shift: Exponent = mins.iter().map(|m| -m).collect();
        (self.shift(&shift), shift)
    }

}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable mismatch in addition")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable mismatch in subtraction")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable mismatch in multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], e: &[i32], latex: bool) -> fmt::Result {
    let mut first = true;
    for (name, &k) in names.iter().zip(e) {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str(if latex { " " } else { "*" })?;
        }
        first = false;
        if latex {
            write!(f, "{}", latex_name(name))?;
            if k != 1 {
                write!(f, "^{{{k}}}")?;
            }
        } else {
            f.write_str(name)?;
            if k != 1 {
                write!(f, "^{k}")?;
            }
        }
    }
    Ok(())
}

/// `x12` -> `x_{12}`, `x_G` -> `x_{G}`, anything else unchanged.
pub(crate) fn latex_name(name: &str) -> String {
    if let Some((head, tail)) = name.split_once('_') {
        return format!("{head}_{{{tail}}}");
    }
    let split = name.find(|c: char| c.is_ascii_digit());
    match split {
        Some(i) if i > 0 && name[i..].chars().all(|c| c.is_ascii_digit()) => {
            format!("{}_{{{}}}", &name[..i], &name[i..])
        }
        _ => name.to_string(),
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &LaurentPoly, latex: bool) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    // Highest degree first reads more naturally.
    let mut terms: Vec<_> = p.terms.iter().collect();
    terms.sort_by(|(a, _), (b, _)| {
        let da: i64 = a.iter().map(|&x| x as i64).sum();
        let db: i64 = b.iter().map(|&x| x as i64).sum();
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let is_const = e.iter().all(|&x| x == 0);
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        if is_const {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}")?;
                f.write_str(if latex { " " } else { "*" })?;
            }
            write_monomial(f, p.vars.names(), e, latex)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, false)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self} in {:?})", self.vars)
    }
}

/// LaTeX rendering wrapper: `format!("{}", Latex(&p))`.
pub struct Latex<'a>(pub &'a LaurentPoly);

impl fmt::Display for Latex<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.0, true)
    }
}

/// Polynomial with nonnegative exponents. Thin wrapper over [`LaurentPoly`]
/// that enforces the invariant at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(LaurentPoly);

impl IntPoly {
    pub fn new(p: LaurentPoly) -> Result<Self> {
        if !p.is_polynomial() {
            return Err(Error::NegativeExponent(p.to_string()));
        }
        Ok(IntPoly(p))
    }

    pub fn zero(vars: &Vars) -> Self {
        IntPoly(LaurentPoly::zero(vars))
    }

    pub fn one(vars: &Vars) -> Self {
        IntPoly(LaurentPoly::one(vars))
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        IntPoly(LaurentPoly::var(vars, i))
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        IntPoly(LaurentPoly::constant(vars, c))
    }

    pub fn monomial(vars: &Vars, e: &[u32], c: impl Into<BigInt>) -> Self {
        IntPoly(LaurentPoly::monomial(vars, e.iter().map(|&x| x as i32).collect(), c))
    }

    pub fn as_laurent(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_laurent(self) -> LaurentPoly {
        self.0
    }

    pub fn vars(&self) -> &Vars {
        self.0.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Terms with exponents as `u32`.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &BigInt)> {
        self.0.terms().map(|(e, c)| (e.iter().map(|&x| x as u32).collect(), c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly(self.0.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        IntPoly(self.0.pow(k as i64).expect("nonnegative power"))
    }

    /// Homogeneous component of total degree `k` under per-variable weights.
    pub fn component(&self, weights: &[u32], k: u32) -> Self {
        let vars = self.vars().clone();
        IntPoly(LaurentPoly::from_terms(
            &vars,
            self.0
                .terms()
                .filter(|(e, _)| weighted_degree(e, weights) == k)
                .map(|(e, c)| (e.clone(), c.clone())),
        ))
    }

    pub fn substitute(&self, images: &[IntPoly], target: &Vars) -> IntPoly {
        let imgs: Vec<LaurentPoly> = images.iter().map(|p| p.0.clone()).collect();
        IntPoly(self.0.substitute(&imgs, target).expect("polynomial substitution is total"))
    }
}

pub(crate) fn weighted_degree(e: &[i32], weights: &[u32]) -> u32 {
    e.iter().zip(weights).map(|(&x, &w)| x as u32 * w).sum()
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly(-&self.0)
    }
}

impl TryFrom<LaurentPoly> for IntPoly {
    type Error = Error;
    fn try_from(p: LaurentPoly) -> Result<Self> {
        IntPoly::new(p)
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        p.0
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.0)
    }
}
