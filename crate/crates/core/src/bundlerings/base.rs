//! Finitely presented base rings: a free Z-basis with degrees, a
//! multiplication table, and the classes of the line bundles `ξ_u`.
//!
//! File schema:
//!
//! ```json
//! { "basis": [{"name": "1", "degree": 0}, {"name": "t", "degree": 2}],
//!   "mult": [[[1,0],[0,1]], [[0,1],[0,0]]],
//!   "char_class": {"u_1": [0,0], "u_2": [0,1]} }
//! ```
//!
//! `mult[i][j]` is `e_i·e_j` in the basis. K-theory bases use `line_class`
//! instead of `char_class`; there `degree` is a filtration degree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{latex_name, solve_integer, IntMatrix, IntPoly, LaurentPoly};

pub type BaseElement = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseFile {
    pub basis: Vec<BasisEntry>,
    pub mult: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_class: Option<BTreeMap<String, Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_class: Option<BTreeMap<String, Vec<i64>>>,
}

/// Multiplication table over a free Z-basis with `e_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRing {
    names: Vec<String>,
    degrees: Vec<u32>,
    mult: Vec<Vec<BaseElement>>,
    /// Least `N` with `I^N = 0`, `I` spanned by `e_1..e_{r-1}`.
    nilpotency: usize,
}

fn big(v: &[i64]) -> BaseElement {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl BaseRing {
    /// Checks the unit, associativity, graded commutativity, the degree
    /// condition, and nilpotence of the augmentation ideal. With `exact`
    /// products are homogeneous; otherwise degrees only filter.
    pub fn new(basis: &[BasisEntry], mult: &[Vec<Vec<i64>>], exact: bool) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidBase(m));
        let r = basis.len();
        if r == 0 || basis[0].name != "1" || basis[0].degree != 0 {
            return bad("the first basis element must be \"1\" in degree 0".into());
        }
        let names: BTreeSet<&str> = basis.iter().map(|b| b.name.as_str()).collect();
        if names.len() != r {
            return bad("basis names must be distinct".into());
        }
        for b in &basis[1..] {
            let ok = b.name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && b.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return bad(format!("basis name '{}' is not an identifier", b.name));
            }
            if b.degree == 0 {
                return bad(format!("basis element '{}' must have positive degree", b.name));
            }
        }
        if mult.len() != r || mult.iter().any(|row| row.len() != r || row.iter().any(|v| v.len() != r)) {
            return bad(format!("multiplication table must be {r}×{r}×{r}"));
        }
        let mult: Vec<Vec<BaseElement>> = mult.iter().map(|row| row.iter().map(|v| big(v)).collect()).collect();
        let degrees: Vec<u32> = basis.iter().map(|b| b.degree).collect();
        let mut ring = BaseRing { names: basis.iter().map(|b| b.name.clone()).collect(), degrees, mult, nilpotency: 0 };
        for i in 0..r {
            let e = ring.basis_element(i);
            if ring.mult[0][i] != e || ring.mult[i][0] != e {
                return bad(format!("1 is not a unit for '{}'", ring.names[i]));
            }
            for j in 0..r {
                let sign = if (ring.degrees[i] * ring.degrees[j]) % 2 == 1 { -1 } else { 1 };
                let swapped: BaseElement = ring.mult[j][i].iter().map(|c| c * sign).collect();
                if ring.mult[i][j] != swapped {
                    return bad(format!("'{}' and '{}' do not commute", ring.names[i], ring.names[j]));
                }
                let target = ring.degrees[i] + ring.degrees[j];
                for (k, c) in ring.mult[i][j].iter().enumerate() {
                    let ok = if exact { ring.degrees[k] == target } else { ring.degrees[k] >= target };
                    if !c.is_zero() && !ok {
                        return bad(format!("{}·{} has a component in degree {}", ring.names[i], ring.names[j], ring.degrees[k]));
                    }
                }
                for k in 0..r {
                    let left = ring.mul(&ring.mult[i][j], &ring.basis_element(k));
                    let right = ring.mul(&ring.basis_element(i), &ring.mult[j][k]);
                    if left != right {
                        return bad(format!(
                            "multiplication is not associative at ({}, {}, {})",
                            ring.names[i], ring.names[j], ring.names[k]
                        ));
                    }
                }
            }
        }
        ring.nilpotency = ring.compute_nilpotency()?;
        Ok(ring)
    }

    fn compute_nilpotency(&self) -> Result<usize> {
        let r = self.rank();
        let mut power: BTreeSet<BaseElement> = (1..r).map(|i| self.basis_element(i)).collect();
        let mut n = 1;
        while !power.is_empty() {
            if n > r {
                return Err(Error::InvalidBase("the augmentation ideal is not nilpotent".into()));
            }
            let mut next = BTreeSet::new();
            for v in &power {
                for i in 1..r {
                    let p = self.mul(v, &self.basis_element(i));
                    if p.iter().any(|c| !c.is_zero()) {
                        next.insert(p);
                    }
                }
            }
            power = next;
            n += 1;
        }
        Ok(n)
    }

    pub fn point() -> Self {
        BaseRing::new(&[BasisEntry { name: "1".into(), degree: 0 }], &[vec![vec![1]]], true).expect("the point is a ring")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn basis_element(&self, i: usize) -> BaseElement {
        let mut e = vec![BigInt::zero(); self.rank()];
        e[i] = BigInt::one();
        e
    }

    pub fn zero(&self) -> BaseElement {
        vec![BigInt::zero(); self.rank()]
    }

    pub fn one(&self) -> BaseElement {
        self.basis_element(0)
    }

    pub fn is_zero(a: &[BigInt]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> BaseElement {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> BaseElement {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &[BigInt], c: &BigInt) -> BaseElement {
        a.iter().map(|x| x * c).collect()
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> BaseElement {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.mult[i][j]) {
                    *o += &xy * c;
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[BigInt], k: u32) -> BaseElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Multiplicative inverse, if any.
    pub fn inverse(&self, a: &[BigInt]) -> Option<BaseElement> {
        let r = self.rank();
        // Column j of the multiplication-by-a matrix is a·e_j.
        let mut m = IntMatrix::zeros(r, r);
        for j in 0..r {
            for (i, c) in self.mul(a, &self.basis_element(j)).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        let x = solve_integer(&m, &self.one())?;
        (self.mul(a, &x) == self.one()).then_some(x)
    }

    /// Evaluates a polynomial with `images[j]` substituted for variable `j`.
    pub fn eval_poly(&self, p: &IntPoly, images: &[BaseElement]) -> BaseElement {
        let mut out = self.zero();
        for (e, c) in p.terms() {
            let mut term = self.scale(&self.one(), c);
            for (img, &k) in images.iter().zip(&e) {
                if k > 0 {
                    term = self.mul(&term, &self.pow(img, k));
                }
            }
            out = self.add(&out, &term);
        }
        out
    }

    /// Evaluates a Laurent polynomial; `inverses[j]` is used for negative
    /// powers of variable `j`.
    pub fn eval_laurent(&self, p: &LaurentPoly, images: &[BaseElement], inverses: &[BaseElement]) -> BaseElement {
        let mut out = self.zero();
        for (e, c) in p.terms() {
            let mut term = self.scale(&self.one(), c);
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = self.mul(&term, &self.pow(&images[j], k as u32));
                } else if k < 0 {
                    term = self.mul(&term, &self.pow(&inverses[j], (-k) as u32));
                }
            }
            out = self.add(&out, &term);
        }
        out
    }

    /// `1 + s`, `-t`, `0`; lowest degree first.
    pub fn format(&self, a: &[BigInt]) -> String {
        self.format_with(a, |n| n.to_string())
    }

    pub fn format_latex(&self, a: &[BigInt]) -> String {
        self.format_with(a, latex_name)
    }

    fn format_with(&self, a: &[BigInt], name: impl Fn(&str) -> String) -> String {
        let mut order: Vec<usize> = (0..self.rank()).filter(|&i| !a[i].is_zero()).collect();
        order.sort_by(|&i, &j| self.degrees[i].cmp(&self.degrees[j]).then(i.cmp(&j)));
        if order.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, &i) in order.iter().enumerate() {
            let c = &a[i];
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if i == 0 {
                let _ = write!(s, "{abs}");
            } else if abs.is_one() {
                s.push_str(&name(&self.names[i]));
            } else {
                let _ = write!(s, "{abs}*{}", name(&self.names[i]));
            }
        }
        s
    }

    /// True when the element has more than one term, so that it needs
    /// parentheses inside a product.
    pub fn is_compound(a: &[BigInt]) -> bool {
        a.iter().filter(|c| !c.is_zero()).count() > 1 || a.iter().any(|c| c.is_negative())
    }
}

fn class_map(raw: &BTreeMap<String, Vec<i64>>, n: usize, r: usize, what: &str) -> Result<Vec<BaseElement>> {
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let key = format!("u_{j}");
        let v = raw.get(&key).ok_or_else(|| Error::InvalidBase(format!("{what} is missing '{key}'")))?;
        if v.len() != r {
            return Err(Error::InvalidBase(format!("{what}['{key}'] has length {} instead of {r}", v.len())));
        }
        out.push(big(v));
    }
    if let Some(extra) = raw.keys().find(|k| !(1..=n).any(|j| **k == format!("u_{j}"))) {
        return Err(Error::InvalidBase(format!("{what} has unexpected key '{extra}'")));
    }
    Ok(out)
}

/// `H*(B)` with first Chern classes `c_1(ξ_{e_j})`, extended linearly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCohomRing {
    ring: BaseRing,
    char_class: Vec<BaseElement>,
}

impl BaseCohomRing {
    pub fn new(ring: BaseRing, char_class: Vec<BaseElement>) -> Result<Self> {
        for c in &char_class {
            if c.len() != ring.rank() {
                return Err(Error::InvalidBase("characteristic class of the wrong length".into()));
            }
            if let Some(i) = (0..ring.rank()).find(|&i| !c[i].is_zero() && ring.degrees[i] != 2) {
                return Err(Error::InvalidBase(format!("c_1 has a component on '{}' outside degree 2", ring.names[i])));
            }
        }
        Ok(BaseCohomRing { ring, char_class })
    }

    pub fn from_file(file: &BaseFile, n: usize) -> Result<Self> {
        let ring = BaseRing::new(&file.basis, &file.mult, true)?;
        let raw = file.char_class.as_ref().ok_or_else(|| Error::InvalidBase("missing 'char_class'".into()))?;
        Self::new(ring.clone(), class_map(raw, n, ring.rank(), "char_class")?)
    }

    pub fn point(n: usize) -> Self {
        let ring = BaseRing::point();
        let zero = ring.zero();
        BaseCohomRing { ring, char_class: vec![zero; n] }
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.char_class.len()
    }

    /// `c_1(ξ_{e_j})`.
    pub fn char_class(&self, j: usize) -> &BaseElement {
        &self.char_class[j]
    }

    /// `c_1(ξ_u) = Σ_j u_j c_1(ξ_{e_j})`.
    pub fn char_class_of(&self, u: &[i64]) -> BaseElement {
        u.iter().zip(&self.char_class).fold(self.ring.zero(), |acc, (&c, x)| {
            self.ring.add(&acc, &self.ring.scale(x, &BigInt::from(c)))
        })
    }
}

/// `K*(B)` with line bundle classes `[ξ_{e_j}]`, extended multiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseKRing {
    ring: BaseRing,
    line_class: Vec<BaseElement>,
    inverse: Vec<BaseElement>,
}

impl BaseKRing {
    pub fn new(ring: BaseRing, line_class: Vec<BaseElement>) -> Result<Self> {
        let mut inverse = Vec::new();
        for (j, l) in line_class.iter().enumerate() {
            if l.len() != ring.rank() {
                return Err(Error::InvalidBase("line class of the wrong length".into()));
            }
            if !l[0].is_one() {
                return Err(Error::InvalidBase(format!("[ξ_u_{}] - 1 is not in the augmentation ideal", j + 1)));
            }
            let inv = ring
                .inverse(l)
                .ok_or_else(|| Error::InvalidBase(format!("[ξ_u_{}] = {} is not invertible", j + 1, ring.format(l))))?;
            inverse.push(inv);
        }
        Ok(BaseKRing { ring, line_class, inverse })
    }

    pub fn from_file(file: &BaseFile, n: usize) -> Result<Self> {
        let ring = BaseRing::new(&file.basis, &file.mult, false)?;
        let raw = file.line_class.as_ref().ok_or_else(|| Error::InvalidBase("missing 'line_class'".into()))?;
        Self::new(ring.clone(), class_map(raw, n, ring.rank(), "line_class")?)
    }

    pub fn point(n: usize) -> Self {
        let ring = BaseRing::point();
        let one = ring.one();
        BaseKRing { ring, line_class: vec![one.clone(); n], inverse: vec![one; n] }
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.line_class.len()
    }

    pub fn line_class(&self, j: usize) -> &BaseElement {
        &self.line_class[j]
    }

    pub fn line_inverse(&self, j: usize) -> &BaseElement {
        &self.inverse[j]
    }

    /// `[ξ_u] = ∏_j [ξ_{e_j}]^{u_j}`.
    pub fn line_class_of(&self, u: &[i64]) -> BaseElement {
        u.iter().enumerate().fold(self.ring.one(), |acc, (j, &c)| {
            let f = if c >= 0 { &self.line_class[j] } else { &self.inverse[j] };
            self.ring.mul(&acc, &self.ring.pow(f, c.unsigned_abs() as u32))
        })
    }

    /// Image of an element of `RT` under `χ^{e_j} ↦ [ξ_{e_j}]`.
    pub fn eval_character(&self, r: &LaurentPoly) -> BaseElement {
        self.ring.eval_laurent(r, &self.line_class, &self.inverse)
    }
}
