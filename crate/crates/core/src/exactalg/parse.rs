//! Expression parser for integer (Laurent) polynomials.
//!
//! Grammar:
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power ('*' power)*
//! power   := atom ('^' exponent)?
//! atom    := integer | identifier | '(' expr ')'
//! exponent:= ['-'] integer | '(' ['-'] integer ')'
//! ```
//!
//! Identifiers must be among the declared variables. Negative exponents are
//! accepted only when `laurent` is set, and then only on units.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::poly::{IntPoly, LaurentPoly, Vars};

pub fn parse_laurent(src: &str, vars: &Vars) -> Result<LaurentPoly> {
    Parser::new(src, vars, true).parse()
}

pub fn parse_int_poly(src: &str, vars: &Vars) -> Result<IntPoly> {
    let p = Parser::new(src, vars, false).parse()?;
    IntPoly::new(p)
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a Vars,
    laurent: bool,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a Vars, laurent: bool) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0, vars, laurent }
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        if self.peek().is_none() {
            return self.err(0, "empty expression");
        }
        let p = self.expr()?;
        if let Some(c) = self.peek() {
            return self.err(self.pos, format!("unexpected '{}'", c as char));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let k = self.exponent()?;
        if k < 0 {
            if !self.laurent {
                return self.err(at, "negative exponent in a polynomial context");
            }
            if !base.is_unit() {
                return self.err(at, format!("negative power of non-unit {base}"));
            }
        }
        base.pow(k).or_else(|_| self.err(at, "invalid power"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(self.pos, "expected an integer exponent");
        }
        let k: i64 = match self.src[start..self.pos].parse() {
            Ok(k) => k,
            Err(_) => return self.err(start, "exponent out of range"),
        };
        if paren && !self.eat(b')') {
            let p = self.pos;
            return self.err(p, "expected ')' after exponent");
        }
        Ok(if neg { -k } else { k })
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    let p = self.pos;
                    return self.err(p, "expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.src[start..self.pos].parse().expect("digits");
                Ok(LaurentPoly::constant(self.vars, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match self.vars.position(name) {
                    Some(i) => Ok(LaurentPoly::var(self.vars, i)),
                    None => self.err(start, format!("unknown variable '{name}'")),
                }
            }
            Some(c) => {
                let p = self.pos;
                self.err(p, format!("unexpected '{}'", c as char))
            }
            None => {
                let p = self.pos;
                self.err(p, "unexpected end of input")
            }
        }
    }
}
