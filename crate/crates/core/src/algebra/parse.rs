//! A small text syntax for algebra elements, e.g. `1 + mu + b1 b2 b3`.
//!
//! Juxtaposition or `*` multiplies, `+`/`-` add, parentheses group,
//! `mu^k` and `lambda^k` (also `μ`, `λ`) are the coefficient variables and
//! integers are field constants. Generator names may end in `^`, which is how
//! hatted generators are spelled.

use super::coef::Coefficient;
use super::field::PrimeField;
use super::poly::{GenId, NCPoly, Word};
use super::{AlgebraError, Dga};

struct Parser<'a, F> {
    src: &'a str,
    pos: usize,
    field: PrimeField,
    lookup: F,
}

impl<'a, F: Fn(&str) -> Option<GenId>> Parser<'a, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.rest().chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn sum(&mut self) -> Result<NCPoly, AlgebraError> {
        let mut acc = NCPoly::zero(self.field);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.product()?;
            if negate {
                acc.sub_assign(&t);
            } else {
                acc.add_assign(&t);
            }
        }
    }

    fn product(&mut self) -> Result<NCPoly, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == '(' || c.is_alphanumeric() || c == '_' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Option<i64> {
        self.skip_ws();
        let r = self.rest();
        let sign_len = usize::from(r.starts_with('-'));
        let digits = r[sign_len..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return None;
        }
        let v = r[..sign_len + digits].parse().ok()?;
        self.pos += sign_len + digits;
        Some(v)
    }

    fn exponent(&mut self) -> Result<i32, AlgebraError> {
        if self.rest().starts_with('^') {
            self.bump();
            match self.integer() {
                Some(e) if i32::try_from(e).is_ok() => Ok(e as i32),
                _ => self.err("expected an integer exponent"),
            }
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<NCPoly, AlgebraError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer().expect("digit present");
                Ok(NCPoly::constant(
                    self.field,
                    Coefficient::constant(self.field.reduce(v)),
                ))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let len: usize = self
                    .rest()
                    .chars()
                    .take_while(|c| c.is_alphanumeric() || *c == '_' || *c == '\'')
                    .map(char::len_utf8)
                    .sum();
                self.pos += len;
                let ident = &self.src[start..self.pos];
                match ident {
                    "mu" | "μ" => {
                        let e = self.exponent()?;
                        Ok(NCPoly::constant(self.field, Coefficient::monomial(1, e, 0)))
                    }
                    "lambda" | "λ" => {
                        let e = self.exponent()?;
                        Ok(NCPoly::constant(self.field, Coefficient::monomial(1, 0, e)))
                    }
                    _ => {
                        while self.rest().starts_with('^') {
                            self.bump();
                        }
                        let name = &self.src[start..self.pos];
                        match (self.lookup)(name) {
                            Some(g) => Ok(NCPoly::term(
                                self.field,
                                Coefficient::one(),
                                Word::letter(g),
                            )),
                            None => Err(AlgebraError::UndeclaredGenerator(name.to_string())),
                        }
                    }
                }
            }
            Some(c) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse `text` into an element, resolving generator names with `lookup`.
pub fn parse_poly(
    text: &str,
    field: PrimeField,
    lookup: impl Fn(&str) -> Option<GenId>,
) -> Result<NCPoly, AlgebraError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        field,
        lookup,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let out = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl Dga {
    /// Parse an element of this DGA from text.
    pub fn parse(&self, text: &str) -> Result<NCPoly, AlgebraError> {
        parse_poly(text, self.field(), |n| self.index_of(n))
    }
}
