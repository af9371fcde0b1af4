//! Words and noncommutative polynomials over Laurent coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::coef::{signed_residue, CoefMonomial, Coefficient};
use super::field::PrimeField;
use super::AlgebraError;

/// Index of a generator inside its owning DGA.
pub type GenId = u32;

/// An ordered product of generators; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

// Shortlex: shorter words first, then lexicographic on generator ids.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<GenId>> for Word {
    fn from(v: Vec<GenId>) -> Self {
        Word(v)
    }
}

/// Element of the free algebra `F_p[μ^±, λ^±]⟨generators⟩` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly {
    p: u32,
    terms: BTreeMap<Word, Coefficient>,
}

impl NCPoly {
    pub fn zero(field: PrimeField) -> Self {
        NCPoly {
            p: field.characteristic(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::term(field, Coefficient::one(), Word::unit())
    }

    pub fn constant(field: PrimeField, c: Coefficient) -> Self {
        Self::term(field, c, Word::unit())
    }

    pub fn generator(field: PrimeField, g: GenId) -> Self {
        Self::term(field, Coefficient::one(), Word::letter(g))
    }

    pub fn term(field: PrimeField, c: Coefficient, w: Word) -> Self {
        let mut out = Self::zero(field);
        out.add_term(c, w);
        out
    }

    pub fn from_terms(
        field: PrimeField,
        terms: impl IntoIterator<Item = (Coefficient, Word)>,
    ) -> Self {
        let mut out = Self::zero(field);
        for (c, w) in terms {
            out.add_term(c, w);
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("characteristic validated at construction")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient_of(&self, w: &Word) -> Option<&Coefficient> {
        self.terms.get(w)
    }

    /// Adds `c·w`, dropping the word if its coefficient cancels.
    pub fn add_term(&mut self, c: Coefficient, w: Word) {
        if c.is_zero() {
            return;
        }
        let f = self.field();
        match self.terms.get_mut(&w) {
            Some(existing) => {
                existing.add_assign(&f, &c);
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn check_ring(&self, other: &NCPoly) -> Result<(), AlgebraError> {
        if self.p != other.p {
            return Err(AlgebraError::RingMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        assert_eq!(self.p, other.p, "ring mismatch");
        for (w, c) in &other.terms {
            self.add_term(c.clone(), w.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &NCPoly) {
        let neg = other.neg();
        self.add_assign(&neg);
    }

    pub fn neg(&self) -> NCPoly {
        let f = self.field();
        NCPoly {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg(&f)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> NCPoly {
        let f = self.field();
        let mut out = NCPoly::zero(f);
        for (w, k) in &self.terms {
            out.add_term(k.mul(&f, c), w.clone());
        }
        out
    }

    /// Concatenation product. Fails when the characteristics differ.
    pub fn checked_mul(&self, other: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.check_ring(other)?;
        let f = self.field();
        let mut out = NCPoly::zero(f);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(c1.mul(&f, c2), w1.concat(w2));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        self.checked_mul(other).expect("ring mismatch")
    }

    /// Left-multiply by a word, right-multiply by another, scaling by `c`.
    pub fn sandwich(&self, c: &Coefficient, left: &Word, right: &Word) -> NCPoly {
        let f = self.field();
        let mut out = NCPoly::zero(f);
        for (w, k) in &self.terms {
            out.add_term(k.mul(&f, c), left.concat(w).concat(right));
        }
        out
    }

    /// Rename generators through `map`.
    pub fn relabel(&self, map: impl Fn(GenId) -> GenId) -> NCPoly {
        let f = self.field();
        let mut out = NCPoly::zero(f);
        for (w, c) in &self.terms {
            out.add_term(c.clone(), Word(w.0.iter().map(|&g| map(g)).collect()));
        }
        out
    }

    /// Re-sort after construction; a no-op on canonical values.
    pub fn normalized(&self) -> NCPoly {
        NCPoly::from_terms(
            self.field(),
            self.terms.iter().map(|(w, c)| (c.clone(), w.clone())),
        )
    }

    /// Multiply every coefficient by `λ^k`.
    pub fn shift_lambda(&self, k: i32) -> NCPoly {
        NCPoly {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.shift_lambda(k)))
                .collect(),
        }
    }

    /// Substitute `μ = mu0, λ = lambda0`, leaving constant coefficients.
    pub fn eval_coefficients(&self, mu0: u32, lambda0: u32) -> Result<NCPoly, AlgebraError> {
        let f = self.field();
        let (m, l) = (mu0 % self.p, lambda0 % self.p);
        if m == 0 || l == 0 {
            return Err(AlgebraError::InvalidPoint {
                mu: mu0,
                lambda: lambda0,
            });
        }
        let mut out = NCPoly::zero(f);
        for (w, c) in &self.terms {
            out.add_term(Coefficient::constant(c.eval(&f, m, l)), w.clone());
        }
        Ok(out)
    }

    /// All `(c, μ-exp, λ-exp, word)` quadruples in canonical order.
    pub fn flat_terms(&self) -> Vec<(CoefMonomial, Word)> {
        self.terms
            .iter()
            .flat_map(|(w, c)| c.monomials().map(move |m| (m, w.clone())))
            .collect()
    }

    /// Render with generator names supplied by `name`.
    pub fn render_with(&self, name: impl Fn(GenId) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let word = w.0.iter().map(|&g| name(g)).collect::<Vec<_>>().join(" ");
            // A lone monomial coefficient carries its sign outside.
            let (negative, coef) = match c.monomials().collect::<Vec<_>>().as_slice() {
                [m] => {
                    let (neg, mag) = signed_residue(m.c, self.p);
                    (
                        neg,
                        Coefficient::monomial(mag, m.mu, m.lambda).render(self.p),
                    )
                }
                _ => (false, format!("({})", c.render(self.p))),
            };
            let body = match (w.is_unit(), coef.as_str()) {
                (true, _) => coef
                    .trim_start_matches('(')
                    .trim_end_matches(')')
                    .to_string(),
                (false, "1") => word,
                (false, _) => format!("{coef}*{word}"),
            };
            match (n, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with(|g| format!("g{g}")))
    }
}

/// Free-algebra product of two elements.
pub fn nc_multiply(a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
    a.checked_mul(b)
}
