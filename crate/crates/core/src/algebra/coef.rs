//! Laurent coefficients `F_p[μ^±1, λ^±1]`.

use std::collections::BTreeMap;

use super::field::PrimeField;

/// A single coefficient monomial `c·μ^i·λ^j` with `c ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoefMonomial {
    pub c: u32,
    pub mu: i32,
    pub lambda: i32,
}

/// A finite sum of coefficient monomials, kept reduced: no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coefficient {
    terms: BTreeMap<(i32, i32), u32>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c·μ^mu·λ^lambda`; callers pass an already reduced `c`.
    pub fn monomial(c: u32, mu: i32, lambda: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((mu, lambda), c);
        }
        Coefficient { terms }
    }

    pub fn constant(c: u32) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)) == Some(&1)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = CoefMonomial> + '_ {
        self.terms
            .iter()
            .map(|(&(mu, lambda), &c)| CoefMonomial { c, mu, lambda })
    }

    /// Constant term if this is a pure constant.
    pub fn as_constant(&self) -> Option<u32> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&(0, 0)).copied(),
            _ => None,
        }
    }

    fn add_term(&mut self, f: &PrimeField, key: (i32, i32), c: u32) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(key).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, f: &PrimeField, other: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out.add_assign(f, other);
        out
    }

    pub fn add_assign(&mut self, f: &PrimeField, other: &Coefficient) {
        for (&k, &c) in &other.terms {
            self.add_term(f, k, c);
        }
    }

    pub fn neg(&self, f: &PrimeField) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(&k, &c)| (k, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, f: &PrimeField, s: u32) -> Coefficient {
        let mut out = Coefficient::zero();
        for (&k, &c) in &self.terms {
            out.add_term(f, k, f.mul(c, s));
        }
        out
    }

    pub fn mul(&self, f: &PrimeField, other: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &other.terms {
                out.add_term(f, (i1 + i2, j1 + j2), f.mul(c1, c2));
            }
        }
        out
    }

    /// Multiply by `λ^k`.
    pub fn shift_lambda(&self, k: i32) -> Coefficient {
        Coefficient {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| ((i, j + k), c))
                .collect(),
        }
    }

    /// Evaluate at `μ = mu0, λ = lambda0`; both must be nonzero.
    pub fn eval(&self, f: &PrimeField, mu0: u32, lambda0: u32) -> u32 {
        self.terms.iter().fold(0, |acc, (&(i, j), &c)| {
            let m = f.pow(mu0, i as i64).expect("nonzero evaluation point");
            let l = f.pow(lambda0, j as i64).expect("nonzero evaluation point");
            f.add(acc, f.mul(c, f.mul(m, l)))
        })
    }

    /// Degrees of the monomials under the Maslov offsets `(d_mu, d_lambda)`.
    pub fn degrees(&self, offset: (i32, i32)) -> impl Iterator<Item = i32> + '_ {
        self.terms
            .keys()
            .map(move |&(i, j)| i * offset.0 + j * offset.1)
    }

    /// Largest absolute exponent appearing, for bounds checks.
    pub fn max_abs_exponent(&self) -> i32 {
        self.terms
            .keys()
            .map(|&(i, j)| i.abs().max(j.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn from_monomials(f: &PrimeField, ms: impl IntoIterator<Item = CoefMonomial>) -> Self {
        let mut out = Coefficient::zero();
        for m in ms {
            out.add_term(f, (m.mu, m.lambda), f.reduce(m.c as i64));
        }
        out
    }

    /// Human-readable form, e.g. `1 + mu` or `2*mu^-1*lambda`.
    pub fn render(&self, p: u32) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (&(i, j), &c)) in self.terms.iter().enumerate() {
            let (negative, magnitude) = signed_residue(c, p);
            let mut factors = Vec::new();
            for (name, e) in [("mu", i), ("lambda", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            let body = if factors.is_empty() {
                magnitude.to_string()
            } else if magnitude == 1 {
                factors.join("*")
            } else {
                format!("{magnitude}*{}", factors.join("*"))
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

/// Residue `c` mod `p` as a sign and magnitude, preferring the smaller magnitude.
pub(crate) fn signed_residue(c: u32, p: u32) -> (bool, u32) {
    if p > 2 && c > p / 2 {
        (true, p - c)
    } else {
        (false, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_two_square_of_one_plus_mu() {
        let f = PrimeField::two();
        let a = Coefficient::one().add(&f, &Coefficient::monomial(1, 1, 0));
        let sq = a.mul(&f, &a);
        let expect = Coefficient::one().add(&f, &Coefficient::monomial(1, 2, 0));
        assert_eq!(sq, expect);
    }

    #[test]
    fn eval_negative_exponent() {
        let f = PrimeField::new(7).unwrap();
        let m = Coefficient::monomial(1, 2, -1);
        assert_eq!(m.eval(&f, 2, 3), 6);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let f = PrimeField::new(3).unwrap();
        let a = Coefficient::monomial(1, 1, 0);
        let b = Coefficient::monomial(2, 1, 0);
        assert!(a.add(&f, &b).is_zero());
    }
}
