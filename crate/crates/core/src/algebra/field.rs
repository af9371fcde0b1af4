//! Prime fields `F_p` with a runtime characteristic.
//!
//! Elements are plain `u32` residues in `0..p`; every operation goes through
//! the owning [`PrimeField`] so that the characteristic is never implicit.

use super::AlgebraError;

/// The prime field of characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Largest supported characteristic; keeps every product inside `u64`.
    pub const MAX_CHARACTERISTIC: u32 = 1 << 16;

    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if !is_prime(p) || p > Self::MAX_CHARACTERISTIC {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub const fn two() -> Self {
        PrimeField { p: 2 }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `(-1)^k` as a field element.
    pub fn sign(&self, k: i64) -> u32 {
        if k.rem_euclid(2) == 0 {
            1
        } else {
            self.neg(1)
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        Some(self.pow_u(a, (self.p - 2) as u64))
    }

    fn pow_u(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a signed exponent. Negative powers of zero are `None`.
    pub fn pow(&self, a: u32, e: i64) -> Option<u32> {
        if e >= 0 {
            Some(self.pow_u(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow_u(ai, e.unsigned_abs()))
        }
    }

    /// Nonzero elements `1..p` in increasing order.
    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.p
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::two()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverse_in_f7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.pow(3, -1), Some(5));
        assert_eq!(f.inv(0), None);
        for a in f.units() {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn signs_collapse_in_char_two() {
        let f = PrimeField::two();
        assert_eq!(f.sign(1), 1);
        assert_eq!(PrimeField::new(5).unwrap().sign(3), 4);
    }
}
