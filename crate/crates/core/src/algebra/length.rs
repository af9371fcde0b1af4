//! Exact positive chord lengths.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::AlgebraError;

/// A chord length, stored as an exact rational.
///
/// Decimal literals such as `0.35` are read digit by digit, so `0.1 + 0.2`
/// really equals `0.3` here.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Length(pub BigRational);

impl Length {
    pub fn zero() -> Self {
        Length(BigRational::zero())
    }

    pub fn one() -> Self {
        Length(BigRational::one())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Length(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Length(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn add(&self, other: &Length) -> Length {
        Length(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Length) -> Length {
        Length(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Length) -> Length {
        Length(&self.0 * &other.0)
    }

    pub fn div_int(&self, n: i64) -> Length {
        Length(&self.0 / BigInt::from(n))
    }

    /// Closest rational to a finite float, via its shortest decimal form.
    pub fn from_f64(x: f64) -> Result<Length, AlgebraError> {
        if !x.is_finite() {
            return Err(AlgebraError::BadLength(x.to_string()));
        }
        format!("{x:?}").parse()
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Length>) -> Length {
        items.into_iter().fold(Length::zero(), |acc, l| acc.add(l))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            return write!(f, "{}", self.0.numer());
        }
        // Print a terminating decimal when the denominator is 2^a·5^b.
        let mut d = self.0.denom().clone();
        let (two, five) = (BigInt::from(2), BigInt::from(5));
        let mut digits = 0usize;
        let mut scale = BigInt::one();
        while (&d % &two).is_zero() || (&d % &five).is_zero() {
            if (&d % &two).is_zero() {
                d /= &two;
            } else {
                d /= &five;
            }
            digits += 1;
            scale *= 10;
        }
        if !d.is_one() {
            return write!(f, "{}/{}", self.0.numer(), self.0.denom());
        }
        // Enough digits to be exact: `digits` may overshoot, so trim zeros.
        let scaled = (&self.0 * BigRational::from_integer(scale)).to_integer();
        let neg = scaled.is_negative();
        let mut s = scaled.abs().to_string();
        while s.len() <= digits {
            s.insert(0, '0');
        }
        let split = s.len() - digits;
        let (int, frac) = s.split_at(split);
        let frac = frac.trim_end_matches('0');
        write!(f, "{}{}.{}", if neg { "-" } else { "" }, int, frac)
    }
}

impl FromStr for Length {
    type Err = AlgebraError;

    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let s = raw.trim();
        let bad = || AlgebraError::BadLength(raw.to_string());
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Length(BigRational::new(n, d)));
        }
        let (mantissa, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (neg, body) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
        let shift = exp - frac.len() as i32;
        let ten = BigRational::from_integer(BigInt::from(10));
        let mut value = BigRational::from_integer(digits);
        if shift >= 0 {
            value *= num_traits::pow(ten, shift as usize);
        } else {
            value /= num_traits::pow(ten, (-shift) as usize);
        }
        Ok(Length(if neg { -value } else { value }))
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
            Float(f64),
        }
        let parsed = match Raw::deserialize(d)? {
            Raw::Text(t) => t.parse(),
            Raw::Int(i) => Ok(Length::integer(i)),
            Raw::Float(x) => Length::from_f64(x),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        let a: Length = "0.1".parse().unwrap();
        let b: Length = "0.2".parse().unwrap();
        assert_eq!(a.add(&b), "0.3".parse().unwrap());
    }

    #[test]
    fn display_round_trips() {
        for s in ["1", "0.5", "1.01", "1/3", "-2.25", "0.001"] {
            let l: Length = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
            assert_eq!(l.to_string().parse::<Length>().unwrap(), l);
        }
    }

    #[test]
    fn float_uses_shortest_decimal() {
        assert_eq!(Length::from_f64(0.7).unwrap(), Length::from_ratio(7, 10));
        assert_eq!(
            "1e-2".parse::<Length>().unwrap(),
            Length::from_ratio(1, 100)
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!("abc".parse::<Length>().is_err());
        assert!("1/0".parse::<Length>().is_err());
        assert!(".".parse::<Length>().is_err());
    }
}
