//! Chord inventories of Legendrians and of their products.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Length;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("inventory is empty")]
    EmptyInventory,
    #[error("duplicate chord name `{0}`")]
    DuplicateName(String),
    #[error("chord `{0}` has non-positive length")]
    NonPositiveLength(String),
    #[error("outside the short-chord product regime: {0}")]
    NotInRegime(String),
    #[error("invalid rescaling factor: {0}")]
    BadScale(String),
}

/// A Reeb chord recorded by degree and length only.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordRecord {
    pub name: String,
    pub degree: i32,
    pub length: Length,
}

impl ChordRecord {
    pub fn new(name: impl Into<String>, degree: i32, length: Length) -> Self {
        ChordRecord {
            name: name.into(),
            degree,
            length,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ChordRecord>", into = "Vec<ChordRecord>")]
pub struct ChordInventory {
    chords: Vec<ChordRecord>,
}

impl TryFrom<Vec<ChordRecord>> for ChordInventory {
    type Error = ProductError;

    fn try_from(chords: Vec<ChordRecord>) -> Result<Self, Self::Error> {
        ChordInventory::new(chords)
    }
}

impl From<ChordInventory> for Vec<ChordRecord> {
    fn from(q: ChordInventory) -> Self {
        q.chords
    }
}

impl ChordInventory {
    pub fn new(chords: Vec<ChordRecord>) -> Result<Self, ProductError> {
        let mut names = BTreeSet::new();
        for c in &chords {
            if !c.length.is_positive() {
                return Err(ProductError::NonPositiveLength(c.name.clone()));
            }
            if !names.insert(c.name.clone()) {
                return Err(ProductError::DuplicateName(c.name.clone()));
            }
        }
        Ok(ChordInventory { chords })
    }

    /// Unnamed chords `c0, c1, …` of the given degrees and lengths.
    pub fn from_pairs(pairs: &[(i32, &str)]) -> Result<Self, ProductError> {
        let chords = pairs
            .iter()
            .enumerate()
            .map(|(i, &(deg, len))| {
                let length = len
                    .parse()
                    .map_err(|_| ProductError::NonPositiveLength(format!("c{i}")))?;
                Ok(ChordRecord::new(format!("c{i}"), deg, length))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ChordInventory::new(chords)
    }

    pub fn chords(&self) -> &[ChordRecord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn lengths(&self) -> impl Iterator<Item = &Length> {
        self.chords.iter().map(|c| &c.length)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.chords.iter().map(|c| c.degree).collect()
    }

    pub fn max_length(&self) -> Option<&Length> {
        self.lengths().max()
    }

    pub fn min_length(&self) -> Option<&Length> {
        self.lengths().min()
    }
}

/// `max ℓ(q1) < min ℓ(q2)`.
pub fn is_smaller(q1: &ChordInventory, q2: &ChordInventory) -> Result<bool, ProductError> {
    match (q1.max_length(), q2.min_length()) {
        (Some(a), Some(b)) => Ok(a < b),
        _ => Err(ProductError::EmptyInventory),
    }
}

/// No chord length of `q1` occurs in `q2`; the product is then embedded.
pub fn has_distinct_lengths(q1: &ChordInventory, q2: &ChordInventory) -> bool {
    let l2: BTreeSet<&Length> = q2.lengths().collect();
    q1.lengths().all(|l| !l2.contains(l))
}

/// Multiply every length by an exact positive factor.
pub fn rescale_by(q: &ChordInventory, factor: &Length) -> Result<ChordInventory, ProductError> {
    if !factor.is_positive() {
        return Err(ProductError::BadScale(factor.to_string()));
    }
    let chords = q
        .chords
        .iter()
        .map(|c| ChordRecord::new(c.name.clone(), c.degree, c.length.mul(factor)))
        .collect();
    Ok(ChordInventory { chords })
}

/// Multiply every length by `e^t`. The factor is the shortest decimal that
/// rounds to the floating-point value of `e^t`, so `t = ln 2` gives exactly 2.
pub fn rescale(q: &ChordInventory, t: f64) -> Result<ChordInventory, ProductError> {
    if t == 0.0 {
        return Ok(q.clone());
    }
    let factor = Length::from_f64(t.exp()).map_err(|e| ProductError::BadScale(e.to_string()))?;
    rescale_by(q, &factor)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpunVerdict {
    /// One factor is strictly smaller, so the product is a twist spun.
    TwistSpunBySize,
    Undetermined,
}

/// The size criterion; symmetric in its arguments.
pub fn spun_reducibility(
    q1: &ChordInventory,
    q2: &ChordInventory,
) -> Result<SpunVerdict, ProductError> {
    if is_smaller(q1, q2)? || is_smaller(q2, q1)? {
        Ok(SpunVerdict::TwistSpunBySize)
    } else {
        Ok(SpunVerdict::Undetermined)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChordFamily {
    First,
    FirstHat,
    Second,
    SecondHat,
    Sum,
    Difference,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductChord {
    pub name: String,
    pub family: ChordFamily,
    pub degree: i32,
    pub length: Length,
}

/// Chords of `Λ₁ ⊠ Λ₂` when every chord of `Λ₂` is shorter than every chord
/// of `Λ₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductInventory {
    pub first: ChordInventory,
    pub second: ChordInventory,
    pub epsilon: Length,
    pub chords: Vec<ProductChord>,
}

impl ProductInventory {
    pub fn family(&self, f: ChordFamily) -> impl Iterator<Item = &ProductChord> {
        self.chords.iter().filter(move |c| c.family == f)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.chords.iter().map(|c| c.degree).collect()
    }

    pub fn to_inventory(&self) -> ChordInventory {
        ChordInventory {
            chords: self
                .chords
                .iter()
                .map(|c| ChordRecord::new(c.name.clone(), c.degree, c.length.clone()))
                .collect(),
        }
    }
}

pub fn product_inventory(
    q1: &ChordInventory,
    q2_short: &ChordInventory,
    epsilon: &Length,
) -> Result<ProductInventory, ProductError> {
    if !epsilon.is_positive() {
        return Err(ProductError::NotInRegime(
            "the perturbation must be positive".into(),
        ));
    }
    if let (Some(long), Some(short)) = (q2_short.max_length(), q1.min_length()) {
        if long >= short {
            return Err(ProductError::NotInRegime(format!(
                "second-factor chord of length {long} is not shorter than first-factor chord of length {short}"
            )));
        }
    }
    let all: BTreeSet<&Length> = q1.lengths().chain(q2_short.lengths()).collect();
    let sorted: Vec<&Length> = all.into_iter().collect();
    if let Some(gap) = sorted.windows(2).map(|w| w[1].sub(w[0])).min() {
        if epsilon >= &gap {
            return Err(ProductError::NotInRegime(format!(
                "perturbation {epsilon} is not below the smallest length gap {gap}"
            )));
        }
    }

    let mut chords = Vec::new();
    let mut push = |name: String, family, degree, length| {
        chords.push(ProductChord {
            name,
            family,
            degree,
            length,
        })
    };
    for c in q1.chords() {
        push(
            c.name.clone(),
            ChordFamily::First,
            c.degree,
            c.length.clone(),
        );
        push(
            format!("{}^", c.name),
            ChordFamily::FirstHat,
            c.degree + 1,
            c.length.add(epsilon),
        );
    }
    for b in q2_short.chords() {
        push(
            b.name.clone(),
            ChordFamily::Second,
            b.degree,
            b.length.clone(),
        );
        push(
            format!("{}^", b.name),
            ChordFamily::SecondHat,
            b.degree + 1,
            b.length.add(epsilon),
        );
    }
    for a in q1.chords() {
        for b in q2_short.chords() {
            push(
                format!("{}+{}", a.name, b.name),
                ChordFamily::Sum,
                a.degree + b.degree + 1,
                a.length.add(&b.length),
            );
            push(
                format!("{}-{}", a.name, b.name),
                ChordFamily::Difference,
                a.degree - b.degree,
                a.length.sub(&b.length),
            );
        }
    }
    Ok(ProductInventory {
        first: q1.clone(),
        second: q2_short.clone(),
        epsilon: epsilon.clone(),
        chords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(pairs: &[(i32, &str)]) -> ChordInventory {
        ChordInventory::from_pairs(pairs).unwrap()
    }

    #[test]
    fn smaller_is_strict() {
        assert!(is_smaller(&inv(&[(1, "0.5")]), &inv(&[(1, "1")])).unwrap());
        assert!(!is_smaller(&inv(&[(1, "1")]), &inv(&[(1, "1")])).unwrap());
        assert_eq!(
            is_smaller(&inv(&[]), &inv(&[(1, "1")])),
            Err(ProductError::EmptyInventory)
        );
    }

    #[test]
    fn distinct_lengths() {
        assert!(!has_distinct_lengths(&inv(&[(1, "1")]), &inv(&[(1, "1")])));
        assert!(has_distinct_lengths(
            &inv(&[(1, "1")]),
            &inv(&[(0, "0.7"), (0, "1.3")])
        ));
    }

    #[test]
    fn rescaling() {
        let q = inv(&[(1, "1")]);
        assert_eq!(rescale(&q, 0.0).unwrap(), q);
        assert_eq!(rescale(&q, 2f64.ln()).unwrap(), inv(&[(1, "2")]));
    }

    #[test]
    fn size_verdicts() {
        let small = inv(&[(1, "0.5")]);
        let big = inv(&[(1, "10")]);
        assert_eq!(
            spun_reducibility(&small, &big).unwrap(),
            SpunVerdict::TwistSpunBySize
        );
        assert_eq!(
            spun_reducibility(&big, &small).unwrap(),
            SpunVerdict::TwistSpunBySize
        );
        let mixed = inv(&[(2, "0.5"), (1, "2")]);
        assert_eq!(
            spun_reducibility(&inv(&[(1, "1")]), &mixed).unwrap(),
            SpunVerdict::Undetermined
        );
    }

    #[test]
    fn product_table_shape() {
        let q1 = ChordInventory::new(vec![ChordRecord::new("a", 1, Length::one())]).unwrap();
        let q2 =
            ChordInventory::new(vec![ChordRecord::new("b", 4, "0.5".parse().unwrap())]).unwrap();
        let p = product_inventory(&q1, &q2, &"0.01".parse().unwrap()).unwrap();
        let got: Vec<(i32, String)> = p
            .chords
            .iter()
            .map(|c| (c.degree, c.length.to_string()))
            .collect();
        let want = [
            (1, "1"),
            (2, "1.01"),
            (4, "0.5"),
            (5, "0.51"),
            (6, "1.5"),
            (-3, "0.5"),
        ];
        assert_eq!(got, want.map(|(d, l)| (d, l.to_string())));
        let alone =
            product_inventory(&q1, &ChordInventory::default(), &"0.01".parse().unwrap()).unwrap();
        assert_eq!(alone.degrees(), vec![1, 2]);
    }

    #[test]
    fn regime_is_enforced() {
        let q1 = inv(&[(1, "1")]);
        assert!(product_inventory(&q1, &inv(&[(2, "1.5")]), &"0.01".parse().unwrap()).is_err());
        assert!(product_inventory(&q1, &inv(&[(2, "0.5")]), &"0.5".parse().unwrap()).is_err());
    }
}
