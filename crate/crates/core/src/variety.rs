//! Augmentation points over finite fields and the `{μ = −1}` containment test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Dga, PrimeField};
use crate::homology::{find_augmentations_bounded, HomologyError, DEFAULT_SEARCH_BOUND};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum VarietyError {
    #[error("q = {0} is not an odd prime")]
    BadField(u32),
    #[error("the zero polynomial has no locus")]
    ZeroPolynomial,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Integer Laurent polynomial in `μ, λ`, keyed by `(μ-exponent, λ-exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusPolynomial(BTreeMap<(i32, i32), i64>);

impl LocusPolynomial {
    pub fn new(terms: impl IntoIterator<Item = ((i32, i32), i64)>) -> Result<Self, VarietyError> {
        let mut m = BTreeMap::new();
        for (k, c) in terms {
            *m.entry(k).or_insert(0) += c;
        }
        m.retain(|_, c| *c != 0);
        if m.is_empty() {
            return Err(VarietyError::ZeroPolynomial);
        }
        Ok(LocusPolynomial(m))
    }

    pub fn terms(&self) -> &BTreeMap<(i32, i32), i64> {
        &self.0
    }

    pub fn mul(&self, other: &LocusPolynomial) -> LocusPolynomial {
        let mut m = BTreeMap::new();
        for (&(a, b), &c) in &self.0 {
            for (&(x, y), &d) in &other.0 {
                *m.entry((a + x, b + y)).or_insert(0) += c * d;
            }
        }
        LocusPolynomial::new(m).expect("product of nonzero integer polynomials is nonzero")
    }

    pub fn eval(&self, f: &PrimeField, mu: u32, lambda: u32) -> u32 {
        self.0.iter().fold(0, |acc, (&(i, j), &c)| {
            let c = f.reduce(c);
            let t = f.mul(
                c,
                f.mul(
                    f.pow(mu, i as i64).expect("nonzero"),
                    f.pow(lambda, j as i64).expect("nonzero"),
                ),
            );
            f.add(acc, t)
        })
    }
}

impl fmt::Display for LocusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (&(i, j), &c)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}[{i},{j}]")?;
        }
        Ok(())
    }
}

/// Sparse format `c[i,j] + c[i,j] + …`, where `c` is an integer.
impl FromStr for LocusPolynomial {
    type Err = VarietyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VarietyError::Parse(s.to_string());
        let mut terms = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let (c, rest) = part.split_once('[').ok_or_else(bad)?;
            let (i, j) = rest
                .strip_suffix(']')
                .and_then(|r| r.split_once(','))
                .ok_or_else(bad)?;
            let c: i64 = c.trim().parse().map_err(|_| bad())?;
            let i: i32 = i.trim().parse().map_err(|_| bad())?;
            let j: i32 = j.trim().parse().map_err(|_| bad())?;
            terms.push(((i, j), c));
        }
        LocusPolynomial::new(terms)
    }
}

/// Named polynomials: `poly:clifford`, `poly:chekanov` and `poly:line`.
pub fn catalog_polynomial(name: &str) -> Option<LocusPolynomial> {
    let terms: &[((i32, i32), i64)] = match name {
        "poly:clifford" => &[((0, 0), 1), ((0, 1), 1), ((1, 1), 1)],
        "poly:chekanov" => &[((0, 0), 1), ((0, 1), 1), ((1, 1), 2), ((2, 1), 1)],
        "poly:line" => &[((0, 0), 1), ((1, 0), 1)],
        _ => return None,
    };
    LocusPolynomial::new(terms.iter().copied()).ok()
}

pub const POLYNOMIAL_NAMES: [&str; 3] = ["poly:clifford", "poly:chekanov", "poly:line"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointSource {
    Dga(String),
    Polynomial(String),
}

/// Points of `(F_q^*)²`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusPointSet {
    pub q: u32,
    pub points: BTreeSet<(u32, u32)>,
    pub source: PointSource,
}

fn odd_field(q: u32) -> Result<PrimeField, VarietyError> {
    match PrimeField::new(q) {
        Ok(f) if q != 2 => Ok(f),
        _ => Err(VarietyError::BadField(q)),
    }
}

pub fn polynomial_locus(poly: &LocusPolynomial, q: u32) -> Result<TorusPointSet, VarietyError> {
    let f = odd_field(q)?;
    let points = f
        .units()
        .flat_map(|m| f.units().map(move |l| (m, l)))
        .filter(|&(m, l)| poly.eval(&f, m, l) == 0)
        .collect();
    Ok(TorusPointSet {
        q,
        points,
        source: PointSource::Polynomial(poly.to_string()),
    })
}

/// Points `(μ0, λ0)` at which `a` has an augmentation. `a` must already be
/// defined over `F_q`.
pub fn augmentation_points(a: &Dga, q: u32, graded: bool) -> Result<TorusPointSet, VarietyError> {
    let f = odd_field(q)?;
    let mut points = BTreeSet::new();
    for m in f.units() {
        for l in f.units() {
            if !find_augmentations_bounded(a, q, m, l, graded, DEFAULT_SEARCH_BOUND)?.is_empty() {
                points.insert((m, l));
            }
        }
    }
    Ok(TorusPointSet {
        q,
        points,
        source: PointSource::Dga(a.name().to_string()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Containment {
    Contained,
    NotContained { witness: (u32, u32) },
    Empty,
}

impl Containment {
    /// Whether the necessary condition for a twist spun holds. An empty set
    /// is vacuously inside the line.
    pub fn holds(&self) -> bool {
        !matches!(self, Containment::NotContained { .. })
    }
}

pub fn line_containment(s: &TorusPointSet) -> Containment {
    let minus_one = s.q - 1;
    if s.points.is_empty() {
        return Containment::Empty;
    }
    match s.points.iter().find(|p| p.0 != minus_one) {
        Some(&witness) => Containment::NotContained { witness },
        None => Containment::Contained,
    }
}

pub fn meets_line(s: &TorusPointSet) -> bool {
    s.points.iter().any(|p| p.0 == s.q - 1)
}

/// A primitive row `(a, b)` with `|a|, |b| ≤ bound` such that every point has
/// `μ0^a λ0^b = −1`, completing to a basis change of `H₁(T²)`. The scan is
/// bounded and finds nothing for an empty set.
pub fn basis_change_scan(s: &TorusPointSet, bound: i32) -> Option<(i32, i32)> {
    let f = PrimeField::new(s.q).ok()?;
    if s.points.is_empty() {
        return None;
    }
    let gcd = |mut a: i32, mut b: i32| {
        (a, b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut rows: Vec<(i32, i32)> = (-bound..=bound)
        .flat_map(|a| (-bound..=bound).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    rows.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a.abs(), b.abs(), a < 0, b < 0));
    rows.into_iter().find(|&(a, b)| {
        s.points.iter().all(|&(m, l)| {
            let v = f.mul(
                f.pow(m, a as i64).expect("unit"),
                f.pow(l, b as i64).expect("unit"),
            );
            v == s.q - 1
        })
    })
}
