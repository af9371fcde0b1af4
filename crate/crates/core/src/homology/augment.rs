//! Exhaustive augmentation search over a prime field.

use serde::{Deserialize, Serialize};

use crate::algebra::{Dga, GenId, NCPoly, PrimeField};

use super::HomologyError;

/// A unital DGA map to `F_p` at a fixed coefficient point `(μ0, λ0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Augmentation {
    pub p: u32,
    pub mu0: u32,
    pub lambda0: u32,
    pub graded: bool,
    /// Value on each generator, in generator order.
    pub values: Vec<u32>,
}

impl Augmentation {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("augmentations carry a prime")
    }

    /// Value on a word: the product of the letter values.
    pub fn word_value(&self, letters: &[GenId]) -> u32 {
        let f = self.field();
        letters
            .iter()
            .fold(1, |acc, &g| f.mul(acc, self.values[g as usize]))
    }

    /// Restriction to the first `n` generators.
    pub fn restrict(&self, n: usize) -> Augmentation {
        Augmentation {
            values: self.values[..n].to_vec(),
            ..self.clone()
        }
    }

    /// Whether `ε∘∂ = 0` on every generator of `a` (and grading, if flagged).
    pub fn is_valid_for(&self, a: &Dga) -> bool {
        if a.field().characteristic() != self.p || a.len() != self.values.len() {
            return false;
        }
        if self.graded
            && a.ids()
                .any(|g| a.degree(g) != 0 && self.values[g as usize] != 0)
        {
            return false;
        }
        match EvaluatedDifferential::new(a, self.mu0, self.lambda0) {
            Ok(ev) => ev.kills(&self.values),
            Err(_) => false,
        }
    }
}

/// Differentials with the coefficient variables substituted.
pub(crate) struct EvaluatedDifferential {
    field: PrimeField,
    rows: Vec<Vec<(u32, Vec<GenId>)>>,
}

impl EvaluatedDifferential {
    pub(crate) fn new(a: &Dga, mu0: u32, lambda0: u32) -> Result<Self, HomologyError> {
        let f = a.field();
        let rows = a
            .ids()
            .map(|g| evaluated_terms(a.differential(g), mu0, lambda0))
            .collect::<Result<_, _>>()?;
        Ok(EvaluatedDifferential { field: f, rows })
    }

    fn value(&self, g: usize, values: &[u32]) -> u32 {
        let f = self.field;
        self.rows[g].iter().fold(0, |acc, (c, w)| {
            let t = w.iter().fold(*c, |t, &x| f.mul(t, values[x as usize]));
            f.add(acc, t)
        })
    }

    fn kills(&self, values: &[u32]) -> bool {
        (0..self.rows.len()).all(|g| self.value(g, values) == 0)
    }
}

pub(crate) fn evaluated_terms(
    p: &NCPoly,
    mu0: u32,
    lambda0: u32,
) -> Result<Vec<(u32, Vec<GenId>)>, HomologyError> {
    let ev = p
        .eval_coefficients(mu0, lambda0)
        .map_err(|_| HomologyError::InvalidPoint {
            mu: mu0,
            lambda: lambda0,
        })?;
    Ok(ev
        .terms()
        .map(|(w, c)| {
            (
                c.as_constant()
                    .expect("evaluated coefficients are constants"),
                w.letters().to_vec(),
            )
        })
        .collect())
}

/// Default bound on the number of candidate assignments.
pub const DEFAULT_SEARCH_BOUND: u64 = 1 << 22;

/// Number of assignments allowed by grading alone: `p^(#degree-0 generators)`.
pub fn graded_candidates_by_degree(degrees: &[i32], p: u32) -> u128 {
    let zeros = degrees.iter().filter(|&&d| d == 0).count() as u32;
    (p as u128).pow(zeros)
}

pub fn find_augmentations(
    a: &Dga,
    p: u32,
    mu0: u32,
    lambda0: u32,
    graded: bool,
) -> Result<Vec<Augmentation>, HomologyError> {
    find_augmentations_bounded(a, p, mu0, lambda0, graded, DEFAULT_SEARCH_BOUND)
}

/// All augmentations in lexicographic order of their values; fails with a
/// resource error when more than `bound` assignments would be tried.
pub fn find_augmentations_bounded(
    a: &Dga,
    p: u32,
    mu0: u32,
    lambda0: u32,
    graded: bool,
    bound: u64,
) -> Result<Vec<Augmentation>, HomologyError> {
    let f = a.field();
    if f.characteristic() != p {
        return Err(HomologyError::Mismatch(format!(
            "DGA is over F_{} but augmentations over F_{p} were requested",
            f.characteristic()
        )));
    }
    if mu0.is_multiple_of(p) || lambda0.is_multiple_of(p) {
        return Err(HomologyError::InvalidPoint {
            mu: mu0,
            lambda: lambda0,
        });
    }
    let (mu0, lambda0) = (mu0 % p, lambda0 % p);
    let free: Vec<usize> = a
        .ids()
        .filter(|&g| !graded || a.degree(g) == 0)
        .map(|g| g as usize)
        .collect();
    let needed = (p as u128)
        .checked_pow(free.len() as u32)
        .unwrap_or(u128::MAX);
    if needed > bound as u128 {
        return Err(HomologyError::Resource {
            what: "augmentation candidates",
            bound,
            needed,
        });
    }
    let ev = EvaluatedDifferential::new(a, mu0, lambda0)?;
    let mut values = vec![0u32; a.len()];
    let mut out = Vec::new();
    loop {
        if ev.kills(&values) {
            out.push(Augmentation {
                p,
                mu0,
                lambda0,
                graded,
                values: values.clone(),
            });
        }
        // Odometer with the last free generator varying fastest.
        let mut k = free.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            let g = free[k];
            values[g] += 1;
            if values[g] < p {
                break;
            }
            values[g] = 0;
        }
    }
}
