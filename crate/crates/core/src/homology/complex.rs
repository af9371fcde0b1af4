//! Finite graded complexes over `F_p` and linearised chord complexes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Dga, PrimeField};

use super::augment::{evaluated_terms, Augmentation};
use super::linalg::Matrix;
use super::HomologyError;

/// Graded dimensions; degrees with dimension zero are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector(pub BTreeMap<i32, usize>);

impl BettiVector {
    pub fn from_pairs(pairs: &[(i32, usize)]) -> Self {
        let mut m = BTreeMap::new();
        for &(k, v) in pairs {
            if v > 0 {
                *m.entry(k).or_insert(0) += v;
            }
        }
        BettiVector(m)
    }

    pub fn get(&self, k: i32) -> usize {
        self.0.get(&k).copied().unwrap_or(0)
    }

    /// `self_k + other_{k−1}`: the homology of a cone of the zero map.
    pub fn shifted_sum(&self, other: &BettiVector) -> BettiVector {
        let mut out = self.0.clone();
        for (&k, &v) in &other.0 {
            *out.entry(k + 1).or_insert(0) += v;
        }
        BettiVector(out)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

/// Per-degree bases with differentials of degree −1. The matrix stored at
/// degree `k` maps degree `k` to degree `k − 1` (rows index degree `k − 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    field: PrimeField,
    basis: BTreeMap<i32, Vec<String>>,
    diff: BTreeMap<i32, Matrix>,
}

impl GradedComplex {
    /// Build a complex; missing matrices are zero. Fails if `d² ≠ 0` or a
    /// matrix has the wrong shape.
    pub fn new(
        field: PrimeField,
        basis: BTreeMap<i32, Vec<String>>,
        diff: BTreeMap<i32, Matrix>,
    ) -> Result<Self, HomologyError> {
        let c = GradedComplex { field, basis, diff };
        for (&k, m) in &c.diff {
            if m.rows != c.dim(k - 1) || m.cols != c.dim(k) {
                return Err(HomologyError::Mismatch(format!(
                    "differential at degree {k} has the wrong shape"
                )));
            }
        }
        for &k in c.diff.keys() {
            if !c.d(k - 1).mul(&field, &c.d(k)).is_zero() {
                return Err(HomologyError::NotAComplex { degree: k });
            }
        }
        Ok(c)
    }

    /// A complex with the given dimensions and named basis `e{k}_{i}`.
    pub fn from_dims(
        field: PrimeField,
        dims: &BTreeMap<i32, usize>,
        diff: BTreeMap<i32, Matrix>,
    ) -> Result<Self, HomologyError> {
        let basis = dims
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(&k, &n)| (k, (0..n).map(|i| format!("e{k}_{i}")).collect()))
            .collect();
        Self::new(field, basis, diff)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self, k: i32) -> usize {
        self.basis.get(&k).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.basis.iter().map(|(&k, b)| (k, b.len())).collect()
    }

    pub fn basis(&self, k: i32) -> &[String] {
        self.basis.get(&k).map_or(&[], Vec::as_slice)
    }

    /// Degrees carrying a nonzero space.
    pub fn support(&self) -> impl Iterator<Item = i32> + '_ {
        self.basis
            .iter()
            .filter(|(_, b)| !b.is_empty())
            .map(|(&k, _)| k)
    }

    /// The differential out of degree `k`.
    pub fn d(&self, k: i32) -> Matrix {
        self.diff
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(k - 1), self.dim(k)))
    }

    pub fn rank_d(&self, k: i32) -> usize {
        self.diff.get(&k).map_or(0, |m| m.rank(&self.field))
    }

    /// Kernel basis at degree `k`.
    pub fn cycles(&self, k: i32) -> Vec<Vec<u32>> {
        self.d(k).nullspace(&self.field)
    }
}

/// Homology dimensions by exact rank computation.
pub fn betti(c: &GradedComplex) -> BettiVector {
    let mut out = BTreeMap::new();
    for k in c.support() {
        let h = c.dim(k) - c.rank_d(k) - c.rank_d(k + 1);
        if h > 0 {
            out.insert(k, h);
        }
    }
    BettiVector(out)
}

/// The bilinearised chord complex of `a` for augmentations `e1` (applied to
/// letters before the kept one) and `e2` (after it).
pub fn linearise(
    a: &Dga,
    e1: &Augmentation,
    e2: &Augmentation,
) -> Result<GradedComplex, HomologyError> {
    let f = a.field();
    if e1.p != e2.p || e1.mu0 != e2.mu0 || e1.lambda0 != e2.lambda0 {
        return Err(HomologyError::Mismatch(
            "augmentations live over different points".into(),
        ));
    }
    if !e1.is_valid_for(a) || !e2.is_valid_for(a) {
        return Err(HomologyError::Mismatch(format!(
            "augmentation is not valid for `{}`",
            a.name()
        )));
    }
    let mut basis: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    let mut position = vec![0usize; a.len()];
    for g in a.ids() {
        let list = basis.entry(a.degree(g)).or_default();
        position[g as usize] = list.len();
        list.push(a.gen(g).name.clone());
    }
    let mut diff: BTreeMap<i32, Matrix> = BTreeMap::new();
    for x in a.ids() {
        let k = a.degree(x);
        for (c, w) in evaluated_terms(a.differential(x), e1.mu0, e1.lambda0)? {
            for (i, &y) in w.iter().enumerate() {
                let v = f.mul(c, f.mul(e1.word_value(&w[..i]), e2.word_value(&w[i + 1..])));
                if v == 0 {
                    continue;
                }
                if a.degree(y) != k - 1 {
                    return Err(HomologyError::Mismatch(format!(
                        "ungraded augmentation links `{}` to `{}`",
                        a.gen(x).name,
                        a.gen(y).name
                    )));
                }
                let rows = basis.get(&(k - 1)).map_or(0, Vec::len);
                let cols = basis[&k].len();
                diff.entry(k)
                    .or_insert_with(|| Matrix::zeros(rows, cols))
                    .add_to(&f, position[y as usize], position[x as usize], v);
            }
        }
    }
    GradedComplex::new(f, basis, diff)
}
