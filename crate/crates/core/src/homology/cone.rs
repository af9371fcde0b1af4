//! Chain maps, mapping cones and the exactness feasibility test.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::complex::GradedComplex;
use super::linalg::Matrix;
use super::HomologyError;

/// A degree-preserving map; the matrix at degree `k` sends `source_k` to `target_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: GradedComplex,
    pub target: GradedComplex,
    maps: BTreeMap<i32, Matrix>,
}

impl ChainMap {
    pub fn new(
        source: GradedComplex,
        target: GradedComplex,
        maps: BTreeMap<i32, Matrix>,
    ) -> Result<Self, HomologyError> {
        if source.field() != target.field() {
            return Err(HomologyError::Mismatch(
                "source and target fields differ".into(),
            ));
        }
        for (&k, m) in &maps {
            if m.rows != target.dim(k) || m.cols != source.dim(k) {
                return Err(HomologyError::Mismatch(format!(
                    "chain map at degree {k} has the wrong shape"
                )));
            }
        }
        Ok(ChainMap {
            source,
            target,
            maps,
        })
    }

    pub fn zero(source: GradedComplex, target: GradedComplex) -> Self {
        ChainMap {
            source,
            target,
            maps: BTreeMap::new(),
        }
    }

    pub fn at(&self, k: i32) -> Matrix {
        self.maps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.target.dim(k), self.source.dim(k)))
    }

    fn degrees(&self) -> Vec<i32> {
        let mut ks: Vec<i32> = self.source.support().chain(self.target.support()).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    /// First degree where `d ψ ≠ ψ d`, if any.
    pub fn failure(&self) -> Option<i32> {
        let f = self.source.field();
        self.degrees().into_iter().find(|&k| {
            let lhs = self.target.d(k).mul(&f, &self.at(k));
            let rhs = self.at(k - 1).mul(&f, &self.source.d(k));
            lhs != rhs
        })
    }
}

/// `Cone_k = target_k ⊕ source_{k−1}` with `d(t, s) = (d t + ψ s, −d s)`.
pub fn mapping_cone(psi: &ChainMap) -> Result<GradedComplex, HomologyError> {
    if let Some(degree) = psi.failure() {
        return Err(HomologyError::NotAChainMap { degree });
    }
    let f = psi.source.field();
    let (s, t) = (&psi.source, &psi.target);
    let mut dims = BTreeMap::new();
    for k in t.support() {
        *dims.entry(k).or_insert(0) += t.dim(k);
    }
    for k in s.support() {
        *dims.entry(k + 1).or_insert(0) += s.dim(k);
    }
    let dim = |k: i32| dims.get(&k).copied().unwrap_or(0);
    let mut diff = BTreeMap::new();
    for &k in dims.keys() {
        let mut m = Matrix::zeros(dim(k - 1), dim(k));
        let (dt, ds, p) = (t.d(k), s.d(k - 1).neg(&f), psi.at(k - 1));
        let (tk, tk1) = (t.dim(k), t.dim(k - 1));
        for i in 0..dt.rows {
            for j in 0..dt.cols {
                m.set(i, j, dt.get(i, j));
            }
        }
        for i in 0..p.rows {
            for j in 0..p.cols {
                m.set(i, tk + j, p.get(i, j));
            }
        }
        for i in 0..ds.rows {
            for j in 0..ds.cols {
                m.set(tk1 + i, tk + j, ds.get(i, j));
            }
        }
        if !m.is_zero() {
            diff.insert(k, m);
        }
    }
    GradedComplex::from_dims(f, &dims, diff)
}

/// One step of the downward recurrence `d_{k−1} = cone_k − d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceStep {
    pub degree: i32,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Feasibility {
    /// Nonnegative `d_k` on `[m − 1, M]` matching every window entry.
    Feasible { witness: BTreeMap<i32, i64> },
    /// Starting from the least admissible top value, the recurrence is
    /// forced below zero at `first_negative`.
    Infeasible {
        top: i64,
        steps: Vec<RecurrenceStep>,
        first_negative: i32,
    },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }
}

/// Decide whether `cone_k = d_k + d_{k−1}` has a solution in nonnegative
/// integers, where `d_k` is the common dimension of `ker ψ_*` and `coker ψ_*`
/// in degree `k` for a chain map between complexes with equal homology.
pub fn cone_feasible(window: &BTreeMap<i32, usize>) -> Result<Feasibility, HomologyError> {
    let (Some(&m), Some(&top)) = (window.keys().next(), window.keys().next_back()) else {
        return Err(HomologyError::Format("empty window".into()));
    };
    if (top - m + 1) as usize != window.len() {
        return Err(HomologyError::Format(format!(
            "window over [{m}, {top}] is not contiguous"
        )));
    }
    // d_k = c_k + s_k·t with t = d_top.
    let mut affine = vec![(top, 0i64, 1i64)];
    let (mut c, mut s) = (0i64, 1i64);
    for k in (m..=top).rev() {
        c = window[&k] as i64 - c;
        s = -s;
        affine.push((k - 1, c, s));
    }
    let lower = affine
        .iter()
        .filter(|a| a.2 > 0)
        .map(|a| -a.1)
        .max()
        .unwrap_or(0)
        .max(0);
    let upper = affine.iter().filter(|a| a.2 < 0).map(|a| a.1).min();
    let values = |t: i64| affine.iter().map(move |&(k, c, s)| (k, c + s * t));
    match upper {
        Some(u) if u < lower => {
            let steps: Vec<RecurrenceStep> = values(lower)
                .map(|(degree, value)| RecurrenceStep { degree, value })
                .collect();
            let first_negative = steps
                .iter()
                .find(|st| st.value < 0)
                .expect("infeasible has a negative")
                .degree;
            Ok(Feasibility::Infeasible {
                top: lower,
                steps,
                first_negative,
            })
        }
        _ => Ok(Feasibility::Feasible {
            witness: values(lower).collect(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(pairs: &[(i32, usize)]) -> BTreeMap<i32, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn r2_window_is_infeasible_at_minus_five() {
        match cone_feasible(&w(&[(-2, 0), (-3, 1), (-4, 0)])).unwrap() {
            Feasibility::Infeasible {
                first_negative,
                steps,
                ..
            } => {
                assert_eq!(first_negative, -5);
                let vals: Vec<i64> = steps.iter().map(|s| s.value).collect();
                assert_eq!(vals, vec![0, 0, 1, -1]);
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn spun_unknot_window_is_feasible() {
        let r = cone_feasible(&w(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(
            r,
            Feasibility::Feasible {
                witness: BTreeMap::from([(2, 0), (1, 1), (0, 0)])
            }
        );
    }

    #[test]
    fn centred_window_is_infeasible() {
        assert!(!cone_feasible(&w(&[(-1, 0), (0, 1), (1, 0)]))
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn gaps_are_rejected() {
        assert!(cone_feasible(&w(&[(0, 1), (2, 1)])).is_err());
        assert!(cone_feasible(&BTreeMap::new()).is_err());
    }
}
