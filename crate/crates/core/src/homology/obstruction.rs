//! The exactness obstruction for products `Λ₁ ⊠ Λ₂^{2r}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::products::{ChordFamily, ProductInventory};

use super::augment::graded_candidates_by_degree;
use super::cone::{cone_feasible, Feasibility};
use super::HomologyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NotTwistSpun,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub r: u32,
    pub degrees: Vec<i32>,
    pub graded_candidates: u128,
    pub assumptions: Vec<String>,
    /// Dimensions forced by degree reasons alone, over `[min − 1, 0]`.
    pub forced: BTreeMap<i32, usize>,
    /// The part of `forced` fed to the feasibility test.
    pub window: BTreeMap<i32, usize>,
    pub feasibility: Feasibility,
    pub verdict: Verdict,
    pub caveat: String,
}

/// Degrees in `[min − 1, 0]` whose homology dimension is determined by the
/// chord degrees alone. A degree with no chords has dimension 0; one whose
/// two neighbours carry no chords has dimension equal to its chord count.
/// Anything else is left out.
pub fn forced_window(degrees: &[i32]) -> BTreeMap<i32, usize> {
    let mut count: BTreeMap<i32, usize> = BTreeMap::new();
    for &d in degrees {
        *count.entry(d).or_insert(0) += 1;
    }
    let n = |k: i32| count.get(&k).copied().unwrap_or(0);
    let Some(&lo) = count.keys().next() else {
        return BTreeMap::new();
    };
    let mut out = BTreeMap::new();
    for k in (lo - 1).min(0)..=0 {
        if n(k) == 0 {
            out.insert(k, 0);
        } else if n(k - 1) == 0 && n(k + 1) == 0 {
            out.insert(k, n(k));
        }
    }
    out
}

fn expected_degrees(r: u32) -> Vec<i32> {
    let r = r as i32;
    let mut d = vec![1, 2, 2 * r, 2 * r + 1, 2 * r + 2, 1 - 2 * r];
    d.sort_unstable();
    d
}

/// Run the obstruction on the product inventory for `Λ₁ ⊠ Λ₂^{2r}` with a
/// single first-factor chord.
pub fn not_twist_spun_report(
    inv: &ProductInventory,
    r: u32,
) -> Result<ObstructionReport, HomologyError> {
    if r == 0 {
        return Err(HomologyError::Unsupported(
            "r = 0 has a degree-0 chord and needs the full differential".into(),
        ));
    }
    let mut degrees = inv.degrees();
    degrees.sort_unstable();
    let shape_ok = inv.family(ChordFamily::First).count() == 1
        && inv.family(ChordFamily::Second).count() == 1
        && degrees == expected_degrees(r);
    if !shape_ok {
        return Err(HomologyError::NotInRegime(format!(
            "inventory degrees {degrees:?} do not match the product table for r = {r}"
        )));
    }
    let graded_candidates = graded_candidates_by_degree(&degrees, 2);
    let forced = forced_window(&degrees);
    let k = 1 - 2 * r as i32;
    let window: BTreeMap<i32, usize> = (k - 1..=k + 1)
        .map(|d| forced.get(&d).map(|&v| (d, v)))
        .collect::<Option<_>>()
        .ok_or_else(|| HomologyError::NotInRegime(format!("degrees around {k} are not forced")))?;
    let feasibility = cone_feasible(&window)?;
    let mut assumptions = vec![
        "the product admits an augmentation, induced by an exact Lagrangian filling".to_string(),
        "linearised homology of a twist spun is the homology of a cone of a chain map between complexes with equal homology".to_string(),
    ];
    if graded_candidates == 1 {
        assumptions.push("no degree-0 chords, so the graded augmentation is unique".into());
    }
    let verdict = if graded_candidates == 1 && !feasibility.is_feasible() {
        Verdict::NotTwistSpun
    } else {
        Verdict::Inconclusive
    };
    Ok(ObstructionReport {
        r,
        degrees,
        graded_candidates,
        assumptions,
        forced,
        window,
        feasibility,
        verdict,
        caveat:
            "uniqueness is checked as a map; uniqueness up to DG-homotopy is not decided in general"
                .into(),
    })
}
