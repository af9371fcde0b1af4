//! Versioned JSON form of a DGA.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_action_law, check_d_squared, check_degree_law, ChordGen, CoefMonomial, Coefficient, Dga,
    NCPoly, PrimeField, Word,
};
use crate::spun::SpunProvenance;

pub const DGA_FORMAT: &str = "legendrian-dga";
pub const DGA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum DgaFileError {
    #[error("malformed DGA file: {0}")]
    Format(String),
    #[error("DGA file version {found} is not supported (expected {DGA_VERSION})")]
    Version { found: u32 },
    #[error("verification failed: {0}")]
    Verification(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Diagram { name: String },
    Catalog { entry: String },
    Spun(SpunProvenance),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    /// Signed representative of the coefficient.
    pub c: i64,
    pub mu: i32,
    pub lambda: i32,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialRecord {
    pub generator: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DgaFile {
    pub format: String,
    pub version: u32,
    pub name: String,
    pub characteristic: u32,
    /// Degree contributions of `μ` and `λ`.
    pub maslov: (i32, i32),
    pub generators: Vec<ChordGen>,
    pub differential: Vec<DifferentialRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    /// False when the file was written or loaded without checks.
    pub verified: bool,
}

fn signed(c: u32, p: u32) -> i64 {
    if c > p / 2 {
        c as i64 - p as i64
    } else {
        c as i64
    }
}

impl DgaFile {
    pub fn from_dga(a: &Dga, provenance: Option<Provenance>, verified: bool) -> Self {
        let p = a.field().characteristic();
        let name_of = |w: &Word| w.letters().iter().map(|&g| a.gen(g).name.clone()).collect();
        DgaFile {
            format: DGA_FORMAT.into(),
            version: DGA_VERSION,
            name: a.name().into(),
            characteristic: p,
            maslov: a.maslov(),
            generators: a.gens().to_vec(),
            differential: a
                .ids()
                .map(|g| DifferentialRecord {
                    generator: a.gen(g).name.clone(),
                    terms: a
                        .differential(g)
                        .flat_terms()
                        .into_iter()
                        .map(|(m, w)| TermRecord {
                            c: signed(m.c, p),
                            mu: m.mu,
                            lambda: m.lambda,
                            word: name_of(&w),
                        })
                        .collect(),
                })
                .collect(),
            provenance,
            verified,
        }
    }

    /// Rebuild the algebra; generators missing from the differential table
    /// are cycles.
    pub fn to_dga(&self) -> Result<Dga, DgaFileError> {
        let fmt = |e: &dyn std::fmt::Display| DgaFileError::Format(e.to_string());
        let f = PrimeField::new(self.characteristic).map_err(|e| fmt(&e))?;
        let index = |n: &str| {
            self.generators
                .iter()
                .position(|g| g.name == n)
                .map(|i| i as u32)
                .ok_or_else(|| DgaFileError::Format(format!("unknown generator `{n}`")))
        };
        let mut diffs = vec![NCPoly::zero(f); self.generators.len()];
        let mut seen = vec![false; self.generators.len()];
        for rec in &self.differential {
            let g = index(&rec.generator)? as usize;
            if std::mem::replace(&mut seen[g], true) {
                return Err(DgaFileError::Format(format!(
                    "`{}` has two differentials",
                    rec.generator
                )));
            }
            for t in &rec.terms {
                let word = Word(t.word.iter().map(|n| index(n)).collect::<Result<_, _>>()?);
                let c = Coefficient::from_monomials(
                    &f,
                    [CoefMonomial {
                        c: f.reduce(t.c),
                        mu: t.mu,
                        lambda: t.lambda,
                    }],
                );
                diffs[g].add_term(c, word);
            }
        }
        let a =
            Dga::new(self.name.clone(), f, self.generators.clone(), diffs).map_err(|e| fmt(&e))?;
        Ok(a.with_maslov(self.maslov))
    }

    pub fn from_json(text: &str) -> Result<Self, DgaFileError> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| DgaFileError::Format(e.to_string()))?;
        if v.get("format").and_then(|f| f.as_str()) != Some(DGA_FORMAT) {
            return Err(DgaFileError::Format(format!(
                "expected format `{DGA_FORMAT}`"
            )));
        }
        match v.get("version").and_then(|x| x.as_u64()) {
            Some(n) if n == DGA_VERSION as u64 => {}
            Some(n) => return Err(DgaFileError::Version { found: n as u32 }),
            None => return Err(DgaFileError::Format("missing version".into())),
        }
        serde_json::from_value(v).map_err(|e| DgaFileError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("DGA files serialize");
        s.push('\n');
        s
    }
}

/// Every law a loaded algebra must satisfy, as human-readable problems.
pub fn verify(a: &Dga) -> Vec<String> {
    let mut out: Vec<String> = check_d_squared(a)
        .into_iter()
        .map(|g| format!("d^2 != 0 on `{}`", a.gen(g).name))
        .collect();
    for v in check_degree_law(a) {
        out.push(format!(
            "degree law fails on `{}`: {}",
            a.gen(v.generator).name,
            v.detail
        ));
    }
    for v in check_action_law(a) {
        out.push(format!(
            "action law fails on `{}`: {}",
            a.gen(v.generator).name,
            v.detail
        ));
    }
    out
}

/// Parse and, unless `no_verify`, check every law.
pub fn load_dga(text: &str, no_verify: bool) -> Result<(Dga, DgaFile), DgaFileError> {
    let file = DgaFile::from_json(text)?;
    let a = file.to_dga()?;
    if !no_verify {
        let problems = verify(&a);
        if !problems.is_empty() {
            return Err(DgaFileError::Verification(problems.join("; ")));
        }
    }
    Ok((a, file))
}

pub fn save_dga(a: &Dga, provenance: Option<Provenance>, verified: bool) -> String {
    DgaFile::from_dga(a, provenance, verified).to_json()
}
