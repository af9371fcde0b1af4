//! Lagrangian-projection diagrams as 4-valent planar rotation systems.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Length;

use super::faces::FaceStructure;

pub const DIAGRAM_FORMAT: &str = "legendrian-lagrangian-diagram";
pub const DIAGRAM_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed diagram: {0}")]
    Format(String),
    #[error("unsupported diagram version {found} (expected {DIAGRAM_VERSION})")]
    Version { found: u32 },
    #[error("diagram has more than one component: the walk from the base point visits {reached} of {total} edges")]
    MultipleComponents { reached: usize, total: usize },
    #[error("rotation system is not planar: V - E + F = {v} - {e} + {f} != 2")]
    NonPlanar { v: usize, e: usize, f: usize },
    #[error("crossing `{0}` has non-positive length")]
    NonPositiveLength(String),
    #[error("no Legendrian lift: {0}")]
    NotRealizable(String),
    #[error("polygon search exceeded {what} bound {bound}")]
    Resource { what: &'static str, bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndDir {
    In,
    Out,
}

/// One half-edge at a crossing: the edge and whether it arrives or leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct End(pub usize, pub EndDir);

/// A double point of the projection.
///
/// `ends` lists the four half-edges counterclockwise. Ends 0 and 2 form one
/// strand, ends 1 and 3 the other; `over` names the strand (0 or 1) whose lift
/// has the larger `z`, and `length` is the height difference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub name: String,
    pub ends: [End; 4],
    pub over: u8,
    pub length: Length,
    pub degree: i32,
}

impl Crossing {
    /// Whether quadrant `q` (between ends `q` and `q+1`) is a Reeb-positive corner.
    pub fn positive_quadrant(&self, q: usize) -> bool {
        (q % 2) as u8 == self.over
    }

    /// Slot of the end of the under strand that leaves the crossing.
    pub fn under_out_slot(&self) -> usize {
        (0..4)
            .find(|&s| s % 2 != self.over as usize && self.ends[s].1 == EndDir::Out)
            .expect("validated crossing")
    }
}

/// The serialized diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub format: String,
    pub version: u32,
    pub name: String,
    pub edges: usize,
    pub base_point: usize,
    pub crossings: Vec<Crossing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Location of a half-edge: crossing index and slot `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub slot: usize,
}

/// A diagram that passed validation, with its face decomposition.
#[derive(Clone, Debug)]
pub struct LagrangianDiagram {
    pub(crate) file: DiagramFile,
    pub(crate) tail: Vec<Slot>,
    pub(crate) head: Vec<Slot>,
    pub(crate) faces: FaceStructure,
}

/// Summary produced by [`validate_diagram`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub name: String,
    pub crossings: usize,
    pub edges: usize,
    pub faces: usize,
    pub outer_face: usize,
    pub bounded_face_areas: Vec<Length>,
    pub rotation_number: i64,
}

impl DiagramFile {
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| DiagramError::Format(e.to_string()))?;
        match value.get("version").and_then(|v| v.as_u64()) {
            Some(v) if v as u32 != DIAGRAM_VERSION => {
                return Err(DiagramError::Version { found: v as u32 })
            }
            _ => {}
        }
        let file: DiagramFile =
            serde_json::from_value(value).map_err(|e| DiagramError::Format(e.to_string()))?;
        if file.format != DIAGRAM_FORMAT {
            return Err(DiagramError::Format(format!(
                "unknown format tag `{}`",
                file.format
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }
}

fn locate_ends(file: &DiagramFile) -> Result<(Vec<Slot>, Vec<Slot>), DiagramError> {
    let n = file.edges;
    let mut tail: Vec<Option<Slot>> = vec![None; n];
    let mut head: Vec<Option<Slot>> = vec![None; n];
    for (ci, c) in file.crossings.iter().enumerate() {
        if c.over > 1 {
            return Err(DiagramError::Format(format!(
                "crossing `{}`: over must be 0 or 1",
                c.name
            )));
        }
        for s in 0..2 {
            let (a, b) = (c.ends[s].1, c.ends[s + 2].1);
            if a == b {
                return Err(DiagramError::Format(format!(
                    "crossing `{}`: ends {s} and {} must be one incoming and one outgoing",
                    c.name,
                    s + 2
                )));
            }
        }
        for (s, &End(e, dir)) in c.ends.iter().enumerate() {
            if e >= n {
                return Err(DiagramError::Format(format!(
                    "crossing `{}` names edge {e} of {n}",
                    c.name
                )));
            }
            let table = match dir {
                EndDir::Out => &mut tail,
                EndDir::In => &mut head,
            };
            if table[e]
                .replace(Slot {
                    crossing: ci,
                    slot: s,
                })
                .is_some()
            {
                return Err(DiagramError::Format(format!(
                    "edge {e} has two {dir:?} ends"
                )));
            }
        }
    }
    let missing = |t: &[Option<Slot>]| t.iter().position(Option::is_none);
    if let Some(e) = missing(&tail).or_else(|| missing(&head)) {
        return Err(DiagramError::Format(format!(
            "edge {e} is not attached at both ends"
        )));
    }
    Ok((
        tail.into_iter().map(Option::unwrap).collect(),
        head.into_iter().map(Option::unwrap).collect(),
    ))
}

impl LagrangianDiagram {
    pub fn name(&self) -> &str {
        &self.file.name
    }

    pub fn file(&self) -> &DiagramFile {
        &self.file
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.file.crossings
    }

    pub fn num_edges(&self) -> usize {
        self.file.edges
    }

    pub fn base_point(&self) -> usize {
        self.file.base_point
    }

    pub fn faces(&self) -> &FaceStructure {
        &self.faces
    }

    /// The edge that follows `e` along the knot.
    pub fn next_edge(&self, e: usize) -> usize {
        let h = self.head[e];
        self.file.crossings[h.crossing].ends[(h.slot + 2) % 4].0
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> LagrangianDiagram {
        let mut file = self.file.clone();
        for c in &mut file.crossings {
            for end in &mut c.ends {
                end.1 = match end.1 {
                    EndDir::In => EndDir::Out,
                    EndDir::Out => EndDir::In,
                };
            }
        }
        validate(file).expect("reversal preserves validity")
    }
}

/// Check a diagram and build its face structure.
pub fn validate(file: DiagramFile) -> Result<LagrangianDiagram, DiagramError> {
    let n = file.edges;
    let v = file.crossings.len();
    if v == 0 || n != 2 * v {
        return Err(DiagramError::Format(format!(
            "{v} crossings need {} edges, found {n}",
            2 * v
        )));
    }
    if file.base_point >= n {
        return Err(DiagramError::Format(format!(
            "base point edge {} out of range",
            file.base_point
        )));
    }
    let mut names = BTreeSet::new();
    for c in &file.crossings {
        if !names.insert(c.name.as_str()) {
            return Err(DiagramError::Format(format!(
                "duplicate crossing name `{}`",
                c.name
            )));
        }
        if !c.length.is_positive() {
            return Err(DiagramError::NonPositiveLength(c.name.clone()));
        }
    }
    let (tail, head) = locate_ends(&file)?;

    let mut seen = vec![false; n];
    let mut e = file.base_point;
    let mut reached = 0;
    while !seen[e] {
        seen[e] = true;
        reached += 1;
        let h = head[e];
        e = file.crossings[h.crossing].ends[(h.slot + 2) % 4].0;
    }
    if reached != n {
        return Err(DiagramError::MultipleComponents { reached, total: n });
    }

    let faces = FaceStructure::build(&file, &tail, &head);
    if v + faces.len() != n + 2 {
        return Err(DiagramError::NonPlanar {
            v,
            e: n,
            f: faces.len(),
        });
    }
    let faces = faces.with_areas(&file)?;
    Ok(LagrangianDiagram {
        file,
        tail,
        head,
        faces,
    })
}

/// Validate and summarize a diagram.
pub fn validate_diagram(file: &DiagramFile) -> Result<ValidationReport, DiagramError> {
    let d = validate(file.clone())?;
    let bounded_face_areas = (0..d.faces.len())
        .filter(|&f| f != d.faces.outer())
        .map(|f| d.faces.area(f).clone())
        .collect();
    Ok(ValidationReport {
        name: d.file.name.clone(),
        crossings: d.file.crossings.len(),
        edges: d.file.edges,
        faces: d.faces.len(),
        outer_face: d.faces.outer(),
        bounded_face_areas,
        rotation_number: d.faces.rotation_number(&d),
    })
}

/// Whitney index of the projected curve.
pub fn rotation_number(d: &LagrangianDiagram) -> i64 {
    d.faces.rotation_number(d)
}
