//! Faces of the projected curve, their signed areas and winding numbers.
//!
//! A dart is an edge with a direction of travel: dart `2e` runs along the knot
//! orientation, dart `2e + 1` against it. Faces are traced keeping the face on
//! the left, so every dart borders exactly one face on its left.

use std::collections::VecDeque;

use crate::algebra::Length;

use super::diagram::{DiagramError, DiagramFile, EndDir, LagrangianDiagram, Slot};

pub type Dart = usize;

pub fn dart(edge: usize, forward: bool) -> Dart {
    2 * edge + usize::from(!forward)
}

pub fn dart_edge(d: Dart) -> usize {
    d / 2
}

pub fn dart_forward(d: Dart) -> bool {
    d.is_multiple_of(2)
}

pub fn reverse(d: Dart) -> Dart {
    d ^ 1
}

/// The dart leaving through `slot`.
pub(crate) fn dart_from(file: &DiagramFile, s: Slot) -> Dart {
    let end = file.crossings[s.crossing].ends[s.slot];
    dart(end.0, end.1 == EndDir::Out)
}

/// Where a dart arrives.
pub(crate) fn dart_end(tail: &[Slot], head: &[Slot], d: Dart) -> Slot {
    if dart_forward(d) {
        head[dart_edge(d)]
    } else {
        tail[dart_edge(d)]
    }
}

#[derive(Clone, Debug)]
pub struct FaceStructure {
    cycles: Vec<Vec<Dart>>,
    left: Vec<usize>,
    corner_face: Vec<[usize; 4]>,
    areas: Vec<Length>,
    outer: usize,
    winding: Vec<i64>,
}

impl FaceStructure {
    pub(crate) fn build(file: &DiagramFile, tail: &[Slot], head: &[Slot]) -> Self {
        let nd = 2 * file.edges;
        let mut left = vec![usize::MAX; nd];
        let mut corner_face = vec![[usize::MAX; 4]; file.crossings.len()];
        let mut cycles = Vec::new();
        for start in 0..nd {
            if left[start] != usize::MAX {
                continue;
            }
            let f = cycles.len();
            let mut cycle = Vec::new();
            let mut d = start;
            while left[d] == usize::MAX {
                left[d] = f;
                cycle.push(d);
                let at = dart_end(tail, head, d);
                let q = (at.slot + 3) % 4;
                corner_face[at.crossing][q] = f;
                d = dart_from(
                    file,
                    Slot {
                        crossing: at.crossing,
                        slot: q,
                    },
                );
            }
            cycles.push(cycle);
        }
        FaceStructure {
            cycles,
            left,
            corner_face,
            areas: Vec::new(),
            outer: 0,
            winding: Vec::new(),
        }
    }

    /// Signed areas from the chord lengths; exactly one face (the unbounded
    /// one) may be negative, the rest must be positive.
    pub(crate) fn with_areas(mut self, file: &DiagramFile) -> Result<Self, DiagramError> {
        let mut areas = vec![Length::zero(); self.cycles.len()];
        for (ci, c) in file.crossings.iter().enumerate() {
            for q in 0..4 {
                let a = &mut areas[self.corner_face[ci][q]];
                *a = if c.positive_quadrant(q) {
                    a.add(&c.length)
                } else {
                    a.sub(&c.length)
                };
            }
        }
        let negative: Vec<usize> = (0..areas.len())
            .filter(|&f| !areas[f].is_positive())
            .collect();
        if negative.len() != 1 || areas[negative[0]] == Length::zero() {
            return Err(DiagramError::NotRealizable(format!(
                "signed face areas {} need exactly one negative face",
                areas
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        self.outer = negative[0];
        self.areas = areas;

        // Winding of the knot around each face: crossing a forward dart from
        // its right to its left raises the winding number by one.
        let mut winding = vec![None; self.cycles.len()];
        winding[self.outer] = Some(0i64);
        let mut queue = VecDeque::from([self.outer]);
        while let Some(f) = queue.pop_front() {
            let wf = winding[f].expect("queued faces are labelled");
            for &d in &self.cycles[f] {
                // `f` is left of `d`, so it is right of the reversed dart.
                let r = reverse(d);
                let g = self.left[r];
                let step = if dart_forward(r) { 1 } else { -1 };
                if winding[g].is_none() {
                    winding[g] = Some(wf + step);
                    queue.push_back(g);
                }
            }
        }
        self.winding = winding
            .into_iter()
            .map(|w| w.expect("dual graph is connected"))
            .collect();
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn cycle(&self, f: usize) -> &[Dart] {
        &self.cycles[f]
    }

    pub fn sides(&self, f: usize) -> usize {
        self.cycles[f].len()
    }

    pub fn left_of(&self, d: Dart) -> usize {
        self.left[d]
    }

    pub fn area(&self, f: usize) -> &Length {
        &self.areas[f]
    }

    /// Face containing quadrant `q` of crossing `c`.
    pub fn corner_face(&self, c: usize, q: usize) -> usize {
        self.corner_face[c][q]
    }

    pub fn winding(&self, f: usize) -> i64 {
        self.winding[f]
    }

    /// Whitney index: sum of face windings minus the mean winding around
    /// each crossing.
    pub(crate) fn rotation_number(&self, d: &LagrangianDiagram) -> i64 {
        let faces: i64 = (0..self.len())
            .filter(|&f| f != self.outer)
            .map(|f| self.winding[f])
            .sum();
        let crossings: i64 = (0..d.crossings().len())
            .map(|c| {
                (0..4)
                    .map(|q| self.winding[self.corner_face[c][q]])
                    .sum::<i64>()
                    / 4
            })
            .sum();
        faces - crossings
    }
}
