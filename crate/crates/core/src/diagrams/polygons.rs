//! Admissible immersed polygons and the combinatorial differential.
//!
//! A polygon is walked counterclockwise from its positive corner. At each
//! crossing the boundary either passes straight through or turns left into a
//! negative quadrant. Since every bounded face has positive area, the area
//! still to be covered gives a budget that bounds the walk.

use crate::algebra::{check_d_squared, Length};
use crate::algebra::{ChordGen, Coefficient, Dga, NCPoly, PrimeField, Word};

use super::diagram::{DiagramError, LagrangianDiagram, Slot};
use super::faces::{dart_edge, dart_end, dart_forward, dart_from, reverse, Dart};

/// Knobs for the polygon search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest face multiplicity a polygon may have before the search gives up.
    pub multiplicity_cap: i64,
    /// Largest number of search nodes per positive corner.
    pub max_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            multiplicity_cap: 4,
            max_nodes: 2_000_000,
        }
    }
}

/// An immersed polygon with one positive corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub positive: usize,
    pub quadrant: usize,
    /// Negative corners in counterclockwise order, as (crossing, quadrant).
    pub negatives: Vec<(usize, usize)>,
    pub darts: Vec<Dart>,
    pub mu: i32,
    pub negative_sign: bool,
    pub multiplicities: Vec<i64>,
}

impl Polygon {
    pub fn word(&self) -> Word {
        Word(self.negatives.iter().map(|&(c, _)| c as u32).collect())
    }
}

/// Orientation sign of a corner: at even-degree crossings the two quadrants
/// left of the oriented understrand count negatively.
pub fn corner_is_negative(d: &LagrangianDiagram, c: usize, q: usize) -> bool {
    let x = &d.crossings()[c];
    if x.degree.rem_euclid(2) == 1 {
        return false;
    }
    let u = x.under_out_slot();
    q == u || q == (u + 1) % 4
}

struct Walk<'a> {
    d: &'a LagrangianDiagram,
    limits: SearchLimits,
    cost: Vec<Option<Length>>,
    a: usize,
    i: usize,
    top: Length,
    darts: Vec<Dart>,
    negatives: Vec<(usize, usize)>,
    nodes: usize,
    found: Vec<Polygon>,
}

impl<'a> Walk<'a> {
    fn step(&mut self, at: Slot, spent: &Length) -> Result<(), DiagramError> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(DiagramError::Resource {
                what: "search-node",
                bound: self.limits.max_nodes,
            });
        }
        let (c, s) = (at.crossing, at.slot);
        if c == self.a && s == (self.i + 1) % 4 {
            if let Some(p) = self.close()? {
                self.found.push(p);
            }
        }
        let straight = dart_from(
            &self.d.file,
            Slot {
                crossing: c,
                slot: (s + 2) % 4,
            },
        );
        self.extend(straight, None, spent)?;
        let q = (s + 3) % 4;
        if !self.d.crossings()[c].positive_quadrant(q) {
            let turn = dart_from(
                &self.d.file,
                Slot {
                    crossing: c,
                    slot: q,
                },
            );
            self.extend(turn, Some((c, q)), spent)?;
        }
        Ok(())
    }

    fn extend(
        &mut self,
        dart: Dart,
        corner: Option<(usize, usize)>,
        spent: &Length,
    ) -> Result<(), DiagramError> {
        let Some(cost) = &self.cost[dart] else {
            return Ok(());
        };
        let mut next = spent.add(cost);
        if let Some((c, _)) = corner {
            next = next.add(&self.d.crossings()[c].length);
        }
        if next > self.top {
            return Ok(());
        }
        self.darts.push(dart);
        if let Some(k) = corner {
            self.negatives.push(k);
        }
        let at = dart_end(&self.d.tail, &self.d.head, dart);
        let r = self.step(at, &next);
        self.darts.pop();
        if corner.is_some() {
            self.negatives.pop();
        }
        r
    }

    /// Decide whether the closed walk bounds an immersed disc.
    fn close(&self) -> Result<Option<Polygon>, DiagramError> {
        let d = self.d;
        let fs = d.faces();
        let ne = d.num_edges();
        let mut t = vec![0i64; 2 * ne];
        for &x in &self.darts {
            t[x] += 1;
        }

        // Face multiplicities are winding numbers of the boundary.
        let mut n = vec![None; fs.len()];
        n[fs.outer()] = Some(0i64);
        let mut stack = vec![fs.outer()];
        while let Some(f) = stack.pop() {
            let nf = n[f].expect("stacked faces are labelled");
            for &x in fs.cycle(f) {
                let g = fs.left_of(reverse(x));
                let ng = nf - t[x] + t[reverse(x)];
                match n[g] {
                    None => {
                        n[g] = Some(ng);
                        stack.push(g);
                    }
                    Some(old) if old != ng => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        let n: Vec<i64> = n
            .into_iter()
            .map(|x| x.expect("dual graph is connected"))
            .collect();
        if n.iter().any(|&x| x < 0) {
            return Ok(None);
        }

        let mut chi: i64 = n.iter().sum();
        for e in 0..ne {
            let (fw, bw) = (2 * e, 2 * e + 1);
            let s_e = n[fs.left_of(fw)] - t[fw];
            if s_e < 0 || n[fs.left_of(bw)] - t[bw] != s_e {
                return Ok(None);
            }
            chi -= s_e + t[fw] + t[bw];
        }

        // Local sheet structure at each crossing.
        let nc = d.crossings().len();
        let mut cover = vec![[0i64; 4]; nc];
        let mut events = vec![0i64; nc];
        let m = self.darts.len();
        for k in 0..m {
            let at = dart_end(&d.tail, &d.head, self.darts[k]);
            let next = self.darts[(k + 1) % m];
            let (c, s) = (at.crossing, at.slot);
            events[c] += 1;
            cover[c][(s + 3) % 4] += 1;
            if dart_from(
                &d.file,
                Slot {
                    crossing: c,
                    slot: (s + 2) % 4,
                },
            ) == next
            {
                cover[c][(s + 2) % 4] += 1;
            }
        }
        for c in 0..nc {
            let nq = |q: usize| n[fs.corner_face(c, q)];
            let s_v = nq(0) - cover[c][0];
            if s_v < 0 || (1..4).any(|q| nq(q) - cover[c][q] != s_v) {
                return Ok(None);
            }
            chi += s_v + events[c];
        }
        if chi != 1 {
            return Ok(None);
        }

        let peak = n.iter().copied().max().unwrap_or(0);
        if peak > self.limits.multiplicity_cap {
            return Err(DiagramError::Resource {
                what: "corner-multiplicity",
                bound: self.limits.multiplicity_cap as usize,
            });
        }

        let base = d.base_point();
        let mu: i32 = self
            .darts
            .iter()
            .filter(|&&x| dart_edge(x) == base)
            .map(|&x| if dart_forward(x) { -1 } else { 1 })
            .sum();
        let negative_sign = std::iter::once((self.a, self.i))
            .chain(self.negatives.iter().copied())
            .filter(|&(c, q)| corner_is_negative(d, c, q))
            .count()
            % 2
            == 1;
        Ok(Some(Polygon {
            positive: self.a,
            quadrant: self.i,
            negatives: self.negatives.clone(),
            darts: self.darts.clone(),
            mu,
            negative_sign,
            multiplicities: n,
        }))
    }
}

/// All admissible polygons, grouped by positive corner in crossing order.
pub fn enumerate_polygons(
    d: &LagrangianDiagram,
    limits: SearchLimits,
) -> Result<Vec<Polygon>, DiagramError> {
    let fs = d.faces();
    let cost: Vec<Option<Length>> = (0..2 * d.num_edges())
        .map(|x| {
            let f = fs.left_of(x);
            (f != fs.outer()).then(|| fs.area(f).div_int(fs.sides(f) as i64))
        })
        .collect();
    let mut out = Vec::new();
    for (a, x) in d.crossings().iter().enumerate() {
        for i in (0..4).filter(|&q| x.positive_quadrant(q)) {
            let mut walk = Walk {
                d,
                limits,
                cost: cost.clone(),
                a,
                i,
                top: x.length.clone(),
                darts: Vec::new(),
                negatives: Vec::new(),
                nodes: 0,
                found: Vec::new(),
            };
            let first = dart_from(
                &d.file,
                Slot {
                    crossing: a,
                    slot: i,
                },
            );
            walk.extend(first, None, &Length::zero())?;
            out.append(&mut walk.found);
        }
    }
    Ok(out)
}

/// The Chekanov–Eliashberg DGA of the diagram with default search limits.
pub fn chekanov_dga(d: &LagrangianDiagram, field: PrimeField) -> Result<Dga, DiagramError> {
    chekanov_dga_with(d, field, SearchLimits::default())
}

pub fn chekanov_dga_with(
    d: &LagrangianDiagram,
    field: PrimeField,
    limits: SearchLimits,
) -> Result<Dga, DiagramError> {
    let polygons = enumerate_polygons(d, limits)?;
    let mut diff = vec![NCPoly::zero(field); d.crossings().len()];
    for p in &polygons {
        let c = if p.negative_sign { field.neg(1) } else { 1 };
        diff[p.positive].add_term(Coefficient::monomial(c, p.mu, 0), p.word());
    }
    let gens = d
        .crossings()
        .iter()
        .map(|x| ChordGen::new(x.name.clone(), x.degree, x.length.clone()))
        .collect();
    let rot = super::diagram::rotation_number(d) as i32;
    let dga = Dga::new(d.name(), field, gens, diff)
        .map_err(|e| DiagramError::Format(e.to_string()))?
        .with_maslov((-2 * rot, 0));
    if let Some(&g) = check_d_squared(&dga).first() {
        return Err(DiagramError::NotRealizable(format!(
            "polygon count gives d^2 != 0 at `{}`",
            dga.gen(g).name
        )));
    }
    Ok(dga)
}
