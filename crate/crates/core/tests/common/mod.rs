#![allow(dead_code)]

use std::collections::BTreeMap;

use legendrian::algebra::{DgaMorphism, PrimeField};
use legendrian::catalog::catalog_entry;
use legendrian::homology::{ChainMap, GradedComplex, Matrix};
use legendrian::spun::{elementary_endomorphisms, twist_spun_dga, SpunDga, SpunOptions};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn random_matrix(rng: &mut impl Rng, p: u32, rows: usize, cols: usize) -> Matrix {
    let data: Vec<Vec<u32>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    if rows == 0 {
        Matrix::zeros(0, cols)
    } else {
        Matrix::from_rows(&data)
    }
}

/// Inverse by elimination on `[g | I]`, or `None` when singular.
pub fn inverse(fld: &PrimeField, g: &Matrix) -> Option<Matrix> {
    let n = g.rows;
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let (r, pivots) = g.hcat(&Matrix::identity(n)).rref(fld);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, r.get(i, n + j));
        }
    }
    Some(out)
}

fn random_invertible(rng: &mut impl Rng, fld: &PrimeField, n: usize) -> (Matrix, Matrix) {
    loop {
        let g = random_matrix(rng, fld.characteristic(), n, n);
        if let Some(h) = inverse(fld, &g) {
            return (g, h);
        }
    }
}

/// Shape of a canonical complex: per degree, the number of homology classes
/// and the number of pairs `u → v` with `u` in this degree.
#[derive(Clone, Debug)]
pub struct Shape {
    pub classes: BTreeMap<i32, usize>,
    pub pairs: BTreeMap<i32, usize>,
}

impl Shape {
    /// Basis order in degree `k`: classes, then tops `u` of pairs starting in
    /// `k`, then bottoms `v` of pairs starting in `k + 1`.
    pub fn dim(&self, k: i32) -> usize {
        self.classes.get(&k).copied().unwrap_or(0)
            + self.pairs.get(&k).copied().unwrap_or(0)
            + self.pairs.get(&(k + 1)).copied().unwrap_or(0)
    }

    fn n(&self, m: &BTreeMap<i32, usize>, k: i32) -> usize {
        m.get(&k).copied().unwrap_or(0)
    }

    fn dims(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for k in -4..=4 {
            if self.dim(k) > 0 {
                out.insert(k, self.dim(k));
            }
        }
        out
    }

    pub fn random(rng: &mut impl Rng, max_dim: usize) -> Shape {
        loop {
            let mut classes = BTreeMap::new();
            let mut pairs = BTreeMap::new();
            for k in -3..=3 {
                let c = rng.gen_range(0..=2usize);
                if c > 0 {
                    classes.insert(k, c);
                }
                if k > -3 {
                    let pr = rng.gen_range(0..=2usize);
                    if pr > 0 {
                        pairs.insert(k, pr);
                    }
                }
            }
            let s = Shape { classes, pairs };
            if (-3..=3).all(|k| s.dim(k) <= max_dim) {
                return s;
            }
        }
    }

    /// The canonical differential: `u_i ↦ v_i`.
    fn canonical(&self, fld: PrimeField) -> GradedComplex {
        let mut diff = BTreeMap::new();
        for (&k, &n) in &self.pairs {
            let mut m = Matrix::zeros(self.dim(k - 1), self.dim(k));
            let top0 = self.n(&self.classes, k);
            let bot0 = self.n(&self.classes, k - 1) + self.n(&self.pairs, k - 1);
            for i in 0..n {
                m.set(bot0 + i, top0 + i, 1);
            }
            diff.insert(k, m);
        }
        GradedComplex::from_dims(fld, &self.dims(), diff).unwrap()
    }
}

/// Conjugate every degree by a random invertible matrix. Returns the new
/// complex and the per-degree inverses `g⁻¹` used.
fn conjugate(
    rng: &mut impl Rng,
    c: &GradedComplex,
) -> (GradedComplex, BTreeMap<i32, (Matrix, Matrix)>) {
    let fld = c.field();
    let gs: BTreeMap<i32, (Matrix, Matrix)> = (-5..=5)
        .map(|k| (k, random_invertible(rng, &fld, c.dim(k))))
        .collect();
    let mut diff = BTreeMap::new();
    for k in -4..=4 {
        let d = c.d(k);
        if d.rows * d.cols == 0 {
            continue;
        }
        let m = gs[&(k - 1)].0.mul(&fld, &d).mul(&fld, &gs[&k].1);
        if !m.is_zero() {
            diff.insert(k, m);
        }
    }
    (GradedComplex::from_dims(fld, &c.dims(), diff).unwrap(), gs)
}

/// A random chain map between random complexes over `F_p`.
pub fn random_chain_map(rng: &mut impl Rng, p: u32) -> ChainMap {
    let fld = f(p);
    let sa = Shape::random(rng, 4);
    let sb = Shape::random(rng, 4);
    let (b, _) = conjugate(rng, &sb.canonical(fld));
    let a0 = sa.canonical(fld);
    // On the canonical source: classes go to random cycles, tops `u` to
    // random vectors `x`, bottoms `v = d u` to `d x`.
    let mut maps: BTreeMap<i32, Matrix> = BTreeMap::new();
    let mut tops: BTreeMap<i32, Vec<Vec<u32>>> = BTreeMap::new();
    for k in -4..=4 {
        let tgt = b.dim(k);
        let mut cols = Vec::new();
        let cycles = b.cycles(k);
        for _ in 0..sa.n(&sa.classes, k) {
            let mut v = vec![0u32; tgt];
            for z in &cycles {
                let c = rng.gen_range(0..p);
                for (vi, zi) in v.iter_mut().zip(z) {
                    *vi = fld.add(*vi, fld.mul(c, *zi));
                }
            }
            cols.push(v);
        }
        let mut ts = Vec::new();
        for _ in 0..sa.n(&sa.pairs, k) {
            let x: Vec<u32> = (0..tgt).map(|_| rng.gen_range(0..p)).collect();
            ts.push(x.clone());
            cols.push(x);
        }
        tops.insert(k, ts);
        maps.insert(k, Matrix::from_columns(tgt, &cols));
    }
    for k in -4..=4 {
        let bottoms: Vec<Vec<u32>> = tops
            .get(&(k + 1))
            .cloned()
            .unwrap_or_default()
            .iter()
            .map(|x| {
                b.d(k + 1)
                    .mul(
                        &fld,
                        &Matrix::from_columns(b.dim(k + 1), std::slice::from_ref(x)),
                    )
                    .column(0)
            })
            .collect();
        let m = &maps[&k];
        let mut cols: Vec<Vec<u32>> = (0..m.cols).map(|j| m.column(j)).collect();
        cols.extend(bottoms);
        maps.insert(k, Matrix::from_columns(b.dim(k), &cols));
    }
    let (a, gs) = conjugate(rng, &a0);
    let maps = maps
        .into_iter()
        .filter(|(_, m)| m.rows * m.cols > 0)
        .map(|(k, m)| (k, m.mul(&fld, &gs[&k].1)))
        .collect();
    ChainMap::new(a, b, maps).unwrap()
}

/// Homology dimension at `k` from ranks alone.
pub fn homology_dim(c: &GradedComplex, k: i32) -> usize {
    let fld = c.field();
    c.dim(k) - c.d(k).rank(&fld) - c.d(k + 1).rank(&fld)
}

/// Rank of `ψ_*` in degree `k`: `rank[ψ Z_A | B_B] − rank B_B`.
pub fn induced_rank(psi: &ChainMap, k: i32) -> usize {
    let fld = psi.source.field();
    let z = psi.source.cycles(k);
    let n = psi.target.dim(k);
    if n == 0 {
        return 0;
    }
    let image = psi
        .at(k)
        .mul(&fld, &Matrix::from_columns(psi.source.dim(k), &z));
    let boundaries = psi.target.d(k + 1);
    boundaries.hcat(&image).rank(&fld) - boundaries.rank(&fld)
}

/// Cone homology predicted by the long exact sequence:
/// `coker ψ_*` in degree `k` plus `ker ψ_*` in degree `k − 1`.
pub fn les_cone_dim(psi: &ChainMap, k: i32) -> usize {
    (homology_dim(&psi.target, k) - induced_rank(psi, k))
        + (homology_dim(&psi.source, k - 1) - induced_rank(psi, k - 1))
}

/// Spun of a catalog source along a random product of elementary loops.
pub fn random_spun(rng: &mut impl Rng, source: &str, p: u32, steps: usize) -> SpunDga {
    let a = catalog_entry(source).unwrap().dga(f(p)).unwrap().unwrap();
    let pool = elementary_endomorphisms(&a, 3);
    let mut phi = DgaMorphism::identity(&a);
    for _ in 0..steps {
        if let Some(e) = pool.choose(rng) {
            phi = e.compose(&phi);
        }
    }
    let twist = if rng.gen_bool(0.5) { 0 } else { 1 };
    twist_spun_dga(
        &a,
        &phi,
        &SpunOptions {
            lambda_twist: twist,
            epsilon: None,
        },
    )
    .or_else(|_| twist_spun_dga(&a, &phi, &SpunOptions::default()))
    .unwrap()
}

pub const SPUN_SOURCES: [&str; 4] = ["unknot", "trefoil", "loose", "toy"];
