//! Twist-spun tori: doubling a knot DGA along a loop endomorphism.
//!
//! For a loop endomorphism `Φ` (optionally multiplied by `λ^k`, written `Ψ`)
//! the torus DGA has generators `x` and `x̂` with `|x̂| = |x| + 1`,
//! `D(x) = ∂x` and
//!
//! ```text
//! D(x̂) = Ψ(x) − x + Σ (−1)^{|b|+1} ⟨∂x, bcd⟩ Ψ(b) ĉ d
//! ```
//!
//! summed over every way of splitting a word of `∂x` as prefix `b`, letter
//! `c`, suffix `d`. Equivalently `D(x̂) = Ψ(x) − x − h(∂x)` where `h` is the
//! `(Ψ, id)`-derivation with `h(x) = x̂`; this is what makes `D² = 0` whenever
//! `Ψ` is a chain map. In characteristic 2 all signs disappear.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    check_d_squared, check_morphism, AlgebraError, ChordGen, Coefficient, Dga, DgaMorphism, GenId,
    Length, NCPoly, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpunError {
    #[error("invalid loop: {0}")]
    InvalidLoop(String),
    #[error("internal inconsistency: D^2 != 0 at `{0}`")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpunOptions {
    /// Power of `λ` multiplying the images of `Φ`.
    pub lambda_twist: i32,
    /// Extra length of each hatted chord; defaults to 1/100 of the shortest chord.
    pub epsilon: Option<Length>,
}

/// Where a spun DGA came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpunProvenance {
    pub source: String,
    /// `Φ` on each source generator, in the text syntax.
    pub phi: Vec<(String, String)>,
    pub lambda_twist: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpunDga {
    pub dga: Dga,
    pub source: Dga,
    pub phi: DgaMorphism,
    pub lambda_twist: i32,
}

pub fn hat_name(name: &str) -> String {
    format!("{name}^")
}

impl SpunDga {
    /// Generator id of `x̂` for source generator `x`.
    pub fn hat(&self, x: GenId) -> GenId {
        x + self.source.len() as GenId
    }

    pub fn is_hatted(&self, g: GenId) -> bool {
        g as usize >= self.source.len()
    }

    pub fn provenance(&self) -> SpunProvenance {
        SpunProvenance {
            source: self.source.name().to_string(),
            phi: self
                .source
                .ids()
                .map(|g| {
                    (
                        self.source.gen(g).name.clone(),
                        self.source.render(self.phi.image(g)),
                    )
                })
                .collect(),
            lambda_twist: self.lambda_twist,
        }
    }
}

/// `h` applied to `c·w` for a word of unhatted letters, added into `out`.
fn add_homotopy(
    out: &mut NCPoly,
    psi: &DgaMorphism,
    src: &Dga,
    n: GenId,
    c: &Coefficient,
    w: &Word,
) {
    let f = src.field();
    let (dmu, dlambda) = src.maslov();
    let letters = w.letters();
    let mut prefix_deg = 0i64;
    for (i, &y) in letters.iter().enumerate() {
        let b = Word(letters[..i].to_vec());
        let d = Word(letters[i + 1..].to_vec());
        let hat_d = Word::letter(y + n).concat(&d);
        for m in c.monomials() {
            let k = prefix_deg + (m.mu * dmu + m.lambda * dlambda) as i64;
            let coef = Coefficient::monomial(f.mul(f.sign(k), m.c), m.mu, m.lambda);
            // Ψ(b) · ŷ · d
            let pb = psi.apply_word(f, &b);
            out.add_assign(&pb.sandwich(&coef, &Word::unit(), &hat_d));
        }
        prefix_deg += src.degree(y) as i64;
    }
}

/// Build the spun DGA. `phi` must be a chain endomorphism of `a`, and so
/// must `λ^k·phi` when a twist `k` is requested.
pub fn twist_spun_dga(
    a: &Dga,
    phi: &DgaMorphism,
    opts: &SpunOptions,
) -> Result<SpunDga, SpunError> {
    let bad = check_morphism(a, a, phi);
    if !bad.is_empty() {
        let names: Vec<&str> = bad.iter().map(|&g| a.gen(g).name.as_str()).collect();
        return Err(SpunError::InvalidLoop(format!(
            "not a degree-preserving chain map at {}",
            names.join(", ")
        )));
    }
    let psi = DgaMorphism::new(
        phi.images()
            .iter()
            .map(|x| x.shift_lambda(opts.lambda_twist))
            .collect(),
    );
    if opts.lambda_twist != 0 && !check_morphism(a, a, &psi).is_empty() {
        return Err(SpunError::InvalidLoop(format!(
            "lambda^{} times the loop map does not commute with the differential",
            opts.lambda_twist
        )));
    }

    let f = a.field();
    let n = a.len() as GenId;
    let epsilon = match &opts.epsilon {
        Some(e) if e.is_positive() => e.clone(),
        Some(e) => {
            return Err(SpunError::InvalidLoop(format!(
                "hat offset {e} must be positive"
            )))
        }
        None => a
            .gens()
            .iter()
            .map(|g| g.length.clone())
            .min()
            .unwrap_or_else(Length::one)
            .div_int(100),
    };

    let mut d_hat = Vec::with_capacity(a.len());
    for x in a.ids() {
        let mut dx = psi.image(x).clone();
        dx.sub_assign(&a.generator(x));
        let mut h = NCPoly::zero(f);
        for (w, c) in a.differential(x).terms() {
            add_homotopy(&mut h, &psi, a, n, c, w);
        }
        dx.sub_assign(&h);
        d_hat.push(dx);
    }

    // Hatted chords sit above every word in their differential, processed
    // from the shortest source chord up so the hats they use are known.
    let mut order: Vec<GenId> = a.ids().collect();
    order.sort_by(|&x, &y| a.gen(x).length.cmp(&a.gen(y).length).then(x.cmp(&y)));
    let mut hat_len: Vec<Option<Length>> = vec![None; a.len()];
    for &x in &order {
        let mut top = a.gen(x).length.clone();
        for w in d_hat[x as usize].words() {
            let mut l = Length::zero();
            for &g in w.letters() {
                let part = if g < n {
                    a.gen(g).length.clone()
                } else {
                    hat_len[(g - n) as usize].clone().ok_or_else(|| {
                        SpunError::InvalidLoop(format!(
                            "D({}) uses a hatted chord that is not shorter",
                            hat_name(&a.gen(x).name)
                        ))
                    })?
                };
                l = l.add(&part);
            }
            top = top.max(l);
        }
        hat_len[x as usize] = Some(top.add(&epsilon));
    }

    let mut gens = a.gens().to_vec();
    for x in a.ids() {
        let g = a.gen(x);
        gens.push(ChordGen::new(
            hat_name(&g.name),
            g.degree + 1,
            hat_len[x as usize].clone().expect("every chord processed"),
        ));
    }
    let mut diff = a.differentials().to_vec();
    diff.extend(d_hat);
    let dga = Dga::new(format!("spun:{}", a.name()), f, gens, diff)?.with_maslov(a.maslov());
    if let Some(&g) = check_d_squared(&dga).first() {
        return Err(SpunError::Inconsistent(dga.gen(g).name.clone()));
    }
    Ok(SpunDga {
        dga,
        source: a.clone(),
        phi: phi.clone(),
        lambda_twist: opts.lambda_twist,
    })
}

/// The unhatted generators span a sub-DGA on which `D` is the source `∂`.
pub fn verify_inclusion(s: &SpunDga) -> bool {
    let n = s.source.len();
    if s.dga.len() != 2 * n || s.dga.field() != s.source.field() {
        return false;
    }
    s.source.ids().all(|g| {
        let d = s.dga.differential(g);
        s.dga.gen(g) == s.source.gen(g)
            && d == s.source.differential(g)
            && d.words()
                .all(|w| w.letters().iter().all(|&x| (x as usize) < n))
    })
}

/// Chain endomorphisms of the form `x ↦ x + c·∂(u)` for words `u` of length
/// at most `max_word_len`, plus sign changes `x ↦ −x`, that commute with `∂`.
/// Composites of these are again valid loop maps.
pub fn elementary_endomorphisms(a: &Dga, max_word_len: usize) -> Vec<DgaMorphism> {
    let f = a.field();
    let id = DgaMorphism::identity(a);
    let mut words = vec![Word::unit()];
    let mut frontier = vec![Word::unit()];
    for _ in 0..max_word_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in a.ids() {
                next.push(w.concat(&Word::letter(g)));
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    let mut consider = |images: Vec<NCPoly>| {
        let m = DgaMorphism::new(images);
        if !m.is_identity() && check_morphism(a, a, &m).is_empty() && !out.contains(&m) {
            out.push(m);
        }
    };
    for x in a.ids() {
        if f.characteristic() > 2 {
            let mut images = id.images().to_vec();
            images[x as usize] = images[x as usize].neg();
            consider(images);
        }
        for u in words
            .iter()
            .filter(|u| !u.is_unit() && a.word_degree(u) == a.degree(x) + 1)
        {
            let du = a.apply_d(&NCPoly::term(f, Coefficient::one(), u.clone()));
            if du.is_zero() {
                continue;
            }
            let mut images = id.images().to_vec();
            images[x as usize].add_assign(&du);
            consider(images);
        }
    }
    out
}
