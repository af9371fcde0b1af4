//! Semifree DGAs on Reeb chords, their differentials and morphisms.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::coef::Coefficient;
use super::field::PrimeField;
use super::length::Length;
use super::poly::{GenId, NCPoly, Word};
use super::AlgebraError;

/// A Reeb chord used as a free generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordGen {
    pub name: String,
    pub degree: i32,
    pub length: Length,
}

impl ChordGen {
    pub fn new(name: impl Into<String>, degree: i32, length: Length) -> Self {
        ChordGen {
            name: name.into(),
            degree,
            length,
        }
    }
}

/// A semifree DGA: generators, the differential on each of them, and the
/// degree offsets `(d_μ, d_λ)` carried by the coefficient variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dga {
    name: String,
    field: PrimeField,
    gens: Vec<ChordGen>,
    diff: Vec<NCPoly>,
    maslov: (i32, i32),
    index: BTreeMap<String, GenId>,
}

impl Dga {
    pub fn new(
        name: impl Into<String>,
        field: PrimeField,
        gens: Vec<ChordGen>,
        diff: Vec<NCPoly>,
    ) -> Result<Self, AlgebraError> {
        if gens.len() != diff.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: gens.len(),
                got: diff.len(),
            });
        }
        let mut index = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            if !g.length.is_positive() {
                return Err(AlgebraError::NonPositiveLength(g.name.clone()));
            }
            if index.insert(g.name.clone(), i as GenId).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        for d in &diff {
            if d.characteristic() != field.characteristic() {
                return Err(AlgebraError::RingMismatch {
                    left: field.characteristic(),
                    right: d.characteristic(),
                });
            }
            if let Some(&bad) = d
                .words()
                .flat_map(|w| w.letters())
                .find(|&&g| g as usize >= gens.len())
            {
                return Err(AlgebraError::UndeclaredGenerator(format!("#{bad}")));
            }
        }
        Ok(Dga {
            name: name.into(),
            field,
            gens,
            diff,
            maslov: (0, 0),
            index,
        })
    }

    pub fn with_maslov(mut self, offsets: (i32, i32)) -> Self {
        self.maslov = offsets;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replace one differential without any verification; used for
    /// diagnostics and for building deliberately broken fixtures.
    pub fn with_differential(mut self, g: GenId, d: NCPoly) -> Self {
        self.diff[g as usize] = d;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn maslov(&self) -> (i32, i32) {
        self.maslov
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[ChordGen] {
        &self.gens
    }

    pub fn gen(&self, g: GenId) -> &ChordGen {
        &self.gens[g as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> {
        0..self.gens.len() as GenId
    }

    pub fn degree(&self, g: GenId) -> i32 {
        self.gens[g as usize].degree
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.gens.iter().map(|g| g.degree).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<GenId> {
        self.index.get(name).copied()
    }

    pub fn differential(&self, g: GenId) -> &NCPoly {
        &self.diff[g as usize]
    }

    pub fn differentials(&self) -> &[NCPoly] {
        &self.diff
    }

    pub fn zero(&self) -> NCPoly {
        NCPoly::zero(self.field)
    }

    pub fn generator(&self, g: GenId) -> NCPoly {
        NCPoly::generator(self.field, g)
    }

    pub fn word_degree(&self, w: &Word) -> i32 {
        w.letters().iter().map(|&g| self.degree(g)).sum()
    }

    pub fn word_length(&self, w: &Word) -> Length {
        Length::sum(w.letters().iter().map(|&g| &self.gens[g as usize].length))
    }

    fn coef_degree(&self, mu: i32, lambda: i32) -> i32 {
        mu * self.maslov.0 + lambda * self.maslov.1
    }

    /// The differential of an arbitrary algebra element.
    pub fn apply_d(&self, x: &NCPoly) -> NCPoly {
        let mut out = self.zero();
        for (w, c) in x.terms() {
            let dw = extend_leibniz(self.field, &self.diff, &self.degrees(), w)
                .expect("words of a DGA element use declared generators");
            if self.maslov == (0, 0) {
                out.add_assign(&dw.scale(c));
                continue;
            }
            for m in c.monomials() {
                let sign = self.field.sign(self.coef_degree(m.mu, m.lambda) as i64);
                let k = Coefficient::monomial(self.field.mul(sign, m.c), m.mu, m.lambda);
                out.add_assign(&dw.scale(&k));
            }
        }
        out
    }

    /// Render an element using this DGA's generator names.
    pub fn render(&self, x: &NCPoly) -> String {
        x.render_with(|g| {
            self.gens
                .get(g as usize)
                .map(|c| c.name.clone())
                .unwrap_or_else(|| format!("#{g}"))
        })
    }
}

/// Graded Leibniz extension of generator differentials `d` to the word `w`:
/// `∂(y₁…yₘ) = Σᵢ (−1)^{|y₁…yᵢ₋₁|} y₁…∂(yᵢ)…yₘ`.
pub fn extend_leibniz(
    field: PrimeField,
    d: &[NCPoly],
    degrees: &[i32],
    w: &Word,
) -> Result<NCPoly, AlgebraError> {
    let mut out = NCPoly::zero(field);
    let mut prefix_deg = 0i64;
    let letters = w.letters();
    for (i, &g) in letters.iter().enumerate() {
        let (dg, deg) = match (d.get(g as usize), degrees.get(g as usize)) {
            (Some(dg), Some(&deg)) => (dg, deg),
            _ => return Err(AlgebraError::UndeclaredGenerator(format!("#{g}"))),
        };
        let left = Word(letters[..i].to_vec());
        let right = Word(letters[i + 1..].to_vec());
        let sign = Coefficient::constant(field.sign(prefix_deg));
        out.add_assign(&dg.sandwich(&sign, &left, &right));
        prefix_deg += deg as i64;
    }
    Ok(out)
}

/// Generators `g` with `∂²g ≠ 0`.
pub fn check_d_squared(dga: &Dga) -> Vec<GenId> {
    dga.ids()
        .filter(|&g| !dga.apply_d(dga.differential(g)).is_zero())
        .collect()
}

/// A term of some `∂g` that breaks the degree or action law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub generator: GenId,
    pub word: Word,
    pub detail: String,
}

/// Every term of `∂g` must have degree `|g| − 1`.
pub fn check_degree_law(dga: &Dga) -> Vec<LawViolation> {
    let mut out = Vec::new();
    for g in dga.ids() {
        let want = dga.degree(g) - 1;
        for (w, c) in dga.differential(g).terms() {
            let wd = dga.word_degree(w);
            for m in c.monomials() {
                let got = wd + dga.coef_degree(m.mu, m.lambda);
                if got != want {
                    out.push(LawViolation {
                        generator: g,
                        word: w.clone(),
                        detail: format!("term has degree {got}, expected {want}"),
                    });
                }
            }
        }
    }
    out
}

/// Every word of `∂g` must be strictly shorter than `g`.
pub fn check_action_law(dga: &Dga) -> Vec<LawViolation> {
    let mut out = Vec::new();
    for g in dga.ids() {
        let lg = &dga.gen(g).length;
        for w in dga.differential(g).words() {
            let lw = dga.word_length(w);
            if &lw >= lg {
                out.push(LawViolation {
                    generator: g,
                    word: w.clone(),
                    detail: format!("word length {lw} is not below {lg}"),
                });
            }
        }
    }
    out
}

/// A unital algebra map fixing coefficients, given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgaMorphism {
    images: Vec<NCPoly>,
}

impl DgaMorphism {
    pub fn new(images: Vec<NCPoly>) -> Self {
        DgaMorphism { images }
    }

    pub fn identity(dga: &Dga) -> Self {
        DgaMorphism {
            images: dga.ids().map(|g| dga.generator(g)).collect(),
        }
    }

    pub fn images(&self) -> &[NCPoly] {
        &self.images
    }

    pub fn image(&self, g: GenId) -> &NCPoly {
        &self.images[g as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, x)| *x == NCPoly::generator(x.field(), i as GenId))
    }

    /// Image of a word, as the product of the letter images.
    pub fn apply_word(&self, field: PrimeField, w: &Word) -> NCPoly {
        w.letters().iter().fold(NCPoly::one(field), |acc, &g| {
            acc.mul(&self.images[g as usize])
        })
    }

    pub fn apply(&self, x: &NCPoly) -> NCPoly {
        let field = x.field();
        let mut out = NCPoly::zero(field);
        for (w, c) in x.terms() {
            out.add_assign(&self.apply_word(field, w).scale(c));
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &DgaMorphism) -> DgaMorphism {
        DgaMorphism {
            images: other.images.iter().map(|x| self.apply(x)).collect(),
        }
    }
}

/// Generators on which `f` fails to be a degree-preserving chain map.
///
/// A characteristic or arity mismatch makes every generator offending.
pub fn check_morphism(src: &Dga, tgt: &Dga, f: &DgaMorphism) -> Vec<GenId> {
    let all: Vec<GenId> = src.ids().collect();
    if src.field() != tgt.field() || f.images.len() != src.len() {
        return all;
    }
    if f.images.iter().any(|x| {
        x.characteristic() != tgt.field().characteristic()
            || x.words()
                .flat_map(|w| w.letters())
                .any(|&g| g as usize >= tgt.len())
    }) {
        return all;
    }
    let mut out = Vec::new();
    for g in src.ids() {
        let img = f.image(g);
        let graded = img.terms().all(|(w, c)| {
            let wd = tgt.word_degree(w);
            c.monomials()
                .all(|m| wd + tgt.coef_degree(m.mu, m.lambda) == src.degree(g))
        });
        let commutes = f.apply(src.differential(g)) == tgt.apply_d(img);
        if !graded || !commutes {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::two()
    }

    fn one_plus_mu(f: PrimeField) -> NCPoly {
        let mut p = NCPoly::one(f);
        p.add_term(Coefficient::monomial(1, 1, 0), Word::unit());
        p
    }

    fn unknot() -> Dga {
        let f = f2();
        Dga::new(
            "unknot",
            f,
            vec![ChordGen::new("a", 1, Length::one())],
            vec![one_plus_mu(f)],
        )
        .unwrap()
    }

    fn toy() -> Dga {
        let f = f2();
        let gens = vec![
            ChordGen::new("x", 1, Length::integer(3)),
            ChordGen::new("y", 0, Length::one()),
            ChordGen::new("z", 0, Length::one()),
        ];
        let dx = NCPoly::term(f, Coefficient::one(), Word(vec![1, 2]));
        Dga::new("toy", f, gens, vec![dx, NCPoly::zero(f), NCPoly::zero(f)]).unwrap()
    }

    #[test]
    fn leibniz_with_closed_second_letter() {
        let f = f2();
        let d = vec![one_plus_mu(f), NCPoly::zero(f)];
        let got = extend_leibniz(f, &d, &[1, 0], &Word(vec![0, 1])).unwrap();
        assert_eq!(got, one_plus_mu(f).mul(&NCPoly::generator(f, 1)));
    }

    #[test]
    fn leibniz_square_in_char_two() {
        let t = toy();
        let got = extend_leibniz(f2(), t.differentials(), &t.degrees(), &Word(vec![0, 0])).unwrap();
        let want = NCPoly::from_terms(
            f2(),
            [
                (Coefficient::one(), Word(vec![1, 2, 0])),
                (Coefficient::one(), Word(vec![0, 1, 2])),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn leibniz_of_unit_and_unknown_letter() {
        let t = toy();
        let f = f2();
        assert!(
            extend_leibniz(f, t.differentials(), &t.degrees(), &Word::unit())
                .unwrap()
                .is_zero()
        );
        assert!(matches!(
            extend_leibniz(f, t.differentials(), &t.degrees(), &Word(vec![7])),
            Err(AlgebraError::UndeclaredGenerator(_))
        ));
    }

    #[test]
    fn odd_characteristic_sign() {
        // ∂(x x) = ∂x·x − x·∂x when |x| = 1.
        let f = PrimeField::new(3).unwrap();
        let d = vec![NCPoly::generator(f, 1), NCPoly::zero(f)];
        let got = extend_leibniz(f, &d, &[1, 0], &Word(vec![0, 0])).unwrap();
        let want = NCPoly::from_terms(
            f,
            [
                (Coefficient::one(), Word(vec![1, 0])),
                (Coefficient::constant(2), Word(vec![0, 1])),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn d_squared_detects_tampering() {
        let f = f2();
        assert!(check_d_squared(&unknot()).is_empty());
        let gens = vec![
            ChordGen::new("a", 2, Length::integer(2)),
            ChordGen::new("b", 1, Length::one()),
        ];
        let bad = Dga::new(
            "bad",
            f,
            gens,
            vec![NCPoly::generator(f, 1), NCPoly::one(f)],
        )
        .unwrap();
        assert_eq!(check_d_squared(&bad), vec![0]);
    }

    #[test]
    fn morphism_checks_on_unknot() {
        let u = unknot();
        let f = f2();
        assert!(check_morphism(&u, &u, &DgaMorphism::identity(&u)).is_empty());
        let mu_a = NCPoly::term(f, Coefficient::monomial(1, 1, 0), Word::letter(0));
        assert_eq!(
            check_morphism(&u, &u, &DgaMorphism::new(vec![mu_a])),
            vec![0]
        );
    }

    #[test]
    fn degree_and_action_laws() {
        let u = unknot();
        assert!(check_degree_law(&u).is_empty());
        assert!(check_action_law(&u).is_empty());
        let mut gens = u.gens().to_vec();
        gens[0].degree = 2;
        let corrupted = Dga::new("u2", f2(), gens, u.differentials().to_vec()).unwrap();
        assert_eq!(check_degree_law(&corrupted).len(), 2);
    }

    #[test]
    fn rejects_bad_tables() {
        let f = f2();
        let g = || ChordGen::new("a", 1, Length::one());
        assert!(matches!(
            Dga::new(
                "d",
                f,
                vec![g(), g()],
                vec![NCPoly::zero(f), NCPoly::zero(f)]
            ),
            Err(AlgebraError::DuplicateGenerator(_))
        ));
        let z = ChordGen::new("a", 1, Length::zero());
        assert!(matches!(
            Dga::new("d", f, vec![z], vec![NCPoly::zero(f)]),
            Err(AlgebraError::NonPositiveLength(_))
        ));
    }
}
