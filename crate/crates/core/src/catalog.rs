//! Built-in knots, model algebras, chord inventories and their spuns.

use crate::algebra::{parse_poly, AlgebraError, ChordGen, Dga, DgaMorphism, Length, PrimeField};
use crate::diagrams::{
    chekanov_dga, rotation_number, validate, DiagramError, DiagramFile, LagrangianDiagram,
};
use crate::products::{
    product_inventory, ChordInventory, ChordRecord, ProductError, ProductInventory,
};
use crate::spun::{twist_spun_dga, SpunDga, SpunError, SpunOptions};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("no catalog entry named `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Spun(#[from] SpunError),
}

#[derive(Clone, Copy, Debug)]
pub enum CatalogSource {
    /// Diagram JSON.
    Diagram(&'static str),
    /// Generators `(name, degree, length)` and differentials in text syntax.
    Model(
        &'static [(&'static str, i32, &'static str)],
        &'static [&'static str],
    ),
    /// `Λ₂^{2r}`: only the chord data.
    Inventory { r: u32 },
    /// The spun of another entry along the constant loop.
    Spun { source: &'static str },
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: CatalogSource,
    pub notes: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "unknot",
        source: CatalogSource::Diagram(include_str!("../catalog/unknot.json")),
        notes: "figure-eight projection of the standard unknot",
    },
    CatalogEntry {
        name: "trefoil",
        source: CatalogSource::Diagram(include_str!("../catalog/trefoil.json")),
        notes: "five-crossing right-handed trefoil",
    },
    CatalogEntry {
        name: "loose",
        source: CatalogSource::Model(&[("a", 1, "1")], &["1"]),
        notes: "the unit is a boundary, so there are no augmentations",
    },
    CatalogEntry {
        name: "toy",
        source: CatalogSource::Model(
            &[("x", 1, "3"), ("y", 0, "1"), ("z", 0, "1")],
            &["y z", "0", "0"],
        ),
        notes: "smallest algebra with a quadratic differential",
    },
    CatalogEntry {
        name: "lambda2:0",
        source: CatalogSource::Inventory { r: 0 },
        notes: "short chord b in degree 0; long chords are placeholders",
    },
    CatalogEntry {
        name: "lambda2:2",
        source: CatalogSource::Inventory { r: 1 },
        notes: "short chord b in degree 2; long chords are placeholders",
    },
    CatalogEntry {
        name: "lambda2:4",
        source: CatalogSource::Inventory { r: 2 },
        notes: "short chord b in degree 4; long chords are placeholders",
    },
    CatalogEntry {
        name: "lambda2:6",
        source: CatalogSource::Inventory { r: 3 },
        notes: "short chord b in degree 6; long chords are placeholders",
    },
    CatalogEntry {
        name: "spun:unknot",
        source: CatalogSource::Spun { source: "unknot" },
        notes: "constant loop",
    },
    CatalogEntry {
        name: "spun:trefoil",
        source: CatalogSource::Spun { source: "trefoil" },
        notes: "constant loop",
    },
    CatalogEntry {
        name: "spun:loose",
        source: CatalogSource::Spun { source: "loose" },
        notes: "constant loop",
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn catalog_entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

/// Chord data of `Λ₂^{2r}`: the short chord `b` of degree `2r` and length
/// 1/2, and two long chords standing in for the rest of the knot.
pub fn lambda2_inventory(r: u32) -> ChordInventory {
    let q = |s: &str| s.parse::<Length>().expect("literal length");
    ChordInventory::new(vec![
        ChordRecord::new("b", 2 * r as i32, q("0.5")),
        ChordRecord::new("c1", 1, q("2")),
        ChordRecord::new("c2", 1, q("2.5")),
    ])
    .expect("catalog inventory is valid")
}

/// The unknot's single chord `a` of degree 1 and length 1.
pub fn unknot_inventory() -> ChordInventory {
    ChordInventory::new(vec![ChordRecord::new("a", 1, Length::one())]).expect("valid")
}

/// Chords of the unknot times `Λ₂^{2r}` after the long chords of the second
/// factor are removed, with hats offset by 1/100.
pub fn lambda2_product(r: u32) -> Result<ProductInventory, ProductError> {
    let short = ChordInventory::new(lambda2_inventory(r).chords()[..1].to_vec())?;
    product_inventory(
        &unknot_inventory(),
        &short,
        &"0.01".parse().expect("literal"),
    )
}

impl CatalogEntry {
    pub fn kind(&self) -> &'static str {
        match self.source {
            CatalogSource::Diagram(_) => "diagram",
            CatalogSource::Model(..) => "model",
            CatalogSource::Inventory { .. } => "inventory",
            CatalogSource::Spun { .. } => "spun",
        }
    }

    pub fn diagram_file(&self) -> Option<DiagramFile> {
        match self.source {
            CatalogSource::Diagram(json) => {
                Some(DiagramFile::from_json(json).expect("catalog diagram parses"))
            }
            _ => None,
        }
    }

    pub fn diagram(&self) -> Result<Option<LagrangianDiagram>, CatalogError> {
        Ok(self.diagram_file().map(validate).transpose()?)
    }

    pub fn rotation_number(&self) -> Option<i64> {
        match self.source {
            CatalogSource::Inventory { .. } => Some(0),
            _ => self.diagram().ok().flatten().map(|d| rotation_number(&d)),
        }
    }

    pub fn inventory(&self) -> Option<ChordInventory> {
        match self.source {
            CatalogSource::Inventory { r } => Some(lambda2_inventory(r)),
            _ => None,
        }
    }

    /// The entry's algebra over `field`; `None` for bare inventories.
    pub fn dga(&self, field: PrimeField) -> Result<Option<Dga>, CatalogError> {
        Ok(match self.source {
            CatalogSource::Diagram(_) => {
                let d = self.diagram()?.expect("diagram entry");
                Some(chekanov_dga(&d, field)?)
            }
            CatalogSource::Model(gens, diffs) => Some(model(self.name, field, gens, diffs)?),
            CatalogSource::Inventory { .. } => None,
            CatalogSource::Spun { .. } => self.spun(field)?.map(|s| s.dga),
        })
    }

    pub fn spun(&self, field: PrimeField) -> Result<Option<SpunDga>, CatalogError> {
        let CatalogSource::Spun { source } = self.source else {
            return Ok(None);
        };
        let a = catalog_entry(source)?
            .dga(field)?
            .expect("spun sources carry an algebra");
        let s = twist_spun_dga(&a, &DgaMorphism::identity(&a), &SpunOptions::default())?;
        Ok(Some(s))
    }
}

fn model(
    name: &str,
    field: PrimeField,
    gens: &[(&str, i32, &str)],
    diffs: &[&str],
) -> Result<Dga, AlgebraError> {
    let chords: Vec<ChordGen> = gens
        .iter()
        .map(|&(n, d, l)| {
            Ok(ChordGen::new(
                n,
                d,
                l.parse::<Length>()
                    .map_err(|_| AlgebraError::BadLength(l.into()))?,
            ))
        })
        .collect::<Result<_, AlgebraError>>()?;
    let lookup = |s: &str| gens.iter().position(|g| g.0 == s).map(|i| i as u32);
    let polys = diffs
        .iter()
        .map(|t| parse_poly(t, field, lookup))
        .collect::<Result<_, _>>()?;
    Dga::new(name, field, chords, polys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        let f = PrimeField::new(3).unwrap();
        for e in catalog() {
            let built = e.dga(f).unwrap();
            assert_eq!(built.is_some(), e.inventory().is_none(), "{}", e.name);
        }
        assert!(catalog_entry("nope").is_err());
    }

    #[test]
    fn loose_and_spun_unknot() {
        let f = PrimeField::two();
        let l = catalog_entry("loose").unwrap().dga(f).unwrap().unwrap();
        assert_eq!(l.render(l.differential(0)), "1");
        let s = catalog_entry("spun:unknot")
            .unwrap()
            .dga(f)
            .unwrap()
            .unwrap();
        assert_eq!(s.degrees(), vec![1, 2]);
    }
}
