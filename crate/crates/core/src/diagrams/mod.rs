//! Lagrangian-projection diagrams and their Chekanov–Eliashberg DGAs.

mod diagram;
mod faces;
mod polygons;

pub use diagram::{
    rotation_number, validate, validate_diagram, Crossing, DiagramError, DiagramFile, End, EndDir,
    LagrangianDiagram, ValidationReport, DIAGRAM_FORMAT, DIAGRAM_VERSION,
};
pub use faces::FaceStructure;
pub use polygons::{chekanov_dga, chekanov_dga_with, enumerate_polygons, Polygon, SearchLimits};

use crate::algebra::{check_degree_law, Dga};

/// Outcome of comparing a DGA's gradings with its diagram.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GradingReport {
    pub ok: bool,
    pub problems: Vec<String>,
}

/// Confirm that the differential lowers degree by one term by term and that
/// the generator degrees match the diagram's crossings.
pub fn validate_gradings(d: &LagrangianDiagram, dga: &Dga) -> GradingReport {
    let mut problems = Vec::new();
    for (x, g) in d.crossings().iter().zip(dga.gens()) {
        if x.name != g.name || x.degree != g.degree {
            problems.push(format!(
                "crossing `{}` has degree {} but generator `{}` has degree {}",
                x.name, x.degree, g.name, g.degree
            ));
        }
    }
    if d.crossings().len() != dga.len() {
        problems.push(format!(
            "{} crossings but {} generators",
            d.crossings().len(),
            dga.len()
        ));
    }
    for v in check_degree_law(dga) {
        problems.push(format!(
            "∂{} contains `{}`: {}",
            dga.gen(v.generator).name,
            dga.render(&crate::algebra::NCPoly::term(
                dga.field(),
                crate::algebra::Coefficient::one(),
                v.word.clone()
            )),
            v.detail
        ));
    }
    GradingReport {
        ok: problems.is_empty(),
        problems,
    }
}
