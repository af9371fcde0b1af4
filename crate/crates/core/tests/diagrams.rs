mod common;

use std::collections::BTreeSet;

use legendrian::algebra::{
    check_action_law, check_d_squared, check_degree_law, ChordGen, Dga, Length,
};
use legendrian::catalog::catalog_entry;
use legendrian::diagrams::{
    chekanov_dga, chekanov_dga_with, enumerate_polygons, rotation_number, validate,
    validate_diagram, validate_gradings, DiagramError, DiagramFile, LagrangianDiagram,
    SearchLimits,
};

use common::f;

fn diagram(name: &str) -> LagrangianDiagram {
    catalog_entry(name).unwrap().diagram().unwrap().unwrap()
}

/// Discs of the trefoil diagram counted by hand: (positive corner, negative
/// corners in boundary order, μ power, sign in odd characteristic).
const TREFOIL_DISCS: [(&str, &[&str], i32, i32); 8] = [
    ("a1", &[], 0, 1),
    ("a1", &["b1"], 0, 1),
    ("a1", &["b3"], 0, 1),
    ("a1", &["b3", "b2", "b1"], 0, 1),
    ("a2", &[], 1, 1),
    ("a2", &["b1"], 0, -1),
    ("a2", &["b3"], 0, -1),
    ("a2", &["b1", "b2", "b3"], 0, -1),
];

#[test]
fn trefoil_polygons_match_the_hand_count() {
    let d = diagram("trefoil");
    let names = |i: usize| d.crossings()[i].name.clone();
    let found: BTreeSet<(String, Vec<String>, i32, i32)> =
        enumerate_polygons(&d, SearchLimits::default())
            .unwrap()
            .into_iter()
            .map(|p| {
                let word = p.negatives.iter().map(|&(c, _)| names(c)).collect();
                (
                    names(p.positive),
                    word,
                    p.mu,
                    if p.negative_sign { -1 } else { 1 },
                )
            })
            .collect();
    let expected: BTreeSet<_> = TREFOIL_DISCS
        .iter()
        .map(|(a, w, m, s)| {
            (
                a.to_string(),
                w.iter().map(|x| x.to_string()).collect(),
                *m,
                *s,
            )
        })
        .collect();
    assert_eq!(found, expected);
}

#[test]
fn unknot_has_two_discs_differing_by_mu() {
    let d = diagram("unknot");
    let ps = enumerate_polygons(&d, SearchLimits::default()).unwrap();
    let mut mus: Vec<i32> = ps.iter().map(|p| p.mu).collect();
    mus.sort_unstable();
    assert_eq!(mus, vec![0, 1]);
    assert!(ps.iter().all(|p| p.negatives.is_empty()));
    for p in [2, 3, 5] {
        let a = chekanov_dga(&d, f(p)).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.degree(0), 1);
        assert_eq!(a.render(a.differential(0)), "1 + mu");
    }
}

#[test]
fn trefoil_differential_over_f3() {
    let a = chekanov_dga(&diagram("trefoil"), f(3)).unwrap();
    assert_eq!(a.degrees(), vec![1, 0, 0, 0, 1]);
    let d = |n: &str| a.render(a.differential(a.index_of(n).unwrap()));
    assert_eq!(d("a1"), "1 + b1 + b3 + b3 b2 b1");
    assert_eq!(d("a2"), "mu - b1 - b3 - b1 b2 b3");
    for b in ["b1", "b2", "b3"] {
        assert_eq!(d(b), "0");
    }
}

/// Graded augmentations of the trefoil over F_2 at μ = 1 from the
/// hand-derived equations `1 + b1 + b3 + b1 b2 b3 = 0` (both discs agree mod 2).
fn trefoil_f2_oracle() -> usize {
    (0..8u32)
        .filter(|m| {
            let (b1, b2, b3) = (m & 1, (m >> 1) & 1, (m >> 2) & 1);
            (1 + b1 + b3 + b1 * b2 * b3) % 2 == 0
        })
        .count()
}

#[test]
fn trefoil_augmentations_match_the_oracle() {
    let a = chekanov_dga(&diagram("trefoil"), f(2)).unwrap();
    let n = legendrian::homology::find_augmentations(&a, 2, 1, 1, true)
        .unwrap()
        .len();
    assert_eq!(n, trefoil_f2_oracle());
    assert_eq!(n, 5);
}

#[test]
fn catalog_diagrams_satisfy_every_law() {
    for name in ["unknot", "trefoil"] {
        let d = diagram(name);
        for p in [2, 3, 5, 7] {
            let a = chekanov_dga(&d, f(p)).unwrap();
            assert!(check_d_squared(&a).is_empty(), "{name} F_{p}");
            assert!(check_degree_law(&a).is_empty(), "{name} F_{p}");
            assert!(check_action_law(&a).is_empty(), "{name} F_{p}");
            assert!(validate_gradings(&d, &a).ok);
        }
    }
}

#[test]
fn rotation_numbers() {
    for name in ["unknot", "trefoil"] {
        let d = diagram(name);
        assert_eq!(rotation_number(&d), 0);
        assert_eq!(rotation_number(&d.reversed()), -rotation_number(&d));
    }
    let rep = validate_diagram(&catalog_entry("trefoil").unwrap().diagram_file().unwrap()).unwrap();
    assert_eq!(rep.crossings, 5);
    assert_eq!(rep.faces, 7);
    let areas: Vec<String> = rep
        .bounded_face_areas
        .iter()
        .map(|a| a.to_string())
        .collect();
    let mut sorted = areas.clone();
    sorted.sort();
    assert_eq!(sorted, vec!["1.5", "1.5", "1.5", "1.5", "4", "4"]);
}

fn unknot_file() -> DiagramFile {
    catalog_entry("unknot").unwrap().diagram_file().unwrap()
}

#[test]
fn malformed_diagrams_are_rejected() {
    let two = r#"{
      "format": "legendrian-lagrangian-diagram", "version": 1, "name": "two", "edges": 4, "base_point": 0,
      "crossings": [
        { "name": "a", "ends": [[0, "in"], [0, "out"], [1, "out"], [1, "in"]], "over": 0, "length": "1", "degree": 1 },
        { "name": "b", "ends": [[2, "in"], [2, "out"], [3, "out"], [3, "in"]], "over": 0, "length": "1", "degree": 1 }
      ]
    }"#;
    assert!(matches!(
        validate(DiagramFile::from_json(two).unwrap()),
        Err(DiagramError::MultipleComponents {
            reached: 2,
            total: 4
        })
    ));

    let mut virt = catalog_entry("trefoil").unwrap().diagram_file().unwrap();
    virt.crossings[1].ends.swap(1, 3);
    assert!(matches!(
        validate(virt),
        Err(DiagramError::NonPlanar { .. })
    ));

    let mut flat = unknot_file();
    flat.crossings[0].length = Length::zero();
    assert!(matches!(
        validate(flat),
        Err(DiagramError::NonPositiveLength(_))
    ));

    let newer = unknot_file()
        .to_json()
        .replace("\"version\": 1", "\"version\": 9");
    assert!(matches!(
        DiagramFile::from_json(&newer),
        Err(DiagramError::Version { found: 9 })
    ));
    assert!(matches!(
        DiagramFile::from_json("{"),
        Err(DiagramError::Format(_))
    ));
}

#[test]
fn corrupted_degree_fails_the_grading_check() {
    let d = diagram("unknot");
    let a = chekanov_dga(&d, f(2)).unwrap();
    let bad = Dga::new(
        "bad",
        a.field(),
        vec![ChordGen::new("a", 2, Length::one())],
        a.differentials().to_vec(),
    )
    .unwrap()
    .with_maslov(a.maslov());
    let rep = validate_gradings(&d, &bad);
    assert!(!rep.ok);
    assert!(!rep.problems.is_empty());
}

#[test]
fn tiny_budgets_are_reported() {
    let limits = SearchLimits {
        multiplicity_cap: 4,
        max_nodes: 2,
    };
    assert!(matches!(
        chekanov_dga_with(&diagram("trefoil"), f(2), limits),
        Err(DiagramError::Resource { .. })
    ));
}
