//! Bundled example complexes, loaded from the JSON documents under
//! `fixtures/`.

use crate::complex::{load_complex, WeightedComplex};

fn load(text: &str) -> WeightedComplex {
    load_complex(text).expect("bundled fixture is valid")
}

/// Collaboration network on authors A..D: every author weight 100, edges
/// AB=3, BC=4, AC=5, CD=6, AD=7, BD=8, filled triangles ABC=2 and ACD=1.
pub fn kite() -> WeightedComplex {
    load(include_str!("../fixtures/kite.json"))
}

/// Loop complex of a bi-structure with loops named 1..5, weights as listed
/// in `fixtures/loop_nerve.json`.
pub fn loop_nerve() -> WeightedComplex {
    load(include_str!("../fixtures/loop_nerve.json"))
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub fn rp2() -> WeightedComplex {
    load(include_str!("../fixtures/rp2.json"))
}

/// 7-vertex (Moebius) triangulation of the torus.
pub fn torus() -> WeightedComplex {
    load(include_str!("../fixtures/torus.json"))
}

/// Boundary of the tetrahedron, a 2-sphere.
pub fn sphere() -> WeightedComplex {
    load(include_str!("../fixtures/sphere.json"))
}

/// A filled triangle with vertex weights 2, edge weights 1, face weight 0.
pub fn filled_triangle() -> WeightedComplex {
    load(include_str!("../fixtures/filled_triangle.json"))
}

/// All bundled fixtures with their file stems.
pub fn all() -> Vec<(&'static str, WeightedComplex)> {
    vec![
        ("kite", kite()),
        ("loop_nerve", loop_nerve()),
        ("rp2", rp2()),
        ("torus", torus()),
        ("sphere", sphere()),
        ("filled_triangle", filled_triangle()),
    ]
}
