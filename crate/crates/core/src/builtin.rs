//! Small named complexes and configurations used throughout tests and by the
//! `example` command.

use std::collections::BTreeMap;

use crate::complex::{DeltaComplex, RawComplex};
use crate::snc::{ComponentMeta, SncConfiguration};

fn build(raw: RawComplex) -> DeltaComplex {
    DeltaComplex::from_raw(&raw).expect("builtin complexes are valid")
}

/// The 2-simplex on `a, b, c` with all of its faces.
pub fn filled_triangle_raw() -> RawComplex {
    circle_raw().simplex("abc", &["bc", "ca", "ab"])
}

pub fn filled_triangle() -> DeltaComplex {
    build(filled_triangle_raw())
}

/// Boundary of the triangle: three vertices and three edges.
pub fn circle_raw() -> RawComplex {
    RawComplex::new()
        .vertex("a")
        .vertex("b")
        .vertex("c")
        .simplex("ab", &["a", "b"])
        .simplex("bc", &["b", "c"])
        .simplex("ca", &["c", "a"])
}

pub fn circle() -> DeltaComplex {
    build(circle_raw())
}

/// Two distinct edges `e1`, `e2` on the same pair of vertices `u`, `w`.
pub fn doubled_edge_raw() -> RawComplex {
    RawComplex::new()
        .vertex("u")
        .vertex("w")
        .simplex("e1", &["u", "w"])
        .simplex("e2", &["u", "w"])
}

pub fn doubled_edge() -> DeltaComplex {
    build(doubled_edge_raw())
}

/// A single edge `uw`.
pub fn edge() -> DeltaComplex {
    build(
        RawComplex::new()
            .vertex("u")
            .vertex("w")
            .simplex("uw", &["u", "w"]),
    )
}

pub fn point(label: &str) -> DeltaComplex {
    build(RawComplex::new().vertex(label))
}

fn meta(entries: &[(&str, &str, usize)]) -> BTreeMap<String, ComponentMeta> {
    entries
        .iter()
        .map(|(id, name, dim)| {
            (
                (*id).to_owned(),
                ComponentMeta {
                    name: (*name).to_owned(),
                    dim: *dim,
                },
            )
        })
        .collect()
}

/// The three coordinate axes in affine 3-space: an SNC variety (not a
/// divisor) whose dual complex is the filled triangle. Every pairwise and
/// the triple intersection is the origin.
pub fn three_axes() -> SncConfiguration {
    SncConfiguration::new(
        filled_triangle(),
        meta(&[
            ("a", "E0", 1),
            ("b", "E1", 1),
            ("c", "E2", 1),
            ("ab", "origin", 0),
            ("bc", "origin", 0),
            ("ca", "origin", 0),
            ("abc", "origin", 0),
        ]),
        3,
        false,
    )
    .expect("builtin configuration is valid")
}

/// Three lines in general position in the plane, as an SNC divisor: the
/// dual complex is the circle, one vertex per line and one edge per node.
pub fn triangle_of_lines() -> SncConfiguration {
    SncConfiguration::new(
        circle(),
        meta(&[
            ("a", "L0", 1),
            ("b", "L1", 1),
            ("c", "L2", 1),
            ("ab", "p01", 0),
            ("bc", "p12", 0),
            ("ca", "p20", 0),
        ]),
        2,
        true,
    )
    .expect("builtin configuration is valid")
}

/// The three coordinate planes in affine 3-space as an SNC divisor. The
/// dual complex is the filled triangle: the planes meet pairwise in the
/// axes and all together in the origin.
pub fn coordinate_planes() -> SncConfiguration {
    SncConfiguration::new(
        filled_triangle(),
        meta(&[
            ("a", "H0", 2),
            ("b", "H1", 2),
            ("c", "H2", 2),
            ("ab", "axis01", 1),
            ("bc", "axis12", 1),
            ("ca", "axis20", 1),
            ("abc", "origin", 0),
        ]),
        3,
        true,
    )
    .expect("builtin configuration is valid")
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "three-axes",
    "triangle-of-lines",
    "coordinate-planes",
    "filled-triangle",
    "doubled-edge",
    "circle",
];

/// A builtin by name: configurations for the SNC examples, plain complexes
/// otherwise.
pub enum Builtin {
    Complex(DeltaComplex),
    Configuration(SncConfiguration),
}

pub fn by_name(name: &str) -> Option<Builtin> {
    Some(match name {
        "three-axes" => Builtin::Configuration(three_axes()),
        "triangle-of-lines" => Builtin::Configuration(triangle_of_lines()),
        "coordinate-planes" => Builtin::Configuration(coordinate_planes()),
        "filled-triangle" => Builtin::Complex(filled_triangle()),
        "doubled-edge" => Builtin::Complex(doubled_edge()),
        "circle" => Builtin::Complex(circle()),
        _ => return None,
    })
}
