//! Small algebras used throughout the tests and bundled with the CLI.

use crate::quiver::BoundQuiver;

pub const EX1_JSON: &str = include_str!("../fixtures/ex1.json");
pub const ORPHEUS_JSON: &str = include_str!("../fixtures/orpheus.json");
pub const CYC3_JSON: &str = include_str!("../fixtures/cyc3.json");
pub const ZIGZAG3_JSON: &str = include_str!("../fixtures/zigzag3.json");
pub const KRONECKER_JSON: &str = include_str!("../fixtures/kronecker.json");
pub const A2_JSON: &str = include_str!("../fixtures/a2.json");
pub const VEE_JSON: &str = include_str!("../fixtures/vee.json");

/// Bundled fixtures by file stem.
pub const BUNDLED: [(&str, &str); 7] = [
    ("ex1", EX1_JSON),
    ("orpheus", ORPHEUS_JSON),
    ("cyc3", CYC3_JSON),
    ("zigzag3", ZIGZAG3_JSON),
    ("kronecker", KRONECKER_JSON),
    ("a2", A2_JSON),
    ("vee", VEE_JSON),
];

pub fn bundled(name: &str) -> Option<BoundQuiver> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, json)| BoundQuiver::from_json(json).expect("bundled fixture parses"))
}

fn parse(json: &str) -> BoundQuiver {
    BoundQuiver::from_json(json).expect("bundled fixture parses")
}

pub fn ex1() -> BoundQuiver {
    parse(EX1_JSON)
}

pub fn orpheus() -> BoundQuiver {
    parse(ORPHEUS_JSON)
}

pub fn cyc3() -> BoundQuiver {
    parse(CYC3_JSON)
}

pub fn zigzag3() -> BoundQuiver {
    parse(ZIGZAG3_JSON)
}

pub fn kronecker() -> BoundQuiver {
    parse(KRONECKER_JSON)
}

pub fn a2() -> BoundQuiver {
    parse(A2_JSON)
}

pub fn vee() -> BoundQuiver {
    parse(VEE_JSON)
}

/// Builds a quiver from `(name, source, target)` triples and relation pairs.
pub fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[(&str, &str)]) -> BoundQuiver {
    BoundQuiver::new(
        vertices.iter().copied(),
        arrows
            .iter()
            .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        relations.iter().map(|(a, b)| (a.to_string(), b.to_string())),
    )
    .expect("well-formed quiver")
}

/// One vertex, one loop `a`, with `aa = 0`.
pub fn loop_algebra() -> BoundQuiver {
    quiver(&["1"], &[("a", "1", "1")], &[("a", "a")])
}

/// `1 -a-> 2 -b-> 3`, no relations.
pub fn a3() -> BoundQuiver {
    quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[])
}

/// `alpha: 1->2, beta: 2->3, gamma: 1->3`, no relations.
pub fn triangle() -> BoundQuiver {
    quiver(
        &["1", "2", "3"],
        &[("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "1", "3")],
        &[],
    )
}

/// `alpha: 1->3, beta: 2->3, gamma: 3->4` with `alpha gamma = 0`.
pub fn fork() -> BoundQuiver {
    quiver(
        &["1", "2", "3", "4"],
        &[("alpha", "1", "3"), ("beta", "2", "3"), ("gamma", "3", "4")],
        &[("alpha", "gamma")],
    )
}

pub fn named_corpus() -> Vec<(&'static str, BoundQuiver)> {
    vec![
        ("ex1", ex1()),
        ("orpheus", orpheus()),
        ("cyc3", cyc3()),
        ("zigzag3", zigzag3()),
        ("kronecker", kronecker()),
        ("vee", vee()),
        ("a2", a2()),
        ("a3", a3()),
        ("loop", loop_algebra()),
        ("triangle", triangle()),
        ("fork", fork()),
    ]
}

pub fn corpus() -> Vec<BoundQuiver> {
    named_corpus().into_iter().map(|(_, q)| q).collect()
}
