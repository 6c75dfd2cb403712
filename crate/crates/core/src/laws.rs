//! The axiom catalog of Komori fields.
//!
//! Commutative ring with identity, the two inversive meadow axioms, the three
//! divisive meadow axioms, separation, and the general inverse and division
//! laws. The defining equations of the rational Komori fields are kept apart.

use crate::semantics::Law;
use crate::syntax::parse_formula;

const RING: [(&str, &str); 8] = [
    ("add-assoc", "(x + y) + z = x + (y + z)"),
    ("add-comm", "x + y = y + x"),
    ("add-zero", "x + 0 = x"),
    ("add-inverse", "x + -x = 0"),
    ("mul-assoc", "(x*y)*z = x*(y*z)"),
    ("mul-comm", "x*y = y*x"),
    ("mul-one", "x*1 = x"),
    ("distributive", "x*(y + z) = x*y + x*z"),
];

const INVERSIVE: [(&str, &str); 2] = [
    ("inv-involution", "(x^-1)^-1 = x"),
    ("inv-restricted", "x*(x*x^-1) = x"),
];

const DIVISIVE: [(&str, &str); 3] = [
    ("div-involution", "1/(1/x) = x"),
    ("div-restricted", "(x*x)/x = x"),
    ("div-as-mul", "x/y = x*(1/y)"),
];

const KOMORI: [(&str, &str); 3] = [
    ("separation", "0 != 1"),
    ("general-inverse", "x != 0 => x*x^-1 = 1"),
    ("general-division", "x != 0 => x/x = 1"),
];

const DEFINING: [(&str, &str); 2] = [
    (
        "defining-inversive",
        "(1 + x^2 + y^2)*(1 + x^2 + y^2)^-1 = 1",
    ),
    ("defining-divisive", "(1 + x^2 + y^2)/(1 + x^2 + y^2) = 1"),
];

fn build(entries: &[(&str, &str)]) -> Vec<Law> {
    entries
        .iter()
        .map(|(name, text)| Law::new(*name, parse_formula(text).expect("catalog law parses")))
        .collect()
}

pub fn ring_laws() -> Vec<Law> {
    build(&RING)
}

pub fn inversive_laws() -> Vec<Law> {
    build(&INVERSIVE)
}

pub fn divisive_laws() -> Vec<Law> {
    build(&DIVISIVE)
}

/// Separation plus the general inverse and division laws.
pub fn komori_laws() -> Vec<Law> {
    build(&KOMORI)
}

/// The full catalog, in a fixed order.
pub fn catalog() -> Vec<Law> {
    [RING.as_slice(), &INVERSIVE, &DIVISIVE, &KOMORI]
        .into_iter()
        .flat_map(build)
        .collect()
}

/// `(1 + x² + y²)` is invertible, in both notations.
pub fn defining_laws() -> Vec<Law> {
    build(&DEFINING)
}
