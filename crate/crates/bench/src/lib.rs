//! Shared fixtures for the benchmark targets.

use std::sync::Arc;

use sympow_core::points::{dual_hesse_config, point_ideal};
use sympow_core::text::parse_polynomial;
use sympow_core::{CycloElement, Ideal, Polynomial, RingDescriptor};

pub type CPoly = Polynomial<CycloElement>;

pub fn hesse_ring() -> Arc<RingDescriptor> {
    sympow_core::points::plane_ring::<CycloElement>()
}

/// The three quartic generators of the dual Hesse point ideal.
pub fn quartic_generators() -> Vec<CPoly> {
    let ring = hesse_ring();
    ["z*(x^3 - y^3)", "x*(y^3 - z^3)", "y*(x^3 - z^3)"]
        .iter()
        .map(|s| parse_polynomial::<CycloElement>(&ring, s).unwrap())
        .collect()
}

/// The displayed degree-9 product of the nine configuration lines.
pub fn nonic() -> CPoly {
    let ring = hesse_ring();
    parse_polynomial::<CycloElement>(
        &ring,
        "x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6",
    )
    .unwrap()
}

/// The ideals of the first `n` dual Hesse points.
pub fn point_ideals(n: usize) -> Vec<Ideal<CycloElement>> {
    dual_hesse_config()
        .points()
        .iter()
        .take(n)
        .map(|p| point_ideal(p).unwrap())
        .collect()
}
