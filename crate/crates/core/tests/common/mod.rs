#![allow(dead_code)]

use poincare_kit::sl2c::{FourVector, GeneratorKind, GroupElement};
use rand::Rng;

pub const KINDS: [GeneratorKind; 3] = [
    GeneratorKind::PhaseZ,
    GeneratorKind::RotY,
    GeneratorKind::BoostZ,
];

/// Product of 1..=max_len generators with parameters uniform in `[-bound, bound]`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize, bound: f64) -> GroupElement {
    let len = rng.random_range(1..=max_len);
    let factors: Vec<_> = (0..len)
        .map(|_| {
            (
                KINDS[rng.random_range(0..3)],
                rng.random_range(-bound..=bound),
            )
        })
        .collect();
    GroupElement::from_factors(&factors).expect("generator word")
}

pub fn random_vector<R: Rng>(rng: &mut R, bound: f64) -> FourVector {
    FourVector::new(
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
    )
}
