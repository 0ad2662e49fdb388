//! Seeded random generators for inventories, parameters and points of `Ω⁺`.
//!
//! Exponents come from the grid `{a/b : b ≤ 4, |a/b| ≤ 4}` and angles from
//! `{c/d : d ≤ 12}`. Every work item gets its own ChaCha stream derived from
//! `(seed, index)`, so results do not depend on how items are scheduled.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Rational, TwistCoord};
use crate::params::{validate_param, ExtendedPoint, ParamSpec, SegmentParam, WDParam};
use crate::partitions::enumerate_partitions;
use crate::spectrum::{enumerate_inertial_classes, ComponentIndex, CuspidalLabel, Inventory};

pub const MAX_EXPONENT_DENOM: i64 = 4;
pub const MAX_ABS_EXPONENT: i64 = 4;
pub const MAX_ANGLE_DENOM: i64 = 12;

/// splitmix64 finalizer over `seed` and `index`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index))
}

pub fn random_exponent<R: Rng>(rng: &mut R) -> Rational {
    let denom = rng.gen_range(1..=MAX_EXPONENT_DENOM);
    let bound = MAX_ABS_EXPONENT * denom;
    Rational::new(rng.gen_range(-bound..=bound), denom)
}

pub fn random_angle<R: Rng>(rng: &mut R) -> Rational {
    let denom = rng.gen_range(1..=MAX_ANGLE_DENOM);
    Rational::new(rng.gen_range(0..denom), denom)
}

pub fn random_twist<R: Rng>(rng: &mut R) -> TwistCoord {
    TwistCoord::new(random_exponent(rng), random_angle(rng))
}

/// A rational in `[0, 1]` with denominator at most 12.
pub fn random_unit_rational<R: Rng>(rng: &mut R) -> Rational {
    let denom = rng.gen_range(1..=12);
    Rational::new(rng.gen_range(0..=denom), denom)
}

/// One to three labels; the first always has dimension 1 so every rank has
/// at least one inertial class.
pub fn random_inventory<R: Rng>(rng: &mut R) -> Inventory {
    let count = rng.gen_range(1..=3);
    let labels = (0..count)
        .map(|i| {
            let dim = if i == 0 { 1 } else { rng.gen_range(1..=3) };
            CuspidalLabel::new(format!("c{i}"), dim, rng.gen_range(1..=3))
        })
        .collect();
    Inventory::new(labels).expect("generated labels are valid")
}

/// A validated parameter of rank `1 ≤ n ≤ max_n`: a uniformly chosen
/// inertial class, a uniformly chosen partition of each multiplicity as the
/// segment lengths, and independent twists. `None` if the inventory admits
/// no class of any rank up to `max_n`.
pub fn random_param<R: Rng>(rng: &mut R, inv: &Inventory, max_n: u32) -> Option<WDParam> {
    let ranks: Vec<u32> = (1..=max_n)
        .filter(|&n| !enumerate_inertial_classes(inv, n).is_empty())
        .collect();
    let n = *ranks.choose(rng)?;
    let classes = enumerate_inertial_classes(inv, n);
    let cls = classes.choose(rng)?;
    let mut segments = Vec::new();
    for (id, multiplicity) in cls.entries() {
        let partitions = enumerate_partitions(multiplicity);
        let lengths = partitions.choose(rng)?;
        for &length in lengths.parts() {
            segments.push(SegmentParam::new(id, random_twist(rng), length));
        }
    }
    segments.shuffle(rng);
    let p =
        validate_param(&ParamSpec { n, segments }, inv, n).expect("generated parameter is valid");
    Some(p)
}

/// A uniformly random point on `component` (twists independent).
pub fn random_extended_point<R: Rng>(
    rng: &mut R,
    component: &ComponentIndex,
    inv: &Inventory,
) -> ExtendedPoint {
    let coordinates: BTreeMap<(String, u32), Vec<TwistCoord>> = component
        .shape()
        .factors
        .into_iter()
        .map(|f| {
            let twists = (0..f.power).map(|_| random_twist(rng)).collect();
            ((f.label, f.part), twists)
        })
        .collect();
    ExtendedPoint::new(component.clone(), coordinates, inv)
        .expect("coordinates follow the component shape")
}
