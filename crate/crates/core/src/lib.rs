//! Exact combinatorial model of the smooth dual of `GL(n, F)` for a
//! non-archimedean local field `F`.
//!
//! Supercuspidal orbits are abstract labels and unramified twists are exact
//! coordinates `(s, θ)` with `z = q^{-s} e^{2πiθ}`. On top of that the crate
//! provides:
//!
//! * [`spectrum`]: inertial classes and the components of the Bernstein
//!   variety and of its extended quotient;
//! * [`params`]: Weil-Deligne parameters as segment multisets, the maps
//!   `α`, `β` and the infinitesimal character;
//! * [`tempered`]: the deformation retraction onto the tempered dual;
//! * [`homology`]: Betti numbers of the extended quotient and the periodic
//!   cyclic homology dimensions of Hecke-algebra blocks;
//! * [`check`]: seeded randomized property suites, data-parallel with the
//!   `parallel` feature.

pub mod arith;
pub mod check;
pub mod exec;
pub mod homology;
pub mod laurent;
pub mod params;
pub mod partitions;
pub mod report;
pub mod sample;
pub mod spectrum;
pub mod tempered;

pub use arith::{Rational, TwistCoord};
pub use exec::Execution;
pub use params::{CuspidalPoint, ExtendedPoint, ParamSpec, SegmentParam, WDParam};
pub use partitions::Partition;
pub use spectrum::{ComponentIndex, ComponentShape, CuspidalLabel, InertialClass, Inventory};
