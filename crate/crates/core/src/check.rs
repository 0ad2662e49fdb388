//! Randomized property suites for the parameter maps:
//!
//! * `diagram`: `β(α(p)) = inf.ch.(p)` with the two sides computed
//!   independently.
//! * `injectivity`: on each component, distinct points have distinct
//!   `β`-images.
//! * `retraction`: idempotence, fixed locus, homotopy endpoints, strata and
//!   invariants along the path.
//!
//! Each instance draws from its own seeded stream, so reports are identical
//! under sequential and parallel execution.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::Rational;
use crate::exec::Execution;
use crate::params::{alpha, beta, infinitesimal_character, WDParam};
use crate::sample::{
    random_extended_point, random_inventory, random_param, random_unit_rational, rng_for,
};
use crate::spectrum::{
    component_catalog, enumerate_inertial_classes, Component, InertialClass, Inventory,
};
use crate::tempered::{homotopy, is_tempered, psi_exponent, retract, stratum_of};

/// Resampling budget when a pair of random points coincides.
const DISTINCT_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown check {0:?} (expected diagram, injectivity or retraction)")]
    UnknownCheck(String),
    #[error("the injectivity check needs an inventory")]
    MissingInventory,
    #[error("samples must be at least 1")]
    NoSamples,
    #[error("n must be at least 1")]
    ZeroRank,
    #[error("the inventory admits no inertial class of rank at most {0}")]
    NoClasses(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Diagram,
    Injectivity,
    Retraction,
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Diagram => "diagram",
            CheckKind::Injectivity => "injectivity",
            CheckKind::Retraction => "retraction",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = CheckError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "diagram" => Ok(CheckKind::Diagram),
            "injectivity" => Ok(CheckKind::Injectivity),
            "retraction" => Ok(CheckKind::Retraction),
            other => Err(CheckError::UnknownCheck(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    /// Random parameters for `diagram`/`retraction`; pairs per component for
    /// `injectivity`.
    pub samples: usize,
    /// Ranks are drawn from `1..=max_n`.
    pub max_n: u32,
    /// Fixed inventory; when absent each instance draws its own.
    pub inventory: Option<Inventory>,
    /// Injectivity only visits classes whose multiplicities are all at most
    /// this.
    pub max_multiplicity: u32,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            samples: 10_000,
            max_n: 8,
            inventory: None,
            max_multiplicity: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub seed: u64,
    pub samples: usize,
    /// Individual comparisons performed.
    pub instances: usize,
    pub passed: bool,
    pub failures: Vec<Value>,
}

pub fn run_check(
    kind: CheckKind,
    config: &CheckConfig,
    exec: Execution,
) -> Result<CheckReport, CheckError> {
    if config.samples == 0 {
        return Err(CheckError::NoSamples);
    }
    if config.max_n == 0 {
        return Err(CheckError::ZeroRank);
    }
    let (instances, failures) = match kind {
        CheckKind::Diagram => per_param(config, exec, diagram_failures)?,
        CheckKind::Retraction => per_param(config, exec, retraction_failures)?,
        CheckKind::Injectivity => injectivity(config, exec)?,
    };
    Ok(CheckReport {
        check: kind.name().to_string(),
        seed: config.seed,
        samples: config.samples,
        instances,
        passed: failures.is_empty(),
        failures,
    })
}

type ParamProperty = fn(&WDParam, &mut rand_chacha::ChaCha8Rng) -> Vec<Value>;

fn per_param(
    config: &CheckConfig,
    exec: Execution,
    property: ParamProperty,
) -> Result<(usize, Vec<Value>), CheckError> {
    if let Some(inv) = &config.inventory {
        if (1..=config.max_n).all(|n| enumerate_inertial_classes(inv, n).is_empty()) {
            return Err(CheckError::NoClasses(config.max_n));
        }
    }
    let results = exec.map_indices(config.samples, |index| {
        let mut rng = rng_for(config.seed, index as u64);
        let inv = match &config.inventory {
            Some(inv) => inv.clone(),
            None => random_inventory(&mut rng),
        };
        let p = random_param(&mut rng, &inv, config.max_n).expect("inventory admits a class");
        property(&p, &mut rng)
            .into_iter()
            .map(|detail| {
                json!({
                    "sample": index,
                    "inventory": inv,
                    "param": p,
                    "detail": detail,
                })
            })
            .collect::<Vec<_>>()
    });
    Ok((config.samples, results.into_iter().flatten().collect()))
}

fn diagram_failures(p: &WDParam, _rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Value> {
    let via_extended = beta(&alpha(p));
    let direct = infinitesimal_character(p);
    if via_extended == direct {
        return Vec::new();
    }
    vec![json!({
        "alpha": alpha(p),
        "beta_alpha": via_extended,
        "infinitesimal_character": direct,
    })]
}

/// `(label, length, θ)` multiset, which retraction and homotopy must keep.
fn angle_profile(p: &WDParam) -> Vec<(String, u32, Rational)> {
    let mut out: Vec<_> = p
        .segments()
        .iter()
        .map(|s| (s.label.clone(), s.length, s.twist.theta()))
        .collect();
    out.sort();
    out
}

fn psi_profile(p: &WDParam, scale: Rational) -> Vec<(String, u32, Rational, Rational)> {
    let mut out: Vec<_> = p
        .segments()
        .iter()
        .map(|s| {
            (
                s.label.clone(),
                s.length,
                s.twist.theta(),
                scale * psi_exponent(s),
            )
        })
        .collect();
    out.sort();
    out
}

fn retraction_failures(p: &WDParam, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Value> {
    let t = random_unit_rational(rng);
    let retracted = retract(p);
    let moved = homotopy(p, t).expect("t drawn from [0, 1]");
    let mut failures = Vec::new();
    let mut expect = |holds: bool, property: &str| {
        if !holds {
            failures.push(
                json!({ "property": property, "t": t, "retract": retracted, "homotopy": moved }),
            );
        }
    };
    expect(retract(&retracted) == retracted, "retract is idempotent");
    expect(
        is_tempered(&retracted),
        "retract lands in the tempered dual",
    );
    expect(
        (retracted == *p) == is_tempered(p),
        "retract fixes exactly the tempered parameters",
    );
    expect(
        homotopy(p, Rational::ZERO).as_ref() == Ok(p),
        "homotopy at t = 0 is the identity",
    );
    expect(
        homotopy(p, Rational::ONE).as_ref() == Ok(&retracted),
        "homotopy at t = 1 is retract",
    );
    expect(
        stratum_of(&moved) == stratum_of(p),
        "stratum is constant along the homotopy",
    );
    expect(
        stratum_of(&retracted) == stratum_of(p),
        "retract preserves the stratum",
    );
    expect(
        angle_profile(&moved) == angle_profile(p) && angle_profile(&retracted) == angle_profile(p),
        "angles and lengths are invariant",
    );
    expect(
        psi_profile(&moved, Rational::ONE) == psi_profile(p, Rational::ONE - t),
        "psi-exponents scale linearly in t",
    );
    failures
}

/// Classes of rank `1..=max_n` with every multiplicity at most
/// `max_multiplicity`, paired with each of their components.
pub fn injectivity_targets(
    inv: &Inventory,
    max_n: u32,
    max_multiplicity: u32,
) -> Vec<(InertialClass, Component)> {
    (1..=max_n)
        .flat_map(|n| enumerate_inertial_classes(inv, n))
        .filter(|cls| cls.max_multiplicity() <= max_multiplicity)
        .flat_map(|cls| {
            component_catalog(&cls)
                .into_iter()
                .map(move |component| (cls.clone(), component))
        })
        .collect()
}

fn injectivity(config: &CheckConfig, exec: Execution) -> Result<(usize, Vec<Value>), CheckError> {
    let inv = config
        .inventory
        .as_ref()
        .ok_or(CheckError::MissingInventory)?;
    let targets = injectivity_targets(inv, config.max_n, config.max_multiplicity);
    if targets.is_empty() {
        return Err(CheckError::NoClasses(config.max_n));
    }
    let results = exec.map_indices(targets.len(), |index| {
        let (cls, component) = &targets[index];
        let mut rng = rng_for(config.seed, index as u64);
        let mut failures = Vec::new();
        let mut pairs = 0;
        for _ in 0..config.samples {
            let first = random_extended_point(&mut rng, &component.index, inv);
            let second = (0..DISTINCT_ATTEMPTS)
                .map(|_| random_extended_point(&mut rng, &component.index, inv))
                .find(|candidate| candidate != &first);
            let Some(second) = second else { continue };
            pairs += 1;
            let image = beta(&first);
            if image == beta(&second) {
                failures.push(json!({
                    "class": cls,
                    "component": component,
                    "first": first,
                    "second": second,
                    "beta": image,
                }));
            }
        }
        (pairs, failures)
    });
    let instances = results.iter().map(|(pairs, _)| pairs).sum();
    Ok((
        instances,
        results.into_iter().flat_map(|(_, f)| f).collect(),
    ))
}
