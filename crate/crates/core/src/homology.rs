//! Betti numbers of the components of `Ω⁺` and the periodic cyclic homology
//! dimensions of the Hecke-algebra blocks they compute:
//! `HP_0 ≅ H^{ev}(Ω⁺; C)` and `HP_1 ≅ H^{odd}(Ω⁺; C)`.
//!
//! Every component is a product of factors `Sym^m C^×`. Sending an unordered
//! `m`-tuple of nonzero numbers to the monic polynomial with those roots,
//! i.e. to its elementary symmetric functions `(e_1, …, e_m)`, identifies
//! `Sym^m C^×` with `C^{m-1} × C^×` (only `e_m` must be nonzero). Each factor
//! is therefore homotopy equivalent to a circle with Poincaré polynomial
//! `1 + t`, and a component with `K` factors has `(1 + t)^K` by Künneth.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::spectrum::{
    component_catalog, ComponentIndex, ComponentShape, InertialClass, ShapeFactor,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("inertial class listed twice in the selection: {0}")]
    DuplicateClass(String),
}

/// `Σ b_i t^i`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PoincarePolynomial {
    coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        PoincarePolynomial { coefficients }
    }

    pub fn one() -> Self {
        PoincarePolynomial::new(vec![1])
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Künneth product: coefficientwise convolution.
    pub fn kunneth(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return PoincarePolynomial::new(Vec::new());
        }
        let mut out = vec![0u64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PoincarePolynomial::new(out)
    }

    pub fn evaluate(&self, t: i64) -> i128 {
        self.coefficients
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    pub fn even_sum(&self) -> u64 {
        self.coefficients.iter().step_by(2).sum()
    }

    pub fn odd_sum(&self) -> u64 {
        self.coefficients.iter().skip(1).step_by(2).sum()
    }
}

/// `Sym^m C^× ≃ S¹` for every `m ≥ 1`.
pub fn factor_poincare(factor: &ShapeFactor) -> PoincarePolynomial {
    debug_assert!(factor.power >= 1);
    PoincarePolynomial::new(vec![1, 1])
}

pub fn component_poincare(shape: &ComponentShape) -> PoincarePolynomial {
    shape
        .factors
        .iter()
        .map(factor_poincare)
        .fold(PoincarePolynomial::one(), |acc, p| acc.kunneth(&p))
}

/// `(dim H^{ev}, dim H^{odd})`, which is `(2^{K-1}, 2^{K-1})` for `K ≥ 1`.
pub fn component_hp(shape: &ComponentShape) -> (u64, u64) {
    let poincare = component_poincare(shape);
    (poincare.even_sum(), poincare.odd_sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentHomology {
    pub index: ComponentIndex,
    #[serde(rename = "K")]
    pub k: usize,
    pub poincare: PoincarePolynomial,
    pub hp: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockHomology {
    pub class: InertialClass,
    pub components: Vec<ComponentHomology>,
    pub block_hp: (u64, u64),
}

pub fn block_report(cls: &InertialClass) -> BlockHomology {
    let components: Vec<ComponentHomology> = component_catalog(cls)
        .into_iter()
        .map(|component| {
            let poincare = component_poincare(&component.shape);
            let hp = (poincare.even_sum(), poincare.odd_sum());
            ComponentHomology {
                k: component.shape.k(),
                index: component.index,
                poincare,
                hp,
            }
        })
        .collect();
    let block_hp = components
        .iter()
        .fold((0, 0), |(e, o), c| (e + c.hp.0, o + c.hp.1));
    BlockHomology {
        class: cls.clone(),
        components,
        block_hp,
    }
}

/// `(dim HP_0, dim HP_1)` of the Hecke-algebra block attached to `cls`.
pub fn block_hp(cls: &InertialClass) -> (u64, u64) {
    component_catalog(cls)
        .iter()
        .map(|c| component_hp(&c.shape))
        .fold((0, 0), |(e, o), (a, b)| (e + a, o + b))
}

/// Sum of `block_hp` over a finite set of distinct blocks.
pub fn hp_over_selection(
    classes: &[InertialClass],
    exec: Execution,
) -> Result<(u64, u64), HomologyError> {
    let mut seen = BTreeSet::new();
    for cls in classes {
        if !seen.insert(cls) {
            let text = serde_json::to_string(cls).unwrap_or_default();
            return Err(HomologyError::DuplicateClass(text));
        }
    }
    Ok(exec
        .map_slice(classes, block_hp)
        .into_iter()
        .fold((0, 0), |(e, o), (a, b)| (e + a, o + b)))
}
