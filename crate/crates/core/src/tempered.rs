//! Temperedness, the deformation retraction of the smooth dual onto the
//! tempered dual, and the stratification by components.
//!
//! Write a segment as `ψ | |^{(1-r)/2} ρ ⊗ sp(r)` with `ρ` of unitary
//! determinant. In coordinates the raw exponent is `s = s_ψ + (1-r)/2`, so
//! `s_ψ` is the segment's central exponent. The retraction replaces `ψ` by
//! `ψ |ψ|^{-1}`, i.e. sets `s_ψ = 0`; the homotopy scales `s_ψ` linearly.

use thiserror::Error;

use crate::arith::Rational;
use crate::params::{alpha, SegmentParam, WDParam};
use crate::spectrum::ComponentIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemperedError {
    #[error("homotopy parameter t = {0} is outside [0, 1]")]
    OutOfRange(Rational),
}

/// Raw exponent of a segment of length `r` whose `ψ`-exponent is `s_psi`.
fn raw_exponent(s_psi: Rational, length: u32) -> Rational {
    s_psi + Rational::new(1 - length as i64, 2)
}

pub fn psi_exponent(seg: &SegmentParam) -> Rational {
    seg.central_exponent()
}

pub fn is_tempered(p: &WDParam) -> bool {
    p.segments().iter().all(|seg| psi_exponent(seg).is_zero())
}

/// `ψ ↦ ψ|ψ|^{-1}` on every segment.
pub fn retract(p: &WDParam) -> WDParam {
    p.map_segments(|seg| SegmentParam {
        label: seg.label.clone(),
        twist: seg.twist.with_s(raw_exponent(Rational::ZERO, seg.length)),
        length: seg.length,
    })
}

/// The point at time `t` of the straight-line path `s_ψ ↦ (1 - t) s_ψ`.
pub fn homotopy(p: &WDParam, t: Rational) -> Result<WDParam, TemperedError> {
    if t < Rational::ZERO || t > Rational::ONE {
        return Err(TemperedError::OutOfRange(t));
    }
    let keep = Rational::ONE - t;
    Ok(p.map_segments(|seg| SegmentParam {
        label: seg.label.clone(),
        twist: seg
            .twist
            .with_s(raw_exponent(keep * psi_exponent(seg), seg.length)),
        length: seg.length,
    }))
}

/// The component of `Ω⁺` containing `α(p)`.
pub fn stratum_of(p: &WDParam) -> ComponentIndex {
    alpha(p).component().clone()
}
