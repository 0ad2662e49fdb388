//! Weil-Deligne parameters as multisets of segments, and the maps
//!
//! ```text
//!   G(n) ──π_F──▶ A(n)
//!    │α            │inf.ch.
//!    ▼             ▼
//!   Ω⁺G ───β────▶ ΩG
//! ```
//!
//! A segment `(label, z, r)` stands both for `(z·ρ) ⊗ sp(r)` and for the
//! chain of cuspidals `{z, z|·|, …, z|·|^{r-1}}`; on these coordinates the
//! local Langlands map is the identity. The stored twist is that of the
//! first cuspidal of the chain, so the support has exponents
//! `s, s + 1, …, s + r - 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{canonicalize_mod_torsion, norm_power, twist_mul, Rational, TwistCoord};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::partitions::Partition;
use crate::spectrum::{ComponentIndex, CuspidalLabel, Inventory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("segment {segment}: unknown label {label:?}")]
    UnknownLabel { segment: usize, label: String },
    #[error("segment {segment}: length must be at least 1")]
    ZeroLength { segment: usize },
    #[error("parameter declares n = {declared} but n = {expected} was requested")]
    DeclaredRank { declared: u32, expected: u32 },
    #[error("dimension mismatch: expected {expected}, segments sum to {actual}")]
    DimensionMismatch { expected: u32, actual: u32 },
    #[error("component label {0:?} is not in the inventory")]
    UnknownComponentLabel(String),
    #[error("coordinates for ({label:?}, part {part}) do not match the component shape")]
    ShapeMismatch { label: String, part: u32 },
}

/// `(z·ρ_label) ⊗ sp(length)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentParam {
    pub label: String,
    pub twist: TwistCoord,
    pub length: u32,
}

impl SegmentParam {
    pub fn new(label: impl Into<String>, twist: TwistCoord, length: u32) -> Self {
        SegmentParam {
            label: label.into(),
            twist,
            length,
        }
    }

    /// `s + (r - 1)/2`: the exponent of the segment's midpoint. It vanishes
    /// exactly for the unitary twists of `| |^{(1-r)/2} ρ ⊗ sp(r)`.
    pub fn central_exponent(&self) -> Rational {
        self.twist.s() + Rational::new(self.length as i64 - 1, 2)
    }
}

impl Ord for SegmentParam {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.label, self.length, self.twist).cmp(&(&other.label, other.length, other.twist))
    }
}

impl PartialOrd for SegmentParam {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Unvalidated parameter as read from JSON:
/// `{"n": 2, "segments": [{"label": "chi", "twist": {"s": "-1/2", "theta": "0"}, "length": 2}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    pub n: u32,
    pub segments: Vec<SegmentParam>,
}

/// A validated admissible parameter: labels resolved, twists reduced modulo
/// torsion, segments in canonical order. Equality is equivalence of
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WDParam {
    n: u32,
    segments: Vec<SegmentParam>,
    labels: BTreeMap<String, CuspidalLabel>,
}

impl WDParam {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn segments(&self) -> &[SegmentParam] {
        &self.segments
    }

    pub fn label(&self, id: &str) -> &CuspidalLabel {
        &self.labels[id]
    }

    pub fn to_spec(&self) -> ParamSpec {
        ParamSpec {
            n: self.n,
            segments: self.segments.clone(),
        }
    }

    /// Replaces every segment by `f(segment)`. `f` must keep labels and
    /// lengths; twists are re-canonicalized and the order re-established.
    pub(crate) fn map_segments(&self, f: impl Fn(&SegmentParam) -> SegmentParam) -> WDParam {
        let mut segments: Vec<SegmentParam> = self
            .segments
            .iter()
            .map(|seg| {
                let mut next = f(seg);
                debug_assert_eq!((&next.label, next.length), (&seg.label, seg.length));
                next.twist = canonicalize_mod_torsion(next.twist, self.labels[&next.label].torsion);
                next
            })
            .collect();
        segments.sort();
        WDParam {
            n: self.n,
            segments,
            labels: self.labels.clone(),
        }
    }
}

impl Serialize for WDParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_spec().serialize(serializer)
    }
}

/// Checks labels and dimensions against `inv` and rank `n`, and returns the
/// canonical form.
pub fn validate_param(spec: &ParamSpec, inv: &Inventory, n: u32) -> Result<WDParam, ParamError> {
    if n == 0 {
        return Err(ParamError::ZeroRank);
    }
    if spec.n != n {
        return Err(ParamError::DeclaredRank {
            declared: spec.n,
            expected: n,
        });
    }
    let mut labels = BTreeMap::new();
    let mut segments = Vec::with_capacity(spec.segments.len());
    let mut total = 0u32;
    for (index, seg) in spec.segments.iter().enumerate() {
        let label = inv
            .get(&seg.label)
            .ok_or_else(|| ParamError::UnknownLabel {
                segment: index,
                label: seg.label.clone(),
            })?;
        if seg.length == 0 {
            return Err(ParamError::ZeroLength { segment: index });
        }
        total += label.dim * seg.length;
        labels.insert(label.id.clone(), label.clone());
        segments.push(SegmentParam {
            label: seg.label.clone(),
            twist: canonicalize_mod_torsion(seg.twist, label.torsion),
            length: seg.length,
        });
    }
    if total != n {
        return Err(ParamError::DimensionMismatch {
            expected: n,
            actual: total,
        });
    }
    segments.sort();
    Ok(WDParam {
        n,
        segments,
        labels,
    })
}

/// A point of `Ω⁺G`: a component together with, for each factor
/// `(label, part size t)`, the multiset of twists of the parts of size `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPoint {
    component: ComponentIndex,
    coordinates: BTreeMap<(String, u32), Vec<TwistCoord>>,
    labels: BTreeMap<String, CuspidalLabel>,
}

impl ExtendedPoint {
    /// Builds a point on `component`; the coordinate multisets must match
    /// the component's shape exactly. Twists are reduced modulo torsion.
    pub fn new(
        component: ComponentIndex,
        coordinates: BTreeMap<(String, u32), Vec<TwistCoord>>,
        inv: &Inventory,
    ) -> Result<Self, ParamError> {
        let mut labels = BTreeMap::new();
        for (id, _) in component.iter() {
            let label = inv
                .get(id)
                .ok_or_else(|| ParamError::UnknownComponentLabel(id.to_string()))?;
            labels.insert(id.to_string(), label.clone());
        }
        let shape = component.shape();
        let stray = coordinates.keys().find(|(label, part)| {
            !shape
                .factors
                .iter()
                .any(|f| &f.label == label && f.part == *part)
        });
        if let Some((label, part)) = stray {
            return Err(ParamError::ShapeMismatch {
                label: label.clone(),
                part: *part,
            });
        }
        let mut canonical = BTreeMap::new();
        for factor in &shape.factors {
            let key = (factor.label.clone(), factor.part);
            let twists = coordinates
                .get(&key)
                .filter(|t| t.len() == factor.power as usize)
                .ok_or(ParamError::ShapeMismatch {
                    label: factor.label.clone(),
                    part: factor.part,
                })?;
            let torsion = labels[&factor.label].torsion;
            let mut twists: Vec<TwistCoord> = twists
                .iter()
                .map(|&z| canonicalize_mod_torsion(z, torsion))
                .collect();
            twists.sort();
            canonical.insert(key, twists);
        }
        Ok(ExtendedPoint {
            component,
            coordinates: canonical,
            labels,
        })
    }

    pub fn component(&self) -> &ComponentIndex {
        &self.component
    }

    pub fn coordinates(&self) -> &BTreeMap<(String, u32), Vec<TwistCoord>> {
        &self.coordinates
    }
}

impl Serialize for ExtendedPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Factor<'a> {
            label: &'a str,
            part: u32,
            twists: &'a [TwistCoord],
        }
        let factors: Vec<Factor<'_>> = self
            .coordinates
            .iter()
            .map(|((label, part), twists)| Factor {
                label,
                part: *part,
                twists,
            })
            .collect();
        let mut state = serializer.serialize_struct("ExtendedPoint", 2)?;
        state.serialize_field("component", &self.component)?;
        state.serialize_field("coordinates", &factors)?;
        state.end()
    }
}

/// A point of the Bernstein variety: a cuspidal pair `(M, σ)` up to
/// conjugacy. `levi` lists the `GL` block sizes (non-increasing) and
/// `support` the cuspidal twists, both in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CuspidalPoint {
    pub levi: Vec<u32>,
    pub support: Vec<(String, TwistCoord)>,
}

impl CuspidalPoint {
    /// From `(label, twist, block size)` triples in any order.
    pub fn from_support(entries: impl IntoIterator<Item = (String, TwistCoord, u32)>) -> Self {
        let mut levi = Vec::new();
        let mut support = Vec::new();
        for (label, twist, dim) in entries {
            levi.push(dim);
            support.push((label, twist));
        }
        levi.sort_unstable_by(|a, b| b.cmp(a));
        support.sort();
        CuspidalPoint { levi, support }
    }

    pub fn n(&self) -> u32 {
        self.levi.iter().sum()
    }
}

/// `α`: the component is given by the segment lengths of each label, the
/// coordinates by the twists of the segments of each length.
pub fn alpha(p: &WDParam) -> ExtendedPoint {
    let mut lengths: BTreeMap<String, Vec<u32>> = BTreeMap::new();
    let mut coordinates: BTreeMap<(String, u32), Vec<TwistCoord>> = BTreeMap::new();
    for seg in &p.segments {
        lengths
            .entry(seg.label.clone())
            .or_default()
            .push(seg.length);
        coordinates
            .entry((seg.label.clone(), seg.length))
            .or_default()
            .push(seg.twist);
    }
    for twists in coordinates.values_mut() {
        twists.sort();
    }
    let component = ComponentIndex(
        lengths
            .into_iter()
            .map(|(id, parts)| {
                (
                    id,
                    Partition::new(parts).expect("segment lengths are positive"),
                )
            })
            .collect(),
    );
    ExtendedPoint {
        component,
        coordinates,
        labels: p.labels.clone(),
    }
}

/// `β`, the twisted projection: a twist `z` on a factor of part size `t`
/// expands to `{z, q^{-1}z, …, q^{1-t}z}`.
pub fn beta(x: &ExtendedPoint) -> CuspidalPoint {
    let entries = x.coordinates.iter().flat_map(|((label, part), twists)| {
        let dim = x.labels[label].dim;
        twists.iter().flat_map(move |&z| {
            (0..*part).map(move |i| {
                (
                    label.clone(),
                    twist_mul(z, norm_power(Rational::integer(i as i64))),
                    dim,
                )
            })
        })
    });
    CuspidalPoint::from_support(entries)
}

/// Cuspidal support read off the segments directly: the union of the
/// chains `{z, z|·|, …, z|·|^{r-1}}`.
pub fn infinitesimal_character(p: &WDParam) -> CuspidalPoint {
    let mut entries = Vec::new();
    for seg in &p.segments {
        let dim = p.labels[&seg.label].dim;
        let (s, theta) = (seg.twist.s(), seg.twist.theta());
        for step in 0..seg.length as i64 {
            entries.push((
                seg.label.clone(),
                TwistCoord::new(s + step.into(), theta),
                dim,
            ));
        }
    }
    CuspidalPoint::from_support(entries)
}

/// Segments in the order they appear in the Langlands quotient
/// `Q(Δ_1, …, Δ_m)`: central exponent non-increasing, then label, length
/// and angle.
pub fn langlands_data(p: &WDParam) -> Vec<SegmentParam> {
    let mut ordered = p.segments.clone();
    ordered.sort_by(|a, b| {
        b.central_exponent()
            .cmp(&a.central_exponent())
            .then_with(|| a.label.cmp(&b.label))
            .then_with(|| a.length.cmp(&b.length))
            .then_with(|| a.twist.theta().cmp(&b.twist.theta()))
    });
    ordered
}

pub fn param_equivalent(p: &WDParam, q: &WDParam) -> bool {
    p.n == q.n && p.segments == q.segments
}

/// Builds `sp(r)` over the formal variable `x = ||w||`, with
/// `ρ(w) = diag(1, x, …, x^{r-1})` and `N e_i = e_{i+1}`, and checks
/// `ρ(w) N ρ(w)^{-1} = x N` exactly.
pub fn sp_realization_check(r: usize) -> bool {
    assert!(r >= 1, "sp(r) needs r >= 1");
    let rho = LaurentMatrix::diagonal_monomials(&(0..r as i64).collect::<Vec<_>>());
    let rho_inv = LaurentMatrix::diagonal_monomials(&(0..r as i64).map(|i| -i).collect::<Vec<_>>());
    let mut nilpotent = LaurentMatrix::zero(r);
    for i in 0..r.saturating_sub(1) {
        nilpotent.set(i + 1, i, LaurentPoly::one());
    }
    let lhs = &(&rho * &nilpotent) * &rho_inv;
    let rhs = nilpotent.scale(&LaurentPoly::monomial(1, 1));
    lhs == rhs
}
