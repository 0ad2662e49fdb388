//! Cuspidal inventories, inertial classes and the component catalogs of the
//! Bernstein variety `ΩG` and of the extended variety `Ω⁺G`.
//!
//! For an inertial class with label multiplicities `m_c`, the Weyl group
//! `W(M, D)` is `∏_c S_{m_c}`, the ordinary quotient is `∏_c Sym^{m_c} C^×`,
//! and the extended quotient has one component per conjugacy class of
//! `∏_c S_{m_c}`, i.e. per tuple of partitions. A partition with distinct
//! parts `t_j` of multiplicity `n_j` gives the component
//! `D^γ / Z(γ) ≅ ∏_j Sym^{n_j} C^×`; the cyclic factors of `Z(γ)` act
//! trivially on `D^γ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::{SerializeStruct, SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{enumerate_partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("inventory is empty")]
    EmptyInventory,
    #[error("inventory is not valid JSON: {0}")]
    Json(String),
    #[error("inventory entry {index}: {message}")]
    MalformedEntry { index: usize, message: String },
    #[error("inventory entry {index}: duplicate id {id:?}")]
    DuplicateId { index: usize, id: String },
    #[error("unknown cuspidal label {0:?}")]
    UnknownLabel(String),
    #[error("multiplicity of {0:?} must be positive")]
    ZeroMultiplicity(String),
    #[error("inertial class must contain at least one cuspidal")]
    EmptyClass,
}

fn default_torsion() -> u32 {
    1
}

/// An abstract supercuspidal orbit. `dim` is the dimension `a` of the
/// underlying irreducible Weil-group representation, so the cuspidal lives
/// on `GL(a)`; `torsion` is the number of unramified self-twists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspidalLabel {
    pub id: String,
    pub dim: u32,
    #[serde(default = "default_torsion")]
    pub torsion: u32,
}

impl CuspidalLabel {
    pub fn new(id: impl Into<String>, dim: u32, torsion: u32) -> Self {
        CuspidalLabel {
            id: id.into(),
            dim,
            torsion,
        }
    }
}

/// A finite, user-chosen set of supercuspidal orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Inventory {
    labels: Vec<CuspidalLabel>,
}

impl Inventory {
    pub fn new(labels: Vec<CuspidalLabel>) -> Result<Self, SpectrumError> {
        if labels.is_empty() {
            return Err(SpectrumError::EmptyInventory);
        }
        let mut seen = BTreeSet::new();
        for (index, label) in labels.iter().enumerate() {
            let malformed = |message: &str| SpectrumError::MalformedEntry {
                index,
                message: format!("{message} (id {:?})", label.id),
            };
            if label.id.is_empty() {
                return Err(malformed("id must be non-empty"));
            }
            if label.dim == 0 {
                return Err(malformed("dim must be at least 1"));
            }
            if label.torsion == 0 {
                return Err(malformed("torsion must be at least 1"));
            }
            if !seen.insert(label.id.as_str()) {
                return Err(SpectrumError::DuplicateId {
                    index,
                    id: label.id.clone(),
                });
            }
        }
        Ok(Inventory { labels })
    }

    /// Parses `[{"id": "chi", "dim": 1, "torsion": 1}, …]`, reporting the
    /// index of the first offending entry.
    pub fn from_json(text: &str) -> Result<Self, SpectrumError> {
        let entries: Vec<serde_json::Value> =
            serde_json::from_str(text).map_err(|e| SpectrumError::Json(e.to_string()))?;
        let labels = entries
            .into_iter()
            .enumerate()
            .map(|(index, entry)| {
                serde_json::from_value(entry).map_err(|e| SpectrumError::MalformedEntry {
                    index,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<CuspidalLabel>, _>>()?;
        Inventory::new(labels)
    }

    pub fn labels(&self) -> &[CuspidalLabel] {
        &self.labels
    }

    pub fn get(&self, id: &str) -> Option<&CuspidalLabel> {
        self.labels.iter().find(|label| label.id == id)
    }
}

/// A cuspidal support type: how many times each label occurs. Entries are
/// keyed (and therefore sorted) by label id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InertialClass {
    n: u32,
    cuspidals: BTreeMap<String, u32>,
}

impl InertialClass {
    /// `n` is computed as `Σ dim(c) · m_c`.
    pub fn new<I, S>(inv: &Inventory, entries: I) -> Result<Self, SpectrumError>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut cuspidals = BTreeMap::new();
        let mut n = 0;
        for (id, multiplicity) in entries {
            let id = id.into();
            let label = inv
                .get(&id)
                .ok_or_else(|| SpectrumError::UnknownLabel(id.clone()))?;
            if multiplicity == 0 {
                return Err(SpectrumError::ZeroMultiplicity(id));
            }
            n += label.dim * multiplicity;
            *cuspidals.entry(id).or_insert(0) += multiplicity;
        }
        if cuspidals.is_empty() {
            return Err(SpectrumError::EmptyClass);
        }
        Ok(InertialClass { n, cuspidals })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(label id, multiplicity)` sorted by id.
    pub fn entries(&self) -> impl Iterator<Item = (&str, u32)> {
        self.cuspidals.iter().map(|(id, m)| (id.as_str(), *m))
    }

    pub fn multiplicity(&self, id: &str) -> u32 {
        self.cuspidals.get(id).copied().unwrap_or(0)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.cuspidals.values().copied().max().unwrap_or(0)
    }
}

/// A component of `Ω⁺` for a fixed inertial class: one partition of `m_c`
/// per label `c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentIndex(pub BTreeMap<String, Partition>);

impl ComponentIndex {
    pub fn get(&self, id: &str) -> Option<&Partition> {
        self.0.get(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Partition)> {
        self.0.iter().map(|(id, p)| (id.as_str(), p))
    }

    /// The `γ = 1` component, canonically the ordinary quotient itself.
    pub fn is_identity(&self) -> bool {
        self.0.values().all(|p| p.parts().iter().all(|&t| t == 1))
    }

    /// Shape `∏ Sym^n C^×`: one factor per label and distinct part size.
    pub fn shape(&self) -> ComponentShape {
        let factors =
            self.0
                .iter()
                .flat_map(|(id, partition)| {
                    partition.distinct_part_multiplicities().into_iter().map(
                        move |(part, power)| ShapeFactor {
                            label: id.clone(),
                            part,
                            power,
                        },
                    )
                })
                .collect();
        ComponentShape { factors }
    }
}

/// One factor `Sym^power C^×` of a component, coming from the parts of size
/// `part` in the partition attached to `label`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeFactor {
    pub label: String,
    pub part: u32,
    pub power: u32,
}

impl Serialize for ShapeFactor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(3)?;
        tuple.serialize_element(&self.label)?;
        tuple.serialize_element(&self.part)?;
        tuple.serialize_element(&self.power)?;
        tuple.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct ComponentShape {
    pub factors: Vec<ShapeFactor>,
}

impl ComponentShape {
    /// Number of symmetric-product factors.
    pub fn k(&self) -> usize {
        self.factors.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub index: ComponentIndex,
    pub shape: ComponentShape,
}

impl Serialize for Component {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("Component", 3)?;
        state.serialize_field("component", &self.index)?;
        state.serialize_field("shape", &self.shape)?;
        state.serialize_field("K", &self.shape.k())?;
        state.end()
    }
}

/// All inertial classes of rank `n` built from `inv`: every choice of
/// multiplicities with `Σ dim(c) · m_c = n`. Ordered by the multiplicity
/// vector (in inventory order) decreasing lexicographically.
pub fn enumerate_inertial_classes(inv: &Inventory, n: u32) -> Vec<InertialClass> {
    let mut out = Vec::new();
    let mut counts = vec![0u32; inv.labels().len()];
    fill_multiplicities(inv.labels(), 0, n, &mut counts, &mut out);
    out
}

fn fill_multiplicities(
    labels: &[CuspidalLabel],
    position: usize,
    remaining: u32,
    counts: &mut Vec<u32>,
    out: &mut Vec<InertialClass>,
) {
    if position == labels.len() {
        if remaining == 0 {
            let cuspidals: BTreeMap<String, u32> = labels
                .iter()
                .zip(counts.iter())
                .filter(|(_, &m)| m > 0)
                .map(|(label, &m)| (label.id.clone(), m))
                .collect();
            let n = labels
                .iter()
                .zip(counts.iter())
                .map(|(l, &m)| l.dim * m)
                .sum();
            if !cuspidals.is_empty() {
                out.push(InertialClass { n, cuspidals });
            }
        }
        return;
    }
    let dim = labels[position].dim;
    for m in (0..=remaining / dim).rev() {
        counts[position] = m;
        fill_multiplicities(labels, position + 1, remaining - m * dim, counts, out);
    }
    counts[position] = 0;
}

/// The components of `Ω⁺` for `cls`: the cartesian product over labels of
/// the partitions of each multiplicity, first label outermost.
pub fn component_catalog(cls: &InertialClass) -> Vec<Component> {
    let mut indices = vec![ComponentIndex::default()];
    for (id, multiplicity) in cls.entries() {
        let partitions = enumerate_partitions(multiplicity);
        indices = indices
            .into_iter()
            .flat_map(|prefix| {
                partitions.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.0.insert(id.to_string(), p.clone());
                    next
                })
            })
            .collect();
    }
    indices
        .into_iter()
        .map(|index| {
            let shape = index.shape();
            Component { index, shape }
        })
        .collect()
}

/// `Ω ≅ ∏_c Sym^{m_c} C^×` as its factor list.
pub fn ordinary_quotient_shape(cls: &InertialClass) -> Vec<(String, u32)> {
    cls.entries().map(|(id, m)| (id.to_string(), m)).collect()
}
