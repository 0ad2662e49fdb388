//! Integer partitions as cycle types of symmetric-group elements.
//!
//! Conjugacy classes of `S_r` are indexed by partitions of `r`. Permutations
//! themselves are never built here; everything downstream only needs the
//! distinct part sizes `t_j`, their multiplicities `n_j`, and the order of
//! the centralizer `Z(γ) = ∏ (Z/t_j ≀ S_{n_j})`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

/// A partition, parts stored non-increasing. Serializes as a JSON array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; returns `None` if any part is zero.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct parts in increasing order with their multiplicities.
    pub fn distinct_part_multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &part in self.parts.iter().rev() {
            match out.last_mut() {
                Some((t, n)) if *t == part => *n += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        self.distinct_part_multiplicities().len()
    }

    /// `∏_j t_j^{n_j} · n_j!`
    pub fn centralizer_order(&self) -> u128 {
        self.distinct_part_multiplicities()
            .into_iter()
            .map(|(t, n)| (t as u128).pow(n) * factorial(n))
            .product()
    }

    /// `r! / |Z(γ)|`
    pub fn conjugacy_class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_order()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts)
            .ok_or_else(|| serde::de::Error::custom("partition parts must be positive"))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// `n!`, exact for `n ≤ 34`.
pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `r` in lexicographically decreasing order,
/// e.g. `[3], [2,1], [1,1,1]`. `r = 0` yields the single empty partition.
pub fn enumerate_partitions(r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(r, r, &mut current, &mut out);
    out
}

fn extend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of `r`, by the standard recurrence over the largest
/// allowed part.
pub fn partition_count(r: u32) -> u64 {
    let r = r as usize;
    let mut table = vec![0u64; r + 1];
    table[0] = 1;
    for part in 1..=r {
        for total in part..=r {
            table[total] += table[total - part];
        }
    }
    table[r]
}
