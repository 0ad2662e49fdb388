//! Exact rationals and coordinates for unramified quasicharacters.
//!
//! An unramified quasicharacter of the Weil group is `w ↦ z^{d(w)}` for a
//! single `z ∈ C^×`. We only ever store `z = q^{-s} e^{2πiθ}` through the
//! exact pair `(s, θ)`; the residue cardinality `q` is needed for display
//! and nothing else.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("residue field cardinality q must be at least 2, got {0}")]
    ResidueCardinality(u64),
}

/// A rational number kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Panics on a zero denominator, like integer division.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn integer(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    /// Representative of `self` modulo `modulus` in `[0, modulus)`.
    pub fn rem_euclid(&self, modulus: Rational) -> Rational {
        assert!(modulus > Rational::ZERO, "modulus must be positive");
        let k = (*self / modulus).floor();
        *self - modulus * Rational::integer(k)
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl std::ops::Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| ArithError::Parse(text.to_string()))
        };
        match text.split_once('/') {
            None => Ok(Rational::integer(parse(text)?)),
            Some((numer, denom)) => {
                let (numer, denom) = (parse(numer)?, parse(denom)?);
                if denom == 0 {
                    return Err(ArithError::ZeroDenominator(text.to_string()));
                }
                Ok(Rational::new(numer, denom))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // Integers are accepted as a convenience; strings are the canonical form.
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(text) => text.parse().map_err(de::Error::custom),
            Repr::Int(value) => Ok(Rational::integer(value)),
        }
    }
}

/// Exact coordinate `(s, θ)` of the unramified quasicharacter with
/// `z = q^{-s} e^{2πiθ}`. The angle is kept in `[0, 1)`.
///
/// The norm character `| |` is `(1, 0)`, so multiplying by `| |^k` adds `k`
/// to `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TwistCoord {
    s: Rational,
    theta: Rational,
}

impl TwistCoord {
    pub const IDENTITY: TwistCoord = TwistCoord {
        s: Rational::ZERO,
        theta: Rational::ZERO,
    };

    pub fn new(s: Rational, theta: Rational) -> Self {
        TwistCoord {
            s,
            theta: theta.rem_euclid(Rational::ONE),
        }
    }

    pub fn s(&self) -> Rational {
        self.s
    }

    pub fn theta(&self) -> Rational {
        self.theta
    }

    /// Same angle, exponent replaced.
    pub fn with_s(&self, s: Rational) -> Self {
        TwistCoord {
            s,
            theta: self.theta,
        }
    }

    pub fn inverse(&self) -> Self {
        TwistCoord::new(-self.s, -self.theta)
    }

    pub fn is_unitary(&self) -> bool {
        self.s.is_zero()
    }
}

impl Mul for TwistCoord {
    type Output = TwistCoord;
    fn mul(self, rhs: TwistCoord) -> TwistCoord {
        twist_mul(self, rhs)
    }
}

impl fmt::Display for TwistCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.theta)
    }
}

impl Serialize for TwistCoord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("TwistCoord", 2)?;
        state.serialize_field("s", &self.s)?;
        state.serialize_field("theta", &self.theta)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for TwistCoord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            s: Rational,
            theta: Rational,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(TwistCoord::new(raw.s, raw.theta))
    }
}

/// Pointwise product of quasicharacters: exponents add, angles add mod 1.
pub fn twist_mul(a: TwistCoord, b: TwistCoord) -> TwistCoord {
    TwistCoord::new(a.s + b.s, a.theta + b.theta)
}

/// Coordinate of `| |^k`.
pub fn norm_power(k: Rational) -> TwistCoord {
    TwistCoord::new(k, Rational::ZERO)
}

/// Reduces the angle modulo `1/t`. A cuspidal orbit with `t` unramified
/// self-twists is the torus `C^×/μ_t`, and this picks the representative
/// with `θ ∈ [0, 1/t)`.
pub fn canonicalize_mod_torsion(z: TwistCoord, torsion: u32) -> TwistCoord {
    assert!(torsion >= 1, "torsion must be positive");
    TwistCoord {
        s: z.s,
        theta: z.theta.rem_euclid(Rational::new(1, torsion as i64)),
    }
}

/// Floating approximation of `z = q^{-s} e^{2πiθ}` as `(re, im)`. Display only.
pub fn twist_to_complex(z: TwistCoord, q: u64) -> Result<(f64, f64), ArithError> {
    if q < 2 {
        return Err(ArithError::ResidueCardinality(q));
    }
    let modulus = (q as f64).powf(-z.s.to_f64());
    let angle = std::f64::consts::TAU * z.theta.to_f64();
    Ok((modulus * angle.cos(), modulus * angle.sin()))
}
