//! Exact finite-or-infinite cardinal arithmetic.
//!
//! Everything the theorems in this crate distinguish is "finite vs infinite";
//! finer infinite cardinals are out of scope. Finite values are arbitrary
//! precision so that products of per-block socle sizes never overflow.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A cardinal that is either an exact non-negative integer or infinite.
#[derive(Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(from = "NatRepr")]
pub enum ExtendedNat {
    Finite(BigUint),
    Infinite,
}

impl ExtendedNat {
    pub fn finite<T: Into<BigUint>>(value: T) -> Self {
        ExtendedNat::Finite(value.into())
    }

    pub fn zero() -> Self {
        ExtendedNat::Finite(BigUint::zero())
    }

    pub fn one() -> Self {
        ExtendedNat::Finite(BigUint::one())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedNat::Infinite)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ExtendedNat::Finite(value) if value.is_one())
    }

    /// The finite value, if there is one.
    pub fn as_finite(&self) -> Option<&BigUint> {
        match self {
            ExtendedNat::Finite(value) => Some(value),
            ExtendedNat::Infinite => None,
        }
    }

    /// Finite value as `u64` when it fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.as_finite().and_then(|value| u64::try_from(value).ok())
    }

    /// Cardinal product. `Infinite * 0 = 0` by the direct-sum convention: an
    /// empty factor kills the product, while any nonzero factor times an
    /// infinite one is infinite.
    pub fn mul(&self, other: &ExtendedNat) -> ExtendedNat {
        match (self, other) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a * b),
            (ExtendedNat::Finite(a), ExtendedNat::Infinite) if a.is_zero() => ExtendedNat::zero(),
            (ExtendedNat::Infinite, ExtendedNat::Finite(b)) if b.is_zero() => ExtendedNat::zero(),
            _ => ExtendedNat::Infinite,
        }
    }

    /// `self^exp` where the exponent is itself a cardinal. An infinite
    /// exponent over a base > 1 is infinite; bases 0 and 1 are absorbing.
    pub fn pow(&self, exp: &ExtendedNat) -> ExtendedNat {
        match self {
            ExtendedNat::Finite(base) if base.is_one() => ExtendedNat::one(),
            ExtendedNat::Finite(base) if base.is_zero() => match exp {
                ExtendedNat::Finite(e) if e.is_zero() => ExtendedNat::one(),
                _ => ExtendedNat::zero(),
            },
            _ => match exp {
                ExtendedNat::Finite(e) if e.is_zero() => ExtendedNat::one(),
                ExtendedNat::Finite(e) => match self {
                    ExtendedNat::Finite(base) => {
                        match u32::try_from(e) {
                            Ok(small) => ExtendedNat::Finite(base.pow(small)),
                            // A u32-overflowing exponent on a base >= 2 has no
                            // representable finite value here; saturate upward.
                            Err(_) => ExtendedNat::Infinite,
                        }
                    }
                    ExtendedNat::Infinite => ExtendedNat::Infinite,
                },
                ExtendedNat::Infinite => ExtendedNat::Infinite,
            },
        }
    }
}

impl PartialOrd for ExtendedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => a.cmp(b),
            (ExtendedNat::Finite(_), ExtendedNat::Infinite) => Ordering::Less,
            (ExtendedNat::Infinite, ExtendedNat::Finite(_)) => Ordering::Greater,
            (ExtendedNat::Infinite, ExtendedNat::Infinite) => Ordering::Equal,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(value: u64) -> Self {
        ExtendedNat::finite(value)
    }
}

impl From<usize> for ExtendedNat {
    fn from(value: usize) -> Self {
        ExtendedNat::finite(value as u64)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(value) => write!(f, "{value}"),
            ExtendedNat::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(value) => match self.to_u64() {
                Some(small) => serializer.serialize_u64(small),
                None => serializer.serialize_str(&value.to_string()),
            },
            ExtendedNat::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// JSON form: a number, a decimal string, or the string "inf".
#[derive(Deserialize)]
#[serde(untagged)]
enum NatRepr {
    Number(u64),
    Text(String),
}

impl From<NatRepr> for ExtendedNat {
    fn from(repr: NatRepr) -> Self {
        match repr {
            NatRepr::Number(value) => ExtendedNat::finite(value),
            NatRepr::Text(text) if text == "inf" => ExtendedNat::Infinite,
            NatRepr::Text(text) => text
                .parse::<BigUint>()
                .map(ExtendedNat::Finite)
                .unwrap_or(ExtendedNat::Infinite),
        }
    }
}
