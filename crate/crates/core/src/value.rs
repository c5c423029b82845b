use std::fmt;

use serde::{Deserialize, Serialize};

/// Where a Ramsey value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    SearchProved,
    Catalog,
    Formula,
    Mixed,
}

/// An exact Ramsey value or the closed interval `[lo, hi]` known to contain
/// it. `hi == None` means no upper bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ValueRepr", try_from = "ValueRepr")]
pub struct Bounds {
    pub lo: u64,
    pub hi: Option<u64>,
}

/// JSON shape: `6`, `{"lo": 34, "hi": 39}` or `{"ge": 28}`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum ValueRepr {
    Exact(u64),
    Interval { lo: u64, hi: u64 },
    AtLeast { ge: u64 },
}

impl From<Bounds> for ValueRepr {
    fn from(b: Bounds) -> Self {
        match b.hi {
            Some(hi) if hi == b.lo => ValueRepr::Exact(hi),
            Some(hi) => ValueRepr::Interval { lo: b.lo, hi },
            None => ValueRepr::AtLeast { ge: b.lo },
        }
    }
}

impl TryFrom<ValueRepr> for Bounds {
    type Error = String;

    fn try_from(r: ValueRepr) -> Result<Self, String> {
        match r {
            ValueRepr::Exact(v) => Ok(Bounds::exact(v)),
            ValueRepr::Interval { lo, hi } if lo <= hi => Ok(Bounds { lo, hi: Some(hi) }),
            ValueRepr::Interval { lo, hi } => Err(format!("interval lower end {lo} exceeds upper end {hi}")),
            ValueRepr::AtLeast { ge } => Ok(Bounds { lo: ge, hi: None }),
        }
    }
}

impl Bounds {
    pub fn exact(v: u64) -> Self {
        Bounds { lo: v, hi: Some(v) }
    }

    pub fn interval(lo: u64, hi: u64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Bounds { lo, hi: Some(hi) }
    }

    pub fn at_least(lo: u64) -> Self {
        Bounds { lo, hi: None }
    }

    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo)
    }

    pub fn exact_value(&self) -> Option<u64> {
        self.is_exact().then_some(self.lo)
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= self.lo && self.hi.is_none_or(|h| v <= h)
    }

    /// Componentwise maximum; an unbounded side stays unbounded.
    pub fn max(self, other: Bounds) -> Bounds {
        Bounds {
            lo: self.lo.max(other.lo),
            hi: match (self.hi, other.hi) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            },
        }
    }

    pub fn shift(self, by: u64) -> Bounds {
        Bounds { lo: self.lo + by, hi: self.hi.map(|h| h + by) }
    }

    /// Intersection, or `None` when the two ranges are disjoint.
    pub fn intersect(self, other: Bounds) -> Option<Bounds> {
        let lo = self.lo.max(other.lo);
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match hi {
            Some(h) if h < lo => None,
            _ => Some(Bounds { lo, hi }),
        }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) if h == self.lo => write!(f, "{h}"),
            Some(h) => write!(f, "{}-{}", self.lo, h),
            None => write!(f, "≥ {}", self.lo),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamseyValue {
    pub value: Bounds,
    pub provenance: Provenance,
}

impl RamseyValue {
    pub fn new(value: Bounds, provenance: Provenance) -> Self {
        RamseyValue { value, provenance }
    }

    pub fn exact(v: u64, provenance: Provenance) -> Self {
        RamseyValue { value: Bounds::exact(v), provenance }
    }

    pub fn interval(lo: u64, hi: u64, provenance: Provenance) -> Self {
        RamseyValue { value: Bounds::interval(lo, hi), provenance }
    }

    pub fn at_least(lo: u64, provenance: Provenance) -> Self {
        RamseyValue { value: Bounds::at_least(lo), provenance }
    }

    pub fn lo(&self) -> u64 {
        self.value.lo
    }

    pub fn hi(&self) -> Option<u64> {
        self.value.hi
    }

    pub fn is_exact(&self) -> bool {
        self.value.is_exact()
    }
}

impl fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
