//! Symbolic subsets of the unit circle: empty, finite sets of rational
//! angles, or the whole circle.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::Error;

/// A point `e^{2πiθ}` of the circle with `θ ∈ [0, 1)` rational, kept in
/// lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Ratio<u64>);

impl Angle {
    pub fn new(numer: u64, denom: u64) -> Option<Angle> {
        if denom == 0 || numer >= denom {
            return None;
        }
        Some(Angle(Ratio::new(numer, denom)))
    }

    pub fn zero() -> Angle {
        Angle(Ratio::new(0, 1))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts `p/q` or a bare `p` (which must then be `0`).
    fn from_str(s: &str) -> Result<Angle, Error> {
        let bad = || Error::InvalidSubset(format!("bad angle `{s}`, expected p/q in [0,1)"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        Angle::new(p, q).ok_or_else(bad)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum CircleSet {
    #[default]
    Empty,
    /// Non-empty finite set; construct through [`CircleSet::finite`].
    Finite(BTreeSet<Angle>),
    Full,
}

impl CircleSet {
    pub fn finite<I: IntoIterator<Item = Angle>>(angles: I) -> CircleSet {
        let set: BTreeSet<Angle> = angles.into_iter().collect();
        if set.is_empty() {
            CircleSet::Empty
        } else {
            CircleSet::Finite(set)
        }
    }

    pub fn point(a: Angle) -> CircleSet {
        CircleSet::finite([a])
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CircleSet::Empty)
    }

    pub fn is_full(&self) -> bool {
        matches!(self, CircleSet::Full)
    }

    /// Topological closure. Finite sets are already closed.
    pub fn closure(&self) -> CircleSet {
        self.clone()
    }

    pub fn union(&self, other: &CircleSet) -> CircleSet {
        match (self, other) {
            (CircleSet::Full, _) | (_, CircleSet::Full) => CircleSet::Full,
            (CircleSet::Empty, x) | (x, CircleSet::Empty) => x.clone(),
            (CircleSet::Finite(a), CircleSet::Finite(b)) => {
                CircleSet::Finite(a.union(b).copied().collect())
            }
        }
    }

    pub fn is_subset(&self, other: &CircleSet) -> bool {
        match (self, other) {
            (CircleSet::Empty, _) | (_, CircleSet::Full) => true,
            (CircleSet::Full, _) => false,
            (CircleSet::Finite(_), CircleSet::Empty) => false,
            (CircleSet::Finite(a), CircleSet::Finite(b)) => a.is_subset(b),
        }
    }

    /// Complement within the circle, when it stays in the family.
    pub fn complement(&self) -> Result<CircleSet, Error> {
        match self {
            CircleSet::Empty => Ok(CircleSet::Full),
            CircleSet::Full => Ok(CircleSet::Empty),
            CircleSet::Finite(_) => Err(Error::UnrepresentableComplement),
        }
    }

    pub fn angles(&self) -> impl Iterator<Item = &Angle> {
        match self {
            CircleSet::Finite(a) => Some(a.iter()),
            _ => None,
        }
        .into_iter()
        .flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles_reduce() {
        let a = Angle::new(2, 6).unwrap();
        assert_eq!(a.to_string(), "1/3");
        assert_eq!("1/3".parse::<Angle>().unwrap(), a);
        assert_eq!("0".parse::<Angle>().unwrap(), Angle::zero());
        assert!("1".parse::<Angle>().is_err());
        assert!("3/2".parse::<Angle>().is_err());
        assert!("1/0".parse::<Angle>().is_err());
        assert!(Angle::new(1, 1).is_none());
    }

    #[test]
    fn normalization_and_algebra() {
        assert_eq!(CircleSet::finite([]), CircleSet::Empty);
        let a = CircleSet::point(Angle::zero());
        let b = CircleSet::point(Angle::new(1, 4).unwrap());
        let ab = a.union(&b);
        assert!(a.is_subset(&ab));
        assert!(!ab.is_subset(&a));
        assert_eq!(ab.union(&CircleSet::Full), CircleSet::Full);
        assert_eq!(ab.closure(), ab);
        assert_eq!(CircleSet::Full.closure(), CircleSet::Full);
        assert_eq!(CircleSet::Empty.complement().unwrap(), CircleSet::Full);
        assert_eq!(ab.complement(), Err(Error::UnrepresentableComplement));
    }
}
