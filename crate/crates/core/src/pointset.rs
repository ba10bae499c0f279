use std::cmp::Ordering;
use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Largest universe a [`PointSet`] can live in.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of the finite universe `{0, .., n-1}`.
///
/// Sets over the same universe compare by their bit pattern, which is the
/// canonical order used for open-set families and carriers.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    universe: u8,
    bits: u64,
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= MAX_UNIVERSE);
        PointSet {
            universe: universe as u8,
            bits: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        debug_assert!(universe <= MAX_UNIVERSE);
        PointSet {
            universe: universe as u8,
            bits: bits::full_mask(universe),
        }
    }

    pub fn from_bits(universe: usize, bits: u64) -> Result<Self> {
        check_universe(universe)?;
        let extra = bits & !bits::full_mask(universe);
        if extra != 0 {
            return Err(Error::PointOutOfRange {
                point: extra.trailing_zeros() as usize,
                universe,
            });
        }
        Ok(PointSet {
            universe: universe as u8,
            bits,
        })
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(universe: usize, points: I) -> Result<Self> {
        check_universe(universe)?;
        let mut bits = 0u64;
        for p in points {
            if p >= universe {
                return Err(Error::PointOutOfRange { point: p, universe });
            }
            bits |= 1 << p;
        }
        Ok(PointSet {
            universe: universe as u8,
            bits,
        })
    }

    pub(crate) fn from_bits_unchecked(universe: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !bits::full_mask(universe), 0);
        PointSet {
            universe: universe as u8,
            bits,
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.universe_size() && self.bits >> point & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn points(&self) -> impl Iterator<Item = usize> {
        bits::ones(self.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            universe: self.universe,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            universe: self.universe,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        PointSet {
            universe: self.universe,
            bits: self.bits & !other.bits,
        }
    }

    /// `X ∖ self`.
    pub fn complement(&self) -> Self {
        PointSet {
            universe: self.universe,
            bits: !self.bits & bits::full_mask(self.universe_size()),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        bits::is_subset(self.bits, other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }
}

fn check_universe(universe: usize) -> Result<()> {
    if universe == 0 {
        Err(Error::EmptyUniverse)
    } else if universe > MAX_UNIVERSE {
        Err(Error::UniverseTooLarge {
            size: universe,
            max: MAX_UNIVERSE,
        })
    } else {
        Ok(())
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints 0-based member indices, e.g. `{0,2,3}`.
impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet({}/{})", self, self.universe)
    }
}
