//! Finite Boolean algebras carrying a contact or covering relation.
//!
//! An element of an algebra with `k` atoms is the mask of the atoms below
//! it, so the algebra is `{0, .., 2^k - 1}` with `|`, `&` and complement.

mod axioms;
mod filters;

pub use axioms::{
    check_ca, check_eca, check_relative_contacts, check_weca, check_weca_consequences,
    derived_contact, internally_connected_algebraic, relative_contact,
};
pub use filters::{
    check_filter_pair_conditions, left_set, maximal_filters, right_set, FilterKind, FilterOrIdeal,
    FilterPairConditions,
};

use serde::Serialize;

use crate::bits;
use crate::caps::{Caps, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::topology::RegularClosedAlgebra;

pub type Element = usize;

/// Largest atom count: every row of a relation table is one `u64`.
pub const MAX_ATOMS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteBooleanAlgebra {
    atoms: usize,
}

impl FiniteBooleanAlgebra {
    pub fn new(atoms: usize) -> Result<Self> {
        if atoms == 0 {
            return Err(Error::DegenerateAlgebra);
        }
        if atoms > MAX_ATOMS {
            return Err(Error::CapExceeded {
                what: "Boolean algebra elements",
                size: 1 << atoms.min(63),
                cap: MAX_ELEMENTS,
            });
        }
        Ok(FiniteBooleanAlgebra { atoms })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn len(&self) -> usize {
        1 << self.atoms
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn one(&self) -> Element {
        self.len() - 1
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        a | b
    }

    pub fn meet(&self, a: Element, b: Element) -> Element {
        a & b
    }

    pub fn star(&self, a: Element) -> Element {
        self.one() & !a
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        a & !b == 0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Element> {
        (0..self.atoms).map(|i| 1 << i)
    }

    /// Mask over elements with every bit set.
    pub fn all_elements(&self) -> u64 {
        bits::full_mask(self.len())
    }

    pub fn check(&self, a: Element) -> Result<()> {
        if a < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                count: self.len(),
            })
        }
    }
}

/// Dense table of a ternary relation `(a, b) ⊢ d`: one `u64` per pair
/// `(a, b)` whose bit `d` is the entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringRelation {
    algebra: FiniteBooleanAlgebra,
    rows: Vec<u64>,
}

impl CoveringRelation {
    pub fn empty(algebra: FiniteBooleanAlgebra) -> Self {
        CoveringRelation {
            algebra,
            rows: vec![0; algebra.len() * algebra.len()],
        }
    }

    pub fn from_fn(
        algebra: FiniteBooleanAlgebra,
        mut covers: impl FnMut(Element, Element, Element) -> bool,
    ) -> Self {
        let mut rel = Self::empty(algebra);
        for a in algebra.elements() {
            for b in algebra.elements() {
                let row = algebra
                    .elements()
                    .filter(|&d| covers(a, b, d))
                    .fold(0u64, |acc, d| acc | 1 << d);
                rel.rows[a * algebra.len() + b] = row;
            }
        }
        rel
    }

    /// `(a, b) ⊢ d` iff `a ∩ b ≤ d`: the covering of a discrete space.
    pub fn discrete(algebra: FiniteBooleanAlgebra) -> Self {
        Self::from_fn(algebra, |a, b, d| algebra.leq(a & b, d))
    }

    /// Builds a table from its true triples; all other triples are false.
    pub fn from_triples(algebra: FiniteBooleanAlgebra, triples: &[[Element; 3]]) -> Result<Self> {
        let mut rel = Self::empty(algebra);
        for &[a, b, d] in triples {
            algebra.check(a)?;
            algebra.check(b)?;
            algebra.check(d)?;
            rel.set(a, b, d, true);
        }
        Ok(rel)
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn len(&self) -> usize {
        self.algebra.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn covers(&self, a: Element, b: Element, d: Element) -> bool {
        self.row(a, b) >> d & 1 == 1
    }

    /// The set `{d : (a, b) ⊢ d}` as a mask over elements.
    #[inline]
    pub fn row(&self, a: Element, b: Element) -> u64 {
        self.rows[a * self.algebra.len() + b]
    }

    pub fn set(&mut self, a: Element, b: Element, d: Element, value: bool) {
        let row = &mut self.rows[a * self.algebra.len() + b];
        if value {
            *row |= 1 << d;
        } else {
            *row &= !(1 << d);
        }
    }

    pub fn true_triples(&self) -> impl Iterator<Item = [Element; 3]> + '_ {
        let n = self.len();
        (0..n * n).flat_map(move |i| bits::ones(self.rows[i]).map(move |d| [i / n, i % n, d]))
    }
}

/// Dense table of a binary relation on an algebra's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactRelation {
    algebra: FiniteBooleanAlgebra,
    rows: Vec<u64>,
}

impl ContactRelation {
    pub fn from_fn(
        algebra: FiniteBooleanAlgebra,
        mut holds: impl FnMut(Element, Element) -> bool,
    ) -> Self {
        let rows = algebra
            .elements()
            .map(|a| {
                algebra
                    .elements()
                    .filter(|&b| holds(a, b))
                    .fold(0u64, |acc, b| acc | 1 << b)
            })
            .collect();
        ContactRelation { algebra, rows }
    }

    pub fn from_pairs(algebra: FiniteBooleanAlgebra, pairs: &[[Element; 2]]) -> Result<Self> {
        let mut rows = vec![0u64; algebra.len()];
        for &[a, b] in pairs {
            algebra.check(a)?;
            algebra.check(b)?;
            rows[a] |= 1 << b;
        }
        Ok(ContactRelation { algebra, rows })
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    #[inline]
    pub fn holds(&self, a: Element, b: Element) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn row(&self, a: Element) -> u64 {
        self.rows[a]
    }

    pub fn pairs(&self) -> impl Iterator<Item = [Element; 2]> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, &row)| bits::ones(row).map(move |b| [a, b]))
    }
}

/// Which axiom suite a covering table has been checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strength {
    #[serde(rename = "WECA")]
    Weak,
    #[serde(rename = "ECA")]
    Full,
}

/// A Boolean algebra with a covering relation verified to satisfy either
/// WECA₁–WECA₄ or ECA₁–ECA₅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedContactAlgebra {
    covering: CoveringRelation,
    strength: Strength,
}

impl ExtendedContactAlgebra {
    /// Tags the table `ECA` when ECA₁–ECA₅ hold, otherwise `WECA` when
    /// WECA₁–WECA₄ hold, otherwise rejects it with the first failing axiom.
    pub fn classify(covering: CoveringRelation, caps: &Caps) -> Result<Self> {
        if check_eca(&covering, caps)?.all_pass() {
            return Ok(ExtendedContactAlgebra {
                covering,
                strength: Strength::Full,
            });
        }
        let weak = check_weca(&covering, caps)?;
        let fail = weak.failures().next().cloned();
        match fail {
            None => Ok(ExtendedContactAlgebra {
                covering,
                strength: Strength::Weak,
            }),
            Some(fail) => Err(Error::AxiomViolation {
                axiom: fail.name,
                witness: fail.witness.unwrap_or_default(),
            }),
        }
    }

    /// Like [`classify`](Self::classify) but insists on the full ECA suite.
    pub fn verify_eca(covering: CoveringRelation, caps: &Caps) -> Result<Self> {
        let report = check_eca(&covering, caps)?;
        let fail = report.failures().next().cloned();
        match fail {
            None => Ok(ExtendedContactAlgebra {
                covering,
                strength: Strength::Full,
            }),
            Some(fail) => Err(Error::AxiomViolation {
                axiom: fail.name,
                witness: fail.witness.unwrap_or_default(),
            }),
        }
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.covering.algebra()
    }

    pub fn covering(&self) -> &CoveringRelation {
        &self.covering
    }

    pub fn strength(&self) -> Strength {
        self.strength
    }

    pub fn covers(&self, a: Element, b: Element, d: Element) -> bool {
        self.covering.covers(a, b, d)
    }

    pub fn require_eca(&self, what: &'static str) -> Result<()> {
        match self.strength {
            Strength::Full => Ok(()),
            Strength::Weak => Err(Error::RequiresEca(what)),
        }
    }
}

/// Tabulates the covering relation of a regular closed algebra. Element
/// masks select atoms in carrier order, see [`RegularClosedAlgebra::element_set`].
pub fn eca_from_rc(rc: &RegularClosedAlgebra, caps: &Caps) -> Result<ExtendedContactAlgebra> {
    ExtendedContactAlgebra::verify_eca(rc_covering(rc, caps)?, caps)
}

/// The unverified covering table behind [`eca_from_rc`].
pub fn rc_covering(rc: &RegularClosedAlgebra, caps: &Caps) -> Result<CoveringRelation> {
    Caps::check(rc.len(), caps.elements, "regular closed carrier")?;
    let algebra = FiniteBooleanAlgebra::new(rc.atom_count())?;
    let sets: Vec<_> = algebra
        .elements()
        .map(|m| rc.element_set(m as u64))
        .collect();
    Ok(CoveringRelation::from_fn(algebra, |a, b, d| {
        sets[a].intersection(&sets[b]).is_subset(&sets[d])
    }))
}
