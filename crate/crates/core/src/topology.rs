//! Finite topological spaces and the Boolean algebras of regular closed and
//! regular open sets they carry.

use std::collections::BTreeSet;

use crate::bits;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// A finite universe together with its open sets, kept sorted by bit pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    universe: usize,
    opens: Vec<PointSet>,
}

impl FiniteTopology {
    /// The least topology on `{0, .., universe-1}` containing `subbasis`.
    ///
    /// The family is seeded with the subbasis plus ∅ and X, then closed under
    /// pairwise intersection and pairwise union, alternating until neither
    /// pass adds anything.
    pub fn generate(universe: usize, subbasis: &[PointSet]) -> Result<Self> {
        let empty = PointSet::from_bits(universe, 0)?;
        let full = PointSet::full(universe);
        let mut family: BTreeSet<u64> = [empty.bits(), full.bits()].into_iter().collect();
        for set in subbasis {
            if set.universe_size() != universe {
                return Err(Error::InvalidInput(format!(
                    "subbasis member {set} lives in a universe of {} points, expected {universe}",
                    set.universe_size()
                )));
            }
            family.insert(set.bits());
        }

        loop {
            let before = family.len();
            close_under(&mut family, |a, b| a & b);
            close_under(&mut family, |a, b| a | b);
            if family.len() == before {
                break;
            }
        }

        let opens = family
            .into_iter()
            .map(|b| PointSet::from_bits_unchecked(universe, b))
            .collect();
        Ok(FiniteTopology { universe, opens })
    }

    /// Validates an explicit open-set family.
    pub fn from_opens(universe: usize, opens: &[PointSet]) -> Result<Self> {
        PointSet::from_bits(universe, 0)?;
        let family: BTreeSet<u64> = opens.iter().map(|o| o.bits()).collect();
        if opens.iter().any(|o| o.universe_size() != universe) {
            return Err(Error::InvalidInput(
                "open set from a different universe".into(),
            ));
        }
        let full = bits::full_mask(universe);
        if !family.contains(&0) || !family.contains(&full) {
            return Err(Error::InvalidInput(
                "a topology must contain ∅ and X".into(),
            ));
        }
        for &a in &family {
            for &b in &family {
                if !family.contains(&(a & b)) || !family.contains(&(a | b)) {
                    return Err(Error::InvalidInput(format!(
                        "open family is not closed under ∩ and ∪ (at {a:#b}, {b:#b})"
                    )));
                }
            }
        }
        let opens = family
            .into_iter()
            .map(|b| PointSet::from_bits_unchecked(universe, b))
            .collect();
        Ok(FiniteTopology { universe, opens })
    }

    pub fn discrete(universe: usize) -> Result<Self> {
        let singletons = (0..universe)
            .map(|p| PointSet::from_points(universe, [p]))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(universe, &singletons)
    }

    pub fn indiscrete(universe: usize) -> Result<Self> {
        Self::generate(universe, &[])
    }

    /// Every topology on a universe of `universe ≤ 4` points, in a fixed order.
    pub fn enumerate_all(universe: usize) -> Result<Vec<Self>> {
        if universe > 4 {
            return Err(Error::CapExceeded {
                what: "topology enumeration universe",
                size: universe,
                cap: 4,
            });
        }
        PointSet::from_bits(universe, 0)?;
        let full = bits::full_mask(universe);
        // Proper nonempty subsets are the optional members.
        let optional: Vec<u64> = (1..full).collect();
        let mut out = Vec::new();
        for choice in 0u64..(1u64 << optional.len()) {
            let mut family: Vec<u64> = vec![0, full];
            family.extend(bits::ones(choice).map(|i| optional[i]));
            let closed = family.iter().all(|&a| {
                family
                    .iter()
                    .all(|&b| family.contains(&(a & b)) && family.contains(&(a | b)))
            });
            if closed {
                family.sort_unstable();
                let opens = family
                    .into_iter()
                    .map(|b| PointSet::from_bits_unchecked(universe, b))
                    .collect();
                out.push(FiniteTopology { universe, opens });
            }
        }
        Ok(out)
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.universe)
    }

    pub fn empty(&self) -> PointSet {
        PointSet::empty(self.universe)
    }

    fn check_fits(&self, set: &PointSet) -> Result<()> {
        if set.universe_size() != self.universe {
            return Err(Error::InvalidInput(format!(
                "set {set} belongs to a universe of {} points, the space has {}",
                set.universe_size(),
                self.universe
            )));
        }
        Ok(())
    }

    pub fn is_open(&self, set: &PointSet) -> bool {
        self.opens.binary_search(set).is_ok()
    }

    pub fn is_closed(&self, set: &PointSet) -> bool {
        self.is_open(&set.complement())
    }

    /// Union of the opens contained in `set`.
    pub fn interior(&self, set: &PointSet) -> PointSet {
        debug_assert!(self.check_fits(set).is_ok());
        let bits = self
            .opens
            .iter()
            .filter(|u| u.is_subset(set))
            .fold(0, |acc, u| acc | u.bits());
        PointSet::from_bits_unchecked(self.universe, bits)
    }

    /// `X ∖ Int(X ∖ set)`.
    pub fn closure(&self, set: &PointSet) -> PointSet {
        self.interior(&set.complement()).complement()
    }

    pub fn is_regular_closed(&self, set: &PointSet) -> bool {
        self.closure(&self.interior(set)) == *set
    }

    pub fn is_regular_open(&self, set: &PointSet) -> bool {
        self.interior(&self.closure(set)) == *set
    }

    /// Whether `set` is a union of two disjoint nonempty open sets, returning
    /// the first such ordered pair of opens.
    fn open_split(&self, set: &PointSet) -> Option<(PointSet, PointSet)> {
        for u in self
            .opens
            .iter()
            .filter(|u| !u.is_empty() && u.is_subset(set))
        {
            for v in self.opens.iter().filter(|v| !v.is_empty()) {
                if u.is_disjoint(v) && u.union(v) == *set {
                    return Some((*u, *v));
                }
            }
        }
        None
    }
}

fn close_under(family: &mut BTreeSet<u64>, op: impl Fn(u64, u64) -> u64) {
    loop {
        let current: Vec<u64> = family.iter().copied().collect();
        let mut grew = false;
        for (i, &a) in current.iter().enumerate() {
            for &b in &current[i + 1..] {
                grew |= family.insert(op(a, b));
            }
        }
        if !grew {
            break;
        }
    }
}

/// `(RC(X), ∅, ⋆, ∪)` for a finite space, with the contact, covering and
/// internal-connectedness relations on it.
#[derive(Debug, Clone)]
pub struct RegularClosedAlgebra {
    topology: FiniteTopology,
    carrier: Vec<PointSet>,
    atoms: Vec<usize>,
}

impl RegularClosedAlgebra {
    pub fn new(topology: FiniteTopology) -> Self {
        let carrier: BTreeSet<PointSet> = topology
            .opens()
            .iter()
            .map(|u| topology.closure(u))
            .collect();
        let carrier: Vec<PointSet> = carrier.into_iter().collect();
        let atoms = (0..carrier.len())
            .filter(|&i| {
                let a = &carrier[i];
                !a.is_empty()
                    && !carrier
                        .iter()
                        .any(|b| !b.is_empty() && b != a && b.is_subset(a))
            })
            .collect();
        RegularClosedAlgebra {
            topology,
            carrier,
            atoms,
        }
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn carrier(&self) -> &[PointSet] {
        &self.carrier
    }

    pub fn atom_indices(&self) -> &[usize] {
        &self.atoms
    }

    pub fn atoms(&self) -> impl Iterator<Item = &PointSet> + '_ {
        self.atoms.iter().map(|&i| &self.carrier[i])
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn zero(&self) -> PointSet {
        self.topology.empty()
    }

    pub fn one(&self) -> PointSet {
        self.topology.full()
    }

    pub fn contains(&self, set: &PointSet) -> bool {
        self.carrier.binary_search(set).is_ok()
    }

    pub fn index_of(&self, set: &PointSet) -> Option<usize> {
        self.carrier.binary_search(set).ok()
    }

    fn require(&self, set: &PointSet) -> Result<()> {
        if self.contains(set) {
            Ok(())
        } else {
            Err(Error::NotInCarrier(set.to_string()))
        }
    }

    /// `Cl(X ∖ a)`.
    pub fn star(&self, a: &PointSet) -> PointSet {
        self.topology.closure(&a.complement())
    }

    pub fn join(&self, a: &PointSet, b: &PointSet) -> PointSet {
        a.union(b)
    }

    /// `Cl(Int(a ∩ b))`.
    pub fn meet(&self, a: &PointSet, b: &PointSet) -> PointSet {
        self.topology
            .closure(&self.topology.interior(&a.intersection(b)))
    }

    /// Two regions are in contact when they share a point.
    pub fn contact(&self, a: &PointSet, b: &PointSet) -> Result<bool> {
        self.require(a)?;
        self.require(b)?;
        Ok(!a.is_disjoint(b))
    }

    /// `(a, b) ⊢ d` iff the point-set intersection of `a` and `b` lies inside `d`.
    pub fn covering(&self, a: &PointSet, b: &PointSet, d: &PointSet) -> Result<bool> {
        self.require(a)?;
        self.require(b)?;
        self.require(d)?;
        Ok(a.intersection(b).is_subset(d))
    }

    /// True iff `Int(a)` is not the union of two disjoint nonempty open sets.
    pub fn internally_connected(&self, a: &PointSet) -> Result<bool> {
        self.require(a)?;
        Ok(self
            .topology
            .open_split(&self.topology.interior(a))
            .is_none())
    }

    /// Internal connectedness through the covering relation: no decomposition
    /// `a = b ∪ d` into nonzero regions with `(b, d) ⊢ a⋆`.
    pub fn internally_connected_via_covering(&self, a: &PointSet, caps: &Caps) -> Result<bool> {
        self.require(a)?;
        Caps::check(self.len(), caps.elements, "regular closed carrier")?;
        let a_star = self.star(a);
        for b in self.carrier.iter().filter(|b| !b.is_empty()) {
            for d in self.carrier.iter().filter(|d| !d.is_empty()) {
                if b.union(d) == *a && b.intersection(d).is_subset(&a_star) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn atoms_below(&self, a: &PointSet) -> Vec<PointSet> {
        self.atoms()
            .filter(|atom| atom.is_subset(a))
            .copied()
            .collect()
    }

    /// The region that is the join of the atoms selected by `mask`
    /// (bit `i` picks the `i`-th atom in carrier order).
    pub fn element_set(&self, mask: u64) -> PointSet {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(self.zero(), |acc, (_, &c)| acc.union(&self.carrier[c]))
    }

    /// Atom mask of a carrier element.
    pub fn element_mask(&self, set: &PointSet) -> Result<u64> {
        self.require(set)?;
        Ok(self
            .atoms()
            .enumerate()
            .filter(|(_, atom)| atom.is_subset(set))
            .fold(0, |acc, (i, _)| acc | 1 << i))
    }
}

/// `(RO(X), ∅, ⋆, ∪)` with `a⋆ = Int(X ∖ a)` and `a ∪ b = Int(Cl(a ∪ b))`.
#[derive(Debug, Clone)]
pub struct RegularOpenAlgebra {
    topology: FiniteTopology,
    carrier: Vec<PointSet>,
}

impl RegularOpenAlgebra {
    pub fn new(topology: FiniteTopology) -> Self {
        let carrier: BTreeSet<PointSet> = topology
            .opens()
            .iter()
            .map(|u| topology.interior(&u.complement()))
            .collect();
        RegularOpenAlgebra {
            topology,
            carrier: carrier.into_iter().collect(),
        }
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn carrier(&self) -> &[PointSet] {
        &self.carrier
    }

    pub fn contains(&self, set: &PointSet) -> bool {
        self.carrier.binary_search(set).is_ok()
    }

    pub fn zero(&self) -> PointSet {
        self.topology.empty()
    }

    pub fn star(&self, a: &PointSet) -> PointSet {
        self.topology.interior(&a.complement())
    }

    pub fn join(&self, a: &PointSet, b: &PointSet) -> PointSet {
        self.topology.interior(&self.topology.closure(&a.union(b)))
    }

    pub fn meet(&self, a: &PointSet, b: &PointSet) -> PointSet {
        a.intersection(b)
    }

    /// Contact of regular open sets: their closures meet.
    pub fn contact(&self, a: &PointSet, b: &PointSet) -> bool {
        !self
            .topology
            .closure(a)
            .is_disjoint(&self.topology.closure(b))
    }
}

/// Outcome of checking that `A ↦ Int(A)` is a contact-algebra isomorphism
/// from RC(X) onto RO(X) with inverse `B ↦ Cl(B)`.
#[derive(Debug, Clone)]
pub struct RcRoIsomorphism {
    pub map: Vec<(PointSet, PointSet)>,
    pub bijective: bool,
    pub inverse_is_closure: bool,
    pub preserves_zero: bool,
    pub preserves_star: bool,
    pub preserves_join: bool,
    pub preserves_contact: bool,
}

impl RcRoIsomorphism {
    pub fn verified(&self) -> bool {
        self.bijective
            && self.inverse_is_closure
            && self.preserves_zero
            && self.preserves_star
            && self.preserves_join
            && self.preserves_contact
    }
}

pub fn rc_ro_isomorphism_check(topology: &FiniteTopology) -> RcRoIsomorphism {
    let rc = RegularClosedAlgebra::new(topology.clone());
    let ro = RegularOpenAlgebra::new(topology.clone());
    let int = |a: &PointSet| topology.interior(a);
    let map: Vec<(PointSet, PointSet)> = rc.carrier().iter().map(|a| (*a, int(a))).collect();

    let images: BTreeSet<PointSet> = map.iter().map(|(_, b)| *b).collect();
    let bijective = images.len() == rc.len()
        && images.len() == ro.carrier().len()
        && images.iter().all(|b| ro.contains(b));
    let inverse_is_closure = map.iter().all(|(a, b)| topology.closure(b) == *a);
    let preserves_zero = int(&rc.zero()) == ro.zero();
    let preserves_star = map.iter().all(|(a, b)| int(&rc.star(a)) == ro.star(b));
    let mut preserves_join = true;
    let mut preserves_contact = true;
    for (a, ia) in &map {
        for (b, ib) in &map {
            preserves_join &= int(&rc.join(a, b)) == ro.join(ia, ib);
            preserves_contact &= !a.is_disjoint(b) == ro.contact(ia, ib);
        }
    }
    RcRoIsomorphism {
        map,
        bijective,
        inverse_is_closure,
        preserves_zero,
        preserves_star,
        preserves_join,
        preserves_contact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    /// 1-based labels shifted to 0-based indices.
    fn one_based(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().map(|p| p - 1)).unwrap()
    }

    fn seven_point() -> FiniteTopology {
        let sub = [
            one_based(7, &[1, 2, 3]),
            one_based(7, &[2, 5, 7]),
            one_based(7, &[3, 6, 7]),
        ];
        FiniteTopology::generate(7, &sub).unwrap()
    }

    /// Textbook route: finite intersections of subbasis members form a basis,
    /// and a subset is open iff it is the union of the basis sets inside it.
    fn generated_oracle(n: usize, sub: &[u64]) -> Vec<u64> {
        let full = bits::full_mask(n);
        let mut basis: BTreeSet<u64> = BTreeSet::new();
        for choice in 0u64..(1 << sub.len()) {
            basis.insert(bits::ones(choice).fold(full, |acc, i| acc & sub[i]));
        }
        (0..=full)
            .filter(|&s| {
                let covered = basis
                    .iter()
                    .filter(|&&b| bits::is_subset(b, s))
                    .fold(0, |acc, b| acc | b);
                covered == s
            })
            .collect()
    }

    #[test]
    fn seven_point_generation_matches_oracle() {
        let t = seven_point();
        let sub: Vec<u64> = [[1, 2, 3], [2, 5, 7], [3, 6, 7]]
            .iter()
            .map(|s| one_based(7, s).bits())
            .collect();
        let got: Vec<u64> = t.opens().iter().map(|o| o.bits()).collect();
        assert_eq!(got, generated_oracle(7, &sub));
        for s in [&[2][..], &[3], &[7], &[2, 3], &[1, 2, 3]] {
            assert!(t.is_open(&one_based(7, s)), "{s:?} should be open");
        }
        assert_eq!(t.opens().len(), 19);
    }

    #[test]
    fn indiscrete_and_discrete() {
        let t = FiniteTopology::indiscrete(3).unwrap();
        assert_eq!(t.opens(), &[PointSet::empty(3), PointSet::full(3)]);
        let d = FiniteTopology::discrete(2).unwrap();
        assert_eq!(d.opens().len(), 4);
        assert_eq!(t.interior(&set(3, &[0, 1])), PointSet::empty(3));
    }

    #[test]
    fn rejects_empty_universe_and_foreign_subbasis() {
        assert!(matches!(
            FiniteTopology::generate(0, &[]),
            Err(Error::EmptyUniverse)
        ));
        assert!(FiniteTopology::generate(3, &[set(4, &[3])]).is_err());
    }

    #[test]
    fn seven_point_interior_and_closure() {
        let t = seven_point();
        assert_eq!(
            t.interior(&one_based(7, &[1, 2, 3, 4, 5, 6])),
            one_based(7, &[1, 2, 3])
        );
        assert_eq!(
            t.closure(&one_based(7, &[1, 2, 3])),
            one_based(7, &[1, 2, 3, 4, 5, 6])
        );
        assert_eq!(t.closure(&one_based(7, &[7])), one_based(7, &[4, 5, 6, 7]));
        assert_eq!(t.closure(&t.empty()), t.empty());
        assert_eq!(t.interior(&t.full()), t.full());
        assert!(t.is_regular_closed(&one_based(7, &[1, 2, 3, 4, 5, 6])));
        assert!(!t.is_regular_closed(&one_based(7, &[7])));
        assert!(t.is_regular_closed(&t.empty()) && t.is_regular_closed(&t.full()));
    }

    #[test]
    fn closure_is_least_closed_superset() {
        let t = seven_point();
        for bits in 0..128u64 {
            let a = PointSet::from_bits(7, bits).unwrap();
            let by_intersection = t
                .opens()
                .iter()
                .map(|u| u.complement())
                .filter(|c| a.is_subset(c))
                .fold(t.full(), |acc, c| acc.intersection(&c));
            assert_eq!(t.closure(&a), by_intersection);
        }
    }

    #[test]
    fn rc_algebra_examples() {
        let d = RegularClosedAlgebra::new(FiniteTopology::discrete(2).unwrap());
        assert_eq!(d.len(), 4);
        assert_eq!(
            d.atoms().copied().collect::<Vec<_>>(),
            vec![set(2, &[0]), set(2, &[1])]
        );

        let i = RegularClosedAlgebra::new(FiniteTopology::indiscrete(3).unwrap());
        assert_eq!(i.carrier(), &[PointSet::empty(3), PointSet::full(3)]);

        let e = RegularClosedAlgebra::new(seven_point());
        let a = one_based(7, &[1, 2, 3, 4, 5, 6]);
        let b = one_based(7, &[4, 5, 6, 7]);
        assert!(e.contains(&a) && e.contains(&b));
        assert_eq!(e.star(&a), b);
        assert_eq!(e.star(&b), a);
        assert_eq!(e.len(), 8);
        assert_eq!(e.atom_count(), 3);
    }

    #[test]
    fn contact_covering_and_errors() {
        let e = RegularClosedAlgebra::new(seven_point());
        let a = one_based(7, &[1, 2, 3, 4, 5, 6]);
        let b = one_based(7, &[4, 5, 6, 7]);
        assert!(e.contact(&a, &b).unwrap());
        assert!(!e.contact(&e.zero(), &a).unwrap());
        assert!(e.contact(&a, &a).unwrap());
        assert!(e.covering(&a, &b, &b).unwrap());
        assert!(e.covering(&a, &b, &e.one()).unwrap());
        assert!(!e.covering(&a, &b, &e.zero()).unwrap());
        assert!(matches!(
            e.contact(&one_based(7, &[7]), &a),
            Err(Error::NotInCarrier(_))
        ));
    }

    #[test]
    fn internal_connectedness_in_both_spaces() {
        let e = RegularClosedAlgebra::new(seven_point());
        assert!(e
            .internally_connected(&one_based(7, &[1, 2, 3, 4, 5, 6]))
            .unwrap());
        assert!(e.internally_connected(&e.zero()).unwrap());

        let sub = [set(6, &[0, 1]), set(6, &[0, 3, 5]), set(6, &[1, 4, 5])];
        let xp = RegularClosedAlgebra::new(FiniteTopology::generate(6, &sub).unwrap());
        // {2,3,4,5,6} in the 2..7 labelling is indices 0..=4.
        assert!(!xp.internally_connected(&set(6, &[0, 1, 2, 3, 4])).unwrap());
    }

    #[test]
    fn regular_open_algebra_examples() {
        let d = RegularOpenAlgebra::new(FiniteTopology::discrete(2).unwrap());
        assert_eq!(d.carrier().len(), 4);
        let e = RegularOpenAlgebra::new(seven_point());
        assert!(e.contains(&one_based(7, &[7])));
        let i = RegularOpenAlgebra::new(FiniteTopology::indiscrete(3).unwrap());
        assert_eq!(i.carrier().len(), 2);
        for ro in [&d, &e, &i] {
            assert!(ro
                .carrier()
                .iter()
                .all(|a| ro.topology().is_regular_open(a)));
        }
    }

    #[test]
    fn rc_ro_isomorphism() {
        for t in [
            FiniteTopology::discrete(2).unwrap(),
            seven_point(),
            FiniteTopology::indiscrete(3).unwrap(),
        ] {
            let iso = rc_ro_isomorphism_check(&t);
            assert!(iso.verified(), "{iso:?}");
        }
        let d = rc_ro_isomorphism_check(&FiniteTopology::discrete(2).unwrap());
        assert!(d.map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn element_masks_round_trip() {
        let e = RegularClosedAlgebra::new(seven_point());
        for a in e.carrier() {
            let m = e.element_mask(a).unwrap();
            assert_eq!(e.element_set(m), *a);
        }
        assert_eq!(1usize << e.atom_count(), e.len());
    }
}
