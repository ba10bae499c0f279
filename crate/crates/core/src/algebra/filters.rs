//! Filters and ideals of a finite Boolean algebra, stored as element masks.

use super::{Element, ExtendedContactAlgebra, FiniteBooleanAlgebra};
use crate::bits::ones;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterKind {
    Filter,
    Ideal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterOrIdeal {
    algebra: FiniteBooleanAlgebra,
    members: u64,
    kind: FilterKind,
}

fn is_filter(ba: FiniteBooleanAlgebra, members: u64) -> std::result::Result<(), String> {
    if members == 0 {
        return Err("empty".into());
    }
    for a in ones(members) {
        if let Some(b) = ba
            .elements()
            .find(|&b| ba.leq(a, b) && members >> b & 1 == 0)
        {
            return Err(format!("{a} is a member but {b} ≥ {a} is not"));
        }
        if let Some(b) = ones(members).find(|&b| members >> (a & b) & 1 == 0) {
            return Err(format!("{a} ∩ {b} is missing"));
        }
    }
    Ok(())
}

fn is_ideal(ba: FiniteBooleanAlgebra, members: u64) -> std::result::Result<(), String> {
    if members == 0 {
        return Err("empty".into());
    }
    for a in ones(members) {
        if let Some(b) = ba
            .elements()
            .find(|&b| ba.leq(b, a) && members >> b & 1 == 0)
        {
            return Err(format!("{a} is a member but {b} ≤ {a} is not"));
        }
        if let Some(b) = ones(members).find(|&b| members >> (a | b) & 1 == 0) {
            return Err(format!("{a} ∪ {b} is missing"));
        }
    }
    Ok(())
}

impl FilterOrIdeal {
    /// Nonempty, upward closed and closed under `∩`.
    pub fn filter(algebra: FiniteBooleanAlgebra, members: u64) -> Result<Self> {
        check_members(algebra, members)?;
        is_filter(algebra, members).map_err(|reason| Error::NotFilterOrIdeal {
            kind: "filter",
            reason,
        })?;
        Ok(FilterOrIdeal {
            algebra,
            members,
            kind: FilterKind::Filter,
        })
    }

    /// Nonempty, downward closed and closed under `∪`.
    pub fn ideal(algebra: FiniteBooleanAlgebra, members: u64) -> Result<Self> {
        check_members(algebra, members)?;
        is_ideal(algebra, members).map_err(|reason| Error::NotFilterOrIdeal {
            kind: "ideal",
            reason,
        })?;
        Ok(FilterOrIdeal {
            algebra,
            members,
            kind: FilterKind::Ideal,
        })
    }

    /// `↑a`.
    pub fn principal_filter(algebra: FiniteBooleanAlgebra, a: Element) -> Result<Self> {
        algebra.check(a)?;
        let members = algebra
            .elements()
            .filter(|&b| algebra.leq(a, b))
            .fold(0, |acc, b| acc | 1 << b);
        Ok(FilterOrIdeal {
            algebra,
            members,
            kind: FilterKind::Filter,
        })
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn kind(&self) -> FilterKind {
        self.kind
    }

    /// Membership bitmask over elements.
    pub fn members(&self) -> u64 {
        self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        ones(self.members)
    }

    pub fn contains(&self, a: Element) -> bool {
        a < self.algebra.len() && self.members >> a & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn is_proper(&self) -> bool {
        match self.kind {
            FilterKind::Filter => !self.contains(self.algebra.zero()),
            FilterKind::Ideal => !self.contains(self.algebra.one()),
        }
    }

    /// A proper filter is maximal iff it decides every element: exactly one
    /// of `a`, `a⋆` belongs to it.
    pub fn is_maximal_filter(&self) -> bool {
        self.kind == FilterKind::Filter
            && self.is_proper()
            && self
                .algebra
                .elements()
                .all(|a| self.contains(a) != self.contains(self.algebra.star(a)))
    }
}

fn check_members(algebra: FiniteBooleanAlgebra, members: u64) -> Result<()> {
    if members & !algebra.all_elements() != 0 {
        let element = (members & !algebra.all_elements()).trailing_zeros() as usize;
        return Err(Error::ElementOutOfRange {
            element,
            count: algebra.len(),
        });
    }
    Ok(())
}

/// The maximal filters of a finite algebra: `↑α` for each atom `α`, in atom
/// order. Each one is checked to be maximal before it is returned.
pub fn maximal_filters(algebra: FiniteBooleanAlgebra) -> Vec<FilterOrIdeal> {
    algebra
        .atoms()
        .map(|atom| {
            let f = FilterOrIdeal::principal_filter(algebra, atom).expect("atom is an element");
            assert!(
                f.is_maximal_filter(),
                "principal filter of atom {atom} is not maximal"
            );
            f
        })
        .collect()
}

fn require_filter(f: &FilterOrIdeal, algebra: FiniteBooleanAlgebra) -> Result<()> {
    if f.kind != FilterKind::Filter || f.algebra != algebra {
        return Err(Error::NotFilterOrIdeal {
            kind: "filter",
            reason: "argument is not a filter of this algebra".into(),
        });
    }
    Ok(())
}

/// `uˡ = {b : ∃a ∈ u, (a, b) ⊢ d}`, returned as an ideal.
pub fn left_set(
    e: &ExtendedContactAlgebra,
    u: &FilterOrIdeal,
    d: Element,
) -> Result<FilterOrIdeal> {
    let ba = e.algebra();
    require_filter(u, ba)?;
    ba.check(d)?;
    let members = ba
        .elements()
        .filter(|&b| u.elements().any(|a| e.covers(a, b, d)))
        .fold(0u64, |acc, b| acc | 1 << b);
    FilterOrIdeal::ideal(ba, members)
}

/// `vʳ = {a : ∃b ∈ v, (a, b) ⊢ d}`, returned as an ideal.
pub fn right_set(
    e: &ExtendedContactAlgebra,
    v: &FilterOrIdeal,
    d: Element,
) -> Result<FilterOrIdeal> {
    let ba = e.algebra();
    require_filter(v, ba)?;
    ba.check(d)?;
    let members = ba
        .elements()
        .filter(|&a| v.elements().any(|b| e.covers(a, b, d)))
        .fold(0u64, |acc, a| acc | 1 << a);
    FilterOrIdeal::ideal(ba, members)
}

/// The three conditions of the filter-pair equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterPairConditions {
    /// For all `a ∈ u`, `b ∈ v`: `(a, b) ⊬ d`.
    pub no_covering_pair: bool,
    /// `uˡ ∩ v = ∅`.
    pub left_disjoint: bool,
    /// `u ∩ vʳ = ∅`.
    pub right_disjoint: bool,
}

impl FilterPairConditions {
    pub fn agree(&self) -> bool {
        self.no_covering_pair == self.left_disjoint && self.left_disjoint == self.right_disjoint
    }
}

pub fn check_filter_pair_conditions(
    e: &ExtendedContactAlgebra,
    u: &FilterOrIdeal,
    v: &FilterOrIdeal,
    d: Element,
) -> Result<FilterPairConditions> {
    let ul = left_set(e, u, d)?;
    let vr = right_set(e, v, d)?;
    let no_covering_pair = u
        .elements()
        .all(|a| v.elements().all(|b| !e.covers(a, b, d)));
    Ok(FilterPairConditions {
        no_covering_pair,
        left_disjoint: ul.members() & v.members() == 0,
        right_disjoint: u.members() & vr.members() == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoveringRelation;
    use crate::caps::Caps;

    fn ba(k: usize) -> FiniteBooleanAlgebra {
        FiniteBooleanAlgebra::new(k).unwrap()
    }

    fn discrete(k: usize) -> ExtendedContactAlgebra {
        ExtendedContactAlgebra::verify_eca(CoveringRelation::discrete(ba(k)), &Caps::default())
            .unwrap()
    }

    /// Every filter, found by testing all subsets of the carrier.
    fn all_filters(b: FiniteBooleanAlgebra) -> Vec<u64> {
        (1u64..(1u64 << b.len()))
            .filter(|&m| is_filter(b, m).is_ok())
            .collect()
    }

    #[test]
    fn maximal_filters_match_enumeration() {
        for k in 1..=3 {
            let b = ba(k);
            let filters = all_filters(b);
            let proper: Vec<u64> = filters.iter().copied().filter(|m| m & 1 == 0).collect();
            let maximal: Vec<u64> = proper
                .iter()
                .copied()
                .filter(|&m| !proper.iter().any(|&o| o != m && m & !o == 0))
                .collect();
            let mut got: Vec<u64> = maximal_filters(b).iter().map(|f| f.members()).collect();
            got.sort_unstable();
            let mut want = maximal.clone();
            want.sort_unstable();
            assert_eq!(got, want, "k={k}");
            assert_eq!(got.len(), k);
            for f in maximal_filters(b) {
                assert_eq!(f.len(), 1 << (k - 1));
            }
        }
        // every filter of a finite algebra is principal
        let b = ba(3);
        assert_eq!(all_filters(b).len(), b.len());
    }

    #[test]
    fn k2_maximal_filters() {
        let fs = maximal_filters(ba(2));
        assert_eq!(fs[0].elements().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(fs[1].elements().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn validation_rejects_non_filters() {
        assert!(FilterOrIdeal::filter(ba(2), 0).is_err());
        assert!(FilterOrIdeal::filter(ba(2), 0b0010).is_err());
        assert!(FilterOrIdeal::filter(ba(2), 0b1010).is_ok());
        assert!(FilterOrIdeal::ideal(ba(2), 0b0011).is_ok());
        assert!(FilterOrIdeal::ideal(ba(2), 0b1000).is_err());
    }

    #[test]
    fn left_sets_on_discrete_covering() {
        let e = discrete(1);
        let top = FilterOrIdeal::principal_filter(e.algebra(), 1).unwrap();
        assert_eq!(
            left_set(&e, &top, 0)
                .unwrap()
                .elements()
                .collect::<Vec<_>>(),
            vec![0]
        );

        let e = discrete(2);
        let u = FilterOrIdeal::principal_filter(e.algebra(), 1).unwrap();
        let ul = left_set(&e, &u, 0).unwrap();
        assert_eq!(ul.kind(), FilterKind::Ideal);
        assert_eq!(ul.elements().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(left_set(&e, &u, 3).unwrap().len(), 4);
        assert_eq!(
            right_set(&e, &u, 0).unwrap().elements().collect::<Vec<_>>(),
            vec![0, 2]
        );
    }

    #[test]
    fn left_set_rejects_ideals() {
        let e = discrete(2);
        let i = FilterOrIdeal::ideal(e.algebra(), 0b0011).unwrap();
        assert!(matches!(
            left_set(&e, &i, 0),
            Err(Error::NotFilterOrIdeal { kind: "filter", .. })
        ));
    }

    #[test]
    fn filter_pair_condition_examples() {
        let e = discrete(2);
        let b = e.algebra();
        let a1 = FilterOrIdeal::principal_filter(b, 1).unwrap();
        let a2 = FilterOrIdeal::principal_filter(b, 2).unwrap();
        let top = FilterOrIdeal::principal_filter(b, 3).unwrap();

        let same = check_filter_pair_conditions(&e, &a1, &a1, 0).unwrap();
        assert_eq!(
            same,
            FilterPairConditions {
                no_covering_pair: true,
                left_disjoint: true,
                right_disjoint: true
            }
        );

        let apart = check_filter_pair_conditions(&e, &a1, &a2, 0).unwrap();
        assert_eq!(
            apart,
            FilterPairConditions {
                no_covering_pair: false,
                left_disjoint: false,
                right_disjoint: false
            }
        );

        let trivial = check_filter_pair_conditions(&e, &top, &top, 3).unwrap();
        assert!(!trivial.no_covering_pair && trivial.agree());
    }
}
