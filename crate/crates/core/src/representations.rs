//! Frame representations of extended contact algebras, each checked to be
//! an embedding by exhaustive comparison.
//!
//! * [`build_parametrized_frame`]: worlds are the maximal filters of any
//!   verified WECA.
//! * [`build_type1`] / [`build_type2`]: worlds are couples `(A, s)` of an atom
//!   `A` of a regular closed algebra and a point `s ∈ A`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    eca_from_rc, internally_connected_algebraic, maximal_filters, Element, ExtendedContactAlgebra,
    FilterOrIdeal,
};
use crate::bits::{full_mask, ones};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::frames::{
    first_split, splits, EquivalenceFrame1, EquivalenceFrame2, ParametrizedFrame, Partition,
    PowersetCovering, MAX_WORLDS,
};
use crate::report::{CheckOutcome, VerificationReport};
use crate::topology::RegularClosedAlgebra;

/// A map from the elements of an algebra to subsets of a frame's worlds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub world_count: usize,
    /// `image[a]` is the world mask assigned to element `a`.
    pub image: Vec<u64>,
}

impl Embedding {
    pub fn image(&self, a: Element) -> u64 {
        self.image[a]
    }
}

/// A world of the atom-point constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WorldAtomPoint {
    /// Carrier index of the atom.
    pub atom: usize,
    pub point: usize,
}

#[derive(Debug, Clone)]
pub struct ParametrizedRepresentation {
    pub source: ExtendedContactAlgebra,
    pub filters: Vec<FilterOrIdeal>,
    pub frame: ParametrizedFrame,
    pub embedding: Embedding,
}

#[derive(Debug, Clone)]
pub struct AtomPointRepresentation<F> {
    pub rc: RegularClosedAlgebra,
    pub source: ExtendedContactAlgebra,
    pub worlds: Vec<WorldAtomPoint>,
    pub frame: F,
    pub embedding: Embedding,
}

pub type Type1Representation = AtomPointRepresentation<EquivalenceFrame1>;
pub type Type2Representation = AtomPointRepresentation<EquivalenceFrame2>;

/// Worlds are the maximal filters `s_i = ↑α_i`. `R(U)(s, t)` holds iff every
/// `(a, b) ⊢ d` with `a ∈ s`, `b ∈ t` admits some `e` with `d ≰ e` lying in
/// every filter of `U`. The element `a` goes to `{s : a ∈ s}`.
pub fn build_parametrized_frame(
    e: &ExtendedContactAlgebra,
    caps: &Caps,
) -> Result<ParametrizedRepresentation> {
    let ba = e.algebra();
    Caps::check(ba.len(), caps.elements, "Boolean algebra elements")?;
    let filters = maximal_filters(ba);
    let worlds = filters.len();

    // good[U] = {d : ∃e, d ≰ e and e ∈ u for every u ∈ U}. It depends only
    // on U, so it is computed once per subset instead of once per triple.
    let good: Vec<u64> = (0..1u64 << worlds)
        .map(|u| {
            ba.elements()
                .filter(|&d| {
                    ba.elements()
                        .any(|x| !ba.leq(d, x) && ones(u).all(|w| filters[w].contains(x)))
                })
                .fold(0u64, |acc, d| acc | 1 << d)
        })
        .collect();
    let related = |u: u64, s: usize, t: usize| {
        filters[s].elements().all(|a| {
            filters[t]
                .elements()
                .all(|b| e.covering().row(a, b) & !good[u as usize] == 0)
        })
    };
    let table = (0..1u64 << worlds)
        .map(|u| {
            (0..worlds)
                .map(|s| {
                    (0..worlds)
                        .filter(|&t| related(u, s, t))
                        .fold(0, |acc, t| acc | 1 << t)
                })
                .collect()
        })
        .collect();
    // Shrinking U can only weaken "e lies in every u ∈ U", so R is antitone.
    let frame = ParametrizedFrame::from_table(worlds, table)?.certified_antitone();
    let image = ba
        .elements()
        .map(|a| {
            (0..worlds)
                .filter(|&w| filters[w].contains(a))
                .fold(0, |acc, w| acc | 1 << w)
        })
        .collect();
    Ok(ParametrizedRepresentation {
        source: e.clone(),
        filters,
        frame,
        embedding: Embedding {
            world_count: worlds,
            image,
        },
    })
}

fn atom_point_worlds(rc: &RegularClosedAlgebra) -> Result<Vec<WorldAtomPoint>> {
    let worlds: Vec<WorldAtomPoint> = rc
        .atom_indices()
        .iter()
        .flat_map(|&atom| {
            rc.carrier()[atom]
                .points()
                .map(move |point| WorldAtomPoint { atom, point })
        })
        .collect();
    Caps::check(worlds.len(), MAX_WORLDS, "atom-point worlds")?;
    Ok(worlds)
}

/// `h′(a) = {(A, s) : A ⊆ h(a)}` where `h(a)` is the region of element `a`.
fn atom_point_image(
    rc: &RegularClosedAlgebra,
    source: &ExtendedContactAlgebra,
    worlds: &[WorldAtomPoint],
) -> Embedding {
    let image = source
        .algebra()
        .elements()
        .map(|a| {
            let region = rc.element_set(a as u64);
            worlds
                .iter()
                .enumerate()
                .filter(|(_, w)| rc.carrier()[w.atom].is_subset(&region))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    Embedding {
        world_count: worlds.len(),
        image,
    }
}

fn atom_point_parts(
    rc: &RegularClosedAlgebra,
    caps: &Caps,
) -> Result<(ExtendedContactAlgebra, Vec<WorldAtomPoint>, Embedding)> {
    let source = eca_from_rc(rc, caps)?;
    let worlds = atom_point_worlds(rc)?;
    let embedding = atom_point_image(rc, &source, &worlds);
    Ok((source, worlds, embedding))
}

/// One equivalence relation: couples are related when they share the point.
pub fn build_type1(rc: &RegularClosedAlgebra, caps: &Caps) -> Result<Type1Representation> {
    let (source, worlds, embedding) = atom_point_parts(rc, caps)?;
    let by_point: Vec<usize> = worlds.iter().map(|w| w.point).collect();
    let frame = EquivalenceFrame1::new(Partition::from_ids(&by_point)?);
    Ok(AtomPointRepresentation {
        rc: rc.clone(),
        source,
        worlds,
        frame,
        embedding,
    })
}

/// Two equivalence relations: same atom, and same point.
pub fn build_type2(rc: &RegularClosedAlgebra, caps: &Caps) -> Result<Type2Representation> {
    let (source, worlds, embedding) = atom_point_parts(rc, caps)?;
    let by_atom: Vec<usize> = worlds.iter().map(|w| w.atom).collect();
    let by_point: Vec<usize> = worlds.iter().map(|w| w.point).collect();
    let frame = EquivalenceFrame2::new(
        Partition::from_ids(&by_atom)?,
        Partition::from_ids(&by_point)?,
    )?;
    Ok(AtomPointRepresentation {
        rc: rc.clone(),
        source,
        worlds,
        frame,
        embedding,
    })
}

/// Checks that `image` is injective and preserves `0`, `⋆`, `∪` and the
/// covering relation in both directions. Each failing check carries its
/// least witness tuple.
pub fn verify_embedding<F: PowersetCovering + Sync + ?Sized>(
    source: &ExtendedContactAlgebra,
    target: &F,
    image: &[u64],
) -> VerificationReport {
    let ba = source.algebra();
    let n = ba.len();
    assert_eq!(image.len(), n, "embedding must map every element");
    let full = target.full();
    let mut report = VerificationReport::default();

    let injective = (0..n).find_map(|a| {
        (a + 1..n)
            .find(|&b| image[a] == image[b])
            .map(|b| vec![a as u64, b as u64])
    });
    report.push(CheckOutcome::new("injective", injective));
    report.push(CheckOutcome::new(
        "preserves-zero",
        (image[0] != 0).then(|| vec![0]),
    ));
    let star = (0..n)
        .find(|&a| image[ba.star(a)] != full & !image[a])
        .map(|a| vec![a as u64]);
    report.push(CheckOutcome::new("preserves-star", star));
    let join = (0..n).find_map(|a| {
        (0..n)
            .find(|&b| image[a | b] != image[a] | image[b])
            .map(|b| vec![a as u64, b as u64])
    });
    report.push(CheckOutcome::new("preserves-join", join));
    let covering = (0..n).into_par_iter().find_map_first(|a| {
        (0..n).find_map(|b| {
            (0..n)
                .find(|&d| source.covers(a, b, d) != target.covers(image[a], image[b], image[d]))
                .map(|d| vec![a as u64, b as u64, d as u64])
        })
    });
    report.push(CheckOutcome::new("preserves-covering", covering));
    report
}

/// `c°(a)` in the source iff `c°(image(a))` in the frame, for every element,
/// both sides read off their covering relations.
pub fn verify_c_preservation<F: PowersetCovering + Sync + ?Sized>(
    source: &ExtendedContactAlgebra,
    target: &F,
    image: &[u64],
    caps: &Caps,
) -> Result<CheckOutcome> {
    if let Some(&big) = image.iter().max_by_key(|m| m.count_ones()) {
        Caps::check(
            big.count_ones() as usize,
            caps.naive_worlds,
            "internal connectedness split size",
        )?;
    }
    let verdicts: Vec<Result<bool>> = source
        .algebra()
        .elements()
        .into_par_iter()
        .map(|a| {
            Ok(internally_connected_algebraic(source, a)?
                == first_split(target, image[a]).is_none())
        })
        .collect();
    let mut witness = None;
    for (a, v) in verdicts.into_iter().enumerate() {
        if !v? {
            witness = Some(vec![a as u64]);
            break;
        }
    }
    Ok(CheckOutcome::new("preserves-connectedness", witness))
}

impl ParametrizedRepresentation {
    pub fn verify(&self) -> VerificationReport {
        verify_embedding(&self.source, &self.frame, &self.embedding.image)
    }
}

impl Type1Representation {
    pub fn verify(&self) -> VerificationReport {
        verify_embedding(&self.source, &self.frame, &self.embedding.image)
    }
}

impl Type2Representation {
    pub fn verify(&self, caps: &Caps) -> Result<VerificationReport> {
        let mut report = verify_embedding(&self.source, &self.frame, &self.embedding.image);
        report.push(verify_c_preservation(
            &self.source,
            &self.frame,
            &self.embedding.image,
            caps,
        )?);
        Ok(report)
    }

    /// Pairs `(A₁′, A₂′)` of nonempty world sets with `A₁′ ∪ A₂′ = h′(a)` and
    /// `(A₁′, A₂′) ⊢_W h′(a)⋆`. Empty iff `h′(a)` is internally connected.
    pub fn admissible_splits(&self, a: Element, caps: &Caps) -> Result<Vec<(u64, u64)>> {
        self.source.algebra().check(a)?;
        let region = self.embedding.image(a);
        Caps::check(
            region.count_ones() as usize,
            caps.naive_worlds,
            "split search size",
        )?;
        let outside = self.frame.full() & !region;
        Ok(splits(region)
            .filter(|&(b, d)| self.frame.covers(b, d, outside))
            .collect())
    }

    /// Pulls an admissible split back to the algebra: `aᵢ` is the join of every
    /// `b` whose region lies inside the union of the atoms used by `Aᵢ′`.
    /// Checks that both parts are nonzero, that they join to `a`, and that
    /// `(a₁, a₂) ⊢ a⋆`.
    pub fn lift_split(&self, a: Element, a1p: u64, a2p: u64) -> Result<SplitLift> {
        let ba = self.source.algebra();
        ba.check(a)?;
        let region = self.embedding.image(a);
        if a1p == 0 || a2p == 0 {
            return Err(Error::Precondition(
                "both halves of the split must be nonempty".into(),
            ));
        }
        if a1p | a2p != region || (a1p | a2p) & !full_mask(self.worlds.len()) != 0 {
            return Err(Error::Precondition(format!(
                "the halves must cover exactly the image of element {a}"
            )));
        }
        if !self.frame.covers(a1p, a2p, self.frame.full() & !region) {
            return Err(Error::Precondition(
                "the halves do not cover into the complement of the image".into(),
            ));
        }
        let lift = |part: u64| {
            let atoms = ones(part).fold(self.rc.zero(), |acc, w| {
                acc.union(&self.rc.carrier()[self.worlds[w].atom])
            });
            ba.elements()
                .filter(|&b| self.rc.element_set(b as u64).is_subset(&atoms))
                .fold(0, |acc, b| acc | b)
        };
        let (a1, a2) = (lift(a1p), lift(a2p));
        let mut report = VerificationReport::default();
        report.push(CheckOutcome::flag("parts-nonzero", a1 != 0 && a2 != 0));
        report.push(CheckOutcome::flag("parts-join-to-element", a1 | a2 == a));
        report.push(CheckOutcome::flag(
            "parts-cover-complement",
            self.source.covers(a1, a2, ba.star(a)),
        ));
        Ok(SplitLift { a1, a2, report })
    }

    /// Lifts every admissible split of every element. The first failure,
    /// if any, is reported as `[a, A₁′, A₂′]`.
    pub fn check_all_split_lifts(&self, caps: &Caps) -> Result<SplitSweep> {
        let mut sweep = SplitSweep {
            splits: 0,
            failure: None,
        };
        for a in self.source.algebra().elements() {
            for (a1p, a2p) in self.admissible_splits(a, caps)? {
                sweep.splits += 1;
                let lift = self.lift_split(a, a1p, a2p)?;
                if sweep.failure.is_none() {
                    if let Some(bad) = lift.report.failures().next() {
                        sweep.failure = Some((bad.name.clone(), vec![a as u64, a1p, a2p]));
                    }
                }
            }
        }
        Ok(sweep)
    }
}

#[derive(Debug, Clone)]
pub struct SplitLift {
    pub a1: Element,
    pub a2: Element,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSweep {
    pub splits: usize,
    pub failure: Option<(String, Vec<u64>)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CoveringRelation, FiniteBooleanAlgebra};
    use crate::frames::powerset_eca;
    use crate::pointset::PointSet;
    use crate::topology::FiniteTopology;

    fn caps() -> Caps {
        Caps::default()
    }

    fn discrete_eca(k: usize) -> ExtendedContactAlgebra {
        let ba = FiniteBooleanAlgebra::new(k).unwrap();
        ExtendedContactAlgebra::verify_eca(CoveringRelation::discrete(ba), &caps()).unwrap()
    }

    fn rc(n: usize, subbasis: &[&[usize]]) -> RegularClosedAlgebra {
        let sub: Vec<PointSet> = subbasis
            .iter()
            .map(|s| PointSet::from_points(n, s.iter().copied()).unwrap())
            .collect();
        RegularClosedAlgebra::new(FiniteTopology::generate(n, &sub).unwrap())
    }

    fn seven_point() -> RegularClosedAlgebra {
        rc(7, &[&[0, 1, 2], &[1, 4, 6], &[2, 5, 6]])
    }

    /// The seven-point space with its first point removed.
    fn six_point() -> RegularClosedAlgebra {
        rc(6, &[&[0, 1], &[0, 3, 5], &[1, 4, 5]])
    }

    #[test]
    fn one_atom_parametrized() {
        let r = build_parametrized_frame(&discrete_eca(1), &caps()).unwrap();
        assert_eq!(r.embedding.image, vec![0, 1]);
        assert!(r.verify().all_pass());
    }

    #[test]
    fn two_atom_parametrized() {
        let r = build_parametrized_frame(&discrete_eca(2), &caps()).unwrap();
        assert_eq!(r.embedding.world_count, 2);
        assert_eq!(r.embedding.image(1), 0b01);
        assert!(r.frame.covering_antitone(0b01, 0b10, 0).unwrap());
        assert!(r.frame.covering_naive(0b01, 0b10, 0, &caps()).unwrap());
        assert!(r.verify().all_pass(), "{}", r.verify().to_text());
        let audited = r.frame.clone().audit_antitone(&caps());
        assert!(audited.is_ok());
        assert!(powerset_eca(&r.frame, &caps()).is_ok());
    }

    #[test]
    fn parametrized_from_regions() {
        let e = eca_from_rc(&seven_point(), &caps()).unwrap();
        let r = build_parametrized_frame(&e, &caps()).unwrap();
        assert!(r.verify().all_pass(), "{}", r.verify().to_text());
    }

    #[test]
    fn type1_discrete_two_points() {
        let r = build_type1(
            &RegularClosedAlgebra::new(FiniteTopology::discrete(2).unwrap()),
            &caps(),
        )
        .unwrap();
        assert_eq!(r.worlds.len(), 2);
        assert_eq!(r.embedding.image, vec![0, 1, 2, 3]);
        assert!(r.verify().all_pass());
    }

    #[test]
    fn type1_indiscrete_three_points() {
        let r = build_type1(
            &RegularClosedAlgebra::new(FiniteTopology::indiscrete(3).unwrap()),
            &caps(),
        )
        .unwrap();
        assert_eq!(r.worlds.len(), 3);
        assert!(r.worlds.iter().all(|w| w.atom == r.worlds[0].atom));
        assert!(r.verify().all_pass());
        let t2 = build_type2(&r.rc, &caps()).unwrap();
        let report = t2.verify(&caps()).unwrap();
        assert!(report.all_pass());
        assert!(internally_connected_algebraic(&t2.source, 1).unwrap());
    }

    #[test]
    fn seven_point_space_both_types() {
        let space = seven_point();
        let t1 = build_type1(&space, &caps()).unwrap();
        assert!(t1.verify().all_pass(), "{}", t1.verify().to_text());

        let a = PointSet::from_points(7, 0..6).unwrap();
        let ma = space.element_mask(&a).unwrap() as usize;
        let star = t1.source.algebra().star(ma);
        assert_eq!(
            space.element_set(star as u64),
            PointSet::from_points(7, [3, 4, 5, 6]).unwrap()
        );
        let img = &t1.embedding.image;
        assert!(t1.frame.covers(img[ma], img[star], img[star]));

        let t2 = build_type2(&space, &caps()).unwrap();
        assert_eq!(t2.worlds, t1.worlds);
        assert_eq!(t2.embedding, t1.embedding);
        let report = t2.verify(&caps()).unwrap();
        assert!(report.all_pass(), "{}", report.to_text());
        assert!(
            crate::frames::internally_connected(&t2.frame, t2.embedding.image(ma), &caps())
                .unwrap()
        );
        assert!(t2.admissible_splits(ma, &caps()).unwrap().is_empty());
    }

    #[test]
    fn six_point_space_splits_lift() {
        let space = six_point();
        let t2 = build_type2(&space, &caps()).unwrap();
        assert!(t2.verify(&caps()).unwrap().all_pass());
        let a = PointSet::from_points(6, 0..5).unwrap();
        let ma = space.element_mask(&a).unwrap() as usize;
        assert!(
            !crate::frames::internally_connected(&t2.frame, t2.embedding.image(ma), &caps())
                .unwrap()
        );
        let found = t2.admissible_splits(ma, &caps()).unwrap();
        assert!(!found.is_empty());
        for (p, q) in found {
            let lift = t2.lift_split(ma, p, q).unwrap();
            assert!(lift.report.all_pass(), "{}", lift.report.to_text());
        }
        let sweep = t2.check_all_split_lifts(&caps()).unwrap();
        assert!(sweep.splits > 0);
        assert_eq!(sweep.failure, None);
        assert!(matches!(
            t2.lift_split(ma, 0, t2.embedding.image(ma)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn identity_map_on_a_powerset_is_an_embedding() {
        let f = EquivalenceFrame2::from_ids(&[0, 0, 1], &[0, 1, 1]).unwrap();
        let e = powerset_eca(&f, &caps()).unwrap();
        let image: Vec<u64> = (0..8).collect();
        assert!(verify_embedding(&e, &f, &image).all_pass());
        assert!(verify_c_preservation(&e, &f, &image, &caps()).unwrap().pass);
    }

    #[test]
    fn collapsing_map_fails_with_witnesses() {
        let e = discrete_eca(1);
        let f = EquivalenceFrame1::from_ids(&[0]).unwrap();
        let report = verify_embedding(&e, &f, &[0, 0]);
        assert_eq!(report.get("injective").unwrap().witness, Some(vec![0, 1]));
        assert_eq!(report.get("preserves-star").unwrap().witness, Some(vec![0]));
        assert!(report.get("preserves-zero").unwrap().pass);
    }
}
