//! Relational frames and the covering (or contact) relation each induces on
//! the powerset of its worlds. Subsets of `W` are `u64` masks, so `|W| ≤ 64`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{
    ContactRelation, CoveringRelation, ExtendedContactAlgebra, FiniteBooleanAlgebra,
};
use crate::bits::{full_mask, ones, submasks, supersets};
use crate::caps::Caps;
use crate::error::{Error, Result};

pub const MAX_WORLDS: usize = 64;

/// Largest world set whose relation map is materialized as a table.
pub const MAX_TABLE_WORLDS: usize = 16;

/// A frame viewed through the covering relation `⊢_W` on subsets of its worlds.
pub trait PowersetCovering {
    fn world_count(&self) -> usize;
    fn covers(&self, a: u64, b: u64, d: u64) -> bool;

    fn full(&self) -> u64 {
        full_mask(self.world_count())
    }
}

fn check_world_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidFrame(
            "a frame needs at least one world".into(),
        ));
    }
    Caps::check(n, MAX_WORLDS, "frame worlds")
}

fn check_subset(n: usize, set: u64) -> Result<()> {
    if set & !full_mask(n) != 0 {
        return Err(Error::InvalidFrame(format!(
            "world {} is outside a frame of {n} worlds",
            (set & !full_mask(n)).trailing_zeros()
        )));
    }
    Ok(())
}

type RelationFn = Arc<dyn Fn(u64, usize, usize) -> bool + Send + Sync>;

/// How `U ↦ R(U)` is stored.
#[derive(Clone)]
pub enum RelationMap {
    /// `table[U][s]` is the row `{t : R(U)(s, t)}`.
    Table(Vec<Vec<u64>>),
    /// `R(U)(s, t)` computed on demand.
    Predicate(RelationFn),
}

impl fmt::Debug for RelationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationMap::Table(t) => write!(f, "Table({} relations)", t.len()),
            RelationMap::Predicate(_) => f.write_str("Predicate"),
        }
    }
}

/// A world set with a binary relation `R(U)` for every `U ⊆ W`.
///
/// `(A, B) ⊢_W D` iff no `s ∈ A`, `t ∈ B` and `U ⊇ D` have `R(U)(s, t)`.
#[derive(Debug, Clone)]
pub struct ParametrizedFrame {
    worlds: usize,
    relation: RelationMap,
    antitone: bool,
}

impl ParametrizedFrame {
    /// `table` has one relation per subset, indexed by mask, each given as
    /// `|W|` rows.
    pub fn from_table(worlds: usize, table: Vec<Vec<u64>>) -> Result<Self> {
        check_world_count(worlds)?;
        Caps::check(worlds, MAX_TABLE_WORLDS, "materialized frame worlds")?;
        if table.len() != 1 << worlds {
            return Err(Error::InvalidFrame(format!(
                "relation map has {} entries, expected one per subset ({})",
                table.len(),
                1u64 << worlds
            )));
        }
        for (u, rel) in table.iter().enumerate() {
            if rel.len() != worlds {
                return Err(Error::InvalidFrame(format!(
                    "R({u:#b}) has {} rows, expected {worlds}",
                    rel.len()
                )));
            }
            for &row in rel {
                check_subset(worlds, row)?;
            }
        }
        Ok(ParametrizedFrame {
            worlds,
            relation: RelationMap::Table(table),
            antitone: false,
        })
    }

    pub fn from_fn(
        worlds: usize,
        relation: impl Fn(u64, usize, usize) -> bool + Send + Sync + 'static,
    ) -> Result<Self> {
        check_world_count(worlds)?;
        Ok(ParametrizedFrame {
            worlds,
            relation: RelationMap::Predicate(Arc::new(relation)),
            antitone: false,
        })
    }

    /// Marks the frame antitone (`U ⊆ U′` implies `R(U′) ⊆ R(U)`) on the
    /// word of a constructor that guarantees it.
    pub(crate) fn certified_antitone(mut self) -> Self {
        self.antitone = true;
        self
    }

    pub fn is_antitone(&self) -> bool {
        self.antitone
    }

    pub fn relation_map(&self) -> &RelationMap {
        &self.relation
    }

    #[inline]
    pub fn related(&self, u: u64, s: usize, t: usize) -> bool {
        match &self.relation {
            RelationMap::Table(table) => table[u as usize][s] >> t & 1 == 1,
            RelationMap::Predicate(f) => f(u, s, t),
        }
    }

    /// Row `{t : R(U)(s, t)}`.
    pub fn row(&self, u: u64, s: usize) -> u64 {
        match &self.relation {
            RelationMap::Table(table) => table[u as usize][s],
            RelationMap::Predicate(f) => (0..self.worlds)
                .filter(|&t| f(u, s, t))
                .fold(0, |acc, t| acc | 1 << t),
        }
    }

    /// Tabulates a predicate-backed map. Keeps the antitone certificate.
    pub fn materialize(&self) -> Result<Self> {
        Caps::check(self.worlds, MAX_TABLE_WORLDS, "materialized frame worlds")?;
        let table = (0..1u64 << self.worlds)
            .map(|u| (0..self.worlds).map(|s| self.row(u, s)).collect())
            .collect();
        Ok(ParametrizedFrame {
            worlds: self.worlds,
            relation: RelationMap::Table(table),
            antitone: self.antitone,
        })
    }

    /// Checks `R(U ∪ {w}) ⊆ R(U)` for every `U` and `w`, which gives
    /// antitonicity for all pairs `U ⊆ U′`. Sets the certificate on success.
    pub fn audit_antitone(mut self, caps: &Caps) -> Result<Self> {
        Caps::check(self.worlds, caps.naive_worlds, "antitonicity audit worlds")?;
        for u in 0..1u64 << self.worlds {
            for w in ones(!u & self.full()) {
                let larger = u | 1 << w;
                for s in 0..self.worlds {
                    let extra = self.row(larger, s) & !self.row(u, s);
                    if extra != 0 {
                        return Err(Error::NotAntitone {
                            smaller: u,
                            larger,
                            s,
                            t: extra.trailing_zeros() as usize,
                        });
                    }
                }
            }
        }
        self.antitone = true;
        Ok(self)
    }

    /// The definition: every `U ⊇ D` is tried.
    pub fn covering_naive(&self, a: u64, b: u64, d: u64, caps: &Caps) -> Result<bool> {
        Caps::check(
            self.worlds,
            caps.naive_worlds,
            "superset enumeration worlds (use the antitone evaluator)",
        )?;
        for set in [a, b, d] {
            check_subset(self.worlds, set)?;
        }
        Ok(self.naive(a, b, d))
    }

    fn naive(&self, a: u64, b: u64, d: u64) -> bool {
        supersets(d, self.full()).all(|u| ones(a).all(|s| self.row(u, s) & b == 0))
    }

    /// On an antitone frame `R(D)` is the largest relation among `U ⊇ D`,
    /// so only `U = D` needs checking.
    pub fn covering_antitone(&self, a: u64, b: u64, d: u64) -> Result<bool> {
        if !self.antitone {
            return Err(Error::InvalidFrame(
                "frame has no antitonicity certificate; run the audit first".into(),
            ));
        }
        for set in [a, b, d] {
            check_subset(self.worlds, set)?;
        }
        Ok(self.shortcut(a, b, d))
    }

    fn shortcut(&self, a: u64, b: u64, d: u64) -> bool {
        ones(a).all(|s| self.row(d, s) & b == 0)
    }
}

impl PowersetCovering for ParametrizedFrame {
    fn world_count(&self) -> usize {
        self.worlds
    }

    /// Antitone frames take the shortcut; others enumerate supersets.
    fn covers(&self, a: u64, b: u64, d: u64) -> bool {
        if self.antitone {
            self.shortcut(a, b, d)
        } else {
            self.naive(a, b, d)
        }
    }
}

/// A partition of the worlds given by class ids. `class_of(s)` is the
/// mask of the class containing `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    ids: Vec<usize>,
    class_of: Vec<u64>,
    classes: Vec<u64>,
}

impl Partition {
    pub fn from_ids(ids: &[usize]) -> Result<Self> {
        check_world_count(ids.len())?;
        let mut classes: Vec<(usize, u64)> = Vec::new();
        for (w, &id) in ids.iter().enumerate() {
            match classes.iter_mut().find(|(c, _)| *c == id) {
                Some((_, mask)) => *mask |= 1 << w,
                None => classes.push((id, 1 << w)),
            }
        }
        let class_of = ids
            .iter()
            .map(|id| classes.iter().find(|(c, _)| c == id).unwrap().1)
            .collect();
        Ok(Partition {
            ids: ids.to_vec(),
            class_of,
            classes: classes.into_iter().map(|(_, m)| m).collect(),
        })
    }

    pub fn identity(worlds: usize) -> Result<Self> {
        Self::from_ids(&(0..worlds).collect::<Vec<_>>())
    }

    pub fn single(worlds: usize) -> Result<Self> {
        Self::from_ids(&vec![0; worlds])
    }

    pub fn world_count(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    /// `R(s)`.
    pub fn class_of(&self, s: usize) -> u64 {
        self.class_of[s]
    }

    /// Distinct classes in order of first appearance.
    pub fn classes(&self) -> &[u64] {
        &self.classes
    }
}

/// `A ∩ B ⊆ D`, and every set in `views` that meets both `A` and `B` meets `D`.
fn view_covering(views: &[u64], a: u64, b: u64, d: u64) -> bool {
    a & b & !d == 0
        && views
            .iter()
            .all(|&v| v & a == 0 || v & b == 0 || v & d != 0)
}

/// A world set with one equivalence relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceFrame1 {
    equiv: Partition,
}

impl EquivalenceFrame1 {
    pub fn new(equiv: Partition) -> Self {
        EquivalenceFrame1 { equiv }
    }

    pub fn from_ids(ids: &[usize]) -> Result<Self> {
        Ok(Self::new(Partition::from_ids(ids)?))
    }

    pub fn equiv(&self) -> &Partition {
        &self.equiv
    }

    pub fn covering(&self, a: u64, b: u64, d: u64) -> Result<bool> {
        for set in [a, b, d] {
            check_subset(self.world_count(), set)?;
        }
        Ok(self.covers(a, b, d))
    }
}

impl PowersetCovering for EquivalenceFrame1 {
    fn world_count(&self) -> usize {
        self.equiv.world_count()
    }

    /// `R(s)` ranges over the classes, so each class is tested once.
    fn covers(&self, a: u64, b: u64, d: u64) -> bool {
        view_covering(self.equiv.classes(), a, b, d)
    }
}

/// A world set with two equivalence relations. Coverings look through
/// `R₁(R₂(s))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceFrame2 {
    equiv1: Partition,
    equiv2: Partition,
    views: Vec<u64>,
}

impl EquivalenceFrame2 {
    pub fn new(equiv1: Partition, equiv2: Partition) -> Result<Self> {
        if equiv1.world_count() != equiv2.world_count() {
            return Err(Error::InvalidFrame(format!(
                "partitions cover {} and {} worlds",
                equiv1.world_count(),
                equiv2.world_count()
            )));
        }
        let mut views: Vec<u64> = (0..equiv1.world_count())
            .map(|s| ones(equiv2.class_of(s)).fold(0, |acc, t| acc | equiv1.class_of(t)))
            .collect();
        views.sort_unstable();
        views.dedup();
        Ok(EquivalenceFrame2 {
            equiv1,
            equiv2,
            views,
        })
    }

    pub fn from_ids(ids1: &[usize], ids2: &[usize]) -> Result<Self> {
        Self::new(Partition::from_ids(ids1)?, Partition::from_ids(ids2)?)
    }

    pub fn equiv1(&self) -> &Partition {
        &self.equiv1
    }

    pub fn equiv2(&self) -> &Partition {
        &self.equiv2
    }

    /// `⋃ {R₁(t) : t ∈ R₂(s)}`.
    pub fn r1r2_class(&self, s: usize) -> Result<u64> {
        if s >= self.world_count() {
            return Err(Error::InvalidFrame(format!(
                "world {s} is outside a frame of {} worlds",
                self.world_count()
            )));
        }
        Ok(ones(self.equiv2.class_of(s)).fold(0, |acc, t| acc | self.equiv1.class_of(t)))
    }

    pub fn covering(&self, a: u64, b: u64, d: u64) -> Result<bool> {
        for set in [a, b, d] {
            check_subset(self.world_count(), set)?;
        }
        Ok(self.covers(a, b, d))
    }
}

impl PowersetCovering for EquivalenceFrame2 {
    fn world_count(&self) -> usize {
        self.equiv1.world_count()
    }

    fn covers(&self, a: u64, b: u64, d: u64) -> bool {
        view_covering(&self.views, a, b, d)
    }
}

/// A world set with a reflexive symmetric relation, inducing a contact on
/// subsets: `A` and `B` touch iff some `s ∈ A`, `t ∈ B` are related.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvFrame {
    rows: Vec<u64>,
}

impl GvFrame {
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_world_count(n)?;
        for (s, &row) in rows.iter().enumerate() {
            check_subset(n, row)?;
            if row >> s & 1 == 0 {
                return Err(Error::InvalidRelation("reflexive"));
            }
            if ones(row).any(|t| rows[t] >> s & 1 == 0) {
                return Err(Error::InvalidRelation("symmetric"));
            }
        }
        Ok(GvFrame { rows })
    }

    pub fn from_pairs(worlds: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_world_count(worlds)?;
        let mut rows = vec![0u64; worlds];
        for &(s, t) in pairs {
            if s >= worlds || t >= worlds {
                return Err(Error::InvalidFrame(format!(
                    "pair ({s},{t}) is outside {worlds} worlds"
                )));
            }
            rows[s] |= 1 << t;
        }
        Self::new(rows)
    }

    pub fn world_count(&self) -> usize {
        self.rows.len()
    }

    pub fn contact(&self, a: u64, b: u64) -> bool {
        ones(a).any(|s| self.rows[s] & b != 0)
    }
}

/// `∃s ∈ A, t ∈ B: R(s, t)` for a reflexive symmetric `R` given as rows.
pub fn gv_contact(rows: &[u64], a: u64, b: u64) -> Result<bool> {
    let frame = GvFrame::new(rows.to_vec())?;
    for set in [a, b] {
        check_subset(frame.world_count(), set)?;
    }
    Ok(frame.contact(a, b))
}

fn powerset_algebra(worlds: usize, caps: &Caps) -> Result<FiniteBooleanAlgebra> {
    Caps::check(worlds, caps.powerset_worlds, "powerset algebra worlds")?;
    FiniteBooleanAlgebra::new(worlds)
}

/// Tabulates `⊢_W` on `P(W)` (atoms are the singletons) and tags it ECA or
/// WECA, rejecting tables that satisfy neither.
pub fn powerset_eca<F: PowersetCovering + ?Sized>(
    frame: &F,
    caps: &Caps,
) -> Result<ExtendedContactAlgebra> {
    let algebra = powerset_algebra(frame.world_count(), caps)?;
    let covering = CoveringRelation::from_fn(algebra, |a, b, d| {
        frame.covers(a as u64, b as u64, d as u64)
    });
    ExtendedContactAlgebra::classify(covering, caps)
}

/// The contact relation of a [`GvFrame`] on `P(W)`.
pub fn powerset_contact(frame: &GvFrame, caps: &Caps) -> Result<ContactRelation> {
    let algebra = powerset_algebra(frame.world_count(), caps)?;
    Ok(ContactRelation::from_fn(algebra, |a, b| {
        frame.contact(a as u64, b as u64)
    }))
}

/// `c°` read off the covering: no nonempty `B`, `D` with `B ∪ D = A` and
/// `(B, D) ⊢_W W ∖ A`. Each of the `3^|A|` candidate pairs is tried.
pub fn internally_connected<F: PowersetCovering + ?Sized>(
    frame: &F,
    a: u64,
    caps: &Caps,
) -> Result<bool> {
    check_subset(frame.world_count(), a)?;
    Caps::check(
        a.count_ones() as usize,
        caps.naive_worlds,
        "internal connectedness split size",
    )?;
    Ok(first_split(frame, a).is_none())
}

/// The first pair `(B, D)` splitting `A`, in increasing order of `B` then of
/// the part of `B` shared with `D`.
pub(crate) fn first_split<F: PowersetCovering + ?Sized>(frame: &F, a: u64) -> Option<(u64, u64)> {
    let outside = frame.full() & !a;
    splits(a).find(|&(b, d)| frame.covers(b, d, outside))
}

/// Every pair of nonempty `B`, `D` with `B ∪ D = A`.
pub(crate) fn splits(a: u64) -> impl Iterator<Item = (u64, u64)> {
    submasks(a)
        .filter(|&b| b != 0)
        .flat_map(move |b| submasks(b).map(move |shared| (b, (a & !b) | shared)))
        .filter(|&(_, d)| d != 0)
}
