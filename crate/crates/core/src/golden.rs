//! Two small spaces with isomorphic contact algebras that disagree on
//! internal connectedness, so contact alone cannot define it.
//!
//! `X = {1..7}` is generated by `{1,2,3}`, `{2,5,7}`, `{3,6,7}`. `X′` drops
//! the point `1`. The map `A ↦ A ∖ {1}` is a contact isomorphism
//! `RC(X) → RC(X′)`, yet `{1..6}` is internally connected in `X` while its
//! image `{2..6}` is not in `X′`.

use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::io::{LabeledTopology, TopologyDoc};
use crate::pointset::PointSet;
use crate::topology::RegularClosedAlgebra;

fn space(universe: &str, subbasis: &[&str]) -> LabeledTopology {
    let labels = |s: &str| {
        s.split(',')
            .map(|l| crate::io::Label::Text(l.to_string()))
            .collect::<Vec<_>>()
    };
    let doc = TopologyDoc {
        universe: labels(universe),
        subbasis: subbasis.iter().map(|s| labels(s)).collect(),
    };
    LabeledTopology::from_doc(&doc).expect("built-in space is well formed")
}

pub fn space_x() -> LabeledTopology {
    space("1,2,3,4,5,6,7", &["1,2,3", "2,5,7", "3,6,7"])
}

pub fn space_x_prime() -> LabeledTopology {
    space("2,3,4,5,6,7", &["2,3", "2,5,7", "3,6,7"])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenReport {
    pub carrier_x: Vec<Vec<String>>,
    pub carrier_x_prime: Vec<Vec<String>>,
    /// `(A, f(A))` for every region of `X`.
    pub mapping: Vec<(Vec<String>, Vec<String>)>,
    pub bijective: bool,
    pub preserves_zero: bool,
    pub preserves_star: bool,
    pub preserves_join: bool,
    pub preserves_contact: bool,
    /// Pairs whose contact verdict changes under `f`.
    pub contact_mismatches: Vec<(Vec<String>, Vec<String>)>,
    pub region_x: Vec<String>,
    pub connected_in_x: bool,
    pub region_x_prime: Vec<String>,
    pub connected_in_x_prime: bool,
    /// The covering-based and open-split definitions agree on both regions.
    pub definitions_agree: bool,
    pub isomorphism_verified: bool,
    pub non_definability_witnessed: bool,
}

/// Checks the isomorphism over every pair of regions and compares the two
/// connectedness verdicts.
pub fn verify(caps: &Caps) -> Result<GoldenReport> {
    let (x, xp) = (space_x(), space_x_prime());
    let (rc, rcp) = (
        RegularClosedAlgebra::new(x.topology.clone()),
        RegularClosedAlgebra::new(xp.topology.clone()),
    );

    // f(A) = A ∖ {1}, read through the labels of X′.
    let f = |a: &PointSet| -> PointSet {
        let names = x.names(a);
        let kept: Vec<&str> = names
            .iter()
            .map(String::as_str)
            .filter(|l| *l != "1")
            .collect();
        xp.set(&kept)
            .expect("labels of X other than 1 belong to X′")
    };
    let images: Vec<PointSet> = rc.carrier().iter().map(f).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = sorted.len() == images.len()
        && images.iter().all(|b| rcp.contains(b))
        && rc.len() == rcp.len();

    let preserves_zero = f(&rc.zero()) == rcp.zero();
    let preserves_star = rc
        .carrier()
        .iter()
        .all(|a| f(&rc.star(a)) == rcp.star(&f(a)));
    let preserves_join = rc.carrier().iter().all(|a| {
        rc.carrier()
            .iter()
            .all(|b| f(&rc.join(a, b)) == rcp.join(&f(a), &f(b)))
    });
    let mut contact_mismatches = Vec::new();
    for a in rc.carrier() {
        for b in rc.carrier() {
            let here = rc.contact(a, b)?;
            let there = rcp.contains(&f(a)) && rcp.contains(&f(b)) && rcp.contact(&f(a), &f(b))?;
            if here != there {
                contact_mismatches.push((x.names(a), x.names(b)));
            }
        }
    }
    let preserves_contact = contact_mismatches.is_empty();

    let region = x.set(&["1", "2", "3", "4", "5", "6"])?;
    let region_p = xp.set(&["2", "3", "4", "5", "6"])?;
    let connected_in_x = rc.internally_connected(&region)?;
    let connected_in_x_prime = rcp.internally_connected(&region_p)?;
    let definitions_agree = rc.internally_connected_via_covering(&region, caps)? == connected_in_x
        && rcp.internally_connected_via_covering(&region_p, caps)? == connected_in_x_prime;

    let isomorphism_verified =
        bijective && preserves_zero && preserves_star && preserves_join && preserves_contact;
    Ok(GoldenReport {
        carrier_x: rc.carrier().iter().map(|a| x.names(a)).collect(),
        carrier_x_prime: rcp.carrier().iter().map(|a| xp.names(a)).collect(),
        mapping: rc
            .carrier()
            .iter()
            .zip(&images)
            .map(|(a, b)| (x.names(a), xp.names(b)))
            .collect(),
        bijective,
        preserves_zero,
        preserves_star,
        preserves_join,
        preserves_contact,
        contact_mismatches,
        region_x: x.names(&region),
        connected_in_x,
        region_x_prime: xp.names(&region_p),
        connected_in_x_prime,
        definitions_agree,
        isomorphism_verified,
        non_definability_witnessed: isomorphism_verified
            && connected_in_x
            && !connected_in_x_prime
            && definitions_agree,
    })
}
