//! Exhaustive axiom sweeps. Each sweep visits its variables in the order
//! they are listed in the axiom and reports the lexicographically least
//! failing tuple. Row masks stand in for the innermost loop where the
//! innermost variable is the third argument of `⊢`.

use super::{
    ContactRelation, CoveringRelation, Element, ExtendedContactAlgebra, FiniteBooleanAlgebra,
};
use crate::bits::{is_subset, ones};
use crate::caps::Caps;
use crate::error::Result;
use crate::report::{AxiomReport, CheckOutcome, Report};

type Witness = Option<Vec<u64>>;

fn tuple(items: &[usize]) -> Vec<u64> {
    items.iter().map(|&x| x as u64).collect()
}

fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

fn check_tuple_cap(ba: FiniteBooleanAlgebra, caps: &Caps) -> Result<()> {
    Caps::check(
        ba.len(),
        caps.tuple_elements,
        "algebra size for tuple enumeration",
    )
}

// ---- contact algebras ----

pub fn check_ca(contact: &ContactRelation) -> AxiomReport {
    let ba = contact.algebra();
    let n = ba.len();
    let c = |a, b| contact.holds(a, b);

    let ca1 = || {
        for a in 0..n {
            for b in 0..n {
                if !c(a, b) {
                    continue;
                }
                for d in (0..n).filter(|&d| ba.leq(a, d)) {
                    for e in (0..n).filter(|&e| ba.leq(b, e)) {
                        if !c(d, e) {
                            return Some(tuple(&[a, b, d, e]));
                        }
                    }
                }
            }
        }
        None
    };
    let ca2 = || {
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        if c(a | d, b | e) && !(c(a, b) || c(a, e) || c(d, b) || c(d, e)) {
                            return Some(tuple(&[a, b, d, e]));
                        }
                    }
                }
            }
        }
        None
    };
    let ca3 = || {
        contact
            .pairs()
            .find(|&[a, b]| a == 0 || b == 0)
            .map(|p| tuple(&p))
    };
    let ca4 = || (1..n).find(|&a| !c(a, a)).map(|a| tuple(&[a]));
    let ca5 = || contact.pairs().find(|&[a, b]| !c(b, a)).map(|p| tuple(&p));

    Report {
        checks: vec![
            CheckOutcome::new("CA1", ca1()),
            CheckOutcome::new("CA2", ca2()),
            CheckOutcome::new("CA3", ca3()),
            CheckOutcome::new("CA4", ca4()),
            CheckOutcome::new("CA5", ca5()),
        ],
    }
}

// ---- extended contact algebras ----

fn eca1(v: &CoveringRelation) -> Witness {
    let n = v.len();
    for a in 0..n {
        for b in 0..n {
            let row = v.row(a, b);
            if row == 0 {
                continue;
            }
            for d in 0..n {
                for e in 0..n {
                    let target = v.row(a | d, b | e);
                    if let Some(f) = ones(row).find(|&f| target >> (d | e | f) & 1 == 0) {
                        return Some(tuple(&[a, b, d, e, f]));
                    }
                }
            }
        }
    }
    None
}

/// For each `(a, b)` the set `S = {f : (a,b) ⊢ f}` must absorb
/// `{f : (d,e) ⊢ f}` whenever `d, e ∈ S`.
fn eca2(v: &CoveringRelation) -> Witness {
    let n = v.len();
    for a in 0..n {
        for b in 0..n {
            let s = v.row(a, b);
            for d in ones(s) {
                for e in ones(s) {
                    let missing = v.row(d, e) & !s;
                    if missing != 0 {
                        return Some(tuple(&[a, b, d, e, lowest(missing)]));
                    }
                }
            }
        }
    }
    None
}

fn eca3(v: &CoveringRelation) -> Witness {
    let ba = v.algebra();
    for a in ba.elements() {
        for b in ba.elements() {
            for f in ba.elements() {
                if (ba.leq(a, f) || ba.leq(b, f)) && !v.covers(a, b, f) {
                    return Some(tuple(&[a, b, f]));
                }
            }
        }
    }
    None
}

fn eca4(v: &CoveringRelation) -> Witness {
    let ba = v.algebra();
    v.true_triples()
        .find(|&[a, b, f]| !ba.leq(a & b, f))
        .map(|t| tuple(&t))
}

fn eca5(v: &CoveringRelation) -> Witness {
    v.true_triples()
        .find(|&[a, b, f]| !v.covers(b, a, f))
        .map(|t| tuple(&t))
}

pub fn check_eca(v: &CoveringRelation, caps: &Caps) -> Result<AxiomReport> {
    check_tuple_cap(v.algebra(), caps)?;
    Ok(Report {
        checks: vec![
            CheckOutcome::new("ECA1", eca1(v)),
            CheckOutcome::new("ECA2", eca2(v)),
            CheckOutcome::new("ECA3", eca3(v)),
            CheckOutcome::new("ECA4", eca4(v)),
            CheckOutcome::new("ECA5", eca5(v)),
        ],
    })
}

// ---- weak extended contact algebras ----

fn weca1(v: &CoveringRelation) -> Witness {
    let ba = v.algebra();
    let n = ba.len();
    for a in 0..n {
        for b in 0..n {
            let row = v.row(a, b);
            for d in (0..n).filter(|&d| ba.leq(a, d)) {
                for e in (0..n).filter(|&e| ba.leq(b, e)) {
                    let missing = v.row(d, e) & !row;
                    if missing != 0 {
                        return Some(tuple(&[a, b, d, e, lowest(missing)]));
                    }
                }
            }
        }
    }
    None
}

fn weca2(v: &CoveringRelation) -> Witness {
    let ba = v.algebra();
    let all = ba.all_elements();
    for a in ba.elements() {
        for b in ba.elements() {
            if a == 0 || b == 0 {
                let missing = all & !v.row(a, b);
                if missing != 0 {
                    return Some(tuple(&[a, b, lowest(missing)]));
                }
            }
        }
    }
    None
}

fn weca3(v: &CoveringRelation) -> Witness {
    let n = v.len();
    for a in 0..n {
        for b in 0..n {
            let row = v.row(a, b);
            if row == 0 {
                continue;
            }
            for d in 0..n {
                for e in 0..n {
                    let common = row & v.row(d, e);
                    let missing = common & !(v.row(a & d, b | e) & v.row(a | d, b & e));
                    if missing != 0 {
                        return Some(tuple(&[a, b, d, e, lowest(missing)]));
                    }
                }
            }
        }
    }
    None
}

fn weca4(v: &CoveringRelation) -> Witness {
    let ba = v.algebra();
    let n = ba.len();
    for a in 0..n {
        for b in 0..n {
            let row = v.row(a, b);
            for d in ones(row) {
                if let Some(f) = (0..n).find(|&f| ba.leq(d, f) && row >> f & 1 == 0) {
                    return Some(tuple(&[a, b, d, f]));
                }
            }
        }
    }
    None
}

pub fn check_weca(v: &CoveringRelation, caps: &Caps) -> Result<AxiomReport> {
    check_tuple_cap(v.algebra(), caps)?;
    Ok(Report {
        checks: vec![
            CheckOutcome::new("WECA1", weca1(v)),
            CheckOutcome::new("WECA2", weca2(v)),
            CheckOutcome::new("WECA3", weca3(v)),
            CheckOutcome::new("WECA4", weca4(v)),
        ],
    })
}

// ---- derived relations ----

/// `C(a, b)` iff `(a, b) ⊬ 0`.
pub fn derived_contact(v: &CoveringRelation) -> ContactRelation {
    relative_contact(v, 0)
}

/// `RC(g)(a, b)` iff `(a, b) ⊬ g`.
pub fn relative_contact(v: &CoveringRelation, g: Element) -> ContactRelation {
    ContactRelation::from_fn(v.algebra(), |a, b| !v.covers(a, b, g))
}

/// Items 1–5 of the relative-contact properties, for every `g`. Witness
/// tuples list the item's variables followed by `g`.
pub fn check_relative_contacts(v: &CoveringRelation, caps: &Caps) -> Result<AxiomReport> {
    let ba = v.algebra();
    check_tuple_cap(ba, caps)?;
    let n = ba.len();
    let all = ba.all_elements();
    // bit g of `rc(a, b)` is RC(g)(a, b)
    let rc = |a: usize, b: usize| all & !v.row(a, b);

    let item1 = || {
        for a in 0..n {
            for b in 0..n {
                for d in (0..n).filter(|&d| ba.leq(a, d)) {
                    for e in (0..n).filter(|&e| ba.leq(b, e)) {
                        let bad = rc(a, b) & !rc(d, e);
                        if bad != 0 {
                            return Some(tuple(&[a, b, d, e, lowest(bad)]));
                        }
                    }
                }
            }
        }
        None
    };
    let item2 = || {
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        let bad = rc(a | d, b | e) & !(rc(a, b) | rc(a, e) | rc(d, b) | rc(d, e));
                        if bad != 0 {
                            return Some(tuple(&[a, b, d, e, lowest(bad)]));
                        }
                    }
                }
            }
        }
        None
    };
    let item3 = || {
        for a in 0..n {
            for b in 0..n {
                let r = rc(a, b);
                if let Some(g) = ones(r).find(|&g| ba.leq(a, g) || ba.leq(b, g)) {
                    return Some(tuple(&[a, b, g]));
                }
            }
        }
        None
    };
    let item4 = || {
        for a in 0..n {
            if let Some(g) = (0..n).find(|&g| !ba.leq(a, g) && rc(a, a) >> g & 1 == 0) {
                return Some(tuple(&[a, g]));
            }
        }
        None
    };
    let item5 = || {
        for a in 0..n {
            for b in 0..n {
                let bad = rc(a, b) & !rc(b, a);
                if bad != 0 {
                    return Some(tuple(&[a, b, lowest(bad)]));
                }
            }
        }
        None
    };

    Ok(Report {
        checks: vec![
            CheckOutcome::new("RC-monotone", item1()),
            CheckOutcome::new("RC-join-split", item2()),
            CheckOutcome::new("RC-nonzero", item3()),
            CheckOutcome::new("RC-reflexive", item4()),
            CheckOutcome::new("RC-symmetric", item5()),
        ],
    })
}

/// Items 1–6 of the WECA consequences.
pub fn check_weca_consequences(v: &CoveringRelation, caps: &Caps) -> Result<AxiomReport> {
    let ba = v.algebra();
    check_tuple_cap(ba, caps)?;
    let n = ba.len();
    let all = ba.all_elements();
    let one = ba.one();

    let item1 = || {
        let missing = all & !v.row(0, one);
        (missing != 0).then(|| tuple(&[lowest(missing)]))
    };
    let item2 = || {
        let missing = all & !v.row(one, 0);
        (missing != 0).then(|| tuple(&[lowest(missing)]))
    };
    let item3 = || {
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let bad = v.row(a, d) & v.row(b, d) & !v.row(a | b, d);
                    if bad != 0 {
                        return Some(tuple(&[a, b, d, lowest(bad)]));
                    }
                }
            }
        }
        None
    };
    let item4 = || {
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let bad = v.row(a, b) & v.row(a, d) & !v.row(a, b | d);
                    if bad != 0 {
                        return Some(tuple(&[a, b, d, lowest(bad)]));
                    }
                }
            }
        }
        None
    };
    let item5 = || {
        for a in 0..n {
            for b in 0..n {
                for d in (0..n).filter(|&d| ba.leq(d, a)) {
                    let bad = v.row(a, b) & !v.row(d, b);
                    if bad != 0 {
                        return Some(tuple(&[a, b, d, lowest(bad)]));
                    }
                }
            }
        }
        None
    };
    let item6 = || {
        for a in 0..n {
            for b in 0..n {
                for d in (0..n).filter(|&d| ba.leq(d, b)) {
                    let bad = v.row(a, b) & !v.row(a, d);
                    if bad != 0 {
                        return Some(tuple(&[a, b, d, lowest(bad)]));
                    }
                }
            }
        }
        None
    };

    Ok(Report {
        checks: vec![
            CheckOutcome::new("zero-one-covers", item1()),
            CheckOutcome::new("one-zero-covers", item2()),
            CheckOutcome::new("left-join", item3()),
            CheckOutcome::new("right-join", item4()),
            CheckOutcome::new("left-downward", item5()),
            CheckOutcome::new("right-downward", item6()),
        ],
    })
}

/// `a` is internally connected iff there are no nonzero `b, d` with
/// `a = b ∪ d` and `(b, d) ⊢ a⋆`. Vacuously true for `a = 0`.
pub fn internally_connected_algebraic(e: &ExtendedContactAlgebra, a: Element) -> Result<bool> {
    let ba = e.algebra();
    ba.check(a)?;
    let a_star = ba.star(a);
    for b in (1..ba.len()).filter(|&b| is_subset(b as u64, a as u64)) {
        for d in 1..ba.len() {
            if b | d == a && e.covers(b, d, a_star) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
