//! The CLI's commands as functions returning text, JSON and a verdict.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    check_ca, check_eca, check_relative_contacts, check_weca, check_weca_consequences,
    derived_contact, rc_covering, CoveringRelation, ExtendedContactAlgebra,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::frames::PowersetCovering;
use crate::io::{Document, Frame, LabeledTopology};
use crate::report::{CheckOutcome, Report};
use crate::representations::{
    build_parametrized_frame, build_type1, build_type2, AtomPointRepresentation, Embedding,
};
use crate::topology::RegularClosedAlgebra;
use crate::{campaign, golden};

pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl CommandOutput {
    /// Pretty JSON with a trailing newline.
    pub fn json_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

fn tag(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

/// Carrier, atoms and connectedness of a topology's regular closed algebra.
pub fn rc(topology: &LabeledTopology, caps: &Caps, verbose: bool) -> Result<CommandOutput> {
    let rc = RegularClosedAlgebra::new(topology.topology.clone());
    Caps::check(rc.len(), caps.elements, "regular closed carrier")?;
    let mut text = format!(
        "universe: {} points, {} open sets\nregular closed regions: {}\natoms: {}\n",
        topology.labels.len(),
        topology.topology.opens().len(),
        rc.len(),
        rc.atoms()
            .map(|a| topology.show(a))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let mut regions = Vec::new();
    for a in rc.carrier() {
        let connected = rc.internally_connected(a)?;
        let atom = rc.atoms().any(|x| x == a);
        text.push_str(&format!(
            "  {:<24} star {:<24} connected {}{}\n",
            topology.show(a),
            topology.show(&rc.star(a)),
            tag(connected),
            if atom { "  (atom)" } else { "" }
        ));
        regions.push(json!({
            "set": topology.names(a),
            "atom": atom,
            "star": topology.names(&rc.star(a)),
            "internally_connected": connected,
        }));
    }
    let mut out = json!({
        "universe": topology.labels,
        "opens": topology.topology.opens().len(),
        "regions": regions,
    });
    if verbose {
        let mut contact = Vec::new();
        text.push_str("contact:\n");
        for a in rc.carrier() {
            let row: Vec<bool> = rc
                .carrier()
                .iter()
                .map(|b| rc.contact(a, b))
                .collect::<Result<_>>()?;
            text.push_str(&format!(
                "  {:<24} {}\n",
                topology.show(a),
                row.iter()
                    .map(|&c| if c { '1' } else { '.' })
                    .collect::<String>()
            ));
            contact.push(row);
        }
        let v = rc_covering(&rc, caps)?;
        out["contact"] = json!(contact);
        out["covering"] = json!(v.true_triples().collect::<Vec<_>>());
        text.push_str(&format!(
            "covering: {} true triples over atom masks\n",
            v.true_triples().count()
        ));
    }
    Ok(CommandOutput {
        text,
        json: out,
        passed: true,
    })
}

fn section(report: &mut Value, text: &mut String, name: &str, checks: Report) -> bool {
    text.push_str(&format!("{name}:\n{}", checks.to_text()));
    let pass = checks.all_pass();
    report[name] = serde_json::to_value(&checks).expect("reports serialize");
    pass
}

/// Every axiom family on the covering table of the input.
pub fn check_axioms(doc: &Document, caps: &Caps) -> Result<CommandOutput> {
    let (source, v): (&str, CoveringRelation) = match doc {
        Document::Topology(t) => (
            "topology",
            rc_covering(&RegularClosedAlgebra::new(t.topology.clone()), caps)?,
        ),
        Document::Eca(e) => ("algebra", e.covering()?),
        Document::Frame(f) => {
            let frame: Box<dyn PowersetCovering> = match f.frame()? {
                Frame::Type1(f) => Box::new(f),
                Frame::Type2(f) => Box::new(f),
            };
            Caps::check(
                frame.world_count(),
                caps.powerset_worlds,
                "powerset algebra worlds",
            )?;
            let ba = crate::algebra::FiniteBooleanAlgebra::new(frame.world_count())?;
            (
                "frame",
                CoveringRelation::from_fn(ba, |a, b, d| frame.covers(a as u64, b as u64, d as u64)),
            )
        }
    };
    Caps::check(v.len(), caps.elements, "Boolean algebra elements")?;
    let mut text = format!(
        "{source} with {} atoms ({} elements)\n",
        v.algebra().atom_count(),
        v.len()
    );
    let mut out = json!({ "source": source, "atoms": v.algebra().atom_count() });
    let eca = section(&mut out, &mut text, "eca", check_eca(&v, caps)?);
    let weca = section(&mut out, &mut text, "weca", check_weca(&v, caps)?);
    let ca = section(
        &mut out,
        &mut text,
        "contact",
        check_ca(&derived_contact(&v)),
    );
    let rel = section(
        &mut out,
        &mut text,
        "relative_contact",
        check_relative_contacts(&v, caps)?,
    );
    let cons = section(
        &mut out,
        &mut text,
        "consequences",
        check_weca_consequences(&v, caps)?,
    );
    let verdict = if eca {
        "ECA"
    } else if weca {
        "WECA"
    } else {
        "neither"
    };
    text.push_str(&format!("classification: {verdict}\n"));
    out["classification"] = json!(verdict);
    Ok(CommandOutput {
        text,
        json: out,
        passed: eca && weca && ca && rel && cons,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Parametrized,
    Type1,
    Type2,
}

fn embedding_json(labels: &[String], embedding: &Embedding) -> Value {
    let mut map = serde_json::Map::new();
    for (label, &image) in labels.iter().zip(&embedding.image) {
        map.insert(
            label.clone(),
            json!(crate::bits::ones(image).collect::<Vec<_>>()),
        );
    }
    Value::Object(map)
}

fn atom_point_labels<F>(
    topology: &LabeledTopology,
    r: &AtomPointRepresentation<F>,
) -> (Vec<String>, Vec<String>) {
    let elements = r
        .source
        .algebra()
        .elements()
        .map(|a| topology.show(&r.rc.element_set(a as u64)))
        .collect();
    let worlds = r
        .worlds
        .iter()
        .map(|w| {
            format!(
                "({},{})",
                topology.show(&r.rc.carrier()[w.atom]),
                topology.labels[w.point]
            )
        })
        .collect();
    (elements, worlds)
}

/// Builds the chosen frame, checks the embedding and reports both.
pub fn represent(doc: &Document, kind: Kind, caps: &Caps) -> Result<CommandOutput> {
    let (report, frame, labels, embedding) = match (kind, doc) {
        (Kind::Parametrized, Document::Topology(_) | Document::Eca(_)) => {
            let e = match doc {
                Document::Topology(t) => crate::algebra::eca_from_rc(
                    &RegularClosedAlgebra::new(t.topology.clone()),
                    caps,
                )?,
                Document::Eca(e) => ExtendedContactAlgebra::classify(e.covering()?, caps)?,
                Document::Frame(_) => unreachable!(),
            };
            let r = build_parametrized_frame(&e, caps)?;
            let labels: Vec<String> = e.algebra().elements().map(|a| a.to_string()).collect();
            let frame = json!({
                "worlds": r.embedding.world_count,
                "world_labels": (0..r.embedding.world_count).map(|i| format!("up({})", 1u64 << i)).collect::<Vec<_>>(),
                "antitone": r.frame.is_antitone(),
                "source_strength": e.strength(),
            });
            (r.verify(), frame, labels, r.embedding)
        }
        (Kind::Type1 | Kind::Type2, Document::Topology(t)) => {
            let rc = RegularClosedAlgebra::new(t.topology.clone());
            if kind == Kind::Type1 {
                let r = build_type1(&rc, caps)?;
                let (labels, worlds) = atom_point_labels(t, &r);
                let frame = json!({
                    "worlds": r.worlds.len(),
                    "classes": r.frame.equiv().ids(),
                    "world_labels": worlds,
                });
                (r.verify(), frame, labels, r.embedding)
            } else {
                let r = build_type2(&rc, caps)?;
                let (labels, worlds) = atom_point_labels(t, &r);
                let frame = json!({
                    "worlds": r.worlds.len(),
                    "classes": r.frame.equiv1().ids(),
                    "classes2": r.frame.equiv2().ids(),
                    "world_labels": worlds,
                });
                (r.verify(caps)?, frame, labels, r.embedding)
            }
        }
        (Kind::Type1 | Kind::Type2, Document::Eca(_)) => {
            return Err(Error::MissingTopologicalModel)
        }
        (_, Document::Frame(_)) => {
            return Err(Error::InvalidInput(
                "represent takes a topology or algebra document, not a frame".into(),
            ))
        }
    };
    let passed = report.all_pass();
    let text = format!(
        "pipeline: {}\nworlds: {}\n{}verdict: {}\n",
        serde_json::to_value(kind).unwrap().as_str().unwrap(),
        embedding.world_count,
        report.to_text(),
        if passed {
            "embedding verified"
        } else {
            "FAILED"
        }
    );
    let json = json!({
        "pipeline": kind,
        "checks": report,
        "frame": frame,
        "embedding": embedding_json(&labels, &embedding),
    });
    Ok(CommandOutput { text, json, passed })
}

fn show_sets(sets: &[Vec<String>]) -> String {
    sets.iter()
        .map(|s| format!("{{{}}}", s.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The golden pair of spaces: a contact isomorphism that changes internal
/// connectedness.
pub fn example1(caps: &Caps, verbose: bool) -> Result<CommandOutput> {
    let r = golden::verify(caps)?;
    let mut text = format!(
        "RC(X):  {}\nRC(X'): {}\n",
        show_sets(&r.carrier_x),
        show_sets(&r.carrier_x_prime)
    );
    text.push_str("f(A) = A \\ {1}:\n");
    for (a, b) in &r.mapping {
        text.push_str(&format!(
            "  {:<18} -> {{{}}}\n",
            format!("{{{}}}", a.join(",")),
            b.join(",")
        ));
    }
    for (name, v) in [
        ("bijective", r.bijective),
        ("preserves 0", r.preserves_zero),
        ("preserves star", r.preserves_star),
        ("preserves join", r.preserves_join),
        ("preserves contact", r.preserves_contact),
    ] {
        text.push_str(&format!("  {name:<18} {}\n", tag(v)));
    }
    if verbose {
        text.push_str(&format!(
            "contact differences: {}\n",
            r.contact_mismatches.len()
        ));
        for (a, b) in &r.contact_mismatches {
            text.push_str(&format!("  {{{}}} {{{}}}\n", a.join(","), b.join(",")));
        }
    }
    text.push_str(&format!(
        "c°_X({{{}}}) = {}\nc°_X'({{{}}}) = {}\n",
        r.region_x.join(","),
        r.connected_in_x,
        r.region_x_prime.join(","),
        r.connected_in_x_prime
    ));
    let iso = if r.isomorphism_verified {
        "isomorphism verified"
    } else {
        "isomorphism FAILED"
    };
    let differs = if r.connected_in_x != r.connected_in_x_prime {
        "c° differs"
    } else {
        "c° agrees"
    };
    let verdict = if r.non_definability_witnessed {
        "non-definability witnessed: internal connectedness is not definable from contact"
    } else {
        "non-definability NOT witnessed"
    };
    text.push_str(&format!("{iso}; {differs}; {verdict}\n"));
    let passed = r.non_definability_witnessed;
    let mut json = serde_json::to_value(&r).expect("report serializes");
    if !verbose {
        json.as_object_mut().unwrap().remove("contact_mismatches");
    }
    Ok(CommandOutput { text, json, passed })
}

pub fn random(
    seed: u64,
    trials: usize,
    max_universe: usize,
    caps: &Caps,
    verbose: bool,
) -> Result<CommandOutput> {
    let r = campaign::run_campaign(seed, trials, max_universe, caps)?;
    let mut text = format!(
        "seed {seed}, {trials} trials, universes up to {max_universe}\npassed {} / {}\n",
        r.passed, r.trials
    );
    for t in &r.per_trial {
        if verbose || !t.pass {
            text.push_str(&format!(
                "  trial {:>4}  n={} opens={} regions={} worlds={}  {}\n",
                t.index,
                t.universe,
                t.opens,
                t.regions,
                t.worlds,
                if t.pass {
                    "pass".to_string()
                } else {
                    failure_summary(&t.checks, t.error.as_deref())
                }
            ));
        }
    }
    if let Some(i) = r.first_counterexample {
        text.push_str(&format!("first counterexample: trial {i}\n"));
    }
    let passed = r.all_pass();
    Ok(CommandOutput {
        text,
        json: serde_json::to_value(&r).expect("report serializes"),
        passed,
    })
}

fn failure_summary(checks: &Report, error: Option<&str>) -> String {
    if let Some(e) = error {
        return format!("ERROR {e}");
    }
    let fails: Vec<&CheckOutcome> = checks.failures().collect();
    format!(
        "FAIL {}",
        fails
            .iter()
            .map(|c| format!("{} {:?}", c.name, c.witness.clone().unwrap_or_default()))
            .collect::<Vec<_>>()
            .join("; ")
    )
}
