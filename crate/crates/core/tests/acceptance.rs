//! Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
//! Runs without the libtest harness so the lines always reach stdout.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mereo::algebra::{
    check_ca, check_eca, check_filter_pair_conditions, check_relative_contacts,
    check_weca_consequences, derived_contact, eca_from_rc, internally_connected_algebraic,
    left_set, rc_covering, right_set, CoveringRelation, ExtendedContactAlgebra, FilterKind,
    FilterOrIdeal, FiniteBooleanAlgebra,
};
use mereo::bits::full_mask;
use mereo::campaign::{sample_subbasis, sample_topologies};
use mereo::representations::{build_parametrized_frame, build_type1, build_type2};
use mereo::topology::{FiniteTopology, RegularClosedAlgebra};
use mereo::{golden, Caps, PointSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn caps() -> Caps {
    Caps::default()
}

fn golden_spaces() -> Vec<FiniteTopology> {
    vec![golden::space_x().topology, golden::space_x_prime().topology]
}

/// Every topology on up to `n` points.
fn all_topologies(n: usize) -> Vec<FiniteTopology> {
    (1..=n)
        .flat_map(|k| FiniteTopology::enumerate_all(k).unwrap())
        .collect()
}

fn golden_pair() -> Outcome {
    let r = golden::verify(&caps()).map_err(|e| e.to_string())?;
    if !r.isomorphism_verified {
        return Err(format!("isomorphism check failed: {r:?}"));
    }
    if !r.connected_in_x || r.connected_in_x_prime {
        return Err(format!(
            "connectedness verdicts {} / {}",
            r.connected_in_x, r.connected_in_x_prime
        ));
    }
    Ok(format!(
        "f is an isomorphism over {} regions; c°{{1..6}} = true in X, c°{{2..6}} = false in X'",
        r.carrier_x.len()
    ))
}

fn axiom_soundness() -> Outcome {
    let c = caps();
    let spaces = sample_topologies(2024, 100, 5);
    for (i, t) in spaces.iter().enumerate() {
        let v =
            rc_covering(&RegularClosedAlgebra::new(t.clone()), &c).map_err(|e| e.to_string())?;
        let reports = [
            check_eca(&v, &c).map_err(|e| e.to_string())?,
            check_ca(&derived_contact(&v)),
            check_relative_contacts(&v, &c).map_err(|e| e.to_string())?,
            check_weca_consequences(&v, &c).map_err(|e| e.to_string())?,
        ];
        for r in reports {
            if let Some(f) = r.failures().next() {
                return Err(format!("space {i}: {} fails at {:?}", f.name, f.witness));
            }
        }
    }
    Ok(format!(
        "{} random spaces, every axiom family exhaustive",
        spaces.len()
    ))
}

/// Discrete coverings on 1..=3 atoms and the region algebras of every
/// topology on up to three points.
fn small_wecas() -> Vec<ExtendedContactAlgebra> {
    let mut out: Vec<ExtendedContactAlgebra> = (1..=3)
        .map(|k| {
            let ba = FiniteBooleanAlgebra::new(k).unwrap();
            ExtendedContactAlgebra::classify(CoveringRelation::discrete(ba), &caps()).unwrap()
        })
        .collect();
    for t in all_topologies(3) {
        out.push(eca_from_rc(&RegularClosedAlgebra::new(t), &caps()).unwrap());
    }
    out
}

fn parametrized_embeddings() -> Outcome {
    let sources = small_wecas();
    for (i, e) in sources.iter().enumerate() {
        let r = build_parametrized_frame(e, &caps()).map_err(|e| e.to_string())?;
        let report = r.verify();
        let fail = report
            .failures()
            .next()
            .map(|f| format!("source {i}: {} fails at {:?}", f.name, f.witness));
        if let Some(msg) = fail {
            return Err(msg);
        }
    }
    Ok(format!(
        "{} algebras with at most 3 atoms embed",
        sources.len()
    ))
}

fn representation_spaces() -> Vec<FiniteTopology> {
    let mut spaces = sample_topologies(77, 50, 5);
    spaces.extend(golden_spaces());
    spaces
}

fn type1_embeddings() -> Outcome {
    let spaces = representation_spaces();
    for (i, t) in spaces.iter().enumerate() {
        let r = build_type1(&RegularClosedAlgebra::new(t.clone()), &caps())
            .map_err(|e| e.to_string())?;
        if let Some(f) = r.verify().failures().next() {
            return Err(format!("space {i}: {} fails at {:?}", f.name, f.witness));
        }
    }
    Ok(format!(
        "{} spaces, single equivalence frames",
        spaces.len()
    ))
}

fn type2_embeddings() -> Outcome {
    let spaces = representation_spaces();
    let mut worlds = 0;
    for (i, t) in spaces.iter().enumerate() {
        let r = build_type2(&RegularClosedAlgebra::new(t.clone()), &caps())
            .map_err(|e| e.to_string())?;
        worlds = worlds.max(r.worlds.len());
        let report = r.verify(&caps()).map_err(|e| e.to_string())?;
        let fail = report
            .failures()
            .next()
            .map(|f| format!("space {i}: {} fails at {:?}", f.name, f.witness));
        if let Some(msg) = fail {
            return Err(msg);
        }
    }
    Ok(format!(
        "{} spaces, two-relation frames incl. connectedness, up to {worlds} worlds",
        spaces.len()
    ))
}

/// Spaces for the carrier oracle: everything on up to four points, discrete
/// and indiscrete spaces and chains up to eight, the golden pair, and
/// random spaces on six to eight points.
fn curated_spaces() -> Vec<FiniteTopology> {
    let mut spaces = all_topologies(4);
    for n in 1..=8 {
        spaces.push(FiniteTopology::discrete(n).unwrap());
        spaces.push(FiniteTopology::indiscrete(n).unwrap());
        let chain: Vec<PointSet> = (0..n)
            .map(|i| PointSet::from_bits(n, full_mask(i + 1)).unwrap())
            .collect();
        spaces.push(FiniteTopology::generate(n, &chain).unwrap());
    }
    spaces.extend(golden_spaces());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [6, 6, 7, 7, 8, 8] {
        for _ in 0..5 {
            spaces.push(FiniteTopology::generate(n, &sample_subbasis(&mut rng, n)).unwrap());
        }
    }
    spaces
}

fn oracle_equivalences() -> Outcome {
    let spaces = curated_spaces();
    for (i, t) in spaces.iter().enumerate() {
        let rc = RegularClosedAlgebra::new(t.clone());
        let n = t.universe_size();
        let brute: Vec<PointSet> = (0..=full_mask(n))
            .map(|m| PointSet::from_bits(n, m).unwrap())
            .filter(|a| t.closure(&t.interior(a)) == *a)
            .collect();
        if brute != rc.carrier() {
            return Err(format!(
                "space {i}: carrier differs from the Cl(Int(A)) = A sweep"
            ));
        }
    }

    let mut frames = 0;
    let mut sources: Vec<ExtendedContactAlgebra> = (1..=4)
        .map(|k| {
            let ba = FiniteBooleanAlgebra::new(k).unwrap();
            ExtendedContactAlgebra::classify(CoveringRelation::discrete(ba), &caps()).unwrap()
        })
        .collect();
    for t in all_topologies(4) {
        let rc = RegularClosedAlgebra::new(t);
        if rc.atom_count() <= 4 {
            sources.push(eca_from_rc(&rc, &caps()).unwrap());
        }
    }
    for e in &sources {
        let r = build_parametrized_frame(e, &caps()).map_err(|e| e.to_string())?;
        let f = r
            .frame
            .clone()
            .audit_antitone(&caps())
            .map_err(|e| e.to_string())?;
        let all = full_mask(r.embedding.world_count);
        for a in 0..=all {
            for b in 0..=all {
                for d in 0..=all {
                    let fast = f.covering_antitone(a, b, d).unwrap();
                    if fast != f.covering_naive(a, b, d, &caps()).unwrap() {
                        return Err(format!(
                            "antitone shortcut differs at ({a:#b}, {b:#b}, {d:#b})"
                        ));
                    }
                }
            }
        }
        frames += 1;
    }

    let mut carriers = 0;
    for t in all_topologies(4)
        .into_iter()
        .chain(sample_topologies(6, 60, 5))
        .chain(golden_spaces())
    {
        let rc = RegularClosedAlgebra::new(t);
        if rc.len() > 32 {
            continue;
        }
        carriers += 1;
        let e = eca_from_rc(&rc, &caps()).map_err(|e| e.to_string())?;
        for a in e.algebra().elements() {
            let region = rc.element_set(a as u64);
            if internally_connected_algebraic(&e, a).unwrap()
                != rc.internally_connected(&region).unwrap()
            {
                return Err(format!("connectedness definitions differ on {region}"));
            }
        }
    }
    Ok(format!(
        "{} carriers match the sweep; {frames} filter frames agree on every triple; {carriers} algebras agree on connectedness",
        spaces.len()
    ))
}

fn annex_machinery() -> Outcome {
    let mut pairs = 0usize;
    for (i, e) in small_wecas().iter().enumerate() {
        let ba = e.algebra();
        let filters: Vec<FilterOrIdeal> = ba
            .elements()
            .map(|a| FilterOrIdeal::principal_filter(ba, a).unwrap())
            .collect();
        for u in &filters {
            for v in &filters {
                for d in ba.elements() {
                    let ul =
                        left_set(e, u, d).map_err(|err| format!("algebra {i}: left set: {err}"))?;
                    let vr = right_set(e, v, d)
                        .map_err(|err| format!("algebra {i}: right set: {err}"))?;
                    if ul.kind() != FilterKind::Ideal || vr.kind() != FilterKind::Ideal {
                        return Err(format!("algebra {i}: left or right set is not an ideal"));
                    }
                    let c =
                        check_filter_pair_conditions(e, u, v, d).map_err(|err| err.to_string())?;
                    if !c.agree() {
                        return Err(format!("algebra {i}: conditions disagree at d={d}: {c:?}"));
                    }
                    pairs += 1;
                }
            }
        }
    }

    let mut pipelines = 0;
    let mut splits = 0;
    for t in all_topologies(4)
        .into_iter()
        .chain(sample_topologies(9, 60, 5))
        .chain(golden_spaces())
    {
        let r = build_type2(&RegularClosedAlgebra::new(t), &caps()).map_err(|e| e.to_string())?;
        if r.worlds.len() > 6 {
            continue;
        }
        pipelines += 1;
        let sweep = r
            .check_all_split_lifts(&caps())
            .map_err(|e| e.to_string())?;
        if let Some((name, witness)) = sweep.failure {
            return Err(format!("split lift fails {name} at {witness:?}"));
        }
        splits += sweep.splits;
    }
    if splits == 0 {
        return Err("no admissible split was found, so nothing was lifted".into());
    }
    Ok(format!(
        "{pairs} (u, v, d) triples; {splits} admissible splits lifted across {pipelines} pipelines"
    ))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_mereo"))
            .args([
                "random",
                "--seed",
                "11",
                "--trials",
                "40",
                "--max-universe",
                "5",
                "--json",
            ])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!(
            "campaign exited with {:?} / {:?}",
            a.status.code(),
            b.status.code()
        ));
    }
    if a.stdout != b.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(format!("two runs, {} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden pair of spaces", golden_pair, Duration::from_secs(1)),
        (
            "axiom soundness on random spaces",
            axiom_soundness,
            Duration::from_secs(60),
        ),
        (
            "filter-frame embeddings",
            parametrized_embeddings,
            Duration::from_secs(120),
        ),
        (
            "single-equivalence embeddings",
            type1_embeddings,
            Duration::from_secs(120),
        ),
        (
            "two-equivalence embeddings",
            type2_embeddings,
            Duration::from_secs(180),
        ),
        (
            "oracle equivalences",
            oracle_equivalences,
            Duration::from_secs(600),
        ),
        (
            "filter, ideal and split machinery",
            annex_machinery,
            Duration::from_secs(600),
        ),
        (
            "campaign determinism",
            determinism,
            Duration::from_secs(600),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *budget => {
                Err(format!("{detail}; took {took:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({took:.2?}): {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}): {reason}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
