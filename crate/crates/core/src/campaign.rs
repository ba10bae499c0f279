//! Seeded random topologies pushed through every checker.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    check_ca, check_eca, check_relative_contacts, check_weca_consequences, derived_contact,
    internally_connected_algebraic, rc_covering, ExtendedContactAlgebra,
};
use crate::bits::full_mask;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::report::{CheckOutcome, Report};
use crate::representations::{build_type1, build_type2};
use crate::topology::{FiniteTopology, RegularClosedAlgebra};

/// Largest universe the sampler draws: the regular closed algebra of a
/// space on `n` points has at most `n` atoms and algebras stop at 6.
pub const MAX_SAMPLED_UNIVERSE: usize = 6;

/// Every subset of size at most 3 plus two uniform subsets, each kept with
/// probability 1/2.
pub fn sample_subbasis(rng: &mut impl Rng, n: usize) -> Vec<PointSet> {
    let full = full_mask(n);
    let mut pool: Vec<u64> = (0..=full).filter(|m| m.count_ones() <= 3).collect();
    pool.push(rng.gen::<u64>() & full);
    pool.push(rng.gen::<u64>() & full);
    pool.into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .map(|m| PointSet::from_bits(n, m).expect("mask fits the universe"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub universe: usize,
    pub subbasis: Vec<Vec<usize>>,
    pub opens: usize,
    pub regions: usize,
    pub atoms: usize,
    pub worlds: usize,
    pub checks: Report,
    pub pass: bool,
    /// Set when a checker refused the instance.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub seed: u64,
    pub trials: usize,
    pub max_universe: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<usize>,
    pub per_trial: Vec<Trial>,
}

impl CampaignReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Every check of the suite on one space.
pub fn check_space(topology: &FiniteTopology, caps: &Caps) -> Result<(Report, usize)> {
    let rc = RegularClosedAlgebra::new(topology.clone());
    let v = rc_covering(&rc, caps)?;
    let mut report = Report::default();
    report.extend(check_eca(&v, caps)?);
    report.extend(check_ca(&derived_contact(&v)));
    report.extend(check_relative_contacts(&v, caps)?);
    report.extend(check_weca_consequences(&v, caps)?);
    if !report.all_pass() {
        return Ok((report, 0));
    }

    let e = ExtendedContactAlgebra::verify_eca(v, caps)?;
    let mut agree = None;
    for a in e.algebra().elements() {
        if internally_connected_algebraic(&e, a)?
            != rc.internally_connected(&rc.element_set(a as u64))?
        {
            agree = Some(vec![a as u64]);
            break;
        }
    }
    report.push(CheckOutcome::new("connectedness-definitions-agree", agree));

    let t1 = build_type1(&rc, caps)?;
    for c in t1.verify().checks {
        report.push(CheckOutcome {
            name: format!("type1 {}", c.name),
            ..c
        });
    }
    let t2 = build_type2(&rc, caps)?;
    for c in t2.verify(caps)?.checks {
        report.push(CheckOutcome {
            name: format!("type2 {}", c.name),
            ..c
        });
    }
    Ok((report, t1.worlds.len()))
}

fn run_trial(index: usize, seed: u64, max_universe: usize, caps: &Caps) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_universe);
    let subbasis = sample_subbasis(&mut rng, n);
    let topology =
        FiniteTopology::generate(n, &subbasis).expect("sampled subbasis fits the universe");
    let rc = RegularClosedAlgebra::new(topology.clone());
    let (checks, worlds, error) = match check_space(&topology, caps) {
        Ok((report, worlds)) => (report, worlds, None),
        Err(err) => (Report::default(), 0, Some(err.to_string())),
    };
    Trial {
        index,
        seed,
        universe: n,
        subbasis: subbasis.iter().map(|s| s.points().collect()).collect(),
        opens: topology.opens().len(),
        regions: rc.len(),
        atoms: rc.atom_count(),
        worlds,
        pass: error.is_none() && checks.all_pass(),
        checks,
        error,
    }
}

/// Trials draw their own seeds from a master stream, run in parallel and are
/// reported in index order, so the report depends only on the arguments.
pub fn run_campaign(
    seed: u64,
    trials: usize,
    max_universe: usize,
    caps: &Caps,
) -> Result<CampaignReport> {
    if !(1..=MAX_SAMPLED_UNIVERSE).contains(&max_universe) {
        return Err(Error::InvalidInput(format!(
            "--max-universe must be between 1 and {MAX_SAMPLED_UNIVERSE}"
        )));
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| master.gen()).collect();
    let per_trial: Vec<Trial> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| run_trial(i, s, max_universe, caps))
        .collect();
    let passed = per_trial.iter().filter(|t| t.pass).count();
    Ok(CampaignReport {
        seed,
        trials,
        max_universe,
        passed,
        failed: trials - passed,
        first_counterexample: per_trial.iter().find(|t| !t.pass).map(|t| t.index),
        per_trial,
    })
}

/// Draws `count` topologies the way the campaign does.
pub fn sample_topologies(seed: u64, count: usize, max_universe: usize) -> Vec<FiniteTopology> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
            let n = rng.gen_range(1..=max_universe);
            let subbasis = sample_subbasis(&mut rng, n);
            FiniteTopology::generate(n, &subbasis).expect("sampled subbasis fits the universe")
        })
        .collect()
}
