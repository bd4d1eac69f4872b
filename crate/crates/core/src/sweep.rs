//! Batch verification of the SLP/Hessian equivalence on random complete
//! intersections.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::groebner::OrderKind;
use crate::instances::{derive_seed, random_complete_intersection, DEFAULT_COEFFICIENT_BOUND};
use crate::inverse::{colon_identity_holds, duality_holds, partials_span_holds};
use crate::lefschetz::{theorem_equivalence_check, LefschetzError, ProbabilisticParams, SlpStatus};
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub degrees: Vec<u32>,
    pub count: usize,
    pub seed: u64,
    pub coefficient_bound: i64,
    pub order: OrderKind,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Used only when `n > 4`, where both sides are probabilistic.
    pub trials: u32,
    pub bound: u32,
    /// Also run the duality, partials-span and colon checks per instance.
    pub inverse_system_checks: bool,
}

impl SweepConfig {
    pub fn new(degrees: Vec<u32>, count: usize, seed: u64) -> Self {
        let defaults = ProbabilisticParams::default();
        Self {
            degrees,
            count,
            seed,
            coefficient_bound: DEFAULT_COEFFICIENT_BOUND,
            order: OrderKind::Grevlex,
            jobs: None,
            trials: defaults.trials,
            bound: defaults.bound,
            inverse_system_checks: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct InverseSystemChecks {
    pub duality: bool,
    pub partials_span: bool,
    pub colon_identity: bool,
}

impl InverseSystemChecks {
    pub fn all(&self) -> bool {
        self.duality && self.partials_span && self.colon_identity
    }
}

#[derive(Debug, Clone)]
pub struct InstanceRecord {
    pub index: usize,
    pub seed: u64,
    pub regenerations: u32,
    pub generators: Vec<Polynomial>,
    pub hilbert_function: Vec<usize>,
    pub socle_degree: u32,
    pub associated_form: Polynomial,
    pub slp: SlpStatus,
    pub hessian_nonzero: bool,
    pub agree: Option<bool>,
    pub checks: Option<InverseSystemChecks>,
}

impl InstanceRecord {
    /// `agree = false` or a failed inverse-system check.
    pub fn is_anomaly(&self) -> bool {
        self.agree == Some(false) || self.checks.as_ref().is_some_and(|c| !c.all())
    }
}

#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub degrees: Vec<u32>,
    pub seed: u64,
    pub records: Vec<InstanceRecord>,
}

impl SweepSummary {
    pub fn count(&self) -> usize {
        self.records.len()
    }

    pub fn agree(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.agree == Some(true))
            .count()
    }

    pub fn undecided(&self) -> usize {
        self.records.iter().filter(|r| r.agree.is_none()).count()
    }

    pub fn anomalies(&self) -> usize {
        self.records.iter().filter(|r| r.is_anomaly()).count()
    }

    pub fn hessian_zero(&self) -> usize {
        self.records.iter().filter(|r| !r.hessian_nonzero).count()
    }

    pub fn regenerations(&self) -> u32 {
        self.records.iter().map(|r| r.regenerations).sum()
    }
}

fn run_instance(config: &SweepConfig, index: usize) -> Result<InstanceRecord, LefschetzError> {
    let seed = derive_seed(config.seed, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instance = random_complete_intersection(
        &config.degrees,
        config.coefficient_bound,
        config.order,
        &mut rng,
    )?;
    let alg = &instance.algebra;
    let params = ProbabilisticParams {
        trials: config.trials,
        bound: config.bound,
        seed,
    };
    let report = theorem_equivalence_check(alg, params)?;
    let checks = config.inverse_system_checks.then(|| InverseSystemChecks {
        duality: duality_holds(alg, &report.associated_form),
        partials_span: partials_span_holds(alg, &report.associated_form),
        colon_identity: colon_identity_holds(alg, &report.associated_form),
    });
    Ok(InstanceRecord {
        index,
        seed,
        regenerations: instance.regenerations,
        hilbert_function: alg.hilbert_function(),
        socle_degree: alg.socle_degree(),
        generators: instance.generators,
        associated_form: report.associated_form,
        slp: report.slp.status,
        hessian_nonzero: report.hessian.nonzero,
        agree: report.agree,
        checks,
    })
}

/// Runs `count` independent instances on a worker pool. Instance `i` uses
/// the seed `derive_seed(seed, i)`, so results do not depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary, LefschetzError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| LefschetzError::InvalidParameters(format!("worker pool: {e}")))?;
    let mut records = pool.install(|| {
        (0..config.count)
            .into_par_iter()
            .map(|i| run_instance(config, i))
            .collect::<Result<Vec<_>, _>>()
    })?;
    records.sort_by_key(|r| r.index);
    Ok(SweepSummary {
        degrees: config.degrees.clone(),
        seed: config.seed,
        records,
    })
}
