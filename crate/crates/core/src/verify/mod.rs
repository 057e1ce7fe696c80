//! Relation suites.
//!
//! Each suite enumerates a deterministic family of instances within a
//! weight and block-degree bound, checks one relation exactly on each and
//! returns a [`RelationReport`]. Suites share the [`Family`] of
//! left-nested generator brackets, built once per run.

mod family;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use family::{Family, FamilyElement};

use crate::blockpoly::{p_from_q, p_gen, q_gen, q_gen_mutated, GENERATOR_SCALE};
use crate::exactalg::PolyRecord;
use crate::{Error, QBGElement, QPoly, Result};

/// Largest accepted weight bound.
pub const MAX_WEIGHT_LIMIT: usize = 17;
/// Largest accepted block-degree bound.
pub const MAX_BLOCK_DEGREE_LIMIT: usize = 4;
/// Weight bound for the kernel-membership linear systems.
pub const KERNEL_WEIGHT_LIMIT: usize = 13;
/// Maximum number of counterexamples kept per report.
pub const FAILURE_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Duality,
    BlockShuffle,
    CyclicInsertion,
    Reflection,
    CyclicInvariance,
    Differential,
    KernelMembership,
    Regularisation,
    GeneratorCharacterisation,
    DepthSupport,
    CoactionGrading,
    IharaConsistency,
    Freeness,
    ParityEndpoint,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Duality,
        Suite::BlockShuffle,
        Suite::CyclicInsertion,
        Suite::Reflection,
        Suite::CyclicInvariance,
        Suite::Differential,
        Suite::KernelMembership,
        Suite::Regularisation,
        Suite::GeneratorCharacterisation,
        Suite::DepthSupport,
        Suite::CoactionGrading,
        Suite::IharaConsistency,
        Suite::Freeness,
        Suite::ParityEndpoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::BlockShuffle => "block_shuffle",
            Suite::CyclicInsertion => "cyclic_insertion",
            Suite::Reflection => "reflection",
            Suite::CyclicInvariance => "cyclic_invariance",
            Suite::Differential => "differential",
            Suite::KernelMembership => "kernel_membership",
            Suite::Regularisation => "regularisation",
            Suite::GeneratorCharacterisation => "generator_characterisation",
            Suite::DepthSupport => "depth_support",
            Suite::CoactionGrading => "coaction_grading",
            Suite::IharaConsistency => "ihara_consistency",
            Suite::Freeness => "freeness",
            Suite::ParityEndpoint => "parity_endpoint",
        }
    }

    fn needs_family(self) -> bool {
        !matches!(
            self,
            Suite::GeneratorCharacterisation | Suite::DepthSupport | Suite::ParityEndpoint
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Sign flip of one coefficient `cᵢ` of `q_{2k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub k: usize,
    pub coefficient: usize,
}

/// How generators are produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSource {
    /// The closed form `p_gen`.
    #[default]
    ClosedForm,
    /// `λ(q − q^swap)` from the two-variable sum form.
    FromQ,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Engine {
    pub source: GeneratorSource,
    /// Applied on top of `source` to generator `k` only.
    pub mutation: Option<Mutation>,
}

impl Engine {
    pub fn mutated(k: usize, coefficient: usize) -> Self {
        Engine {
            source: GeneratorSource::ClosedForm,
            mutation: Some(Mutation { k, coefficient }),
        }
    }

    pub fn generator(&self, k: usize) -> Result<QBGElement> {
        match self.mutation {
            Some(m) if m.k == k => p_from_q(&q_gen_mutated(k, m.coefficient)?),
            _ => match self.source {
                GeneratorSource::ClosedForm => p_gen(k),
                GeneratorSource::FromQ => p_from_q(&q_gen(k)?),
            },
        }
    }

    fn notes(&self) -> Vec<String> {
        let mut notes = vec![match self.source {
            GeneratorSource::ClosedForm => "generators: closed form p_{2k+1}".to_string(),
            GeneratorSource::FromQ => {
                format!("generators: lambda*(q(x1,x2) - q(x2,x1)) with lambda = {GENERATOR_SCALE}")
            }
        }];
        notes.push(format!(
            "normalisation: closed form = lambda*(q(x1,x2) - q(x2,x1)), lambda = {GENERATOR_SCALE}"
        ));
        if let Some(m) = self.mutation {
            notes.push(format!(
                "mutation: sign of c{} in q_{} flipped",
                m.coefficient,
                2 * m.k + 1
            ));
        }
        notes
    }
}

/// Weight and block-degree bounds of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_weight: usize,
    pub max_block_degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_weight: 13,
            max_block_degree: 3,
        }
    }
}

impl Bounds {
    pub fn new(max_weight: usize, max_block_degree: usize) -> Result<Self> {
        if max_weight < 3 {
            return Err(Error::BoundsTooSmall(format!(
                "max_weight {max_weight} is below the weight 3 of the first generator"
            )));
        }
        if max_block_degree < 1 {
            return Err(Error::BoundsTooSmall("max_block_degree must be at least 1".into()));
        }
        if max_weight > MAX_WEIGHT_LIMIT {
            return Err(Error::BoundsTooLarge(format!(
                "max_weight {max_weight} exceeds the limit {MAX_WEIGHT_LIMIT}"
            )));
        }
        if max_block_degree > MAX_BLOCK_DEGREE_LIMIT {
            return Err(Error::BoundsTooLarge(format!(
                "max_block_degree {max_block_degree} exceeds the limit {MAX_BLOCK_DEGREE_LIMIT}"
            )));
        }
        Ok(Bounds {
            max_weight,
            max_block_degree,
        })
    }

    fn check_suite(&self, suite: Suite) -> Result<()> {
        if suite == Suite::KernelMembership && self.max_weight > KERNEL_WEIGHT_LIMIT {
            return Err(Error::BoundsTooLarge(format!(
                "kernel_membership is limited to weight {KERNEL_WEIGHT_LIMIT}, got {}",
                self.max_weight
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub max_weight: usize,
    pub max_block_degree: usize,
    pub options: BTreeMap<String, String>,
}

/// One failing instance with its nonzero defect, when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub defect: Option<PolyRecord>,
}

/// A row of per-cell data, such as an observed rank and its expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetailRow {
    pub label: String,
    pub values: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation_name: String,
    pub parameters: Parameters,
    pub instances_checked: usize,
    pub status: Status,
    /// Total number of failing instances; `failures` keeps the first few.
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    pub engine_notes: Vec<String>,
    pub details: Vec<DetailRow>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates instances and failures for one suite.
pub(crate) struct Recorder {
    instances: usize,
    failure_count: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
    details: Vec<DetailRow>,
    options: BTreeMap<String, String>,
}

impl Recorder {
    fn new(notes: Vec<String>) -> Self {
        Recorder {
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes,
            details: Vec::new(),
            options: BTreeMap::new(),
        }
    }

    fn fail(&mut self, input: impl FnOnce() -> String, defect: Option<&QPoly>) {
        self.failure_count += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(Failure {
                input: input(),
                defect: defect.map(PolyRecord::from),
            });
        }
    }

    /// One instance that passes when `defect` is zero.
    fn zero(&mut self, input: impl FnOnce() -> String, defect: &QPoly) {
        self.instances += 1;
        if !defect.is_zero() {
            self.fail(input, Some(defect));
        }
    }

    /// One instance that passes when `ok` holds.
    fn holds(&mut self, input: impl FnOnce() -> String, ok: bool) {
        self.instances += 1;
        if !ok {
            self.fail(input, None);
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn option(&mut self, key: &str, value: impl ToString) {
        self.options.insert(key.to_string(), value.to_string());
    }

    fn detail(&mut self, label: impl Into<String>, values: &[(&str, u64)]) {
        self.details.push(DetailRow {
            label: label.into(),
            values: values.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        });
    }

    fn finish(self, suite: Suite, bounds: Bounds) -> RelationReport {
        RelationReport {
            relation_name: suite.name().to_string(),
            parameters: Parameters {
                max_weight: bounds.max_weight,
                max_block_degree: bounds.max_block_degree,
                options: self.options,
            },
            instances_checked: self.instances,
            status: if self.failure_count == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            failure_count: self.failure_count,
            failures: self.failures,
            engine_notes: self.notes,
            details: self.details,
        }
    }
}

/// Configuration of a full run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub bounds: Bounds,
    pub suites: Vec<Suite>,
    pub engine: Engine,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            bounds: Bounds::default(),
            suites: Suite::ALL.to_vec(),
            engine: Engine::default(),
        }
    }
}

/// Runs one suite by name with the default engine.
pub fn run_suite(name: &str, max_weight: usize, max_block_degree: usize) -> Result<RelationReport> {
    let suite: Suite = name.parse()?;
    run_suite_with(&Engine::default(), suite, Bounds::new(max_weight, max_block_degree)?)
}

/// Runs one suite with an explicit engine.
pub fn run_suite_with(engine: &Engine, suite: Suite, bounds: Bounds) -> Result<RelationReport> {
    bounds.check_suite(suite)?;
    let family = if suite.needs_family() {
        Some(Family::build(engine, bounds)?)
    } else {
        None
    };
    suites::run(engine, suite, bounds, family.as_ref())
}

/// Runs every configured suite, concurrently, and returns the reports in
/// the configured order.
pub fn full_report(config: &VerifyConfig) -> Result<Vec<RelationReport>> {
    let bounds = Bounds::new(config.bounds.max_weight, config.bounds.max_block_degree)?;
    for &suite in &config.suites {
        bounds.check_suite(suite)?;
    }
    let family = if config.suites.iter().any(|s| s.needs_family()) {
        Some(Family::build(&config.engine, bounds)?)
    } else {
        None
    };
    config
        .suites
        .par_iter()
        .map(|&suite| suites::run(&config.engine, suite, bounds, family.as_ref()))
        .collect()
}
