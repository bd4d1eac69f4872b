//! Serializable reports. Polynomials are strings in the input grammar and
//! rationals are `p/q` strings, so every value round-trips exactly.

use std::fmt::Write as _;

use ci_lefschetz::lefschetz::{HessianWitness, SlpCertificate, SlpMode};
use ci_lefschetz::sweep::InstanceRecord;
use ci_lefschetz::{HessianMode, HessianVerdict, Polynomial, Rational, SlpVerdict, SweepSummary};
use serde::Serialize;

use crate::instance::InstanceFile;

fn poly(p: &Polynomial) -> String {
    p.to_string()
}

fn rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct TrialReport {
    pub coefficients: Vec<i64>,
    pub rank: usize,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CertificateReport {
    Witness(String),
    Determinant(String),
    None,
}

#[derive(Debug, Serialize)]
pub struct SlpReport {
    pub status: String,
    pub mode: &'static str,
    pub certificate: CertificateReport,
    pub trials_used: u32,
    pub trials: Vec<TrialReport>,
    pub failure_probability_bound: Option<String>,
}

impl From<&SlpVerdict> for SlpReport {
    fn from(v: &SlpVerdict) -> Self {
        Self {
            status: v.status.to_string(),
            mode: match v.mode {
                SlpMode::Exact => "exact",
                SlpMode::Probabilistic => "probabilistic",
            },
            certificate: match &v.certificate {
                SlpCertificate::Witness(l) => CertificateReport::Witness(poly(l)),
                SlpCertificate::Determinant(d) => CertificateReport::Determinant(poly(d)),
                SlpCertificate::None => CertificateReport::None,
            },
            trials_used: v.trials_used,
            trials: v
                .trials
                .iter()
                .map(|t| TrialReport {
                    coefficients: t.coefficients.clone(),
                    rank: t.rank,
                })
                .collect(),
            failure_probability_bound: v.failure_probability_bound.as_ref().map(rational),
        }
    }
}

impl SlpReport {
    pub fn text(&self) -> String {
        let bound = self.failure_probability_bound.as_deref().unwrap_or("1");
        match (&self.certificate, self.status.as_str()) {
            (CertificateReport::Determinant(d), status) => {
                format!("SLP {status}; certificate det = {d}")
            }
            (CertificateReport::Witness(l), _) => format!(
                "SLP holds; witness l = {l} (trial {} of {})",
                self.trials_used,
                self.trials.len()
            ),
            (CertificateReport::None, _) => {
                format!(
                    "SLP unknown (likely fails, bound = {bound}) after {} trials",
                    self.trials_used
                )
            }
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HessianWitnessReport {
    Polynomial { value: String },
    Point { point: Vec<String>, value: String },
    None,
}

#[derive(Debug, Serialize)]
pub struct HessianReport {
    pub nonzero: bool,
    pub mode: &'static str,
    pub witness: HessianWitnessReport,
    pub trials_used: u32,
    pub failure_probability_bound: Option<String>,
}

impl From<&HessianVerdict> for HessianReport {
    fn from(v: &HessianVerdict) -> Self {
        Self {
            nonzero: v.nonzero,
            mode: match v.mode {
                HessianMode::Symbolic => "symbolic",
                HessianMode::Probabilistic => "probabilistic",
            },
            witness: match &v.witness {
                HessianWitness::Polynomial(p) => {
                    HessianWitnessReport::Polynomial { value: poly(p) }
                }
                HessianWitness::Point { point, value } => HessianWitnessReport::Point {
                    point: point.iter().map(rational).collect(),
                    value: rational(value),
                },
                HessianWitness::None => HessianWitnessReport::None,
            },
            trials_used: v.trials_used,
            failure_probability_bound: v.failure_probability_bound.as_ref().map(rational),
        }
    }
}

impl HessianReport {
    pub fn text(&self) -> String {
        match (&self.witness, self.nonzero) {
            (HessianWitnessReport::Polynomial { value }, true) => {
                format!("Hessian nonzero; det = {value}")
            }
            (HessianWitnessReport::Polynomial { .. }, false) => "Hessian identically zero".into(),
            (HessianWitnessReport::Point { point, value }, _) => {
                format!("Hessian nonzero; det({}) = {value}", point.join(", "))
            }
            (HessianWitnessReport::None, _) => format!(
                "Hessian unknown (likely zero, bound = {}) after {} trials",
                self.failure_probability_bound.as_deref().unwrap_or("1"),
                self.trials_used
            ),
        }
    }
}

/// Algebra facts shared by the single-instance reports.
#[derive(Debug, Serialize)]
pub struct AlgebraReport {
    pub order: &'static str,
    pub generators: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub hilbert_function: Vec<usize>,
    pub socle_degree: u32,
    pub jacobian: String,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct DualityReport {
    pub macaulay_duality: bool,
    pub partials_span: bool,
    pub colon_identity: bool,
}

impl DualityReport {
    pub fn all(&self) -> bool {
        self.macaulay_duality && self.partials_span && self.colon_identity
    }
}

/// Output of every single-instance subcommand; absent stages are omitted.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub instance: InstanceFile,
    pub seed: u64,
    pub algebra: AlgebraReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_socle_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub associated_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slp: Option<SlpReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hessian: Option<HessianReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<Option<bool>>,
    pub timings: Timings,
}

impl Report {
    pub fn is_anomaly(&self) -> bool {
        self.agree == Some(Some(false)) || self.duality.as_ref().is_some_and(|d| !d.all())
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let a = &self.algebra;
        let _ = writeln!(out, "variables: {}", self.instance.variables.join(", "));
        if let Some(f) = &self.instance.f {
            let _ = writeln!(out, "f = {f}");
        }
        let _ = writeln!(out, "generators: {}", a.generators.join(", "));
        let _ = writeln!(out, "order: {}", a.order);
        let _ = writeln!(out, "Hilbert function: {:?}", a.hilbert_function);
        let _ = writeln!(out, "socle degree T = {}", a.socle_degree);
        if let Some(t) = self.expected_socle_degree {
            let _ = writeln!(out, "n(d-2) = {t}");
        }
        for w in &a.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(af) = &self.associated_form {
            let _ = writeln!(out, "associated form A_f = {af}");
        }
        if let Some(d) = &self.duality {
            let _ = writeln!(out, "Macaulay duality: {}", d.macaulay_duality);
            let _ = writeln!(out, "partials span: {}", d.partials_span);
            let _ = writeln!(out, "colon identity: {}", d.colon_identity);
        }
        if let Some(s) = &self.slp {
            let _ = writeln!(out, "{} ({})", s.text(), s.mode);
        }
        if let Some(h) = &self.hessian {
            let _ = writeln!(out, "{} ({})", h.text(), h.mode);
        }
        if let Some(agree) = self.agree {
            let _ = writeln!(
                out,
                "agree: {}",
                agree.map_or("undecided".to_string(), |b| b.to_string())
            );
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SweepInstanceReport {
    pub index: usize,
    pub seed: u64,
    pub regenerations: u32,
    pub generators: Vec<String>,
    pub hilbert_function: Vec<usize>,
    pub socle_degree: u32,
    pub associated_form: String,
    pub slp: String,
    pub hessian_nonzero: bool,
    pub agree: Option<bool>,
    pub duality: Option<DualityReport>,
}

impl From<&InstanceRecord> for SweepInstanceReport {
    fn from(r: &InstanceRecord) -> Self {
        Self {
            index: r.index,
            seed: r.seed,
            regenerations: r.regenerations,
            generators: r.generators.iter().map(poly).collect(),
            hilbert_function: r.hilbert_function.clone(),
            socle_degree: r.socle_degree,
            associated_form: poly(&r.associated_form),
            slp: r.slp.to_string(),
            hessian_nonzero: r.hessian_nonzero,
            agree: r.agree,
            duality: r.checks.as_ref().map(|c| DualityReport {
                macaulay_duality: c.duality,
                partials_span: c.partials_span,
                colon_identity: c.colon_identity,
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub command: &'static str,
    pub degrees: Vec<u32>,
    pub count: usize,
    pub seed: u64,
    pub order: &'static str,
    pub agree: usize,
    pub undecided: usize,
    pub anomalies: usize,
    pub hessian_zero: usize,
    pub regenerations: u32,
    pub instances: Vec<SweepInstanceReport>,
    pub timings: Timings,
}

impl SweepReport {
    pub fn new(summary: &SweepSummary, order: &'static str, total_ms: f64) -> Self {
        Self {
            command: "sweep",
            degrees: summary.degrees.clone(),
            count: summary.count(),
            seed: summary.seed,
            order,
            agree: summary.agree(),
            undecided: summary.undecided(),
            anomalies: summary.anomalies(),
            hessian_zero: summary.hessian_zero(),
            regenerations: summary.regenerations(),
            instances: summary
                .records
                .iter()
                .map(SweepInstanceReport::from)
                .collect(),
            timings: Timings { total_ms },
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sweep degrees {:?}, count {}, seed {}, order {}",
            self.degrees, self.count, self.seed, self.order
        );
        let _ = writeln!(
            out,
            "{:>5}  {:>20}  {:>5}  {:>8}  {:>8}  {:>9}  {:>8}",
            "index", "seed", "regen", "slp", "hessian", "agree", "duality"
        );
        for i in &self.instances {
            let agree = i.agree.map_or("undecided".to_string(), |b| b.to_string());
            let duality = i
                .duality
                .as_ref()
                .map_or("-".to_string(), |d| d.all().to_string());
            let hessian = if i.hessian_nonzero { "nonzero" } else { "zero" };
            let _ = writeln!(
                out,
                "{:>5}  {:>20}  {:>5}  {:>8}  {:>8}  {:>9}  {:>8}",
                i.index, i.seed, i.regenerations, i.slp, hessian, agree, duality
            );
        }
        let _ = writeln!(
            out,
            "agree {}/{}, undecided {}, anomalies {}, Hessian-zero found {}, regenerations {}",
            self.agree,
            self.count,
            self.undecided,
            self.anomalies,
            self.hessian_zero,
            self.regenerations
        );
        out
    }
}
