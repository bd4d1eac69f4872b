//! The strong Lefschetz property in degree 1 and the Hessian criterion.
//!
//! `M(f)` has SLP in degree 1 when, for a generic linear form `ℓ`,
//! multiplication by `ℓ^{T−2}` maps `M_1` isomorphically onto `M_{T−1}`.
//! This holds exactly when the associated form `A_f` has a nonzero Hessian.
//! Both sides are decided here, either exactly (symbolic determinants over
//! `ℚ[t_1, …, t_n]` or `ℚ[y_1, …, y_n]`) or by random evaluation, where a
//! single nonzero sample is a proof and a run of zero samples only bounds the
//! probability of a false negative by Schwartz–Zippel.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::artinian::{build_algebra, AlgebraError, AlgebraWarning, ArtinianCI};
use crate::groebner::MonomialOrder;
use crate::inverse::associated_form;
use crate::matrix::RationalMatrix;
use crate::poly::{
    factorial, hessian_determinant, hessian_matrix, polar_pairing, polynomial_determinant,
    Polynomial, Rational, Side, VariableAlphabet,
};

/// Largest number of variables for which symbolic determinants are formed.
pub const MAX_SYMBOLIC_VARIABLES: usize = 4;
pub const DEFAULT_TRIALS: u32 = 5;
pub const DEFAULT_BOUND: u32 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("TooManyVariables: symbolic mode supports at most {max} variables, got {n}")]
    TooManyVariables { n: usize, max: usize },
    #[error("InvalidParameters: {0}")]
    InvalidParameters(String),
    #[error("ZeroForm: the Hessian test needs a nonzero form")]
    ZeroForm,
    #[error("NotHomogeneous: {0}")]
    NotHomogeneous(String),
    #[error("SingularHypersurface: the gradient ideal is not zero-dimensional")]
    SingularHypersurface,
    #[error("DegreeTooSmall: the hypersurface has degree {degree}, need at least 3")]
    DegreeTooSmall { degree: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlpMode {
    Probabilistic,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HessianMode {
    Symbolic,
    Probabilistic,
}

impl std::str::FromStr for HessianMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "symbolic" => Ok(HessianMode::Symbolic),
            "probabilistic" => Ok(HessianMode::Probabilistic),
            other => Err(format!(
                "unknown mode `{other}` (expected symbolic or probabilistic)"
            )),
        }
    }
}

/// Outcome of an SLP test. Only exact mode can return `Fails`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlpStatus {
    Holds,
    Fails,
    /// No witness found in the allotted trials; SLP probably fails.
    Unknown,
}

impl fmt::Display for SlpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlpStatus::Holds => "holds",
            SlpStatus::Fails => "fails",
            SlpStatus::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlpCertificate {
    /// A linear form `ℓ` whose `ℓ^{T−2}` map has full rank.
    Witness(Polynomial),
    /// `D(t) = det` of the map for `ℓ = t_1 x_1 + … + t_n x_n`.
    Determinant(Polynomial),
    None,
}

/// One sampled linear form and the rank of its `ℓ^{T−2}` map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlpTrial {
    pub coefficients: Vec<i64>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlpVerdict {
    pub status: SlpStatus,
    pub certificate: SlpCertificate,
    pub mode: SlpMode,
    pub trials_used: u32,
    pub trials: Vec<SlpTrial>,
    /// Upper bound on the chance that a probabilistic `Unknown` is wrong.
    pub failure_probability_bound: Option<Rational>,
}

impl SlpVerdict {
    pub fn holds(&self) -> bool {
        self.status == SlpStatus::Holds
    }

    /// `true`/`false` when decided, `None` for a probabilistic unknown.
    pub fn decided(&self) -> Option<bool> {
        match self.status {
            SlpStatus::Holds => Some(true),
            SlpStatus::Fails => Some(false),
            SlpStatus::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HessianWitness {
    /// The full Hessian determinant (symbolic mode).
    Polynomial(Polynomial),
    /// A point where the Hessian determinant takes a nonzero value.
    Point {
        point: Vec<Rational>,
        value: Rational,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessianVerdict {
    pub nonzero: bool,
    pub mode: HessianMode,
    pub witness: HessianWitness,
    pub trials_used: u32,
    /// Present only for probabilistic `nonzero = false`.
    pub failure_probability_bound: Option<Rational>,
}

impl HessianVerdict {
    /// `None` when a probabilistic search found only zeros.
    pub fn decided(&self) -> Option<bool> {
        (self.mode == HessianMode::Symbolic || self.nonzero).then_some(self.nonzero)
    }
}

/// Parameters for the random tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbabilisticParams {
    pub trials: u32,
    pub bound: u32,
    pub seed: u64,
}

impl Default for ProbabilisticParams {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_BOUND,
            seed: 0,
        }
    }
}

impl ProbabilisticParams {
    fn validate(&self) -> Result<(), LefschetzError> {
        if self.trials < 1 {
            return Err(LefschetzError::InvalidParameters(
                "trials must be at least 1".into(),
            ));
        }
        if self.bound < 2 {
            return Err(LefschetzError::InvalidParameters(
                "bound must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// `min(1, (degree / (2·bound + 1))^trials)`.
pub fn schwartz_zippel_bound(degree: u32, bound: u32, trials: u32) -> Rational {
    let single = Rational::new(BigInt::from(degree), BigInt::from(2 * u64::from(bound) + 1));
    if single >= Rational::one() {
        return Rational::one();
    }
    num_traits::pow(single, trials as usize)
}

fn sample_point(rng: &mut ChaCha8Rng, n: usize, bound: u32) -> Vec<i64> {
    let b = i64::from(bound);
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.random_range(-b..=b)).collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

fn to_rationals(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&c| Rational::from_integer(c.into()))
        .collect()
}

/// Rank of `ℓ^{T−2} : M_1 → M_{T−1}`.
pub fn lefschetz_rank(alg: &ArtinianCI, linear_form: &Polynomial) -> Result<usize, LefschetzError> {
    let t = alg.socle_degree();
    Ok(alg
        .multiplication_matrix(linear_form, t - 2, 1)?
        .matrix
        .rank())
}

/// Samples linear forms with integer coefficients in `[−bound, bound]`
/// (never the zero form) until one gives a full-rank `ℓ^{T−2}` map.
pub fn slp_degree1_probabilistic(
    alg: &ArtinianCI,
    params: ProbabilisticParams,
) -> Result<SlpVerdict, LefschetzError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let candidates: Vec<Vec<i64>> = (0..params.trials)
        .map(|_| sample_point(&mut rng, alg.nvars(), params.bound))
        .collect();
    slp_degree1_from_candidates(alg, &candidates, params.bound)
}

/// Tries the given coefficient vectors in order, stopping at the first
/// full-rank one. `bound` is the sampling range used for the failure bound.
pub fn slp_degree1_from_candidates(
    alg: &ArtinianCI,
    candidates: &[Vec<i64>],
    bound: u32,
) -> Result<SlpVerdict, LefschetzError> {
    let n = alg.nvars();
    let t = alg.socle_degree();
    let mut trials = Vec::new();
    for coefficients in candidates {
        if coefficients.len() != n {
            return Err(LefschetzError::InvalidParameters(format!(
                "linear form needs {n} coefficients, got {}",
                coefficients.len()
            )));
        }
        let ell = Polynomial::linear_form(alg.alphabet().clone(), &to_rationals(coefficients));
        let rank = lefschetz_rank(alg, &ell)?;
        trials.push(SlpTrial {
            coefficients: coefficients.clone(),
            rank,
        });
        if rank == n {
            return Ok(SlpVerdict {
                status: SlpStatus::Holds,
                certificate: SlpCertificate::Witness(ell),
                mode: SlpMode::Probabilistic,
                trials_used: trials.len() as u32,
                trials,
                failure_probability_bound: None,
            });
        }
    }
    let used = trials.len() as u32;
    Ok(SlpVerdict {
        status: SlpStatus::Unknown,
        certificate: SlpCertificate::None,
        mode: SlpMode::Probabilistic,
        trials_used: used,
        trials,
        failure_probability_bound: Some(schwartz_zippel_bound(n as u32 * (t - 2), bound, used)),
    })
}

fn parameter_alphabet(n: usize) -> Arc<VariableAlphabet> {
    Arc::new(VariableAlphabet::indexed("t", n, Side::Parameters))
}

/// `D(t) = det(ℓ^{T−2} : M_1 → M_{T−1})` for the generic form
/// `ℓ = t_1 x_1 + … + t_n x_n`, in the standard-monomial bases.
pub fn lefschetz_determinant(alg: &ArtinianCI) -> Result<Polynomial, LefschetzError> {
    let n = alg.nvars();
    if n > MAX_SYMBOLIC_VARIABLES {
        return Err(LefschetzError::TooManyVariables {
            n,
            max: MAX_SYMBOLIC_VARIABLES,
        });
    }
    let ts = parameter_alphabet(n);
    let t_vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(ts.clone(), i)).collect();
    let zero = Polynomial::zero(ts.clone());

    // current: M_1 → M_k, starting from the identity at k = 1.
    let mut current: Vec<Vec<Polynomial>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        Polynomial::one(ts.clone())
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..alg.socle_degree() - 1 {
        let maps: Vec<RationalMatrix> = (0..n).map(|i| alg.variable_multiplication(i, k)).collect();
        let rows = maps[0].rows();
        let step: Vec<Vec<Polynomial>> = (0..rows)
            .map(|r| {
                (0..maps[0].cols())
                    .map(|c| {
                        let terms = maps.iter().zip(&t_vars).filter_map(|(m, t)| {
                            let v = m.get(r, c);
                            (!v.is_zero()).then(|| t.scale(v))
                        });
                        terms.fold(zero.clone(), |acc, p| &acc + &p)
                    })
                    .collect()
            })
            .collect();
        current = step
            .iter()
            .map(|row| {
                (0..n)
                    .map(|c| {
                        row.iter()
                            .zip(&current)
                            .filter(|(a, b)| !a.is_zero() && !b[c].is_zero())
                            .fold(zero.clone(), |acc, (a, b)| &acc + &(a * &b[c]))
                    })
                    .collect()
            })
            .collect();
    }
    Ok(polynomial_determinant(&current, &ts))
}

/// Decides SLP in degree 1 exactly: it holds iff `D(t) ≢ 0`.
pub fn slp_degree1_exact(alg: &ArtinianCI) -> Result<SlpVerdict, LefschetzError> {
    let det = lefschetz_determinant(alg)?;
    let status = if det.is_zero() {
        SlpStatus::Fails
    } else {
        SlpStatus::Holds
    };
    Ok(SlpVerdict {
        status,
        certificate: SlpCertificate::Determinant(det),
        mode: SlpMode::Exact,
        trials_used: 0,
        trials: Vec::new(),
        failure_probability_bound: None,
    })
}

/// Decides whether `det(∂²F/∂y_i∂y_j)` is a nonzero polynomial.
pub fn hessian_nonzero(
    form: &Polynomial,
    mode: HessianMode,
    params: ProbabilisticParams,
) -> Result<HessianVerdict, LefschetzError> {
    if form.is_zero() {
        return Err(LefschetzError::ZeroForm);
    }
    let n = form.nvars();
    match mode {
        HessianMode::Symbolic => {
            if n > MAX_SYMBOLIC_VARIABLES {
                return Err(LefschetzError::TooManyVariables {
                    n,
                    max: MAX_SYMBOLIC_VARIABLES,
                });
            }
            let h = hessian_determinant(form);
            Ok(HessianVerdict {
                nonzero: !h.is_zero(),
                mode,
                witness: HessianWitness::Polynomial(h),
                trials_used: 0,
                failure_probability_bound: None,
            })
        }
        HessianMode::Probabilistic => {
            params.validate()?;
            let matrix = hessian_matrix(form);
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            for trial in 1..=params.trials {
                let point = to_rationals(&sample_point(&mut rng, n, params.bound));
                let rows = matrix
                    .iter()
                    .map(|row| row.iter().map(|e| e.eval(&point)).collect())
                    .collect();
                let value = RationalMatrix::from_rows(n, rows).determinant();
                if !value.is_zero() {
                    return Ok(HessianVerdict {
                        nonzero: true,
                        mode,
                        witness: HessianWitness::Point { point, value },
                        trials_used: trial,
                        failure_probability_bound: None,
                    });
                }
            }
            let degree = form.total_degree().unwrap_or(0).saturating_sub(2) * n as u32;
            Ok(HessianVerdict {
                nonzero: false,
                mode,
                witness: HessianWitness::None,
                trials_used: params.trials,
                failure_probability_bound: Some(schwartz_zippel_bound(
                    degree,
                    params.bound,
                    params.trials,
                )),
            })
        }
    }
}

/// Both sides of the SLP/Hessian equivalence for one algebra.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub associated_form: Polynomial,
    pub slp: SlpVerdict,
    pub hessian: HessianVerdict,
    /// `None` when neither side could be decided.
    pub agree: Option<bool>,
    /// Set when `n < 3`, outside the equivalence's stated hypothesis.
    pub below_hypothesis: bool,
}

/// Runs the SLP test and the Hessian test and compares them. Exact mode is
/// used whenever `n ≤ 4`; otherwise both sides are probabilistic and `agree`
/// is reported only if both found witnesses.
pub fn theorem_equivalence_check(
    alg: &ArtinianCI,
    params: ProbabilisticParams,
) -> Result<EquivalenceReport, LefschetzError> {
    let form = associated_form(alg);
    equivalence_with_form(alg, form, params)
}

/// As [`theorem_equivalence_check`], reusing an already computed associated form.
pub fn equivalence_with_form(
    alg: &ArtinianCI,
    form: Polynomial,
    params: ProbabilisticParams,
) -> Result<EquivalenceReport, LefschetzError> {
    let exact = alg.nvars() <= MAX_SYMBOLIC_VARIABLES;
    let (slp, hessian) = if exact {
        (
            slp_degree1_exact(alg)?,
            hessian_nonzero(&form, HessianMode::Symbolic, params)?,
        )
    } else {
        (
            slp_degree1_probabilistic(alg, params)?,
            hessian_nonzero(&form, HessianMode::Probabilistic, params)?,
        )
    };
    let agree = match (slp.decided(), hessian.decided()) {
        (Some(a), Some(b)) => Some(a == b),
        // One witness against an undecided other side is suspicious but not a proof.
        _ => None,
    };
    Ok(EquivalenceReport {
        associated_form: form,
        slp,
        hessian,
        agree,
        below_hypothesis: alg
            .warnings()
            .contains(&AlgebraWarning::FewerThanThreeVariables),
    })
}

/// The Milnor algebra `S/(∂f/∂x_1, …, ∂f/∂x_n)` of a smooth hypersurface.
///
/// The gradient ideal is zero-dimensional exactly when `f = 0` is smooth; its
/// socle degree is then `n(d−2)`.
pub fn milnor_pipeline(
    f: &Polynomial,
    order: &MonomialOrder,
) -> Result<ArtinianCI, LefschetzError> {
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| LefschetzError::NotHomogeneous("hypersurface equation".into()))?;
    if d < 3 {
        return Err(LefschetzError::DegreeTooSmall { degree: d });
    }
    let n = f.nvars();
    let gradient: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let alg = match build_algebra(&gradient, order) {
        Ok(a) => a,
        Err(AlgebraError::NotZeroDimensional) => return Err(LefschetzError::SingularHypersurface),
        Err(e) => return Err(e.into()),
    };
    assert_eq!(
        alg.socle_degree(),
        n as u32 * (d - 2),
        "Milnor algebra socle degree must be n(d-2)"
    );
    Ok(alg)
}

/// Checks `G ∘ (a_1 x_1 + … + a_n x_n)^{T−1} = (T−1)!·G(a)` for each `G` in
/// `basis` (forms of degree `T−1` in `R`).
pub fn projection_identity_check(
    alg: &ArtinianCI,
    point: &[Rational],
    basis: &[Polynomial],
) -> bool {
    let t = alg.socle_degree();
    let scale = Rational::from_integer(factorial(t - 1));
    let power = Polynomial::linear_form(alg.dual_alphabet().clone(), point).pow(t - 1);
    basis.iter().all(|g| {
        let operator = g.relabel(alg.alphabet().clone());
        let lhs = polar_pairing(&operator, &power).expect("matched alphabets");
        lhs == &scale * g.eval(point)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::annihilator_component;
    use crate::poly::{parse_polynomial, rat};

    fn alg(texts: &[&str]) -> ArtinianCI {
        let a = Arc::new(VariableAlphabet::indexed("x", texts.len(), Side::S));
        let f: Vec<Polynomial> = texts
            .iter()
            .map(|t| parse_polynomial(t, &a).unwrap())
            .collect();
        build_algebra(&f, &MonomialOrder::grevlex(a)).unwrap()
    }

    fn r3(t: &str) -> Polynomial {
        let r = Arc::new(VariableAlphabet::indexed("y", 3, Side::R));
        parse_polynomial(t, &r).unwrap()
    }

    #[test]
    fn exact_determinant_of_fermat_quadrics() {
        let a = alg(&["x1^2", "x2^2", "x3^2"]);
        let d = lefschetz_determinant(&a).unwrap();
        let ts = parameter_alphabet(3);
        assert_eq!(d, parse_polynomial("-2*t1*t2*t3", &ts).unwrap());
        assert_eq!(d.eval(&[rat(1), rat(1), rat(1)]), rat(-2));
        assert_eq!(d.eval(&[rat(1), rat(0), rat(0)]), rat(0));
        let v = slp_degree1_exact(&a).unwrap();
        assert_eq!(v.status, SlpStatus::Holds);
        assert!(v.failure_probability_bound.is_none());
    }

    #[test]
    fn probabilistic_finds_witness() {
        let a = alg(&["x1^2", "x2^2", "x3^2"]);
        for seed in 0..5 {
            let v = slp_degree1_probabilistic(
                &a,
                ProbabilisticParams {
                    seed,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(v.holds());
            let SlpCertificate::Witness(ell) = &v.certificate else {
                panic!("expected a witness");
            };
            assert_eq!(lefschetz_rank(&a, ell).unwrap(), 3);
        }
        let b = alg(&["x1^2", "x2^2", "x3^3"]);
        assert!(
            slp_degree1_probabilistic(&b, ProbabilisticParams::default())
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn degenerate_linear_form_has_low_rank() {
        let a = alg(&["x1^2", "x2^2", "x3^2"]);
        let x1 = Polynomial::var(a.alphabet().clone(), 0);
        assert_eq!(lefschetz_rank(&a, &x1).unwrap(), 2);
        let v = slp_degree1_from_candidates(&a, &[vec![1, 0, 0], vec![1, 1, 1]], 100).unwrap();
        assert!(v.holds());
        assert_eq!(
            v.trials.iter().map(|t| t.rank).collect::<Vec<_>>(),
            vec![2, 3]
        );
        let only_bad = slp_degree1_from_candidates(&a, &[vec![1, 0, 0]], 100).unwrap();
        assert_eq!(only_bad.status, SlpStatus::Unknown);
    }

    #[test]
    fn parameters_are_validated() {
        let a = alg(&["x1^2", "x2^2", "x3^2"]);
        let bad = ProbabilisticParams {
            trials: 0,
            ..Default::default()
        };
        assert!(matches!(
            slp_degree1_probabilistic(&a, bad),
            Err(LefschetzError::InvalidParameters(_))
        ));
        let bad = ProbabilisticParams {
            bound: 1,
            ..Default::default()
        };
        assert!(hessian_nonzero(&r3("y1*y2*y3"), HessianMode::Probabilistic, bad).is_err());
    }

    #[test]
    fn hessian_examples() {
        let p = ProbabilisticParams::default();
        let v = hessian_nonzero(&r3("3/4*y1*y2*y3"), HessianMode::Symbolic, p).unwrap();
        assert!(v.nonzero);
        assert_eq!(v.witness, HessianWitness::Polynomial(r3("27/32*y1*y2*y3")));
        assert!(
            hessian_nonzero(&r3("y1*y2*y3^2"), HessianMode::Symbolic, p)
                .unwrap()
                .nonzero
        );
        let zero = hessian_nonzero(&r3("y1^4"), HessianMode::Symbolic, p).unwrap();
        assert!(!zero.nonzero);
        assert_eq!(zero.decided(), Some(false));

        let prob = hessian_nonzero(&r3("y1*y2*y3^2"), HessianMode::Probabilistic, p).unwrap();
        assert!(prob.nonzero);
        let HessianWitness::Point { point, value } = &prob.witness else {
            panic!("expected a point witness");
        };
        assert_eq!(hessian_determinant(&r3("y1*y2*y3^2")).eval(point), *value);

        let prob_zero = hessian_nonzero(&r3("y1^4"), HessianMode::Probabilistic, p).unwrap();
        assert!(!prob_zero.nonzero);
        assert_eq!(prob_zero.decided(), None);
        // (3·2/201)^5
        assert_eq!(
            prob_zero.failure_probability_bound,
            Some(num_traits::pow(Rational::new(6.into(), 201.into()), 5))
        );
        assert_eq!(
            hessian_nonzero(&r3("0"), HessianMode::Symbolic, p).unwrap_err(),
            LefschetzError::ZeroForm
        );
    }

    #[test]
    fn schwartz_zippel_is_capped() {
        assert_eq!(schwartz_zippel_bound(500, 2, 3), rat(1));
        assert_eq!(schwartz_zippel_bound(0, 2, 3), rat(0));
        assert_eq!(
            schwartz_zippel_bound(2, 2, 2),
            Rational::new(4.into(), 25.into())
        );
    }

    #[test]
    fn equivalence_on_fermat_examples() {
        for texts in [["x1^2", "x2^2", "x3^2"], ["x1^2", "x2^2", "x3^3"]] {
            let a = alg(&texts);
            let report = theorem_equivalence_check(&a, ProbabilisticParams::default()).unwrap();
            assert!(report.slp.holds());
            assert!(report.hessian.nonzero);
            assert_eq!(report.agree, Some(true));
            assert!(!report.below_hypothesis);
        }
    }

    #[test]
    fn milnor_examples() {
        let s = Arc::new(VariableAlphabet::indexed("x", 3, Side::S));
        let order = MonomialOrder::grevlex(s.clone());
        let p = |t: &str| parse_polynomial(t, &s).unwrap();

        let a = milnor_pipeline(&p("x1^3 + x2^3 + x3^3"), &order).unwrap();
        assert_eq!(a.socle_degree(), 3);
        assert_eq!(a.generators(), &[p("3*x1^2"), p("3*x2^2"), p("3*x3^2")]);

        // The Hesse cubic with λ = 1 is singular at (1, 1, 1).
        let hesse = p("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3");
        for i in 0..3 {
            assert!(hesse
                .derivative(i)
                .eval(&[rat(1), rat(1), rat(1)])
                .is_zero());
        }
        assert_eq!(
            milnor_pipeline(&hesse, &order).unwrap_err(),
            LefschetzError::SingularHypersurface
        );
        assert_eq!(
            milnor_pipeline(&p("x1^2*x2"), &order).unwrap_err(),
            LefschetzError::SingularHypersurface
        );
        assert_eq!(
            milnor_pipeline(&p("x1^2 + x2^2 + x3^2"), &order).unwrap_err(),
            LefschetzError::DegreeTooSmall { degree: 2 }
        );
        // λ = 2 is smooth.
        let smooth = milnor_pipeline(&p("x1^3 + x2^3 + x3^3 - 6*x1*x2*x3"), &order).unwrap();
        assert_eq!(smooth.socle_degree(), 3);
    }

    #[test]
    fn projection_identity_examples() {
        let a = alg(&["x1^2", "x2^2", "x3^2"]);
        let g = r3("y1*y2");
        // x1 x2 ∘ (y1 + 2 y2 + 3 y3)^2 = 4 = 2!·(1·2)
        assert!(projection_identity_check(
            &a,
            &[rat(1), rat(2), rat(3)],
            std::slice::from_ref(&g)
        ));
        assert!(projection_identity_check(
            &a,
            &[rat(0), rat(0), rat(0)],
            &[g]
        ));
        let basis = annihilator_component(&a);
        assert!(projection_identity_check(
            &a,
            &[rat(-3), rat(5), rat(7)],
            &basis
        ));
    }
}
