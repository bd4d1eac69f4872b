//! Graded Artinian complete intersections `M(f) = S/(f_1, …, f_n)`.
//!
//! An [`ArtinianCI`] carries the reduced Gröbner basis of the ideal, the
//! standard-monomial basis of every graded piece up to the socle degree
//! `T = Σ d_j − n`, and the normalization of the socle functional `ω` by
//! `ω(Jac(f)) = 1`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::groebner::{groebner_basis, GroebnerBasis, GroebnerError, MonomialOrder};
use crate::matrix::RationalMatrix;
use crate::poly::{jacobian_determinant, Monomial, Polynomial, Rational, Side, VariableAlphabet};

/// Errors from building or querying an algebra. Generator indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("WrongGeneratorCount: expected {expected} generators (one per variable), got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },
    #[error("TooFewVariables: need at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("AlphabetMismatch: generator {generator} is not over the algebra's variables")]
    AlphabetMismatch { generator: usize },
    #[error("NotHomogeneous: generator {generator}")]
    NotHomogeneous { generator: usize },
    #[error("DegreeTooSmall: generator {generator} has degree {degree}, need at least 2")]
    DegreeTooSmall { generator: usize, degree: u32 },
    #[error(
        "NotZeroDimensional: the generators do not define a 0-dimensional complete intersection"
    )]
    NotZeroDimensional,
    #[error("NotGorenstein: {0}")]
    NotGorenstein(String),
    #[error("JacobianInSocleFailure: the Jacobian determinant reduces to zero")]
    JacobianInSocleFailure,
    #[error("WrongDegree: expected a form of degree {expected}, got {got}")]
    WrongDegree { expected: u32, got: String },
    #[error("DegreeOutOfRange: source degree {source_degree} plus power {power} exceeds socle degree {socle_degree}")]
    DegreeOutOfRange {
        source_degree: u32,
        power: u32,
        socle_degree: u32,
    },
    #[error("NotLinear: expected a linear form")]
    NotLinear,
}

impl From<GroebnerError> for AlgebraError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::AlphabetMismatch(i) => {
                AlgebraError::AlphabetMismatch { generator: i + 1 }
            }
            GroebnerError::EmptyGenerators | GroebnerError::NotZeroDimensional => {
                AlgebraError::NotZeroDimensional
            }
        }
    }
}

/// Conditions that do not prevent construction but are worth reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraWarning {
    /// Fewer than three variables: the SLP/Hessian equivalence is only
    /// claimed for `n ≥ 3`, although every computation is still defined.
    FewerThanThreeVariables,
}

impl std::fmt::Display for AlgebraWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraWarning::FewerThanThreeVariables => f.write_str(
                "fewer than 3 variables: the SLP/Hessian equivalence is not claimed here",
            ),
        }
    }
}

/// The matrix of a linear map between graded pieces, with the bases that
/// index its columns (source) and rows (target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationMap {
    pub source: Vec<Monomial>,
    pub target: Vec<Monomial>,
    pub matrix: RationalMatrix,
}

#[derive(Debug, Clone)]
pub struct ArtinianCI {
    generators: Vec<Polynomial>,
    degrees: Vec<u32>,
    gb: GroebnerBasis,
    socle_degree: u32,
    graded_bases: Vec<Vec<Monomial>>,
    basis_index: Vec<HashMap<Monomial, usize>>,
    jacobian: Polynomial,
    jac_nf: Polynomial,
    socle_monomial: Monomial,
    socle_scale: Rational,
    dual_alphabet: Arc<VariableAlphabet>,
    warnings: Vec<AlgebraWarning>,
}

/// Builds `S/(f_1, …, f_n)` after validating that the `f_j` are `n` forms of
/// degree at least 2 generating a zero-dimensional ideal.
pub fn build_algebra(f: &[Polynomial], order: &MonomialOrder) -> Result<ArtinianCI, AlgebraError> {
    let alphabet = order.alphabet();
    let n = alphabet.len();
    if n < 2 {
        return Err(AlgebraError::TooFewVariables(n));
    }
    if f.len() != n {
        return Err(AlgebraError::WrongGeneratorCount {
            expected: n,
            got: f.len(),
        });
    }
    let mut degrees = Vec::with_capacity(n);
    for (i, fj) in f.iter().enumerate() {
        let generator = i + 1;
        if fj.nvars() != n || fj.side() != Side::S {
            return Err(AlgebraError::AlphabetMismatch { generator });
        }
        if fj.is_zero() {
            // The zero polynomial cannot be part of a regular sequence.
            return Err(AlgebraError::NotZeroDimensional);
        }
        let d = fj
            .homogeneous_degree()
            .ok_or(AlgebraError::NotHomogeneous { generator })?;
        if d < 2 {
            return Err(AlgebraError::DegreeTooSmall {
                generator,
                degree: d,
            });
        }
        degrees.push(d);
    }

    let gb = groebner_basis(f, order)?;
    if !gb.is_zero_dimensional() {
        return Err(AlgebraError::NotZeroDimensional);
    }
    let socle_degree = degrees.iter().sum::<u32>() - n as u32;
    let graded_bases: Vec<Vec<Monomial>> = (0..=socle_degree)
        .map(|k| gb.standard_monomials(k))
        .collect();
    if graded_bases[socle_degree as usize].len() != 1 {
        return Err(AlgebraError::NotGorenstein(format!(
            "degree {socle_degree} piece has dimension {}",
            graded_bases[socle_degree as usize].len()
        )));
    }
    if !gb.standard_monomials(socle_degree + 1).is_empty() {
        return Err(AlgebraError::NotGorenstein(format!(
            "nonzero piece above degree {socle_degree}"
        )));
    }
    let basis_index = graded_bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
        .collect();

    let jacobian = jacobian_determinant(f).map_err(|_| AlgebraError::WrongGeneratorCount {
        expected: n,
        got: f.len(),
    })?;
    let jac_nf = gb.normal_form(&jacobian);
    let socle_monomial = graded_bases[socle_degree as usize][0].clone();
    let socle_scale = jac_nf.coefficient(&socle_monomial);
    if socle_scale.is_zero() {
        return Err(AlgebraError::JacobianInSocleFailure);
    }

    let mut warnings = Vec::new();
    if n < 3 {
        warnings.push(AlgebraWarning::FewerThanThreeVariables);
    }
    Ok(ArtinianCI {
        generators: f.to_vec(),
        degrees,
        gb,
        socle_degree,
        graded_bases,
        basis_index,
        jacobian,
        jac_nf,
        socle_monomial,
        socle_scale,
        dual_alphabet: Arc::new(alphabet.dual()),
        warnings,
    })
}

impl ArtinianCI {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn nvars(&self) -> usize {
        self.generators.len()
    }

    /// `T = Σ d_j − n`.
    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn order(&self) -> &MonomialOrder {
        self.gb.order()
    }

    /// The alphabet of `S`.
    pub fn alphabet(&self) -> &Arc<VariableAlphabet> {
        self.gb.order().alphabet()
    }

    /// The alphabet of the dual ring `R` in which inverse systems live.
    pub fn dual_alphabet(&self) -> &Arc<VariableAlphabet> {
        &self.dual_alphabet
    }

    pub fn warnings(&self) -> &[AlgebraWarning] {
        &self.warnings
    }

    /// Standard monomials of degree `k`; empty above the socle degree.
    pub fn basis(&self, k: u32) -> &[Monomial] {
        self.graded_bases
            .get(k as usize)
            .map_or(&[][..], Vec::as_slice)
    }

    /// `dim M_k` for `k = 0..=T`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.graded_bases.iter().map(Vec::len).collect()
    }

    pub fn jacobian(&self) -> &Polynomial {
        &self.jacobian
    }

    pub fn jacobian_normal_form(&self) -> &Polynomial {
        &self.jac_nf
    }

    /// The unique standard monomial of degree `T`.
    pub fn socle_monomial(&self) -> &Monomial {
        &self.socle_monomial
    }

    /// Coefficient `μ` of the socle monomial in the normal form of `Jac(f)`.
    pub fn socle_scale(&self) -> &Rational {
        &self.socle_scale
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.gb.normal_form(p)
    }

    /// Coordinates of the class of a degree-`k` form in the basis of `M_k`.
    pub fn coordinates(&self, p: &Polynomial, k: u32) -> Result<Vec<Rational>, AlgebraError> {
        check_degree(p, k)?;
        let dim = self.basis(k).len();
        let mut v = vec![Rational::zero(); dim];
        if dim == 0 {
            return Ok(v);
        }
        let index = &self.basis_index[k as usize];
        for (m, c) in self.normal_form(p).terms() {
            let i = index[m];
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// The socle functional: `ω(p) = λ/μ` where `λ` is the coefficient of the
    /// socle monomial in the normal form of `p`. Normalized so `ω(Jac(f)) = 1`.
    pub fn omega(&self, p: &Polynomial) -> Result<Rational, AlgebraError> {
        check_degree(p, self.socle_degree)?;
        let lambda = self.normal_form(p).coefficient(&self.socle_monomial);
        Ok(lambda / &self.socle_scale)
    }

    /// Matrix of `p̄ ↦ ℓ^power · p̄` from `M_k` to `M_{k+power}`.
    pub fn multiplication_matrix(
        &self,
        linear_form: &Polynomial,
        power: u32,
        source_degree: u32,
    ) -> Result<MultiplicationMap, AlgebraError> {
        if !linear_form.is_zero() && linear_form.homogeneous_degree() != Some(1) {
            return Err(AlgebraError::NotLinear);
        }
        if !linear_form.same_ring(&self.generators[0]) {
            return Err(AlgebraError::NotLinear);
        }
        let target_degree = source_degree + power;
        if target_degree > self.socle_degree {
            return Err(AlgebraError::DegreeOutOfRange {
                source_degree,
                power,
                socle_degree: self.socle_degree,
            });
        }
        let multiplier = linear_form.pow(power);
        Ok(self.map_by(&multiplier, source_degree, target_degree))
    }

    /// Matrix of multiplication by the variable `x_i` from `M_k` to `M_{k+1}`.
    /// The target is zero-dimensional when `k = T`.
    pub fn variable_multiplication(&self, i: usize, k: u32) -> RationalMatrix {
        let x = Polynomial::var(self.alphabet().clone(), i);
        self.map_by(&x, k, k + 1).matrix
    }

    fn map_by(
        &self,
        multiplier: &Polynomial,
        source_degree: u32,
        target_degree: u32,
    ) -> MultiplicationMap {
        let source = self.basis(source_degree).to_vec();
        let target = self.basis(target_degree).to_vec();
        let index = self.basis_index.get(target_degree as usize);
        let columns: Vec<Vec<Rational>> = source
            .iter()
            .map(|b| {
                let mut col = vec![Rational::zero(); target.len()];
                let image = self.normal_form(&multiplier.mul_monomial(b));
                for (m, c) in image.terms() {
                    let i = index.expect("nonzero image lies in a nonzero piece")[m];
                    col[i] = c.clone();
                }
                col
            })
            .collect();
        MultiplicationMap {
            matrix: RationalMatrix::from_columns(target.len(), columns),
            source,
            target,
        }
    }

    /// Dimension of the socle `{p̄ : x_i p̄ = 0 for all i}` in each degree
    /// `0..=T`, from the kernels of the stacked variable multiplications.
    pub fn socle_dimensions(&self) -> Vec<usize> {
        (0..=self.socle_degree)
            .map(|k| {
                let dim = self.basis(k).len();
                let stacked = (0..self.nvars())
                    .map(|i| self.variable_multiplication(i, k))
                    .reduce(|a, b| a.vstack(&b))
                    .expect("at least two variables");
                dim - stacked.rank()
            })
            .collect()
    }

    /// True iff the socle is one-dimensional and concentrated in degree `T`.
    pub fn socle_check(&self) -> bool {
        let dims = self.socle_dimensions();
        let (top, rest) = dims.split_last().expect("degree 0 always present");
        *top == 1 && rest.iter().all(|&d| d == 0)
    }

    /// Gram matrix of `(p̄, q̄) ↦ ω(p·q)` on `M_k × M_{T−k}`.
    pub fn pairing_matrix(&self, k: u32) -> RationalMatrix {
        assert!(k <= self.socle_degree);
        let left = self.basis(k);
        let right = self.basis(self.socle_degree - k);
        let alphabet = self.alphabet();
        let rows = left
            .iter()
            .map(|a| {
                right
                    .iter()
                    .map(|b| {
                        let p = Polynomial::term(
                            alphabet.clone(),
                            a * b,
                            Rational::from_integer(1.into()),
                        );
                        self.omega(&p).expect("degree T by construction")
                    })
                    .collect()
            })
            .collect();
        RationalMatrix::from_rows(right.len(), rows)
    }

    /// Canonical row-space basis of `J(f)_k` in the coordinates of
    /// [`Monomial::all_of_degree`]. Built from the products `m·f_j`, without
    /// using the Gröbner basis.
    pub fn ideal_component(&self, k: u32) -> RationalMatrix {
        let n = self.nvars();
        let monomials = Monomial::all_of_degree(n, k);
        let index: HashMap<&Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for (fj, &d) in self.generators.iter().zip(&self.degrees) {
            if d > k {
                continue;
            }
            for m in Monomial::all_of_degree(n, k - d) {
                let mut row = vec![Rational::zero(); monomials.len()];
                for (t, c) in fj.terms() {
                    row[index[&(t * &m)]] = c.clone();
                }
                rows.push(row);
            }
        }
        RationalMatrix::from_rows(monomials.len(), rows).row_space()
    }
}

fn check_degree(p: &Polynomial, k: u32) -> Result<(), AlgebraError> {
    if p.is_zero() {
        return Ok(());
    }
    match p.homogeneous_degree() {
        Some(d) if d == k => Ok(()),
        Some(d) => Err(AlgebraError::WrongDegree {
            expected: k,
            got: d.to_string(),
        }),
        None => Err(AlgebraError::WrongDegree {
            expected: k,
            got: "inhomogeneous".into(),
        }),
    }
}
