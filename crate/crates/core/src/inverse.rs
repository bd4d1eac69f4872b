//! Associated forms and apolarity.
//!
//! The associated form of `M(f)` is
//!
//! ```text
//! A_f(y) = ω((y_1 x̄_1 + … + y_n x̄_n)^T) = Σ_{|α|=T} (T!/α!) ω(x^α) y^α,
//! ```
//!
//! a Macaulay inverse system of `M(f)`: its apolar ideal
//! `Ann(A_f) = {g ∈ S : g ∘ A_f = 0}` equals `J(f)`. Apolar ideals are
//! computed degree by degree as kernels of catalecticant matrices, and all
//! subspace comparisons go through reduced row echelon forms.

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::artinian::ArtinianCI;
use crate::matrix::RationalMatrix;
use crate::poly::{factorial, Monomial, Polynomial, Rational, Side, VariableAlphabet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InverseError {
    #[error("the zero form has no apolar ideal of interest")]
    ZeroForm,
    #[error("form is not homogeneous")]
    NotHomogeneous,
    #[error("form must live in the dual ring R")]
    WrongSide,
}

/// Matrix of `S_k × R_T → R_{T−k}`, `(x^α, F) ↦ x^α ∘ F`.
///
/// Column `α` holds the coefficients of `x^α ∘ F` in the monomials of
/// `row_basis`; the kernel is `Ann(F)_k`.
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub matrix: RationalMatrix,
    pub row_basis: Vec<Monomial>,
    pub col_basis: Vec<Monomial>,
    pub form: Polynomial,
    pub degree: u32,
}

impl CatalecticantMatrix {
    /// Requires `F` homogeneous, nonzero, over `R`, and `k ≤ deg F`.
    pub fn new(form: &Polynomial, k: u32) -> Result<Self, InverseError> {
        let t = form_degree(form)?;
        assert!(k <= t, "catalecticant degree exceeds the form's degree");
        let n = form.nvars();
        let row_basis = Monomial::all_of_degree(n, t - k);
        let col_basis = Monomial::all_of_degree(n, k);
        let mut matrix = RationalMatrix::zeros(row_basis.len(), col_basis.len());
        for (j, alpha) in col_basis.iter().enumerate() {
            for (i, beta) in row_basis.iter().enumerate() {
                let gamma = alpha * beta;
                let c = form.coefficient(&gamma);
                if c.is_zero() {
                    continue;
                }
                // x^α ∘ y^γ = (γ!/β!) y^β
                let mult = Rational::new(gamma.factorial(), beta.factorial());
                matrix.set(i, j, c * mult);
            }
        }
        Ok(Self {
            matrix,
            row_basis,
            col_basis,
            form: form.clone(),
            degree: k,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

fn form_degree(form: &Polynomial) -> Result<u32, InverseError> {
    if form.side() != Side::R {
        return Err(InverseError::WrongSide);
    }
    if form.is_zero() {
        return Err(InverseError::ZeroForm);
    }
    form.homogeneous_degree()
        .ok_or(InverseError::NotHomogeneous)
}

/// A basis of `Ann(F)_k`.
#[derive(Debug, Clone)]
pub struct ApolarComponent {
    pub degree: u32,
    /// Canonical basis: coefficient vectors in reduced row echelon form over
    /// the monomials of [`Monomial::all_of_degree`].
    pub basis: Vec<Polynomial>,
    /// Set when `k > deg F`, where every operator annihilates `F`.
    pub full_space: bool,
}

/// `Ann(F)_k` as the kernel of the degree-`k` catalecticant.
pub fn apolar_ideal_component(form: &Polynomial, k: u32) -> Result<ApolarComponent, InverseError> {
    let t = form_degree(form)?;
    let s = Arc::new(form.alphabet().dual());
    let n = form.nvars();
    let monomials = Monomial::all_of_degree(n, k);
    if k > t {
        let basis = monomials
            .into_iter()
            .map(|m| Polynomial::term(s.clone(), m, Rational::one()))
            .collect();
        return Ok(ApolarComponent {
            degree: k,
            basis,
            full_space: true,
        });
    }
    let kernel = apolar_matrix(form, k)?;
    Ok(ApolarComponent {
        degree: k,
        basis: rows_to_polynomials(&kernel, &monomials, &s),
        full_space: false,
    })
}

/// Canonical row-space basis of `Ann(F)_k` in `all_of_degree` coordinates.
fn apolar_matrix(form: &Polynomial, k: u32) -> Result<RationalMatrix, InverseError> {
    let t = form_degree(form)?;
    let n = form.nvars();
    if k > t {
        let dim = Monomial::all_of_degree(n, k).len();
        return Ok(RationalMatrix::identity(dim));
    }
    Ok(CatalecticantMatrix::new(form, k)?.matrix.kernel())
}

fn rows_to_polynomials(
    rows: &RationalMatrix,
    monomials: &[Monomial],
    alphabet: &Arc<VariableAlphabet>,
) -> Vec<Polynomial> {
    rows.row_vectors()
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                alphabet.clone(),
                monomials
                    .iter()
                    .cloned()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect()
}

fn coefficient_rows(polys: &[Polynomial], monomials: &[Monomial]) -> RationalMatrix {
    RationalMatrix::from_rows(
        monomials.len(),
        polys
            .iter()
            .map(|p| monomials.iter().map(|m| p.coefficient(m)).collect())
            .collect(),
    )
}

/// `A_f = Σ_{|α|=T} (T!/α!)·ω(x^α)·y^α`.
pub fn associated_form(alg: &ArtinianCI) -> Polynomial {
    let t = alg.socle_degree();
    let n = alg.nvars();
    let t_fact = factorial(t);
    let s = alg.alphabet();
    let terms: Vec<(Monomial, Rational)> = Monomial::all_of_degree(n, t)
        .into_iter()
        .filter_map(|alpha| {
            let x_alpha = Polynomial::term(s.clone(), alpha.clone(), Rational::one());
            let w = alg.omega(&x_alpha).expect("monomial of degree T");
            (!w.is_zero()).then(|| {
                let multinomial = Rational::new(t_fact.clone(), alpha.factorial());
                (alpha, w * multinomial)
            })
        })
        .collect();
    Polynomial::from_terms(alg.dual_alphabet().clone(), terms)
}

/// True iff `Ann(form)_k = J(f)_k` for every `0 ≤ k ≤ T+1`.
pub fn duality_holds(alg: &ArtinianCI, form: &Polynomial) -> bool {
    let Ok(t) = form_degree(form) else {
        return false;
    };
    if t != alg.socle_degree() || form.nvars() != alg.nvars() {
        return false;
    }
    (0..=t + 1).all(|k| {
        let ann = apolar_matrix(form, k).expect("form validated");
        ann == alg.ideal_component(k)
    })
}

/// Checks that the associated form is a Macaulay inverse system of `M(f)`.
pub fn verify_macaulay_duality(alg: &ArtinianCI) -> bool {
    duality_holds(alg, &associated_form(alg))
}

/// Basis of `Ann(J(f)_{T−1}) = {F ∈ R_{T−1} : g ∘ F = 0 for all g ∈ J(f)_{T−1}}`.
pub fn annihilator_component(alg: &ArtinianCI) -> Vec<Polynomial> {
    let t = alg.socle_degree();
    let monomials = Monomial::all_of_degree(alg.nvars(), t - 1);
    rows_to_polynomials(&annihilator_matrix(alg), &monomials, alg.dual_alphabet())
}

fn annihilator_matrix(alg: &ArtinianCI) -> RationalMatrix {
    let t = alg.socle_degree();
    let monomials = Monomial::all_of_degree(alg.nvars(), t - 1);
    let mut j = alg.ideal_component(t - 1);
    // g ∘ F = Σ g_α F_α α! for forms of equal degree.
    for (col, m) in monomials.iter().enumerate() {
        j.scale_column(col, &Rational::from_integer(m.factorial()));
    }
    j.kernel()
}

fn partials_matrix(form: &Polynomial) -> RationalMatrix {
    let t = form.homogeneous_degree().unwrap_or(0);
    let monomials = Monomial::all_of_degree(form.nvars(), t.saturating_sub(1));
    let partials: Vec<Polynomial> = (0..form.nvars()).map(|i| form.derivative(i)).collect();
    coefficient_rows(&partials, &monomials)
}

/// True iff the first partials of `form` span `Ann(J(f)_{T−1})`.
pub fn partials_span_holds(alg: &ArtinianCI, form: &Polynomial) -> bool {
    if form.homogeneous_degree() != Some(alg.socle_degree()) {
        return false;
    }
    partials_matrix(form).row_space() == annihilator_matrix(alg)
}

/// Checks that `∂A_f/∂y_1, …, ∂A_f/∂y_n` span `Ann(J(f)_{T−1})`.
pub fn verify_partials_span(alg: &ArtinianCI) -> bool {
    partials_span_holds(alg, &associated_form(alg))
}

/// True iff `J(f)_{T−1} = {g ∈ S_{T−1} : x_i g ∈ Ann(form)_T for all i}`.
pub fn colon_identity_holds(alg: &ArtinianCI, form: &Polynomial) -> bool {
    let t = alg.socle_degree();
    if form.homogeneous_degree() != Some(t) {
        return false;
    }
    let n = alg.nvars();
    let monomials = Monomial::all_of_degree(n, t - 1);
    // Row i is the functional g ↦ (x_i g) ∘ form.
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            monomials
                .iter()
                .map(|alpha| {
                    let gamma = alpha * &Monomial::var(n, i);
                    form.coefficient(&gamma) * Rational::from_integer(gamma.factorial())
                })
                .collect()
        })
        .collect();
    let colon = RationalMatrix::from_rows(monomials.len(), rows).kernel();
    colon == alg.ideal_component(t - 1)
}
