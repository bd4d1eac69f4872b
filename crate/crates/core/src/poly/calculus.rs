//! Differential operations: the apolarity action of `S` on `R`, Jacobians
//! and Hessians.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{falling_factorial, PolyError, Polynomial, Rational, Side, VariableAlphabet};

/// Applies `g(∂/∂y_1, …, ∂/∂y_n)` to `f`.
///
/// `g` must live in the operator ring `S` and `f` in the operand ring `R`,
/// both with the same number of variables.
pub fn polar_apply(g: &Polynomial, f: &Polynomial) -> Result<Polynomial, PolyError> {
    check_pairing(g, f)?;
    let mut out = Polynomial::zero(f.alphabet().clone());
    for (alpha, gc) in g.terms() {
        for (beta, fc) in f.terms() {
            let Some(rest) = beta.checked_div(alpha) else {
                continue;
            };
            let mult = alpha
                .exponents()
                .iter()
                .zip(beta.exponents())
                .fold(num_bigint::BigInt::from(1), |acc, (&a, &b)| {
                    acc * falling_factorial(b, a)
                });
            out.add_term(rest, gc * fc * Rational::from_integer(mult));
        }
    }
    Ok(out)
}

/// The scalar `g ∘ f` for forms of equal degree, `Σ_α g_α f_α α!`.
///
/// Terms of different degree contribute nothing; for inputs of equal degree
/// this equals the constant term of [`polar_apply`].
pub fn polar_pairing(g: &Polynomial, f: &Polynomial) -> Result<Rational, PolyError> {
    check_pairing(g, f)?;
    let mut acc = Rational::zero();
    for (alpha, gc) in g.terms() {
        if let Some(fc) = f.terms.get(alpha) {
            acc += gc * fc * Rational::from_integer(alpha.factorial());
        }
    }
    Ok(acc)
}

fn check_pairing(g: &Polynomial, f: &Polynomial) -> Result<(), PolyError> {
    if g.side() != Side::S || f.side() != Side::R {
        return Err(PolyError::AlphabetMismatch(format!(
            "operator must be over S and operand over R, got {:?} and {:?}",
            g.side(),
            f.side()
        )));
    }
    if g.nvars() != f.nvars() {
        return Err(PolyError::AlphabetMismatch(format!(
            "operator has {} variables, operand has {}",
            g.nvars(),
            f.nvars()
        )));
    }
    Ok(())
}

/// `det(∂f_j/∂x_i)` for `n` polynomials in `n` variables.
pub fn jacobian_determinant(f: &[Polynomial]) -> Result<Polynomial, PolyError> {
    let first = f.first().ok_or(PolyError::WrongLength {
        expected: 1,
        got: 0,
    })?;
    let n = first.nvars();
    if f.len() != n {
        return Err(PolyError::WrongLength {
            expected: n,
            got: f.len(),
        });
    }
    if let Some(bad) = f.iter().find(|p| !p.same_ring(first)) {
        return Err(PolyError::AlphabetMismatch(format!(
            "{:?} vs {:?}",
            bad.alphabet().names(),
            first.alphabet().names()
        )));
    }
    let matrix: Vec<Vec<Polynomial>> = f
        .iter()
        .map(|fj| (0..n).map(|i| fj.derivative(i)).collect())
        .collect();
    Ok(polynomial_determinant(&matrix, first.alphabet()))
}

/// Matrix of second partial derivatives `∂²F/∂y_i∂y_j`.
pub fn hessian_matrix(f: &Polynomial) -> Vec<Vec<Polynomial>> {
    let n = f.nvars();
    let first: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    (0..n)
        .map(|i| (0..n).map(|j| first[i].derivative(j)).collect())
        .collect()
}

/// `det(∂²F/∂y_i∂y_j)`.
pub fn hessian_determinant(f: &Polynomial) -> Polynomial {
    polynomial_determinant(&hessian_matrix(f), f.alphabet())
}

/// Determinant of a square matrix with polynomial entries.
///
/// Laplace expansion along rows with memoised minors indexed by column
/// subsets, so the cost is `O(2^n · n)` polynomial products instead of `n!`.
pub fn polynomial_determinant(
    matrix: &[Vec<Polynomial>],
    alphabet: &Arc<VariableAlphabet>,
) -> Polynomial {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix is not square"
    );
    assert!(n < 32, "matrix too large for subset expansion");
    if n == 0 {
        return Polynomial::one(alphabet.clone());
    }
    // minors[mask] = det of rows 0..popcount(mask), columns in mask
    let mut minors: HashMap<u32, Polynomial> = HashMap::new();
    minors.insert(0, Polynomial::one(alphabet.clone()));
    for entries in matrix {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (&mask, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            for (col, entry) in entries.iter().enumerate() {
                if mask & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                // Sign of placing column `col` last among the columns of mask | col.
                let after = (mask >> col).count_ones();
                let term = minor * entry;
                let slot = next
                    .entry(mask | (1 << col))
                    .or_insert_with(|| Polynomial::zero(alphabet.clone()));
                *slot = if after % 2 == 0 {
                    &*slot + &term
                } else {
                    &*slot - &term
                };
            }
        }
        minors = next;
    }
    minors
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| Polynomial::zero(alphabet.clone()))
}
