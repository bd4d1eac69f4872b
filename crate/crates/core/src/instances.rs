//! Instance generators: Fermat complete intersections, random dense complete
//! intersections and random changes of coordinates.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::artinian::{build_algebra, AlgebraError, ArtinianCI};
use crate::groebner::MonomialOrder;
use crate::matrix::RationalMatrix;
use crate::poly::{rat, Monomial, Polynomial, Rational, Side, VariableAlphabet};

/// Default coefficient range `[−5, 5]` for random instances.
pub const DEFAULT_COEFFICIENT_BOUND: i64 = 5;

/// Gives up on a degree tuple after this many non-zero-dimensional draws.
const MAX_REGENERATIONS: u32 = 10_000;

/// `x1..xn` over `S`.
pub fn standard_alphabet(n: usize) -> Arc<VariableAlphabet> {
    Arc::new(VariableAlphabet::indexed("x", n, Side::S))
}

/// `(x_1^{d_1}, …, x_n^{d_n})`.
pub fn fermat(degrees: &[u32]) -> Vec<Polynomial> {
    let n = degrees.len();
    let s = standard_alphabet(n);
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| Polynomial::var(s.clone(), i).pow(d))
        .collect()
}

/// A homogeneous form of degree `d` with every coefficient uniform in `[−bound, bound]`.
pub fn random_form<R: Rng + ?Sized>(
    alphabet: &Arc<VariableAlphabet>,
    degree: u32,
    bound: i64,
    rng: &mut R,
) -> Polynomial {
    let terms = Monomial::all_of_degree(alphabet.len(), degree)
        .into_iter()
        .map(|m| (m, rat(rng.random_range(-bound..=bound))));
    Polynomial::from_terms(alphabet.clone(), terms)
}

/// A random complete intersection together with the number of discarded draws.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub generators: Vec<Polynomial>,
    pub algebra: ArtinianCI,
    pub regenerations: u32,
}

/// Draws dense forms of the given degrees until they cut out a
/// zero-dimensional ideal.
pub fn random_complete_intersection<R: Rng + ?Sized>(
    degrees: &[u32],
    coefficient_bound: i64,
    order: crate::groebner::OrderKind,
    rng: &mut R,
) -> Result<RandomInstance, AlgebraError> {
    let s = standard_alphabet(degrees.len());
    let order = MonomialOrder::new(order, s.clone());
    let mut regenerations = 0;
    loop {
        let generators: Vec<Polynomial> = degrees
            .iter()
            .map(|&d| random_form(&s, d, coefficient_bound, rng))
            .collect();
        match build_algebra(&generators, &order) {
            Ok(algebra) => {
                return Ok(RandomInstance {
                    generators,
                    algebra,
                    regenerations,
                })
            }
            Err(AlgebraError::NotZeroDimensional) if regenerations < MAX_REGENERATIONS => {
                regenerations += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

/// A random invertible `n×n` integer matrix with entries in `[−bound, bound]`.
pub fn random_invertible_matrix<R: Rng + ?Sized>(
    n: usize,
    bound: i64,
    rng: &mut R,
) -> Vec<Vec<Rational>> {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| rat(rng.random_range(-bound..=bound)))
                    .collect()
            })
            .collect();
        if !RationalMatrix::from_rows(n, rows.clone())
            .determinant()
            .is_zero()
        {
            return rows;
        }
    }
}

/// `f ∘ P`, i.e. `x_i ↦ Σ_j P[i][j] x_j` in every generator.
pub fn change_coordinates(generators: &[Polynomial], matrix: &[Vec<Rational>]) -> Vec<Polynomial> {
    generators
        .iter()
        .map(|f| f.linear_substitute(matrix))
        .collect()
}

/// SplitMix64 finalizer; derives independent per-instance seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
