//! Sparse multivariate polynomials over the rationals.
//!
//! Two polynomial rings appear throughout the crate: the operator ring
//! `S = ℚ[x_1, …, x_n]` and the operand ring `R = ℚ[y_1, …, y_n]`, where
//! `x_i` acts on `R` as `∂/∂y_i`. A [`Polynomial`] records which ring it lives
//! in through its [`VariableAlphabet`].

mod calculus;
mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use calculus::{
    hessian_determinant, hessian_matrix, jacobian_determinant, polar_apply, polar_pairing,
    polynomial_determinant,
};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, ParseError};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Errors raised by polynomial-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("expected {expected} polynomials, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
}

/// Which ring a set of variables generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The operator ring `S`, variables `x_i`.
    S,
    /// The operand ring `R`, variables `y_i` dual to `x_i`.
    R,
    /// Auxiliary parameters, such as the coefficients `t_i` of a generic linear form.
    Parameters,
}

/// Ordered, distinct variable names together with the ring they generate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableAlphabet {
    names: Vec<String>,
    side: Side,
}

impl VariableAlphabet {
    pub fn new<I, T>(names: I, side: Side) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(PolyError::InvalidAlphabet("no variables".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidAlphabet(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if names[..i].contains(name) {
                return Err(PolyError::InvalidAlphabet(format!(
                    "duplicate variable `{name}`"
                )));
            }
        }
        Ok(Self { names, side })
    }

    /// `prefix1, …, prefixn`.
    pub fn indexed(prefix: &str, n: usize, side: Side) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")), side)
            .expect("indexed names are valid and distinct")
    }

    /// The alphabet of the ring this one is paired with: `y1..yn` for `S`,
    /// `x1..xn` for `R`.
    pub fn dual(&self) -> Self {
        match self.side {
            Side::S => Self::indexed("y", self.len(), Side::R),
            Side::R | Side::Parameters => Self::indexed("x", self.len(), Side::S),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial with exact rational coefficients.
///
/// Terms are stored in a map from exponent vector to nonzero coefficient, so
/// two equal polynomials always have identical representations.
#[derive(Clone)]
pub struct Polynomial {
    alphabet: Arc<VariableAlphabet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(alphabet: Arc<VariableAlphabet>) -> Self {
        Self {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: Arc<VariableAlphabet>, c: Rational) -> Self {
        let n = alphabet.len();
        Self::term(alphabet, Monomial::one(n), c)
    }

    pub fn one(alphabet: Arc<VariableAlphabet>) -> Self {
        Self::constant(alphabet, Rational::one())
    }

    /// The variable with index `i` (0-based).
    pub fn var(alphabet: Arc<VariableAlphabet>, i: usize) -> Self {
        let n = alphabet.len();
        Self::term(alphabet, Monomial::var(n, i), Rational::one())
    }

    pub fn term(alphabet: Arc<VariableAlphabet>, mono: Monomial, c: Rational) -> Self {
        assert_eq!(mono.nvars(), alphabet.len(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { alphabet, terms }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(alphabet: Arc<VariableAlphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(alphabet);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `Σ coeffs[i]·var_i`.
    pub fn linear_form(alphabet: Arc<VariableAlphabet>, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), alphabet.len());
        let n = alphabet.len();
        Self::from_terms(
            alphabet,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn alphabet(&self) -> &Arc<VariableAlphabet> {
        &self.alphabet
    }

    pub fn side(&self) -> Side {
        self.alphabet.side()
    }

    pub fn nvars(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if there is one. The zero polynomial
    /// has no well-defined degree and yields `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        assert_eq!(mono.nvars(), self.nvars(), "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet.clone());
        }
        Self {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Self {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m * mono, a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.alphabet.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(
                Monomial::new(exps),
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(
            point.len(),
            self.nvars(),
            "evaluation point has wrong length"
        );
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// Substitutes `var_i ↦ Σ_j matrix[i][j]·var_j`.
    pub fn linear_substitute(&self, matrix: &[Vec<Rational>]) -> Self {
        let n = self.nvars();
        assert_eq!(matrix.len(), n);
        let images: Vec<Self> = matrix
            .iter()
            .map(|row| Self::linear_form(self.alphabet.clone(), row))
            .collect();
        let mut out = Self::zero(self.alphabet.clone());
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.alphabet.clone(), c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// The same coefficients over a different alphabet of equal size, e.g.
    /// reading `x1*x2` as `y1*y2`.
    pub fn relabel(&self, alphabet: Arc<VariableAlphabet>) -> Self {
        assert_eq!(
            alphabet.len(),
            self.nvars(),
            "relabel to an alphabet of another size"
        );
        Self {
            alphabet,
            terms: self.terms.clone(),
        }
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.same_ring(other),
            "polynomials over different alphabets: {:?} vs {:?}",
            self.alphabet.names(),
            other.alphabet.names()
        );
    }

    /// Multiplies by the least common denominator and divides by the content,
    /// giving a primitive integer polynomial with the same zero set. Returns the
    /// integer coefficients keyed by monomial.
    pub fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| {
            num_integer::lcm(acc, c.denom().clone())
        });
        let ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, (_, c)| {
            num_integer::Integer::gcd(&acc, c)
        });
        if content.is_zero() || content.is_one() {
            return ints;
        }
        ints.into_iter().map(|(m, c)| (m, c / &content)).collect()
    }

    /// Terms sorted from largest to smallest in graded reverse lexicographic order.
    fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| crate::groebner::OrderKind::Grevlex.compare(b.0, a.0));
        terms
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet.len() == other.alphabet.len()
            && self.alphabet.side() == other.alphabet.side()
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono = m.display(self.alphabet.names());
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = Polynomial::zero(self.alphabet.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n (n-1) ⋯ (n-k+1)`.
pub fn falling_factorial(n: u32, k: u32) -> BigInt {
    debug_assert!(k <= n);
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
