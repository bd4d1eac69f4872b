//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pairs are pruned with the Gebauer–Möller criteria and selected by the
//! normal strategy (smallest lcm first). Inside the algorithm polynomials are
//! kept as primitive integer polynomials and reductions are fraction free;
//! the final basis is made monic over ℚ.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Rational, VariableAlphabet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generator {0} is not over the order's alphabet")]
    AlphabetMismatch(usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
}

/// Monomial order kinds. Variables are ranked `x1 > x2 > … > xn`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Pure lexicographic.
    Lex,
}

impl OrderKind {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderKind::Lex => a.cmp(b),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                a.exponents()
                    .iter()
                    .zip(b.exponents())
                    .rev()
                    .find(|(x, y)| x != y)
                    .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(OrderKind::Grevlex),
            "lex" => Ok(OrderKind::Lex),
            other => Err(format!(
                "unknown monomial order `{other}` (expected grevlex or lex)"
            )),
        }
    }
}

/// A monomial order on a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    alphabet: Arc<VariableAlphabet>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, alphabet: Arc<VariableAlphabet>) -> Self {
        Self { kind, alphabet }
    }

    pub fn grevlex(alphabet: Arc<VariableAlphabet>) -> Self {
        Self::new(OrderKind::Grevlex, alphabet)
    }

    pub fn lex(alphabet: Arc<VariableAlphabet>) -> Self {
        Self::new(OrderKind::Lex, alphabet)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn alphabet(&self) -> &Arc<VariableAlphabet> {
        &self.alphabet
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.kind.compare(a, b)
    }

    /// Largest monomial of `p`, if any.
    pub fn leading_monomial<'a>(&self, p: &'a Polynomial) -> Option<&'a Monomial> {
        p.terms().map(|(m, _)| m).max_by(|a, b| self.compare(a, b))
    }

    /// Terms of `p` from largest to smallest.
    pub fn sorted_terms(&self, p: &Polynomial) -> Vec<(Monomial, Rational)> {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| self.compare(&b.0, &a.0));
        terms
    }
}

/// Monomial wrapped with the order it should be compared under, for use as
/// a `BTreeMap` key.
#[derive(Clone, PartialEq, Eq)]
struct Key {
    mono: Monomial,
    kind: OrderKind,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind.compare(&self.mono, &other.mono)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Primitive integer polynomial, terms in decreasing order, positive leading
/// coefficient.
#[derive(Clone, Debug)]
struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    /// Normalizes terms given in decreasing order.
    fn from_sorted(mut terms: Vec<(Monomial, BigInt)>) -> Self {
        let content = terms.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if !content.is_zero() {
            let negate = terms[0].1.is_negative();
            let divisor = if negate { -content } else { content };
            if !divisor.is_one() {
                for (_, c) in &mut terms {
                    *c = &*c / &divisor;
                }
            }
        }
        IntPoly { terms }
    }

    fn from_polynomial(p: &Polynomial, kind: OrderKind) -> Self {
        let mut terms = p.primitive_integer_terms();
        terms.sort_by(|a, b| kind.compare(&b.0, &a.0));
        Self::from_sorted(terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }
}

fn accumulate(work: &mut BTreeMap<Key, BigInt>, key: Key, delta: BigInt) {
    match work.entry(key) {
        Entry::Vacant(e) => {
            if !delta.is_zero() {
                e.insert(delta);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += delta;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Full fraction-free reduction of `p` by `basis`. The result is primitive
/// and no term of it is divisible by a leading monomial of `basis`.
fn reduce(p: &[(Monomial, BigInt)], basis: &[&IntPoly], kind: OrderKind) -> IntPoly {
    let mut work: BTreeMap<Key, BigInt> = p
        .iter()
        .map(|(m, c)| {
            (
                Key {
                    mono: m.clone(),
                    kind,
                },
                c.clone(),
            )
        })
        .collect();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut steps = 0usize;
    while let Some((key, c)) = work.pop_last() {
        let Some(g) = basis.iter().find(|g| g.lm().divides(&key.mono)) else {
            rem.push((key.mono, c));
            continue;
        };
        let q = key.mono.checked_div(g.lm()).expect("divisibility checked");
        let gcd = c.gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = &c / &gcd;
        if !a.is_one() {
            for v in work.values_mut() {
                *v *= &a;
            }
            for (_, v) in &mut rem {
                *v *= &a;
            }
        }
        for (m, gc) in &g.terms[1..] {
            accumulate(&mut work, Key { mono: &q * m, kind }, -(&b * gc));
        }
        steps += 1;
        if steps.is_multiple_of(16) {
            let content = work
                .values()
                .chain(rem.iter().map(|(_, c)| c))
                .fold(BigInt::zero(), |acc, c| acc.gcd(c));
            if content > BigInt::one() {
                for v in work.values_mut() {
                    *v /= &content;
                }
                for (_, v) in &mut rem {
                    *v /= &content;
                }
            }
        }
    }
    IntPoly::from_sorted(rem)
}

fn s_polynomial(f: &IntPoly, g: &IntPoly, kind: OrderKind) -> Vec<(Monomial, BigInt)> {
    let l = f.lm().lcm(g.lm());
    let mf = l.checked_div(f.lm()).expect("lcm is a multiple");
    let mg = l.checked_div(g.lm()).expect("lcm is a multiple");
    let gcd = f.lc().gcd(g.lc());
    let a = g.lc() / &gcd;
    let b = f.lc() / &gcd;
    let mut work: BTreeMap<Key, BigInt> = BTreeMap::new();
    for (m, c) in &f.terms[1..] {
        accumulate(
            &mut work,
            Key {
                mono: &mf * m,
                kind,
            },
            &a * c,
        );
    }
    for (m, c) in &g.terms[1..] {
        accumulate(
            &mut work,
            Key {
                mono: &mg * m,
                kind,
            },
            -(&b * c),
        );
    }
    work.into_iter().rev().map(|(k, c)| (k.mono, c)).collect()
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller installation of the new basis element `polys[h]`.
fn update(polys: &[IntPoly], basis: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lm_h = polys[h].lm().clone();
    let mut candidates: Vec<Pair> = basis
        .iter()
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: lm_h.lcm(polys[g].lm()),
        })
        .collect();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let coprime = lm_h.is_coprime(polys[p.i].lm());
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    kept.retain(|p| !lm_h.is_coprime(polys[p.i].lm()));
    pairs.retain(|p| {
        !(lm_h.divides(&p.lcm)
            && lm_h.lcm(polys[p.i].lm()) != p.lcm
            && lm_h.lcm(polys[p.j].lm()) != p.lcm)
    });
    pairs.extend(kept);
    basis.retain(|&g| !lm_h.divides(polys[g].lm()));
    basis.push(h);
}

/// A reduced Gröbner basis together with its monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
    sorted: Vec<Vec<(Monomial, Rational)>>,
    order: MonomialOrder,
    reduced: bool,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order.kind == other.order.kind && self.generators == other.generators
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Zero generators are ignored. The result is canonical for the pair
/// (ideal, order): generators are monic, fully interreduced and listed by
/// decreasing leading monomial.
pub fn groebner_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    if gens.is_empty() {
        return Err(GroebnerError::EmptyGenerators);
    }
    let n = order.alphabet().len();
    for (i, g) in gens.iter().enumerate() {
        if g.nvars() != n || g.side() != order.alphabet().side() {
            return Err(GroebnerError::AlphabetMismatch(i));
        }
    }
    let kind = order.kind();
    let mut polys: Vec<IntPoly> = Vec::new();
    let mut basis: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let p = IntPoly::from_polynomial(g, kind);
        let reducers: Vec<&IntPoly> = basis.iter().map(|&i| &polys[i]).collect();
        let h = reduce(&p.terms, &reducers, kind);
        if !h.is_zero() {
            polys.push(h);
            update(&polys, &mut basis, &mut pairs, polys.len() - 1);
        }
    }

    while !pairs.is_empty() {
        let next = (0..pairs.len())
            .min_by(|&a, &b| kind.compare(&pairs[a].lcm, &pairs[b].lcm))
            .expect("pairs nonempty");
        let pair = pairs.swap_remove(next);
        let s = s_polynomial(&polys[pair.i], &polys[pair.j], kind);
        let reducers: Vec<&IntPoly> = basis.iter().map(|&i| &polys[i]).collect();
        let h = reduce(&s, &reducers, kind);
        if !h.is_zero() {
            polys.push(h);
            update(&polys, &mut basis, &mut pairs, polys.len() - 1);
        }
    }

    if basis.is_empty() {
        return Err(GroebnerError::EmptyGenerators);
    }

    // The basis is minimal by construction; interreduce the tails.
    let mut reduced: Vec<IntPoly> = basis
        .iter()
        .map(|&i| {
            let others: Vec<&IntPoly> = basis
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| &polys[j])
                .collect();
            reduce(&polys[i].terms, &others, kind)
        })
        .collect();
    reduced.sort_by(|a, b| kind.compare(b.lm(), a.lm()));

    let alphabet = order.alphabet().clone();
    let mut generators = Vec::with_capacity(reduced.len());
    let mut sorted = Vec::with_capacity(reduced.len());
    let mut leading = Vec::with_capacity(reduced.len());
    for p in &reduced {
        let lc = Rational::from_integer(p.lc().clone());
        let terms: Vec<(Monomial, Rational)> = p
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc))
            .collect();
        leading.push(p.lm().clone());
        generators.push(Polynomial::from_terms(
            alphabet.clone(),
            terms.iter().cloned(),
        ));
        sorted.push(terms);
    }
    Ok(GroebnerBasis {
        generators,
        leading,
        sorted,
        order: order.clone(),
        reduced: true,
    })
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.order.alphabet().len()
    }

    /// Remainder of `p` on division by the basis. The result is supported on
    /// standard monomials and vanishes exactly when `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let kind = self.order.kind();
        let mut work: BTreeMap<Key, Rational> = p
            .terms()
            .map(|(m, c)| {
                (
                    Key {
                        mono: m.clone(),
                        kind,
                    },
                    c.clone(),
                )
            })
            .collect();
        let mut rem = Polynomial::zero(p.alphabet().clone());
        while let Some((key, c)) = work.pop_last() {
            let Some(idx) = self.leading.iter().position(|lm| lm.divides(&key.mono)) else {
                rem.add_term(key.mono, c);
                continue;
            };
            let q = key
                .mono
                .checked_div(&self.leading[idx])
                .expect("divisibility checked");
            for (m, gc) in &self.sorted[idx][1..] {
                let delta = -(&c * gc);
                match work.entry(Key { mono: &q * m, kind }) {
                    Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        rem
    }

    /// Ideal membership.
    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// True if every S-polynomial of basis pairs reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let kind = self.order.kind();
        let ints: Vec<IntPoly> = self
            .generators
            .iter()
            .map(|g| IntPoly::from_polynomial(g, kind))
            .collect();
        let refs: Vec<&IntPoly> = ints.iter().collect();
        (0..ints.len()).all(|i| {
            (i + 1..ints.len()).all(|j| {
                let s = s_polynomial(&ints[i], &ints[j], kind);
                reduce(&s, &refs, kind).is_zero()
            })
        })
    }

    /// Finitely many standard monomials, i.e. every variable has a pure
    /// power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let mut seen = vec![false; self.nvars()];
        for lm in &self.leading {
            if let Some(i) = lm.pure_power_variable() {
                seen[i] = true;
            }
        }
        // The unit ideal has leading monomial 1 and no standard monomials.
        seen.iter().all(|&s| s) || self.leading.iter().any(|m| m.degree() == 0)
    }

    /// Degree-`degree` monomials not divisible by any leading monomial, from
    /// largest to smallest in the basis order.
    pub fn standard_monomials(&self, degree: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = Monomial::all_of_degree(self.nvars(), degree)
            .into_iter()
            .filter(|m| !self.leading.iter().any(|lm| lm.divides(m)))
            .collect();
        out.sort_by(|a, b| self.order.compare(b, a));
        out
    }

    /// Number of standard monomials in each degree `0..=up_to`.
    pub fn hilbert_function(&self, up_to: u32) -> Result<Vec<usize>, GroebnerError> {
        if !self.is_zero_dimensional() {
            return Err(GroebnerError::NotZeroDimensional);
        }
        Ok((0..=up_to)
            .map(|d| self.standard_monomials(d).len())
            .collect())
    }

    /// The whole Hilbert function of a zero-dimensional quotient, up to its
    /// last nonzero value.
    pub fn hilbert_function_full(&self) -> Result<Vec<usize>, GroebnerError> {
        if !self.is_zero_dimensional() {
            return Err(GroebnerError::NotZeroDimensional);
        }
        let mut bound = 0u32;
        for i in 0..self.nvars() {
            let a = self
                .leading
                .iter()
                .filter(|m| m.pure_power_variable() == Some(i))
                .map(Monomial::degree)
                .min()
                .unwrap_or(0);
            bound += a.saturating_sub(1);
        }
        let mut values = self.hilbert_function(bound)?;
        while values.last() == Some(&0) {
            values.pop();
        }
        Ok(values)
    }
}
