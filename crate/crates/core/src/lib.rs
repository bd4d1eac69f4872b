//! Exact computations for Artinian complete intersections over ℚ.
//!
//! Given homogeneous `f_1, …, f_n ∈ ℚ[x_1, …, x_n]` generating a
//! zero-dimensional ideal `J`, this crate builds `M = S/J`, computes its
//! associated form `A_f ∈ ℚ[y_1, …, y_n]`, checks that `A_f` is a Macaulay
//! inverse system of `M`, and decides whether `M` has the strong Lefschetz
//! property in degree 1 and whether `A_f` has a nonzero Hessian.
//!
//! ```
//! use ci_lefschetz::{build_algebra, associated_form, fermat, MonomialOrder};
//!
//! let f = fermat(&[2, 2, 2]);
//! let alg = build_algebra(&f, &MonomialOrder::grevlex(f[0].alphabet().clone())).unwrap();
//! assert_eq!(alg.hilbert_function(), vec![1, 3, 3, 1]);
//! assert_eq!(associated_form(&alg).to_string(), "3/4*y1*y2*y3");
//! ```

pub mod artinian;
pub mod groebner;
pub mod instances;
pub mod inverse;
pub mod lefschetz;
pub mod matrix;
pub mod poly;
pub mod sweep;

pub use artinian::{build_algebra, AlgebraError, AlgebraWarning, ArtinianCI, MultiplicationMap};
pub use groebner::{groebner_basis, GroebnerBasis, GroebnerError, MonomialOrder, OrderKind};
pub use instances::{fermat, random_complete_intersection};
pub use inverse::{
    annihilator_component, apolar_ideal_component, associated_form, verify_macaulay_duality,
    verify_partials_span, CatalecticantMatrix, InverseError,
};
pub use lefschetz::{
    hessian_nonzero, milnor_pipeline, projection_identity_check, slp_degree1_exact,
    slp_degree1_from_candidates, slp_degree1_probabilistic, theorem_equivalence_check,
    EquivalenceReport, HessianMode, HessianVerdict, LefschetzError, ProbabilisticParams, SlpStatus,
    SlpVerdict,
};
pub use matrix::RationalMatrix;
pub use poly::{parse_polynomial, Monomial, Polynomial, Rational, Side, VariableAlphabet};
pub use sweep::{run_sweep, SweepConfig, SweepSummary};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/polynomials.md")]
    struct Polynomials;
    #[doc = include_str!("../../../book/src/quotients.md")]
    struct Quotients;
    #[doc = include_str!("../../../book/src/inverse_systems.md")]
    struct InverseSystems;
    #[doc = include_str!("../../../book/src/lefschetz.md")]
    struct Lefschetz;
    #[doc = include_str!("../../../book/src/milnor.md")]
    struct Milnor;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
