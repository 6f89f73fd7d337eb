//! Exact commutative algebra over Q and Q(w), w a primitive cube root of
//! unity: sparse multivariate polynomials with a pluggable coefficient
//! field, Buchberger Groebner bases, ideal algebra (sums, products, powers,
//! intersections, graded pieces), radical and symbolic-power ideals of point
//! configurations in the projective plane, and a machine-checked pipeline
//! for symbolic-vs-ordinary power containment questions, including the dual
//! Hesse configuration where the (3, 2) containment fails.

pub mod arith;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod points;
pub mod poly;
pub mod rng;
pub mod text;
pub mod verify;

pub use arith::{CycloElement, Field, FieldKind, Rational};
pub use error::{Error, Result};
pub use groebner::{
    buchberger, is_groebner, normal_form, s_polynomial, BuchbergerOptions, GroebnerBasis,
    SelectionStrategy,
};
pub use ideal::Ideal;
pub use points::{Configuration, LineForm, ProjectivePoint};
pub use poly::{monomials_of_degree, order_cmp, Monomial, Polynomial, RingDescriptor, TermOrder};
pub use verify::{
    Certificate, ClaimResult, ClaimStatus, GradedSample, HesseContext, VerificationReport,
    VerifyOptions,
};
