//! Exact combinatorics of complete intersections in `P^m × P^n`.
//!
//! The crate decides the regular-sequence and ACM ordering conditions for a
//! list of generator bidegrees, computes Hilbert functions and polynomials by
//! Koszul inclusion–exclusion, measures the Hilbert scheme of such complete
//! intersections as a tower of Grassmannian bundles, and checks every
//! dimension it predicts against ranks of explicit multiplication matrices
//! over a prime field.
//!
//! The arithmetic is generic over an exact integer type (see
//! [`ExactInt`]); the aliases below fix it to arbitrary precision, which is
//! what the command-line tool and the test suites use.

pub mod catalog;
pub mod cispec;
pub mod combinat;
pub mod error;
pub mod koszul;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod tower;

pub use cispec::{AcmViolation, CiSpec, Group, GroupedSpec};
pub use combinat::{AmbientSpace, Bidegree};
pub use error::{Error, Result};
pub use scalar::ExactInt;

/// Arbitrary-precision integer used by the concrete aliases.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rational = num_rational::BigRational;
/// Polynomial in `t` with exact rational coefficients.
pub type RationalPolynomial = poly::Polynomial<Rational>;
/// Cohomology dimensions `h^0 … h^{m+n}` of a line bundle.
pub type CohomologyVector = combinat::Cohomology<Int>;
/// Genus data of a complete-intersection curve.
pub type CurveGenus = koszul::CurveGenus<Int>;
/// One level of the Grassmannian tower.
pub type TowerLevel = tower::Level<Int>;
/// Hilbert-scheme and moduli dimensions of a complete intersection.
pub type TowerReport = tower::Tower<Int>;
/// Annotated canonical profile produced by [`catalog::enumerate_canonical`].
pub type CatalogEntry = catalog::Entry<Int>;
