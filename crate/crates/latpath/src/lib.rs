//! Exact lattice path enumeration.
//!
//! Closed-form counts, determinant and Pfaffian formulas, continued
//! fractions and kernel-method generating functions, all checkable against
//! the brute-force enumerator in [`path`].

pub mod algebra;
pub mod boundary;
pub mod chambers;
pub mod checks;
pub mod kernel;
pub mod lgv;
pub mod motzkin;
pub mod orthopoly;
pub mod path;
pub mod plane;
pub mod qcount;
pub mod turns;

pub use algebra::{MPoly, Matrix, Poly, Ring, Series};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
/// Polynomial in `q` with integer coefficients.
pub type QPoly = Poly<Integer>;
pub type RatPoly = Poly<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numeric guard failed: {0}")]
    Numeric(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search is unbounded: {0}")]
    Unbounded(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}
