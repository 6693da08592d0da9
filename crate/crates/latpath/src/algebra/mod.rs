//! Exact arithmetic: rings, polynomials, truncated series, matrices.

pub mod binom;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod ring;
pub mod series;

pub use binom::*;
pub use matrix::Matrix;
pub use mpoly::MPoly;
pub use poly::{interpolate, Poly};
pub use ring::{int, rat, rational_to_integer, ExactDiv, Ring};
pub use series::Series;
