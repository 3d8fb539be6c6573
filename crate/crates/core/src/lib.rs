//! Exact discriminant arithmetic for monic integer polynomials together with
//! exhaustive height censuses, finite-field character sums and the square sieve.

pub mod census;
pub mod error;
pub mod ffpoly;
pub mod fielddisc;
pub mod intarith;
pub mod irreducibility;
pub mod poly;
pub mod sieve;

pub use error::{Error, Result};
pub use ffpoly::Budget;
pub use poly::{IntPoly, MonicIntPoly};

