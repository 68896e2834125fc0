//! Exact arithmetic over `Q(r)`: the parameter field, polynomials in `z`, and their JSON form.

pub mod json;
pub mod multipoly;
pub mod rpoly;
pub mod scalar;

pub use multipoly::{Mono, MultiPoly};
pub use rpoly::RPoly;
pub use scalar::{binom, parse_rational, rising, ParamScalar};
