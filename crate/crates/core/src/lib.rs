//! Interpolation polynomials for the semisymmetric group `S_⌈n/2⌉ × S_⌊n/2⌋`
//! acting on odd and even coordinates, computed exactly over `Q(r)`.

pub mod ambient;
pub mod cli;
pub mod combinatorics;
pub mod diffops;
pub mod error;
pub mod exactalg;
pub mod identities;
pub mod interpolation;
pub mod memo;
pub mod verify;

pub use ambient::Ambient;
pub use error::{Error, Result};
