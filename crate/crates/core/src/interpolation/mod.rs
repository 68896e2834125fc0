//! The polynomials `R_λ`, `r_λ`, their basis expansions and structure.

pub mod basis;
pub mod build;
pub mod elementary;
pub mod jack;
pub mod solve;
pub mod structure;

pub use basis::{from_basis, hat_transform, to_basis, Basis, RExpansion};
pub use build::{build_r, build_r_normalized, column_r, interpolation_system};
pub use elementary::{e_mu, elementary, elementary_semisym, shifted_elementary};
pub use jack::{shifted_jack, shifted_jack_u};
pub use structure::{stability_restrict, top_component};
