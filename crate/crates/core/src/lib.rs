//! Exact combinatorics of A-hypergeometric (GKZ) systems.
//!
//! Everything here works over `BigInt` / `BigRational`; floats appear only
//! when SVG pictures are scaled into their viewbox. The modules build on each
//! other bottom-up: [`lattice`] for integer linear algebra, [`polyhedral`] for
//! cones, umbrellas and triangulations, [`toric`] for binomial ideals,
//! [`analysis`] for the hypergeometric layer and [`hodge`] for the univariate
//! Hodge-number formulas.

pub mod analysis;
pub mod error;
pub mod fixtures;
pub mod hodge;
pub mod lattice;
pub mod linalg;
pub mod num;
pub mod plot;
pub mod polyhedral;
pub mod toric;

pub use error::{Error, Result};
pub use lattice::{GkzMatrix, IntMatrix};
pub use num::{Int, Rat, RatVector};
