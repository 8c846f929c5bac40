//! The hypergeometric layer: systems, the univariate dictionary, resonance,
//! rank, Γ-series, slopes, Fuchs polygons and algebraicity tests.

mod beukers;
mod fuchs;
mod interlacing;
mod rank;
mod resonance;
mod series;
mod slopes;
mod system;
mod univariate;

pub use beukers::{algebraicity_check, beukers_sigma, BeukersCount};
pub use fuchs::{fuchs_polygon, fuchs_svg, DiffOperator, FuchsPolygon, ThetaOperator};
pub use interlacing::interlacing_test;
pub use rank::{generic_rank, monomial_curve_rank};
pub use resonance::{is_resonant, is_strongly_resonant, Resonance, StrongResonance};
pub use series::{apply_system, gamma_series, GammaSeries, Residual};
pub use slopes::{fuchs_slope_from_l_slope, slopes_along_hyperplane};
pub use system::{assemble, GkzSystem};
pub use univariate::{gkz_to_univariate, univariate_to_gkz, ThetaPoly, UnivariateForm, UnivariateOp};
