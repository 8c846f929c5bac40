//! Binomial and monomial ideals: toric ideals, weight-initial ideals,
//! standard pairs and initial complexes.

mod binomial;
mod buchberger;
mod monomial;
mod poly;

pub use binomial::{box_from_kernel, initial_complex, initial_ideal, int_weight, toric_ideal_generators, Binomial, InitialIdeal};
pub use buchberger::{buchberger, normal_form};
pub use monomial::{irreducible_decomposition, standard_pairs, MonomialIdeal, StandardPair};
pub use poly::{monomial_text, Exponent, Polynomial, TermOrder, TieBreak};
