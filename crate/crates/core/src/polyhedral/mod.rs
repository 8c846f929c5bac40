//! Exact convex geometry: cone faces, umbrellas, regular triangulations,
//! volumes, semigroup holes and characteristic-cycle multiplicities.

mod complex;
mod cone;
mod holes;
mod multiplicity;
mod svg;
mod triangulation;
mod umbrella;

pub use complex::SimplicialComplex;
pub use holes::{cone_points, semigroup_holes, Holes};
pub use multiplicity::char_cycle_multiplicity;
pub use svg::{triangulation_svg, umbrella_svg};
pub use triangulation::{
    initial_complex_from_triangulation, normalized_volume, regular_triangulation, simplicial_volume,
    Triangulation,
};
pub use umbrella::{face_lattice, umbrella, umbrella_jumps, Face, Umbrella, Window};

/// Inner facet normals of `cone(A)`.
pub(crate) fn cone_facet_normals(g: &crate::lattice::GkzMatrix) -> Vec<Vec<crate::num::Rat>> {
    cone::cone_facets(&g.matrix().columns_rat()).into_values().collect()
}
