//! Regular triangulations and normalized volumes.

use super::complex::SimplicialComplex;
use super::cone::cone_facets;
use super::umbrella::umbrella;
use crate::error::{Error, Result};
use crate::lattice::GkzMatrix;
use crate::linalg::{det, rank};
use crate::num::{Int, Rat, RatVector};
use num_traits::{One, Signed, Zero};

/// Maximal cells of a triangulation of `A`, each a `d`-subset of columns,
/// with their normalized volumes `|det A_sigma|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub cells: Vec<Vec<usize>>,
    pub volumes: Vec<Int>,
    pub n: usize,
}

impl Triangulation {
    pub fn total_volume(&self) -> Int {
        self.volumes.iter().sum()
    }
}

/// The regular subdivision induced by lifting `a_j` to height `L_j`, which
/// must be a triangulation (checked).
pub fn regular_triangulation(g: &GkzMatrix, weight: &RatVector) -> Result<Triangulation> {
    g.require_full()?;
    let u = umbrella(g, weight)?;
    let mut cells = Vec::new();
    let mut volumes = Vec::new();
    for f in u.facets() {
        let sub = g.matrix().select_columns(&f.columns);
        if f.columns.len() != g.d() || sub.det().is_zero() {
            return Err(Error::NonGenericWeight { face: f.columns.clone() });
        }
        volumes.push(sub.det().abs());
        cells.push(f.columns.clone());
    }
    Ok(Triangulation { cells, volumes, n: g.n() })
}

pub fn initial_complex_from_triangulation(t: &Triangulation) -> SimplicialComplex {
    SimplicialComplex::from_facets(t.n, t.cells.iter().cloned())
}

fn affine_rank(points: &[Vec<Rat>], idx: &[usize]) -> usize {
    let Some((&first, rest)) = idx.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rat>> = rest
        .iter()
        .map(|&i| points[i].iter().zip(&points[first]).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank(&diffs)
    }
}

/// Facets of the polytope `conv(points[idx])` inside its affine hull, as
/// index-saturated subsets of `idx`.
fn polytope_facets(points: &[Vec<Rat>], idx: &[usize]) -> Vec<Vec<usize>> {
    let homog: Vec<Vec<Rat>> = idx
        .iter()
        .map(|&i| {
            let mut p = points[i].clone();
            p.push(Rat::one());
            p
        })
        .collect();
    cone_facets(&homog).into_keys().map(|m| m.iter().map(|&k| idx[k]).collect()).collect()
}

/// Triangulation of `conv(points[idx])` by pulling the point `apex` (which
/// must be one of `idx`), recursing on the facets that miss it.
pub(crate) fn pulling_triangulation(points: &[Vec<Rat>], idx: &[usize], apex: usize) -> Vec<Vec<usize>> {
    let k = affine_rank(points, idx);
    if k == 0 {
        return vec![vec![apex]];
    }
    let mut cells = Vec::new();
    for facet in polytope_facets(points, idx) {
        if facet.contains(&apex) {
            continue;
        }
        let sub_apex = facet[0];
        for mut cell in pulling_triangulation(points, &facet, sub_apex) {
            cell.push(apex);
            cells.push(cell);
        }
    }
    cells
}

fn simplex_volume(points: &[Vec<Rat>], cell: &[usize]) -> Rat {
    let p0 = &points[cell[0]];
    let m: Vec<Vec<Rat>> = cell[1..]
        .iter()
        .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    det(&m).abs()
}

/// Normalized volume (the standard simplex has volume 1) of the convex hull
/// of `points` in their ambient space; zero if they do not span it.
/// Zero-dimensional ambient space: a nonempty set has volume 1.
pub fn normalized_volume(points: &[Vec<Rat>]) -> Rat {
    if points.is_empty() {
        return Rat::zero();
    }
    let dim = points[0].len();
    let idx: Vec<usize> = (0..points.len()).collect();
    if affine_rank(points, &idx) < dim {
        return Rat::zero();
    }
    if dim == 0 {
        return Rat::one();
    }
    pulling_triangulation(points, &idx, 0).iter().map(|c| simplex_volume(points, c)).sum()
}

/// Normalized volume of `conv(0, a_1, ..., a_n)`, computed from two different
/// pulling triangulations that must agree.
pub fn simplicial_volume(g: &GkzMatrix) -> Result<Int> {
    g.require_full()?;
    g.require_pointed()?;
    let mut points = vec![vec![Rat::zero(); g.d()]];
    points.extend(g.matrix().columns_rat());
    let idx: Vec<usize> = (0..points.len()).collect();
    let from_origin: Rat = pulling_triangulation(&points, &idx, 0).iter().map(|c| simplex_volume(&points, c)).sum();
    let last = points.len() - 1;
    let from_last: Rat =
        pulling_triangulation(&points, &idx, last).iter().map(|c| simplex_volume(&points, c)).sum();
    assert_eq!(from_origin, from_last, "volume depends on the triangulation");
    assert!(from_origin.is_integer());
    Ok(from_origin.to_integer())
}
