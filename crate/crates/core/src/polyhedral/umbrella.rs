//! Faces, the weight-`L` umbrella and its jumps along a one-parameter family.

use super::cone::cone_faces;
use crate::error::{Error, Result};
use crate::lattice::GkzMatrix;
use crate::linalg::det;
use crate::num::{combinations, primitive_from_rat, to_rat, Rat, RatVector};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// A face given by the (0-based, sorted) indices of the columns on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub columns: Vec<usize>,
    /// Dimension as a face of the polytope: `rank - 1`, so the empty face has
    /// dimension `-1`.
    pub dim: i64,
    /// For cone faces: a primitive integral inner normal vanishing exactly on
    /// `columns`. For umbrella faces: `f` with `f . a_j + L_j >= 0`, equality
    /// exactly on `columns`. Zero for the whole cone.
    pub supporting_normal: Vec<Rat>,
}

impl Face {
    pub fn contains_face(&self, other: &[usize]) -> bool {
        other.iter().all(|c| self.columns.contains(c))
    }

    /// Columns as 1-based indices, the usual way of writing them down.
    pub fn one_based(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c + 1).collect()
    }
}

/// A face-closed collection of faces together with the weight it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Umbrella {
    pub faces: Vec<Face>,
    pub weight: RatVector,
    /// Ambient dimension `d` of the matrix.
    pub d: usize,
}

impl Umbrella {
    /// Faces of dimension `k` (the `k`-skeleton piece).
    pub fn skeleton(&self, k: i64) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dim == k).collect()
    }

    /// Maximal faces (dimension `d - 1`).
    pub fn facets(&self) -> Vec<&Face> {
        self.skeleton(self.d as i64 - 1)
    }

    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets().into_iter().map(|f| f.columns.clone()).collect()
    }

    pub fn column_sets(&self) -> BTreeSet<Vec<usize>> {
        self.faces.iter().map(|f| f.columns.clone()).collect()
    }

    pub fn find(&self, columns: &[usize]) -> Option<&Face> {
        let mut c = columns.to_vec();
        c.sort_unstable();
        c.dedup();
        self.faces.iter().find(|f| f.columns == c)
    }

    /// Same faces (ignoring normals and weight).
    pub fn same_faces(&self, other: &Umbrella) -> bool {
        self.column_sets() == other.column_sets()
    }
}

/// Proper faces of `cone(A)` (the empty face included, the whole cone not).
pub fn face_lattice(g: &GkzMatrix) -> Result<Umbrella> {
    g.require_pointed()?;
    let gens = g.matrix().columns_rat();
    let faces = cone_faces(&gens)
        .into_iter()
        .filter(|f| f.members.len() < g.n() && !f.normal.iter().all(Zero::is_zero))
        .map(|f| Face {
            columns: f.members,
            dim: f.rank as i64 - 1,
            supporting_normal: primitive_from_rat(&f.normal).iter().map(to_rat).collect(),
        })
        .collect();
    Ok(Umbrella { faces, weight: RatVector::zeros(g.n()), d: g.d() })
}

/// The `(A, L)`-umbrella: faces of `cone(e_{d+1}, (a_j, L_j))` that avoid the
/// vertical generator `e_{d+1}`, read back as column sets.
pub fn umbrella(g: &GkzMatrix, weight: &RatVector) -> Result<Umbrella> {
    g.require_pointed()?;
    if weight.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: weight.len() });
    }
    let d = g.d();
    let mut gens = Vec::with_capacity(g.n() + 1);
    let mut o = vec![Rat::zero(); d + 1];
    o[d] = Rat::one();
    gens.push(o);
    for (j, a) in g.matrix().columns_rat().into_iter().enumerate() {
        let mut p = a;
        p.push(weight[j].clone());
        gens.push(p);
    }
    let mut faces = Vec::new();
    for f in cone_faces(&gens) {
        if f.members.contains(&0) {
            continue;
        }
        let height = f.normal[d].clone();
        if !height.is_positive() {
            return Err(Error::DegenerateWeight);
        }
        faces.push(Face {
            columns: f.members.iter().map(|m| m - 1).collect(),
            dim: f.rank as i64 - 1,
            supporting_normal: f.normal[..d].iter().map(|x| x / &height).collect(),
        });
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.columns.cmp(&b.columns)));
    Ok(Umbrella { faces, weight: weight.clone(), d })
}

/// An open interval `(lo, hi)` of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: Rat,
    pub hi: Rat,
}

impl Window {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        Window { lo, hi }
    }

    pub fn contains(&self, t: &Rat) -> bool {
        &self.lo < t && t < &self.hi
    }

    /// Parses `lo..hi`.
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("window '{s}' is not of the form lo..hi"))?;
        let w = Window::new(crate::num::parse_rat(a)?, crate::num::parse_rat(b)?);
        if w.lo >= w.hi {
            return Err(format!("window '{s}' is empty"));
        }
        Ok(w)
    }
}

/// Values `t` in the window where `umbrella(base + t * direction)` changes.
pub fn umbrella_jumps(
    g: &GkzMatrix,
    base: &RatVector,
    direction: &RatVector,
    window: &Window,
) -> Result<Vec<Rat>> {
    g.require_pointed()?;
    for v in [base, direction] {
        if v.len() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: v.len() });
        }
    }
    if direction.is_zero() {
        return Err(Error::PreconditionViolation("direction must be nonzero".into()));
    }
    let d = g.d();
    let cols = g.matrix().columns_rat();
    let lifted = |t: &Rat, j: usize| -> Vec<Rat> {
        let mut p = cols[j].clone();
        p.push(&base[j] + t * &direction[j]);
        p
    };
    // coplanarity events: (d+1)-minors of the lifted columns are affine in t
    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    for subset in combinations(g.n(), d + 1) {
        let at = |t: &Rat| -> Rat {
            let m: Vec<Vec<Rat>> = subset.iter().map(|&j| lifted(t, j)).collect();
            det(&m)
        };
        let d0 = at(&Rat::zero());
        let slope = at(&Rat::one()) - &d0;
        if slope.is_zero() {
            continue;
        }
        let root = -d0 / slope;
        if window.contains(&root) {
            candidates.insert(root);
        }
    }
    let candidates: Vec<Rat> = candidates.into_iter().collect();
    let at = |t: &Rat| umbrella(g, &base.add(&direction.scale(t)));
    let two = Rat::from_integer(2.into());
    let mut jumps = Vec::new();
    for (i, t) in candidates.iter().enumerate() {
        let left_end = if i == 0 { &window.lo } else { &candidates[i - 1] };
        let right_end = candidates.get(i + 1).unwrap_or(&window.hi);
        let here = at(t)?;
        let left = at(&((left_end + t) / &two))?;
        let right = at(&((t + right_end) / &two))?;
        if !(here.same_faces(&left) && here.same_faces(&right)) {
            jumps.push(t.clone());
        }
    }
    Ok(jumps)
}
