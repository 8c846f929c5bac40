//! Face enumeration for cones generated by finitely many rational vectors.

use crate::linalg::{nullspace, rank, rref};
use crate::num::{combinations, dot_rat, Rat};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// A face of `cone(gens)`, described by the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ConeFace {
    pub members: Vec<usize>,
    pub rank: usize,
    /// Inner normal: `>= 0` on all generators, `= 0` exactly on `members`.
    /// Zero for the whole cone.
    pub normal: Vec<Rat>,
    pub is_facet: bool,
}

/// Facets of `cone(gens)` inside its linear span, keyed by member set, with
/// inner normals in ambient coordinates.
pub(crate) fn cone_facets(gens: &[Vec<Rat>]) -> BTreeMap<Vec<usize>, Vec<Rat>> {
    let mut facets = BTreeMap::new();
    let Some(first) = gens.first() else {
        return facets;
    };
    let ambient = first.len();
    let r = rank(gens);
    if r == 0 {
        return facets;
    }
    let (_, pivots) = rref(gens);
    let proj: Vec<Vec<Rat>> = gens.iter().map(|g| pivots.iter().map(|&p| g[p].clone()).collect()).collect();
    for subset in combinations(gens.len(), r - 1) {
        let sub: Vec<Vec<Rat>> = subset.iter().map(|&i| proj[i].clone()).collect();
        if !sub.is_empty() && rank(&sub) != r - 1 {
            continue;
        }
        let ns = nullspace(&sub, r);
        debug_assert_eq!(ns.len(), 1);
        let mut n = ns.into_iter().next().expect("corank one");
        let vals: Vec<Rat> = proj.iter().map(|g| dot_rat(&n, g)).collect();
        if vals.iter().any(Signed::is_negative) {
            if vals.iter().any(Signed::is_positive) {
                continue;
            }
            n = n.into_iter().map(|x| -x).collect();
        }
        let members: Vec<usize> = (0..gens.len()).filter(|&i| vals[i].is_zero()).collect();
        facets.entry(members).or_insert_with(|| {
            let mut amb = vec![Rat::zero(); ambient];
            for (k, &p) in pivots.iter().enumerate() {
                amb[p] = n[k].clone();
            }
            amb
        });
    }
    facets
}

/// All faces of the pointed cone `cone(gens)`, including the whole cone and
/// the apex, sorted by rank then member list.
pub(crate) fn cone_faces(gens: &[Vec<Rat>]) -> Vec<ConeFace> {
    let facets = cone_facets(gens);
    let all: Vec<usize> = (0..gens.len()).collect();
    let mut sets: BTreeSet<Vec<usize>> = facets.keys().cloned().collect();
    loop {
        let snapshot: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                let meet: Vec<usize> = a.iter().filter(|x| b.contains(x)).copied().collect();
                grew |= sets.insert(meet);
            }
        }
        if !grew {
            break;
        }
    }
    sets.insert(all);
    let ambient = gens.first().map_or(0, Vec::len);
    let mut faces: Vec<ConeFace> = sets
        .into_iter()
        .map(|members| {
            let mut normal = vec![Rat::zero(); ambient];
            for (fm, fnormal) in &facets {
                if members.iter().all(|m| fm.contains(m)) {
                    for (x, y) in normal.iter_mut().zip(fnormal) {
                        *x += y;
                    }
                }
            }
            let sub: Vec<Vec<Rat>> = members.iter().map(|&i| gens[i].clone()).collect();
            let rank = if sub.is_empty() { 0 } else { rank(&sub) };
            let is_facet = facets.contains_key(&members);
            ConeFace { members, rank, normal, is_facet }
        })
        .collect();
    faces.sort_by(|a, b| a.rank.cmp(&b.rank).then_with(|| a.members.cmp(&b.members)));
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|p| p.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    #[test]
    fn quadrant_faces() {
        let faces = cone_faces(&pts(&[&[1, 0], &[0, 1], &[1, 1]]));
        let sets: Vec<Vec<usize>> = faces.iter().map(|f| f.members.clone()).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![1], vec![0, 1, 2]]);
        let ray0 = &faces[1];
        assert!(ray0.is_facet);
        assert_eq!(ray0.normal, vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn square_pyramid_has_non_simplicial_apex() {
        // cone over a square: four facets, apex is the meet of all
        let faces = cone_faces(&pts(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]));
        assert_eq!(faces.iter().filter(|f| f.is_facet).count(), 4);
        assert_eq!(faces.iter().filter(|f| f.rank == 1).count(), 4);
        assert_eq!(faces.len(), 10);
    }

    #[test]
    fn lower_dimensional_cone() {
        // a planar cone in three-space
        let faces = cone_faces(&pts(&[&[1, 0, 0], &[1, 1, 0]]));
        assert_eq!(faces.len(), 4);
        for f in &faces {
            for (i, g) in pts(&[&[1, 0, 0], &[1, 1, 0]]).iter().enumerate() {
                let v = dot_rat(&f.normal, g);
                assert!(!v.is_negative());
                assert_eq!(v.is_zero(), f.members.contains(&i) || f.normal.iter().all(Zero::is_zero));
            }
        }
    }
}
