//! Lattice points of the cone and the holes of `NA`.

use super::cone::cone_facets;
use crate::error::Result;
use crate::lattice::{default_saturation_bound, is_saturated, GkzMatrix, Saturation};
use crate::num::{dot_rat, to_rat, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Points of `(shift + Z^d) ∩ cone(A)` with `h . x <= max_degree`, where `h`
/// is the positive functional of `g`. Sorted by degree, then lex.
pub fn cone_points(g: &GkzMatrix, shift: &[Rat], max_degree: &Rat) -> Result<Vec<Vec<Rat>>> {
    g.require_pointed()?;
    let d = g.d();
    let h: Vec<Rat> = g.positive_functional().expect("pointed").iter().map(to_rat).collect();
    let cols = g.matrix().columns_rat();
    let normals: Vec<Vec<Rat>> = cone_facets(&cols).into_values().collect();
    // {x in cone : h.x <= D} = conv(0, D a_j / h.a_j)
    let mut lo = vec![Rat::zero(); d];
    let mut hi = vec![Rat::zero(); d];
    for a in &cols {
        let s = max_degree / dot_rat(&h, a);
        for i in 0..d {
            let c = &a[i] * &s;
            if c < lo[i] {
                lo[i] = c.clone();
            }
            if c > hi[i] {
                hi[i] = c;
            }
        }
    }
    let ranges: Vec<(Int, Int)> =
        (0..d).map(|i| ((&lo[i] - &shift[i]).ceil().to_integer(), (&hi[i] - &shift[i]).floor().to_integer())).collect();
    let mut out = Vec::new();
    if ranges.iter().any(|(a, b)| a > b) {
        return Ok(out);
    }
    let mut m: Vec<Int> = ranges.iter().map(|(a, _)| a.clone()).collect();
    loop {
        let x: Vec<Rat> = (0..d).map(|i| &shift[i] + to_rat(&m[i])).collect();
        if normals.iter().all(|n| !dot_rat(n, &x).is_negative()) && dot_rat(&h, &x) <= *max_degree {
            out.push(x);
        }
        let mut i = 0;
        loop {
            if i == d {
                out.sort_by(|a, b| dot_rat(&h, a).cmp(&dot_rat(&h, b)).then_with(|| a.cmp(b)));
                return Ok(out);
            }
            m[i] += 1;
            if m[i] <= ranges[i].1 {
                break;
            }
            m[i] = ranges[i].0.clone();
            i += 1;
        }
    }
}

/// Holes of `NA`, with a flag telling whether the list is provably complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Holes {
    pub points: Vec<Vec<Int>>,
    pub complete: bool,
}

/// Cone lattice points outside `NA`.
///
/// For homogeneous `A` with `d = 2` the hole set is finite exactly when both
/// end points of the curve have a neighbour at distance one; then degrees are
/// scanned until one has no gaps, after which none can have gaps, and the
/// answer is complete. Otherwise points up to `degree_bound` are checked and
/// the list is complete only when `A` is certified saturated.
pub fn semigroup_holes(g: &GkzMatrix, degree_bound: u64) -> Result<Holes> {
    g.require_full()?;
    g.require_pointed()?;
    if g.d() == 2 && g.is_homogeneous() {
        return Ok(curve_holes(g, degree_bound));
    }
    if is_saturated(g, default_saturation_bound(g))? == Saturation::Yes {
        return Ok(Holes { points: Vec::new(), complete: true });
    }
    let sg = g.semigroup()?;
    let zero = vec![Rat::zero(); g.d()];
    let points = cone_points(g, &zero, &Rat::from_integer(degree_bound.into()))?
        .into_iter()
        .map(|x| x.iter().map(|r| r.to_integer()).collect::<Vec<Int>>())
        .filter(|b| !sg.contains(b))
        .collect();
    Ok(Holes { points, complete: false })
}

/// Holes of a homogeneous `d = 2` semigroup, in original coordinates.
fn curve_holes(g: &GkzMatrix, degree_bound: u64) -> Holes {
    let h = g.positive_functional().expect("pointed").to_vec();
    // complete h = (p, q) to a unimodular matrix [[p, q], [-y, x]] with px + qy = 1
    let ext = h[0].extended_gcd(&h[1]);
    debug_assert!(ext.gcd.is_one());
    let (x, y) = (ext.x, ext.y);
    let cols = g.matrix().columns();
    let deg: Vec<Int> = cols.iter().map(|a| &h[0] * &a[0] + &h[1] * &a[1]).collect();
    debug_assert!(deg.iter().all(|e| e == &deg[0]));
    let c: Vec<Int> = cols.iter().map(|a| -&y * &a[0] + &x * &a[1]).collect();
    let cmin = c.iter().min().cloned().expect("columns");
    let cmax = c.iter().max().cloned().expect("columns");
    let steps: BTreeSet<Int> = c.iter().map(|v| v - &cmin).collect();
    let width = &cmax - &cmin;
    let one = Int::one();
    let finite = width.is_zero() || (steps.contains(&one) && steps.contains(&(&width - &one)));
    let max_degree = Int::from(degree_bound);
    let mut reach: BTreeSet<Int> = std::iter::once(Int::zero()).collect();
    let mut holes = Vec::new();
    let mut k = Int::zero();
    loop {
        k += 1;
        reach = reach.iter().flat_map(|r| steps.iter().map(move |s| r + s)).collect();
        let mut gaps = false;
        let mut s = Int::zero();
        while s <= &k * &width {
            if !reach.contains(&s) {
                gaps = true;
                // back to original coordinates: U^{-1} (k, s + k cmin), U^{-1} = [[x, -q], [y, p]]
                let second = &s + &k * &cmin;
                let b0 = &x * &k - &h[1] * &second;
                let b1 = &y * &k + &h[0] * &second;
                holes.push(vec![b0, b1]);
            }
            s += 1;
        }
        if (finite && !gaps) || (!finite && k >= max_degree) {
            break;
        }
    }
    Holes { points: holes, complete: finite }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Int> {
        x.iter().map(|&t| Int::from(t)).collect()
    }

    #[test]
    fn pinched_curve_hole() {
        let g = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        let holes = semigroup_holes(&g, 8).unwrap();
        assert_eq!(holes, Holes { points: vec![v(&[1, 2])], complete: true });
    }

    #[test]
    fn saturated_fixtures_have_no_holes() {
        for rows in [&[&[1i64, 0, 1][..], &[0, 1, 1]][..], &[&[1, 0], &[0, 1]], &[&[1, 1, 1], &[0, 1, 2]]] {
            let holes = semigroup_holes(&GkzMatrix::from_i64(rows), 8).unwrap();
            assert!(holes.points.is_empty() && holes.complete);
        }
    }

    #[test]
    fn curve_in_other_coordinates() {
        // the same pinched curve after a unimodular change of coordinates
        let g = GkzMatrix::from_i64(&[&[1, 2, 4, 5], &[1, 1, 1, 1]]);
        let holes = semigroup_holes(&g, 8).unwrap();
        assert_eq!(holes.points, vec![v(&[3, 1])]);
        // a curve with several holes: 0, 3, 4
        let g = GkzMatrix::from_i64(&[&[1, 1, 1], &[0, 3, 4]]);
        let holes = semigroup_holes(&g, 8).unwrap();
        let sg = g.semigroup().unwrap();
        assert!(holes.points.iter().all(|b| !sg.contains(b)));
        let brute: Vec<Vec<Int>> = cone_points(&g, &[Rat::zero(), Rat::zero()], &Rat::from_integer(8.into()))
            .unwrap()
            .into_iter()
            .map(|x| x.iter().map(|r| r.to_integer()).collect::<Vec<Int>>())
            .filter(|b| !sg.contains(b))
            .collect();
        assert_eq!(holes.points, brute);
    }

    #[test]
    fn infinite_hole_family() {
        // (k, 1) is a hole in every degree k
        let g = GkzMatrix::from_i64(&[&[1, 1, 1], &[0, 2, 3]]);
        let holes = semigroup_holes(&g, 4).unwrap();
        assert!(!holes.complete);
        assert_eq!(holes.points, vec![v(&[1, 1]), v(&[2, 1]), v(&[3, 1]), v(&[4, 1])]);
    }

    #[test]
    fn non_homogeneous_bounded_search() {
        let inhom = GkzMatrix::from_i64(&[&[2, 0, 3], &[0, 1, 0]]);
        let holes = semigroup_holes(&inhom, 3).unwrap();
        assert!(!holes.complete);
        assert!(holes.points.contains(&v(&[1, 0])));
    }
}
