//! Multiplicities of the components of the `L`-characteristic cycle.

use super::triangulation::normalized_volume;
use super::umbrella::umbrella;
use crate::error::{Error, Result};
use crate::lattice::{hnf_rows, lattice_index, smith_normal_form, GkzMatrix, IntMatrix, LatticeIndex};
use crate::linalg::{solve, transpose};
use crate::num::{to_rat, Int, Rat, RatVector};
use num_traits::{One, Zero};

/// Sum over umbrella facets `tau' ⊇ tau` of
/// `[ZA : Z tau'] * [(Z tau' ∩ Q tau) : Z tau] * vol(P \ Q)`, where `P` and `Q`
/// are the images of `tau' ∪ {0}` and `tau' \ tau` in `Z tau' / (Z tau' ∩ Q tau)`.
///
/// `Q ⊆ P` always holds, so the difference has volume `vol P - vol Q`.
pub fn char_cycle_multiplicity(g: &GkzMatrix, weight: &RatVector, tau: &[usize]) -> Result<Int> {
    g.require_full()?;
    let u = umbrella(g, weight)?;
    let mut tau = tau.to_vec();
    tau.sort_unstable();
    tau.dedup();
    if u.find(&tau).is_none() {
        return Err(Error::FaceNotInUmbrella { face: tau });
    }
    let all = g.matrix().columns();
    let mut total = Int::zero();
    for facet in u.facets() {
        if !facet.contains_face(&tau) {
            continue;
        }
        let prime: Vec<Vec<Int>> = facet.columns.iter().map(|&j| all[j].clone()).collect();
        let LatticeIndex::Finite(outer) = lattice_index(&prime, &all)? else {
            unreachable!("umbrella facets span Q^d");
        };
        total += outer * facet_term(g, &facet.columns, &tau);
    }
    Ok(total)
}

/// `[(Z tau' ∩ Q tau) : Z tau] * (vol P - vol Q)` for one facet `tau'`.
fn facet_term(g: &GkzMatrix, prime: &[usize], tau: &[usize]) -> Int {
    let d = g.d();
    let cols: Vec<Vec<Int>> = prime.iter().map(|&j| g.column(j)).collect();
    let basis = hnf_rows(&cols, d);
    assert_eq!(basis.len(), d, "umbrella facet of lower rank");
    let bt: Vec<Vec<Rat>> = transpose(&basis.iter().map(|r| r.iter().map(to_rat).collect()).collect::<Vec<_>>());
    let coords = |j: usize| -> Vec<Int> {
        let a: Vec<Rat> = g.column(j).iter().map(to_rat).collect();
        solve(&bt, &a).expect("column in its own lattice").iter().map(|r| r.to_integer()).collect()
    };
    // projection onto Z^d / (Z^d ∩ Q tau) via the Smith form of tau's coordinates
    let (proj_rows, inner): (Vec<Vec<Int>>, Int) = if tau.is_empty() {
        (IntMatrix::identity(d).data().to_vec(), Int::one())
    } else {
        let t = IntMatrix::new(tau.iter().map(|&j| coords(j)).collect()).expect("nonempty").transpose();
        let snf = smith_normal_form(&t);
        let k = snf.rank();
        let inner = snf.diagonal().into_iter().filter(|x| !x.is_zero()).product();
        (snf.u.data()[k..].to_vec(), inner)
    };
    let project = |x: &[Int]| -> Vec<Rat> {
        proj_rows.iter().map(|r| to_rat(&r.iter().zip(x).map(|(a, b)| a * b).sum::<Int>())).collect()
    };
    let mut p_points = vec![vec![Rat::zero(); proj_rows.len()]];
    let mut q_points = Vec::new();
    for &j in prime {
        let img = project(&coords(j));
        if !tau.contains(&j) {
            q_points.push(img.clone());
        }
        p_points.push(img);
    }
    let vol = normalized_volume(&p_points) - normalized_volume(&q_points);
    assert!(vol.is_integer());
    inner * vol.to_integer()
}
