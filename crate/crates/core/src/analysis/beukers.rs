//! Beukers' count of generators of `(beta + ZA) ∩ cone(A)` and the
//! resulting algebraicity test.

use crate::error::{Error, Result};
use crate::lattice::{default_saturation_bound, is_saturated, GkzMatrix, Saturation};
use crate::num::{dot_rat, lcm_all, to_rat, Int, Rat, RatVector};
use crate::polyhedral::{cone_points, simplicial_volume};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeukersCount {
    pub sigma: usize,
    pub generators: Vec<Vec<Rat>>,
    /// The degree bound reached the region where generators can live.
    pub complete: bool,
}

fn check(g: &GkzMatrix, beta: &RatVector) -> Result<()> {
    g.require_full()?;
    g.require_pointed()?;
    g.require_homogeneous()?;
    if beta.len() != g.d() {
        return Err(Error::DimensionMismatch { expected: g.d(), found: beta.len() });
    }
    if is_saturated(g, default_saturation_bound(g))? != Saturation::Yes {
        return Err(Error::PreconditionViolation("the semigroup NA is not certified saturated".into()));
    }
    Ok(())
}

/// Degree below which all generators lie: a generator is a combination of
/// `d` independent columns with coefficients in `[0, 1)`.
fn generator_degree_bound(g: &GkzMatrix) -> Int {
    let top = g.matrix().columns().iter().map(|a| g.degree(a).expect("pointed")).max().expect("a column");
    top * Int::from(g.d())
}

/// Elements `c` of `(beta + Z^d) ∩ cone(A)` of degree at most `bound` with
/// `c - a_j` outside the cone for every `j`.
pub fn beukers_sigma(g: &GkzMatrix, beta: &RatVector, bound: u64) -> Result<BeukersCount> {
    check(g, beta)?;
    let cols = g.matrix().columns_rat();
    let normals: Vec<Vec<Rat>> = crate::polyhedral::cone_facet_normals(g);
    let in_cone = |x: &[Rat]| normals.iter().all(|n| !dot_rat(n, x).is_negative());
    let generators: Vec<Vec<Rat>> = cone_points(g, beta, &Rat::from_integer(bound.into()))?
        .into_iter()
        .filter(|c| {
            cols.iter().all(|a| {
                let shifted: Vec<Rat> = c.iter().zip(a).map(|(x, y)| x - y).collect();
                !in_cone(&shifted)
            })
        })
        .collect();
    Ok(BeukersCount {
        sigma: generators.len(),
        complete: Int::from(bound) >= generator_degree_bound(g),
        generators,
    })
}

/// `sigma(k beta) = vol(A)` for all `1 <= k <= D` coprime to the common
/// denominator `D` of `beta`.
pub fn algebraicity_check(g: &GkzMatrix, beta: &RatVector) -> Result<bool> {
    check(g, beta)?;
    let vol = simplicial_volume(g)?;
    let den = lcm_all(beta.iter().map(|b| b.denom()));
    let bound = generator_degree_bound(g).to_u64().expect("small degree bound");
    let d_small = den.to_u64().ok_or_else(|| Error::Overflow("denominator too large".into()))?;
    for k in (1..=d_small).filter(|k| k.gcd(&d_small).is_one()) {
        let scaled = beta.scale(&to_rat(&Int::from(k)));
        let count = beukers_sigma(g, &scaled, bound)?;
        debug_assert!(count.complete);
        if Int::from(count.sigma) != vol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{gkz_to_univariate, interlacing_test};
    use crate::num::{rat, rat_int};

    fn curve() -> GkzMatrix {
        GkzMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 2]])
    }

    #[test]
    fn origin_generates() {
        let g = GkzMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 1]]);
        let c = beukers_sigma(&g, &RatVector::zeros(2), 4).unwrap();
        assert_eq!(c.sigma, 1);
        assert!(c.complete);
    }

    #[test]
    fn unsaturated_is_rejected() {
        let g = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        assert!(matches!(beukers_sigma(&g, &RatVector::zeros(2), 4), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn half_integer_on_the_curve() {
        let beta = RatVector::new(vec![rat_int(0), rat(1, 2)]);
        let c = beukers_sigma(&curve(), &beta, 2).unwrap();
        assert_eq!(c.sigma, 2);
        assert!(c.complete);
        assert!(Int::from(c.sigma) <= simplicial_volume(&curve()).unwrap());
        assert!(algebraicity_check(&curve(), &beta).unwrap());
        let (a, b) = gkz_to_univariate(&curve(), &beta).unwrap().monodromy_parameters();
        assert!(interlacing_test(&a, &b).unwrap());
    }

    #[test]
    fn simplex_counts_one() {
        let g = GkzMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let beta = RatVector::new(vec![rat(1, 3), rat(1, 5)]);
        assert_eq!(beukers_sigma(&g, &beta, 2).unwrap().sigma, 1);
        assert!(algebraicity_check(&g, &beta).unwrap());
        // integral beta: the degenerate range k = 1
        assert!(algebraicity_check(&g, &RatVector::zeros(2)).unwrap());
    }
}
