//! Holonomic rank: the generic value and the monomial-curve jumps.

use crate::error::{Error, Result};
use crate::lattice::GkzMatrix;
use crate::num::Int;
use crate::polyhedral::{semigroup_holes, simplicial_volume};
use num_traits::{Signed, ToPrimitive};

/// `vol(A)`, the rank away from the exceptional parameters.
pub fn generic_rank(g: &GkzMatrix) -> Result<Int> {
    g.require_full()?;
    g.require_pointed()?;
    simplicial_volume(g)
}

/// Rank at an integer parameter for a homogeneous `d = 2` matrix: the holes
/// of `NA` are exactly the rank-jumping parameters, each jumping by one.
pub fn monomial_curve_rank(g: &GkzMatrix, beta: &[Int]) -> Result<Int> {
    if g.d() != 2 || !g.is_homogeneous() {
        return Err(Error::PreconditionViolation("rank jumps are implemented for homogeneous d = 2 only".into()));
    }
    if beta.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: beta.len() });
    }
    let vol = generic_rank(g)?;
    let deg = g.degree(beta).expect("pointed");
    if deg.is_negative() {
        return Ok(vol);
    }
    let holes = semigroup_holes(g, deg.to_u64().unwrap_or(u64::MAX))?;
    Ok(if holes.points.iter().any(|h| h == beta) { vol + 1 } else { vol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    #[test]
    fn ranks_of_the_fixtures() {
        let c0134 = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        assert_eq!(generic_rank(&c0134).unwrap(), int(4));
        assert_eq!(generic_rank(&GkzMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]])).unwrap(), int(2));
        assert_eq!(generic_rank(&GkzMatrix::from_i64(&[&[1, 0], &[0, 1]])).unwrap(), int(1));
        assert_eq!(monomial_curve_rank(&c0134, &[int(1), int(2)]).unwrap(), int(5));
        assert_eq!(monomial_curve_rank(&c0134, &[int(0), int(0)]).unwrap(), int(4));
        assert_eq!(monomial_curve_rank(&c0134, &[int(2), int(3)]).unwrap(), int(4));
        assert_eq!(monomial_curve_rank(&c0134, &[int(-1), int(0)]).unwrap(), int(4));
    }

    #[test]
    fn outside_the_curve_class() {
        let k = GkzMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(matches!(monomial_curve_rank(&k, &[int(0), int(0)]), Err(Error::PreconditionViolation(_))));
    }
}
