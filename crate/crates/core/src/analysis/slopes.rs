//! Slopes along coordinate hyperplanes from umbrella jumps.

use crate::error::{Error, Result};
use crate::lattice::GkzMatrix;
use crate::num::{Rat, RatVector};
use crate::polyhedral::{umbrella_jumps, Window};
use num_traits::{One, Zero};

/// Jump values `t > 1` of the umbrella along `L^t = (1, ..., t, ..., 1)` with
/// `t` at position `j`, inside `window`.
///
/// Only `t > 1` is considered: at `t = 1` the family passes through the
/// order filtration itself, which is no slope. Homogeneous matrices have no
/// jumps there since the whole ray `t > 1` gives one umbrella.
pub fn slopes_along_hyperplane(g: &GkzMatrix, j: usize, window: &Window) -> Result<Vec<Rat>> {
    g.require_full()?;
    g.require_pointed()?;
    if j >= g.n() {
        return Err(Error::InvalidParameter(format!("column {} out of range 1..={}", j + 1, g.n())));
    }
    let lo = if window.lo < Rat::one() { Rat::one() } else { window.lo.clone() };
    if lo >= window.hi {
        return Ok(Vec::new());
    }
    let mut base = RatVector::new(vec![Rat::one(); g.n()]);
    base[j] = Rat::zero();
    let mut direction = RatVector::zeros(g.n());
    direction[j] = Rat::one();
    umbrella_jumps(g, &base, &direction, &Window::new(lo, window.hi.clone()))
}

/// `s_F` with `1/s_F = (1/s_L) / (1/s_L - 1)`, that is `s_F = 1 - s_L`.
pub fn fuchs_slope_from_l_slope(s_l: &Rat) -> Result<Rat> {
    if s_l.is_zero() || s_l.is_one() {
        return Err(Error::SingularConversion(s_l.clone()));
    }
    let inv = s_l.recip();
    let inv_f = &inv / (&inv - Rat::one());
    Ok(inv_f.recip())
}
