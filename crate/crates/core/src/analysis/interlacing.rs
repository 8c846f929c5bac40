//! The interlacing criterion for finite monodromy.

use crate::error::{Error, Result};
use crate::num::{fract, Rat};
use num_traits::One;

/// Whether the points `exp(2 pi i alpha)` and `exp(2 pi i beta)` alternate
/// around the circle. Only fractional parts matter. If `beta` is one
/// shorter than `alpha`, the parameter `1` is appended.
///
/// Repeated values inside one list never alternate, so e.g.
/// `alpha = (1/2, 1/2)`, `beta = (1, 1)` gives `false`.
pub fn interlacing_test(alpha: &[Rat], beta: &[Rat]) -> Result<bool> {
    let mut beta = beta.to_vec();
    if beta.len() + 1 == alpha.len() {
        beta.push(Rat::one());
    }
    if beta.len() != alpha.len() {
        return Err(Error::InvalidParameter(format!(
            "parameter lists have lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    let fa: Vec<Rat> = alpha.iter().map(fract).collect();
    let fb: Vec<Rat> = beta.iter().map(fract).collect();
    if let Some(x) = fa.iter().find(|x| fb.contains(x)) {
        return Err(Error::ListsIntersect(x.clone()));
    }
    let mut labelled: Vec<(Rat, bool)> = fa.into_iter().map(|x| (x, true)).chain(fb.into_iter().map(|x| (x, false))).collect();
    labelled.sort();
    Ok(labelled.windows(2).all(|w| w[0].1 != w[1].1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    #[test]
    fn circle_walks() {
        assert!(interlacing_test(&[rat(1, 3), rat(2, 3)], &[rat(1, 2), rat_int(1)]).unwrap());
        assert!(!interlacing_test(&[rat(1, 5), rat(2, 5)], &[rat(3, 5), rat_int(1)]).unwrap());
        assert!(!interlacing_test(&[rat(1, 2), rat(1, 2)], &[rat_int(1), rat_int(1)]).unwrap());
        assert!(interlacing_test(&[rat(1, 3), rat(2, 3)], &[rat(1, 2)]).unwrap());
    }

    #[test]
    fn shared_values_are_rejected() {
        assert_eq!(
            interlacing_test(&[rat(1, 2), rat(1, 3)], &[rat(3, 2), rat_int(1)]),
            Err(Error::ListsIntersect(rat(1, 2)))
        );
    }

    #[test]
    fn integer_shifts_do_not_matter() {
        let a = [rat(1, 3), rat(2, 3)];
        let b = [rat(1, 2), rat_int(1)];
        let a2 = [rat(4, 3), rat(-1, 3)];
        let b2 = [rat(-1, 2), rat_int(3)];
        assert_eq!(interlacing_test(&a, &b).unwrap(), interlacing_test(&a2, &b2).unwrap());
    }
}
