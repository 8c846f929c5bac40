//! Hodge numbers of the univariate hypergeometric modules `H(lambda; mu)`.

use crate::analysis::{ThetaOperator, ThetaPoly};
use crate::error::{Error, Result};
use crate::num::{fmt_rat, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Normalized parameters: both lists sorted in `[0, 1)`, no common value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeomParams {
    lambda: Vec<Rat>,
    mu: Vec<Rat>,
}

impl HypergeomParams {
    pub fn new(mut lambda: Vec<Rat>, mut mu: Vec<Rat>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidParameter("lambda must be nonempty".into()));
        }
        if let Some(x) = lambda.iter().chain(&mu).find(|x| x.is_negative() || **x >= Rat::one()) {
            return Err(Error::InvalidParameter(format!("parameter {} is outside [0, 1)", fmt_rat(x))));
        }
        if let Some(x) = lambda.iter().find(|x| mu.contains(x)) {
            return Err(Error::InvalidParameter(format!("{} occurs in both lists", fmt_rat(x))));
        }
        lambda.sort();
        mu.sort();
        Ok(HypergeomParams { lambda, mu })
    }

    pub fn lambda(&self) -> &[Rat] {
        &self.lambda
    }

    pub fn mu(&self) -> &[Rat] {
        &self.mu
    }

    /// `(m', m)`.
    pub fn orders(&self) -> (usize, usize) {
        (self.lambda.len(), self.mu.len())
    }

    /// `{0, 1, inf}` in the regular case, `{0, inf}` otherwise.
    pub fn singular_points(&self) -> Vec<&'static str> {
        if self.lambda.len() == self.mu.len() {
            vec!["0", "1", "inf"]
        } else {
            vec!["0", "inf"]
        }
    }
}

/// Dimension per level; levels are rational in the irregular case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeNumbers {
    pub grading: BTreeMap<Rat, usize>,
    pub total: usize,
}

impl HodgeNumbers {
    fn from_levels(levels: impl IntoIterator<Item = Rat>) -> Self {
        let mut grading = BTreeMap::new();
        let mut total = 0;
        for l in levels {
            *grading.entry(l).or_insert(0) += 1;
            total += 1;
        }
        HodgeNumbers { grading, total }
    }
}

fn count_below(xs: &[Rat], bound: &Rat) -> i64 {
    xs.iter().filter(|x| *x < bound).count() as i64
}

/// Level `#{i : lambda_i < mu_s} - s` for each `s`.
pub fn fedorov_numbers(p: &HypergeomParams) -> Result<HodgeNumbers> {
    let (m_prime, m) = p.orders();
    if m_prime != m {
        return Err(Error::NotRegularCase { m_prime, m });
    }
    Ok(HodgeNumbers::from_levels(
        p.mu.iter().enumerate().map(|(i, mu_s)| Rat::from_integer((count_below(&p.lambda, mu_s) - (i as i64 + 1)).into())),
    ))
}

/// How the per-index term `(m' - m) alpha_s` of the irregular formula is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AlphaReading {
    /// `alpha_s = lambda_s`.
    #[default]
    Lambda,
    /// Drop the term.
    Omit,
}

/// Level `#{i : mu_i < lambda_s} + (m' - m) lambda_s - s` for each `s`.
pub fn sabbah_yu_numbers(p: &HypergeomParams) -> Result<HodgeNumbers> {
    sabbah_yu_with(p, AlphaReading::default())
}

pub fn sabbah_yu_with(p: &HypergeomParams, reading: AlphaReading) -> Result<HodgeNumbers> {
    let (m_prime, m) = p.orders();
    if m_prime <= m {
        return Err(Error::NotConfluentCase { m_prime, m });
    }
    Ok(sabbah_yu_levels(p, reading))
}

fn sabbah_yu_levels(p: &HypergeomParams, reading: AlphaReading) -> HodgeNumbers {
    let (m_prime, m) = p.orders();
    let gap = Rat::from_integer((m_prime as i64 - m as i64).into());
    HodgeNumbers::from_levels(p.lambda.iter().enumerate().map(|(i, l)| {
        let extra = match reading {
            AlphaReading::Lambda => &gap * l,
            AlphaReading::Omit => Rat::zero(),
        };
        Rat::from_integer((count_below(&p.mu, l) - (i as i64 + 1)).into()) + extra
    }))
}

/// `prod (theta - lambda_i) - z prod (theta - mu_j)`.
pub fn operator_from_params(p: &HypergeomParams) -> ThetaOperator {
    let product = |xs: &[Rat]| {
        xs.iter().fold(ThetaPoly::one(), |acc, x| acc.mul(&ThetaPoly::linear(Rat::one(), -x)))
    };
    let lhs = product(&p.lambda);
    let rhs = product(&p.mu);
    ThetaOperator::from_terms(
        lhs.0.iter().enumerate().map(|(k, c)| (0, k as u32, c.clone()))
            .chain(rhs.0.iter().enumerate().map(|(k, c)| (1, k as u32, -c.clone()))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::fuchs_polygon;
    use crate::num::{rat, rat_int};

    fn elliptic() -> HypergeomParams {
        HypergeomParams::new(vec![rat_int(0), rat_int(0)], vec![rat(1, 2), rat(1, 2)]).unwrap()
    }

    fn levels(h: &HodgeNumbers) -> Vec<(Rat, usize)> {
        h.grading.iter().map(|(k, v)| (k.clone(), *v)).collect()
    }

    #[test]
    fn elliptic_curve_numbers() {
        let h = fedorov_numbers(&elliptic()).unwrap();
        assert_eq!(levels(&h), vec![(rat_int(0), 1), (rat_int(1), 1)]);
        assert_eq!(h.total, 2);
        let single = HypergeomParams::new(vec![rat_int(0)], vec![rat(1, 2)]).unwrap();
        assert_eq!(levels(&fedorov_numbers(&single).unwrap()), vec![(rat_int(0), 1)]);
    }

    #[test]
    fn confluent_numbers() {
        let p = HypergeomParams::new(vec![rat_int(0)], vec![]).unwrap();
        assert_eq!(levels(&sabbah_yu_numbers(&p).unwrap()), vec![(rat_int(-1), 1)]);
        assert_eq!(sabbah_yu_numbers(&elliptic()), Err(Error::NotConfluentCase { m_prime: 2, m: 2 }));
        assert_eq!(fedorov_numbers(&p), Err(Error::NotRegularCase { m_prime: 1, m: 0 }));
        let q = HypergeomParams::new(vec![rat(1, 3), rat(2, 3)], vec![rat(1, 2)]).unwrap();
        let h = sabbah_yu_numbers(&q).unwrap();
        assert_eq!(levels(&h), vec![(rat(-2, 3), 1), (rat(-1, 3), 1)]);
        let omit = sabbah_yu_with(&q, AlphaReading::Omit).unwrap();
        assert_eq!(levels(&omit), vec![(rat_int(-1), 2)]);
    }

    #[test]
    fn equal_orders_give_back_the_regular_formula() {
        // the irregular formula on the dual system: level k becomes -1 - k
        let p = elliptic();
        let dual: BTreeMap<Rat, usize> = fedorov_numbers(&p)
            .unwrap()
            .grading
            .into_iter()
            .map(|(k, v)| (rat_int(-1) - k, v))
            .collect();
        assert_eq!(sabbah_yu_levels(&p, AlphaReading::Lambda).grading, dual);
    }

    #[test]
    fn parameter_validation() {
        assert!(HypergeomParams::new(vec![], vec![rat(1, 2)]).is_err());
        assert!(HypergeomParams::new(vec![rat_int(1)], vec![]).is_err());
        assert!(HypergeomParams::new(vec![rat(1, 2)], vec![rat(1, 2)]).is_err());
        let p = HypergeomParams::new(vec![rat(1, 2), rat_int(0)], vec![]).unwrap();
        assert_eq!(p.lambda(), &[rat_int(0), rat(1, 2)]);
    }

    #[test]
    fn operators() {
        let p = HypergeomParams::new(vec![rat_int(0)], vec![]).unwrap();
        let op = operator_from_params(&p);
        assert_eq!(op, ThetaOperator::from_terms([(0, 1, rat_int(1)), (1, 0, rat_int(-1))]));
        assert!(fuchs_polygon(&op.to_diff()).unwrap().regular);
        let f = fuchs_polygon(&op.at_infinity().to_diff()).unwrap();
        assert_eq!(f.slopes, vec![rat_int(-1)]);
        assert_eq!(p.singular_points(), vec!["0", "inf"]);
        assert_eq!(elliptic().singular_points(), vec!["0", "1", "inf"]);
        let e = operator_from_params(&elliptic());
        // theta^2 - z (theta - 1/2)^2
        assert_eq!(e.terms[&(1, 0)], rat(-1, 4));
        assert_eq!(e.terms[&(0, 2)], rat_int(1));
    }
}
