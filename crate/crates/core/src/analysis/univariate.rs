//! Univariate hypergeometric operators `lhs(theta) f = z rhs(theta) f` and
//! the dictionary with corank-one GKZ systems.

use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, GkzMatrix, IntMatrix};
use crate::linalg::solve;
use crate::num::{fmt_rat, fract, gcd_all, to_rat, Int, Rat, RatVector};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial in `theta`, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPoly(pub Vec<Rat>);

impl ThetaPoly {
    pub fn one() -> Self {
        ThetaPoly(vec![Rat::one()])
    }

    /// `slope * theta + constant`.
    pub fn linear(slope: Rat, constant: Rat) -> Self {
        ThetaPoly(vec![constant, slope])
    }

    pub fn mul(&self, other: &ThetaPoly) -> ThetaPoly {
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ThetaPoly(out)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "θ".into(),
                _ => format!("θ^{k}"),
            };
            if var.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}{var}", fmt_rat(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnivariateForm {
    /// `prod_{v_j>0} prod_l (v_j theta + c_j - l) = z prod_{v_j<0} prod_l (v_j theta + c_j - l)`.
    General { v: Vec<Int>, c: Vec<Rat> },
    /// `theta prod_j (theta + b_j - 1) = z prod_i (theta + a_i)`, solved by `pFq(a; b; z)`.
    Pfq { alpha: Vec<Rat>, beta: Vec<Rat> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateOp {
    pub form: UnivariateForm,
    pub lhs: ThetaPoly,
    pub rhs: ThetaPoly,
}

fn general_factors(v: &[Int], c: &[Rat], positive: bool) -> Vec<ThetaPoly> {
    let mut out = Vec::new();
    for (vj, cj) in v.iter().zip(c) {
        if vj.is_positive() != positive || vj.is_zero() {
            continue;
        }
        let count: u64 = vj.abs().try_into().expect("small kernel entry");
        for l in 0..count {
            out.push(ThetaPoly::linear(to_rat(vj), cj - Rat::from_integer(l.into())));
        }
    }
    out
}

fn product(factors: &[ThetaPoly]) -> ThetaPoly {
    factors.iter().fold(ThetaPoly::one(), |acc, f| acc.mul(f))
}

impl UnivariateOp {
    pub fn general(v: Vec<Int>, c: Vec<Rat>) -> Result<Self> {
        if v.len() != c.len() {
            return Err(Error::DimensionMismatch { expected: v.len(), found: c.len() });
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::InvalidParameter("v must be nonzero".into()));
        }
        let lhs = product(&general_factors(&v, &c, true));
        let rhs = product(&general_factors(&v, &c, false));
        Ok(UnivariateOp { form: UnivariateForm::General { v, c }, lhs, rhs })
    }

    pub fn pfq(alpha: Vec<Rat>, beta: Vec<Rat>) -> Result<Self> {
        if let Some(b) = beta.iter().find(|b| b.is_integer() && !b.is_positive()) {
            return Err(Error::InvalidParameter(format!("lower parameter {} is a nonpositive integer", fmt_rat(b))));
        }
        let lhs_f: Vec<ThetaPoly> = std::iter::once(ThetaPoly::linear(Rat::one(), Rat::zero()))
            .chain(beta.iter().map(|b| ThetaPoly::linear(Rat::one(), b - Rat::one())))
            .collect();
        let rhs_f: Vec<ThetaPoly> = alpha.iter().map(|a| ThetaPoly::linear(Rat::one(), a.clone())).collect();
        Ok(UnivariateOp { form: UnivariateForm::Pfq { alpha, beta }, lhs: product(&lhs_f), rhs: product(&rhs_f) })
    }

    /// `(v, c)` data; a `pFq` operator is read as `v = (1^{q+1}, (-1)^p)`
    /// after `z -> (-1)^p z`.
    pub fn general_data(&self) -> (Vec<Int>, Vec<Rat>) {
        match &self.form {
            UnivariateForm::General { v, c } => (v.clone(), c.clone()),
            UnivariateForm::Pfq { alpha, beta } => {
                let v = std::iter::repeat_n(Int::one(), beta.len() + 1)
                    .chain(std::iter::repeat_n(-Int::one(), alpha.len()))
                    .collect();
                let c = std::iter::once(Rat::zero())
                    .chain(beta.iter().map(|b| b - Rat::one()))
                    .chain(alpha.iter().map(|a| -a))
                    .collect();
                (v, c)
            }
        }
    }

    /// Shifts `c` by a multiple of `v` (the substitution `f -> z^s f`) so that
    /// the first `c_j` with `v_j > 0` vanishes.
    pub fn normalized(&self) -> Result<UnivariateOp> {
        let (v, c) = self.general_data();
        let Some(k) = v.iter().position(Signed::is_positive) else {
            return UnivariateOp::general(v, c);
        };
        let s = -&c[k] / to_rat(&v[k]);
        let shifted = v.iter().zip(&c).map(|(vj, cj)| cj + &s * to_rat(vj)).collect();
        UnivariateOp::general(v, shifted)
    }

    /// The `pFq` reading of a general operator whose kernel vector is a
    /// pattern of `q + 1` ones and `p` minus ones, up to `z -> (-1)^p z`.
    pub fn to_pfq(&self) -> Option<UnivariateOp> {
        let norm = self.normalized().ok()?;
        let (v, c) = norm.general_data();
        if !v.iter().all(|x| x.abs().is_one()) {
            return None;
        }
        let first = v.iter().position(Signed::is_positive)?;
        let beta = v
            .iter()
            .zip(&c)
            .enumerate()
            .filter(|(j, (x, _))| x.is_positive() && *j != first)
            .map(|(_, (_, cj))| cj + Rat::one())
            .collect();
        let alpha = v.iter().zip(&c).filter(|(x, _)| x.is_negative()).map(|(_, cj)| -cj).collect();
        UnivariateOp::pfq(alpha, beta).ok()
    }

    /// Fractional parts `(alpha, beta)` of the local exponent data: negated
    /// roots of the right side and of the left side, taken mod 1.
    pub fn monodromy_parameters(&self) -> (Vec<Rat>, Vec<Rat>) {
        let (v, c) = self.general_data();
        let roots = |positive: bool| -> Vec<Rat> {
            let mut r: Vec<Rat> = general_factors(&v, &c, positive)
                .iter()
                .map(|f| fract(&(&f.0[0] / &f.0[1])))
                .collect();
            r.sort();
            r
        };
        (roots(false), roots(true))
    }
}

impl fmt::Display for UnivariateOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) - z({})", self.lhs, self.rhs)
    }
}

/// A matrix with `ker A = Z v` from a Hermite basis of `v^perp`, and
/// `beta = A c`.
///
/// The rows span a saturated lattice, so `A` is always full; pointedness
/// holds exactly when `v` has entries of both signs and is only reported.
pub fn univariate_to_gkz(op: &UnivariateOp) -> Result<(GkzMatrix, RatVector)> {
    let (v, c) = op.general_data();
    let g = gcd_all(&v);
    if !g.is_one() {
        return Err(Error::NonPrimitiveKernel { gcd: g });
    }
    if v.len() < 2 {
        return Err(Error::InvalidParameter("need at least two columns".into()));
    }
    let perp = kernel_basis(&IntMatrix::new(vec![v.clone()])?);
    let a = IntMatrix::new(perp)?;
    let gkz = GkzMatrix::analyze(a);
    assert!(gkz.is_full(), "basis of a saturated lattice gives a full matrix");
    let beta = RatVector::new(gkz.matrix().mul_rat_vec(&c));
    Ok((gkz, beta))
}

/// Primitive kernel generator (first nonzero entry positive) and a particular
/// solution `c` of `A c = beta`.
pub fn gkz_to_univariate(g: &GkzMatrix, beta: &RatVector) -> Result<UnivariateOp> {
    if beta.len() != g.d() {
        return Err(Error::DimensionMismatch { expected: g.d(), found: beta.len() });
    }
    let kernel = kernel_basis(g.matrix());
    if kernel.len() != 1 {
        return Err(Error::CorankNotOne { corank: kernel.len() });
    }
    let mut v = kernel[0].clone();
    if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    let c = solve(&g.matrix().to_rat_rows(), beta).expect("a full matrix has a solution");
    UnivariateOp::general(v, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat, rat_int};

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kummer_round_trip() {
        let g = GkzMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        let beta = RatVector::new(vec![rat(-1, 2), rat_int(0)]);
        let op = gkz_to_univariate(&g, &beta).unwrap();
        let (v, c) = op.general_data();
        assert_eq!(v, ints(&[1, 1, -1]));
        assert_eq!(g.matrix().mul_rat_vec(&c), beta.0);
        // after the shift c_1 = 0 the left side is theta (theta + 1/2)
        let norm = op.normalized().unwrap();
        assert_eq!(norm.lhs.to_string(), "θ^2 + 1/2θ");
        let (a, b) = univariate_to_gkz(&op).unwrap();
        assert_eq!(a.matrix(), g.matrix());
        assert_eq!(b, beta);
    }

    #[test]
    fn one_dimensional_case() {
        let op = UnivariateOp::general(ints(&[1, -1]), vec![rat(1, 3), rat(1, 5)]).unwrap();
        let (a, b) = univariate_to_gkz(&op).unwrap();
        assert_eq!(a.matrix(), &IntMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(b.0, vec![rat(8, 15)]);
        let back = gkz_to_univariate(&GkzMatrix::from_i64(&[&[1, 1]]), &RatVector::zeros(1)).unwrap();
        assert_eq!(back.general_data(), (ints(&[1, -1]), vec![rat_int(0), rat_int(0)]));
    }

    #[test]
    fn gauss_round_trip() {
        let (a_, b_, c_) = (rat(1, 3), rat(1, 7), rat(2, 5));
        let op = UnivariateOp::general(ints(&[1, 1, -1, -1]), vec![rat_int(1), c_, a_, b_]).unwrap();
        let (g, beta) = univariate_to_gkz(&op).unwrap();
        assert_eq!(kernel_basis(g.matrix()).len(), 1);
        let back = gkz_to_univariate(&g, &beta).unwrap();
        let (v, c) = back.general_data();
        assert_eq!(v, ints(&[1, 1, -1, -1]));
        assert_eq!(g.matrix().mul_rat_vec(&c), beta.0);
    }

    #[test]
    fn errors() {
        let op = UnivariateOp::general(ints(&[2, -2]), vec![rat_int(0); 2]).unwrap();
        assert_eq!(univariate_to_gkz(&op), Err(Error::NonPrimitiveKernel { gcd: int(2) }));
        let g = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        assert_eq!(gkz_to_univariate(&g, &RatVector::zeros(2)), Err(Error::CorankNotOne { corank: 2 }));
        assert!(UnivariateOp::pfq(vec![], vec![rat_int(-1)]).is_err());
    }

    #[test]
    fn pfq_reading() {
        // 1F1(1/2; 3/2; z): theta (theta + 1/2) = z (theta + 1/2)
        let op = UnivariateOp::pfq(vec![rat(1, 2)], vec![rat(3, 2)]).unwrap();
        assert_eq!(op.lhs.to_string(), "θ^2 + 1/2θ");
        assert_eq!(op.rhs.to_string(), "θ + 1/2");
        let (v, c) = op.general_data();
        let general = UnivariateOp::general(v, c).unwrap();
        assert_eq!(general.to_pfq().unwrap(), op);
        // a general operator with a non +-1 kernel has no pFq reading
        let curve = UnivariateOp::general(ints(&[1, -2, 1]), vec![rat_int(0); 3]).unwrap();
        assert!(curve.to_pfq().is_none());
    }

    #[test]
    fn monodromy_data_of_the_curve() {
        let g = GkzMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 2]]);
        let op = gkz_to_univariate(&g, &RatVector::new(vec![rat_int(0), rat(1, 2)])).unwrap();
        let (alpha, beta) = op.monodromy_parameters();
        assert_eq!(alpha, vec![rat(1, 4), rat(3, 4)]);
        assert_eq!(beta, vec![rat_int(0), rat(1, 2)]);
    }
}
