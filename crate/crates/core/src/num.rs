//! Scalar aliases and small helpers over exact integers and rationals.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Deref, DerefMut};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn to_rat(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Parses `p`, `-p`, `+p`, `p/q` (with optional sign) into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => Int::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(Rat::new(n, d))
}

pub fn parse_int(s: &str) -> Result<Int, String> {
    let t = s.strip_prefix('+').unwrap_or(s);
    let digits = t.strip_prefix('-').unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("'{s}' is not an integer"));
    }
    t.parse::<Int>().map_err(|e| format!("'{s}': {e}"))
}

/// `p` for integers, `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integral(r: &Rat) -> bool {
    r.is_integer()
}

/// Fractional part in `[0, 1)`.
pub fn fract(r: &Rat) -> Rat {
    r - r.floor()
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Int {
    xs.into_iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Int {
    xs.into_iter().fold(Int::one(), |l, x| if x.is_zero() { l } else { l.lcm(x) })
}

/// Positive multiple of `v` that is a primitive integer vector. Zero stays zero.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let den = lcm_all(v.iter().map(|r| r.denom()));
    let scaled: Vec<Int> = v.iter().map(|r| (r * to_rat(&den)).to_integer()).collect();
    primitive_int(&scaled)
}

pub fn primitive_int(v: &[Int]) -> Vec<Int> {
    let g = gcd_all(v.iter());
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn ints_to_rats(v: &[Int]) -> Vec<Rat> {
    v.iter().map(to_rat).collect()
}

pub fn max_abs(v: &[Int]) -> Int {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Int::zero)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Exact rational vector (parameters β, weights L, exponents γ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        RatVector(vec![Rat::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVector(v.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn from_int_vec(v: &[Int]) -> Self {
        RatVector(ints_to_rats(v))
    }

    /// Comma or whitespace separated list of rationals.
    pub fn parse(s: &str) -> Result<Self, String> {
        let parts = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty());
        parts.map(parse_rat).collect::<Result<Vec<_>, _>>().map(RatVector)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integral)
    }

    pub fn dot(&self, other: &[Rat]) -> Rat {
        dot_rat(&self.0, other)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        RatVector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &[Rat]) -> Self {
        RatVector(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rat).collect()
    }
}

impl Deref for RatVector {
    type Target = Vec<Rat>;
    fn deref(&self) -> &Vec<Rat> {
        &self.0
    }
}

impl DerefMut for RatVector {
    fn deref_mut(&mut self) -> &mut Vec<Rat> {
        &mut self.0
    }
}

impl From<Vec<Rat>> for RatVector {
    fn from(v: Vec<Rat>) -> Self {
        RatVector(v)
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("+4").unwrap(), rat_int(4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("--1").is_err());
        assert_eq!(fmt_rat(&rat(6, -4)), "-3/2");
        assert_eq!(fmt_rat(&rat(8, 4)), "2");
    }

    #[test]
    fn fract_is_in_unit_interval() {
        assert_eq!(fract(&rat(-1, 3)), rat(2, 3));
        assert_eq!(fract(&rat(7, 2)), rat(1, 2));
        assert_eq!(fract(&rat_int(-2)), rat_int(0));
    }

    #[test]
    fn primitive_scaling() {
        let v = primitive_from_rat(&[rat(1, 2), rat(-3, 4), rat_int(0)]);
        assert_eq!(v, vec![int(2), int(-3), int(0)]);
    }

    #[test]
    fn rat_vector_parse() {
        let v = RatVector::parse("1/2, -1 3").unwrap();
        assert_eq!(v, RatVector(vec![rat(1, 2), rat_int(-1), rat_int(3)]));
    }
}
