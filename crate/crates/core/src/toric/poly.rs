//! Sparse polynomials with rational coefficients and weight/tie-break term
//! orders.

use crate::error::{Error, Result};
use crate::num::{fmt_rat, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub type Exponent = Vec<u32>;

/// Refinement used once all weight vectors tie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Total degree, then reverse lexicographic with `x_1 > ... > x_n`.
    GRevLex,
    /// Lexicographic with `x_1 > ... > x_n`.
    Lex,
    /// Reverse lexicographic with variable `k` moved to the end (smallest),
    /// no degree comparison; the weights must make the order global.
    RevLexLast(usize),
}

/// Weight vectors compared in turn, then a tie-break.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub weights: Vec<Vec<Rat>>,
    pub tie: TieBreak,
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder { weights: Vec::new(), tie: TieBreak::GRevLex }
    }

    pub fn weighted(weight: Vec<Rat>, tie: TieBreak) -> Self {
        TermOrder { weights: vec![weight], tie }
    }

    /// Fails with `NonGlobalOrder` unless `1 < x_i` for every variable.
    pub fn check_global(&self, n: usize) -> Result<()> {
        for i in 0..n {
            let first = self.weights.iter().find(|w| !w[i].is_zero());
            match first {
                Some(w) if w[i].is_negative() => return Err(Error::NonGlobalOrder { weight: w.clone() }),
                Some(_) => {}
                None if matches!(self.tie, TieBreak::RevLexLast(_)) => {
                    return Err(Error::NonGlobalOrder { weight: self.weights.first().cloned().unwrap_or_default() })
                }
                None => {}
            }
        }
        Ok(())
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for w in &self.weights {
            let wa: Rat = w.iter().zip(a).map(|(x, &e)| x * Rat::from_integer(e.into())).sum();
            let wb: Rat = w.iter().zip(b).map(|(x, &e)| x * Rat::from_integer(e.into())).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match self.tie {
            TieBreak::Lex => a.cmp(b),
            TieBreak::GRevLex => {
                let (da, db): (u64, u64) = (a.iter().map(|&x| x as u64).sum(), b.iter().map(|&x| x as u64).sum());
                da.cmp(&db).then_with(|| revlex(a, b, (0..a.len()).rev()))
            }
            TieBreak::RevLexLast(k) => {
                let order = std::iter::once(k).chain((0..a.len()).rev().filter(move |&i| i != k));
                revlex(a, b, order)
            }
        }
    }
}

/// Reverse lexicographic comparison scanning variables in `order` (smallest
/// variable first): the monomial with the smaller exponent there is larger.
fn revlex(a: &[u32], b: &[u32], order: impl Iterator<Item = usize>) -> Ordering {
    for i in order {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Polynomial in `n` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Exponent, coeff: Rat) -> Self {
        let mut p = Polynomial::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    /// `x^plus - x^minus`.
    pub fn binomial(plus: &[u32], minus: &[u32]) -> Self {
        let mut p = Polynomial::monomial(plus.to_vec(), Rat::one());
        p.add_term(minus.to_vec(), -Rat::one());
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, Rat)>) -> Self {
        let mut p = Polynomial::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&Exponent, &Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted from largest to smallest.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Exponent, Rat)> {
        let mut t: Vec<(Exponent, Rat)> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    /// `self - c * x^shift * other`.
    fn sub_scaled(&mut self, c: &Rat, shift: &[u32], other: &Polynomial) {
        for (e, k) in &other.terms {
            let exp: Exponent = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(exp, -(c * k));
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        Polynomial::from_terms(self.n, self.terms.iter().map(|(e, k)| (e.clone(), k * c)))
    }

    pub fn make_monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Divides every exponent by the largest common power of `x_k`.
    pub fn strip_variable(&self, k: usize) -> Polynomial {
        let m = self.terms.keys().map(|e| e[k]).min().unwrap_or(0);
        Polynomial::from_terms(
            self.n,
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e[k] -= m;
                (e, c.clone())
            }),
        )
    }

    /// Weighted degree of each term; the maximal ones form the initial form.
    pub fn initial_form(&self, weight: &[Rat]) -> Polynomial {
        let wdeg = |e: &Exponent| -> Rat { weight.iter().zip(e).map(|(w, &x)| w * Rat::from_integer(x.into())).sum() };
        let top = self.terms.keys().map(wdeg).max();
        Polynomial::from_terms(self.n, self.terms.iter().filter(|(e, _)| Some(wdeg(e)) == top).map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Remainder of full reduction by `basis` (leading data precomputed).
    pub fn reduce(&self, basis: &[(Exponent, Rat, Polynomial)], order: &TermOrder) -> Polynomial {
        let mut f = self.clone();
        let mut rem = Polynomial::zero(self.n);
        while let Some((e, c)) = f.leading(order).map(|(e, c)| (e.clone(), c.clone())) {
            match basis.iter().find(|(lm, _, _)| divides(lm, &e)) {
                Some((lm, lc, g)) => {
                    let shift: Exponent = e.iter().zip(lm).map(|(a, b)| a - b).collect();
                    f.sub_scaled(&(&c / lc), &shift, g);
                }
                None => {
                    f.terms.remove(&e);
                    rem.add_term(e, c);
                }
            }
        }
        rem
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = TermOrder::grevlex();
        for (i, (e, c)) in self.sorted_terms(&order).iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = monomial_text(e);
            match (mag.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{}", fmt_rat(&mag))?,
                (false, false) => write!(f, "{}*{mono}", fmt_rat(&mag))?,
            }
        }
        Ok(())
    }
}

/// `∂1∂2^3` style text for an exponent vector (empty for the unit).
pub fn monomial_text(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { format!("∂{}", i + 1) } else { format!("∂{}^{}", i + 1, x) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;

    #[test]
    fn grevlex_comparisons() {
        let o = TermOrder::grevlex();
        assert_eq!(o.cmp(&[1, 1, 0], &[0, 0, 1]), Ordering::Greater);
        // same degree: x1 x3 < x2^2 in grevlex
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
    }

    #[test]
    fn revlex_with_chosen_last_variable() {
        let o = TermOrder::weighted(vec![rat_int(1); 3], TieBreak::RevLexLast(0));
        // x1 is the cheapest variable now
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[0, 0, 1], &[0, 1, 0]), Ordering::Less);
    }

    #[test]
    fn global_order_check() {
        let bad = TermOrder::weighted(vec![rat_int(1), rat_int(-1)], TieBreak::GRevLex);
        assert!(matches!(bad.check_global(2), Err(Error::NonGlobalOrder { .. })));
        let revlex_only = TermOrder { weights: vec![], tie: TieBreak::RevLexLast(0) };
        assert!(revlex_only.check_global(2).is_err());
        assert!(TermOrder::grevlex().check_global(2).is_ok());
        let fine = TermOrder::weighted(vec![rat_int(0), rat_int(2)], TieBreak::GRevLex);
        assert!(fine.check_global(2).is_ok());
    }

    #[test]
    fn display_and_initial_form() {
        let p = Polynomial::binomial(&[1, 1, 0], &[0, 0, 1]);
        assert_eq!(p.to_string(), "∂1∂2 - ∂3");
        let w = vec![rat_int(1), rat_int(1), rat_int(3)];
        assert_eq!(p.initial_form(&w), Polynomial::monomial(vec![0, 0, 1], rat_int(-1)));
        let w2 = vec![rat_int(1), rat_int(1), rat_int(2)];
        assert_eq!(p.initial_form(&w2), p);
    }

    #[test]
    fn reduction_by_a_binomial() {
        let o = TermOrder::grevlex();
        let g = Polynomial::binomial(&[1, 1, 0], &[0, 0, 1]);
        let basis = vec![(vec![1, 1, 0], rat_int(1), g)];
        let f = Polynomial::binomial(&[2, 2, 0], &[0, 0, 0]);
        assert_eq!(f.reduce(&basis, &o), Polynomial::binomial(&[0, 0, 2], &[0, 0, 0]));
    }
}
