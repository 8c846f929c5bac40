//! Binomials, toric ideals by lattice-ideal saturation, and weight-initial
//! ideals.

use super::buchberger::buchberger;
use super::monomial::{standard_pairs, MonomialIdeal};
use super::poly::{monomial_text, Exponent, Polynomial, TermOrder, TieBreak};
use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, GkzMatrix};
use crate::num::{rat_int, Int, Rat};
use crate::polyhedral::SimplicialComplex;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `∂^plus - ∂^minus`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub plus: Exponent,
    pub minus: Exponent,
}

impl Binomial {
    /// Both sides zero: the binomial `1 - 1 = 0` of the zero kernel vector.
    pub fn is_degenerate(&self) -> bool {
        self.plus == self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    /// `plus - minus`.
    pub fn exponent_difference(&self) -> Vec<Int> {
        self.plus.iter().zip(&self.minus).map(|(&p, &m)| Int::from(p) - Int::from(m)).collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::binomial(&self.plus, &self.minus)
    }

    /// Reads a monic two-term polynomial `x^a - x^b` (leading term first).
    fn from_polynomial(p: &Polynomial, order: &TermOrder) -> Binomial {
        let terms = p.sorted_terms(order);
        assert!(
            terms.len() == 2 && terms[0].1.is_one() && terms[1].1 == -Rat::one(),
            "expected a pure difference of monomials, got {p}"
        );
        Binomial { plus: terms[0].0.clone(), minus: terms[1].0.clone() }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |e: &[u32]| if e.iter().all(|&x| x == 0) { "1".to_string() } else { monomial_text(e) };
        write!(f, "{} - {}", side(&self.plus), side(&self.minus))
    }
}

/// `∂^{u+} - ∂^{u-}`.
///
/// # Panics
/// If an entry of `u` does not fit in `u32`.
pub fn box_from_kernel(u: &[Int]) -> Binomial {
    let conv = |x: Int| u32::try_from(x).expect("exponent fits in u32");
    Binomial {
        plus: u.iter().map(|x| conv(if x.is_positive() { x.clone() } else { Int::zero() })).collect(),
        minus: u.iter().map(|x| conv(if x.is_negative() { -x } else { Int::zero() })).collect(),
    }
}

/// Column degrees `h . a_j` for the cached positive functional.
fn column_degrees(g: &GkzMatrix) -> Option<Vec<Rat>> {
    let h = g.positive_functional()?;
    Some((0..g.n()).map(|j| Rat::from_integer(crate::num::dot_int(h, &g.column(j)))).collect())
}

/// Generators of the toric ideal `I_A`: the reduced grevlex Gröbner basis,
/// sorted by leading monomial, each written leading term first.
///
/// Starts from the lattice basis ideal of a kernel basis and saturates it
/// by one variable at a time, each step a Buchberger run in a degree
/// reverse-lexicographic order with the saturating variable last. Without a
/// positive grading (non-pointed `A`) the saturation by the product of all
/// variables is done by elimination instead.
pub fn toric_ideal_generators(g: &GkzMatrix) -> Result<Vec<Binomial>> {
    g.require_full()?;
    let n = g.n();
    let kernel = kernel_basis(g.matrix());
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let mut gens: Vec<Polynomial> = kernel.iter().map(|u| box_from_kernel(u).to_polynomial()).collect();
    match column_degrees(g) {
        Some(deg) => {
            for k in 0..n {
                let order = TermOrder::weighted(deg.clone(), TieBreak::RevLexLast(k));
                gens = buchberger(&gens, &order)?.iter().map(|p| p.strip_variable(k)).collect();
            }
        }
        None => gens = saturate_by_elimination(&gens, n)?,
    }
    let order = TermOrder::grevlex();
    let basis = buchberger(&gens, &order)?;
    let out: Vec<Binomial> = basis.iter().map(|p| Binomial::from_polynomial(p, &order)).collect();
    for b in &out {
        let u = b.exponent_difference();
        assert!(g.matrix().mul_vec(&u).iter().all(Zero::is_zero), "{b} is not in the toric ideal");
        assert!(b.plus.iter().zip(&b.minus).all(|(p, m)| *p == 0 || *m == 0), "{b} has overlapping supports");
    }
    Ok(out)
}

/// `I : (x_1 ... x_n)^inf` through `I + <t x_1 ... x_n - 1>` and eliminating `t`.
fn saturate_by_elimination(gens: &[Polynomial], n: usize) -> Result<Vec<Polynomial>> {
    let lift = |p: &Polynomial| {
        Polynomial::from_terms(n + 1, p.terms().map(|(e, c)| ([e.clone(), vec![0]].concat(), c.clone())))
    };
    let mut ext: Vec<Polynomial> = gens.iter().map(lift).collect();
    ext.push(Polynomial::binomial(&vec![1; n + 1], &vec![0; n + 1]));
    let mut elim = vec![Rat::zero(); n + 1];
    elim[n] = Rat::one();
    let basis = buchberger(&ext, &TermOrder::weighted(elim, TieBreak::GRevLex))?;
    Ok(basis
        .iter()
        .filter(|p| p.terms().all(|(e, _)| e[n] == 0))
        .map(|p| Polynomial::from_terms(n, p.terms().map(|(e, c)| (e[..n].to_vec(), c.clone()))))
        .collect())
}

/// The `L`-initial ideal of `I_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialIdeal {
    Monomial(MonomialIdeal),
    /// `L` is not generic: the initial forms of a Gröbner basis, some of
    /// which have two terms.
    NonGeneric(Vec<Polynomial>),
}

impl InitialIdeal {
    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            InitialIdeal::Monomial(m) => Some(m),
            InitialIdeal::NonGeneric(_) => None,
        }
    }
}

/// Initial forms under `L` of the Gröbner basis of `I_A` for `L` refined by
/// graded reverse lexicographic order.
///
/// For pointed `A` the ideal is homogeneous for the column degrees, so `L` is
/// first shifted by a multiple of them to become positive; this leaves all
/// initial forms unchanged. Non-pointed `A` needs `L >= 0`.
pub fn initial_ideal(g: &GkzMatrix, weight: &[Rat]) -> Result<InitialIdeal> {
    let n = g.n();
    if weight.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: weight.len() });
    }
    let gens = toric_ideal_generators(g)?;
    if gens.is_empty() {
        return Ok(InitialIdeal::Monomial(MonomialIdeal::zero(n)));
    }
    let shifted: Vec<Rat> = match column_degrees(g) {
        Some(deg) => {
            let c = weight
                .iter()
                .zip(&deg)
                .map(|(l, d)| -l / d)
                .fold(Rat::zero(), |a, b| if b > a { b } else { a })
                + Rat::one();
            weight.iter().zip(&deg).map(|(l, d)| l + &c * d).collect()
        }
        None if weight.iter().all(|l| !l.is_negative()) => weight.to_vec(),
        None => {
            return Err(Error::PreconditionViolation(
                "weights on a non-pointed matrix must be nonnegative".into(),
            ))
        }
    };
    let order = TermOrder::weighted(shifted.clone(), TieBreak::GRevLex);
    let polys: Vec<Polynomial> = gens.iter().map(Binomial::to_polynomial).collect();
    let basis = buchberger(&polys, &order)?;
    let forms: Vec<Polynomial> = basis.iter().map(|p| p.initial_form(&shifted)).collect();
    if forms.iter().all(|f| f.len() == 1) {
        let exps = forms.iter().map(|f| f.terms().next().unwrap().0.clone());
        Ok(InitialIdeal::Monomial(MonomialIdeal::new(n, exps)))
    } else {
        Ok(InitialIdeal::NonGeneric(forms))
    }
}

/// Stanley–Reisner complex of the radical of the (monomial) initial ideal.
///
/// Fails with `NonGenericWeight` when some initial form has two terms; the
/// reported face is the joint support of the first such form.
pub fn initial_complex(g: &GkzMatrix, weight: &[Rat]) -> Result<SimplicialComplex> {
    match initial_ideal(g, weight)? {
        InitialIdeal::Monomial(m) => {
            let complex = m.complex();
            let pairs = standard_pairs(&m);
            let mut tops: Vec<Vec<usize>> = pairs
                .iter()
                .map(|p| p.face.clone())
                .filter(|f| !pairs.iter().any(|q| q.face.len() > f.len() && f.iter().all(|j| q.face.contains(j))))
                .collect();
            tops.sort();
            tops.dedup();
            let mut facets = complex.facets().to_vec();
            facets.sort();
            assert_eq!(facets, tops, "standard pair faces disagree with the Stanley-Reisner complex");
            Ok(complex)
        }
        InitialIdeal::NonGeneric(forms) => {
            let form = forms.iter().find(|f| f.len() > 1).expect("a non-monomial initial form");
            let face = (0..g.n()).filter(|&j| form.terms().any(|(e, _)| e[j] > 0)).collect();
            Err(Error::NonGenericWeight { face })
        }
    }
}

/// Integer weights as rationals.
pub fn int_weight(w: &[i64]) -> Vec<Rat> {
    w.iter().map(|&x| rat_int(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn kummer() -> GkzMatrix {
        GkzMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn box_operators() {
        let b = box_from_kernel(&[Int::from(1), Int::from(1), Int::from(-1)]);
        assert_eq!(b.to_string(), "∂1∂2 - ∂3");
        let z = box_from_kernel(&[Int::zero(), Int::zero()]);
        assert!(z.is_degenerate());
        let f = box_from_kernel(&[1, 1, -1, -1].map(Int::from));
        assert_eq!(f.to_string(), "∂1∂2 - ∂3∂4");
    }

    #[test]
    fn kummer_toric_ideal() {
        let gens = toric_ideal_generators(&kummer()).unwrap();
        assert_eq!(gens, vec![Binomial { plus: vec![1, 1, 0], minus: vec![0, 0, 1] }]);
    }

    #[test]
    fn identity_has_zero_toric_ideal() {
        let g = GkzMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert!(toric_ideal_generators(&g).unwrap().is_empty());
        let ini = initial_ideal(&g, &int_weight(&[1, 1])).unwrap();
        assert_eq!(ini, InitialIdeal::Monomial(MonomialIdeal::zero(2)));
    }

    #[test]
    fn not_full_is_rejected() {
        let g = GkzMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(matches!(toric_ideal_generators(&g), Err(Error::NotFull { .. })));
    }

    #[test]
    fn rational_normal_curve_needs_saturation() {
        // twisted cubic: the lattice basis ideal misses x1 x4 - x2 x3
        let g = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let gens = toric_ideal_generators(&g).unwrap();
        let text: Vec<String> = gens.iter().map(|b| b.to_string()).collect();
        assert_eq!(gens.len(), 3, "{text:?}");
        assert!(text.contains(&"∂2∂3 - ∂1∂4".to_string()) || text.contains(&"∂1∂4 - ∂2∂3".to_string()), "{text:?}");
    }

    #[test]
    fn non_pointed_uses_elimination() {
        // columns 1, -1, 2 in dimension one: I_A = <x1 x2 - 1, x1^2 - x3, ...>
        let g = GkzMatrix::from_i64(&[&[1, -1, 2]]);
        assert!(!g.is_pointed());
        let gens = toric_ideal_generators(&g).unwrap();
        assert!(!gens.is_empty());
        let polys: Vec<Polynomial> = gens.iter().map(Binomial::to_polynomial).collect();
        let order = TermOrder::grevlex();
        let unit = Polynomial::binomial(&[1, 1, 0], &[0, 0, 0]);
        assert!(crate::toric::normal_form(&unit, &polys, &order).is_zero());
    }

    #[test]
    fn kummer_initial_ideals() {
        let g = kummer();
        for t in [rat_int(1), rat(3, 2)] {
            let ini = initial_ideal(&g, &[rat_int(1), rat_int(1), t]).unwrap();
            assert_eq!(ini, InitialIdeal::Monomial(MonomialIdeal::new(3, vec![vec![1, 1, 0]])));
        }
        for t in [3, 5] {
            let ini = initial_ideal(&g, &int_weight(&[1, 1, t])).unwrap();
            assert_eq!(ini, InitialIdeal::Monomial(MonomialIdeal::new(3, vec![vec![0, 0, 1]])));
        }
        let ini = initial_ideal(&g, &int_weight(&[1, 1, 2])).unwrap();
        match ini {
            InitialIdeal::NonGeneric(forms) => {
                assert_eq!(forms.len(), 1);
                assert_eq!(forms[0].len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rescaling_weight_keeps_initial_ideal() {
        let g = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        let l = int_weight(&[0, 1, 2, 0]);
        let l5: Vec<Rat> = l.iter().map(|x| x * rat_int(5)).collect();
        assert_eq!(initial_ideal(&g, &l).unwrap(), initial_ideal(&g, &l5).unwrap());
    }

    #[test]
    fn kummer_complexes() {
        let g = kummer();
        assert_eq!(initial_complex(&g, &int_weight(&[1, 1, 3])).unwrap().to_string(), "{1,2}");
        assert_eq!(initial_complex(&g, &int_weight(&[1, 1, 1])).unwrap().to_string(), "{1,3} {2,3}");
        assert_eq!(
            initial_complex(&g, &int_weight(&[1, 1, 2])),
            Err(Error::NonGenericWeight { face: vec![0, 1, 2] })
        );
    }

    #[test]
    fn join_complexes_of_a_single_binomial() {
        // kernel (1,1,1,-1,-2)
        let g = GkzMatrix::from_i64(&[&[1, 0, 0, 1, 0], &[0, 1, 0, 1, 0], &[0, 0, 1, 1, 0], &[1, 1, 1, 1, 1]]);
        let gens = toric_ideal_generators(&g).unwrap();
        assert_eq!(gens.len(), 1);
        let c = initial_complex(&g, &int_weight(&[2, 1, 1, 1, 1])).unwrap();
        assert_eq!(c.to_string(), "{1,2,4,5} {1,3,4,5} {2,3,4,5}");
        let c = initial_complex(&g, &int_weight(&[1, 1, 1, 2, 1])).unwrap();
        assert_eq!(c.to_string(), "{1,2,3,4} {1,2,3,5}");
    }
}
