//! Buchberger's algorithm over the rationals with the coprime and chain
//! criteria.

use super::poly::{divides, lcm, Exponent, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::num::Rat;
use std::collections::BTreeSet;

type Lead = (Exponent, Rat, Polynomial);

fn lead_data(p: Polynomial, order: &TermOrder) -> Lead {
    let (e, c) = p.leading(order).map(|(e, c)| (e.clone(), c.clone())).expect("nonzero polynomial");
    (e, c, p)
}

fn s_polynomial(f: &Lead, g: &Lead) -> Polynomial {
    let l = lcm(&f.0, &g.0);
    let part = |p: &Lead| -> Polynomial {
        let shift: Exponent = l.iter().zip(&p.0).map(|(a, b)| a - b).collect();
        Polynomial::from_terms(
            p.2.nvars(),
            p.2.terms().map(|(e, c)| (e.iter().zip(&shift).map(|(x, y)| x + y).collect(), c / &p.1)),
        )
    };
    let mut s = part(f);
    for (e, c) in part(g).terms() {
        s.add_term(e.clone(), -c.clone());
    }
    s
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// by increasing leading monomial.
///
/// When every input has at most two terms the output is checked to consist
/// of binomials or monomials as well.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>> {
    let n = match gens.first() {
        Some(p) => p.nvars(),
        None => return Ok(Vec::new()),
    };
    if gens.iter().any(|p| p.nvars() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: gens.iter().map(|p| p.nvars()).find(|&m| m != n).unwrap_or(n) });
    }
    order.check_global(n)?;
    let binomial_input = gens.iter().all(|p| p.len() <= 2);

    let mut basis: Vec<Lead> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let r = g.reduce(&basis, order);
        if !r.is_zero() {
            add_element(&mut basis, &mut pairs, r.make_monic(order), order);
        }
    }
    while let Some(&(i, j)) = pairs.iter().next() {
        pairs.remove(&(i, j));
        if coprime(&basis[i].0, &basis[j].0) || chain_skip(&basis, &pairs, i, j) {
            continue;
        }
        let r = s_polynomial(&basis[i], &basis[j]).reduce(&basis, order);
        if !r.is_zero() {
            add_element(&mut basis, &mut pairs, r.make_monic(order), order);
        }
    }

    let reduced = interreduce(basis, order);
    if binomial_input {
        assert!(reduced.iter().all(|p| p.len() <= 2), "binomial ideal produced a non-binomial basis element");
    }
    Ok(reduced)
}

fn add_element(basis: &mut Vec<Lead>, pairs: &mut BTreeSet<(usize, usize)>, p: Polynomial, order: &TermOrder) {
    let k = basis.len();
    basis.push(lead_data(p, order));
    pairs.extend((0..k).map(|i| (i, k)));
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Buchberger's second criterion: some third leading monomial divides the
/// lcm and both of its pairs have already been treated.
fn chain_skip(basis: &[Lead], pending: &BTreeSet<(usize, usize)>, i: usize, j: usize) -> bool {
    let l = lcm(&basis[i].0, &basis[j].0);
    (0..basis.len()).any(|k| {
        k != i && k != j && divides(&basis[k].0, &l) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
    })
}

fn interreduce(basis: Vec<Lead>, order: &TermOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another one
    let mut minimal: Vec<Lead> = Vec::new();
    for (idx, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(o, c)| {
            o != idx && divides(&c.0, &b.0) && (c.0 != b.0 || o < idx)
        });
        if !redundant {
            minimal.push(b.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Lead> = minimal.iter().enumerate().filter(|(o, _)| *o != i).map(|(_, l)| l.clone()).collect();
            let (e, c, p) = &minimal[i];
            // the leading term stays; only the tail is reduced
            let mut tail = p.clone();
            tail.add_term(e.clone(), -c.clone());
            let mut r = tail.reduce(&others, order);
            r.add_term(e.clone(), c.clone());
            r.make_monic(order)
        })
        .collect();
    out.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    out
}

/// Normal form of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let leads: Vec<Lead> = basis.iter().filter(|p| !p.is_zero()).map(|p| lead_data(p.clone(), order)).collect();
    f.reduce(&leads, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;
    use crate::toric::poly::TieBreak;

    fn kummer() -> Polynomial {
        Polynomial::binomial(&[1, 1, 0], &[0, 0, 1])
    }

    #[test]
    fn single_binomial_is_already_reduced() {
        let gb = buchberger(&[kummer()], &TermOrder::grevlex()).unwrap();
        assert_eq!(gb, vec![kummer()]);
    }

    #[test]
    fn kummer_under_weights() {
        for t in [1, 2, 3] {
            let order = TermOrder::weighted(vec![rat_int(1), rat_int(1), rat_int(t)], TieBreak::GRevLex);
            let gb = buchberger(&[kummer()], &order).unwrap();
            assert_eq!(gb.len(), 1);
            let lead = gb[0].leading(&order).unwrap().0.clone();
            if t == 3 {
                assert_eq!(lead, vec![0, 0, 1]);
                assert_eq!(gb[0], kummer().scale(&rat_int(-1)));
            } else {
                assert_eq!(lead, vec![1, 1, 0]);
            }
        }
    }

    #[test]
    fn twisted_cubic() {
        // x z - y^2, y w - z^2, x w - y z  (x,y,z,w)
        let gens = vec![
            Polynomial::binomial(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            Polynomial::binomial(&[0, 1, 0, 1], &[0, 0, 2, 0]),
        ];
        let order = TermOrder::grevlex();
        let gb = buchberger(&gens, &order).unwrap();
        for f in &gens {
            assert!(normal_form(f, &gb, &order).is_zero());
        }
        for a in &gb {
            for b in &gb {
                let la = lead_data(a.clone(), &order);
                let lb = lead_data(b.clone(), &order);
                assert!(normal_form(&s_polynomial(&la, &lb), &gb, &order).is_zero());
            }
        }
    }

    #[test]
    fn non_global_order_is_rejected() {
        let order = TermOrder::weighted(vec![rat_int(-1), rat_int(1), rat_int(1)], TieBreak::GRevLex);
        assert!(matches!(buchberger(&[kummer()], &order), Err(Error::NonGlobalOrder { .. })));
    }

    #[test]
    fn general_rational_coefficients() {
        // x^2 - 2 y, x y - 1 over Q in lex
        let n = 2;
        let f = Polynomial::from_terms(n, [(vec![2, 0], rat_int(1)), (vec![0, 1], rat_int(-2))]);
        let g = Polynomial::from_terms(n, [(vec![1, 1], rat_int(1)), (vec![0, 0], rat_int(-1))]);
        let order = TermOrder { weights: vec![], tie: TieBreak::Lex };
        let gb = buchberger(&[f.clone(), g.clone()], &order).unwrap();
        // lex basis contains a univariate polynomial in y: y^3 - 1/2
        let uni = Polynomial::from_terms(n, [(vec![0, 3], rat_int(1)), (vec![0, 0], crate::num::rat(-1, 2))]);
        assert!(gb.contains(&uni));
        assert!(normal_form(&f, &gb, &order).is_zero());
        assert!(normal_form(&g, &gb, &order).is_zero());
    }
}
