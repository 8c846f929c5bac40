//! Truncated Γ-series solutions and their verification against the system.

use super::system::GkzSystem;
use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, GkzMatrix};
use crate::linalg::{inverse, mat_vec};
use crate::num::{dot_rat, is_integral, to_rat, Int, Rat, RatVector};
use crate::polyhedral::regular_triangulation;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

/// `sum_u c_u x^(gamma + u)` over kernel vectors `u` of weight at most
/// `truncation`, normalized so that `c_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSeries {
    pub exponent: Vec<Rat>,
    /// Cell of the triangulation the exponent belongs to.
    pub cell: Vec<usize>,
    pub terms: BTreeMap<Vec<Int>, Rat>,
    pub truncation: Rat,
    pub weight: RatVector,
}

impl GammaSeries {
    pub fn weight_of(&self, u: &[Int]) -> Rat {
        dot_rat(&self.weight, &u.iter().map(to_rat).collect::<Vec<_>>())
    }
}

/// `Gamma(g + 1) / Gamma(g + u + 1)`, zero at poles of the denominator.
fn gamma_ratio(g: &Rat, u: &Int) -> Rat {
    let steps: i64 = u.try_into().expect("small exponent shift");
    if steps >= 0 {
        let den: Rat = (1..=steps).map(|i| g + Rat::from_integer(i.into())).product();
        den.recip()
    } else {
        (0..-steps).map(|i| g - Rat::from_integer(i.into())).product()
    }
}

fn coset_key(u: &[Vec<Int>], diag: &[Int], b: &[Int]) -> Vec<Int> {
    u.iter().zip(diag).map(|(row, s)| row.iter().zip(b).map(|(x, y)| x * y).sum::<Int>().mod_floor(s)).collect()
}

/// All `s` in `N^k` with `l . s <= cap` (`l > 0`).
fn weight_box(l: &[Rat], cap: &Rat) -> Vec<Vec<Int>> {
    fn go(l: &[Rat], cap: &Rat, prefix: &mut Vec<Int>, out: &mut Vec<Vec<Int>>) {
        let i = prefix.len();
        if i == l.len() {
            out.push(prefix.clone());
            return;
        }
        let mut x = Int::zero();
        loop {
            let used = &l[i] * to_rat(&x);
            if used > *cap {
                break;
            }
            prefix.push(x.clone());
            go(l, &(cap - used), prefix, out);
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(l, cap, &mut Vec::new(), &mut out);
    out
}

/// One series per coset representative of each cell of the regular
/// triangulation induced by `L`, `vol(A)` series in total.
///
/// For a cell `sigma` the representatives `k` in `N^(complement)` are taken of
/// least reduced weight `l_j = L_j - L_sigma A_sigma^-1 a_j` in each class of
/// `Z^d / Z A_sigma` (classes read off the Smith form of `A_sigma`); these are
/// the bases of the top-dimensional standard pairs. Then `gamma` is `k` off
/// the cell and `A_sigma^-1 (beta - A k)` on it.
pub fn gamma_series(g: &GkzMatrix, beta: &RatVector, weight: &RatVector, truncation: &Rat) -> Result<Vec<GammaSeries>> {
    g.require_full()?;
    g.require_pointed()?;
    g.require_homogeneous()?;
    let (d, n) = (g.d(), g.n());
    if beta.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: beta.len() });
    }
    let tri = regular_triangulation(g, weight)?;
    let cols = g.matrix().columns();
    let cols_rat = g.matrix().columns_rat();
    let mut out = Vec::new();
    for (cell, vol) in tri.cells.iter().zip(&tri.volumes) {
        let off: Vec<usize> = (0..n).filter(|j| !cell.contains(j)).collect();
        let a_sigma = g.matrix().select_columns(cell);
        let inv = inverse(&a_sigma.to_rat_rows()).expect("cells are simplices");
        let reduced: Vec<Rat> = off
            .iter()
            .map(|&j| {
                let coords = mat_vec(&inv, &cols_rat[j]);
                &weight[j] - cell.iter().zip(&coords).map(|(&i, c)| &weight[i] * c).sum::<Rat>()
            })
            .collect();
        assert!(reduced.iter().all(Signed::is_positive), "columns off a regular cell lie strictly above it");

        let snf = smith_normal_form(&a_sigma);
        let diag = snf.diagonal();
        let image = |k: &[Int]| -> Vec<Int> {
            (0..d).map(|i| off.iter().zip(k).map(|(&j, x)| &cols[j][i] * x).sum()).collect()
        };
        let count: usize = vol.try_into().expect("small volume");
        let mut reps: BTreeMap<Vec<Int>, Vec<Int>> = BTreeMap::new();
        let mut heap = BinaryHeap::from([Reverse((Rat::zero(), vec![Int::zero(); off.len()]))]);
        let mut seen = BTreeSet::new();
        while reps.len() < count {
            let Reverse((w, k)) = heap.pop().expect("every class is reached");
            if !seen.insert(k.clone()) {
                continue;
            }
            reps.entry(coset_key(snf.u.data(), &diag, &image(&k))).or_insert_with(|| k.clone());
            for (i, l) in reduced.iter().enumerate() {
                let mut next = k.clone();
                next[i] += 1;
                heap.push(Reverse((&w + l, next)));
            }
        }
        let mut reps: Vec<Vec<Int>> = reps.into_values().collect();
        reps.sort_by(|a, b| {
            let wa = dot_rat(&reduced, &a.iter().map(to_rat).collect::<Vec<_>>());
            let wb = dot_rat(&reduced, &b.iter().map(to_rat).collect::<Vec<_>>());
            wa.cmp(&wb).then_with(|| a.cmp(b))
        });

        for k in reps {
            let rest: Vec<Rat> = beta.iter().zip(image(&k)).map(|(b, x)| b - to_rat(&x)).collect();
            let on_cell = mat_vec(&inv, &rest);
            let mut gamma = vec![Rat::zero(); n];
            for (&i, x) in cell.iter().zip(&on_cell) {
                gamma[i] = x.clone();
            }
            for (&j, x) in off.iter().zip(&k) {
                gamma[j] = to_rat(x);
            }
            if let Some(bad) = cell.iter().map(|&i| &gamma[i]).find(|x| is_integral(x) && x.is_negative()) {
                return Err(Error::ResonantParameter { difference: vec![bad.clone()] });
            }
            let cap = truncation + dot_rat(&reduced, &k.iter().map(to_rat).collect::<Vec<_>>());
            let mut terms = BTreeMap::new();
            for s in weight_box(&reduced, &cap) {
                let u_off: Vec<Int> = s.iter().zip(&k).map(|(a, b)| a - b).collect();
                let pushed: Vec<Rat> = (0..d)
                    .map(|i| off.iter().zip(&u_off).map(|(&j, x)| to_rat(&cols[j][i]) * to_rat(x)).sum())
                    .collect();
                let u_on = mat_vec(&inv, &pushed);
                if !u_on.iter().all(is_integral) {
                    continue;
                }
                let mut u = vec![Int::zero(); n];
                for (&i, x) in cell.iter().zip(&u_on) {
                    u[i] = -x.to_integer();
                }
                for (&j, x) in off.iter().zip(&u_off) {
                    u[j] = x.clone();
                }
                let coeff: Rat = gamma.iter().zip(&u).map(|(gj, uj)| gamma_ratio(gj, uj)).product();
                terms.insert(u, coeff);
            }
            out.push(GammaSeries {
                exponent: gamma,
                cell: cell.clone(),
                terms,
                truncation: truncation.clone(),
                weight: weight.clone(),
            });
        }
    }
    assert_eq!(Int::from(out.len()), tri.total_volume(), "one series per unit of volume");
    for (i, s) in out.iter().enumerate() {
        for t in &out[i + 1..] {
            let diff: Vec<Rat> = s.exponent.iter().zip(&t.exponent).map(|(a, b)| a - b).collect();
            if diff.iter().all(is_integral) {
                return Err(Error::ResonantParameter { difference: diff });
            }
        }
    }
    Ok(out)
}

/// A nonzero coefficient of `P . series` at `x^(gamma + shift)`; `operator`
/// indexes the Euler operators first, then the boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub operator: usize,
    pub shift: Vec<Int>,
    pub coefficient: Rat,
    /// Largest `L`-weight among the series terms feeding this coefficient.
    pub weight: Rat,
}

/// `prod_j (x_j)(x_j - 1)...(x_j - p_j + 1)`.
fn falling(x: &[Rat], p: &[u32]) -> Rat {
    x.iter()
        .zip(p)
        .map(|(xj, &pj)| (0..pj).map(|i| xj - Rat::from_integer(i.into())).product::<Rat>())
        .product()
}

/// Applies every operator of the system to the truncated series.
pub fn apply_system(sys: &GkzSystem, s: &GammaSeries) -> Vec<Residual> {
    let n = s.exponent.len();
    let mut out = Vec::new();
    let at = |u: &[Int]| -> Vec<Rat> { s.exponent.iter().zip(u).map(|(g, x)| g + to_rat(x)).collect() };
    for (i, (row, b)) in sys.euler.iter().zip(sys.beta.iter()).enumerate() {
        for (u, c) in &s.terms {
            let x = at(u);
            let val = row.iter().zip(&x).map(|(a, xj)| to_rat(a) * xj).sum::<Rat>() - b;
            if !(c * &val).is_zero() {
                out.push(Residual { operator: i, shift: u.clone(), coefficient: c * val, weight: s.weight_of(u) });
            }
        }
    }
    for (bi, bx) in sys.boxes.iter().enumerate() {
        let mut acc: BTreeMap<Vec<Int>, Rat> = BTreeMap::new();
        for (u, c) in &s.terms {
            let x = at(u);
            for (exp, sign) in [(&bx.plus, Rat::one()), (&bx.minus, -Rat::one())] {
                let e: Vec<Int> = u.iter().zip(exp.iter()).map(|(a, &p)| a - Int::from(p)).collect();
                *acc.entry(e).or_insert_with(Rat::zero) += sign * c * falling(&x, exp);
            }
        }
        for (e, c) in acc {
            if c.is_zero() {
                continue;
            }
            let w_plus = s.weight_of(&e.iter().zip(&bx.plus).map(|(a, &p)| a + Int::from(p)).collect::<Vec<_>>());
            let w_minus = s.weight_of(&e.iter().zip(&bx.minus).map(|(a, &p)| a + Int::from(p)).collect::<Vec<_>>());
            out.push(Residual { operator: sys.euler.len() + bi, shift: e, coefficient: c, weight: w_plus.max(w_minus) });
        }
    }
    debug_assert!(out.iter().all(|r| r.shift.len() == n));
    out
}
