//! Smith and Hermite normal forms and integer kernels.

use super::IntMatrix;
use crate::num::Int;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `u * m * v == s` with `u`, `v` unimodular and `s` diagonal, `s_i | s_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// The diagonal entries `s_1, ..., s_min(d,n)` (zeros included).
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn row_sub(m: &mut [Vec<Int>], target: usize, src: usize, q: &Int) {
    let (t, s) = if target < src {
        let (a, b) = m.split_at_mut(src);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = m.split_at_mut(target);
        (&mut b[0], &a[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

fn col_sub(m: &mut [Vec<Int>], target: usize, src: usize, q: &Int) {
    for row in m.iter_mut() {
        let y = row[src].clone();
        row[target] -= q * y;
    }
}

fn col_swap(m: &mut [Vec<Int>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form. Pivots are chosen with smallest absolute value, ties
/// broken by the first index in row-major order.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (d, n) = (m.rows(), m.cols());
    let mut s = m.data().to_vec();
    let mut u = IntMatrix::identity(d).data().to_vec();
    let mut v = IntMatrix::identity(n).data().to_vec();
    for t in 0..d.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..d {
                for j in t..n {
                    if s[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            s.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut s, t, pj);
            col_swap(&mut v, t, pj);
            let mut dirty = false;
            for i in t + 1..d {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = &s[i][t] / &s[t][t];
                row_sub(&mut s, i, t, &q);
                row_sub(&mut u, i, t, &q);
                dirty |= !s[i][t].is_zero();
            }
            for j in t + 1..n {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = &s[t][j] / &s[t][t];
                col_sub(&mut s, j, t, &q);
                col_sub(&mut v, j, t, &q);
                dirty |= !s[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let p = s[t][t].clone();
            let offender = (t + 1..d).find(|&i| (t + 1..n).any(|j| !s[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    // bring the offending row into row t; the next pass lowers the pivot
                    let minus_one = Int::from(-1);
                    row_sub(&mut s, t, i, &minus_one);
                    row_sub(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            for x in s[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    let snf = Snf {
        u: IntMatrix::raw(d, d, u),
        s: IntMatrix::raw(d, n, s),
        v: IntMatrix::raw(n, n, v),
    };
    debug_assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s);
    snf
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `rows`
/// (each of length `width`). Zero rows are dropped; pivots are positive and
/// entries above each pivot lie in `[0, pivot)`.
pub fn hnf_rows(rows: &[Vec<Int>], width: usize) -> Vec<Vec<Int>> {
    let mut h: Vec<Vec<Int>> = rows.to_vec();
    let mut r = 0;
    for c in 0..width {
        if r == h.len() {
            break;
        }
        loop {
            let pivot = (r..h.len())
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()));
            let Some(p) = pivot else {
                break;
            };
            h.swap(r, p);
            let mut done = true;
            for i in r + 1..h.len() {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = &h[i][c] / &h[r][c];
                row_sub(&mut h, i, r, &q);
                done &= h[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if r < h.len() && !h[r][c].is_zero() {
            if h[r][c].is_negative() {
                for x in h[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    row_sub(&mut h, i, r, &q);
                }
            }
            r += 1;
        }
    }
    h.truncate(r);
    h
}

/// True if `v` is an integer combination of the rows of the HNF basis `hnf`.
pub fn in_lattice(hnf: &[Vec<Int>], v: &[Int]) -> bool {
    let mut rest = v.to_vec();
    for row in hnf {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if !rest[c].is_multiple_of(&row[c]) {
            return false;
        }
        let q = &rest[c] / &row[c];
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    rest.iter().all(Zero::is_zero)
}

/// HNF-reduced Z-basis of `{u in Z^n : m u = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<Int>> {
    let (d, n) = (m.rows(), m.cols());
    // rows of [m^T | I_n]
    let aug: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            let mut row = m.column(j);
            row.extend((0..n).map(|k| if k == j { Int::from(1) } else { Int::zero() }));
            row
        })
        .collect();
    let h = hnf_rows(&aug, d + n);
    let kernel: Vec<Vec<Int>> = h
        .into_iter()
        .filter(|row| row[..d].iter().all(Zero::is_zero))
        .map(|row| row[d..].to_vec())
        .collect();
    let kernel = hnf_rows(&kernel, n);
    assert!(kernel.iter().all(|u| m.mul_vec(u).iter().all(Zero::is_zero)));
    assert_eq!(kernel.len(), n - m.rank(), "kernel rank mismatch");
    kernel
}
