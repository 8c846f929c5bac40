//! Dense linear algebra over the rationals, plus a tiny exact simplex solver
//! for feasibility of `{M x = b, x >= 0}`.

use crate::num::Rat;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<Rat>>;

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped) and
/// the pivot column of each.
pub fn rref(m: &[Vec<Rat>]) -> (RatMatrix, Vec<usize>) {
    let mut a: RatMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &[Vec<Rat>]) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`, where `m` has `cols` columns.
pub fn nullspace(m: &[Vec<Rat>], cols: usize) -> RatMatrix {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b` (free variables set to zero), if one exists.
pub fn solve(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: RatMatrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        let pivot = a[c].clone();
        for row in a[c + 1..n].iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, p) in row[c..n].iter_mut().zip(&pivot[c..n]) {
                *x -= p * &f;
            }
        }
    }
    d
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &[Vec<Rat>]) -> Option<RatMatrix> {
    let n = m.len();
    let aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn transpose(m: &[Vec<Rat>]) -> RatMatrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|r| crate::num::dot_rat(r, v)).collect()
}

/// True if `v` lies in the rational span of `gens`.
pub fn in_span(gens: &[Vec<Rat>], v: &[Rat]) -> bool {
    if gens.is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let mut with = gens.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(gens)
}

/// A nonnegative solution of `m x = b`, or `None` if the system is infeasible.
///
/// Phase-I simplex on a dense tableau with Bland's rule, so it always
/// terminates.
pub fn nonneg_solution(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.len();
    let n = m.first().map_or(0, Vec::len);
    if rows == 0 {
        return Some(vec![Rat::zero(); n]);
    }
    let width = n + rows + 1;
    let mut t: RatMatrix = Vec::with_capacity(rows);
    for i in 0..rows {
        let flip = b[i].is_negative();
        let mut row = vec![Rat::zero(); width];
        for j in 0..n {
            row[j] = if flip { -m[i][j].clone() } else { m[i][j].clone() };
        }
        row[n + i] = Rat::one();
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + rows).collect();
    // objective: minimise the sum of artificials; reduced costs for x columns
    let mut cost = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    while let Some(enter) = (0..n + rows).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else {
            // unbounded cannot happen for a phase-I objective bounded below by 0
            break;
        };
        let inv = t[p][enter].recip();
        for x in t[p].iter_mut() {
            *x *= &inv;
        }
        let pivot = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, q) in row.iter_mut().zip(&pivot) {
                    *x -= q * &f;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, q) in cost.iter_mut().zip(&pivot) {
                *x -= q * &f;
            }
        }
        basis[p] = enter;
    }
    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    debug_assert!(mat_vec(m, &x) == b);
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns, vec![vec![rat_int(-1), rat_int(-1), rat_int(1)]]);
    }

    #[test]
    fn determinant() {
        assert_eq!(det(&m(&[&[1, 1], &[0, 4]])), rat_int(4));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), rat_int(-1));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), rat_int(0));
    }

    #[test]
    fn solve_particular() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = solve(&a, &[rat(-1, 2), rat_int(0)]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![rat(-1, 2), rat_int(0)]);
        assert!(solve(&m(&[&[1, 1], &[2, 2]]), &[rat_int(1), rat_int(3)]).is_none());
    }

    #[test]
    fn simplex_feasibility() {
        // x + y = 1, x - y = 3 has no nonnegative solution
        assert!(nonneg_solution(&m(&[&[1, 1], &[1, -1]]), &[rat_int(1), rat_int(3)]).is_none());
        let x = nonneg_solution(&m(&[&[1, 1, 0], &[0, 1, 1]]), &[rat_int(2), rat_int(3)]).unwrap();
        assert!(x.iter().all(|v| !v.is_negative()));
        // negative right-hand side is handled by row flipping
        let x = nonneg_solution(&m(&[&[-1, -1]]), &[rat_int(-2)]).unwrap();
        assert_eq!(&x[0] + &x[1], rat_int(2));
    }

    #[test]
    fn span_membership() {
        let g = m(&[&[1, 1, 0]]);
        assert!(in_span(&g, &[rat_int(2), rat_int(2), rat_int(0)]));
        assert!(!in_span(&g, &[rat_int(1), rat_int(0), rat_int(0)]));
    }
}
