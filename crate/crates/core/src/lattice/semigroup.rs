//! Membership in the affine semigroup `NA`.

use crate::num::{dot_int, Int};
use num_traits::{Signed, Zero};
use std::cell::RefCell;
use std::collections::HashMap;

/// Membership oracle for `NA`, memoised. Needs an integral functional `h`
/// with `h . a_j >= 1` on every column so that the search is finite.
#[derive(Debug)]
pub struct Semigroup {
    columns: Vec<Vec<Int>>,
    h: Vec<Int>,
    memo: RefCell<HashMap<Vec<Int>, bool>>,
}

impl Semigroup {
    pub fn new(columns: Vec<Vec<Int>>, h: Vec<Int>) -> Self {
        assert!(columns.iter().all(|a| dot_int(&h, a).is_positive()), "functional not positive");
        Semigroup { columns, h, memo: RefCell::new(HashMap::new()) }
    }

    pub fn degree(&self, b: &[Int]) -> Int {
        dot_int(&self.h, b)
    }

    pub fn contains(&self, b: &[Int]) -> bool {
        if b.iter().all(Zero::is_zero) {
            return true;
        }
        if !self.degree(b).is_positive() {
            return false;
        }
        if let Some(&hit) = self.memo.borrow().get(b) {
            return hit;
        }
        let hit = self.columns.iter().any(|a| {
            let rest: Vec<Int> = b.iter().zip(a).map(|(x, y)| x - y).collect();
            self.contains(&rest)
        });
        self.memo.borrow_mut().insert(b.to_vec(), hit);
        hit
    }

    /// Nonnegative integer multiplicities `k` with `A k = b`, if any.
    pub fn representation(&self, b: &[Int]) -> Option<Vec<u64>> {
        let mut k = vec![0u64; self.columns.len()];
        let mut cur = b.to_vec();
        while !cur.iter().all(Zero::is_zero) {
            let (j, rest) = self.columns.iter().enumerate().find_map(|(j, a)| {
                let rest: Vec<Int> = cur.iter().zip(a).map(|(x, y)| x - y).collect();
                self.contains(&rest).then_some((j, rest))
            })?;
            k[j] += 1;
            cur = rest;
        }
        Some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Int> {
        x.iter().map(|&t| Int::from(t)).collect()
    }

    #[test]
    fn pinched_curve_membership() {
        let cols = vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 3]), v(&[1, 4])];
        let s = Semigroup::new(cols, v(&[1, 0]));
        assert!(s.contains(&v(&[0, 0])));
        assert!(!s.contains(&v(&[1, 2])));
        assert!(s.contains(&v(&[2, 3])));
        assert!(s.contains(&v(&[2, 2])));
        assert!(!s.contains(&v(&[1, 5])));
        assert_eq!(s.representation(&v(&[2, 3])).map(|k| k.iter().sum::<u64>()), Some(2));
    }
}
