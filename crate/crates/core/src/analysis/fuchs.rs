//! Differential operators in one variable and their Fuchs polygons.

use super::univariate::UnivariateOp;
use crate::error::{Error, Result};
use crate::num::Rat;
use crate::plot::Canvas;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// `sum c z^r d_z^s`, keyed by `(r, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffOperator {
    pub terms: BTreeMap<(u32, u32), Rat>,
}

impl DiffOperator {
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rat)>) -> Self {
        let mut op = DiffOperator::default();
        for (r, s, c) in terms {
            *op.terms.entry((r, s)).or_insert_with(Rat::zero) += c;
        }
        op.terms.retain(|_, c| !c.is_zero());
        op
    }
}

/// `sum c z^r theta^k`, keyed by `(r, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ThetaOperator {
    pub terms: BTreeMap<(u32, u32), Rat>,
}

/// Stirling numbers of the second kind `S(k, i)` for `i = 0..=k`.
fn stirling2(k: u32) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..k {
        let mut next = vec![0u64; row.len() + 1];
        for (i, s) in row.iter().enumerate() {
            next[i] += i as u64 * s;
            next[i + 1] += s;
        }
        row = next;
    }
    row
}

impl ThetaOperator {
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rat)>) -> Self {
        let d = DiffOperator::from_terms(terms);
        ThetaOperator { terms: d.terms }
    }

    /// `lhs(theta) - z rhs(theta)`.
    pub fn from_univariate(op: &UnivariateOp) -> Self {
        let lhs = op.lhs.0.iter().enumerate().map(|(k, c)| (0, k as u32, c.clone()));
        let rhs = op.rhs.0.iter().enumerate().map(|(k, c)| (1, k as u32, -c.clone()));
        ThetaOperator::from_terms(lhs.chain(rhs))
    }

    /// Chart at infinity: `u = -1/z`, so `theta_z = -theta_u`, cleared of
    /// negative powers of `u`.
    pub fn at_infinity(&self) -> ThetaOperator {
        let top = self.terms.keys().map(|(r, _)| *r).max().unwrap_or(0);
        ThetaOperator::from_terms(self.terms.iter().map(|(&(r, k), c)| {
            let sign = if (r + k) % 2 == 0 { Rat::one() } else { -Rat::one() };
            (top - r, k, c * sign)
        }))
    }

    /// `z^r theta^k = sum_i S(k, i) z^(r+i) d_z^i`.
    pub fn to_diff(&self) -> DiffOperator {
        DiffOperator::from_terms(self.terms.iter().flat_map(|(&(r, k), c)| {
            stirling2(k)
                .into_iter()
                .enumerate()
                .filter(|(_, s)| *s > 0)
                .map(move |(i, s)| (r + i as u32, i as u32, c * Rat::from_integer(s.into())))
                .collect::<Vec<_>>()
        }))
    }
}

/// Points `(F, V) = (s, s - r)` of the lowest `z`-power for every order `s`,
/// and the bounded part of the boundary of their lower-left hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuchsPolygon {
    pub points: Vec<(i64, i64)>,
    /// From the highest point to the rightmost one.
    pub hull_vertices: Vec<(i64, i64)>,
    pub slopes: Vec<Rat>,
    pub regular: bool,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

pub fn fuchs_polygon(op: &DiffOperator) -> Result<FuchsPolygon> {
    let mut lowest: BTreeMap<u32, u32> = BTreeMap::new();
    for &(r, s) in op.terms.keys() {
        let e = lowest.entry(s).or_insert(r);
        *e = (*e).min(r);
    }
    if lowest.is_empty() {
        return Err(Error::EmptyOperator);
    }
    let points: Vec<(i64, i64)> = lowest.iter().map(|(&s, &r)| (s as i64, s as i64 - r as i64)).collect();
    let top_v = points.iter().map(|p| p.1).max().unwrap();
    let start = *points.iter().filter(|p| p.1 == top_v).max().unwrap();
    let end = *points.iter().max().unwrap();
    // upper hull over F in [start.F, end.F]; points are already sorted by F
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in points.iter().filter(|p| p.0 >= start.0) {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) >= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let slopes = hull.windows(2).map(|w| Rat::new((w[1].1 - w[0].1).into(), (w[1].0 - w[0].0).into())).collect();
    debug_assert_eq!(hull.first(), Some(&start));
    debug_assert_eq!(hull.last(), Some(&end));
    Ok(FuchsPolygon { regular: hull.len() == 1, points, hull_vertices: hull, slopes })
}

/// The points in grey, the hull in red; a regular polygon is a single red dot.
pub fn fuchs_svg(f: &FuchsPolygon) -> String {
    let p = |(x, y): (i64, i64)| (x as f64, y as f64);
    let mut c = Canvas::default();
    for &q in &f.points {
        c.dot(p(q), "#999");
        c.label(p(q), format!("({}, {})", q.0, q.1));
    }
    for w in f.hull_vertices.windows(2) {
        c.line(p(w[0]), p(w[1]), "#c0392b");
    }
    for &v in &f.hull_vertices {
        c.dot(p(v), "#c0392b");
    }
    let kind = if f.regular { "regular" } else { "irregular" };
    c.render(&format!("Fuchs polygon ({kind})"))
}
