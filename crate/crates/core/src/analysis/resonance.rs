//! Resonance and (semi-decided) strong resonance of parameters.

use crate::error::{Error, Result};
use crate::lattice::{default_saturation_bound, is_saturated, GkzMatrix, Saturation};
use crate::linalg::{in_span, nullspace};
use crate::num::{dot_rat, is_integral, to_rat, Int, Rat, RatVector};
use crate::polyhedral::{cone_points, face_lattice, Face};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resonance {
    pub resonant: bool,
    /// A facet whose primitive normal pairs integrally with `beta`.
    pub facet: Option<Face>,
}

fn check_beta(g: &GkzMatrix, beta: &RatVector) -> Result<()> {
    g.require_full()?;
    g.require_pointed()?;
    if beta.len() != g.d() {
        return Err(Error::DimensionMismatch { expected: g.d(), found: beta.len() });
    }
    Ok(())
}

/// `beta` is resonant when `beta + Z^d` meets the span of a facet; with `A`
/// full this is `n . beta` integral for the primitive facet normal `n`.
pub fn is_resonant(g: &GkzMatrix, beta: &RatVector) -> Result<Resonance> {
    check_beta(g, beta)?;
    let lattice = face_lattice(g)?;
    let facet_dim = g.d() as i64 - 2;
    let facet = lattice
        .faces
        .into_iter()
        .filter(|f| f.dim == facet_dim)
        .find(|f| is_integral(&dot_rat(&f.supporting_normal, beta)));
    Ok(Resonance { resonant: facet.is_some(), facet })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongResonance {
    /// `beta + (shift + 1) a_column` lies on `base + span(face)`, a piece of
    /// the degree set of `S_A / (t^{a_column})`.
    Yes { column: usize, shift: u64, face: Vec<usize>, base: Vec<Rat> },
    No { certificate: String },
    Unknown,
}

/// Semi-decision for strong resonance.
///
/// `No` is certain (non-resonant `beta`, or `beta` in `NA` with `NA`
/// saturated). `Yes` comes from the bounded search: elements `c` of
/// `NA \ (a_j + NA)` up to degree `bound` are grouped with faces `tau` not
/// containing `a_j` whenever the `tau`-orbit of `c` (two steps deep) stays in
/// that set; `beta + (k+1) a_j` for `k <= bound` is tested against these
/// affine pieces. Otherwise the answer is `Unknown`.
pub fn is_strongly_resonant(g: &GkzMatrix, beta: &RatVector, bound: u64) -> Result<StrongResonance> {
    check_beta(g, beta)?;
    if !is_resonant(g, beta)?.resonant {
        return Ok(StrongResonance::No { certificate: "beta is not resonant".into() });
    }
    let semigroup = g.semigroup()?;
    let int_beta: Option<Vec<Int>> = beta.is_integral().then(|| beta.iter().map(|b| b.to_integer()).collect());
    if let Some(b) = &int_beta {
        if semigroup.contains(b) && is_saturated(g, default_saturation_bound(g))? == Saturation::Yes {
            return Ok(StrongResonance::No { certificate: "beta lies in the saturated semigroup NA".into() });
        }
    }

    let n = g.n();
    let cols: Vec<Vec<Int>> = g.matrix().columns();
    let cols_rat = g.matrix().columns_rat();
    let degree = |x: &[Int]| g.degree(x).expect("pointed");
    let max_col_deg = cols.iter().map(|a| degree(a)).max().expect("at least one column");
    let top = Int::from(bound);
    let points: Vec<Vec<Int>> = cone_points(g, &vec![Rat::from_integer(0.into()); g.d()], &to_rat(&top))?
        .into_iter()
        .map(|p| p.iter().map(|x| x.to_integer()).collect())
        .filter(|p: &Vec<Int>| semigroup.contains(p))
        .collect();
    let faces = face_lattice(g)?.faces;

    for j in 0..n {
        let minus_aj = |b: &[Int]| -> Vec<Int> { b.iter().zip(&cols[j]).map(|(x, y)| x - y).collect() };
        let in_t = |b: &[Int]| semigroup.contains(b) && !semigroup.contains(&minus_aj(b));
        let t_j: Vec<&Vec<Int>> = points.iter().filter(|b| in_t(b)).collect();
        for face in faces.iter().filter(|f| !f.columns.contains(&j)) {
            let span: Vec<Vec<Rat>> = face.columns.iter().map(|&i| cols_rat[i].clone()).collect();
            let annihilator = if span.is_empty() { identity(g.d()) } else { nullspace(&span, g.d()) };
            let mut pieces: BTreeMap<Vec<Rat>, Vec<Rat>> = BTreeMap::new();
            for c in &t_j {
                // only points whose two-step orbit is still inside the window
                if degree(c) + Int::from(2) * &max_col_deg > top {
                    continue;
                }
                let orbit_ok = orbit(c, &face.columns, &cols, 2).iter().all(|p| in_t(p));
                if !orbit_ok {
                    continue;
                }
                let c_rat: Vec<Rat> = c.iter().map(to_rat).collect();
                let key: Vec<Rat> = annihilator.iter().map(|w| dot_rat(w, &c_rat)).collect();
                pieces.entry(key).or_insert(c_rat);
            }
            for k in 0..=bound {
                let shifted: Vec<Rat> = beta
                    .iter()
                    .zip(&cols_rat[j])
                    .map(|(b, a)| b + a * Rat::from_integer(Int::from(k + 1)))
                    .collect();
                for base in pieces.values() {
                    let diff: Vec<Rat> = shifted.iter().zip(base).map(|(x, y)| x - y).collect();
                    let hit = if span.is_empty() { diff.iter().all(|x| *x == Rat::from_integer(0.into())) } else { in_span(&span, &diff) };
                    if hit {
                        return Ok(StrongResonance::Yes { column: j, shift: k, face: face.columns.clone(), base: base.clone() });
                    }
                }
            }
        }
    }
    Ok(StrongResonance::Unknown)
}

fn identity(d: usize) -> Vec<Vec<Rat>> {
    (0..d)
        .map(|i| (0..d).map(|k| Rat::from_integer(Int::from((i == k) as i32))).collect())
        .collect()
}

/// `c + sum k_i a_i` over `i` in `face` with `sum k_i <= depth`.
fn orbit(c: &[Int], face: &[usize], cols: &[Vec<Int>], depth: usize) -> Vec<Vec<Int>> {
    let mut seen: BTreeSet<Vec<Int>> = BTreeSet::from([c.to_vec()]);
    let mut frontier = vec![c.to_vec()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &frontier {
            for &i in face {
                let q: Vec<Int> = p.iter().zip(&cols[i]).map(|(x, y)| x + y).collect();
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}
