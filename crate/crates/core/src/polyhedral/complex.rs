//! Abstract simplicial complexes on the column indices.

use crate::num::combinations;
use std::collections::BTreeSet;
use std::fmt;

/// A simplicial complex on `0..vertices`, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `generators`; only the maximal sets are kept.
    pub fn from_facets(vertices: usize, generators: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut sets: BTreeSet<Vec<usize>> = generators
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let all: Vec<Vec<usize>> = sets.iter().cloned().collect();
        sets.retain(|s| !all.iter().any(|t| t != s && is_subset(s, t)));
        SimplicialComplex { vertices, facets: sets.into_iter().collect() }
    }

    /// Stanley-Reisner complex: subsets of `0..vertices` containing none of
    /// the given non-faces. Exhaustive over subsets, fine for a few dozen
    /// vertices at most.
    pub fn from_nonfaces(vertices: usize, nonfaces: &[Vec<usize>]) -> Self {
        let mut facets = Vec::new();
        for k in (0..=vertices).rev() {
            for s in combinations(vertices, k) {
                if nonfaces.iter().any(|nf| is_subset(nf, &s)) {
                    continue;
                }
                if facets.iter().any(|f: &Vec<usize>| is_subset(&s, f)) {
                    continue;
                }
                facets.push(s);
            }
        }
        SimplicialComplex::from_facets(vertices, facets)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Every face, the empty one included, sorted by size then lex.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for f in &self.facets {
            for k in 0..=f.len() {
                for idx in combinations(f.len(), k) {
                    let s: Vec<usize> = idx.iter().map(|&i| f[i]).collect();
                    out.insert((s.len(), s));
                }
            }
        }
        out.into_iter().map(|(_, s)| s).collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_keeps_maximal() {
        let c = SimplicialComplex::from_facets(3, vec![vec![0, 2], vec![2], vec![1, 2]]);
        assert_eq!(c.facets(), &[vec![0, 2], vec![1, 2]]);
        assert!(c.contains(&[2]));
        assert!(!c.contains(&[0, 1]));
        assert_eq!(c.faces().len(), 6);
        assert_eq!(c.to_string(), "{1,3} {2,3}");
    }

    #[test]
    fn stanley_reisner_of_a_product() {
        let c = SimplicialComplex::from_nonfaces(3, &[vec![0, 1]]);
        assert_eq!(c.facets(), &[vec![0, 2], vec![1, 2]]);
        let full = SimplicialComplex::from_nonfaces(3, &[]);
        assert_eq!(full.facets(), &[vec![0, 1, 2]]);
    }
}
