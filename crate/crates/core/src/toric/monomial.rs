//! Monomial ideals, standard pairs and irreducible decompositions.

use super::poly::{divides, monomial_text, Exponent};
use crate::polyhedral::SimplicialComplex;
use itertools::Itertools;
use std::collections::BTreeSet;
use std::fmt;

/// Monomial ideal given by minimal generators; no generators means the zero
/// ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Exponent>) -> Self {
        let all: BTreeSet<Exponent> = gens.into_iter().collect();
        assert!(all.iter().all(|g| g.len() == n), "generator length differs from the number of variables");
        let generators = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { n, generators }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, generators: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    /// Largest exponent of each variable among the generators.
    pub fn degree_box(&self) -> Vec<u32> {
        (0..self.n).map(|j| self.generators.iter().map(|g| g[j]).max().unwrap_or(0)).collect()
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.generators.iter().map(|g| g.iter().map(|&x| x.min(1)).collect::<Exponent>()))
    }

    /// Stanley–Reisner complex of the radical.
    pub fn complex(&self) -> SimplicialComplex {
        let nonfaces: Vec<Vec<usize>> = self
            .radical()
            .generators
            .iter()
            .map(|g| g.iter().positions(|&x| x > 0).collect())
            .collect();
        SimplicialComplex::from_nonfaces(self.n, &nonfaces)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "⟨0⟩");
        }
        let parts: Vec<String> =
            self.generators.iter().map(|g| if g.iter().all(|&x| x == 0) { "1".to_string() } else { monomial_text(g) }).collect();
        write!(f, "⟨{}⟩", parts.join(", "))
    }
}

/// `(∂^base, face)` with 0-based sorted face indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardPair {
    pub base: Exponent,
    pub face: Vec<usize>,
}

impl fmt::Display for StandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = if self.base.iter().all(|&x| x == 0) { "1".to_string() } else { monomial_text(&self.base) };
        let face: Vec<String> = self.face.iter().map(|j| (j + 1).to_string()).collect();
        write!(f, "({b}, {{{}}})", face.join(","))
    }
}

/// All standard pairs, sorted by face then base.
///
/// For a candidate face σ, `b` lives in the box below the generator degrees
/// off σ; the pair is standard when no generator divides `∂^b` modulo the
/// σ-variables, but every enlargement of σ by one index meets the ideal.
pub fn standard_pairs(m: &MonomialIdeal) -> Vec<StandardPair> {
    let n = m.n;
    let dbox = m.degree_box();
    // a variable that no generator involves must belong to every σ
    let forced: Vec<usize> = (0..n).filter(|&j| dbox[j] == 0).collect();
    let optional: Vec<usize> = (0..n).filter(|&j| dbox[j] > 0).collect();
    let hits = |b: &[u32], free: &dyn Fn(usize) -> bool| m.generators.iter().any(|g| (0..n).all(|j| free(j) || g[j] <= b[j]));
    let mut out = Vec::new();
    for chosen in optional.iter().copied().powerset() {
        let mut sigma: Vec<usize> = forced.iter().copied().chain(chosen).collect();
        sigma.sort_unstable();
        let in_sigma = |j: usize| sigma.binary_search(&j).is_ok();
        let off: Vec<usize> = (0..n).filter(|&j| !in_sigma(j)).collect();
        let bounds: Vec<u32> = off.iter().map(|&j| dbox[j]).collect();
        for vals in box_points(&bounds) {
            let mut b = vec![0u32; n];
            for (&j, v) in off.iter().zip(vals) {
                b[j] = v;
            }
            if hits(&b, &in_sigma) {
                continue;
            }
            if off.iter().all(|&k| hits(&b, &|j| in_sigma(j) || j == k)) {
                out.push(StandardPair { base: b, face: sigma.clone() });
            }
        }
    }
    out.sort();
    out
}

/// All integer vectors `v` with `0 <= v_i < bounds_i`.
fn box_points(bounds: &[u32]) -> Vec<Vec<u32>> {
    bounds.iter().fold(vec![Vec::new()], |acc, &b| {
        acc.into_iter().flat_map(|v| (0..b).map(move |x| [v.clone(), vec![x]].concat())).collect()
    })
}

/// One irreducible component `⟨∂_j^{b_j+1} : j ∉ σ⟩` per standard pair.
///
/// The zero ideal has no standard pair with a proper σ, so its decomposition
/// is empty (the empty intersection standing for the zero ideal).
pub fn irreducible_decomposition(m: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let n = m.n;
    standard_pairs(m)
        .into_iter()
        .filter(|p| p.face.len() < n)
        .map(|p| {
            let gens = (0..n).filter(|j| !p.face.contains(j)).map(|j| {
                let mut e = vec![0u32; n];
                e[j] = p.base[j] + 1;
                e
            });
            MonomialIdeal::new(n, gens)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(base: &[u32], face: &[usize]) -> StandardPair {
        StandardPair { base: base.to_vec(), face: face.iter().map(|j| j - 1).collect() }
    }

    #[test]
    fn minimalization() {
        let m = MonomialIdeal::new(2, vec![vec![1, 0], vec![2, 1], vec![0, 3]]);
        assert_eq!(m.generators(), &[vec![0, 3], vec![1, 0]]);
    }

    #[test]
    fn pairs_of_a_two_generator_free_example() {
        let m = MonomialIdeal::new(5, vec![vec![0, 0, 0, 1, 2]]);
        let mut expected = vec![
            pair(&[0, 0, 0, 0, 0], &[1, 2, 3, 4]),
            pair(&[0, 0, 0, 0, 1], &[1, 2, 3, 4]),
            pair(&[0, 0, 0, 0, 0], &[1, 2, 3, 5]),
        ];
        expected.sort();
        assert_eq!(standard_pairs(&m), expected);
        let dec: Vec<String> = irreducible_decomposition(&m).iter().map(|i| i.to_string()).collect();
        assert_eq!(dec.len(), 3);
        for want in ["⟨∂5⟩", "⟨∂5^2⟩", "⟨∂4⟩"] {
            assert!(dec.contains(&want.to_string()), "{dec:?}");
        }
    }

    #[test]
    fn zero_ideal() {
        let m = MonomialIdeal::zero(3);
        assert_eq!(standard_pairs(&m), vec![pair(&[0, 0, 0], &[1, 2, 3])]);
        assert!(irreducible_decomposition(&m).is_empty());
    }

    #[test]
    fn kummer_initial_ideal() {
        let m = MonomialIdeal::new(3, vec![vec![1, 1, 0]]);
        assert_eq!(standard_pairs(&m), vec![pair(&[0, 0, 0], &[1, 3]), pair(&[0, 0, 0], &[2, 3])]);
        let dec: Vec<String> = irreducible_decomposition(&m).iter().map(|i| i.to_string()).collect();
        assert_eq!(dec, vec!["⟨∂2⟩", "⟨∂1⟩"]);
        assert_eq!(m.complex().to_string(), "{1,3} {2,3}");
    }

    #[test]
    fn decomposition_intersects_back() {
        let m = MonomialIdeal::new(3, vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 3]]);
        let dec = irreducible_decomposition(&m);
        let dbox = m.degree_box();
        let bounds: Vec<u32> = dbox.iter().map(|x| x + 2).collect();
        for e in box_points(&bounds) {
            assert_eq!(m.contains(&e), dec.iter().all(|c| c.contains(&e)), "{e:?}");
        }
    }
}
