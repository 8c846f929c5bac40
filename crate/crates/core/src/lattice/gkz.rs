//! The validated GKZ matrix and lattice predicates on it.

use super::normal_form::{hnf_rows, in_lattice, smith_normal_form};
use super::{IntMatrix, Semigroup};
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{dot_int, fract, primitive_from_rat, to_rat, Int, Rat};
use crate::num::combinations;
use num_traits::{One, Signed, Zero};

/// Tri-state answer of the bounded saturation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Saturation {
    Yes,
    /// A cone lattice point outside `NA` (minimal in degree, then lex).
    No { witness: Vec<Int> },
    Unknown,
}

/// An integer matrix together with its structural flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkzMatrix {
    matrix: IntMatrix,
    full: bool,
    pointed: bool,
    homogeneity_row: Option<Vec<Rat>>,
    saturated: Option<bool>,
    snf_diagonal: Vec<Int>,
    positive_functional: Option<Vec<Int>>,
    line_certificate: Option<Vec<Rat>>,
}

impl GkzMatrix {
    /// Computes all flags except saturation. Never fails; see [`validate`]
    /// for the checked constructor.
    pub fn analyze(matrix: IntMatrix) -> GkzMatrix {
        let snf_diagonal = smith_normal_form(&matrix).diagonal();
        let full = snf_diagonal.len() == matrix.rows() && snf_diagonal.iter().all(One::is_one);
        let homogeneity_row = homogeneity_row(&matrix);
        let (positive_functional, line_certificate) = match positive_functional(&matrix) {
            Ok(h) => {
                // prefer the grading row when there is one
                let h = homogeneity_row.as_deref().map(primitive_from_rat).unwrap_or(h);
                (Some(h), None)
            }
            Err(lambda) => (None, Some(lambda)),
        };
        GkzMatrix {
            full,
            pointed: positive_functional.is_some(),
            homogeneity_row,
            saturated: None,
            snf_diagonal,
            positive_functional,
            line_certificate,
            matrix,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> GkzMatrix {
        GkzMatrix::analyze(IntMatrix::from_i64(rows))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        self.matrix.column(j)
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn homogeneity_row(&self) -> Option<&[Rat]> {
        self.homogeneity_row.as_deref()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity_row.is_some()
    }

    /// `None` until [`GkzMatrix::with_saturation`] decided it.
    pub fn saturated(&self) -> Option<bool> {
        self.saturated
    }

    pub fn snf_diagonal(&self) -> &[Int] {
        &self.snf_diagonal
    }

    /// Primitive integral `h` with `h . a_j >= 1` for all columns.
    pub fn positive_functional(&self) -> Option<&[Int]> {
        self.positive_functional.as_deref()
    }

    /// Nonnegative `lambda`, summing to one, with `A lambda = 0` (non-pointed case).
    pub fn line_certificate(&self) -> Option<&[Rat]> {
        self.line_certificate.as_deref()
    }

    pub fn require_full(&self) -> Result<()> {
        if self.full {
            Ok(())
        } else {
            Err(Error::NotFull { diagonal: self.snf_diagonal.clone() })
        }
    }

    pub fn require_pointed(&self) -> Result<()> {
        match &self.line_certificate {
            None => Ok(()),
            Some(l) => Err(Error::NotPointed { relation: l.clone() }),
        }
    }

    pub fn require_homogeneous(&self) -> Result<&[Rat]> {
        self.homogeneity_row()
            .ok_or_else(|| Error::PreconditionViolation("matrix is not homogeneous".into()))
    }

    /// Decides saturation (see [`is_saturated`]) and caches a definite answer.
    pub fn with_saturation(mut self, bound: u64) -> Result<GkzMatrix> {
        self.saturated = match is_saturated(&self, bound)? {
            Saturation::Yes => Some(true),
            Saturation::No { .. } => Some(false),
            Saturation::Unknown => None,
        };
        Ok(self)
    }

    /// Membership oracle for `NA`.
    pub fn semigroup(&self) -> Result<Semigroup> {
        self.require_pointed()?;
        let h = self.positive_functional.clone().expect("pointed matrices carry a functional");
        Ok(Semigroup::new(self.matrix.columns(), h))
    }

    /// `h . b` for the cached positive functional.
    pub fn degree(&self, b: &[Int]) -> Option<Int> {
        self.positive_functional.as_ref().map(|h| dot_int(h, b))
    }
}

/// Checked constructor: all flags, with `NotFull` / `NotPointed` errors.
pub fn validate(m: IntMatrix) -> Result<GkzMatrix> {
    let g = GkzMatrix::analyze(m);
    g.require_full()?;
    g.require_pointed()?;
    Ok(g)
}

fn homogeneity_row(m: &IntMatrix) -> Option<Vec<Rat>> {
    let at = m.transpose().to_rat_rows();
    let ones = vec![Rat::one(); m.cols()];
    linalg::solve(&at, &ones)
}

/// Either an integral `h` with `h . a_j >= 1`, or a Gordan certificate.
fn positive_functional(m: &IntMatrix) -> std::result::Result<Vec<Int>, Vec<Rat>> {
    let (d, n) = (m.rows(), m.cols());
    // variables: h+ (d), h- (d), slack (n);  a_j.(h+ - h-) - s_j = 1
    let lp: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let col = m.column(j);
            let mut row: Vec<Rat> = col.iter().map(to_rat).collect();
            row.extend(col.iter().map(|x| -to_rat(x)));
            row.extend((0..n).map(|k| if k == j { -Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    if let Some(x) = linalg::nonneg_solution(&lp, &vec![Rat::one(); n]) {
        let h: Vec<Rat> = (0..d).map(|i| &x[i] - &x[d + i]).collect();
        let h = primitive_from_rat(&h);
        debug_assert!(m.columns().iter().all(|a| dot_int(&h, a).is_positive()));
        return Ok(h);
    }
    let mut gordan = m.to_rat_rows();
    gordan.push(vec![Rat::one(); n]);
    let mut rhs = vec![Rat::zero(); d];
    rhs.push(Rat::one());
    let lambda = linalg::nonneg_solution(&gordan, &rhs).expect("Gordan alternative");
    Err(lambda)
}

/// Index of a lattice inside another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(Int),
    Infinite,
}

/// `[Z sup : Z sub]`, or `Infinite` when `sub` has lower rank.
pub fn lattice_index(sub: &[Vec<Int>], sup: &[Vec<Int>]) -> Result<LatticeIndex> {
    let dim = sub.first().or(sup.first()).map_or(0, Vec::len);
    for v in sub.iter().chain(sup) {
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
    }
    let rat = |vs: &[Vec<Int>]| -> Vec<Vec<Rat>> {
        vs.iter().map(|v| v.iter().map(to_rat).collect()).collect()
    };
    let (sub_r, sup_r) = (rat(sub), rat(sup));
    if !sub_r.iter().all(|v| linalg::in_span(&sup_r, v)) {
        return Err(Error::SpanViolation);
    }
    let rank_sub = if sub.is_empty() { 0 } else { linalg::rank(&sub_r) };
    let rank_sup = if sup.is_empty() { 0 } else { linalg::rank(&sup_r) };
    if rank_sub < rank_sup {
        return Ok(LatticeIndex::Infinite);
    }
    let basis = hnf_rows(sup, dim);
    if !sub.iter().all(|v| in_lattice(&basis, v)) {
        return Err(Error::NotSublattice);
    }
    if rank_sup == 0 {
        return Ok(LatticeIndex::Finite(Int::one()));
    }
    // both lattices span the same space; compare their indices in its saturation
    let covol = |vs: &[Vec<Int>]| -> Int {
        let m = IntMatrix::raw(vs.len(), dim, vs.to_vec());
        smith_normal_form(&m).diagonal().into_iter().filter(|x| !x.is_zero()).product()
    };
    Ok(LatticeIndex::Finite(covol(sub) / covol(sup)))
}

/// `(d + 1) * max |a_ij|`.
pub fn default_saturation_bound(g: &GkzMatrix) -> u64 {
    let m: u64 = g.matrix().max_abs_entry().try_into().unwrap_or(u64::MAX / 8);
    (g.d() as u64 + 1) * m.max(1)
}

/// Lattice points of the half-open parallelepiped spanned by the columns of
/// the nonsingular square matrix `basis`.
pub(crate) fn parallelepiped_points(basis: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(basis);
    let u_inv = linalg::inverse(&snf.u.to_rat_rows()).expect("unimodular");
    let b_rat = basis.to_rat_rows();
    let diag = snf.diagonal();
    let mut out = Vec::new();
    let mut k = vec![Int::zero(); diag.len()];
    loop {
        let x = linalg::mat_vec(&u_inv, &k.iter().map(to_rat).collect::<Vec<_>>());
        let lambda = linalg::solve(&b_rat, &x).expect("nonsingular basis");
        let frac: Vec<Rat> = lambda.iter().map(fract).collect();
        let p = linalg::mat_vec(&b_rat, &frac);
        out.push(p.iter().map(|r| r.to_integer()).collect());
        // odometer over the product of Z/s_i
        let mut i = 0;
        loop {
            if i == k.len() {
                return out;
            }
            k[i] += 1;
            if k[i] < diag[i] {
                break;
            }
            k[i] = Int::zero();
            i += 1;
        }
    }
}

/// Decides whether `NA = ZA ∩ cone(A)` by checking every lattice point of
/// every basis parallelepiped. `bound` caps the coefficients of the Minkowski
/// region searched; the parallelepipeds need `bound >= 1`, so `0` yields
/// `Unknown`.
pub fn is_saturated(g: &GkzMatrix, bound: u64) -> Result<Saturation> {
    g.require_full()?;
    g.require_pointed()?;
    if bound == 0 {
        return Ok(Saturation::Unknown);
    }
    let sg = g.semigroup()?;
    let mut holes: Vec<Vec<Int>> = Vec::new();
    for sigma in combinations(g.n(), g.d()) {
        let sub = g.matrix().select_columns(&sigma);
        if sub.det().is_zero() {
            continue;
        }
        for p in parallelepiped_points(&sub) {
            if !sg.contains(&p) && !holes.contains(&p) {
                holes.push(p);
            }
        }
    }
    let witness = holes.into_iter().min_by(|a, b| {
        let da = sg.degree(a);
        let db = sg.degree(b);
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    Ok(match witness {
        None => Saturation::Yes,
        Some(w) => Saturation::No { witness: w },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;

    fn v(x: &[i64]) -> Vec<Int> {
        x.iter().map(|&t| Int::from(t)).collect()
    }

    #[test]
    fn validate_fixtures() {
        let kummer = validate(IntMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]])).unwrap();
        assert!(kummer.is_full() && kummer.is_pointed());
        assert_eq!(kummer.homogeneity_row(), None);
        let c0134 = validate(IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]])).unwrap();
        assert_eq!(c0134.homogeneity_row(), Some(&[rat_int(1), rat_int(0)][..]));
        assert_eq!(c0134.positive_functional(), Some(&v(&[1, 0])[..]));
    }

    #[test]
    fn non_pointed_certificate() {
        let err = validate(IntMatrix::from_i64(&[&[1, -1]])).unwrap_err();
        let Error::NotPointed { relation } = err else { panic!("expected NotPointed") };
        assert_eq!(relation.iter().sum::<Rat>(), rat_int(1));
        assert!(relation.iter().all(|x| !x.is_negative()));
        assert_eq!(&relation[0] - &relation[1], rat_int(0));
    }

    #[test]
    fn not_full_certificate() {
        let err = validate(IntMatrix::from_i64(&[&[2, 4]])).unwrap_err();
        assert_eq!(err, Error::NotFull { diagonal: v(&[2]) });
    }

    #[test]
    fn zero_column_is_not_pointed() {
        assert!(!GkzMatrix::from_i64(&[&[1, 0]]).is_pointed());
    }

    #[test]
    fn validate_is_idempotent() {
        let g = GkzMatrix::from_i64(&[&[1, 0, 1, 2], &[0, 1, 1, 3]]);
        let again = GkzMatrix::analyze(g.matrix().clone());
        assert_eq!(g, again);
    }

    #[test]
    fn lattice_indices() {
        let e = vec![v(&[1, 0]), v(&[0, 1])];
        assert_eq!(lattice_index(&e, &e).unwrap(), LatticeIndex::Finite(Int::from(1)));
        let sub = vec![v(&[2, 0]), v(&[0, 2])];
        assert_eq!(lattice_index(&sub, &e).unwrap(), LatticeIndex::Finite(Int::from(4)));
        assert_eq!(lattice_index(&[v(&[1, 1])], &e).unwrap(), LatticeIndex::Infinite);
        assert_eq!(lattice_index(&[v(&[1, 1])], &[v(&[1, 0])]), Err(Error::SpanViolation));
        assert_eq!(lattice_index(&[v(&[1, 0])], &[v(&[2, 0])]), Err(Error::NotSublattice));
        // index inside a proper subspace
        let sup = vec![v(&[1, 1, 0])];
        assert_eq!(lattice_index(&[v(&[3, 3, 0])], &sup).unwrap(), LatticeIndex::Finite(Int::from(3)));
    }

    #[test]
    fn saturation_fixtures() {
        let kummer = GkzMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(is_saturated(&kummer, 4).unwrap(), Saturation::Yes);
        let c0134 = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        assert_eq!(is_saturated(&c0134, 4).unwrap(), Saturation::No { witness: v(&[1, 2]) });
        let id = GkzMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(is_saturated(&id, 4).unwrap(), Saturation::Yes);
        assert_eq!(is_saturated(&id, 0).unwrap(), Saturation::Unknown);
        assert_eq!(default_saturation_bound(&c0134), 12);
    }

    #[test]
    fn parallelepiped_of_pinched_cell() {
        let b = IntMatrix::from_i64(&[&[1, 1], &[0, 4]]);
        let mut pts = parallelepiped_points(&b);
        pts.sort();
        assert_eq!(pts, vec![v(&[0, 0]), v(&[1, 1]), v(&[1, 2]), v(&[1, 3])]);
    }

    #[test]
    fn subsets() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }
}
