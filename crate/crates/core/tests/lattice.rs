use gkz_core::lattice::{
    hnf_rows, is_saturated, kernel_basis, lattice_index, smith_normal_form, LatticeIndex, Saturation,
};
use gkz_core::num::Int;
use gkz_core::{GkzMatrix, IntMatrix};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 1usize..=5).prop_flat_map(|(d, n)| proptest::collection::vec(proptest::collection::vec(-6i64..=6, n), d))
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::new(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()).unwrap()
}

proptest! {
    #[test]
    fn smith_form_is_a_factorization(rows in matrix_strategy()) {
        let m = to_matrix(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
        prop_assert!(snf.u.det().abs().is_one());
        prop_assert!(snf.v.det().abs().is_one());
        let diag = snf.diagonal();
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    prop_assert!(snf.s.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn kernel_basis_spans_the_kernel(rows in matrix_strategy()) {
        let m = to_matrix(&rows);
        let basis = kernel_basis(&m);
        prop_assert_eq!(basis.len(), m.cols() - m.rank());
        for u in &basis {
            prop_assert!(m.mul_vec(u).iter().all(Zero::is_zero));
        }
        // Hermite-reduced, hence a fixed point of the reduction
        prop_assert_eq!(hnf_rows(&basis, m.cols()), basis.clone());
        // saturated: the basis extends to a unimodular matrix iff its Smith form is all ones
        if !basis.is_empty() {
            let b = IntMatrix::new(basis.clone()).unwrap();
            prop_assert!(smith_normal_form(&b).diagonal().iter().all(One::is_one));
        }
    }

    #[test]
    fn fullness_matches_the_smith_diagonal(rows in matrix_strategy()) {
        let g = GkzMatrix::analyze(to_matrix(&rows));
        let ones = g.snf_diagonal().len() == g.d() && g.snf_diagonal().iter().all(One::is_one);
        prop_assert_eq!(g.is_full(), ones);
    }

    #[test]
    fn pointed_matrices_carry_a_positive_functional(rows in matrix_strategy()) {
        let g = GkzMatrix::analyze(to_matrix(&rows));
        if g.is_pointed() {
            let h = g.positive_functional().unwrap();
            for a in g.matrix().columns() {
                let v: Int = h.iter().zip(&a).map(|(x, y)| x * y).sum();
                prop_assert!(v.is_positive());
            }
        } else {
            let l = g.line_certificate().unwrap();
            let image = g.matrix().mul_rat_vec(l);
            prop_assert!(image.iter().all(Zero::is_zero));
            prop_assert!(l.iter().all(|x| !x.is_negative()));
        }
    }
}

#[test]
fn index_of_a_simplex_lattice_is_its_determinant() {
    let a = IntMatrix::from_i64(&[&[1, 1], &[0, 4]]);
    let sub = a.columns();
    let sup = IntMatrix::identity(2).columns();
    assert_eq!(lattice_index(&sub, &sup).unwrap(), LatticeIndex::Finite(Int::from(4)));
}

#[test]
fn saturation_of_the_curves() {
    let c0134 = GkzMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
    match is_saturated(&c0134, 10).unwrap() {
        Saturation::No { witness } => assert_eq!(witness, vec![Int::from(1), Int::from(2)]),
        other => panic!("{other:?}"),
    }
    let c012 = GkzMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 2]]);
    assert_eq!(is_saturated(&c012, 10).unwrap(), Saturation::Yes);
    assert_eq!(is_saturated(&c012, 0).unwrap(), Saturation::Unknown);
}
