use gkz_core::fixtures::{CORPUS, CURVE_0134, FOUR_SLOPES, KUMMER};
use gkz_core::num::{rat, to_rat, Int, Rat, RatVector};
use gkz_core::polyhedral::{
    char_cycle_multiplicity, face_lattice, regular_triangulation, semigroup_holes, simplicial_volume, umbrella,
    umbrella_jumps, Window,
};
use gkz_core::Error;
use num_traits::One;
use proptest::prelude::*;

fn weight(v: &[i64]) -> RatVector {
    RatVector::from_ints(v)
}

#[test]
fn corpus_volumes() {
    let expected = [2, 2, 4, 2, 3, 5, 3, 2, 2, 1];
    for (f, v) in CORPUS.iter().zip(expected) {
        assert_eq!(simplicial_volume(&f.matrix()).unwrap(), Int::from(v), "{}", f.name);
    }
}

#[test]
fn four_slopes_jumps() {
    let g = FOUR_SLOPES.matrix();
    let jumps = umbrella_jumps(&g, &weight(&[1, 1, 1, 0]), &weight(&[0, 0, 0, 1]), &Window::new(rat(0, 1), rat(10, 1)))
        .unwrap();
    assert_eq!(jumps, vec![rat(2, 1), rat(3, 1)]);
}

#[test]
fn order_filtration_multiplicity_is_the_volume() {
    // the order filtration weighs every ∂ by one
    for f in CORPUS {
        let g = f.matrix();
        let m = char_cycle_multiplicity(&g, &weight(&vec![1; g.n()]), &[]).unwrap();
        if semigroup_holes(&g, 16).unwrap().points.is_empty() {
            assert_eq!(m, simplicial_volume(&g).unwrap(), "{}", f.name);
        }
        assert!(m >= Int::one());
    }
}

#[test]
fn faces_outside_the_umbrella_are_rejected() {
    let g = KUMMER.matrix();
    let err = char_cycle_multiplicity(&g, &weight(&[1, 1, 3]), &[2]).unwrap_err();
    assert_eq!(err, Error::FaceNotInUmbrella { face: vec![2] });
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    /// Adding a linear function of the columns shears the lifted points and
    /// leaves the lower faces alone; so does positive scaling.
    #[test]
    fn umbrella_is_invariant_under_linear_shifts(
        w in proptest::collection::vec(-8i64..=8, 4),
        f in proptest::collection::vec(-3i64..=3, 2),
        s in 1i64..=5,
    ) {
        let g = CURVE_0134.matrix();
        let base = weight(&w);
        let u = umbrella(&g, &base).unwrap();
        let shift: Vec<Rat> = g.matrix().columns().iter()
            .map(|a| to_rat(&(Int::from(f[0]) * &a[0] + Int::from(f[1]) * &a[1])))
            .collect();
        prop_assert!(u.same_faces(&umbrella(&g, &base.add(&shift)).unwrap()));
        prop_assert!(u.same_faces(&umbrella(&g, &base.scale(&Rat::from_integer(s.into()))).unwrap()));
    }

    #[test]
    fn triangulations_have_the_full_volume(w in proptest::collection::vec(-20i64..=20, 6), which in 0usize..10) {
        let g = CORPUS[which].matrix();
        prop_assume!(g.is_homogeneous());
        if let Ok(t) = regular_triangulation(&g, &weight(&w[..g.n()])) {
            prop_assert_eq!(t.total_volume(), simplicial_volume(&g).unwrap());
            for cell in &t.cells {
                prop_assert_eq!(cell.len(), g.d());
            }
        }
    }

    #[test]
    fn multiplicities_are_positive(w in proptest::collection::vec(-6i64..=6, 6), which in 0usize..10) {
        let g = CORPUS[which].matrix();
        let wt = weight(&w[..g.n()]);
        let u = umbrella(&g, &wt).unwrap();
        for face in &u.faces {
            prop_assert!(char_cycle_multiplicity(&g, &wt, &face.columns).unwrap() >= Int::one());
        }
    }

    #[test]
    fn curve_volume_is_the_width(mut cols in proptest::collection::btree_set(-6i64..=6, 2..=5)) {
        let xs: Vec<i64> = std::mem::take(&mut cols).into_iter().collect();
        let ones = vec![1i64; xs.len()];
        let g = gkz_core::GkzMatrix::from_i64(&[&ones, &xs]);
        prop_assume!(g.is_full());
        let width = xs.last().unwrap() - xs.first().unwrap();
        prop_assert_eq!(simplicial_volume(&g).unwrap(), Int::from(width));
    }
}

#[test]
fn face_lattice_is_face_closed() {
    for f in CORPUS {
        let l = face_lattice(&f.matrix()).unwrap();
        for a in &l.faces {
            for b in &l.faces {
                let meet: Vec<usize> = a.columns.iter().filter(|c| b.columns.contains(c)).copied().collect();
                assert!(l.find(&meet).is_some(), "{}: {:?} ∩ {:?}", f.name, a.columns, b.columns);
            }
        }
        assert!(l.find(&[]).is_some());
    }
}
