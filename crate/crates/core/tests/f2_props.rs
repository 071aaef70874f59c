mod common;

use common::{arb_matrix, matrix};
use proptest::prelude::*;
use solgroup::corpus;
use solgroup::f2::PivotOrder;
use solgroup::LinSystem;

#[test]
fn homogenize_block_shape() {
    let sys = LinSystem::new(matrix(&["11", "01"]), vec![false, true]).unwrap();
    let h = sys.homogenize();
    assert_eq!(h.matrix(), &matrix(&["1111", "0101", "0011"]));
    assert!(h.is_homogeneous());
}

#[test]
fn nullspace_of_all_ones_row() {
    let basis = matrix(&["111"]).nullspace_basis();
    assert_eq!(basis.len(), 2);
    for v in &basis {
        assert_eq!(v.iter().filter(|&&b| b).count(), 2);
    }
}

#[test]
fn random_correspondence() {
    let mut rng = corpus::rng(7);
    for _ in 0..200 {
        use rand::Rng;
        let (r, c) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let sys = corpus::random_inhomogeneous(&mut rng, r, c);
        assert!(sys.solve_correspondence_check().unwrap(), "{}", sys.to_text());
    }
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_cols(m in arb_matrix(12, 70)) {
        prop_assert_eq!(m.rank() + m.nullspace_basis().len(), m.cols());
    }

    #[test]
    fn nullspace_vectors_are_solutions(m in arb_matrix(10, 20)) {
        for v in m.nullspace_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(|&b| !b));
        }
    }

    #[test]
    fn pivot_order_does_not_change_rank(m in arb_matrix(12, 12)) {
        prop_assert_eq!(m.rank_with(PivotOrder::Forward), m.rank_with(PivotOrder::Reverse));
    }

    #[test]
    fn rank_of_transpose(m in arb_matrix(9, 9)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn homogenize_is_idempotent(m in arb_matrix(6, 6), b in prop::collection::vec(any::<bool>(), 6)) {
        let b = b[..m.rows()].to_vec();
        let sys = LinSystem::new(m, b).unwrap();
        let once = sys.homogenize();
        prop_assert_eq!(once.homogenize(), once);
    }

    #[test]
    fn text_round_trip(m in arb_matrix(8, 8), b in prop::collection::vec(any::<bool>(), 8)) {
        let b = b[..m.rows()].to_vec();
        let sys = LinSystem::new(m, b).unwrap();
        let back: LinSystem = sys.to_text().parse().unwrap();
        prop_assert_eq!(back, sys);
    }
}
