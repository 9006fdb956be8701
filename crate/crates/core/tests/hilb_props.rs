use std::collections::HashSet;

use cohomix::algebra::jordan_type;
use cohomix::algebra::{Partition, RationalMatrix};
use cohomix::equivariant::{eq_schur_class, localization_rank_check};
use cohomix::filtration::{
    evaluation_matrix, filtration_betti, hilb_betti, hilb_setup, PartitionBox,
};
use cohomix::gotzmann::{
    degree_k_part, enumerate_hilb_fixed_points, hilb_fixed_subspaces, nilpotent_matrix,
    nilpotent_matrix_on_rk, MonomialBasis, PartitionTriple, TorusAction,
};
use cohomix::grassmann::enumerate_fixed_subspaces;

/// Partition numbers by brute force over weakly decreasing sequences.
fn partition_number(n: usize) -> usize {
    fn rec(left: usize, bound: usize) -> usize {
        if left == 0 {
            return 1;
        }
        (1..=bound.min(left)).map(|f| rec(left - f, f)).sum()
    }
    rec(n, n)
}

/// Coefficient of q^k in (prod_i (1 - q^i)^{-1})^3.
fn cubed_partition_coefficient(k: usize) -> usize {
    let mut total = 0;
    for a in 0..=k {
        for b in 0..=k - a {
            total += partition_number(a) * partition_number(b) * partition_number(k - a - b);
        }
    }
    total
}

#[test]
fn fixed_point_counts_match_generating_function() {
    for k in 1..=6 {
        assert_eq!(
            enumerate_hilb_fixed_points(k).len(),
            cubed_partition_coefficient(k as usize)
        );
    }
}

#[test]
fn fixed_points_are_distinct_and_sized() {
    for k in 1..=5 {
        let pts = enumerate_hilb_fixed_points(k);
        assert!(pts.iter().all(|t| t.size() == k as usize));
        assert_eq!(pts.iter().collect::<HashSet<_>>().len(), pts.len());
        for t in &pts {
            assert_eq!(t.to_string().parse::<PartitionTriple>().unwrap(), *t);
        }
    }
}

#[test]
fn gotzmann_images_have_colength_k_and_are_injective() {
    for k in 1..=4u32 {
        let n = (k as usize + 2) * (k as usize + 1) / 2;
        let images = hilb_fixed_subspaces(k).unwrap();
        assert!(images.iter().all(|w| w.dim() == n - k as usize));
        assert_eq!(
            images.iter().collect::<HashSet<_>>().len(),
            images.len(),
            "k={k}"
        );
    }
}

#[test]
fn torus_weights_agree_with_ambient_weight_system() {
    for k in 1..=4u32 {
        let t = TorusAction::default_for(k).unwrap();
        let ws = t.weight_system();
        let basis = MonomialBasis::new(k).unwrap();
        for triple in enumerate_hilb_fixed_points(k) {
            let w = degree_k_part(&triple, k).unwrap();
            for &i in w.indices() {
                assert_eq!(ws.weight(i), t.weight_of(&basis.monomials()[i - 1]));
            }
        }
    }
}

#[test]
fn derivation_preserves_degree_and_is_nilpotent() {
    for k in 1..=5u32 {
        let basis = MonomialBasis::new(k).unwrap();
        // closure under the derivation is exactly what lets the matrix be built
        let m = nilpotent_matrix(basis.monomials()).unwrap();
        let jt = jordan_type(&m).unwrap();
        assert_eq!(jt.size(), basis.len());
        // strictly upper triangular in this basis order
        for r in 0..m.rows() {
            for c in 0..=r {
                assert!(num_traits::Zero::is_zero(m.get(r, c)));
            }
        }
    }
}

#[test]
fn displayed_six_by_six_matrix() {
    let m = nilpotent_matrix_on_rk(&MonomialBasis::x2_descending(2).unwrap());
    let expected = RationalMatrix::from_i64_rows(&[
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 2, 0, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 2],
        &[0, 0, 0, 0, 0, 0],
    ]);
    assert_eq!(m, expected);
    assert_eq!(
        jordan_type(&m).unwrap(),
        Partition::new(vec![5, 1]).unwrap()
    );
}

#[test]
fn hilb_filtration_sums_to_fixed_points_and_restricts_monotonically() {
    for k in 1..=3u32 {
        let (points, ws, bx) = hilb_setup(k).unwrap();
        let table = hilb_betti(k).unwrap();
        assert_eq!(table.total(), points.len());
        assert_eq!(table.betti[0], 1);

        let z = enumerate_fixed_subspaces(ws.n(), k as usize).unwrap();
        let p_max = table.betti.len() - 1;
        let full = filtration_betti(&z, &ws, bx, p_max).unwrap();
        for p in 0..=p_max {
            assert!(table.cumulative_ranks[p] <= full.cumulative_ranks[p]);
            assert!(table.betti[p] <= full.betti[p], "k={k} p={p}");
        }
    }
}

#[test]
fn eq_classes_at_v_one_are_evaluation_rows() {
    let (points, ws, bx) = hilb_setup(2).unwrap();
    let partitions = bx.partitions_up_to(3);
    let m = evaluation_matrix(&partitions, &points, &ws).unwrap();
    for (r, mu) in partitions.iter().enumerate() {
        let c = eq_schur_class(mu, &points, &ws).unwrap();
        assert!(c.is_polynomial());
        assert_eq!(
            c.specialize(&cohomix::algebra::rat(1)).unwrap(),
            m.entries.row(r)
        );
    }
}

#[test]
fn restriction_commutes_with_products() {
    let (points, ws, _) = hilb_setup(2).unwrap();
    let z = enumerate_fixed_subspaces(ws.n(), 2).unwrap();
    let bx = PartitionBox::grassmannian(ws.n(), 2);
    let a = eq_schur_class(&bx.partitions_of(2)[0], &z, &ws).unwrap();
    let b = eq_schur_class(&bx.partitions_of(3)[1], &z, &ws).unwrap();
    let lhs = a.product(&b).restrict(&points).unwrap();
    let rhs = a
        .restrict(&points)
        .unwrap()
        .product(&b.restrict(&points).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn localization_full_on_hilb_fixed_points() {
    for k in 1..=3u32 {
        let (points, ws, _) = hilb_setup(k).unwrap();
        let r = localization_rank_check(&points, &ws).unwrap();
        assert!(r.full, "k={k}: rank {} of {}", r.rank, r.fixed_points);
    }
}
