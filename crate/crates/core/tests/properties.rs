//! Property-based checks of the structural invariants.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use qgrass_core::combinatorics::{
    bruhat_leq, comp_to_partition, comp_to_subset, partition_to_comp, partition_to_subset, subset_to_comp,
    subset_to_partition,
};
use qgrass_core::gkm::{div_t_diff, t_diff};
use qgrass_core::lattice::{rank, smith_diagonal};
use qgrass_core::noncrossing::{comp_of, inv_nc, inv_nc_definitional, is_quasigrassmannian, split_merge_invnc, z_of};
use qgrass_core::pluecker::determinant;
use qgrass_core::polyring::{f_coefficient_in_schur_linear, f_coefficient_in_schur_syt};
use qgrass_core::{Composition, IntPolynomial, Partition, Permutation, RSubset};

/// `(r, n)` and an r-subset of `[n]`.
fn subset(max_n: usize) -> impl Strategy<Value = RSubset> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..n)))
        .prop_map(|(n, e)| RSubset::new(n, e).unwrap())
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn matrix(k: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    proptest::collection::vec(proptest::collection::vec((-9i64..=9).prop_map(BigInt::from), k), k)
}

/// A random polynomial in `t_1..t_4` of small degree.
fn poly() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(((-5i64..=5), proptest::collection::vec(0u32..=2, 4)), 0..5).prop_map(|terms| {
        let mut p = IntPolynomial::zero(0, 4);
        for (c, e) in terms {
            p = &p + &IntPolynomial::monomial(0, 4, e, BigInt::from(c));
        }
        p
    })
}

fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..k {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * leibniz(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn subset_partition_composition_round_trip(a in subset(12)) {
        let (r, n) = (a.r(), a.n());
        let lambda = subset_to_partition(&a);
        let alpha = subset_to_comp(&a);
        prop_assert_eq!(partition_to_subset(&lambda, r, n).unwrap(), a.clone());
        prop_assert_eq!(comp_to_subset(&alpha, r, n).unwrap(), a.clone());
        prop_assert_eq!(partition_to_comp(&lambda), alpha.clone());
        prop_assert_eq!(comp_to_partition(&alpha), lambda.clone());
        prop_assert!(lambda.in_box(r, n) && alpha.in_comp(r, n));
        prop_assert_eq!(alpha.size(), lambda.ohl());
    }

    #[test]
    fn inversions_count_boxes(a in subset(12)) {
        let inv = a.inversions();
        prop_assert_eq!(inv.len(), subset_to_partition(&a).size());
        let mut closed = a.inversions_closed_form();
        closed.sort();
        let mut direct = inv.clone();
        direct.sort();
        prop_assert_eq!(direct, closed);
    }

    #[test]
    fn lr_decomposition_balances(a in subset(12)) {
        let (l, rp) = (a.l_part(), a.r_part());
        prop_assert_eq!(l.len(), rp.len());
        prop_assert!(l.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(rp.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(l.iter().all(|&x| x <= a.r()) && rp.iter().all(|&x| x > a.r()));
    }

    #[test]
    fn z_a_is_quasigrassmannian(a in subset(11)) {
        let r = a.r();
        let z = z_of(&a);
        prop_assert_eq!(z.perm().act_on_initial(r), a.clone());
        prop_assert!(is_quasigrassmannian(&z, r));
        prop_assert_eq!(comp_of(&z, r).unwrap(), subset_to_comp(&a));
        let inv = inv_nc(&z);
        prop_assert_eq!(&inv, &inv_nc_definitional(&z));
        prop_assert_eq!(&inv, &split_merge_invnc(&a));
        prop_assert_eq!(inv.len(), subset_to_partition(&a).ohl());
    }

    #[test]
    fn gale_order_matches_partition_containment(a in subset(9), seed in any::<u64>()) {
        let all = RSubset::all(a.r(), a.n());
        let b = &all[(seed as usize) % all.len()];
        prop_assert_eq!(
            a.gale_leq(b).unwrap(),
            subset_to_partition(&a).is_contained_in(&subset_to_partition(b))
        );
    }

    #[test]
    fn gale_implies_bruhat_on_z(a in subset(8), seed in any::<u64>()) {
        let all = RSubset::all(a.r(), a.n());
        let b = &all[(seed as usize) % all.len()];
        prop_assert_eq!(a.gale_leq(b).unwrap(), bruhat_leq(z_of(&a).perm(), z_of(b).perm()).unwrap());
    }

    #[test]
    fn permutation_group_laws(w in permutation(9)) {
        let n = w.n();
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.length(), w.inversions().len());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert!(bruhat_leq(&Permutation::identity(n), &w).unwrap());
        prop_assert!(bruhat_leq(&w, &Permutation::longest(n)).unwrap());
        prop_assert!(bruhat_leq(&w, &w).unwrap());
    }

    #[test]
    fn bruhat_respects_length(u in permutation(6), seed in any::<u64>()) {
        let n = u.n();
        let mut v: Vec<usize> = (1..=n).collect();
        // A second permutation of the same size from the seed.
        let mut s = seed;
        for i in (1..n).rev() {
            v.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let v = Permutation::new(v).unwrap();
        if bruhat_leq(&u, &v).unwrap() {
            prop_assert!(u.length() <= v.length());
            if u.length() == v.length() {
                prop_assert_eq!(u, v);
            }
        }
    }

    #[test]
    fn descents_round_trip(parts in proptest::collection::vec(1usize..4, 0..6)) {
        let alpha = Composition::new(parts).unwrap();
        let back = Composition::from_descents(alpha.size(), &alpha.descents()).unwrap();
        prop_assert_eq!(back, alpha);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in matrix(4)) {
        prop_assert_eq!(determinant(&m), leibniz(&m));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab: Vec<Vec<BigInt>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
            .collect();
        prop_assert_eq!(determinant(&ab), determinant(&a) * determinant(&b));
    }

    #[test]
    fn smith_diagonal_recovers_determinant(m in matrix(3)) {
        let d = determinant(&m);
        let diag = smith_diagonal(&m);
        prop_assert_eq!(rank(&m), diag.iter().filter(|x| !x.is_zero()).count());
        if !d.is_zero() {
            let prod: BigInt = diag.iter().product();
            prop_assert_eq!(prod.abs(), d.abs());
        }
    }

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_by_labels(f in poly(), i in 1usize..=4, j in 1usize..=4) {
        prop_assume!(i != j);
        let g = &f * &t_diff(4, i, j);
        prop_assert_eq!(div_t_diff(&g, i, j), Some(f.clone()));
        prop_assert!(g.set_t_equal(i, j).is_zero());
    }

    #[test]
    fn fundamental_schur_coefficients_agree(idx in 0usize..200, jdx in 0usize..200) {
        let comps = Composition::all_in_comp(3, 6);
        let parts = Partition::all_in_box(3, 6);
        let alpha = &comps[idx % comps.len()];
        let mu = &parts[jdx % parts.len()];
        prop_assert_eq!(f_coefficient_in_schur_syt(alpha, mu), f_coefficient_in_schur_linear(alpha, mu));
    }
}
