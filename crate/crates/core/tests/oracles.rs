//! Exhaustive comparisons against independent oracles at small sizes.

use qgrass_core::combinatorics::{binomial, subset_to_partition};
use qgrass_core::gkm;
use qgrass_core::graphs::{invq, removed_edges, EdgeLabeledGraph};
use qgrass_core::noncrossing::{
    enumerate_nc, fiber, is_fiber_minimum, kreweras_covers, kreweras_covers_bruteforce, nc_descents,
    nc_descents_definitional, reduce_to_quasigrassmannian, z_of,
};
use qgrass_core::pluecker::{le, ratio_sign, ratio_sign_closed_form};
use qgrass_core::polyring::{fundamental, fundamental_via_monomials, lr_coefficient, lr_coefficient_tableaux};
use qgrass_core::polytopes;
use qgrass_core::presentations::{betti_by_ohl, betti_formula_corrected, qsym_quotient_betti, tensor_presentation_betti};
use qgrass_core::{Composition, Partition, RSubset};

/// Set partitions of `[n]` as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            go(i + 1, max.max(b), cur, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut cur, &mut out);
    }
    out
}

fn crosses(rgs: &[usize]) -> bool {
    let n = rgs.len();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (b + 1..n).any(|c| (c + 1..n).any(|d| rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]))
        })
    })
}

#[test]
fn nc_count_matches_catalan_and_brute_force() {
    for n in 1..=10 {
        let catalan = binomial(2 * n as i64, n as i64) / (n as u128 + 1);
        assert_eq!(enumerate_nc(n).unwrap().len() as u128, catalan, "n={n}");
    }
    for n in 1..=7 {
        let brute = set_partitions(n).iter().filter(|p| !crosses(p)).count();
        assert_eq!(enumerate_nc(n).unwrap().len(), brute, "n={n}");
    }
}

#[test]
fn kreweras_covers_match_brute_force() {
    for n in 1..=7 {
        for u in enumerate_nc(n).unwrap() {
            assert_eq!(kreweras_covers(&u), kreweras_covers_bruteforce(&u), "{:?}", u.perm().oneline());
        }
    }
}

#[test]
fn descents_match_definition() {
    for n in 1..=7 {
        for w in enumerate_nc(n).unwrap() {
            assert_eq!(nc_descents(&w), nc_descents_definitional(&w));
        }
    }
}

#[test]
fn johnson_edge_counts() {
    for n in 2..=8 {
        for r in 1..n {
            let j = EdgeLabeledGraph::johnson(r, n).unwrap();
            let qj = EdgeLabeledGraph::quasi_johnson(r, n).unwrap();
            let expected = binomial(n as i64, r as i64) * (r * (n - r)) as u128 / 2;
            assert_eq!(j.edges().len() as u128, expected);
            // QJ is a spanning subgraph of J.
            assert!(qj.edges().iter().all(|e| j.has_edge(&qj.vertices()[e.u], &qj.vertices()[e.v])));
            assert_eq!(j.edges().len() - qj.edges().len(), removed_edges(r, n).unwrap().len());
            // Each vertex has exactly OHL lower neighbours.
            for a in qj.vertices() {
                assert_eq!(invq(a, &qj).len(), subset_to_partition(a).ohl());
            }
        }
    }
    assert_eq!(EdgeLabeledGraph::quasi_johnson(2, 4).unwrap().edges().len(), 11);
}

#[test]
fn z_a_is_the_fiber_minimum() {
    for n in 2..=7 {
        for r in 1..n {
            for a in RSubset::all(r, n) {
                let f = fiber(&a).unwrap();
                assert!(is_fiber_minimum(&a, &f), "{a}");
            }
        }
    }
}

#[test]
fn descent_reduction_ends_at_z_a() {
    for n in 2..=7 {
        let nc = enumerate_nc(n).unwrap();
        for r in 1..n {
            for w in &nc {
                let chain = reduce_to_quasigrassmannian(w, r);
                let end = chain.last().unwrap();
                assert_eq!(*end, z_of(&w.perm().act_on_initial(r)));
            }
        }
    }
}

#[test]
fn ratio_signs_match_closed_form() {
    for n in 2..=7 {
        for r in 1..n {
            for a in RSubset::all(r, n) {
                for (i, j) in a.inversions() {
                    let k = a.elems().iter().position(|&x| x == j).unwrap() + 1;
                    assert_eq!(ratio_sign(&a, i, k).unwrap(), ratio_sign_closed_form(&a, i, k), "{a} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn lr_coefficients_match_tableau_count() {
    let parts = Partition::all_in_box(3, 6);
    for nu in &parts {
        for mu in &parts {
            for eta in Partition::all_in_box(3, 7) {
                if nu.size() + mu.size() != eta.size() {
                    continue;
                }
                let direct = lr_coefficient(nu, mu, &eta, 3).unwrap();
                assert_eq!(direct, lr_coefficient_tableaux(nu, mu, &eta).into(), "{nu:?} {mu:?} {eta:?}");
            }
        }
    }
}

#[test]
fn fundamentals_agree_with_monomial_expansion() {
    for size in 0..=4 {
        for alpha in Composition::all_of_size(size, 4) {
            for r in alpha.len().max(1)..=4 {
                assert_eq!(fundamental(&alpha, r), fundamental_via_monomials(&alpha, r), "{alpha} r={r}");
            }
        }
    }
}

#[test]
fn betti_census_and_corrected_formula() {
    for n in 2..=10 {
        for r in 1..n {
            let census = betti_by_ohl(r, n);
            assert_eq!(census.iter().sum::<u64>() as u128, binomial(n as i64, r as i64));
            for (k, &b) in census.iter().enumerate() {
                assert_eq!(betti_formula_corrected(r, n, k), b as u128, "({r},{n}) k={k}");
            }
        }
    }
}

#[test]
fn presentations_at_24() {
    let census = vec![1, 1, 2, 2];
    assert_eq!(betti_by_ohl(2, 4), census);
    let p1 = qsym_quotient_betti(2, 4, 6);
    let p2 = tensor_presentation_betti(2, 4, 6);
    assert_eq!(p1, vec![1, 1, 2, 2, 0, 0, 0]);
    assert_eq!(p1, p2);
}

#[test]
fn perturbation_dims_match_modular_rank() {
    for n in 3..=5 {
        for r in 1..n {
            let g = EdgeLabeledGraph::quasi_johnson(r, n).unwrap();
            for sol in gkm::all_flowups(&g).unwrap() {
                assert_eq!(sol.perturbation_dim as usize, gkm::perturbation_dim_mod_p(&g, &sol.base), "({r},{n}) {}", sol.base);
            }
        }
    }
}

#[test]
fn flowups_on_a_larger_grid() {
    for (r, n) in [(2, 7), (3, 7)] {
        let g = EdgeLabeledGraph::quasi_johnson(r, n).unwrap();
        let sols = gkm::all_flowups(&g).unwrap();
        assert!(sols.iter().all(|s| gkm::check_flowup(&g, s)));
        assert_eq!(gkm::gkm_quotient_betti(&sols), betti_by_ohl(r, n));
    }
}

#[test]
fn networks_for_every_cell() {
    for n in 2..=6 {
        for r in 1..n {
            for a in RSubset::all(r, n) {
                let l = le::le_of(&a);
                assert!(l.is_le() && le::is_noncrossing_le(&l));
                let rep = le::check_network(&l).unwrap();
                assert!(rep.unique_paths && rep.weights_match_row_products && rep.ratios_match_paths, "{a}");
                assert!(rep.totally_nonnegative, "{a}");
            }
        }
    }
}

#[test]
fn fixed_point_routes_beyond_the_default_grid() {
    for n in 2..=7 {
        for r in 1..n {
            for alpha in Composition::all_in_comp(r, n) {
                let chk = polytopes::check_fixed_points(&alpha, r, n).unwrap();
                assert!(chk.all_agree(), "({r},{n}) {alpha}");
                assert_eq!(chk.dimension, alpha.size());
            }
            assert_eq!(polytopes::components(r, n).len() as u128, binomial(n as i64 - 2, r as i64 - 1));
        }
    }
}
