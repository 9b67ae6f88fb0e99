//! End-to-end acceptance checks, one printed line per criterion.
//!
//! The lines are printed even when test output is captured.

use std::io::Write;

use qgrass_core::combinatorics::{comp_to_subset, subset_to_partition};
use qgrass_core::gkm;
use qgrass_core::graphs::{invq, removed_edges, EdgeLabeledGraph};
use qgrass_core::noncrossing::enumerate_nc;
use qgrass_core::pluecker::{self, flag::flag_projection_pattern};
use qgrass_core::polytopes;
use qgrass_core::presentations::{
    betti_by_ohl, betti_formula_as_given, ideal_free_basis_check, qsym_quotient, tensor_presentation_betti,
};
use qgrass_core::verify::{
    bijection_failures, bruhat_failures, edge_failures, projection_failures, ribbon_failures, DEFAULT_GRID, RIBBON_GRID,
};
use qgrass_core::{Composition, NcPermutation, Permutation, RSubset};

const HEAVY_MAX_N: usize = 6;

fn s(n: usize, e: &[usize]) -> RSubset {
    RSubset::new(n, e.to_vec()).unwrap()
}

fn heavy_grid() -> impl Iterator<Item = (usize, usize)> {
    DEFAULT_GRID.into_iter().filter(|&(r, n)| r <= 3 && n <= HEAVY_MAX_N)
}

fn trimmed(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn criterion_1() -> (bool, String) {
    let mut count = 0;
    for n in 2..=9 {
        for r in 1..n {
            let bad = bijection_failures(r, n);
            if let Some(cx) = bad.first() {
                return (false, format!("round trip fails: {cx}"));
            }
            count += RSubset::all(r, n).len();
        }
    }
    (true, format!("{count} subsets with n <= 9 round trip; |alpha| = OHL"))
}

fn criterion_2() -> (bool, String) {
    let mut count = 0;
    for n in 2..=9 {
        let nc = enumerate_nc(n).unwrap();
        for r in 1..n {
            match edge_failures(r, n, &nc) {
                Ok(bad) if bad.is_empty() => count += RSubset::all(r, n).len(),
                Ok(bad) => return (false, format!("InvQ mismatch: {}", bad[0])),
                Err(e) => return (false, e.to_string()),
            }
        }
    }
    (true, format!("InvQ = InvNC(z_A) by definition and closed form for {count} subsets"))
}

fn criterion_3() -> (bool, String) {
    for n in 2..=8 {
        for r in 1..n {
            match bruhat_failures(r, n) {
                Ok(bad) if bad.is_empty() => {}
                Ok(bad) => return (false, format!("order mismatch: {}", bad[0])),
                Err(e) => return (false, e.to_string()),
            }
        }
    }
    (true, "Gale order equals Bruhat order on z_A for n <= 8".into())
}

fn criterion_4() -> (bool, String) {
    let fixture = removed_edges(2, 4).unwrap();
    let expected = vec![(s(4, &[2, 3]), s(4, &[3, 4]))];
    if fixture != expected {
        return (false, format!("(2,4) removed edges {fixture:?}"));
    }
    let mut points = 0;
    for (r, n) in DEFAULT_GRID {
        let rep = pluecker::verify_vanishing(r, n, 100, 7).unwrap();
        if !rep.passed() {
            return (false, format!("vanishing fails at ({r},{n}): {rep:?}"));
        }
        points += rep.points_checked;
    }
    (true, format!("{points} seeded chart points vanish on removed edges; converse probe nonzero; (2,4) removes 23-34"))
}

fn criterion_5() -> (bool, String) {
    for (r, n) in heavy_grid() {
        let degrees = qsym_quotient(r, n, n + 2);
        let ranks: Vec<u64> = degrees.iter().map(|d| d.quotient_rank as u64).collect();
        let free = degrees.iter().all(|d| d.torsion_free && d.free_basis_matches);
        if trimmed(ranks.clone()) != betti_by_ohl(r, n) || !free || !ideal_free_basis_check(r, n, n + 2) {
            return (false, format!("({r},{n}) ranks {ranks:?} free {free}"));
        }
    }
    (true, "QSym_r quotient ranks match the OHL census, torsion free, HNF basis ok".into())
}

fn criterion_6() -> (bool, String) {
    for (r, n) in heavy_grid() {
        let ranks: Vec<u64> = tensor_presentation_betti(r, n, n + 2).into_iter().map(|x| x as u64).collect();
        if trimmed(ranks.clone()) != betti_by_ohl(r, n) {
            return (false, format!("({r},{n}) tensor ranks {ranks:?}"));
        }
    }
    (true, "tensor quotient ranks match the OHL census".into())
}

fn criterion_7() -> (bool, String) {
    for (r, n) in heavy_grid() {
        let census = betti_by_ohl(r, n);
        let p1: Vec<u64> = qsym_quotient(r, n, n + 2).iter().map(|d| d.quotient_rank as u64).collect();
        let g = EdgeLabeledGraph::quasi_johnson(r, n).unwrap();
        let gkm_b = gkm::gkm_quotient_betti(&gkm::all_flowups(&g).unwrap());
        if trimmed(p1) != census || gkm_b != census {
            return (false, format!("routes disagree at ({r},{n})"));
        }
    }
    let stated = betti_formula_as_given(2, 4, 2);
    let census = betti_by_ohl(2, 4)[2];
    if stated != 1 || census != 2 {
        return (false, format!("expected the closed formula discrepancy, got {stated} vs {census}"));
    }
    (true, format!("census = presentation = GKM degrees; REPORTED: closed formula gives {stated} vs census {census} at (2,4), k=2"))
}

fn criterion_8() -> (bool, String) {
    let g = EdgeLabeledGraph::quasi_johnson(2, 4).unwrap();
    let reports = gkm::psi_fixture_check().unwrap();
    for rep in &reports {
        let Some(v) = &rep.vertex else {
            return (false, format!("{} has no unique minimal vertex", rep.name));
        };
        let f = if rep.name == "F_12" { gkm::fixture_f12() } else { gkm::fixture_f2() };
        let values = gkm::evaluate_on_qgrass(&g, &f).unwrap();
        let expected: qgrass_core::IntPolynomial = invq(v, &g)
            .iter()
            .fold(qgrass_core::IntPolynomial::one(0, 4), |acc, &(i, j)| &acc * &gkm::t_diff(4, j, i));
        if !rep.is_class || !rep.is_flowup || values[g.index_of(v).unwrap()] != expected {
            return (false, format!("{rep:?}"));
        }
    }
    let at: Vec<String> = reports.iter().map(|r| format!("{} at {}", r.name, r.vertex.as_ref().unwrap().label())).collect();
    (true, format!("both fixtures are flowup classes on QJ_2,4: {}", at.join(", ")))
}

fn criterion_9() -> (bool, String) {
    let mut logged = Vec::new();
    for (r, n) in DEFAULT_GRID.into_iter().filter(|&(_, n)| n <= HEAVY_MAX_N) {
        let g = EdgeLabeledGraph::quasi_johnson(r, n).unwrap();
        let sols = match gkm::all_flowups(&g) {
            Ok(s) => s,
            Err(e) => return (false, format!("({r},{n}): {e}")),
        };
        for sol in &sols {
            let degree_ok = sol.degree == subset_to_partition(&sol.base).ohl();
            if !degree_ok || !gkm::check_flowup(&g, sol) {
                return (false, format!("({r},{n}) base {}", sol.base));
            }
        }
        let total: u128 = sols.iter().map(|s| s.perturbation_dim).sum();
        logged.push(format!("({r},{n}):{total}"));
    }
    (true, format!("flowups exist on every vertex; total perturbation dims {}", logged.join(" ")))
}

fn criterion_10() -> (bool, String) {
    for (r, n) in DEFAULT_GRID {
        for alpha in Composition::all_in_comp(r, n) {
            let chk = polytopes::check_fixed_points(&alpha, r, n).unwrap();
            if !chk.all_agree() || chk.dimension != alpha.size() {
                return (false, format!("({r},{n}) alpha {alpha}: {chk:?}"));
            }
        }
        let count = polytopes::components(r, n).len() as u128;
        let binom = qgrass_core::combinatorics::binomial(n as i64 - 2, r as i64 - 1);
        if count != binom {
            return (false, format!("({r},{n}) has {count} components, expected {binom}"));
        }
    }
    let alpha = Composition::new(vec![2, 1]).unwrap();
    let pts = polytopes::admissible_sets(&alpha, 2, 4).unwrap();
    let mut expected = RSubset::all(2, 4);
    expected.retain(|b| *b != s(4, &[3, 4]));
    // Every 0/1 point of a polytope inside the cube is a vertex.
    let poly = polytopes::h_description(&comp_to_subset(&alpha, 2, 4).unwrap());
    let vertices = polytopes::zero_one_points(&poly);
    if pts != expected || vertices.len() != 5 {
        return (false, format!("alpha=(2,1): {pts:?}, {} lattice vertices", vertices.len()));
    }
    (true, "four fixed-point routes agree; (2,1) at (2,4) is a 5-vertex pyramid; C(n-2,r-1) components".into())
}

fn criterion_11() -> (bool, String) {
    for (r, n) in RIBBON_GRID {
        match ribbon_failures(r, n) {
            Ok(bad) if bad.is_empty() => {}
            Ok(bad) => return (false, format!("({r},{n}): {}", bad[0])),
            Err(e) => return (false, e.to_string()),
        }
    }
    (true, "[F_alpha]s_mu by SYT and by linear algebra equal the LR coefficient".into())
}

fn criterion_12() -> (bool, String) {
    for n in 2..=8 {
        let nc = enumerate_nc(n).unwrap();
        if let Some(cx) = projection_failures(n, &nc).first() {
            return (false, format!("projection fails: {cx}"));
        }
    }
    let w = NcPermutation::from_permutation(Permutation::new(vec![6, 5, 3, 2, 4, 1]).unwrap()).unwrap();
    let rep = flag_projection_pattern(&w, 3);
    let mut pos: Vec<(usize, usize)> = rep.positions.iter().map(|p| p.1).collect();
    pos.sort();
    if pos != vec![(1, 1), (1, 2), (2, 2), (2, 3), (4, 2)] {
        return (false, format!("653241 positions {pos:?}"));
    }
    (true, "projection injective exactly at z_A with kernel witnesses, n <= 8; 653241 fixture".into())
}

#[test]
fn acceptance() {
    let criteria: [fn() -> (bool, String); 12] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
    ];
    let mut failed = Vec::new();
    std::io::stdout().write_all(b"\n").unwrap();
    for (k, c) in criteria.iter().enumerate() {
        let (ok, detail) = c();
        let line = format!("criterion {}: {} {}\n", k + 1, if ok { "PASS" } else { "FAIL" }, detail);
        // Written to the handle directly so the lines survive output capture.
        std::io::stdout().write_all(line.as_bytes()).unwrap();
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
