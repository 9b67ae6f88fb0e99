//! Graph cohomology of the quasisymmetric Johnson graph: class membership,
//! flowup classes, quotient ranks, and two explicit equivariant fixtures.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binomial, subset_to_partition, RSubset};
use crate::error::{Error, Result};
use crate::graphs::EdgeLabeledGraph;
use crate::lattice::{rank_mod_p, to_mod, PRIME};
use crate::noncrossing::z_of;
use crate::polyring::IntPolynomial;

/// A tuple of t-polynomials indexed by the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkmClass {
    pub values: Vec<IntPolynomial>,
}

impl GkmClass {
    pub fn zero(g: &EdgeLabeledGraph) -> Self {
        GkmClass { values: vec![IntPolynomial::zero(0, g.n()); g.vertices().len()] }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| !self.values[i].is_zero()).collect()
    }

    /// `[{"vertex": subset, "poly": polynomial}]`.
    pub fn to_json(&self, g: &EdgeLabeledGraph) -> serde_json::Value {
        let items: Vec<serde_json::Value> = g
            .vertices()
            .iter()
            .zip(&self.values)
            .map(|(v, p)| serde_json::json!({ "vertex": v, "poly": p }))
            .collect();
        serde_json::Value::Array(items)
    }
}

/// `t_i - t_j` in `n` t-variables.
pub fn t_diff(n: usize, i: usize, j: usize) -> IntPolynomial {
    &IntPolynomial::t(0, n, i) - &IntPolynomial::t(0, n, j)
}

/// Every edge label `t_i - t_j` divides the difference of the endpoint values.
pub fn is_class(g: &EdgeLabeledGraph, values: &[IntPolynomial]) -> bool {
    values.len() == g.vertices().len()
        && g.edges().iter().all(|e| (&values[e.u] - &values[e.v]).divisible_by_t_diff(e.label.0, e.label.1))
}

/// `∏_{(i,j) ∈ InvQ(A)} (t_j - t_i)`.
pub fn leading_value(g: &EdgeLabeledGraph, a: &RSubset) -> IntPolynomial {
    let n = g.n();
    g.down_labels(a).into_iter().fold(IntPolynomial::one(0, n), |acc, (i, j)| &acc * &t_diff(n, j, i))
}

/// Exact quotient by `t_a - t_b`, or `None` when it does not divide.
pub fn div_t_diff(f: &IntPolynomial, a: usize, b: usize) -> Option<IntPolynomial> {
    let n = f.nt();
    let (va, vb) = (f.nx() + a - 1, f.nx() + b - 1);
    let mut rest = f.clone();
    let mut q = IntPolynomial::zero(f.nx(), n);
    // peel the term of largest t_a-degree: c m t_a^k = c m t_a^{k-1} (t_a - t_b) + c m t_a^{k-1} t_b
    loop {
        let lead = rest.terms().iter().filter(|(e, _)| e[va] > 0).max_by_key(|(e, _)| e[va]).map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = lead else { break };
        let mut qe = e.clone();
        qe[va] -= 1;
        q.add_term(qe.clone(), c.clone());
        rest.add_term(e, -c.clone());
        let mut shifted = qe;
        shifted[vb] += 1;
        rest.add_term(shifted, c);
    }
    rest.is_zero().then_some(q)
}

/// The data returned for one base vertex.
#[derive(Clone, Debug, Serialize)]
pub struct FlowupSolution {
    pub base: RSubset,
    pub degree: usize,
    pub class: GkmClass,
    /// Dimension (over Q, hence rank over Z) of the degree-`degree` classes
    /// supported strictly above `base`, i.e. the perturbation space.
    pub perturbation_dim: u128,
}

/// Vertices `B ≥ A` in Gale order, sorted by partition size then lexicographically.
pub fn gale_upset(g: &EdgeLabeledGraph, a: &RSubset) -> Vec<usize> {
    let mut up: Vec<usize> =
        (0..g.vertices().len()).filter(|&i| a.gale_leq(&g.vertices()[i]).unwrap_or(false)).collect();
    up.sort_by_key(|&i| (subset_to_partition(&g.vertices()[i]).size(), g.vertices()[i].clone()));
    up
}

/// Solves for a flowup class at `A`: supported on the Gale up-set, equal to
/// the product of down-labels at `A`, homogeneous of degree `OHL(λ_A)`.
///
/// Vertices are swept in a linear extension of Gale order; at each vertex the
/// congruences with its lower neighbours are solved by Chinese remaindering
/// over the pairwise coprime labels.
pub fn flowup_solve(g: &EdgeLabeledGraph, a: &RSubset) -> Result<FlowupSolution> {
    let n = g.n();
    let base = g.index_of(a).ok_or_else(|| Error::InvalidArgument(format!("{a} is not a vertex")))?;
    let degree = subset_to_partition(a).ohl();
    let mut values = vec![IntPolynomial::zero(0, n); g.vertices().len()];
    values[base] = leading_value(g, a);
    let order = gale_upset(g, a);
    for &b in order.iter().filter(|&&b| b != base) {
        let vb = &g.vertices()[b];
        let lower: Vec<(usize, (usize, usize))> =
            g.neighbors(b).into_iter().filter(|&(_, (_, j))| vb.contains(j)).collect();
        values[b] = crt_lift(&lower, &values, n)
            .ok_or_else(|| Error::Infeasible(format!("no degree-{degree} value at {vb} for the flowup of {a}")))?;
        if !values[b].is_zero() && (!values[b].is_homogeneous() || values[b].degree() != Some(degree as u32)) {
            return Err(Error::Infeasible(format!("value at {vb} is not homogeneous of degree {degree}")));
        }
    }
    let perturbation_dim = order
        .iter()
        .filter(|&&c| c != base)
        .map(|&c| {
            let oc = subset_to_partition(&g.vertices()[c]).ohl();
            if oc > degree {
                0
            } else {
                binomial((degree - oc + n - 1) as i64, (n - 1) as i64)
            }
        })
        .sum();
    Ok(FlowupSolution { base: a.clone(), degree, class: GkmClass { values }, perturbation_dim })
}

/// The smallest-degree solution of `f ≡ values[c] (mod t_i - t_j)` over the
/// given neighbours, built one modulus at a time.
fn crt_lift(lower: &[(usize, (usize, usize))], values: &[IntPolynomial], n: usize) -> Option<IntPolynomial> {
    let Some(&(c0, l0)) = lower.first() else { return Some(IntPolynomial::zero(0, n)) };
    let mut f = values[c0].clone();
    let mut modulus = t_diff(n, l0.0, l0.1);
    let mut factors = vec![l0];
    for &(c, (i, j)) in &lower[1..] {
        // h with modulus·h ≡ values[c] - f (mod t_i - t_j), dividing out each reduced factor
        let mut h = (&values[c] - &f).set_t_equal(i, j);
        for &(a, b) in &factors {
            let sub = |v: usize| if v == i { j } else { v };
            h = div_t_diff(&h, sub(a), sub(b))?;
        }
        f = &f + &(&modulus * &h);
        modulus = &modulus * &t_diff(n, i, j);
        factors.push((i, j));
    }
    Some(f)
}

/// Flowup solutions for every vertex.
pub fn all_flowups(g: &EdgeLabeledGraph) -> Result<Vec<FlowupSolution>> {
    g.vertices().par_iter().map(|a| flowup_solve(g, a)).collect()
}

/// Verifies the stated properties of a flowup solution.
pub fn check_flowup(g: &EdgeLabeledGraph, sol: &FlowupSolution) -> bool {
    let base = g.index_of(&sol.base).expect("vertex");
    let values = &sol.class.values;
    let support_ok = (0..values.len())
        .all(|i| values[i].is_zero() || sol.base.gale_leq(&g.vertices()[i]).unwrap_or(false));
    let degrees_ok = values.iter().all(|v| v.is_zero() || (v.is_homogeneous() && v.degree() == Some(sol.degree as u32)));
    support_ok && degrees_ok && values[base] == leading_value(g, &sol.base) && is_class(g, values)
}

/// Quotient ranks from the multiset of flowup degrees.
pub fn gkm_quotient_betti(sols: &[FlowupSolution]) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for s in sols {
        if out.len() <= s.degree {
            out.resize(s.degree + 1, 0);
        }
        out[s.degree] += 1;
    }
    out
}

fn monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            go(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, d as u32, &mut cur, &mut out);
    out
}

/// Dimension of degree-`d` classes supported strictly above `A`, from the
/// joint linear system over `F_p`; an independent check of the count in
/// [`FlowupSolution::perturbation_dim`] for small graphs.
pub fn perturbation_dim_mod_p(g: &EdgeLabeledGraph, a: &RSubset) -> usize {
    let n = g.n();
    let d = subset_to_partition(a).ohl();
    let base = g.index_of(a).expect("vertex");
    let unknown: Vec<usize> = gale_upset(g, a).into_iter().filter(|&b| b != base).collect();
    let pos: BTreeMap<usize, usize> = unknown.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    let monos = monomials(n, d);
    let mono_index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let cols = unknown.len() * monos.len();
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::new();
    for e in g.edges() {
        let (pu, pv) = (pos.get(&e.u), pos.get(&e.v));
        if pu.is_none() && pv.is_none() {
            continue;
        }
        let (i, j) = e.label;
        // coefficient of each monomial in (f_u - f_v)|_{t_i = t_j}
        let mut by_target: BTreeMap<Vec<u32>, Vec<(usize, i64)>> = BTreeMap::new();
        for (sign, p) in [(1i64, pu), (-1i64, pv)] {
            let Some(&p) = p else { continue };
            for m in &monos {
                let mut t = m.clone();
                t[j - 1] += t[i - 1];
                t[i - 1] = 0;
                by_target.entry(t).or_default().push((p * monos.len() + mono_index[m], sign));
            }
        }
        for entries in by_target.into_values() {
            rows.push(entries.into_iter().map(|(c, s)| (c, to_mod(s, PRIME))).collect());
        }
    }
    cols - rank_mod_p(&rows, cols, PRIME)
}

/// The fixture `F_{12}(x_2; t_4) = (x_1 - t_3)(x_1 - t_1)(x_2 - t_1)`.
pub fn fixture_f12() -> IntPolynomial {
    let x = |i| IntPolynomial::x(2, 4, i);
    let t = |i| IntPolynomial::t(2, 4, i);
    &(&(&x(1) - &t(3)) * &(&x(1) - &t(1))) * &(&x(2) - &t(1))
}

/// The fixture degree-2 expansion
/// `x_2^2 + x_1x_2 - x_2t_3 - x_2t_2 + x_1^2 - x_1t_3 - x_1t_2 + t_2t_3 - x_2t_1 - x_1t_1 + t_1t_3 + t_1t_2`.
pub fn fixture_f2() -> IntPolynomial {
    let x = |i| IntPolynomial::x(2, 4, i);
    let t = |i| IntPolynomial::t(2, 4, i);
    let terms = [
        (1, &x(2) * &x(2)),
        (1, &x(1) * &x(2)),
        (-1, &x(2) * &t(3)),
        (-1, &x(2) * &t(2)),
        (1, &x(1) * &x(1)),
        (-1, &x(1) * &t(3)),
        (-1, &x(1) * &t(2)),
        (1, &t(2) * &t(3)),
        (-1, &x(2) * &t(1)),
        (-1, &x(1) * &t(1)),
        (1, &t(1) * &t(3)),
        (1, &t(1) * &t(2)),
    ];
    terms.iter().fold(IntPolynomial::zero(2, 4), |acc, (s, p)| &acc + &p.scale(&BigInt::from(*s)))
}

/// Outcome of evaluating one fixture at the quasigrassmannian permutations.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub values: Vec<(String, String)>,
    pub is_class: bool,
    /// The Gale-minimal vertex of the support, when it is unique.
    pub vertex: Option<RSubset>,
    pub is_flowup: bool,
}

/// The tuple `(f(t_{z_B(1)}, ..., t_{z_B(n)}; t))_B` on the vertices of `g`.
pub fn evaluate_on_qgrass(g: &EdgeLabeledGraph, f: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    g.vertices().iter().map(|b| f.evaluate_at_perm(z_of(b).perm())).collect()
}

fn fixture_report(g: &EdgeLabeledGraph, name: &str, f: &IntPolynomial) -> Result<FixtureReport> {
    let values = evaluate_on_qgrass(g, f)?;
    let class_ok = is_class(g, &values);
    let support: Vec<usize> = (0..values.len()).filter(|&i| !values[i].is_zero()).collect();
    let minimal: Vec<usize> = support
        .iter()
        .copied()
        .filter(|&i| support.iter().all(|&j| j == i || !g.vertices()[j].gale_leq(&g.vertices()[i]).unwrap_or(false)))
        .collect();
    let vertex = (minimal.len() == 1).then(|| g.vertices()[minimal[0]].clone());
    let is_flowup = match &vertex {
        None => false,
        Some(v) => {
            let degree = subset_to_partition(v).ohl();
            let sol = FlowupSolution {
                base: v.clone(),
                degree,
                class: GkmClass { values: values.clone() },
                perturbation_dim: 0,
            };
            check_flowup(g, &sol)
        }
    };
    Ok(FixtureReport {
        name: name.to_string(),
        values: g.vertices().iter().zip(&values).map(|(v, p)| (v.label(), p.to_string())).collect(),
        is_class: class_ok,
        vertex,
        is_flowup,
    })
}

/// Checks both fixtures on `QJ_{2,4}`.
pub fn psi_fixture_check() -> Result<Vec<FixtureReport>> {
    let g = EdgeLabeledGraph::quasi_johnson(2, 4)?;
    Ok(vec![fixture_report(&g, "F_12", &fixture_f12())?, fixture_report(&g, "F_2", &fixture_f2())?])
}

/// A class with one positive-degree value perturbed by 1·t_1^d, for negative tests.
pub fn perturb(values: &[IntPolynomial], at: usize, n: usize, d: u32) -> Vec<IntPolynomial> {
    let mut out = values.to_vec();
    let mut e = vec![0u32; n];
    e[0] = d;
    out[at] = &out[at] + &IntPolynomial::monomial(0, n, e, BigInt::one());
    out
}
