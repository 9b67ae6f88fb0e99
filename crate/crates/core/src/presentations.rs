//! Graded integer-lattice computations for the two quasisymmetric
//! presentations of the cohomology ring, and the Betti number census.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{binomial, Composition, Partition};
use crate::lattice::{hnf, is_saturated, IncrementalRank};
use crate::polyring::{f_to_m, fundamental, m_coproduct, stuffle, CompExpansion, IntPolynomial};

/// `b_{2k} = #{λ ∈ Part_{r,n} : OHL(λ) = k}` for `k = 0..=max OHL`.
pub fn betti_by_ohl(r: usize, n: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for lambda in Partition::all_in_box(r, n) {
        let k = lambda.ohl();
        if out.len() <= k {
            out.resize(k + 1, 0);
        }
        out[k] += 1;
    }
    out
}

/// The closed Betti formula as given: the sum over `a ≤ r`, `b ≤ n - 1`,
/// `a + b = k + 1` (with `a, b ≥ 1`) of `C(k - 2, a - 1)`.
pub fn betti_formula_as_given(r: usize, n: usize, k: usize) -> u128 {
    let mut s = 0;
    for a in 1..=r {
        let Some(b) = (k + 1).checked_sub(a) else { continue };
        if (1..n).contains(&b) {
            s += binomial(k as i64 - 2, a as i64 - 1);
        }
    }
    s
}

/// The variant that matches the census: `C(k - 1, a - 1)` over `a ≤ r`,
/// `b ≤ n - r`, `a + b = k + 1`, and `1` for `k = 0`.
pub fn betti_formula_corrected(r: usize, n: usize, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    let mut s = 0;
    for a in 1..=r {
        let Some(b) = (k + 1).checked_sub(a) else { continue };
        if b >= 1 && b <= n - r {
            s += binomial(k as i64 - 1, a as i64 - 1);
        }
    }
    s
}

/// One degree of the first presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDegree {
    pub degree: usize,
    pub ambient_rank: usize,
    pub ideal_rank: usize,
    pub quotient_rank: usize,
    pub torsion_free: bool,
    pub free_basis_matches: bool,
    pub generators: usize,
}

fn compositions_up_to_len(size: usize, max_len: usize) -> Vec<Composition> {
    Composition::all_of_size(size, max_len)
}

/// F-coordinates of a polynomial in `QSym_r` of degree `d`: M-coefficients are
/// read off packed monomials and inverted over coarsenings.
fn f_coordinates(p: &IntPolynomial, basis: &[Composition], r: usize) -> Vec<BigInt> {
    let packed = |a: &Composition| {
        let mut e = vec![0u32; r];
        for (i, &x) in a.parts().iter().enumerate() {
            e[i] = x as u32;
        }
        e
    };
    basis
        .iter()
        .map(|gamma| {
            let mut c = BigInt::zero();
            for beta in gamma.coarsenings() {
                let v = p.coeff(&packed(&beta));
                if (gamma.len() - beta.len()) % 2 == 0 {
                    c += v;
                } else {
                    c -= v;
                }
            }
            c
        })
        .collect()
}

/// Degree pieces of `QSym_r / ⟨F_γ : γ ∉ Comp_{r,n}⟩` for degrees `0..=max_degree`.
///
/// The ideal in degree `d` is spanned by `F_β F_γ` with `γ ∉ Comp_{r,n}`,
/// `ℓ(β), ℓ(γ) ≤ r` and `|β| + |γ| = d`; products are formed as polynomials
/// in `x_1..x_r` and converted back to F-coordinates.
pub fn qsym_quotient(r: usize, n: usize, max_degree: usize) -> Vec<QuotientDegree> {
    let mut cache: HashMap<Composition, IntPolynomial> = HashMap::new();
    let mut fpoly = |a: &Composition| cache.entry(a.clone()).or_insert_with(|| fundamental(a, r)).clone();
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let basis = compositions_up_to_len(d, r);
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for g in 1..=d {
            for gamma in compositions_up_to_len(g, r).into_iter().filter(|c| !c.in_comp(r, n)) {
                let fg = fpoly(&gamma);
                for beta in compositions_up_to_len(d - g, r) {
                    let prod = &fpoly(&beta) * &fg;
                    rows.push(f_coordinates(&prod, &basis, r));
                }
            }
        }
        let free: Vec<Vec<BigInt>> = basis
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.in_comp(r, n))
            .map(|(i, _)| {
                let mut v = vec![BigInt::zero(); basis.len()];
                v[i] = BigInt::one();
                v
            })
            .collect();
        let ideal_hnf = if basis.is_empty() { Vec::new() } else { hnf(&rows) };
        let free_hnf = if basis.is_empty() { Vec::new() } else { hnf(&free) };
        let ideal_rank = ideal_hnf.len();
        out.push(QuotientDegree {
            degree: d,
            ambient_rank: basis.len(),
            ideal_rank,
            quotient_rank: basis.len() - ideal_rank,
            torsion_free: is_saturated(&ideal_hnf),
            free_basis_matches: ideal_hnf == free_hnf,
            generators: rows.len(),
        });
    }
    out
}

/// Graded ranks of the first presentation.
pub fn qsym_quotient_betti(r: usize, n: usize, max_degree: usize) -> Vec<usize> {
    qsym_quotient(r, n, max_degree).into_iter().map(|d| d.quotient_rank).collect()
}

/// Whether, in every degree up to `max_degree`, the ideal lattice equals the
/// lattice spanned by `{F_α : α ∉ Comp_{r,n}}`.
pub fn ideal_free_basis_check(r: usize, n: usize, max_degree: usize) -> bool {
    qsym_quotient(r, n, max_degree).iter().all(|d| d.free_basis_matches)
}

/// Elements of `QSym_r ⊗ QSym_{n-r}` in the basis `M_β(x_1..x_r) ⊗ M_γ(x_{r+1}..x_n)`.
type TensorElement = BTreeMap<(Composition, Composition), BigInt>;

fn tensor_basis(r: usize, s: usize, d: usize) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for d1 in 0..=d {
        for a in compositions_up_to_len(d1, r) {
            for b in compositions_up_to_len(d - d1, s) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// `F_γ(x_1..x_n)` pushed into the tensor product via the M coproduct.
fn generator_image(gamma: &Composition, r: usize, s: usize) -> TensorElement {
    let mut out = TensorElement::new();
    for (delta, c) in f_to_m(gamma) {
        if delta.len() > r + s {
            continue;
        }
        for (left, right) in m_coproduct(&delta) {
            if left.len() <= r && right.len() <= s {
                *out.entry((left, right)).or_default() += &c;
            }
        }
    }
    out
}

fn multiply_basis(elem: &TensorElement, a: &Composition, b: &Composition, r: usize, s: usize) -> TensorElement {
    let mut out = TensorElement::new();
    for ((l, rt), c) in elem {
        let left: CompExpansion = stuffle(a, l, r);
        let right: CompExpansion = stuffle(b, rt, s);
        for (x, cx) in &left {
            for (y, cy) in &right {
                *out.entry((x.clone(), y.clone())).or_default() += c * cx * cy;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// One degree of the second presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorDegree {
    pub degree: usize,
    pub ambient_rank: usize,
    pub ideal_rank: usize,
    pub quotient_rank: usize,
}

/// Degree pieces of `(QSym_r ⊗ QSym_{n-r}) / ⟨F_γ(x_1..x_n) : γ ≠ ∅⟩`.
pub fn tensor_presentation(r: usize, n: usize, max_degree: usize) -> Vec<TensorDegree> {
    let s = n - r;
    let mut out = Vec::new();
    let mut images: HashMap<Composition, TensorElement> = HashMap::new();
    for d in 0..=max_degree {
        let basis = tensor_basis(r, s, d);
        let index: HashMap<&(Composition, Composition), usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut acc = IncrementalRank::new(basis.len());
        'gens: for g in 1..=d {
            for gamma in compositions_up_to_len(g, n) {
                let img = images.entry(gamma.clone()).or_insert_with(|| generator_image(&gamma, r, s)).clone();
                for (a, b) in tensor_basis(r, s, d - g) {
                    // the rank cannot grow past the ambient dimension
                    if acc.is_full() {
                        break 'gens;
                    }
                    let prod = multiply_basis(&img, &a, &b, r, s);
                    let mut row = vec![BigInt::zero(); basis.len()];
                    for (key, c) in prod {
                        row[index[&key]] += c;
                    }
                    acc.insert(&row);
                }
            }
        }
        let ideal_rank = acc.rank();
        out.push(TensorDegree { degree: d, ambient_rank: basis.len(), ideal_rank, quotient_rank: basis.len() - ideal_rank });
    }
    out
}

pub fn tensor_presentation_betti(r: usize, n: usize, max_degree: usize) -> Vec<usize> {
    tensor_presentation(r, n, max_degree).into_iter().map(|d| d.quotient_rank).collect()
}

/// A row of the presentation comparison table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub r: usize,
    pub n: usize,
    pub degree: usize,
    pub rank_presentation1: usize,
    pub rank_presentation2: usize,
    pub rank_oracle: u64,
    /// Degree multiplicity in the flowup basis of the GKM ring.
    pub rank_gkm: u64,
    pub formula_value: u128,
    pub torsion_free: bool,
}

/// The comparison table through degree `max_degree` (default `n + 2`).
pub fn betti_table(r: usize, n: usize, max_degree: usize) -> Vec<BettiRow> {
    let p1 = qsym_quotient(r, n, max_degree);
    let p2 = tensor_presentation(r, n, max_degree);
    let oracle = betti_by_ohl(r, n);
    let gkm = crate::graphs::EdgeLabeledGraph::quasi_johnson(r, n)
        .and_then(|g| crate::gkm::all_flowups(&g))
        .map(|sols| crate::gkm::gkm_quotient_betti(&sols))
        .unwrap_or_default();
    p1.iter()
        .zip(&p2)
        .map(|(a, b)| BettiRow {
            r,
            n,
            degree: a.degree,
            rank_presentation1: a.quotient_rank,
            rank_presentation2: b.quotient_rank,
            rank_oracle: oracle.get(a.degree).copied().unwrap_or(0),
            rank_gkm: gkm.get(a.degree).copied().unwrap_or(0),
            formula_value: betti_formula_as_given(r, n, a.degree),
            torsion_free: a.torsion_free,
        })
        .collect()
}

pub fn betti_csv(rows: &[BettiRow]) -> String {
    let mut s = String::from("r,n,degree,rank_presentation1,rank_presentation2,rank_oracle,rank_gkm,formula_value,torsion_flag\n");
    for row in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.r,
            row.n,
            row.degree,
            row.rank_presentation1,
            row.rank_presentation2,
            row.rank_oracle,
            row.rank_gkm,
            row.formula_value,
            if row.torsion_free { "free" } else { "torsion" }
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census() {
        assert_eq!(betti_by_ohl(2, 4), vec![1, 1, 2, 2]);
        assert_eq!(betti_by_ohl(1, 5), vec![1; 5]);
        assert_eq!(betti_by_ohl(3, 7).iter().sum::<u64>(), 35);
    }

    #[test]
    fn closed_formula_discrepancy() {
        assert_eq!(betti_formula_as_given(2, 4, 2), 1);
        assert_eq!(betti_formula_corrected(2, 4, 2), 2);
        for (r, n) in [(2, 4), (2, 6), (3, 6), (3, 7)] {
            let census = betti_by_ohl(r, n);
            for (k, &b) in census.iter().enumerate() {
                assert_eq!(betti_formula_corrected(r, n, k), b as u128, "(r,n,k)=({r},{n},{k})");
            }
        }
    }

    #[test]
    fn first_presentation_24() {
        let ranks = qsym_quotient_betti(2, 4, 6);
        assert_eq!(ranks, vec![1, 1, 2, 2, 0, 0, 0]);
        assert!(ideal_free_basis_check(2, 4, 6));
        assert_eq!(qsym_quotient_betti(1, 3, 5), vec![1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn second_presentation_24() {
        assert_eq!(tensor_presentation_betti(2, 4, 6), vec![1, 1, 2, 2, 0, 0, 0]);
        assert_eq!(tensor_presentation_betti(3, 3, 3), vec![1, 0, 0, 0]);
    }
}
