//! Schur polynomials from semistandard tableaux, standard tableaux with
//! their descent compositions, and Littlewood-Richardson coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{f_expansion, CompExpansion, IntPolynomial};
use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};

/// Enumerates fillings of the skew shape `outer / inner` row by row (top to
/// bottom, left to right) that increase weakly along rows and strictly down
/// columns, with entries in `1..=max`; `visit` sees the filling by rows.
fn for_each_ssyt(outer: &Partition, inner: &Partition, max: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
    let rows = outer.len();
    let mut fill: Vec<Vec<usize>> = (1..=rows).map(|i| vec![0; outer.part(i)]).collect();
    let cells: Vec<(usize, usize)> =
        (1..=rows).flat_map(|i| (inner.part(i) + 1..=outer.part(i)).map(move |j| (i, j))).collect();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        max: usize,
        fill: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if k == cells.len() {
            visit(fill);
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > inner.part(i) + 1 {
            lo = lo.max(fill[i - 1][j - 2]);
        }
        if i > 1 && j > inner.part(i - 1) {
            lo = lo.max(fill[i - 2][j - 1] + 1);
        }
        for v in lo..=max {
            fill[i - 1][j - 1] = v;
            go(k + 1, cells, inner, max, fill, visit);
        }
        fill[i - 1][j - 1] = 0;
    }
    go(0, &cells, inner, max, &mut fill, visit);
}

/// `s_λ(x_1..x_r)` as the content generating function of SSYT.
pub fn schur(lambda: &Partition, r: usize) -> IntPolynomial {
    skew_schur(lambda, &Partition::empty(), r)
}

/// `s_{λ/μ}(x_1..x_r)`.
pub fn skew_schur(outer: &Partition, inner: &Partition, r: usize) -> IntPolynomial {
    let mut p = IntPolynomial::zero(r, 0);
    if !inner.is_contained_in(outer) {
        return p;
    }
    for_each_ssyt(outer, inner, r, &mut |fill| {
        let mut e = vec![0u32; r];
        for (i, row) in fill.iter().enumerate() {
            for &v in row.iter().skip(inner.part(i + 1)) {
                e[v - 1] += 1;
            }
        }
        p.add_term(e, BigInt::one());
    });
    p
}

/// Standard Young tableaux of shape `λ`, as row lists.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    fn go(x: usize, n: usize, lambda: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if x > n {
            out.push(rows.clone());
            return;
        }
        for i in 0..rows.len() {
            let fits = rows[i].len() < lambda.part(i + 1) && (i == 0 || rows[i - 1].len() > rows[i].len());
            if fits {
                rows[i].push(x);
                go(x + 1, n, lambda, rows, out);
                rows[i].pop();
            }
        }
    }
    go(1, n, lambda, &mut rows, &mut out);
    out
}

/// The descent composition of a standard tableau: `i` is a descent when
/// `i + 1` sits in a strictly lower row.
pub fn tableau_descent_composition(t: &[Vec<usize>]) -> Composition {
    let n: usize = t.iter().map(Vec::len).sum();
    let mut row_of = vec![0; n + 1];
    for (i, row) in t.iter().enumerate() {
        for &v in row {
            row_of[v] = i;
        }
    }
    let des: Vec<usize> = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect();
    Composition::from_descents(n, &des).expect("descents lie in [n-1]")
}

/// F-expansion of `s_λ` by counting standard tableaux by descent composition.
pub fn schur_f_expansion_syt(lambda: &Partition) -> CompExpansion {
    let mut out = CompExpansion::new();
    for t in standard_tableaux(lambda) {
        *out.entry(tableau_descent_composition(&t)).or_default() += 1;
    }
    out
}

/// `[F_α] s_μ` by the standard-tableau descent rule.
pub fn f_coefficient_in_schur_syt(alpha: &Composition, mu: &Partition) -> BigInt {
    schur_f_expansion_syt(mu).get(alpha).cloned().unwrap_or_default()
}

/// `[F_α] s_μ` by expanding `s_μ` in enough variables and solving the
/// unitriangular F/M system.
pub fn f_coefficient_in_schur_linear(alpha: &Composition, mu: &Partition) -> BigInt {
    if alpha.size() != mu.size() {
        return BigInt::zero();
    }
    let vars = alpha.len().max(mu.len()).max(1);
    let e = f_expansion(&schur(mu, vars), vars).expect("Schur polynomials are symmetric");
    e.get(alpha).cloned().unwrap_or_default()
}

/// Expands a symmetric polynomial in the Schur basis by peeling leading
/// monomials in lexicographic order.
pub fn schur_expansion(f: &IntPolynomial, nvars: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let mut rest = f.with_vars(nvars, 0)?;
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.terms().iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("leading monomial {lead:?} is not a partition; input not symmetric")));
        }
        let lambda = Partition::new(lead.iter().map(|&v| v as usize).collect())?;
        rest = &rest - &schur(&lambda, nvars).scale(&c);
        out.insert(lambda, c);
    }
    Ok(out)
}

/// `c^η_{ν,μ}`: the coefficient of `s_η` in `s_ν s_μ`, by exact polynomial
/// multiplication in `n_vars` variables.
pub fn lr_coefficient(nu: &Partition, mu: &Partition, eta: &Partition, n_vars: usize) -> Result<BigInt> {
    if n_vars < eta.len() {
        return Err(Error::InsufficientVariables { needed: eta.len(), got: n_vars });
    }
    if nu.size() + mu.size() != eta.size() || !nu.is_contained_in(eta) || !mu.is_contained_in(eta) {
        return Ok(BigInt::zero());
    }
    let prod = &schur(nu, n_vars) * &schur(mu, n_vars);
    let exp = schur_expansion(&prod, n_vars)?;
    let c = exp.get(eta).cloned().unwrap_or_default();
    debug_assert!(!c.is_negative());
    Ok(c)
}

/// `c^η_{ν,μ}` by counting Littlewood-Richardson tableaux: semistandard
/// fillings of `η/ν` with content `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient_tableaux(nu: &Partition, mu: &Partition, eta: &Partition) -> u64 {
    if nu.size() + mu.size() != eta.size() || !nu.is_contained_in(eta) {
        return 0;
    }
    let mut count = 0u64;
    let max = mu.len().max(1);
    for_each_ssyt(eta, nu, max, &mut |fill| {
        let mut seen = vec![0usize; max + 1];
        for (i, row) in fill.iter().enumerate() {
            for &v in row.iter().skip(nu.part(i + 1)).rev() {
                seen[v] += 1;
                if v > 1 && seen[v] > seen[v - 1] {
                    return;
                }
            }
        }
        if (1..=max).all(|v| seen[v] == mu.part(v)) {
            count += 1;
        }
    });
    count
}

/// Partitions `η ⊇ ν` with `η / ν` a horizontal strip of size `k` (Pieri rule).
pub fn pieri_row(nu: &Partition, k: usize) -> Vec<Partition> {
    let len = nu.len() + 1;
    let mut out = Vec::new();
    let mut add = vec![0usize; len];
    fn go(row: usize, left: usize, nu: &Partition, add: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == add.len() {
            if left == 0 {
                let parts: Vec<usize> = (0..add.len()).map(|i| nu.part(i + 1) + add[i]).collect();
                out.push(Partition::new(parts).expect("strip keeps rows decreasing"));
            }
            return;
        }
        // row i+1 may grow up to the length of row i in ν
        let cap = if row == 0 { left } else { (nu.part(row) - nu.part(row + 1)).min(left) };
        for a in 0..=cap {
            add[row] = a;
            go(row + 1, left - a, nu, add, out);
        }
        add[row] = 0;
    }
    go(0, k, nu, &mut add, &mut out);
    out.sort();
    out
}

/// The ribbon `η / ν` with row lengths `α_1, ..., α_ℓ` from top to bottom,
/// its bottom row starting in column 1.
pub fn ribbon_shape(alpha: &Composition) -> (Partition, Partition) {
    let l = alpha.len();
    if l == 0 {
        return (Partition::empty(), Partition::empty());
    }
    let a = alpha.parts();
    let mut start = vec![0usize; l];
    start[l - 1] = 1;
    for i in (0..l - 1).rev() {
        start[i] = start[i + 1] + a[i + 1] - 1;
    }
    let eta: Vec<usize> = (0..l).map(|i| start[i] + a[i] - 1).collect();
    let nu: Vec<usize> = (0..l).map(|i| start[i] - 1).collect();
    (Partition::new(eta).expect("ribbon rows decrease"), Partition::new(nu).expect("ribbon rows decrease"))
}

/// Converts small nonnegative big integers for reporting.
pub fn small(c: &BigInt) -> i64 {
    c.to_i64().expect("coefficient fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_schurs() {
        assert_eq!(schur(&p(&[1]), 2).to_string(), "x1 + x2");
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
        assert_eq!(schur(&p(&[2, 1]), 2).to_string(), "x1^2*x2 + x1*x2^2");
        assert!(schur(&Partition::empty(), 3) == IntPolynomial::one(3, 0));
    }

    #[test]
    fn syt_counts() {
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[2, 2, 1])).len(), 5);
    }

    #[test]
    fn pieri_and_lr() {
        let one = p(&[1]);
        assert_eq!(lr_coefficient(&Partition::empty(), &one, &one, 1).unwrap(), BigInt::one());
        assert_eq!(lr_coefficient(&one, &p(&[1, 1]), &p(&[2, 1]), 2).unwrap(), BigInt::one());
        assert_eq!(lr_coefficient(&one, &p(&[2]), &p(&[2, 1]), 2).unwrap(), BigInt::one());
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3).unwrap(), BigInt::from(2));
        assert_eq!(lr_coefficient_tableaux(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert!(lr_coefficient(&one, &one, &p(&[1, 1]), 1).is_err());
        assert_eq!(pieri_row(&one, 1), vec![p(&[1, 1]), p(&[2])]);
    }

    #[test]
    fn ribbon_of_213() {
        let (eta, nu) = ribbon_shape(&Composition::new(vec![2, 1, 3]).unwrap());
        assert_eq!(eta, p(&[4, 3, 3]));
        assert_eq!(nu, p(&[2, 2]));
    }
}
