//! Matrix charts of Schubert and quasisymmetric Schubert cells, exact
//! Plücker coordinates, and sampled checks of the Plücker vanishing
//! description.
//!
//! Matrices are `n × r` and stored by rows of the `n × r` representative:
//! `m[i - 1][k - 1]` is the entry in row `i`, column `k`. Text renderings
//! are transposed (one line per column), which is the customary display.

pub mod flag;
pub mod le;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::RSubset;
use crate::error::{Error, Result};
use crate::graphs::{removed_edges_between, EdgeLabeledGraph};
use crate::noncrossing::{inv_nc, z_of};

/// An exact `n × r` matrix.
pub type Matrix = Vec<Vec<BigInt>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Entry {
    Zero,
    One,
    Free,
}

/// A `{0, 1, *}` pattern on `n × r` matrices with free entries indexed by
/// inversions `(i, a_k)` of the base subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellChart {
    pub base: RSubset,
    pub entries: Vec<Vec<Entry>>,
    /// `(row i, column k, inversion (i, a_k))` for every free entry.
    pub free: Vec<(usize, usize, (usize, usize))>,
}

impl CellChart {
    fn from_inversions(a: &RSubset, invs: &BTreeSet<(usize, usize)>) -> Self {
        let (n, r) = (a.n(), a.r());
        let mut entries = vec![vec![Entry::Zero; r]; n];
        let mut free = Vec::new();
        for (k, &ak) in a.elems().iter().enumerate() {
            entries[ak - 1][k] = Entry::One;
            for i in 1..ak {
                if invs.contains(&(i, ak)) {
                    entries[i - 1][k] = Entry::Free;
                    free.push((i, k + 1, (i, ak)));
                }
            }
        }
        free.sort_unstable();
        CellChart { base: a.clone(), entries, free }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn r(&self) -> usize {
        self.base.r()
    }

    /// `*`, `1`, `0` grid with one line per column of the representative.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for k in 0..self.r() {
            let line: Vec<&str> = self
                .entries
                .iter()
                .map(|row| match row[k] {
                    Entry::Zero => "0",
                    Entry::One => "1",
                    Entry::Free => "*",
                })
                .collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Fills the pattern: free entries take `values` in the order of [`CellChart::free`].
    pub fn point(&self, values: &[BigInt]) -> Result<Matrix> {
        if values.len() != self.free.len() {
            return Err(Error::ShapeMismatch(format!("{} values for {} free entries", values.len(), self.free.len())));
        }
        let mut m: Matrix = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| if *e == Entry::One { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        for (&(i, k, _), v) in self.free.iter().zip(values) {
            m[i - 1][k - 1] = v.clone();
        }
        Ok(m)
    }

    /// A point with free entries uniform in `[-bound, bound]`.
    pub fn random_point(&self, rng: &mut impl Rng, bound: i64) -> Matrix {
        let values: Vec<BigInt> = self.free.iter().map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
        self.point(&values).expect("sized to the chart")
    }
}

/// The Schubert cell chart: free entries at every inversion of `A`.
pub fn schubert_chart(a: &RSubset) -> CellChart {
    CellChart::from_inversions(a, &a.inversions().into_iter().collect())
}

/// The quasisymmetric chart: free entries only at the given quasisymmetric inversions.
pub fn nc_chart_with(a: &RSubset, invq: &[(usize, usize)]) -> CellChart {
    CellChart::from_inversions(a, &invq.iter().copied().collect())
}

/// The quasisymmetric chart, with inversions taken from `InvNC(z_A)`.
pub fn nc_chart(a: &RSubset) -> CellChart {
    nc_chart_with(a, &inv_nc(&z_of(a)))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `Δ_A(M) = det(M_{i,j})_{i ∈ A, j ∈ [r]}`.
pub fn minor(m: &[Vec<BigInt>], a: &RSubset) -> Result<BigInt> {
    let r = a.r();
    if m.len() != a.n() || m.iter().any(|row| row.len() != r) {
        return Err(Error::ShapeMismatch(format!("matrix is not {} × {r}", a.n())));
    }
    let sub: Vec<Vec<BigInt>> = a.elems().iter().map(|&i| m[i - 1].clone()).collect();
    Ok(determinant(&sub))
}

/// The sign `s` in `Δ_{(A \ a_k) ∪ i} = s · M_{i,k}` on the chart of `A`,
/// derived by evaluating the filling with a single free entry equal to 1.
pub fn ratio_sign(a: &RSubset, i: usize, k: usize) -> Result<i8> {
    let chart = schubert_chart(a);
    let pos = chart
        .free
        .iter()
        .position(|&(fi, fk, _)| (fi, fk) == (i, k))
        .ok_or(Error::NotAnInversion { i, j: a.elems()[k - 1], of: a.label() })?;
    let mut values = vec![BigInt::zero(); chart.free.len()];
    values[pos] = BigInt::one();
    let m = chart.point(&values)?;
    let swapped = a.swap(a.elems()[k - 1], i)?;
    let d = minor(&m, &swapped)?;
    Ok(if d.is_positive() { 1 } else { -1 })
}

/// `(-1)^{|A ∩ (i, a_k)|}`: the row-reordering sign in the ratio law.
pub fn ratio_sign_closed_form(a: &RSubset, i: usize, k: usize) -> i8 {
    let ak = a.elems()[k - 1];
    let between = a.elems().iter().filter(|&&x| i < x && x < ak).count();
    if between % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Seeded generator for job `stream` of a sampling run.
pub fn job_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Entry bound for random fillings.
pub const SAMPLE_BOUND: i64 = 1000;

#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub r: usize,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub removed_edges: Vec<(String, String)>,
    pub points_checked: usize,
    /// Removed-edge products that failed to vanish on a quasisymmetric chart point.
    pub violations: Vec<String>,
    /// Points where `Δ_{A'} ≠ 0` for some `A' ≰ A`, or `Δ_A ≠ 1`.
    pub triangularity_failures: Vec<String>,
    pub converse_points: usize,
    /// Full-chart points with a nonzero forbidden entry but every removed-edge product zero.
    pub converse_failures: Vec<String>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.triangularity_failures.is_empty() && self.converse_failures.is_empty()
    }
}

fn all_minors(m: &[Vec<BigInt>], subsets: &[RSubset]) -> Vec<BigInt> {
    subsets.iter().map(|s| minor(m, s).expect("shape")).collect()
}

/// Samples every quasisymmetric chart and checks the removed-edge products,
/// plus the generic converse on full Schubert charts.
pub fn verify_vanishing(r: usize, n: usize, samples: usize, seed: u64) -> Result<VanishingReport> {
    let j = EdgeLabeledGraph::johnson(r, n)?;
    let qj = EdgeLabeledGraph::quasi_johnson(r, n)?;
    let removed = removed_edges_between(&j, &qj);
    let subsets = qj.vertices().to_vec();
    let pos = |s: &RSubset| qj.index_of(s).expect("vertex");
    let removed_idx: Vec<(usize, usize)> = removed.iter().map(|(a, b)| (pos(a), pos(b))).collect();

    struct Cell {
        violations: Vec<String>,
        triangular: Vec<String>,
        converse_points: usize,
        converse: Vec<String>,
    }
    let cells: Vec<Cell> = (0..subsets.len())
        .into_par_iter()
        .map(|c| {
            let a = &subsets[c];
            let chart = nc_chart_with(a, &crate::graphs::invq(a, &qj));
            let full = schubert_chart(a);
            let mut rng = job_rng(seed, c as u64);
            let mut out = Cell { violations: Vec::new(), triangular: Vec::new(), converse_points: 0, converse: Vec::new() };
            for s in 0..samples {
                let m = chart.random_point(&mut rng, SAMPLE_BOUND);
                let d = all_minors(&m, &subsets);
                for &(x, y) in &removed_idx {
                    if !(&d[x] * &d[y]).is_zero() {
                        out.violations.push(format!("cell {} sample {s}: Δ{}Δ{} ≠ 0", a.label(), subsets[x].label(), subsets[y].label()));
                    }
                }
                for (t, dt) in d.iter().enumerate() {
                    let below = subsets[t].gale_leq(a).expect("same shape");
                    if (t == c && !dt.is_one()) || (!below && !dt.is_zero()) {
                        out.triangular.push(format!("cell {} sample {s}: Δ{} = {dt}", a.label(), subsets[t].label()));
                    }
                }
            }
            if full.free.len() > chart.free.len() {
                let forbidden: Vec<usize> =
                    (0..full.free.len()).filter(|&p| !chart.free.iter().any(|f| f.2 == full.free[p].2)).collect();
                for s in 0..samples {
                    let mut values: Vec<BigInt> =
                        full.free.iter().map(|_| BigInt::from(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))).collect();
                    let f = forbidden[s % forbidden.len()];
                    if values[f].is_zero() {
                        values[f] = BigInt::one();
                    }
                    let m = full.point(&values).expect("sized");
                    let d = all_minors(&m, &subsets);
                    out.converse_points += 1;
                    if removed_idx.iter().all(|&(x, y)| (&d[x] * &d[y]).is_zero()) {
                        out.converse.push(format!("cell {} sample {s}: no nonzero removed-edge product", a.label()));
                    }
                }
            }
            out
        })
        .collect();

    let mut report = VanishingReport {
        r,
        n,
        samples,
        seed,
        removed_edges: removed.iter().map(|(a, b)| (a.label(), b.label())).collect(),
        points_checked: subsets.len() * samples,
        violations: Vec::new(),
        triangularity_failures: Vec::new(),
        converse_points: 0,
        converse_failures: Vec::new(),
    };
    for cell in cells {
        report.violations.extend(cell.violations);
        report.triangularity_failures.extend(cell.triangular);
        report.converse_points += cell.converse_points;
        report.converse_failures.extend(cell.converse);
    }
    Ok(report)
}

/// Renders a matrix as JSON arrays of integer strings.
pub fn matrix_json(m: &[Vec<BigInt>]) -> serde_json::Value {
    serde_json::Value::Array(
        m.iter()
            .map(|row| serde_json::Value::Array(row.iter().map(|x| serde_json::Value::String(x.to_string())).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> RSubset {
        RSubset::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn charts() {
        assert_eq!(nc_chart(&s(4, &[3, 4])).render(), "* * 1 0\n* 0 0 1\n");
        let a = s(10, &[1, 3, 7, 9]);
        let full = schubert_chart(&a);
        let nc = nc_chart(&a);
        assert_eq!(full.free.len(), 10);
        assert_eq!(nc.free.len(), 7);
        let forced: Vec<(usize, usize)> =
            full.free.iter().map(|f| f.2).filter(|inv| !nc.free.iter().any(|g| g.2 == *inv)).collect();
        assert_eq!(forced, vec![(4, 9), (5, 9), (6, 9)]);
        assert!(schubert_chart(&RSubset::initial(3, 6)).free.is_empty());
    }

    #[test]
    fn determinants() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(determinant(&m(&[&[2, 1], &[7, 4]])), BigInt::from(1));
        assert_eq!(determinant(&m(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]])), BigInt::from(-3));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn ratio_signs_match_closed_form() {
        for a in RSubset::all(3, 6) {
            for (i, k, _) in schubert_chart(&a).free {
                assert_eq!(ratio_sign(&a, i, k).unwrap(), ratio_sign_closed_form(&a, i, k));
            }
        }
    }

    #[test]
    fn vanishing_24() {
        let rep = verify_vanishing(2, 4, 20, 7).unwrap();
        assert_eq!(rep.removed_edges, vec![("23".to_string(), "34".to_string())]);
        assert!(rep.passed(), "{rep:?}");
        let rep = verify_vanishing(1, 4, 5, 7).unwrap();
        assert!(rep.removed_edges.is_empty() && rep.passed());
    }
}
