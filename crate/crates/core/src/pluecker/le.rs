//! Le diagrams inside `λ_A`, their Γ-networks, and the chart points those
//! networks parametrize.
//!
//! Boxes are `(row, column)`, 1-indexed from the top left. Row `ρ` belongs
//! to `a_{r+1-ρ}` and column `c` to the `c`-th smallest element of `[n] \ A`,
//! so box `(ρ, c)` is the inversion `(i, j)` with `i` the column element and
//! `j` the row element.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::{minor, ratio_sign_closed_form, schubert_chart, Matrix};
use crate::combinatorics::{subset_to_partition, Partition, RSubset};
use crate::error::{Error, Result};
use crate::noncrossing::{inv_nc, z_of};
use crate::polyring::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeDiagram {
    pub base: RSubset,
    pub lambda: Partition,
    pub boxes: BTreeSet<(usize, usize)>,
}

/// Box of the inversion `(i, j)` of `A`.
pub fn box_of(a: &RSubset, (i, j): (usize, usize)) -> Option<(usize, usize)> {
    let k = a.elems().iter().position(|&x| x == j)? + 1;
    let c = a.complement().iter().position(|&x| x == i)? + 1;
    (i < j).then_some((a.r() + 1 - k, c))
}

/// Inversion `(i, j)` of `A` in box `(ρ, c)`.
pub fn inversion_of(a: &RSubset, (row, col): (usize, usize)) -> Option<(usize, usize)> {
    let j = *a.elems().get(a.r().checked_sub(row)?)?;
    let i = *a.complement().get(col.checked_sub(1)?)?;
    (i < j).then_some((i, j))
}

impl LeDiagram {
    pub fn new(a: &RSubset, boxes: BTreeSet<(usize, usize)>) -> Result<Self> {
        let lambda = subset_to_partition(a);
        if let Some(b) = boxes.iter().find(|&&(ro, c)| ro == 0 || c == 0 || c > lambda.part(ro)) {
            return Err(Error::ShapeMismatch(format!("box {b:?} outside {lambda}")));
        }
        Ok(LeDiagram { base: a.clone(), lambda, boxes })
    }

    pub fn empty(a: &RSubset) -> Self {
        LeDiagram::new(a, BTreeSet::new()).expect("empty")
    }

    /// Every box of `λ`.
    pub fn full(a: &RSubset) -> Self {
        let lambda = subset_to_partition(a);
        let boxes = lambda.boxes().into_iter().collect();
        LeDiagram { base: a.clone(), lambda, boxes }
    }

    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> =
            self.boxes.iter().map(|&b| inversion_of(&self.base, b).expect("box inside λ")).collect();
        v.sort_unstable();
        v
    }

    /// A box strictly below an `L` box in its column and strictly right of an
    /// `L` box in its row lies in `L`.
    pub fn is_le(&self) -> bool {
        self.lambda.boxes().into_iter().all(|(ro, c)| {
            let above = self.boxes.iter().any(|&(r2, c2)| c2 == c && r2 < ro);
            let left = self.boxes.iter().any(|&(r2, c2)| r2 == ro && c2 < c);
            !(above && left) || self.boxes.contains(&(ro, c))
        })
    }

    /// No `L` box has both an `L` box above it in its column and an `L` box to its left in its row.
    pub fn is_noncrossing(&self) -> bool {
        self.boxes.iter().all(|&(ro, c)| {
            let above = self.boxes.iter().any(|&(r2, c2)| c2 == c && r2 < ro);
            let left = self.boxes.iter().any(|&(r2, c2)| r2 == ro && c2 < c);
            !(above && left)
        })
    }

    /// Dots for `L`, `+` for the rest of `λ`, one line per row.
    pub fn render(&self) -> String {
        (1..=self.lambda.len())
            .map(|ro| {
                (1..=self.lambda.part(ro)).map(|c| if self.boxes.contains(&(ro, c)) { '•' } else { '+' }).collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The boxes of the quasisymmetric inversions of `A`.
pub fn le_of(a: &RSubset) -> LeDiagram {
    let boxes = inv_nc(&z_of(a)).into_iter().map(|inv| box_of(a, inv).expect("inversion of A")).collect();
    LeDiagram::new(a, boxes).expect("boxes inside λ")
}

pub fn is_noncrossing_le(l: &LeDiagram) -> bool {
    l.is_le() && l.is_noncrossing()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum NetNode {
    /// The row source labelled by an element of `A`.
    Source(usize),
    /// The column sink labelled by an element of `[n] \ A`.
    Sink(usize),
    Box(usize, usize),
}

/// The box position carrying an edge's weight, if any.
pub type EdgeWeight = Option<(usize, usize)>;

/// The directed planar network of a Le diagram: from each row source
/// leftwards through the row's boxes, and from each box down its column.
/// A step into a box along its row carries that box's weight.
#[derive(Clone, Debug, Serialize)]
pub struct GammaNetwork {
    pub diagram: LeDiagram,
    /// `(from, to, weighted box)`.
    pub edges: Vec<(NetNode, NetNode, EdgeWeight)>,
}

impl GammaNetwork {
    pub fn new(l: &LeDiagram) -> Self {
        let a = &l.base;
        let r = a.r();
        let comp = a.complement();
        let mut edges = Vec::new();
        for ro in 1..=r {
            let src = NetNode::Source(a.elems()[r - ro]);
            let mut row: Vec<usize> = l.boxes.iter().filter(|b| b.0 == ro).map(|b| b.1).collect();
            row.sort_unstable_by(|x, y| y.cmp(x));
            let mut prev = src;
            for &c in &row {
                edges.push((prev, NetNode::Box(ro, c), Some((ro, c))));
                prev = NetNode::Box(ro, c);
            }
        }
        for (ci, &sink) in comp.iter().enumerate() {
            let c = ci + 1;
            let col: Vec<usize> = l.boxes.iter().filter(|b| b.1 == c).map(|b| b.0).collect();
            for w in col.windows(2) {
                edges.push((NetNode::Box(w[0], c), NetNode::Box(w[1], c), None));
            }
            if let Some(&last) = col.last() {
                edges.push((NetNode::Box(last, c), NetNode::Sink(sink), None));
            }
        }
        GammaNetwork { diagram: l.clone(), edges }
    }

    fn out_edges(&self) -> BTreeMap<NetNode, Vec<(NetNode, EdgeWeight)>> {
        let mut out: BTreeMap<NetNode, Vec<_>> = BTreeMap::new();
        for &(u, v, w) in &self.edges {
            out.entry(u).or_default().push((v, w));
        }
        out
    }

    /// All directed walks from source `j` to sink `i`, as lists of weighted boxes.
    pub fn paths(&self, j: usize, i: usize) -> Vec<Vec<(usize, usize)>> {
        let out = self.out_edges();
        let mut found = Vec::new();
        let mut stack = vec![(NetNode::Source(j), Vec::new())];
        while let Some((node, weights)) = stack.pop() {
            if node == NetNode::Sink(i) {
                found.push(weights);
                continue;
            }
            for &(next, w) in out.get(&node).map(Vec::as_slice).unwrap_or(&[]) {
                let mut wts = weights.clone();
                wts.extend(w);
                stack.push((next, wts));
            }
        }
        found.sort();
        found
    }

    /// Whether the network is acyclic (edges only move left or down).
    pub fn is_acyclic(&self) -> bool {
        self.edges.iter().all(|(u, v, _)| match (u, v) {
            (NetNode::Box(r1, c1), NetNode::Box(r2, c2)) => (r1 == r2 && c2 < c1) || (c1 == c2 && r2 > r1),
            _ => true,
        })
    }

    /// Index of each box among the weight variables.
    pub fn weight_index(&self) -> BTreeMap<(usize, usize), usize> {
        self.diagram.boxes.iter().enumerate().map(|(k, &b)| (b, k)).collect()
    }

    /// `Σ_{P: j → i} wt_P` as a polynomial in one variable per box.
    pub fn path_sum(&self, j: usize, i: usize) -> IntPolynomial {
        let idx = self.weight_index();
        let nv = idx.len();
        let mut total = IntPolynomial::zero(nv, 0);
        for p in self.paths(j, i) {
            let mut e = vec![0u32; nv];
            for b in p {
                e[idx[&b]] += 1;
            }
            total.add_term(e, BigInt::one());
        }
        total
    }
}

/// Free entries from path weights, signed so that `Δ_{(A \ j) ∪ i} / Δ_A`
/// equals the path sum. Rejects diagrams that are not noncrossing Le.
pub fn network_point(l: &LeDiagram, weights: &[BigInt]) -> Result<Matrix> {
    if !is_noncrossing_le(l) {
        return Err(Error::CrossingLeDiagram);
    }
    if weights.len() != l.boxes.len() {
        return Err(Error::ShapeMismatch(format!("{} weights for {} boxes", weights.len(), l.boxes.len())));
    }
    let net = GammaNetwork::new(l);
    let chart = schubert_chart(&l.base);
    let values: Vec<BigInt> = chart
        .free
        .iter()
        .map(|&(i, k, (_, j))| {
            let sum = evaluate(&net.path_sum(j, i), weights);
            sum * BigInt::from(ratio_sign_closed_form(&l.base, i, k))
        })
        .collect();
    chart.point(&values)
}

fn evaluate(p: &IntPolynomial, x: &[BigInt]) -> BigInt {
    p.terms()
        .iter()
        .map(|(e, c)| e.iter().zip(x).fold(c.clone(), |acc, (&k, v)| acc * v.pow(k)))
        .sum()
}

/// Symbolic network point: entries are signed path-sum polynomials.
pub fn network_point_symbolic(l: &LeDiagram) -> Result<Vec<Vec<IntPolynomial>>> {
    if !is_noncrossing_le(l) {
        return Err(Error::CrossingLeDiagram);
    }
    let net = GammaNetwork::new(l);
    let nv = l.boxes.len();
    let a = &l.base;
    let mut m = vec![vec![IntPolynomial::zero(nv, 0); a.r()]; a.n()];
    for (k, &ak) in a.elems().iter().enumerate() {
        m[ak - 1][k] = IntPolynomial::one(nv, 0);
    }
    for (i, k, (_, j)) in schubert_chart(a).free {
        m[i - 1][k - 1] = net.path_sum(j, i).scale(&BigInt::from(ratio_sign_closed_form(a, i, k)));
    }
    Ok(m)
}

/// Determinant over polynomials by cofactor expansion (small `r`).
pub fn poly_determinant(rows: &[Vec<IntPolynomial>], nv: usize) -> IntPolynomial {
    let n = rows.len();
    if n == 0 {
        return IntPolynomial::one(nv, 0);
    }
    let mut total = IntPolynomial::zero(nv, 0);
    for c in 0..n {
        if rows[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPolynomial>> =
            rows[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = &rows[0][c] * &poly_determinant(&minor, nv);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Outcome of the positivity checks on a network point.
#[derive(Clone, Debug, Serialize)]
pub struct NetworkReport {
    pub base: RSubset,
    pub boxes: usize,
    pub unique_paths: bool,
    pub weights_match_row_products: bool,
    pub ratios_match_paths: bool,
    /// Every maximal minor of the symbolic point has nonnegative coefficients.
    pub totally_nonnegative: bool,
}

/// Checks a noncrossing Le diagram's network against the combinatorial predictions.
pub fn check_network(l: &LeDiagram) -> Result<NetworkReport> {
    let net = GammaNetwork::new(l);
    let a = &l.base;
    let mut unique = true;
    let mut rowprod = true;
    for ro in 1..=a.r() {
        let j = a.elems()[a.r() - ro];
        for &i in &a.complement() {
            let paths = net.paths(j, i);
            let expected = box_of(a, (i, j)).filter(|b| l.boxes.contains(b));
            match expected {
                None => unique &= paths.is_empty(),
                Some((_, c)) => {
                    unique &= paths.len() == 1;
                    let weakly_right: Vec<(usize, usize)> =
                        l.boxes.iter().copied().filter(|&(r2, c2)| r2 == ro && c2 >= c).collect();
                    let mut got = paths.first().cloned().unwrap_or_default();
                    got.sort_unstable();
                    rowprod &= got == weakly_right;
                }
            }
        }
    }
    let sym = network_point_symbolic(l)?;
    let subsets = RSubset::all(a.r(), a.n());
    let minors: BTreeMap<RSubset, IntPolynomial> = subsets
        .iter()
        .map(|s| (s.clone(), poly_determinant(&s.elems().iter().map(|&i| sym[i - 1].clone()).collect::<Vec<_>>(), l.boxes.len())))
        .collect();
    let base_minor = &minors[a];
    let mut ratios = *base_minor == IntPolynomial::one(l.boxes.len(), 0);
    for (i, j) in a.inversions() {
        let swapped = a.swap(j, i)?;
        ratios &= minors[&swapped] == net.path_sum(j, i);
    }
    let tnn = minors.values().all(|p| p.terms().values().all(|c| !c.is_negative()));
    Ok(NetworkReport {
        base: a.clone(),
        boxes: l.boxes.len(),
        unique_paths: unique,
        weights_match_row_products: rowprod,
        ratios_match_paths: ratios,
        totally_nonnegative: tnn,
    })
}

/// Every maximal minor of a numeric point is nonnegative.
pub fn is_totally_nonnegative(m: &Matrix) -> bool {
    let (n, r) = (m.len(), m.first().map_or(0, Vec::len));
    RSubset::all(r, n).iter().all(|s| !minor(m, s).expect("shape").is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> RSubset {
        RSubset::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn diagram_1379() {
        let a = s(10, &[1, 3, 7, 9]);
        let l = le_of(&a);
        let expected: BTreeSet<(usize, usize)> =
            [(1, 1), (2, 1), (3, 1), (2, 2), (2, 3), (2, 4), (1, 5)].into_iter().collect();
        assert_eq!(l.boxes, expected);
        assert!(is_noncrossing_le(&l));
        assert!(is_noncrossing_le(&LeDiagram::empty(&a)));
        assert!(!LeDiagram::full(&s(4, &[3, 4])).is_noncrossing());
    }

    #[test]
    fn network_1379() {
        let a = s(10, &[1, 3, 7, 9]);
        let l = le_of(&a);
        let net = GammaNetwork::new(&l);
        assert!(net.is_acyclic());
        assert_eq!(net.paths(7, 2), vec![vec![(2, 4), (2, 3), (2, 2), (2, 1)]]);
        let rep = check_network(&l).unwrap();
        assert!(rep.unique_paths && rep.weights_match_row_products && rep.ratios_match_paths && rep.totally_nonnegative);
    }

    #[test]
    fn single_box_and_unit_weights() {
        let a = s(4, &[1, 3]);
        let l = LeDiagram::new(&a, [(1, 1)].into_iter().collect()).unwrap();
        let m = network_point(&l, &[BigInt::from(5)]).unwrap();
        assert_eq!(m[1][1], BigInt::from(5));
        let a = s(6, &[2, 4, 6]);
        let l = le_of(&a);
        let m = network_point(&l, &vec![BigInt::one(); l.boxes.len()]).unwrap();
        for (i, k, inv) in schubert_chart(&a).free {
            let expect_one = l.inversions().contains(&inv);
            assert_eq!(m[i - 1][k - 1].abs().is_one(), expect_one);
        }
        assert!(is_totally_nonnegative(&m));
        assert!(network_point(&LeDiagram::full(&s(4, &[3, 4])), &vec![BigInt::one(); 4]).is_err());
    }
}
