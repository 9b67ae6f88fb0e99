//! Moment polytopes of the quasisymmetric cells: H-descriptions, admissible
//! fixed-point sets, zigzag subproducts, translated Richardson fixed points,
//! components and the face poset of the moment complex.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinatorics::{
    binomial, comp_to_subset, grassmannian_perm, partition_to_subset, subset_to_partition, Composition, Permutation,
    RSubset,
};
use crate::error::{Error, Result};
use crate::lattice::rank;
use crate::noncrossing::ZigzagTree;
use crate::polyring::ribbon_shape;

/// The intervals `E_1, ..., E_k` (filling `[r-ℓ+1, r]` left to right) and
/// `D_k, ..., D_1` (filling from `r+1` left to right) of a composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalDecomposition {
    pub e: Vec<Vec<usize>>,
    /// `d[g]` is `D_{g+1}`.
    pub d: Vec<Vec<usize>>,
}

impl IntervalDecomposition {
    pub fn new(alpha: &Composition, r: usize) -> Result<Self> {
        let parse = alpha.ribbon_parse().ok_or_else(|| Error::InvalidComposition("empty composition".into()))?;
        if alpha.len() > r {
            return Err(Error::InvalidComposition(format!("{alpha} is longer than {r}")));
        }
        let k = parse.d.len();
        let mut e = Vec::with_capacity(k);
        let mut next = r + 1 - alpha.len();
        for &size in &parse.e {
            e.push((next..next + size).collect());
            next += size;
        }
        let mut d = vec![Vec::new(); k];
        let mut next = r + 1;
        for g in (0..k).rev() {
            d[g] = (next..next + parse.d[g]).collect();
            next += parse.d[g];
        }
        Ok(IntervalDecomposition { e, d })
    }

    pub fn k(&self) -> usize {
        self.e.len()
    }

    fn e_index(&self, x: usize) -> Option<usize> {
        self.e.iter().position(|s| s.contains(&x)).map(|g| g + 1)
    }

    fn d_index(&self, x: usize) -> Option<usize> {
        self.d.iter().position(|s| s.contains(&x)).map(|g| g + 1)
    }
}

/// `z` restricted to `[lo, hi]`, summed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalSum {
    pub lo: usize,
    pub hi: usize,
    pub bound: i64,
}

impl IntervalSum {
    fn sum(&self, z: &[u8]) -> i64 {
        if self.lo > self.hi {
            return 0;
        }
        z[self.lo - 1..self.hi].iter().map(|&x| x as i64).sum()
    }
}

/// A polytope in `[0,1]^n ∩ {Σz = r}` given by fixed coordinates and
/// interval-sum inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPolytope {
    pub n: usize,
    pub r: usize,
    /// `(coordinate, value)`.
    pub fixed: Vec<(usize, u8)>,
    /// `Σ_{lo..hi} z ≤ bound`.
    pub upper: Vec<IntervalSum>,
    /// `Σ_{lo..hi} z ≥ bound`.
    pub lower: Vec<IntervalSum>,
}

impl HPolytope {
    /// Membership of a 0/1 vector with coordinate sum `r`.
    pub fn contains(&self, z: &[u8]) -> bool {
        z.len() == self.n
            && z.iter().map(|&x| x as usize).sum::<usize>() == self.r
            && self.fixed.iter().all(|&(i, v)| z[i - 1] == v)
            && self.upper.iter().all(|c| c.sum(z) <= c.bound)
            && self.lower.iter().all(|c| c.sum(z) >= c.bound)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// The inequality description of the moment polytope of the cell of `A`,
/// with `a_0 = r+1` and `b_0 = r`.
pub fn h_description(a: &RSubset) -> HPolytope {
    let (n, r, k) = (a.n(), a.r(), a.k());
    let mut fixed = Vec::new();
    for i in 1..a.a(k) {
        fixed.push((i, 1));
    }
    for i in a.b(k) + 1..=n {
        fixed.push((i, 0));
    }
    let upper = (1..=k)
        .map(|i| IntervalSum { lo: a.a(i), hi: a.b(i), bound: (r + 1) as i64 - a.a(i) as i64 })
        .collect();
    let mut lower = Vec::new();
    for i in 1..=k {
        for q in a.a(i)..a.a(i - 1) {
            if q <= r {
                lower.push(IntervalSum { lo: q, hi: a.b(i - 1), bound: r as i64 - q as i64 });
            }
        }
    }
    HPolytope { n, r, fixed, upper, lower }
}

/// Every `r`-subset whose indicator lies in the polytope.
pub fn zero_one_points(p: &HPolytope) -> Vec<RSubset> {
    RSubset::all(p.r, p.n).into_iter().filter(|s| p.contains(&s.indicator())).collect()
}

/// Pairs `(a_p, b_p)` of `L |_r R`, nested around `r` and listed from the
/// outside in: the smallest element of `L` meets the largest of `R`.
fn admissibility_pairs(b: &RSubset) -> Vec<(usize, usize)> {
    let mut l = b.l_part();
    l.reverse();
    let mut rr = b.r_part();
    rr.reverse();
    l.into_iter().zip(rr).collect()
}

/// `j_1 ≤ i_1 < j_2 ≤ i_2 < ...` where `a_p ∈ E_{i_p}` and `b_p ∈ D_{j_p}`.
pub fn is_admissible(alpha: &Composition, b: &RSubset) -> Result<bool> {
    let r = b.r();
    if alpha.is_empty() {
        return Ok(b.k() == 0);
    }
    let dec = IntervalDecomposition::new(alpha, r)?;
    let mut prev_i = 0usize;
    for (p, (a, bb)) in admissibility_pairs(b).into_iter().enumerate() {
        let (Some(i), Some(j)) = (dec.e_index(a), dec.d_index(bb)) else { return Ok(false) };
        if j > i || (p > 0 && prev_i >= j) {
            return Ok(false);
        }
        prev_i = i;
    }
    Ok(true)
}

/// All `α`-admissible `r`-subsets of `[n]`.
pub fn admissible_sets(alpha: &Composition, r: usize, n: usize) -> Result<Vec<RSubset>> {
    if !alpha.in_comp(r, n) {
        return Err(Error::InvalidComposition(format!("{alpha} is not in Comp_{{{r},{n}}}")));
    }
    let mut out = Vec::new();
    for b in RSubset::all(r, n) {
        if is_admissible(alpha, &b)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// The orbit of `[r]` under subproducts of the zigzag transpositions.
pub fn zigzag_fixed_points(alpha: &Composition, r: usize, n: usize) -> Result<Vec<RSubset>> {
    if alpha.is_empty() {
        return Ok(vec![RSubset::initial(r, n)]);
    }
    Ok(ZigzagTree::new(alpha, r, n)?.fixed_points().into_iter().collect())
}

/// The data of the translated Richardson description of the cell of `α`.
#[derive(Clone, Debug, Serialize)]
pub struct RichardsonData {
    pub eta: Vec<usize>,
    pub nu: Vec<usize>,
    pub w: Vec<usize>,
    pub x: Vec<usize>,
    pub fixed_points: Vec<RSubset>,
}

/// `x = w_ν · w` with `w = 1 ⋯ (r-ℓ) r (r-1) ⋯ (r-ℓ+1) (r+1) ⋯ n`, and the
/// points `x⁻¹·B` for `ν ⊆ λ_B ⊆ η`.
pub fn richardson_data(alpha: &Composition, r: usize, n: usize) -> Result<RichardsonData> {
    if !alpha.in_comp(r, n) {
        return Err(Error::InvalidComposition(format!("{alpha} is not in Comp_{{{r},{n}}}")));
    }
    let l = alpha.len();
    let (eta, nu) = ribbon_shape(alpha);
    let mut w: Vec<usize> = (1..=r - l).collect();
    w.extend((r - l + 1..=r).rev());
    w.extend(r + 1..=n);
    let w = Permutation::new(w)?;
    let w_nu = grassmannian_perm(&partition_to_subset(&nu, r, n)?);
    let x = w_nu.compose(&w);
    let xinv = x.inverse();
    let mut pts: Vec<RSubset> = RSubset::all(r, n)
        .into_iter()
        .filter(|b| {
            let lb = subset_to_partition(b);
            nu.is_contained_in(&lb) && lb.is_contained_in(&eta)
        })
        .map(|b| RSubset::from_unsorted(n, xinv.act_on(b.elems())).expect("permutation image"))
        .collect();
    pts.sort();
    Ok(RichardsonData {
        eta: eta.parts().to_vec(),
        nu: nu.parts().to_vec(),
        w: w.oneline().to_vec(),
        x: x.oneline().to_vec(),
        fixed_points: pts,
    })
}

pub fn richardson_fixed_points(alpha: &Composition, r: usize, n: usize) -> Result<Vec<RSubset>> {
    Ok(richardson_data(alpha, r, n)?.fixed_points)
}

/// Maximal compositions `|α| = n - 1` of `Comp_{r,n}`.
pub fn components(r: usize, n: usize) -> Vec<Composition> {
    Composition::all_in_comp(r, n).into_iter().filter(|a| a.size() + 1 == n).collect()
}

/// `C(n-2, r-1)`.
pub fn component_count_formula(r: usize, n: usize) -> u128 {
    binomial(n as i64 - 2, r as i64 - 1)
}

/// Dimension of the affine hull of a set of 0/1 points.
pub fn affine_dimension(points: &[RSubset]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let base = first.indicator();
    let rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.indicator().iter().zip(&base).map(|(&x, &y)| BigInt::from(x as i64 - y as i64)).collect())
        .collect();
    rank(&rows)
}

/// The four routes to the fixed points of the cell of `α`, compared.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointCheck {
    pub alpha: Vec<usize>,
    pub admissible: Vec<RSubset>,
    pub polytope_points: Vec<RSubset>,
    pub zigzag: Vec<RSubset>,
    pub richardson: Vec<RSubset>,
    pub dimension: usize,
}

impl FixedPointCheck {
    pub fn all_agree(&self) -> bool {
        self.admissible == self.polytope_points && self.admissible == self.zigzag && self.admissible == self.richardson
    }
}

pub fn check_fixed_points(alpha: &Composition, r: usize, n: usize) -> Result<FixedPointCheck> {
    let admissible = admissible_sets(alpha, r, n)?;
    let polytope_points = zero_one_points(&h_description(&comp_to_subset(alpha, r, n)?));
    let dimension = affine_dimension(&admissible);
    Ok(FixedPointCheck {
        alpha: alpha.parts().to_vec(),
        polytope_points,
        zigzag: zigzag_fixed_points(alpha, r, n)?,
        richardson: richardson_fixed_points(alpha, r, n)?,
        admissible,
        dimension,
    })
}

/// `(a, 1^b, α_1, ..., α_k)` with `b = r - k - 1` and `a = n - 1 - b - |α|`,
/// when those are admissible sizes.
pub fn extension_recipe(alpha: &Composition, r: usize, n: usize) -> Option<Composition> {
    let b = (r as i64) - (alpha.len() as i64) - 1;
    let a = (n as i64) - 1 - b - (alpha.size() as i64);
    if b < 0 || a < 1 {
        return None;
    }
    let mut parts = vec![a as usize];
    parts.extend(std::iter::repeat_n(1, b as usize));
    parts.extend_from_slice(alpha.parts());
    Composition::new(parts).ok()
}

#[derive(Clone, Debug, Serialize)]
pub struct Extension {
    pub alpha: Vec<usize>,
    /// The uniform recipe's output, if it is defined.
    pub recipe: Option<Vec<usize>>,
    /// The recipe lands in `Comp_{r,n}`, is maximal, and contains the fixed points of `α`.
    pub recipe_ok: bool,
    /// Some maximal composition whose fixed points contain those of `α`.
    pub witness: Option<Vec<usize>>,
}

/// Containment order on `Comp_{r,n}` by fixed-point sets.
#[derive(Clone, Debug, Serialize)]
pub struct FacePoset {
    pub r: usize,
    pub n: usize,
    pub elements: Vec<Composition>,
    pub fixed_points: Vec<BTreeSet<RSubset>>,
    /// `(i, j)` with `elements[i] < elements[j]`.
    pub relations: Vec<(usize, usize)>,
    pub extensions: Vec<Extension>,
}

impl FacePoset {
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.fixed_points[i].is_subset(&self.fixed_points[j])
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.elements[i].size() + 1 == self.n).collect()
    }

    /// Hasse diagram as DOT.
    pub fn to_dot(&self) -> String {
        let label = |i: usize| format!("\"{}\"", self.elements[i]);
        let mut s = String::new();
        let _ = writeln!(s, "digraph faces_{}_{} {{", self.r, self.n);
        for i in 0..self.elements.len() {
            let _ = writeln!(s, "  {};", label(i));
        }
        let rel: BTreeSet<(usize, usize)> = self.relations.iter().copied().collect();
        for &(i, j) in &self.relations {
            let covered = (0..self.elements.len()).any(|m| rel.contains(&(i, m)) && rel.contains(&(m, j)));
            if !covered {
                let _ = writeln!(s, "  {} -> {};", label(i), label(j));
            }
        }
        s.push_str("}\n");
        s
    }
}

pub fn face_poset(r: usize, n: usize) -> Result<FacePoset> {
    let elements = Composition::all_in_comp(r, n);
    let fixed_points: Vec<BTreeSet<RSubset>> = elements
        .iter()
        .map(|a| admissible_sets(a, r, n).map(|v| v.into_iter().collect()))
        .collect::<Result<_>>()?;
    let m = elements.len();
    let relations: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && fixed_points[i].is_subset(&fixed_points[j]))
        .collect();
    let maximal: Vec<usize> = (0..m).filter(|&i| elements[i].size() + 1 == n).collect();
    let extensions = (0..m)
        .map(|i| {
            let alpha = &elements[i];
            let recipe = extension_recipe(alpha, r, n);
            let recipe_ok = recipe.as_ref().is_some_and(|beta| {
                beta.in_comp(r, n)
                    && beta.size() + 1 == n
                    && admissible_sets(beta, r, n)
                        .map(|pts| fixed_points[i].iter().all(|p| pts.contains(p)))
                        .unwrap_or(false)
            });
            let witness = maximal
                .iter()
                .find(|&&j| fixed_points[i].is_subset(&fixed_points[j]))
                .map(|&j| elements[j].parts().to_vec());
            Extension { alpha: alpha.parts().to_vec(), recipe: recipe.map(|c| c.parts().to_vec()), recipe_ok, witness }
        })
        .collect();
    Ok(FacePoset { r, n, elements, fixed_points, relations, extensions })
}
