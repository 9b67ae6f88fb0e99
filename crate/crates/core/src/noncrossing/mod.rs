//! Noncrossing partitions as permutations, the Kreweras order,
//! quasigrassmannian permutations and noncrossing inversions.

mod zigzag;

pub use zigzag::{Child, ZigzagNode, ZigzagTree};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{bruhat_leq, Composition, Permutation, RSubset};
use crate::error::{Error, Result};

/// A permutation in `NC_n` together with its blocks.
///
/// Blocks are sorted increasingly and listed by minimum; the permutation is
/// the product of the backwards cycles of the blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NcRepr", into = "NcRepr")]
pub struct NcPermutation {
    perm: Permutation,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct NcRepr {
    oneline: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<NcRepr> for NcPermutation {
    type Error = Error;
    fn try_from(repr: NcRepr) -> Result<Self> {
        let w = NcPermutation::from_permutation(Permutation::new(repr.oneline)?)?;
        let mut blocks = repr.blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        if blocks != w.blocks {
            return Err(Error::NotNoncrossing("blocks disagree with the one-line form".into()));
        }
        Ok(w)
    }
}

impl From<NcPermutation> for NcRepr {
    fn from(w: NcPermutation) -> Self {
        NcRepr { oneline: w.perm.oneline().to_vec(), blocks: w.blocks }
    }
}

/// Whether a set partition (blocks sorted increasingly) has no crossing
/// `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_noncrossing_partition(blocks: &[Vec<usize>]) -> bool {
    for (x, bx) in blocks.iter().enumerate() {
        for by in blocks.iter().skip(x + 1) {
            if blocks_cross(bx, by) {
                return false;
            }
        }
    }
    true
}

fn blocks_cross(bx: &[usize], by: &[usize]) -> bool {
    // Some element of one block lies strictly between two elements of the
    // other, and some element of the first lies outside that gap.
    let crosses = |p: &[usize], q: &[usize]| {
        p.windows(2).any(|w| {
            let inside = q.iter().any(|&y| w[0] < y && y < w[1]);
            let outside = q.iter().any(|&y| y < w[0] || y > w[1]);
            inside && outside
        })
    };
    crosses(bx, by) || crosses(by, bx)
}

impl NcPermutation {
    /// From a noncrossing set partition of `[n]`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::NotNoncrossing(format!("{blocks:?} is not a set partition of [{n}]")));
                }
                seen[x] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::NotNoncrossing(format!("{blocks:?} does not cover [{n}]")));
        }
        if !is_noncrossing_partition(&blocks) {
            return Err(Error::NotNoncrossing(format!("{blocks:?} has a crossing")));
        }
        Ok(Self::from_blocks_unchecked(n, blocks))
    }

    fn from_blocks_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut oneline: Vec<usize> = (1..=n).collect();
        for b in &blocks {
            let s = b.len();
            for t in 0..s {
                // w(b_t) = b_{t-1}, w(b_1) = b_s
                oneline[b[t] - 1] = if t == 0 { b[s - 1] } else { b[t - 1] };
            }
        }
        NcPermutation { perm: Permutation::from_vec_unchecked(oneline), blocks }
    }

    /// Accepts `w` iff it is a product of backwards cycles on noncrossing blocks.
    pub fn from_permutation(perm: Permutation) -> Result<Self> {
        let blocks = perm.cycle_supports();
        let candidate = NcPermutation::from_blocks(perm.n(), blocks)?;
        if candidate.perm != perm {
            return Err(Error::NotNoncrossing(format!("{perm} is not a product of backwards cycles")));
        }
        Ok(candidate)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_blocks_unchecked(n, (1..=n).map(|i| vec![i]).collect())
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn block_index(&self, x: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&x)).expect("element of [n]")
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NcPermutation) -> bool {
        self.blocks.iter().all(|b| {
            let target = other.block_index(b[0]);
            b.iter().all(|&x| other.blocks[target].contains(&x))
        })
    }
}

impl fmt::Display for NcPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm)
    }
}

/// Membership in `NC_n`.
pub fn is_nc(w: &Permutation) -> bool {
    NcPermutation::from_permutation(w.clone()).is_ok()
}

/// All of `NC_n` (Catalan many), sorted by one-line notation.
pub fn enumerate_nc(n: usize) -> Result<Vec<NcPermutation>> {
    enumerate_nc_bounded(n, crate::max_n())
}

pub fn enumerate_nc_bounded(n: usize, bound: usize) -> Result<Vec<NcPermutation>> {
    if n == 0 || n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    place(1, n, &mut blocks, &mut out);
    out.sort_by(|a, b| a.perm.cmp(&b.perm));
    Ok(out)
}

/// Recursive block placement: element `x` opens a new block or joins an
/// existing block without creating a crossing with the elements placed so far.
fn place(x: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<NcPermutation>) {
    if x > n {
        out.push(NcPermutation::from_blocks_unchecked(n, normalized(blocks)));
        return;
    }
    for idx in 0..blocks.len() {
        if can_join(blocks, idx) {
            blocks[idx].push(x);
            place(x + 1, n, blocks, out);
            blocks[idx].pop();
        }
    }
    blocks.push(vec![x]);
    place(x + 1, n, blocks, out);
    blocks.pop();
}

/// Joining the (new, largest) element to block `idx` is safe iff no other
/// block has elements both below and above the current maximum of `idx`.
fn can_join(blocks: &[Vec<usize>], idx: usize) -> bool {
    let last = *blocks[idx].last().unwrap();
    blocks
        .iter()
        .enumerate()
        .all(|(j, b)| j == idx || !(b.iter().any(|&y| y > last) && b.iter().any(|&y| y < last)))
}

fn normalized(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut b = blocks.to_vec();
    b.sort();
    b
}

/// Noncrossing descents via the criterion `i ∈ {w(i), w(i+1)}`.
pub fn nc_descents(w: &NcPermutation) -> Vec<usize> {
    let p = w.perm();
    p.descents().into_iter().filter(|&i| p.apply(i) == i || p.apply(i + 1) == i).collect()
}

/// Noncrossing descents by definition: `i ∈ Des(w)` with `w s_i ∈ NC_n`.
pub fn nc_descents_definitional(w: &NcPermutation) -> Vec<usize> {
    let p = w.perm();
    p.descents().into_iter().filter(|&i| is_nc(&p.right_simple(i))).collect()
}

/// `w` is r-quasigrassmannian: `DesNC(w) ⊆ {r}`.
pub fn is_quasigrassmannian(w: &NcPermutation, r: usize) -> bool {
    nc_descents(w).iter().all(|&d| d == r)
}

/// `z_A = ∏_i (b_i (b_i - 1) ... (b_{i-1} + 1) a_i)`.
pub fn z_of(a: &RSubset) -> NcPermutation {
    let n = a.n();
    let k = a.k();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; n + 1];
    for p in 1..=k {
        let mut block = vec![a.a(p)];
        block.extend(a.b(p - 1) + 1..=a.b(p));
        for &x in &block {
            used[x] = true;
        }
        blocks.push(block);
    }
    blocks.extend((1..=n).filter(|&x| !used[x]).map(|x| vec![x]));
    NcPermutation::from_blocks(n, blocks).expect("z_A has noncrossing nested blocks")
}

/// `∏_i (a_i, b_i)`, a noncrossing element of the fiber over `A`.
pub fn pair_product(a: &RSubset) -> NcPermutation {
    let n = a.n();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; n + 1];
    for p in 1..=a.k() {
        let (x, y) = (a.a(p), a.b(p));
        used[x] = true;
        used[y] = true;
        blocks.push(vec![x, y]);
    }
    blocks.extend((1..=n).filter(|&x| !used[x]).map(|x| vec![x]));
    NcPermutation::from_blocks(n, blocks).expect("pairs (a_i, b_i) are nested")
}

/// The fiber `NC_n^A = {w ∈ NC_n : w·[r] = A}`.
pub fn fiber(a: &RSubset) -> Result<Vec<NcPermutation>> {
    let all = enumerate_nc(a.n())?;
    Ok(fiber_from(a, &all))
}

/// The fiber over `A` drawn from a precomputed enumeration of `NC_n`.
pub fn fiber_from(a: &RSubset, all: &[NcPermutation]) -> Vec<NcPermutation> {
    all.iter().filter(|w| &w.perm().act_on_initial(a.r()) == a).cloned().collect()
}

/// `InvNC(w)` by the explicit criterion: `j` is the largest element of its
/// cycle, and either `i` lies in the same cycle, or `i < j < w^{-1}(i)` with
/// `i` maximal for that property.
pub fn inv_nc(w: &NcPermutation) -> Vec<(usize, usize)> {
    let p = w.perm();
    let inv = p.inverse();
    let n = p.n();
    let mut out = Vec::new();
    for block in w.blocks() {
        let j = *block.last().unwrap();
        for &i in block.iter().filter(|&&i| i < j) {
            out.push((i, j));
        }
        let straddling = (1..j).filter(|&i| j < inv.apply(i)).max();
        if let Some(i) = straddling {
            if !block.contains(&i) {
                out.push((i, j));
            }
        }
    }
    debug_assert!(out.iter().all(|&(i, j)| i < j && j <= n && inv.apply(i) > inv.apply(j)));
    out.sort_unstable();
    out.dedup();
    out
}

/// `InvNC(w)` by definition: `(i, j) ∈ Inv(w)` with `(i j) w ∈ NC_n`.
pub fn inv_nc_definitional(w: &NcPermutation) -> Vec<(usize, usize)> {
    let p = w.perm();
    p.inversions().into_iter().filter(|&(i, j)| is_nc(&p.left_transpose(i, j))).collect()
}

/// Which side of the split/merge dichotomy an inversion of `z_A` falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvKind {
    Split,
    Merge,
}

/// Closed form of `InvNC(z_A)` through the `(L |_r R)` data, tagged by kind.
pub fn split_merge_tagged(a: &RSubset) -> Vec<((usize, usize), InvKind)> {
    let k = a.k();
    let mut out = Vec::new();
    for p in 1..=k {
        out.push(((a.a(p), a.b(p)), InvKind::Split));
        for q in a.b(p - 1) + 1..a.b(p) {
            out.push(((q, a.b(p)), InvKind::Split));
        }
    }
    for p in 1..k {
        out.push(((a.a(p + 1), a.b(p)), InvKind::Merge));
    }
    for p in 0..k {
        for q in a.a(p + 1) + 1..a.a(p) {
            out.push(((a.a(p + 1), q), InvKind::Merge));
        }
    }
    out.sort_unstable_by_key(|&(pair, _)| pair);
    out
}

/// Closed form of `InvNC(z_A)`.
pub fn split_merge_invnc(a: &RSubset) -> Vec<(usize, usize)> {
    split_merge_tagged(a).into_iter().map(|(pair, _)| pair).collect()
}

/// The composition of a quasigrassmannian permutation:
/// `(|B_{a_k}| - 1, |B_{a_k + 1}|, ..., |B_r|)`, with `B_i` the block of minimum `i`.
pub fn comp_of(w: &NcPermutation, r: usize) -> Result<Composition> {
    if !is_quasigrassmannian(w, r) {
        return Err(Error::NotQuasiGrassmannian(w.to_string()));
    }
    let a = w.perm().act_on_initial(r);
    if a.k() == 0 {
        return Ok(Composition::empty());
    }
    let a_k = *a.l_part().last().unwrap();
    let mut parts = Vec::new();
    for i in a_k..=r {
        let block = w
            .blocks()
            .iter()
            .find(|b| b[0] == i)
            .ok_or_else(|| Error::NotQuasiGrassmannian(format!("{w}: no block with minimum {i}")))?;
        parts.push(if i == a_k { block.len() - 1 } else { block.len() });
    }
    Composition::new(parts)
}

/// Covers of `u` in the Kreweras (refinement) order, each of the form `(i j) u`.
pub fn kreweras_covers(u: &NcPermutation) -> Vec<NcPermutation> {
    let n = u.n();
    let blocks = u.blocks();
    let mut out = Vec::new();
    for x in 0..blocks.len() {
        for y in x + 1..blocks.len() {
            let mut merged: Vec<Vec<usize>> = Vec::with_capacity(blocks.len() - 1);
            let mut joined = blocks[x].clone();
            joined.extend_from_slice(&blocks[y]);
            joined.sort_unstable();
            merged.push(joined);
            merged.extend(blocks.iter().enumerate().filter(|&(t, _)| t != x && t != y).map(|(_, b)| b.clone()));
            let Ok(w) = NcPermutation::from_blocks(n, merged) else { continue };
            // Covers must differ from u by a left transposition.
            if w.perm().compose(&u.perm().inverse()).as_transposition().is_some() {
                out.push(w);
            }
        }
    }
    out.sort_by(|a, b| a.perm().cmp(b.perm()));
    out
}

/// Covers by brute force over transpositions: `τ u ∈ NC_n`, `u` refines `τ u`,
/// and `τ u` has one block fewer.
pub fn kreweras_covers_bruteforce(u: &NcPermutation) -> Vec<NcPermutation> {
    let n = u.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let Ok(w) = NcPermutation::from_permutation(u.perm().left_transpose(i, j)) else { continue };
            if w.blocks().len() + 1 == u.blocks().len() && u.refines(&w) {
                out.push(w);
            }
        }
    }
    out.sort_by(|a, b| a.perm().cmp(b.perm()));
    out.dedup();
    out
}

/// Whether `z_A` is the unique Bruhat-minimum of its fiber.
pub fn is_fiber_minimum(a: &RSubset, fiber: &[NcPermutation]) -> bool {
    let z = z_of(a);
    fiber.contains(&z) && fiber.iter().all(|w| bruhat_leq(z.perm(), w.perm()).unwrap_or(false))
}

/// Reduces `w` in its fiber by repeatedly applying `w ↦ w s_k` with
/// `k ∈ DesNC(w) \ {r}`; returns the chain, ending at a quasigrassmannian element.
pub fn reduce_to_quasigrassmannian(w: &NcPermutation, r: usize) -> Vec<NcPermutation> {
    let mut chain = vec![w.clone()];
    loop {
        let cur = chain.last().unwrap();
        let Some(k) = nc_descents(cur).into_iter().find(|&k| k != r) else { return chain };
        let next = NcPermutation::from_permutation(cur.perm().right_simple(k))
            .expect("noncrossing descents stay in NC_n");
        chain.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> RSubset {
        RSubset::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn catalan_counts() {
        let cat = [1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in (1..=7).zip(&cat) {
            assert_eq!(enumerate_nc(n).unwrap().len(), c);
        }
        assert!(enumerate_nc_bounded(13, 12).is_err());
    }

    #[test]
    fn cycle_notation_example() {
        let w = NcPermutation::from_blocks(6, vec![vec![1, 5, 6], vec![2, 3], vec![4]]).unwrap();
        assert_eq!(w.to_string(), "632415");
    }

    #[test]
    fn z_examples() {
        let z = z_of(&s(10, &[1, 3, 7, 9]));
        assert_eq!(z.perm().cycle_string(), "(9 8 2)(7 6 5 4)");
        assert_eq!(z_of(&s(4, &[3, 4])).to_string(), "4321");
        assert!(z_of(&RSubset::initial(3, 6)).perm().is_identity());
        assert_eq!(nc_descents(&z), vec![4]);
    }

    #[test]
    fn descents_of_4321() {
        let w = NcPermutation::from_blocks(4, vec![vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(w.to_string(), "4321");
        assert_eq!(nc_descents(&w), vec![2]);
        assert_eq!(nc_descents_definitional(&w), vec![2]);
    }

    #[test]
    fn invnc_examples() {
        let w = NcPermutation::from_permutation(Permutation::new(vec![5, 3, 2, 1, 4]).unwrap()).unwrap();
        assert_eq!(inv_nc(&w), vec![(1, 3), (1, 5), (2, 3), (4, 5)]);
        let z = NcPermutation::from_permutation(Permutation::new(vec![6, 5, 3, 2, 4, 1]).unwrap()).unwrap();
        assert_eq!(inv_nc(&z), vec![(1, 5), (1, 6), (2, 3), (2, 5), (4, 5)]);
        assert_eq!(z, z_of(&s(6, &[3, 5, 6])));
    }

    #[test]
    fn complement_of_invq_for_1379() {
        let a = s(10, &[1, 3, 7, 9]);
        let q = split_merge_invnc(&a);
        let rest: Vec<_> = a.inversions().into_iter().filter(|x| !q.contains(x)).collect();
        assert_eq!(rest, vec![(4, 9), (5, 9), (6, 9)]);
    }

    #[test]
    fn comp_of_2_1_4() {
        let a = s(10, &[1, 3, 7, 9]);
        assert_eq!(comp_of(&z_of(&a), 4).unwrap().parts(), &[2, 1, 4]);
        assert!(comp_of(&NcPermutation::identity(5), 2).unwrap().is_empty());
    }

    #[test]
    fn kreweras_small() {
        let id2 = NcPermutation::identity(2);
        let covers = kreweras_covers(&id2);
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].to_string(), "21");
        let top = NcPermutation::from_blocks(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(kreweras_covers(&top).is_empty());
    }
}
