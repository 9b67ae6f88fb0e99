use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::RSubset;

/// A permutation of `{1..n}` in one-line notation, 1-indexed.
///
/// Cycle notation follows the convention `(a b c)`: `a -> b -> c -> a`,
/// so the backwards cycle of a block `{b_1 < ... < b_s}` sends `b_t` to
/// `b_{t-1}` and `b_1` to `b_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr", into = "PermutationRepr")]
pub struct Permutation {
    oneline: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    oneline: Vec<usize>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;
    fn try_from(repr: PermutationRepr) -> Result<Self> {
        Permutation::new(repr.oneline)
    }
}

impl From<Permutation> for PermutationRepr {
    fn from(p: Permutation) -> Self {
        PermutationRepr { oneline: p.oneline }
    }
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{oneline:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline })
    }

    pub(crate) fn from_vec_unchecked(oneline: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(oneline.clone()).is_ok());
        Permutation { oneline }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { oneline: (1..=n).collect() }
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { oneline: (1..=n).rev().collect() }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidPermutation(format!("transposition ({i} {j}) in S_{n}")));
        }
        let mut w = Self::identity(n);
        w.oneline.swap(i - 1, j - 1);
        Ok(w)
    }

    /// Builds a permutation from disjoint cycles, `(c_0 c_1 ...)` meaning
    /// `c_0 -> c_1 -> ... -> c_0`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut oneline: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (t, &c) in cycle.iter().enumerate() {
                if c == 0 || c > n || used[c] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?} in S_{n}")));
                }
                used[c] = true;
                oneline[c - 1] = cycle[(t + 1) % cycle.len()];
            }
        }
        Ok(Permutation { oneline })
    }

    /// The backwards cycle `(b_s b_{s-1} ... b_1)` of a block, as a permutation of `[n]`.
    pub fn backward_cycle(n: usize, block: &[usize]) -> Result<Self> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        sorted.reverse();
        Self::from_cycles(n, &[sorted])
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (pos, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation { oneline: inv }
    }

    /// The composite `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation { oneline: other.oneline.iter().map(|&v| self.apply(v)).collect() }
    }

    /// Left multiplication `(i j) w`, which swaps the values `i` and `j`.
    pub fn left_transpose(&self, i: usize, j: usize) -> Self {
        let oneline = self
            .oneline
            .iter()
            .map(|&v| if v == i { j } else if v == j { i } else { v })
            .collect();
        Permutation { oneline }
    }

    /// Right multiplication `w s_k`, which swaps positions `k` and `k+1`.
    pub fn right_simple(&self, k: usize) -> Self {
        let mut w = self.clone();
        w.oneline.swap(k - 1, k);
        w
    }

    /// Left inversion set `{(i,j) : i<j, w^{-1}(i) > w^{-1}(j)}`, sorted.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let inv = self.inverse();
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if inv.apply(i) > inv.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// The image of a set of values, sorted increasingly.
    pub fn act_on(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// `w · [r]` as an r-subset of `[n]`.
    pub fn act_on_initial(&self, r: usize) -> RSubset {
        let elems = self.act_on(&(1..=r).collect::<Vec<_>>());
        RSubset::new(self.n(), elems).expect("image of [r] is a valid subset")
    }

    /// Cycle supports, each sorted increasingly, ordered by minimum.
    pub fn cycle_supports(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cycle.push(c);
                c = self.apply(c);
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }

    /// `Some((i, j))` with `i < j` when this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (1..=self.n()).filter(|&i| self.apply(i) != i).collect();
        match moved.as_slice() {
            [i, j] if self.apply(*i) == *j => Some((*i, *j)),
            _ => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(p, &v)| p + 1 == v)
    }

    /// Cycle notation with fixed points omitted, largest entry of each cycle first.
    pub fn cycle_string(&self) -> String {
        let mut parts = Vec::new();
        let mut supports = self.cycle_supports();
        supports.sort_by_key(|c| std::cmp::Reverse(*c.last().unwrap()));
        for support in supports {
            if support.len() < 2 {
                continue;
            }
            let start = *support.last().unwrap();
            let mut cyc = vec![start];
            let mut c = self.apply(start);
            while c != start {
                cyc.push(c);
                c = self.apply(c);
            }
            let body: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            parts.push(format!("({})", body.join(" ")));
        }
        if parts.is_empty() {
            "id".to_string()
        } else {
            parts.concat()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let body: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", body.join(" "))
        }
    }
}

/// Bruhat order via the prefix-dominance (tableau) criterion: `u <= v` iff for
/// every `k` the sorted values `u([k])` are entrywise at most those of `v([k])`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::ShapeMismatch(format!("S_{} vs S_{}", u.n(), v.n())));
    }
    let n = u.n();
    let mut pu: Vec<usize> = Vec::with_capacity(n);
    let mut pv: Vec<usize> = Vec::with_capacity(n);
    for k in 0..n {
        insert_sorted(&mut pu, u.oneline[k]);
        insert_sorted(&mut pv, v.oneline[k]);
        if pu.iter().zip(&pv).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_follow_the_arrow_convention() {
        let w = Permutation::from_cycles(6, &[vec![6, 5, 1], vec![3, 2]]).unwrap();
        assert_eq!(w.to_string(), "632415");
        assert_eq!(w.cycle_string(), "(6 5 1)(3 2)");
    }

    #[test]
    fn left_transpose_swaps_values() {
        let w = Permutation::new(vec![2, 3, 1]).unwrap();
        let t = Permutation::transposition(3, 1, 3).unwrap();
        assert_eq!(w.left_transpose(1, 3), t.compose(&w));
        assert_eq!(w.right_simple(1), w.compose(&Permutation::transposition(3, 1, 2).unwrap()));
    }

    #[test]
    fn bruhat_examples() {
        let w4321 = Permutation::longest(4);
        let w3412 = Permutation::new(vec![3, 4, 1, 2]).unwrap();
        assert!(bruhat_leq(&w3412, &w4321).unwrap());
        assert!(!bruhat_leq(&w4321, &w3412).unwrap());
        assert!(bruhat_leq(&Permutation::identity(4), &w3412).unwrap());
    }

    #[test]
    fn length_matches_inversions() {
        let w = Permutation::new(vec![5, 3, 2, 1, 4]).unwrap();
        assert_eq!(w.length(), w.inversions().len());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        let json = r#"{"oneline":[2,2]}"#;
        assert!(serde_json::from_str::<Permutation>(json).is_err());
    }
}
