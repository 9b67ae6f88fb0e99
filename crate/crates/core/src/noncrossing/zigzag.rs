//! The zigzag binary tree attached to a composition, its noncrossing
//! permutation and the transpositions that generate its torus-fixed points.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::NcPermutation;
use crate::combinatorics::{Composition, Permutation, RSubset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Child {
    Node(usize),
    Leaf(usize),
}

/// An internal node; indices into [`ZigzagTree::nodes`] follow the path order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagNode {
    pub left: Child,
    pub right: Child,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Peel {
    Left(usize),
    Right(usize),
}

/// A path of `|α|` internal nodes whose leaves are labelled by
/// `r - ℓ + 1, ..., r - ℓ + |α| + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagTree {
    r: usize,
    n: usize,
    nodes: Vec<ZigzagNode>,
}

impl ZigzagTree {
    /// Builds the tree of a nonempty `α ∈ Comp_{r,n}`.
    pub fn new(alpha: &Composition, r: usize, n: usize) -> Result<Self> {
        if alpha.is_empty() || !alpha.in_comp(r, n) {
            return Err(Error::InvalidComposition(format!("{alpha} is not a nonempty element of Comp_{{{r},{n}}}")));
        }
        let parse = alpha.ribbon_parse().expect("nonempty");
        let len = alpha.len();
        let k = parse.d.len();

        // E_1, ..., E_k fill [r-ℓ+1, r] from the left; D_k, ..., D_1 fill the
        // interval starting at r+1 from the left.
        let mut e_sets = Vec::with_capacity(k);
        let mut next = r + 1 - len;
        for &e in &parse.e {
            e_sets.push((next..next + e).collect::<Vec<_>>());
            next += e;
        }
        let mut d_sets = vec![Vec::new(); k];
        let mut next = r + 1;
        for g in (0..k).rev() {
            d_sets[g] = (next..next + parse.d[g]).collect();
            next += parse.d[g];
        }

        let mut peels = Vec::with_capacity(alpha.size() + 1);
        for g in 0..k {
            peels.extend(d_sets[g][1..].iter().rev().map(|&x| Peel::Left(x)));
            peels.extend(e_sets[g].iter().map(|&x| Peel::Right(x)));
            peels.push(Peel::Left(d_sets[g][0]));
        }

        let m = alpha.size();
        debug_assert_eq!(peels.len(), m + 1);
        let mut nodes = Vec::with_capacity(m);
        for (v, peel) in peels.iter().take(m - 1).enumerate() {
            let next = Child::Node(v + 1);
            nodes.push(match *peel {
                Peel::Left(x) => ZigzagNode { left: next, right: Child::Leaf(x) },
                Peel::Right(x) => ZigzagNode { left: Child::Leaf(x), right: next },
            });
        }
        let leaf = |p: Peel| match p {
            Peel::Left(x) | Peel::Right(x) => Child::Leaf(x),
        };
        let (a, b) = (peels[m - 1], peels[m]);
        let (left, right) = match (a, b) {
            (Peel::Left(_), Peel::Right(_)) => (leaf(b), leaf(a)),
            _ => (leaf(a), leaf(b)),
        };
        nodes.push(ZigzagNode { left, right });
        Ok(ZigzagTree { r, n, nodes })
    }

    pub fn nodes(&self) -> &[ZigzagNode] {
        &self.nodes
    }

    fn rightmost_leaf(&self, c: Child) -> usize {
        match c {
            Child::Leaf(x) => x,
            Child::Node(v) => self.rightmost_leaf(self.nodes[v].right),
        }
    }

    fn leaves_under(&self, c: Child, out: &mut Vec<usize>, cut: &dyn Fn(usize) -> bool) {
        match c {
            Child::Leaf(x) => out.push(x),
            Child::Node(v) => {
                if !cut(v) {
                    self.leaves_under(self.nodes[v].left, out, cut);
                }
                self.leaves_under(self.nodes[v].right, out, cut);
            }
        }
    }

    /// Whether internal node `v` is the right child of its parent.
    fn is_right_child(&self, v: usize) -> bool {
        v > 0 && self.nodes[v - 1].right == Child::Node(v)
    }

    /// Deletes the left edge below every internal right child and reads the
    /// leaf sets of the components as decreasing cycles.
    pub fn to_nc(&self) -> NcPermutation {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let cut = |v: usize| self.is_right_child(v);
        let mut roots = vec![Child::Node(0)];
        for v in 0..self.nodes.len() {
            if self.is_right_child(v) {
                roots.push(self.nodes[v].left);
            }
        }
        let mut covered = BTreeSet::new();
        for root in roots {
            let mut leaves = Vec::new();
            self.leaves_under(root, &mut leaves, &cut);
            covered.extend(leaves.iter().copied());
            blocks.push(leaves);
        }
        blocks.extend((1..=self.n).filter(|x| !covered.contains(x)).map(|x| vec![x]));
        NcPermutation::from_blocks(self.n, blocks).expect("zigzag components are noncrossing")
    }

    /// `τ_v = (rightmost leaf under v_L, rightmost leaf under v)` in path order.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        (0..self.nodes.len())
            .map(|v| {
                let i = self.rightmost_leaf(self.nodes[v].left);
                let j = self.rightmost_leaf(Child::Node(v));
                (i.min(j), i.max(j))
            })
            .collect()
    }

    /// All `τ_{v_{i_1}} ... τ_{v_{i_s}} · [r]` over subsequences of the path.
    pub fn fixed_points(&self) -> BTreeSet<RSubset> {
        let taus = self.transpositions();
        let m = taus.len();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1u64 << m) {
            let mut set: Vec<usize> = (1..=self.r).collect();
            for (t, &(i, j)) in taus.iter().enumerate().rev() {
                if mask >> t & 1 == 1 {
                    for x in &mut set {
                        if *x == i {
                            *x = j;
                        } else if *x == j {
                            *x = i;
                        }
                    }
                }
            }
            out.insert(RSubset::from_unsorted(self.n, set).expect("transpositions permute [n]"));
        }
        out
    }

    /// The permutations `τ_{v_{i_1}} ... τ_{v_{i_s}}` themselves.
    pub fn subword_products(&self) -> Vec<Permutation> {
        let taus = self.transpositions();
        let m = taus.len();
        (0u64..(1u64 << m))
            .map(|mask| {
                let mut w = Permutation::identity(self.n);
                for (t, &(i, j)) in taus.iter().enumerate() {
                    if mask >> t & 1 == 1 {
                        w = w.compose(&Permutation::transposition(self.n, i, j).expect("leaf labels lie in [n]"));
                    }
                }
                w
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::comp_to_subset;
    use crate::noncrossing::z_of;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn tree_of_21() {
        let t = ZigzagTree::new(&c(&[2, 1]), 2, 4).unwrap();
        assert_eq!(t.transpositions(), vec![(3, 4), (1, 3), (2, 3)]);
        let labels: Vec<String> = t.fixed_points().iter().map(|s| s.label()).collect();
        assert_eq!(labels, vec!["12", "13", "14", "23", "24"]);
        assert_eq!(t.to_nc(), z_of(&comp_to_subset(&c(&[2, 1]), 2, 4).unwrap()));
    }

    #[test]
    fn tree_of_214() {
        let alpha = c(&[2, 1, 4]);
        let t = ZigzagTree::new(&alpha, 4, 10).unwrap();
        assert_eq!(t.nodes().len(), 7);
        let z = t.to_nc();
        assert_eq!(z.perm().cycle_string(), "(9 8 2)(7 6 5 4)");
    }

    #[test]
    fn rejects_empty() {
        assert!(ZigzagTree::new(&Composition::empty(), 2, 4).is_err());
    }
}
