//! The Johnson graph, the quasisymmetric Johnson graph and their edge labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::RSubset;
use crate::error::{Error, Result};
use crate::noncrossing::{enumerate_nc, kreweras_covers, split_merge_invnc, NcPermutation};

/// An edge between vertex indices `u < v`, labelled by `(i, j)` with `i < j`,
/// standing for the linear form `t_i - t_j`. The Gale-lower endpoint contains
/// `i` and the upper one contains `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabeledEdge {
    pub u: usize,
    pub v: usize,
    pub label: (usize, usize),
}

/// A graph on r-subsets of `[n]` whose edges are single swaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    r: usize,
    n: usize,
    vertices: Vec<RSubset>,
    edges: Vec<LabeledEdge>,
    index: BTreeMap<RSubset, usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
    labels: Vec<[usize; 2]>,
}

/// The swap label of two r-subsets differing in one element.
pub fn swap_label(a: &RSubset, b: &RSubset) -> Option<(usize, usize)> {
    let only_a: Vec<usize> = a.elems().iter().copied().filter(|&x| !b.contains(x)).collect();
    let only_b: Vec<usize> = b.elems().iter().copied().filter(|&x| !a.contains(x)).collect();
    match (only_a.as_slice(), only_b.as_slice()) {
        ([x], [y]) => Some(((*x).min(*y), (*x).max(*y))),
        _ => None,
    }
}

impl EdgeLabeledGraph {
    fn from_edge_set(r: usize, n: usize, pairs: BTreeSet<(RSubset, RSubset)>) -> Self {
        let vertices = RSubset::all(r, n);
        let index: BTreeMap<RSubset, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges: Vec<LabeledEdge> = pairs
            .into_iter()
            .map(|(a, b)| {
                let (ia, ib) = (index[&a], index[&b]);
                let label = swap_label(&a, &b).expect("edges are single swaps");
                LabeledEdge { u: ia.min(ib), v: ia.max(ib), label }
            })
            .collect();
        edges.sort();
        edges.dedup();
        EdgeLabeledGraph { r, n, vertices, edges, index }
    }

    fn ordered(a: RSubset, b: RSubset) -> (RSubset, RSubset) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// `J_{r,n}`: every single swap.
    pub fn johnson(r: usize, n: usize) -> Result<Self> {
        check_shape(r, n)?;
        let mut pairs = BTreeSet::new();
        for a in RSubset::all(r, n) {
            for (i, j) in a.inversions() {
                let b = a.swap(j, i).expect("inversion swap");
                pairs.insert(Self::ordered(a.clone(), b));
            }
        }
        Ok(Self::from_edge_set(r, n, pairs))
    }

    /// `QJ_{r,n}` from its definition: projections `u·[r]`, `w·[r]` of
    /// Kreweras cover pairs `u ⋖ w` with distinct images.
    pub fn quasi_johnson(r: usize, n: usize) -> Result<Self> {
        check_shape(r, n)?;
        Self::quasi_johnson_from(r, n, &enumerate_nc(n)?)
    }

    /// `QJ_{r,n}` from an already enumerated `NC_n`.
    pub fn quasi_johnson_from(r: usize, n: usize, all: &[NcPermutation]) -> Result<Self> {
        check_shape(r, n)?;
        let pairs: BTreeSet<(RSubset, RSubset)> = all
            .par_iter()
            .flat_map_iter(|u| {
                let a = u.perm().act_on_initial(r);
                kreweras_covers(u)
                    .into_iter()
                    .map(move |w| (a.clone(), w.perm().act_on_initial(r)))
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| Self::ordered(a, b))
            })
            .collect();
        Ok(Self::from_edge_set(r, n, pairs))
    }

    /// `QJ_{r,n}` from the closed form of the noncrossing inversions of `z_A`.
    pub fn quasi_johnson_closed_form(r: usize, n: usize) -> Result<Self> {
        check_shape(r, n)?;
        let mut pairs = BTreeSet::new();
        for a in RSubset::all(r, n) {
            for (i, j) in split_merge_invnc(&a) {
                let b = a.swap(j, i)?;
                pairs.insert(Self::ordered(a.clone(), b));
            }
        }
        Ok(Self::from_edge_set(r, n, pairs))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[RSubset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn index_of(&self, a: &RSubset) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn has_edge(&self, a: &RSubset, b: &RSubset) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(x), Some(y)) => {
                let (u, v) = (x.min(y), x.max(y));
                self.edges.binary_search_by(|e| (e.u, e.v).cmp(&(u, v))).is_ok()
            }
            _ => false,
        }
    }

    /// Neighbours of vertex `idx` with the edge label.
    pub fn neighbors(&self, idx: usize) -> Vec<(usize, (usize, usize))> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.u == idx {
                    Some((e.v, e.label))
                } else if e.v == idx {
                    Some((e.u, e.label))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Labels `(i, j)` of the edges from `A` down to `(A \ j) ∪ i`.
    pub fn down_labels(&self, a: &RSubset) -> Vec<(usize, usize)> {
        let Some(idx) = self.index_of(a) else { return Vec::new() };
        let mut out: Vec<(usize, usize)> =
            self.neighbors(idx).into_iter().map(|(_, l)| l).filter(|&(_, j)| a.contains(j)).collect();
        out.sort_unstable();
        out
    }

    /// Deterministic DOT text.
    pub fn export_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {name} {{");
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", v.label());
        }
        for e in &self.edges {
            let (i, j) = e.label;
            let _ = writeln!(
                s,
                "  \"{}\" -- \"{}\" [label=\"t{i}-t{j}\"];",
                self.vertices[e.u].label(),
                self.vertices[e.v].label()
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let g = GraphJson {
            vertices: self.vertices.iter().map(|v| v.elems().to_vec()).collect(),
            edges: self.edges.iter().map(|e| [e.u, e.v]).collect(),
            labels: self.edges.iter().map(|e| [e.label.0, e.label.1]).collect(),
        };
        serde_json::to_value(g).expect("plain data")
    }
}

fn check_shape(r: usize, n: usize) -> Result<()> {
    if n == 0 || r > n {
        return Err(Error::InvalidArgument(format!("need 0 <= r <= n and n >= 1, got r={r}, n={n}")));
    }
    Ok(())
}

/// `InvQ(A)` read off the down-edges of `A` in `QJ_{r,n}`.
pub fn invq(a: &RSubset, qj: &EdgeLabeledGraph) -> Vec<(usize, usize)> {
    qj.down_labels(a)
}

/// `E(J_{r,n}) \ E(QJ_{r,n})` as pairs of subsets, Gale-lower first.
pub fn removed_edges(r: usize, n: usize) -> Result<Vec<(RSubset, RSubset)>> {
    let j = EdgeLabeledGraph::johnson(r, n)?;
    let qj = EdgeLabeledGraph::quasi_johnson(r, n)?;
    Ok(removed_edges_between(&j, &qj))
}

pub fn removed_edges_between(j: &EdgeLabeledGraph, qj: &EdgeLabeledGraph) -> Vec<(RSubset, RSubset)> {
    let kept: BTreeSet<(usize, usize)> = qj.edges().iter().map(|e| (e.u, e.v)).collect();
    j.edges()
        .iter()
        .filter(|e| !kept.contains(&(e.u, e.v)))
        .map(|e| {
            let (x, y) = (j.vertices()[e.u].clone(), j.vertices()[e.v].clone());
            // the lower endpoint contains the smaller label entry
            if x.contains(e.label.0) {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect()
}
