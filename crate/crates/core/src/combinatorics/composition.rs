use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition: a finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartsRepr", into = "PartsRepr")]
pub struct Composition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartsRepr {
    parts: Vec<usize>,
}

impl TryFrom<PartsRepr> for Composition {
    type Error = Error;
    fn try_from(repr: PartsRepr) -> Result<Self> {
        Composition::new(repr.parts)
    }
}

impl From<Composition> for PartsRepr {
    fn from(c: Composition) -> Self {
        PartsRepr { parts: c.parts }
    }
}

/// The parse `α = d_1 1^{e_1-1} (d_2+1) 1^{e_2-1} ... (d_k+1) 1^{e_k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonParse {
    pub d: Vec<usize>,
    pub e: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `Des(α)`: the partial sums, excluding the total.
    pub fn descents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut s = 0;
        for &p in self.parts.iter().take(self.len().saturating_sub(1)) {
            s += p;
            out.push(s);
        }
        out
    }

    /// The composition of `size` with the given descent set.
    pub fn from_descents(size: usize, descents: &[usize]) -> Result<Self> {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in descents {
            if d <= prev || d >= size {
                return Err(Error::InvalidComposition(format!("descents {descents:?} of {size}")));
            }
            parts.push(d - prev);
            prev = d;
        }
        if size > 0 {
            parts.push(size - prev);
        }
        Composition::new(parts)
    }

    /// Membership in `Comp_{r,n}`: the ribbon fits in the `r × (n - r)` box.
    pub fn in_comp(&self, r: usize, n: usize) -> bool {
        if r > n {
            return false;
        }
        self.is_empty() || (self.len() <= r && self.size() + 1 - self.len() <= n - r)
    }

    /// All compositions of `size` with at most `max_len` parts, in lexicographic order.
    pub fn all_of_size(size: usize, max_len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_compositions(size, max_len, &mut cur, &mut out);
        out
    }

    /// All of `Comp_{r,n}`, sorted by size and then lexicographically.
    pub fn all_in_comp(r: usize, n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        if r > n {
            return out;
        }
        for size in 0..=(n - r + r.saturating_sub(1)) {
            out.extend(Self::all_of_size(size, r).into_iter().filter(|c| c.in_comp(r, n)));
        }
        out
    }

    /// `self` refines `other` (same size, descent set is a superset).
    pub fn refines(&self, other: &Composition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mine = self.descents();
        other.descents().iter().all(|d| mine.binary_search(d).is_ok())
    }

    /// All refinements, lexicographic by descent set.
    pub fn refinements(&self) -> Vec<Composition> {
        let size = self.size();
        let fixed = self.descents();
        let free: Vec<usize> = (1..size).filter(|d| fixed.binary_search(d).is_err()).collect();
        subsets_merged(size, &fixed, &free)
    }

    /// All coarsenings.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let size = self.size();
        let des = self.descents();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << des.len()) {
            let kept: Vec<usize> =
                des.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d).collect();
            out.push(Composition::from_descents(size, &kept).expect("subset of descents"));
        }
        out
    }

    pub fn reversed(&self) -> Composition {
        Composition { parts: self.parts.iter().rev().copied().collect() }
    }

    /// Concatenation.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Parse as `d_1 1^{e_1-1} (d_2+1) 1^{e_2-1} ...`; a new group starts at
    /// every part `>= 2` after the first. `None` for the empty composition.
    pub fn ribbon_parse(&self) -> Option<RibbonParse> {
        let first = *self.parts.first()?;
        let mut d = vec![first];
        let mut e = vec![1];
        for &p in &self.parts[1..] {
            if p >= 2 {
                d.push(p - 1);
                e.push(1);
            } else {
                *e.last_mut().unwrap() += 1;
            }
        }
        Some(RibbonParse { d, e })
    }

    pub fn from_ribbon_parse(parse: &RibbonParse) -> Result<Composition> {
        if parse.d.len() != parse.e.len() || parse.d.is_empty() {
            return Err(Error::InvalidComposition(format!("bad parse {parse:?}")));
        }
        let mut parts = Vec::new();
        for (g, (&d, &e)) in parse.d.iter().zip(&parse.e).enumerate() {
            if d == 0 || e == 0 {
                return Err(Error::InvalidComposition(format!("bad parse {parse:?}")));
            }
            parts.push(if g == 0 { d } else { d + 1 });
            parts.extend(std::iter::repeat_n(1, e - 1));
        }
        Composition::new(parts)
    }
}

fn fill_compositions(left: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if left == 0 {
        out.push(Composition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in 1..=left {
        cur.push(p);
        fill_compositions(left - p, max_len, cur, out);
        cur.pop();
    }
}

fn subsets_merged(size: usize, fixed: &[usize], free: &[usize]) -> Vec<Composition> {
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut des: Vec<usize> = fixed.to_vec();
        des.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d));
        des.sort_unstable();
        out.push(Composition::from_descents(size, &des).expect("valid descent set"));
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(c(&[2, 1, 4]).descents(), vec![2, 3]);
        assert_eq!(Composition::from_descents(7, &[2, 3]).unwrap(), c(&[2, 1, 4]));
        assert!(Composition::empty().descents().is_empty());
    }

    #[test]
    fn comp_membership() {
        assert!(c(&[2, 1]).in_comp(2, 4));
        assert!(!c(&[3]).in_comp(2, 4));
        assert!(!c(&[4]).in_comp(2, 4));
        assert!(!c(&[1, 1, 1]).in_comp(2, 4));
        // |Comp_{r,n}| = C(n,r)
        assert_eq!(Composition::all_in_comp(2, 4).len(), 6);
        assert_eq!(Composition::all_in_comp(3, 7).len(), 35);
    }

    #[test]
    fn parse_round_trip() {
        let a = c(&[2, 1, 4]);
        let p = a.ribbon_parse().unwrap();
        assert_eq!((p.d.clone(), p.e.clone()), (vec![2, 3], vec![2, 1]));
        assert_eq!(Composition::from_ribbon_parse(&p).unwrap(), a);
        let ones = c(&[1, 1, 1]).ribbon_parse().unwrap();
        assert_eq!((ones.d, ones.e), (vec![1], vec![3]));
    }

    #[test]
    fn refinement_lattice() {
        let a = c(&[2, 1]);
        let refs = a.refinements();
        assert_eq!(refs.len(), 2);
        assert!(refs.iter().all(|b| b.refines(&a)));
        assert_eq!(c(&[1, 1, 1]).coarsenings().len(), 4);
    }
}
