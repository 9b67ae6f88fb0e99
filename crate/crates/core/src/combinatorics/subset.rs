use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An r-element subset of `{1..n}`, stored increasingly.
///
/// The `(L |_r R)` decomposition writes `L = [r] \ A = {a_k < ... < a_1}` and
/// `R = A \ [r] = {b_1 < ... < b_k}`; the conventions `a_0 = r+1` and
/// `b_0 = r` are available through [`RSubset::a`] and [`RSubset::b`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubsetRepr", into = "SubsetRepr")]
pub struct RSubset {
    n: usize,
    elems: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SubsetRepr {
    n: usize,
    elems: Vec<usize>,
}

impl TryFrom<SubsetRepr> for RSubset {
    type Error = Error;
    fn try_from(repr: SubsetRepr) -> Result<Self> {
        RSubset::new(repr.n, repr.elems)
    }
}

impl From<RSubset> for SubsetRepr {
    fn from(s: RSubset) -> Self {
        SubsetRepr { n: s.n, elems: s.elems }
    }
}

/// Subsets are ordered by size, then lexicographically; this is a linear
/// extension of nothing in particular and only serves determinism.
impl Ord for RSubset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.elems.len(), &self.elems).cmp(&(other.n, other.elems.len(), &other.elems))
    }
}

impl PartialOrd for RSubset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl RSubset {
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubset("n must be positive".into()));
        }
        let increasing = elems.windows(2).all(|w| w[0] < w[1]);
        let in_range = elems.iter().all(|&e| (1..=n).contains(&e));
        if !increasing || !in_range {
            return Err(Error::InvalidSubset(format!("{elems:?} in [{n}]")));
        }
        Ok(RSubset { n, elems })
    }

    pub fn from_unsorted(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        Self::new(n, elems)
    }

    /// The Gale-minimum `[r]`.
    pub fn initial(r: usize, n: usize) -> Self {
        assert!(r <= n && n > 0);
        RSubset { n, elems: (1..=r).collect() }
    }

    /// The Gale-maximum `{n-r+1, ..., n}`.
    pub fn terminal(r: usize, n: usize) -> Self {
        assert!(r <= n && n > 0);
        RSubset { n, elems: (n - r + 1..=n).collect() }
    }

    /// All r-subsets of `[n]` in lexicographic order.
    pub fn all(r: usize, n: usize) -> Vec<RSubset> {
        let mut out = Vec::new();
        if r > n || n == 0 {
            return out;
        }
        let mut cur: Vec<usize> = (1..=r).collect();
        loop {
            out.push(RSubset { n, elems: cur.clone() });
            // advance to the next combination
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < n - r + i + 1 {
                    cur[i] += 1;
                    for t in i + 1..r {
                        cur[t] = cur[t - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|&x| !self.contains(x)).collect()
    }

    pub fn indicator(&self) -> Vec<u8> {
        (1..=self.n).map(|x| u8::from(self.contains(x))).collect()
    }

    /// `k = |L| = |R|`.
    pub fn k(&self) -> usize {
        self.elems.iter().filter(|&&e| e > self.r()).count()
    }

    /// `[a_1, ..., a_k]`, i.e. `L` listed decreasingly.
    pub fn l_part(&self) -> Vec<usize> {
        let r = self.r();
        (1..=r).rev().filter(|&x| !self.contains(x)).collect()
    }

    /// `[b_1, ..., b_k]`, i.e. `R` listed increasingly.
    pub fn r_part(&self) -> Vec<usize> {
        let r = self.r();
        self.elems.iter().copied().filter(|&e| e > r).collect()
    }

    /// `a_p` for `0 <= p <= k`, with `a_0 = r + 1`.
    pub fn a(&self, p: usize) -> usize {
        if p == 0 {
            self.r() + 1
        } else {
            self.l_part()[p - 1]
        }
    }

    /// `b_p` for `0 <= p <= k`, with `b_0 = r`.
    pub fn b(&self, p: usize) -> usize {
        if p == 0 {
            self.r()
        } else {
            self.r_part()[p - 1]
        }
    }

    /// `(A \ j) ∪ i`.
    pub fn swap(&self, j_out: usize, i_in: usize) -> Result<RSubset> {
        if !self.contains(j_out) || self.contains(i_in) || i_in == 0 || i_in > self.n {
            return Err(Error::InvalidSubset(format!("cannot swap {j_out} for {i_in} in {self}")));
        }
        let elems: Vec<usize> = self
            .elems
            .iter()
            .map(|&e| if e == j_out { i_in } else { e })
            .collect();
        RSubset::from_unsorted(self.n, elems)
    }

    /// `Inv(A) = {(i,j) : i < j, j ∈ A, i ∉ A}`, sorted.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            if self.contains(i) {
                continue;
            }
            for &j in &self.elems {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The two-case description of `Inv(A)` through the `(L |_r R)` data.
    pub fn inversions_closed_form(&self) -> Vec<(usize, usize)> {
        let r = self.r();
        let mut out = Vec::new();
        for &bp in &self.r_part() {
            for i in 1..bp {
                if !self.contains(i) {
                    out.push((i, bp));
                }
            }
        }
        for &ap in &self.l_part() {
            for &j in self.elems.iter().filter(|&&j| j <= r) {
                if ap < j {
                    out.push((ap, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `|A ∩ [k]|` for `k = 1..n`.
    pub fn prefix_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut c = 0;
        for x in 1..=self.n {
            if self.contains(x) {
                c += 1;
            }
            out.push(c);
        }
        out
    }

    /// Gale order: `A <= B` iff `|A ∩ [k]| >= |B ∩ [k]|` for all `k`.
    pub fn gale_leq(&self, other: &RSubset) -> Result<bool> {
        check_same_shape(self, other)?;
        let pa = self.prefix_counts();
        let pb = other.prefix_counts();
        Ok(pa.iter().zip(&pb).all(|(a, b)| a >= b))
    }

    /// Compact label: digits run together when `n <= 9`, comma-separated otherwise.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        if self.n <= 9 {
            parts.concat()
        } else {
            parts.join(",")
        }
    }
}

pub(crate) fn check_same_shape(a: &RSubset, b: &RSubset) -> Result<()> {
    if a.n != b.n || a.r() != b.r() {
        return Err(Error::ShapeMismatch(format!("{a} (n={}) vs {b} (n={})", a.n, b.n)));
    }
    Ok(())
}

impl fmt::Display for RSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_of_1379() {
        let a = RSubset::new(10, vec![1, 3, 7, 9]).unwrap();
        assert_eq!(a.l_part(), vec![4, 2]);
        assert_eq!(a.r_part(), vec![7, 9]);
        assert_eq!((a.a(0), a.b(0)), (5, 4));
        assert_eq!(a.inversions().len(), 10);
        assert_eq!(a.inversions(), a.inversions_closed_form());
    }

    #[test]
    fn inversions_of_34() {
        let a = RSubset::new(4, vec![3, 4]).unwrap();
        assert_eq!(a.inversions(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
    }

    #[test]
    fn gale_incomparable_pair() {
        let a = RSubset::new(4, vec![1, 4]).unwrap();
        let b = RSubset::new(4, vec![2, 3]).unwrap();
        assert_eq!(a.prefix_counts(), vec![1, 1, 1, 2]);
        assert_eq!(b.prefix_counts(), vec![0, 1, 2, 2]);
        assert!(!a.gale_leq(&b).unwrap());
        assert!(!b.gale_leq(&a).unwrap());
        assert!(a.gale_leq(&RSubset::new(5, vec![1, 4]).unwrap()).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(RSubset::all(2, 4).len(), 6);
        assert_eq!(RSubset::all(3, 7).len(), 35);
        assert_eq!(RSubset::all(0, 3), vec![RSubset::initial(0, 3)]);
    }

    #[test]
    fn json_round_trip() {
        let a = RSubset::new(5, vec![2, 5]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":5,"elems":[2,5]}"#);
        assert_eq!(serde_json::from_str::<RSubset>(&s).unwrap(), a);
        assert!(serde_json::from_str::<RSubset>(r#"{"n":3,"elems":[3,1]}"#).is_err());
    }
}
