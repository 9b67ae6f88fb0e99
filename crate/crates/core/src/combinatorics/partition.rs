use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition with trailing zeros stripped.
///
/// Membership in `Part_{r,n}` is a predicate ([`Partition::in_box`]) so the
/// same value can be tested against several rectangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartsRepr", into = "PartsRepr")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartsRepr {
    parts: Vec<usize>,
}

impl TryFrom<PartsRepr> for Partition {
    type Error = Error;
    fn try_from(repr: PartsRepr) -> Result<Self> {
        Partition::new(repr.parts)
    }
}

impl From<Partition> for PartsRepr {
    fn from(p: Partition) -> Self {
        PartsRepr { parts: p.parts }
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` (1-indexed), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ ⊆ μ` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Membership in `Part_{r,n}`: at most `r` rows and at most `n - r` columns.
    pub fn in_box(&self, r: usize, n: usize) -> bool {
        r <= n && self.len() <= r && self.part(1) <= n - r
    }

    /// Every partition inside the `r × (n - r)` rectangle, in reverse lexicographic order.
    pub fn all_in_box(r: usize, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if r > n {
            return out;
        }
        let mut cur = Vec::new();
        fill_box(r, n - r, &mut cur, &mut out);
        out
    }

    /// Outer hook length `λ_1 + ℓ(λ) - 1`, zero for the empty partition.
    pub fn ohl(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.parts[0] + self.len() - 1
        }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// Boxes `(row, column)`, 1-indexed, in reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for c in 1..=p {
                out.push((i + 1, c));
            }
        }
        out
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// Arm and leg lengths of the diagonal boxes.
    pub fn frobenius(&self) -> FrobeniusSymbol {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        let mut d = 1;
        while self.part(d) >= d {
            arms.push(self.part(d) - d);
            legs.push(conj.part(d) - d);
            d += 1;
        }
        FrobeniusSymbol { arms, legs }
    }
}

fn fill_box(rows_left: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    if rows_left == 0 {
        return;
    }
    for p in (1..=max_part).rev() {
        cur.push(p);
        fill_box(rows_left - 1, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Frobenius coordinates `(arms | legs)` of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusSymbol {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidPartition(format!("bad Frobenius symbol ({arms:?} | {legs:?})")));
        }
        Ok(FrobeniusSymbol { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Rank of the partition (number of diagonal boxes).
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.rank();
        if d == 0 {
            return Partition::empty();
        }
        // Rows 1..d come from the arms; the rows below are read from the legs.
        let len = self.legs[0] + 1;
        let mut parts = vec![0; len];
        for (i, part) in parts.iter_mut().enumerate().take(d) {
            *part = self.arms[i] + i + 1;
        }
        for (row, part) in parts.iter_mut().enumerate().skip(d) {
            let row = row + 1;
            *part = (0..d).filter(|&j| self.legs[j] + j + 1 >= row).count();
        }
        Partition::new(parts).expect("Frobenius data yields a partition")
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.arms.iter().map(|x| x.to_string()).collect();
        let l: Vec<String> = self.legs.iter().map(|x| x.to_string()).collect();
        write!(f, "({} | {})", a.join(","), l.join(","))
    }
}
