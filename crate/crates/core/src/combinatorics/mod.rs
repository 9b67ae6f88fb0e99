//! Index objects: subsets, partitions, compositions, permutations, and the
//! bijections and orders relating them.

mod bijections;
mod composition;
mod partition;
mod permutation;
mod subset;

pub use bijections::*;
pub use composition::{Composition, RibbonParse};
pub use partition::{FrobeniusSymbol, Partition};
pub use permutation::{bruhat_leq, Permutation};
pub use subset::RSubset;

/// Gale order on r-subsets of the same `[n]`.
pub fn gale_leq(a: &RSubset, b: &RSubset) -> crate::Result<bool> {
    a.gale_leq(b)
}

/// Inversion set `Inv(A)`.
pub fn inversions(a: &RSubset) -> Vec<(usize, usize)> {
    a.inversions()
}

/// Binomial coefficient with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
