//! Bijections among r-subsets, partitions in a box, Grassmannian
//! permutations and compositions whose ribbon fits in the box.

use crate::error::{Error, Result};

use super::{Composition, FrobeniusSymbol, Partition, Permutation, RSubset};

/// `λ_A = (i_r - r, ..., i_2 - 2, i_1 - 1)`.
pub fn subset_to_partition(a: &RSubset) -> Partition {
    let r = a.r();
    let parts = (1..=r).map(|j| a.elems()[r - j] - (r + 1 - j)).collect();
    Partition::new(parts).expect("λ_A is weakly decreasing")
}

/// Inverse of [`subset_to_partition`] inside `Part_{r,n}`.
pub fn partition_to_subset(lambda: &Partition, r: usize, n: usize) -> Result<RSubset> {
    if !lambda.in_box(r, n) {
        return Err(Error::InvalidPartition(format!("{lambda} does not fit in {r}×{}", n.saturating_sub(r))));
    }
    // i_m = λ_{r+1-m} + m
    let elems = (1..=r).map(|m| lambda.part(r + 1 - m) + m).collect();
    RSubset::new(n, elems)
}

/// Outer hook length.
pub fn ohl(lambda: &Partition) -> usize {
    lambda.ohl()
}

/// Frobenius symbol read from the `(L |_r R)` data:
/// arms `(b_k - r - 1, ..., b_1 - r - 1)`, legs `(r - a_k, ..., r - a_1)`.
pub fn subset_frobenius(a: &RSubset) -> FrobeniusSymbol {
    let r = a.r();
    let arms = a.r_part().iter().rev().map(|&b| b - r - 1).collect();
    let legs = a.l_part().iter().rev().map(|&x| r - x).collect();
    FrobeniusSymbol::new(arms, legs).expect("subset data gives a valid symbol")
}

/// Frobenius symbol of a partition; the empty partition gives the empty symbol.
pub fn frobenius(lambda: &Partition) -> FrobeniusSymbol {
    lambda.frobenius()
}

/// `w_A`: sorted `A` followed by the sorted complement.
pub fn grassmannian_perm(a: &RSubset) -> Permutation {
    let mut oneline = a.elems().to_vec();
    oneline.extend(a.complement());
    Permutation::from_vec_unchecked(oneline)
}

/// Removes the rim hook between steps `i` and `j` from `λ_A`, where
/// `A = partition_to_subset(λ)` and `(i, j) ∈ Inv(A)`.
pub fn rim_hook_remove(lambda: &Partition, inv: (usize, usize), r: usize, n: usize) -> Result<Partition> {
    let a = partition_to_subset(lambda, r, n)?;
    let (i, j) = inv;
    if !(i < j && a.contains(j) && !a.contains(i)) {
        return Err(Error::NotAnInversion { i, j, of: a.to_string() });
    }
    Ok(subset_to_partition(&a.swap(j, i)?))
}

/// Boxes of `λ / μ` for `μ ⊆ λ`.
pub fn skew_boxes(lambda: &Partition, mu: &Partition) -> Vec<(usize, usize)> {
    lambda.boxes().into_iter().filter(|&(row, col)| !mu.contains_box(row, col)).collect()
}

/// Whether a set of boxes is a ribbon: edge-connected with no 2×2 square.
pub fn is_ribbon(cells: &[(usize, usize)]) -> bool {
    if cells.is_empty() {
        return true;
    }
    let set: std::collections::HashSet<(usize, usize)> = cells.iter().copied().collect();
    let no_square = cells.iter().all(|&(r, c)| {
        !(set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1)))
    });
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![cells[0]];
    while let Some((r, c)) = stack.pop() {
        if !seen.insert((r, c)) {
            continue;
        }
        let nbrs = [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))];
        stack.extend(nbrs.into_iter().filter(|x| set.contains(x)));
    }
    no_square && seen.len() == set.len()
}

/// `α_A`: the sizes of the blocks of `z_A` whose minimum lies in `[a_k, r]`,
/// with one subtracted from the first.
pub fn subset_to_comp(a: &RSubset) -> Composition {
    let r = a.r();
    let ls = a.l_part();
    let k = ls.len();
    if k == 0 {
        return Composition::empty();
    }
    let a_k = ls[k - 1];
    let mut parts = Vec::with_capacity(r + 1 - a_k);
    for c in a_k..=r {
        if a.contains(c) {
            parts.push(1);
        } else {
            // c = a_p
            let p = ls.iter().position(|&x| x == c).unwrap() + 1;
            let increment = a.b(p) - a.b(p - 1);
            parts.push(if c == a_k { increment } else { increment + 1 });
        }
    }
    Composition::new(parts).expect("parts are positive")
}

/// Inverse of [`subset_to_comp`] for `α ∈ Comp_{r,n}`.
pub fn comp_to_subset(alpha: &Composition, r: usize, n: usize) -> Result<RSubset> {
    if !alpha.in_comp(r, n) {
        return Err(Error::InvalidComposition(format!("{alpha} is not in Comp_{{{r},{n}}}")));
    }
    let len = alpha.len();
    if len == 0 {
        return Ok(RSubset::initial(r, n));
    }
    let a_k = r - len + 1;
    // L increasingly, paired with the increments b_p - b_{p-1}
    let mut l_inc: Vec<(usize, usize)> = Vec::new();
    for (pos, &part) in alpha.parts().iter().enumerate() {
        let c = a_k + pos;
        if pos == 0 {
            l_inc.push((c, part));
        } else if part >= 2 {
            l_inc.push((c, part - 1));
        }
    }
    // a_1 is the largest element of L, so b_1 = r + (its increment).
    let mut bs = Vec::with_capacity(l_inc.len());
    let mut b = r;
    for &(_, inc) in l_inc.iter().rev() {
        b += inc;
        bs.push(b);
    }
    let mut elems: Vec<usize> = (1..=r).filter(|x| !l_inc.iter().any(|&(c, _)| c == *x)).collect();
    elems.extend(bs);
    RSubset::from_unsorted(n, elems)
}

/// The box size used to pass between compositions and partitions; the
/// bijection does not depend on the box once the object fits.
fn minimal_box_for_comp(alpha: &Composition) -> (usize, usize) {
    let r = alpha.len().max(1);
    let n = r + (alpha.size() + 1).saturating_sub(alpha.len()).max(1);
    (r, n)
}

/// `α ↦ λ_α`, through the subset `A_α`.
pub fn comp_to_partition(alpha: &Composition) -> Partition {
    let (r, n) = minimal_box_for_comp(alpha);
    let a = comp_to_subset(alpha, r, n).expect("minimal box contains α");
    subset_to_partition(&a)
}

/// `λ ↦ α_λ`, through the subset `A_λ`.
pub fn partition_to_comp(lambda: &Partition) -> Composition {
    let r = lambda.len().max(1);
    let n = r + lambda.part(1).max(1);
    let a = partition_to_subset(lambda, r, n).expect("minimal box contains λ");
    subset_to_comp(&a)
}

/// Closed-form Frobenius symbol of `λ_α` from the ribbon parse:
/// arms `Σ_{i>=p} d_i - 1` and legs `Σ_{i>=p} e_i - 1`.
pub fn comp_to_frobenius_closed_form(alpha: &Composition) -> FrobeniusSymbol {
    let Some(parse) = alpha.ribbon_parse() else {
        return FrobeniusSymbol::new(vec![], vec![]).unwrap();
    };
    let k = parse.d.len();
    let tail = |v: &[usize], p: usize| v[p..].iter().sum::<usize>() - 1;
    let arms = (0..k).map(|p| tail(&parse.d, p)).collect();
    let legs = (0..k).map(|p| tail(&parse.e, p)).collect();
    FrobeniusSymbol::new(arms, legs).expect("tails strictly decrease")
}

/// The leg row of the literal closed formula, whose second entry
/// is a sum of `d`'s; returned as raw integers since it need not be valid.
pub fn comp_to_frobenius_literal_legs(alpha: &Composition) -> Vec<i64> {
    let Some(parse) = alpha.ribbon_parse() else {
        return Vec::new();
    };
    let k = parse.d.len();
    let tail = |v: &[usize], p: usize| v[p..].iter().sum::<usize>() as i64 - 1;
    (0..k)
        .map(|p| if p == 1 && k >= 3 { tail(&parse.d, 1) } else { tail(&parse.e, p) })
        .collect()
}

/// Closed-form inverse: `(A_1 - A_2) 1^{L_1 - L_2 - 1} (A_2 - A_3 + 1) ... (A_k + 2) 1^{L_k}`,
/// or `(A_1 + 1) 1^{L_1}` when the rank is one.
pub fn partition_to_comp_closed_form(lambda: &Partition) -> Composition {
    let f = lambda.frobenius();
    let (arms, legs) = (f.arms(), f.legs());
    let k = f.rank();
    let mut parts = Vec::new();
    match k {
        0 => {}
        1 => {
            parts.push(arms[0] + 1);
            parts.extend(std::iter::repeat_n(1, legs[0]));
        }
        _ => {
            for p in 0..k - 1 {
                let head = if p == 0 { arms[0] - arms[1] } else { arms[p] - arms[p + 1] + 1 };
                parts.push(head);
                parts.extend(std::iter::repeat_n(1, legs[p] - legs[p + 1] - 1));
            }
            parts.push(arms[k - 1] + 2);
            parts.extend(std::iter::repeat_n(1, legs[k - 1]));
        }
    }
    Composition::new(parts).expect("closed form has positive parts")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> RSubset {
        RSubset::new(n, e.to_vec()).unwrap()
    }
    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sets_to_partitions() {
        assert_eq!(subset_to_partition(&s(10, &[1, 3, 7, 9])), p(&[5, 4, 1]));
        assert_eq!(subset_to_partition(&s(4, &[3, 4])), p(&[2, 2]));
        assert_eq!(subset_to_partition(&RSubset::initial(3, 7)), Partition::empty());
        assert_eq!(partition_to_subset(&p(&[5, 4, 1]), 4, 10).unwrap(), s(10, &[1, 3, 7, 9]));
    }

    #[test]
    fn frobenius_from_subset_data() {
        // (a_2, a_1 |_4 b_1, b_2) = (2, 4 |_4 7, 9); direct measurement gives legs (2, 0).
        let a = s(10, &[1, 3, 7, 9]);
        let f = subset_frobenius(&a);
        assert_eq!(f.arms(), &[4, 2]);
        assert_eq!(f.legs(), &[2, 0]);
        assert_eq!(f, frobenius(&subset_to_partition(&a)));
    }

    #[test]
    fn grassmannian_permutations() {
        assert_eq!(grassmannian_perm(&s(4, &[3, 4])).to_string(), "3412");
        assert_eq!(grassmannian_perm(&s(10, &[1, 3, 7, 9])).oneline(), &[1, 3, 7, 9, 2, 4, 5, 6, 8, 10]);
        assert!(grassmannian_perm(&RSubset::initial(2, 5)).is_identity());
    }

    #[test]
    fn rim_hooks() {
        assert_eq!(rim_hook_remove(&p(&[4, 3, 2]), (1, 5), 3, 7).unwrap(), p(&[4, 1]));
        assert_eq!(rim_hook_remove(&p(&[1]), (1, 2), 1, 2).unwrap(), Partition::empty());
        assert!(rim_hook_remove(&p(&[4, 3, 2]), (3, 5), 3, 7).is_err());
        let cells = skew_boxes(&p(&[4, 3, 2]), &p(&[4, 1]));
        assert_eq!(cells.len(), 5 - 1);
        assert!(is_ribbon(&cells));
    }

    #[test]
    fn compositions_and_partitions() {
        assert_eq!(subset_to_comp(&s(10, &[1, 3, 7, 9])), c(&[2, 1, 4]));
        assert_eq!(comp_to_subset(&c(&[2, 1, 4]), 4, 10).unwrap(), s(10, &[1, 3, 7, 9]));
        assert_eq!(comp_to_partition(&c(&[2, 1, 3])), p(&[4, 3, 1]));
        assert_eq!(partition_to_comp(&p(&[4, 3, 1])), c(&[2, 1, 3]));
        assert_eq!(comp_to_partition(&c(&[5])), p(&[5]));
        assert_eq!(partition_to_comp(&Partition::empty()), Composition::empty());
        for (set, alpha) in [(&[3, 4][..], &[1, 2][..]), (&[2, 4], &[2, 1]), (&[1, 4], &[2]), (&[2, 3], &[1, 1])] {
            assert_eq!(subset_to_comp(&s(4, set)), c(alpha));
        }
    }

    #[test]
    fn closed_forms() {
        let f = comp_to_frobenius_closed_form(&c(&[2, 1, 3]));
        assert_eq!(f.to_partition(), p(&[4, 3, 1]));
        assert_eq!(partition_to_comp_closed_form(&p(&[4, 3, 1])), c(&[2, 1, 3]));
    }

    #[test]
    fn literal_legs_fail_from_rank_three() {
        let mut differs = 0;
        for alpha in Composition::all_in_comp(5, 12) {
            let closed = comp_to_frobenius_closed_form(&alpha);
            let legs: Vec<i64> = closed.legs().iter().map(|&l| l as i64).collect();
            if closed.rank() < 3 {
                assert_eq!(comp_to_frobenius_literal_legs(&alpha), legs, "{alpha}");
            } else if comp_to_frobenius_literal_legs(&alpha) != legs {
                differs += 1;
            }
        }
        assert!(differs > 0);
    }
}
