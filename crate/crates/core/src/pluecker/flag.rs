//! Coordinate patterns of noncrossing flag cells and their projection to
//! Grassmannian cells.
//!
//! The free coordinate of an inversion `(i, j)` of `w` sits at position
//! `(i, w⁻¹(j))` of the flag chart. Projecting to the first `r` columns keeps
//! it exactly when `w⁻¹(j) ≤ r < w⁻¹(i)`; otherwise it lies in the kernel.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::RSubset;
use crate::noncrossing::{inv_nc, nc_descents, z_of, NcPermutation};

#[derive(Clone, Debug, Serialize)]
pub struct FlagProjection {
    pub w: Vec<usize>,
    pub r: usize,
    pub image_subset: RSubset,
    /// `(inversion (i, j), chart position (i, w⁻¹(j)))` for `InvNC(w)`.
    pub positions: Vec<((usize, usize), (usize, usize))>,
    /// Inversions whose coordinate survives the projection.
    pub kept: Vec<(usize, usize)>,
    /// Inversions whose coordinate is killed by the projection.
    pub kernel: Vec<(usize, usize)>,
    /// The kept coordinates are exactly the quasisymmetric inversions of `w·[r]`.
    pub onto_invq: bool,
    /// A descent `i ≠ r` of `w` whose inversion `(w(i+1), w(i))` has both
    /// flag positions on one side of `r`.
    pub descent_witness: Option<usize>,
}

impl FlagProjection {
    /// The projection restricted to the cell is injective.
    pub fn is_injective(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Computes the projection data of the noncrossing flag cell of `w`.
pub fn flag_projection_pattern(w: &NcPermutation, r: usize) -> FlagProjection {
    let p = w.perm();
    let winv = p.inverse();
    let a = p.act_on_initial(r);
    let invs = inv_nc(w);
    let mut positions = Vec::new();
    let (mut kept, mut kernel) = (Vec::new(), Vec::new());
    for &(i, j) in &invs {
        positions.push(((i, j), (i, winv.apply(j))));
        if winv.apply(j) <= r && r < winv.apply(i) {
            kept.push((i, j));
        } else {
            kernel.push((i, j));
        }
    }
    let invq: BTreeSet<(usize, usize)> = inv_nc(&z_of(&a)).into_iter().collect();
    let onto_invq = kept.iter().copied().collect::<BTreeSet<_>>() == invq;
    let inv_set: BTreeSet<(usize, usize)> = invs.iter().copied().collect();
    let descent_witness = nc_descents(w).into_iter().find(|&d| {
        d != r && inv_set.contains(&(p.apply(d + 1), p.apply(d)))
    });
    FlagProjection {
        w: p.oneline().to_vec(),
        r,
        image_subset: a,
        positions,
        kept,
        kernel,
        onto_invq,
        descent_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;

    #[test]
    fn fixture_653241() {
        let w = NcPermutation::from_permutation(Permutation::new(vec![6, 5, 3, 2, 4, 1]).unwrap()).unwrap();
        let rep = flag_projection_pattern(&w, 3);
        let pos: BTreeSet<(usize, usize)> = rep.positions.iter().map(|p| p.1).collect();
        let expected: BTreeSet<(usize, usize)> = [(1, 1), (1, 2), (4, 2), (2, 2), (2, 3)].into_iter().collect();
        assert_eq!(pos, expected);
        assert!(rep.is_injective() && rep.onto_invq);
        assert_eq!(rep.image_subset, RSubset::new(6, vec![3, 5, 6]).unwrap());
    }

    #[test]
    fn identity_is_trivial() {
        let rep = flag_projection_pattern(&NcPermutation::identity(5), 2);
        assert!(rep.positions.is_empty() && rep.is_injective() && rep.onto_invq);
    }
}
