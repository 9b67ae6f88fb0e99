//! Error paths of the public constructors and algorithms.

use num_bigint::BigInt;

use qgrass_core::combinatorics::comp_to_subset;
use qgrass_core::noncrossing::{comp_of, enumerate_nc_bounded};
use qgrass_core::pluecker::{le, minor, ratio_sign};
use qgrass_core::polyring::lr_coefficient;
use qgrass_core::{Composition, Error, NcPermutation, Partition, Permutation, RSubset};

#[test]
fn invalid_constructors() {
    assert!(matches!(RSubset::new(4, vec![3, 2]), Err(Error::InvalidSubset(_))));
    assert!(matches!(RSubset::new(4, vec![1, 5]), Err(Error::InvalidSubset(_))));
    assert!(matches!(Composition::new(vec![2, 0, 1]), Err(Error::InvalidComposition(_))));
    assert!(matches!(Partition::new(vec![1, 2]), Err(Error::InvalidPartition(_))));
    assert!(matches!(Permutation::new(vec![1, 1, 3]), Err(Error::InvalidPermutation(_))));
    assert!(matches!(NcPermutation::from_blocks(4, vec![vec![1, 3], vec![2, 4]]), Err(Error::NotNoncrossing(_))));
}

#[test]
fn shape_errors() {
    let alpha = Composition::new(vec![3, 3]).unwrap();
    assert!(comp_to_subset(&alpha, 2, 4).is_err());
    let w = NcPermutation::from_permutation(Permutation::new(vec![2, 1, 3]).unwrap()).unwrap();
    assert!(matches!(comp_of(&w, 2), Err(Error::NotQuasiGrassmannian(_))));
    let m = vec![vec![BigInt::from(1), BigInt::from(0)]];
    assert!(minor(&m, &RSubset::new(3, vec![1]).unwrap()).is_err());
}

#[test]
fn bound_and_variable_errors() {
    assert!(matches!(enumerate_nc_bounded(9, 8), Err(Error::BoundExceeded { n: 9, bound: 8 })));
    let p = |v: Vec<usize>| Partition::new(v).unwrap();
    assert!(matches!(
        lr_coefficient(&p(vec![1]), &p(vec![1]), &p(vec![1, 1]), 1),
        Err(Error::InsufficientVariables { needed: 2, got: 1 })
    ));
}

#[test]
fn non_inversions_and_crossing_diagrams() {
    let a = RSubset::new(4, vec![1, 3]).unwrap();
    assert!(matches!(ratio_sign(&a, 2, 1), Err(Error::NotAnInversion { .. })));
    let b = RSubset::new(4, vec![3, 4]).unwrap();
    let full = le::LeDiagram::full(&b);
    // The full 2x2 diagram is Le but has a crossing.
    assert!(full.is_le() && !full.is_noncrossing());
    assert!(matches!(le::network_point(&full, &[]), Err(Error::CrossingLeDiagram)));
}
