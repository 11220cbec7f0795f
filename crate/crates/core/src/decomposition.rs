//! Splitting a represented torsion-free arithmetic matroid into indecomposable
//! summands.
//!
//! With a basis placed first and the representation in Hermite normal form,
//! a bipartition is a decomposition exactly when the matrix vanishes on the
//! basis rows of each part against the columns of the other. The finest
//! decomposition is therefore given by the connected components of the
//! nonzero pattern between basis rows and columns.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hnf, IntMatrix};
use crate::matroid::{ArithmeticMatroid, Subset};

/// Finest decomposition of the matroid represented by a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Blocks in the caller's labelling, ordered by smallest element.
    pub blocks: Vec<Subset>,
    /// Column order used: position `i` holds original element `order[i]`.
    pub order: Vec<usize>,
    /// Hermite normal form of the reordered matrix, zero rows dropped.
    pub normal_form: IntMatrix,
}

/// Relabels so the lexicographically first basis comes first, takes the
/// Hermite normal form, and groups columns linked through nonzero entries in
/// basis rows. Zero columns end up as singleton blocks.
pub fn decompose(a: &IntMatrix) -> Result<Decomposition> {
    let n = a.cols();
    let mut basis: Vec<usize> = Vec::new();
    for j in 0..n {
        let mut cols = basis.clone();
        cols.push(j);
        if crate::linalg::rank(&a.select_columns(&cols)) == cols.len() {
            basis.push(j);
        }
    }
    let r = basis.len();
    let order: Vec<usize> = basis
        .iter()
        .copied()
        .chain((0..n).filter(|j| !basis.contains(j)))
        .map(|j| j + 1)
        .collect();
    let perm: Vec<usize> = order.iter().map(|e| e - 1).collect();
    let h = hnf(&a.select_columns(&perm));
    if h.pivots.iter().copied().ne(0..r) {
        return Err(Error::RankDeficient { rank: h.rank(), rows: r });
    }
    let normal_form = h.h.select_rows(&(0..r).collect::<Vec<_>>());

    // component labels over positions 0..n; row k is the basis column k
    let mut label: Vec<usize> = (0..n).collect();
    let find = |label: &mut Vec<usize>, mut x: usize| {
        while label[x] != x {
            label[x] = label[label[x]];
            x = label[x];
        }
        x
    };
    for k in 0..r {
        for j in 0..n {
            if !normal_form[(k, j)].is_zero() {
                let (x, y) = (find(&mut label, k), find(&mut label, j));
                label[x.max(y)] = x.min(y);
            }
        }
    }
    let mut blocks: Vec<Subset> = Vec::new();
    let mut block_of_root = vec![usize::MAX; n];
    for pos in 0..n {
        let root = find(&mut label, pos);
        if block_of_root[root] == usize::MAX {
            block_of_root[root] = blocks.len();
            blocks.push(Subset::EMPTY);
        }
        let b = block_of_root[root];
        blocks[b] = blocks[b].with(order[pos]);
    }
    blocks.sort_by_key(|b| b.elements().next());
    Ok(Decomposition { blocks, order, normal_form })
}

/// Whether `blocks` partition the groundset so that rank adds up and
/// multiplicity multiplies over the blocks on every subset.
pub fn is_decomposition(m: &ArithmeticMatroid, blocks: &[Subset]) -> Result<bool> {
    let mut union = Subset::EMPTY;
    for &b in blocks {
        if !(union & b).is_empty() || !b.is_subset_of(m.ground()) {
            return Err(Error::Precondition(format!("blocks overlap or leave the groundset at {b}")));
        }
        union = union | b;
    }
    if union != m.ground() {
        return Err(Error::Precondition(format!("blocks cover only {union}")));
    }
    Ok(Subset::all(m.n()).all(|x| {
        let rank: usize = blocks.iter().map(|&b| m.rk(x & b)).sum();
        let mult: BigInt = blocks.iter().map(|&b| m.m(x & b).clone()).product();
        rank == m.rk(x) && &mult == m.m(x)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::toric_triple;

    fn sets(blocks: &[Subset]) -> Vec<Vec<usize>> {
        blocks.iter().map(|b| b.elements().collect()).collect()
    }

    #[test]
    fn block_diagonal() {
        let a = IntMatrix::identity(2).direct_sum(&IntMatrix::from_rows(&[[3]]));
        assert_eq!(sets(&decompose(&a).unwrap().blocks), vec![vec![1], vec![2], vec![3]]);
        let b = IntMatrix::from_rows(&[[1, 1], [0, 2]]).direct_sum(&IntMatrix::from_rows(&[[3]]));
        let d = decompose(&b).unwrap();
        assert_eq!(sets(&d.blocks), vec![vec![1, 2], vec![3]]);
        assert!(is_decomposition(&ArithmeticMatroid::from_matrix(&b).unwrap(), &d.blocks).unwrap());
    }

    #[test]
    fn toric_matrix_is_indecomposable() {
        let a = &toric_triple()[0];
        assert_eq!(sets(&decompose(a).unwrap().blocks), vec![vec![1, 2, 3, 4]]);
        let m = ArithmeticMatroid::from_matrix(a).unwrap();
        // exhaustive check over every bipartition
        for mask in 1..(1u32 << 4) - 1 {
            let part = [Subset(mask), Subset(mask).complement(4)];
            assert!(!is_decomposition(&m, &part).unwrap());
        }
    }

    #[test]
    fn identity_splits_into_singletons() {
        let d = decompose(&IntMatrix::identity(4)).unwrap();
        assert_eq!(d.blocks.len(), 4);
    }

    #[test]
    fn zero_columns_and_reordering() {
        let a = IntMatrix::from_rows(&[[0, 2, 0, 1], [0, 0, 1, 0]]);
        let d = decompose(&a).unwrap();
        assert_eq!(sets(&d.blocks), vec![vec![1], vec![2, 4], vec![3]]);
        assert_eq!(d.order, vec![2, 3, 1, 4]);
        assert!(is_decomposition(&ArithmeticMatroid::from_matrix(&a).unwrap(), &d.blocks).unwrap());
    }

    #[test]
    fn trivial_and_invalid_partitions() {
        let m = ArithmeticMatroid::from_matrix(&IntMatrix::from_rows(&[[1, 1]])).unwrap();
        assert!(is_decomposition(&m, &[m.ground()]).unwrap());
        assert!(!is_decomposition(&m, &[Subset::singleton(1), Subset::singleton(2)]).unwrap());
        assert!(is_decomposition(&m, &[Subset::singleton(1)]).is_err());
        assert!(is_decomposition(&m, &[m.ground(), Subset::singleton(1)]).is_err());
    }
}
