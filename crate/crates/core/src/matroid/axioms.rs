use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{ArithmeticMatroid, Subset};
use crate::error::{Error, Result};
use crate::par;

/// A molecule `(X, Y)` with `Y = X + T + F` (disjoint), where `F = Y - cl(X)`
/// and `T = (cl(X) & Y) - X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Molecule {
    pub x: Subset,
    pub y: Subset,
    pub t: Subset,
    pub f: Subset,
}

impl fmt::Display for Molecule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) with T = {}, F = {}", self.x, self.y, self.t, self.f)
    }
}

/// First failure found by an axiom check, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("rank axiom: rk({subset}) = {rank} exceeds |{subset}|")]
    RankBound { subset: Subset, rank: usize },
    #[error("rank axiom: adding element {element} to {subset} changes the rank from {before} to {after}")]
    RankIncrement {
        subset: Subset,
        element: usize,
        before: usize,
        after: usize,
    },
    #[error("rank axiom: submodularity fails for {x} and {y}")]
    Submodular { x: Subset, y: Subset },
    #[error("rank axiom: rk(empty set) = {0}")]
    EmptyRank(usize),
    #[error("(A1) fails for X = {subset}, e = {element}: m(X) = {m_x}, m(X + e) = {m_xe}")]
    A1 {
        subset: Subset,
        element: usize,
        m_x: BigInt,
        m_xe: BigInt,
    },
    #[error("(A2) fails at molecule {molecule}: m(X) m(Y) = {lhs} but m(X + T) m(X + F) = {rhs}")]
    A2 {
        molecule: Molecule,
        lhs: BigInt,
        rhs: BigInt,
    },
    #[error("(P) fails at molecule {molecule}: alternating sum is {sum}")]
    P { molecule: Molecule, sum: BigInt },
}

impl ArithmeticMatroid {
    /// Checks `rk(X) <= |X|`, unit increase, and submodularity.
    pub fn check_rank_function(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.n;
        if self.rk(Subset::EMPTY) != 0 {
            return Err(AxiomViolation::EmptyRank(self.rk(Subset::EMPTY)));
        }
        for x in Subset::all(n) {
            if self.rk(x) > x.len() {
                return Err(AxiomViolation::RankBound { subset: x, rank: self.rk(x) });
            }
            for e in (x.complement(n)).elements() {
                let (before, after) = (self.rk(x), self.rk(x.with(e)));
                if after < before || after > before + 1 {
                    return Err(AxiomViolation::RankIncrement { subset: x, element: e, before, after });
                }
            }
        }
        let hit = par::find_first(0..1usize << n, |xb| {
            let x = Subset(xb as u32);
            Subset::all(n)
                .find(|&y| self.rk(x | y) + self.rk(x & y) > self.rk(x) + self.rk(y))
                .map(|y| AxiomViolation::Submodular { x, y })
        });
        hit.map_or(Ok(()), Err)
    }

    pub fn is_rank_function(&self) -> bool {
        self.check_rank_function().is_ok()
    }

    /// The molecule decomposition of `(x, y)`, or `None` if the pair is not a molecule.
    pub fn molecule(&self, x: Subset, y: Subset) -> Result<Option<Molecule>> {
        if !x.is_subset_of(y) || !y.is_subset_of(self.ground()) {
            return Err(Error::Precondition(format!("{x} is not a subset of {y}")));
        }
        Ok(self.molecule_unchecked(x, y, self.closure(x)))
    }

    // With T inside cl(X), rk(Z + T) = rk(Z) for X <= Z, so the rank identity on
    // every intermediate Z reduces to rk(Y) = rk(X) + |F|.
    fn molecule_unchecked(&self, x: Subset, y: Subset, cl_x: Subset) -> Option<Molecule> {
        let f = y - cl_x;
        let t = (cl_x & y) - x;
        (self.rk(y) == self.rk(x) + f.len()).then_some(Molecule { x, y, t, f })
    }

    /// All molecules, ordered by `(X, Y)` bitmask.
    pub fn molecules(&self) -> Vec<Molecule> {
        let n = self.n;
        let ground = self.ground();
        let per_x = par::map_range(0..1usize << n, |xb| {
            let x = Subset(xb as u32);
            let cl_x = self.closure(x);
            (ground - x)
                .subsets()
                .filter_map(|extra| self.molecule_unchecked(x, x | extra, cl_x))
                .collect::<Vec<_>>()
        });
        let mut all: Vec<Molecule> = per_x.into_iter().flatten().collect();
        all.sort_by_key(|mol| (mol.x, mol.y));
        all
    }

    /// (A1): `m(X + e) | m(X)` when `e` is dependent on `X`, else `m(X) | m(X + e)`.
    pub fn check_a1(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.n;
        let hit = par::find_first(0..1usize << n, |xb| {
            let x = Subset(xb as u32);
            x.complement(n).elements().find_map(|e| {
                let xe = x.with(e);
                let (mx, mxe) = (self.m(x), self.m(xe));
                let ok = if self.rk(xe) == self.rk(x) {
                    mx.is_multiple_of(mxe)
                } else {
                    mxe.is_multiple_of(mx)
                };
                (!ok).then(|| AxiomViolation::A1 {
                    subset: x,
                    element: e,
                    m_x: mx.clone(),
                    m_xe: mxe.clone(),
                })
            })
        });
        hit.map_or(Ok(()), Err)
    }

    /// (A2): `m(X) m(Y) = m(X + T) m(X + F)` on every molecule.
    pub fn check_a2(&self) -> std::result::Result<(), AxiomViolation> {
        self.first_molecule_failure(|mol| {
            let lhs = self.m(mol.x) * self.m(mol.y);
            let rhs = self.m(mol.x | mol.t) * self.m(mol.x | mol.f);
            (lhs != rhs).then_some(AxiomViolation::A2 { molecule: *mol, lhs, rhs })
        })
    }

    /// (P): `sum_{X <= S <= Y} (-1)^{|X + F| - |S|} m(S) >= 0` on every molecule.
    pub fn check_p(&self) -> std::result::Result<(), AxiomViolation> {
        self.first_molecule_failure(|mol| {
            let sum = self.p_sum(mol);
            sum.is_negative().then_some(AxiomViolation::P { molecule: *mol, sum })
        })
    }

    /// The alternating sum of axiom (P) at a molecule.
    pub fn p_sum(&self, mol: &Molecule) -> BigInt {
        let top = (mol.x | mol.f).len();
        let mut sum = BigInt::zero();
        for extra in (mol.y - mol.x).subsets() {
            let s = mol.x | extra;
            if (top + s.len()).is_multiple_of(2) {
                sum += self.m(s);
            } else {
                sum -= self.m(s);
            }
        }
        sum
    }

    fn first_molecule_failure<F>(&self, check: F) -> std::result::Result<(), AxiomViolation>
    where
        F: Fn(&Molecule) -> Option<AxiomViolation> + Sync + Send,
    {
        let mols = self.molecules();
        par::find_first(0..mols.len(), |i| check(&mols[i])).map_or(Ok(()), Err)
    }

    pub fn satisfies_a1(&self) -> bool {
        self.check_a1().is_ok()
    }

    pub fn satisfies_a2(&self) -> bool {
        self.check_a2().is_ok()
    }

    pub fn satisfies_p(&self) -> bool {
        self.check_p().is_ok()
    }

    /// Rank axioms, (A1), (A2) and (P), reporting the first failure.
    pub fn check_arithmetic(&self) -> std::result::Result<(), AxiomViolation> {
        self.check_rank_function()?;
        self.check_a1()?;
        self.check_a2()?;
        self.check_p()
    }

    /// Rank axioms, (A1) and (A2).
    pub fn check_quasi(&self) -> std::result::Result<(), AxiomViolation> {
        self.check_rank_function()?;
        self.check_a1()?;
        self.check_a2()
    }

    pub fn is_arithmetic(&self) -> bool {
        self.check_arithmetic().is_ok()
    }

    pub fn is_quasi(&self) -> bool {
        self.check_quasi().is_ok()
    }

    /// Rank axioms and (P) only.
    pub fn is_pseudo(&self) -> bool {
        self.is_rank_function() && self.satisfies_p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;
    use crate::fixtures::reduction_counterexample;
    use num_traits::One;

    // Brute force over every intermediate Z.
    fn is_molecule_brute(m: &ArithmeticMatroid, x: Subset, y: Subset) -> bool {
        let f = y - m.closure(x);
        (y - x).subsets().all(|e| {
            let z = x | e;
            m.rk(z) == m.rk(x) + (z & f).len()
        })
    }

    #[test]
    fn trivial_molecules() {
        let m = ArithmeticMatroid::uniform(2, 4).unwrap();
        for x in Subset::all(4) {
            let mol = m.molecule(x, x).unwrap().unwrap();
            assert!(mol.t.is_empty() && mol.f.is_empty());
        }
        assert!(m.molecule(Subset::EMPTY, m.ground()).unwrap().is_none());
        assert!(!is_molecule_brute(&m, Subset::EMPTY, m.ground()));
        assert!(m.molecule(Subset::singleton(1), Subset::EMPTY).is_err());
    }

    #[test]
    fn molecules_of_single_element() {
        let m = ArithmeticMatroid::uniform(1, 1).unwrap();
        let mols: Vec<(u32, u32)> = m.molecules().iter().map(|x| (x.x.0, x.y.0)).collect();
        assert_eq!(mols, vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn molecule_count_matches_brute_force() {
        for m in [
            ArithmeticMatroid::uniform(2, 3).unwrap(),
            ArithmeticMatroid::uniform(2, 4).unwrap(),
            ArithmeticMatroid::from_matrix(&IntMatrix::from_rows(&[[1, 2, 0, 1], [0, 0, 1, 1]])).unwrap(),
        ] {
            let mut brute = 0;
            for y in Subset::all(m.n()) {
                for x in y.subsets() {
                    if is_molecule_brute(&m, x, y) {
                        brute += 1;
                        assert!(m.molecule(x, y).unwrap().is_some());
                    } else {
                        assert!(m.molecule(x, y).unwrap().is_none());
                    }
                }
            }
            assert_eq!(m.molecules().len(), brute);
        }
    }

    #[test]
    fn rank_function_violations() {
        let bad = ArithmeticMatroid::new(1, vec![0, 2], vec![BigInt::one(), BigInt::one()]).unwrap();
        assert!(!bad.is_rank_function());
        assert!(ArithmeticMatroid::uniform(2, 6).unwrap().is_rank_function());
    }

    #[test]
    fn example_matroid_is_arithmetic() {
        let m = reduction_counterexample();
        assert!(m.is_rank_function());
        assert!(m.satisfies_a1() && m.satisfies_a2() && m.satisfies_p());
        assert!(m.molecule(Subset::from_elements([1, 2]), m.ground()).unwrap().is_some());
    }

    #[test]
    fn trivial_multiplicity_passes_everything() {
        let m = ArithmeticMatroid::uniform(3, 5).unwrap();
        assert!(m.is_arithmetic() && m.is_quasi() && m.is_pseudo());
    }

    #[test]
    fn a1_witness() {
        // m({1}) = 2 does not divide m({1,2}) = 3 although 2 is independent of 1
        let m = ArithmeticMatroid::uniform(2, 2)
            .unwrap()
            .with_multiplicity(vec![1, 2, 1, 3].into_iter().map(BigInt::from).collect())
            .unwrap();
        match m.check_a1() {
            Err(AxiomViolation::A1 { subset, element, .. }) => {
                assert_eq!((subset, element), (Subset::singleton(1), 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
