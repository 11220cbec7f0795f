//! Arithmetic matroids as explicit rank and multiplicity tables over all
//! subsets of the groundset.

mod axioms;
mod gcd;
mod json;
mod subset;

pub use axioms::{AxiomViolation, Molecule};
pub use subset::Subset;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{invariant_factors, IntMatrix};
use crate::par;

/// Largest supported groundset; tables have `2^n` entries.
pub const MAX_GROUNDSET: usize = 20;

/// A triple `(E, rk, m)` with `E = {1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArithmeticMatroid {
    n: usize,
    rank: Vec<usize>,
    mult: Vec<BigInt>,
}

impl ArithmeticMatroid {
    /// Wraps explicit tables indexed by subset bitmask. Only shapes and
    /// positivity are checked here; the axioms have their own checks.
    pub fn new(n: usize, rank: Vec<usize>, mult: Vec<BigInt>) -> Result<Self> {
        if n > MAX_GROUNDSET {
            return Err(Error::GroundsetTooLarge(n));
        }
        let size = 1usize << n;
        if rank.len() != size || mult.len() != size {
            return Err(Error::InvalidMatroid(format!(
                "tables must have 2^{n} = {size} entries, got {} and {}",
                rank.len(),
                mult.len()
            )));
        }
        if let Some(x) = mult.iter().position(|m| !m.is_positive()) {
            return Err(Error::InvalidMatroid(format!(
                "multiplicity of {} is {}, must be positive",
                Subset(x as u32),
                mult[x]
            )));
        }
        Ok(ArithmeticMatroid { n, rank, mult })
    }

    /// Builds the tables by evaluating `f` on every subset.
    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(Subset) -> (usize, BigInt),
    {
        if n > MAX_GROUNDSET {
            return Err(Error::GroundsetTooLarge(n));
        }
        let (rank, mult) = Subset::all(n).map(f).unzip();
        Self::new(n, rank, mult)
    }

    /// The arithmetic matroid represented by the columns of `a` in `Z^rows`.
    pub fn from_matrix(a: &IntMatrix) -> Result<Self> {
        let n = a.cols();
        if n > MAX_GROUNDSET {
            return Err(Error::GroundsetTooLarge(n));
        }
        let entries = par::map_range(0..1usize << n, |bits| {
            let cols = Subset(bits as u32).indices();
            let f = invariant_factors(&a.select_columns(&cols));
            let m = f.iter().product::<BigInt>().max(BigInt::one());
            (f.len(), m)
        });
        let (rank, mult) = entries.into_iter().unzip();
        Ok(ArithmeticMatroid { n, rank, mult })
    }

    /// Uniform matroid of rank `r` on `n` elements with trivial multiplicity.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        Self::from_fn(n, |x| (x.len().min(r), BigInt::one()))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn rk(&self, x: Subset) -> usize {
        self.rank[x.bits()]
    }

    #[inline]
    pub fn m(&self, x: Subset) -> &BigInt {
        &self.mult[x.bits()]
    }

    /// Rank of the whole groundset.
    pub fn rank(&self) -> usize {
        self.rk(self.ground())
    }

    pub fn rank_table(&self) -> &[usize] {
        &self.rank
    }

    pub fn multiplicity_table(&self) -> &[BigInt] {
        &self.mult
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.rk(x) == x.len()
    }

    pub fn is_basis(&self, x: Subset) -> bool {
        x.len() == self.rank() && self.is_independent(x)
    }

    /// All bases in increasing bitmask order.
    pub fn bases(&self) -> Vec<Subset> {
        Subset::all(self.n).filter(|&b| self.is_basis(b)).collect()
    }

    /// The lexicographically first basis, found greedily.
    pub fn first_basis(&self) -> Subset {
        (1..=self.n).fold(Subset::EMPTY, |b, e| {
            let c = b.with(e);
            if self.is_independent(c) {
                c
            } else {
                b
            }
        })
    }

    /// Largest superset of `x` with the same rank.
    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rk(x);
        (1..=self.n)
            .filter(|&e| self.rk(x.with(e)) == r)
            .fold(x, |c, e| c.with(e))
    }

    pub fn is_torsion_free(&self) -> bool {
        self.m(Subset::EMPTY).is_one()
    }

    pub fn is_surjective(&self) -> bool {
        self.m(self.ground()).is_one()
    }

    /// `rk*(X) = |X| + rk(E - X) - rk(E)`, `m*(X) = m(E - X)`.
    pub fn dual(&self) -> ArithmeticMatroid {
        let n = self.n;
        let r = self.rank();
        let (rank, mult) = Subset::all(n)
            .map(|x| {
                let c = x.complement(n);
                (x.len() + self.rk(c) - r, self.m(c).clone())
            })
            .unzip();
        ArithmeticMatroid { n, rank, mult }
    }

    /// Restriction to `E - x`, relabelled to `{1, ..., n - |x|}` in order.
    pub fn deletion(&self, x: Subset) -> ArithmeticMatroid {
        self.minor(x, Subset::EMPTY)
    }

    /// Contraction of `x`: `rk(Y) = rk(X u Y) - rk(X)` and `m(Y) = m(X u Y)`,
    /// relabelled like [`deletion`](Self::deletion).
    pub fn contraction(&self, x: Subset) -> ArithmeticMatroid {
        self.minor(Subset::EMPTY, x)
    }

    /// Deletes `del` and contracts `con` (disjoint), relabelling the rest.
    pub fn minor(&self, del: Subset, con: Subset) -> ArithmeticMatroid {
        let del = del & self.ground();
        let con = (con & self.ground()) - del;
        let rest: Vec<usize> = (self.ground() - del - con).elements().collect();
        let lift = |y: Subset| Subset::from_elements(y.elements().map(|e| rest[e - 1]));
        let base = self.rk(con);
        let (rank, mult) = Subset::all(rest.len())
            .map(|y| {
                let z = lift(y) | con;
                (self.rk(z) - base, self.m(z).clone())
            })
            .unzip();
        ArithmeticMatroid {
            n: rest.len(),
            rank,
            mult,
        }
    }

    /// Relabels the groundset: new element `i` is old element `order[i - 1]`.
    pub fn permute(&self, order: &[usize]) -> Result<ArithmeticMatroid> {
        let mut seen = vec![false; self.n + 1];
        if order.len() != self.n
            || order.iter().any(|&e| e == 0 || e > self.n || std::mem::replace(&mut seen[e], true))
        {
            return Err(Error::Precondition(format!(
                "{order:?} is not a permutation of 1..={}",
                self.n
            )));
        }
        let lift = |y: Subset| Subset::from_elements(y.elements().map(|e| order[e - 1]));
        Ok(ArithmeticMatroid {
            n: self.n,
            rank: Subset::all(self.n).map(|y| self.rk(lift(y))).collect(),
            mult: Subset::all(self.n).map(|y| self.m(lift(y)).clone()).collect(),
        })
    }

    /// Same tables with `m` replaced.
    pub fn with_multiplicity(&self, mult: Vec<BigInt>) -> Result<ArithmeticMatroid> {
        Self::new(self.n, self.rank.clone(), mult)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn toric() -> IntMatrix {
        IntMatrix::from_rows(&[[1, 1, 1, -3], [0, 5, 0, -5], [0, 0, 5, -5]])
    }

    #[test]
    fn from_identity() {
        let m = ArithmeticMatroid::from_matrix(&IntMatrix::identity(2)).unwrap();
        assert_eq!(m, ArithmeticMatroid::uniform(2, 2).unwrap());
    }

    #[test]
    fn from_toric_matrix() {
        let m = ArithmeticMatroid::from_matrix(&toric()).unwrap();
        assert_eq!(m.m(Subset::EMPTY), &BigInt::one());
        assert_eq!(m.m(m.ground()), &BigInt::from(25));
        assert_eq!(m.rank(), 3);
        assert!(m.is_torsion_free());
        assert!(!m.is_surjective());
        assert_eq!(m.dual().m(Subset::EMPTY), &BigInt::from(25));
        assert_eq!(m.contraction(Subset::singleton(1)).m(Subset::EMPTY), &BigInt::one());
    }

    #[test]
    fn zero_matrix() {
        let m = ArithmeticMatroid::from_matrix(&IntMatrix::zeros(2, 3)).unwrap();
        assert!(m.rank_table().iter().all(|&r| r == 0));
        assert!(m.multiplicity_table().iter().all(One::is_one));
    }

    #[test]
    fn closure_examples() {
        let u = ArithmeticMatroid::uniform(2, 3).unwrap();
        assert_eq!(u.closure(Subset::singleton(1)), Subset::singleton(1));
        assert_eq!(u.closure(u.ground()), u.ground());
        let p = ArithmeticMatroid::from_matrix(&IntMatrix::from_rows(&[[1, 2]])).unwrap();
        assert_eq!(p.closure(Subset::singleton(1)), Subset::from_elements([1, 2]));
    }

    #[test]
    fn duality_and_minors() {
        let m = ArithmeticMatroid::from_matrix(&toric()).unwrap();
        assert_eq!(m.dual().dual(), m);
        assert_eq!(m.deletion(Subset::EMPTY), m);
        let u = ArithmeticMatroid::uniform(2, 5).unwrap();
        assert_eq!(u.dual(), ArithmeticMatroid::uniform(3, 5).unwrap());
        let c = ArithmeticMatroid::from_matrix(&IntMatrix::identity(2))
            .unwrap()
            .contraction(Subset::singleton(1));
        assert_eq!(c, ArithmeticMatroid::from_matrix(&IntMatrix::identity(1)).unwrap());
    }

    #[test]
    fn first_basis_and_permute() {
        let a = IntMatrix::from_rows(&[[1, 2, 0], [0, 0, 1]]);
        let m = ArithmeticMatroid::from_matrix(&a).unwrap();
        assert_eq!(m.first_basis(), Subset::from_elements([1, 3]));
        let p = m.permute(&[1, 3, 2]).unwrap();
        assert_eq!(p, ArithmeticMatroid::from_matrix(&a.select_columns(&[0, 2, 1])).unwrap());
        assert!(m.permute(&[1, 1, 2]).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(ArithmeticMatroid::new(1, vec![0, 1], vec![BigInt::one()]).is_err());
        assert!(ArithmeticMatroid::new(1, vec![0, 1], vec![BigInt::one(), BigInt::from(0)]).is_err());
        assert!(matches!(
            ArithmeticMatroid::uniform(1, 21),
            Err(Error::GroundsetTooLarge(21))
        ));
    }
}
