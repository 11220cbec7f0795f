//! The reduction `M -> M̄` of a quasi-arithmetic matroid: multiplicities are
//! replaced by basis gcds, normalized so that the result is torsion-free and
//! surjective.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matroid::{ArithmeticMatroid, Molecule, Subset};
use crate::par;

/// `m̄(X) = gcd{m(B) : |B & X| = rk(X)} / gcd{m(B)}` over bases `B`.
///
/// Only the rank axioms, (A1) and (A2) are checked on entry; the result need not
/// satisfy (P) even when the input does.
pub fn reduce(m: &ArithmeticMatroid) -> Result<ArithmeticMatroid> {
    m.check_quasi()?;
    let bases = m.bases();
    let total = bases.iter().fold(BigInt::zero(), |g, &b| g.gcd(m.m(b)));
    let mult = par::map_range(0..1usize << m.n(), |xb| m.basis_gcd(Subset(xb as u32), &bases) / &total);
    m.with_multiplicity(mult)
}

/// A pair of bases `(B1, B2)`.
pub type BasisPair = (Subset, Subset);

/// Pairs of bases `(B1, B2)` with `|X & B1| = rk(X)` and `|Y & B2| = rk(Y)`.
pub fn basis_pairs(m: &ArithmeticMatroid, x: Subset, y: Subset) -> Vec<BasisPair> {
    let bases = m.bases();
    let spans = |s: Subset| -> Vec<Subset> {
        bases.iter().copied().filter(|&b| (b & s).len() == m.rk(s)).collect()
    };
    let (left, right) = (spans(x), spans(y));
    left.iter()
        .flat_map(|&b1| right.iter().map(move |&b2| (b1, b2)))
        .collect()
}

/// Exchange map from the basis pairs of `(X, Y)` to those of `(X + T, X + F)`.
pub fn exchange(mol: &Molecule, (b1, b2): BasisPair) -> BasisPair {
    let xt = mol.x | mol.t;
    ((b1 - mol.x) | (b2 & xt), (b2 - xt) | (b1 & mol.x))
}

/// Inverse of [`exchange`].
pub fn exchange_inverse(mol: &Molecule, (b3, b4): BasisPair) -> BasisPair {
    let xt = mol.x | mol.t;
    ((b3 - xt) | (b4 & mol.x), (b4 - mol.x) | (b3 & xt))
}

/// Every basis pair of the molecule together with its exchange image.
pub fn molecule_basis_bijection(
    m: &ArithmeticMatroid,
    mol: &Molecule,
) -> Result<Vec<(BasisPair, BasisPair)>> {
    if m.molecule(mol.x, mol.y)? != Some(*mol) {
        return Err(Error::Precondition(format!("{mol} is not a molecule")));
    }
    Ok(basis_pairs(m, mol.x, mol.y)
        .into_iter()
        .map(|p| (p, exchange(mol, p)))
        .collect())
}
