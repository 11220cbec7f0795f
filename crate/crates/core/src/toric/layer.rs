use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{canonical_column_basis, kernel, snf, torsion_order, IntMatrix, RatVector};
use crate::matroid::Subset;
use crate::par;

/// A connected component of an intersection of hypertori in `(R/Z)^r`: a
/// translate `offset + span(direction)` of a subtorus.
///
/// `direction` is the canonical basis of a saturated sublattice of `Z^r`. The
/// offset is canonical: with `K` the canonical basis of the integer
/// annihilator of `direction`, a point `x` of the component has `K x mod 1`
/// independent of the choice of `x`, and `offset = frac(L (K x mod 1))` for a
/// fixed integer right inverse `L` of `K`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Layer {
    direction: IntMatrix,
    offset: RatVector,
    annihilator: IntMatrix,
}

impl Layer {
    /// The layer through `point` with the given saturated direction lattice.
    pub fn new(direction: &IntMatrix, point: &RatVector) -> Result<Layer> {
        let r = direction.rows();
        if point.dim() != r {
            return Err(Error::Dimension(format!("point in dimension {} for a lattice in Z^{r}", point.dim())));
        }
        let direction = canonical_column_basis(direction);
        let annihilator = kernel(&direction.transpose()).transpose();
        let k = annihilator.rows();
        if direction.cols() + k != r || torsion_order(&direction) != BigInt::from(1) {
            return Err(Error::Precondition("direction lattice is not saturated".into()));
        }
        let kappa = RatVector::new(rational_mul(&annihilator, point.entries())).fract_unit();
        let inverse = right_inverse(&annihilator);
        let offset = RatVector::new(rational_mul(&inverse, kappa.entries())).fract_unit();
        Ok(Layer { direction, offset, annihilator })
    }

    /// The whole torus `(R/Z)^r`.
    pub fn torus(r: usize) -> Layer {
        Layer::new(&IntMatrix::identity(r), &RatVector::zeros(r)).expect("identity is saturated")
    }

    pub fn ambient(&self) -> usize {
        self.direction.rows()
    }

    /// Dimension of the subtorus.
    pub fn dim(&self) -> usize {
        self.direction.cols()
    }

    pub fn direction(&self) -> &IntMatrix {
        &self.direction
    }

    pub fn offset(&self) -> &RatVector {
        &self.offset
    }

    /// Whether `self` contains `other` (so `self <= other` under reverse inclusion).
    pub fn contains(&self, other: &Layer) -> Result<bool> {
        if self.ambient() != other.ambient() {
            return Err(Error::Dimension(format!("layers in Z^{} and Z^{}", self.ambient(), other.ambient())));
        }
        if !(&self.annihilator * &other.direction).is_zero() {
            return Ok(false);
        }
        let diff = other.offset.sub(&self.offset);
        Ok(RatVector::new(rational_mul(&self.annihilator, diff.entries())).is_integral())
    }

    fn sort_key(&self) -> (usize, &[BigInt], &RatVector) {
        (usize::MAX - self.dim(), self.direction.entries(), &self.offset)
    }
}

impl PartialOrd for Layer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Larger subtori first, then by direction and offset.
impl Ord for Layer {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = (0..self.dim())
            .map(|j| {
                let c: Vec<String> = self.direction.column(j).iter().map(ToString::to_string).collect();
                format!("({})", c.join(","))
            })
            .collect();
        write!(f, "{} + <{}>", self.offset, cols.join(", "))
    }
}

fn rational_mul(a: &IntMatrix, v: &[BigRational]) -> Vec<BigRational> {
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .filter(|(x, _)| !x.is_zero())
                .fold(BigRational::zero(), |acc, (x, y)| acc + y * x)
        })
        .collect()
}

// K = U^-1 [I 0] V^-1 for a primitive K, so L = V [I; 0] U satisfies K L = I.
fn right_inverse(k: &IntMatrix) -> IntMatrix {
    let s = snf(k);
    debug_assert!(s.invariant_factors().iter().all(|d| d == &BigInt::from(1)));
    let rows = k.rows();
    let head = s.v.select_columns(&(0..rows).collect::<Vec<_>>());
    &head * &s.u
}

/// Connected components of `{x : A_X^T x in Z^X}`, one per element of the
/// torsion of `Z^r / <A_X>`, sorted.
pub fn components(a: &IntMatrix, x: Subset) -> Vec<Layer> {
    let r = a.rows();
    let sub = a.select_columns(&x.indices());
    if sub.cols() == 0 {
        return vec![Layer::torus(r)];
    }
    let s = snf(&sub.transpose());
    // D = U M V with M = A_X^T; x = V y turns the condition into D y integral
    let factors = s.invariant_factors();
    let direction = kernel(&sub.transpose());
    let mut out = BTreeSet::new();
    let radices: Vec<usize> = factors
        .iter()
        .map(|d| usize::try_from(d).expect("component count fits in memory"))
        .collect();
    let total: usize = radices.iter().product();
    for index in 0..total {
        let mut rest = index;
        let mut y = vec![BigRational::zero(); r];
        for (i, &d) in radices.iter().enumerate() {
            y[i] = BigRational::new(BigInt::from(rest % d), BigInt::from(d));
            rest /= d;
        }
        let point = rational_mul(&s.v, &y);
        out.insert(Layer::new(&direction, &RatVector::new(point)).expect("kernel lattices are saturated"));
    }
    out.into_iter().collect()
}

/// Components for every subset, computed once per distinct column lattice.
pub(crate) fn all_components(a: &IntMatrix, subsets: &[Subset]) -> Vec<Vec<Layer>> {
    let lattices: Vec<IntMatrix> = par::map_slice(subsets, |&x| canonical_column_basis(&a.select_columns(&x.indices())));
    let mut distinct: Vec<(IntMatrix, Subset)> = Vec::new();
    for (lat, &x) in lattices.iter().zip(subsets) {
        if !distinct.iter().any(|(l, _)| l == lat) {
            distinct.push((lat.clone(), x));
        }
    }
    let layers = par::map_slice(&distinct, |(_, x)| components(a, *x));
    lattices
        .iter()
        .map(|lat| {
            let pos = distinct.iter().position(|(l, _)| l == lat).expect("recorded");
            layers[pos].clone()
        })
        .collect()
}
