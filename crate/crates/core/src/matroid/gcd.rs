use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{ArithmeticMatroid, Subset};
use crate::par;

impl ArithmeticMatroid {
    /// `gcd{m(I) : I <= X, |I| = rk(I) = rk(X)}`.
    pub fn independent_gcd(&self, x: Subset) -> BigInt {
        let r = self.rk(x);
        x.subsets()
            .filter(|&i| i.len() == r && self.is_independent(i))
            .fold(BigInt::zero(), |g, i| g.gcd(self.m(i)))
    }

    /// `gcd{m(B) : B basis, |B & X| = rk(X)}`.
    pub fn basis_gcd(&self, x: Subset, bases: &[Subset]) -> BigInt {
        let r = self.rk(x);
        bases
            .iter()
            .filter(|&&b| (b & x).len() == r)
            .fold(BigInt::zero(), |g, &b| g.gcd(self.m(b)))
    }

    /// First subset where `m` differs from [`independent_gcd`](Self::independent_gcd).
    pub fn gcd_property_witness(&self) -> Option<Subset> {
        par::find_first(0..1usize << self.n, |xb| {
            let x = Subset(xb as u32);
            (!self.is_independent(x) && self.independent_gcd(x) != *self.m(x)).then_some(x)
        })
    }

    /// First subset where `m` differs from [`basis_gcd`](Self::basis_gcd).
    pub fn strong_gcd_property_witness(&self) -> Option<Subset> {
        let bases = self.bases();
        par::find_first(0..1usize << self.n, |xb| {
            let x = Subset(xb as u32);
            (self.basis_gcd(x, &bases) != *self.m(x)).then_some(x)
        })
    }

    pub fn gcd_property(&self) -> bool {
        self.gcd_property_witness().is_none()
    }

    pub fn strong_gcd_property(&self) -> bool {
        self.strong_gcd_property_witness().is_none()
    }
}
