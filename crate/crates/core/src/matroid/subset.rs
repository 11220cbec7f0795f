use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use crate::error::{Error, Result};

/// A subset of the groundset `{1, ..., n}`, encoded as a bitmask where
/// element `e` occupies bit `e - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full groundset `{1, ..., n}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 31);
        Subset((1u32 << n) - 1)
    }

    pub fn singleton(e: usize) -> Subset {
        debug_assert!(e >= 1);
        Subset(1 << (e - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        elements.into_iter().fold(Subset::EMPTY, |s, e| s | Subset::singleton(e))
    }

    #[inline]
    pub fn bits(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> (e - 1) & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, e: usize) -> Subset {
        self | Subset::singleton(e)
    }

    pub fn without(self, e: usize) -> Subset {
        self - Subset::singleton(e)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n) - self
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(e)
        })
    }

    /// 0-based column indices of the elements.
    pub fn indices(self) -> Vec<usize> {
        self.elements().map(|e| e - 1).collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Subset(cur))
        })
    }

    /// All subsets of `{1, ..., n}`, in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << n).map(Subset)
    }

    /// JSON key: comma-joined sorted elements, `""` for the empty set.
    pub fn key(self) -> String {
        self.elements().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse_key(key: &str, n: usize) -> Result<Subset> {
        let key = key.trim();
        if key.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut s = Subset::EMPTY;
        for tok in key.split(',') {
            let e: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad element `{tok}` in subset key `{key}`")))?;
            if e == 0 || e > n {
                return Err(Error::Parse(format!("element {e} outside 1..={n} in `{key}`")));
            }
            if s.contains(e) {
                return Err(Error::Parse(format!("repeated element {e} in `{key}`")));
            }
            s = s.with(e);
        }
        Ok(s)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

/// Symmetric difference.
impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}
