use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use super::poset::Poset;
use crate::error::{Error, Result};
use crate::linalg::{sparse_smith, SparseSmith};
use crate::par;

/// A finite abstract simplicial complex on vertices `0..`, stored as its
/// nonempty faces grouped by dimension. Each face is a strictly increasing
/// vertex list and each dimension is sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Accepts a face set that must already be closed under taking subsets.
    pub fn new(faces: impl IntoIterator<Item = Vec<usize>>) -> Result<SimplicialComplex> {
        let mut set = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("face {f:?} repeats a vertex")));
            }
            if !f.is_empty() {
                set.insert(f);
            }
        }
        for f in &set {
            if f.len() > 1 {
                for skip in 0..f.len() {
                    let sub: Vec<usize> = drop_index(f, skip);
                    if !set.contains(&sub) {
                        return Err(Error::InvalidComplex(format!("face {f:?} lacks its facet {sub:?}")));
                    }
                }
            }
        }
        Ok(Self::from_closed(set))
    }

    /// The smallest complex containing every given face.
    pub fn from_facets(facets: impl IntoIterator<Item = Vec<usize>>) -> SimplicialComplex {
        let mut set = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                set.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect::<Vec<_>>());
            }
        }
        Self::from_closed(set)
    }

    fn from_closed(set: BTreeSet<Vec<usize>>) -> SimplicialComplex {
        let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in set {
            let d = f.len() - 1;
            if faces.len() <= d {
                faces.resize(d + 1, Vec::new());
            }
            faces[d].push(f);
        }
        for level in &mut faces {
            level.sort();
        }
        SimplicialComplex { faces }
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, d: usize) -> &[Vec<usize>] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    /// Number of faces in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Reduced Euler characteristic, counting the empty face in dimension -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum::<i64>()
            - 1
    }

    /// Matrix of the boundary map from `d`-faces to `(d-1)`-faces; `d = 0`
    /// gives the augmentation to the empty face.
    fn boundary(&self, d: usize) -> SparseSmith {
        let cols = self.faces(d);
        if d == 0 {
            let entries: Vec<_> = (0..cols.len()).map(|j| (0, j, 1)).collect();
            return sparse_smith(1, cols.len(), &entries);
        }
        let rows = self.faces(d - 1);
        let index: HashMap<&[usize], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let mut entries = Vec::with_capacity(cols.len() * (d + 1));
        for (j, f) in cols.iter().enumerate() {
            for skip in 0..f.len() {
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                entries.push((index[drop_index(f, skip).as_slice()], j, sign));
            }
        }
        sparse_smith(rows.len(), cols.len(), &entries)
    }
}

fn drop_index(f: &[usize], skip: usize) -> Vec<usize> {
    f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect()
}

/// All chains of `p` as a simplicial complex on its elements. With
/// `drop_bottom` the unique minimum is removed first; the vertex numbering
/// then follows the remaining elements in their original order.
pub fn order_complex(p: &Poset, drop_bottom: bool) -> Result<SimplicialComplex> {
    let p = if drop_bottom {
        let bottom = p
            .minimum()
            .ok_or_else(|| Error::Precondition("poset has no unique minimum".into()))?;
        p.restrict(|i| i != bottom)
    } else {
        p.clone()
    };
    let n = p.len();
    let above: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| p.lt(i, j)).collect()).collect();
    let chains = par::map_range(0..n, |start| {
        let mut out = Vec::new();
        let mut stack = vec![vec![start]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty chain");
            for &next in &above[last] {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
            out.push(chain);
        }
        out
    });
    let mut set = BTreeSet::new();
    for mut c in chains.into_iter().flatten() {
        c.sort_unstable();
        set.insert(c);
    }
    Ok(SimplicialComplex::from_closed(set))
}

/// One reduced homology group: free rank plus torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors greater than one, ascending.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduced integral homology in dimensions `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// Group in dimension `d`, zero beyond the top.
    pub fn group(&self, d: usize) -> HomologyGroup {
        self.groups.get(d).cloned().unwrap_or_default()
    }

    /// `{"0": {"betti": .., "torsion": [..]}, ...}`
    pub fn to_json_value(&self) -> Value {
        let mut map = Map::new();
        for (d, g) in self.groups.iter().enumerate() {
            let torsion: Vec<Value> = g
                .torsion
                .iter()
                .map(|t| Value::Number(Number::from_str(&t.to_string()).expect("integer literal")))
                .collect();
            let mut entry = Map::new();
            entry.insert("betti".into(), Value::from(g.betti));
            entry.insert("torsion".into(), Value::Array(torsion));
            map.insert(d.to_string(), Value::Object(entry));
        }
        Value::Object(map)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Reduced homology from the Smith forms of the boundary maps, one per
/// dimension and computed independently.
pub fn homology(complex: &SimplicialComplex) -> HomologyProfile {
    let Some(top) = complex.dim() else {
        return HomologyProfile::default();
    };
    let smith = par::map_range(0..top + 1, |d| complex.boundary(d));
    let groups = (0..=top)
        .map(|d| {
            let (rank_up, torsion) = match smith.get(d + 1) {
                Some(s) => (s.rank, s.torsion.clone()),
                None => (0, Vec::new()),
            };
            HomologyGroup { betti: complex.faces(d).len() - smith[d].rank - rank_up, torsion }
        })
        .collect();
    HomologyProfile { groups }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(c: &SimplicialComplex) -> String {
        homology(c).to_string()
    }

    #[test]
    fn circle_and_points() {
        let circle = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(profile(&circle), "(0, Z)");
        let points = SimplicialComplex::new([vec![0], vec![1]]).unwrap();
        assert_eq!(profile(&points), "(Z)");
        let simplex = SimplicialComplex::from_facets([vec![0, 1, 2, 3]]);
        assert!(homology(&simplex).is_zero());
        assert!(homology(&SimplicialComplex::default()).is_zero());
    }

    #[test]
    fn projective_plane() {
        let triangles = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        let rp2 = SimplicialComplex::from_facets(triangles.iter().map(|t| t.to_vec()));
        assert_eq!(rp2.f_vector(), vec![6, 15, 10]);
        assert_eq!(profile(&rp2), "(0, Z_2, 0)");
    }

    #[test]
    fn closure_is_checked() {
        assert!(SimplicialComplex::new([vec![0, 1], vec![0]]).is_err());
        assert!(SimplicialComplex::new([vec![0, 0]]).is_err());
    }

    #[test]
    fn order_complexes() {
        let chain = Poset::from_relations(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = order_complex(&chain, true).unwrap();
        assert_eq!(c.f_vector(), vec![2, 1]);
        assert!(homology(&c).is_zero());
        let antichain = Poset::from_relations(vec!["a".into(); 3], &[]).unwrap();
        let c = order_complex(&antichain, false).unwrap();
        assert_eq!(c.f_vector(), vec![3]);
        assert_eq!(profile(&c), "(Z^2)");
        assert!(order_complex(&antichain, true).is_err());
    }

    #[test]
    fn json_shape() {
        let rp2 = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2], vec![0, 2]]);
        let v = homology(&rp2).to_json_value();
        assert_eq!(v["1"]["betti"], 1);
        assert_eq!(v["0"]["torsion"].as_array().unwrap().len(), 0);
    }
}
