use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::layer::{all_components, Layer};
use crate::error::{Error, Result};
use crate::linalg::{rank, IntMatrix};
use crate::matroid::Subset;
use crate::par;

/// A finite partial order with an explicit comparability matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<String>,
    relations: Vec<[usize; 2]>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity of `leq`.
    pub fn new(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Poset> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidPoset(format!("relation matrix is not {n}x{n}")));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::InvalidPoset(format!("element {i} is not below itself")));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!("elements {i} and {j} are below each other")));
                }
            }
        }
        let hit = par::find_first(0..n, |i| {
            (0..n)
                .filter(|&j| leq[i][j])
                .find_map(|j| (0..n).find(|&k| leq[j][k] && !leq[i][k]).map(|k| (i, j, k)))
        });
        if let Some((i, j, k)) = hit {
            return Err(Error::InvalidPoset(format!("{i} <= {j} <= {k} but not {i} <= {k}")));
        }
        Ok(Poset { labels, leq })
    }

    /// Builds from strict relations `i < j`, which must already be transitive.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::InvalidPoset(format!("relation ({i}, {j}) out of range")));
            }
            if i == j {
                return Err(Error::InvalidPoset(format!("strict relation ({i}, {i})")));
            }
            leq[i][j] = true;
        }
        Poset::new(labels, leq)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// All strict relations `i < j`, ordered.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| (0..self.len()).filter(move |&j| self.lt(i, j)).map(move |j| (i, j)))
            .collect()
    }

    /// Pairs `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| !(0..self.len()).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    /// The unique minimum, if any.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }

    /// Length of the longest chain ending at each element.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        let below = |i: usize| (0..n).filter(|&j| self.lt(j, i)).count();
        order.sort_by_key(|&i| below(i));
        let mut level = vec![0; n];
        for &i in &order {
            level[i] = (0..n).filter(|&j| self.lt(j, i)).map(|j| level[j] + 1).max().unwrap_or(0);
        }
        level
    }

    /// The subposet on the elements for which `keep` holds, in the same order.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Poset {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep(i)).collect();
        Poset {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            leq: idx.iter().map(|&i| idx.iter().map(|&j| self.leq[i][j]).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = PosetJson {
            elements: self.labels.clone(),
            relations: self.relations().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let raw: PosetJson = serde_json::from_str(text)?;
        let rel: Vec<(usize, usize)> = raw.relations.iter().map(|&[i, j]| (i, j)).collect();
        let unique: HashSet<&(usize, usize)> = rel.iter().collect();
        if unique.len() != rel.len() {
            return Err(Error::InvalidPoset("repeated relation".into()));
        }
        Poset::from_relations(raw.elements, &rel)
    }

    /// Hasse diagram in Graphviz format, bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  {i} -> {j};");
        }
        out.push_str("}\n");
        out
    }
}

fn require_nonzero_columns(a: &IntMatrix) -> Result<()> {
    match (0..a.cols()).find(|&j| a.column(j).iter().all(|x| x == &0.into())) {
        Some(j) => Err(Error::Precondition(format!("column {} is zero and defines no hypertorus", j + 1))),
        None => Ok(()),
    }
}

/// Every layer of the central toric arrangement defined by the columns of
/// `a`, sorted with the whole torus first.
pub fn layers(a: &IntMatrix) -> Result<Vec<Layer>> {
    require_nonzero_columns(a)?;
    let subsets: Vec<Subset> = Subset::all(a.cols()).collect();
    let mut all: Vec<Layer> = all_components(a, &subsets).into_iter().flatten().collect();
    all.sort();
    all.dedup();
    Ok(all)
}

/// Layers ordered by reverse inclusion.
pub fn layers_poset(a: &IntMatrix) -> Result<Poset> {
    let all = layers(a)?;
    let leq = par::map_range(0..all.len(), |i| {
        all.iter()
            .map(|w| all[i].contains(w).expect("same ambient dimension"))
            .collect::<Vec<bool>>()
    });
    Poset::new(all.iter().map(ToString::to_string).collect(), leq)
}

/// Pairs `(I, W)` of an independent set and a component of its intersection,
/// with `(I, W) <= (J, V)` when `I <= J` and `W` contains `V`.
pub fn independence_poset(a: &IntMatrix) -> Result<Poset> {
    require_nonzero_columns(a)?;
    let independent: Vec<Subset> = Subset::all(a.cols())
        .filter(|x| rank(&a.select_columns(&x.indices())) == x.len())
        .collect();
    let comps = all_components(a, &independent);
    let elements: Vec<(Subset, Layer)> = independent
        .iter()
        .zip(comps)
        .flat_map(|(&i, ws)| ws.into_iter().map(move |w| (i, w)))
        .collect();
    let leq = par::map_range(0..elements.len(), |p| {
        let (i, w) = &elements[p];
        elements
            .iter()
            .map(|(j, v)| i.is_subset_of(*j) && w.contains(v).expect("same ambient dimension"))
            .collect::<Vec<bool>>()
    });
    Poset::new(elements.iter().map(|(i, w)| format!("{i} : {w}")).collect(), leq)
}
