//! Representations of torsion-free arithmetic matroids by integer matrices,
//! up to left multiplication by `GL(r, Z)` and sign changes of columns.
//!
//! A surjective matroid has at most one representation: its entries are
//! determined in absolute value by basis exchanges, and the signs by cycles of
//! the exchange graph. A general torsion-free matroid is handled through its
//! reduction, whose representation `A` gives every other one as `H A` for an
//! upper triangular `H` with a forced diagonal.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{lattice_coordinates, IntMatrix};
use crate::matroid::{ArithmeticMatroid, Subset};
use crate::par;
use crate::reduction::reduce;
use crate::shnf::{lex_cmp, shnf};

/// Whether the columns of `a` represent `m` (same rank and multiplicity tables).
pub fn is_representation(a: &IntMatrix, m: &ArithmeticMatroid) -> bool {
    a.cols() == m.n() && ArithmeticMatroid::from_matrix(a).is_ok_and(|am| &am == m)
}

/// Whether two representations are related by `A -> U A S`.
pub fn is_equivalent(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::Dimension(format!(
            "{}x{} against {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(shnf(a).canonical == shnf(b).canonical)
}

fn require_torsion_free(m: &ArithmeticMatroid) -> Result<()> {
    if m.is_torsion_free() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("m(empty set) = {}, expected 1", m.m(Subset::EMPTY))))
    }
}

/// Candidate matrix with basis columns `m(B) e_k` and other entries
/// `|a_kj| = m(B - b_k + j)` when that is a basis, else 0. Row `k` belongs to
/// the `k`-th smallest element of `basis`.
pub fn exchange_magnitudes(m: &ArithmeticMatroid, basis: Subset) -> Result<IntMatrix> {
    if !m.is_basis(basis) {
        return Err(Error::Precondition(format!("{basis} is not a basis")));
    }
    let rows: Vec<usize> = basis.elements().collect();
    let mut a = IntMatrix::zeros(rows.len(), m.n());
    for (k, &b) in rows.iter().enumerate() {
        for j in 1..=m.n() {
            if j == b {
                a[(k, j - 1)] = m.m(basis).clone();
            } else if !basis.contains(j) {
                let swapped = basis.without(b).with(j);
                if m.is_basis(swapped) {
                    a[(k, j - 1)] = m.m(swapped).clone();
                }
            }
        }
    }
    Ok(a)
}

/// Exchange graph on basis rows and non-basis columns, with vertices
/// identified by groundset element.
struct ExchangeGraph {
    adjacency: Vec<Vec<usize>>,
}

impl ExchangeGraph {
    fn add(&mut self, u: usize, v: usize) {
        for (x, y) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[x];
            if let Err(pos) = list.binary_search(&y) {
                list.insert(pos, y);
            }
        }
    }

    /// Shortest path from `from` to `to`, neighbors visited in increasing order.
    fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.adjacency.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.adjacency[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// Fixes the signs of `magnitudes` (as built by [`exchange_magnitudes`])
/// so that every cycle of the exchange graph satisfies the determinant
/// identity. Edges of a breadth-first spanning forest are positive.
///
/// Returns `None` when some cycle admits no sign, which shows the matroid is
/// not orientable.
pub fn sign_assignment(magnitudes: &IntMatrix, m: &ArithmeticMatroid, basis: Subset) -> Option<IntMatrix> {
    let rows: Vec<usize> = basis.elements().collect();
    let row_of = |e: usize| rows.iter().position(|&b| b == e);
    let n = m.n();
    let mb = m.m(basis).clone();
    let mut a = magnitudes.clone();

    // edges as (row element, column element), lexicographic
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (k, &b) in rows.iter().enumerate() {
        for j in (1..=n).filter(|&j| !basis.contains(j)) {
            if !a[(k, j - 1)].is_zero() {
                edges.push((b, j));
            }
        }
    }
    let mut full = ExchangeGraph { adjacency: vec![Vec::new(); n + 1] };
    for &(i, j) in &edges {
        full.add(i, j);
    }

    // breadth-first forest rooted at the smallest element of each component
    let mut forest = ExchangeGraph { adjacency: vec![Vec::new(); n + 1] };
    let mut seen = vec![false; n + 1];
    for root in 1..=n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &full.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    forest.add(x, y);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut pending: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|&(i, j)| !forest.adjacency[i].contains(&j))
        .collect();

    while !pending.is_empty() {
        let (pos, path) = pending
            .iter()
            .enumerate()
            .map(|(p, &(i, j))| (p, forest.path(i, j).expect("edge endpoints share a component")))
            .min_by_key(|(p, path)| (path.len(), pending[*p]))
            .expect("nonempty");
        let (i, j) = pending.remove(pos);

        // path = i_1, j_1, i_2, j_2, ..., i_k, j_k
        let k = path.len() / 2;
        let is: Vec<usize> = (0..k).map(|l| row_of(path[2 * l]).expect("row vertex")).collect();
        let js: Vec<usize> = (0..k).map(|l| path[2 * l + 1] - 1).collect();
        let along: BigInt = (0..k).map(|l| a[(is[l], js[l])].clone()).product();
        let across_known: BigInt = (1..k).map(|l| a[(is[l], js[l - 1])].clone()).product();

        let swapped = Subset::from_elements(path.iter().copied()) ^ basis;
        let target = if m.is_basis(swapped) {
            Pow::pow(&mb, k - 1) * m.m(swapped)
        } else {
            BigInt::zero()
        };
        let magnitude = a[(is[0], j - 1)].abs();
        let fits = |sign: i64| {
            let across = &across_known * &magnitude * sign;
            let det = if k % 2 == 0 { &along - across } else { &along + across };
            det.abs() == target
        };
        let sign = match (fits(1), fits(-1)) {
            (true, false) => 1,
            (false, true) => -1,
            (true, true) => {
                debug_assert!(false, "both signs fit the cycle through ({i}, {j})");
                return None;
            }
            (false, false) => return None,
        };
        a[(is[0], j - 1)] = magnitude * sign;
        forest.add(i, j);
    }
    Some(a)
}

/// The representation of a torsion-free surjective matroid, in signed Hermite
/// normal form, built from its lexicographically first basis. `None` when the
/// matroid is not representable.
pub fn represent_surjective(m: &ArithmeticMatroid) -> Result<Option<IntMatrix>> {
    represent_surjective_with_basis(m, m.first_basis())
}

/// As [`represent_surjective`], starting from a chosen basis.
pub fn represent_surjective_with_basis(m: &ArithmeticMatroid, basis: Subset) -> Result<Option<IntMatrix>> {
    require_torsion_free(m)?;
    if !m.is_surjective() {
        return Err(Error::Precondition(format!("m(E) = {}, expected 1", m.m(m.ground()))));
    }
    let magnitudes = exchange_magnitudes(m, basis)?;
    let Some(signed) = sign_assignment(&magnitudes, m, basis) else {
        return Ok(None);
    };
    let coords = lattice_coordinates(&signed)?;
    if !is_representation(&coords, m) {
        return Ok(None);
    }
    Ok(Some(shnf(&coords).canonical))
}

/// Whether sign assignment succeeds on the reduction.
pub fn is_orientable(m: &ArithmeticMatroid) -> Result<bool> {
    require_torsion_free(m)?;
    let reduced = reduce(m)?;
    let basis = reduced.first_basis();
    let magnitudes = exchange_magnitudes(&reduced, basis)?;
    Ok(sign_assignment(&magnitudes, &reduced, basis).is_some())
}

/// All essential representations of a matroid up to equivalence.
#[derive(Clone, Debug)]
pub struct RepresentationSet {
    pub matroid: ArithmeticMatroid,
    /// Pairwise inequivalent, each in signed Hermite normal form, sorted.
    pub reps: Vec<IntMatrix>,
    /// Relabelling used internally: position `i` held original element `order[i]`.
    pub order: Vec<usize>,
    /// Number of triangular multipliers tried.
    pub candidates: usize,
}

impl RepresentationSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn contains(&self, a: &IntMatrix) -> bool {
        let c = shnf(a).canonical;
        self.reps.contains(&c)
    }
}

/// Diagonal of the triangular multipliers, or `None` if some entry is not integral.
fn forced_diagonal(m: &ArithmeticMatroid, reduced: &ArithmeticMatroid) -> Option<Vec<BigInt>> {
    let r = m.rank();
    (1..=r)
        .map(|i| {
            let (head, prev) = (Subset::full(i), Subset::full(i - 1));
            let num = m.m(head) * reduced.m(prev);
            let den = m.m(prev) * reduced.m(head);
            num.is_multiple_of(&den).then(|| num / den)
        })
        .collect()
}

/// Every essential representation of a torsion-free arithmetic matroid, up to
/// equivalence.
pub fn all_representations(m: &ArithmeticMatroid) -> Result<RepresentationSet> {
    require_torsion_free(m)?;
    let n = m.n();
    let first = m.first_basis();
    let order: Vec<usize> = first.elements().chain((m.ground() - first).elements()).collect();
    let relabelled = m.permute(&order)?;
    let empty = |candidates| RepresentationSet { matroid: m.clone(), reps: Vec::new(), order: order.clone(), candidates };

    let reduced = reduce(&relabelled)?;
    if !reduced.satisfies_p() {
        return Ok(empty(0));
    }
    let Some(base) = represent_surjective(&reduced)? else {
        return Ok(empty(0));
    };
    let Some(diag) = forced_diagonal(&relabelled, &reduced) else {
        return Ok(empty(0));
    };
    let r = diag.len();

    // mixed radix over the entries above the diagonal, column by column
    let slots: Vec<(usize, usize)> = (0..r).flat_map(|l| (0..l).map(move |k| (k, l))).collect();
    let radices: Vec<usize> = slots
        .iter()
        .map(|&(_, l)| usize::try_from(&diag[l]).expect("diagonal entry fits in usize"))
        .collect();
    let total = radices.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d)).ok_or_else(|| {
        Error::Precondition("too many triangular multipliers to enumerate".into())
    })?;

    let mut inverse = vec![0; n];
    for (pos, &e) in order.iter().enumerate() {
        inverse[e - 1] = pos;
    }
    let found = par::map_range(0..total, |index| {
        let mut h = IntMatrix::zeros(r, r);
        for (l, d) in diag.iter().enumerate() {
            h[(l, l)] = d.clone();
        }
        let mut rest = index;
        for (&(k, l), &d) in slots.iter().zip(&radices) {
            h[(k, l)] = BigInt::from(rest % d);
            rest /= d;
        }
        let candidate = &h * &base;
        is_representation(&candidate, &relabelled).then(|| shnf(&candidate.select_columns(&inverse)).canonical)
    });
    let mut reps: Vec<IntMatrix> = found.into_iter().flatten().collect();
    reps.sort_by(lex_cmp);
    reps.dedup();
    Ok(RepresentationSet { matroid: m.clone(), reps, order, candidates: total })
}

/// `m(E)^(r-1)`, the bound on the number of representations.
pub fn representation_bound(m: &ArithmeticMatroid) -> BigInt {
    match m.rank() {
        0 => BigInt::one(),
        r => Pow::pow(m.m(m.ground()), r - 1),
    }
}
