use std::collections::HashMap;

use super::poset::Poset;
use crate::par;

/// Decides whether an order-preserving bijection `p -> q` exists.
///
/// Elements are coloured by iterated refinement (level, then the multisets
/// of colours strictly below and above) with a dictionary shared by both
/// posets, so equal colours mean equal invariants and differing colour
/// histograms refute isomorphism. The search then individualizes one element
/// of the rarest nontrivial class against each same-coloured candidate,
/// refines again, and recurses until every class is a singleton.
pub fn poset_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.len() != q.len() || p.relations().len() != q.relations().len() {
        return false;
    }
    let mut dict = HashMap::new();
    let lp = initial_colours(p, &mut dict);
    let lq = initial_colours(q, &mut dict);
    match refine(p, q, lp, lq) {
        Some((cp, cq)) => search(p, q, cp, cq),
        None => false,
    }
}

fn search(p: &Poset, q: &Poset, cp: Vec<usize>, cq: Vec<usize>) -> bool {
    let mut size: HashMap<usize, usize> = HashMap::new();
    for &c in &cp {
        *size.entry(c).or_default() += 1;
    }
    let Some(i) = (0..p.len()).filter(|&i| size[&cp[i]] > 1).min_by_key(|&i| (size[&cp[i]], i)) else {
        // discrete colouring: the map is forced
        let target: HashMap<usize, usize> = cq.iter().enumerate().map(|(j, &c)| (c, j)).collect();
        let map: Vec<usize> = cp.iter().map(|c| target[c]).collect();
        return (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(map[a], map[b])));
    };
    let fresh = cp.iter().chain(&cq).max().map_or(0, |m| m + 1);
    (0..q.len()).filter(|&j| cq[j] == cp[i]).any(|j| {
        let (mut ip, mut iq) = (cp.clone(), cq.clone());
        ip[i] = fresh;
        iq[j] = fresh;
        match refine(p, q, ip, iq) {
            Some((rp, rq)) => search(p, q, rp, rq),
            None => false,
        }
    })
}

/// Colours from the level and, for every other element, its relation to it
/// together with how many lower and upper bounds the two share.
fn initial_colours(poset: &Poset, dict: &mut HashMap<Vec<usize>, usize>) -> Vec<usize> {
    let n = poset.len();
    let levels = poset.levels();
    let down: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|k| poset.leq(k, i)).collect()).collect();
    let common = |a: &[bool], b: &[bool]| a.iter().zip(b).filter(|&(x, y)| *x && *y).count();
    let keys = par::map_range(0..n, |i| {
        let up_i: Vec<bool> = (0..n).map(|k| poset.leq(i, k)).collect();
        let mut pairs: Vec<(u8, usize, usize)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let rel = u8::from(poset.leq(i, j)) + 2 * u8::from(poset.leq(j, i));
                let up_j: Vec<bool> = (0..n).map(|k| poset.leq(j, k)).collect();
                (rel, common(&down[i], &down[j]), common(&up_i, &up_j))
            })
            .collect();
        pairs.sort_unstable();
        let mut key = vec![levels[i]];
        key.extend(pairs.into_iter().flat_map(|(r, d, u)| [usize::from(r), d, u]));
        key
    });
    keys.into_iter()
        .map(|k| {
            let next = dict.len();
            *dict.entry(k).or_insert(next)
        })
        .collect()
}

/// Joint refinement to a stable partition, or `None` once the colour
/// histograms of the two posets differ.
fn refine(p: &Poset, q: &Poset, mut cp: Vec<usize>, mut cq: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut classes = 0;
    loop {
        let mut dict: HashMap<Vec<usize>, usize> = HashMap::new();
        cp = step(p, &cp, &mut dict);
        cq = step(q, &cq, &mut dict);
        let mut hp = cp.clone();
        let mut hq = cq.clone();
        hp.sort_unstable();
        hq.sort_unstable();
        if hp != hq {
            return None;
        }
        hp.dedup();
        if hp.len() == classes {
            return Some((cp, cq));
        }
        classes = hp.len();
    }
}

fn step(poset: &Poset, colours: &[usize], dict: &mut HashMap<Vec<usize>, usize>) -> Vec<usize> {
    let n = poset.len();
    (0..n)
        .map(|i| {
            let mut below: Vec<usize> = (0..n).filter(|&j| poset.lt(j, i)).map(|j| colours[j]).collect();
            let mut above: Vec<usize> = (0..n).filter(|&j| poset.lt(i, j)).map(|j| colours[j]).collect();
            below.sort_unstable();
            above.sort_unstable();
            let mut key = vec![colours[i], below.len()];
            key.extend(below);
            key.push(usize::MAX);
            key.extend(above);
            let next = dict.len();
            *dict.entry(key).or_insert(next)
        })
        .collect()
}
