//! Isomorphism search between quasigroup tables by generator images.
//!
//! A homomorphism out of a quasigroup is fixed by the images of a
//! generating sequence. The search maps a greedily chosen short generating
//! sequence onto elements carrying the same invariants, extends the map
//! along recorded products and verifies it against the full table.

use super::{axioms::is_latin, CayleyTable};
use crate::permgroups::{PermGroup, Permutation};
use crate::{Error, Result};

/// Per-element data preserved by every isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementInvariant {
    left_identity: bool,
    right_identity: bool,
    idempotent: bool,
    left_fixed: usize,
    right_fixed: usize,
    /// (tail, period) of `x, x*x, (x*x)*x, ...`
    right_powers: (usize, usize),
    /// (tail, period) of `x, x*x, x*(x*x), ...`
    left_powers: (usize, usize),
    square_is_left_identity: bool,
}

fn rho(n: usize, start: usize, step: impl Fn(usize) -> usize) -> (usize, usize) {
    let mut first_seen = vec![usize::MAX; n];
    let mut x = start;
    let mut k = 0;
    while first_seen[x] == usize::MAX {
        first_seen[x] = k;
        x = step(x);
        k += 1;
    }
    (first_seen[x], k - first_seen[x])
}

pub fn element_invariants(t: &CayleyTable) -> Vec<ElementInvariant> {
    let n = t.order();
    let lid = super::left_identity(t);
    (0..n)
        .map(|x| ElementInvariant {
            left_identity: (0..n).all(|y| t.get(x, y) == y),
            right_identity: (0..n).all(|y| t.get(y, x) == y),
            idempotent: t.get(x, x) == x,
            left_fixed: (0..n).filter(|&y| t.get(x, y) == y).count(),
            right_fixed: (0..n).filter(|&y| t.get(y, x) == y).count(),
            right_powers: rho(n, x, |p| t.get(p, x)),
            left_powers: rho(n, x, |p| t.get(x, p)),
            square_is_left_identity: Some(t.get(x, x)) == lid,
        })
        .collect()
}

fn closure_size(t: &CayleyTable, gens: &[usize]) -> usize {
    plan_from(t, gens).len() + dedup_len(gens)
}

fn dedup_len(gens: &[usize]) -> usize {
    let mut g = gens.to_vec();
    g.sort_unstable();
    g.dedup();
    g.len()
}

/// Products `(new, a, b)` with `new = a * b`, in the order each element
/// first appears when closing `gens` under the operation.
fn plan_from(t: &CayleyTable, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let n = t.order();
    let mut seen = vec![false; n];
    let mut known = Vec::with_capacity(n);
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            known.push(g);
        }
    }
    let mut steps = Vec::new();
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        for j in 0..=i {
            let y = known[j];
            for (a, b) in [(x, y), (y, x)] {
                let c = t.get(a, b);
                if !seen[c] {
                    seen[c] = true;
                    known.push(c);
                    steps.push((c, a, b));
                }
            }
        }
        i += 1;
    }
    steps
}

/// A short sequence of elements generating `t` under its operation, grown
/// greedily by largest closure; candidates with rarer invariants win ties.
pub fn generating_sequence(t: &CayleyTable) -> Vec<usize> {
    let n = t.order();
    let inv = element_invariants(t);
    let rarity = |x: usize| inv.iter().filter(|&&i| i == inv[x]).count();
    let mut gens: Vec<usize> = Vec::new();
    let mut size = 0;
    while size < n {
        let best = (0..n)
            .filter(|x| !gens.contains(x))
            .map(|x| {
                let mut g = gens.clone();
                g.push(x);
                (
                    closure_size(t, &g),
                    std::cmp::Reverse(rarity(x)),
                    std::cmp::Reverse(x),
                )
            })
            .max()
            .expect("some element remains");
        gens.push(best.2 .0);
        size = best.0;
    }
    gens
}

struct Search<'a> {
    source: &'a CayleyTable,
    target: &'a CayleyTable,
    gens: Vec<usize>,
    steps: Vec<(usize, usize, usize)>,
    candidates: Vec<Vec<usize>>,
    source_inv: Vec<ElementInvariant>,
    target_inv: Vec<ElementInvariant>,
}

impl<'a> Search<'a> {
    fn new(source: &'a CayleyTable, target: &'a CayleyTable) -> Option<Self> {
        let source_inv = element_invariants(source);
        let target_inv = element_invariants(target);
        let mut a = source_inv.clone();
        let mut b = target_inv.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let gens = generating_sequence(source);
        let steps = plan_from(source, &gens);
        let candidates = gens
            .iter()
            .map(|&g| {
                (0..target.order())
                    .filter(|&y| target_inv[y] == source_inv[g])
                    .collect()
            })
            .collect();
        Some(Self {
            source,
            target,
            gens,
            steps,
            candidates,
            source_inv,
            target_inv,
        })
    }

    /// Extends generator images to a full map and verifies it.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let n = self.source.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for (&g, &y) in self.gens.iter().zip(images) {
            if used[y] {
                return None;
            }
            used[y] = true;
            map[g] = y;
        }
        for &(c, a, b) in &self.steps {
            let y = self.target.get(map[a], map[b]);
            if used[y] || self.target_inv[y] != self.source_inv[c] {
                return None;
            }
            used[y] = true;
            map[c] = y;
        }
        for x in 0..n {
            for z in 0..n {
                if map[self.source.get(x, z)] != self.target.get(map[x], map[z]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&self, all: bool, out: &mut Vec<Vec<usize>>) {
        let mut images = Vec::with_capacity(self.gens.len());
        self.descend(&mut images, all, out);
    }

    fn descend(&self, images: &mut Vec<usize>, all: bool, out: &mut Vec<Vec<usize>>) -> bool {
        let k = images.len();
        if k == self.gens.len() {
            if let Some(map) = self.extend(images) {
                out.push(map);
                return !all;
            }
            return false;
        }
        for &y in &self.candidates[k] {
            if images.contains(&y) {
                continue;
            }
            images.push(y);
            let done = self.descend(images, all, out);
            images.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// A bijection `pi` with `pi(x*y) = pi(x) * pi(y)`, if one exists.
pub fn quasigroup_isomorphic(t1: &CayleyTable, t2: &CayleyTable) -> Result<Option<Permutation>> {
    if !is_latin(t1) || !is_latin(t2) {
        return Err(Error::NotLatin);
    }
    if t1.order() != t2.order() {
        return Ok(None);
    }
    let Some(search) = Search::new(t1, t2) else {
        return Ok(None);
    };
    let mut out = Vec::new();
    search.run(false, &mut out);
    Ok(out
        .pop()
        .map(|m| Permutation::from_images(m).expect("verified bijection")))
}

/// Every automorphism of a Latin table.
pub fn aut_quasigroup(t: &CayleyTable) -> Result<PermGroup> {
    if !is_latin(t) {
        return Err(Error::NotLatin);
    }
    let search = Search::new(t, t).expect("a table matches itself");
    let mut out = Vec::new();
    search.run(true, &mut out);
    let elements = out
        .into_iter()
        .map(|m| Permutation::from_images(m).expect("verified bijection"))
        .collect();
    Ok(PermGroup::from_elements(t.order(), elements))
}
