use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use super::{GroupElement, Permutation};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A permutation group with every element listed.
///
/// Elements are kept sorted, so the identity is always first and two groups
/// are equal exactly when their element lists are.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::closure_with_budget(degree, gens, DEFAULT_BUDGET)
    }

    /// Breadth-first closure of `gens` under composition.
    pub fn closure_with_budget(degree: usize, gens: &[Permutation], budget: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let elements = bfs_closure(Permutation::identity(degree), gens, budget)?;
        Ok(Self::assemble(degree, gens.to_vec(), elements))
    }

    /// Wraps an element list that is already closed under composition; a
    /// small generating set is chosen greedily.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        debug_assert!(elements.first().is_some_and(|e| e.is_identity()));
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if span.len() == elements.len() {
                break;
            }
            if !span.contains(e) {
                gens.push(e.clone());
                span = bfs_closure(Permutation::identity(degree), &gens, usize::MAX)
                    .expect("unbounded closure")
                    .into_iter()
                    .collect();
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        Self::assemble(degree, gens, elements)
    }

    fn assemble(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Self {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_abelian(&self) -> bool {
        // generators suffice
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Representatives of the conjugacy classes of elements squaring to the
    /// identity, the identity class included.
    pub fn involution_classes(&self) -> Vec<Permutation> {
        involution_classes_of(&self.elements)
    }

    pub fn conjugacy_class(&self, a: &Permutation) -> Result<Vec<Permutation>> {
        if !self.contains(a) {
            return Err(Error::NotAMember);
        }
        Ok(conjugacy_class_of(&self.elements, a))
    }

    pub fn centralizer(&self, a: &Permutation) -> Result<PermGroup> {
        if !self.contains(a) {
            return Err(Error::NotAMember);
        }
        Ok(self.subgroup(centralizer_of(&self.elements, a)))
    }

    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::InvalidPermutation(format!(
                "point {point} exceeds degree {}",
                self.degree
            )));
        }
        Ok(self.subgroup(
            self.elements
                .iter()
                .filter(|g| g.apply(point) == point)
                .cloned()
                .collect(),
        ))
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut pts: Vec<usize> = self.elements.iter().map(|g| g.apply(point)).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// The subgroup on a subset of the elements; the caller guarantees closure.
    pub(crate) fn subgroup(&self, elements: Vec<Permutation>) -> PermGroup {
        PermGroup::from_elements(self.degree, elements)
    }

    /// Whether `sub` is normalized by every generator of `self`.
    pub fn is_normal_subgroup(&self, sub: &PermGroup) -> bool {
        sub.elements.iter().all(|h| self.contains(h))
            && self.generators.iter().all(|g| {
                let gi = g.inverse();
                sub.generators
                    .iter()
                    .all(|h| sub.contains(&g.compose(h).compose(&gi)))
            })
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {} generated by [", self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, {self})", self.degree)
    }
}

fn bfs_closure<E: GroupElement>(identity: E, gens: &[E], budget: usize) -> Result<Vec<E>> {
    let mut seen: HashSet<E> = HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut next = 0;
    while next < out.len() {
        let x = out[next].clone();
        next += 1;
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                out.push(y);
                if out.len() > budget {
                    return Err(Error::BudgetExceeded {
                        budget,
                        what: "group closure".into(),
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn involutions_of<E: GroupElement>(elements: &[E]) -> Vec<E> {
    let mut out: Vec<E> = elements
        .iter()
        .filter(|x| x.is_involution_or_identity())
        .cloned()
        .collect();
    out.sort();
    out
}

/// `{ g a g^-1 : g in elements }`, sorted.
pub fn conjugacy_class_of<E: GroupElement>(elements: &[E], a: &E) -> Vec<E> {
    let mut class: Vec<E> = elements
        .par_iter()
        .map(|g| g.compose(a).compose(&g.inverse()))
        .collect();
    class.sort();
    class.dedup();
    class
}

pub fn centralizer_of<E: GroupElement>(elements: &[E], a: &E) -> Vec<E> {
    elements
        .par_iter()
        .filter(|g| g.compose(a) == a.compose(g))
        .cloned()
        .collect()
}

/// Least representative of each conjugacy class of elements `x` with
/// `x^2 = 1`, sorted; the identity is the first representative.
pub fn involution_classes_of<E: GroupElement>(elements: &[E]) -> Vec<E> {
    let candidates = involutions_of(elements);
    if candidates.len() <= 1 {
        return candidates;
    }
    let inverses: Vec<E> = elements.par_iter().map(|g| g.inverse()).collect();
    let mut assigned: HashSet<E> = HashSet::new();
    let mut reps = Vec::new();
    for a in candidates {
        if assigned.contains(&a) {
            continue;
        }
        let class: Vec<E> = elements
            .par_iter()
            .zip(inverses.par_iter())
            .map(|(g, gi)| g.compose(&a).compose(gi))
            .collect();
        assigned.extend(class);
        reps.push(a);
    }
    reps
}
