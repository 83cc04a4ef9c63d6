//! Recognition of `T : C2` shapes, with `T` abelian of index two.

use std::collections::HashMap;

use super::{GroupElement, PermGroup, Permutation};

/// An abelian normal subgroup of index two and an involution outside it.
#[derive(Clone, Debug)]
pub struct IndexTwoSplit {
    pub subgroup: PermGroup,
    pub involution: Permutation,
    pub subgroup_cyclic: bool,
    /// The involution acts on the subgroup as inversion.
    pub inverts: bool,
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    /// Every split, in the order the index-two subgroups were found.
    pub splits: Vec<IndexTwoSplit>,
    /// Some split has a cyclic subgroup inverted by the involution.
    pub dihedral: bool,
}

impl StructureReport {
    pub fn splits_over_abelian_index_two(&self) -> bool {
        !self.splits.is_empty()
    }

    /// The split witnessing the dihedral shape, else the first split.
    pub fn preferred_split(&self) -> Option<&IndexTwoSplit> {
        self.splits
            .iter()
            .find(|s| s.subgroup_cyclic && s.inverts)
            .or_else(|| self.splits.first())
    }
}

fn has_element_of_order(g: &PermGroup, order: usize) -> bool {
    g.elements().iter().any(|x| x.order() == order)
}

/// Labels each element by its coset in `G / <squares>`, an elementary
/// abelian 2-group, as a bit vector over a greedily chosen basis.
fn square_quotient_labels(g: &PermGroup) -> (Vec<u64>, usize) {
    let squares: Vec<Permutation> = g.elements().iter().map(|x| x.compose(x)).collect();
    let h = PermGroup::closure(g.degree(), &squares).expect("subgroup of an enumerated group");
    let mut label: HashMap<&Permutation, u64> = HashMap::new();
    for x in g.elements() {
        if h.contains(x) {
            label.insert(x, 0);
        }
    }
    let mut rank = 0;
    for b in g.elements() {
        if label.contains_key(b) {
            continue;
        }
        assert!(rank < 63, "quotient rank too large");
        let bit = 1u64 << rank;
        let known: Vec<(Permutation, u64)> =
            label.iter().map(|(k, v)| ((*k).clone(), *v)).collect();
        for (x, m) in known {
            let y = x.compose(b);
            let pos = g.position(&y).expect("closed");
            label.insert(&g.elements()[pos], m ^ bit);
        }
        rank += 1;
    }
    let labels = g.elements().iter().map(|x| label[x]).collect();
    (labels, rank)
}

pub fn recognize_structure(g: &PermGroup) -> StructureReport {
    let order = g.order();
    let abelian = g.is_abelian();
    let cyclic = abelian && has_element_of_order(g, order);
    let mut splits = Vec::new();

    if order.is_multiple_of(2) {
        let (labels, rank) = square_quotient_labels(g);
        for functional in 1u64..(1u64 << rank) {
            let (inside, outside): (Vec<_>, Vec<_>) = g
                .elements()
                .iter()
                .zip(&labels)
                .partition(|(_, &l)| (l & functional).count_ones() % 2 == 0);
            let t = g.subgroup(inside.into_iter().map(|(x, _)| x.clone()).collect());
            if !t.is_abelian() {
                continue;
            }
            let Some(s) = outside
                .into_iter()
                .map(|(x, _)| x)
                .find(|x| x.compose(x).is_identity())
            else {
                continue;
            };
            let subgroup_cyclic = has_element_of_order(&t, t.order());
            let inverts = t
                .generators()
                .iter()
                .all(|x| s.compose(x).compose(s) == x.inverse());
            splits.push(IndexTwoSplit {
                subgroup: t,
                involution: s.clone(),
                subgroup_cyclic,
                inverts,
            });
        }
    }
    let dihedral = order >= 4 && splits.iter().any(|s| s.subgroup_cyclic && s.inverts);
    StructureReport {
        order,
        abelian,
        cyclic,
        splits,
        dihedral,
    }
}
