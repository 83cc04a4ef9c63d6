//! Every group of order 1 to 20, one table per isomorphism class.
//!
//! Abelian members come from [`abelian_groups_of_order`] in the same order;
//! the nonabelian ones are listed below as recipes and sorted by name.
//! Every materialized table is checked for the group axioms with identity 0.

use std::collections::HashMap;

use crate::abelian::abelian_groups_of_order;
use crate::permgroups::{PermGroup, Permutation};
use crate::tables::{
    aut_quasigroup, check_identity, is_latin, left_identity, CayleyTable, Identity,
};
use crate::{Error, Result};

pub const MAX_ORDER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    Direct(Box<Recipe>, Box<Recipe>),
    /// `C_m : C_r`, the generator of `C_r` acting as `x -> k x mod m`.
    Semidirect {
        m: usize,
        k: usize,
        r: usize,
    },
    /// Generators on `0..degree` in cycle notation.
    Permutations {
        degree: usize,
        gens: &'static [&'static str],
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub order: usize,
    pub name: String,
    pub recipe: Recipe,
}

fn c(n: usize) -> Recipe {
    Recipe::Cyclic(n)
}

fn sd(m: usize, k: usize, r: usize) -> Recipe {
    Recipe::Semidirect { m, k, r }
}

fn direct(a: Recipe, b: Recipe) -> Recipe {
    Recipe::Direct(Box::new(a), Box::new(b))
}

const Q8: Recipe = Recipe::Permutations {
    degree: 8,
    gens: &["(0 1 3 6)(2 4 7 5)", "(0 2 3 7)(1 5 6 4)"],
};

fn nonabelian(order: usize) -> Vec<(&'static str, Recipe)> {
    match order {
        6 => vec![("S3", sd(3, 2, 2))],
        8 => vec![("D8", sd(4, 3, 2)), ("Q8", Q8)],
        10 => vec![("D10", sd(5, 4, 2))],
        12 => vec![
            (
                "A4",
                Recipe::Permutations {
                    degree: 4,
                    gens: &["(0 1 2)", "(0 1)(2 3)"],
                },
            ),
            ("D12", sd(6, 5, 2)),
            ("Dic12", sd(3, 2, 4)),
        ],
        14 => vec![("D14", sd(7, 6, 2))],
        16 => vec![
            ("D16", sd(8, 7, 2)),
            ("SD16", sd(8, 3, 2)),
            ("M16", sd(8, 5, 2)),
            ("C4:C4", sd(4, 3, 4)),
            ("C2xD8", direct(c(2), sd(4, 3, 2))),
            ("C2xQ8", direct(c(2), Q8)),
            (
                "Q16",
                Recipe::Permutations {
                    degree: 16,
                    gens: &[
                        "(0 1 3 7 6 9 13 15)(2 4 8 12 11 14 10 5)",
                        "(0 2 6 11)(1 5 9 12)(3 10 13 8)(4 7 14 15)",
                    ],
                },
            ),
            (
                "C4oD8",
                Recipe::Permutations {
                    degree: 16,
                    gens: &[
                        "(0 1 4 9)(2 5 10 14)(3 6 11 15)(7 12 8 13)",
                        "(0 2)(1 5)(3 7)(4 10)(6 12)(8 11)(9 14)(13 15)",
                        "(0 3)(1 6)(2 8)(4 11)(5 13)(7 10)(9 15)(12 14)",
                    ],
                },
            ),
            (
                "C2^2:C4",
                Recipe::Permutations {
                    degree: 16,
                    gens: &[
                        "(0 1)(2 3)(4 6)(5 7)(8 10)(9 11)(12 13)(14 15)",
                        "(0 2 5 9)(1 4 7 12)(3 8 11 14)(6 10 13 15)",
                    ],
                },
            ),
        ],
        18 => vec![
            ("D18", sd(9, 8, 2)),
            ("C3xS3", direct(c(3), sd(3, 2, 2))),
            (
                "C3^2:C2",
                Recipe::Permutations {
                    degree: 6,
                    gens: &["(0 1 2)", "(3 4 5)", "(1 2)(4 5)"],
                },
            ),
        ],
        20 => vec![
            ("D20", sd(10, 9, 2)),
            ("Dic20", sd(5, 4, 4)),
            ("F20", sd(5, 2, 4)),
        ],
        _ => Vec::new(),
    }
}

/// Recipes for the groups of order `n`: abelian first, then nonabelian by name.
pub fn specs_of_order(n: usize) -> Result<Vec<GroupSpec>> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::OutOfCatalog(n));
    }
    let mut out: Vec<GroupSpec> = abelian_groups_of_order(n as u64)
        .into_iter()
        .map(|g| {
            let mut factors = g.chain().iter().map(|&d| c(d as usize));
            let first = factors.next().unwrap_or(c(1));
            GroupSpec {
                order: n,
                name: g.compact_name(),
                recipe: factors.fold(first, direct),
            }
        })
        .collect();
    let mut rest: Vec<GroupSpec> = nonabelian(n)
        .into_iter()
        .map(|(name, recipe)| GroupSpec {
            order: n,
            name: name.to_string(),
            recipe,
        })
        .collect();
    rest.sort_by(|a, b| a.name.cmp(&b.name));
    out.extend(rest);
    Ok(out)
}

impl Recipe {
    pub fn materialize(&self) -> Result<CayleyTable> {
        match self {
            Recipe::Cyclic(n) => CayleyTable::from_fn(*n, |i, j| (i + j) % n),
            Recipe::Direct(a, b) => {
                let (ta, tb) = (a.materialize()?, b.materialize()?);
                let (na, nb) = (ta.order(), tb.order());
                CayleyTable::from_fn(na * nb, |x, y| {
                    ta.get(x % na, y % na) + na * tb.get(x / na, y / na)
                })
            }
            &Recipe::Semidirect { m, k, r } => {
                // (a1, b1)(a2, b2) = (a1 + k^b1 a2, b1 + b2), index a + m b
                let mut pow = vec![1 % m; r];
                for b in 1..r {
                    pow[b] = pow[b - 1] * k % m;
                }
                if pow[r - 1] * k % m != 1 % m {
                    return Err(Error::InvalidTable(format!(
                        "{k} has no order dividing {r} modulo {m}"
                    )));
                }
                CayleyTable::from_fn(m * r, |x, y| {
                    let (a1, b1, a2, b2) = (x % m, x / m, y % m, y / m);
                    (a1 + pow[b1] * a2) % m + m * ((b1 + b2) % r)
                })
            }
            Recipe::Permutations { degree, gens } => {
                let gens: Vec<Permutation> = gens
                    .iter()
                    .map(|g| Permutation::from_cycles(*degree, g))
                    .collect::<Result<_>>()?;
                Ok(permutation_group_table(&PermGroup::closure(
                    *degree, &gens,
                )?))
            }
        }
    }
}

/// Multiplication table of a permutation group, `g * h` being `g` after
/// `h`; element `i` is the `i`-th sorted element, so the identity is 0.
pub fn permutation_group_table(g: &PermGroup) -> CayleyTable {
    use crate::permgroups::GroupElement;
    let index: HashMap<&Permutation, usize> = g
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let els = g.elements();
    CayleyTable::from_fn(els.len(), |i, j| index[&els[i].compose(&els[j])])
        .expect("closed under composition")
}

/// Associative Latin table with two-sided identity 0.
pub fn is_group_table(t: &CayleyTable) -> bool {
    is_latin(t)
        && left_identity(t) == Some(0)
        && (0..t.order()).all(|x| t.get(x, 0) == x)
        && check_identity(t, Identity::Associative).holds()
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub table: CayleyTable,
}

/// Materialized and verified catalog members of order `n`.
pub fn catalog_of_order(n: usize) -> Result<Vec<CatalogEntry>> {
    specs_of_order(n)?
        .into_iter()
        .map(|spec| {
            let table = spec.recipe.materialize()?;
            if table.order() != spec.order || !is_group_table(&table) {
                return Err(Error::InvalidTable(format!(
                    "catalog recipe {} does not give a group of order {}",
                    spec.name, spec.order
                )));
            }
            Ok(CatalogEntry { spec, table })
        })
        .collect()
}

pub fn groups_of_order(n: usize) -> Result<Vec<CayleyTable>> {
    Ok(catalog_of_order(n)?.into_iter().map(|e| e.table).collect())
}

/// Automorphism group of a group table by generator-image search; images
/// of generators are restricted to elements of the same order.
pub fn aut_group_table(t: &CayleyTable) -> Result<PermGroup> {
    if !is_group_table(t) {
        return Err(Error::InvalidTable(
            "not a group table with identity 0".into(),
        ));
    }
    aut_quasigroup(t)
}
