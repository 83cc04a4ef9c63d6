//! Counting and listing AG-groups and Bol* quasigroups up to isomorphism.
//!
//! Isomorphism classes of twists over a fixed base correspond to conjugacy
//! classes of involutions (identity included) in its automorphism group, so
//! counts are sums of class numbers over the base groups of the order. The
//! identity class gives the associative member.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::{abelian_groups_of_order, abelian_table, aut_abelian, matrix_to_permutation};
use crate::catalog::{aut_group_table, catalog_of_order};
use crate::permgroups::involution_classes_of;
use crate::tables::{check_identity, is_ag_group, is_latin, CayleyTable, Identity};
use crate::twist::{twist, BaseKind, TwistSpec};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    #[serde(rename = "ag")]
    Ag,
    #[serde(rename = "bolstar")]
    BolStar,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ag" => Ok(Kind::Ag),
            "bolstar" => Ok(Kind::BolStar),
            _ => Err(Error::InvalidTwist(format!(
                "unknown enumeration kind `{s}`"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Ag => "ag",
            Kind::BolStar => "bolstar",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Representative {
    /// Name of the base group, e.g. `C2xC6` or `D8`.
    pub base_name: String,
    pub spec: TwistSpec,
    pub table: CayleyTable,
}

#[derive(Clone, Debug)]
pub struct EnumerationRecord {
    pub order: usize,
    pub kind: Kind,
    pub associative: usize,
    pub nonassociative: usize,
    pub total: usize,
    pub representatives: Option<Vec<Representative>>,
}

#[derive(Serialize)]
struct RecordJson {
    order: usize,
    kind: Kind,
    associative: usize,
    nonassociative: usize,
    total: usize,
}

impl EnumerationRecord {
    fn from_counts(order: usize, kind: Kind, class_counts: &[usize]) -> Self {
        let associative = class_counts.len();
        let total: usize = class_counts.iter().sum();
        Self {
            order,
            kind,
            associative,
            nonassociative: total - associative,
            total,
            representatives: None,
        }
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.associative, self.nonassociative, self.total)
    }

    /// `{"order":n,"kind":"ag","associative":a,"nonassociative":b,"total":t}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RecordJson {
            order: self.order,
            kind: self.kind,
            associative: self.associative,
            nonassociative: self.nonassociative,
            total: self.total,
        })
        .expect("plain struct")
    }
}

fn ag_classes(n: usize) -> Result<Vec<usize>> {
    abelian_groups_of_order(n as u64)
        .par_iter()
        .map(|g| Ok(involution_classes_of(&aut_abelian(g)?).len()))
        .collect()
}

pub fn count_ag(n: usize) -> Result<EnumerationRecord> {
    assert!(n >= 1, "order must be positive");
    Ok(EnumerationRecord::from_counts(n, Kind::Ag, &ag_classes(n)?))
}

pub fn count_bolstar(n: usize) -> Result<EnumerationRecord> {
    let groups: Vec<CayleyTable> = catalog_of_order(n)?.into_iter().map(|e| e.table).collect();
    count_bolstar_over(&groups)
}

/// Counts over user-supplied group tables, assumed pairwise non-isomorphic
/// and of one order.
pub fn count_bolstar_over(groups: &[CayleyTable]) -> Result<EnumerationRecord> {
    let order = groups.first().map_or(0, CayleyTable::order);
    if groups.iter().any(|g| g.order() != order) {
        return Err(Error::InvalidTable("groups of different orders".into()));
    }
    let counts: Vec<usize> = groups
        .par_iter()
        .map(|g| Ok(aut_group_table(g)?.involution_classes().len()))
        .collect::<Result<_>>()?;
    Ok(EnumerationRecord::from_counts(
        order,
        Kind::BolStar,
        &counts,
    ))
}

pub fn count(kind: Kind, n: usize) -> Result<EnumerationRecord> {
    match kind {
        Kind::Ag => count_ag(n),
        Kind::BolStar => count_bolstar(n),
    }
}

/// Counts for every order in `from..=to`, in increasing order.
pub fn count_range(kind: Kind, from: usize, to: usize) -> Result<Vec<EnumerationRecord>> {
    (from..=to)
        .into_par_iter()
        .map(|n| count(kind, n))
        .collect()
}

pub fn list_ag(n: usize) -> Result<EnumerationRecord> {
    let mut reps = Vec::new();
    let mut counts = Vec::new();
    for g in abelian_groups_of_order(n as u64) {
        let base = abelian_table(&g);
        let classes = involution_classes_of(&aut_abelian(&g)?);
        counts.push(classes.len());
        for a in classes {
            let alpha = matrix_to_permutation(&g, &a)?;
            let spec = TwistSpec::new(base.clone(), BaseKind::Abelian, alpha)?;
            reps.push(Representative {
                base_name: g.compact_name(),
                table: twist(&spec),
                spec,
            });
        }
    }
    let mut record = EnumerationRecord::from_counts(n, Kind::Ag, &counts);
    record.representatives = Some(reps);
    Ok(record)
}

pub fn list_bolstar(n: usize) -> Result<EnumerationRecord> {
    let mut reps = Vec::new();
    let mut counts = Vec::new();
    for entry in catalog_of_order(n)? {
        let classes = aut_group_table(&entry.table)?.involution_classes();
        counts.push(classes.len());
        for alpha in classes {
            let spec = TwistSpec::new(entry.table.clone(), BaseKind::Group, alpha)?;
            reps.push(Representative {
                base_name: entry.spec.name.clone(),
                table: twist(&spec),
                spec,
            });
        }
    }
    let mut record = EnumerationRecord::from_counts(n, Kind::BolStar, &counts);
    record.representatives = Some(reps);
    Ok(record)
}

pub fn list(kind: Kind, n: usize) -> Result<EnumerationRecord> {
    match kind {
        Kind::Ag => list_ag(n),
        Kind::BolStar => list_bolstar(n),
    }
}

/// Every Latin table with row 0 equal to the identity row, by row-wise
/// backtracking.
fn latin_tables_with_left_identity_zero(n: usize, mut visit: impl FnMut(&CayleyTable)) {
    fn fill(
        n: usize,
        cell: usize,
        entries: &mut Vec<usize>,
        row_used: &mut [Vec<bool>],
        col_used: &mut [Vec<bool>],
        visit: &mut dyn FnMut(&CayleyTable),
    ) {
        if cell == n * n {
            visit(&CayleyTable::new(n, entries.clone()).expect("in range"));
            return;
        }
        let (r, c) = (cell / n, cell % n);
        for v in 0..n {
            if row_used[r][v] || col_used[c][v] {
                continue;
            }
            row_used[r][v] = true;
            col_used[c][v] = true;
            entries.push(v);
            fill(n, cell + 1, entries, row_used, col_used, visit);
            entries.pop();
            row_used[r][v] = false;
            col_used[c][v] = false;
        }
    }
    let mut entries: Vec<usize> = (0..n).collect();
    let mut row_used = vec![vec![false; n]; n];
    let mut col_used = vec![vec![false; n]; n];
    for c in 0..n {
        row_used[0][c] = true;
        col_used[c][c] = true;
    }
    fill(n, n, &mut entries, &mut row_used, &mut col_used, &mut visit);
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; n];
    used[0] = true;
    rec(n, &mut vec![0], &mut used, &mut out);
    out
}

/// Least relabeling over bijections fixing 0; isomorphisms preserve the
/// left identity, so this is a complete invariant here.
fn canonical_form(t: &CayleyTable, perms: &[Vec<usize>]) -> Vec<usize> {
    perms
        .iter()
        .map(|p| t.relabel(p).expect("bijection").entries().to_vec())
        .min()
        .expect("at least the identity")
}

fn brute_force(n: usize, kind: Kind, accept: impl Fn(&CayleyTable) -> bool) -> EnumerationRecord {
    let perms = permutations_fixing_zero(n);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let (mut assoc, mut nonassoc) = (0, 0);
    latin_tables_with_left_identity_zero(n, |t| {
        if !accept(t) {
            return;
        }
        if seen.insert(canonical_form(t, &perms)) {
            if check_identity(t, Identity::Associative).holds() {
                assoc += 1;
            } else {
                nonassoc += 1;
            }
        }
    });
    EnumerationRecord {
        order: n,
        kind,
        associative: assoc,
        nonassociative: nonassoc,
        total: assoc + nonassoc,
        representatives: None,
    }
}

pub const BRUTE_FORCE_AG_MAX: usize = 5;
pub const BRUTE_FORCE_BOLSTAR_MAX: usize = 4;

/// AG-groups of order `n <= 5` found by exhaustive table search.
pub fn brute_force_ag(n: usize) -> Result<EnumerationRecord> {
    if n == 0 || n > BRUTE_FORCE_AG_MAX {
        return Err(Error::OracleTooLarge {
            order: n,
            max: BRUTE_FORCE_AG_MAX,
        });
    }
    Ok(brute_force(n, Kind::Ag, is_ag_group))
}

/// Bol* quasigroups of order `n <= 4` with a left identity, by exhaustive
/// table search.
pub fn brute_force_bolstar(n: usize) -> Result<EnumerationRecord> {
    if n == 0 || n > BRUTE_FORCE_BOLSTAR_MAX {
        return Err(Error::OracleTooLarge {
            order: n,
            max: BRUTE_FORCE_BOLSTAR_MAX,
        });
    }
    Ok(brute_force(n, Kind::BolStar, |t| {
        is_latin(t) && check_identity(t, Identity::BolStar).holds()
    }))
}
