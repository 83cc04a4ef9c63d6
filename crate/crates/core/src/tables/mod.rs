//! Cayley tables of finite binary operations on `0..n`.
//!
//! The text format is one line holding `n`, followed by `n` rows of `n`
//! space-separated entries. Lines starting with `#` are comments and blank
//! lines are skipped. [`CayleyTable::to_text`] writes the canonical form
//! without comments, so `parse(to_text(t)) == t`.

mod axioms;
mod iso;

pub use axioms::{
    check_identity, is_ag_group, is_latin, left_identity, AxiomReport, Identity, IdentityCheck,
    LatinViolation,
};
pub use iso::{aut_quasigroup, element_invariants, generating_sequence, quasigroup_isomorphic};

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    /// Builds a table from its row-major entries.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be at least 1".into()));
        }
        if entries.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= order) {
            return Err(Error::InvalidTable(format!(
                "entry ({}, {}) = {} is out of range",
                pos / order,
                pos % order,
                entries[pos]
            )));
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != order) {
            return Err(Error::InvalidTable(format!(
                "row {i} has {} entries, expected {order}",
                rows[i].len()
            )));
        }
        Self::new(order, rows.into_iter().flatten().collect())
    }

    /// Tabulates `op` over all pairs.
    pub fn from_fn(order: usize, mut op: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(op(i, j));
            }
        }
        Self::new(order, entries)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `i * j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The table of the same operation with every element `x` renamed to
    /// `relabel[x]`.
    pub fn relabel(&self, relabel: &[usize]) -> Result<Self> {
        let n = self.order;
        if relabel.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "relabeling has length {}, table order is {n}",
                relabel.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in relabel {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(
                    "relabeling is not a bijection".into(),
                ));
            }
        }
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[relabel[i] * n + relabel[j]] = relabel[self.get(i, j)];
            }
        }
        Ok(Self { order: n, entries })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * 3 + 8);
        out.push_str(&self.order.to_string());
        out.push('\n');
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing order line".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            message: format!("expected the table order, found `{header}`"),
        })?;
        if order == 0 {
            return Err(Error::Parse {
                line: first,
                message: "order must be at least 1".into(),
            });
        }

        let mut entries = Vec::with_capacity(order * order);
        let mut last = first;
        for row in 0..order {
            let (line, body) = lines.next().ok_or(Error::Parse {
                line: last + 1,
                message: format!("expected {order} rows, found {row}"),
            })?;
            last = line;
            let before = entries.len();
            for tok in body.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("`{tok}` is not a non-negative integer"),
                })?;
                if v >= order {
                    return Err(Error::Parse {
                        line,
                        message: format!("entry {v} is out of range 0..{order}"),
                    });
                }
                entries.push(v);
            }
            let count = entries.len() - before;
            if count != order {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {order} entries, found {count}"),
                });
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "unexpected content after the last row".into(),
            });
        }
        Ok(Self { order, entries })
    }
}

impl FromStr for CayleyTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable({})", self.order)?;
        if self.order <= 12 {
            for i in 0..self.order {
                write!(f, "\n  {:?}", self.row(i))?;
            }
        }
        Ok(())
    }
}
