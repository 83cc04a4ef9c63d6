//! Permutations and fully enumerated permutation groups.

mod group;
mod structure;

pub use group::{
    centralizer_of, conjugacy_class_of, involution_classes_of, involutions_of, PermGroup,
    DEFAULT_BUDGET,
};
pub use structure::{recognize_structure, IndexTwoSplit, StructureReport};

use std::fmt;
use std::hash::Hash;

use crate::{Error, Result};

/// Operations needed by the conjugacy scans, shared by permutations and
/// automorphism matrices.
pub trait GroupElement: Clone + Eq + Hash + Ord + Send + Sync {
    /// `self` after `other`.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;

    fn is_involution_or_identity(&self) -> bool {
        self.compose(self).is_identity()
    }
}

/// A bijection of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
        }
        Ok(Self { images })
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`; commas are
    /// accepted as separators and `()` is the identity.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidPermutation(m);
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| bad(format!("expected `(` in `{text}`")))?;
            let close = inner
                .find(')')
                .ok_or_else(|| bad(format!("unclosed cycle in `{text}`")))?;
            let points: Vec<usize> = inner[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| bad(format!("`{s}` is not a point")))
                })
                .collect::<Result<_>>()?;
            for (k, &p) in points.iter().enumerate() {
                if p >= degree {
                    return Err(bad(format!("point {p} exceeds degree {degree}")));
                }
                if std::mem::replace(&mut moved[p], true) {
                    return Err(bad(format!("point {p} appears twice")));
                }
                images[p] = points[(k + 1) % points.len()];
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Self { images })
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Non-trivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
