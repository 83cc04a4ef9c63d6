//! Exhaustive identity scans.

use std::fmt;

use super::CayleyTable;

/// An identity checked by scanning every tuple of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `(xy)z = (zy)x`
    LeftInvertive,
    /// `(ab.c)b = a(bc.b)`
    RightBol,
    /// `(ab.c)d = a(bc.d)`
    BolStar,
    /// `(xy)z = x(yz)`
    Associative,
    /// `xy = yx`
    Commutative,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::LeftInvertive,
        Identity::RightBol,
        Identity::BolStar,
        Identity::Associative,
        Identity::Commutative,
    ];

    pub fn arity(self) -> usize {
        match self {
            Identity::Commutative => 2,
            Identity::BolStar => 4,
            _ => 3,
        }
    }

    /// Both sides of the identity evaluated at `v`.
    pub fn sides(self, t: &CayleyTable, v: &[usize]) -> (usize, usize) {
        let m = |a, b| t.get(a, b);
        match self {
            Identity::LeftInvertive => (m(m(v[0], v[1]), v[2]), m(m(v[2], v[1]), v[0])),
            Identity::RightBol => {
                let (a, b, c) = (v[0], v[1], v[2]);
                (m(m(m(a, b), c), b), m(a, m(m(b, c), b)))
            }
            Identity::BolStar => {
                let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
                (m(m(m(a, b), c), d), m(a, m(m(b, c), d)))
            }
            Identity::Associative => (m(m(v[0], v[1]), v[2]), m(v[0], m(v[1], v[2]))),
            Identity::Commutative => (m(v[0], v[1]), m(v[1], v[0])),
        }
    }

    pub fn violated_by(self, t: &CayleyTable, v: &[usize]) -> bool {
        let (l, r) = self.sides(t, v);
        l != r
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::LeftInvertive => "left-invertive",
            Identity::RightBol => "right-Bol",
            Identity::BolStar => "Bol*",
            Identity::Associative => "associative",
            Identity::Commutative => "commutative",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one identity scan: `witness` is the first violating tuple in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub witness: Option<Vec<usize>>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn check_identity(t: &CayleyTable, which: Identity) -> IdentityCheck {
    let n = t.order();
    let k = which.arity();
    let mut v = vec![0usize; k];
    loop {
        if which.violated_by(t, &v) {
            return IdentityCheck {
                identity: which,
                witness: Some(v),
            };
        }
        // odometer, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return IdentityCheck {
                    identity: which,
                    witness: None,
                };
            }
            pos -= 1;
            v[pos] += 1;
            if v[pos] < n {
                break;
            }
            v[pos] = 0;
        }
    }
}

/// A repeated entry in a row or a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatinViolation {
    /// `row * a == row * b` with `a < b`.
    Row { row: usize, a: usize, b: usize },
    /// `a * col == b * col` with `a < b`.
    Column { col: usize, a: usize, b: usize },
}

impl LatinViolation {
    pub fn is_genuine(&self, t: &CayleyTable) -> bool {
        match *self {
            LatinViolation::Row { row, a, b } => a != b && t.get(row, a) == t.get(row, b),
            LatinViolation::Column { col, a, b } => a != b && t.get(a, col) == t.get(b, col),
        }
    }
}

fn latin_violation(t: &CayleyTable) -> Option<LatinViolation> {
    let n = t.order();
    let mut first = vec![usize::MAX; n];
    for row in 0..n {
        first.fill(usize::MAX);
        for j in 0..n {
            let e = t.get(row, j);
            if first[e] != usize::MAX {
                return Some(LatinViolation::Row {
                    row,
                    a: first[e],
                    b: j,
                });
            }
            first[e] = j;
        }
    }
    for col in 0..n {
        first.fill(usize::MAX);
        for i in 0..n {
            let e = t.get(i, col);
            if first[e] != usize::MAX {
                return Some(LatinViolation::Column {
                    col,
                    a: first[e],
                    b: i,
                });
            }
            first[e] = i;
        }
    }
    None
}

pub fn is_latin(t: &CayleyTable) -> bool {
    latin_violation(t).is_none()
}

/// The least `e` with `e * x = x` for every `x`.
pub fn left_identity(t: &CayleyTable) -> Option<usize> {
    (0..t.order()).find(|&e| t.row(e).iter().enumerate().all(|(x, &y)| x == y))
}

/// The first element without a left inverse relative to `e`.
fn missing_left_inverse(t: &CayleyTable, e: usize) -> Option<usize> {
    (0..t.order()).find(|&x| !(0..t.order()).any(|y| t.get(y, x) == e))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub latin: Option<LatinViolation>,
    pub left_identity: Option<usize>,
    /// An element with no left inverse; `None` when every element has one
    /// or when there is no left identity to invert against.
    pub missing_left_inverse: Option<usize>,
    pub left_invertive: IdentityCheck,
    pub right_bol: IdentityCheck,
    pub bol_star: IdentityCheck,
    pub associative: IdentityCheck,
    pub commutative: IdentityCheck,
}

impl AxiomReport {
    pub fn of(t: &CayleyTable) -> Self {
        let e = left_identity(t);
        Self {
            latin: latin_violation(t),
            left_identity: e,
            missing_left_inverse: e.and_then(|e| missing_left_inverse(t, e)),
            left_invertive: check_identity(t, Identity::LeftInvertive),
            right_bol: check_identity(t, Identity::RightBol),
            bol_star: check_identity(t, Identity::BolStar),
            associative: check_identity(t, Identity::Associative),
            commutative: check_identity(t, Identity::Commutative),
        }
    }

    pub fn is_latin(&self) -> bool {
        self.latin.is_none()
    }

    pub fn has_left_inverses(&self) -> bool {
        self.left_identity.is_some() && self.missing_left_inverse.is_none()
    }

    pub fn is_ag_group(&self) -> bool {
        self.is_latin() && self.has_left_inverses() && self.left_invertive.holds()
    }

    pub fn is_bol_star(&self) -> bool {
        self.is_latin() && self.bol_star.holds()
    }

    pub fn is_right_bol(&self) -> bool {
        self.is_latin() && self.right_bol.holds()
    }

    pub fn check(&self, which: Identity) -> &IdentityCheck {
        match which {
            Identity::LeftInvertive => &self.left_invertive,
            Identity::RightBol => &self.right_bol,
            Identity::BolStar => &self.bol_star,
            Identity::Associative => &self.associative,
            Identity::Commutative => &self.commutative,
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.latin {
            None => writeln!(f, "latin: yes")?,
            Some(LatinViolation::Row { row, a, b }) => {
                writeln!(f, "latin: no (row {row}: columns {a} and {b} agree)")?
            }
            Some(LatinViolation::Column { col, a, b }) => {
                writeln!(f, "latin: no (column {col}: rows {a} and {b} agree)")?
            }
        }
        match self.left_identity {
            Some(e) => writeln!(f, "left identity: {e}")?,
            None => writeln!(f, "left identity: none")?,
        }
        match (self.left_identity, self.missing_left_inverse) {
            (None, _) => writeln!(f, "left inverses: n/a")?,
            (Some(_), None) => writeln!(f, "left inverses: yes")?,
            (Some(_), Some(x)) => writeln!(f, "left inverses: no (element {x})")?,
        }
        for id in Identity::ALL {
            let c = self.check(id);
            match &c.witness {
                None => writeln!(f, "{id}: holds")?,
                Some(w) => writeln!(f, "{id}: fails at {w:?}")?,
            }
        }
        Ok(())
    }
}

/// Latin, left identity, left inverses and the left invertive law.
pub fn is_ag_group(t: &CayleyTable) -> bool {
    let Some(e) = left_identity(t) else {
        return false;
    };
    is_latin(t)
        && missing_left_inverse(t, e).is_none()
        && check_identity(t, Identity::LeftInvertive).holds()
}
