//! The involutive twist `a * b = alpha(a) b` and its inverse.
//!
//! Over an abelian group the twist is an AG-group, over a group it is a
//! Bol* quasigroup and over a right Bol loop it is a right Bol quasigroup.
//! Conversely a table with left identity `e` determines its base through
//! `x o y = (x e) y` and its twist through `alpha(x) = x e`.

use std::fmt;
use std::str::FromStr;

use crate::permgroups::{GroupElement, Permutation};
use crate::tables::{
    aut_quasigroup, check_identity, is_ag_group, is_latin, left_identity, quasigroup_isomorphic,
    CayleyTable, Identity,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// Abelian group; twists are AG-groups.
    Abelian,
    /// Group; twists are Bol* quasigroups.
    Group,
    /// Right Bol loop; twists are right Bol quasigroups.
    BolLoop,
}

impl BaseKind {
    /// The command-line name of the twisted class.
    pub fn twisted_name(self) -> &'static str {
        match self {
            BaseKind::Abelian => "ag",
            BaseKind::Group => "bolstar",
            BaseKind::BolLoop => "bol",
        }
    }

    pub fn twisted_class(self) -> &'static str {
        match self {
            BaseKind::Abelian => "AG-group",
            BaseKind::Group => "Bol* quasigroup",
            BaseKind::BolLoop => "right Bol quasigroup",
        }
    }
}

impl FromStr for BaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ag" | "abelian" => Ok(BaseKind::Abelian),
            "bolstar" | "group" => Ok(BaseKind::Group),
            "bol" | "loop" => Ok(BaseKind::BolLoop),
            _ => Err(Error::InvalidTwist(format!("unknown kind `{s}`"))),
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseKind::Abelian => "abelian group",
            BaseKind::Group => "group",
            BaseKind::BolLoop => "right Bol loop",
        })
    }
}

/// A base table together with an involutive automorphism of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    base: CayleyTable,
    kind: BaseKind,
    alpha: Permutation,
    identity: usize,
}

fn two_sided_identity(t: &CayleyTable) -> Option<usize> {
    left_identity(t).filter(|&e| (0..t.order()).all(|x| t.get(x, e) == x))
}

pub(crate) fn is_automorphism(t: &CayleyTable, a: &Permutation) -> bool {
    let n = t.order();
    a.degree() == n
        && (0..n).all(|x| (0..n).all(|y| a.apply(t.get(x, y)) == t.get(a.apply(x), a.apply(y))))
}

fn validate_base(base: &CayleyTable, kind: BaseKind) -> Result<usize> {
    let fail = |m: &str| Err(Error::InvalidTwist(format!("base is not a {kind}: {m}")));
    if !is_latin(base) {
        return fail("not Latin");
    }
    let Some(e) = two_sided_identity(base) else {
        return fail("no two-sided identity");
    };
    match kind {
        BaseKind::Abelian | BaseKind::Group => {
            if let Some(w) = check_identity(base, Identity::Associative).witness {
                return fail(&format!("associativity fails at {w:?}"));
            }
            if kind == BaseKind::Abelian {
                if let Some(w) = check_identity(base, Identity::Commutative).witness {
                    return fail(&format!("commutativity fails at {w:?}"));
                }
            }
        }
        BaseKind::BolLoop => {
            if let Some(w) = check_identity(base, Identity::RightBol).witness {
                return fail(&format!("right Bol identity fails at {w:?}"));
            }
        }
    }
    Ok(e)
}

impl TwistSpec {
    pub fn new(base: CayleyTable, kind: BaseKind, alpha: Permutation) -> Result<Self> {
        let identity = validate_base(&base, kind)?;
        if alpha.degree() != base.order() {
            return Err(Error::InvalidTwist(format!(
                "alpha has degree {}, base has order {}",
                alpha.degree(),
                base.order()
            )));
        }
        if !alpha.compose(&alpha).is_identity() {
            return Err(Error::InvalidTwist(format!(
                "alpha = {alpha} is not involutive"
            )));
        }
        if !is_automorphism(&base, &alpha) {
            return Err(Error::InvalidTwist(format!(
                "alpha = {alpha} is not an automorphism of the base"
            )));
        }
        Ok(Self {
            base,
            kind,
            alpha,
            identity,
        })
    }

    pub fn base(&self) -> &CayleyTable {
        &self.base
    }

    pub fn kind(&self) -> BaseKind {
        self.kind
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    /// The identity element of the base (0 for every construction here).
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }
}

/// The table `a * b = base(alpha(a), b)`.
pub fn twist(spec: &TwistSpec) -> CayleyTable {
    let (t, a) = (&spec.base, &spec.alpha);
    CayleyTable::from_fn(t.order(), |x, y| t.get(a.apply(x), y)).expect("entries in range")
}

/// Recovers the base and the twist from an AG-group (abelian base) or a
/// Bol* quasigroup (group base).
pub fn recover(t: &CayleyTable) -> Result<TwistSpec> {
    let e = left_identity(t).ok_or(Error::NotRecoverable)?;
    let kind = if is_ag_group(t) {
        BaseKind::Abelian
    } else if is_latin(t) && check_identity(t, Identity::BolStar).holds() {
        BaseKind::Group
    } else {
        return Err(Error::NotRecoverable);
    };
    let n = t.order();
    let alpha = Permutation::from_images((0..n).map(|x| t.get(x, e)).collect())
        .map_err(|_| Error::NotRecoverable)?;
    let base = CayleyTable::from_fn(n, |x, y| t.get(t.get(x, e), y))?;
    TwistSpec::new(base, kind, alpha)
}

/// The abelian group `x (+) y = (x c) y` of an AG-group. Its zero is the
/// element `z` with `z c = e`; that is `c` itself only when `c c = e`.
pub fn recover_at(t: &CayleyTable, c: usize) -> Result<CayleyTable> {
    if !is_ag_group(t) {
        return Err(Error::NotRecoverable);
    }
    if c >= t.order() {
        return Err(Error::InvalidTwist(format!("element {c} out of range")));
    }
    CayleyTable::from_fn(t.order(), |x, y| t.get(t.get(x, c), y))
}

/// An isomorphism from `recover(t).base` onto `recover_at(t, c)`: the
/// inverse of `y -> c y`, i.e. `x -> x - alpha(c)`.
///
/// The right translation `x -> x c` is one only when `c c = e` (always the
/// case for `alpha = neg`); for `alpha = id` and `2c != 0` it is not.
pub fn base_point_shift(t: &CayleyTable, c: usize) -> Result<Permutation> {
    if !is_ag_group(t) {
        return Err(Error::NotRecoverable);
    }
    if c >= t.order() {
        return Err(Error::InvalidTwist(format!("element {c} out of range")));
    }
    let mut images = vec![0; t.order()];
    for (y, &x) in t.row(c).iter().enumerate() {
        images[x] = y;
    }
    Permutation::from_images(images)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// The twisted table is associative.
    pub associative: bool,
    /// Every element of the twisted table squares to the left identity.
    pub involutory: bool,
    pub alpha_is_identity: bool,
    /// `alpha(x)` is the base inverse of `x` for every `x`.
    pub alpha_is_negation: bool,
}

pub fn classify(spec: &TwistSpec) -> Classification {
    let t = twist(spec);
    let e = spec.identity;
    let n = spec.order();
    let base_inverse = |x: usize| (0..n).find(|&y| spec.base.get(x, y) == e).expect("loop");
    Classification {
        associative: check_identity(&t, Identity::Associative).holds(),
        involutory: (0..n).all(|x| t.get(x, x) == e),
        alpha_is_identity: spec.alpha.is_identity(),
        alpha_is_negation: (0..n).all(|x| spec.alpha.apply(x) == base_inverse(x)),
    }
}

/// Twists an AG-group again: `x . y = alpha2(x) o y`.
pub fn compose_twist(q: &CayleyTable, alpha2: &Permutation) -> Result<CayleyTable> {
    if !is_ag_group(q) {
        return Err(Error::InvalidTwist("not an AG-group".into()));
    }
    if alpha2.degree() != q.order()
        || !alpha2.compose(alpha2).is_identity()
        || !is_automorphism(q, alpha2)
    {
        return Err(Error::InvalidTwist(format!(
            "{alpha2} is not an involutive automorphism of the AG-group"
        )));
    }
    CayleyTable::from_fn(q.order(), |x, y| q.get(alpha2.apply(x), y))
}

fn valid_map(s1: &TwistSpec, s2: &TwistSpec, pi: &[usize]) -> bool {
    pi.len() == s1.order() && pi.iter().all(|&y| y < s2.order())
}

/// Whether `pi` maps the twist of `s1` homomorphically into the twist of `s2`.
pub fn is_twist_homomorphism(s1: &TwistSpec, s2: &TwistSpec, pi: &[usize]) -> bool {
    if !valid_map(s1, s2, pi) {
        return false;
    }
    let (t1, t2) = (twist(s1), twist(s2));
    let n = s1.order();
    (0..n).all(|x| (0..n).all(|y| pi[t1.get(x, y)] == t2.get(pi[x], pi[y])))
}

/// Whether `pi` is a base homomorphism with `pi alpha = beta pi`.
pub fn respects_base_and_alpha(s1: &TwistSpec, s2: &TwistSpec, pi: &[usize]) -> bool {
    if !valid_map(s1, s2, pi) {
        return false;
    }
    let n = s1.order();
    let (b1, b2) = (&s1.base, &s2.base);
    let hom = (0..n).all(|x| (0..n).all(|y| pi[b1.get(x, y)] == b2.get(pi[x], pi[y])));
    hom && (0..n).all(|x| pi[s1.alpha.apply(x)] == s2.alpha.apply(pi[x]))
}

/// Whether the bases are isomorphic by some `pi` with `pi alpha pi^-1 = beta`.
pub fn isomorphic_by_conjugacy(s1: &TwistSpec, s2: &TwistSpec) -> Result<bool> {
    let Some(pi) = quasigroup_isomorphic(&s1.base, &s2.base)? else {
        return Ok(false);
    };
    let moved = pi.compose(&s1.alpha).compose(&pi.inverse());
    let aut = aut_quasigroup(&s2.base)?;
    Ok(aut
        .elements()
        .iter()
        .any(|s| s.compose(&moved).compose(&s.inverse()) == s2.alpha))
}

/// Parses `id`, `neg` (inversion in the base) or cycle notation.
pub fn parse_alpha(base: &CayleyTable, text: &str) -> Result<Permutation> {
    let n = base.order();
    match text.trim() {
        "id" => Ok(Permutation::identity(n)),
        "neg" => {
            let e = two_sided_identity(base)
                .ok_or_else(|| Error::InvalidTwist("`neg` needs a base with identity".into()))?;
            let images = (0..n)
                .map(|x| (0..n).find(|&y| base.get(x, y) == e))
                .collect::<Option<Vec<usize>>>()
                .ok_or_else(|| Error::InvalidTwist("base has no inverses".into()))?;
            Permutation::from_images(images)
        }
        cycles => Permutation::from_cycles(n, cycles),
    }
}

/// `id`, `neg` or cycle notation, whichever applies first.
pub fn format_alpha(base: &CayleyTable, alpha: &Permutation) -> String {
    if alpha.is_identity() {
        return "id".into();
    }
    match parse_alpha(base, "neg") {
        Ok(neg) if &neg == alpha => "neg".into(),
        _ => alpha.to_string(),
    }
}
