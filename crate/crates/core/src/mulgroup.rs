//! Multiplication groups `M(Q) = <L_x, R_x>` and inner mapping groups.

use std::collections::HashSet;
use std::fmt;

use crate::permgroups::{
    recognize_structure, GroupElement, PermGroup, Permutation, StructureReport,
};
use crate::tables::{is_ag_group, is_latin, left_identity, CayleyTable};
use crate::twist::recover;
use crate::{Error, Result};

/// Left translations `L_x: y -> x y` and right translations `R_x: y -> y x`.
#[derive(Clone, Debug)]
pub struct SectionPair {
    pub left: Vec<Permutation>,
    pub right: Vec<Permutation>,
}

pub fn sections(t: &CayleyTable) -> Result<SectionPair> {
    if !is_latin(t) {
        return Err(Error::NotLatin);
    }
    let n = t.order();
    let left = (0..n)
        .map(|x| Permutation::from_images((0..n).map(|y| t.get(x, y)).collect()))
        .collect::<Result<_>>()?;
    let right = (0..n)
        .map(|x| Permutation::from_images((0..n).map(|y| t.get(y, x)).collect()))
        .collect::<Result<_>>()?;
    Ok(SectionPair { left, right })
}

pub fn multiplication_group(t: &CayleyTable) -> Result<PermGroup> {
    let s = sections(t)?;
    let gens: Vec<Permutation> = s.left.into_iter().chain(s.right).collect();
    PermGroup::closure(t.order(), &gens)
}

/// Stabilizer of the left identity in the multiplication group.
pub fn inner_mapping_group(t: &CayleyTable) -> Result<PermGroup> {
    let e = left_identity(t).ok_or_else(|| Error::InvalidTable("no left identity".into()))?;
    multiplication_group(t)?.stabilizer(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    fn check(failure: Option<String>) -> Self {
        Self {
            holds: failure.is_none(),
            witness: failure,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("holds"),
            Some(w) => write!(f, "FAILS ({w})"),
        }
    }
}

/// The five structural claims about `M(G_alpha)` for an AG-group.
#[derive(Clone, Debug)]
pub struct MulgroupReport {
    pub order: usize,
    pub inner_order: usize,
    pub alpha: Permutation,
    /// `M = LSec u RSec`
    pub union_of_sections: Verdict,
    /// `Inn = <alpha>`
    pub inner_is_alpha: Verdict,
    /// `LSec` is a normal subgroup and `x -> L_x` is an isomorphism from the base.
    pub left_section_normal: Verdict,
    /// `R_x = alpha L_x` for every `x`
    pub right_section_coset: Verdict,
    /// `M = LSec : <alpha>` with `alpha L_x alpha = L_alpha(x)`
    pub semidirect: Verdict,
    pub structure: StructureReport,
}

impl MulgroupReport {
    pub fn all_hold(&self) -> bool {
        [
            &self.union_of_sections,
            &self.inner_is_alpha,
            &self.left_section_normal,
            &self.right_section_coset,
            &self.semidirect,
        ]
        .iter()
        .all(|v| v.holds)
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("M = LSec u RSec", &self.union_of_sections),
            ("Inn = <alpha>", &self.inner_is_alpha),
            ("LSec normal, isomorphic to base", &self.left_section_normal),
            ("RSec = alpha LSec", &self.right_section_coset),
            ("M = base : <alpha>", &self.semidirect),
        ]
    }
}

pub fn verify_mulgroup_structure(t: &CayleyTable) -> Result<MulgroupReport> {
    if !is_ag_group(t) {
        return Err(Error::InvalidTable("not an AG-group".into()));
    }
    let spec = recover(t)?;
    let (base, alpha, e) = (spec.base(), spec.alpha().clone(), spec.identity());
    let n = t.order();
    let SectionPair { left, right } = sections(t)?;
    let m = multiplication_group(t)?;
    let inn = m.stabilizer(e)?;

    let union: HashSet<&Permutation> = left.iter().chain(&right).collect();
    let union_of_sections = Verdict::check(
        m.elements()
            .iter()
            .find(|g| !union.contains(g))
            .map(|g| format!("{g} is in M but in neither section"))
            .or_else(|| (union.len() != m.order()).then(|| "sections leave M".into())),
    );

    let generated_by_alpha = PermGroup::closure(n, std::slice::from_ref(&alpha))?;
    let inner_is_alpha = Verdict::check((inn != generated_by_alpha).then(|| {
        format!(
            "|Inn| = {}, |<alpha>| = {}",
            inn.order(),
            generated_by_alpha.order()
        )
    }));

    let left_set: HashSet<&Permutation> = left.iter().collect();
    let left_section_normal = Verdict::check(
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| left[base.get(x, y)] != left[x].compose(&left[y]))
            .map(|(x, y)| format!("L_(x+y) != L_x L_y at x = {x}, y = {y}"))
            .or_else(|| (left_set.len() != n).then(|| "x -> L_x is not injective".into()))
            .or_else(|| {
                m.generators().iter().find_map(|g| {
                    let gi = g.inverse();
                    left.iter()
                        .find(|l| !left_set.contains(&g.compose(l).compose(&gi)))
                        .map(|l| format!("{g} does not normalize LSec at {l}"))
                })
            }),
    );

    let right_section_coset = Verdict::check(
        (0..n)
            .find(|&x| right[x] != alpha.compose(&left[x]))
            .map(|x| format!("R_{x} != alpha L_{x}")),
    );

    let semidirect = Verdict::check(
        (m.order() != n * generated_by_alpha.order())
            .then(|| {
                format!(
                    "|M| = {}, expected {}",
                    m.order(),
                    n * generated_by_alpha.order()
                )
            })
            .or_else(|| {
                generated_by_alpha
                    .elements()
                    .iter()
                    .find(|a| !a.is_identity() && left_set.contains(a))
                    .map(|a| format!("{a} lies in LSec"))
            })
            .or_else(|| {
                (0..n)
                    .find(|&x| alpha.compose(&left[x]).compose(&alpha) != left[alpha.apply(x)])
                    .map(|x| format!("alpha L_{x} alpha != L_alpha({x})"))
            }),
    );

    let structure = recognize_structure(&m);
    Ok(MulgroupReport {
        order: m.order(),
        inner_order: inn.order(),
        alpha,
        union_of_sections,
        inner_is_alpha,
        left_section_normal,
        right_section_coset,
        semidirect,
        structure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizability {
    pub realizable: bool,
    pub reason: String,
}

/// Whether `g` has the shape `T : C2` with `T` abelian, which is exactly
/// the shape of multiplication groups of non-associative AG-groups.
pub fn is_realizable_mulgroup(g: &PermGroup) -> Realizability {
    let report = recognize_structure(g);
    if report.abelian {
        return Realizability {
            realizable: false,
            reason: "abelian".into(),
        };
    }
    match report.preferred_split() {
        Some(s) => Realizability {
            realizable: true,
            reason: format!(
                "abelian normal subgroup of order {} split by {}",
                s.subgroup.order(),
                s.involution
            ),
        },
        None => Realizability {
            realizable: false,
            reason: "no abelian index-two subgroup with a complement".into(),
        },
    }
}

/// The left regular representation of a group table.
pub fn regular_representation(t: &CayleyTable) -> Result<PermGroup> {
    let s = sections(t)?;
    PermGroup::closure(t.order(), &s.left)
}
