//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary
//! (`harness = false`) so wall-clock limits are measured per criterion.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use agq::abelian::{
    abelian_groups_of_order, abelian_table, aut_abelian, matrix_to_permutation, AbelianInvariants,
    EndoMatrix,
};
use agq::catalog::{aut_group_table, groups_of_order};
use agq::enumerate::{brute_force_ag, brute_force_bolstar, count_ag, count_bolstar};
use agq::mulgroup::verify_mulgroup_structure;
use agq::permgroups::{
    centralizer_of, conjugacy_class_of, involution_classes_of, recognize_structure, GroupElement,
};
use agq::tables::{
    aut_quasigroup, check_identity, is_ag_group, is_latin, quasigroup_isomorphic, Identity,
};
use agq::twist::{parse_alpha, recover, twist};
use agq::{BaseKind, CayleyTable, Permutation, TwistSpec};

const AG_COUNTS: [(usize, usize, usize); 18] = [
    (1, 1, 2),
    (2, 2, 4),
    (1, 1, 2),
    (1, 1, 2),
    (1, 1, 2),
    (3, 7, 10),
    (2, 3, 5),
    (1, 1, 2),
    (1, 1, 2),
    (2, 6, 8),
    (1, 1, 2),
    (1, 1, 2),
    (1, 3, 4),
    (5, 24, 29),
    (1, 1, 2),
    (2, 3, 5),
    (1, 1, 2),
    (2, 6, 8),
];

const BOLSTAR_COUNTS: [(usize, usize, usize); 18] = [
    (1, 1, 2),
    (2, 2, 4),
    (1, 1, 2),
    (2, 2, 4),
    (1, 1, 2),
    (5, 12, 17),
    (2, 3, 5),
    (2, 2, 4),
    (1, 1, 2),
    (5, 14, 19),
    (1, 1, 2),
    (2, 2, 4),
    (1, 3, 4),
    (14, 88, 102),
    (1, 1, 2),
    (5, 9, 14),
    (1, 1, 2),
    (5, 13, 18),
];

type Check = Result<String, String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// One twist over an abelian base, keeping the matrix form of alpha.
struct AgSpec {
    chain: AbelianInvariants,
    aut: Vec<EndoMatrix>,
    matrix: EndoMatrix,
    spec: TwistSpec,
}

/// Every (abelian group, involution or identity) pair with `|G| <= max`.
fn all_ag_specs(max: usize) -> Vec<AgSpec> {
    let mut out = Vec::new();
    for n in 1..=max {
        for g in abelian_groups_of_order(n as u64) {
            let base = abelian_table(&g);
            let aut = aut_abelian(&g).unwrap();
            for a in aut.iter().filter(|a| a.is_involution_or_identity()) {
                let alpha = matrix_to_permutation(&g, a).unwrap();
                out.push(AgSpec {
                    chain: g.clone(),
                    aut: aut.clone(),
                    matrix: a.clone(),
                    spec: TwistSpec::new(base.clone(), BaseKind::Abelian, alpha).unwrap(),
                });
            }
        }
    }
    out
}

fn ag_counts() -> Check {
    for (n, &expected) in (3..=20).zip(AG_COUNTS.iter()) {
        let got = count_ag(n).map_err(|e| e.to_string())?.counts();
        ensure(got == expected, || {
            format!("order {n}: got {got:?}, expected {expected:?}")
        })?;
    }
    Ok("18 orders exact".into())
}

fn bolstar_counts() -> Check {
    for (n, &expected) in (3..=20).zip(BOLSTAR_COUNTS.iter()) {
        let got = count_bolstar(n).map_err(|e| e.to_string())?.counts();
        ensure(got == expected, || {
            format!("order {n}: got {got:?}, expected {expected:?}")
        })?;
    }
    Ok("18 orders exact".into())
}

fn worked_examples() -> Check {
    for (n, expected) in [(6, (1, 1, 2)), (12, (2, 6, 8)), (2009, (2, 8, 10))] {
        let got = count_ag(n).unwrap().counts();
        ensure(got == expected, || format!("order {n}: got {got:?}"))?;
    }
    let per_chain: Vec<(Vec<u64>, usize)> = abelian_groups_of_order(2009)
        .iter()
        .map(|g| {
            (
                g.chain().to_vec(),
                involution_classes_of(&aut_abelian(g).unwrap()).len(),
            )
        })
        .collect();
    ensure(
        per_chain == vec![(vec![2009], 4), (vec![7, 287], 6)],
        || format!("{per_chain:?}"),
    )?;
    Ok("orders 6, 12, 2009; classes 4 + 6".into())
}

fn oracles() -> Check {
    for n in 3..=5 {
        let (a, b) = (
            count_ag(n).unwrap().counts(),
            brute_force_ag(n).unwrap().counts(),
        );
        ensure(a == b, || format!("AG order {n}: {a:?} vs search {b:?}"))?;
    }
    for n in 3..=4 {
        let (a, b) = (
            count_bolstar(n).unwrap().counts(),
            brute_force_bolstar(n).unwrap().counts(),
        );
        ensure(a == b, || format!("Bol* order {n}: {a:?} vs search {b:?}"))?;
    }
    Ok("AG 3..5, Bol* 3..4".into())
}

fn roundtrip() -> Check {
    let specs = all_ag_specs(16);
    for s in &specs {
        let back = recover(&twist(&s.spec)).map_err(|e| format!("{}: {e}", s.chain))?;
        ensure(
            back.base() == s.spec.base() && back.alpha() == s.spec.alpha(),
            || format!("{} alpha {}", s.chain, s.spec.alpha()),
        )?;
    }
    Ok(format!("{} specs", specs.len()))
}

/// Bijections of `0..n` fixing 0, for canonical forms of tables whose left
/// identity is 0 (isomorphisms must preserve it).
fn bijections_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for k in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=k).map(move |slot| {
                    let mut q = p.clone();
                    q.insert(slot, k);
                    q
                })
            })
            .collect();
    }
    out
}

fn brute_force_canonical(t: &CayleyTable, perms: &[Vec<usize>]) -> Vec<usize> {
    let n = t.order();
    let mut best: Option<Vec<usize>> = None;
    let mut entries = vec![0; n * n];
    for p in perms {
        for x in 0..n {
            for y in 0..n {
                entries[p[x] * n + p[y]] = p[t.get(x, y)];
            }
        }
        if best.as_ref().is_none_or(|b| entries < *b) {
            best = Some(entries.clone());
        }
    }
    best.expect("nonempty")
}

fn isomorphism_criterion() -> Check {
    let specs = all_ag_specs(8);
    let tables: Vec<CayleyTable> = specs.iter().map(|s| twist(&s.spec)).collect();
    let canon: Vec<Vec<usize>> = tables
        .iter()
        .map(|t| {
            assert_eq!(agq::tables::left_identity(t), Some(0));
            brute_force_canonical(t, &bijections_fixing_zero(t.order()))
        })
        .collect();
    let mut pairs = 0;
    for (i, s1) in specs.iter().enumerate() {
        let class = conjugacy_class_of(&s1.aut, &s1.matrix);
        for (j, s2) in specs.iter().enumerate() {
            if s1.spec.order() != s2.spec.order() {
                continue;
            }
            pairs += 1;
            let by_search = quasigroup_isomorphic(&tables[i], &tables[j]).unwrap();
            if let Some(p) = &by_search {
                let n = tables[i].order();
                let ok = (0..n).all(|x| {
                    (0..n).all(|y| {
                        p.apply(tables[i].get(x, y)) == tables[j].get(p.apply(x), p.apply(y))
                    })
                });
                ensure(ok, || format!("witness {p} does not verify"))?;
            }
            let by_criterion = s1.chain == s2.chain && class.contains(&s2.matrix);
            let by_brute_force = canon[i] == canon[j];
            ensure(
                by_search.is_some() == by_criterion && by_brute_force == by_criterion,
                || {
                    format!(
                        "{} {} vs {} {}",
                        s1.chain,
                        s1.spec.alpha(),
                        s2.chain,
                        s2.spec.alpha()
                    )
                },
            )?;
        }
    }
    Ok(format!(
        "{pairs} ordered pairs, search = brute force = criterion"
    ))
}

fn mulgroup_suite() -> Check {
    let mut checked = 0;
    for s in all_ag_specs(12) {
        if s.spec.alpha().is_identity() {
            continue;
        }
        let n = s.spec.order();
        let r = verify_mulgroup_structure(&twist(&s.spec)).map_err(|e| e.to_string())?;
        ensure(
            r.order == 2 * n && r.inner_order == 2 && r.all_hold(),
            || {
                format!(
                    "{} alpha {}: |M| {} |Inn| {} {:?}",
                    s.chain,
                    s.spec.alpha(),
                    r.order,
                    r.inner_order,
                    r.verdicts()
                )
            },
        )?;
        if r.structure.dihedral {
            let cyclic_neg = s.chain.is_cyclic() && s.matrix == EndoMatrix::negation(&s.chain);
            ensure(cyclic_neg || s.chain.chain() == [2, 2], || {
                format!("{} alpha {} reported dihedral", s.chain, s.spec.alpha())
            })?;
        }
        checked += 1;
    }
    for n in 3..=12 {
        let base = abelian_table(&AbelianInvariants::new(vec![n]).unwrap());
        let spec = TwistSpec::new(
            base.clone(),
            BaseKind::Abelian,
            parse_alpha(&base, "neg").unwrap(),
        )
        .unwrap();
        let m = agq::mulgroup::multiplication_group(&twist(&spec)).unwrap();
        let s = recognize_structure(&m);
        ensure(s.dihedral && m.order() == 2 * n as usize, || {
            format!("(C{n}, neg) not dihedral")
        })?;
    }
    Ok(format!(
        "{checked} non-associative twists; C3..C12 dihedral"
    ))
}

fn aut_transfer() -> Check {
    let specs = all_ag_specs(8);
    for s in &specs {
        let got: BTreeSet<Permutation> = aut_quasigroup(&twist(&s.spec))
            .unwrap()
            .elements()
            .iter()
            .cloned()
            .collect();
        let want: BTreeSet<Permutation> = centralizer_of(&s.aut, &s.matrix)
            .iter()
            .map(|a| matrix_to_permutation(&s.chain, a).unwrap())
            .collect();
        ensure(got == want, || {
            format!(
                "{} alpha {}: {} vs {}",
                s.chain,
                s.spec.alpha(),
                got.len(),
                want.len()
            )
        })?;
    }
    Ok(format!("{} specs", specs.len()))
}

fn axiom_chain() -> Check {
    let mut ag = 0;
    for s in all_ag_specs(12) {
        let t = twist(&s.spec);
        ensure(is_ag_group(&t), || {
            format!("{} alpha {} not AG", s.chain, s.spec.alpha())
        })?;
        for law in [Identity::BolStar, Identity::RightBol] {
            ensure(check_identity(&t, law).holds(), || {
                format!("{} alpha {}: {law}", s.chain, s.spec.alpha())
            })?;
        }
        ag += 1;
    }
    let mut bolstar = 0;
    for n in 1..=12 {
        for g in groups_of_order(n).unwrap() {
            let aut = aut_group_table(&g).unwrap();
            for a in aut
                .elements()
                .iter()
                .filter(|a| a.is_involution_or_identity())
            {
                let t = twist(&TwistSpec::new(g.clone(), BaseKind::Group, a.clone()).unwrap());
                ensure(
                    is_latin(&t) && check_identity(&t, Identity::BolStar).holds(),
                    || format!("order {n} alpha {a}: not Bol*"),
                )?;
                ensure(check_identity(&t, Identity::RightBol).holds(), || {
                    format!("order {n} alpha {a}: not right Bol")
                })?;
                let back = recover(&t).unwrap();
                ensure(
                    check_identity(back.base(), Identity::Associative).holds(),
                    || format!("order {n}: base"),
                )?;
                bolstar += 1;
            }
        }
    }
    Ok(format!("{ag} AG tables, {bolstar} Bol* tables"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AG-group counts, orders 3..20", 10, ag_counts),
        ("Bol* counts, orders 3..20", 60, bolstar_counts),
        ("worked examples incl. order 2009", 300, worked_examples),
        ("oracle equivalence", 120, oracles),
        ("recover(twist) roundtrip, order <= 16", 30, roundtrip),
        (
            "isomorphism criterion, order <= 8",
            60,
            isomorphism_criterion,
        ),
        (
            "multiplication group suite, order <= 12",
            60,
            mulgroup_suite,
        ),
        ("aut transfer, order <= 8", 30, aut_transfer),
        ("axiom chain, order <= 12", 30, axiom_chain),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(m) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{m}, but over the time limit"))
            }
            r => r,
        };
        let (tag, detail) = match &result {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!(
            "{tag} {:>2} {name}: {detail} ({:.2}s, limit {limit}s)",
            i + 1,
            elapsed.as_secs_f64()
        );
        failures += result.is_err() as usize;
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
