//! Twists over one base are isomorphic exactly when their automorphisms are
//! conjugate; the table-level search agrees.

use agq::abelian::{abelian_table, AbelianInvariants};
use agq::catalog::aut_group_table;
use agq::permgroups::GroupElement;
use agq::tables::quasigroup_isomorphic;
use agq::twist::{isomorphic_by_conjugacy, twist};
use agq::{BaseKind, Permutation, TwistSpec};

fn main() -> agq::Result<()> {
    let g: AbelianInvariants = "2,2,2".parse()?;
    let base = abelian_table(&g);
    let aut = aut_group_table(&base)?;
    let involutions: Vec<&Permutation> = aut
        .elements()
        .iter()
        .filter(|a| a.is_involution_or_identity())
        .collect();
    println!(
        "Aut(C2^3) has order {} and {} involutions",
        aut.order(),
        involutions.len() - 1
    );

    let specs: Vec<TwistSpec> = involutions
        .iter()
        .map(|a| TwistSpec::new(base.clone(), BaseKind::Abelian, (*a).clone()))
        .collect::<agq::Result<_>>()?;
    let mut agree = 0;
    for s1 in &specs {
        for s2 in &specs {
            let by_table = quasigroup_isomorphic(&twist(s1), &twist(s2))?.is_some();
            assert_eq!(by_table, isomorphic_by_conjugacy(s1, s2)?);
            agree += 1;
        }
    }
    println!("{agree} pairs checked, table isomorphism == conjugacy in Aut");

    let t = twist(&specs[1]);
    let shuffle = [0, 3, 5, 6, 1, 2, 4, 7];
    let relabeled = t.relabel(&shuffle)?;
    let witness = quasigroup_isomorphic(&t, &relabeled)?.expect("relabeling is an isomorphism");
    println!("witness for a relabeled copy: {witness}");
    Ok(())
}
