//! Twist C2 x C6 by every involution class, check the axioms, and recover
//! the base from each result, at the default identity and at another point.

use agq::abelian::{abelian_table, aut_abelian, matrix_to_permutation, AbelianInvariants};
use agq::permgroups::involution_classes_of;
use agq::tables::{quasigroup_isomorphic, AxiomReport};
use agq::twist::{base_point_shift, classify, format_alpha, recover, recover_at, twist};
use agq::{BaseKind, TwistSpec};

fn main() -> agq::Result<()> {
    let g: AbelianInvariants = "C2 x C6".parse()?;
    let base = abelian_table(&g);
    for a in involution_classes_of(&aut_abelian(&g)?) {
        let alpha = matrix_to_permutation(&g, &a)?;
        let spec = TwistSpec::new(base.clone(), BaseKind::Abelian, alpha)?;
        let t = twist(&spec);
        let report = AxiomReport::of(&t);
        let c = classify(&spec);
        println!(
            "alpha = {:<36} AG-group: {}  Bol*: {}  associative: {}  involutory: {}",
            format_alpha(&base, spec.alpha()),
            report.is_ag_group(),
            report.is_bol_star(),
            c.associative,
            c.involutory,
        );

        let back = recover(&t)?;
        assert_eq!(back.base(), &base);
        assert_eq!(back.alpha(), spec.alpha());

        // Any element can serve as base point; the shifted group has zero
        // -alpha(5), and undoing left multiplication by 5 is an isomorphism.
        let shifted = recover_at(&t, 5)?;
        let shift = base_point_shift(&t, 5)?;
        assert_eq!(base.relabel(shift.images())?, shifted);
        assert!(quasigroup_isomorphic(&base, &shifted)?.is_some());
    }
    Ok(())
}
