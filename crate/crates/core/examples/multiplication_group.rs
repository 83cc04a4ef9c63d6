//! The multiplication group of C_n twisted by negation is dihedral of
//! order 2n; other twists give other semidirect products.

use agq::abelian::{abelian_table, AbelianInvariants};
use agq::mulgroup::verify_mulgroup_structure;
use agq::twist::{parse_alpha, twist};
use agq::{BaseKind, TwistSpec};

fn main() -> agq::Result<()> {
    for chain in ["6", "8", "2,4", "3,3"] {
        let g: AbelianInvariants = chain.parse()?;
        let base = abelian_table(&g);
        let spec = TwistSpec::new(base.clone(), BaseKind::Abelian, parse_alpha(&base, "neg")?)?;
        let report = verify_mulgroup_structure(&twist(&spec))?;
        let s = &report.structure;
        println!(
            "({g}, neg): |M| = {}, |Inn| = {}, dihedral: {}, splits over abelian index 2: {}",
            report.order,
            report.inner_order,
            s.dihedral,
            s.splits_over_abelian_index_two()
        );
        for (claim, verdict) in report.verdicts() {
            println!("    {claim}: {verdict}");
        }
    }
    Ok(())
}
