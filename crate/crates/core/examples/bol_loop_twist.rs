//! Right Bol quasigroups from a non-associative right Bol loop of order 8.

use agq::tables::{aut_quasigroup, check_identity, AxiomReport, CayleyTable, Identity};
use agq::twist::twist;
use agq::{BaseKind, TwistSpec};

const LOOP: &str = include_str!("../tests/data/bol8.tbl");

fn main() -> agq::Result<()> {
    let base: CayleyTable = LOOP.parse()?;
    assert!(!check_identity(&base, Identity::Associative).holds());
    let aut = aut_quasigroup(&base)?;
    let classes = aut.involution_classes();
    println!(
        "|Aut(loop)| = {}, involution classes: {}",
        aut.order(),
        classes.len()
    );
    for alpha in classes {
        let spec = TwistSpec::new(base.clone(), BaseKind::BolLoop, alpha)?;
        let q = twist(&spec);
        let r = AxiomReport::of(&q);
        println!(
            "alpha = {:<20} right Bol: {}  two-sided identity: {}",
            spec.alpha().to_string(),
            r.is_right_bol(),
            (0..8).all(|x| q.get(x, 0) == x),
        );
    }
    Ok(())
}
