//! AG-groups of order 2009 = 7^2 * 41, one abelian group at a time.
//!
//! Neither group is small enough for a table search over all bijections, but
//! the automorphism groups (orders 1680 and 80640) are handled as integer
//! matrices.

use agq::abelian::{abelian_groups_of_order, aut_abelian};
use agq::enumerate::count_ag;
use agq::permgroups::involution_classes_of;

fn main() -> agq::Result<()> {
    for g in abelian_groups_of_order(2009) {
        let aut = aut_abelian(&g)?;
        let classes = involution_classes_of(&aut);
        println!(
            "{g:<12} |Aut| = {:>6}  involution classes: {}",
            aut.len(),
            classes.len()
        );
        for a in &classes {
            println!("    {a:?}");
        }
    }
    let r = count_ag(2009)?;
    println!(
        "abelian {}, non-associative {}, total {}",
        r.associative, r.nonassociative, r.total
    );
    Ok(())
}
