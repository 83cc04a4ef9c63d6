//! Counts of AG-groups and Bol* quasigroups for orders 3 through 20.
//!
//!     cargo run --release --example reproduce_tables

use agq::enumerate::{count_range, Kind};

fn main() -> agq::Result<()> {
    for (kind, title, assoc, other) in [
        (Kind::Ag, "AG-groups", "abelian", "non-assoc"),
        (Kind::BolStar, "Bol* quasigroups", "group", "non-group"),
    ] {
        println!("{title}");
        println!("{:>5} {:>10} {:>10} {:>6}", "order", assoc, other, "total");
        for r in count_range(kind, 3, 20)? {
            println!(
                "{:>5} {:>10} {:>10} {:>6}",
                r.order, r.associative, r.nonassociative, r.total
            );
        }
        println!();
    }
    Ok(())
}
