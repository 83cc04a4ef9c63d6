//! Exhaustive table search against the automorphism-class counts for the
//! orders where the search finishes quickly.

use agq::enumerate::{brute_force_ag, brute_force_bolstar, count_ag, count_bolstar};

fn main() -> agq::Result<()> {
    for n in 1..=5 {
        let (fast, slow) = (count_ag(n)?, brute_force_ag(n)?);
        println!(
            "AG   n={n}: classes {:?}  search {:?}",
            fast.counts(),
            slow.counts()
        );
        assert_eq!(fast.counts(), slow.counts());
    }
    for n in 1..=4 {
        let (fast, slow) = (count_bolstar(n)?, brute_force_bolstar(n)?);
        println!(
            "Bol* n={n}: classes {:?}  search {:?}",
            fast.counts(),
            slow.counts()
        );
        assert_eq!(fast.counts(), slow.counts());
    }
    Ok(())
}
