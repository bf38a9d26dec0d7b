//! Ceilings below the period: all ball numbers at once, compared with
//! factorials, derangements, ménage numbers and the rook search.

use siteswap::closed_forms::{count_all_balls_small_ceiling, derangement_count, menage_count};
use siteswap::exact_math::factorial;
use siteswap::oracle::{count_patterns_oracle, rook_oracle, EnumerationSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(" n   c=n-1   c=n-2  c=n-3   rook(3,n)");
    for n in 3..=9usize {
        let top = n as u64 - 1;
        let row = [
            count_all_balls_small_ceiling(n, top)?,
            count_all_balls_small_ceiling(n, top - 1)?,
            count_all_balls_small_ceiling(n, top - 2)?,
        ];
        assert_eq!(row[0], factorial(n as u64));
        assert_eq!(row[1], derangement_count(n));
        assert_eq!(row[2], menage_count(n)?);
        for (gap, value) in row.iter().enumerate() {
            assert_eq!(*value, rook_oracle(gap, n)?);
            assert_eq!(
                *value,
                count_patterns_oracle(&EnumerationSpec::all_balls(n, top - gap as u64))?
            );
        }
        let rook3 = if n > 3 {
            rook_oracle(3, n)?.to_string()
        } else {
            "-".into()
        };
        println!(
            "{n:>2} {:>7} {:>7} {:>6} {:>11}",
            row[0], row[1], row[2], rook3
        );
    }
    Ok(())
}
