//! Counting patterns with and without a height ceiling, and how the dispatcher
//! chooses a formula.

use siteswap::closed_forms::{
    count, count_ceiling_multiple, count_ceiling_multiple_closed, count_unbounded, CountQuery,
    Method,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("period 4, 5 balls, no ceiling: {}", count_unbounded(4, 5));

    // ceilings of the form a*n - 1
    for a in 1..=6u64 {
        let c = 4 * a - 1;
        println!(
            "period 4, 5 balls, ceiling {c:>2}: {:>3} (closed form {})",
            count_ceiling_multiple(4, 5, a),
            count_ceiling_multiple_closed(4, 5, a)
        );
    }

    let queries = [
        CountQuery::fixed(4, 5),
        CountQuery::fixed(4, 5).with_ceiling(11),
        CountQuery::fixed(4, 2).with_ceiling(3),
        CountQuery::fixed(5, 2).with_ceiling(3),
        CountQuery::all_balls(7, 6),
        CountQuery::all_balls(7, 5),
        CountQuery::all_balls(7, 4),
        CountQuery::all_balls(7, 2),
    ];
    println!();
    for q in queries {
        let r = count(&q.clone().with_method(Method::Both))?;
        println!(
            "n={} balls={:?} ceiling={:?}: {} via {} (cross-checked: {})",
            q.period, q.balls, q.ceiling, r.count, r.branch, r.cross_checked
        );
    }
    Ok(())
}
