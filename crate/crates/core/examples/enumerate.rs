//! List patterns under a ceiling, sequentially and with the parallel search.

use siteswap::notation::render_auto;
use siteswap::oracle::{collect_patterns_parallel, enumerate_patterns, EnumerationSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = EnumerationSpec::fixed(3, 3).with_ceiling(5);
    println!("3-ball patterns of period 3 with heights <= 5:");
    let listed: Vec<_> = enumerate_patterns(&spec)?.collect();
    for p in &listed {
        println!("  {}", render_auto(p.sequence()));
    }
    assert_eq!(listed, collect_patterns_parallel(&spec)?);

    // the stream is lazy, so taking a prefix is cheap
    let spec = EnumerationSpec::fixed(5, 4);
    let first: Vec<String> = enumerate_patterns(&spec)?
        .take(5)
        .map(|p| render_auto(p.sequence()))
        .collect();
    println!("first five 4-ball period-5 patterns: {}", first.join(" "));
    Ok(())
}
