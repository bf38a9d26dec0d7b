//! The Eulerian triangle three ways: recursion, explicit alternating sum, and
//! a census of permutations by descent count.

use itertools::Itertools;
use num_bigint::BigInt;
use siteswap::exact_math::{eulerian_explicit, eulerian_row, factorial};
use siteswap::pattern::{descent_count, Permutation};

fn main() {
    let max_n = 8;
    for n in 1..=max_n {
        let row = eulerian_row(n);
        let explicit: Vec<BigInt> = (0..n as i64)
            .map(|k| eulerian_explicit(n, k).expect("k in range"))
            .collect();
        let mut census = vec![BigInt::from(0); n];
        for p in (0..n).permutations(n) {
            census[descent_count(&Permutation::new(p).expect("a permutation"))] += 1;
        }
        assert_eq!(row, explicit);
        assert_eq!(row, census);

        let sum: BigInt = row.iter().sum();
        let cells = row.iter().map(ToString::to_string).join(" ");
        println!("{n}: {cells:<40} sum = {sum} = {n}!");
        assert_eq!(sum, factorial(n as u64));
    }
}
