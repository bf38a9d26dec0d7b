//! x^n written in the binomial basis C(x + k, n) with Eulerian coefficients.

use num_bigint::BigInt;
use num_traits::Pow;
use siteswap::exact_math::{eulerian_row, worpitzky_rhs};

fn main() {
    let n = 4;
    let coefficients: Vec<String> = eulerian_row(n).iter().map(ToString::to_string).collect();
    println!(
        "x^{n} = sum_k E({n},k) C(x+k,{n}),  E({n},.) = [{}]",
        coefficients.join(", ")
    );
    for x in 0..=10u64 {
        let rhs = worpitzky_rhs(x, n);
        let lhs: BigInt = Pow::pow(BigInt::from(x), n);
        println!("x = {x:>2}:  {lhs:>6} = {rhs:>6}");
        assert_eq!(lhs, rhs);
    }
}
