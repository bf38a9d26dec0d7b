//! Check a few throw sequences against both validity conditions.
//!
//! cargo run -p siteswap --example validate -- 5551 441 12

use siteswap::notation::parse;
use siteswap::pattern::validate;

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["5551", "441", "12", "4,3", "b0z", "20,0,0,0"]
            .map(String::from)
            .to_vec();
    }
    for text in &inputs {
        let seq = match parse(text) {
            Ok(seq) => seq,
            Err(e) => {
                println!("{text:>10}  {e}");
                continue;
            }
        };
        let report = validate(&seq);
        if report.valid {
            println!("{text:>10}  valid, {} balls", report.balls.unwrap_or(0));
        } else {
            println!("{text:>10}  invalid");
            for v in &report.violations {
                println!("{:>10}    {v}", "");
            }
        }
    }
}
