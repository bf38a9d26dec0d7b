//! Compact and list notation.

use siteswap::notation::{parse, render, NotationForm};

fn main() {
    for text in ["5551", "B0z", " 20, 0 ,0,0 ", "57,", "5!3", "3,,4"] {
        match parse(text) {
            Ok(seq) => {
                let compact =
                    render(&seq, NotationForm::Compact).unwrap_or_else(|e| format!("<{e}>"));
                let list = render(&seq, NotationForm::List).expect("list form always renders");
                println!("{text:>14?} -> {seq}  compact {compact:?}  list {list:?}");
            }
            Err(e) => println!("{text:>14?} -> {e}"),
        }
    }
}
