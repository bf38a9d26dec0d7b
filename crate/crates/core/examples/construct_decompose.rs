//! Build patterns as P - Q + nB and split them back apart.

use siteswap::notation::{parse, render_auto};
use siteswap::pattern::{construct, decompose, JugglingPattern, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a rotation of the identity, every throw lifted once
    let perm = Permutation::new(vec![1, 2, 3, 0])?;
    let pattern = construct(&perm, &[1, 1, 1, 1])?;
    println!(
        "P = {:?}, B = (1,1,1,1)  ->  {} ({} balls)",
        perm.as_slice(),
        render_auto(pattern.sequence()),
        pattern.balls()
    );

    // position 3 has p_3 < 3, so it needs b_3 >= 1
    match construct(&perm, &[1, 1, 1, 0]) {
        Ok(p) => println!("unexpected: {p}"),
        Err(e) => println!("P = {:?}, B = (1,1,1,0)  ->  {e}", perm.as_slice()),
    }

    for text in ["97531", "744", "b1"] {
        let pattern = JugglingPattern::try_from(parse(text)?)?;
        let d = decompose(&pattern);
        println!(
            "{text:>6}  P = {:?}  B = {:?}  descents = {}",
            d.perm.as_slice(),
            d.b_vec,
            d.descents
        );
        assert_eq!(construct(&d.perm, &d.b_vec)?, pattern);
    }
    Ok(())
}
