//! Production matrices from rules and from the block recursions.
//!
//! cargo run --example production_matrices

use fibcat::production_matrix::{from_rule, m3_truncated, mk_block_recursion, pk_block_recursion, TruncationSpec};
use fibcat::SuccessionRule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fib = from_rule(&SuccessionRule::rsfibo(), TruncationSpec::for_level(10))?;
    println!("Fibonacci rule\n{}\ncounts {}\n", fib.render_with_labels(), fib.counts(10)?);

    for k in 2..=4 {
        let p = pk_block_recursion(k)?;
        println!("P_{k}\n{p}\ncounts {}\n", p.counts(10)?);
    }

    let m3 = m3_truncated(8)?;
    println!("M_3 (8x8 window)\n{m3}\ncounts {}\n", m3.counts(6)?);

    let m5 = mk_block_recursion(5, TruncationSpec::new(12, 10)?)?;
    println!("M_5 (12x12 window), exact to n = 10\ncounts {}", m5.counts(10)?);
    Ok(())
}
