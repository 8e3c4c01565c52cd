//! Rational generating functions, their expansions, and the convergent chains
//! that approach the Catalan numbers.
//!
//! cargo run --example generating_functions

use fibcat::genfunc::{catalan_terms, convergent_chain, fbark_gf, gf_equal, tk_gf, ChainKind, RationalGF};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t3 = tk_gf(3)?;
    let tribonacci = RationalGF::from_coeffs(vec![1], vec![1, -1, -1, -1])?;
    println!("{t3} = {tribonacci}: {}", gf_equal(&t3, &tribonacci));
    println!("  {}", t3.series(10)?);

    for k in 3..=6 {
        let f = fbark_gf(k)?;
        println!("Fbar_{k} = {f}\n  {}", f.series(10)?);
    }

    let catalan = catalan_terms(10)?;
    println!("Catalan  {catalan}");
    for kind in [ChainKind::P, ChainKind::M, ChainKind::D] {
        for k in kind.min_k().max(2)..=6 {
            let s = convergent_chain(kind, k)?.series(10)?;
            let agree = s.first_mismatch(&catalan).unwrap_or(s.len());
            println!("{kind:?}_{k}: {s}  (agrees for n < {agree})");
        }
    }
    Ok(())
}
