//! How the k-indexed classes move from their k = 2 start toward the limit
//! sequence as k grows: one column per k, one row per length.
//!
//! cargo run --example continuity_table -- [CLASS]

use fibcat::catalog::ClassCatalogEntry;
use fibcat::genfunc::catalan_terms;
use fibcat::perm_core::{eco_counts, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let entry: ClassCatalogEntry = std::env::args().nth(1).as_deref().unwrap_or("CAT1").parse()?;
    let n_max = 10;
    let ks: Vec<Option<u32>> = entry.ks_within(2..=7);
    let columns = ks
        .iter()
        .map(|&k| eco_counts(&entry.class(k)?, n_max, &Limits::default()).map_err(Into::into))
        .collect::<Result<Vec<_>, Box<dyn std::error::Error>>>()?;
    let catalan = catalan_terms(n_max)?;

    print!("{:>3}", "n");
    for k in &ks {
        print!("{:>8}", k.map_or("-".into(), |k| format!("k={k}")));
    }
    println!("{:>8}", "C_n");
    for n in 0..=n_max {
        print!("{n:>3}");
        for col in &columns {
            print!("{:>8}", col.terms()[n]);
        }
        println!("{:>8}", catalan.terms()[n]);
    }
    Ok(())
}
