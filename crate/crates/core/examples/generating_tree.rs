//! Grows the generating tree of a class and shows how many active sites its
//! nodes have on each level.
//!
//! cargo run --example generating_tree -- [CLASS] [K]

use fibcat::catalog;
use fibcat::perm_core::{active_sites, eco_enumerate, eco_stats, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = args.first().map(String::as_str).unwrap_or("GFIB");
    let k = match args.get(1) {
        Some(k) => Some(k.parse()?),
        None if id == "GFIB" => Some(3),
        None => None,
    };
    let (_, cls) = catalog::lookup(id, k)?;
    println!("{} = S({})", cls.name(), cls.basis_string());

    let levels = eco_enumerate(&cls, 3, 10_000)?;
    for level in &levels {
        for p in level {
            let sites: Vec<String> = active_sites(p, &cls)?.iter().map(|s| s.get().to_string()).collect();
            println!("  {p:<4} active sites {}", sites.join(","));
        }
    }

    let stats = eco_stats(&cls, 10, &Limits::default())?;
    println!("counts n = 0..10: {}", stats.counts);
    for (n, hist) in stats.site_histograms.iter().enumerate() {
        let parts: Vec<String> = hist.iter().map(|(sites, c)| format!("{c}x({sites})")).collect();
        println!("  n={n:<2} {}", parts.join(" "));
    }
    Ok(())
}
