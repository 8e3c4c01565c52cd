//! Counts every catalog class five ways and reports whether they agree.
//!
//! cargo run --release --example cross_verify

use fibcat::catalog::catalog;
use fibcat::perm_core::{brute_force_counts, eco_counts, Limits};
use fibcat::production_matrix::{from_rule, TruncationSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 9;
    let limits = Limits::default();
    for &entry in catalog() {
        for k in entry.ks_within(2..=5) {
            let cls = entry.class(k)?;
            let rule = entry.rule(k)?;
            let series = [
                brute_force_counts(&cls, n, limits.factorial_cap)?,
                eco_counts(&cls, n, &limits)?,
                rule.level_counts(n)?,
                from_rule(&rule, TruncationSpec::for_level(n))?.counts(n)?,
                entry.gf(k)?.series(n)?,
            ];
            let agree = series.windows(2).all(|w| w[0] == w[1]);
            println!("{:<10} {:<22} {}  {}", cls.name(), cls.basis_string(), if agree { "ok  " } else { "DIFF" }, series[0]);
        }
    }
    Ok(())
}
