//! Prints succession rules, their level counts, and the label-by-label check
//! against the class each one is meant to describe.
//!
//! cargo run --example succession_rules

use fibcat::catalog::ClassCatalogEntry;
use fibcat::perm_core::Limits;
use fibcat::succession::verify_rule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (ClassCatalogEntry::Fib, None),
        (ClassCatalogEntry::Gfib, Some(3)),
        (ClassCatalogEntry::Cat2, Some(4)),
        (ClassCatalogEntry::Evf1, Some(4)),
        (ClassCatalogEntry::Catalan, None),
    ];
    for (entry, k) in cases {
        let rule = entry.rule(k)?;
        let cls = entry.class(k)?;
        println!("{rule}");
        println!("counts: {}", rule.level_counts(10)?);
        let report = verify_rule(&rule, &cls, 8, &Limits::default())?;
        println!("matches {} up to n = 8: {}\n", cls.name(), report.all_agree());
    }
    Ok(())
}
