//! Pattern containment and the members of a small class.
//!
//! cargo run --example contains_pattern

use fibcat::perm_core::{all_permutations, avoids_all, contains, AvoidanceClass};
use fibcat::{Pattern, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pi: Permutation = "41523".parse()?;
    for g in ["123", "321", "2143", "312"] {
        let g: Pattern = g.parse()?;
        println!("{pi} contains {g}: {}", contains(&pi, &g));
    }

    let cls = AvoidanceClass::from_patterns(&["123", "132", "213"])?;
    let members: Vec<String> = all_permutations(4)
        .filter(|p| avoids_all(p, &cls))
        .map(|p| p.to_string())
        .collect();
    println!("{} of length 4: {}", cls.name(), members.join(" "));
    Ok(())
}
