//! Identify counting sequences against the bundled snapshot, or online with
//! `--online`.
//!
//! ```text
//! cargo run --example seq_id
//! cargo run --example seq_id -- --online
//! ```

use qmotzkin::oeis::{seq_id_lookup, LookupMode};
use qmotzkin::{count_class, ClassSpec, Family};

fn main() {
    let mode = if std::env::args().any(|a| a == "--online") {
        LookupMode::Online
    } else {
        LookupMode::Offline
    };
    for family in Family::ALL {
        let terms: Vec<i128> = (0..=9)
            .map(|n| count_class(&ClassSpec::new(family, n)).unwrap() as i128)
            .collect();
        let ids = match seq_id_lookup(&terms, mode) {
            Ok(found) if found.is_empty() => "no match".to_string(),
            Ok(found) => found.iter().map(|m| m.identifier.as_str()).collect::<Vec<_>>().join(", "),
            Err(e) => format!("lookup failed: {e}"),
        };
        println!("{:<11} {:?}... {ids}", family.to_string(), &terms[..6]);
    }
}
