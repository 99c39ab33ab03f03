//! Standard Young tableaux with at most three rows, through walks and
//! single-coloured Motzkin paths.
//!
//! ```text
//! cargo run --example tableaux -- 4
//! ```

use qmotzkin::enumerate::enumerate_walks;
use qmotzkin::{motzkin_to_tableau, phi, tableau_to_motzkin, walk_to_tableau, StepSet};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    println!("{:<8} {:<14} {:<10} {:<18}", "walk", "tableau", "motzkin", "image");
    for walk in enumerate_walks(StepSet::Y, n) {
        let tableau = walk_to_tableau(&walk).unwrap();
        let path = tableau_to_motzkin(&tableau);
        assert_eq!(motzkin_to_tableau(&path).unwrap(), tableau);
        println!("{:<8} {:<14} {:<10} {:<18}", walk.to_string(), tableau.to_string(), path.to_string(), phi(&walk).unwrap().to_string());
    }
}
