//! Search for walks inside a triangle whose images leave the matching strip.
//!
//! ```text
//! cargo run --example height_witness -- 6
//! ```

use qmotzkin::find_height_counterexample;
use qmotzkin::render::render_path;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for h in 0..=2 {
        match find_height_counterexample(n_max, h) {
            Some(w) => {
                print!("{}", w.to_text());
                println!("json: {}", serde_json::to_string(&w).unwrap());
                print!("{}", render_path(&w.image()));
            }
            None => println!("H={h}: no witness up to length {n_max}"),
        }
        println!();
    }
}
