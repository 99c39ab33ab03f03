//! Run every verification suite up to a length and print the reports.
//!
//! ```text
//! cargo run --release --example verify_all -- 8
//! ```

use qmotzkin::verify::{run_suite, SUITES};
use qmotzkin::find_height_counterexample;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let mut all_passed = true;
    for name in SUITES {
        if name == "height" {
            match find_height_counterexample(n, 1) {
                Some(w) => println!("height   H=1 witness {} (image height {})", w.walk, w.image_strip_height),
                None => println!("height   no H=1 witness up to length {n}"),
            }
            continue;
        }
        for len in 0..=n {
            let report = run_suite(name, len, 1).expect("known suite");
            all_passed &= report.ok();
            if len == n || !report.ok() {
                println!(
                    "{name:<12} n={len:<2} total={:<8} failed={} {:>6} ms",
                    report.total, report.failed, report.elapsed_ms
                );
            }
            if let Some(f) = &report.first_failure {
                println!("  first failure: {f}");
            }
        }
    }
    std::process::exit(if all_passed { 0 } else { 3 });
}
