//! Count each family for small lengths, with and without bounds.
//!
//! ```text
//! cargo run --release --example enumerate_counts -- 10
//! ```

use qmotzkin::{count_class, count_class_sharded, ClassSpec, Family};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    println!("{:>3} {:>8} {:>8} {:>10} {:>10} {:>12}", "n", "motzkin", "y-walks", "s-walks", "bicoloured", "marked");
    for n in 0..=n_max {
        let row: Vec<u64> = Family::ALL
            .iter()
            .map(|&f| count_class(&ClassSpec::new(f, n)).expect("fits in u64"))
            .collect();
        println!("{n:>3} {:>8} {:>8} {:>10} {:>10} {:>12}", row[2], row[0], row[1], row[3], row[4]);
    }

    println!("\nwalks in x + y <= c against bicoloured paths of height <= H");
    for h in 0..=2i64 {
        let n = n_max.min(10);
        let tri_odd = count_class(&ClassSpec::new(Family::SWalks, n).with_triangle(2 * h + 1)).unwrap();
        let strip = count_class(&ClassSpec::new(Family::BicolouredMotzkin, n).with_strip(h)).unwrap();
        let tri_even = count_class(&ClassSpec::new(Family::SWalks, n).with_triangle(2 * h)).unwrap();
        let no_top = count_class(&ClassSpec::new(Family::BicolouredMotzkin, n).with_strip(h).no_top_flat()).unwrap();
        println!("n={n} H={h}: c={} {tri_odd} vs {strip}; c={} {tri_even} vs {no_top}", 2 * h + 1, 2 * h);
    }

    let spec = ClassSpec::new(Family::SWalks, n_max);
    println!("\nsharded count of s-walks({n_max}): {}", count_class_sharded(&spec, 3).unwrap());
}
