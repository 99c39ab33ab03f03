//! Map a walk to its marked bicoloured Motzkin path and back.
//!
//! ```text
//! cargo run --example map_walk -- URUALDB
//! ```

use qmotzkin::{forget_marks, g_unmap, parse_walk, phi, phi_inverse, psi};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "URUALDB".into());
    let walk = match parse_walk(&text) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("{text}: {e}");
            std::process::exit(1);
        }
    };
    let marked = phi(&walk).expect("every quarter-plane walk has an image");
    let plain = forget_marks(&marked);
    println!("walk     {walk}  ends at {:?}", walk.endpoint());
    println!("marked   {marked}");
    println!("plain    {plain}");
    println!("re-mark  {}", psi(&plain).unwrap());
    let (steps, valid) = g_unmap(&marked).unwrap();
    println!("unmapped {} (valid: {valid})", steps.iter().map(|s| s.to_char()).collect::<String>());
    match phi_inverse(&marked) {
        Some(w) => println!("inverse  {w}"),
        None => println!("inverse  not in the image"),
    }
}
