//! Mark a bicoloured Motzkin path and recover the walk it comes from.
//!
//! ```text
//! cargo run --example mark_path -- ubfbfrdr
//! ```

use qmotzkin::render::render_path;
use qmotzkin::{g_unmap, parse_path, phi_image_contains, psi, Colour, QuarterPlaneWalk};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "ubfbfrdr".into());
    let path = match parse_path::<Colour>(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{text}: {e}");
            std::process::exit(1);
        }
    };
    let marked = psi(&path).expect("every bicoloured Motzkin path can be marked");
    print!("{}", render_path(&marked));
    println!("marked {marked}, in image: {}", phi_image_contains(&marked));
    let (steps, valid) = g_unmap(&marked).unwrap();
    let walk = QuarterPlaneWalk::new(steps).expect("marked paths unmap to quadrant walks");
    println!("walk   {walk} (valid: {valid}), ends at {:?}", walk.endpoint());
}
