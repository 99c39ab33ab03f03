//! Walks that begin with an up step and whose images never return to the
//! axis before the end, drawn next to their images.
//!
//! ```text
//! cargo run --example up_walk_gallery -- 4
//! ```

use qmotzkin::render::{render_path, render_walk};
use qmotzkin::{enumerate_class, phi, ClassObject, ClassSpec, Family};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let spec = ClassSpec::new(Family::SWalks, n).begins_with_up().no_interior_return();
    let objects = enumerate_class(&spec).expect("valid class");
    print!("{}", spec.header());
    println!("# members: {}\n", objects.len());
    for object in objects {
        let ClassObject::Walk(walk) = object else { unreachable!("walk family") };
        print!("{}", render_walk(&walk));
        print!("{}", render_path(&phi(&walk).unwrap()));
        println!();
    }
}
