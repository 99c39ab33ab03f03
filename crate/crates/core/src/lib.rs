//! A length-preserving bijection between quarter-plane walks with the six
//! steps `{R, A, D, L, B, U}` and bicoloured Motzkin paths.
//!
//! The forward map [`phi`](phi::phi) sends a walk to a marked bicoloured
//! Motzkin path; forgetting the marks gives the bijection. Its inverse goes
//! through the marking map [`psi`](psi::psi) and the left inverse
//! [`g_unmap`](phi::g_unmap). Restricted to the three steps `{A, L, U}` the
//! bijection lands on single-coloured paths, which ties it to standard Young
//! tableaux with at most three rows ([`tableau`]).
//!
//! ```
//! use qmotzkin::{parse_walk, phi, forget_marks};
//!
//! let w = parse_walk("UAL").unwrap();
//! let m = phi(&w).unwrap();
//! assert_eq!(m.to_string(), "ur.fr.dr.");
//! assert_eq!(forget_marks(&m).to_string(), "urfrdr");
//! ```

pub mod cli;
pub mod enumerate;
pub mod oeis;
pub mod path;
pub mod phi;
pub mod psi;
pub mod render;
pub mod tableau;
pub mod verify;
pub mod walk;

pub use enumerate::{
    count_class, count_class_sharded, enumerate_class, for_each_in_class, ClassObject, ClassSpec,
    EnumError, Family, Filters,
};
pub use path::{
    format_path, parse_path, path_heights, BicolouredPath, Colour, ColourMark, Mark,
    MarkedBicolouredPath, MotzkinKind, MotzkinPath, Path, PathError, PathStep, Plain,
};
pub use phi::{g_unmap, phi, phi_image_contains, phi_inverse, PhiError, UnmapError};
pub use psi::{forget_marks, psi, PsiError};
pub use tableau::{motzkin_to_tableau, tableau_to_motzkin, tableau_to_walk, walk_to_tableau, Tableau3};
pub use verify::{find_height_counterexample, HeightWitness, VerificationReport};
pub use walk::{format_walk, parse_walk, walk_endpoint, QuarterPlaneWalk, StepSet, WalkError, WalkStep};
