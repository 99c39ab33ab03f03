//! Exhaustive generators and counters for walk and path classes.
//!
//! Generation is depth-first with prefix pruning and yields objects in a
//! fixed lexicographic order: walk steps `R < A < D < L < B < U`; path tokens
//! by kind `u < f < d`, then colour `r < b`, then mark `* < .`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::path::{
    Colour, ColourMark, Decoration, MotzkinKind, Path, PathStep, Plain,
};
use crate::phi::phi_steps;
use crate::walk::{QuarterPlaneWalk, StepSet, WalkStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    YWalks,
    SWalks,
    Motzkin,
    BicolouredMotzkin,
    MarkedBicolouredMotzkin,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::YWalks,
        Family::SWalks,
        Family::Motzkin,
        Family::BicolouredMotzkin,
        Family::MarkedBicolouredMotzkin,
    ];

    pub fn is_walk(self) -> bool {
        matches!(self, Family::YWalks | Family::SWalks)
    }

    /// Name used on the command line and in corpus headers.
    pub fn name(self) -> &'static str {
        match self {
            Family::YWalks => "y-walks",
            Family::SWalks => "s-walks",
            Family::Motzkin => "motzkin",
            Family::BicolouredMotzkin => "bicoloured",
            Family::MarkedBicolouredMotzkin => "marked",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "y-walks" | "y" => Family::YWalks,
            "s-walks" | "s" => Family::SWalks,
            "motzkin" | "m" => Family::Motzkin,
            "bicoloured" | "bicolored" | "m2" => Family::BicolouredMotzkin,
            "marked" | "mm2" => Family::MarkedBicolouredMotzkin,
            _ => return None,
        })
    }

    fn step_set(self) -> Option<StepSet> {
        match self {
            Family::YWalks => Some(StepSet::Y),
            Family::SWalks => Some(StepSet::S),
            _ => None,
        }
    }

    /// Decorations per path step.
    fn multiplicity(self) -> u64 {
        match self {
            Family::BicolouredMotzkin => 2,
            Family::MarkedBicolouredMotzkin => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filters {
    /// First walk step is `U`. Walk families only.
    pub begins_with_up: bool,
    /// The path (for walks: its image under the forgetful composite) returns
    /// to height zero only at the end.
    pub no_interior_return: bool,
}

/// A description of an enumerable class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassSpec {
    pub family: Family,
    pub length: usize,
    /// Walks keep `x + y <= c` at every point.
    pub triangle_bound: Option<i64>,
    /// Paths keep height `<= H` at every point.
    pub strip_height: Option<i64>,
    /// No flat step at height `H` (requires `strip_height`).
    pub forbid_flat_at_top: bool,
    pub filters: Filters,
}

impl ClassSpec {
    pub fn new(family: Family, length: usize) -> Self {
        ClassSpec {
            family,
            length,
            triangle_bound: None,
            strip_height: None,
            forbid_flat_at_top: false,
            filters: Filters::default(),
        }
    }

    pub fn with_triangle(mut self, c: i64) -> Self {
        self.triangle_bound = Some(c);
        self
    }

    pub fn with_strip(mut self, h: i64) -> Self {
        self.strip_height = Some(h);
        self
    }

    pub fn no_top_flat(mut self) -> Self {
        self.forbid_flat_at_top = true;
        self
    }

    pub fn begins_with_up(mut self) -> Self {
        self.filters.begins_with_up = true;
        self
    }

    pub fn no_interior_return(mut self) -> Self {
        self.filters.no_interior_return = true;
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        let walk = self.family.is_walk();
        if walk && (self.strip_height.is_some() || self.forbid_flat_at_top) {
            return Err(EnumError::SpecMismatch("strip bounds apply only to path families"));
        }
        if !walk && self.triangle_bound.is_some() {
            return Err(EnumError::SpecMismatch("triangle bound applies only to walk families"));
        }
        if !walk && self.filters.begins_with_up {
            return Err(EnumError::SpecMismatch("begins-with-up applies only to walk families"));
        }
        if self.forbid_flat_at_top && self.strip_height.is_none() {
            return Err(EnumError::SpecMismatch("forbidding a top flat needs a strip height"));
        }
        if self.triangle_bound.is_some_and(|c| c < 0) || self.strip_height.is_some_and(|h| h < 0) {
            return Err(EnumError::SpecMismatch("bounds must be nonnegative"));
        }
        Ok(())
    }

    /// `#`-comment header lines for corpus files.
    pub fn header(&self) -> String {
        let opt = |v: Option<i64>| v.map_or_else(|| "none".to_string(), |c| c.to_string());
        format!(
            "# family: {}\n# length: {}\n# triangle_bound: {}\n# strip_height: {}\n# forbid_flat_at_top: {}\n# begins_with_up: {}\n# no_interior_return: {}\n",
            self.family,
            self.length,
            opt(self.triangle_bound),
            opt(self.strip_height),
            self.forbid_flat_at_top,
            self.filters.begins_with_up,
            self.filters.no_interior_return,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("SpecMismatch: {0}")]
    SpecMismatch(&'static str),
    #[error("Overflow")]
    Overflow,
}

/// One member of any class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassObject {
    Walk(QuarterPlaneWalk),
    Plain(Path<Plain>),
    Bicoloured(Path<Colour>),
    Marked(Path<ColourMark>),
}

impl fmt::Display for ClassObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassObject::Walk(w) => w.fmt(f),
            ClassObject::Plain(p) => p.fmt(f),
            ClassObject::Bicoloured(p) => p.fmt(f),
            ClassObject::Marked(p) => p.fmt(f),
        }
    }
}

// ---------------------------------------------------------------------------
// walks

#[derive(Debug, Clone, Copy)]
struct WalkBounds<'a> {
    steps: &'a [WalkStep],
    triangle: Option<i64>,
    begins_with_up: bool,
}

impl WalkBounds<'_> {
    fn allows(&self, depth: usize, s: WalkStep, x: i64, y: i64) -> bool {
        if depth == 0 && self.begins_with_up && s != WalkStep::Up {
            return false;
        }
        x >= 0 && y >= 0 && self.triangle.is_none_or(|c| x + y <= c)
    }
}

fn walk_dfs(
    b: WalkBounds<'_>,
    n: usize,
    prefix: &mut Vec<WalkStep>,
    x: i64,
    y: i64,
    visit: &mut dyn FnMut(&[WalkStep]),
) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for &s in b.steps {
        let (dx, dy) = s.vector();
        let (nx, ny) = (x + dx, y + dy);
        if b.allows(prefix.len(), s, nx, ny) {
            prefix.push(s);
            walk_dfs(b, n, prefix, nx, ny, visit);
            prefix.pop();
        }
    }
}

fn walk_count(b: WalkBounds<'_>, remaining: usize, depth: usize, x: i64, y: i64) -> Option<u64> {
    if remaining == 0 {
        return Some(1);
    }
    let mut total = 0u64;
    for &s in b.steps {
        let (dx, dy) = s.vector();
        let (nx, ny) = (x + dx, y + dy);
        if b.allows(depth, s, nx, ny) {
            total = total.checked_add(walk_count(b, remaining - 1, depth + 1, nx, ny)?)?;
        }
    }
    Some(total)
}

/// Visit every walk of length `n` over `steps` that stays in the quadrant
/// (and under the triangle, if given), in enumeration order.
pub fn for_each_walk(
    set: StepSet,
    n: usize,
    triangle: Option<i64>,
    mut visit: impl FnMut(&[WalkStep]),
) {
    let b = WalkBounds { steps: set.steps(), triangle, begins_with_up: false };
    walk_dfs(b, n, &mut Vec::with_capacity(n), 0, 0, &mut visit);
}

pub fn enumerate_walks(set: StepSet, n: usize) -> Vec<QuarterPlaneWalk> {
    let mut out = Vec::new();
    for_each_walk(set, n, None, |w| out.push(QuarterPlaneWalk::from_valid(w.to_vec())));
    out
}

// ---------------------------------------------------------------------------
// paths

#[derive(Debug, Clone, Copy)]
struct PathBounds {
    strip: Option<i64>,
    forbid_top_flat: bool,
    no_interior_return: bool,
}

impl PathBounds {
    /// Whether `kind` may follow a prefix of length `depth` at height `h`
    /// in a path of total length `n`.
    fn allows(&self, n: usize, depth: usize, h: i64, kind: MotzkinKind) -> bool {
        let nh = h + kind.delta();
        if nh < 0 {
            return false;
        }
        // must still be able to come down
        if nh > (n - depth - 1) as i64 {
            return false;
        }
        if let Some(top) = self.strip {
            if nh > top || (self.forbid_top_flat && kind == MotzkinKind::Flat && h == top) {
                return false;
            }
        }
        if self.no_interior_return && nh == 0 && depth + 1 < n {
            return false;
        }
        true
    }
}

fn shape_dfs(
    b: PathBounds,
    n: usize,
    prefix: &mut Vec<MotzkinKind>,
    h: i64,
    visit: &mut dyn FnMut(&[MotzkinKind]),
) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for k in MotzkinKind::ALL {
        if b.allows(n, prefix.len(), h, k) {
            prefix.push(k);
            shape_dfs(b, n, prefix, h + k.delta(), visit);
            prefix.pop();
        }
    }
}

fn shape_count(b: PathBounds, n: usize, depth: usize, h: i64) -> Option<u64> {
    if depth == n {
        return Some(1);
    }
    let mut total = 0u64;
    for k in MotzkinKind::ALL {
        if b.allows(n, depth, h, k) {
            total = total.checked_add(shape_count(b, n, depth + 1, h + k.delta())?)?;
        }
    }
    Some(total)
}

/// Decorated paths over a fixed shape, in token order.
fn decorate<D: Decoration>(
    shape: &[MotzkinKind],
    prefix: &mut Vec<PathStep<D>>,
    visit: &mut dyn FnMut(&[PathStep<D>]),
) {
    let i = prefix.len();
    if i == shape.len() {
        visit(prefix);
        return;
    }
    for &d in D::ALL {
        prefix.push(PathStep::new(shape[i], d));
        decorate(shape, prefix, visit);
        prefix.pop();
    }
}

/// Decorated DFS: interleaves kind and decoration choices so the output is
/// lexicographic in whole tokens.
fn path_dfs<D: Decoration>(
    b: PathBounds,
    n: usize,
    prefix: &mut Vec<PathStep<D>>,
    h: i64,
    visit: &mut dyn FnMut(&[PathStep<D>]),
) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for k in MotzkinKind::ALL {
        if b.allows(n, prefix.len(), h, k) {
            for &d in D::ALL {
                prefix.push(PathStep::new(k, d));
                path_dfs(b, n, prefix, h + k.delta(), visit);
                prefix.pop();
            }
        }
    }
}

/// Visit every decorated Motzkin path of length `n` within the given strip,
/// in enumeration order.
pub fn for_each_path<D: Decoration>(
    n: usize,
    strip: Option<i64>,
    forbid_top_flat: bool,
    mut visit: impl FnMut(&[PathStep<D>]),
) {
    let b = PathBounds { strip, forbid_top_flat, no_interior_return: false };
    path_dfs(b, n, &mut Vec::with_capacity(n), 0, &mut visit);
}

pub fn enumerate_paths<D: Decoration>(n: usize) -> Vec<Path<D>> {
    let mut out = Vec::new();
    for_each_path::<D>(n, None, false, |p| out.push(Path::from_valid(p.to_vec())));
    out
}

/// Visit the undecorated shapes of length `n`.
pub fn for_each_shape(n: usize, mut visit: impl FnMut(&[MotzkinKind])) {
    let b = PathBounds { strip: None, forbid_top_flat: false, no_interior_return: false };
    shape_dfs(b, n, &mut Vec::with_capacity(n), 0, &mut visit);
}

/// Every decoration of one shape, in token order.
pub fn for_each_decoration<D: Decoration>(shape: &[MotzkinKind], mut visit: impl FnMut(&[PathStep<D>])) {
    decorate(shape, &mut Vec::with_capacity(shape.len()), &mut visit);
}

// ---------------------------------------------------------------------------
// class-level entry points

fn walk_bounds(spec: &ClassSpec) -> WalkBounds<'static> {
    WalkBounds {
        steps: spec.family.step_set().expect("walk family").steps(),
        triangle: spec.triangle_bound,
        begins_with_up: spec.filters.begins_with_up,
    }
}

fn path_bounds(spec: &ClassSpec) -> PathBounds {
    PathBounds {
        strip: spec.strip_height,
        forbid_top_flat: spec.forbid_flat_at_top,
        no_interior_return: spec.filters.no_interior_return,
    }
}

/// Whether the image of a walk under the forgetful composite avoids
/// interior returns. The image heights only depend on the marked path.
fn walk_image_has_no_interior_return(steps: &[WalkStep]) -> bool {
    let image = phi_steps(steps).expect("enumerated walks stay in the quadrant");
    let mut h = 0i64;
    for s in &image[..image.len().saturating_sub(1)] {
        h += s.kind.delta();
        if h == 0 {
            return false;
        }
    }
    true
}

/// Stream every member of the class, in enumeration order.
pub fn for_each_in_class(
    spec: &ClassSpec,
    mut visit: impl FnMut(ClassObject),
) -> Result<(), EnumError> {
    spec.validate()?;
    let n = spec.length;
    match spec.family {
        Family::YWalks | Family::SWalks => {
            let b = walk_bounds(spec);
            let nir = spec.filters.no_interior_return;
            walk_dfs(b, n, &mut Vec::with_capacity(n), 0, 0, &mut |w| {
                if !nir || walk_image_has_no_interior_return(w) {
                    visit(ClassObject::Walk(QuarterPlaneWalk::from_valid(w.to_vec())));
                }
            });
        }
        Family::Motzkin => {
            path_dfs::<Plain>(path_bounds(spec), n, &mut Vec::new(), 0, &mut |p| {
                visit(ClassObject::Plain(Path::from_valid(p.to_vec())))
            });
        }
        Family::BicolouredMotzkin => {
            path_dfs::<Colour>(path_bounds(spec), n, &mut Vec::new(), 0, &mut |p| {
                visit(ClassObject::Bicoloured(Path::from_valid(p.to_vec())))
            });
        }
        Family::MarkedBicolouredMotzkin => {
            path_dfs::<ColourMark>(path_bounds(spec), n, &mut Vec::new(), 0, &mut |p| {
                visit(ClassObject::Marked(Path::from_valid(p.to_vec())))
            });
        }
    }
    Ok(())
}

pub fn enumerate_class(spec: &ClassSpec) -> Result<Vec<ClassObject>, EnumError> {
    let mut out = Vec::new();
    for_each_in_class(spec, |o| out.push(o))?;
    Ok(out)
}

/// Cardinality of the class without building the objects. Decorated path
/// classes are counted by shape times the per-step decoration multiplicity,
/// since none of the bounds depend on the decoration.
pub fn count_class(spec: &ClassSpec) -> Result<u64, EnumError> {
    spec.validate()?;
    let n = spec.length;
    match spec.family {
        Family::YWalks | Family::SWalks => {
            let b = walk_bounds(spec);
            if spec.filters.no_interior_return {
                let mut total = 0u64;
                let mut overflow = false;
                walk_dfs(b, n, &mut Vec::with_capacity(n), 0, 0, &mut |w| {
                    if walk_image_has_no_interior_return(w) {
                        match total.checked_add(1) {
                            Some(t) => total = t,
                            None => overflow = true,
                        }
                    }
                });
                if overflow {
                    return Err(EnumError::Overflow);
                }
                Ok(total)
            } else {
                walk_count(b, n, 0, 0, 0).ok_or(EnumError::Overflow)
            }
        }
        _ => {
            // fail fast before walking the shapes
            decorated(1, spec.family.multiplicity(), n)?;
            let shapes = shape_count(path_bounds(spec), n, 0, 0).ok_or(EnumError::Overflow)?;
            decorated(shapes, spec.family.multiplicity(), n)
        }
    }
}

fn decorated(shapes: u64, mult: u64, n: usize) -> Result<u64, EnumError> {
    let n = u32::try_from(n).map_err(|_| EnumError::Overflow)?;
    mult.checked_pow(n)
        .and_then(|m| m.checked_mul(shapes))
        .ok_or(EnumError::Overflow)
}

/// Same count as [`count_class`], sharded across threads by the first
/// `shard_depth` steps. The sum does not depend on the shard count.
pub fn count_class_sharded(spec: &ClassSpec, shard_depth: usize) -> Result<u64, EnumError> {
    spec.validate()?;
    if spec.family.is_walk() && spec.filters.no_interior_return {
        return count_class(spec);
    }
    let n = spec.length;
    let depth = shard_depth.min(n);
    let partial: Vec<Option<u64>> = if spec.family.is_walk() {
        let b = walk_bounds(spec);
        let mut prefixes = Vec::new();
        walk_dfs(b, depth, &mut Vec::new(), 0, 0, &mut |p| prefixes.push(p.to_vec()));
        prefixes
            .par_iter()
            .map(|p| {
                let (x, y) = p.iter().fold((0, 0), |(x, y), s| {
                    let (dx, dy) = s.vector();
                    (x + dx, y + dy)
                });
                walk_count(b, n - depth, depth, x, y)
            })
            .collect()
    } else {
        let b = path_bounds(spec);
        let mut prefixes = Vec::new();
        prefix_shapes(b, n, depth, &mut Vec::new(), 0, &mut prefixes);
        prefixes
            .par_iter()
            .map(|(_, h)| shape_count(b, n, depth, *h))
            .collect()
    };
    let mut shapes = 0u64;
    for p in partial {
        shapes = shapes.checked_add(p.ok_or(EnumError::Overflow)?).ok_or(EnumError::Overflow)?;
    }
    if spec.family.is_walk() {
        Ok(shapes)
    } else {
        decorated(shapes, spec.family.multiplicity(), n)
    }
}

fn prefix_shapes(
    b: PathBounds,
    n: usize,
    depth: usize,
    prefix: &mut Vec<MotzkinKind>,
    h: i64,
    out: &mut Vec<(Vec<MotzkinKind>, i64)>,
) {
    if prefix.len() == depth {
        out.push((prefix.clone(), h));
        return;
    }
    for k in MotzkinKind::ALL {
        if b.allows(n, prefix.len(), h, k) {
            prefix.push(k);
            prefix_shapes(b, n, depth, prefix, h + k.delta(), out);
            prefix.pop();
        }
    }
}
