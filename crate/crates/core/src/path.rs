//! Motzkin paths and their bicoloured and marked variants.
//!
//! A path is a sequence of `(kind, decoration)` tokens. Text form is a
//! separator-free concatenation of fixed-width tokens: the kind character
//! (`u`, `f`, `d`) followed by the decoration characters (`r`/`b` for the
//! colour, then `*`/`.` for the mark).

use std::fmt;
use std::fmt::Debug;
use std::hash::Hash;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinKind {
    /// `u`, height +1
    Up,
    /// `f`, height unchanged
    Flat,
    /// `d`, height -1
    Down,
}

impl MotzkinKind {
    pub const ALL: [MotzkinKind; 3] = [MotzkinKind::Up, MotzkinKind::Flat, MotzkinKind::Down];

    pub fn delta(self) -> i64 {
        match self {
            MotzkinKind::Up => 1,
            MotzkinKind::Flat => 0,
            MotzkinKind::Down => -1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            MotzkinKind::Up => 'u',
            MotzkinKind::Flat => 'f',
            MotzkinKind::Down => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'u' => MotzkinKind::Up,
            'f' => MotzkinKind::Flat,
            'd' => MotzkinKind::Down,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Red,
    Black,
}

impl Colour {
    pub const ALL: [Colour; 2] = [Colour::Red, Colour::Black];

    pub fn to_char(self) -> char {
        match self {
            Colour::Red => 'r',
            Colour::Black => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'r' => Some(Colour::Red),
            'b' => Some(Colour::Black),
            _ => None,
        }
    }

    pub fn swapped(self) -> Self {
        match self {
            Colour::Red => Colour::Black,
            Colour::Black => Colour::Red,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Marked,
    Unmarked,
}

impl Mark {
    pub const ALL: [Mark; 2] = [Mark::Marked, Mark::Unmarked];

    pub fn to_char(self) -> char {
        match self {
            Mark::Marked => '*',
            Mark::Unmarked => '.',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '*' => Some(Mark::Marked),
            '.' => Some(Mark::Unmarked),
            _ => None,
        }
    }
}

/// No decoration: plain Motzkin paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Plain;

/// Colour plus mark, the decoration of the marked bicoloured class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourMark {
    pub colour: Colour,
    pub mark: Mark,
}

impl ColourMark {
    pub const fn new(colour: Colour, mark: Mark) -> Self {
        ColourMark { colour, mark }
    }
}

/// The per-step decoration of a path variant.
pub trait Decoration: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    /// Number of text characters following the kind character.
    const WIDTH: usize;
    /// Every value, in enumeration order.
    const ALL: &'static [Self];
    const VARIANT: PathVariant;

    fn parse(chars: &[char]) -> Option<Self>;
    fn write(&self, out: &mut String);
}

impl Decoration for Plain {
    const WIDTH: usize = 0;
    const ALL: &'static [Self] = &[Plain];
    const VARIANT: PathVariant = PathVariant::Plain;

    fn parse(chars: &[char]) -> Option<Self> {
        chars.is_empty().then_some(Plain)
    }

    fn write(&self, _out: &mut String) {}
}

impl Decoration for Colour {
    const WIDTH: usize = 1;
    const ALL: &'static [Self] = &Colour::ALL;
    const VARIANT: PathVariant = PathVariant::Bicoloured;

    fn parse(chars: &[char]) -> Option<Self> {
        match chars {
            [c] => Colour::from_char(*c),
            _ => None,
        }
    }

    fn write(&self, out: &mut String) {
        out.push(self.to_char());
    }
}

impl Decoration for ColourMark {
    const WIDTH: usize = 2;
    const ALL: &'static [Self] = &[
        ColourMark::new(Colour::Red, Mark::Marked),
        ColourMark::new(Colour::Red, Mark::Unmarked),
        ColourMark::new(Colour::Black, Mark::Marked),
        ColourMark::new(Colour::Black, Mark::Unmarked),
    ];
    const VARIANT: PathVariant = PathVariant::Marked;

    fn parse(chars: &[char]) -> Option<Self> {
        match chars {
            [c, m] => Some(ColourMark::new(Colour::from_char(*c)?, Mark::from_char(*m)?)),
            _ => None,
        }
    }

    fn write(&self, out: &mut String) {
        out.push(self.colour.to_char());
        out.push(self.mark.to_char());
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathVariant {
    Plain,
    Bicoloured,
    Marked,
}

impl PathVariant {
    pub fn token_width(self) -> usize {
        match self {
            PathVariant::Plain => 1,
            PathVariant::Bicoloured => 2,
            PathVariant::Marked => 3,
        }
    }
}

/// One step of a decorated path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathStep<D> {
    pub kind: MotzkinKind,
    pub deco: D,
}

impl<D> PathStep<D> {
    pub const fn new(kind: MotzkinKind, deco: D) -> Self {
        PathStep { kind, deco }
    }
}

pub type MarkedStep = PathStep<ColourMark>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("BadToken({0})")]
    BadToken(usize),
    #[error("NotMotzkin({0})")]
    NotMotzkin(usize),
}

/// A Motzkin path with per-step decoration `D`.
///
/// Every value satisfies the Motzkin property: prefix heights are
/// nonnegative and the final height is zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path<D> {
    steps: Vec<PathStep<D>>,
}

pub type MotzkinPath = Path<Plain>;
pub type BicolouredPath = Path<Colour>;
pub type MarkedBicolouredPath = Path<ColourMark>;

impl<D> Default for Path<D> {
    fn default() -> Self {
        Path { steps: Vec::new() }
    }
}

impl<D: Decoration> Path<D> {
    /// Validates the Motzkin property. `NotMotzkin` carries the 1-based
    /// index of the first step going below zero, or the path length when
    /// only the final height is wrong.
    pub fn new(steps: Vec<PathStep<D>>) -> Result<Self, PathError> {
        motzkin_violation(steps.iter().map(|s| s.kind))
            .map_or(Ok(Path { steps }), |p| Err(PathError::NotMotzkin(p)))
    }

    pub fn empty() -> Self {
        Path { steps: Vec::new() }
    }

    pub(crate) fn from_valid(steps: Vec<PathStep<D>>) -> Self {
        debug_assert!(motzkin_violation(steps.iter().map(|s| s.kind)).is_none());
        Path { steps }
    }

    pub fn steps(&self) -> &[PathStep<D>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<i64> {
        path_heights(self)
    }

    pub fn max_height(&self) -> i64 {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// True when the height is zero strictly before the last step.
    pub fn has_interior_return(&self) -> bool {
        let h = self.heights();
        h.len() > 1 && h[..h.len() - 1].contains(&0)
    }

    pub fn kinds(&self) -> impl Iterator<Item = MotzkinKind> + '_ {
        self.steps.iter().map(|s| s.kind)
    }

    /// Concatenation of two Motzkin paths is a Motzkin path.
    pub fn concat(&self, other: &Self) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Path { steps }
    }

    pub fn variant(&self) -> PathVariant {
        D::VARIANT
    }

    pub fn into_steps(self) -> Vec<PathStep<D>> {
        self.steps
    }
}

impl BicolouredPath {
    pub fn is_all_red(&self) -> bool {
        self.steps.iter().all(|s| s.deco == Colour::Red)
    }

    pub fn from_plain(p: &MotzkinPath, colour: Colour) -> Self {
        Path::from_valid(p.steps.iter().map(|s| PathStep::new(s.kind, colour)).collect())
    }

    pub fn to_plain(&self) -> MotzkinPath {
        Path::from_valid(p_kinds(&self.steps))
    }
}

impl MarkedBicolouredPath {
    pub fn is_all_red(&self) -> bool {
        self.steps.iter().all(|s| s.deco.colour == Colour::Red)
    }

    /// Number of steps with the given kind, colour and mark.
    pub fn count(&self, kind: MotzkinKind, colour: Colour, mark: Mark) -> usize {
        let target = PathStep::new(kind, ColourMark::new(colour, mark));
        self.steps.iter().filter(|s| **s == target).count()
    }
}

fn p_kinds<D>(steps: &[PathStep<D>]) -> Vec<PathStep<Plain>> {
    steps.iter().map(|s| PathStep::new(s.kind, Plain)).collect()
}

pub(crate) fn motzkin_violation(kinds: impl Iterator<Item = MotzkinKind>) -> Option<usize> {
    let mut h = 0i64;
    let mut len = 0;
    for (i, k) in kinds.enumerate() {
        h += k.delta();
        len = i + 1;
        if h < 0 {
            return Some(len);
        }
    }
    (h != 0).then_some(len)
}

pub fn parse_path<D: Decoration>(text: &str) -> Result<Path<D>, PathError> {
    let chars: Vec<char> = text.chars().collect();
    let width = 1 + D::WIDTH;
    let mut steps = Vec::with_capacity(chars.len() / width);
    for (i, tok) in chars.chunks(width).enumerate() {
        let kind = MotzkinKind::from_char(tok[0]).ok_or(PathError::BadToken(i + 1))?;
        let deco = D::parse(&tok[1..]).ok_or(PathError::BadToken(i + 1))?;
        steps.push(PathStep::new(kind, deco));
    }
    Path::new(steps)
}

pub fn format_path<D: Decoration>(p: &Path<D>) -> String {
    let mut out = String::with_capacity(p.len() * (1 + D::WIDTH));
    for s in &p.steps {
        out.push(s.kind.to_char());
        s.deco.write(&mut out);
    }
    out
}

pub fn path_heights<D>(p: &Path<D>) -> Vec<i64> {
    p.steps
        .iter()
        .scan(0i64, |h, s| {
            *h += s.kind.delta();
            Some(*h)
        })
        .collect()
}

impl<D: Decoration> fmt::Display for Path<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_path(self))
    }
}

impl<D: Decoration> FromStr for Path<D> {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}
