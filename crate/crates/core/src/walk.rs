//! Quarter-plane walks over the six-step set and its three-step subset.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the six small steps. Character codes are the canonical text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WalkStep {
    /// `R` = (1, 0)
    Right,
    /// `A` = (1, -1)
    SouthEast,
    /// `D` = (0, -1)
    Down,
    /// `L` = (-1, 0)
    Left,
    /// `B` = (-1, 1)
    NorthWest,
    /// `U` = (0, 1)
    Up,
}

impl WalkStep {
    /// All six steps in enumeration order `R < A < D < L < B < U`.
    pub const ALL: [WalkStep; 6] = [
        WalkStep::Right,
        WalkStep::SouthEast,
        WalkStep::Down,
        WalkStep::Left,
        WalkStep::NorthWest,
        WalkStep::Up,
    ];

    /// The three-step subset `{A, L, U}`, in enumeration order.
    pub const Y_STEPS: [WalkStep; 3] = [WalkStep::SouthEast, WalkStep::Left, WalkStep::Up];

    pub fn vector(self) -> (i64, i64) {
        match self {
            WalkStep::Right => (1, 0),
            WalkStep::SouthEast => (1, -1),
            WalkStep::Down => (0, -1),
            WalkStep::Left => (-1, 0),
            WalkStep::NorthWest => (-1, 1),
            WalkStep::Up => (0, 1),
        }
    }

    pub fn is_y_step(self) -> bool {
        matches!(self, WalkStep::SouthEast | WalkStep::Left | WalkStep::Up)
    }

    pub fn to_char(self) -> char {
        match self {
            WalkStep::Right => 'R',
            WalkStep::SouthEast => 'A',
            WalkStep::Down => 'D',
            WalkStep::Left => 'L',
            WalkStep::NorthWest => 'B',
            WalkStep::Up => 'U',
        }
    }

    pub fn from_char(c: char) -> Option<WalkStep> {
        Some(match c {
            'R' => WalkStep::Right,
            'A' => WalkStep::SouthEast,
            'D' => WalkStep::Down,
            'L' => WalkStep::Left,
            'B' => WalkStep::NorthWest,
            'U' => WalkStep::Up,
            _ => return None,
        })
    }
}

/// Which step set a walk class draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepSet {
    /// `{A, L, U}`
    Y,
    /// all six steps
    S,
}

impl StepSet {
    pub fn steps(self) -> &'static [WalkStep] {
        match self {
            StepSet::Y => &WalkStep::Y_STEPS,
            StepSet::S => &WalkStep::ALL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("BadChar({0})")]
    BadChar(usize),
    #[error("LeavesQuadrant({0})")]
    LeavesQuadrant(usize),
}

/// A walk from the origin whose every prefix stays in `x >= 0, y >= 0`.
///
/// Construction validates eagerly, so every value of this type is a member of
/// the class. Positions in errors are 1-based step indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QuarterPlaneWalk {
    steps: Vec<WalkStep>,
}

impl QuarterPlaneWalk {
    pub fn new(steps: Vec<WalkStep>) -> Result<Self, WalkError> {
        if let Some(pos) = first_exit(&steps) {
            return Err(WalkError::LeavesQuadrant(pos));
        }
        Ok(QuarterPlaneWalk { steps })
    }

    pub fn empty() -> Self {
        QuarterPlaneWalk::default()
    }

    /// Caller guarantees the quadrant invariant (used by the enumerators,
    /// which only ever extend valid prefixes).
    pub(crate) fn from_valid(steps: Vec<WalkStep>) -> Self {
        debug_assert!(first_exit(&steps).is_none());
        QuarterPlaneWalk { steps }
    }

    pub fn steps(&self) -> &[WalkStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint(&self) -> (i64, i64) {
        walk_endpoint(self)
    }

    pub fn is_y_walk(&self) -> bool {
        self.steps.iter().all(|s| s.is_y_step())
    }

    /// Points visited, starting with the origin; `len() + 1` entries.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for s in &self.steps {
            let (dx, dy) = s.vector();
            x += dx;
            y += dy;
            out.push((x, y));
        }
        out
    }

    /// Largest value of `x + y` over all visited points.
    pub fn max_total(&self) -> i64 {
        self.points().iter().map(|(x, y)| x + y).max().unwrap_or(0)
    }

    pub fn into_steps(self) -> Vec<WalkStep> {
        self.steps
    }
}

/// 1-based index of the first step that leaves the quadrant, if any.
pub(crate) fn first_exit(steps: &[WalkStep]) -> Option<usize> {
    let (mut x, mut y) = (0i64, 0i64);
    for (i, s) in steps.iter().enumerate() {
        let (dx, dy) = s.vector();
        x += dx;
        y += dy;
        if x < 0 || y < 0 {
            return Some(i + 1);
        }
    }
    None
}

pub fn parse_walk(text: &str) -> Result<QuarterPlaneWalk, WalkError> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(i, c)| WalkStep::from_char(c).ok_or(WalkError::BadChar(i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    QuarterPlaneWalk::new(steps)
}

pub fn format_walk(w: &QuarterPlaneWalk) -> String {
    w.steps.iter().map(|s| s.to_char()).collect()
}

pub fn walk_endpoint(w: &QuarterPlaneWalk) -> (i64, i64) {
    w.steps.iter().fold((0, 0), |(x, y), s| {
        let (dx, dy) = s.vector();
        (x + dx, y + dy)
    })
}

impl fmt::Display for QuarterPlaneWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_walk(self))
    }
}

impl FromStr for QuarterPlaneWalk {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_walk(s)
    }
}
