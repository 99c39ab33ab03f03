//! The forward map from six-step walks to marked bicoloured Motzkin paths,
//! its left inverse, and an image-membership test.

use thiserror::Error;

use crate::path::{
    Colour, ColourMark, Mark, MarkedBicolouredPath, MarkedStep, MotzkinKind, Path, PathStep,
};
use crate::psi::{forget_marks, psi};
use crate::walk::{QuarterPlaneWalk, WalkStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhiError {
    /// A lowering step found nothing to raise. Unreachable for walks that
    /// stay in the quadrant.
    #[error("NoMatchableStep({0})")]
    NoMatchableStep(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnmapError {
    #[error("MarkedUpStep({0})")]
    MarkedUpStep(usize),
}

const fn step(kind: MotzkinKind, colour: Colour, mark: Mark) -> MarkedStep {
    PathStep::new(kind, ColourMark::new(colour, mark))
}

use Colour::{Black, Red};
use Mark::{Marked, Unmarked};
use MotzkinKind::{Down, Flat, Up};

/// Which of the two search groups a marked step belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PendingGroup {
    /// marked red flat or marked black down; raised by `A` and `D`
    P,
    /// marked black flat or marked red down; raised by `B` and `L`
    Q,
}

impl PendingGroup {
    pub fn of(s: MarkedStep) -> Option<PendingGroup> {
        if s.deco.mark != Marked {
            return None;
        }
        match (s.kind, s.deco.colour) {
            (Flat, Red) | (Down, Black) => Some(PendingGroup::P),
            (Flat, Black) | (Down, Red) => Some(PendingGroup::Q),
            (Up, _) => None,
        }
    }
}

/// Positions of the currently marked steps of each search group. The
/// rightmost step of a group is the top of its stack.
#[derive(Debug, Default, Clone)]
pub struct PendingStacks {
    p: Vec<usize>,
    q: Vec<usize>,
}

impl PendingStacks {
    fn stack(&mut self, g: PendingGroup) -> &mut Vec<usize> {
        match g {
            PendingGroup::P => &mut self.p,
            PendingGroup::Q => &mut self.q,
        }
    }

    pub fn push(&mut self, g: PendingGroup, pos: usize) {
        let s = self.stack(g);
        debug_assert!(s.last().is_none_or(|&top| top < pos));
        s.push(pos);
    }

    pub fn pop(&mut self, g: PendingGroup) -> Option<usize> {
        self.stack(g).pop()
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }
}

/// What a lowering walk step appends after raising an earlier step.
fn lowering_rule(s: WalkStep) -> Option<(PendingGroup, MarkedStep)> {
    match s {
        WalkStep::SouthEast => Some((PendingGroup::P, step(Down, Red, Marked))),
        WalkStep::Down => Some((PendingGroup::P, step(Down, Black, Unmarked))),
        WalkStep::NorthWest => Some((PendingGroup::Q, step(Down, Black, Marked))),
        WalkStep::Left => Some((PendingGroup::Q, step(Down, Red, Unmarked))),
        WalkStep::Up | WalkStep::Right => None,
    }
}

/// Lifts a pending step one unit and unmarks it; colour is kept.
fn raise(s: MarkedStep) -> MarkedStep {
    match s.kind {
        Flat => step(Up, s.deco.colour, Unmarked),
        Down => step(Flat, s.deco.colour, Unmarked),
        Up => unreachable!("marked up steps are never pending"),
    }
}

/// Apply the forward map to a step sequence, without checking the quadrant
/// condition first. Fails where a lowering step finds no pending partner.
pub fn phi_steps(steps: &[WalkStep]) -> Result<Vec<MarkedStep>, PhiError> {
    let mut out: Vec<MarkedStep> = Vec::with_capacity(steps.len());
    let mut pending = PendingStacks::default();
    for (i, &w) in steps.iter().enumerate() {
        let appended = match w {
            WalkStep::Up => step(Flat, Red, Marked),
            WalkStep::Right => step(Flat, Black, Marked),
            lowering => {
                let (group, appended) = lowering_rule(lowering).expect("lowering step");
                let found = pending.pop(group).ok_or(PhiError::NoMatchableStep(i + 1))?;
                out[found] = raise(out[found]);
                appended
            }
        };
        if let Some(g) = PendingGroup::of(appended) {
            pending.push(g, i);
        }
        out.push(appended);
    }
    Ok(out)
}

pub fn phi(w: &QuarterPlaneWalk) -> Result<MarkedBicolouredPath, PhiError> {
    let steps = phi_steps(w.steps())?;
    // Motzkin property holds for every walk in the quadrant; a failure here
    // would mean the raising table is wrong.
    Ok(Path::new(steps).expect("image of a quarter-plane walk is a Motzkin path"))
}

/// The left inverse: reads the path token by token. The flag reports
/// whether the resulting walk stays in the quadrant.
pub fn g_unmap(m: &MarkedBicolouredPath) -> Result<(Vec<WalkStep>, bool), UnmapError> {
    let steps = m
        .steps()
        .iter()
        .enumerate()
        .map(|(i, s)| unmap_step(*s).ok_or(UnmapError::MarkedUpStep(i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let valid = crate::walk::first_exit(&steps).is_none();
    Ok((steps, valid))
}

fn unmap_step(s: MarkedStep) -> Option<WalkStep> {
    let ColourMark { colour, mark } = s.deco;
    Some(match (s.kind, colour, mark) {
        (Up, _, Marked) => return None,
        (Flat, Red, Marked) | (Up, Red, Unmarked) => WalkStep::Up,
        (Flat, Black, Marked) | (Up, Black, Unmarked) => WalkStep::Right,
        (Down, Red, Marked) | (Flat, Red, Unmarked) => WalkStep::SouthEast,
        (Down, Black, Marked) | (Flat, Black, Unmarked) => WalkStep::NorthWest,
        (Down, Red, Unmarked) => WalkStep::Left,
        (Down, Black, Unmarked) => WalkStep::Down,
    })
}

/// Inverse of [`phi`] on its image; `None` when `m` is not in the image.
pub fn phi_inverse(m: &MarkedBicolouredPath) -> Option<QuarterPlaneWalk> {
    if !phi_image_contains(m) {
        return None;
    }
    let (steps, valid) = g_unmap(m).ok()?;
    valid.then(|| QuarterPlaneWalk::from_valid(steps))
}

/// Membership in the image of [`phi`], tested as `psi(forget_marks(m)) == m`.
pub fn phi_image_contains(m: &MarkedBicolouredPath) -> bool {
    psi(&forget_marks(m)).is_ok_and(|back| back == *m)
}
