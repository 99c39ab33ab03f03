//! The marking map from bicoloured to marked bicoloured Motzkin paths, and
//! the map forgetting the marks.

use thiserror::Error;

use crate::path::{
    BicolouredPath, Colour, ColourMark, Mark, MarkedBicolouredPath, MotzkinKind, Path, PathStep,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsiError {
    /// A down step had no unassigned step before it in either group.
    #[error("NoMatchableStep({0})")]
    NoMatchableStep(usize),
    /// Steps left without a mark at the end (1-based positions).
    #[error("UnassignedResidue({0:?})")]
    UnassignedResidue(Vec<usize>),
}

/// Search groups for the "rightmost not yet assigned" lookups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnassignedGroup {
    /// red up or black flat
    P,
    /// black up or red flat
    Q,
}

impl UnassignedGroup {
    pub fn of(kind: MotzkinKind, colour: Colour) -> Option<Self> {
        match (kind, colour) {
            (MotzkinKind::Up, Colour::Red) | (MotzkinKind::Flat, Colour::Black) => {
                Some(UnassignedGroup::P)
            }
            (MotzkinKind::Up, Colour::Black) | (MotzkinKind::Flat, Colour::Red) => {
                Some(UnassignedGroup::Q)
            }
            (MotzkinKind::Down, _) => None,
        }
    }

    fn other(self) -> Self {
        match self {
            UnassignedGroup::P => UnassignedGroup::Q,
            UnassignedGroup::Q => UnassignedGroup::P,
        }
    }
}

/// Positions of unassigned steps per group. Assigned steps are always the
/// top of their stack at the moment of assignment, so the top is the
/// rightmost unassigned step of the group.
#[derive(Debug, Default, Clone)]
pub struct UnassignedStacks {
    p: Vec<usize>,
    q: Vec<usize>,
}

impl UnassignedStacks {
    fn stack(&mut self, g: UnassignedGroup) -> &mut Vec<usize> {
        match g {
            UnassignedGroup::P => &mut self.p,
            UnassignedGroup::Q => &mut self.q,
        }
    }

    pub fn push(&mut self, g: UnassignedGroup, pos: usize) {
        let s = self.stack(g);
        debug_assert!(s.last().is_none_or(|&top| top < pos));
        s.push(pos);
    }

    pub fn pop(&mut self, g: UnassignedGroup) -> Option<usize> {
        self.stack(g).pop()
    }
}

pub fn psi(s: &BicolouredPath) -> Result<MarkedBicolouredPath, PsiError> {
    let steps = s.steps();
    let mut assigned: Vec<Option<Mark>> = vec![None; steps.len()];
    let mut open = UnassignedStacks::default();

    for (i, st) in steps.iter().enumerate() {
        let colour = st.deco;
        match st.kind {
            MotzkinKind::Up => {
                let g = UnassignedGroup::of(MotzkinKind::Up, colour).expect("up steps have a group");
                open.push(g, i);
            }
            MotzkinKind::Flat => {
                let own = UnassignedGroup::of(MotzkinKind::Flat, colour).expect("flats have a group");
                // a red flat looks in P and, if it matched, waits in Q; black the reverse
                match open.pop(own.other()) {
                    Some(j) => {
                        assigned[j] = Some(Mark::Unmarked);
                        open.push(own, i);
                    }
                    None => assigned[i] = Some(Mark::Marked),
                }
            }
            MotzkinKind::Down => {
                let (first, fallback) = match colour {
                    Colour::Red => (UnassignedGroup::Q, UnassignedGroup::P),
                    Colour::Black => (UnassignedGroup::P, UnassignedGroup::Q),
                };
                if let Some(j) = open.pop(first) {
                    assigned[j] = Some(Mark::Unmarked);
                    assigned[i] = Some(Mark::Unmarked);
                } else if let Some(j) = open.pop(fallback) {
                    assigned[j] = Some(Mark::Unmarked);
                    assigned[i] = Some(Mark::Marked);
                } else {
                    return Err(PsiError::NoMatchableStep(i + 1));
                }
            }
        }
    }

    let residue: Vec<usize> = assigned
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_none())
        .map(|(i, _)| i + 1)
        .collect();
    if !residue.is_empty() {
        return Err(PsiError::UnassignedResidue(residue));
    }

    let out = steps
        .iter()
        .zip(assigned)
        .map(|(st, a)| PathStep::new(st.kind, ColourMark::new(st.deco, a.expect("resolved"))))
        .collect();
    Ok(Path::from_valid(out))
}

pub fn forget_marks(m: &MarkedBicolouredPath) -> BicolouredPath {
    Path::from_valid(
        m.steps()
            .iter()
            .map(|s| PathStep::new(s.kind, s.deco.colour))
            .collect(),
    )
}
