//! Standard Young tableaux with at most three rows, their Yamanouchi words
//! as three-step walks, and the induced correspondence with Motzkin paths.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::path::{BicolouredPath, Colour, MotzkinPath};
use crate::phi::{g_unmap, phi};
use crate::psi::{forget_marks, psi};
use crate::walk::{QuarterPlaneWalk, WalkStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("NotYWalk({0})")]
    NotYWalk(usize),
    #[error("too many rows: {0}")]
    TooManyRows(usize),
    #[error("empty row {0}")]
    EmptyRow(usize),
    #[error("bad entry {0:?}")]
    BadEntry(String),
    #[error("entries are not exactly 1..{0}")]
    NotAPermutation(usize),
    #[error("row {0} is not increasing")]
    RowNotIncreasing(usize),
    #[error("column {0} is not increasing")]
    ColumnNotIncreasing(usize),
    #[error("row {0} is longer than the row above it")]
    NotAShape(usize),
    #[error("{0}")]
    Map(String),
}

/// A standard Young tableau with at most three rows, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tableau3 {
    rows: Vec<Vec<u32>>,
}

impl Tableau3 {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        if rows.len() > 3 {
            return Err(TableauError::TooManyRows(rows.len()));
        }
        if let Some(i) = rows.iter().position(|r| r.is_empty()) {
            return Err(TableauError::EmptyRow(i + 1));
        }
        for (i, pair) in rows.windows(2).enumerate() {
            if pair[1].len() > pair[0].len() {
                return Err(TableauError::NotAShape(i + 2));
            }
        }
        for (i, r) in rows.iter().enumerate() {
            if r.windows(2).any(|p| p[0] >= p[1]) {
                return Err(TableauError::RowNotIncreasing(i + 1));
            }
        }
        for pair in rows.windows(2) {
            if let Some(c) = pair[1].iter().zip(&pair[0]).position(|(below, above)| below <= above) {
                return Err(TableauError::ColumnNotIncreasing(c + 1));
            }
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for &e in rows.iter().flatten() {
            let idx = (e as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(TableauError::NotAPermutation(n));
            }
            seen[idx] = true;
        }
        Ok(Tableau3 { rows })
    }

    pub fn empty() -> Self {
        Tableau3::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Row (0-based) holding each entry `1..=n`.
    fn row_word(&self) -> Vec<usize> {
        let mut word = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                word[e as usize - 1] = r;
            }
        }
        word
    }
}

impl fmt::Display for Tableau3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau3 {
    type Err = TableauError;

    /// Rows separated by `/`, entries by `,`; the empty string is the empty
    /// tableau.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Ok(Tableau3::empty());
        }
        let rows = s
            .split('/')
            .enumerate()
            .map(|(i, row)| {
                if row.is_empty() {
                    return Err(TableauError::EmptyRow(i + 1));
                }
                row.split(',')
                    .map(|e| {
                        // reject signs and whitespace that u32 parsing would let through
                        if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
                            return Err(TableauError::BadEntry(e.to_string()));
                        }
                        e.parse::<u32>().map_err(|_| TableauError::BadEntry(e.to_string()))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Tableau3::new(rows)
    }
}

const ROW_STEPS: [WalkStep; 3] = [WalkStep::Up, WalkStep::SouthEast, WalkStep::Left];

/// Entry `i` goes to row 1, 2 or 3 as step `i` is `U`, `A` or `L`.
pub fn walk_to_tableau(w: &QuarterPlaneWalk) -> Result<Tableau3, TableauError> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (i, s) in w.steps().iter().enumerate() {
        let r = match s {
            WalkStep::Up => 0,
            WalkStep::SouthEast => 1,
            WalkStep::Left => 2,
            _ => return Err(TableauError::NotYWalk(i + 1)),
        };
        if rows.len() <= r {
            rows.resize(r + 1, Vec::new());
        }
        rows[r].push(i as u32 + 1);
    }
    // rows come out increasing; the quadrant condition gives the shape and
    // column conditions, which `new` re-checks
    Tableau3::new(rows)
}

/// The Yamanouchi word of the tableau, read as a walk.
pub fn tableau_to_walk(t: &Tableau3) -> QuarterPlaneWalk {
    let steps = t
        .row_word()
        .into_iter()
        .map(|r| ROW_STEPS[r])
        .collect();
    QuarterPlaneWalk::new(steps).expect("Yamanouchi word of a standard tableau stays in the quadrant")
}

/// Colour the path red, mark it, read the marked path back as a walk and
/// take its tableau.
pub fn motzkin_to_tableau(m: &MotzkinPath) -> Result<Tableau3, TableauError> {
    let red = BicolouredPath::from_plain(m, Colour::Red);
    let marked = psi(&red).map_err(|e| TableauError::Map(e.to_string()))?;
    let (steps, valid) = g_unmap(&marked).map_err(|e| TableauError::Map(e.to_string()))?;
    if !valid {
        return Err(TableauError::Map("unmapped walk leaves the quadrant".into()));
    }
    let walk = QuarterPlaneWalk::new(steps).map_err(|e| TableauError::Map(e.to_string()))?;
    walk_to_tableau(&walk)
}

/// Inverse of [`motzkin_to_tableau`].
pub fn tableau_to_motzkin(t: &Tableau3) -> MotzkinPath {
    let walk = tableau_to_walk(t);
    let marked = phi(&walk).expect("Yamanouchi walks stay in the quadrant");
    forget_marks(&marked).to_plain()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;
    use crate::walk::parse_walk;

    fn tab(s: &str) -> Tableau3 {
        s.parse().unwrap()
    }

    #[test]
    fn walk_to_tableau_examples() {
        assert_eq!(walk_to_tableau(&parse_walk("").unwrap()).unwrap(), Tableau3::empty());
        assert_eq!(walk_to_tableau(&parse_walk("UU").unwrap()).unwrap().rows(), &[vec![1, 2]]);
        assert_eq!(
            walk_to_tableau(&parse_walk("UAL").unwrap()).unwrap().rows(),
            &[vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            walk_to_tableau(&parse_walk("URA").unwrap()),
            Err(TableauError::NotYWalk(2))
        );
    }

    #[test]
    fn tableau_to_walk_examples() {
        assert_eq!(tableau_to_walk(&Tableau3::empty()).to_string(), "");
        assert_eq!(tableau_to_walk(&tab("1,2")).to_string(), "UU");
        assert_eq!(tableau_to_walk(&tab("1,3/2")).to_string(), "UAU");
    }

    #[test]
    fn motzkin_examples() {
        let p = |s: &str| parse_path::<crate::path::Plain>(s).unwrap();
        assert_eq!(motzkin_to_tableau(&p("")).unwrap(), Tableau3::empty());
        assert_eq!(motzkin_to_tableau(&p("f")).unwrap(), tab("1"));
        assert_eq!(motzkin_to_tableau(&p("ud")).unwrap(), tab("1/2"));
        assert_eq!(tableau_to_motzkin(&tab("1/2")), p("ud"));
    }

    #[test]
    fn text_form() {
        assert_eq!(tab("1,3/2").to_string(), "1,3/2");
        assert_eq!(tab("").to_string(), "");
        assert_eq!(tab("1,2,5/3,6/4,7").to_string(), "1,2,5/3,6/4,7");
    }

    #[test]
    fn invalid_tableaux() {
        use TableauError::*;
        let err = |s: &str| s.parse::<Tableau3>().unwrap_err();
        assert_eq!(err("1/2/3/4"), TooManyRows(4));
        assert_eq!(err("1//2"), EmptyRow(2));
        assert_eq!(err("2,1"), RowNotIncreasing(1));
        assert_eq!(err("2/1"), ColumnNotIncreasing(1));
        assert_eq!(err("1/2,3"), NotAShape(2));
        assert_eq!(err("1,3"), NotAPermutation(2));
        assert_eq!(err("0"), NotAPermutation(1));
        assert_eq!(err("1,x"), BadEntry("x".into()));
        assert_eq!(err("1,+2"), BadEntry("+2".into()));
        assert_eq!(err("1,"), BadEntry("".into()));
    }
}
