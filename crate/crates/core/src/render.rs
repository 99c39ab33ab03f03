//! Deterministic ASCII drawings of walks and paths.

use crate::path::{Decoration, MotzkinKind, Path};
use crate::walk::QuarterPlaneWalk;

/// Draw a path on a height grid, top row first.
///
/// Each step takes one column group as wide as its decoration (at least one
/// character). An up step from height `h` is a `/` on row `h`, a flat at
/// height `h` is a `-` on row `h`, and a down step from `h` is a `\` on row
/// `h - 1`. Decorated paths get one annotation line holding the colour and
/// mark characters under their steps.
pub fn render_path<D: Decoration>(p: &Path<D>) -> String {
    if p.is_empty() {
        return "(empty)\n".to_string();
    }
    let width = D::WIDTH.max(1);
    let mut h = 0i64;
    let mut cells: Vec<(i64, char)> = Vec::with_capacity(p.len());
    for s in p.steps() {
        let (row, glyph) = match s.kind {
            MotzkinKind::Up => (h, '/'),
            MotzkinKind::Flat => (h, '-'),
            MotzkinKind::Down => (h - 1, '\\'),
        };
        cells.push((row, glyph));
        h += s.kind.delta();
    }
    let top = cells.iter().map(|c| c.0).max().unwrap_or(0);
    let mut out = String::new();
    for row in (0..=top).rev() {
        let mut line = String::new();
        for &(r, glyph) in &cells {
            line.push(if r == row { glyph } else { ' ' });
            line.extend(std::iter::repeat_n(' ', width - 1));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    if D::WIDTH > 0 {
        let mut notes = String::new();
        for s in p.steps() {
            s.deco.write(&mut notes);
        }
        out.push_str(&notes);
        out.push('\n');
    }
    out
}

/// Draw a walk on its bounding grid, `y` increasing upwards. `S` is the
/// origin, `E` the endpoint of a nonempty walk, `o` any other visited point
/// and `.` an unvisited one. A final line repeats the walk and its endpoint.
pub fn render_walk(w: &QuarterPlaneWalk) -> String {
    let points = w.points();
    let max_x = points.iter().map(|p| p.0).max().unwrap_or(0);
    let max_y = points.iter().map(|p| p.1).max().unwrap_or(0);
    let cols = (max_x + 1) as usize;
    let mut grid = vec![vec!['.'; cols]; (max_y + 1) as usize];
    for &(x, y) in &points {
        grid[y as usize][x as usize] = 'o';
    }
    grid[0][0] = 'S';
    if !w.is_empty() {
        let (x, y) = w.endpoint();
        grid[y as usize][x as usize] = 'E';
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    let (x, y) = w.endpoint();
    let name = if w.is_empty() { "(empty)".to_string() } else { w.to_string() };
    out.push_str(&format!("walk: {name} end: ({x},{y})\n"));
    out
}
