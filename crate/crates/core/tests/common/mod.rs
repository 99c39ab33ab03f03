//! Independent brute-force oracles. Nothing here calls the library's maps or
//! enumerators; only the value types are shared.
#![allow(dead_code)]

use qmotzkin::{Colour, ColourMark, Mark, MarkedBicolouredPath, MotzkinKind, PathStep, WalkStep};

pub const ALL_STEPS: [WalkStep; 6] = WalkStep::ALL;

/// All `6^n` step sequences, filtered by the quadrant condition, in the
/// order `R < A < D < L < B < U` (odometer over the step list).
pub fn brute_walks(n: usize, steps: &[WalkStep]) -> Vec<Vec<WalkStep>> {
    let k = steps.len();
    let total = k.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut digits = vec![0; n];
        let mut c = code;
        for d in digits.iter_mut().rev() {
            *d = c % k;
            c /= k;
        }
        let w: Vec<WalkStep> = digits.iter().map(|&d| steps[d]).collect();
        if stays_in_quadrant(&w, None) {
            out.push(w);
        }
    }
    out
}

pub fn stays_in_quadrant(w: &[WalkStep], triangle: Option<i64>) -> bool {
    let (mut x, mut y) = (0i64, 0i64);
    for s in w {
        let (dx, dy) = match s {
            WalkStep::Right => (1, 0),
            WalkStep::SouthEast => (1, -1),
            WalkStep::Down => (0, -1),
            WalkStep::Left => (-1, 0),
            WalkStep::NorthWest => (-1, 1),
            WalkStep::Up => (0, 1),
        };
        x += dx;
        y += dy;
        if x < 0 || y < 0 || triangle.is_some_and(|c| x + y > c) {
            return false;
        }
    }
    true
}

/// Count of `3^n` kind sequences that are Motzkin and stay in the strip.
pub fn brute_motzkin_shapes(n: usize, strip: Option<i64>, no_top_flat: bool) -> u64 {
    let mut count = 0;
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let mut h = 0i64;
        let mut ok = true;
        for _ in 0..n {
            let d = c % 3;
            c /= 3;
            if d == 1 && no_top_flat && strip == Some(h) {
                ok = false;
                break;
            }
            h += [1, 0, -1][d];
            if h < 0 || strip.is_some_and(|s| h > s) {
                ok = false;
                break;
            }
        }
        if ok && h == 0 {
            count += 1;
        }
    }
    count
}

/// Motzkin numbers from `M(k+1) = M(k) + sum_{i<k} M(i) M(k-1-i)`.
pub fn motzkin_recurrence(n_max: usize) -> Vec<u64> {
    let mut m = vec![1u64];
    for k in 0..n_max {
        let conv: u64 = (0..k).map(|i| m[i] * m[k - 1 - i]).sum();
        m.push(m[k] + conv);
    }
    m
}

fn ms(kind: MotzkinKind, colour: Colour, mark: Mark) -> PathStep<ColourMark> {
    PathStep::new(kind, ColourMark::new(colour, mark))
}

/// The forward map with the "rightmost" searches done by rescanning the
/// path built so far from the right. Returns `None` where a search fails.
pub fn naive_phi(w: &[WalkStep]) -> Option<Vec<PathStep<ColourMark>>> {
    use Colour::*;
    use Mark::*;
    use MotzkinKind::*;
    let mut m: Vec<PathStep<ColourMark>> = Vec::new();
    let find = |m: &Vec<PathStep<ColourMark>>, a: PathStep<ColourMark>, b: PathStep<ColourMark>| {
        (0..m.len()).rev().find(|&i| m[i] == a || m[i] == b)
    };
    for &s in w {
        match s {
            WalkStep::Up => m.push(ms(Flat, Red, Marked)),
            WalkStep::Right => m.push(ms(Flat, Black, Marked)),
            WalkStep::SouthEast | WalkStep::Down => {
                let i = find(&m, ms(Flat, Red, Marked), ms(Down, Black, Marked))?;
                m[i] = if m[i].kind == Flat { ms(Up, Red, Unmarked) } else { ms(Flat, Black, Unmarked) };
                m.push(if s == WalkStep::SouthEast { ms(Down, Red, Marked) } else { ms(Down, Black, Unmarked) });
            }
            WalkStep::NorthWest | WalkStep::Left => {
                let i = find(&m, ms(Flat, Black, Marked), ms(Down, Red, Marked))?;
                m[i] = if m[i].kind == Flat { ms(Up, Black, Unmarked) } else { ms(Flat, Red, Unmarked) };
                m.push(if s == WalkStep::NorthWest { ms(Down, Black, Marked) } else { ms(Down, Red, Unmarked) });
            }
        }
    }
    Some(m)
}

/// The marking map with "rightmost not yet assigned" found by rescanning.
pub fn naive_psi(s: &[PathStep<Colour>]) -> Option<Vec<PathStep<ColourMark>>> {
    use Colour::*;
    use MotzkinKind::*;
    let mut state: Vec<Option<Mark>> = vec![None; s.len()];
    // (kind, colour) pairs of the two search groups
    let red_up_or_black_flat = [(Up, Red), (Flat, Black)];
    let black_up_or_red_flat = [(Up, Black), (Flat, Red)];
    let find = |state: &Vec<Option<Mark>>, before: usize, group: &[(MotzkinKind, Colour)]| {
        (0..before)
            .rev()
            .find(|&j| state[j].is_none() && group.contains(&(s[j].kind, s[j].deco)))
    };
    for i in 0..s.len() {
        match (s[i].kind, s[i].deco) {
            (Up, _) => {}
            (Flat, colour) => {
                let group = if colour == Red { &red_up_or_black_flat } else { &black_up_or_red_flat };
                match find(&state, i, group) {
                    Some(j) => state[j] = Some(Mark::Unmarked),
                    None => state[i] = Some(Mark::Marked),
                }
            }
            (Down, colour) => {
                let (first, second) = if colour == Red {
                    (&black_up_or_red_flat, &red_up_or_black_flat)
                } else {
                    (&red_up_or_black_flat, &black_up_or_red_flat)
                };
                if let Some(j) = find(&state, i, first) {
                    state[j] = Some(Mark::Unmarked);
                    state[i] = Some(Mark::Unmarked);
                } else {
                    let j = find(&state, i, second)?;
                    state[j] = Some(Mark::Unmarked);
                    state[i] = Some(Mark::Marked);
                }
            }
        }
    }
    s.iter()
        .zip(state)
        .map(|(st, m)| Some(PathStep::new(st.kind, ColourMark::new(st.deco, m?))))
        .collect()
}

/// All bicoloured Motzkin paths of length `n` by filtering `6^n` tokens.
pub fn brute_bicoloured(n: usize) -> Vec<Vec<PathStep<Colour>>> {
    let tokens: Vec<PathStep<Colour>> = MotzkinKind::ALL
        .iter()
        .flat_map(|&k| Colour::ALL.iter().map(move |&c| PathStep::new(k, c)))
        .collect();
    let mut out = Vec::new();
    for code in 0..6usize.pow(n as u32) {
        let mut digits = vec![0; n];
        let mut c = code;
        for d in digits.iter_mut().rev() {
            *d = c % 6;
            c /= 6;
        }
        let p: Vec<_> = digits.iter().map(|&d| tokens[d]).collect();
        let mut h = 0i64;
        if p.iter().all(|t| {
            h += t.kind.delta();
            h >= 0
        }) && h == 0
        {
            out.push(p);
        }
    }
    out
}

pub fn as_marked(m: &MarkedBicolouredPath) -> Vec<PathStep<ColourMark>> {
    m.steps().to_vec()
}

/// Command lines whose output is pinned under `tests/golden/`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("enum_y_walks_4.txt", &["enum", "--family", "y-walks", "--length", "4"]),
    ("enum_s_walks_3.txt", &["enum", "--family", "s-walks", "--length", "3"]),
    ("enum_motzkin_5.txt", &["enum", "--family", "motzkin", "--length", "5"]),
    ("enum_bicoloured_3.txt", &["enum", "--family", "bicoloured", "--length", "3"]),
    (
        "enum_s_walks_4_up_nir.txt",
        &["enum", "--family", "s-walks", "--length", "4", "--begins-up", "--no-interior-return", "--with-image"],
    ),
    ("verify_bijection_6.txt", &["verify", "--suite", "bijection", "--length", "6"]),
    ("verify_mp_6.json", &["verify", "--suite", "mp", "--length", "6", "--height", "1", "--format", "json"]),
    ("verify_height_0.txt", &["verify", "--suite", "height", "--length", "2", "--height", "0"]),
    ("render_path.txt", &["render", "ub.fb.fr.dr.", "--as", "marked"]),
    ("render_walk.txt", &["render", "URUALDB", "--as", "s-walks"]),
];
