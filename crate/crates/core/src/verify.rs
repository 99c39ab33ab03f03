//! Exhaustive checks of the bijection's properties at a fixed length.
//!
//! Every check walks its whole domain in enumeration order and records the
//! first failing object, so a report is a deterministic function of its
//! inputs apart from `elapsed_ms`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumerate::{count_class, for_each_walk, enumerate_walks, ClassSpec, Family};
use crate::path::{
    format_path, BicolouredPath, Colour, Mark, MarkedBicolouredPath, MotzkinKind,
};
use crate::phi::{g_unmap, phi, phi_image_contains};
use crate::psi::{forget_marks, psi};
use crate::tableau::{motzkin_to_tableau, tableau_to_motzkin, tableau_to_walk, walk_to_tableau};
use crate::walk::{first_exit, QuarterPlaneWalk, StepSet, WalkStep};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub length: u64,
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Copy with `elapsed_ms` zeroed, for byte-stable output.
    pub fn without_timing(&self) -> Self {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }

    /// Line-oriented `key: value` block. `elapsed_ms` is included only when
    /// `timing` is set.
    pub fn to_text(&self, timing: bool) -> String {
        let mut s = format!(
            "check_name: {}\nlength: {}\ntotal: {}\npassed: {}\nfailed: {}\nfirst_failure: {}\n",
            self.check_name,
            self.length,
            self.total,
            self.passed,
            self.failed,
            self.first_failure.as_deref().unwrap_or("none"),
        );
        if timing {
            s.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

/// Accumulates per-object outcomes for one report.
struct Tally {
    name: &'static str,
    length: u64,
    total: u64,
    failed: u64,
    first_failure: Option<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str, length: usize) -> Self {
        Tally {
            name,
            length: length as u64,
            total: 0,
            failed: 0,
            first_failure: None,
            start: Instant::now(),
        }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.total += 1;
        if let Err(why) = outcome {
            self.failed += 1;
            self.first_failure.get_or_insert(why);
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check_name: self.name.to_string(),
            length: self.length,
            total: self.total,
            passed: self.total - self.failed,
            failed: self.failed,
            first_failure: self.first_failure,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn walk_str(steps: &[WalkStep]) -> String {
    steps.iter().map(|s| s.to_char()).collect()
}

fn count(family: Family, n: usize) -> u64 {
    count_class(&ClassSpec::new(family, n)).expect("desk-scale counts fit in 64 bits")
}

/// The marked-step tallies behind the endpoint formula: `(x, y)`.
pub fn endpoint_from_marks(m: &MarkedBicolouredPath) -> (i64, i64) {
    use Colour::{Black, Red};
    use MotzkinKind::{Down, Flat};
    let c = |k, col| m.count(k, col, Mark::Marked) as i64;
    (c(Down, Red) + c(Flat, Black), c(Flat, Red) + c(Down, Black))
}

fn has_marked_up(m: &MarkedBicolouredPath) -> bool {
    m.steps().iter().any(|s| s.kind == MotzkinKind::Up && s.deco.mark == Mark::Marked)
}

/// Per-walk checks shared by the bijection and image suites.
fn phi_walk_checks(w: &QuarterPlaneWalk, m: &MarkedBicolouredPath) -> Result<(), String> {
    let ws = w.to_string();
    ensure(m.len() == w.len(), || format!("{ws}: length {} != {}", m.len(), w.len()))?;
    ensure(!has_marked_up(m), || format!("{ws}: marked up step in {m}"))?;
    ensure(endpoint_from_marks(m) == w.endpoint(), || {
        format!("{ws}: endpoint {:?} but marks give {:?}", w.endpoint(), endpoint_from_marks(m))
    })?;
    match g_unmap(m) {
        Ok((steps, true)) if steps == w.steps() => {}
        Ok((steps, valid)) => {
            return Err(format!("{ws}: g gives {} (valid={valid})", walk_str(&steps)))
        }
        Err(e) => return Err(format!("{ws}: g fails with {e}")),
    }
    let back = psi(&forget_marks(m)).map_err(|e| format!("{ws}: psi fails with {e}"))?;
    ensure(back == *m, || format!("{ws}: psi(f(phi)) = {back} != {m}"))
}

/// Length preservation, no marked up step, endpoint formula, `g` as a left
/// inverse and `psi . f` fixing the image, for every walk of length `n`;
/// then `f . phi` injective with `|S_n| = |M2(n)|`.
pub fn check_bijection_suite(n: usize) -> VerificationReport {
    let mut t = Tally::new("bijection", n);
    let mut images: HashSet<BicolouredPath> = HashSet::new();
    for_each_walk(StepSet::S, n, None, |steps| {
        let w = QuarterPlaneWalk::new(steps.to_vec()).expect("enumerated walk");
        let outcome = match phi(&w) {
            Ok(m) => phi_walk_checks(&w, &m).and_then(|()| {
                let f = forget_marks(&m);
                let fs = f.to_string();
                ensure(images.insert(f), || format!("{w}: f(phi) = {fs} already hit"))
            }),
            Err(e) => Err(format!("{w}: {e}")),
        };
        t.record(outcome);
    });
    let target = count(Family::BicolouredMotzkin, n);
    if images.len() as u64 != target {
        // no single walk witnesses a cardinality mismatch; it counts as one
        // extra failed object
        t.record(Err(format!("|f(phi(S_{n}))| = {} != |M2({n})| = {target}", images.len())));
    }
    t.finish()
}

/// For every walk and split index `i`: the suffix from `i` is itself a walk
/// in the class iff the image has height 0 after `i` steps, and at those
/// splits the image factors as the images of the two halves.
pub fn check_shift_property(n: usize) -> VerificationReport {
    let mut t = Tally::new("shift", n);
    for_each_walk(StepSet::S, n, None, |steps| {
        let m = crate::phi::phi_steps(steps).expect("enumerated walk");
        let mut h = 0i64;
        for i in 0..=n {
            if i > 0 {
                h += m[i - 1].kind.delta();
            }
            let suffix_ok = first_exit(&steps[i..]).is_none();
            let at_zero = h == 0;
            let outcome = ensure(suffix_ok == at_zero, || {
                format!("{} split {i}: suffix in S = {suffix_ok}, height zero = {at_zero}", walk_str(steps))
            })
            .and_then(|()| {
                if !(suffix_ok && at_zero) {
                    return Ok(());
                }
                let left = crate::phi::phi_steps(&steps[..i]).map_err(|e| e.to_string())?;
                let right = crate::phi::phi_steps(&steps[i..]).map_err(|e| e.to_string())?;
                let joined: Vec<_> = left.iter().chain(&right).copied().collect();
                ensure(joined == m, || format!("{} split {i}: image does not factor", walk_str(steps)))
            });
            t.record(outcome);
        }
    });
    t.finish()
}

/// A walk uses only three-step moves iff its image is all red; the red part
/// of the image has `|M(n)|` members.
pub fn check_restriction(n: usize) -> VerificationReport {
    let mut t = Tally::new("restriction", n);
    let mut from_y: BTreeSet<MarkedBicolouredPath> = BTreeSet::new();
    let mut red_in_image: BTreeSet<MarkedBicolouredPath> = BTreeSet::new();
    for_each_walk(StepSet::S, n, None, |steps| {
        let w = QuarterPlaneWalk::new(steps.to_vec()).expect("enumerated walk");
        let m = phi(&w).expect("enumerated walk");
        let y = w.is_y_walk();
        let red = m.is_all_red();
        if y {
            from_y.insert(m.clone());
        }
        if red {
            red_in_image.insert(m.clone());
        }
        t.record(ensure(y == red, || format!("{w}: y-walk = {y}, all red = {red} ({m})")));
    });
    if from_y != red_in_image {
        t.record(Err("phi(Y_n) differs from the red part of phi(S_n)".into()));
    }
    let motzkin = count(Family::Motzkin, n);
    if from_y.len() as u64 != motzkin {
        t.record(Err(format!("|phi(Y_{n})| = {} != |M({n})| = {motzkin}", from_y.len())));
    }
    t.finish()
}

/// Marked-step tallies equal the walk's endpoint.
pub fn check_endpoint_formula(n: usize) -> VerificationReport {
    let mut t = Tally::new("endpoint", n);
    for_each_walk(StepSet::S, n, None, |steps| {
        let w = QuarterPlaneWalk::new(steps.to_vec()).expect("enumerated walk");
        let outcome = phi(&w).map_err(|e| e.to_string()).and_then(|m| {
            let got = endpoint_from_marks(&m);
            ensure(got == w.endpoint(), || format!("{w}: endpoint {:?}, marks {got:?}", w.endpoint()))
        });
        t.record(outcome);
    });
    t.finish()
}

/// `psi(f(phi(w))) = phi(w)` for every walk, and the image has `|M2(n)|`
/// distinct members.
pub fn check_image_equality(n: usize) -> VerificationReport {
    let mut t = Tally::new("image", n);
    let mut image: HashSet<MarkedBicolouredPath> = HashSet::new();
    for_each_walk(StepSet::S, n, None, |steps| {
        let w = QuarterPlaneWalk::new(steps.to_vec()).expect("enumerated walk");
        let outcome = phi(&w).map_err(|e| e.to_string()).and_then(|m| {
            let back = psi(&forget_marks(&m)).map_err(|e| format!("{w}: {e}"))?;
            ensure(back == m, || format!("{w}: psi(f(phi)) = {back} != {m}"))?;
            image.insert(m);
            Ok(())
        });
        t.record(outcome);
    });
    let target = count(Family::BicolouredMotzkin, n);
    if image.len() as u64 != target {
        t.record(Err(format!("|phi(S_{n})| = {} != |M2({n})| = {target}", image.len())));
    }
    t.finish()
}

/// Checks from the bicoloured side: `f . psi = id`, no marked up step,
/// `psi(s)` lies in the image, and `phi(g(psi(s))) = psi(s)`.
pub fn check_psi_suite(n: usize) -> VerificationReport {
    let mut t = Tally::new("psi", n);
    crate::enumerate::for_each_path::<Colour>(n, None, false, |steps| {
        let s = BicolouredPath::new(steps.to_vec()).expect("enumerated path");
        let outcome = psi(&s).map_err(|e| format!("{s}: {e}")).and_then(|m| {
            ensure(forget_marks(&m) == s, || format!("{s}: f(psi) = {}", forget_marks(&m)))?;
            ensure(!has_marked_up(&m), || format!("{s}: marked up step in {m}"))?;
            ensure(phi_image_contains(&m), || format!("{s}: psi = {m} not in image"))?;
            let (steps, valid) = g_unmap(&m).map_err(|e| format!("{s}: {e}"))?;
            ensure(valid, || format!("{s}: g(psi) = {} leaves the quadrant", walk_str(&steps)))?;
            let w = QuarterPlaneWalk::new(steps).map_err(|e| e.to_string())?;
            let again = phi(&w).map_err(|e| e.to_string())?;
            ensure(again == m, || format!("{s}: phi(g(psi)) = {again} != {m}"))
        });
        t.record(outcome);
    });
    t.finish()
}

/// `|Y_n| = |M(n)|`, `|S_n| = |M2(n)|` and `|M2(n)| = 2^n |M(n)|`.
pub fn check_counting(n: usize) -> VerificationReport {
    let mut t = Tally::new("counting", n);
    let m = count(Family::Motzkin, n);
    let y = count(Family::YWalks, n);
    let s = count(Family::SWalks, n);
    let m2 = count(Family::BicolouredMotzkin, n);
    let scaled = 1u64.checked_shl(n as u32).and_then(|p| p.checked_mul(m));
    t.record(ensure(y == m, || format!("|Y_{n}| = {y} != |M({n})| = {m}")));
    t.record(ensure(s == m2, || format!("|S_{n}| = {s} != |M2({n})| = {m2}")));
    t.record(ensure(scaled == Some(m2), || format!("|M2({n})| = {m2} != 2^{n} * {m}")));
    t.finish()
}

/// Walks under the triangle `x + y <= 2H + 1` match bicoloured paths in the
/// strip of height `H`; walks under `x + y <= 2H` match those paths with no
/// flat at height `H`.
pub fn check_mp_equinumerosity(n: usize, height: i64) -> VerificationReport {
    let mut t = Tally::new("mp", n);
    let walks_odd = count_class(&ClassSpec::new(Family::SWalks, n).with_triangle(2 * height + 1));
    let strip = count_class(&ClassSpec::new(Family::BicolouredMotzkin, n).with_strip(height));
    t.record(ensure(walks_odd == strip, || {
        format!("H={height}: triangle {} gives {walks_odd:?}, strip gives {strip:?}", 2 * height + 1)
    }));
    let walks_even = count_class(&ClassSpec::new(Family::SWalks, n).with_triangle(2 * height));
    let strip_no_top = count_class(
        &ClassSpec::new(Family::BicolouredMotzkin, n).with_strip(height).no_top_flat(),
    );
    t.record(ensure(walks_even == strip_no_top, || {
        format!(
            "H={height}: triangle {} gives {walks_even:?}, strip without top flats gives {strip_no_top:?}",
            2 * height
        )
    }));
    t.finish()
}

/// Tableau round trips in both directions, `#Tableau3(n) = |M(n)|`, and the
/// Motzkin correspondence is a bijection onto tableaux.
pub fn check_tableaux(n: usize) -> VerificationReport {
    let mut t = Tally::new("tableaux", n);
    let mut tableaux = BTreeSet::new();
    for w in enumerate_walks(StepSet::Y, n) {
        let outcome = walk_to_tableau(&w).map_err(|e| format!("{w}: {e}")).and_then(|tab| {
            ensure(tableau_to_walk(&tab) == w, || format!("{w}: round trip via {tab}"))?;
            // reverse composition, through the text form so validity is re-checked
            let reparsed: crate::tableau::Tableau3 =
                tab.to_string().parse().map_err(|e| format!("{tab}: {e}"))?;
            ensure(walk_to_tableau(&tableau_to_walk(&reparsed)).as_ref() == Ok(&tab), || {
                format!("{tab}: tableau round trip")
            })?;
            tableaux.insert(tab);
            Ok(())
        });
        t.record(outcome);
    }
    let motzkin = count(Family::Motzkin, n);
    if tableaux.len() as u64 != motzkin {
        t.record(Err(format!("#Tableau3({n}) = {} != |M({n})| = {motzkin}", tableaux.len())));
    }
    let mut hit = BTreeSet::new();
    crate::enumerate::for_each_shape(n, |shape| {
        let p = crate::path::MotzkinPath::new(
            shape.iter().map(|&k| crate::path::PathStep::new(k, crate::path::Plain)).collect(),
        )
        .expect("enumerated shape");
        let outcome = motzkin_to_tableau(&p).map_err(|e| format!("{p}: {e}")).and_then(|tab| {
            ensure(tableaux.contains(&tab), || format!("{p}: {tab} is not a tableau of size {n}"))?;
            ensure(tableau_to_motzkin(&tab) == p, || format!("{p}: inverse via {tab}"))?;
            ensure(hit.insert(tab.clone()), || format!("{p}: {tab} already hit"))
        });
        t.record(outcome);
    });
    t.finish()
}

/// A walk inside the triangle `x + y <= 2H + 1` whose image leaves the strip
/// of height `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightWitness {
    #[serde(serialize_with = "ser_walk", deserialize_with = "de_walk")]
    pub walk: QuarterPlaneWalk,
    #[serde(rename = "H")]
    pub height_bound: i64,
    pub walk_max_total: i64,
    pub image_strip_height: i64,
}

fn ser_walk<S: serde::Serializer>(w: &QuarterPlaneWalk, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

fn de_walk<'de, D: serde::Deserializer<'de>>(d: D) -> Result<QuarterPlaneWalk, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

impl HeightWitness {
    /// Recompute both statistics from the walk and check the witness
    /// conditions.
    pub fn validate(&self) -> bool {
        let Ok(m) = phi(&self.walk) else { return false };
        let max_total = self.walk.max_total();
        let image_height = m.max_height();
        max_total == self.walk_max_total
            && image_height == self.image_strip_height
            && max_total <= 2 * self.height_bound + 1
            && image_height > self.height_bound
    }

    pub fn image(&self) -> MarkedBicolouredPath {
        phi(&self.walk).expect("witness walk is valid")
    }

    pub fn to_text(&self) -> String {
        format!(
            "walk: {}\nH: {}\nwalk_max_total: {}\nimage_strip_height: {}\nimage: {}\nvalidated: {}\n",
            self.walk,
            self.height_bound,
            self.walk_max_total,
            self.image_strip_height,
            format_path(&self.image()),
            self.validate(),
        )
    }
}

/// Shortest, then first in enumeration order, walk of length at most
/// `n_max` with `max(x + y) <= 2H + 1` whose image reaches above `H`.
pub fn find_height_counterexample(n_max: usize, height: i64) -> Option<HeightWitness> {
    let bound = 2 * height + 1;
    for n in 0..=n_max {
        let mut found: Option<HeightWitness> = None;
        for_each_walk(StepSet::S, n, Some(bound), |steps| {
            if found.is_some() {
                return;
            }
            let w = QuarterPlaneWalk::new(steps.to_vec()).expect("enumerated walk");
            let m = phi(&w).expect("enumerated walk");
            let image_height = m.max_height();
            if image_height > height {
                found = Some(HeightWitness {
                    walk_max_total: w.max_total(),
                    walk: w,
                    height_bound: height,
                    image_strip_height: image_height,
                });
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Named suites understood by [`run_suite`].
pub const SUITES: [&str; 10] = [
    "bijection",
    "shift",
    "restriction",
    "endpoint",
    "image",
    "psi",
    "counting",
    "mp",
    "tableaux",
    "height",
];

/// Run a named suite that produces a report. `height` is used by `mp`.
/// The `height` suite produces a witness instead and is not handled here.
pub fn run_suite(name: &str, n: usize, height: i64) -> Option<VerificationReport> {
    Some(match name {
        "bijection" => check_bijection_suite(n),
        "shift" => check_shift_property(n),
        "restriction" => check_restriction(n),
        "endpoint" => check_endpoint_formula(n),
        "image" => check_image_equality(n),
        "psi" => check_psi_suite(n),
        "counting" => check_counting(n),
        "mp" => check_mp_equinumerosity(n, height),
        "tableaux" => check_tableaux(n),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_small() {
        let r = check_bijection_suite(0);
        assert_eq!((r.total, r.failed), (1, 0));
        let r = check_bijection_suite(3);
        assert_eq!((r.total, r.failed), (32, 0));
        let r = check_bijection_suite(5);
        assert_eq!((r.total, r.failed), (672, 0));
        assert_eq!(r.passed + r.failed, r.total);
        assert!(r.first_failure.is_none());
    }

    #[test]
    fn shift_small() {
        let r = check_shift_property(0);
        assert_eq!((r.total, r.failed), (1, 0));
        let r = check_shift_property(4);
        assert_eq!(r.total, 144 * 5);
        assert_eq!(r.failed, 0, "{:?}", r.first_failure);
    }

    #[test]
    fn other_suites_pass_small() {
        for n in 0..=5 {
            for name in ["restriction", "endpoint", "image", "psi", "counting", "tableaux"] {
                let r = run_suite(name, n, 0).unwrap();
                assert_eq!(r.failed, 0, "{name} n={n}: {:?}", r.first_failure);
            }
        }
    }

    #[test]
    fn mp_examples() {
        let r = check_mp_equinumerosity(4, 0);
        assert_eq!((r.total, r.failed), (2, 0));
        assert_eq!(count_class(&ClassSpec::new(Family::SWalks, 4).with_triangle(1)), Ok(16));
        assert_eq!(
            count_class(&ClassSpec::new(Family::BicolouredMotzkin, 4).with_strip(0)),
            Ok(16)
        );
        for h in 0..3 {
            assert!(check_mp_equinumerosity(0, h).ok());
        }
        assert_eq!(count_class(&ClassSpec::new(Family::SWalks, 1).with_triangle(0)), Ok(0));
    }

    #[test]
    fn height_witness_examples() {
        assert_eq!(find_height_counterexample(0, 0), None);
        assert_eq!(find_height_counterexample(0, 3), None);
        assert_eq!(find_height_counterexample(1, 0), None);
        let w = find_height_counterexample(2, 0).unwrap();
        assert_eq!(w.walk.to_string(), "RL");
        assert_eq!(w.walk_max_total, 1);
        assert_eq!(w.image_strip_height, 1);
        assert!(w.validate());
        assert_eq!(format_path(&w.image()), "ub.dr.");
    }

    #[test]
    fn tampered_witness_fails_validation() {
        let mut w = find_height_counterexample(2, 0).unwrap();
        w.image_strip_height = 0;
        assert!(!w.validate());
    }

    #[test]
    fn report_text_block() {
        let r = check_bijection_suite(1);
        assert_eq!(
            r.to_text(false),
            "check_name: bijection\nlength: 1\ntotal: 2\npassed: 2\nfailed: 0\nfirst_failure: none\n"
        );
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["check_name", "length", "total", "passed", "failed", "first_failure", "elapsed_ms"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn tally_keeps_first_failure() {
        let mut t = Tally::new("x", 0);
        t.record(Ok(()));
        t.record(Err("a".into()));
        t.record(Err("b".into()));
        let r = t.finish();
        assert_eq!((r.total, r.passed, r.failed), (3, 1, 2));
        assert_eq!(r.first_failure.as_deref(), Some("a"));
    }
}
