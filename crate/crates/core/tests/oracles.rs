//! Exhaustive agreement between the library and the brute-force oracles.

mod common;

use qmotzkin::enumerate::{enumerate_paths, enumerate_walks};
use qmotzkin::walk::StepSet;
use qmotzkin::{
    count_class, enumerate_class, phi, psi, BicolouredPath, ClassSpec, Colour, Family, Path,
    WalkStep,
};

#[test]
fn walk_enumeration_matches_brute_force() {
    for n in 0..=6 {
        let got: Vec<Vec<WalkStep>> =
            enumerate_walks(StepSet::S, n).into_iter().map(|w| w.into_steps()).collect();
        assert_eq!(got, common::brute_walks(n, &WalkStep::ALL), "S n={n}");
        let got: Vec<Vec<WalkStep>> =
            enumerate_walks(StepSet::Y, n).into_iter().map(|w| w.into_steps()).collect();
        assert_eq!(got, common::brute_walks(n, &WalkStep::Y_STEPS), "Y n={n}");
    }
}

#[test]
fn path_enumeration_matches_brute_force() {
    for n in 0..=6 {
        let got: Vec<_> = enumerate_paths::<Colour>(n).into_iter().map(Path::into_steps).collect();
        assert_eq!(got, common::brute_bicoloured(n), "n={n}");
    }
}

#[test]
fn counts_match_brute_force_with_bounds() {
    for n in 0..=7 {
        for c in 0..4 {
            let brute = common::brute_walks(n, &WalkStep::ALL)
                .into_iter()
                .filter(|w| common::stays_in_quadrant(w, Some(c)))
                .count() as u64;
            let spec = ClassSpec::new(Family::SWalks, n).with_triangle(c);
            assert_eq!(count_class(&spec).unwrap(), brute, "n={n} c={c}");
            assert_eq!(enumerate_class(&spec).unwrap().len() as u64, brute);
        }
        for h in 0..3 {
            for top in [false, true] {
                let mut spec = ClassSpec::new(Family::BicolouredMotzkin, n).with_strip(h);
                if top {
                    spec = spec.no_top_flat();
                }
                let brute = common::brute_motzkin_shapes(n, Some(h), top) << n;
                assert_eq!(count_class(&spec).unwrap(), brute, "n={n} h={h} top={top}");
            }
        }
    }
}

#[test]
fn motzkin_counts_match_recurrence() {
    let rec = common::motzkin_recurrence(12);
    for n in 0..=12 {
        assert_eq!(count_class(&ClassSpec::new(Family::Motzkin, n)).unwrap(), rec[n]);
        assert_eq!(common::brute_motzkin_shapes(n.min(9), None, false), rec[n.min(9)]);
    }
}

#[test]
fn enumeration_is_sorted_and_unique() {
    for family in Family::ALL {
        for n in 0..=4 {
            let objs = enumerate_class(&ClassSpec::new(family, n)).unwrap();
            assert!(objs.windows(2).all(|p| p[0] < p[1]), "{family} n={n}");
            assert_eq!(objs.len() as u64, count_class(&ClassSpec::new(family, n)).unwrap());
        }
    }
}

#[test]
fn phi_agrees_with_rescan_oracle() {
    for n in 0..=8 {
        for w in enumerate_walks(StepSet::S, n) {
            let fast = phi(&w).unwrap();
            let naive = common::naive_phi(w.steps()).expect("rescan finds a partner");
            assert_eq!(common::as_marked(&fast), naive, "{w}");
        }
    }
}

#[test]
fn psi_agrees_with_rescan_oracle() {
    for n in 0..=8 {
        for s in enumerate_paths::<Colour>(n) {
            let fast = psi(&s).unwrap();
            let naive = common::naive_psi(s.steps()).expect("rescan resolves every step");
            assert_eq!(common::as_marked(&fast), naive, "{s}");
        }
    }
}

#[test]
fn naive_psi_inverts_naive_phi() {
    // oracle-only consistency: the two rescans agree with each other too
    for w in common::brute_walks(5, &WalkStep::ALL) {
        let m = common::naive_phi(&w).unwrap();
        let forgotten: Vec<_> = m.iter().map(|s| qmotzkin::PathStep::new(s.kind, s.deco.colour)).collect();
        let _: BicolouredPath = Path::new(forgotten.clone()).unwrap();
        assert_eq!(common::naive_psi(&forgotten).unwrap(), m);
    }
}

#[test]
fn sharded_counts_match_sequential() {
    for family in Family::ALL {
        for n in [0, 1, 5, 9] {
            let spec = ClassSpec::new(family, n);
            let seq = count_class(&spec).unwrap();
            for depth in [0, 1, 3, 12] {
                assert_eq!(qmotzkin::count_class_sharded(&spec, depth).unwrap(), seq, "{family} n={n}");
            }
        }
    }
    let spec = ClassSpec::new(Family::SWalks, 9).with_triangle(4);
    assert_eq!(qmotzkin::count_class_sharded(&spec, 2).unwrap(), count_class(&spec).unwrap());
}
