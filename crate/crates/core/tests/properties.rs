mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use fuzzy_gamma::enumerate::{self, canonical_form, relabel, SearchSpec};
use fuzzy_gamma::format;
use fuzzy_gamma::fuzzy::{self, FuzzySubset};
use fuzzy_gamma::ideal::{self, RegularityClass};
use fuzzy_gamma::{enumerate_grid_battery, GammaStructure, GridBattery, ValidateOptions};

fn pool() -> &'static [GammaStructure] {
    static POOL: OnceLock<Vec<GammaStructure>> = OnceLock::new();
    POOL.get_or_init(|| {
        [(2, 1), (2, 2), (3, 1)]
            .iter()
            .flat_map(|&(n, m)| enumerate::enumerate_structures(&SearchSpec::new(n, m)).unwrap())
            .collect()
    })
}

/// A pooled structure with three fuzzy subsets on it.
fn structure_and_subsets() -> impl Strategy<Value = (usize, Vec<f64>, Vec<f64>, Vec<f64>)> {
    (0..pool().len()).prop_flat_map(|i| {
        let n = pool()[i].size();
        let v = || proptest::collection::vec(prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0f64], n);
        (Just(i), v(), v(), v())
    })
}

fn fz(s: &GammaStructure, v: &[f64]) -> FuzzySubset {
    FuzzySubset::new(s, v.to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn compose_matches_definition((i, f, g, _) in structure_and_subsets()) {
        let s = &pool()[i];
        let fg = fuzzy::compose(s, &fz(s, &f), &fz(s, &g)).unwrap();
        prop_assert_eq!(fg.values(), &common::naive_compose(s, &f, &g)[..]);
    }

    #[test]
    fn compose_is_monotone((i, f, g, h) in structure_and_subsets()) {
        let s = &pool()[i];
        let upper: Vec<f64> = f.iter().zip(&h).map(|(a, b)| a.max(*b)).collect();
        let lo = fuzzy::compose(s, &fz(s, &f), &fz(s, &g)).unwrap();
        let hi = fuzzy::compose(s, &fz(s, &upper), &fz(s, &g)).unwrap();
        prop_assert!(lo.leq(&hi).unwrap());
    }

    #[test]
    fn compose_is_associative_on_po_semigroups((i, f, g, h) in structure_and_subsets()) {
        let s = &pool()[i];
        let (f, g, h) = (fz(s, &f), fz(s, &g), fz(s, &h));
        let left = fuzzy::compose(s, &fuzzy::compose(s, &f, &g).unwrap(), &h).unwrap();
        let right = fuzzy::compose(s, &f, &fuzzy::compose(s, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(left.values(), right.values());
    }

    #[test]
    fn generated_ideals_are_least_ideals_above((i, f, g, _) in structure_and_subsets()) {
        let s = &pool()[i];
        let f = fz(s, &f);
        let r = fuzzy::generated_fuzzy_right_ideal(s, &f).unwrap();
        let l = fuzzy::generated_fuzzy_left_ideal(s, &f).unwrap();
        prop_assert!(fuzzy::is_fuzzy_right_ideal(s, &r).unwrap());
        prop_assert!(fuzzy::is_fuzzy_left_ideal(s, &l).unwrap());
        prop_assert!(f.leq(&r).unwrap() && f.leq(&l).unwrap());
        // any right ideal above f is above r
        let upper = fuzzy::generated_fuzzy_right_ideal(s, &fz(s, &g)).unwrap();
        let join: Vec<f64> = upper.values().iter().zip(r.values()).map(|(a, b)| a.max(*b)).collect();
        let join = fz(s, &join);
        prop_assert!(fuzzy::is_fuzzy_right_ideal(s, &join).unwrap());
        prop_assert!(r.leq(&join).unwrap());
        let again = fuzzy::generated_fuzzy_right_ideal(s, &r).unwrap();
        prop_assert_eq!(again.values(), r.values());
    }

    #[test]
    fn rank_projection_commutes_with_composition((i, f, g, _) in structure_and_subsets()) {
        let s = &pool()[i];
        let mut vals: Vec<f64> = f.iter().chain(&g).copied().chain([0.0, 1.0]).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals.dedup();
        let levels = 2 * s.size() + 2;
        let top = vals.len() - 1;
        let map = |v: f64| {
            let r = vals.iter().position(|&w| w == v).unwrap();
            if r == top { 1.0 } else { r as f64 / (levels - 1) as f64 }
        };
        let pf: Vec<f64> = f.iter().map(|&v| map(v)).collect();
        let pg: Vec<f64> = g.iter().map(|&v| map(v)).collect();
        let fg = fuzzy::compose(s, &fz(s, &f), &fz(s, &g)).unwrap();
        let pfg = fuzzy::compose(s, &fz(s, &pf), &fz(s, &pg)).unwrap();
        let mapped: Vec<f64> = fg.values().iter().map(|&v| map(v)).collect();
        prop_assert_eq!(&mapped[..], pfg.values());
    }

    #[test]
    fn relabeling_preserves_canonical_form_and_classes(i in 0..pool().len(), seed in any::<u64>()) {
        let s = &pool()[i];
        let (n, m) = (s.size(), s.gamma_count());
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut tau: Vec<usize> = (0..m).collect();
        sigma.rotate_left((seed % n as u64) as usize);
        if seed & 1 == 1 { tau.reverse(); }
        let (table, leq) = relabel(s, &sigma, &tau);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && leq[x * n + y])
            .collect();
        let t = GammaStructure::from_indexed(n, m, table, &pairs, ValidateOptions::default()).unwrap();
        prop_assert_eq!(canonical_form(s), canonical_form(&t));
        for class in RegularityClass::ALL {
            prop_assert_eq!(ideal::decide_def(s, class), ideal::decide_def(&t, class));
        }
    }

    #[test]
    fn opposite_swaps_one_sided_classes(i in 0..pool().len()) {
        let s = &pool()[i];
        let op = s.opposite();
        prop_assert_eq!(ideal::decide_def(s, RegularityClass::RightRegular),
                        ideal::decide_def(&op, RegularityClass::LeftRegular));
        prop_assert_eq!(ideal::decide_def(s, RegularityClass::Regular),
                        ideal::decide_def(&op, RegularityClass::Regular));
        prop_assert_eq!(op.opposite(), s.clone());
    }

    #[test]
    fn json_round_trip(i in 0..pool().len()) {
        let s = &pool()[i];
        let back = format::parse_structure(&format::structure_to_json(s), ValidateOptions::default()).unwrap();
        prop_assert_eq!(back.digest(), s.digest());
    }

    #[test]
    fn exhaustive_battery_size(i in 0..pool().len(), levels in 2usize..6) {
        let s = &pool()[i];
        let count = enumerate_grid_battery(s, &GridBattery::exhaustive(levels)).unwrap().count();
        prop_assert_eq!(count, levels.pow(s.size() as u32));
    }
}
