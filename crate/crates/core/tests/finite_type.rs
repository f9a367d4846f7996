use std::collections::{BTreeMap, BTreeSet};

use burau_core::corpus::random_diagram;
use burau_core::diagram::Sign;
use burau_core::finitetype::{bk_coefficient, bk_coefficient_of, is_permutation_matrix, is_zero_matrix, resolve, vassiliev_value, Mode, VassilievMatrix};
use burau_core::{burau_matrix, parse_braid, SingularStringLink};
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn marked(seed: u64, k: usize) -> Option<SingularStringLink> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let d = random_diagram(&mut r, seed.is_multiple_of(2), 8);
    if d.crossing_count() < k {
        return None;
    }
    let ids: BTreeSet<usize> = sample(&mut r, d.crossing_count(), k).into_iter().collect();
    Some(d.make_singular(&ids).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn low_orders_vanish(seed in any::<u64>(), k in 1usize..=3) {
        if let Some(s) = marked(seed, k) {
            for j in 0..k {
                prop_assert!(is_zero_matrix(&bk_coefficient(&s, j)), "b_{} nonzero", j);
            }
        }
    }

    #[test]
    fn skein_relation(seed in any::<u64>()) {
        if let Some(s) = marked(seed, 2) {
            let dp: Vec<usize> = s.double_points().iter().copied().collect();
            let (c, rest) = (dp[0], dp[1]);
            let split = |sign| {
                let d = resolve(&s.base().make_singular(&BTreeSet::from([c])).unwrap(), &BTreeMap::from([(c, sign)])).unwrap();
                let v = vassiliev_value(&d.make_singular(&BTreeSet::from([rest])).unwrap(), Mode::Exact).unwrap();
                match v.matrix { VassilievMatrix::Exact(m) => m, _ => unreachable!() }
            };
            let both = match vassiliev_value(&s, Mode::Exact).unwrap().matrix { VassilievMatrix::Exact(m) => m, _ => unreachable!() };
            prop_assert_eq!(both, &split(Sign::Positive) - &split(Sign::Negative));
        }
    }

    #[test]
    fn b0_is_permutation(seed in any::<u64>()) {
        let d = random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), false, 10);
        prop_assert!(is_permutation_matrix(&bk_coefficient_of(&d, 0), &d.permutation()));
    }

    #[test]
    fn series_and_exact_modes_agree(seed in any::<u64>()) {
        if let Some(s) = marked(seed, 1) {
            let exact = match vassiliev_value(&s, Mode::Exact).unwrap().matrix { VassilievMatrix::Exact(m) => m, _ => unreachable!() };
            let series = match vassiliev_value(&s, Mode::Series { max_jumps: 3 }).unwrap().matrix { VassilievMatrix::Series(m) => m, _ => unreachable!() };
            prop_assert_eq!(exact.expand_h(4).unwrap(), series);
        }
    }
}

#[test]
fn unmarked_value_is_the_matrix() {
    let d = parse_braid("s1 s2^-1 s1", 3).unwrap();
    let s = d.make_singular(&BTreeSet::new()).unwrap();
    assert_eq!(vassiliev_value(&s, Mode::Exact).unwrap().matrix, VassilievMatrix::Exact(burau_matrix(&d).unwrap()));
}
