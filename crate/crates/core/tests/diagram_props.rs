use burau_core::corpus::{perturb, random_braid, random_diagram};
use burau_core::{parse_tangle, StringLinkDiagram};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_round_trips(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), false, 12);
        prop_assert_eq!(parse_tangle(&d.render()).unwrap(), d);
    }

    #[test]
    fn compose_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c]: [StringLinkDiagram; 3] = std::array::from_fn(|_| {
            let base = random_braid(&mut r, 3, 3, false);
            perturb(&mut r, &base, 2, false, 8)
        });
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
    }

    #[test]
    fn permutations_compose(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_braid(&mut r, 4, 5, false);
        let b0 = random_braid(&mut r, 4, 5, false);
        let b = perturb(&mut r, &b0, 3, false, 10);
        prop_assert_eq!(a.compose(&b).unwrap().permutation(), compose_perm(&a.permutation(), &b.permutation()));
    }

    #[test]
    fn moves_produce_valid_diagrams(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), false, 12);
        for mv in d.available_moves() {
            let e = d.apply_move(&mv).unwrap();
            prop_assert_eq!(parse_tangle(&e.render()).unwrap(), e);
        }
    }
}

#[test]
fn identity_compose() {
    let d = random_braid(&mut rng(1), 3, 6, false);
    let id = StringLinkDiagram::identity(3);
    assert_eq!(id.compose(&d).unwrap(), d);
    assert_eq!(d.compose(&id).unwrap(), d);
}
