//! Seeded random diagrams for property tests, acceptance runs and benches.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{parse_braid, MoveSpec, Sign, StringLinkDiagram};

/// A braid word on `n >= 2` strands with `len` letters, e.g. `s1 s3^-1 s2`.
pub fn random_braid_word<R: Rng>(rng: &mut R, n: usize, len: usize, positive: bool) -> String {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            if !positive && rng.gen_bool(0.5) {
                format!("s{i}^-1")
            } else {
                format!("s{i}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn random_braid<R: Rng>(rng: &mut R, n: usize, len: usize, positive: bool) -> StringLinkDiagram {
    parse_braid(&random_braid_word(rng, n, len, positive), n).expect("generated word is valid")
}

fn random_sign<R: Rng>(rng: &mut R, positive: bool) -> Sign {
    if positive || rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// A legal move chosen at random. Insertions are skipped once the diagram
/// has `max_crossings` crossings; R2 insertions are skipped when `positive`.
pub fn random_move<R: Rng>(
    rng: &mut R,
    d: &StringLinkDiagram,
    positive: bool,
    max_crossings: usize,
) -> Option<MoveSpec> {
    let room = d.crossing_count() + 2 <= max_crossings;
    let mut options = d.available_moves();
    // R3 keeps the crossing count and is the rarest candidate; favour it.
    let r3: Vec<_> = options.iter().filter(|m| matches!(m, MoveSpec::R3 { .. })).cloned().collect();
    if !r3.is_empty() && rng.gen_bool(0.5) {
        return r3.choose(rng).cloned();
    }
    if room {
        let n = d.n();
        let site = |rng: &mut R| {
            let s = rng.gen_range(0..n);
            (s, rng.gen_range(0..=d.strands()[s].encounters.len()))
        };
        let (strand, position) = site(rng);
        options.push(MoveSpec::R1Insert {
            strand,
            position,
            sign: random_sign(rng, positive),
            over_first: rng.gen_bool(0.5),
        });
        if !positive {
            let (over_strand, over_position) = site(rng);
            let (under_strand, under_position) = site(rng);
            options.push(MoveSpec::R2Insert {
                over_strand,
                over_position,
                under_strand,
                under_position,
                first_sign: random_sign(rng, false),
                under_reversed: rng.gen_bool(0.5),
            });
        }
    }
    options.choose(rng).cloned()
}

/// Applies up to `steps` random legal moves.
pub fn perturb<R: Rng>(
    rng: &mut R,
    d: &StringLinkDiagram,
    steps: usize,
    positive: bool,
    max_crossings: usize,
) -> StringLinkDiagram {
    let mut cur = d.clone();
    for _ in 0..steps {
        if let Some(mv) = random_move(rng, &cur, positive, max_crossings) {
            cur = cur.apply_move(&mv).expect("listed move applies");
        }
    }
    cur
}

/// Braid on 2 to 4 strands, then a few moves, at most `max_crossings` crossings.
pub fn random_diagram<R: Rng>(rng: &mut R, positive: bool, max_crossings: usize) -> StringLinkDiagram {
    let n = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_crossings.clamp(1, 6));
    let d = random_braid(rng, n, len, positive);
    let steps = rng.gen_range(0..=4);
    perturb(rng, &d, steps, positive, max_crossings)
}
