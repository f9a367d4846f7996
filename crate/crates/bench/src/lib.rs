//! Fixed inputs shared by the benches.

use burau_core::corpus::{perturb, random_braid_word};
use burau_core::{parse_braid, StringLinkDiagram};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Braid words of growing length on `n` strands.
pub fn braid_words(n: usize) -> Vec<(usize, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    [4, 8, 16, 32]
        .into_iter()
        .map(|len| (len, random_braid_word(&mut rng, n, len, false)))
        .collect()
}

/// Braids roughed up by a few Reidemeister moves, so they are no longer braid-like.
pub fn tangles() -> Vec<(usize, StringLinkDiagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    braid_words(4)
        .into_iter()
        .map(|(len, w)| {
            let d = parse_braid(&w, 4).expect("valid word");
            let d = perturb(&mut rng, &d, 6, false, len + 8);
            (d.crossing_count(), d)
        })
        .collect()
}
