//! Which sinks a walker can reach at all, and when a power of the diagram
//! connects every source to every sink.

use crate::diagram::StringLinkDiagram;

use super::{build_system, Target};

/// `R[i][j]`: some walk runs from source `i` to sink `j`.
pub type BoolMatrix = Vec<Vec<bool>>;

pub fn reachability(d: &StringLinkDiagram) -> BoolMatrix {
    let sys = build_system(d);
    let n = d.n();
    let m = sys.variables().len();
    (0..n)
        .map(|i| {
            let mut row = vec![false; n];
            let mut seen = vec![false; m];
            let mut stack = vec![sys.entry(i)];
            while let Some(at) = stack.pop() {
                match at {
                    Target::Sink(j) => row[j] = true,
                    Target::Var(v) => {
                        if !std::mem::replace(&mut seen[v], true) {
                            stack.push(sys.stay_successor(v));
                            stack.push(sys.jump_successor(v));
                        }
                    }
                }
            }
            row
        })
        .collect()
}

pub fn boolean_product(a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).any(|k| a[i][k] && b[k][j])).collect())
        .collect()
}

pub fn boolean_power(r: &BoolMatrix, k: usize) -> BoolMatrix {
    assert!(k >= 1, "power must be positive");
    (1..k).fold(r.clone(), |acc, _| boolean_product(&acc, r))
}

/// Least `N` with `R^N` all-true. Walks on `σ^N` decompose at the gluing
/// levels, so `R^N` is the reachability of `σ^N`. The search stops at
/// Wielandt's bound `(n-1)^2 + 1`, past which no new `N` can appear.
pub fn primitivity_index(r: &BoolMatrix) -> Option<usize> {
    let n = r.len();
    if n == 0 {
        return None;
    }
    let bound = (n - 1) * (n - 1) + 1;
    let mut acc = r.clone();
    for k in 1..=bound {
        if acc.iter().all(|row| row.iter().all(|&x| x)) {
            return Some(k);
        }
        acc = boolean_product(&acc, r);
    }
    None
}
