//! Reidemeister moves as encounter-list surgery.

use std::collections::BTreeSet;

use super::{canonicalize, Crossing, Encounter, Role, Sign, Strand, StringLinkDiagram};
use crate::error::{Error, Result};

/// A local move. Strand indices are source positions (0-based); positions
/// are insertion indices into a strand's encounter list; crossings are
/// indices into the crossing table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// Adds a kink: two consecutive encounters of a fresh crossing, `O` then
    /// `U` when `over_first`, otherwise `U` then `O`.
    R1Insert {
        strand: usize,
        position: usize,
        sign: Sign,
        over_first: bool,
    },
    /// Removes a crossing whose two encounters are consecutive on one strand.
    R1Delete { crossing: usize },
    /// Pushes one segment over another, creating two fresh crossings of
    /// opposite sign: `O c O c'` on the over segment and `U c U c'` (or
    /// `U c' U c` when `under_reversed`) on the under segment.
    R2Insert {
        over_strand: usize,
        over_position: usize,
        under_strand: usize,
        under_position: usize,
        first_sign: Sign,
        under_reversed: bool,
    },
    /// Undoes an R2: `first`, `second` have opposite signs, their over
    /// encounters are consecutive (in that order) and their under encounters
    /// are consecutive (either order).
    R2Delete { first: usize, second: usize },
    /// Slides a strand across the crossing of the other two in a braid-like
    /// triangle; the order of the two encounters on each side is reversed.
    R3 { crossings: [usize; 3] },
}

pub(super) fn apply(d: &StringLinkDiagram, mv: &MoveSpec) -> Result<StringLinkDiagram> {
    match *mv {
        MoveSpec::R1Insert {
            strand,
            position,
            sign,
            over_first,
        } => {
            check_site(d, strand, position)?;
            let c = d.crossings.len();
            let pair = if over_first {
                [Encounter::over(c), Encounter::under(c)]
            } else {
                [Encounter::under(c), Encounter::over(c)]
            };
            let mut strands = d.strands.clone();
            strands[strand].encounters.splice(position..position, pair);
            let mut crossings = d.crossings.clone();
            crossings.push(Crossing { sign });
            rebuild(d.n, strands, crossings)
        }
        MoveSpec::R1Delete { crossing } => {
            check_crossing(d, crossing)?;
            let site = d.sites()[crossing];
            let adjacent =
                site.over.0 == site.under.0 && site.over.1.abs_diff(site.under.1) == 1;
            if !adjacent {
                return Err(Error::PatternNotFound(format!(
                    "crossing {} is not a kink",
                    crossing + 1
                )));
            }
            Ok(remove_crossings(d, &BTreeSet::from([crossing])))
        }
        MoveSpec::R2Insert {
            over_strand,
            over_position,
            under_strand,
            under_position,
            first_sign,
            under_reversed,
        } => {
            check_site(d, over_strand, over_position)?;
            check_site(d, under_strand, under_position)?;
            let c = d.crossings.len();
            let over = vec![Encounter::over(c), Encounter::over(c + 1)];
            let under = if under_reversed {
                vec![Encounter::under(c + 1), Encounter::under(c)]
            } else {
                vec![Encounter::under(c), Encounter::under(c + 1)]
            };
            let mut strands = d.strands.clone();
            if over_strand == under_strand {
                // Insert at the larger index first; ties put the over pair first.
                let s = &mut strands[over_strand].encounters;
                if under_position >= over_position {
                    s.splice(under_position..under_position, under);
                    s.splice(over_position..over_position, over);
                } else {
                    s.splice(over_position..over_position, over);
                    s.splice(under_position..under_position, under);
                }
            } else {
                strands[over_strand]
                    .encounters
                    .splice(over_position..over_position, over);
                strands[under_strand]
                    .encounters
                    .splice(under_position..under_position, under);
            }
            let mut crossings = d.crossings.clone();
            crossings.push(Crossing { sign: first_sign });
            crossings.push(Crossing {
                sign: first_sign.flip(),
            });
            rebuild(d.n, strands, crossings)
        }
        MoveSpec::R2Delete { first, second } => {
            check_crossing(d, first)?;
            check_crossing(d, second)?;
            if !is_r2_pair(d, first, second) {
                return Err(Error::PatternNotFound(format!(
                    "crossings {} and {} do not form a cancelling pair",
                    first + 1,
                    second + 1
                )));
            }
            Ok(remove_crossings(d, &BTreeSet::from([first, second])))
        }
        MoveSpec::R3 { crossings } => {
            for &c in &crossings {
                check_crossing(d, c)?;
            }
            let [a, b, c] = crossings;
            let orders = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
            let segments = orders
                .iter()
                .find_map(|o| r3_segments(d, *o))
                .ok_or_else(|| {
                    Error::PatternNotFound(format!(
                        "crossings {}, {}, {} do not form a braid-like triangle",
                        a + 1,
                        b + 1,
                        c + 1
                    ))
                })?;
            let mut strands = d.strands.clone();
            for (s, k) in segments {
                strands[s].encounters.swap(k, k + 1);
            }
            rebuild(d.n, strands, d.crossings.clone())
        }
    }
}

pub(super) fn available(d: &StringLinkDiagram) -> Vec<MoveSpec> {
    let sites = d.sites();
    let mut out = Vec::new();
    for (c, site) in sites.iter().enumerate() {
        if site.over.0 == site.under.0 && site.over.1.abs_diff(site.under.1) == 1 {
            out.push(MoveSpec::R1Delete { crossing: c });
        }
    }
    for s in &d.strands {
        for w in s.encounters.windows(2) {
            if w[0].role == Role::Over
                && w[1].role == Role::Over
                && is_r2_pair(d, w[0].crossing, w[1].crossing)
            {
                out.push(MoveSpec::R2Delete {
                    first: w[0].crossing,
                    second: w[1].crossing,
                });
            }
        }
    }
    let mut seen = BTreeSet::new();
    for s in &d.strands {
        for w in s.encounters.windows(2) {
            let (x, y) = (w[0].crossing, w[1].crossing);
            if x == y {
                continue;
            }
            for z in 0..d.crossings.len() {
                if z == x || z == y {
                    continue;
                }
                let mut key = [x, y, z];
                key.sort_unstable();
                if seen.contains(&key) {
                    continue;
                }
                if r3_segments(d, [x, y, z]).is_some() {
                    seen.insert(key);
                    out.push(MoveSpec::R3 { crossings: [x, y, z] });
                }
            }
        }
    }
    out
}

fn check_site(d: &StringLinkDiagram, strand: usize, position: usize) -> Result<()> {
    let s = d.strands.get(strand).ok_or_else(|| {
        Error::PatternNotFound(format!("strand {} does not exist", strand + 1))
    })?;
    if position > s.encounters.len() {
        return Err(Error::PatternNotFound(format!(
            "position {position} is past the end of strand {}",
            strand + 1
        )));
    }
    Ok(())
}

fn check_crossing(d: &StringLinkDiagram, c: usize) -> Result<()> {
    if c < d.crossings.len() {
        Ok(())
    } else {
        Err(Error::UnknownCrossing((c + 1).to_string()))
    }
}

fn rebuild(n: usize, strands: Vec<Strand>, crossings: Vec<Crossing>) -> Result<StringLinkDiagram> {
    StringLinkDiagram::new(n, strands, crossings)
        .map_err(|e| Error::Internal(format!("move produced an invalid diagram: {e}")))
}

fn is_r2_pair(d: &StringLinkDiagram, first: usize, second: usize) -> bool {
    if first == second || d.crossings[first].sign == d.crossings[second].sign {
        return false;
    }
    let sites = d.sites();
    let (a, b) = (sites[first], sites[second]);
    let overs = a.over.0 == b.over.0 && b.over.1 == a.over.1 + 1;
    let unders = a.under.0 == b.under.0 && a.under.1.abs_diff(b.under.1) == 1;
    overs && unders
}

fn remove_crossings(d: &StringLinkDiagram, gone: &BTreeSet<usize>) -> StringLinkDiagram {
    let mut remap = vec![usize::MAX; d.crossings.len()];
    let mut crossings = Vec::new();
    for (i, c) in d.crossings.iter().enumerate() {
        if !gone.contains(&i) {
            remap[i] = crossings.len();
            crossings.push(*c);
        }
    }
    let strands = d
        .strands
        .iter()
        .map(|s| Strand {
            source: s.source,
            sink: s.sink,
            encounters: s
                .encounters
                .iter()
                .filter(|e| !gone.contains(&e.crossing))
                .map(|e| Encounter {
                    crossing: remap[e.crossing],
                    role: e.role,
                })
                .collect(),
        })
        .collect();
    canonicalize(d.n, strands, crossings)
}

/// Matches the triangle for crossings in the order `[x, y, z]`:
/// segment A reads `x, y`; segment B reads `x, z`; segment C reads `y, z`,
/// each pair consecutive and each crossing's two encounters on different
/// segments. Heights must be transitive, and the signs must be those of a
/// braid picture: either every crossing is positive exactly when its left
/// strand (A at x and y, B at z) is over, or every crossing the opposite.
/// Returns the `(strand, index)` start of each segment.
fn r3_segments(d: &StringLinkDiagram, [x, y, z]: [usize; 3]) -> Option<[(usize, usize); 3]> {
    let sites = d.sites();
    let at = |(s, k): (usize, usize)| d.strands[s].encounters.get(k).copied();
    let next = |(s, k): (usize, usize)| (s, k + 1);
    let both = |c: usize| [sites[c].over, sites[c].under];
    for ax in both(x) {
        let ay = next(ax);
        if at(ay).map(|e| e.crossing) != Some(y) {
            continue;
        }
        let bx = if ax == sites[x].over { sites[x].under } else { sites[x].over };
        let bz = next(bx);
        if at(bz).map(|e| e.crossing) != Some(z) {
            continue;
        }
        let cy = if ay == sites[y].over { sites[y].under } else { sites[y].over };
        let cz = next(cy);
        if at(cz).map(|e| e.crossing) != Some(z) || cz == bz {
            continue;
        }
        let over_a_x = at(ax)?.role == Role::Over;
        let over_a_y = at(ay)?.role == Role::Over;
        let over_b_z = at(bz)?.role == Role::Over;
        // A>B, B>C, C>A or its reverse
        let cyclic = (over_a_x && over_b_z && !over_a_y) || (!over_a_x && !over_b_z && over_a_y);
        if cyclic {
            continue;
        }
        let pos = |c: usize| d.crossings[c].sign == Sign::Positive;
        let left = pos(x) == over_a_x && pos(y) == over_a_y && pos(z) == over_b_z;
        let right = pos(x) != over_a_x && pos(y) != over_a_y && pos(z) != over_b_z;
        if left || right {
            return Some([ax, bx, cy]);
        }
    }
    None
}
