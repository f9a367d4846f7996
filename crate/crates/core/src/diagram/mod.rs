//! Combinatorial string links: `n` oriented strands from bottom sources to top
//! sinks, each carrying the ordered list of crossings it passes through.
//!
//! Positions (sources, sinks, strand indices) are 0-based in the API and
//! 1-based in every text format. Crossings are identified by their index in
//! the crossing table; after every construction the table is renumbered in
//! order of first appearance along strand 0, 1, ... so that structural
//! equality is meaningful.

mod moves;
mod parse;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub use moves::MoveSpec;
pub use parse::{parse_braid, parse_braid_tokens, parse_singular_tangle, parse_tangle, BraidLetter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn swap(self) -> Self {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Encounter {
    pub crossing: usize,
    pub role: Role,
}

impl Encounter {
    pub fn over(crossing: usize) -> Self {
        Self {
            crossing,
            role: Role::Over,
        }
    }

    pub fn under(crossing: usize) -> Self {
        Self {
            crossing,
            role: Role::Under,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub source: usize,
    pub sink: usize,
    /// Ordered from source to sink.
    pub encounters: Vec<Encounter>,
}

/// Where the two encounters of a crossing sit: `(strand, index)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingSite {
    pub over: (usize, usize),
    pub under: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringLinkDiagram {
    n: usize,
    strands: Vec<Strand>,
    crossings: Vec<Crossing>,
}

impl StringLinkDiagram {
    /// Validates and canonicalizes. Strands may be given in any order and
    /// crossings under any numbering; the result orders strands by source and
    /// renumbers crossings by first appearance.
    pub fn new(n: usize, strands: Vec<Strand>, crossings: Vec<Crossing>) -> Result<Self> {
        validate(n, &strands, &crossings)?;
        Ok(canonicalize(n, strands, crossings))
    }

    /// `n` parallel strands, no crossings.
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            strands: (0..n)
                .map(|i| Strand {
                    source: i,
                    sink: i,
                    encounters: Vec::new(),
                })
                .collect(),
            crossings: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strands, indexed by source position.
    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// `perm[i]` is the sink reached by the strand leaving source `i`.
    pub fn permutation(&self) -> Vec<usize> {
        self.strands.iter().map(|s| s.sink).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign == Sign::Positive)
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.crossings.iter().position(|c| c.sign == Sign::Negative)
    }

    pub fn sites(&self) -> Vec<CrossingSite> {
        let mut over = vec![None; self.crossings.len()];
        let mut under = vec![None; self.crossings.len()];
        for (s, strand) in self.strands.iter().enumerate() {
            for (k, e) in strand.encounters.iter().enumerate() {
                match e.role {
                    Role::Over => over[e.crossing] = Some((s, k)),
                    Role::Under => under[e.crossing] = Some((s, k)),
                }
            }
        }
        over.into_iter()
            .zip(under)
            .map(|(o, u)| CrossingSite {
                over: o.expect("validated"),
                under: u.expect("validated"),
            })
            .collect()
    }

    /// Stacks `top` above `self`: sink `j` of `self` is glued to source `j`
    /// of `top`. The induced permutation is `perm(top) ∘ perm(self)`.
    pub fn compose(&self, top: &Self) -> Result<Self> {
        if self.n != top.n {
            return Err(Error::StrandCountMismatch(self.n, top.n));
        }
        let offset = self.crossings.len();
        let strands = self
            .strands
            .iter()
            .map(|lower| {
                let upper = &top.strands[lower.sink];
                let mut encounters = lower.encounters.clone();
                encounters.extend(upper.encounters.iter().map(|e| Encounter {
                    crossing: e.crossing + offset,
                    role: e.role,
                }));
                Strand {
                    source: lower.source,
                    sink: upper.sink,
                    encounters,
                }
            })
            .collect();
        let crossings = self.crossings.iter().chain(&top.crossings).copied().collect();
        Ok(canonicalize(self.n, strands, crossings))
    }

    /// `times`-fold self-composition.
    pub fn power(&self, times: usize) -> Result<Self> {
        if times == 0 {
            return Err(Error::InvalidArgument("power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..times {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// Left-right reflection: positions `i -> n-1-i`, every sign flipped,
    /// over/under roles and encounter orders kept.
    pub fn mirror_vertical(&self) -> Self {
        let n = self.n;
        let strands = self
            .strands
            .iter()
            .map(|s| Strand {
                source: n - 1 - s.source,
                sink: n - 1 - s.sink,
                encounters: s.encounters.clone(),
            })
            .collect();
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing { sign: c.sign.flip() })
            .collect();
        canonicalize(n, strands, crossings)
    }

    /// Places `right` beside `self` with no crossings between them.
    pub fn juxtapose(&self, right: &Self) -> Self {
        let offset = self.crossings.len();
        let mut strands = self.strands.clone();
        strands.extend(right.strands.iter().map(|s| Strand {
            source: s.source + self.n,
            sink: s.sink + self.n,
            encounters: s
                .encounters
                .iter()
                .map(|e| Encounter {
                    crossing: e.crossing + offset,
                    role: e.role,
                })
                .collect(),
        }));
        let crossings = self.crossings.iter().chain(&right.crossings).copied().collect();
        canonicalize(self.n + right.n, strands, crossings)
    }

    pub fn apply_move(&self, mv: &MoveSpec) -> Result<Self> {
        moves::apply(self, mv)
    }

    /// Every deletion and R3 slide applicable to this diagram.
    pub fn available_moves(&self) -> Vec<MoveSpec> {
        moves::available(self)
    }

    pub fn make_singular(&self, ids: &BTreeSet<usize>) -> Result<SingularStringLink> {
        SingularStringLink::new(self.clone(), ids.clone())
    }

    /// Tangle file text. Crossings are written with 1-based numeric ids.
    pub fn render(&self) -> String {
        render_with(self, &BTreeSet::new())
    }
}

/// A string link some of whose crossings are transverse double points. Each
/// double point keeps its base sign and base over/under assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularStringLink {
    base: StringLinkDiagram,
    double_points: BTreeSet<usize>,
}

impl SingularStringLink {
    pub fn new(base: StringLinkDiagram, double_points: BTreeSet<usize>) -> Result<Self> {
        if let Some(bad) = double_points.iter().find(|&&c| c >= base.crossing_count()) {
            return Err(Error::UnknownCrossing((bad + 1).to_string()));
        }
        Ok(Self {
            base,
            double_points,
        })
    }

    pub fn base(&self) -> &StringLinkDiagram {
        &self.base
    }

    pub fn double_points(&self) -> &BTreeSet<usize> {
        &self.double_points
    }

    pub fn render(&self) -> String {
        render_with(&self.base, &self.double_points)
    }
}

fn render_with(d: &StringLinkDiagram, double: &BTreeSet<usize>) -> String {
    let mut out = String::new();
    writeln!(out, "strands {}", d.n).unwrap();
    for (i, c) in d.crossings.iter().enumerate() {
        write!(out, "crossing {} {}", i + 1, c.sign.symbol()).unwrap();
        if double.contains(&i) {
            out.push_str(" double");
        }
        out.push('\n');
    }
    for (k, s) in d.strands.iter().enumerate() {
        write!(out, "strand {} from {} to {}:", k + 1, s.source + 1, s.sink + 1).unwrap();
        for e in &s.encounters {
            let r = match e.role {
                Role::Over => 'O',
                Role::Under => 'U',
            };
            write!(out, " {}{}", r, e.crossing + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

fn validate(n: usize, strands: &[Strand], crossings: &[Crossing]) -> Result<()> {
    if n == 0 {
        return Err(Error::Validation("a string link needs at least one strand".into()));
    }
    if strands.len() != n {
        return Err(Error::Validation(format!(
            "expected {n} strands, found {}",
            strands.len()
        )));
    }
    check_permutation(strands.iter().map(|s| s.source), n, "source")?;
    check_permutation(strands.iter().map(|s| s.sink), n, "sink")?;
    let mut over = vec![0usize; crossings.len()];
    let mut under = vec![0usize; crossings.len()];
    for s in strands {
        for e in &s.encounters {
            let slot = match e.role {
                Role::Over => over.get_mut(e.crossing),
                Role::Under => under.get_mut(e.crossing),
            };
            *slot.ok_or_else(|| Error::UnknownCrossing((e.crossing + 1).to_string()))? += 1;
        }
    }
    for c in 0..crossings.len() {
        let total = over[c] + under[c];
        if total != 2 {
            return Err(Error::Validation(format!(
                "crossing {} has {} encounter{}",
                c + 1,
                total,
                if total == 1 { "" } else { "s" }
            )));
        }
        if over[c] != 1 {
            return Err(Error::Validation(format!(
                "crossing {} needs one over and one under encounter",
                c + 1
            )));
        }
    }
    Ok(())
}

fn check_permutation(it: impl Iterator<Item = usize>, n: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; n];
    for p in it {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Validation(format!(
                "{what} positions are not a permutation of 1..{n}"
            )));
        }
    }
    Ok(())
}

/// Sorts strands by source and renumbers crossings by first appearance.
/// Crossings never encountered are dropped.
fn canonicalize(n: usize, mut strands: Vec<Strand>, crossings: Vec<Crossing>) -> StringLinkDiagram {
    strands.sort_by_key(|s| s.source);
    let mut relabel = vec![usize::MAX; crossings.len()];
    let mut table = Vec::with_capacity(crossings.len());
    for s in &mut strands {
        for e in &mut s.encounters {
            if relabel[e.crossing] == usize::MAX {
                relabel[e.crossing] = table.len();
                table.push(crossings[e.crossing]);
            }
            e.crossing = relabel[e.crossing];
        }
    }
    StringLinkDiagram {
        n,
        strands,
        crossings: table,
    }
}
