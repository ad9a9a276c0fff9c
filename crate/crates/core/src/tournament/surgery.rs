//! Removing and inserting teams, and the `md`/`me` set maps.

use std::fmt;

use super::family::MaximalCommutingFamily;
use crate::error::{Error, Result};
use crate::labels::LabelSet;

/// A vertical line segment of a bracket: above a team's leaf, or above the
/// output of a game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    Leaf(u32),
    Game(LabelSet),
}

impl Segment {
    /// Teams below the segment.
    pub fn below(self) -> LabelSet {
        match self {
            Segment::Leaf(t) => LabelSet::singleton(t),
            Segment::Game(m) => m,
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Segment::Leaf(t) => write!(f, "leaf {t}"),
            Segment::Game(m) => write!(f, "game {m}"),
        }
    }
}

/// Result of [`insert_team`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub family: MaximalCommutingFamily,
    /// The new game is also the opponent's first game.
    pub basic: bool,
    /// The opponent is the winner of the original tournament.
    pub top: bool,
}

/// All `2n - 1` segments: leaves in label order, then games in member order.
pub fn segments(family: &MaximalCommutingFamily) -> Vec<Segment> {
    let mut out: Vec<Segment> = family.labels().iter().map(Segment::Leaf).collect();
    out.extend(family.members().iter().map(|&m| Segment::Game(m)));
    out
}

/// Removes team `t` together with its first game.
pub fn delete_team(family: &MaximalCommutingFamily, t: u32) -> Result<(MaximalCommutingFamily, Segment)> {
    if !family.labels().contains(t) {
        return Err(Error::domain(format!("team {t} is not in {family}")));
    }
    if family.n() < 3 {
        return Err(Error::domain("cannot delete from a two-team tournament"));
    }
    let first = family.first_game(t).expect("every team plays");
    let opponent = first.without(t);
    let members: Vec<LabelSet> =
        family.members().iter().filter(|&&m| m != first).map(|&m| m.without(t)).collect();
    let segment = if opponent.len() == 1 { Segment::Leaf(opponent.min_label().unwrap()) } else { Segment::Game(opponent) };
    Ok((MaximalCommutingFamily::from_parts_unchecked(family.labels().without(t), members), segment))
}

/// Inserts a new team `t` whose first game is against the winner of the
/// segment's subtree.
pub fn insert_team(family: &MaximalCommutingFamily, t: u32, segment: Segment) -> Result<Insertion> {
    if family.labels().contains(t) {
        return Err(Error::domain(format!("team {t} is already in {family}")));
    }
    let below = segment.below();
    let valid = match segment {
        Segment::Leaf(j) => family.labels().contains(j),
        Segment::Game(m) => family.contains(m),
    };
    if !valid {
        return Err(Error::InvalidSegment(format!("{segment} is not a segment of {family}")));
    }
    let mut members: Vec<LabelSet> =
        family.members().iter().map(|&m| if m.is_proper_subset(below) || m.is_disjoint(below) || m == below { m } else { m.with(t) }).collect();
    members.push(below.with(t));
    Ok(Insertion {
        family: MaximalCommutingFamily::from_parts_unchecked(family.labels().with(t), members),
        basic: matches!(segment, Segment::Leaf(_)),
        top: below == family.labels(),
    })
}

/// `md_{i,J}(I)`: add `i` to `I` when `I ⊇ J`, remove it otherwise.
pub fn md_set(i: u32, j: LabelSet, set: LabelSet) -> LabelSet {
    if set.is_superset(j) {
        set.with(i)
    } else {
        set.without(i)
    }
}

/// `me_{i,J}(I)`: 1 when `i ∈ I ⊇ J`.
pub fn me_set(i: u32, j: LabelSet, set: LabelSet) -> u8 {
    u8::from(set.contains(i) && set.is_superset(j))
}

/// Where team 0 is re-inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum McVariant {
    /// Against the winner of a game.
    Member(LabelSet),
    /// Against a team in its first game.
    Team(u32),
    /// Against the overall winner of the others.
    Infinity,
}

impl McVariant {
    /// The set `K` with `md_{0,K}` describing the move.
    pub fn target(self, family: &MaximalCommutingFamily) -> LabelSet {
        match self {
            McVariant::Member(j) => j,
            McVariant::Team(j) => LabelSet::singleton(j),
            McVariant::Infinity => family.labels(),
        }
    }
}

/// Tournament obtained by deleting team 0 and re-inserting it as `variant`
/// says: the members `md_{0,K}(I)` together with `K ∖ {0}` and `K ∪ {0}`,
/// dropping anything of size below two.
pub fn mc_family_transform(family: &MaximalCommutingFamily, variant: McVariant) -> Result<MaximalCommutingFamily> {
    if !family.labels().contains(0) {
        return Err(Error::domain(format!("label 0 is missing from {family}")));
    }
    match variant {
        McVariant::Member(j) if !family.contains(j) => {
            return Err(Error::domain(format!("{j} is not a member of {family}")));
        }
        McVariant::Team(j) if j == 0 || !family.labels().contains(j) => {
            return Err(Error::domain(format!("{j} is not a team other than 0 of {family}")));
        }
        _ => {}
    }
    let k = variant.target(family);
    let mut members: Vec<LabelSet> = family.members().iter().map(|&m| md_set(0, k, m)).collect();
    members.push(k.without(0));
    members.push(k.with(0));
    members.retain(|m| m.len() >= 2);
    members.sort();
    members.dedup();
    MaximalCommutingFamily::new(family.labels(), members)
        .map_err(|e| Error::Internal(format!("transform of {family} by {variant:?}: {e}")))
}
