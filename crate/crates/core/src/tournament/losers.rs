use std::collections::BTreeMap;

use super::family::MaximalCommutingFamily;
use crate::error::{Error, Result};
use crate::labels::LabelSet;

/// The losing side of every game of a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoserMap {
    family: MaximalCommutingFamily,
    losers: BTreeMap<LabelSet, LabelSet>,
}

impl LoserMap {
    /// Validates that each losing side is one of the two parts of its game.
    pub fn new(family: MaximalCommutingFamily, losers: BTreeMap<LabelSet, LabelSet>) -> Result<Self> {
        for &m in family.members() {
            let side = losers.get(&m).ok_or_else(|| Error::domain(format!("no losing side for {m}")))?;
            let (a, b) = family.children(m);
            if *side != a && *side != b {
                return Err(Error::domain(format!("{side} is not a part of the game {m}")));
            }
        }
        if losers.len() != family.members().len() {
            return Err(Error::domain("losing sides given for non-members"));
        }
        Ok(LoserMap { family, losers })
    }

    /// The map consistent with `winner`: inside games the winner plays, the
    /// other side loses; elsewhere the part with the smaller minimum loses.
    pub fn canonical(family: &MaximalCommutingFamily, winner: u32) -> Result<Self> {
        if !family.labels().contains(winner) {
            return Err(Error::domain(format!("winner {winner} is not a label of {family}")));
        }
        let losers = family
            .members()
            .iter()
            .map(|&m| {
                let (a, b) = family.children(m);
                // Without the winner, the part with the smaller minimum (`a`) loses.
                let lose = if a.contains(winner) { b } else { a };
                (m, lose)
            })
            .collect();
        Ok(LoserMap { family: family.clone(), losers })
    }

    pub fn family(&self) -> &MaximalCommutingFamily {
        &self.family
    }

    /// Losing side of `member`.
    pub fn loser(&self, member: LabelSet) -> LabelSet {
        self.losers[&member]
    }

    /// Winning side of `member`.
    pub fn winner_side(&self, member: LabelSet) -> LabelSet {
        member - self.loser(member)
    }

    /// The two teams playing the game `member`.
    pub fn players(&self, member: LabelSet) -> LabelSet {
        let eliminated = self
            .family
            .members()
            .iter()
            .filter(|m| m.is_proper_subset(member))
            .fold(LabelSet::EMPTY, |acc, &m| acc | self.loser(m));
        member - eliminated
    }

    /// `(player from the losing side, player from the winning side)`.
    pub fn player_pair(&self, member: LabelSet) -> (u32, u32) {
        let p = self.players(member);
        let lose = (p & self.loser(member)).min_label().expect("one player on each side");
        let win = (p - self.loser(member)).min_label().expect("one player on each side");
        (lose, win)
    }

    /// The team eliminated in `member`.
    pub fn losing_team(&self, member: LabelSet) -> u32 {
        self.player_pair(member).0
    }

    /// The team that never loses.
    pub fn winner(&self) -> u32 {
        let lost = self.losers.values().fold(LabelSet::EMPTY, |a, &b| a | b);
        (self.family.labels() - lost).min_label().expect("exactly one team never loses")
    }
}
