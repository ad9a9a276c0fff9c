use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::labels::{parse_set_list, LabelSet};

/// A single-elimination tournament, encoded as the set of its games: a
/// maximal collection of subsets of the teams, each of size at least two,
/// pairwise disjoint or nested.
///
/// Members are kept in canonical order (larger first, then lexicographic),
/// so the first member is always the full label set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaximalCommutingFamily {
    members: Vec<LabelSet>,
    labels: LabelSet,
}

impl MaximalCommutingFamily {
    pub fn new(labels: LabelSet, members: impl IntoIterator<Item = LabelSet>) -> Result<Self> {
        let mut members: Vec<LabelSet> = members.into_iter().collect();
        members.sort();
        members.dedup();
        if labels.len() < 2 {
            return Err(Error::domain("a family needs at least two labels"));
        }
        for m in &members {
            if m.len() < 2 || !m.is_subset(labels) {
                return Err(Error::domain(format!("{m} is not a subset of {labels} of size at least 2")));
            }
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if !a.commutes_with(*b) {
                    return Err(Error::domain(format!("{a} and {b} overlap without nesting")));
                }
            }
        }
        if members.first() != Some(&labels) {
            return Err(Error::domain(format!("the full set {labels} must be a member")));
        }
        if members.len() != labels.len() - 1 {
            return Err(Error::domain(format!(
                "{} members over {} labels; a maximal family has {}",
                members.len(),
                labels.len(),
                labels.len() - 1
            )));
        }
        Ok(MaximalCommutingFamily { members, labels })
    }

    /// Built from already validated parts.
    pub(crate) fn from_parts_unchecked(labels: LabelSet, mut members: Vec<LabelSet>) -> Self {
        members.sort();
        MaximalCommutingFamily { members, labels }
    }

    /// Parses the text grammar over a known label set. The full set may be
    /// omitted from the text.
    pub fn parse(text: &str, labels: LabelSet) -> Result<Self> {
        let mut sets = parse_set_list(text)?;
        if !sets.contains(&labels) {
            sets.push(labels);
        }
        Self::new(labels, sets)
    }

    /// Parses the full (non-shortened) grammar; the labels are the union.
    pub fn parse_full(text: &str) -> Result<Self> {
        let sets = parse_set_list(text)?;
        let labels = sets.iter().fold(LabelSet::EMPTY, |a, &b| a | b);
        Self::new(labels, sets)
    }

    pub fn labels(&self) -> LabelSet {
        self.labels
    }

    /// Number of teams.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[LabelSet] {
        &self.members
    }

    pub fn contains(&self, set: LabelSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    /// Members or singletons.
    pub fn contains_extended(&self, set: LabelSet) -> bool {
        (set.len() == 1 && set.is_subset(self.labels)) || self.contains(set)
    }

    /// The two parts of the splitting of `member` into members or singletons,
    /// ordered by their minimum label.
    pub fn children(&self, member: LabelSet) -> (LabelSet, LabelSet) {
        let inner: Vec<LabelSet> = self.members.iter().copied().filter(|m| m.is_proper_subset(member)).collect();
        let mut parts: Vec<LabelSet> =
            inner.iter().copied().filter(|m| !inner.iter().any(|k| m.is_proper_subset(*k))).collect();
        let covered = parts.iter().fold(LabelSet::EMPTY, |a, &b| a | b);
        parts.extend((member - covered).iter().map(LabelSet::singleton));
        assert_eq!(parts.len(), 2, "{member} does not split into two parts in {self}");
        parts.sort_by_key(|p| p.min_label());
        (parts[0], parts[1])
    }

    /// The smallest member containing `team` (its first game).
    pub fn first_game(&self, team: u32) -> Option<LabelSet> {
        self.members.iter().rev().copied().filter(|m| m.contains(team)).min_by_key(|m| m.len())
    }

    /// Renames labels through `map`.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        let f = |s: LabelSet| -> Result<LabelSet> {
            s.iter()
                .map(|i| map.get(&i).copied().ok_or_else(|| Error::domain(format!("label {i} is not mapped"))))
                .collect()
        };
        let labels = f(self.labels)?;
        if labels.len() != self.labels.len() {
            return Err(Error::domain("relabelling is not injective"));
        }
        let members = self.members.iter().map(|&m| f(m)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts_unchecked(labels, members))
    }

    /// Relabels onto `0..n` preserving order; returns the map used.
    pub fn normalize(&self) -> (Self, BTreeMap<u32, u32>) {
        let map: BTreeMap<u32, u32> = self.labels.iter().zip(0..).collect();
        (self.relabel(&map).expect("order-preserving map is total"), map)
    }

    /// Text form; `shortened` omits the full set.
    pub fn serialize(&self, shortened: bool) -> String {
        let skip = usize::from(shortened);
        self.members[skip..].iter().map(|m| m.to_string()).collect::<Vec<_>>().join(";")
    }
}

impl fmt::Display for MaximalCommutingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize(false))
    }
}

impl fmt::Debug for MaximalCommutingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(commuting, maximal)` for a collection of subsets of `labels`.
pub fn is_maximal_commuting(sets: &[LabelSet], labels: LabelSet) -> (bool, bool) {
    let mut sets = sets.to_vec();
    sets.sort();
    sets.dedup();
    let commuting = sets.iter().all(|s| s.len() >= 2 && s.is_subset(labels))
        && sets.iter().enumerate().all(|(i, a)| sets[i + 1..].iter().all(|b| a.commutes_with(*b)));
    if !commuting {
        return (false, false);
    }
    let maximal = if labels.len() <= 20 {
        !labels.subsets().any(|s| s.len() >= 2 && !sets.contains(&s) && sets.iter().all(|m| m.commutes_with(s)))
    } else {
        // A commuting family over L has at most |L|-1 members, with equality
        // exactly when it is maximal.
        sets.len() + 1 == labels.len()
    };
    (true, maximal)
}

/// All maximal commuting families over `labels`, in canonical order.
pub fn enumerate_families(labels: LabelSet) -> Result<Vec<MaximalCommutingFamily>> {
    if labels.len() < 2 {
        return Err(Error::domain("enumeration needs at least two labels"));
    }
    let mut out: Vec<MaximalCommutingFamily> = member_lists(labels)
        .into_iter()
        .map(|members| MaximalCommutingFamily::from_parts_unchecked(labels, members))
        .collect();
    out.sort();
    Ok(out)
}

/// Member lists of every family over `set` (empty list for a singleton).
fn member_lists(set: LabelSet) -> Vec<Vec<LabelSet>> {
    if set.len() <= 1 {
        return vec![Vec::new()];
    }
    let anchor = LabelSet::singleton(set.min_label().unwrap());
    let rest = set - anchor;
    let mut out = Vec::new();
    for extra in rest.subsets() {
        if extra == rest {
            continue;
        }
        let left = anchor | extra;
        let right = set - left;
        let lf = member_lists(left);
        let rf = member_lists(right);
        for a in &lf {
            for b in &rf {
                let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                m.push(set);
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> LabelSet {
        v.iter().copied().collect()
    }

    #[test]
    fn three_teams() {
        let fams = enumerate_families(s(&[0, 1, 2])).unwrap();
        let short: Vec<String> = fams.iter().map(|f| f.serialize(true)).collect();
        assert_eq!(short, vec!["{0,1}", "{0,2}", "{1,2}"]);
        assert_eq!(enumerate_families(s(&[0, 1])).unwrap().len(), 1);
        assert!(enumerate_families(s(&[0])).is_err());
    }

    #[test]
    fn maximality_checks() {
        let l4 = LabelSet::range(4);
        assert_eq!(is_maximal_commuting(&[s(&[0, 1]), l4, s(&[2, 3])], l4), (true, true));
        assert_eq!(is_maximal_commuting(&[s(&[0, 1]), s(&[1, 2])], s(&[0, 1, 2])), (false, false));
        assert_eq!(is_maximal_commuting(&[s(&[0, 1])], l4), (true, false));
    }

    #[test]
    fn parse_accepts_shortened() {
        let l4 = LabelSet::range(4);
        let f = MaximalCommutingFamily::parse("{0,1};{2,3}", l4).unwrap();
        assert_eq!(f.to_string(), "{0,1,2,3};{0,1};{2,3}");
        assert_eq!(f.serialize(true), "{0,1};{2,3}");
        assert_eq!(MaximalCommutingFamily::parse_full("{0,1};{0,1,2,3};{2,3}").unwrap(), f);
        assert!(MaximalCommutingFamily::parse("{0,1}", l4).is_err());
    }

    #[test]
    fn children_split_in_two() {
        let f = MaximalCommutingFamily::parse_full("{0,1};{2,3};{0,1,2,3};{0,1,2,3,4}").unwrap();
        assert_eq!(f.children(LabelSet::range(5)), (s(&[0, 1, 2, 3]), s(&[4])));
        assert_eq!(f.children(s(&[2, 3])), (s(&[2]), s(&[3])));
        assert_eq!(f.first_game(3), Some(s(&[2, 3])));
        assert_eq!(f.first_game(4), Some(LabelSet::range(5)));
    }

    #[test]
    fn normalize_relabels() {
        let f = MaximalCommutingFamily::parse_full("{3,7};{3,7,9}").unwrap();
        let (g, map) = f.normalize();
        assert_eq!(g.to_string(), "{0,1,2};{0,1}");
        assert_eq!(map[&9], 2);
    }
}
