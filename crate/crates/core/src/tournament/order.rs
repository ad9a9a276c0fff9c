use super::family::MaximalCommutingFamily;
use crate::error::{Error, Result};
use crate::labels::LabelSet;

/// A family with the member order used by the triangularization: the chain
/// of games played by team 0, each followed by the games on the side it beat.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedFamily {
    family: MaximalCommutingFamily,
    order: Vec<LabelSet>,
    chain: Vec<LabelSet>,
    groups: Vec<Vec<LabelSet>>,
}

impl OrderedFamily {
    pub fn family(&self) -> &MaximalCommutingFamily {
        &self.family
    }

    /// Members `I^(1) .. I^(n-1)`.
    pub fn order(&self) -> &[LabelSet] {
        &self.order
    }

    /// Members containing 0, ascending.
    pub fn chain(&self) -> &[LabelSet] {
        &self.chain
    }

    /// `groups[k]` are the members inside `chain[k] ∖ chain[k-1]`.
    pub fn groups(&self) -> &[Vec<LabelSet>] {
        &self.groups
    }

    /// Zero-based position of `member` in the order.
    pub fn position(&self, member: LabelSet) -> Option<usize> {
        self.order.iter().position(|&m| m == member)
    }
}

pub fn canonical_order(family: &MaximalCommutingFamily) -> Result<OrderedFamily> {
    if !family.labels().contains(0) {
        return Err(Error::domain(format!("label 0 is missing from {family}; relabel first")));
    }
    let mut chain: Vec<LabelSet> = family.members().iter().copied().filter(|m| m.contains(0)).collect();
    chain.sort_by_key(|m| m.len());
    let mut order = Vec::with_capacity(family.members().len());
    let mut groups = Vec::with_capacity(chain.len());
    let mut prev = LabelSet::singleton(0);
    for &link in &chain {
        let region = link - prev;
        let mut group = Vec::new();
        preorder(family, region, &mut group);
        order.push(link);
        order.extend_from_slice(&group);
        groups.push(group);
        prev = link;
    }
    Ok(OrderedFamily { family: family.clone(), order, chain, groups })
}

/// Members inside `region` (itself included if a member), supersets first,
/// siblings by smaller minimum.
fn preorder(family: &MaximalCommutingFamily, region: LabelSet, out: &mut Vec<LabelSet>) {
    if region.len() < 2 {
        return;
    }
    debug_assert!(family.contains(region));
    out.push(region);
    let (a, b) = family.children(region);
    preorder(family, a, out);
    preorder(family, b, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> LabelSet {
        v.iter().copied().collect()
    }

    #[test]
    fn case_four_order() {
        let f = MaximalCommutingFamily::parse_full("{0,1};{0,1,2,3};{2,3}").unwrap();
        let o = canonical_order(&f).unwrap();
        assert_eq!(o.order(), &[s(&[0, 1]), s(&[0, 1, 2, 3]), s(&[2, 3])]);
    }

    #[test]
    fn eleven_team_order() {
        let f = MaximalCommutingFamily::parse(
            "{0,5,6};{5,6};{0,1,2,3,4,5,6};{1,2,3,4};{1,2};{3,4};{7,8,9,10};{7,8};{9,10}",
            LabelSet::range(11),
        )
        .unwrap();
        let o = canonical_order(&f).unwrap();
        let expect = vec![
            s(&[0, 5, 6]),
            s(&[5, 6]),
            s(&[0, 1, 2, 3, 4, 5, 6]),
            s(&[1, 2, 3, 4]),
            s(&[1, 2]),
            s(&[3, 4]),
            LabelSet::range(11),
            s(&[7, 8, 9, 10]),
            s(&[7, 8]),
            s(&[9, 10]),
        ];
        assert_eq!(o.order(), expect.as_slice());
        assert_eq!(o.chain().len(), 3);
    }

    #[test]
    fn requires_label_zero() {
        let f = MaximalCommutingFamily::parse_full("{1,2}").unwrap();
        assert!(canonical_order(&f).is_err());
        let g = MaximalCommutingFamily::parse_full("{0,1}").unwrap();
        assert_eq!(canonical_order(&g).unwrap().order(), &[s(&[0, 1])]);
    }
}
