use std::collections::BTreeMap;

use super::family::{enumerate_families, MaximalCommutingFamily};
use crate::error::{Error, Result};
use crate::labels::LabelSet;

/// A tournament structure over moving labels `L` and fixed labels `L'`: the
/// moving labels are split into blocks `S_j`, one per fixed label `j`, and
/// each `S_j ∪ {j}` carries its own family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairedFamily {
    moving: LabelSet,
    fixed: LabelSet,
    parts: BTreeMap<u32, LabelSet>,
    subfamilies: BTreeMap<u32, Option<MaximalCommutingFamily>>,
}

impl PairedFamily {
    pub fn moving(&self) -> LabelSet {
        self.moving
    }

    pub fn fixed(&self) -> LabelSet {
        self.fixed
    }

    /// The block `S_j` attached to fixed label `j`.
    pub fn part(&self, j: u32) -> LabelSet {
        self.parts[&j]
    }

    /// The family on `S_j ∪ {j}`; `None` when `S_j` is empty.
    pub fn subfamily(&self, j: u32) -> Option<&MaximalCommutingFamily> {
        self.subfamilies[&j].as_ref()
    }

    /// Sizes of the non-empty blocks, descending.
    pub fn shape(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.parts.values().map(|p| p.len()).filter(|&k| k > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The chain `Ŝ_2 ⊂ … ⊂ Ŝ_m` over the fixed labels in ascending order.
    pub fn hat_sets(&self) -> Vec<LabelSet> {
        let mut acc = LabelSet::EMPTY;
        let mut out = Vec::new();
        for (k, j) in self.fixed.iter().enumerate() {
            acc = acc | self.parts[&j].with(j);
            if k >= 1 {
                out.push(acc);
            }
        }
        out
    }
}

/// Every paired family over `moving` and `fixed`.
pub fn enumerate_paired_families(moving: LabelSet, fixed: LabelSet) -> Result<Vec<PairedFamily>> {
    if moving.is_empty() || fixed.is_empty() || !moving.is_disjoint(fixed) {
        return Err(Error::domain("moving and fixed labels must be non-empty and disjoint"));
    }
    let targets = fixed.to_vec();
    let sources = moving.to_vec();
    let mut out = Vec::new();
    let mut choice = vec![0usize; sources.len()];
    loop {
        let mut parts: BTreeMap<u32, LabelSet> = targets.iter().map(|&j| (j, LabelSet::EMPTY)).collect();
        for (s, &c) in sources.iter().zip(&choice) {
            let p = parts.get_mut(&targets[c]).unwrap();
            *p = p.with(*s);
        }
        let mut options: Vec<(u32, Vec<Option<MaximalCommutingFamily>>)> = Vec::new();
        for (&j, &p) in &parts {
            let fams = if p.is_empty() { vec![None] } else { enumerate_families(p.with(j))?.into_iter().map(Some).collect() };
            options.push((j, fams));
        }
        let mut idx = vec![0usize; options.len()];
        loop {
            let subfamilies = options.iter().zip(&idx).map(|((j, f), &i)| (*j, f[i].clone())).collect();
            out.push(PairedFamily { moving, fixed, parts: parts.clone(), subfamilies });
            if !advance(&mut idx, |k| options[k].1.len()) {
                break;
            }
        }
        if !advance(&mut choice, |_| targets.len()) {
            break;
        }
    }
    Ok(out)
}

/// Odometer increment; false once every digit has wrapped.
fn advance(digits: &mut [usize], base: impl Fn(usize) -> usize) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < base(k) {
            return true;
        }
        digits[k] = 0;
    }
    false
}

/// Members of all subfamilies together with the hat sets, as one family on
/// `L ∪ L'`.
pub fn hat_family(p: &PairedFamily) -> Result<MaximalCommutingFamily> {
    let mut members: Vec<LabelSet> = p.subfamilies.values().flatten().flat_map(|f| f.members().to_vec()).collect();
    members.extend(p.hat_sets());
    MaximalCommutingFamily::new(p.moving | p.fixed, members)
        .map_err(|e| Error::Internal(format!("hat family is not maximal commuting: {e}")))
}
