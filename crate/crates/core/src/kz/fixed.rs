//! Systems with fixed singular points `y_q`, labelled `n..n+m` after the
//! moving coordinates.

use std::collections::BTreeMap;

use super::system::KzSystem;
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::linalg::RationalMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointSystem {
    base: KzSystem,
    m: usize,
    /// `(i, q) -> B_iq` with `q` a fixed label.
    extra: BTreeMap<(u32, u32), RationalMatrix>,
}

impl FixedPointSystem {
    /// Missing `B_iq` are zero. Checks the extended bracket relations.
    pub fn new(base: KzSystem, m: usize, extra: impl IntoIterator<Item = ((u32, u32), RationalMatrix)>) -> Result<Self> {
        let n = base.n() as u32;
        let rank = base.rank();
        let mut map = BTreeMap::new();
        for ((i, q), b) in extra {
            if i >= n || q < n || q >= n + m as u32 {
                return Err(Error::domain(format!("B_({i},{q}) needs a moving label below {n} and a fixed label in {n}..{}", n + m as u32)));
            }
            if b.rows() != rank || b.cols() != rank {
                return Err(Error::Dimension(format!("B_({i},{q}) is {}x{}, expected {rank}x{rank}", b.rows(), b.cols())));
            }
            if map.insert((i, q), b).is_some() {
                return Err(Error::domain(format!("B_({i},{q}) given twice")));
            }
        }
        for i in 0..n {
            for q in n..n + m as u32 {
                map.entry((i, q)).or_insert_with(|| RationalMatrix::zeros(rank, rank));
            }
        }
        let fps = FixedPointSystem { base, m, extra: map };
        if let Some(v) = fps.violations().first() {
            return Err(Error::Integrability(v.clone()));
        }
        Ok(fps)
    }

    pub fn base(&self) -> &KzSystem {
        &self.base
    }

    pub fn fixed_count(&self) -> usize {
        self.m
    }

    pub fn fixed_labels(&self) -> LabelSet {
        let n = self.base.n();
        (n as u32..(n + self.m) as u32).collect()
    }

    pub fn coupling(&self, i: u32, q: u32) -> &RationalMatrix {
        &self.extra[&(i, q)]
    }

    /// Failing relations among the moving-moving and moving-fixed residues.
    /// `[B_iq, B_iq']` is not required to vanish.
    pub fn violations(&self) -> Vec<String> {
        let mut out: Vec<String> = self.base.integrability_violations().iter().map(|v| v.to_string()).collect();
        let n = self.base.n() as u32;
        let fixed = self.fixed_labels().to_vec();
        let a = |i: u32, j: u32| self.base.pair(i, j);
        let b = |i: u32, q: u32| self.coupling(i, q);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for (x, &q) in fixed.iter().enumerate() {
                    for &r in &fixed[x + 1..] {
                        if !b(i, q).commutes_with(b(j, r)) {
                            out.push(format!("[B_({i},{q}), B_({j},{r})] != 0"));
                        }
                    }
                    for k in 0..n {
                        if k != i && k != j && i < j && !a(i, j).commutes_with(b(k, q)) {
                            out.push(format!("[A_{{{i},{j}}}, B_({k},{q})] != 0"));
                        }
                    }
                    if i < j && !a(i, j).commutes_with(&(b(i, q) + b(j, q))) {
                        out.push(format!("[A_{{{i},{j}}}, B_({i},{q}) + B_({j},{q})] != 0"));
                    }
                    if !b(i, q).commutes_with(&(a(i, j) + b(j, q))) {
                        out.push(format!("[B_({i},{q}), A_{{{i},{j}}} + B_({j},{q})] != 0"));
                    }
                }
            }
        }
        out
    }

    /// `A_{I;Q}`: pairs inside `moving` plus `B_iq` for `i ∈ moving`, `q ∈ fixed`.
    pub fn residue(&self, moving: LabelSet, fixed: LabelSet) -> Result<RationalMatrix> {
        if !moving.is_subset(self.base.labels()) || !fixed.is_subset(self.fixed_labels()) {
            return Err(Error::domain(format!("({moving}; {fixed}) is not a pair of moving and fixed label sets")));
        }
        let mut acc = self.base.residue(moving)?;
        for i in moving.iter() {
            for q in fixed.iter() {
                acc = &acc + self.coupling(i, q);
            }
        }
        Ok(acc)
    }

    /// The system on `n + m` labels with the fixed points as frozen
    /// coordinates and zero residues between them. It need not be integrable.
    pub fn embedded(&self) -> KzSystem {
        let mut all: Vec<((u32, u32), RationalMatrix)> = self.base.residues().map(|(k, m)| (k, m.clone())).collect();
        all.extend(self.extra.iter().map(|(&k, m)| (k, m.clone())));
        KzSystem::unchecked(self.base.n() + self.m, self.base.rank(), all).expect("shapes already validated")
    }
}
