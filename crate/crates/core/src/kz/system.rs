use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::labels::{ExtendedSet, LabelSet};
use crate::linalg::{Rational, RationalMatrix};

/// A KZ-type system `du = Σ A_ij dlog(x_i - x_j) u` on the labels `0..n`,
/// stored as one residue matrix per unordered pair.
#[derive(Clone, PartialEq, Eq)]
pub struct KzSystem {
    n: usize,
    rank: usize,
    residues: BTreeMap<(u32, u32), RationalMatrix>,
}

/// A bracket condition that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `[A_ij, A_kl] != 0` for disjoint pairs.
    Disjoint([u32; 2], [u32; 2]),
    /// `[A_ij, A_ik + A_jk] != 0`, with `k` the third label.
    Triple { pair: [u32; 2], third: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Disjoint([i, j], [k, l]) => write!(f, "[A_{{{i},{j}}}, A_{{{k},{l}}}] != 0"),
            Violation::Triple { pair: [i, j], third: k } => {
                write!(f, "[A_{{{i},{j}}}, A_{{{i},{k}}} + A_{{{j},{k}}}] != 0 (triple {{{i},{j},{k}}})")
            }
        }
    }
}

fn key(i: u32, j: u32) -> (u32, u32) {
    (i.min(j), i.max(j))
}

impl KzSystem {
    /// Builds a system and checks integrability. Pairs left out are zero.
    pub fn new(n: usize, rank: usize, residues: impl IntoIterator<Item = ((u32, u32), RationalMatrix)>) -> Result<Self> {
        let system = Self::unchecked(n, rank, residues)?;
        let bad = system.integrability_violations();
        if let Some(v) = bad.first() {
            return Err(Error::Integrability(format!("{v} ({} violation(s) in total)", bad.len())));
        }
        Ok(system)
    }

    /// Validates shapes only; meant for building non-integrable inputs.
    pub fn unchecked(n: usize, rank: usize, residues: impl IntoIterator<Item = ((u32, u32), RationalMatrix)>) -> Result<Self> {
        if n < 2 || rank == 0 {
            return Err(Error::domain(format!("need n >= 2 and rank >= 1, got n = {n}, rank = {rank}")));
        }
        let mut map = BTreeMap::new();
        for ((i, j), m) in residues {
            if i == j || i as usize >= n || j as usize >= n {
                return Err(Error::domain(format!("invalid pair ({i},{j}) for n = {n}")));
            }
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::Dimension(format!("A_{{{i},{j}}} is {}x{}, expected {rank}x{rank}", m.rows(), m.cols())));
            }
            if map.insert(key(i, j), m).is_some() {
                return Err(Error::domain(format!("pair ({i},{j}) given twice")));
            }
        }
        for (i, j) in pairs(LabelSet::range(n as u32)) {
            map.entry((i, j)).or_insert_with(|| RationalMatrix::zeros(rank, rank));
        }
        Ok(KzSystem { n, rank, residues: map })
    }

    /// Rank-one system with the given scalar residues.
    pub fn scalar(n: usize, values: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Result<Self> {
        Self::new(n, 1, values.into_iter().map(|(p, v)| (p, RationalMatrix::scalar(1, v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> LabelSet {
        LabelSet::range(self.n as u32)
    }

    /// `A_ij`; panics if the pair is not valid.
    pub fn pair(&self, i: u32, j: u32) -> &RationalMatrix {
        &self.residues[&key(i, j)]
    }

    /// All stored pairs `(i, j)` with `i < j`.
    pub fn residues(&self) -> impl Iterator<Item = ((u32, u32), &RationalMatrix)> {
        self.residues.iter().map(|(&k, m)| (k, m))
    }

    fn check_subset(&self, set: LabelSet) -> Result<()> {
        if !set.is_subset(self.labels()) {
            return Err(Error::domain(format!("{set} is not a subset of the labels 0..{}", self.n)));
        }
        Ok(())
    }

    /// `A_I`, the sum of `A_pq` over pairs inside `set`.
    pub fn residue(&self, set: LabelSet) -> Result<RationalMatrix> {
        self.check_subset(set)?;
        Ok(self.residue_unchecked(set))
    }

    pub(crate) fn residue_unchecked(&self, set: LabelSet) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.rank, self.rank);
        for (p, q) in pairs(set) {
            acc = &acc + self.pair(p, q);
        }
        acc
    }

    /// `A_{i∞} = -Σ_ν A_iν`.
    pub fn infinity_residue(&self, i: u32) -> Result<RationalMatrix> {
        self.check_subset(LabelSet::singleton(i))?;
        let mut acc = RationalMatrix::zeros(self.rank, self.rank);
        for v in self.labels().without(i).iter() {
            acc = &acc - self.pair(i, v);
        }
        Ok(acc)
    }

    /// `A_I` for a set that may contain `∞`: pairs inside the finite part plus
    /// `A_{p∞}` for each finite `p`.
    pub fn residue_extended(&self, set: &ExtendedSet) -> Result<RationalMatrix> {
        let mut acc = self.residue(set.finite)?;
        if set.infinity {
            for p in set.finite.iter() {
                acc = &acc + &self.infinity_residue(p)?;
            }
        }
        Ok(acc)
    }

    /// Every failing bracket condition, in a fixed order.
    pub fn integrability_violations(&self) -> Vec<Violation> {
        let n = self.n as u32;
        let mut out = Vec::new();
        let all: Vec<(u32, u32)> = self.residues.keys().copied().collect();
        for (a, &(i, j)) in all.iter().enumerate() {
            for &(k, l) in &all[a + 1..] {
                if i != k && i != l && j != k && j != l && !self.pair(i, j).commutes_with(self.pair(k, l)) {
                    out.push(Violation::Disjoint([i, j], [k, l]));
                }
            }
        }
        for &(i, j) in &all {
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                let sum = self.pair(i, k) + self.pair(j, k);
                if !self.pair(i, j).commutes_with(&sum) {
                    out.push(Violation::Triple { pair: [i, j], third: k });
                }
            }
        }
        out
    }

    pub fn is_integrable(&self) -> bool {
        self.integrability_violations().is_empty()
    }

    /// The scalar `κ` with `A_{L_n} = κ`, or `None` when `A_{L_n}` is not scalar.
    pub fn kappa(&self) -> Option<Rational> {
        self.residue_unchecked(self.labels()).as_scalar()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.residue_unchecked(self.labels()).is_zero()
    }

    /// Shifts `A_pq` by `λ`.
    pub fn addition(&self, p: u32, q: u32, lambda: &Rational) -> Result<Self> {
        if p == q || p as usize >= self.n || q as usize >= self.n {
            return Err(Error::domain(format!("invalid pair ({p},{q}) for n = {}", self.n)));
        }
        let mut out = self.clone();
        let m = out.residues.get_mut(&key(p, q)).expect("all pairs stored");
        *m = m.shift(lambda);
        Ok(out)
    }

    /// Addition on `(0, 1)` making the system homogeneous.
    pub fn homogenize(&self) -> Result<Self> {
        let kappa = self.kappa().ok_or_else(|| Error::domain("A_{L_n} is not scalar"))?;
        self.addition(0, 1, &-kappa)
    }

    /// Relabels: the new system has `A'_{σ(i)σ(j)} = A_ij`, with `sigma[i] = σ(i)`.
    pub fn permute(&self, sigma: &[u32]) -> Result<Self> {
        let mut seen = LabelSet::EMPTY;
        for &s in sigma {
            seen = seen.with(s);
        }
        if sigma.len() != self.n || seen != self.labels() {
            return Err(Error::domain(format!("{sigma:?} is not a permutation of 0..{}", self.n)));
        }
        let residues = self.residues.iter().map(|(&(i, j), m)| (key(sigma[i as usize], sigma[j as usize]), m.clone()));
        Ok(KzSystem { n: self.n, rank: self.rank, residues: residues.collect() })
    }

    /// The transposition of `a` and `b` as a permutation slice.
    pub fn transposition(n: usize, a: u32, b: u32) -> Vec<u32> {
        (0..n as u32).map(|i| if i == a { b } else if i == b { a } else { i }).collect()
    }

    /// `μ_i` when every `A_{i∞}` is scalar, i.e. `∞` is pseudo-singular.
    pub fn pseudo_singular_infinity(&self) -> Option<Vec<Rational>> {
        (0..self.n as u32).map(|i| self.infinity_residue(i).expect("valid label").as_scalar()).collect()
    }

    /// Additions `(0,1,λ)`, `(0,2,λ)`, `(1,2,-λ)`. They leave every `A_{i∞}`
    /// with `i > 0` unchanged and shift `A_{0∞}` by `-2λ`.
    pub fn infinity_shift(&self, lambda: &Rational) -> Result<Self> {
        if self.n < 3 {
            return Err(Error::domain("the shift at infinity needs n >= 3"));
        }
        self.addition(0, 1, lambda)?.addition(0, 2, lambda)?.addition(1, 2, &-lambda.clone())
    }
}

impl fmt::Debug for KzSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "KzSystem(n = {}, rank = {})", self.n, self.rank)?;
        for ((i, j), m) in &self.residues {
            writeln!(f, "A_{{{i},{j}}} =\n{m}")?;
        }
        Ok(())
    }
}

/// Pairs `(p, q)`, `p < q`, inside `set`.
pub fn pairs(set: LabelSet) -> Vec<(u32, u32)> {
    let v = set.to_vec();
    let mut out = Vec::with_capacity(v.len() * v.len().saturating_sub(1) / 2);
    for (a, &p) in v.iter().enumerate() {
        for &q in &v[a + 1..] {
            out.push((p, q));
        }
    }
    out
}
