use crate::error::{Error, Result};
use crate::kz::KzSystem;
use crate::labels::LabelSet;
use crate::linalg::{Rational, RationalMatrix};

/// The convolution `~M` of a system in the variable `x_0`: matrices of size
/// `(n-1)N`, with slot `j` (for `j = 1..n`) occupying block `j - 1`.
#[derive(Clone, Debug)]
pub struct ConvolvedSystem {
    source: KzSystem,
    mu: Rational,
    lifted: KzSystem,
}

pub fn convolve(system: &KzSystem, mu: &Rational) -> Result<ConvolvedSystem> {
    let n = system.n();
    let rank = system.rank();
    let big = (n - 1) * rank;
    let zero = RationalMatrix::zeros(rank, rank);
    let mut residues = Vec::new();
    for k in 1..n as u32 {
        let mut m = RationalMatrix::zeros(big, big);
        for j in 1..n as u32 {
            let block = if j == k { system.pair(0, j).shift(mu) } else { system.pair(0, j).clone() };
            m.set_block(k as usize - 1, j as usize - 1, &block);
        }
        residues.push(((0, k), m));
    }
    for i in 1..n as u32 {
        for j in i + 1..n as u32 {
            let aij = system.pair(i, j);
            let mut m = RationalMatrix::zeros(big, big);
            for s in 0..n - 1 {
                m.set_block(s, s, aij);
            }
            let (bi, bj) = (i as usize - 1, j as usize - 1);
            m.set_block(bi, bi, &(aij + system.pair(0, j)));
            m.set_block(bi, bj, &(&zero - system.pair(0, j)));
            m.set_block(bj, bi, &(&zero - system.pair(0, i)));
            m.set_block(bj, bj, &(aij + system.pair(0, i)));
            residues.push(((i, j), m));
        }
    }
    let lifted = KzSystem::unchecked(n, big, residues)?;
    if !lifted.is_integrable() {
        let v = &lifted.integrability_violations()[0];
        return Err(Error::TheoremViolation(format!("convolution of an integrable system fails {v}")));
    }
    Ok(ConvolvedSystem { source: system.clone(), mu: mu.clone(), lifted })
}

impl ConvolvedSystem {
    pub fn source(&self) -> &KzSystem {
        &self.source
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    /// The lifted matrices as a system of rank `(n-1)N`.
    pub fn system(&self) -> &KzSystem {
        &self.lifted
    }

    pub fn dim(&self) -> usize {
        self.lifted.rank()
    }

    /// `~A_I`.
    pub fn tilde_a(&self, set: LabelSet) -> Result<RationalMatrix> {
        self.lifted.residue(set)
    }

    /// `~A_{0∞} = -Σ_ν ~A_0ν`.
    pub fn tilde_a_zero_infinity(&self) -> RationalMatrix {
        self.lifted.infinity_residue(0).expect("0 is a label")
    }

    /// `ι_S(v)`: `v` copied into every slot `j ∈ slots`.
    pub fn embed(&self, slots: LabelSet, v: &[Rational]) -> Vec<Rational> {
        let rank = self.source.rank();
        let mut out = vec![crate::linalg::rational::zero(); self.dim()];
        for j in slots.iter().filter(|&j| j >= 1) {
            let start = (j as usize - 1) * rank;
            out[start..start + rank].clone_from_slice(v);
        }
        out
    }
}
