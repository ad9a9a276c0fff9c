use super::convolution::{convolve, ConvolvedSystem};
use crate::error::{Error, Result};
use crate::kz::KzSystem;
use crate::labels::LabelSet;
use crate::linalg::{kernel_basis, quotient, Rational, Subspace};

/// The invariant subspaces removed by the middle convolution.
#[derive(Clone, Debug)]
pub struct KernelData {
    /// `slots[j-1] = ι_j(ker A_0j)`.
    pub slots: Vec<Subspace>,
    /// `ker ~A_{0∞}`.
    pub infinity: Subspace,
    pub total: Subspace,
}

impl KernelData {
    pub fn slot(&self, j: u32) -> &Subspace {
        &self.slots[j as usize - 1]
    }

    pub fn is_direct(&self) -> bool {
        self.total.dim() == self.infinity.dim() + self.slots.iter().map(Subspace::dim).sum::<usize>()
    }
}

pub fn kernels(conv: &ConvolvedSystem) -> KernelData {
    let source = conv.source();
    let mut slots = Vec::with_capacity(source.n() - 1);
    let mut total = Subspace::zero(conv.dim());
    for j in 1..source.n() as u32 {
        let k = kernel_basis(source.pair(0, j));
        let vecs: Vec<Vec<Rational>> = k.basis().iter().map(|v| conv.embed(LabelSet::singleton(j), v)).collect();
        let s = Subspace::span(conv.dim(), &vecs);
        total = total.sum(&s);
        slots.push(s);
    }
    let infinity = kernel_basis(&conv.tilde_a_zero_infinity());
    total = total.sum(&infinity);
    KernelData { slots, infinity, total }
}

/// `mc_{x_0,μ}`: the convolution modulo the kernel subspaces, written in the
/// complement basis of [`crate::linalg::complete_basis`].
pub fn middle_convolution(system: &KzSystem, mu: &Rational) -> Result<KzSystem> {
    let conv = convolve(system, mu)?;
    middle_convolution_of(&conv, &kernels(&conv))
}

pub(crate) fn middle_convolution_of(conv: &ConvolvedSystem, k: &KernelData) -> Result<KzSystem> {
    let rank = conv.dim() - k.total.dim();
    if rank == 0 {
        return Err(Error::domain("the middle convolution has rank zero"));
    }
    let residues = conv
        .system()
        .residues()
        .map(|(p, m)| quotient(m, &k.total).map(|q| (p, q)))
        .collect::<Result<Vec<_>>>()?;
    let out = KzSystem::unchecked(conv.source().n(), rank, residues)?;
    if let Some(v) = out.integrability_violations().first() {
        return Err(Error::TheoremViolation(format!("middle convolution fails {v}")));
    }
    Ok(out)
}

/// `mc_{x_var,μ}`, conjugating by the transposition of `0` and `var`.
pub fn middle_convolution_at(system: &KzSystem, var: u32, mu: &Rational) -> Result<KzSystem> {
    if var as usize >= system.n() {
        return Err(Error::domain(format!("variable {var} is not below n = {}", system.n())));
    }
    if var == 0 {
        return middle_convolution(system, mu);
    }
    let t = KzSystem::transposition(system.n(), 0, var);
    middle_convolution(&system.permute(&t)?, mu)?.permute(&t)
}
