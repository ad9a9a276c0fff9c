use super::convolution::ConvolvedSystem;
use crate::error::{Error, Result};
use crate::kz::KzSystem;
use crate::labels::LabelSet;
use crate::linalg::{Rational, RationalMatrix};
use crate::tournament::{canonical_order, md_set, me_set, LoserMap, MaximalCommutingFamily, OrderedFamily};

/// `A_I^K = A_{md_{0,K}(I)} + me_{0,K}(I) μ`.
pub fn predicted_a_i_k(system: &KzSystem, member: LabelSet, k: LabelSet, mu: &Rational) -> Result<RationalMatrix> {
    let a = system.residue(md_set(0, k, member))?;
    Ok(if me_set(0, k, member) == 1 { a.shift(mu) } else { a })
}

/// The block 0/1 matrix whose block `(j, ℓ)` is the identity exactly when
/// slot `j` lies in the losing side of the `ℓ`-th member.
pub fn u_matrix(order: &OrderedFamily, losers: &LoserMap, rank: usize) -> RationalMatrix {
    let members = order.order();
    let slots = members.len();
    let id = RationalMatrix::identity(rank);
    let mut u = RationalMatrix::zeros(slots * rank, slots * rank);
    for (l, &m) in members.iter().enumerate() {
        for j in losers.loser(m).iter() {
            u.set_block(j as usize - 1, l, &id);
        }
    }
    u
}

/// Evidence that one family's lifted matrices are simultaneously block upper
/// triangular with the predicted diagonal blocks.
#[derive(Clone, Debug)]
pub struct TriangularizationCertificate {
    pub order: OrderedFamily,
    pub losers: LoserMap,
    pub u: RationalMatrix,
    pub u_inverse: RationalMatrix,
    /// `(I, U⁻¹ ~A_I U)` in the member order.
    pub conjugated: Vec<(LabelSet, RationalMatrix)>,
    /// `diagonal[I][ℓ]` is the `ℓ`-th diagonal block of the conjugated `~A_I`.
    pub diagonal: Vec<Vec<RationalMatrix>>,
}

impl TriangularizationCertificate {
    /// Dimensions of the flag `W^(1) ⊂ … ⊂ W^(n-1)` spanned by leading block
    /// columns of `U`.
    pub fn flag_dims(&self) -> Vec<usize> {
        let rank = self.u.rows() / self.order.order().len();
        (1..=self.order.order().len()).map(|l| self.u.submatrix(0, 0, self.u.rows(), l * rank).rank()).collect()
    }

    pub fn conjugated(&self, member: LabelSet) -> Option<&RationalMatrix> {
        self.conjugated.iter().find(|(m, _)| *m == member).map(|(_, a)| a)
    }
}

pub fn triangularize(conv: &ConvolvedSystem, family: &MaximalCommutingFamily) -> Result<TriangularizationCertificate> {
    let source = conv.source();
    if family.labels() != source.labels() {
        return Err(Error::domain(format!("{family} is not a family over 0..{}", source.n())));
    }
    let order = canonical_order(family)?;
    let losers = LoserMap::canonical(family, 0)?;
    let rank = source.rank();
    let slots = order.order().len();
    let u = u_matrix(&order, &losers, rank);
    let u_inverse = u.inverse().map_err(|_| Error::TheoremViolation(format!("U is singular for {family}")))?;
    let mut conjugated = Vec::with_capacity(slots);
    let mut diagonal = Vec::with_capacity(slots);
    for &member in order.order() {
        let c = &(&u_inverse * &conv.tilde_a(member)?) * &u;
        let mut blocks = Vec::with_capacity(slots);
        for row in 0..slots {
            for col in 0..row {
                if !c.block(row, col, rank).is_zero() {
                    return Err(Error::TheoremViolation(format!(
                        "conjugated ~A_{member} has a nonzero block ({row},{col}) for {family}"
                    )));
                }
            }
            let block = c.block(row, row, rank);
            let k = order.order()[row];
            let expected = predicted_a_i_k(source, member, k, conv.mu())?;
            if block != expected {
                return Err(Error::TheoremViolation(format!(
                    "diagonal block {row} of ~A_{member} is not A_{member}^{k} for {family}"
                )));
            }
            blocks.push(block);
        }
        conjugated.push((member, c));
        diagonal.push(blocks);
    }
    Ok(TriangularizationCertificate { order, losers, u, u_inverse, conjugated, diagonal })
}
