use rayon::prelude::*;
use serde::Serialize;

use super::convolution::{convolve, ConvolvedSystem};
use super::kernels::{kernels, middle_convolution_of, KernelData};
use super::triangular::{predicted_a_i_k, triangularize};
use crate::error::{Error, Result};
use crate::kz::{spectrum_members, KzSystem, SpectraReport};
use crate::labels::LabelSet;
use crate::linalg::{joint_spectrum, kernel_basis, restriction, JointSpectrum, Rational, RationalMatrix, Subspace};
use crate::tournament::{enumerate_families, MaximalCommutingFamily};

/// Where a part of the kernel sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelPart {
    Slot(u32),
    Infinity,
}

fn scalar_spectrum(m: &RationalMatrix, mult: usize) -> Result<JointSpectrum> {
    Ok(joint_spectrum(std::slice::from_ref(m))?.repeat(mult))
}

/// `[~A_I]` from the residues of the source system: `[A_{I∪0} (+μ if 0 ∈ I)]`
/// with multiplicity `|I| - 1`, and `[A_{I∖0}]` with multiplicity `n - |I|`.
pub fn predicted_single_spectrum(system: &KzSystem, member: LabelSet, mu: &Rational) -> Result<JointSpectrum> {
    if member.len() < 2 {
        return Err(Error::domain(format!("{member} needs at least two labels")));
    }
    let with = member.with(0);
    let mut top = system.residue(with)?;
    if member.contains(0) {
        top = top.shift(mu);
    }
    let a = scalar_spectrum(&top, member.len() - 1)?;
    let b = scalar_spectrum(&system.residue(member.without(0))?, system.n() - member.len())?;
    Ok(a.union(&b))
}

/// `⊔_J [A^J_{I_1} : … ]` over the members `J` of the family, in the
/// coordinate order of [`spectrum_members`].
pub fn predicted_joint_spectrum(system: &KzSystem, family: &MaximalCommutingFamily, mu: &Rational) -> Result<JointSpectrum> {
    let members = spectrum_members(family, false);
    let mut out = JointSpectrum::new(members.len());
    for &k in family.members() {
        let mats = members.iter().map(|&m| predicted_a_i_k(system, m, k, mu)).collect::<Result<Vec<_>>>()?;
        out = out.union(&joint_spectrum(&mats)?);
    }
    Ok(out)
}

/// `[A^{j}_I : …]` on `ker A_0j`, or `[A^{L_n}_I : …]` on `ker(A_{0∞} - μ)`.
pub fn predicted_restriction(
    system: &KzSystem,
    family: &MaximalCommutingFamily,
    mu: &Rational,
    part: KernelPart,
) -> Result<JointSpectrum> {
    let (k, space) = match part {
        KernelPart::Slot(j) => {
            if j == 0 || j as usize >= system.n() {
                return Err(Error::domain(format!("slot {j} is not in 1..{}", system.n())));
            }
            (LabelSet::singleton(j), kernel_basis(system.pair(0, j)))
        }
        KernelPart::Infinity => {
            if *mu == crate::linalg::rational::zero() {
                return Err(Error::NonDirectKernelSum);
            }
            let shifted = system.infinity_residue(0)?.shift(&-mu.clone());
            (system.labels(), kernel_basis(&shifted))
        }
    };
    restricted_spectrum(family, space, |m| predicted_a_i_k(system, m, k, mu))
}

fn restricted_spectrum(
    family: &MaximalCommutingFamily,
    space: Subspace,
    matrix: impl Fn(LabelSet) -> Result<RationalMatrix>,
) -> Result<JointSpectrum> {
    let members = spectrum_members(family, false);
    if space.dim() == 0 {
        return Ok(JointSpectrum::new(members.len()));
    }
    let mats = members.iter().map(|&m| restriction(&matrix(m)?, &space)).collect::<Result<Vec<_>>>()?;
    joint_spectrum(&mats)
}

/// Joint spectrum of the lifted family, computed directly.
pub fn direct_joint_spectrum(conv: &ConvolvedSystem, family: &MaximalCommutingFamily) -> Result<JointSpectrum> {
    conv.system().family_spectrum(family, false)
}

/// Joint spectrum of the lifted family on one kernel part, computed directly.
pub fn direct_restriction(
    conv: &ConvolvedSystem,
    kernels: &KernelData,
    family: &MaximalCommutingFamily,
    part: KernelPart,
) -> Result<JointSpectrum> {
    let space = match part {
        KernelPart::Slot(j) => kernels.slot(j).clone(),
        KernelPart::Infinity => kernels.infinity.clone(),
    };
    restricted_spectrum(family, space, |m| conv.tilde_a(m))
}

fn kernel_parts(n: usize) -> Vec<KernelPart> {
    let mut parts: Vec<KernelPart> = (1..n as u32).map(KernelPart::Slot).collect();
    parts.push(KernelPart::Infinity);
    parts
}

fn predicted_family(system: &KzSystem, family: &MaximalCommutingFamily, mu: &Rational) -> Result<JointSpectrum> {
    let mut spec = predicted_joint_spectrum(system, family, mu)?;
    for part in kernel_parts(system.n()) {
        let r = predicted_restriction(system, family, mu, part)?;
        spec = spec.subtract(&r).map_err(|t| {
            Error::TheoremViolation(format!("restriction to {part:?} exceeds the lifted spectrum at {t:?} for {family}"))
        })?;
    }
    Ok(spec)
}

/// `Sp mc_{x_0,μ}` predicted from the source system alone. Each family of
/// the result is the one whose members index the quotient matrices.
pub fn predicted_mc_spectra(system: &KzSystem, mu: &Rational) -> Result<SpectraReport> {
    if *mu == crate::linalg::rational::zero() {
        return Err(Error::domain("predictions need μ != 0"));
    }
    let entries = enumerate_families(system.labels())?
        .into_par_iter()
        .map(|f| predicted_family(system, &f, mu).map(|s| (f, s)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectraReport::new(false, entries))
}

/// Outcome of checking one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: String,
    pub status: &'static str,
    pub details: String,
}

impl FamilyCheck {
    pub fn ok(&self) -> bool {
        self.status == "ok"
    }
}

/// All checks for one family: triangularization, the flag dimensions, the
/// joint spectrum and every restriction against direct computation, and the
/// quotient spectrum when `quotient` is given.
pub fn check_family(
    conv: &ConvolvedSystem,
    kernels: &KernelData,
    quotient: Option<&KzSystem>,
    family: &MaximalCommutingFamily,
) -> Result<()> {
    let system = conv.source();
    let mu = conv.mu();
    let violation = |what: String| Err(Error::TheoremViolation(format!("{what} for {family}")));
    let cert = triangularize(conv, family)?;
    let expected: Vec<usize> = (1..=system.n() - 1).map(|l| l * system.rank()).collect();
    if cert.flag_dims() != expected {
        return violation(format!("flag dimensions {:?}", cert.flag_dims()));
    }
    let joint = direct_joint_spectrum(conv, family)?;
    if joint != predicted_joint_spectrum(system, family, mu)? {
        return violation("joint spectrum mismatch".into());
    }
    for &m in family.members() {
        if predicted_single_spectrum(system, m, mu)? != joint_spectrum(&[conv.tilde_a(m)?])? {
            return violation(format!("single spectrum mismatch at {m}"));
        }
    }
    for part in kernel_parts(system.n()) {
        if matches!(part, KernelPart::Infinity) && *mu == crate::linalg::rational::zero() {
            continue;
        }
        if direct_restriction(conv, kernels, family, part)? != predicted_restriction(system, family, mu, part)? {
            return violation(format!("restriction mismatch on {part:?}"));
        }
    }
    if let Some(q) = quotient {
        if q.family_spectrum(family, false)? != predicted_family(system, family, mu)? {
            return violation("quotient spectrum mismatch".into());
        }
    }
    Ok(())
}

/// Runs [`check_family`] on every family; errors other than theorem
/// violations propagate.
pub fn verify_mc(system: &KzSystem, mu: &Rational) -> Result<Vec<FamilyCheck>> {
    let conv = convolve(system, mu)?;
    let k = kernels(&conv);
    let quotient = if *mu == crate::linalg::rational::zero() { None } else { Some(middle_convolution_of(&conv, &k)?) };
    enumerate_families(system.labels())?
        .into_par_iter()
        .map(|f| {
            let family = f.serialize(true);
            match check_family(&conv, &k, quotient.as_ref(), &f) {
                Ok(()) => Ok(FamilyCheck { family, status: "ok", details: String::new() }),
                Err(e @ Error::TheoremViolation(_)) => Ok(FamilyCheck { family, status: "violation", details: e.to_string() }),
                Err(e) => Err(e),
            }
        })
        .collect()
}

/// What happens at infinity under `mc_{x_0,μ_0}` for a system with scalar
/// residues `A_{i∞} = μ_i`.
#[derive(Clone, Debug)]
pub struct PseudoInfinityReport {
    /// `μ_i` of the source.
    pub source: Vec<Rational>,
    /// `𝒦_∞` equals the diagonal subspace `ι_{L_n^0}(ℂ^N)`.
    pub kernel_is_diagonal: bool,
    /// Scalar residues at infinity of the quotient, if all are scalar.
    pub quotient: Option<Vec<Rational>>,
    pub system: KzSystem,
}

impl PseudoInfinityReport {
    /// The quotient still has scalar residues at infinity.
    pub fn pseudo_singular(&self) -> bool {
        self.quotient.is_some()
    }

    /// `A̅_{0∞} = 0` and `A̅_{i∞} = μ_i` for `i > 0`, with `𝒦_∞` diagonal.
    pub fn claimed_values_hold(&self) -> bool {
        self.kernel_is_diagonal
            && self.quotient.as_ref().is_some_and(|q| q[0] == crate::linalg::rational::zero() && q[1..] == self.source[1..])
    }
}

pub fn mc_preserves_pseudo_infinity(system: &KzSystem) -> Result<PseudoInfinityReport> {
    let source = system.pseudo_singular_infinity().ok_or_else(|| Error::domain("the system is singular at infinity"))?;
    let mu0 = source[0].clone();
    let conv = convolve(system, &mu0)?;
    let k = kernels(&conv);
    let rank = system.rank();
    let diagonal: Vec<Vec<Rational>> = (0..rank)
        .map(|c| {
            let e: Vec<Rational> = (0..rank).map(|r| Rational::from_integer(i64::from(r == c).into())).collect();
            conv.embed(system.labels(), &e)
        })
        .collect();
    let diagonal = Subspace::span(conv.dim(), &diagonal);
    let kernel_is_diagonal = k.infinity == diagonal;
    let q = middle_convolution_of(&conv, &k)?;
    Ok(PseudoInfinityReport { source, kernel_is_diagonal, quotient: q.pseudo_singular_infinity(), system: q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn sample4() -> KzSystem {
        let vals = [((0, 1), frac(1, 2)), ((0, 2), int(2)), ((0, 3), int(-3)), ((1, 2), int(5)), ((1, 3), frac(7, 3)), ((2, 3), int(1))];
        KzSystem::scalar(4, vals).unwrap()
    }

    #[test]
    fn single_spectra_match_direct() {
        let sys = sample4();
        let mu = frac(1, 3);
        let conv = convolve(&sys, &mu).unwrap();
        for set in LabelSet::range(4).subsets().filter(|x| x.len() >= 2) {
            let direct = joint_spectrum(&[conv.tilde_a(set).unwrap()]).unwrap();
            assert_eq!(predicted_single_spectrum(&sys, set, &mu).unwrap(), direct, "{set}");
        }
    }

    #[test]
    fn whole_pipeline_on_rank_one() {
        let sys = sample4();
        for mu in [frac(1, 3), int(-2), frac(5, 7)] {
            let rows = verify_mc(&sys, &mu).unwrap();
            assert_eq!(rows.len(), 15);
            assert!(rows.iter().all(FamilyCheck::ok), "{rows:?}");
            let mc = crate::midconv::middle_convolution(&sys, &mu).unwrap();
            assert_eq!(predicted_mc_spectra(&sys, &mu).unwrap(), mc.spectra(false).unwrap());
        }
    }

    #[test]
    fn empty_restriction() {
        let sys = sample4();
        let f = MaximalCommutingFamily::parse("{0,1};{2,3}", LabelSet::range(4)).unwrap();
        let r = predicted_restriction(&sys, &f, &int(1), KernelPart::Slot(1)).unwrap();
        assert!(r.is_empty());
        assert!(predicted_restriction(&sys, &f, &int(0), KernelPart::Infinity).is_err());
    }

    #[test]
    fn pseudo_infinity_preserved() {
        let sys = KzSystem::scalar(3, [((0, 1), int(1)), ((0, 2), int(2)), ((1, 2), int(5))]).unwrap();
        let r = mc_preserves_pseudo_infinity(&sys).unwrap();
        assert_eq!(r.system.rank(), 1);
        assert!(r.kernel_is_diagonal && r.pseudo_singular());
        // μ_0 = -3; the quotient has A̅_{0∞} = -μ_0, the others are kept.
        assert_eq!(r.quotient.unwrap(), vec![int(3), int(-6), int(-7)]);
    }
}
