use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::system::KzSystem;
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::linalg::{joint_spectrum, JointSpectrum, Rational, RationalMatrix};
use crate::tournament::{enumerate_families, MaximalCommutingFamily};

/// Members of `family` in the coordinate order of its joint spectrum: the
/// proper members in canonical order, then the full set unless `shortened`.
pub fn spectrum_members(family: &MaximalCommutingFamily, shortened: bool) -> Vec<LabelSet> {
    let mut out = family.members()[1..].to_vec();
    if !shortened {
        out.push(family.labels());
    }
    out
}

/// The joint spectrum of every maximal commuting family, in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct SpectraReport {
    shortened: bool,
    entries: Vec<(MaximalCommutingFamily, JointSpectrum)>,
}

impl SpectraReport {
    pub fn new(shortened: bool, mut entries: Vec<(MaximalCommutingFamily, JointSpectrum)>) -> Self {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        SpectraReport { shortened, entries }
    }

    pub fn shortened(&self) -> bool {
        self.shortened
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(MaximalCommutingFamily, JointSpectrum)] {
        &self.entries
    }

    pub fn get(&self, family: &MaximalCommutingFamily) -> Option<&JointSpectrum> {
        self.entries.binary_search_by(|(f, _)| f.cmp(family)).ok().map(|k| &self.entries[k].1)
    }

    /// The single-member spectra `[A_I]` collected from all families.
    pub fn single_spectra(&self) -> BTreeMap<LabelSet, JointSpectrum> {
        let mut out = BTreeMap::new();
        for (family, spec) in &self.entries {
            for (k, m) in spectrum_members(family, self.shortened).into_iter().enumerate() {
                out.entry(m).or_insert_with(|| spec.project(&[k]));
            }
        }
        out
    }
}

impl fmt::Display for SpectraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (family, spec) in &self.entries {
            writeln!(f, "{}  {spec}", family.serialize(true))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SpectraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Row<'a> {
    family: &'a MaximalCommutingFamily,
    members: Vec<String>,
    spectrum: &'a JointSpectrum,
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpectraRow", 3)?;
        st.serialize_field("family", &self.family.serialize(true))?;
        st.serialize_field("members", &self.members)?;
        st.serialize_field("spectrum", self.spectrum)?;
        st.end()
    }
}

impl Serialize for SpectraReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (family, spectrum) in &self.entries {
            let members = spectrum_members(family, self.shortened).iter().map(|m| m.to_string()).collect();
            seq.serialize_element(&Row { family, members, spectrum })?;
        }
        seq.end()
    }
}

impl KzSystem {
    /// Joint spectrum of `(A_I)` over the members of one family.
    pub fn family_spectrum(&self, family: &MaximalCommutingFamily, shortened: bool) -> Result<JointSpectrum> {
        if family.labels() != self.labels() {
            return Err(Error::domain(format!("{family} is not a family over 0..{}", self.n())));
        }
        let mats: Vec<RationalMatrix> =
            spectrum_members(family, shortened).into_iter().map(|m| self.residue_unchecked(m)).collect();
        if mats.is_empty() {
            return Ok(JointSpectrum::from_entries(0, [(Vec::new(), self.rank())]));
        }
        joint_spectrum(&mats)
    }

    /// `Sp`, or `Sp'` when `shortened`.
    pub fn spectra(&self, shortened: bool) -> Result<SpectraReport> {
        let families = enumerate_families(self.labels())?;
        let entries = families
            .into_par_iter()
            .map(|f| self.family_spectrum(&f, shortened).map(|s| (f, s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectraReport::new(shortened, entries))
    }

    /// Spectrum of `Σ c_I A_I` for members `I` of `family`, read off the
    /// family's joint spectrum.
    pub fn spectrum_of_combination(
        &self,
        family: &MaximalCommutingFamily,
        coefficients: &BTreeMap<LabelSet, Rational>,
    ) -> Result<JointSpectrum> {
        let members = spectrum_members(family, false);
        for set in coefficients.keys() {
            if !members.contains(set) {
                return Err(Error::domain(format!("{set} is not a member of {family}")));
            }
        }
        let weights: Vec<Rational> =
            members.iter().map(|m| coefficients.get(m).cloned().unwrap_or_else(crate::linalg::rational::zero)).collect();
        let joint = self.family_spectrum(family, false)?;
        Ok(joint.map(1, |t| vec![t.iter().zip(&weights).map(|(x, w)| x * w).sum()]))
    }
}
