use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use super::matrix::RationalMatrix;
use super::poly::{char_poly, rational_roots};
use super::rational::{format_rational, parse_rational, Rational};
use super::subspace::{kernel_basis, restriction};
use crate::error::{Error, Result};

/// Multiset of joint eigenvalue tuples.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct JointSpectrum {
    arity: usize,
    entries: BTreeMap<Vec<Rational>, usize>,
}

impl JointSpectrum {
    pub fn new(arity: usize) -> Self {
        JointSpectrum { arity, entries: BTreeMap::new() }
    }

    pub fn from_entries(arity: usize, entries: impl IntoIterator<Item = (Vec<Rational>, usize)>) -> Self {
        let mut s = Self::new(arity);
        for (t, m) in entries {
            s.insert(t, m);
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Sum of multiplicities.
    pub fn dim(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<Rational>, usize)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn multiplicity(&self, tuple: &[Rational]) -> usize {
        self.entries.get(tuple).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, tuple: Vec<Rational>, mult: usize) {
        assert_eq!(tuple.len(), self.arity, "tuple arity");
        if mult > 0 {
            *self.entries.entry(tuple).or_insert(0) += mult;
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &JointSpectrum) -> JointSpectrum {
        assert_eq!(self.arity, other.arity, "arity mismatch in union");
        let mut out = self.clone();
        for (t, m) in other.entries() {
            out.insert(t.clone(), m);
        }
        out
    }

    /// Multiset difference; `Err` names the first tuple that would underflow.
    pub fn subtract(&self, other: &JointSpectrum) -> Result<JointSpectrum, Vec<Rational>> {
        assert_eq!(self.arity, other.arity, "arity mismatch in subtract");
        let mut out = self.clone();
        for (t, m) in other.entries() {
            let have = out.entries.get_mut(t).ok_or_else(|| t.clone())?;
            if *have < m {
                return Err(t.clone());
            }
            *have -= m;
            if *have == 0 {
                out.entries.remove(t);
            }
        }
        Ok(out)
    }

    /// Every multiplicity multiplied by `p`.
    pub fn repeat(&self, p: usize) -> JointSpectrum {
        Self::from_entries(self.arity, self.entries().map(|(t, m)| (t.clone(), m * p)))
    }

    /// Applies `f` to each tuple, merging collisions.
    pub fn map(&self, arity: usize, f: impl Fn(&[Rational]) -> Vec<Rational>) -> JointSpectrum {
        Self::from_entries(arity, self.entries().map(|(t, m)| (f(t), m)))
    }

    /// Keeps the listed coordinates.
    pub fn project(&self, coords: &[usize]) -> JointSpectrum {
        self.map(coords.len(), |t| coords.iter().map(|&i| t[i].clone()).collect())
    }
}

impl fmt::Display for JointSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (t, m)) in self.entries().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let vals: Vec<String> = t.iter().map(format_rational).collect();
            write!(f, "[{}]_{m}", vals.join(":"))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for JointSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    values: Vec<String>,
    mult: usize,
}

impl Serialize for JointSpectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (t, m) in self.entries() {
            seq.serialize_element(&EntryJson { values: t.iter().map(format_rational).collect(), mult: m })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for JointSpectrum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<EntryJson> = Vec::deserialize(d)?;
        let arity = raw.first().map_or(0, |e| e.values.len());
        let mut out = JointSpectrum::new(arity);
        for e in raw {
            if e.values.len() != arity {
                return Err(serde::de::Error::custom("mixed tuple lengths"));
            }
            let t = e
                .values
                .iter()
                .map(|v| parse_rational(v))
                .collect::<Result<Vec<_>>>()
                .map_err(serde::de::Error::custom)?;
            out.insert(t, e.mult);
        }
        Ok(out)
    }
}

/// Generalized eigenvalues of `a` with algebraic multiplicities.
pub fn eigenvalues(a: &RationalMatrix) -> Result<Vec<(Rational, usize)>> {
    if let Some(c) = a.as_scalar() {
        return Ok(vec![(c, a.rows())]);
    }
    let p = char_poly(a);
    let roots = rational_roots(&p);
    if roots.len() != a.rows() {
        return Err(Error::IrrationalSpectrum(format!("characteristic polynomial {p}")));
    }
    let mut out: Vec<(Rational, usize)> = Vec::new();
    for r in roots {
        match out.last_mut() {
            Some((v, m)) if *v == r => *m += 1,
            _ => out.push((r, 1)),
        }
    }
    Ok(out)
}

/// Joint generalized spectrum of pairwise commuting square matrices.
pub fn joint_spectrum(matrices: &[RationalMatrix]) -> Result<JointSpectrum> {
    let Some(first) = matrices.first() else { return Ok(JointSpectrum::new(0)) };
    let n = first.rows();
    for (i, m) in matrices.iter().enumerate() {
        if !m.is_square() || m.rows() != n {
            return Err(Error::Dimension(format!("matrix {i} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
        }
    }
    for i in 0..matrices.len() {
        for j in i + 1..matrices.len() {
            if !matrices[i].commutes_with(&matrices[j]) {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    let mut out = JointSpectrum::new(matrices.len());
    split(matrices, &mut Vec::new(), &mut out)?;
    Ok(out)
}

fn split(matrices: &[RationalMatrix], prefix: &mut Vec<Rational>, out: &mut JointSpectrum) -> Result<()> {
    let dim = matrices[0].rows();
    if dim == 0 {
        return Ok(());
    }
    let Some((a, rest)) = matrices.split_first() else { return Ok(()) };
    let eig = eigenvalues(a)?;
    for (lambda, mult) in eig {
        prefix.push(lambda.clone());
        if rest.is_empty() {
            out.insert(prefix.clone(), mult);
        } else if mult == dim {
            split(rest, prefix, out)?;
        } else {
            let space = kernel_basis(&a.shift(&-lambda).pow(mult));
            if space.dim() != mult {
                return Err(Error::Internal(format!(
                    "generalized eigenspace of dimension {} for multiplicity {mult}",
                    space.dim()
                )));
            }
            let restricted = rest.iter().map(|m| restriction(m, &space)).collect::<Result<Vec<_>>>()?;
            split(&restricted, prefix, out)?;
        }
        prefix.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn diag(v: &[i64]) -> RationalMatrix {
        RationalMatrix::diagonal(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn two_diagonal_matrices() {
        let s = joint_spectrum(&[diag(&[0, 0, 0, -1]), diag(&[1, 2, 2, 3])]).unwrap();
        let expect = JointSpectrum::from_entries(
            2,
            [(vec![int(0), int(1)], 1), (vec![int(0), int(2)], 2), (vec![int(-1), int(3)], 1)],
        );
        assert_eq!(s, expect);
        assert_eq!(s.to_string(), "{[-1:3]_1, [0:1]_1, [0:2]_2}");
    }

    #[test]
    fn identity_spectrum() {
        let s = joint_spectrum(&[RationalMatrix::identity(3)]).unwrap();
        assert_eq!(s, JointSpectrum::from_entries(1, [(vec![int(1)], 3)]));
    }

    #[test]
    fn jordan_block_has_full_multiplicity() {
        let j = RationalMatrix::from_i64(&[&[2, 1], &[0, 2]]);
        let s = joint_spectrum(&[j.clone(), j.pow(2)]).unwrap();
        assert_eq!(s, JointSpectrum::from_entries(2, [(vec![int(2), int(4)], 2)]));
    }

    #[test]
    fn rejects_non_commuting_and_irrational() {
        let a = RationalMatrix::from_i64(&[&[1, 1], &[0, 2]]);
        let b = RationalMatrix::from_i64(&[&[1, 0], &[1, 2]]);
        assert!(matches!(joint_spectrum(&[a, b]), Err(Error::NonCommuting(0, 1))));
        let r = RationalMatrix::from_i64(&[&[0, 2], &[1, 0]]);
        assert!(matches!(joint_spectrum(&[r]), Err(Error::IrrationalSpectrum(_))));
    }

    #[test]
    fn subtraction_underflow() {
        let a = JointSpectrum::from_entries(1, [(vec![int(1)], 1)]);
        let b = JointSpectrum::from_entries(1, [(vec![int(1)], 2)]);
        assert!(a.subtract(&b).is_err());
        assert!(b.subtract(&a).unwrap().dim() == 1);
    }
}
