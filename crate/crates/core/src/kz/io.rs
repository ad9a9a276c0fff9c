//! JSON form: `{"n":4,"rank":3,"residues":{"0,1":[["1/2","0",..],..],..}}`.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::system::KzSystem;
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemJson {
    n: usize,
    rank: usize,
    residues: BTreeMap<String, RationalMatrix>,
}

struct Residues<'a>(&'a KzSystem);

impl Serialize for Residues<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for ((i, j), m) in self.0.residues() {
            map.serialize_entry(&format!("{i},{j}"), m)?;
        }
        map.end()
    }
}

impl Serialize for KzSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.n())?;
        map.serialize_entry("rank", &self.rank())?;
        map.serialize_entry("residues", &Residues(self))?;
        map.end()
    }
}

fn parse_key(key: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse { line: 1, column: 1, message: format!("residue key {key:?} is not of the form \"i,j\"") };
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i = a.trim().parse().map_err(|_| bad())?;
    let j = b.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

impl KzSystem {
    /// Parses and validates, including integrability.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw = Self::parse_json(text)?;
        let bad = raw.integrability_violations();
        if let Some(v) = bad.first() {
            return Err(Error::Integrability(format!("{v} ({} violation(s) in total)", bad.len())));
        }
        Ok(raw)
    }

    /// Parses with shape checks only.
    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: SystemJson = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
        let residues = raw.residues.into_iter().map(|(k, m)| parse_key(&k).map(|p| (p, m))).collect::<Result<Vec<_>>>()?;
        Self::unchecked(raw.n, raw.rank, residues)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing a system cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializing a system cannot fail")
    }
}
