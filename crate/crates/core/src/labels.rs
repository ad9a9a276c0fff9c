//! Labels and label sets.
//!
//! A [`LabelSet`] is a bitmask over finite labels `0..64`. Its `Ord` is the
//! canonical member order used for serialization: larger sets first, then
//! lexicographic on the ascending element list.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of finite labels a [`LabelSet`] can hold.
pub const MAX_LABELS: u32 = 64;

/// A finite label or the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(i) => write!(f, "{i}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_bits(bits: u64) -> Self {
        LabelSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: u32) -> Self {
        assert!(n <= MAX_LABELS, "at most {MAX_LABELS} labels");
        if n == 64 {
            LabelSet(u64::MAX)
        } else {
            LabelSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: u32) -> Self {
        assert!(i < MAX_LABELS, "label {i} out of range");
        LabelSet(1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u32) -> bool {
        i < MAX_LABELS && self.0 >> i & 1 == 1
    }

    pub fn min_label(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max_label(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn with(self, i: u32) -> Self {
        self | LabelSet::singleton(i)
    }

    pub fn without(self, i: u32) -> Self {
        LabelSet(self.0 & !(1u64 << i))
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: LabelSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(self, other: LabelSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Disjoint or nested (including equal).
    pub fn commutes_with(self, other: LabelSet) -> bool {
        self.is_disjoint(other) || self.is_subset(other) || other.is_subset(self)
    }

    pub fn iter(self) -> LabelIter {
        LabelIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of their bitmasks.
    pub fn subsets(self) -> impl Iterator<Item = LabelSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(LabelSet(cur))
        })
    }

    /// Parse `{0,1,2}`. Whitespace is allowed around elements.
    pub fn parse(text: &str) -> Result<Self> {
        parse_set(text, 0)
    }
}

impl FromIterator<u32> for LabelSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        iter.into_iter().fold(LabelSet::EMPTY, LabelSet::with)
    }
}

impl std::ops::BitOr for LabelSet {
    type Output = LabelSet;
    fn bitor(self, rhs: LabelSet) -> LabelSet {
        LabelSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for LabelSet {
    type Output = LabelSet;
    fn bitand(self, rhs: LabelSet) -> LabelSet {
        LabelSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for LabelSet {
    type Output = LabelSet;
    fn sub(self, rhs: LabelSet) -> LabelSet {
        LabelSet(self.0 & !rhs.0)
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        other.len().cmp(&self.len()).then_with(|| {
            // Equal sizes: the set holding the least element of the symmetric
            // difference is lexicographically smaller.
            match LabelSet(self.0 ^ other.0).min_label() {
                None => Ordering::Equal,
                Some(m) if self.contains(m) => Ordering::Less,
                Some(_) => Ordering::Greater,
            }
        })
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct LabelIter(u64);

impl Iterator for LabelIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for LabelIter {}

/// A subset of the extended label set `{0..n-1} ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExtendedSet {
    pub finite: LabelSet,
    pub infinity: bool,
}

impl ExtendedSet {
    pub fn finite(set: LabelSet) -> Self {
        ExtendedSet { finite: set, infinity: false }
    }

    pub fn with_infinity(set: LabelSet) -> Self {
        ExtendedSet { finite: set, infinity: true }
    }

    pub fn from_labels(labels: &[Label]) -> Self {
        let mut out = ExtendedSet::default();
        for l in labels {
            match *l {
                Label::Finite(i) => out.finite = out.finite.with(i),
                Label::Infinity => out.infinity = true,
            }
        }
        out
    }
}

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line: 1, column, message: message.into() }
}

/// Parses one `{...}` group; `offset` is the column of `text[0]` minus one.
fn parse_set(text: &str, offset: usize) -> Result<LabelSet> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if !body.starts_with('{') {
        return Err(parse_err(offset + lead + 1, "expected '{'"));
    }
    if !body.ends_with('}') || body.len() < 2 {
        return Err(parse_err(offset + lead + body.len(), "expected '}'"));
    }
    let inner = &body[1..body.len() - 1];
    let mut set = LabelSet::EMPTY;
    if inner.trim().is_empty() {
        return Ok(set);
    }
    let mut col = offset + lead + 2;
    for piece in inner.split(',') {
        let token = piece.trim();
        let at = col + (piece.len() - piece.trim_start().len());
        let value: u32 = token
            .parse()
            .map_err(|_| parse_err(at, format!("invalid label '{token}'")))?;
        if value >= MAX_LABELS {
            return Err(parse_err(at, format!("label {value} exceeds {}", MAX_LABELS - 1)));
        }
        if set.contains(value) {
            return Err(parse_err(at, format!("repeated label {value}")));
        }
        set = set.with(value);
        col += piece.len() + 1;
    }
    Ok(set)
}

/// Parses `{0,1};{0,1,2,3};{2,3}` into its sets, in input order.
pub fn parse_set_list(text: &str) -> Result<Vec<LabelSet>> {
    let mut out = Vec::new();
    let mut col = 0;
    if text.trim().is_empty() {
        return Ok(out);
    }
    for piece in text.split(';') {
        out.push(parse_set(piece, col)?);
        col += piece.len() + 1;
    }
    Ok(out)
}
