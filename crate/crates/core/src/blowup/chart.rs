use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::kz::KzSystem;
use crate::labels::LabelSet;
use crate::linalg::RationalMatrix;
use crate::tournament::{canonical_order, LoserMap, MaximalCommutingFamily};

/// Smallest member containing both `i` and `j`.
pub fn minimal_member(family: &MaximalCommutingFamily, i: u32, j: u32) -> Option<LabelSet> {
    family.members().iter().copied().filter(|m| m.contains(i) && m.contains(j)).min_by_key(|m| m.len())
}

/// Integers `ε^I` with `x_i - x_j = Σ ε^I x_I`, where
/// `x_I = x_{loser-side player} - x_{winner-side player}`. Zero
/// coefficients are omitted.
pub fn epsilon_coefficients(losers: &LoserMap, i: u32, j: u32) -> Result<BTreeMap<LabelSet, i64>> {
    let labels = losers.family().labels();
    if i == j || !labels.contains(i) || !labels.contains(j) {
        return Err(Error::domain(format!("({i},{j}) is not a pair of distinct labels in {labels}")));
    }
    let mut out = BTreeMap::new();
    expand(losers, i, j, 1, &mut out);
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn expand(losers: &LoserMap, i: u32, j: u32, sign: i64, out: &mut BTreeMap<LabelSet, i64>) {
    if i == j {
        return;
    }
    let member = minimal_member(losers.family(), i, j).expect("the full set contains every pair");
    if !losers.loser(member).contains(i) {
        expand(losers, j, i, -sign, out);
        return;
    }
    // x_i - x_j = x_I + (x_i - x_k) - (x_j - x_l) with (k, l) the players.
    let (k, l) = losers.player_pair(member);
    *out.entry(member).or_insert(0) += sign;
    expand(losers, i, k, sign, out);
    expand(losers, j, l, -sign, out);
}

/// `x_j - x_i = f · Π_{ν ∈ monomial} X_ν` in one chart, for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairChart {
    pub i: u32,
    pub j: u32,
    /// Zero-based variable indices.
    pub monomial: Vec<usize>,
    pub poly: IntPolynomial,
}

/// Chart around the point of a family where every `x_I` with `I ≠ L`
/// vanishes, normalised by `x_0 = 0` and `x_L = 1`.
#[derive(Clone, Debug)]
pub struct BlowupChart {
    losers: LoserMap,
    flipped: BTreeSet<LabelSet>,
    /// Members carrying a variable, in canonical order; `variables[ν]` is `X_{ν+1}`.
    variables: Vec<LabelSet>,
    pairs: Vec<PairChart>,
}

impl BlowupChart {
    /// The chart for `losers`, with each `x_I` oriented from the losing side.
    pub fn new(losers: &LoserMap) -> Result<Self> {
        Self::with_orientation(losers, &BTreeSet::new())
    }

    /// As [`BlowupChart::new`], with `x_I` negated for every member in
    /// `flipped`. This only changes signs of the polynomials.
    pub fn with_orientation(losers: &LoserMap, flipped: &BTreeSet<LabelSet>) -> Result<Self> {
        let family = losers.family();
        let full = family.labels();
        if let Some(m) = flipped.iter().find(|m| !family.contains(**m)) {
            return Err(Error::domain(format!("{m} is not a member of {family}")));
        }
        let order = canonical_order(family)?;
        let variables: Vec<LabelSet> = order.order().iter().copied().filter(|&m| m != full).collect();
        let nv = variables.len();
        let coordinate = |member: LabelSet| -> IntPolynomial {
            let vars: Vec<usize> = (0..nv).filter(|&v| member.is_subset(variables[v])).collect();
            IntPolynomial::monomial(nv, &vars)
        };
        let labels = full.to_vec();
        let mut pairs = Vec::new();
        for (a, &i) in labels.iter().enumerate() {
            for &j in &labels[a + 1..] {
                let mut p = IntPolynomial::zero(nv);
                for (member, c) in epsilon_coefficients(losers, j, i)? {
                    let c = if flipped.contains(&member) { -c } else { c };
                    p = &p + &(&IntPolynomial::constant(nv, c) * &coordinate(member));
                }
                let pair = LabelSet::singleton(i).with(j);
                let monomial: Vec<usize> = (0..nv).filter(|&v| pair.is_subset(variables[v])).collect();
                let poly = p.divide_by_monomial(&monomial).ok_or_else(|| {
                    Error::Internal(format!("x_{j} - x_{i} = {p} is not divisible by its monomial"))
                })?;
                if !poly.constant_term().abs().is_one() {
                    return Err(Error::Internal(format!("x_{j} - x_{i} has non-unit constant term: {poly}")));
                }
                let span = minimal_member(family, i, j).expect("pair inside the full set");
                if let Some(v) = poly.variables().into_iter().find(|&v| !variables[v].is_proper_subset(span)) {
                    return Err(Error::Internal(format!("x_{j} - x_{i} involves X{} outside {span}", v + 1)));
                }
                pairs.push(PairChart { i, j, monomial, poly });
            }
        }
        Ok(BlowupChart { losers: losers.clone(), flipped: flipped.clone(), variables, pairs })
    }

    pub fn family(&self) -> &MaximalCommutingFamily {
        self.losers.family()
    }

    pub fn losers(&self) -> &LoserMap {
        &self.losers
    }

    pub fn flipped(&self) -> &BTreeSet<LabelSet> {
        &self.flipped
    }

    pub fn variables(&self) -> &[LabelSet] {
        &self.variables
    }

    /// Zero-based index of the variable attached to `member`.
    pub fn variable_of(&self, member: LabelSet) -> Option<usize> {
        self.variables.iter().position(|&m| m == member)
    }

    pub fn pairs(&self) -> &[PairChart] {
        &self.pairs
    }

    /// Factorization of `x_i - x_j`; swapping the labels negates `f`.
    pub fn pair(&self, i: u32, j: u32) -> Option<(Vec<usize>, IntPolynomial)> {
        let (a, b) = (i.min(j), i.max(j));
        let p = self.pairs.iter().find(|p| p.i == a && p.j == b)?;
        Some((p.monomial.clone(), if i > j { p.poly.clone() } else { -&p.poly }))
    }

    /// `x_i` as a polynomial in the chart variables (with `x_0 = 0`).
    pub fn coordinate(&self, i: u32) -> Option<IntPolynomial> {
        if i == 0 {
            return Some(IntPolynomial::zero(self.variables.len()));
        }
        let (mono, f) = self.pair(i, 0)?;
        Some(&f * &IntPolynomial::monomial(self.variables.len(), &mono))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Pair {
            i: u32,
            j: u32,
            monomial: Vec<usize>,
            poly: String,
        }
        let pairs: Vec<Pair> = self
            .pairs
            .iter()
            .map(|p| Pair { i: p.i, j: p.j, monomial: p.monomial.iter().map(|v| v + 1).collect(), poly: p.poly.to_string() })
            .collect();
        let residues: serde_json::Map<String, serde_json::Value> = self
            .variables
            .iter()
            .enumerate()
            .map(|(v, m)| (IntPolynomial::var_name(v), format!("A_{m}").into()))
            .collect();
        serde_json::json!({
            "family": self.family().serialize(false),
            "pairs": pairs,
            "residues": residues,
        })
    }

    /// A `tabular` listing each difference as unit times monomial.
    pub fn to_tex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{lll}\n$x_j - x_i$ & monomial & unit \\\\\n\\hline\n");
        for p in &self.pairs {
            let mono = if p.monomial.is_empty() {
                "1".to_string()
            } else {
                p.monomial.iter().map(|v| format!("X_{{{}}}", v + 1)).collect::<Vec<_>>().join(" ")
            };
            let poly = tex_poly(&p.poly);
            let _ = writeln!(out, "$x_{{{}}} - x_{{{}}}$ & ${mono}$ & ${poly}$ \\\\", p.j, p.i);
        }
        out.push_str("\\hline\n");
        for (v, m) in self.variables.iter().enumerate() {
            let set = m.to_vec().iter().map(u32::to_string).collect::<Vec<_>>().join("");
            let _ = writeln!(out, "$X_{{{}}}$ & $A_{{{set}}}$ & \\\\", v + 1);
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn tex_poly(p: &IntPolynomial) -> String {
    let s = p.to_string();
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'X' => {
                let mut idx = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    idx.push(*d);
                    chars.next();
                }
                let _ = write!(out, "X_{{{idx}}}");
            }
            '*' => {}
            '^' => out.push('^'),
            _ => out.push(c),
        }
    }
    out
}

/// Residues of the logarithmic part along each chart divisor: `X_ν ↦ A_{I_ν}`.
pub fn local_residues(system: &KzSystem, chart: &BlowupChart) -> Result<Vec<(LabelSet, RationalMatrix)>> {
    if chart.family().labels() != system.labels() {
        return Err(Error::Dimension(format!("chart for {} but system on {} labels", chart.family(), system.n())));
    }
    chart.variables.iter().map(|&m| Ok((m, system.residue(m)?))).collect()
}

/// Check that the chart coordinates reproduce every `x_i - x_j` at a point.
pub fn check_at(chart: &BlowupChart, point: &[BigInt]) -> bool {
    let labels = chart.family().labels().to_vec();
    let x: BTreeMap<u32, BigInt> = labels.iter().map(|&i| (i, chart.coordinate(i).expect("label").eval(point))).collect();
    chart.pairs.iter().all(|p| {
        let mono = IntPolynomial::monomial(chart.variables.len(), &p.monomial);
        &x[&p.j] - &x[&p.i] == (&p.poly * &mono).eval(point)
    })
}
