use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Tournament counts for `n` teams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    /// Bracket shapes drawn in the plane.
    pub patterns: BigUint,
    /// Shapes with a distinguished winning leaf, up to isomorphism.
    pub win_types: BigUint,
    /// Shapes up to isomorphism.
    pub types: BigUint,
    /// Fully labelled tournaments, `(2n-3)!!`.
    pub tournaments: BigUint,
}

/// Rows for `n = 1..=n_max`, computed from the convolution recurrences.
pub fn count_sequences(n_max: usize) -> Result<Vec<CountRow>> {
    if n_max < 2 {
        return Err(Error::domain(format!("n_max must be at least 2, got {n_max}")));
    }
    let len = n_max + 1;
    let mut t = vec![BigUint::zero(); len];
    let mut w = vec![BigUint::zero(); len];
    let mut u = vec![BigUint::zero(); len];
    let mut k = vec![BigUint::zero(); len];
    t[1] = BigUint::one();
    w[1] = BigUint::one();
    u[1] = BigUint::one();
    k[1] = BigUint::one();
    let binom = binomials(n_max);
    for n in 2..len {
        let mut ts = BigUint::zero();
        let mut ws = BigUint::zero();
        let mut us = BigUint::zero();
        let mut ks = BigUint::zero();
        for j in 1..n {
            ts += &t[j] * &t[n - j];
            ws += &w[j] * &u[n - j];
            us += &u[j] * &u[n - j];
            ks += &binom[n][j] * &k[j] * &k[n - j];
        }
        if n % 2 == 0 {
            us += &u[n / 2];
        }
        t[n] = ts;
        w[n] = ws;
        u[n] = us >> 1;
        k[n] = ks >> 1;
    }
    Ok((1..len)
        .map(|n| CountRow {
            n,
            patterns: t[n].clone(),
            win_types: w[n].clone(),
            types: u[n].clone(),
            tournaments: k[n].clone(),
        })
        .collect())
}

/// `(2n-3)!!`, with the convention `1` for `n = 1`.
pub fn double_factorial_count(n: usize) -> BigUint {
    (1..n).fold(BigUint::one(), |acc, j| acc * BigUint::from(2 * j - 1))
}

fn binomials(n: usize) -> Vec<Vec<BigUint>> {
    let mut c = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = BigUint::one();
        for j in 1..=i {
            c[i][j] = &c[i - 1][j - 1] + &c[i - 1][j];
        }
    }
    c
}
