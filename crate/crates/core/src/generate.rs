//! Seeded random integrable systems: rank-one seeds with rational scalar
//! residues, optionally raised in rank by middle convolutions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kz::KzSystem;
use crate::linalg::{eigenvalues, frac, kernel_basis, Rational};
use crate::midconv::middle_convolution_at;

/// Bumped whenever the same seed would produce a different system.
pub const GENERATOR_VERSION: u32 = 1;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| <= 9`, `1 <= q <= 4`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let q = small_rational(rng);
        if q != crate::linalg::rational::zero() {
            return q;
        }
    }
}

/// Rank-one system with distinct nonzero residues.
pub fn rank_one(n: usize, rng: &mut impl Rng) -> Result<KzSystem> {
    let mut used: Vec<Rational> = Vec::new();
    let mut values = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            let v = loop {
                let q = nonzero_rational(rng);
                if !used.contains(&q) {
                    break q;
                }
            };
            used.push(v.clone());
            values.push(((i, j), v));
        }
    }
    KzSystem::scalar(n, values)
}

/// One middle convolution in the tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStep {
    pub var: u32,
    /// Additions `(var, j, λ)` applied first to create kernels.
    pub additions: Vec<(u32, u32, Rational)>,
    pub mu: Rational,
    pub rank: usize,
}

/// `steps` middle convolutions in random variables starting from a rank-one
/// seed, keeping every rank at most `max_rank`. Additions on pairs through
/// the convolution variable make some `A_{var,j}` singular when needed.
pub fn mc_tower(n: usize, steps: usize, max_rank: usize, rng: &mut impl Rng) -> Result<(KzSystem, Vec<TowerStep>)> {
    let mut system = rank_one(n, rng)?;
    let mut log = Vec::new();
    for _ in 0..steps {
        let (next, step) = tower_step(&system, max_rank, rng)?;
        system = next;
        log.push(step);
    }
    Ok((system, log))
}

fn tower_step(system: &KzSystem, max_rank: usize, rng: &mut impl Rng) -> Result<(KzSystem, TowerStep)> {
    let n = system.n() as u32;
    for _ in 0..200 {
        let var = rng.gen_range(0..n);
        let mut others: Vec<u32> = (0..n).filter(|&j| j != var).collect();
        others.shuffle(rng);
        let lifted = (n as usize - 1) * system.rank();
        let mut current = system.clone();
        let mut additions = Vec::new();
        let mut removed = 0;
        // Make A_{var,j} singular for a random prefix of the other labels.
        let wanted = rng.gen_range(0..=others.len());
        for &j in &others[..wanted] {
            if lifted - removed <= max_rank {
                break;
            }
            let eig = eigenvalues(current.pair(var, j))?;
            let (e, _) = eig.choose(rng).expect("nonempty spectrum").clone();
            let lambda = -e;
            current = current.addition(var, j, &lambda)?;
            additions.push((var, j, lambda));
            removed += kernel_basis(current.pair(var, j)).dim();
        }
        let inf = current.infinity_residue(var)?;
        let mu = if rng.gen_bool(0.5) {
            let eig = eigenvalues(&inf)?;
            eig.choose(rng).map(|(e, _)| e.clone()).filter(|e| *e != crate::linalg::rational::zero())
        } else {
            None
        };
        let mu = mu.unwrap_or_else(|| nonzero_rational(rng));
        let next = match middle_convolution_at(&current, var, &mu) {
            Ok(s) => s,
            Err(Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        };
        if next.rank() > max_rank || next.rank() < 2 {
            continue;
        }
        let rank = next.rank();
        return Ok((next, TowerStep { var, additions, mu, rank }));
    }
    Err(Error::domain(format!("no tower step within rank {max_rank} found for n = {n}")))
}
