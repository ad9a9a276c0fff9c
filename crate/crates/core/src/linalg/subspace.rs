use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A subspace of `Q^d`, held as a basis in reduced row echelon form.
///
/// The echelon basis is unique, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = RationalMatrix::from_fn(vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        for j in 0..self.ambient {
            let mut acc = Rational::zero();
            for (c, b) in coords.iter().zip(&self.basis) {
                if !c.is_zero() && !b[j].is_zero() {
                    acc += c * &b[j];
                }
            }
            if acc != v[j] {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient, &self.basis)
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &RationalMatrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// Right kernel of `a`, as an echelon subspace of `Q^cols`.
pub fn kernel_basis(a: &RationalMatrix) -> Subspace {
    let (r, pivots) = a.rref();
    let n = a.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

/// Invertible matrix whose columns are the basis of `s` followed by the
/// standard vectors at the non-pivot positions.
pub fn complete_basis(s: &Subspace) -> RationalMatrix {
    let d = s.ambient();
    let mut columns: Vec<Vec<Rational>> = s.basis().to_vec();
    columns.extend((0..d).filter(|c| !s.pivots().contains(c)).map(|c| unit(d, c)));
    RationalMatrix::from_columns(d, &columns)
}

/// Matrix of `a` on the invariant subspace `s`, in the echelon basis of `s`.
pub fn restriction(a: &RationalMatrix, s: &Subspace) -> Result<RationalMatrix> {
    check_square(a, s)?;
    let k = s.dim();
    let mut out = RationalMatrix::zeros(k, k);
    for (j, b) in s.basis().iter().enumerate() {
        let coords = s.coordinates(&a.apply(b)).ok_or(Error::NotInvariant)?;
        for (i, c) in coords.into_iter().enumerate() {
            out[(i, j)] = c;
        }
    }
    Ok(out)
}

/// Matrix induced by `a` on `Q^d / s`, in the basis of the standard vectors
/// completing `s` (the trailing columns of [`complete_basis`]).
pub fn quotient(a: &RationalMatrix, s: &Subspace) -> Result<RationalMatrix> {
    check_square(a, s)?;
    let d = s.ambient();
    let free: Vec<usize> = (0..d).filter(|c| !s.pivots().contains(c)).collect();
    if !s.is_invariant_under(a) {
        return Err(Error::NotInvariant);
    }
    let mut out = RationalMatrix::zeros(free.len(), free.len());
    for (j, &f) in free.iter().enumerate() {
        let w = a.column(f);
        // w = Σ c_i s_i + Σ d_k e_k with c_i read off the pivots.
        for (i, &g) in free.iter().enumerate() {
            let mut v = w[g].clone();
            for (b, &p) in s.basis().iter().zip(s.pivots()) {
                if !w[p].is_zero() && !b[g].is_zero() {
                    v -= &w[p] * &b[g];
                }
            }
            out[(i, j)] = v;
        }
    }
    Ok(out)
}

fn check_square(a: &RationalMatrix, s: &Subspace) -> Result<()> {
    if !a.is_square() || a.rows() != s.ambient() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix on a subspace of dimension-{} space",
            a.rows(),
            a.cols(),
            s.ambient()
        )));
    }
    Ok(())
}
