use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial with integer coefficients in `X1..Xk`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn zero(nvars: usize) -> Self {
        IntPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    /// The variable `X_{k+1}` (zero-based `k`).
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars, "variable {k} out of {nvars}");
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    /// `Π X_k` over `vars` (zero-based).
    pub fn monomial(nvars: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &k in vars {
            e[k] += 1;
        }
        let mut p = Self::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).expect("just zeroed");
            self.terms.remove(&key);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Zero-based indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&k| self.terms.keys().any(|e| e[k] > 0)).collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, 1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    /// `self(X_1 = images[0], …)`; all images share one variable count.
    pub fn substitute(&self, images: &[IntPolynomial]) -> Result<IntPolynomial> {
        if images.len() != self.nvars {
            return Err(Error::Dimension(format!("{} images for {} variables", images.len(), self.nvars)));
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::Dimension("images have different variable counts".into()));
        }
        let mut acc = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                t = &t * &img.pow(k);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient by `Π X_k` over `vars`, or `None` if some term is not
    /// divisible.
    pub fn divide_by_monomial(&self, vars: &[usize]) -> Option<IntPolynomial> {
        let mut d = vec![0u32; self.nvars];
        for &k in vars {
            d[k] += 1;
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut q = e.clone();
            for (x, &y) in q.iter_mut().zip(&d) {
                *x = x.checked_sub(y)?;
            }
            out.add_term(q, c.clone());
        }
        Some(out)
    }

    fn binary(&self, other: &Self, sign: i32) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if sign < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Display name of zero-based variable `k`.
    pub fn var_name(k: usize) -> String {
        format!("X{}", k + 1)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        self.binary(o, 1)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        self.binary(o, -1)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.nvars, o.nvars, "variable counts differ");
        let mut out = IntPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Terms by ascending total degree; within a degree, earlier variables first.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { Self::var_name(v) } else { format!("{}^{k}", Self::var_name(v)) })
                .collect();
            let mono = mono.join("*");
            let neg = c.is_negative();
            if n > 0 || neg {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let abs = c.abs();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
