//! Univariate polynomials: characteristic polynomials and their rational roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::Rational;

/// Univariate polynomial with integer coefficients, lowest degree first.
///
/// Produced in primitive form with a positive leading coefficient; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly1 {
    coeffs: Vec<BigInt>,
}

impl IntPoly1 {
    /// Primitive integer multiple of a rational polynomial, leading
    /// coefficient made positive.
    pub fn from_rational(coeffs: &[Rational]) -> Self {
        let mut p = scale_to_integer(coeffs);
        if p.coeffs.last().is_some_and(|c| c.is_negative()) {
            p.coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        let rat: Vec<Rational> = coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect();
        Self::from_rational(&rat)
    }

    /// Primitive polynomial with the given rational roots (with repetition).
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = vec![Rational::one()];
        for r in roots {
            p = mul(&p, &[-r.clone(), Rational::one()]);
        }
        Self::from_rational(&p)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    fn to_rational(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for IntPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(x·I − A)`, scaled to a primitive integer
/// polynomial. Uses reduction to Hessenberg form.
pub fn char_poly(a: &RationalMatrix) -> IntPoly1 {
    IntPoly1::from_rational(&char_poly_rational(a))
}

/// Monic characteristic polynomial with rational coefficients.
pub fn char_poly_rational(a: &RationalMatrix) -> Vec<Rational> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else { continue };
        if i != m {
            for j in 0..n {
                let t = h[(i, j)].clone();
                h[(i, j)] = h[(m, j)].clone();
                h[(m, j)] = t;
            }
            for j in 0..n {
                let t = h[(j, i)].clone();
                h[(j, i)] = h[(j, m)].clone();
                h[(j, m)] = t;
            }
        }
        let t = h[(m, m - 1)].clone();
        for i in m + 1..n {
            if h[(i, m - 1)].is_zero() {
                continue;
            }
            let u = &h[(i, m - 1)] / &t;
            for j in 0..n {
                let v = &u * &h[(m, j)];
                h[(i, j)] -= v;
            }
            for j in 0..n {
                let v = &u * &h[(j, i)];
                h[(j, m)] += v;
            }
        }
    }
    let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for m in 1..=n {
        let mut next = mul(&p[m - 1], &[-h[(m - 1, m - 1)].clone(), Rational::one()]);
        let mut t = Rational::one();
        for i in (1..m).rev() {
            t *= &h[(i, i - 1)];
            if t.is_zero() {
                break;
            }
            let c = &t * &h[(i - 1, m - 1)];
            if !c.is_zero() {
                next = sub(&next, &scale(&p[i - 1], &c));
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// All rational roots of `p`, with multiplicity, in ascending order.
///
/// Every rational root `r/s` of a primitive polynomial has `s` dividing the
/// leading coefficient `D`, so `D·x` is an integer root of a monic integer
/// polynomial; those are isolated exactly with a Sturm sequence.
pub fn rational_roots(p: &IntPoly1) -> Vec<Rational> {
    let mut roots = Vec::new();
    let Some(_) = p.degree() else { return roots };
    let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    roots.extend(std::iter::repeat_with(Rational::zero).take(zeros));
    let mut f = IntPoly1 { coeffs: p.coeffs[zeros..].to_vec() };
    if f.degree() == Some(0) {
        return roots;
    }
    let fr = f.to_rational();
    let g = IntPoly1::from_rational(&exact_div(&fr, &gcd(&fr, &derivative(&fr))));
    let d = g.degree().unwrap();
    let lead = g.coeffs[d].clone();
    // h(y) = D^{d-1} g(y/D), monic with integer coefficients.
    let mut h = Vec::with_capacity(d + 1);
    let mut pow = BigInt::one();
    for i in (0..d).rev() {
        h.push((i, &g.coeffs[i] * &pow));
        pow *= &lead;
    }
    let mut hc = vec![BigInt::zero(); d + 1];
    for (i, c) in h {
        hc[i] = c;
    }
    hc[d] = BigInt::one();
    let h = IntPoly1 { coeffs: hc };
    let mut bound = BigInt::one();
    for c in &h.coeffs[..d] {
        if c.abs() > bound {
            bound = c.abs();
        }
    }
    bound += 1;
    let sturm = sturm_sequence(&h);
    let mut int_roots = Vec::new();
    isolate(&sturm, -&bound, bound, &mut int_roots);
    for y in int_roots {
        let r = Rational::new(y, lead.clone());
        let lin = [-r.clone(), Rational::one()];
        loop {
            let (q, rem) = div_rem(&f.to_rational(), &lin);
            if !rem.iter().all(Zero::is_zero) {
                break;
            }
            roots.push(r.clone());
            f = scale_to_integer(&q);
            if f.degree() == Some(0) {
                break;
            }
        }
    }
    roots.sort();
    roots
}

/// Integer roots in `(lo, hi]`.
fn isolate(sturm: &[IntPoly1], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let count = sign_changes(sturm, &lo) - sign_changes(sturm, &hi);
    if count == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if eval_int(&sturm[0], &hi).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid = (&lo + &hi).div_floor(&BigInt::from(2));
    isolate(sturm, lo, mid.clone(), out);
    isolate(sturm, mid, hi, out);
}

fn sign_changes(seq: &[IntPoly1], x: &BigInt) -> i64 {
    let mut changes = 0;
    let mut last = 0;
    for p in seq {
        let v = eval_int(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn eval_int(p: &IntPoly1, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn sturm_sequence(p: &IntPoly1) -> Vec<IntPoly1> {
    let mut seq = vec![p.clone()];
    let d = scale_to_integer(&derivative(&p.to_rational()));
    if d.degree().is_none() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (_, r) = div_rem(&seq[n - 2].to_rational(), &seq[n - 1].to_rational());
        let r = scale_to_integer(&r);
        if r.degree().is_none() {
            break;
        }
        seq.push(IntPoly1 { coeffs: r.coeffs.iter().map(|c| -c).collect() });
    }
    seq
}

/// Positive rational multiple with coprime integer coefficients.
fn scale_to_integer(coeffs: &[Rational]) -> IntPoly1 {
    let mut v = coeffs.to_vec();
    trim(&mut v);
    if v.is_empty() {
        return IntPoly1 { coeffs: Vec::new() };
    }
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    IntPoly1 { coeffs: ints.into_iter().map(|c| c / &content).collect() }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

fn derivative(a: &[Rational]) -> Vec<Rational> {
    a.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(k.into())).collect()
}

fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (i, x) in b.iter().enumerate() {
            r[shift + i] -= &c * x;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty());
    q
}

fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn char_poly_of_diagonal() {
        let a = RationalMatrix::diagonal(&[int(1), int(2)]);
        assert_eq!(char_poly(&a), IntPoly1::from_integers(&[2, -3, 1]));
        assert_eq!(char_poly(&a).to_string(), "x^2 - 3x + 2");
    }

    #[test]
    fn char_poly_of_companion() {
        // x^3 - 6x^2 + 11x - 6
        let c = RationalMatrix::from_i64(&[&[0, 0, 6], &[1, 0, -11], &[0, 1, 6]]);
        assert_eq!(char_poly(&c), IntPoly1::from_integers(&[-6, 11, -6, 1]));
    }

    #[test]
    fn roots_with_multiplicity() {
        // (x-3)^2 x
        let p = IntPoly1::from_integers(&[0, 9, -6, 1]);
        assert_eq!(rational_roots(&p), vec![int(0), int(3), int(3)]);
    }

    #[test]
    fn roots_with_denominators() {
        let roots = vec![frac(-7, 3), frac(1, 2), frac(1, 2), frac(5, 4), int(100)];
        let p = IntPoly1::from_roots(&roots);
        let mut expect = roots.clone();
        expect.sort();
        assert_eq!(rational_roots(&p), expect);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        // (x^2 - 2)(x + 1)
        let p = IntPoly1::from_integers(&[-2, -2, 1, 1]);
        assert_eq!(rational_roots(&p), vec![int(-1)]);
        // x^2 + 1
        assert!(rational_roots(&IntPoly1::from_integers(&[1, 0, 1])).is_empty());
    }
}
