//! Dense univariate polynomials over ℚ.
//!
//! `coeffs[k]` is the coefficient of `X^k`. The vector is empty for the zero
//! polynomial and otherwise ends with a nonzero leading coefficient, so the
//! degree of zero is `None` rather than an ordinary integer.

use crate::error::{Error, Result};
use crate::number::{int, Rat, Sign};
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `X - r`
    pub fn linear_root(r: &Rat) -> Self {
        Poly {
            coeffs: vec![-r.clone(), Rat::one()],
        }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `lc * Π (X - r)^m`
    pub fn from_roots(lc: &Rat, roots: &[(Rat, u32)]) -> Self {
        let mut p = Poly::constant(lc.clone());
        for (r, m) in roots {
            let factor = Poly::linear_root(r);
            for _ in 0..*m {
                p = &p * &factor;
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn lc_sign(&self) -> Sign {
        self.lc().map_or(Sign::Zero, Sign::of)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `X^k · self`
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rat) -> Sign {
        Sign::of(&self.eval(x))
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = divisor · quot + rem` with `deg rem < deg divisor`.
    pub fn euclid_div(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree().filter(|&da| da >= db) else {
            return Ok((Poly::zero(), self.clone()));
        };
        let mut quot = vec![Rat::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = &rem[k + db] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.euclid_div(divisor).map(|(_, r)| r)
    }

    /// Exact division by `X - x`, returning the quotient if `x` is a root.
    pub fn deflate(&self, x: &Rat) -> Option<Poly> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        // synthetic division from the top
        let mut quot = vec![Rat::zero(); d];
        let mut carry = Rat::zero();
        for k in (1..=d).rev() {
            carry = carry * x + &self.coeffs[k];
            quot[k - 1] = carry.clone();
        }
        let remainder = carry * x + &self.coeffs[0];
        remainder.is_zero().then(|| Poly::from_coeffs(quot))
    }

    /// Strips `(X - x)` as often as it divides, returning the multiplicity and cofactor.
    pub fn strip_root(&self, x: &Rat) -> Result<(u32, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.deflate(x) {
            cur = next;
            m += 1;
        }
        Ok((m, cur))
    }

    /// Largest `m` with `(X - x)^m` dividing `self`.
    pub fn root_multiplicity(&self, x: &Rat) -> Result<u32> {
        self.strip_root(x).map(|(m, _)| m)
    }

    /// `1 + max |a_k / a_p|`; every real root lies strictly inside `(-bound, bound)`.
    pub fn cauchy_root_bound(&self) -> Option<Rat> {
        let lc = self.lc()?;
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| (c / lc).abs())
            .max()
            .unwrap_or_else(Rat::zero);
        Some(max + Rat::one())
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}
