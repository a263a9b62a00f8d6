//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order. The vector is either
//! empty (zero polynomial) or ends in a nonzero coefficient.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RationalPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `C(t + shift, d)` as a polynomial in `t`, i.e.
    /// `(t + shift)(t + shift - 1)...(t + shift - d + 1) / d!`.
    pub fn binomial(shift: i64, d: usize) -> Self {
        let mut p = Self::one();
        for j in 0..d as i64 {
            let factor = Self::from_integers([shift - j, 1]);
            p = &p * &factor;
        }
        let denom = BigRational::from_integer(BigInt::from(factorial(d as u64)));
        p.scale(&(BigRational::one() / denom))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(t)))
    }

    /// Parses an ascending coefficient list such as `1,-5/2,1,1/6`.
    pub fn parse_coeff_list(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let coeffs = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Ascending coefficients as `p/q` strings (integers without a slash).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_to_string).collect()
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::parse("rational", s);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn rational_to_string(r: &BigRational) -> String {
    use alloc::format;
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoly {
    /// Descending powers of `t`, e.g. `1/6*t^3 + t^2 - 5/2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => f.write_str(&rational_to_string(&abs))?,
                _ => {
                    if !unit {
                        write!(f, "{}*", rational_to_string(&abs))?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_poly_matches_integer_binomial() {
        for shift in -6..6 {
            for d in 0..5usize {
                let p = RationalPoly::binomial(shift, d);
                for t in 0..12i64 {
                    let arg = t + shift;
                    // polynomial and combinatorial binomial agree once the top is >= 0
                    if arg >= 0 {
                        let expect = crate::binomial(arg, d as i64);
                        assert_eq!(p.eval_int(t), BigRational::from_integer(expect.into()));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p = RationalPoly::parse_coeff_list("1,-5/2,1,1/6").unwrap();
        assert_eq!(p.coeffs(), &[q(1, 1), q(-5, 2), q(1, 1), q(1, 6)]);
        assert_eq!(p.to_string(), "1/6*t^3 + t^2 - 5/2*t + 1");
        assert_eq!(p.coeff_strings(), ["1", "-5/2", "1", "1/6"]);
        assert!(RationalPoly::parse_coeff_list("1,x").is_err());
        assert!(RationalPoly::parse_coeff_list("1/0").is_err());
        assert_eq!(RationalPoly::parse_coeff_list("0,0").unwrap(), RationalPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let a = RationalPoly::from_integers([1, 1]);
        let b = RationalPoly::from_integers([-1, 1]);
        assert_eq!(&a * &b, RationalPoly::from_integers([-1, 0, 1]));
        assert_eq!(&(&a - &a), &RationalPoly::zero());
        assert_eq!((&a + &b).degree(), Some(1));
        assert_eq!((-&a).coeff(0), q(-1, 1));
    }
}
