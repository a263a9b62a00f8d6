//! Monomials in a variable range `x_lo, ..., x_n`, monomial orders and
//! counting.
//!
//! Variables are indexed from 1. A monomial of the subring
//! `K[x_lo, ..., x_n]` keeps `lo` so it can be embedded into the full ring
//! without re-indexing.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{count_degree_vars, count_upto_vars};
use crate::error::{Error, Result};

/// A monomial `x_lo^e_lo * ... * x_n^e_n`.
///
/// The derived `Ord` compares `lo`, `n` and then the exponent vectors
/// lexicographically, so for monomials of the same ambient range it is the
/// lex order with `x_lo > ... > x_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    lo: usize,
    n: usize,
    exp: Vec<u32>,
}

fn check_range(lo: usize, n: usize) -> Result<()> {
    if lo == 0 || lo > n {
        return Err(Error::InvalidRange { lo, n });
    }
    Ok(())
}

impl Monomial {
    pub fn new(lo: usize, n: usize, exp: Vec<u32>) -> Result<Self> {
        check_range(lo, n)?;
        if exp.len() != n - lo + 1 {
            return Err(Error::ExponentLength {
                expected: n - lo + 1,
                found: exp.len(),
            });
        }
        Ok(Monomial { lo, n, exp })
    }

    /// The constant monomial of `K[x_lo..x_n]`.
    ///
    /// # Panics
    /// If `lo` is zero or larger than `n`.
    pub fn one(lo: usize, n: usize) -> Self {
        check_range(lo, n).expect("valid variable range");
        Monomial {
            lo,
            n,
            exp: vec![0; n - lo + 1],
        }
    }

    /// `x_i^k` in `K[x_lo..x_n]`.
    ///
    /// # Panics
    /// If `i` is outside `lo..=n`.
    pub fn power(lo: usize, n: usize, i: usize, k: u32) -> Self {
        assert!(lo <= i && i <= n, "variable x{i} outside x{lo}..x{n}");
        let mut m = Self::one(lo, n);
        m.exp[i - lo] = k;
        m
    }

    pub fn var(lo: usize, n: usize, i: usize) -> Self {
        Self::power(lo, n, i, 1)
    }

    /// Builds a monomial from `(variable, exponent)` pairs.
    pub fn from_pairs(lo: usize, n: usize, pairs: &[(usize, u32)]) -> Result<Self> {
        check_range(lo, n)?;
        let mut m = Self::one(lo, n);
        for &(i, k) in pairs {
            if i < lo || i > n {
                return Err(Error::parse("monomial", alloc::format!("x{i} outside x{lo}..x{n}")));
            }
            m.exp[i - lo] += k;
        }
        Ok(m)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.exp.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exp
    }

    /// Exponent of `x_i`; zero for variables outside the range.
    pub fn exponent(&self, i: usize) -> u32 {
        if i < self.lo || i > self.n {
            0
        } else {
            self.exp[i - self.lo]
        }
    }

    pub fn degree(&self) -> u64 {
        self.exp.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exp.iter().all(|&e| e == 0)
    }

    /// Largest `i` with `x_i | u`; `lo` for the constant monomial.
    pub fn max_index(&self) -> usize {
        self.exp
            .iter()
            .rposition(|&e| e > 0)
            .map_or(self.lo, |p| p + self.lo)
    }

    pub fn same_ambient(&self, other: &Monomial) -> bool {
        self.lo == other.lo && self.n == other.n
    }

    pub(crate) fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected_lo: self.lo,
                expected_n: self.n,
                found_lo: other.lo,
                found_n: other.n,
            })
        }
    }

    /// `self | other`, comparing exponents by absolute variable index.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.same_ambient(other) {
            return self.exp.iter().zip(&other.exp).all(|(a, b)| a <= b);
        }
        (self.lo..=self.n).all(|i| self.exponent(i) <= other.exponent(i))
    }

    /// Product; the result lives in `other`'s ambient range, which must
    /// contain the support of `self`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = other.clone();
        for i in self.lo..=self.n {
            let e = self.exponent(i);
            if e > 0 {
                assert!(i >= out.lo && i <= out.n, "support outside ambient range");
                out.exp[i - out.lo] += e;
            }
        }
        out
    }

    pub fn mul_var(&self, i: usize, k: u32) -> Monomial {
        let mut out = self.clone();
        out.exp[i - self.lo] += k;
        out
    }

    /// `self / other` when `other | self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = self.clone();
        for i in other.lo..=other.n {
            let e = other.exponent(i);
            if e > 0 {
                out.exp[i - out.lo] -= e;
            }
        }
        Some(out)
    }

    /// `u / x_i`, if `x_i | u`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        let mut out = self.clone();
        out.exp[i - self.lo] -= 1;
        Some(out)
    }

    /// Removes every factor `x_lo`, landing in `K[x_{lo+1}..x_n]`.
    /// `None` when `lo == n` (no variables would remain).
    pub fn strip_leading(&self) -> Option<Monomial> {
        if self.lo == self.n {
            return None;
        }
        Some(Monomial {
            lo: self.lo + 1,
            n: self.n,
            exp: self.exp[1..].to_vec(),
        })
    }

    /// The same monomial with first variable `lo`; `None` if the support
    /// does not fit.
    pub fn with_lo(&self, lo: usize) -> Option<Monomial> {
        if lo == 0 || lo > self.n {
            return None;
        }
        if lo <= self.lo {
            let mut exp = vec![0; self.lo - lo];
            exp.extend_from_slice(&self.exp);
            return Some(Monomial { lo, n: self.n, exp });
        }
        if self.exp[..lo - self.lo].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial {
            lo,
            n: self.n,
            exp: self.exp[lo - self.lo..].to_vec(),
        })
    }

    /// The same monomial with last variable `n`; `None` if the support does
    /// not fit.
    pub fn with_n(&self, n: usize) -> Option<Monomial> {
        if n < self.lo {
            return None;
        }
        let mut exp = self.exp.clone();
        if n >= self.n {
            exp.resize(n - self.lo + 1, 0);
        } else {
            if exp[n - self.lo + 1..].iter().any(|&e| e > 0) {
                return None;
            }
            exp.truncate(n - self.lo + 1);
        }
        Some(Monomial { lo: self.lo, n, exp })
    }

    /// Parses `x1^2*x3`, `x2`, or `1` in `K[x_lo..x_n]`.
    pub fn parse(s: &str, lo: usize, n: usize) -> Result<Self> {
        check_range(lo, n)?;
        let s = s.trim();
        let mut m = Self::one(lo, n);
        if s == "1" {
            return Ok(m);
        }
        if s.is_empty() {
            return Err(Error::parse("monomial", "empty string"));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::parse("monomial", String::from(factor)))?;
            let (idx, pow) = match body.split_once('^') {
                Some((i, p)) => (i, p),
                None => (body, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::parse("monomial", String::from(factor)))?;
            let pow: u32 = pow
                .parse()
                .map_err(|_| Error::parse("monomial", String::from(factor)))?;
            if idx < lo || idx > n {
                return Err(Error::parse(
                    "monomial",
                    alloc::format!("x{idx} outside x{lo}..x{n}"),
                ));
            }
            m.exp[idx - lo] += pow;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (p, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", p + self.lo)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The monomial orders used in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with `x_lo > ... > x_n`.
    Lex,
    /// Degree first (higher degree is larger), then lex.
    DegLex,
    /// Opposite degree lex: lower degree is larger, ties broken by lex.
    OpLex,
}

impl MonomialOrder {
    pub fn cmp(self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        u.check_ambient(v)?;
        Ok(self.compare(u, v))
    }

    /// Comparison without the ambient check.
    pub(crate) fn compare(self, u: &Monomial, v: &Monomial) -> Ordering {
        let lex = || u.exp.cmp(&v.exp);
        match self {
            MonomialOrder::Lex => lex(),
            MonomialOrder::DegLex => u.degree().cmp(&v.degree()).then_with(lex),
            MonomialOrder::OpLex => v.degree().cmp(&u.degree()).then_with(lex),
        }
    }
}

/// All monomials of degree `d` in `x_lo..x_n`, sorted descending by `order`.
///
/// Every order restricts to lex on a single degree, so the output is the
/// lex-descending list.
pub fn enumerate_degree(lo: usize, n: usize, d: u64, order: MonomialOrder) -> Vec<Monomial> {
    let _ = order;
    let mut out = Vec::new();
    let mut exp = vec![0u32; n - lo + 1];
    fill_degree(&mut exp, 0, d, &mut |e| {
        out.push(Monomial {
            lo,
            n,
            exp: e.to_vec(),
        })
    });
    out
}

fn fill_degree(exp: &mut [u32], pos: usize, rem: u64, emit: &mut dyn FnMut(&[u32])) {
    if pos + 1 == exp.len() {
        exp[pos] = rem as u32;
        emit(exp);
        exp[pos] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        exp[pos] = e as u32;
        fill_degree(exp, pos + 1, rem - e, emit);
    }
    exp[pos] = 0;
}

/// All monomials of degree at most `d`, in descending opposite degree lex
/// order (degree ascending, lex descending within a degree).
pub fn enumerate_upto(lo: usize, n: usize, d: u64) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|k| enumerate_degree(lo, n, k, MonomialOrder::Lex))
        .collect()
}

/// Number of monomials of degree at most `d` in `x_lo..x_n`; zero for
/// `d < 0`.
pub fn count_upto(lo: usize, n: usize, d: i64) -> BigUint {
    count_upto_vars(n + 1 - lo, d)
}

/// Number of monomials of degree exactly `d` in `x_lo..x_n`.
pub fn count_degree(lo: usize, n: usize, d: i64) -> BigUint {
    count_degree_vars(n + 1 - lo, d)
}

/// `#{v : deg v = deg u, v <=_lex u}` by closed-form counting.
pub fn count_lex_leq(u: &Monomial) -> BigUint {
    let m = u.nvars();
    let mut rem = u.degree() as i64;
    let mut acc = BigUint::one();
    for (p, &e) in u.exp.iter().enumerate() {
        let k = m - p - 1;
        if k == 0 {
            break;
        }
        // v agrees with u before p and has a smaller exponent at p; the
        // remaining degree lies in (rem - e, rem] over the k later variables.
        let e = e as i64;
        acc += count_upto_vars(k, rem) - count_upto_vars(k, rem - e);
        rem -= e;
    }
    acc
}

/// Strips the powers of `x_1` from a monomial of `K[x_1..x_n]`, landing in
/// `K[x_2..x_n]`.
pub fn rho_hat(u: &Monomial) -> Result<Monomial> {
    if u.lo != 1 {
        return Err(Error::InvalidRange { lo: u.lo, n: u.n });
    }
    u.strip_leading().ok_or(Error::InvalidRange { lo: 2, n: u.n })
}
