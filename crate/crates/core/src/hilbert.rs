//! Hilbert polynomials and universal lex ideals.
//!
//! A universal lex ideal in `K[x_lo..x_n]` with offsets `a_1..a_t` has
//! generators `δ_i = x_lo^{a_1} ... x_{lo+i-2}^{a_{i-1}} x_{lo+i-1}^{a_i+1}`
//! of degrees `b_i = a_1 + ... + a_i + 1`, and decomposes as the disjoint
//! union of the components `δ_i S^(i)` with `S^(i) = K[x_{lo+i-1}..x_n]`.
//! Its Hilbert polynomial is `sum_i C(t - b_i + m - i, m - i)` for `m`
//! variables.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{count_upto, Monomial};
use crate::poly::RationalPoly;

/// A Hilbert polynomial of an ideal in `n` variables, with its binomial
/// form once known.
#[derive(Clone, Debug)]
pub struct HilbertPolynomial {
    n: usize,
    poly: RationalPoly,
    b_list: Option<Vec<u64>>,
}

impl PartialEq for HilbertPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.poly == other.poly
    }
}

impl Eq for HilbertPolynomial {}

impl HilbertPolynomial {
    pub fn new(n: usize, poly: RationalPoly) -> Self {
        HilbertPolynomial {
            n,
            poly,
            b_list: None,
        }
    }

    /// `sum_i C(t - b_i + n - i, n - i)`, with the b-list attached.
    pub fn from_b_list(b: &[u64], n: usize) -> Result<Self> {
        validate_b_list(b, n)?;
        let mut poly = RationalPoly::zero();
        for (k, &bi) in b.iter().enumerate() {
            let d = n - (k + 1);
            poly = &poly + &RationalPoly::binomial(d as i64 - bi as i64, d);
        }
        Ok(HilbertPolynomial {
            n,
            poly,
            b_list: Some(b.to_vec()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &RationalPoly {
        &self.poly
    }

    pub fn b_list(&self) -> Option<&[u64]> {
        self.b_list.as_deref()
    }

    pub fn eval(&self, d: i64) -> BigRational {
        self.poly.eval_int(d)
    }

    /// Attaches the b-list computed by [`decompose`].
    pub fn with_b_list(mut self) -> Result<Self> {
        if self.b_list.is_none() {
            self.b_list = Some(decompose(&self.poly, self.n)?);
        }
        Ok(self)
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn validate_b_list(b: &[u64], n: usize) -> Result<()> {
    if b.is_empty() {
        return Err(Error::InvalidBList("empty".to_string()));
    }
    if b.len() > n {
        return Err(Error::InvalidBList(format!(
            "{} entries exceed {n} variables",
            b.len()
        )));
    }
    if b[0] == 0 {
        return Err(Error::InvalidBList("b_1 must be positive".to_string()));
    }
    if b.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidBList(format!("{b:?} is not non-decreasing")));
    }
    Ok(())
}

/// The unique `b_1 <= ... <= b_t` with `p = sum_i C(t - b_i + n - i, n - i)`
/// and `t <= n - 1`.
///
/// Term `i` has degree `d = n - i`. Its `t^{d-1}` coefficient is
/// `(d(d+1)/2 - d*b) / d!`, and the next term (if any) contributes
/// `1/(d-1)!` to the same coefficient. Matching gives two candidates: `b`
/// when term `i` is the last one, `b + 1` otherwise.
pub fn decompose(p: &RationalPoly, n: usize) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::not_hilbert(n, "need at least two variables"));
    }
    if p.is_zero() {
        return Err(Error::not_hilbert(n, "zero polynomial"));
    }
    let mut rem = p.clone();
    let mut b: Vec<u64> = Vec::new();
    for i in 1..n {
        let d = n - i;
        let lead = BigRational::new(BigInt::one(), BigInt::from(factorial(d as u64)));
        if rem.degree() != Some(d) || rem.coeff(d) != lead {
            return Err(Error::not_hilbert(
                n,
                format!("term {i} needs degree {d} with leading coefficient {lead}"),
            ));
        }
        let fact = BigRational::from_integer(BigInt::from(factorial(d as u64)));
        let dd = BigRational::from_integer(BigInt::from(d));
        let tri = BigRational::from_integer(BigInt::from(d * (d + 1) / 2));
        let last = (tri - fact * rem.coeff(d - 1)) / dd;
        let prev = b.last().copied().unwrap_or(1);
        let as_b = |r: &BigRational| -> Option<u64> {
            if !r.is_integer() {
                return None;
            }
            r.to_integer().to_u64().filter(|&v| v >= prev)
        };
        if let Some(bi) = as_b(&last) {
            let term = RationalPoly::binomial(d as i64 - bi as i64, d);
            if (&rem - &term).is_zero() {
                b.push(bi);
                return Ok(b);
            }
        }
        if d == 1 {
            break;
        }
        let cont = last + BigRational::one();
        let bi = as_b(&cont).ok_or_else(|| {
            Error::not_hilbert(n, format!("term {i} has no admissible integer b_{i}"))
        })?;
        rem = &rem - &RationalPoly::binomial(d as i64 - bi as i64, d);
        b.push(bi);
    }
    Err(Error::not_hilbert(
        n,
        "remainder does not vanish within n - 1 terms",
    ))
}

/// `p_I = C(t + n - 1, n - 1) - p_{S/I}`.
pub fn quotient_to_ideal_polynomial(q: &RationalPoly, n: usize) -> Result<HilbertPolynomial> {
    if n == 0 {
        return Err(Error::not_hilbert(n, "need at least one variable"));
    }
    if q.degree().is_some_and(|d| d + 1 > n) {
        return Err(Error::not_hilbert(
            n,
            format!("quotient polynomial degree exceeds {}", n - 1),
        ));
    }
    let full = RationalPoly::binomial(n as i64 - 1, n - 1);
    Ok(HilbertPolynomial::new(n, &full - q))
}

/// A universal lex ideal of `K[x_lo..x_n]`, or the whole ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniversalLexIdeal {
    lo: usize,
    n: usize,
    offsets: Vec<u32>,
    full_ring: bool,
}

impl UniversalLexIdeal {
    pub fn new(lo: usize, n: usize, offsets: Vec<u32>) -> Result<Self> {
        if lo == 0 || lo > n {
            return Err(Error::InvalidRange { lo, n });
        }
        let m = n - lo + 1;
        if offsets.is_empty() || offsets.len() > m {
            return Err(Error::InvalidBList(format!(
                "{} generators in {m} variables",
                offsets.len()
            )));
        }
        Ok(UniversalLexIdeal {
            lo,
            n,
            offsets,
            full_ring: false,
        })
    }

    /// `U = K[x_lo..x_n]`: one component `1 * S`, `b_1 = 0`.
    pub fn full_ring(lo: usize, n: usize) -> Result<Self> {
        if lo == 0 || lo > n {
            return Err(Error::InvalidRange { lo, n });
        }
        Ok(UniversalLexIdeal {
            lo,
            n,
            offsets: vec![0],
            full_ring: true,
        })
    }

    /// `a_1 = b_1 - 1`, `a_i = b_i - b_{i-1}`.
    pub fn from_b_list(b: &[u64], lo: usize, n: usize) -> Result<Self> {
        if lo == 0 || lo > n {
            return Err(Error::InvalidRange { lo, n });
        }
        validate_b_list(b, n - lo + 1)?;
        let mut offsets = vec![(b[0] - 1) as u32];
        offsets.extend(b.windows(2).map(|w| (w[1] - w[0]) as u32));
        Self::new(lo, n, offsets)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n - self.lo + 1
    }

    /// Number of components.
    pub fn t(&self) -> usize {
        self.offsets.len()
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn is_full_ring(&self) -> bool {
        self.full_ring
    }

    /// At most `nvars - 1` generators, or the whole ring.
    pub fn is_proper(&self) -> bool {
        self.full_ring || self.t() < self.nvars()
    }

    /// First variable of the component ring `S^(i)`.
    pub fn component_lo(&self, i: usize) -> usize {
        self.lo + i - 1
    }

    /// `δ_i` (1-based), a monomial of `K[x_lo..x_n]`.
    pub fn delta(&self, i: usize) -> Monomial {
        assert!(1 <= i && i <= self.t(), "component {i} out of range");
        if self.full_ring {
            return Monomial::one(self.lo, self.n);
        }
        let mut exp = vec![0u32; self.nvars()];
        exp[..i].copy_from_slice(&self.offsets[..i]);
        exp[i - 1] += 1;
        Monomial::new(self.lo, self.n, exp).expect("shape")
    }

    /// `b_i = deg δ_i`.
    pub fn b(&self, i: usize) -> u64 {
        assert!(1 <= i && i <= self.t(), "component {i} out of range");
        if self.full_ring {
            return 0;
        }
        self.offsets[..i].iter().map(|&a| a as u64).sum::<u64>() + 1
    }

    pub fn b_list(&self) -> Vec<u64> {
        (1..=self.t()).map(|i| self.b(i)).collect()
    }

    pub fn generators(&self) -> Vec<Monomial> {
        (1..=self.t()).map(|i| self.delta(i)).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.lo, self.n, self.generators()).expect("same ambient")
    }

    /// The universal lex ideal `U^(>=2)` of `K[x_{lo+1}..x_n]` with offsets
    /// `(a_1 + a_2, a_3, ...)`; `None` when `t = 1`.
    pub fn suffix(&self) -> Option<UniversalLexIdeal> {
        if self.t() < 2 {
            return None;
        }
        let mut offsets = vec![self.offsets[0] + self.offsets[1]];
        offsets.extend_from_slice(&self.offsets[2..]);
        Some(UniversalLexIdeal {
            lo: self.lo + 1,
            n: self.n,
            offsets,
            full_ring: false,
        })
    }

    /// `δ_i * u` for `u` in `S^(i)`.
    pub fn full_monomial(&self, i: usize, u: &Monomial) -> Result<Monomial> {
        let lo = self.component_lo(i);
        if u.lo() != lo || u.n() != self.n {
            return Err(Error::AmbientMismatch {
                expected_lo: lo,
                expected_n: self.n,
                found_lo: u.lo(),
                found_n: u.n(),
            });
        }
        Ok(self.delta(i).mul(&u.with_lo(self.lo).expect("fits")))
    }

    /// The component `i` and `u` in `S^(i)` with `m = δ_i u`.
    pub fn split(&self, m: &Monomial) -> Result<(usize, Monomial)> {
        if m.lo() != self.lo || m.n() != self.n {
            return Err(Error::AmbientMismatch {
                expected_lo: self.lo,
                expected_n: self.n,
                found_lo: m.lo(),
                found_n: m.n(),
            });
        }
        for i in 1..=self.t() {
            if let Some(q) = m.checked_div(&self.delta(i)) {
                if let Some(u) = q.with_lo(self.component_lo(i)) {
                    return Ok((i, u));
                }
            }
        }
        Err(Error::NotInUniversal(m.to_string()))
    }

    /// `#U^(i)_{<= e}`.
    pub fn count_component_upto(&self, i: usize, e: i64) -> BigUint {
        count_upto(self.component_lo(i), self.n, e - self.b(i) as i64)
    }

    /// `#U_{<= e}`.
    pub fn count_upto(&self, e: i64) -> BigUint {
        (1..=self.t()).map(|i| self.count_component_upto(i, e)).sum()
    }

    /// Hilbert polynomial of `U` in its `nvars` variables.
    pub fn polynomial(&self) -> HilbertPolynomial {
        let m = self.nvars();
        if self.full_ring {
            let poly = RationalPoly::binomial(m as i64 - 1, m - 1);
            return HilbertPolynomial::new(m, poly);
        }
        HilbertPolynomial::from_b_list(&self.b_list(), m).expect("valid offsets")
    }

    /// Recognises the universal lex shape; `(1)` maps to the full ring.
    pub fn recognize(ideal: &MonomialIdeal) -> Option<UniversalLexIdeal> {
        let (lo, n) = (ideal.lo(), ideal.n());
        if ideal.is_unit() {
            return Self::full_ring(lo, n).ok();
        }
        let gens = ideal.generators();
        if gens.is_empty() || gens.len() > n - lo + 1 {
            return None;
        }
        // Generators are lex-descending, so δ_i is gens[i-1].
        let mut offsets = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let e = g.exponents();
            if e[k] == 0 || e[k + 1..].iter().any(|&x| x > 0) {
                return None;
            }
            if e[..k] != offsets[..] {
                return None;
            }
            offsets.push(e[k] - 1);
        }
        let u = Self::new(lo, n, offsets).ok()?;
        (u.to_ideal() == *ideal).then_some(u)
    }
}

impl fmt::Display for UniversalLexIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.full_ring {
            return f.write_str("(1)");
        }
        write!(f, "{}", self.to_ideal())
    }
}

/// `sum_i C(t - b_i + n - i, n - i)` with the b-list attached.
pub fn polynomial_of_universal(u: &UniversalLexIdeal) -> HilbertPolynomial {
    u.polynomial()
}

pub fn universal_from_b(b: &[u64], n: usize) -> Result<UniversalLexIdeal> {
    UniversalLexIdeal::from_b_list(b, 1, n)
}

pub fn universal_to_ideal(u: &UniversalLexIdeal) -> MonomialIdeal {
    u.to_ideal()
}

pub fn is_universal_lex(ideal: &MonomialIdeal) -> Option<UniversalLexIdeal> {
    UniversalLexIdeal::recognize(ideal)
}
