//! Monomial ideals.
//!
//! An ideal is stored by its minimal generators, sorted lex-descending. The
//! Hilbert series numerator comes from the pivot recursion
//! `Q(S/I) = Q(S/(I + (x))) + z * Q(S/(I : x))`; graded dimensions are
//! counted independently by slicing on the first variable.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{binomial, binomial_i, count_degree_vars};
use crate::error::{Error, Result};
use crate::hilbert::HilbertPolynomial;
use crate::ladder::MaxSequence;
use crate::monomial::{enumerate_degree, Monomial, MonomialOrder};
use crate::poly::RationalPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    lo: usize,
    n: usize,
    gens: Vec<Monomial>,
}

/// Keeps the divisibility-minimal elements, sorted lex-descending and
/// deduplicated.
fn minimal_elements(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize<I>(lo: usize, n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if lo == 0 || lo > n {
            return Err(Error::InvalidRange { lo, n });
        }
        let probe = Monomial::one(lo, n);
        let gens = gens
            .into_iter()
            .map(|g| probe.check_ambient(&g).map(|_| g))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            lo,
            n,
            gens: minimal_elements(gens),
        })
    }

    pub fn zero(lo: usize, n: usize) -> Self {
        Self::minimalize(lo, n, []).expect("valid range")
    }

    pub fn unit(lo: usize, n: usize) -> Self {
        Self::minimalize(lo, n, [Monomial::one(lo, n)]).expect("valid range")
    }

    /// Parses generators written as `x1^2*x2` strings.
    pub fn parse<'a, I>(lo: usize, n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let gens = gens
            .into_iter()
            .map(|s| Monomial::parse(s, lo, n))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(lo, n, gens)
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

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// The same generators in `K[x_lo..x_n']`; `None` if some generator
    /// involves a dropped variable.
    pub fn with_n(&self, n: usize) -> Option<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.with_n(n))
            .collect::<Option<Vec<_>>>()?;
        Some(MonomialIdeal {
            lo: self.lo,
            n,
            gens: minimal_elements(gens),
        })
    }

    /// Degree-`d` monomials of the ideal, lex-descending.
    pub fn graded_slice(&self, d: u64) -> Vec<Monomial> {
        if self.is_zero() {
            return Vec::new();
        }
        enumerate_degree(self.lo, self.n, d, MonomialOrder::Lex)
            .into_iter()
            .filter(|u| self.contains(u))
            .collect()
    }

    /// `dim_K I_d`: the number of degree-`d` monomials in the ideal.
    pub fn graded_dim(&self, d: u64) -> BigUint {
        let total = count_degree_vars(self.nvars(), d as i64);
        total - self.standard_count(d)
    }

    /// `dim_K (S/I)_d`, counted by slicing on the leading variable.
    pub fn standard_count(&self, d: u64) -> BigUint {
        let gens: Vec<Vec<u32>> = self.gens.iter().map(|g| g.exponents().to_vec()).collect();
        let mut memo = BTreeMap::new();
        count_outside(gens, self.nvars(), d, &mut memo)
    }

    pub fn hilbert_series(&self) -> HilbertSeriesNumerator {
        let gens: Vec<Vec<u32>> = self.gens.iter().map(|g| g.exponents().to_vec()).collect();
        HilbertSeriesNumerator::new(kpoly(gens))
    }

    /// Hilbert polynomial of the ideal (not the quotient).
    ///
    /// The result is cross-checked against [`Self::graded_dim`] at
    /// `nvars + 1` consecutive degrees past the numerator degree.
    pub fn hilbert_polynomial(&self) -> Result<HilbertPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let m = self.nvars();
        let q = self.hilbert_series();
        let mut quotient = RationalPoly::zero();
        for (a, c) in q.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = RationalPoly::binomial(m as i64 - 1 - a as i64, m - 1);
            quotient = &quotient + &term.scale(&num_rational::BigRational::from_integer(c.clone()));
        }
        let full = RationalPoly::binomial(m as i64 - 1, m - 1);
        let p = &full - &quotient;
        let start = q.degree() as u64;
        for d in start..=start + m as u64 {
            let expect = num_rational::BigRational::from_integer(BigInt::from(self.graded_dim(d)));
            if p.eval_int(d as i64) != expect {
                return Err(Error::Internal(format!(
                    "Hilbert polynomial disagrees with graded dimension at degree {d}"
                )));
            }
        }
        Ok(HilbertPolynomial::new(m, p))
    }

    /// Strong stability, tested on the minimal generators: for every
    /// generator `u`, every `x_j | u` and `i < j`, `u * x_i / x_j` is in the
    /// ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (self.lo..=self.n).all(|j| {
                if u.exponent(j) == 0 {
                    return true;
                }
                let down = u.div_var(j).expect("x_j divides u");
                (self.lo..j).all(|i| self.contains(&down.mul_var(i, 1)))
            })
        })
    }

    /// Every degree slice up to the largest generator degree is a lex
    /// initial segment (which then persists in all higher degrees).
    pub fn is_lex(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        (0..=self.max_generator_degree()).all(|d| {
            let mut seen_outside = false;
            for u in enumerate_degree(self.lo, self.n, d, MonomialOrder::Lex) {
                if self.contains(&u) {
                    if seen_outside {
                        return false;
                    }
                } else {
                    seen_outside = true;
                }
            }
            true
        })
    }

    /// `(I : m^inf)` for a strongly stable ideal: drop the powers of the last
    /// variable from every generator.
    pub fn saturate_strongly_stable(&self) -> Result<MonomialIdeal> {
        if !self.is_strongly_stable() {
            return Err(Error::NotStronglyStable);
        }
        let gens = self.gens.iter().map(|g| {
            let mut exp = g.exponents().to_vec();
            *exp.last_mut().expect("nonempty range") = 0;
            Monomial::new(self.lo, self.n, exp).expect("same shape")
        });
        Self::minimalize(self.lo, self.n, gens)
    }

    pub fn is_saturated_strongly_stable(&self) -> bool {
        self.saturate_strongly_stable()
            .map(|s| &s == self)
            .unwrap_or(false)
    }

    /// The lex ideal with the same Hilbert function.
    ///
    /// Built degree by degree from lex initial segments. The loop stops once
    /// no generator has appeared for `nvars` consecutive degrees past the
    /// input's generator degrees and the two Hilbert functions are certified
    /// equal in every remaining degree.
    pub fn lexify(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let m = self.nvars() as u64;
        let top = self.max_generator_degree();
        let input_hp = self.hilbert_polynomial()?;
        let input_q = self.hilbert_series();
        let mut lex = MonomialIdeal::zero(self.lo, self.n);
        let mut last_new = 0u64;
        let mut d = 0u64;
        loop {
            let target = self.graded_dim(d);
            let have = lex.graded_dim(d);
            if have > target {
                return Err(Error::Internal(format!(
                    "lex segment in degree {d} exceeds the input dimension"
                )));
            }
            if have < target {
                let size = target.to_usize().expect("slice fits in memory");
                let slice = enumerate_degree(self.lo, self.n, d, MonomialOrder::Lex);
                let (segment, rest) = slice.split_at(size);
                if rest.iter().any(|u| lex.contains(u)) {
                    return Err(Error::Internal(format!(
                        "lex segments do not form an ideal in degree {d}"
                    )));
                }
                let new: Vec<Monomial> = segment
                    .iter()
                    .filter(|u| !lex.contains(u))
                    .cloned()
                    .collect();
                let mut gens = lex.gens.clone();
                gens.extend(new);
                lex = MonomialIdeal::minimalize(self.lo, self.n, gens)?;
                last_new = d;
            }
            if d >= top && d - last_new >= m && lex.agrees_beyond(d, &input_hp, &input_q, self)? {
                return Ok(lex);
            }
            d += 1;
        }
    }

    /// Whether `self` and `other` have equal Hilbert functions in every
    /// degree above `d`, given equal polynomials.
    fn agrees_beyond(
        &self,
        d: u64,
        other_hp: &HilbertPolynomial,
        other_q: &HilbertSeriesNumerator,
        other: &MonomialIdeal,
    ) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        if self.hilbert_polynomial()?.poly() != other_hp.poly() {
            return Ok(false);
        }
        let horizon = (self.hilbert_series().degree() as u64).max(other_q.degree() as u64);
        Ok((d + 1..=horizon.max(d)).all(|k| self.graded_dim(k) == other.graded_dim(k)))
    }

    /// Graded Betti numbers of a strongly stable ideal from the slice
    /// formula
    /// `b_{i,i+j} = C(n-1,i) dim I_j - sum_k C(k-1,i) m_k(I_{j-1}) - sum_{k<n} C(k-1,i-1) m_k(I_j)`.
    pub fn betti_graded(&self) -> Result<BettiTable> {
        if !self.is_strongly_stable() {
            return Err(Error::NotStronglyStable);
        }
        let m = self.nvars();
        let top = self.max_generator_degree();
        let mut graded = BTreeMap::new();
        let mut prev_seq = vec![0u64; m];
        for j in 0..=top + 1 {
            let slice = self.graded_slice(j);
            let seq = self.relative_max_sequence(&slice);
            let dim = slice.len() as u64;
            for i in 0..m {
                let mut beta = binomial_i(m as i64 - 1, i as i64) * BigInt::from(dim);
                for k in 1..=m {
                    beta -= binomial_i(k as i64 - 1, i as i64) * BigInt::from(prev_seq[k - 1]);
                }
                for k in 1..m {
                    beta -= binomial_i(k as i64 - 1, i as i64 - 1) * BigInt::from(seq[k - 1]);
                }
                if beta.is_negative() {
                    return Err(Error::Internal(format!(
                        "negative Betti number at ({i},{})",
                        i as u64 + j
                    )));
                }
                if beta.is_zero() {
                    continue;
                }
                if j > top {
                    return Err(Error::Internal(format!(
                        "Betti number beyond the generator degree at ({i},{})",
                        i as u64 + j
                    )));
                }
                graded.insert((i, i as u64 + j), beta.to_biguint().expect("nonnegative"));
            }
            prev_seq = seq;
        }
        Ok(BettiTable::from_graded(BettiSubject::Ideal, graded))
    }

    fn relative_max_sequence(&self, slice: &[Monomial]) -> Vec<u64> {
        let full = MaxSequence::of(self.n, slice.iter());
        full.counts()[self.lo - 1..].to_vec()
    }

    /// Total Betti numbers of a strongly stable ideal from its generators:
    /// `b_i = sum_u C(max(u) - 1, i)`.
    pub fn betti_total_ek(&self) -> Result<Vec<BigUint>> {
        if !self.is_strongly_stable() {
            return Err(Error::NotStronglyStable);
        }
        let m = self.nvars();
        let mut totals = vec![BigUint::zero(); m];
        for g in &self.gens {
            let k = (g.max_index() - self.lo) as i64;
            for (i, t) in totals.iter_mut().enumerate() {
                *t += binomial(k, i as i64);
            }
        }
        trim(&mut totals);
        Ok(totals)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in x{}..x{}", self.lo, self.n)
    }
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

type Gens = Vec<Vec<u32>>;

fn minimal_vectors(mut gens: Gens) -> Gens {
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    gens.sort_by_key(|g| g.iter().map(|&e| e as u64).sum::<u64>());
    gens.dedup();
    let mut kept: Gens = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Number of degree-`d` monomials in `k` variables divisible by none of
/// `gens`.
fn count_outside(gens: Gens, k: usize, d: u64, memo: &mut BTreeMap<(Gens, u64), BigUint>) -> BigUint {
    let gens = minimal_vectors(gens);
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return BigUint::zero();
    }
    if gens.is_empty() {
        return count_degree_vars(k, d as i64);
    }
    if k == 1 {
        // one variable: x^d avoids (x^a) iff d < a
        let a = gens[0][0] as u64;
        return if d < a { BigUint::one() } else { BigUint::zero() };
    }
    let key = (gens, d);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let gens = &key.0;
    let mut acc = BigUint::zero();
    // The colon by x^e only changes where e crosses a generator exponent.
    let mut cuts: Vec<u64> = gens.iter().map(|g| g[0] as u64).filter(|&e| e <= d).collect();
    cuts.push(0);
    cuts.sort_unstable();
    cuts.dedup();
    for (idx, &start) in cuts.iter().enumerate() {
        let end = cuts.get(idx + 1).map_or(d, |&next| next - 1);
        let colon: Gens = gens
            .iter()
            .filter(|g| g[0] as u64 <= start)
            .map(|g| g[1..].to_vec())
            .collect();
        for e in start..=end {
            acc += count_outside(colon.clone(), k - 1, d - e, memo);
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// Numerator `Q(z)` of the Hilbert series of `S/I`, ascending coefficients.
fn kpoly(gens: Gens) -> Vec<BigInt> {
    let gens = minimal_vectors(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    let support = |g: &Vec<u32>| g.iter().filter(|&&e| e > 0).count();
    if gens.iter().all(|g| support(g) == 1) {
        // complete intersection of pure powers in distinct variables
        let mut q = vec![BigInt::one()];
        for g in &gens {
            let a = g.iter().map(|&e| e as usize).sum::<usize>();
            let mut next = vec![BigInt::zero(); q.len() + a];
            for (i, c) in q.iter().enumerate() {
                next[i] += c;
                next[i + a] -= c;
            }
            q = next;
        }
        return q;
    }
    let k = gens[0].len();
    let pivot = (0..k)
        .max_by_key(|&j| {
            (
                gens.iter().filter(|g| support(g) > 1 && g[j] > 0).count(),
                core::cmp::Reverse(j),
            )
        })
        .expect("at least one variable");
    let mut plus: Gens = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut x = vec![0u32; k];
    x[pivot] = 1;
    plus.push(x);
    let colon: Gens = gens
        .iter()
        .map(|g| {
            let mut g = g.clone();
            g[pivot] = g[pivot].saturating_sub(1);
            g
        })
        .collect();
    let a = kpoly(plus);
    let b = kpoly(colon);
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + 1)];
    for (i, c) in a.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

/// `Q(z)` with `H_{S/I}(z) = Q(z) / (1 - z)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesNumerator {
    coeffs: Vec<BigInt>,
}

impl HilbertSeriesNumerator {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        HilbertSeriesNumerator { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree of `Q`; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl fmt::Display for HilbertSeriesNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BettiSubject {
    Ideal,
    Quotient,
}

/// Graded Betti numbers `b_{i,j}` (nonzero entries only) and their row
/// sums `b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    subject: BettiSubject,
    graded: BTreeMap<(usize, u64), BigUint>,
    totals: Vec<BigUint>,
}

impl BettiTable {
    pub fn from_graded(subject: BettiSubject, graded: BTreeMap<(usize, u64), BigUint>) -> Self {
        let graded: BTreeMap<_, _> = graded.into_iter().filter(|(_, b)| !b.is_zero()).collect();
        let len = graded.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut totals = vec![BigUint::zero(); len];
        for (&(i, _), b) in &graded {
            totals[i] += b;
        }
        BettiTable {
            subject,
            graded,
            totals,
        }
    }

    pub fn subject(&self) -> BettiSubject {
        self.subject
    }

    pub fn graded(&self) -> &BTreeMap<(usize, u64), BigUint> {
        &self.graded
    }

    pub fn get(&self, i: usize, j: u64) -> BigUint {
        self.graded.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn totals(&self) -> &[BigUint] {
        &self.totals
    }

    /// Table of `S/I` from the table of `I`: shift homological degree by one
    /// and put `b_{0,0}(S/I) = 1` in front.
    pub fn quotient(&self) -> Result<BettiTable> {
        if self.subject != BettiSubject::Ideal {
            return Err(Error::parse("Betti table", "expected a table for an ideal"));
        }
        let mut graded: BTreeMap<_, _> = self
            .graded
            .iter()
            .map(|(&(i, j), b)| ((i + 1, j), b.clone()))
            .collect();
        graded.insert((0, 0), BigUint::one());
        Ok(BettiTable::from_graded(BettiSubject::Quotient, graded))
    }

    /// `sum_{i,j} (-1)^i b_{i,j} z^j`, ascending in `z`.
    pub fn euler_polynomial(&self) -> Vec<BigInt> {
        let len = self.graded.keys().map(|&(_, j)| j as usize + 1).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); len];
        for (&(i, j), b) in &self.graded {
            let b = BigInt::from(b.clone());
            if i % 2 == 0 {
                out[j as usize] += b;
            } else {
                out[j as usize] -= b;
            }
        }
        trim(&mut out);
        out
    }
}
