//! Exhaustive enumeration of rev-lex sets and ladder sets, and the
//! dominance verifiers built on them.
//!
//! Enumeration order is fixed: lexicographic over the vector of per-degree
//! segment sizes (and over components, first component outermost), so
//! reports are reproducible.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hilbert::UniversalLexIdeal;
use crate::ideal::MonomialIdeal;
use crate::ladder::{extremal_set, small, LadderSet, MaxSequence};
use crate::maximizer::{complement_ideal, max_betti_from_polynomial};
use crate::monomial::{count_degree, enumerate_degree, Monomial, MonomialOrder};
use crate::poly::RationalPoly;

/// Outcome of a dominance sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DominanceReport {
    pub enumerated: u64,
    pub violations: Vec<String>,
    /// Max sequence of the extremal set (m mode) or total Betti numbers of
    /// the maximizer (Betti mode).
    pub max_totals: Vec<BigUint>,
}

impl DominanceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sets of `size` monomials of `K[x_lo..x_n]` in degrees `<= max_degree`
/// that are rev-lex in every degree. With `closed`, only divisor-closed
/// sets are kept.
fn enumerate_revlex(lo: usize, n: usize, size: usize, max_degree: u64, closed: bool) -> Vec<Vec<Monomial>> {
    let slices: Vec<Vec<Monomial>> = (0..=max_degree)
        .map(|d| enumerate_degree(lo, n, d, MonomialOrder::Lex))
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<Monomial> = Vec::new();
    let mut members: BTreeSet<Monomial> = BTreeSet::new();
    revlex_step(&slices, 0, size, closed, &mut current, &mut members, &mut out);
    out
}

fn revlex_step(
    slices: &[Vec<Monomial>],
    d: usize,
    remaining: usize,
    closed: bool,
    current: &mut Vec<Monomial>,
    members: &mut BTreeSet<Monomial>,
    out: &mut Vec<Vec<Monomial>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if d == slices.len() {
        return;
    }
    let slice = &slices[d];
    let cap = slice.len().min(remaining);
    for k in 0..=cap {
        // lex-smallest k monomials of degree d
        let segment = &slice[slice.len() - k..];
        if closed {
            if k > 0 && d > 0 && !segment.iter().all(|u| divisors_present(u, members)) {
                continue;
            }
            if k == 0 {
                // nothing of degree d means nothing above it either
                continue;
            }
        }
        for u in segment {
            members.insert(u.clone());
            current.push(u.clone());
        }
        revlex_step(slices, d + 1, remaining - k, closed, current, members, out);
        for u in segment {
            members.remove(u);
            current.pop();
        }
    }
}

fn divisors_present(u: &Monomial, members: &BTreeSet<Monomial>) -> bool {
    (u.lo()..=u.n()).all(|i| match u.div_var(i) {
        None => true,
        Some(v) => members.contains(&v),
    })
}

/// All rev-lex sets of the given size in degrees `<= max_degree`.
pub fn enumerate_revlex_sets(lo: usize, n: usize, size: usize, max_degree: u64) -> Vec<Vec<Monomial>> {
    enumerate_revlex(lo, n, size, max_degree, false)
}

/// All rev-lex multicomplexes of the given size in degrees
/// `<= max_degree`.
pub fn enumerate_revlex_multicomplexes(
    lo: usize,
    n: usize,
    size: usize,
    max_degree: u64,
) -> Vec<Vec<Monomial>> {
    enumerate_revlex(lo, n, size, max_degree, true)
}

/// `b_t + c - 1`: no ladder set of size `c` has a monomial of larger degree,
/// since each component is a multicomplex with at most `c` elements.
pub fn default_max_degree(u: &UniversalLexIdeal, c: usize) -> u64 {
    (u.b(u.t()) + c as u64).saturating_sub(1)
}

/// All ladder sets of size `c` over `U` with every monomial of degree
/// `<= max_degree`.
pub fn enumerate_ladder_sets(u: &UniversalLexIdeal, c: usize, max_degree: u64) -> Vec<LadderSet> {
    let t = u.t();
    // per component: multicomplexes by size, u-degree bounded by max_degree - b_i
    let mut pools: Vec<Vec<Vec<Vec<Monomial>>>> = Vec::with_capacity(t);
    for i in 1..=t {
        let bi = u.b(i);
        let mut by_size = Vec::with_capacity(c + 1);
        for s in 0..=c {
            if max_degree < bi {
                by_size.push(if s == 0 { vec![Vec::new()] } else { Vec::new() });
            } else {
                by_size.push(enumerate_revlex_multicomplexes(u.component_lo(i), u.n(), s, max_degree - bi));
            }
        }
        pools.push(by_size);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<&Vec<Monomial>> = Vec::with_capacity(t);
    ladder_step(u, &pools, 0, c, &mut chosen, &mut out);
    out
}

fn ladder_step<'a>(
    u: &UniversalLexIdeal,
    pools: &'a [Vec<Vec<Vec<Monomial>>>],
    k: usize,
    remaining: usize,
    chosen: &mut Vec<&'a Vec<Monomial>>,
    out: &mut Vec<LadderSet>,
) {
    let t = pools.len();
    if k == t {
        if remaining == 0 {
            let comps = chosen.iter().map(|c| (*c).clone()).collect();
            out.push(LadderSet::new(u.clone(), comps).expect("component ambients"));
        }
        return;
    }
    let sizes: Vec<usize> = if k + 1 == t {
        vec![remaining]
    } else {
        (0..=remaining).collect()
    };
    for s in sizes {
        for comp in &pools[k][s] {
            if k > 0 && !forces(u, k, chosen[k - 1], comp) {
                continue;
            }
            chosen.push(comp);
            ladder_step(u, pools, k + 1, remaining - s, chosen, out);
            chosen.pop();
        }
    }
}

/// Condition (ii) between component `i` (`prev`) and `i + 1` (`next`).
fn forces(u: &UniversalLexIdeal, i: usize, prev: &[Monomial], next: &[Monomial]) -> bool {
    let degrees: BTreeSet<u64> = prev.iter().map(|v| v.degree() + u.b(i)).collect();
    let mut next_counts: BTreeMap<u64, usize> = BTreeMap::new();
    for v in next {
        *next_counts.entry(v.degree()).or_default() += 1;
    }
    degrees.into_iter().all(|d| {
        let rel = d as i64 - u.b(i + 1) as i64;
        if rel < 0 {
            return true;
        }
        let have = next_counts.get(&(rel as u64)).copied().unwrap_or(0);
        BigUint::from(have) == count_degree(u.component_lo(i + 1), u.n(), rel)
    })
}

/// The saturated ideal of `K[x_1..x_ambient]` generated by the monomials
/// of `U` outside `M`.
pub fn ladder_to_saturated_ideal(u: &UniversalLexIdeal, m: &LadderSet, ambient: usize) -> Result<MonomialIdeal> {
    if m.universal() != u {
        return Err(Error::Internal("ladder set belongs to another universal lex ideal".to_string()));
    }
    let j = complement_ideal(&u.to_ideal(), &m.full_monomials())?;
    j.with_n(ambient)
        .ok_or_else(|| Error::Internal("complement ideal does not extend".to_string()))
}

/// Compares the extremal set of size `c` against every enumerated ladder
/// set by max sequences.
pub fn verify_m_dominance(u: &UniversalLexIdeal, c: usize, max_degree: u64) -> Result<DominanceReport> {
    let extremal = extremal_set(u, &BigUint::from(c))?;
    let top = extremal.max_sequence();
    let mut report = DominanceReport {
        max_totals: top.counts().iter().map(|&x| BigUint::from(x)).collect(),
        ..DominanceReport::default()
    };
    for m in enumerate_ladder_sets(u, c, max_degree) {
        report.enumerated += 1;
        if !m.is_ladder_set() {
            report.violations.push(format!("enumerated set {m} is not a ladder set"));
            continue;
        }
        if !top.dominates(&m.max_sequence())? {
            report
                .violations
                .push(format!("{m}: m = {} not dominated by {top}", m.max_sequence()));
        }
    }
    Ok(report)
}

fn padded_dominates(a: &[BigUint], b: &[BigUint]) -> bool {
    let zero = BigUint::zero();
    (0..a.len().max(b.len())).all(|i| a.get(i).unwrap_or(&zero) >= b.get(i).unwrap_or(&zero))
}

fn totals_string(v: &[BigUint]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Betti dominance over `L(U; c)`: the complement ideal of the extremal set
/// against the complement ideals of all enumerated ladder sets, in the
/// variables of `U`.
pub fn verify_betti_dominance_universal(
    u: &UniversalLexIdeal,
    c: usize,
    max_degree: u64,
) -> Result<DominanceReport> {
    let extremal = extremal_set(u, &BigUint::from(c))?;
    let best = ladder_to_saturated_ideal(u, &extremal, u.n())?.betti_total_ek()?;
    sweep(u, c, max_degree, u.n(), best)
}

/// Betti dominance for a Hilbert polynomial: the maximizer's `L` against
/// every saturated strongly stable ideal obtained from a ladder set of the
/// pipeline's `sat Ū`.
pub fn verify_betti_dominance(p: &RationalPoly, n: usize, max_degree: Option<u64>) -> Result<DominanceReport> {
    let report = max_betti_from_polynomial(p, n)?;
    let c = small(&report.c)?;
    let u = &report.sat_universal;
    let d = max_degree.unwrap_or_else(|| default_max_degree(u, c));
    let best = report.betti.totals().to_vec();
    sweep(u, c, d, n, best)
}

fn sweep(
    u: &UniversalLexIdeal,
    c: usize,
    max_degree: u64,
    ambient: usize,
    best: Vec<BigUint>,
) -> Result<DominanceReport> {
    let mut report = DominanceReport {
        max_totals: best.clone(),
        ..DominanceReport::default()
    };
    for m in enumerate_ladder_sets(u, c, max_degree) {
        report.enumerated += 1;
        let j = match ladder_to_saturated_ideal(u, &m, ambient) {
            Ok(j) => j,
            Err(e) => {
                report.violations.push(format!("{m}: {e}"));
                continue;
            }
        };
        let totals = match j.betti_total_ek() {
            Ok(t) => t,
            Err(e) => {
                report.violations.push(format!("{m}: {e}"));
                continue;
            }
        };
        if !padded_dominates(&best, &totals) {
            report.violations.push(format!(
                "{j}: totals {} exceed {}",
                totals_string(&totals),
                totals_string(&best)
            ));
        }
    }
    Ok(report)
}

/// The smallest strongly stable ideal containing `gens`.
pub fn borel_closure(lo: usize, n: usize, gens: &[Monomial]) -> Result<MonomialIdeal> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack: Vec<Monomial> = gens.to_vec();
    while let Some(u) = stack.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        for j in lo..=n {
            if let Some(v) = u.div_var(j) {
                for i in lo..j {
                    let w = v.mul_var(i, 1);
                    if !seen.contains(&w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    MonomialIdeal::minimalize(lo, n, seen)
}

/// Max sequence of a set of monomials of `K[x_lo..x_n]`.
pub fn m_of(n: usize, set: &[Monomial]) -> MaxSequence {
    MaxSequence::of(n, set)
}
