//! From a Hilbert polynomial to the saturated ideal with the largest total
//! Betti numbers.
//!
//! Pipeline for `p` in `S = K[x_1..x_n]`:
//!
//! 1. `U`: the proper universal lex ideal with `P_U = p`.
//! 2. `Ū = U ∩ S̄` with `S̄ = K[x_1..x_{n-1}]`, and its saturation `sat Ū`.
//! 3. `c = dim_K sat Ū / Ū` and `N`, the extremal set of size `c` in `sat Ū`.
//! 4. `J ⊂ S̄` generated by the monomials of `sat Ū` outside `N`; `L = J S`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hilbert::{decompose, quotient_to_ideal_polynomial, HilbertPolynomial, UniversalLexIdeal};
use crate::ideal::{BettiTable, MonomialIdeal};
use crate::ladder::{colength, extremal_set, LadderSet};
use crate::monomial::{enumerate_degree, Monomial, MonomialOrder};
use crate::poly::RationalPoly;

/// Every intermediate object of the pipeline, with the rechecked
/// identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizerReport {
    pub input: HilbertPolynomial,
    pub n: usize,
    /// Proper universal lex ideal of `S` with the input polynomial.
    pub universal: UniversalLexIdeal,
    /// `Ū` in `S̄`.
    pub ubar: MonomialIdeal,
    /// `sat Ū` in `S̄`.
    pub sat: MonomialIdeal,
    pub sat_universal: UniversalLexIdeal,
    pub c: BigUint,
    pub extremal: LadderSet,
    /// `J` in `S̄`.
    pub j: MonomialIdeal,
    /// `L = J S`.
    pub ideal: MonomialIdeal,
    pub betti: BettiTable,
    pub quotient_betti: BettiTable,
    pub checks: Checks,
    /// Filled by [`max_betti_from_ideal`] for strongly stable inputs.
    pub comparison: Option<InputComparison>,
}

/// Identities rechecked on the output. A failed check is reported as an
/// internal error, so a returned report has all flags set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub polynomial_matches: bool,
    pub complement_matches: bool,
    pub saturated: bool,
    pub j_lex: bool,
    pub betti_formulas_agree: bool,
}

/// Total Betti numbers of the input ideal and of its lexification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputComparison {
    pub input_totals: Vec<BigUint>,
    pub lex_totals: Vec<BigUint>,
}

/// The ideal generated by the monomials of `sat` outside `set`, with the
/// complement verified to be exactly `set`.
///
/// Generators are taken up to degree
/// `max deg set + max generator degree of sat + 1`; beyond that `sat` and
/// the result agree.
pub fn complement_ideal(sat: &MonomialIdeal, set: &[Monomial]) -> Result<MonomialIdeal> {
    let (lo, n) = (sat.lo(), sat.n());
    let members: BTreeSet<&Monomial> = set.iter().collect();
    if set.iter().any(|u| !sat.contains(u)) {
        return Err(Error::Internal("set is not inside the saturated ideal".to_string()));
    }
    let Some(top_set) = set.iter().map(Monomial::degree).max() else {
        return Ok(sat.clone());
    };
    let top = top_set + sat.max_generator_degree() + 1;
    let mut gens = Vec::new();
    for d in 0..=top {
        for u in enumerate_degree(lo, n, d, MonomialOrder::Lex) {
            if sat.contains(&u) && !members.contains(&u) && !gens.iter().any(|g: &Monomial| g.divides(&u)) {
                gens.push(u);
            }
        }
    }
    let j = MonomialIdeal::minimalize(lo, n, gens)?;
    if set.iter().any(|u| j.contains(u)) {
        return Err(Error::Internal(format!(
            "the ideal generated outside the set meets the set: {j}"
        )));
    }
    for d in 0..=top {
        let missing = sat.graded_dim(d) - j.graded_dim(d);
        let expected = set.iter().filter(|u| u.degree() == d).count();
        if missing != BigUint::from(expected) {
            return Err(Error::Internal(format!(
                "complement of {j} differs from the set in degree {d}"
            )));
        }
    }
    Ok(j)
}

/// The Betti-maximal saturated ideal with Hilbert polynomial `p` in `n`
/// variables.
pub fn max_betti_from_polynomial(p: &RationalPoly, n: usize) -> Result<MaximizerReport> {
    let b = decompose(p, n)?;
    let universal = UniversalLexIdeal::from_b_list(&b, 1, n)?;
    let input = HilbertPolynomial::from_b_list(&b, n)?;
    if input.poly() != p {
        return Err(Error::Internal("b-list does not reproduce the input".to_string()));
    }
    let ubar = universal
        .to_ideal()
        .with_n(n - 1)
        .ok_or_else(|| Error::Internal("universal lex generator involves x_n".to_string()))?;
    let sat = ubar.saturate_strongly_stable()?;
    let sat_universal = UniversalLexIdeal::recognize(&sat).ok_or_else(|| {
        Error::Internal(format!("saturation {sat} is not universal lex"))
    })?;
    let c = colength(&sat, &ubar)?;
    let extremal = extremal_set(&sat_universal, &c)?;
    if !extremal.is_ladder_set() {
        return Err(Error::Internal(format!("extremal set {extremal} is not a ladder set")));
    }
    let j = complement_ideal(&sat, &extremal.full_monomials())?;
    let ideal = j
        .with_n(n)
        .ok_or_else(|| Error::Internal("J does not extend".to_string()))?;

    let hp = ideal.hilbert_polynomial()?;
    if hp.poly() != p {
        return Err(Error::Internal(format!(
            "output Hilbert polynomial {hp} differs from the input {p}"
        )));
    }
    if !ideal.is_saturated_strongly_stable() {
        return Err(Error::Internal(format!("{ideal} is not saturated")));
    }
    if !j.is_lex() {
        return Err(Error::Internal(format!("{j} is not lex in the smaller ring")));
    }
    let betti = ideal.betti_graded()?;
    let ek = ideal.betti_total_ek()?;
    if betti.totals() != ek.as_slice() {
        return Err(Error::Internal("Betti formulas disagree".to_string()));
    }
    let quotient_betti = betti.quotient()?;
    Ok(MaximizerReport {
        input,
        n,
        universal,
        ubar,
        sat,
        sat_universal,
        c,
        extremal,
        j,
        ideal,
        betti,
        quotient_betti,
        checks: Checks {
            polynomial_matches: true,
            complement_matches: true,
            saturated: true,
            j_lex: true,
            betti_formulas_agree: true,
        },
        comparison: None,
    })
}

/// The pipeline on the Hilbert polynomial of a monomial ideal of
/// `K[x_1..x_n]`.
pub fn max_betti_from_ideal(i: &MonomialIdeal) -> Result<MaximizerReport> {
    if i.lo() != 1 {
        return Err(Error::InvalidRange { lo: i.lo(), n: i.n() });
    }
    let p = i.hilbert_polynomial()?;
    let mut report = max_betti_from_polynomial(p.poly(), i.n())?;
    if i.is_strongly_stable() {
        report.comparison = Some(InputComparison {
            input_totals: i.betti_total_ek()?,
            lex_totals: i.lexify()?.betti_total_ek()?,
        });
    }
    Ok(report)
}

/// Result of the local variant: the graded report in `n + 1` variables
/// and the generators read in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalReport {
    pub graded: MaximizerReport,
    pub ideal: MonomialIdeal,
}

/// Runs the pipeline in `n + 1` variables on `C(t + n, n) - hs` for a
/// Hilbert–Samuel polynomial `hs` in `n` variables.
pub fn local_max_betti(hs: &RationalPoly, n: usize) -> Result<LocalReport> {
    let p = quotient_to_ideal_polynomial(hs, n + 1)?;
    let graded = max_betti_from_polynomial(p.poly(), n + 1)?;
    let ideal = graded.ideal.with_n(n).ok_or_else(|| {
        Error::Internal(format!("{} has a generator divisible by x_{}", graded.ideal, n + 1))
    })?;
    Ok(LocalReport { graded, ideal })
}
