//! JSON forms of the core objects.
//!
//! Counts (Betti numbers, colengths) are written as JSON integers when they
//! fit in `u64` and as decimal strings otherwise; both are accepted on input.

use std::collections::BTreeMap;

use maxbetti_core::hilbert::HilbertPolynomial;
use maxbetti_core::maximizer::MaximizerReport;
use maxbetti_core::oracle::DominanceReport;
use maxbetti_core::{
    BettiSubject, BettiTable, BigUint, LadderSet, Monomial, MonomialIdeal, RationalPoly,
    UniversalLexIdeal,
};
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// Non-negative integer of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Count(pub BigUint);

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Count(BigUint::from(v))),
            Raw::Text(s) => s.parse().map(Count).map_err(serde::de::Error::custom),
        }
    }
}

fn counts(v: &[BigUint]) -> Vec<Count> {
    v.iter().cloned().map(Count).collect()
}

fn one() -> usize {
    1
}

fn is_one(v: &usize) -> bool {
    *v == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub lo: usize,
    pub n: usize,
    pub exp: Vec<u32>,
}

impl From<&Monomial> for MonomialJson {
    fn from(m: &Monomial) -> Self {
        MonomialJson {
            lo: m.lo(),
            n: m.n(),
            exp: m.exponents().to_vec(),
        }
    }
}

impl TryFrom<&MonomialJson> for Monomial {
    type Error = CliError;

    fn try_from(m: &MonomialJson) -> Result<Self, CliError> {
        Ok(Monomial::new(m.lo, m.n, m.exp.clone())?)
    }
}

/// `{"n":4,"gens":["x1^3",...]}`; `lo` defaults to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub lo: usize,
    pub n: usize,
    pub gens: Vec<String>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            lo: i.lo(),
            n: i.n(),
            gens: i.generators().iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&IdealJson> for MonomialIdeal {
    type Error = CliError;

    fn try_from(i: &IdealJson) -> Result<Self, CliError> {
        Ok(MonomialIdeal::parse(i.lo, i.n, i.gens.iter().map(String::as_str))?)
    }
}

/// `{"subject":"ideal","graded":[[i,j,beta],...],"totals":[...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub subject: String,
    pub graded: Vec<(usize, u64, Count)>,
    pub totals: Vec<Count>,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> Self {
        BettiJson {
            subject: match t.subject() {
                BettiSubject::Ideal => "ideal",
                BettiSubject::Quotient => "quotient",
            }
            .to_string(),
            graded: t
                .graded()
                .iter()
                .map(|(&(i, j), b)| (i, j, Count(b.clone())))
                .collect(),
            totals: counts(t.totals()),
        }
    }
}

impl TryFrom<&BettiJson> for BettiTable {
    type Error = CliError;

    fn try_from(t: &BettiJson) -> Result<Self, CliError> {
        let subject = match t.subject.as_str() {
            "ideal" => BettiSubject::Ideal,
            "quotient" => BettiSubject::Quotient,
            other => return Err(CliError::Input(format!("unknown Betti subject {other:?}"))),
        };
        let graded: BTreeMap<_, _> = t.graded.iter().map(|(i, j, b)| ((*i, *j), b.0.clone())).collect();
        let table = BettiTable::from_graded(subject, graded);
        if counts(table.totals()) != t.totals {
            return Err(CliError::Input("Betti totals do not match the graded entries".into()));
        }
        Ok(table)
    }
}

/// `{"n":3,"a":[0,4]}`; the whole ring is `{"n":3,"a":[0],"full_ring":true}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalJson {
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub lo: usize,
    pub n: usize,
    pub a: Vec<u32>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub full_ring: bool,
}

impl From<&UniversalLexIdeal> for UniversalJson {
    fn from(u: &UniversalLexIdeal) -> Self {
        UniversalJson {
            lo: u.lo(),
            n: u.n(),
            a: u.offsets().to_vec(),
            full_ring: u.is_full_ring(),
        }
    }
}

impl TryFrom<&UniversalJson> for UniversalLexIdeal {
    type Error = CliError;

    fn try_from(u: &UniversalJson) -> Result<Self, CliError> {
        if u.full_ring {
            Ok(UniversalLexIdeal::full_ring(u.lo, u.n)?)
        } else {
            Ok(UniversalLexIdeal::new(u.lo, u.n, u.a.clone())?)
        }
    }
}

/// `{"U":{...},"components":[["1","x1"],["1"]]}` with u-parts as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderSetJson {
    #[serde(rename = "U")]
    pub universal: UniversalJson,
    pub components: Vec<Vec<String>>,
}

impl From<&LadderSet> for LadderSetJson {
    fn from(m: &LadderSet) -> Self {
        LadderSetJson {
            universal: m.universal().into(),
            components: m
                .components()
                .iter()
                .map(|c| c.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl TryFrom<&LadderSetJson> for LadderSet {
    type Error = CliError;

    fn try_from(m: &LadderSetJson) -> Result<Self, CliError> {
        let u = UniversalLexIdeal::try_from(&m.universal)?;
        let mut components = Vec::with_capacity(m.components.len());
        for (k, comp) in m.components.iter().enumerate() {
            let lo = u.component_lo(k + 1);
            let parsed = comp
                .iter()
                .map(|s| Monomial::parse(s, lo, u.n()))
                .collect::<Result<Vec<_>, _>>()?;
            components.push(parsed);
        }
        Ok(LadderSet::new(u, components)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    /// Ascending coefficients as `p/q` strings.
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<u64>>,
}

impl From<&HilbertPolynomial> for PolynomialJson {
    fn from(p: &HilbertPolynomial) -> Self {
        PolynomialJson {
            n: p.n(),
            coeffs: p.poly().coeff_strings(),
            b: p.b_list().map(<[u64]>::to_vec),
        }
    }
}

impl TryFrom<&PolynomialJson> for HilbertPolynomial {
    type Error = CliError;

    fn try_from(p: &PolynomialJson) -> Result<Self, CliError> {
        let poly = RationalPoly::parse_coeff_list(&p.coeffs.join(","))?;
        let hp = HilbertPolynomial::new(p.n, poly);
        Ok(match &p.b {
            Some(_) => hp.with_b_list()?,
            None => hp,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksJson {
    pub polynomial_matches: bool,
    pub complement_matches: bool,
    pub saturated: bool,
    pub j_lex: bool,
    pub betti_formulas_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonJson {
    pub input_totals: Vec<Count>,
    pub lex_totals: Vec<Count>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximizerJson {
    pub input: PolynomialJson,
    pub n: usize,
    pub universal: UniversalJson,
    pub universal_generators: Vec<String>,
    pub ubar: IdealJson,
    pub sat: IdealJson,
    pub sat_universal: UniversalJson,
    pub c: Count,
    pub extremal: LadderSetJson,
    pub j: IdealJson,
    pub ideal: IdealJson,
    pub betti: BettiJson,
    pub quotient_betti: BettiJson,
    pub checks: ChecksJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonJson>,
}

impl From<&MaximizerReport> for MaximizerJson {
    fn from(r: &MaximizerReport) -> Self {
        MaximizerJson {
            input: (&r.input).into(),
            n: r.n,
            universal: (&r.universal).into(),
            universal_generators: r.universal.generators().iter().map(ToString::to_string).collect(),
            ubar: (&r.ubar).into(),
            sat: (&r.sat).into(),
            sat_universal: (&r.sat_universal).into(),
            c: Count(r.c.clone()),
            extremal: (&r.extremal).into(),
            j: (&r.j).into(),
            ideal: (&r.ideal).into(),
            betti: (&r.betti).into(),
            quotient_betti: (&r.quotient_betti).into(),
            checks: ChecksJson {
                polynomial_matches: r.checks.polynomial_matches,
                complement_matches: r.checks.complement_matches,
                saturated: r.checks.saturated,
                j_lex: r.checks.j_lex,
                betti_formulas_agree: r.checks.betti_formulas_agree,
            },
            comparison: r.comparison.as_ref().map(|c| ComparisonJson {
                input_totals: counts(&c.input_totals),
                lex_totals: counts(&c.lex_totals),
            }),
        }
    }
}

/// `{"enumerated":N,"violations":[...],"max_totals":[...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceJson {
    pub enumerated: u64,
    pub violations: Vec<String>,
    pub max_totals: Vec<Count>,
}

impl From<&DominanceReport> for DominanceJson {
    fn from(r: &DominanceReport) -> Self {
        DominanceJson {
            enumerated: r.enumerated,
            violations: r.violations.clone(),
            max_totals: counts(&r.max_totals),
        }
    }
}

impl From<&DominanceJson> for DominanceReport {
    fn from(r: &DominanceJson) -> Self {
        DominanceReport {
            enumerated: r.enumerated,
            violations: r.violations.clone(),
            max_totals: r.max_totals.iter().map(|c| c.0.clone()).collect(),
        }
    }
}
