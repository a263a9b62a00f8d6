//! Max sequences, rev-lex sets, ladder sets and the extremal-set
//! construction.
//!
//! A ladder set over a universal lex ideal `U` is stored by components:
//! component `i` holds the u-parts in `S^(i)`, and the monomials of the set
//! are `δ_i * u`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hilbert::UniversalLexIdeal;
use crate::ideal::MonomialIdeal;
use crate::monomial::{count_degree, count_lex_leq, count_upto, enumerate_degree, Monomial, MonomialOrder};

/// `m(M) = (m_1, ..., m_n)` with `m_k = #{u in M : max(u) <= k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaxSequence {
    counts: Vec<u64>,
}

impl MaxSequence {
    /// Max sequence of monomials of `K[x_lo..x_n]`, indexed by `k = 1..n`.
    pub fn of<'a, I>(n: usize, monomials: I) -> Self
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let mut hist = alloc::vec![0u64; n + 1];
        for u in monomials {
            hist[u.max_index()] += 1;
        }
        let mut counts = Vec::with_capacity(n);
        let mut acc = 0;
        for h in &hist[1..] {
            acc += h;
            counts.push(acc);
        }
        MaxSequence { counts }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        MaxSequence { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Componentwise `>=`.
    pub fn dominates(&self, other: &MaxSequence) -> Result<bool> {
        if self.counts.len() != other.counts.len() {
            return Err(Error::LengthMismatch(self.counts.len(), other.counts.len()));
        }
        Ok(self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b))
    }

    /// Componentwise sum.
    pub fn add(&self, other: &MaxSequence) -> Result<MaxSequence> {
        if self.counts.len() != other.counts.len() {
            return Err(Error::LengthMismatch(self.counts.len(), other.counts.len()));
        }
        Ok(MaxSequence {
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        })
    }
}

impl fmt::Display for MaxSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub fn max_sequence(n: usize, monomials: &[Monomial]) -> MaxSequence {
    MaxSequence::of(n, monomials)
}

pub fn dominates(a: &MaxSequence, b: &MaxSequence) -> Result<bool> {
    a.dominates(b)
}

/// `[x_lo^d, u]`: the first `size` monomials, in descending opposite degree
/// lex order, starting at `x_lo^d`.
pub fn lower_lex_set(lo: usize, n: usize, d: u64, size: usize) -> Result<Vec<Monomial>> {
    if lo == 0 || lo > n {
        return Err(Error::InvalidRange { lo, n });
    }
    let mut out = Vec::with_capacity(size);
    let mut deg = d;
    while out.len() < size {
        for u in enumerate_degree(lo, n, deg, MonomialOrder::Lex) {
            if out.len() == size {
                break;
            }
            out.push(u);
        }
        deg += 1;
    }
    Ok(out)
}

/// `[u, x_n^d]`: the last `size` monomials of `S_{<= d}` in descending
/// opposite degree lex order.
pub fn upper_revlex_set(lo: usize, n: usize, d: u64, size: usize) -> Result<Vec<Monomial>> {
    if lo == 0 || lo > n {
        return Err(Error::InvalidRange { lo, n });
    }
    let available = count_upto(lo, n, d as i64);
    if BigUint::from(size) > available {
        return Err(Error::SizeOverflow {
            requested: size.to_string(),
            available: available.to_string(),
        });
    }
    let mut out = Vec::with_capacity(size);
    let mut deg = d as i64;
    while out.len() < size {
        for u in enumerate_degree(lo, n, deg as u64, MonomialOrder::Lex).into_iter().rev() {
            if out.len() == size {
                break;
            }
            out.push(u);
        }
        deg -= 1;
    }
    out.sort_by(|a, b| MonomialOrder::OpLex.compare(b, a));
    Ok(out)
}

/// `[u1, u2] = {v : u1 >=_oplex v >=_oplex u2}`, descending.
pub fn interval(u1: &Monomial, u2: &Monomial) -> Result<Vec<Monomial>> {
    let ord = MonomialOrder::OpLex;
    if ord.cmp(u1, u2)? == Ordering::Less {
        return Err(Error::InvalidInterval(u1.to_string(), u2.to_string()));
    }
    let mut out = Vec::new();
    for d in u1.degree()..=u2.degree() {
        for v in enumerate_degree(u1.lo(), u1.n(), d, MonomialOrder::Lex) {
            if ord.compare(u1, &v) != Ordering::Less && ord.compare(&v, u2) != Ordering::Less {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// All monomials of degree `< e` plus the lex-smallest monomials of degree
/// `e`, for the least `e` reaching `size`.
pub fn super_revlex_set(lo: usize, n: usize, size: usize) -> Result<Vec<Monomial>> {
    if lo == 0 || lo > n {
        return Err(Error::InvalidRange { lo, n });
    }
    let mut out = Vec::with_capacity(size);
    let mut deg = 0u64;
    while out.len() < size {
        let slice = enumerate_degree(lo, n, deg, MonomialOrder::Lex);
        let need = size - out.len();
        if slice.len() <= need {
            out.extend(slice);
        } else {
            out.extend_from_slice(&slice[slice.len() - need..]);
        }
        deg += 1;
    }
    Ok(out)
}

/// Within each degree, membership is closed under going lex-down.
pub fn is_revlex(set: &[Monomial]) -> bool {
    let members: BTreeSet<&Monomial> = set.iter().collect();
    let degrees: BTreeSet<u64> = set.iter().map(Monomial::degree).collect();
    let Some(first) = set.first() else {
        return true;
    };
    degrees.into_iter().all(|d| {
        let mut inside = false;
        for v in enumerate_degree(first.lo(), first.n(), d, MonomialOrder::Lex) {
            let here = members.contains(&v);
            if inside && !here {
                return false;
            }
            inside |= here;
        }
        true
    })
}

/// Closed under division.
pub fn is_multicomplex(set: &[Monomial]) -> bool {
    let members: BTreeSet<&Monomial> = set.iter().collect();
    set.iter().all(|u| {
        (u.lo()..=u.n()).all(|i| match u.div_var(i) {
            None => true,
            Some(v) => members.contains(&v),
        })
    })
}

/// Rev-lex, and every member forces all monomials of lower degree.
pub fn is_super_revlex(set: &[Monomial]) -> bool {
    let Some(first) = set.first() else {
        return true;
    };
    let top = set.iter().map(Monomial::degree).max().unwrap_or(0);
    let below = count_upto(first.lo(), first.n(), top as i64 - 1);
    let have = set.iter().filter(|u| u.degree() < top).count();
    is_revlex(set) && BigUint::from(have) == below
}

/// The moving map of `U`: `δ_i x_i^k u -> δ_{i+1} u`, `None` on the last
/// component.
pub fn moving_map(u: &UniversalLexIdeal, m: &Monomial) -> Result<Option<Monomial>> {
    let (i, part) = u.split(m)?;
    if i == u.t() {
        return Ok(None);
    }
    let stripped = part.strip_leading().expect("a later component exists");
    Ok(Some(u.full_monomial(i + 1, &stripped)?))
}

/// A ladder set over `U`, stored as u-parts per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LadderSet {
    universal: UniversalLexIdeal,
    components: Vec<Vec<Monomial>>,
}

fn sort_oplex_desc(v: &mut Vec<Monomial>) {
    v.sort_by(|a, b| MonomialOrder::OpLex.compare(b, a));
    v.dedup();
}

impl LadderSet {
    /// Wraps per-component u-parts; ambient ranges must match `S^(i)`.
    /// The ladder conditions are not checked here (see [`Self::is_ladder_set`]).
    pub fn new(universal: UniversalLexIdeal, components: Vec<Vec<Monomial>>) -> Result<Self> {
        if components.len() != universal.t() {
            return Err(Error::LengthMismatch(components.len(), universal.t()));
        }
        let mut components = components;
        for (k, comp) in components.iter_mut().enumerate() {
            let lo = universal.component_lo(k + 1);
            for u in comp.iter() {
                if u.lo() != lo || u.n() != universal.n() {
                    return Err(Error::AmbientMismatch {
                        expected_lo: lo,
                        expected_n: universal.n(),
                        found_lo: u.lo(),
                        found_n: u.n(),
                    });
                }
            }
            sort_oplex_desc(comp);
        }
        Ok(LadderSet {
            universal,
            components,
        })
    }

    pub fn empty(universal: UniversalLexIdeal) -> Self {
        let t = universal.t();
        LadderSet {
            universal,
            components: alloc::vec![Vec::new(); t],
        }
    }

    /// Splits a set of monomials of `U` into components.
    pub fn from_full(universal: UniversalLexIdeal, monomials: &[Monomial]) -> Result<Self> {
        let mut components = alloc::vec![Vec::new(); universal.t()];
        for m in monomials {
            let (i, u) = universal.split(m)?;
            components[i - 1].push(u);
        }
        Self::new(universal, components)
    }

    pub fn universal(&self) -> &UniversalLexIdeal {
        &self.universal
    }

    /// u-parts, component `i` at index `i - 1`, descending in opposite
    /// degree lex order.
    pub fn components(&self) -> &[Vec<Monomial>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The monomials `δ_i u` of the set.
    pub fn full_monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.len());
        for (k, comp) in self.components.iter().enumerate() {
            for u in comp {
                out.push(self.universal.full_monomial(k + 1, u).expect("component ambient"));
            }
        }
        out
    }

    pub fn max_sequence(&self) -> MaxSequence {
        MaxSequence::of(self.universal.n(), &self.full_monomials())
    }

    /// Largest degree of a full monomial.
    pub fn top_degree(&self) -> Option<u64> {
        self.full_monomials().iter().map(Monomial::degree).max()
    }

    /// Conditions (i) and (ii): each component is a rev-lex multicomplex,
    /// and a degree-`d` element of `δ_i M<i>` forces every degree-`d`
    /// monomial of `δ_{i+1} S^(i+1)` into `δ_{i+1} M<i+1>`.
    pub fn is_ladder_set(&self) -> bool {
        if !self
            .components
            .iter()
            .all(|c| is_revlex(c) && is_multicomplex(c))
        {
            return false;
        }
        let u = &self.universal;
        for i in 1..u.t() {
            let next = &self.components[i];
            let degrees: BTreeSet<u64> = self.components[i - 1]
                .iter()
                .map(|v| v.degree() + u.b(i))
                .collect();
            for d in degrees {
                let rel = d as i64 - u.b(i + 1) as i64;
                if rel < 0 {
                    continue;
                }
                let have = next.iter().filter(|v| v.degree() == rel as u64).count();
                if BigUint::from(have) != count_degree(u.component_lo(i + 1), u.n(), rel) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for LadderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, comp) in self.components.iter().enumerate() {
            if comp.is_empty() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}{{", self.universal.delta(k + 1))?;
            for (j, u) in comp.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{u}")?;
            }
            f.write_str("}")?;
        }
        if first {
            f.write_str("{}")?;
        }
        Ok(())
    }
}

pub fn is_ladder_set(m: &LadderSet) -> bool {
    m.is_ladder_set()
}

/// The u-part of `g` in `S^(1)`, or an error when `g` lies elsewhere.
fn first_component_part(u: &UniversalLexIdeal, g: &Monomial) -> Result<Monomial> {
    match u.split(g)? {
        (1, part) => Ok(part),
        _ => Err(Error::NotInFirstComponent(g.to_string())),
    }
}

/// `#{h in U : h <=_dlex g}` for `g` in `U^(1)`:
/// `#U^(1)_{<= e-1}` plus the lex rank of `g` in `U^(1)_e` plus
/// `#U^(>=2)_{<= e}`.
pub fn count_leq_dlex(u: &UniversalLexIdeal, g: &Monomial) -> Result<BigUint> {
    let part = first_component_part(u, g)?;
    Ok(count_leq_dlex_part(u, &part))
}

fn count_leq_dlex_part(u: &UniversalLexIdeal, part: &Monomial) -> BigUint {
    let e = (part.degree() + u.b(1)) as i64;
    let mut acc = u.count_component_upto(1, e - 1) + count_lex_leq(part);
    for k in 2..=u.t() {
        acc += u.count_component_upto(k, e);
    }
    acc
}

/// Admissibility of `f = δ_1 u` in `U^(1)_e`, by iterating the moving map.
pub fn is_admissible(u: &UniversalLexIdeal, f: &Monomial) -> Result<bool> {
    let part = first_component_part(u, f)?;
    Ok(is_admissible_part(u, &part))
}

fn is_admissible_part(u: &UniversalLexIdeal, part: &Monomial) -> bool {
    let t = u.t();
    if t == 1 {
        return true;
    }
    let e = part.degree() + u.b(1);
    // ρ^j(f) = δ_{j+1} w_j, where w_j drops the first j variables of u.
    let mut w = part.clone();
    for j in 1..t {
        w = w.strip_leading().expect("t <= nvars");
        let deg = u.b(j + 1) + w.degree();
        if j < t - 1 {
            if !(deg <= e + 1 || w.is_one()) {
                return false;
            }
        } else {
            if w.is_one() {
                return true;
            }
            let k = e as i64 + 1 - u.b(t) as i64;
            if k < 0 {
                return false;
            }
            // w >=_oplex x_t^k: lower degree, or equal to x_t^k
            let k = k as u64;
            return w.degree() < k || (w.degree() == k && w.exponent(w.lo()) as u64 == k);
        }
    }
    unreachable!("loop returns on the last component")
}

/// The `>_dlex`-largest admissible `g` in `U^(1)` with
/// `count_leq_dlex(U, g) <= c`.
pub fn max_admissible(u: &UniversalLexIdeal, c: &BigUint) -> Option<Monomial> {
    max_admissible_part(u, c).map(|p| u.full_monomial(1, &p).expect("component 1"))
}

fn max_admissible_part(u: &UniversalLexIdeal, c: &BigUint) -> Option<Monomial> {
    if c.is_zero() {
        return None;
    }
    let b1 = u.b(1);
    let mut best = None;
    let mut e = b1;
    // every g of degree e counts at least #U^(1)_{<= e-1} + 1
    while u.count_component_upto(1, e as i64 - 1) < *c {
        for part in enumerate_degree(u.component_lo(1), u.n(), e - b1, MonomialOrder::Lex) {
            if count_leq_dlex_part(u, &part) <= *c && is_admissible_part(u, &part) {
                best = Some(part);
                break;
            }
        }
        e += 1;
    }
    best
}

/// The extremal set of size `c` in `U`.
pub fn extremal_set(u: &UniversalLexIdeal, c: &BigUint) -> Result<LadderSet> {
    let components = extremal_components(u, c)?;
    let set = LadderSet::new(u.clone(), components)?;
    if BigUint::from(set.len()) != *c {
        return Err(Error::Internal(format!(
            "extremal set has {} elements, expected {c}",
            set.len()
        )));
    }
    Ok(set)
}

fn extremal_components(u: &UniversalLexIdeal, c: &BigUint) -> Result<Vec<Vec<Monomial>>> {
    let lo = u.component_lo(1);
    let first = match max_admissible_part(u, c) {
        None => Vec::new(),
        Some(f) => {
            let df = f.degree();
            let mut comp: Vec<Monomial> = (0..df)
                .flat_map(|d| enumerate_degree(lo, u.n(), d, MonomialOrder::Lex))
                .collect();
            comp.extend(
                enumerate_degree(lo, u.n(), df, MonomialOrder::Lex)
                    .into_iter()
                    .filter(|v| v <= &f),
            );
            comp
        }
    };
    let used = BigUint::from(first.len());
    if used > *c {
        return Err(Error::Internal("first component exceeds the budget".to_string()));
    }
    let rest = c - &used;
    let mut out = alloc::vec![first];
    match u.suffix() {
        Some(s) => out.extend(extremal_components(&s, &rest)?),
        None => {
            if !rest.is_zero() {
                return Err(Error::UnreachableSize(c.to_string()));
            }
        }
    }
    Ok(out)
}

/// `dim_K satU / Ubar`, summed up to the generator degree of `Ubar`.
pub fn colength(sat: &MonomialIdeal, ubar: &MonomialIdeal) -> Result<BigUint> {
    if sat.lo() != ubar.lo() || sat.n() != ubar.n() {
        return Err(Error::AmbientMismatch {
            expected_lo: sat.lo(),
            expected_n: sat.n(),
            found_lo: ubar.lo(),
            found_n: ubar.n(),
        });
    }
    if !sat.contains_ideal(ubar) {
        return Err(Error::NotContained);
    }
    let top = ubar.max_generator_degree();
    let mut acc = BigUint::zero();
    for d in 0..=top {
        acc += sat.graded_dim(d) - ubar.graded_dim(d);
    }
    if sat.graded_dim(top + 1) != ubar.graded_dim(top + 1) {
        return Err(Error::Internal(format!(
            "quotient does not vanish in degree {}",
            top + 1
        )));
    }
    Ok(acc)
}

/// `c` as a machine integer, for set sizes.
pub(crate) fn small(c: &BigUint) -> Result<usize> {
    c.to_usize()
        .ok_or_else(|| Error::SizeOverflow {
            requested: c.to_string(),
            available: usize::MAX.to_string(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;
    use alloc::vec::Vec;

    fn m(s: &str, lo: usize, n: usize) -> Monomial {
        Monomial::parse(s, lo, n).unwrap()
    }

    fn strs(v: &[Monomial]) -> Vec<String> {
        v.iter().map(|u| u.to_string()).collect()
    }

    fn big(c: u64) -> BigUint {
        BigUint::from(c)
    }

    fn nis(n: usize, a: &[u32]) -> UniversalLexIdeal {
        UniversalLexIdeal::new(1, n, a.to_vec()).unwrap()
    }

    #[test]
    fn max_sequence_examples() {
        let set: Vec<_> = ["x1", "x1^2", "x1*x2", "x1*x3", "x2^5"]
            .iter()
            .map(|s| m(s, 1, 3))
            .collect();
        assert_eq!(max_sequence(3, &set).counts(), [2, 4, 5]);
        assert_eq!(max_sequence(3, &[]).counts(), [0, 0, 0]);
        assert_eq!(max_sequence(3, &[Monomial::one(1, 3)]).counts(), [1, 1, 1]);
        assert_eq!(max_sequence(3, &[Monomial::one(2, 3)]).counts(), [0, 1, 1]);
    }

    #[test]
    fn dominates_examples() {
        let s = |v: &[u64]| MaxSequence::from_counts(v.to_vec());
        assert!(dominates(&s(&[2, 4, 5]), &s(&[2, 4, 5])).unwrap());
        assert!(dominates(&s(&[2, 4, 5]), &s(&[1, 4, 5])).unwrap());
        assert!(!dominates(&s(&[2, 3, 5]), &s(&[3, 3, 5])).unwrap());
        assert_eq!(
            dominates(&s(&[1]), &s(&[1, 2])),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn set_constructors() {
        let srl = super_revlex_set(1, 2, 4).unwrap();
        assert_eq!(strs(&srl), ["1", "x1", "x2", "x2^2"]);
        assert!(is_super_revlex(&srl));
        assert_eq!(
            strs(&interval(&m("x1^2", 1, 2), &m("x2^2", 1, 2)).unwrap()),
            ["x1^2", "x1*x2", "x2^2"]
        );
        assert_eq!(strs(&lower_lex_set(1, 2, 1, 2).unwrap()), ["x1", "x2"]);
        assert_eq!(strs(&lower_lex_set(1, 2, 1, 3).unwrap()), ["x1", "x2", "x1^2"]);
        assert_eq!(strs(&upper_revlex_set(1, 2, 2, 2).unwrap()), ["x1*x2", "x2^2"]);
        assert_eq!(strs(&upper_revlex_set(1, 2, 1, 3).unwrap()), ["1", "x1", "x2"]);
        assert!(matches!(
            upper_revlex_set(1, 2, 1, 4),
            Err(Error::SizeOverflow { .. })
        ));
        assert!(matches!(
            interval(&m("x2^2", 1, 2), &m("x1", 1, 2)),
            Err(Error::InvalidInterval(..))
        ));
        let across = interval(&m("x2", 1, 2), &m("x1*x2", 1, 2)).unwrap();
        assert_eq!(strs(&across), ["x2", "x1^2", "x1*x2"]);
    }

    #[test]
    fn predicates() {
        let set = |v: &[&str]| v.iter().map(|s| m(s, 1, 2)).collect::<Vec<_>>();
        assert!(is_revlex(&set(&["x2", "x1*x2", "x2^2"])));
        assert!(!is_revlex(&set(&["x1"])));
        assert!(is_multicomplex(&set(&["1", "x2", "x2^2"])));
        assert!(!is_multicomplex(&set(&["1", "x2^2"])));
        assert!(!is_super_revlex(&set(&["1", "x2", "x2^2"])));
        assert!(is_super_revlex(&set(&["1", "x1", "x2"])));
        assert!(is_super_revlex(&[]));
    }

    #[test]
    fn moving_map_examples() {
        let u = nis(3, &[1, 2, 2]);
        let f = u.full_monomial(1, &m("x1^2*x3", 1, 3)).unwrap();
        let g = moving_map(&u, &f).unwrap().unwrap();
        assert_eq!(g, u.full_monomial(2, &m("x3", 2, 3)).unwrap());
        assert_eq!(moving_map(&u, &u.delta(1)).unwrap(), Some(u.delta(2)));
        assert_eq!(moving_map(&u, &u.delta(3).mul_var(3, 2)).unwrap(), None);
        assert!(moving_map(&u, &m("x3^9", 1, 3)).is_err());
    }

    #[test]
    fn ladder_examples() {
        let u = UniversalLexIdeal::new(1, 3, vec![0, 4]).unwrap();
        let set = LadderSet::new(
            u.clone(),
            vec![
                ["1", "x1", "x2", "x3"].iter().map(|s| m(s, 1, 3)).collect(),
                vec![Monomial::one(2, 3)],
            ],
        )
        .unwrap();
        assert!(set.is_ladder_set());
        assert_eq!(set.max_sequence().counts(), [2, 4, 5]);
        assert_eq!(set.to_string(), "x1{1,x1,x2,x3} + x2^5{1}");

        let v = UniversalLexIdeal::new(1, 2, vec![0, 0]).unwrap();
        let bad = LadderSet::new(
            v.clone(),
            vec![vec![Monomial::one(1, 2), m("x1", 1, 2)], vec![]],
        )
        .unwrap();
        assert!(!bad.is_ladder_set());
        assert!(LadderSet::empty(v).is_ladder_set());
    }

    #[test]
    fn count_leq_dlex_examples() {
        for n in 3..=5usize {
            let u = nis(n, &[1, 2]);
            let g = u.full_monomial(1, &m("x1^2", 1, n)).unwrap();
            let expect = crate::binomial(n as i64 + 2, 2) + 1u32;
            assert_eq!(count_leq_dlex(&u, &g).unwrap(), expect);
            let g = u.full_monomial(1, &m("x1*x2^2", 1, n)).unwrap();
            assert_eq!(count_leq_dlex(&u, &g).unwrap(), crate::binomial(n as i64 + 3, 3));
        }
        let x1 = nis(2, &[0]);
        assert_eq!(count_leq_dlex(&x1, &x1.delta(1)).unwrap(), big(1));
        let u = nis(3, &[1, 2]);
        assert!(matches!(
            count_leq_dlex(&u, &u.delta(2)),
            Err(Error::NotInFirstComponent(_))
        ));
    }

    fn admissible_list(u: &UniversalLexIdeal, e: u64) -> Vec<String> {
        enumerate_degree(1, u.n(), e - u.b(1), MonomialOrder::Lex)
            .into_iter()
            .filter(|p| is_admissible(u, &u.full_monomial(1, p).unwrap()).unwrap())
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn admissible_examples() {
        let u = nis(3, &[1, 2]);
        assert_eq!(admissible_list(&u, 5), ["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2"]);
        let u = nis(4, &[1, 2]);
        assert_eq!(
            admissible_list(&u, 5),
            ["x1^3", "x1^2*x2", "x1^2*x3", "x1^2*x4", "x1*x2^2"]
        );
        let u = nis(3, &[1, 2, 2]);
        assert_eq!(
            admissible_list(&u, 6),
            ["x1^4", "x1^3*x2", "x1^3*x3", "x1^2*x2^2", "x1^2*x2*x3", "x1*x2^3", "x1*x2^2*x3"]
        );
        let single = nis(3, &[2]);
        assert_eq!(admissible_list(&single, 5).len(), 6);
        // δ_1 x_1^k is always admissible
        for k in 0..6 {
            assert!(is_admissible(&u, &u.delta(1).mul_var(1, k)).unwrap());
        }
    }

    #[test]
    fn max_admissible_examples() {
        for n in 3..=5usize {
            let u = nis(n, &[1, 2]);
            let c = crate::binomial(n as i64 + 2, 2) + 2u32;
            let f = max_admissible(&u, &c).unwrap();
            assert_eq!(f, u.full_monomial(1, &m("x1^2", 1, n)).unwrap());
            let l = extremal_set(&u, &c).unwrap();
            let first: Vec<_> = crate::monomial::enumerate_upto(1, n, 2);
            assert_eq!(l.components()[0].len(), first.len());
            assert_eq!(strs(&l.components()[1]), ["1", &alloc::format!("x{n}")]);
        }
        let u = nis(3, &[0, 0]);
        assert_eq!(max_admissible(&u, &big(1)), None);
        assert_eq!(max_admissible(&u, &big(0)), None);
        let l = extremal_set(&u, &big(1)).unwrap();
        assert!(l.components()[0].is_empty());
        assert_eq!(strs(&l.components()[1]), ["1"]);
    }

    #[test]
    fn extremal_examples() {
        let u = UniversalLexIdeal::new(1, 3, vec![0, 4]).unwrap();
        let l = extremal_set(&u, &big(5)).unwrap();
        assert_eq!(l.to_string(), "x1{1,x1,x2,x3} + x2^5{1}");
        assert!(l.is_ladder_set());

        let u = UniversalLexIdeal::new(1, 4, vec![0, 1, 1]).unwrap();
        let l = extremal_set(&u, &big(15)).unwrap();
        assert_eq!(
            l.to_string(),
            "x1{1,x1,x2,x3,x4,x2*x3,x2*x4,x3^2,x3*x4,x4^2} + x2^2{1,x2,x3,x4} + x2*x3^2{1}"
        );
        assert!(l.is_ladder_set());

        let empty = extremal_set(&u, &big(0)).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn extremal_full_ring_is_super_revlex() {
        let s = UniversalLexIdeal::full_ring(1, 3).unwrap();
        for c in 0..12usize {
            let l = extremal_set(&s, &big(c as u64)).unwrap();
            let mut expect = super_revlex_set(1, 3, c).unwrap();
            let mut got = l.components()[0].clone();
            expect.sort();
            got.sort();
            assert_eq!(got, expect, "c={c}");
        }
    }

    #[test]
    fn extremal_sets_are_ladder_sets() {
        for n in 2..=4usize {
            for t in 1..n {
                let mut a = vec![0u32; t];
                loop {
                    let u = UniversalLexIdeal::new(1, n, a.clone()).unwrap();
                    for c in 0..=20u64 {
                        let l = extremal_set(&u, &big(c)).unwrap();
                        assert!(l.is_ladder_set(), "{u} c={c}: {l}");
                        for comp in l.components() {
                            assert!(is_super_revlex(comp), "{u} c={c}: {l}");
                        }
                        // M ⊂ U, so U_{<=e} ⊂ M iff the low-degree counts agree
                        let full = l.full_monomials();
                        for e in 0..=12u64 {
                            let want = u.count_upto(e as i64);
                            if want <= big(c) {
                                let low = full.iter().filter(|h| h.degree() <= e).count();
                                assert_eq!(big(low as u64), want, "{u} c={c} e={e}");
                            }
                        }
                    }
                    let mut k = 0;
                    while k < t && a[k] == 3 {
                        a[k] = 0;
                        k += 1;
                    }
                    if k == t {
                        break;
                    }
                    a[k] += 1;
                }
            }
        }
    }

    #[test]
    fn colength_examples() {
        let ideal = |n: usize, g: &[&str]| MonomialIdeal::parse(1, n, g.iter().copied()).unwrap();
        let sat = ideal(3, &["x1", "x2^5"]);
        let ubar = ideal(3, &["x1", "x2^6", "x2^5*x3^5"]);
        assert_eq!(colength(&sat, &ubar).unwrap(), big(5));
        let sat = ideal(4, &["x1", "x2^2", "x2*x3^2"]);
        let ubar = ideal(4, &["x1", "x2^2", "x2*x3^3", "x2*x3^2*x4^15"]);
        assert_eq!(colength(&sat, &ubar).unwrap(), big(15));
        assert_eq!(colength(&sat, &sat).unwrap(), big(0));
        assert_eq!(colength(&ubar, &sat), Err(Error::NotContained));
    }
}
