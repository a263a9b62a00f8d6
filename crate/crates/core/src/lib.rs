//! Saturated monomial ideals with the largest Betti numbers for a fixed
//! Hilbert polynomial.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`] – monomials in a variable range `x_lo..x_n`, the three
//!   monomial orders used throughout, counting helpers.
//! * [`ideal`] – monomial ideals, Hilbert series and polynomials, strongly
//!   stable / lex predicates, saturation, lexification and Betti numbers.
//! * [`hilbert`] – Hilbert polynomials, their binomial (b-list) form and
//!   universal lex ideals.
//! * [`ladder`] – max sequences, rev-lex sets, ladder sets, admissible
//!   monomials and the extremal-set construction.
//! * [`maximizer`] – the end-to-end pipelines from a Hilbert polynomial (or an
//!   ideal) to the Betti-maximal saturated ideal.
//! * [`oracle`] – exhaustive enumeration of ladder sets and the dominance
//!   verifiers.
//!
//! Everything is exact: big integers and big rationals, no floating point.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod arith;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod ladder;
pub mod maximizer;
pub mod monomial;
pub mod oracle;
pub mod poly;

pub use arith::{binomial, binomial_i};
pub use error::{Error, Result};
pub use hilbert::{HilbertPolynomial, UniversalLexIdeal};
pub use ideal::{BettiSubject, BettiTable, HilbertSeriesNumerator, MonomialIdeal};
pub use ladder::{LadderSet, MaxSequence};
pub use maximizer::MaximizerReport;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::RationalPoly;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
