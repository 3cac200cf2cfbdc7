//! Fractional-part sums over unit groups and the finiteness of monodromy.
//!
//! Given a modulus `d` and residues `k_1, ..., k_{n+1}`, the central question is
//! whether for every unit `s` modulo `d` one of
//! `sum {k_i s / d} < 1` or `sum {-k_i s / d} < 1` holds. This crate decides that
//! condition exactly, classifies every tuple that satisfies it (the Schwarz list
//! for triples, and the sporadic solutions for four and five residues), and
//! cross-checks the classification two independent ways:
//!
//! - [`forms`]: total anisotropy of an explicit tridiagonal skew-Hermitian form
//!   over the cyclotomic field `Q(zeta_d)`, computed with exact arithmetic from
//!   [`cyclotomic`].
//! - [`groups`]: brute-force closure of the explicit 2x2 generators of the
//!   specialized Gassner representation (triples only).
//!
//! The [`arith`] and [`conditions`] modules hold the exact rational machinery;
//! [`classify`] holds the enumeration and table reproduction.

pub mod arith;
pub mod classify;
pub mod conditions;
pub mod cyclotomic;
pub mod forms;
pub mod groups;

mod error;

pub use arith::{Fraction, ResidueTuple, UnitGroup};
pub use error::{Error, Result};
