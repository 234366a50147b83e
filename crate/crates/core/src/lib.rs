//! Finite multiple zeta(-star) values, finite multiple polylogarithms, and
//! the congruence identities relating them, verified as exact congruences
//! modulo prime powers.
//!
//! The crate has three layers:
//!
//! * exact rational oracles ([`exact`]) and index combinatorics
//!   ([`indices`]) — slow, trusted reference implementations;
//! * modular evaluation ([`modp`]) of the same quantities directly in
//!   Z/p^n Z, plus the word algebra ([`hoffman`]) with its evaluation maps;
//! * congruence checks ([`series`], [`hoffman`]) and a sweep harness
//!   ([`harness`]) that runs them over prime ranges and emits reports.

pub mod error;
pub mod exact;
pub mod harness;
pub mod hoffman;
pub mod indices;
pub mod modp;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use exact::{PolyQ, PolylogKind, Rational};
pub use indices::{Index, NonNegTuple, Word01};
pub use modp::{PolyMod, Residue};
pub use report::CheckReport;
