//! Finite polylogarithms, truncated p-adic arithmetic and a registry of
//! congruences between them, checked mechanically over ranges of primes.

pub mod arith;
pub mod congruences;
pub mod identities;
pub mod lucaspoly;
pub mod mobius;
pub mod polylog;
pub mod rings;
pub mod special;
