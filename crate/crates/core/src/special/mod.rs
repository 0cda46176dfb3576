//! Bernoulli and Euler numbers modulo p, harmonic sums, Fibonacci and Lucas numbers.

pub mod bernoulli;
pub mod harmonic;
pub mod lucas;

pub use bernoulli::{bernoulli_mod, bernoulli_poly_mod, euler_mod, SpecialConstants};
pub use harmonic::{harmonic, harmonic_prefix, mhs};
pub use lucas::{fib_lucas_mod, lucas_numbers, lucas_quotient};
