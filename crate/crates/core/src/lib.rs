//! Counting solutions of quadratic-form congruences `Q(x, y) ≡ λ (mod p)` in
//! boxes `K+1 ≤ x ≤ K+M`, `L+1 ≤ y ≤ L+M`.
//!
//! The crate provides
//!
//! * exact and brute-force box counters ([`boxcount`]),
//! * reduction of a form to a standard shape `X² - DY²`, `XY` or `X² - Y²`
//!   ([`quadform`]),
//! * the lift of the standardized congruence to a finite family of norm
//!   equations via a pigeonhole multiplier ([`decomp`]),
//! * Pell units, lattice-point enumeration on conics and an arc-length
//!   checker for the "two points per short arc" property ([`conic`]),
//! * experiment plumbing: end-to-end pipeline, seeded sweeps emitting CSV,
//!   exponent fitting ([`harness`]).
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod boxcount;
pub mod conic;
pub mod decomp;
pub mod error;
pub mod harness;
pub mod interval;
pub mod modmath;
pub mod quadform;

pub use error::{Error, Result};
pub use interval::Interval;
pub use modmath::{PrimeModulus, Residue};
pub use quadform::{QuadraticForm, SearchBox};
