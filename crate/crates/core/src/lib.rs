//! Exact invariants of fusion rings.
//!
//! Casimir numbers (via Hermite normal form), determinants (fraction-free
//! elimination), Frobenius–Perron dimensions, irreducible representations and
//! formal codegrees, with the Haagerup–Izumi family `HI_G` built in together
//! with closed-form values for `G = Z_n`.

pub mod casimir;
pub mod fusion;
pub mod hi;
pub mod linalg;
pub mod reps;
