//! Exact computations around the constant `D(q)`: the largest asymptotic
//! ratio of rational points to degree for curves over `F_q`.
//!
//! The crate builds small finite fields, counts rational points on two
//! explicit curve families, constructs the Weierstrass semigroups at the
//! totally ramified place of the Garcia–Stichtenoth tower, and evaluates
//! the upper and lower bounds on `D(q)` as exact rationals.
//!
//! Everything is deterministic and exact: counts are big integers, bounds
//! are reduced rationals, and no floating point is used in any result.

pub mod bounds;
pub mod cli;
pub mod distribution;
pub mod gf;
pub mod gs_tower;
pub mod homma_family;
pub mod projective;
pub mod semigroup;
pub mod verify;

pub use distribution::ValueDistribution;
pub use gf::{Fe, FieldContext, GfError, PrimePower};
