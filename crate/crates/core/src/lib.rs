//! Exact combinatorics of degenerate principal series attached to maximal
//! parabolic subgroups with an abelian unipotent radical.
//!
//! When the radical `N` of a maximal parabolic `P = MN` in a simple group is
//! abelian and `P` is conjugate to its opposite, `N` carries the structure of
//! a Jordan algebra of some rank `r` over a coordinate space of dimension
//! `d`. Those two integers drive everything this crate computes:
//!
//! * [`root_system`] — integer-exact simple root systems, Weyl reflections,
//!   longest elements and inversion sets;
//! * [`jordan`] — classification of the qualifying parabolics, the invariants
//!   `(r, d)`, strongly orthogonal root sets, the Pierce grid, the descending
//!   tower of groups behind the Fourier–Jacobi recursion, and the restricted
//!   rank-`r` datum of type C;
//! * [`zeta`] — formal products of zeta factors `Z(k*s + c)` with exact
//!   multiset cancellation, pole/zero ledgers under p-adic, real and global
//!   profiles, and numeric evaluation;
//! * [`cfunction`] — the intertwining c-function computed three independent
//!   ways (inversion-set product, closed form, restricted rank-one
//!   factorization) so they can be cross-validated;
//! * [`reducibility`] — the rule engine for reducibility points of the
//!   degenerate principal series, the recursion consistency check, and the
//!   truncated-pyramid combinatorics of the real case;
//! * [`eisenstein`] — the global pole ledger with its wall-regularity filter,
//!   and the unramified local factor of the Fourier–Jacobi expansion.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `jordan-eisenstein` binary exposes the same operations as subcommands.

pub mod cfunction;
pub mod eisenstein;
pub mod error;
pub mod jordan;
pub mod rational;
pub mod reducibility;
pub mod report;
pub mod root_system;
pub mod zeta;

pub use error::{Error, Result};
pub use rational::Rat;
