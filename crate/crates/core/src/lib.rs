//! Exact-arithmetic polyhedral cone valuations and Weyl chamber combinatorics.
//!
//! Everything in this crate is computed over arbitrary-precision rationals;
//! there are no floating point numbers and no tolerance parameters. The crate
//! provides:
//!
//! * [`ratgeom`] — rational vectors/matrices, linear solving, sign characters;
//! * [`cones`] — closed convex polyhedral cones with double descriptions,
//!   face lattices, the integer valuations `psi`/`phi`, the conic-function
//!   algebra with its `*` and `^` involutions, and nearest-face projection;
//! * [`rootsys`] — root systems, Weyl groups, chambers and subsystems;
//! * [`constants`] — chamber sums, the recursion oracle for stable constants,
//!   `d(w)` tables and the individual constants `b`;
//! * [`parafan`] — Levi fans, Kostant representatives and truncated virtual
//!   weight sums;
//! * [`verify`] — the property suites surfaced by the CLI.

pub mod cones;
pub mod constants;
pub mod error;
pub mod parafan;
pub mod ratgeom;
pub mod rootsys;
pub mod verify;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
