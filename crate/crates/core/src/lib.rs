//! Plane triangulations with all vertices of degree 3 or 6.
//!
//! Every such triangulation `P` is determined up to isomorphism by a small
//! piece of integer data: an *index-vector* `(k, m, s)` with `k·m = n` and
//! `0 <= s < m`, where `|P| = 2km + 2`. The triple records how the drawing
//! decomposes into one of its three edge classes: an inner path of length
//! `m`, `k - 1` concentric cycles of length `2m`, an exterior path of length
//! `m`, and the offset `s` of the exterior path. This crate implements both
//! sides of that correspondence and cross-checks them against each other:
//!
//! - [`numthy`]: exact integer arithmetic: divisor statistics, the
//!   congruence `t² + t + 1 ≡ 0 (mod n)`, continued-fraction convergents,
//!   and billiard sequences.
//! - [`ivec`]: index-vector algebra: the successor map that rotates a
//!   vector through the three edge classes, mirror reflection, orbits,
//!   codes, and the arithmetic akempic test `gcd(s, n) = gcd(s+1, n) = 1`.
//! - [`enumerate`]: the vector universe for a given `n`, its partition
//!   into codes, and closed-form counts (total, akempic, symmetric, and a
//!   histogram of code orders), each with an independent partition oracle.
//! - [`tri`]: the graph layer: rotation-system construction of each
//!   triangulation, the unique nonsingular 4-colouring, edge-class
//!   decomposition, index-vectors measured directly from the embedding,
//!   Kempe-closure brute force, and canonical forms for isomorphism.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod enumerate;
mod error;
pub mod ivec;
pub mod numthy;
pub mod tri;

pub use error::{Error, Result};
pub use ivec::{Code, IndexVector, Orbit};
pub use tri::PlaneTriangulation;
