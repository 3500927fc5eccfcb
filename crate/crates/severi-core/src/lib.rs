//! Exact-arithmetic models of the four Severi varieties.
//!
//! Everything here is computed over the rationals with arbitrary precision,
//! so every identity is checked exactly, never up to a tolerance. The crate
//! provides:
//!
//! - [`composition`]: the four composition algebras R, C, H, O built by
//!   Cayley-Dickson doubling;
//! - [`cubic`]: the four cubic spaces (Veronese, Segre, Pfaffian,
//!   exceptional) with their determinant, trace form, adjoint and
//!   quadratic operators;
//! - [`geometry`]: secant geometry of the models - entry loci, the
//!   gradient (Cremona) map, the dual-space isomorphisms, homogeneity
//!   certificates;
//! - [`terracini`]: tangent-space span dimensions at generic secant points;
//! - [`roots`]: Bourbaki root systems and the enumeration of highest
//!   weights whose orbit has a degenerate secant variety, ending in the
//!   four-variety classification;
//! - [`sampling`] and [`rng`]: deterministic seeded sampling of variety
//!   points so that every check is reproducible bit for bit.
//!
//! The crate is `no_std` (with `alloc`); all IO and the CLI live in the
//! companion `severi-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod composition;
pub mod cubic;
pub mod geometry;
pub mod linalg;
pub mod rational;
pub mod rng;
pub mod roots;
pub mod sampling;
pub mod terracini;
