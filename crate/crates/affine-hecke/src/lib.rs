//! Combinatorics of extended affine Weyl groups and affine Hecke algebras.
//!
//! The library covers, for any finite-type root datum:
//!
//! - the extended affine Weyl group `W = X_* ⋊ W_fin` with the
//!   Iwahori-Matsumoto length, reduced words, Bruhat order, and the
//!   semi-infinite order ([`affweyl`]);
//! - the affine Hecke algebra over `Z[v^{±1}]` in the `T`-basis, Bernstein's
//!   commuting elements `theta_nu`, and central elements attached to
//!   Weyl-invariant characters ([`hecke`]);
//! - Kazhdan-Lusztig polynomials and the canonical basis, with an optional
//!   on-disk cache ([`kl`]);
//! - the antispherical right module and the kernel dichotomy for canonical
//!   basis elements ([`antispherical`]);
//! - weight multiplicities of dual-group representations via Freudenthal's
//!   formula, Weyl dimensions, tensor products, and minuscule decompositions
//!   in type A ([`dualrep`]);
//! - the group-ring model of the equivariant K-group of the affine flag
//!   variety: classes of (co)standard, simple, Wakimoto and central objects,
//!   and Iwahori-Whittaker averaging ([`ktheory`]).
//!
//! The `examples/` directory demonstrates each area end to end, and the
//! `affine-hecke` binary exposes the same operations as subcommands; run
//! `affine-hecke selftest` for a quick cross-check of the core identities.

pub mod affweyl;
pub mod antispherical;
pub mod cli;
pub mod dualrep;
pub mod error;
pub mod hecke;
pub mod kl;
pub mod ktheory;
pub mod laurent;
pub mod rootdata;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use rootdata::{Coweight, CoweightClass, FiniteWeylElement, RootDatum, WeylGroup};
