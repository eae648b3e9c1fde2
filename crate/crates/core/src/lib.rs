//! Exact arithmetic on monomial ideals of `K[x1, ..., xn]`.
//!
//! The crate is `no_std` (it only needs `alloc`) and every operation is a
//! pure function over immutable values. It covers:
//!
//! * monomials and minimal generating sets ([`Monomial`], [`MonomialIdeal`]),
//!   with products, powers, colons, saturations and monomial localization;
//! * irreducible decomposition, associated/minimal primes and
//!   intersection-of-prime-powers presentations ([`decomp`]);
//! * multigraded Betti numbers over a prime field, Castelnuovo-Mumford
//!   regularity, the linear-resolution predicate and a linear-quotients
//!   search ([`resolution`]);
//! * the polymatroidal exchange check and the Veronese-type and transversal
//!   families ([`polymatroid`]).
//!
//! Variables are indexed from `0` in this API. The text formats of the
//! companion crate use `x1..xn`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomp;
mod error;
mod ideal;
mod linalg;
mod monomial;
pub mod polymatroid;
mod prime;
pub mod resolution;

pub use error::{Error, Result};
pub use ideal::{Descriptors, ExponentBounds, MonomialIdeal};
pub use monomial::{Monomial, VarSet, DEFAULT_MAX_EXPONENT, MAX_VARS};
pub use prime::MonomialPrime;
