//! Trace codes over the quintic ring `F_{2^m}[v]/(v^5 - 1)`.
//!
//! The crate builds the codes `C(m,2,L) = { (Tr(a x))_{x unit} }`, maps them
//! to binary through the coefficient Gray map, and computes their Lee weight
//! distributions three ways: exhaustive enumeration, closed forms, and CRT
//! class measurement. [`analysis`] and [`sss`] cover Griesmer optimality,
//! dual distance, minimal codewords and the Massey secret-sharing scheme.
//!
//! `no_std` with `alloc`; IO, parallel drivers and the CLI live in the
//! `quintic` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod bits;
pub mod code;
pub mod distribution;
pub mod error;
pub mod gf2m;
pub mod ring;
pub mod sss;

pub use code::{CodeSpec, TraceCode};
pub use distribution::{Provenance, WeightDistribution};
pub use error::{Error, Result};
pub use gf2m::{FieldContext, FieldElement};
pub use ring::{BaseElement, ParityClass, QuinticRing, RingElement, UnitProfile, WeightClass};

/// Version of the canonical unit order (ascending packed value). Bump if it changes.
pub const UNIT_ORDER_VERSION: u32 = 1;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
