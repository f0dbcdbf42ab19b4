//! Exact equivariant Euler characteristics of G-sheaves as virtual
//! characters.
//!
//! The crate provides cyclotomic arithmetic ([`cyclo`]), enumerated
//! permutation groups ([`groups`]), class functions and character tables
//! ([`charfun`]), sector assembly over `BG` ([`lrr`]), the explicit formula
//! for curves ([`curve`]), and an independent cohomological check on the
//! projective line ([`oracle`]).

pub mod charfun;
pub mod curve;
pub mod cyclo;
pub mod error;
pub mod groups;
pub mod json;
pub mod limits;
pub mod lrr;
pub mod oracle;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
