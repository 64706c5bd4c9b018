//! Compositions of graded coalgebras built on planar binary trees, ordered
//! trees (permutations) and combs.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinat`]: the index objects (trees, words, combs, painted and
//!   composite trees, compositions, simplex faces) with splitting and grafting.
//! - [`exactalg`]: exact rational linear combinations, the algebra traits,
//!   sparse exact elimination, antipodes and power series.
//! - [`basehopf`]: the Hopf algebras `SSym`, `YSym`, `CSym` and the maps
//!   between them.
//! - [`compose`]: the composition `D∘C` of two graded coalgebras.
//! - [`operadic`]: Hopf operads, connections and the one-sided Hopf algebras
//!   they induce.
//! - [`named`]: painted trees, composite trees, composition trees and
//!   simplices.
//! - [`verify`]: exhaustive axiom checks with machine-readable reports.
//! - [`catalog`]: name-based dispatch shared by the command line and the
//!   browser front end.

pub mod basehopf;
pub mod catalog;
pub mod combinat;
pub mod compose;
pub mod error;
pub mod exactalg;
pub mod named;
pub mod operadic;
pub mod verify;

pub use error::{Error, ParseError, Result};
