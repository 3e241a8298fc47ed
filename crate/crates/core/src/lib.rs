//! Numerical semigroups and their square diagrams.
//!
//! A numerical semigroup of genus `g` is drawn as a lattice path of `2g`
//! unit steps: step `i` goes right when `i` belongs to the semigroup and up
//! when it is a gap. The path is always a Dyck path of order `g`, different
//! semigroups give different paths, symmetric semigroups give paths that
//! are symmetric about an antidiagonal, and the area above the path is the
//! weight of the semigroup.
//!
//! - [`semigroup`] builds and inspects semigroups.
//! - [`dyck`] maps semigroups to paths and back.
//! - [`enumeration`] lists every semigroup of a given genus and checks the
//!   Catalan and central-binomial bounds on their number.
//!
//! The guide under `book/` walks through each of these; its code listings
//! are compiled and run as doc-tests of this crate.
//!
//! ```
//! use squarediagram::{dyck, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
//! let path = dyck::tau(&s);
//! assert_eq!(path.to_string(), "UURURRUR");
//! assert_eq!(dyck::area_above(&path), s.weight());
//! ```

pub mod binomial;
pub mod dyck;
pub mod enumeration;
mod error;
pub mod semigroup;

pub use dyck::{DyckPath, PathDecodeOutcome, Rejection, Step};
pub use enumeration::BoundsRecord;
pub use error::{SemigroupError, MAX_GENUS};
pub use semigroup::{DerivedProfile, NumericalSemigroup};

// The guide's listings run as doc-tests so they stay in step with the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/square-diagram.md")]
    mod square_diagram {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/weight.md")]
    mod weight {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
