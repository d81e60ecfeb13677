//! The `hopf-forge` book as testable documentation.
//!
//! Each module below carries one chapter of the book (`book/src/*.md`) as
//! its documentation, included verbatim from the same markdown files that
//! `mdbook` renders. Running `cargo test --doc -p hopf-forge-guide`
//! therefore compiles and executes every code snippet the book shows, so
//! the guide cannot drift away from the library it documents.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/generators.md")]
pub mod generators {}

#[doc = include_str!("../../../book/src/pipelines.md")]
pub mod pipelines {}

#[doc = include_str!("../../../book/src/monads-and-comonads.md")]
pub mod monads_and_comonads {}

#[doc = include_str!("../../../book/src/bimonads-and-antipodes.md")]
pub mod bimonads_and_antipodes {}

#[doc = include_str!("../../../book/src/hopf-modules.md")]
pub mod hopf_modules {}

#[doc = include_str!("../../../book/src/braidings.md")]
pub mod braidings {}

#[doc = include_str!("../../../book/src/duality-and-mates.md")]
pub mod duality_and_mates {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
