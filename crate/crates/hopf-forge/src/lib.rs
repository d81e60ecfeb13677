//! Exact structure checker for monads, comonads, bimonads and Hopf monads
//! presented by finite data.
//!
//! Two backends are supported: finite-dimensional vector spaces over `F_p`
//! or `Q`, where the endofunctor is "tensor with a fixed coefficient space
//! `B`", and finite sets, where it is "cartesian product with a fixed set
//! `G`". Structure maps (multiplication, unit, comultiplication, counit,
//! braiding, antipode) are given by exact structure constants or tables;
//! every law is verified as a commuting diagram of generators, and every
//! failure carries a basis-level counterexample.

pub mod scalar;
pub mod matrix;
pub mod finmap;
pub mod word;
pub mod pipeline;
pub mod report;
pub mod instance;
pub mod catalog;
pub mod monad;
pub mod bimonad;
pub mod tau;
pub mod adjoint;
pub mod commands;

pub use pipeline::{CalcError, Caps, CheckConfig};
pub use report::{CheckItem, Classification, Report};
pub use tau::tau_entwining;
pub use word::{Backend, FieldSpec, NatGen, Payload, TensorWord};

/// Engine-level error: either a resource cap was hit or the input data is
/// unusable. The CLI maps these to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("{0}")]
    Calc(#[from] pipeline::CalcError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
