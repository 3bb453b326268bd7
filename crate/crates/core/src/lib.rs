//! Exact computational algebra for chemical reaction networks.
//!
//! Builds the toric ideal attached to a weakly reversible reaction
//! network through the multi-Rees algebra presentation of its complex
//! monomials: binomial generators, saturation, the moduli ideal,
//! Cayley matrix constructions, the special fiber, and the deficiency
//! identities that tie them together. Everything runs over exact
//! rational arithmetic; there is no floating point anywhere.

pub mod analysis;
pub mod context;
pub mod crn;
pub mod grading;
pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod monomial;
pub mod network;
pub mod order;
pub mod poly;
pub mod polytext;
pub mod randomnet;
pub mod weights;

pub use context::{Block, VariableContext};
pub use grading::{MultiDegree, Multigrading};
pub use ideal::Ideal;
pub use matrix::IntegerMatrix;
pub use monomial::Monomial;
pub use network::Network;
pub use order::MonomialOrder;
pub use poly::Polynomial;
