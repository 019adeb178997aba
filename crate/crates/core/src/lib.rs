//! Tilting modules and quasi-hereditary structures of linear Nakayama
//! algebras with quadratic relations.

pub mod algebra;
pub mod counting;
pub mod dot;
pub mod error;
pub mod gluing;
pub mod homological;
pub mod io;
pub mod order;
pub mod qhs;
pub mod repr;
pub mod tilting;
pub mod tree;
pub mod verify;

pub use algebra::{AlgebraSpec, BasicModule, Interval, Vertex};
pub use error::{Error, Result};
pub use order::PartialOrder;
