//! Computational finite lattice theory: bounded lattices with precomputed
//! meet/join tables, congruence lattices, ideals and filters over prime
//! fields, term identities, automorphism groups, and a family of gluing
//! constructions that transport congruence structure between lattices.

pub mod autgroup;
pub mod bitset;
pub mod congruence;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod gf;
pub mod ideal;
pub mod identity;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use lattice::{BuildOptions, ElemId, FiniteLattice, Poset};
