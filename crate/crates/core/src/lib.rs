//! Exact arithmetic in finite fields, finite-dimensional algebras over them
//! and general finite rings, with structural queries, statement checks and an
//! isomorphism census of small algebras.

pub mod algebra;
pub mod budget;
pub mod census;
pub mod finring;
pub mod gf;
pub mod io;
pub mod ring;
pub mod structure;
pub mod theorems;
