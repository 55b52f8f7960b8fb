//! Exact classification of split TTF-triples over finite-dimensional
//! algebras over prime fields.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod exactlinalg;
pub mod format;
pub mod modrep;
pub mod torsion;
