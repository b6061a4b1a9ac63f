//! Introduction of a single universal-existential cut into cut-free
//! sequent proofs, driven by schematic tree grammars.

pub mod bench;
pub mod calculus;
pub mod grammar;
pub mod herbrand;
pub mod logic;
pub mod report;
pub mod sexpr;
pub mod solver;

#[cfg(test)]
mod testing;
