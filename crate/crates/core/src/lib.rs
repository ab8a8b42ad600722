//! Graded Specht modules for cyclotomic KLR algebras of type A.

pub mod cli;
pub mod config;
pub mod engine;
pub mod error;
pub mod hom;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod scalar;
pub mod specht;
pub mod symgroup;
pub mod tableau;
pub mod verify;
pub mod words;
