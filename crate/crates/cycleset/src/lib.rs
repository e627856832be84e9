//! Exact-arithmetic toolkit for linear cycle sets and braces: validation,
//! extensions, equivalence, classification, and cohomology of the associated
//! shuffle-normalized cochain complex.
//!
//! Everything is table-driven and exact; no floating point anywhere.

#![no_std]

extern crate alloc;

pub mod abelian;
pub mod cohomology;
pub mod extension;
pub mod lcs;
pub mod matrix;
pub mod report;
