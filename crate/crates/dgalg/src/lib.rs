//! Exact-arithmetic toolkit for finite-dimensional differential graded
//! algebras: radicals and DG ideals, Hom complexes and endomorphism DG
//! algebras, the Auslander-style endomorphism construction, and machine
//! checks of its semi-orthogonality, semisimplicity and generation
//! properties.

// index-based loops over matrix coordinates are the house style here
#![allow(clippy::needless_range_loop)]

pub mod auslander;
pub mod builders;
pub mod complexes;
pub mod corpus;
pub mod dga;
pub mod exactlin;
pub mod homalg;
