//! Symplectic matroids represented by isotropic subspaces over prime fields,
//! and the stabilizer codes, graph states and secret-sharing schemes they
//! correspond to.

pub mod ffmat;
pub mod graphs;
pub mod poly;
pub mod qss;
pub mod smatroid;
pub mod sympl;
pub mod text;
pub mod transform;
