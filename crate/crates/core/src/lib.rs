pub mod classify;
pub mod distribution;
pub mod embedding;
pub mod equilibria;
pub mod error;
pub mod game;
pub mod graphs;
pub mod linalg;
pub mod nash;
pub mod oracle;
pub mod rational;
pub mod render;
pub mod symmetry;
