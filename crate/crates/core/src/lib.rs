//! Rooted densities, exponent certificates, induced Turán oracles and
//! embedding primitives for small bipartite patterns.
//!
//! The crate is organised bottom-up: [`graph`] holds the bitset graph type,
//! [`families`] builds the rooted trees, paths, theta graphs and powers,
//! [`density`] measures them, [`realizability`] turns a target exponent
//! `2 - a/b` into a checkable construction, [`oracles`] supplies exact
//! brute-force ground truth and [`embeddings`] runs the constructive
//! embedding procedures against it.

pub mod density;
pub mod descriptor;
pub mod embeddings;
pub mod error;
pub mod families;
pub mod fuzz;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod random;
pub mod rational;
pub mod realizability;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, Host, VertexMap};
pub use rational::Rational;
