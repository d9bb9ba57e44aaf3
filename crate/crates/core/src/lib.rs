//! Exact tools for matchings in uniform hypergraphs.
//!
//! The crate is `no_std` (it needs `alloc`). Vertices are 1-based everywhere
//! in the public surface: a k-graph on `n` vertices lives on `{1, ..., n}`.
//!
//! Layout:
//!
//! * [`graph`]: k-graphs, degrees, induced subgraphs, the dominance order.
//! * [`extremal`]: the threshold `f(n, m, k)`, the two extremal
//!   configurations and the closeness measure.
//! * [`family`] and [`shift`]: families of k-graphs, compression,
//!   saturation and full-degree peeling.
//! * [`matcher`]: exact maximum matching, rainbow matching search and the
//!   auxiliary (k+1)-graph reductions.
//! * [`fractional`]: exact rational fractional matchings.
//! * [`harness`]: randomized and exhaustive verification sweeps.
#![no_std]

extern crate alloc;

pub mod combin;
pub mod error;
pub mod extremal;
pub mod family;
pub mod fractional;
pub mod graph;
pub mod harness;
pub mod mask;
pub mod matcher;
pub mod shift;

pub use error::{Error, Result};
pub use family::Family;
pub use graph::{Edge, KGraph, Relabel, Vertex, VertexSet};
pub use matcher::{AuxGraph, AuxVertex, Matching, RainbowMatching};

/// Arbitrary-precision rational used wherever exact arithmetic is required.
pub type Rational = num_rational::BigRational;
