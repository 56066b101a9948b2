//! Daisy cubes and the polynomials that count their induced subcubes.
//!
//! A daisy cube `Q_n(X)` is the subgraph of the hypercube `Q_n` induced by
//! every word lying below some word of a generator set `X`. This crate
//! builds daisy cubes and the usual named families (hypercubes, Fibonacci
//! and Lucas cubes, bipartite wheels, vertex-deleted cubes), enumerates
//! their induced subcubes, computes cube, distance cube and distance-weight
//! polynomials exactly, and checks the identities relating them.

pub mod bitword;
pub mod census;
pub mod error;
pub mod family;
pub mod gf;
pub mod io;
pub mod poly;
pub mod verify;

pub use bitword::Word;
pub use census::{census_daisy_fast, census_oracle, CubeCensus, CubeHandle, Engine};
pub use error::{Error, Result};
pub use family::{DaisyCube, GeneratorSet, NamedFamily, VertexSet};
pub use poly::{BiPoly, RationalSeries, UniPoly};
