//! Boolean function complexity toolkit.
//!
//! Truth-table representations of Boolean functions, exact complexity
//! measures (sensitivity, block sensitivity, certificate, decision tree,
//! degree, approximate degree), Fourier analysis on the cube, named
//! extremal function families, induced subgraphs of the hypercube, signed
//! adjacency matrices with eigenvalue interlacing, and verification
//! campaigns tying the pieces together.
//!
//! The index convention used everywhere: a point `x = (x_1, ..., x_n)` is
//! stored as the integer whose bit `i-1` is `x_i` (so `x_1` is the
//! least-significant bit). Subsets of `[n]` are bitmasks under the same
//! convention.

pub mod constructions;
pub mod function;
pub mod hypercube;
pub mod measures;
pub mod parser;
pub mod poly;
pub mod spectral;
pub mod verifier;

mod error;

pub use error::Error;
pub use function::{Assignment, BooleanFunction, MAX_VARS};
pub use poly::{MultilinearPoly, Univariate};

pub type Result<T> = std::result::Result<T, Error>;
