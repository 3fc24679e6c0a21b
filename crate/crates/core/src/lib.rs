//! Exact computations with ordinary and symbolic powers of the
//! Stanley-Reisner ideals `I_G` of graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`]: monomials and monomial ideals by minimal generators.
//! * [`simplicial`] and [`homology`]: simplicial complexes, `Δ(I)`,
//!   `Δ_a(I)` and exact reduced homology over a prime field.
//! * [`cohomology`]: graded local cohomology dimensions, depth and the
//!   Cohen-Macaulay test.
//! * [`graph`]: graphs, `I_G`, `I_G^(m)` and the combinatorial criteria.
//! * [`cover`]: `m`-covers and the ideal `I*(Δ)`.
//! * [`census`]: enumeration and algebraic-versus-combinatorial checks.
//!
//! ```
//! use cmpowers::graph::{symbolic_power, Graph};
//! use cmpowers::cohomology::is_cohen_macaulay;
//!
//! let c5 = Graph::cycle(5).unwrap();
//! assert!(is_cohen_macaulay(&symbolic_power(&c5, 2)).unwrap());
//! assert!(!is_cohen_macaulay(&symbolic_power(&c5, 3)).unwrap());
//! ```

pub mod census;
pub mod cohomology;
pub mod cover;
pub mod error;
pub mod graph;
pub mod homology;
pub mod monomial;
pub mod simplicial;

pub use error::{Error, Result};
pub use graph::Graph;
pub use monomial::{AmbientContext, Monomial, MonomialIdeal};
pub use simplicial::{DegreeVector, Face, SimplicialComplex};
