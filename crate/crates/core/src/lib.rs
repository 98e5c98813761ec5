//! Exact classification and counting of small covers and real toric
//! manifolds over wedged polygons `P_m(J)`.
//!
//! The [`polygon`] module holds D-J classes over a polygon and the word
//! calculus on them, [`diagram`] the edges and squares of the diagram,
//! [`census`] the counts over wedges, and [`oracle`] an independent
//! brute-force enumeration of characteristic matrices.

pub mod census;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod polygon;

pub use census::{BigCount, ESeq, JTuple, PuzzleGrid};
pub use diagram::{ESet, Relatedness};
pub use error::{Error, Result};
pub use polygon::{DJClass, Letter, VertexSet, Word};
