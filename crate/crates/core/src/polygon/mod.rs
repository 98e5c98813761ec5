//! D-J classes over a single polygon and the word calculus on them.

mod ops;
mod set;
mod word;

pub use ops::{arcs, bar, blow_up, delta, invert, invert_word, omega, pieces, Piece};
pub use set::VertexSet;
pub use word::{canonicalize, count_classes, enumerate_classes, DJClass, Letter, Word};

use crate::error::{Error, Result};

/// Largest polygon handled; vertex sets are single `u32` bit vectors.
pub const MAX_M: usize = 30;

pub(crate) fn check_m(m: usize) -> Result<()> {
    if (3..=MAX_M).contains(&m) {
        Ok(())
    } else {
        Err(Error::PolygonSize(m))
    }
}

pub(crate) fn check_vertex(p: usize, m: usize) -> Result<()> {
    if (1..=m).contains(&p) {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: p, m })
    }
}
