//! Realizable puzzles over the 1-skeleton of a product of simplices.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::census::{ESeq, JTuple};
use crate::diagram::{is_compatible, relatedness, ESet};
use crate::error::{Error, Result};
use crate::polygon::{invert, DJClass, VertexSet};

/// Largest grid `reconstruct_puzzle` will materialise.
pub const MAX_PUZZLE_NODES: u64 = 100_000;

/// A class for every node `α ∈ I(J)`, `1 ≤ α_p ≤ j_p`. Nodes are stored in
/// lexicographic order of `α`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PuzzleGrid {
    j: JTuple,
    nodes: Vec<DJClass>,
}

impl PuzzleGrid {
    pub fn j(&self) -> &JTuple {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The class at `alpha` (1-based coordinates), if in range.
    pub fn get(&self, alpha: &[u32]) -> Option<&DJClass> {
        index_of(&self.j, alpha).map(|i| &self.nodes[i])
    }

    /// `(α, class)` pairs in lexicographic order of `α`.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<u32>, &DJClass)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, c)| (alpha_of(&self.j, i), c))
    }
}

impl Serialize for PuzzleGrid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Node<'a> {
            alpha: Vec<u32>,
            class: &'a DJClass,
        }
        let nodes: Vec<Node> = self
            .iter()
            .map(|(alpha, class)| Node { alpha, class })
            .collect();
        let mut s = serializer.serialize_struct("PuzzleGrid", 2)?;
        s.serialize_field("j", &self.j)?;
        s.serialize_field("nodes", &nodes)?;
        s.end()
    }
}

fn index_of(j: &JTuple, alpha: &[u32]) -> Option<usize> {
    if alpha.len() != j.m() {
        return None;
    }
    let mut idx = 0usize;
    for (&a, &size) in alpha.iter().zip(j.entries()) {
        if a == 0 || a > size {
            return None;
        }
        idx = idx * size as usize + (a - 1) as usize;
    }
    Some(idx)
}

fn alpha_of(j: &JTuple, mut idx: usize) -> Vec<u32> {
    let mut alpha = vec![0u32; j.m()];
    for (slot, &size) in alpha.iter_mut().zip(j.entries()).rev() {
        *slot = (idx % size as usize) as u32 + 1;
        idx /= size as usize;
    }
    alpha
}

fn fmt_alpha(alpha: &[u32]) -> String {
    let parts: Vec<String> = alpha.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

/// `sets[p][a - 1]`: the set attached to copy `a` of vertex `p`, empty for
/// the first copy.
fn copy_sets(seq: &ESeq, j: &JTuple) -> Vec<Vec<VertexSet>> {
    let m = j.m();
    let mut sets = vec![Vec::new(); m + 1];
    let mut entries = seq.entries().iter();
    for p in 1..=m {
        sets[p].push(VertexSet::empty(m));
        for _ in 1..j.get(p) {
            sets[p].push(entries.next().expect("slot structure checked").set);
        }
    }
    sets
}

/// Builds the puzzle of `(class, seq)` by chained inversions from the node
/// `(1, ..., 1)`, then checks every edge and every square of the grid.
pub fn reconstruct_puzzle(class: &DJClass, seq: &ESeq, j: &JTuple) -> Result<PuzzleGrid> {
    if class.m() != j.m() {
        return Err(Error::LengthMismatch {
            left: class.m(),
            right: j.m(),
        });
    }
    let seq = ESeq::new(seq.entries().to_vec(), j)?;
    let total = j.node_count();
    if total > MAX_PUZZLE_NODES {
        return Err(Error::Guard {
            estimate: total.to_string(),
            limit: MAX_PUZZLE_NODES.to_string(),
        });
    }
    let m = j.m();
    let sets = copy_sets(&seq, j);
    let mut nodes = Vec::with_capacity(total as usize);
    for idx in 0..total as usize {
        let alpha = alpha_of(j, idx);
        let mut current = class.clone();
        for p in 1..=m {
            let set = sets[p][alpha[p - 1] as usize - 1];
            current = invert(&current, set).map_err(|e| {
                Error::PuzzleViolation(format!(
                    "node {}: inversion by {p}:{set} fails: {e}",
                    fmt_alpha(&alpha)
                ))
            })?;
        }
        nodes.push(current);
    }
    let grid = PuzzleGrid {
        j: j.clone(),
        nodes,
    };
    check_grid(&grid, &sets)?;
    Ok(grid)
}

fn step(alpha: &[u32], p: usize, value: u32) -> Vec<u32> {
    let mut out = alpha.to_vec();
    out[p - 1] = value;
    out
}

fn edge_eset(sets: &[Vec<VertexSet>], p: usize, from: u32, to: u32) -> ESet {
    let a = sets[p][from as usize - 1];
    let b = sets[p][to as usize - 1];
    ESet {
        base: p,
        set: a.symmetric_difference(b),
    }
}

fn check_grid(grid: &PuzzleGrid, sets: &[Vec<VertexSet>]) -> Result<()> {
    let j = &grid.j;
    let m = j.m();
    for (alpha, here) in grid.iter() {
        for p in 1..=m {
            for b in 1..=j.get(p) {
                if b == alpha[p - 1] {
                    continue;
                }
                let there_alpha = step(&alpha, p, b);
                let there = grid.get(&there_alpha).expect("in range");
                let e = edge_eset(sets, p, alpha[p - 1], b);
                let edge = || format!("edge {} -> {}", fmt_alpha(&alpha), fmt_alpha(&there_alpha));
                if !is_compatible(here, &e) {
                    return Err(Error::PuzzleViolation(format!(
                        "{}: {e} is not compatible with {here}",
                        edge()
                    )));
                }
                if here.support(p) != there.support(p) {
                    return Err(Error::PuzzleViolation(format!(
                        "{}: supports at {p} differ ({here} vs {there})",
                        edge()
                    )));
                }
                if invert(here, e.set)? != *there {
                    return Err(Error::PuzzleViolation(format!(
                        "{}: inverting {here} by {e} does not give {there}",
                        edge()
                    )));
                }
            }
        }
        for p in 1..=m {
            for q in p + 1..=m {
                for b in (1..=j.get(p)).filter(|&b| b != alpha[p - 1]) {
                    for d in (1..=j.get(q)).filter(|&d| d != alpha[q - 1]) {
                        let e1 = edge_eset(sets, p, alpha[p - 1], b);
                        let e2 = edge_eset(sets, q, alpha[q - 1], d);
                        let far_alpha = step(&step(&alpha, p, b), q, d);
                        let far = grid.get(&far_alpha).expect("in range");
                        let square =
                            || format!("square at {} along {e1} and {e2}", fmt_alpha(&alpha));
                        if !relatedness(here, &e1, &e2)?.is_related() {
                            return Err(Error::PuzzleViolation(format!(
                                "{}: e-sets are unrelated for {here}",
                                square()
                            )));
                        }
                        // The edge checks above already give inv_{e1} here = mid.
                        let mid = grid.get(&step(&alpha, p, b)).expect("in range");
                        let closed = invert(mid, e2.set)?;
                        if closed != *far {
                            return Err(Error::PuzzleViolation(format!(
                                "{}: fourth node {closed} but the grid has {far}",
                                square()
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
