use std::fmt;

use crate::census::JTuple;
use crate::error::{Error, Result};
use crate::polygon::check_m;

/// Largest vertex count the oracle will build a complex for.
pub const MAX_VERTICES: usize = 24;

/// A vertex `p_α` of the wedged complex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CopyLabel {
    pub vertex: usize,
    pub copy: u32,
}

impl fmt::Display for CopyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.vertex, self.copy)
    }
}

/// The simplicial wedge `K(J)` over the boundary of the `m`-gon. Vertex
/// subsets are bit masks over `labels`, which are ordered by vertex then
/// copy.
#[derive(Clone, Debug)]
pub struct WedgeComplex {
    j: JTuple,
    labels: Vec<CopyLabel>,
    groups: Vec<u32>,
    minimal_nonfaces: Vec<u32>,
    facets: Vec<u32>,
}

impl WedgeComplex {
    pub fn m(&self) -> usize {
        self.j.m()
    }

    pub fn j(&self) -> &JTuple {
        &self.j
    }

    pub fn labels(&self) -> &[CopyLabel] {
        &self.labels
    }

    /// Number of vertices `N`.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Dimension of the characteristic vectors, `n = N - m + 2`.
    pub fn rank(&self) -> usize {
        self.labels.len() + 2 - self.m()
    }

    /// Mask of all copies of polygon vertex `p`.
    pub fn group(&self, p: usize) -> u32 {
        self.groups[p - 1]
    }

    pub fn minimal_nonfaces(&self) -> &[u32] {
        &self.minimal_nonfaces
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn index_of(&self, label: CopyLabel) -> Option<usize> {
        self.labels.iter().position(|l| *l == label)
    }

    pub fn is_face(&self, mask: u32) -> bool {
        self.minimal_nonfaces.iter().all(|&nf| mask & nf != nf)
    }

    /// Facets found by testing every vertex subset for maximality. Only
    /// feasible for small `N`.
    pub fn facets_by_maximality(&self) -> Vec<u32> {
        let n = self.vertex_count();
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut out: Vec<u32> = (0..=all)
            .filter(|&mask| {
                self.is_face(mask)
                    && (0..n).all(|v| mask & (1 << v) != 0 || !self.is_face(mask | (1 << v)))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn format_mask(&self, mask: u32) -> String {
        let parts: Vec<String> = (0..self.vertex_count())
            .filter(|&v| mask & (1 << v) != 0)
            .map(|v| self.labels[v].to_string())
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Builds `K(J)`: minimal non-faces are the copy-expansions of those of the
/// polygon, facets are all copies of an edge `{p, p+1}` plus all but one copy
/// of every other vertex.
pub fn build_complex(m: usize, j: &JTuple) -> Result<WedgeComplex> {
    check_m(m)?;
    if j.m() != m {
        return Err(Error::LengthMismatch {
            left: m,
            right: j.m(),
        });
    }
    let total = j.vertex_count();
    if total > MAX_VERTICES {
        return Err(Error::Guard {
            estimate: format!("N = {total}"),
            limit: format!("N = {MAX_VERTICES}"),
        });
    }
    let labels: Vec<CopyLabel> = (1..=m)
        .flat_map(|vertex| (1..=j.get(vertex)).map(move |copy| CopyLabel { vertex, copy }))
        .collect();
    let mut groups = vec![0u32; m];
    for (i, l) in labels.iter().enumerate() {
        groups[l.vertex - 1] |= 1 << i;
    }
    let minimal_nonfaces = if m == 3 {
        vec![groups.iter().fold(0, |a, g| a | g)]
    } else {
        let mut out = Vec::new();
        for p in 1..=m {
            for q in p + 2..=m {
                if !(p == 1 && q == m) {
                    out.push(groups[p - 1] | groups[q - 1]);
                }
            }
        }
        out
    };
    let mut facets = Vec::new();
    for p in 1..=m {
        let q = p % m + 1;
        let edge = groups[p - 1] | groups[q - 1];
        let mut partial = vec![edge];
        for r in (1..=m).filter(|&r| r != p && r != q) {
            let group = groups[r - 1];
            partial = partial
                .into_iter()
                .flat_map(|mask| bits(group).map(move |omit| mask | (group & !(1 << omit))))
                .collect();
        }
        facets.extend(partial);
    }
    facets.sort_unstable();
    let complex = WedgeComplex {
        j: j.clone(),
        labels,
        groups,
        minimal_nonfaces,
        facets,
    };
    let n = complex.rank();
    assert!(complex.facets.iter().all(|f| f.count_ones() as usize == n));
    assert!(complex.facets.windows(2).all(|w| w[0] != w[1]));
    Ok(complex)
}

fn bits(mask: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |b| mask & (1 << b) != 0)
}
