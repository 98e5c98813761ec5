use std::fmt;

use crate::error::{Error, Result};
use crate::polygon::MAX_M;

/// A subset of the polygon vertices `1..=m`, stored as a bit vector
/// (vertex `i` lives in bit `i - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u32,
    m: u8,
}

impl VertexSet {
    pub fn empty(m: usize) -> Self {
        debug_assert!(m <= MAX_M);
        Self {
            bits: 0,
            m: m as u8,
        }
    }

    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_M);
        Self {
            bits: (1u32 << m) - 1,
            m: m as u8,
        }
    }

    pub fn from_bits(bits: u32, m: usize) -> Self {
        debug_assert!(m <= MAX_M && bits >> m == 0);
        Self { bits, m: m as u8 }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(m: usize, vertices: I) -> Result<Self> {
        if m > MAX_M {
            return Err(Error::PolygonSize(m));
        }
        let mut set = Self::empty(m);
        for v in vertices {
            if v == 0 || v > m {
                return Err(Error::VertexOutOfRange { vertex: v, m });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Parses `{2,4,7}` (or `{}`), 1-based.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidVertexSet(format!("expected braces around {t:?}")))?;
        let mut out = Vec::new();
        if !inner.trim().is_empty() {
            for (k, tok) in inner.split(',').enumerate() {
                let v: usize = tok.trim().parse().map_err(|_| {
                    Error::InvalidVertexSet(format!(
                        "entry {} ({:?}) is not an integer",
                        k + 1,
                        tok.trim()
                    ))
                })?;
                out.push(v);
            }
        }
        Self::from_vertices(m, out)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn ambient(self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= self.m as usize && self.bits & (1 << (v - 1)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v >= 1 && v <= self.m as usize);
        self.bits |= 1 << (v - 1);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1 << (v - 1));
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn union(self, other: Self) -> Self {
        Self {
            bits: self.bits | other.bits,
            m: self.m,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        Self {
            bits: self.bits & other.bits,
            m: self.m,
        }
    }

    pub fn difference(self, other: Self) -> Self {
        Self {
            bits: self.bits & !other.bits,
            m: self.m,
        }
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        Self {
            bits: self.bits ^ other.bits,
            m: self.m,
        }
    }

    pub fn complement(self) -> Self {
        Self::full(self.m as usize).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// No two circularly adjacent vertices both belong to the set.
    pub fn is_non_consecutive(self) -> bool {
        let m = self.m as u32;
        if m == 0 {
            return true;
        }
        let rotated = ((self.bits >> 1) | (self.bits << (m - 1))) & ((1u32 << m) - 1);
        self.bits & rotated == 0
    }

    /// All subsets of even cardinality, in increasing order of their bit pattern.
    pub fn even_subsets(self) -> impl Iterator<Item = Self> {
        let m = self.m;
        let full = self.bits;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || loop {
            if done {
                return None;
            }
            let current = sub;
            // Standard submask enumeration in increasing order.
            if current == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            if current.count_ones().is_multiple_of(2) {
                return Some(Self { bits: current, m });
            }
        })
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s = VertexSet::parse("{2, 4,7}", 7).unwrap();
        assert_eq!(s.to_string(), "{2,4,7}");
        assert_eq!(VertexSet::parse("{}", 5).unwrap(), VertexSet::empty(5));
        assert!(VertexSet::parse("{0}", 5).is_err());
        assert!(VertexSet::parse("{6}", 5).is_err());
        assert!(VertexSet::parse("2,4", 5).is_err());
        assert!(VertexSet::parse("{2,x}", 5).is_err());
    }

    #[test]
    fn non_consecutive_wraps() {
        assert!(VertexSet::from_vertices(6, [1, 3, 5])
            .unwrap()
            .is_non_consecutive());
        assert!(!VertexSet::from_vertices(6, [1, 6])
            .unwrap()
            .is_non_consecutive());
        assert!(!VertexSet::from_vertices(6, [3, 4])
            .unwrap()
            .is_non_consecutive());
        assert!(VertexSet::empty(4).is_non_consecutive());
    }

    #[test]
    fn even_subsets_count() {
        let s = VertexSet::from_vertices(9, [1, 3, 5, 7]).unwrap();
        let subs: Vec<_> = s.even_subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.len() % 2 == 0 && t.is_subset(s)));
        assert_eq!(subs[0], VertexSet::empty(9));
        assert_eq!(VertexSet::empty(3).even_subsets().count(), 1);
    }
}
