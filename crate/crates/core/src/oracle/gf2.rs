//! Linear algebra over the two-element field on bit-packed vectors.

/// An incrementally built basis in reduced form, keyed by leading bit.
#[derive(Clone, Default, Debug)]
pub struct XorBasis {
    rows: [u32; 32],
    len: usize,
}

impl XorBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, mut v: u32) -> bool {
        while v != 0 {
            let top = 31 - v.leading_zeros() as usize;
            if self.rows[top] == 0 {
                self.rows[top] = v;
                self.len += 1;
                return true;
            }
            v ^= self.rows[top];
        }
        false
    }
}

pub fn rank<I: IntoIterator<Item = u32>>(vectors: I) -> usize {
    let mut basis = XorBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.len()
}

pub fn independent<I: IntoIterator<Item = u32>>(vectors: I) -> bool {
    let mut basis = XorBasis::new();
    vectors.into_iter().all(|v| basis.insert(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank([0b01, 0b10, 0b11]), 2);
        assert_eq!(rank([0u32; 3]), 0);
        assert_eq!(rank([0b100, 0b010, 0b001]), 3);
        assert!(independent([0b110, 0b011]));
        assert!(!independent([0b110, 0b011, 0b101]));
        assert!(!independent([0]));
    }
}
