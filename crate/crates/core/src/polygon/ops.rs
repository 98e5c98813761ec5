use std::fmt;

use crate::error::{Error, Result};
use crate::polygon::{canonicalize, check_vertex, DJClass, Letter, VertexSet, Word};

/// A maximal run of the word strictly between two consecutive members of a
/// delimiting vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// The gaps of `[m] \ S` between circularly consecutive members of `S`,
/// starting with the gap right after `min(S)`. Gaps may be empty when `S`
/// contains adjacent vertices. Empty `S` yields no gaps.
pub fn arcs(set: VertexSet) -> Vec<VertexSet> {
    let m = set.ambient();
    let members: Vec<usize> = set.iter().collect();
    let k = members.len();
    (0..k)
        .map(|i| {
            let from = members[i];
            let to = members[(i + 1) % k];
            let mut gap = VertexSet::empty(m);
            let mut v = from % m + 1;
            while v != to {
                gap.insert(v);
                v = v % m + 1;
            }
            gap
        })
        .collect()
}

fn gap_index(gaps: &[VertexSet], r: usize) -> Option<usize> {
    gaps.iter().position(|g| g.contains(r))
}

pub fn pieces(word: &Word, set: VertexSet) -> Result<Vec<Piece>> {
    if set.ambient() != word.len() {
        return Err(Error::LengthMismatch {
            left: word.len(),
            right: set.ambient(),
        });
    }
    if set.len() < 2 {
        return Err(Error::Precondition(format!(
            "pieces need |S| >= 2, got {set}"
        )));
    }
    if !set.is_non_consecutive() {
        return Err(Error::Precondition(format!(
            "{set} contains adjacent vertices"
        )));
    }
    let m = word.len();
    Ok(set
        .iter()
        .zip(arcs(set))
        .map(|(s, gap)| Piece {
            start: s % m + 1,
            letters: gap_in_order(s, gap).map(|v| word.at(v)).collect(),
        })
        .collect())
}

// Vertices of the gap following `s`, in circular reading order.
fn gap_in_order(s: usize, gap: VertexSet) -> impl Iterator<Item = usize> {
    let m = gap.ambient();
    (1..=gap.len()).map(move |k| (s + k - 1) % m + 1)
}

fn check_inversion_set(word: &Word, set: VertexSet) -> Result<Letter> {
    if set.ambient() != word.len() {
        return Err(Error::LengthMismatch {
            left: word.len(),
            right: set.ambient(),
        });
    }
    if !set.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "inversion set {set} has odd size"
        )));
    }
    let first = set.min().expect("nonempty");
    let letter = word.at(first);
    if set.iter().any(|s| word.at(s) != letter) {
        return Err(Error::Precondition(format!(
            "inversion set {set} spans more than one block of {word}"
        )));
    }
    Ok(letter)
}

/// Inversion on a representative word: in every gap of the chessboard
/// colouring that is "black", swap the two letters other than the block
/// letter of `set`.
///
/// With `white = Some(r)` the gap containing `r` is white, so the letter at
/// `r` is kept. Otherwise the gap right after `min(set)` is black.
pub fn invert_word(word: &Word, set: VertexSet, white: Option<usize>) -> Result<Word> {
    if set.is_empty() {
        return Ok(word.clone());
    }
    let block = check_inversion_set(word, set)?;
    let gaps = arcs(set);
    let black_parity = match white {
        None => 0,
        Some(r) => {
            check_vertex(r, word.len())?;
            let idx = gap_index(&gaps, r).ok_or_else(|| {
                Error::Precondition(format!("anchor {r} lies in the inversion set {set}"))
            })?;
            1 - idx % 2
        }
    };
    let (x, y) = match block {
        Letter::A => (Letter::B, Letter::C),
        Letter::B => (Letter::A, Letter::C),
        Letter::C => (Letter::A, Letter::B),
    };
    let mut letters = word.letters().to_vec();
    for (k, gap) in gaps.iter().enumerate() {
        if k % 2 != black_parity {
            continue;
        }
        for v in gap.iter() {
            let l = &mut letters[v - 1];
            if *l == x {
                *l = y;
            } else if *l == y {
                *l = x;
            }
        }
    }
    Ok(Word::new_unchecked(letters))
}

/// The class-level inversion `inv_S`.
pub fn invert(class: &DJClass, set: VertexSet) -> Result<DJClass> {
    if set.is_empty() {
        return Ok(class.clone());
    }
    Ok(canonicalize(&invert_word(class.word(), set, None)?))
}

/// `S` together with the gaps coloured opposite to the gap containing `r`.
pub fn omega(set: VertexSet, r: usize) -> Result<VertexSet> {
    let m = set.ambient();
    check_vertex(r, m)?;
    if set.is_empty() || !set.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "omega needs a nonempty even set, got {set}"
        )));
    }
    if !set.is_non_consecutive() {
        return Err(Error::Precondition(format!(
            "{set} contains adjacent vertices"
        )));
    }
    let gaps = arcs(set);
    let idx = gap_index(&gaps, r)
        .ok_or_else(|| Error::Precondition(format!("vertex {r} lies in {set}")))?;
    Ok(gaps
        .iter()
        .enumerate()
        .filter(|(k, _)| k % 2 != idx % 2)
        .fold(set, |acc, (_, g)| acc.union(*g)))
}

/// Positions where two representative words disagree.
pub fn delta(left: &Word, right: &Word) -> Result<VertexSet> {
    if left.len() != right.len() {
        return Err(Error::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let mut out = VertexSet::empty(left.len());
    for (i, (a, b)) in left.letters().iter().zip(right.letters()).enumerate() {
        if a != b {
            out.insert(i + 1);
        }
    }
    Ok(out)
}

/// Circular closure under taking neighbours.
pub fn bar(set: VertexSet) -> VertexSet {
    let m = set.ambient();
    let mut out = set;
    for v in set.iter() {
        out.insert(v % m + 1);
        out.insert(if v == 1 { m } else { v - 1 });
    }
    out
}

/// Inserts the sum of the labels at `i` and `i + 1` between them (for
/// `i = m` the new letter is appended, between `m` and `1`).
pub fn blow_up(word: &Word, i: usize) -> Result<Word> {
    let m = word.len();
    check_vertex(i, m)?;
    let left = word.at(i);
    let right = word.at(i % m + 1);
    let mut letters = word.letters().to_vec();
    letters.insert(i, left.sum(right));
    Word::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn vs(m: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(m, v.iter().copied()).unwrap()
    }

    fn piece_strings(word: &str, m: usize, set: &[usize]) -> Vec<String> {
        pieces(&w(word), vs(m, set))
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn pieces_examples() {
        assert_eq!(
            piece_strings("abcabababab", 11, &[1, 4, 6, 8, 10]),
            ["bc", "b", "b", "b", "b"]
        );
        assert_eq!(piece_strings("abab", 4, &[1, 3]), ["b", "b"]);
        assert_eq!(piece_strings("abcbacb", 7, &[2, 4, 7]), ["c", "ac", "a"]);
        let p = pieces(&w("abcbacb"), vs(7, &[2, 4, 7])).unwrap();
        assert_eq!(p.iter().map(|p| p.start).collect::<Vec<_>>(), [3, 5, 1]);
    }

    #[test]
    fn pieces_preconditions() {
        assert!(pieces(&w("abab"), vs(4, &[1])).is_err());
        assert!(pieces(&w("abcabc"), vs(6, &[1, 2])).is_err());
    }

    #[test]
    fn invert_examples() {
        let c = DJClass::parse("abcabababab").unwrap();
        let out = invert(&c, vs(11, &[1, 4, 8, 10])).unwrap();
        assert_eq!(out.to_string(), "abcacacabac");
        assert_eq!(invert(&c, VertexSet::empty(11)).unwrap(), c);
        let c = DJClass::parse("abab").unwrap();
        assert_eq!(invert(&c, vs(4, &[1, 3])).unwrap().to_string(), "abac");
    }

    #[test]
    fn invert_rejects_bad_sets() {
        let c = DJClass::parse("ababab").unwrap();
        assert!(invert(&c, vs(6, &[1, 3, 5])).is_err());
        assert!(invert(&c, vs(6, &[1, 2])).is_err());
    }

    #[test]
    fn invert_word_respects_anchor() {
        let word = w("ababcbabcb");
        let out = invert_word(&word, vs(10, &[3, 7]), Some(2)).unwrap();
        assert_eq!(out.to_string(), "abacbcabcb");
        let out = invert_word(&word, vs(10, &[3, 7]), Some(5)).unwrap();
        assert_eq!(out.at(5), word.at(5));
        assert!(invert_word(&word, vs(10, &[3, 7]), Some(3)).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(vs(10, &[3, 7]), 2).unwrap(), vs(10, &[3, 4, 5, 6, 7]));
        assert_eq!(omega(vs(10, &[8, 10]), 1).unwrap(), vs(10, &[8, 9, 10]));
        assert_eq!(omega(vs(6, &[1, 3]), 5).unwrap(), vs(6, &[1, 2, 3]));
        assert!(omega(vs(6, &[1, 3]), 3).is_err());
        assert!(omega(VertexSet::empty(6), 3).is_err());
        assert!(omega(vs(6, &[1, 3, 5]), 2).is_err());
    }

    #[test]
    fn delta_and_bar() {
        let l1 = w("ababcbabcb");
        assert_eq!(delta(&l1, &w("abacbcabcb")).unwrap(), vs(10, &[4, 5, 6]));
        assert_eq!(delta(&l1, &l1).unwrap(), VertexSet::empty(10));
        assert_eq!(delta(&l1, &w("ababcbabab")).unwrap(), vs(10, &[9]));
        assert!(delta(&l1, &w("abc")).is_err());
        assert_eq!(bar(vs(10, &[4, 5, 6])), vs(10, &[3, 4, 5, 6, 7]));
        assert_eq!(bar(VertexSet::empty(10)), VertexSet::empty(10));
        assert_eq!(bar(vs(10, &[9])), vs(10, &[8, 9, 10]));
        assert_eq!(bar(vs(10, &[10])), vs(10, &[1, 9, 10]));
    }

    #[test]
    fn blow_up_examples() {
        assert_eq!(blow_up(&w("abc"), 2).unwrap().to_string(), "abac");
        assert_eq!(blow_up(&w("abc"), 3).unwrap().to_string(), "abcb");
        assert_eq!(blow_up(&w("abab"), 1).unwrap().to_string(), "acbab");
        assert!(blow_up(&w("abc"), 4).is_err());
    }
}
