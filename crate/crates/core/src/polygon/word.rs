use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::{check_m, VertexSet};

/// A nonzero vector of the two-dimensional space over the two-element
/// field: `A = (1,0)`, `B = (0,1)`, `C = (1,1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
#[repr(u8)]
pub enum Letter {
    A = 0b01,
    B = 0b10,
    C = 0b11,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    fn from_bits(bits: u8) -> Letter {
        match bits {
            0b01 => Letter::A,
            0b10 => Letter::B,
            0b11 => Letter::C,
            _ => unreachable!("zero vector is not a letter"),
        }
    }

    /// Vector sum. Only defined for distinct letters, where it is the third one.
    pub fn sum(self, other: Letter) -> Letter {
        debug_assert_ne!(self, other);
        Letter::from_bits(self as u8 ^ other as u8)
    }

    /// The letter distinct from both arguments.
    pub fn third(self, other: Letter) -> Letter {
        self.sum(other)
    }

    pub fn index(self) -> usize {
        self as usize - 1
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }
}

/// A rank-two characteristic map over the m-gon written as a circular word:
/// letter `i` is the label of vertex `i + 1`, and circular neighbours differ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        check_m(letters.len())
            .map_err(|_| Error::InvalidWord(format!("length {} is out of range", letters.len())))?;
        let m = letters.len();
        for i in 0..m {
            if letters[i] == letters[(i + 1) % m] {
                return Err(Error::InvalidWord(format!(
                    "positions {} and {} both carry '{}'",
                    i + 1,
                    (i + 1) % m + 1,
                    letters[i].as_char()
                )));
            }
        }
        Ok(Self { letters })
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(Word::new(letters.clone()).is_ok());
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Letter at vertex `p` (1-based).
    pub fn at(&self, p: usize) -> Letter {
        self.letters[p - 1]
    }

    pub fn positions_of(&self, letter: Letter) -> VertexSet {
        let mut bits = 0u32;
        for (i, &l) in self.letters.iter().enumerate() {
            if l == letter {
                bits |= 1 << i;
            }
        }
        VertexSet::from_bits(bits, self.len())
    }

    /// Applies a letter permutation given as the image of each letter.
    pub fn relabel(&self, image: [Letter; 3]) -> Word {
        Word {
            letters: self.letters.iter().map(|l| image[l.index()]).collect(),
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch.to_ascii_lowercase() {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                'c' => Ok(Letter::C),
                other => Err(Error::InvalidWord(format!(
                    "unexpected character {other:?} at position {}",
                    i + 1
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A D-J class over the m-gon: a word in canonical form together with its
/// weak partition into letter blocks.
///
/// The canonical word is the lexicographically least of the six letter
/// permutations of any representative, so it starts with `a` and its
/// first letter other than `a` is `b`. Ordering and equality follow the
/// canonical word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DJClass {
    word: Word,
    blocks: [VertexSet; 3],
}

impl DJClass {
    pub fn m(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letter(&self, p: usize) -> Letter {
        self.word.at(p)
    }

    /// Blocks in letter order `[μ_a, μ_b, μ_c]`; `μ_c` may be empty.
    pub fn blocks(&self) -> &[VertexSet; 3] {
        &self.blocks
    }

    pub fn block(&self, letter: Letter) -> VertexSet {
        self.blocks[letter.index()]
    }

    /// The block containing `p`.
    pub fn support(&self, p: usize) -> VertexSet {
        self.block(self.letter(p))
    }

    pub fn equivalent(&self, p: usize, q: usize) -> bool {
        self.letter(p) == self.letter(q)
    }

    pub fn uses_all_letters(&self) -> bool {
        self.blocks.iter().all(|b| !b.is_empty())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(canonicalize(&text.parse()?))
    }
}

impl fmt::Display for DJClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word, f)
    }
}

impl fmt::Debug for DJClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DJClass({})", self.word)
    }
}

impl Serialize for DJClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.word)
    }
}

/// Maps a word to its D-J class. Relabels letters in order of first
/// appearance, which yields the lex-least permutation image.
pub fn canonicalize(word: &Word) -> DJClass {
    let mut image: [Option<Letter>; 3] = [None; 3];
    let mut next = 0usize;
    for &l in word.letters() {
        if image[l.index()].is_none() {
            image[l.index()] = Some(Letter::ALL[next]);
            next += 1;
        }
    }
    // A letter absent from the word goes to whatever is left over.
    for slot in image.iter_mut() {
        if slot.is_none() {
            *slot = Some(Letter::ALL[next]);
            next += 1;
        }
    }
    let word = word.relabel(image.map(Option::unwrap));
    let blocks = Letter::ALL.map(|l| word.positions_of(l));
    DJClass { word, blocks }
}

/// All D-J classes over the m-gon in lexicographic order of canonical words.
pub fn enumerate_classes(m: usize) -> Result<Vec<DJClass>> {
    check_m(m)?;
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(m);
    letters.push(Letter::A);
    letters.push(Letter::B);
    extend(&mut letters, m, &mut out);
    Ok(out)
}

fn extend(letters: &mut Vec<Letter>, m: usize, out: &mut Vec<DJClass>) {
    if letters.len() == m {
        if letters[m - 1] != letters[0] {
            out.push(canonicalize(&Word::new_unchecked(letters.clone())));
        }
        return;
    }
    let last = *letters.last().unwrap();
    for l in Letter::ALL {
        if l != last {
            letters.push(l);
            extend(letters, m, out);
            letters.pop();
        }
    }
}

/// Number of D-J classes over the m-gon, `(2^(m-1) - (-1)^(m-1)) / 3`.
/// Not limited by the vertex-set cap; any `3 <= m <= 128` is accepted.
pub fn count_classes(m: usize) -> Result<u128> {
    if !(3..=128).contains(&m) {
        return Err(Error::PolygonSize(m));
    }
    let pow = 1u128 << (m - 1);
    Ok(if (m - 1).is_multiple_of(2) {
        (pow - 1) / 3
    } else {
        (pow + 1) / 3
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonicalize(&w("bcba")).to_string(), "abac");
        assert_eq!(canonicalize(&w("abab")).to_string(), "abab");
        assert_eq!(
            canonicalize(&w("acbcacabacb")),
            canonicalize(&w("abcbabacabc"))
        );
        assert_eq!(canonicalize(&w("acbcacabacb")).to_string(), "abcbabacabc");
    }

    #[test]
    fn canonical_is_lex_least_of_permutations() {
        let perms = [
            [Letter::A, Letter::B, Letter::C],
            [Letter::A, Letter::C, Letter::B],
            [Letter::B, Letter::A, Letter::C],
            [Letter::B, Letter::C, Letter::A],
            [Letter::C, Letter::A, Letter::B],
            [Letter::C, Letter::B, Letter::A],
        ];
        for s in ["abcbacb", "cbcb", "bcacac", "cacbcbab"] {
            let word = w(s);
            let least = perms.iter().map(|p| word.relabel(*p)).min().unwrap();
            assert_eq!(canonicalize(&word).word(), &least, "{s}");
        }
    }

    #[test]
    fn rejects_bad_words() {
        assert!("abca".parse::<Word>().is_err());
        assert!("ab".parse::<Word>().is_err());
        assert!("abx".parse::<Word>().is_err());
        let err = "abcc".parse::<Word>().unwrap_err().to_string();
        assert!(err.contains("positions 3 and 4"), "{err}");
    }

    #[test]
    fn small_enumerations() {
        let words: Vec<_> = enumerate_classes(3)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(words, ["abc"]);
        let words: Vec<_> = enumerate_classes(4)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(words, ["abab", "abac", "abcb"]);
        assert_eq!(enumerate_classes(6).unwrap().len(), 11);
        assert!(enumerate_classes(2).is_err());
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_classes(3).unwrap(), 1);
        assert_eq!(count_classes(4).unwrap(), 3);
        assert_eq!(count_classes(5).unwrap(), 5);
        assert_eq!(count_classes(6).unwrap(), 11);
        assert!(count_classes(2).is_err());
        for m in 5..=128 {
            let t = |k| count_classes(k).unwrap();
            assert_eq!(t(m), t(m - 1) + 2 * t(m - 2));
        }
    }

    #[test]
    fn blocks_partition() {
        let c = DJClass::parse("abcbacb").unwrap();
        assert_eq!(c.support(4).to_string(), "{2,4,7}");
        assert_eq!(c.block(Letter::A).to_string(), "{1,5}");
        assert_eq!(c.block(Letter::C).to_string(), "{3,6}");
        let c = DJClass::parse("ababab").unwrap();
        assert!(c.block(Letter::C).is_empty());
        assert_eq!(c.support(3).to_string(), "{1,3,5}");
    }
}
