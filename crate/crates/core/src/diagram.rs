//! Edges and squares of the diagram of a polygon, described through e-sets.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::{
    arcs, bar, check_vertex, delta, invert, invert_word, omega, DJClass, VertexSet, Word,
};

/// An edge of the diagram anchored at a node: the colour `base` and an even
/// set `set` with `inv_set(λ)` the other endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ESet {
    pub base: usize,
    pub set: VertexSet,
}

impl ESet {
    pub fn new(base: usize, set: VertexSet) -> Result<Self> {
        check_vertex(base, set.ambient())?;
        if !set.len().is_multiple_of(2) {
            return Err(Error::InvalidESet(format!(
                "{base}:{set} has a set of odd size"
            )));
        }
        Ok(Self { base, set })
    }

    pub fn empty(base: usize, m: usize) -> Self {
        Self {
            base,
            set: VertexSet::empty(m),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Parses `p:{s1,s2,...}`.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let (base, set) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::InvalidESet(format!("expected p:{{...}}, got {text:?}")))?;
        let base: usize = base
            .trim()
            .parse()
            .map_err(|_| Error::InvalidESet(format!("base {:?} is not an integer", base.trim())))?;
        let set = VertexSet::parse(set, m).map_err(|e| Error::InvalidESet(e.to_string()))?;
        Self::new(base, set)
    }
}

impl fmt::Display for ESet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.base, self.set)
    }
}

impl fmt::Debug for ESet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ESet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relatedness {
    Type1,
    Type2,
    Unrelated,
}

impl Relatedness {
    pub fn is_related(self) -> bool {
        self != Relatedness::Unrelated
    }
}

impl fmt::Display for Relatedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relatedness::Type1 => "type1",
            Relatedness::Type2 => "type2",
            Relatedness::Unrelated => "unrelated",
        })
    }
}

/// `{base} ∪ set` lies in one block of `class` and `set` has even size.
pub fn is_compatible(class: &DJClass, e: &ESet) -> bool {
    e.set.ambient() == class.m()
        && (1..=class.m()).contains(&e.base)
        && e.set.len().is_multiple_of(2)
        && e.set.is_subset(class.support(e.base))
}

fn require_compatible(class: &DJClass, e: &ESet) -> Result<()> {
    if is_compatible(class, e) {
        Ok(())
    } else {
        Err(Error::Incompatible {
            eset: e.to_string(),
            class: class.to_string(),
        })
    }
}

/// Every edge of colour `p` at `class`, one per even subset of the support
/// of `p`, starting with the trivial edge.
pub fn adjacent_classes(class: &DJClass, p: usize) -> Result<Vec<(ESet, DJClass)>> {
    check_vertex(p, class.m())?;
    let mut out: Vec<(ESet, DJClass)> = Vec::new();
    for set in class.support(p).even_subsets() {
        let other = invert(class, set)?;
        if out.iter().all(|(_, c)| *c != other) {
            out.push((ESet { base: p, set }, other));
        }
    }
    Ok(out)
}

/// The e-set of the edge `{from, to}` of colour `p`, seen from `from`.
pub fn eset_of_edge(from: &DJClass, to: &DJClass, p: usize) -> Result<ESet> {
    check_vertex(p, from.m())?;
    if from.m() != to.m() {
        return Err(Error::LengthMismatch {
            left: from.m(),
            right: to.m(),
        });
    }
    let not_adjacent = || Error::NotAdjacent(from.to_string(), to.to_string(), p);
    if from.support(p) != to.support(p) {
        return Err(not_adjacent());
    }
    for set in from.support(p).even_subsets() {
        if invert(from, set)? == *to {
            return Ok(ESet { base: p, set });
        }
    }
    Err(not_adjacent())
}

pub fn relatedness(class: &DJClass, e1: &ESet, e2: &ESet) -> Result<Relatedness> {
    require_compatible(class, e1)?;
    require_compatible(class, e2)?;
    if e1.base == e2.base || e1.is_empty() || e2.is_empty() || class.equivalent(e1.base, e2.base) {
        return Ok(Relatedness::Type1);
    }
    let left = omega(e1.set, e2.base)?;
    let right = omega(e2.set, e1.base)?;
    Ok(if left.is_disjoint(right) {
        Relatedness::Type2
    } else {
        Relatedness::Unrelated
    })
}

/// The node opposite `class` in the square spanned by two related edges.
pub fn fourth_node(class: &DJClass, e1: &ESet, e2: &ESet) -> Result<DJClass> {
    if !relatedness(class, e1, e2)?.is_related() {
        return Err(Error::Unrelated(e1.to_string(), e2.to_string()));
    }
    invert(&invert(class, e1.set)?, e2.set)
}

/// Outcome of the representative-level square test on a triple of words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SquareConditions {
    /// `bar(Δ12) ∩ Δ13 = ∅`
    pub closure_meets_delta: bool,
    /// `bar(Δ12) ∩ bar(Δ13) = ∅`
    pub closures_disjoint: bool,
}

/// Builds the two neighbours of `word` that keep the letters at both bases
/// and evaluates the disjointness conditions on their difference sets.
pub fn square_conditions(word: &Word, e1: &ESet, e2: &ESet) -> Result<SquareConditions> {
    let m = word.len();
    for e in [e1, e2] {
        check_vertex(e.base, m)?;
        if e.set.ambient() != m {
            return Err(Error::LengthMismatch {
                left: m,
                right: e.set.ambient(),
            });
        }
        if e.set.is_empty() || e.set.iter().any(|s| word.at(s) != word.at(e.base)) {
            return Err(Error::Precondition(format!(
                "{e} must be a nonempty e-set within one block of {word}"
            )));
        }
    }
    if word.at(e1.base) == word.at(e2.base) {
        return Err(Error::Precondition(format!(
            "bases {} and {} lie in the same block",
            e1.base, e2.base
        )));
    }
    let second = invert_word(word, e1.set, Some(e2.base))?;
    let third = invert_word(word, e2.set, Some(e1.base))?;
    let d12 = delta(word, &second)?;
    let d13 = delta(word, &third)?;
    Ok(SquareConditions {
        closure_meets_delta: bar(d12).is_disjoint(d13),
        closures_disjoint: bar(d12).is_disjoint(bar(d13)),
    })
}

/// Representative-level realizability check for squares whose bases lie in
/// different blocks; agrees with `relatedness == Type2`.
pub fn type2_cross_check(word: &Word, e1: &ESet, e2: &ESet) -> Result<bool> {
    let c = square_conditions(word, e1, e2)?;
    Ok(c.closure_meets_delta && c.closures_disjoint)
}

/// Whether the small cover of `class` is a real toric manifold: all three
/// letters occur, or the class is `abab`.
pub fn is_real_toric_class(class: &DJClass) -> bool {
    class.uses_all_letters() || class.m() == 4
}

// Each gap cut out by the pair either misses `letter`'s block or meets all
// three blocks.
fn pair_arc_condition(class: &DJClass, pair: VertexSet, block: VertexSet) -> bool {
    arcs(pair)
        .into_iter()
        .all(|gap| gap.is_disjoint(block) || class.blocks().iter().all(|b| !gap.is_disjoint(*b)))
}

pub fn is_real_toric_edge(class: &DJClass, e: &ESet) -> Result<bool> {
    require_compatible(class, e)?;
    if e.is_empty() {
        return Ok(true);
    }
    if e.set.len() != 2 || !e.set.contains(e.base) {
        return Ok(false);
    }
    Ok(pair_arc_condition(class, e.set, class.support(e.base)))
}

/// Property RT for two distinct equivalent vertices.
pub fn rt_property(class: &DJClass, p: usize, q: usize) -> Result<bool> {
    check_vertex(p, class.m())?;
    check_vertex(q, class.m())?;
    if p == q || !class.equivalent(p, q) {
        return Err(Error::Precondition(format!(
            "{p} and {q} must be distinct and equivalent in {class}"
        )));
    }
    let pair = VertexSet::from_vertices(class.m(), [p, q])?;
    Ok(pair_arc_condition(class, pair, class.support(p)))
}
