use std::collections::BTreeSet;

use crate::census::{BigCount, ESeq, JTuple};
use crate::diagram::{relatedness, rt_property, ESet, Relatedness};
use crate::error::{Error, Result};
use crate::polygon::{DJClass, VertexSet};

/// Which pairs of e-sets may appear together in a sequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// Any related pair; sequences form `E(λ, J)`.
    Related,
    /// Type 1 pairs only; sequences form `Ẽ(λ, J)`.
    Type1,
}

/// Compatible e-sets of a class grouped by base, with the pairwise relation
/// precomputed as bit rows.
struct Candidates {
    esets: Vec<ESet>,
    by_base: Vec<Vec<usize>>,
    rows: Vec<Vec<u64>>,
}

impl Candidates {
    fn new(class: &DJClass, relation: Relation) -> Result<Self> {
        let m = class.m();
        let mut esets = Vec::new();
        let mut by_base = vec![Vec::new(); m + 1];
        for p in 1..=m {
            for set in class.support(p).even_subsets() {
                by_base[p].push(esets.len());
                esets.push(ESet { base: p, set });
            }
        }
        let words = esets.len().div_ceil(64);
        let mut rows = vec![vec![0u64; words]; esets.len()];
        for a in 0..esets.len() {
            for b in a..esets.len() {
                let kind = relatedness(class, &esets[a], &esets[b])?;
                let ok = match relation {
                    Relation::Related => kind.is_related(),
                    Relation::Type1 => kind == Relatedness::Type1,
                };
                if ok {
                    rows[a][b / 64] |= 1 << (b % 64);
                    rows[b][a / 64] |= 1 << (a % 64);
                }
            }
        }
        Ok(Self {
            esets,
            by_base,
            rows,
        })
    }

    fn all(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.esets.len().div_ceil(64)];
        for i in 0..self.esets.len() {
            out[i / 64] |= 1 << (i % 64);
        }
        out
    }

    fn allows(mask: &[u64], i: usize) -> bool {
        mask[i / 64] & (1 << (i % 64)) != 0
    }

    fn restrict(&self, mask: &[u64], i: usize) -> Vec<u64> {
        mask.iter().zip(&self.rows[i]).map(|(a, b)| a & b).collect()
    }

    fn count(&self, slots: &[usize], mask: &[u64]) -> u128 {
        match slots {
            [] => 1,
            [base] => self.by_base[*base]
                .iter()
                .filter(|&&i| Self::allows(mask, i))
                .count() as u128,
            [base, rest @ ..] => self.by_base[*base]
                .iter()
                .filter(|&&i| Self::allows(mask, i))
                .map(|&i| self.count(rest, &self.restrict(mask, i)))
                .sum(),
        }
    }
}

fn check_j(class: &DJClass, j: &JTuple) -> Result<()> {
    if class.m() != j.m() {
        return Err(Error::LengthMismatch {
            left: class.m(),
            right: j.m(),
        });
    }
    Ok(())
}

/// Depth-first iterator over the sequences of `E(λ, J)` (or `Ẽ(λ, J)`),
/// in lexicographic order of candidate indices.
pub struct ESeqIter {
    cands: Candidates,
    slots: Vec<usize>,
    cursor: Vec<usize>,
    chosen: Vec<usize>,
    masks: Vec<Vec<u64>>,
    done: bool,
}

impl Iterator for ESeqIter {
    type Item = ESeq;

    fn next(&mut self) -> Option<ESeq> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.chosen.len();
            if depth == self.slots.len() {
                let seq = ESeq::from_vec_unchecked(
                    self.chosen.iter().map(|&i| self.cands.esets[i]).collect(),
                );
                if self.chosen.pop().is_none() {
                    self.done = true;
                }
                return Some(seq);
            }
            let list = &self.cands.by_base[self.slots[depth]];
            let mut found = None;
            while self.cursor[depth] < list.len() {
                let i = list[self.cursor[depth]];
                self.cursor[depth] += 1;
                if Candidates::allows(&self.masks[depth], i) {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    self.masks[depth + 1] = self.cands.restrict(&self.masks[depth], i);
                    self.cursor[depth + 1] = 0;
                    self.chosen.push(i);
                }
                None => {
                    if self.chosen.pop().is_none() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

pub fn enumerate_with(class: &DJClass, j: &JTuple, relation: Relation) -> Result<ESeqIter> {
    check_j(class, j)?;
    let cands = Candidates::new(class, relation)?;
    let slots = j.slot_bases();
    let mut masks = vec![Vec::new(); slots.len() + 1];
    masks[0] = cands.all();
    Ok(ESeqIter {
        cursor: vec![0; slots.len() + 1],
        chosen: Vec::with_capacity(slots.len()),
        masks,
        slots,
        cands,
        done: false,
    })
}

/// Sequences of pairwise related e-sets, one per slot of `J`.
pub fn enumerate_e(class: &DJClass, j: &JTuple) -> Result<ESeqIter> {
    enumerate_with(class, j, Relation::Related)
}

/// Sequences of pairwise type 1 related e-sets.
pub fn enumerate_e_tilde(class: &DJClass, j: &JTuple) -> Result<ESeqIter> {
    enumerate_with(class, j, Relation::Type1)
}

pub fn count_with(class: &DJClass, j: &JTuple, relation: Relation) -> Result<BigCount> {
    check_j(class, j)?;
    let cands = Candidates::new(class, relation)?;
    Ok(BigCount::from(cands.count(&j.slot_bases(), &cands.all())))
}

/// `|E(λ, J)|` by exhaustive search.
pub fn count_e(class: &DJClass, j: &JTuple) -> Result<BigCount> {
    count_with(class, j, Relation::Related)
}

/// `|Ẽ(λ, J)|` by exhaustive search.
pub fn count_e_tilde_enum(class: &DJClass, j: &JTuple) -> Result<BigCount> {
    count_with(class, j, Relation::Type1)
}

/// Unordered pairs `p < q` in one block satisfying property RT.
pub fn rt_pairs(class: &DJClass) -> Vec<(usize, usize)> {
    let m = class.m();
    let mut out = Vec::new();
    for p in 1..=m {
        for q in p + 1..=m {
            if class.equivalent(p, q) && rt_property(class, p, q).unwrap_or(false) {
                out.push((p, q));
            }
        }
    }
    out
}

/// Whether `seq` only uses `(i, ∅)`, `(p, {p,q})` and `(q, {p,q})` for a
/// single RT pair `(p, q)`. On the triangle only the trivial sequence counts.
pub fn is_rt_witnessed(class: &DJClass, seq: &ESeq) -> bool {
    if class.m() == 3 {
        return seq.entries().iter().all(ESet::is_empty);
    }
    rt_pairs(class).into_iter().any(|(p, q)| {
        let pair = VertexSet::from_bits((1 << (p - 1)) | (1 << (q - 1)), class.m());
        seq.entries()
            .iter()
            .all(|e| e.is_empty() || (e.set == pair && (e.base == p || e.base == q)))
    })
}

/// `E_RT(λ, J)` as a sorted set. Generated directly from the RT pairs; each
/// sequence appears once even when several pairs witness it.
pub fn enumerate_e_rt(class: &DJClass, j: &JTuple) -> Result<BTreeSet<ESeq>> {
    check_j(class, j)?;
    let mut out = BTreeSet::new();
    if class.m() == 3 {
        out.insert(ESeq::trivial(j));
        return Ok(out);
    }
    let bases = j.slot_bases();
    for (p, q) in rt_pairs(class) {
        let pair = VertexSet::from_bits((1 << (p - 1)) | (1 << (q - 1)), class.m());
        let free: Vec<usize> = (0..bases.len())
            .filter(|&k| bases[k] == p || bases[k] == q)
            .collect();
        for choice in 0u64..1 << free.len() {
            let mut entries: Vec<ESet> = bases.iter().map(|&b| ESet::empty(b, class.m())).collect();
            for (bit, &k) in free.iter().enumerate() {
                if choice & (1 << bit) != 0 {
                    entries[k].set = pair;
                }
            }
            out.insert(ESeq::from_vec_unchecked(entries));
        }
    }
    Ok(out)
}

/// `|E_RT(λ, J)|` without materialising: the trivial sequence plus, for each
/// RT pair, the nonempty choices on its slots.
pub fn count_e_rt(class: &DJClass, j: &JTuple) -> Result<BigCount> {
    check_j(class, j)?;
    if class.m() == 3 {
        return Ok(BigCount::one());
    }
    let pairs = rt_pairs(class);
    if pairs.is_empty() {
        return Ok(BigCount::zero());
    }
    Ok(pairs
        .into_iter()
        .map(|(p, q)| BigCount::pow2((j.get(p) + j.get(q) - 2) as u64) - BigCount::one())
        .sum::<BigCount>()
        + BigCount::one())
}
