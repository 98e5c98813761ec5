//! Structural checks shared by the exhaustive acceptance run and the
//! randomized property suites. Each returns a description of the first
//! counterexample.

#![allow(dead_code)]

use polywedge::census::{enumerate_e, reconstruct_puzzle, ESeq, JTuple};
use polywedge::diagram::{
    adjacent_classes, fourth_node, relatedness, type2_cross_check, ESet, Relatedness,
};
use polywedge::polygon::{
    arcs, canonicalize, enumerate_classes, invert, invert_word, omega, DJClass, VertexSet,
};

pub type Check = Result<(), String>;

fn fail(msg: String) -> Check {
    Err(msg)
}

/// Every even subset of every block.
pub fn block_sets(class: &DJClass) -> Vec<VertexSet> {
    class
        .blocks()
        .iter()
        .flat_map(|b| b.even_subsets())
        .collect()
}

/// All compatible e-sets of a class.
pub fn all_esets(class: &DJClass) -> Vec<ESet> {
    (1..=class.m())
        .flat_map(|p| {
            class
                .support(p)
                .even_subsets()
                .map(move |set| ESet { base: p, set })
        })
        .collect()
}

pub fn invert_is_involution(class: &DJClass, set: VertexSet) -> Check {
    let once = invert(class, set).map_err(|e| e.to_string())?;
    let twice = invert(&once, set).map_err(|e| e.to_string())?;
    if twice != *class {
        return fail(format!("inverting {class} twice by {set} gives {twice}"));
    }
    Ok(())
}

pub fn coloring_is_irrelevant(class: &DJClass, set: VertexSet) -> Check {
    if set.is_empty() {
        return Ok(());
    }
    let base = invert(class, set).map_err(|e| e.to_string())?;
    for r in set.complement().iter() {
        let w = invert_word(class.word(), set, Some(r)).map_err(|e| e.to_string())?;
        if canonicalize(&w) != base {
            return fail(format!(
                "{class} by {set}: white gap at {r} gives {w}, expected {base}"
            ));
        }
    }
    Ok(())
}

pub fn same_base_composes(class: &DJClass, p: usize, s: VertexSet, t: VertexSet) -> Check {
    let chained = invert(&invert(class, s).map_err(|e| e.to_string())?, t)
        .map_err(|e| format!("{class} at {p}: {e}"))?;
    let direct = invert(class, s.symmetric_difference(t)).map_err(|e| e.to_string())?;
    if chained != direct {
        return fail(format!(
            "{class}: {s} then {t} gives {chained}, symmetric difference gives {direct}"
        ));
    }
    Ok(())
}

pub fn adjacency_count(class: &DJClass, p: usize) -> Check {
    let got = adjacent_classes(class, p).map_err(|e| e.to_string())?.len();
    let want = 1usize << (class.support(p).len() - 1);
    if got != want {
        return fail(format!("{class} at {p}: {got} neighbours, expected {want}"));
    }
    Ok(())
}

/// For `r`, `r'` outside `S`: the two `Ω` sets agree when `r`, `r'` lie in
/// gaps of the same parity, and otherwise cover `[m]` and meet in `S`.
pub fn omega_partition(set: VertexSet) -> Check {
    if set.is_empty() {
        return Ok(());
    }
    let gaps = arcs(set);
    let parity = |r: usize| gaps.iter().position(|g| g.contains(r)).unwrap() % 2;
    for r in set.complement().iter() {
        let a = omega(set, r).map_err(|e| e.to_string())?;
        if a.contains(r) || !set.is_subset(a) {
            return fail(format!("Ω_{r}({set}) = {a}"));
        }
        for r2 in set.complement().iter() {
            let b = omega(set, r2).map_err(|e| e.to_string())?;
            let ok = if parity(r) == parity(r2) {
                a == b
            } else {
                a.union(b) == VertexSet::full(set.ambient()) && a.intersection(b) == set
            };
            if !ok {
                return fail(format!("Ω_{r}({set}) = {a}, Ω_{r2}({set}) = {b}"));
            }
        }
    }
    Ok(())
}

/// The Ω criterion for type 2 relatedness agrees with the square built from
/// anchored inversions, for nonempty e-sets with inequivalent bases.
pub fn criterion_matches_square(class: &DJClass, e1: &ESet, e2: &ESet) -> Check {
    if e1.is_empty() || e2.is_empty() || class.equivalent(e1.base, e2.base) {
        return Ok(());
    }
    let by_omega = relatedness(class, e1, e2).map_err(|e| e.to_string())? == Relatedness::Type2;
    let by_square = type2_cross_check(class.word(), e1, e2).map_err(|e| e.to_string())?;
    if by_omega != by_square {
        return fail(format!(
            "{class} {e1} {e2}: Ω says {by_omega}, square says {by_square}"
        ));
    }
    Ok(())
}

pub fn fourth_node_symmetric(class: &DJClass, e1: &ESet, e2: &ESet) -> Check {
    if !relatedness(class, e1, e2)
        .map_err(|e| e.to_string())?
        .is_related()
    {
        return Ok(());
    }
    let a = fourth_node(class, e1, e2).map_err(|e| e.to_string())?;
    let b = fourth_node(class, e2, e1).map_err(|e| e.to_string())?;
    if a != b {
        return fail(format!("{class} {e1} {e2}: {a} vs {b}"));
    }
    Ok(())
}

pub fn puzzle_closes(class: &DJClass, seq: &ESeq, j: &JTuple) -> Check {
    reconstruct_puzzle(class, seq, j)
        .map(|_| ())
        .map_err(|e| format!("{class} [{seq}]: {e}"))
}

/// Runs every single-class check exhaustively over `P_m`.
pub fn exhaustive_class_checks(m: usize) -> Result<usize, String> {
    let mut checks = 0;
    for class in enumerate_classes(m).map_err(|e| e.to_string())? {
        for set in block_sets(&class) {
            invert_is_involution(&class, set)?;
            coloring_is_irrelevant(&class, set)?;
            omega_partition(set)?;
            checks += 3;
        }
        for p in 1..=m {
            adjacency_count(&class, p)?;
            let subsets: Vec<VertexSet> = class.support(p).even_subsets().collect();
            for &s in &subsets {
                for &t in &subsets {
                    same_base_composes(&class, p, s, t)?;
                }
            }
            checks += 1 + subsets.len() * subsets.len();
        }
        let esets = all_esets(&class);
        for e1 in &esets {
            for e2 in &esets {
                criterion_matches_square(&class, e1, e2)?;
                fourth_node_symmetric(&class, e1, e2)?;
                checks += 2;
            }
        }
    }
    Ok(checks)
}

/// Wedge vectors with entries at most `max` and node product at most `cap`.
pub fn puzzle_matrix(m: usize, max: u32, cap: u64) -> Vec<JTuple> {
    JTuple::all_up_to(m, max)
        .filter(|j| j.node_count() <= cap)
        .collect()
}

/// Reconstructs the puzzle of every sequence of `E(λ, J)`; returns how many
/// were built.
pub fn all_puzzles_close(m: usize, j: &JTuple) -> Result<usize, String> {
    let mut built = 0;
    for class in enumerate_classes(m).map_err(|e| e.to_string())? {
        for seq in enumerate_e(&class, j).map_err(|e| e.to_string())? {
            puzzle_closes(&class, &seq, j)?;
            built += 1;
        }
    }
    Ok(built)
}
