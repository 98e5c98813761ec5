//! Counting D-J classes over wedged polygons `P_m(J)`.

mod enumerate;
mod formula;
mod puzzle;
mod types;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{enumerate_classes, DJClass};

pub use enumerate::{
    count_e, count_e_rt, count_e_tilde_enum, count_with, enumerate_e, enumerate_e_rt,
    enumerate_e_tilde, enumerate_with, is_rt_witnessed, rt_pairs, ESeqIter, Relation,
};
pub use formula::{
    class_formula, closed_form, count_e_tilde_formula, hexagon_correction, HexagonRow,
    HEXAGON_TYPE2_TABLE,
};
pub use puzzle::{reconstruct_puzzle, PuzzleGrid, MAX_PUZZLE_NODES};
pub use types::{BigCount, ESeq, JTuple};

fn classes_for(j: &JTuple) -> Result<Vec<DJClass>> {
    enumerate_classes(j.m())
}

fn check_m_matches(m: usize, j: &JTuple) -> Result<()> {
    if m != j.m() {
        return Err(Error::LengthMismatch {
            left: m,
            right: j.m(),
        });
    }
    Ok(())
}

/// Number of small covers over `P_m(J)` up to D-J equivalence:
/// `Σ_λ |E(λ, J)|`.
pub fn count_small_covers(m: usize, j: &JTuple) -> Result<BigCount> {
    check_m_matches(m, j)?;
    classes_for(j)?
        .par_iter()
        .map(|c| count_e(c, j))
        .collect::<Result<Vec<_>>>()
        .map(sum)
}

/// Number of real toric manifolds over `P_m(J)`: `Σ_λ |E_RT(λ, J)|`.
pub fn count_real_toric(m: usize, j: &JTuple) -> Result<BigCount> {
    check_m_matches(m, j)?;
    classes_for(j)?
        .par_iter()
        .map(|c| count_e_rt(c, j))
        .collect::<Result<Vec<_>>>()
        .map(sum)
}

fn sum(v: Vec<BigCount>) -> BigCount {
    v.into_iter().sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Diagram,
    Formula,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Diagram => "diagram",
            Method::Formula => "formula",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassCount {
    pub class: DJClass,
    pub count: BigCount,
    pub count_rt: BigCount,
}

/// Totals over `P_m(J)` with a per-class breakdown. The oracle only yields a
/// total, so its report has no real toric count and no breakdown.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CensusReport {
    pub m: usize,
    pub j: JTuple,
    pub method: Method,
    pub total: BigCount,
    pub real_toric: Option<BigCount>,
    pub per_class: Vec<ClassCount>,
}

/// Per-class census by exhaustive diagram search or by the closed forms.
/// `Method::Oracle` is produced by [`crate::oracle::oracle_report`].
pub fn census_report(m: usize, j: &JTuple, method: Method) -> Result<CensusReport> {
    check_m_matches(m, j)?;
    let count: fn(&DJClass, &JTuple) -> Result<BigCount> = match method {
        Method::Diagram => count_e,
        Method::Formula => class_formula,
        Method::Oracle => {
            return Err(Error::Precondition(
                "use the oracle module for oracle reports".into(),
            ))
        }
    };
    if method == Method::Formula && !(4..=6).contains(&m) {
        return Err(Error::Precondition(format!(
            "no closed form for m = {m} (need 4, 5 or 6)"
        )));
    }
    let per_class = classes_for(j)?
        .par_iter()
        .map(|c| {
            Ok(ClassCount {
                class: c.clone(),
                count: count(c, j)?,
                count_rt: count_e_rt(c, j)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let total = per_class.iter().map(|c| c.count.clone()).sum();
    let real_toric = per_class.iter().map(|c| c.count_rt.clone()).sum();
    Ok(CensusReport {
        m,
        j: j.clone(),
        method,
        total,
        real_toric: Some(real_toric),
        per_class,
    })
}
