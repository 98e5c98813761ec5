//! Brute-force ground truth: characteristic matrices over the wedged complex
//! counted directly, and the real toric classes generated by blow-ups.

mod complex;
mod gf2;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::census::{closed_form, count_small_covers, BigCount, CensusReport, JTuple, Method};
use crate::error::{Error, Result};
use crate::polygon::{blow_up, canonicalize, DJClass, Word};

pub use complex::{build_complex, CopyLabel, WedgeComplex, MAX_VERTICES};
pub use gf2::{independent, rank, XorBasis};

/// Largest number of free column assignments the scan will visit.
pub const MAX_ASSIGNMENTS: u128 = 100_000_000;

/// Every accepted matrix whose running index is a multiple of this is
/// re-checked from scratch.
const SAMPLE_EVERY: u64 = 997;

/// A characteristic matrix: one `n`-bit column per vertex of the complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharMatrix {
    pub rows: usize,
    pub columns: Vec<u32>,
}

impl CharMatrix {
    /// Every facet's columns are linearly independent.
    pub fn is_nonsingular(&self, complex: &WedgeComplex) -> bool {
        complex
            .facets()
            .iter()
            .all(|&f| independent(facet_columns(&self.columns, f)))
    }

    pub fn row_rank(&self) -> usize {
        rank(self.columns.iter().copied())
    }
}

fn facet_columns(columns: &[u32], facet: u32) -> impl Iterator<Item = u32> + '_ {
    columns
        .iter()
        .enumerate()
        .filter(move |(i, _)| facet & (1 << i) != 0)
        .map(|(_, &c)| c)
}

/// Estimated number of assignments, `(2^n - 1)^(N - n)`, saturating.
pub fn search_size(m: usize, j: &JTuple) -> u128 {
    let n = j.vertex_count() + 2 - m;
    let choices = (1u128 << n.min(127)) - 1;
    (0..m - 2).fold(1u128, |acc, _| acc.saturating_mul(choices))
}

/// The facet on polygon edge `{1, 2}` that omits the highest copy of every
/// other vertex, and the omitted (free) vertices in label order.
fn base_facet(complex: &WedgeComplex) -> (u32, Vec<usize>) {
    let m = complex.m();
    let mut free = Vec::new();
    let mut facet = complex.group(1) | complex.group(2);
    for r in 3..=m {
        let group = complex.group(r);
        let top = 31 - group.leading_zeros() as usize;
        facet |= group & !(1 << top);
        free.push(top);
    }
    (facet, free)
}

/// A facet's test at the depth where its last free column is assigned:
/// project the free columns onto the coordinates not taken by the fixed
/// basis vectors and require independence there.
struct FacetCheck {
    free_depths: Vec<usize>,
    keep: u32,
}

struct Scan {
    rows: usize,
    columns: Vec<u32>,
    free: Vec<usize>,
    checks: Vec<Vec<FacetCheck>>,
}

impl Scan {
    fn new(complex: &WedgeComplex) -> Self {
        let rows = complex.rank();
        let (base, free) = base_facet(complex);
        let mut columns = vec![0u32; complex.vertex_count()];
        let mut coordinate = 0;
        for (v, column) in columns.iter_mut().enumerate() {
            if base & (1 << v) != 0 {
                *column = 1 << coordinate;
                coordinate += 1;
            }
        }
        assert_eq!(coordinate, rows);
        let mut checks: Vec<Vec<FacetCheck>> = (0..free.len()).map(|_| Vec::new()).collect();
        for &facet in complex.facets() {
            let free_depths: Vec<usize> = (0..free.len())
                .filter(|&d| facet & (1 << free[d]) != 0)
                .collect();
            let Some(&last) = free_depths.last() else {
                continue;
            };
            let fixed: u32 = facet_columns(&columns, facet & base).fold(0, |a, c| a | c);
            let keep = !fixed & ((1u64 << rows) - 1) as u32;
            checks[last].push(FacetCheck { free_depths, keep });
        }
        Self {
            rows,
            columns,
            free,
            checks,
        }
    }

    fn passes(&self, values: &[u32], depth: usize) -> bool {
        self.checks[depth]
            .iter()
            .all(|c| independent(c.free_depths.iter().map(|&d| values[d] & c.keep)))
    }

    fn count_from(&self, values: &mut Vec<u32>, accepted: &mut u64, complex: &WedgeComplex) -> u64 {
        let depth = values.len();
        if depth == self.free.len() {
            *accepted += 1;
            if *accepted % SAMPLE_EVERY == 1 {
                self.recheck(values, complex);
            }
            return 1;
        }
        let mut total = 0;
        for v in 1..1u32 << self.rows {
            values.push(v);
            if self.passes(values, depth) {
                total += self.count_from(values, accepted, complex);
            }
            values.pop();
        }
        total
    }

    fn matrix(&self, values: &[u32]) -> CharMatrix {
        let mut columns = self.columns.clone();
        for (&v, &slot) in values.iter().zip(&self.free) {
            columns[slot] = v;
        }
        CharMatrix {
            rows: self.rows,
            columns,
        }
    }

    fn recheck(&self, values: &[u32], complex: &WedgeComplex) {
        let matrix = self.matrix(values);
        assert_eq!(
            matrix.row_rank(),
            self.rows,
            "accepted matrix lacks full row rank"
        );
        assert!(
            matrix.is_nonsingular(complex),
            "accepted matrix is singular on a facet"
        );
    }
}

fn check_guard(m: usize, j: &JTuple) -> Result<()> {
    let size = search_size(m, j);
    if size > MAX_ASSIGNMENTS {
        return Err(Error::Guard {
            estimate: if size == u128::MAX {
                "> 2^128".into()
            } else {
                size.to_string()
            },
            limit: MAX_ASSIGNMENTS.to_string(),
        });
    }
    Ok(())
}

/// Number of D-J classes over `P_m(J)` by direct enumeration: the base
/// facet is pinned to the standard basis and the remaining columns range
/// over all nonzero vectors.
pub fn count_classes_bruteforce(m: usize, j: &JTuple) -> Result<BigCount> {
    let complex = build_complex(m, j)?;
    check_guard(m, j)?;
    let scan = Scan::new(&complex);
    if scan.free.is_empty() {
        return Ok(BigCount::one());
    }
    let total: u64 = (1..1u32 << scan.rows)
        .into_par_iter()
        .map(|first| {
            let mut values = vec![first];
            let mut accepted = 0;
            if scan.passes(&values, 0) {
                scan.count_from(&mut values, &mut accepted, &complex)
            } else {
                0
            }
        })
        .sum();
    Ok(BigCount::from(total))
}

/// All accepted matrices, for inspection on tiny inputs.
pub fn enumerate_matrices(m: usize, j: &JTuple) -> Result<Vec<CharMatrix>> {
    let complex = build_complex(m, j)?;
    check_guard(m, j)?;
    let scan = Scan::new(&complex);
    let mut out = Vec::new();
    let mut values = Vec::new();
    collect(&scan, &mut values, &mut out);
    Ok(out)
}

fn collect(scan: &Scan, values: &mut Vec<u32>, out: &mut Vec<CharMatrix>) {
    let depth = values.len();
    if depth == scan.free.len() {
        out.push(scan.matrix(values));
        return;
    }
    for v in 1..1u32 << scan.rows {
        values.push(v);
        if scan.passes(values, depth) {
            collect(scan, values, out);
        }
        values.pop();
    }
}

/// Classes over `P_m` reachable from `abc` and `abab` by blow-ups, for
/// every `3 <= m <= m_max`.
pub fn real_toric_closure(m_max: usize) -> Result<BTreeMap<usize, BTreeSet<DJClass>>> {
    if !(3..=12).contains(&m_max) {
        return Err(Error::Precondition(format!(
            "m_max = {m_max} is outside 3..=12"
        )));
    }
    let seed = |s: &str| canonicalize(&s.parse::<Word>().expect("seed words are valid"));
    let mut out = BTreeMap::new();
    out.insert(3, BTreeSet::from([seed("abc")]));
    for m in 4..=m_max {
        let mut next = BTreeSet::new();
        if m == 4 {
            next.insert(seed("abab"));
        }
        for class in &out[&(m - 1)] {
            for i in 1..m {
                next.insert(canonicalize(&blow_up(class.word(), i)?));
            }
        }
        out.insert(m, next);
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub first: Method,
    pub first_value: BigCount,
    pub second: Method,
    pub second_value: BigCount,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub m: usize,
    pub j: JTuple,
    pub diagram: BigCount,
    pub formula: Option<BigCount>,
    pub bruteforce: BigCount,
    pub agree: bool,
    pub witness: Option<Witness>,
}

/// Runs the diagram census, the closed form where one exists, and the
/// brute force, and reports the first disagreement.
pub fn verify(m: usize, j: &JTuple) -> Result<VerificationReport> {
    let bruteforce = count_classes_bruteforce(m, j)?;
    let diagram = count_small_covers(m, j)?;
    let formula = if (4..=6).contains(&m) {
        Some(closed_form(m, j)?)
    } else {
        None
    };
    let mut values = vec![(Method::Diagram, diagram.clone())];
    if let Some(f) = &formula {
        values.push((Method::Formula, f.clone()));
    }
    values.push((Method::Oracle, bruteforce.clone()));
    let witness = values
        .iter()
        .skip(1)
        .find(|(_, v)| *v != values[0].1)
        .map(|(method, v)| Witness {
            first: values[0].0,
            first_value: values[0].1.clone(),
            second: *method,
            second_value: v.clone(),
        });
    Ok(VerificationReport {
        m,
        j: j.clone(),
        diagram,
        formula,
        bruteforce,
        agree: witness.is_none(),
        witness,
    })
}

/// Census report carrying only the brute-force total.
pub fn oracle_report(m: usize, j: &JTuple) -> Result<CensusReport> {
    Ok(CensusReport {
        m,
        j: j.clone(),
        method: Method::Oracle,
        total: count_classes_bruteforce(m, j)?,
        real_toric: None,
        per_class: Vec::new(),
    })
}
