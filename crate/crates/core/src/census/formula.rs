//! Closed-form counts over wedged polygons.

use crate::census::{BigCount, JTuple};
use crate::error::{Error, Result};
use crate::polygon::{canonicalize, DJClass, VertexSet, Word};

fn pow2(exp: u64) -> BigCount {
    BigCount::pow2(exp)
}

/// `Σ_i (2^(|μ_i| - 1))^(w_i) - 2` with `w_i = Σ_{k ∈ μ_i} (j_k - 1)`;
/// an empty block contributes 1.
pub fn count_e_tilde_formula(class: &DJClass, j: &JTuple) -> Result<BigCount> {
    if class.m() != j.m() {
        return Err(Error::LengthMismatch {
            left: class.m(),
            right: j.m(),
        });
    }
    let terms: BigCount = class
        .blocks()
        .iter()
        .map(|block| {
            if block.is_empty() {
                return BigCount::one();
            }
            let weight: u64 = block.iter().map(|k| (j.get(k) - 1) as u64).sum();
            pow2((block.len() as u64 - 1) * weight)
        })
        .sum();
    Ok(terms - BigCount::from(2u64))
}

// 2^(j_a + j_b - 1)
fn half_term(j: &JTuple, a: usize, b: usize) -> BigCount {
    pow2((j.get(a) + j.get(b) - 1) as u64)
}

// 2^(j_a + j_b - 2) - 1
fn pair_factor(j: &JTuple, a: usize, b: usize) -> BigCount {
    pow2((j.get(a) + j.get(b) - 2) as u64) - BigCount::one()
}

/// One row of the table of type 2 related e-set pairs over the hexagon: the
/// e-sets `(s ± 1, S)` and `(t ± 1, T)` are type 2 related exactly for the
/// listed classes.
pub struct HexagonRow {
    pub first: [usize; 2],
    pub second: [usize; 2],
    pub words: [&'static str; 4],
}

pub const HEXAGON_TYPE2_TABLE: [HexagonRow; 3] = [
    HexagonRow {
        first: [1, 3],
        second: [4, 6],
        words: ["ababab", "ababcb", "acabab", "acabcb"],
    },
    HexagonRow {
        first: [3, 5],
        second: [6, 2],
        words: ["ababab", "abacab", "cbabab", "cbacab"],
    },
    HexagonRow {
        first: [5, 1],
        second: [2, 4],
        words: ["ababab", "ababac", "abcbab", "abcbac"],
    },
];

impl HexagonRow {
    pub fn classes(&self) -> Vec<DJClass> {
        self.words
            .iter()
            .map(|w| canonicalize(&w.parse::<Word>().expect("table words are valid")))
            .collect()
    }

    pub fn first_set(&self) -> VertexSet {
        VertexSet::from_vertices(6, self.first).expect("in range")
    }

    pub fn second_set(&self) -> VertexSet {
        VertexSet::from_vertices(6, self.second).expect("in range")
    }

    fn product(&self, j: &JTuple) -> BigCount {
        pair_factor(j, self.first[0], self.first[1])
            * pair_factor(j, self.second[0], self.second[1])
    }
}

/// `|E(λ, J) \ Ẽ(λ, J)|` over the hexagon, read off the table.
pub fn hexagon_correction(class: &DJClass, j: &JTuple) -> Result<BigCount> {
    if class.m() != 6 || j.m() != 6 {
        return Err(Error::Precondition("hexagon correction needs m = 6".into()));
    }
    Ok(HEXAGON_TYPE2_TABLE
        .iter()
        .filter(|row| row.classes().contains(class))
        .map(|row| row.product(j))
        .sum())
}

/// Closed-form number of small covers over `P_m(J)` for `m ∈ {4, 5, 6}`.
pub fn closed_form(m: usize, j: &JTuple) -> Result<BigCount> {
    if j.m() != m {
        return Err(Error::LengthMismatch {
            left: m,
            right: j.m(),
        });
    }
    match m {
        4 => Ok(half_term(j, 1, 3) + half_term(j, 2, 4) - BigCount::one()),
        5 => {
            let sum: BigCount = (1..=5).map(|i| half_term(j, i, (i + 1) % 5 + 1)).sum();
            Ok(sum - BigCount::from(5u64))
        }
        6 => {
            let tilde: BigCount = crate::polygon::enumerate_classes(6)?
                .iter()
                .map(|c| count_e_tilde_formula(c, j))
                .sum::<Result<BigCount>>()?;
            let correction: BigCount = HEXAGON_TYPE2_TABLE.iter().map(|row| row.product(j)).sum();
            Ok(tilde + BigCount::from(4u64) * correction)
        }
        _ => Err(Error::Precondition(format!(
            "no closed form for m = {m} (need 4, 5 or 6)"
        ))),
    }
}

/// Per-class count used by the formula report: `Ẽ` for `m ∈ {4, 5}` (where
/// it equals `E`), plus the table correction for the hexagon.
pub fn class_formula(class: &DJClass, j: &JTuple) -> Result<BigCount> {
    match class.m() {
        4 | 5 => count_e_tilde_formula(class, j),
        6 => Ok(count_e_tilde_formula(class, j)? + hexagon_correction(class, j)?),
        m => Err(Error::Precondition(format!(
            "no closed form for m = {m} (need 4, 5 or 6)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> DJClass {
        DJClass::parse(s).unwrap()
    }

    fn j(s: &str) -> JTuple {
        s.parse().unwrap()
    }

    fn n(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn tilde_formula_examples() {
        assert_eq!(
            count_e_tilde_formula(&c("abab"), &j("2,1,2,1")).unwrap(),
            n(4)
        );
        assert_eq!(
            count_e_tilde_formula(&c("abac"), &j("3,1,2,5")).unwrap(),
            n(1 << (3 + 2 - 2))
        );
        for word in ["abc", "abab", "ababab", "abcbacb"] {
            let class = c(word);
            let ones = JTuple::ones(class.m()).unwrap();
            assert_eq!(count_e_tilde_formula(&class, &ones).unwrap(), n(1));
        }
        assert!(count_e_tilde_formula(&c("abab"), &j("1,1,1")).is_err());
    }

    #[test]
    fn abab_matches_its_own_closed_form() {
        for jt in JTuple::all_up_to(4, 4) {
            let e = jt.entries();
            let want = n((1 << (e[0] + e[2] - 2)) + (1 << (e[1] + e[3] - 2)) - 1);
            assert_eq!(
                count_e_tilde_formula(&c("abab"), &jt).unwrap(),
                want,
                "{jt}"
            );
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(4, &j("2,1,1,1")).unwrap(), n(5));
        assert_eq!(closed_form(4, &j("2,2,1,1")).unwrap(), n(7));
        assert_eq!(closed_form(5, &j("2,1,2,1,1")).unwrap(), n(15));
        assert_eq!(closed_form(5, &j("2,2,2,2,2")).unwrap(), n(35));
        assert_eq!(closed_form(5, &j("2,1,1,1,1")).unwrap(), n(9));
        assert!(closed_form(7, &JTuple::ones(7).unwrap()).is_err());
        assert!(closed_form(5, &j("1,1,1,1")).is_err());
    }

    #[test]
    fn hexagon_closed_form_without_products() {
        // Every product has a factor 2^0 - 1 when only one entry exceeds 1.
        let jt = j("2,1,1,1,1,1");
        let tilde: BigCount = crate::polygon::enumerate_classes(6)
            .unwrap()
            .iter()
            .map(|cl| count_e_tilde_formula(cl, &jt).unwrap())
            .sum();
        assert_eq!(closed_form(6, &jt).unwrap(), tilde);
        assert_eq!(closed_form(6, &JTuple::ones(6).unwrap()).unwrap(), n(11));
    }

    #[test]
    fn hexagon_table_lists_four_distinct_classes_per_row() {
        for row in &HEXAGON_TYPE2_TABLE {
            let mut classes = row.classes();
            classes.sort();
            classes.dedup();
            assert_eq!(classes.len(), 4);
        }
    }

    #[test]
    fn per_class_formula_sums_to_closed_form() {
        for m in 4..=6 {
            for jt in JTuple::all_up_to(m, 3) {
                let sum: BigCount = crate::polygon::enumerate_classes(m)
                    .unwrap()
                    .iter()
                    .map(|cl| class_formula(cl, &jt).unwrap())
                    .sum();
                assert_eq!(sum, closed_form(m, &jt).unwrap(), "m={m} J={jt}");
            }
        }
    }
}
