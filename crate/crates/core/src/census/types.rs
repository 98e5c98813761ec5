use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::diagram::ESet;
use crate::error::{Error, Result};
use crate::polygon::check_m;

/// Exact nonnegative count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn one() -> Self {
        Self(BigUint::one())
    }

    pub fn pow2(exp: u64) -> Self {
        Self(BigUint::one() << exp)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        Self(BigUint::from(v))
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl AddAssign for BigCount {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

/// Panics on underflow; counts never go negative.
impl Sub for BigCount {
    type Output = BigCount;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), Add::add)
    }
}

impl FromStr for BigCount {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(Self)
            .map_err(|_| Error::Precondition(format!("{s:?} is not a decimal count")))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// The wedge vector `(j_1, ..., j_m)`, all entries positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct JTuple(Vec<u32>);

impl JTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        check_m(entries.len())
            .map_err(|_| Error::InvalidJ(format!("length {} is out of range", entries.len())))?;
        if let Some(k) = entries.iter().position(|&v| v == 0) {
            return Err(Error::InvalidJ(format!("entry {} is zero", k + 1)));
        }
        Ok(Self(entries))
    }

    pub fn ones(m: usize) -> Result<Self> {
        Self::new(vec![1; m])
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `j_p` for a 1-based vertex.
    pub fn get(&self, p: usize) -> u32 {
        self.0[p - 1]
    }

    /// Total number of vertices of the wedged complex.
    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(|&v| v as usize).sum()
    }

    /// Number of e-set slots, `Σ (j_p - 1)`.
    pub fn slot_count(&self) -> usize {
        self.0.iter().map(|&v| v as usize - 1).sum()
    }

    /// The base vertex of every slot, ordered by vertex then copy.
    pub fn slot_bases(&self) -> Vec<usize> {
        (1..=self.m())
            .flat_map(|p| std::iter::repeat_n(p, self.get(p) as usize - 1))
            .collect()
    }

    /// Number of nodes of the product of simplices, saturating.
    pub fn node_count(&self) -> u64 {
        self.0
            .iter()
            .fold(1u64, |acc, &v| acc.saturating_mul(v as u64))
    }

    /// Every tuple of length `m` with entries in `1..=max`, in
    /// lexicographic order.
    pub fn all_up_to(m: usize, max: u32) -> impl Iterator<Item = JTuple> {
        let total = (max as u64).pow(m as u32);
        (0..total).map(move |mut code| {
            let mut entries = vec![0u32; m];
            for slot in entries.iter_mut().rev() {
                *slot = (code % max as u64) as u32 + 1;
                code /= max as u64;
            }
            JTuple(entries)
        })
    }
}

impl FromStr for JTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .enumerate()
            .map(|(k, tok)| {
                tok.trim().parse::<u32>().map_err(|_| {
                    Error::InvalidJ(format!(
                        "entry {} ({:?}) is not a positive integer",
                        k + 1,
                        tok.trim()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        JTuple::new(entries)
    }
}

impl fmt::Display for JTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A slot-indexed sequence of e-sets: `j_p - 1` entries with base `p`,
/// ordered by `p` then by copy.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ESeq(Vec<ESet>);

impl ESeq {
    pub fn new(entries: Vec<ESet>, j: &JTuple) -> Result<Self> {
        let bases = j.slot_bases();
        if bases.len() != entries.len() {
            return Err(Error::Precondition(format!(
                "J = ({j}) has {} slots but {} e-sets were given",
                bases.len(),
                entries.len()
            )));
        }
        for (k, (e, &p)) in entries.iter().zip(&bases).enumerate() {
            if e.base != p || e.set.ambient() != j.m() {
                return Err(Error::Precondition(format!(
                    "slot {} expects an e-set with base {p} over {} vertices, got {e}",
                    k + 1,
                    j.m()
                )));
            }
        }
        Ok(Self(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<ESet>) -> Self {
        Self(entries)
    }

    /// Parses `;`-separated e-sets, e.g. `1:{1,3};2:{}`. The empty string is
    /// the empty sequence.
    pub fn parse(text: &str, j: &JTuple) -> Result<Self> {
        let entries = if text.trim().is_empty() {
            Vec::new()
        } else {
            text.split(';')
                .map(|t| ESet::parse(t, j.m()))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(entries, j)
    }

    /// The all-empty sequence for `j`.
    pub fn trivial(j: &JTuple) -> Self {
        Self(
            j.slot_bases()
                .into_iter()
                .map(|p| ESet::empty(p, j.m()))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[ESet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ESeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ESeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ESeq[{self}]")
    }
}

impl Serialize for ESeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}
