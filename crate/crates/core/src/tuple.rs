//! Exponent-tuple arithmetic: validity, dimensions, Reeb period and the
//! Maslov index of the Reeb loop.
//!
//! All times are integers: the Reeb flow is periodic and every closed orbit
//! has period `L * pi/2` for some integer `L >= 1`, so the period is stored
//! as `period_l` with the `pi/2` factor left implicit. No floating point.

use crate::error::{Error, Result};
use serde::Serialize;

/// A Brieskorn exponent vector together with its derived constants.
///
/// For exponents `(a_0, ..., a_n)` (each `>= 2`, `n >= 1`) the link has
/// dimension `2n - 1`, the Reeb flow is periodic with integer period
/// `period_l = lcm(a_j)`, and the Reeb loop has Maslov index
/// `maslov = sum_j period_l / a_j - period_l`. The induced degree shift on
/// the chain complex per period is `degree_shift = 2 * maslov`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentTuple {
    exponents: Vec<i64>,
    n: i64,
    dim: i64,
    period_l: i64,
    maslov: i64,
    degree_shift: i64,
}

/// Sign of the index shift, decided by the exact rational comparison
/// `sum 1/a_j` vs `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ShiftClass {
    PositiveShift,
    ZeroShift,
    NegativeShift,
}

impl ExponentTuple {
    /// Validates the exponents and computes all derived constants exactly.
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::TooFewExponents {
                len: exponents.len(),
            });
        }
        for (index, &value) in exponents.iter().enumerate() {
            if value < 2 {
                return Err(Error::InvalidExponent { index, value });
            }
        }
        let n = exponents.len() as i64 - 1;
        let mut period_l: i64 = 1;
        for &a in &exponents {
            period_l = lcm(period_l, a).ok_or(Error::Overflow { what: "lcm" })?;
        }
        // Each summand period_l / a_j is an exact integer by construction.
        let mut maslov: i64 = -period_l;
        for &a in &exponents {
            maslov = maslov
                .checked_add(period_l / a)
                .ok_or(Error::Overflow { what: "maslov index" })?;
        }
        let degree_shift = maslov.checked_mul(2).ok_or(Error::Overflow {
            what: "degree shift",
        })?;
        Ok(ExponentTuple {
            exponents,
            n,
            dim: 2 * n - 1,
            period_l,
            maslov,
            degree_shift,
        })
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// The `n` in "the link of a singularity in C^{n+1}".
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Dimension `2n - 1` of the link.
    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// Reeb period in units of `pi/2`: the lcm of the exponents.
    pub fn period_l(&self) -> i64 {
        self.period_l
    }

    /// Maslov index of the Reeb loop.
    pub fn maslov(&self) -> i64 {
        self.maslov
    }

    /// Degree shift per Reeb period, twice the Maslov index.
    pub fn degree_shift(&self) -> i64 {
        self.degree_shift
    }

    /// Trichotomy on the sign of the Maslov index. `ZeroShift` holds exactly
    /// when `sum 1/a_j = 1`.
    pub fn shift_class(&self) -> ShiftClass {
        match self.maslov.cmp(&0) {
            std::cmp::Ordering::Greater => ShiftClass::PositiveShift,
            std::cmp::Ordering::Equal => ShiftClass::ZeroShift,
            std::cmp::Ordering::Less => ShiftClass::NegativeShift,
        }
    }

    /// The exponents, sorted ascending. Used as a lookup key for stratum
    /// topology data.
    pub fn sorted_exponents(&self) -> Vec<i64> {
        let mut s = self.exponents.clone();
        s.sort_unstable();
        s
    }
}

impl std::fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.exponents
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn lcm(a: i64, b: i64) -> Option<i64> {
    (a / gcd(a, b)).checked_mul(b)
}
