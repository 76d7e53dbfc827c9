//! The Laurent-module picture of the chain complex: periodic graded
//! dimensions, vanishing-differential detection, homology tables and the
//! non-negative-shift part.
//!
//! The fundamental action window is `[0, 1)`: the constants plus the strata
//! with `1 <= l <= period_l - 1`. The stratum at the full period is the
//! shift of the constants and is excluded to avoid double counting. Every
//! other generator is a shift of a fundamental one by a whole number of
//! periods, moving its product degree by the degree shift per period.

use crate::error::{Error, Result};
use crate::grading::{product_degree, Generator, GeneratorTable};
use crate::strata::{enumerate_strata, BettiResolver};
use crate::tuple::ExponentTuple;
use serde::Serialize;
use std::collections::BTreeMap;

/// Which base ring the graded dimensions live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModuleMode {
    /// Nonzero degree shift: free module over the Laurent polynomials.
    LaurentModule,
    /// Zero shift: vector space over the field of Laurent series.
    LaurentSeriesVectorSpace,
}

/// A Z-graded dimension function that repeats under the degree shift per
/// action period: the multiset of fundamental-window degrees plus all its
/// whole-period shifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicGradedDims {
    /// Product degrees of the generators with action in `[0, 1)`, sorted.
    pub period_degrees: Vec<i64>,
    /// Degree shift per period.
    pub mu_p: i64,
    /// Number of fundamental generators; the module rank bound.
    pub rank: usize,
    pub mode: ModuleMode,
}

impl PeriodicGradedDims {
    /// Builds from an explicit degree multiset and shift. This is also how a
    /// free module on prescribed generator degrees is described.
    pub fn from_parts(mut period_degrees: Vec<i64>, mu_p: i64) -> Self {
        period_degrees.sort_unstable();
        let rank = period_degrees.len();
        PeriodicGradedDims {
            period_degrees,
            mu_p,
            rank,
            mode: if mu_p == 0 {
                ModuleMode::LaurentSeriesVectorSpace
            } else {
                ModuleMode::LaurentModule
            },
        }
    }

    fn check_finite_dims(&self) -> Result<()> {
        if self.mu_p == 0 && !self.period_degrees.is_empty() {
            return Err(Error::ZeroShiftInfiniteDims);
        }
        Ok(())
    }

    /// Exact dimension in a single degree (all integer shifts).
    pub fn dim_at(&self, degree: i64) -> Result<usize> {
        self.check_finite_dims()?;
        Ok(self
            .period_degrees
            .iter()
            .filter(|&&e| self.mu_p != 0 && (degree - e) % self.mu_p == 0)
            .count())
    }

    /// Exact dimension counting only shifts `k >= 0`.
    pub fn positive_dim_at(&self, degree: i64) -> Result<usize> {
        self.check_finite_dims()?;
        Ok(self
            .period_degrees
            .iter()
            .filter(|&&e| {
                self.mu_p != 0 && (degree - e) % self.mu_p == 0 && (degree - e) / self.mu_p >= 0
            })
            .count())
    }

    /// Per-degree dimensions over `[lo, hi]`.
    pub fn dims_in_window(&self, lo: i64, hi: i64) -> Result<BTreeMap<i64, usize>> {
        self.window_with(lo, hi, |d| self.dim_at(d))
    }

    /// Per-degree dimensions of the non-negative-shift part over `[lo, hi]`.
    pub fn positive_part(&self, lo: i64, hi: i64) -> Result<BTreeMap<i64, usize>> {
        self.window_with(lo, hi, |d| self.positive_dim_at(d))
    }

    fn window_with(
        &self,
        lo: i64,
        hi: i64,
        f: impl Fn(i64) -> Result<usize>,
    ) -> Result<BTreeMap<i64, usize>> {
        if self.period_degrees.is_empty() {
            return Ok((lo..=hi).map(|d| (d, 0)).collect());
        }
        self.check_finite_dims()?;
        (lo..=hi).map(|d| Ok((d, f(d)?))).collect()
    }

    fn degree_span(&self) -> i64 {
        match (self.period_degrees.first(), self.period_degrees.last()) {
            (Some(&min), Some(&max)) => max - min,
            _ => 0,
        }
    }
}

/// Fundamental-window module data of a tuple: the constants plus the strata
/// strictly inside one period.
pub fn period_module(tuple: &ExponentTuple, resolver: &BettiResolver) -> Result<PeriodicGradedDims> {
    let set = enumerate_strata(tuple, tuple.period_l() - 1, resolver)?;
    let mut degrees = Vec::new();
    for s in &set.strata {
        for (ind, &b) in s.betti.iter().enumerate() {
            let d = product_degree(s, ind as i64, tuple.n());
            for _ in 0..b {
                degrees.push(d);
            }
        }
    }
    Ok(PeriodicGradedDims::from_parts(degrees, tuple.degree_shift()))
}

/// What is known about the chain differential.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Vanishing {
    /// No degree-and-action-compatible pair exists: the differential
    /// vanishes identically.
    Proven,
    /// Compatible pairs exist; nothing is decided here.
    Unknown,
    /// Compatible pairs exist but an external computation, recorded in the
    /// provenance string, asserts the differential vanishes.
    ByOverride { provenance: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialStatus {
    pub vanishing: Vanishing,
    /// Pairs (x, y) with action(x) > action(y) and degree(x) = degree(y) + 1,
    /// lying in distinct strata.
    pub witnesses: Vec<(Generator, Generator)>,
}

/// Strata coverage (by `max_l`) the detector needs to be conclusive.
///
/// With a nonzero shift, a compatible pair at period distance `k` forces
/// `|k| * |shift| <= span + 1`, so `B = ceil((span + 1) / |shift|) + 1`
/// periods suffice; with zero shift the pattern repeats verbatim and two
/// periods suffice.
pub fn detector_required_max_l(tuple: &ExponentTuple, m: &PeriodicGradedDims) -> i64 {
    let period_l = tuple.period_l();
    let periods = if m.mu_p == 0 {
        2
    } else {
        let span = m.degree_span();
        (span + 1 + m.mu_p.abs() - 1) / m.mu_p.abs() + 1
    };
    periods * period_l - 1
}

/// Scans the table for differential-compatible generator pairs: action
/// strictly decreasing, product degree dropping by one, distinct strata
/// (intra-stratum components vanish for a perfect Morse function).
pub fn detect_vanishing_differential(
    tuple: &ExponentTuple,
    table: &GeneratorTable,
    resolver: &BettiResolver,
    override_provenance: Option<&str>,
) -> Result<DifferentialStatus> {
    let m = period_module(tuple, resolver)?;
    let required = detector_required_max_l(tuple, &m);
    if table.max_l < required {
        return Err(Error::InsufficientCoverage {
            required,
            supplied: table.max_l,
        });
    }
    let mut witnesses = Vec::new();
    for x in &table.generators {
        for y in &table.generators {
            if x.stratum_l > y.stratum_l && x.product_degree == y.product_degree + 1 {
                witnesses.push((*x, *y));
            }
        }
    }
    let vanishing = if witnesses.is_empty() {
        Vanishing::Proven
    } else {
        match override_provenance {
            Some(p) => Vanishing::ByOverride {
                provenance: p.to_string(),
            },
            None => Vanishing::Unknown,
        }
    };
    Ok(DifferentialStatus {
        vanishing,
        witnesses,
    })
}

/// Homology dimensions with their provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub dims: BTreeMap<i64, usize>,
    /// How the vanishing of the differential is known.
    pub provenance: String,
}

/// With vanishing differentials homology equals the chain dimensions. An
/// Unknown status is refused, carrying the witness count.
pub fn homology_table(
    m: &PeriodicGradedDims,
    status: &DifferentialStatus,
    lo: i64,
    hi: i64,
) -> Result<HomologyTable> {
    let provenance = match &status.vanishing {
        Vanishing::Proven => "differential vanishes: no degree/action-compatible pairs".to_string(),
        Vanishing::ByOverride { provenance } => format!("differential vanishes by override: {provenance}"),
        Vanishing::Unknown => {
            return Err(Error::DifferentialUnknown {
                witnesses: status.witnesses.len(),
            })
        }
    };
    Ok(HomologyTable {
        dims: m.dims_in_window(lo, hi)?,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::BettiTable;

    fn t(a: &[i64]) -> ExponentTuple {
        ExponentTuple::new(a.to_vec()).unwrap()
    }

    fn modl(a: &[i64]) -> PeriodicGradedDims {
        period_module(&t(a), &BettiResolver::bundled()).unwrap()
    }

    #[test]
    fn period_module_2222() {
        let m = modl(&[2, 2, 2, 2]);
        assert_eq!(m.period_degrees, vec![-5, -3, -2, 0]);
        assert_eq!(m.rank, 4);
        assert_eq!(m.mode, ModuleMode::LaurentModule);
    }

    #[test]
    fn period_module_4222() {
        let m = modl(&[4, 2, 2, 2]);
        assert_eq!(m.period_degrees, vec![-5, -3, -2, -1, 0, 0, 1, 2]);
        assert_eq!(m.rank, 8);
        assert_eq!(m.mu_p, 6);
    }

    #[test]
    fn sigma_ell_rank_is_4ell() {
        for ell in 1..=4i64 {
            let m = modl(&[2 * ell, 2, 2, 2]);
            assert_eq!(m.rank as i64, 4 * ell, "ell = {ell}");
        }
    }

    #[test]
    fn dims_window_2222_all_ones() {
        let m = modl(&[2, 2, 2, 2]);
        let dims = m.dims_in_window(-6, 6).unwrap();
        assert!(dims.values().all(|&d| d == 1));
        assert_eq!(dims.len(), 13);
    }

    #[test]
    fn dims_window_4222() {
        let m = modl(&[4, 2, 2, 2]);
        let dims = m.dims_in_window(0, 5).unwrap();
        let v: Vec<usize> = (0..=5).map(|d| dims[&d]).collect();
        assert_eq!(v, vec![2, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn empty_period_gives_zeros() {
        let m = PeriodicGradedDims::from_parts(vec![], 0);
        let dims = m.dims_in_window(-3, 3).unwrap();
        assert!(dims.values().all(|&d| d == 0));
        assert!(m.positive_part(-3, 3).unwrap().values().all(|&d| d == 0));
    }

    #[test]
    fn zero_shift_dims_is_mode_error() {
        let m = PeriodicGradedDims::from_parts(vec![0, -2], 0);
        assert_eq!(m.mode, ModuleMode::LaurentSeriesVectorSpace);
        assert_eq!(m.dims_in_window(-1, 1), Err(Error::ZeroShiftInfiniteDims));
        assert_eq!(m.positive_part(-1, 1), Err(Error::ZeroShiftInfiniteDims));
    }

    #[test]
    fn positive_part_counts_nonnegative_shifts_only() {
        let m = modl(&[2, 2, 2, 2]);
        // Fundamental degrees -5, -3, -2, 0 with shift 4: k >= 0 keeps
        // exactly {-5, -3, -2, -1} plus every degree >= 0.
        let dims = m.positive_part(-8, 8).unwrap();
        for d in -8..=8 {
            let expected = usize::from(d >= 0 || d == -5 || d == -3 || d == -2 || d == -1);
            assert_eq!(dims[&d], expected, "degree {d}");
        }

        let m = modl(&[4, 2, 2, 2]);
        assert_eq!(m.positive_dim_at(-7).unwrap(), 0);
        assert!(m.positive_dim_at(0).unwrap() >= 1);
    }

    #[test]
    fn positive_part_bounded_by_dims_with_equality_above_max() {
        let m = modl(&[4, 2, 2, 2]);
        let all = m.dims_in_window(-12, 12).unwrap();
        let pos = m.positive_part(-12, 12).unwrap();
        for d in -12..=12 {
            assert!(pos[&d] <= all[&d]);
            if d >= *m.period_degrees.last().unwrap() {
                assert_eq!(pos[&d], all[&d]);
            }
        }
    }

    #[test]
    fn detector_all_two() {
        // Degree gaps of one between distinct strata exist for n = 3 but not
        // for n >= 4.
        for (n, expect_proven) in [(3usize, false), (4, true), (5, true)] {
            let tuple = t(&vec![2; n + 1]);
            let resolver = BettiResolver::bundled();
            let m = period_module(&tuple, &resolver).unwrap();
            let max_l = detector_required_max_l(&tuple, &m);
            let set = enumerate_strata(&tuple, max_l, &resolver).unwrap();
            let table = GeneratorTable::from_strata(&set);
            let status = detect_vanishing_differential(&tuple, &table, &resolver, None).unwrap();
            if expect_proven {
                assert_eq!(status.vanishing, Vanishing::Proven, "n = {n}");
                assert!(status.witnesses.is_empty());
            } else {
                assert_eq!(status.vanishing, Vanishing::Unknown, "n = {n}");
                assert!(!status.witnesses.is_empty());
                let with = detect_vanishing_differential(
                    &tuple,
                    &table,
                    &resolver,
                    Some("external computation"),
                )
                .unwrap();
                assert_eq!(
                    with.vanishing,
                    Vanishing::ByOverride {
                        provenance: "external computation".into()
                    }
                );
            }
        }
    }

    #[test]
    fn detector_insufficient_coverage_is_loud() {
        let tuple = t(&[2, 2, 2, 2]);
        let resolver = BettiResolver::bundled();
        let set = enumerate_strata(&tuple, 3, &resolver).unwrap();
        let table = GeneratorTable::from_strata(&set);
        assert!(matches!(
            detect_vanishing_differential(&tuple, &table, &resolver, None),
            Err(Error::InsufficientCoverage { .. })
        ));
    }

    #[test]
    fn detector_constants_only_toy() {
        // A table holding only the constants stratum has no cross-action
        // pairs at all.
        let tuple = t(&[2, 2, 2, 2]);
        let resolver = BettiResolver::bundled();
        let set = enumerate_strata(&tuple, 1, &resolver).unwrap();
        assert_eq!(set.strata.len(), 1);
        let mut table = GeneratorTable::from_strata(&set);
        table.max_l = detector_required_max_l(&tuple, &modl(&[2, 2, 2, 2]));
        let status = detect_vanishing_differential(&tuple, &table, &resolver, None).unwrap();
        assert_eq!(status.vanishing, Vanishing::Proven);
    }

    #[test]
    fn homology_requires_settled_differential() {
        let m = modl(&[2, 2, 2, 2]);
        let unknown = DifferentialStatus {
            vanishing: Vanishing::Unknown,
            witnesses: vec![],
        };
        assert_eq!(
            homology_table(&m, &unknown, -4, 4),
            Err(Error::DifferentialUnknown { witnesses: 0 })
        );
        let proven = DifferentialStatus {
            vanishing: Vanishing::Proven,
            witnesses: vec![],
        };
        let table = homology_table(&m, &proven, -4, 4).unwrap();
        assert_eq!(table.dims, m.dims_in_window(-4, 4).unwrap());
    }

    #[test]
    fn shift_equivariance() {
        let m = modl(&[6, 2, 2, 2]);
        for d in -20..=20 {
            assert_eq!(m.dim_at(d).unwrap(), m.dim_at(d + m.mu_p).unwrap());
        }
    }

    #[test]
    fn unit_present_in_degree_zero() {
        for a in [vec![2, 2, 2], vec![2, 2, 2, 2], vec![5, 2, 2], vec![8, 2, 2, 2]] {
            let m = modl(&a);
            assert!(m.dim_at(0).unwrap() >= 1, "{a:?}");
        }
        // Zero shift: the unit is still a fundamental generator.
        assert!(modl(&[2, 2]).period_degrees.contains(&0));
    }

    #[test]
    fn synthetic_user_betti_flows_through() {
        let tuple = t(&[3, 3, 3]);
        let mut resolver = BettiResolver::bundled();
        let mut user = BettiTable::empty();
        user.insert(vec![3, 3, 3], vec![1, 2, 2, 1]).unwrap();
        user.insert(vec![3, 3], vec![3, 3]).unwrap();
        resolver.add_user_table(&user);
        let m = period_module(&tuple, &resolver).unwrap();
        // Constants contribute 6 generators, no interior strata for (3,3,3).
        assert_eq!(m.rank, 6);
        assert_eq!(m.mode, ModuleMode::LaurentSeriesVectorSpace);
    }
}
