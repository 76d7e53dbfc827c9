//! Chain-level generator tables in the product grading, index-positivity
//! classification, and the broken-curve dimension arithmetic.
//!
//! A generator is a critical point of a perfect Morse function on a stratum.
//! Its product degree is `mu_rs - (dim - 1)/2 + ind - n` (with `mu_rs = 0`
//! for the constants stratum), its Conley-Zehnder degree is larger by `n`,
//! and its action is the exact rational `l / period_l`, normalized so one
//! Reeb period has action 1.

use crate::error::{Error, Result};
use crate::strata::{Stratum, StrataSet};
use crate::tuple::{gcd, ExponentTuple};
use serde::Serialize;

/// Exact rational action, reduced. Ordered by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Action {
    numer: i64,
    denom: i64,
}

impl Action {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom > 0, "action denominator must be positive");
        let g = gcd(numer, denom).max(1);
        Action {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }
}

impl PartialOrd for Action {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Action {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.numer as i128 * other.denom as i128).cmp(&(other.numer as i128 * self.denom as i128))
    }
}

impl std::fmt::Display for Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl Serialize for Action {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One chain generator: a Morse critical point on a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub stratum_l: i64,
    pub morse_index: i64,
    pub product_degree: i64,
    pub cz_degree: i64,
    pub action: Action,
}

/// Product degree of the Morse index `ind` generator on `stratum`.
pub fn product_degree(stratum: &Stratum, ind: i64, n: i64) -> i64 {
    stratum.mu_rs - (stratum.dim - 1) / 2 + ind - n
}

fn generators_of(stratum: &Stratum, tuple: &ExponentTuple) -> Vec<Generator> {
    let n = tuple.n();
    let mut out = Vec::new();
    for (ind, &b) in stratum.betti.iter().enumerate() {
        let ind = ind as i64;
        let degree = product_degree(stratum, ind, n);
        for _ in 0..b {
            out.push(Generator {
                stratum_l: stratum.l,
                morse_index: ind,
                product_degree: degree,
                cz_degree: degree + n,
                action: Action::new(stratum.l, tuple.period_l()),
            });
        }
    }
    out
}

/// The principal-orbit class: the maximum on the first full-period stratum.
/// Its product degree is the degree shift and its action is 1.
pub fn s_class(tuple: &ExponentTuple) -> Generator {
    Generator {
        stratum_l: tuple.period_l(),
        morse_index: tuple.dim(),
        product_degree: tuple.degree_shift(),
        cz_degree: tuple.degree_shift() + tuple.n(),
        action: Action::new(1, 1),
    }
}

/// A generator list tabulated from an enumerated strata range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorTable {
    pub generators: Vec<Generator>,
    /// Strata coverage the table was built from (`0 <= l <= max_l`).
    pub max_l: i64,
}

impl GeneratorTable {
    /// Tables every generator of the supplied strata, sorted by
    /// (action, degree, Morse index).
    pub fn from_strata(set: &StrataSet) -> GeneratorTable {
        let mut generators: Vec<Generator> = set
            .strata
            .iter()
            .flat_map(|s| generators_of(s, &set.tuple))
            .collect();
        generators.sort_by(|a, b| {
            a.action
                .cmp(&b.action)
                .then(a.product_degree.cmp(&b.product_degree))
                .then(a.morse_index.cmp(&b.morse_index))
        });
        GeneratorTable {
            generators,
            max_l: set.max_l,
        }
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.product_degree).collect()
    }
}

/// Complete generator table for a product-degree window.
///
/// The supplied strata must cover every period that can still land in the
/// window; with a nonzero degree shift this is checked exactly, and with a
/// zero shift every degree recurs in every period, so a degree window alone
/// is not coverable.
pub fn generator_table(set: &StrataSet, lo: i64, hi: i64) -> Result<GeneratorTable> {
    let tuple = &set.tuple;
    let mu_p = tuple.degree_shift();
    if mu_p == 0 {
        return Err(Error::NeedsFinitePeriodWindow);
    }
    let required = required_max_l_for_window(set, lo, hi)?;
    if set.max_l < required {
        return Err(Error::InsufficientCoverage {
            required,
            supplied: set.max_l,
        });
    }
    let mut table = GeneratorTable::from_strata(set);
    table
        .generators
        .retain(|g| lo <= g.product_degree && g.product_degree <= hi);
    Ok(table)
}

/// Smallest `max_l` whose strata contain every generator with product degree
/// in `[lo, hi]`, assuming a nonzero degree shift.
fn required_max_l_for_window(set: &StrataSet, lo: i64, hi: i64) -> Result<i64> {
    let tuple = &set.tuple;
    let period_l = tuple.period_l();
    let mu_p = tuple.degree_shift();
    debug_assert!(mu_p != 0);
    if set.max_l < period_l - 1 {
        // Need one full period of degrees to bound the rest.
        return Ok(period_l - 1);
    }
    let mut min_deg = i64::MAX;
    let mut max_deg = i64::MIN;
    for s in set.strata.iter().filter(|s| s.l < period_l) {
        for (ind, &b) in s.betti.iter().enumerate() {
            if b > 0 {
                let d = product_degree(s, ind as i64, tuple.n());
                min_deg = min_deg.min(d);
                max_deg = max_deg.max(d);
            }
        }
    }
    // Periods k >= 0 contribute degrees in [min_deg, max_deg] + k * mu_p.
    let last_period = if mu_p > 0 {
        if hi < min_deg {
            0
        } else {
            (hi - min_deg) / mu_p
        }
    } else if lo > max_deg {
        0
    } else {
        (lo - max_deg) / mu_p
    };
    Ok((last_period + 1) * period_l - 1)
}

/// Index-positivity classes, strongest first. Equality with a threshold
/// counts as failure; all inequalities are strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IndexClass {
    /// Minimum Conley-Zehnder degree > 3.
    ProductIndexPositive,
    /// Minimum Conley-Zehnder degree > 4 - n.
    IndexPositiveStrong,
    /// Minimum Conley-Zehnder degree > 3 - n, usable only with a filling.
    IndexPositiveWithFilling,
    NotIndexPositive,
    /// Negative index shift: Conley-Zehnder degrees fall without bound along
    /// later periods, so every lower bound eventually fails.
    FailsForLargeL,
}

impl IndexClass {
    /// Whether the class implies index-positivity (`> 4 - n`).
    pub fn is_index_positive(self) -> bool {
        matches!(
            self,
            IndexClass::ProductIndexPositive | IndexClass::IndexPositiveStrong
        )
    }
}

/// Which structural statement applies to the homology module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremCase {
    /// Free, finitely generated module over the Laurent polynomials.
    SummaryTheoremLaurent,
    /// Finite-dimensional vector space over the Laurent-series field.
    SummaryTheoremLaurentSeries,
    NotApplicable,
}

/// Outcome of the index-condition check over one Reeb period.
///
/// The minimum generator Conley-Zehnder degree of each stratum,
/// `mu_rs - (dim - 1)/2`, stands in for the indices of all orbits in the
/// stratum (the Morse-Bott minimum convention).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub classification: IndexClass,
    /// Stratum time and value attaining the one-period minimum.
    pub min_cz_witness: (i64, i64),
    pub theorem_case: TheoremCase,
    pub filling_assumed: bool,
    /// Fixed description of the orbit-index convention used.
    pub convention: &'static str,
}

pub const MORSE_BOTT_MIN_CONVENTION: &str =
    "Morse-Bott minimum convention: each stratum is represented by its lowest transversal Conley-Zehnder degree";

/// Classifies the index conditions from the strata of one full period.
///
/// With a nonnegative degree shift the one-period minimum is global; with a
/// negative shift the degrees fall without bound and the report says so.
pub fn check_index_positivity(set: &StrataSet, filling_assumed: bool) -> Result<IndexReport> {
    let tuple = &set.tuple;
    let period_l = tuple.period_l();
    if set.max_l < period_l {
        return Err(Error::InsufficientCoverage {
            required: period_l,
            supplied: set.max_l,
        });
    }
    let n = tuple.n();
    let mut witness: Option<(i64, i64)> = None;
    for s in set.strata.iter().filter(|s| s.l >= 1 && s.l <= period_l) {
        let min_cz = s.mu_rs - (s.dim - 1) / 2;
        if witness.is_none_or(|(_, best)| min_cz < best) {
            witness = Some((s.l, min_cz));
        }
    }
    // The full-period stratum is always nonempty, so a witness exists.
    let (witness_l, min_cz) = witness.expect("one period always contains the principal stratum");

    let classification = if tuple.maslov() < 0 {
        IndexClass::FailsForLargeL
    } else if min_cz > 3 {
        IndexClass::ProductIndexPositive
    } else if min_cz > 4 - n {
        IndexClass::IndexPositiveStrong
    } else if filling_assumed && min_cz > 3 - n {
        IndexClass::IndexPositiveWithFilling
    } else {
        IndexClass::NotIndexPositive
    };

    let product_condition = classification == IndexClass::ProductIndexPositive;
    let filling_condition =
        tuple.maslov() >= 0 && filling_assumed && min_cz > 3 - n;
    let theorem_case = if tuple.maslov() != 0 && (product_condition || filling_condition) {
        TheoremCase::SummaryTheoremLaurent
    } else if tuple.maslov() == 0 && product_condition {
        TheoremCase::SummaryTheoremLaurentSeries
    } else {
        TheoremCase::NotApplicable
    };

    Ok(IndexReport {
        classification,
        min_cz_witness: (witness_l, min_cz),
        theorem_case,
        filling_assumed,
        convention: MORSE_BOTT_MIN_CONVENTION,
    })
}

/// Virtual dimension of a moduli space of Floer curves with positive
/// asymptotics `gamma_plus`, negative asymptotics `gamma_minus` and extra
/// punctures at the Reeb orbits `reeb_cz`:
/// `sum mu+ - sum mu- + n(2 - |plus| - |minus|) - sum (mu_c + n - 3)`.
pub fn virtual_dimension(
    gamma_plus: &[i64],
    gamma_minus: &[i64],
    reeb_cz: &[i64],
    n: i64,
) -> i64 {
    let plus: i64 = gamma_plus.iter().sum();
    let minus: i64 = gamma_minus.iter().sum();
    let punctures: i64 = reeb_cz.iter().map(|&mu| mu + n - 3).sum();
    plus - minus + n * (2 - gamma_plus.len() as i64 - gamma_minus.len() as i64) - punctures
}

/// Whether a zero-dimensional pair-of-pants moduli space with inputs of
/// degrees `mu1`, `mu2` excludes breaking: true iff
/// `min_reeb_cz > max(3 - |mu1|, 3 - |mu2|)`.
pub fn breaking_excluded(mu1: i64, mu2: i64, min_reeb_cz: i64) -> bool {
    min_reeb_cz > (3 - mu1.abs()).max(3 - mu2.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::{enumerate_strata, BettiResolver};
    use crate::tuple::ExponentTuple;

    fn t(a: &[i64]) -> ExponentTuple {
        ExponentTuple::new(a.to_vec()).unwrap()
    }

    fn strata(a: &[i64], max_l: i64) -> StrataSet {
        enumerate_strata(&t(a), max_l, &BettiResolver::bundled()).unwrap()
    }

    #[test]
    fn degrees_2222() {
        let set = strata(&[2, 2, 2, 2], 2);
        // The maximum on the first nonconstant stratum realizes the shift.
        assert_eq!(product_degree(set.stratum_at(2).unwrap(), 5, 3), 4);
        // The unit: maximum on the constants stratum.
        assert_eq!(product_degree(set.stratum_at(0).unwrap(), 5, 3), 0);
    }

    #[test]
    fn degrees_4222_at_l2() {
        let set = strata(&[4, 2, 2, 2], 2);
        let s2 = set.stratum_at(2).unwrap();
        let degs: Vec<i64> = (0..=3).map(|ind| product_degree(s2, ind, 3)).collect();
        assert_eq!(degs, vec![-1, 0, 1, 2]);
        assert_eq!(s2.betti, vec![1, 1, 1, 1]);
    }

    #[test]
    fn s_class_examples() {
        let g = s_class(&t(&[2, 2, 2, 2]));
        assert_eq!(g.product_degree, 4);
        assert_eq!(g.action, Action::new(1, 1));
        assert_eq!(g.stratum_l, 2);
        assert_eq!(g.morse_index, 5);
        assert_eq!(s_class(&t(&[6, 2, 2, 2])).product_degree, 8);
        assert_eq!(s_class(&t(&[2, 4, 4])).product_degree, 0);
    }

    #[test]
    fn cz_is_product_plus_n() {
        let set = strata(&[4, 2, 2, 2], 8);
        let table = GeneratorTable::from_strata(&set);
        for g in &table.generators {
            assert_eq!(g.cz_degree, g.product_degree + 3);
        }
    }

    #[test]
    fn table_sorted_and_windowed() {
        let set = strata(&[2, 2, 2, 2], 8);
        let table = generator_table(&set, -6, 6).unwrap();
        assert!(table
            .generators
            .windows(2)
            .all(|w| w[0].action <= w[1].action));
        assert!(table
            .generators
            .iter()
            .all(|g| -6 <= g.product_degree && g.product_degree <= 6));
        // Degrees 2N(n-1) + {0, -n+1, -n, -2n+1} for n = 3 within the window.
        let mut degs = table.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![-5, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn window_coverage_is_verified() {
        let set = strata(&[2, 2, 2, 2], 2);
        assert!(matches!(
            generator_table(&set, -6, 20),
            Err(Error::InsufficientCoverage { .. })
        ));
        // The stratum at L = 12 still reaches degree 19 <= 20, so coverage
        // must extend through its period.
        assert!(matches!(
            generator_table(&strata(&[2, 2, 2, 2], 11), -6, 20),
            Err(Error::InsufficientCoverage { required: 13, .. })
        ));
        let table = generator_table(&strata(&[2, 2, 2, 2], 13), -6, 20).unwrap();
        assert!(table.degrees().contains(&19));
    }

    #[test]
    fn zero_shift_window_is_rejected() {
        let mut resolver = BettiResolver::bundled();
        let mut user = crate::strata::BettiTable::empty();
        user.insert(vec![2, 4, 4], vec![1, 1, 1, 1]).unwrap();
        user.insert(vec![4, 4], vec![4, 4]).unwrap();
        resolver.add_user_table(&user);
        let set = enumerate_strata(&t(&[2, 4, 4]), 8, &resolver).unwrap();
        assert_eq!(
            generator_table(&set, -3, 3),
            Err(Error::NeedsFinitePeriodWindow)
        );
    }

    #[test]
    fn index_positivity_all_two() {
        for n in 3..=6 {
            let set = strata(&vec![2; n + 1], 2);
            let report = check_index_positivity(&set, false).unwrap();
            assert!(report.classification.is_index_positive(), "n = {n}");
            assert_eq!(report.min_cz_witness, (2, n as i64 - 1));
            // With the standard filling assumed, the Laurent-module theorem
            // applies for every n >= 3.
            let report = check_index_positivity(&set, true).unwrap();
            assert_eq!(report.theorem_case, TheoremCase::SummaryTheoremLaurent);
        }
        // Minimum degree n - 1 exceeds 3 from n = 5 on.
        assert_eq!(
            check_index_positivity(&strata(&[2; 5], 2), false)
                .unwrap()
                .classification,
            IndexClass::IndexPositiveStrong
        );
        assert_eq!(
            check_index_positivity(&strata(&[2; 6], 2), false)
                .unwrap()
                .classification,
            IndexClass::ProductIndexPositive
        );
    }

    #[test]
    fn index_positivity_lens_spaces() {
        // Reeb orbits with Conley-Zehnder degree one at l = 2; fails even
        // the filling threshold 3 - n = 1 because equality is failure.
        for k in [2, 3, 4, 5] {
            let tuple = t(&[k + 1, 2, 2]);
            let set = strata(&[k + 1, 2, 2], tuple.period_l());
            for filling in [false, true] {
                let report = check_index_positivity(&set, filling).unwrap();
                assert_eq!(report.classification, IndexClass::NotIndexPositive);
                assert_eq!(report.min_cz_witness, (2, 1));
                assert_eq!(report.theorem_case, TheoremCase::NotApplicable);
            }
        }
    }

    #[test]
    fn index_positivity_negative_shift() {
        let tuple = t(&[7, 5, 3]);
        let mut resolver = BettiResolver::bundled();
        let mut user = crate::strata::BettiTable::empty();
        user.insert(vec![3, 5, 7], vec![1, 1, 1, 1]).unwrap();
        resolver.add_user_table(&user);
        let set = enumerate_strata(&tuple, tuple.period_l(), &resolver).unwrap();
        let report = check_index_positivity(&set, true).unwrap();
        assert_eq!(report.classification, IndexClass::FailsForLargeL);
        assert_eq!(report.theorem_case, TheoremCase::NotApplicable);
    }

    #[test]
    fn virtual_dimension_examples() {
        // Unpunctured cylinder.
        assert_eq!(virtual_dimension(&[7], &[3], &[], 4), 4);
        // Pair of pants: mu1 + mu2 - mu0 - n.
        assert_eq!(virtual_dimension(&[5, 2], &[3], &[], 3), 5 + 2 - 3 - 3);
        // One extra puncture: 5 - 4 + 0 - (2 + 3 - 3) = -1.
        assert_eq!(virtual_dimension(&[5], &[4], &[2], 3), -1);
    }

    #[test]
    fn breaking_excluded_examples() {
        // Units: 4 > 3 - n for every n >= 1.
        for n in 1..6 {
            assert!(breaking_excluded(n, n, 4));
        }
        // 3 > 3 fails (strict).
        assert!(!breaking_excluded(0, 0, 3));
        // Thresholds 3 - |5| = 3 - |-5| = -2 and -1 > -2.
        assert!(breaking_excluded(5, -5, -1));
        assert!(!breaking_excluded(5, -5, -2));
    }

    #[test]
    fn action_ordering_and_display() {
        let a = Action::new(2, 4);
        assert_eq!((a.numer(), a.denom()), (1, 2));
        assert_eq!(a.to_string(), "1/2");
        assert_eq!(Action::new(0, 7).to_string(), "0");
        assert_eq!(Action::new(6, 6).to_string(), "1");
        assert!(Action::new(1, 3) < Action::new(1, 2));
        assert!(Action::new(5, 3) > Action::new(3, 2));
    }
}
