//! Morse-Bott critical submanifolds of the periodic Reeb flow.
//!
//! At integer time `L` (period `L * pi/2`) the closed-orbit locus is the
//! sub-link cut out by the coordinates whose exponent divides `L`. This
//! module enumerates those strata, computes their Robbin-Salamon indices via
//! the floor/ceil formula, and resolves their GF(2) Betti numbers from user
//! config, bundled data or the closed-form built-ins.

use crate::error::{fmt_tuple, Error, Result};
use crate::tuple::{gcd, ExponentTuple};
use serde::Serialize;
use std::collections::BTreeMap;

/// Where a stratum's Betti numbers came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BettiSource {
    BuiltIn,
    UserConfig,
}

/// GF(2) Betti numbers keyed by sorted exponent sub-tuple.
///
/// The file format is a JSON object mapping a comma-joined sorted exponent
/// key (e.g. `"2,2,2,4"`) to the array `[b_0, ..., b_dim]`. Every list must
/// have even length (the stratum dimension is odd) and be palindromic with
/// `b_0 >= 1`, which is GF(2) Poincare duality for a closed manifold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<Vec<i64>, Vec<usize>>,
}

impl BettiTable {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_json_str(json: &str) -> Result<Self> {
        let raw: BTreeMap<String, Vec<usize>> = serde_json::from_str(json)
            .map_err(|e| Error::InvalidBettiTable(e.to_string()))?;
        let mut table = BettiTable::empty();
        for (key, betti) in raw {
            let sub_tuple = parse_key(&key)?;
            validate_entry(&key, &sub_tuple, &betti)?;
            table.entries.insert(sub_tuple, betti);
        }
        Ok(table)
    }

    /// Inserts the other table's entries, overriding existing keys.
    pub fn merge_over(&mut self, other: &BettiTable) {
        for (k, v) in &other.entries {
            self.entries.insert(k.clone(), v.clone());
        }
    }

    pub fn insert(&mut self, sub_tuple: Vec<i64>, betti: Vec<usize>) -> Result<()> {
        let mut key = sub_tuple;
        key.sort_unstable();
        validate_entry(&fmt_tuple(&key), &key, &betti)?;
        self.entries.insert(key, betti);
        Ok(())
    }

    pub fn get(&self, sub_tuple: &[i64]) -> Option<&Vec<usize>> {
        self.entries.get(sub_tuple)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        let raw: BTreeMap<String, &Vec<usize>> = self
            .entries
            .iter()
            .map(|(k, v)| (fmt_tuple(k), v))
            .collect();
        serde_json::to_string_pretty(&raw).expect("betti table serializes")
    }
}

fn parse_key(key: &str) -> Result<Vec<i64>> {
    let parts: std::result::Result<Vec<i64>, _> =
        key.split(',').map(|s| s.trim().parse::<i64>()).collect();
    let mut sub = parts.map_err(|_| Error::InvalidBettiEntry {
        key: key.to_string(),
        reason: "key must be comma-joined integers".into(),
    })?;
    sub.sort_unstable();
    Ok(sub)
}

fn validate_entry(key: &str, sub_tuple: &[i64], betti: &[usize]) -> Result<()> {
    let err = |reason: String| Error::InvalidBettiEntry {
        key: key.to_string(),
        reason,
    };
    if sub_tuple.len() < 2 {
        return Err(err("sub-tuple must have length >= 2".into()));
    }
    if sub_tuple.iter().any(|&a| a < 2) {
        return Err(err("exponents must be >= 2".into()));
    }
    let dim = 2 * sub_tuple.len() as i64 - 3;
    if betti.len() as i64 != dim + 1 {
        return Err(err(format!(
            "expected {} Betti numbers for a {}-dimensional stratum, got {}",
            dim + 1,
            dim,
            betti.len()
        )));
    }
    if betti[0] < 1 {
        return Err(err("b_0 must be >= 1".into()));
    }
    let palindromic = betti.iter().eq(betti.iter().rev());
    if !palindromic {
        return Err(err("Betti list must be palindromic (GF(2) Poincare duality)".into()));
    }
    Ok(())
}

/// Layered Betti lookup: user config first, then the data-file defaults,
/// then the closed-form built-ins.
#[derive(Debug, Clone, Default)]
pub struct BettiResolver {
    user: BettiTable,
    defaults: BettiTable,
}

impl BettiResolver {
    /// Resolver with only the closed-form built-ins.
    pub fn bare() -> Self {
        Self::default()
    }

    /// Resolver backed by the bundled data files.
    pub fn bundled() -> Self {
        BettiResolver {
            user: BettiTable::empty(),
            defaults: crate::data::bundled_betti_table(),
        }
    }

    /// Replaces the data-file defaults (e.g. from an alternate data directory).
    pub fn with_defaults(mut self, defaults: BettiTable) -> Self {
        self.defaults = defaults;
        self
    }

    /// Adds a user-config table; later additions override earlier ones
    /// key-by-key.
    pub fn add_user_table(&mut self, table: &BettiTable) {
        self.user.merge_over(table);
    }

    /// Resolution order: user config, then built-in (data files, then the
    /// closed forms), then a `MissingBetti` error naming the sub-tuple.
    pub fn resolve(&self, sub_tuple: &[i64]) -> Result<(Vec<usize>, BettiSource)> {
        let mut key = sub_tuple.to_vec();
        key.sort_unstable();
        if let Some(betti) = self.user.get(&key) {
            return Ok((betti.clone(), BettiSource::UserConfig));
        }
        if let Some(betti) = self.defaults.get(&key) {
            return Ok((betti.clone(), BettiSource::BuiltIn));
        }
        if let Some(betti) = closed_form_betti(&key) {
            return Ok((betti, BettiSource::BuiltIn));
        }
        Err(Error::MissingBetti { sub_tuple: key })
    }
}

/// Closed-form GF(2) Betti numbers.
///
/// An all-2 tuple of length `m >= 3` is the unit cotangent bundle of the
/// `(m-1)`-sphere: Betti 1 in degrees `0, m-2, m-1, 2m-3`. A pair `(p, q)`
/// is a torus link of `gcd(p, q)` circles: `b_0 = b_1 = gcd`.
fn closed_form_betti(sorted_sub: &[i64]) -> Option<Vec<usize>> {
    let m = sorted_sub.len();
    if m >= 3 && sorted_sub.iter().all(|&a| a == 2) {
        let dim = 2 * m - 3;
        let mut betti = vec![0usize; dim + 1];
        for d in [0, m - 2, m - 1, 2 * m - 3] {
            betti[d] = 1;
        }
        return Some(betti);
    }
    if m == 2 {
        let g = gcd(sorted_sub[0], sorted_sub[1]) as usize;
        return Some(vec![g, g]);
    }
    None
}

/// One Morse-Bott critical submanifold of closed Reeb orbits.
///
/// `l = 0` is the constants stratum (the link itself, `mu_rs = 0`); for
/// `l >= 1` the stratum is nonempty exactly when at least two exponents
/// divide `l`, and is the Brieskorn link of the active sub-tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// Time parameter: the orbit period is `l * pi/2`.
    pub l: i64,
    /// Indices of the coordinates whose exponent divides `l` (all of them
    /// for `l = 0`).
    pub active: Vec<usize>,
    /// Exponents of the active coordinates, sorted.
    pub sub_tuple: Vec<i64>,
    /// Dimension of the stratum (odd, `>= 1`).
    pub dim: i64,
    /// Robbin-Salamon index (0 for the constants stratum).
    pub mu_rs: i64,
    /// GF(2) Betti numbers `b_0 ..= b_dim`.
    pub betti: Vec<usize>,
    pub betti_source: BettiSource,
}

impl Stratum {
    /// Number of chain generators carried by the stratum (a perfect Morse
    /// function contributes one generator per Betti unit).
    pub fn generator_count(&self) -> usize {
        self.betti.iter().sum()
    }
}

/// A contiguous enumeration of the nonempty strata with `0 <= l <= max_l`.
#[derive(Debug, Clone)]
pub struct StrataSet {
    pub tuple: ExponentTuple,
    pub max_l: i64,
    pub strata: Vec<Stratum>,
}

impl StrataSet {
    pub fn stratum_at(&self, l: i64) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.l == l)
    }
}

/// Robbin-Salamon index of the stratum at time `l >= 1`:
/// `sum_j (floor(l/a_j) + ceil(l/a_j)) - 2l`, exact.
pub fn robbin_salamon_index(tuple: &ExponentTuple, l: i64) -> Result<i64> {
    if l < 1 {
        return Err(Error::InvalidTime { l });
    }
    let mut total = -2 * l;
    for &a in tuple.exponents() {
        total += l / a + (l + a - 1) / a;
    }
    Ok(total)
}

/// Indices of the exponents dividing `l`. For `l = 0` every index is active.
pub fn active_set(tuple: &ExponentTuple, l: i64) -> Vec<usize> {
    if l == 0 {
        return (0..tuple.exponents().len()).collect();
    }
    tuple
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &a)| l % a == 0)
        .map(|(j, _)| j)
        .collect()
}

/// Enumerates the nonempty strata with `0 <= l <= max_l`, resolving Betti
/// data per stratum. The constants stratum at `l = 0` is always included.
pub fn enumerate_strata(
    tuple: &ExponentTuple,
    max_l: i64,
    resolver: &BettiResolver,
) -> Result<StrataSet> {
    let mut strata = Vec::new();
    let full = tuple.sorted_exponents();
    let (betti, betti_source) = resolver.resolve(&full)?;
    strata.push(Stratum {
        l: 0,
        active: (0..tuple.exponents().len()).collect(),
        sub_tuple: full,
        dim: tuple.dim(),
        mu_rs: 0,
        betti,
        betti_source,
    });
    for l in 1..=max_l {
        let active = active_set(tuple, l);
        if active.len() < 2 {
            continue;
        }
        let mut sub_tuple: Vec<i64> = active.iter().map(|&j| tuple.exponents()[j]).collect();
        sub_tuple.sort_unstable();
        let (betti, betti_source) = resolver.resolve(&sub_tuple)?;
        strata.push(Stratum {
            l,
            dim: 2 * active.len() as i64 - 3,
            mu_rs: robbin_salamon_index(tuple, l)?,
            active,
            sub_tuple,
            betti,
            betti_source,
        });
    }
    Ok(StrataSet {
        tuple: tuple.clone(),
        max_l,
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: &[i64]) -> ExponentTuple {
        ExponentTuple::new(a.to_vec()).unwrap()
    }

    #[test]
    fn robbin_salamon_examples() {
        // 2N(n-1) at N=1, n=3.
        assert_eq!(robbin_salamon_index(&t(&[2, 2, 2, 2]), 2).unwrap(), 4);
        // Direct evaluation (0+1) + 3*(1+1) - 4 = 3.
        assert_eq!(robbin_salamon_index(&t(&[4, 2, 2, 2]), 2).unwrap(), 3);
        // At the full period the index is twice the Maslov index.
        for a in [
            vec![2, 2, 2, 2],
            vec![6, 2, 2, 2],
            vec![5, 2, 2],
            vec![3, 4, 5],
            vec![7, 5, 3],
        ] {
            let s = t(&a);
            assert_eq!(
                robbin_salamon_index(&s, s.period_l()).unwrap(),
                2 * s.maslov()
            );
        }
    }

    #[test]
    fn robbin_salamon_rejects_nonpositive_l() {
        assert_eq!(
            robbin_salamon_index(&t(&[2, 2]), 0),
            Err(Error::InvalidTime { l: 0 })
        );
        assert_eq!(
            robbin_salamon_index(&t(&[2, 2]), -3),
            Err(Error::InvalidTime { l: -3 })
        );
    }

    #[test]
    fn enumeration_4222() {
        let set = enumerate_strata(&t(&[4, 2, 2, 2]), 4, &BettiResolver::bundled()).unwrap();
        let ls: Vec<i64> = set.strata.iter().map(|s| s.l).collect();
        assert_eq!(ls, vec![0, 2, 4]);
        let s2 = set.stratum_at(2).unwrap();
        assert_eq!(s2.active, vec![1, 2, 3]);
        assert_eq!(s2.dim, 3);
        let s4 = set.stratum_at(4).unwrap();
        assert_eq!(s4.active, vec![0, 1, 2, 3]);
        assert_eq!(s4.dim, 5);
    }

    #[test]
    fn enumeration_2222_and_522() {
        let set = enumerate_strata(&t(&[2, 2, 2, 2]), 2, &BettiResolver::bundled()).unwrap();
        let ls: Vec<i64> = set.strata.iter().map(|s| s.l).collect();
        assert_eq!(ls, vec![0, 2]);
        assert!(set.strata.iter().all(|s| s.dim == 5));

        let set = enumerate_strata(&t(&[5, 2, 2]), 5, &BettiResolver::bundled()).unwrap();
        let ls: Vec<i64> = set.strata.iter().map(|s| s.l).collect();
        assert_eq!(ls, vec![0, 2, 4]);
        assert_eq!(set.stratum_at(2).unwrap().dim, 1);
        assert_eq!(set.stratum_at(2).unwrap().active, vec![1, 2]);
        // l = 5 activates only the first coordinate: empty stratum.
        assert!(set.stratum_at(5).is_none());
    }

    #[test]
    fn builtin_betti_values() {
        let r = BettiResolver::bundled();
        assert_eq!(
            r.resolve(&[2, 2, 2]).unwrap(),
            (vec![1, 1, 1, 1], BettiSource::BuiltIn)
        );
        assert_eq!(
            r.resolve(&[2, 2]).unwrap(),
            (vec![2, 2], BettiSource::BuiltIn)
        );
        assert_eq!(
            r.resolve(&[4, 2, 2, 2]).unwrap(),
            (vec![1, 0, 1, 1, 0, 1], BettiSource::BuiltIn)
        );
        // Lens spaces: b_1 = b_2 = 1 iff the large exponent is even.
        assert_eq!(r.resolve(&[2, 2, 4]).unwrap().0, vec![1, 1, 1, 1]);
        assert_eq!(r.resolve(&[2, 2, 5]).unwrap().0, vec![1, 0, 0, 1]);
    }

    #[test]
    fn missing_betti_names_the_sub_tuple() {
        let r = BettiResolver::bundled();
        assert_eq!(
            r.resolve(&[7, 5, 3]),
            Err(Error::MissingBetti {
                sub_tuple: vec![3, 5, 7]
            })
        );
    }

    #[test]
    fn user_config_overrides_builtins() {
        let mut r = BettiResolver::bundled();
        let mut user = BettiTable::empty();
        user.insert(vec![2, 2, 2], vec![3, 1, 1, 3]).unwrap();
        r.add_user_table(&user);
        assert_eq!(
            r.resolve(&[2, 2, 2]).unwrap(),
            (vec![3, 1, 1, 3], BettiSource::UserConfig)
        );
        // Other keys still come from the built-ins.
        assert_eq!(r.resolve(&[2, 2]).unwrap().1, BettiSource::BuiltIn);
    }

    #[test]
    fn betti_validation() {
        let mut table = BettiTable::empty();
        assert!(table.insert(vec![2, 2], vec![2, 2]).is_ok());
        // Not palindromic.
        assert!(table.insert(vec![2, 2, 2], vec![1, 1, 0, 1]).is_err());
        // Wrong length for the stratum dimension.
        assert!(table.insert(vec![2, 2, 2], vec![1, 1, 1]).is_err());
        // b_0 = 0.
        assert!(table.insert(vec![2, 2], vec![0, 0]).is_err());
        assert!(BettiTable::from_json_str("{\"2,2\": [2,2]}").is_ok());
        assert!(BettiTable::from_json_str("{\"x\": [2,2]}").is_err());
        assert!(BettiTable::from_json_str("not json").is_err());
    }

    #[test]
    fn active_set_periodicity() {
        let s = t(&[6, 4, 2, 2]);
        for l in 1..=(3 * s.period_l()) {
            assert_eq!(active_set(&s, l), active_set(&s, l + s.period_l()));
        }
    }
}
