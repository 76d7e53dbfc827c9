//! Finitely presented graded commutative algebras over GF(2) with integer
//! (possibly negative) generator degrees, and their degree-windowed Hilbert
//! functions.
//!
//! Relations are homogeneous GF(2) sums of monomials, so the relation
//! submodule is block-diagonal by degree and every degree is an independent
//! exact rank computation. Inverted generators are encoded by an explicit
//! inverse generator together with the relation `g * g_inv = 1`; such rings
//! have infinitely many monomials per degree, so dimensions are computed
//! under a word-length cap and reported together with a two-cap
//! stabilization flag.

pub mod gf2;
mod presentations;

pub use presentations::{ak_surface_sh, free_module_ring, loop_homology_sphere, rfh_ring_sphere};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// A monomial as an exponent vector over the presentation's generators.
pub type Monomial = Vec<u32>;

/// A finitely presented graded GF(2)-algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPresentation {
    gens: Vec<(String, i64)>,
    relations: Vec<Vec<Monomial>>,
}

#[derive(Serialize, Deserialize)]
struct PresentationFile {
    generators: Vec<GeneratorDecl>,
    relations: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorDecl {
    name: String,
    degree: i64,
}

impl GradedPresentation {
    /// Builds and validates a presentation. Relation monomials are given as
    /// exponent vectors; every relation must be homogeneous.
    pub fn new(gens: Vec<(String, i64)>, relations: Vec<Vec<Monomial>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (name, _) in &gens {
            if name.is_empty() {
                return Err(Error::InvalidPresentation("empty generator name".into()));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator name \"{name}\""
                )));
            }
        }
        let p = GradedPresentation { gens, relations };
        for (index, rel) in p.relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(Error::InvalidPresentation(format!(
                    "relation #{index} has no terms"
                )));
            }
            for m in rel {
                if m.len() != p.gens.len() {
                    return Err(Error::InvalidPresentation(format!(
                        "relation #{index} has a monomial over {} generators, expected {}",
                        m.len(),
                        p.gens.len()
                    )));
                }
            }
            let degrees: Vec<i64> = rel.iter().map(|m| p.degree_of(m)).collect();
            if degrees.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::InhomogeneousRelation {
                    index,
                    relation: p.render_relation(rel),
                    degrees,
                });
            }
        }
        Ok(p)
    }

    /// Parses the JSON file format: `generators: [{name, degree}]` and
    /// `relations: [[monomial, ...], ...]` where a monomial is a list of
    /// generator names with multiplicity.
    pub fn from_json_str(json: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(json)
            .map_err(|e| Error::InvalidPresentation(e.to_string()))?;
        let gens: Vec<(String, i64)> = file
            .generators
            .iter()
            .map(|g| (g.name.clone(), g.degree))
            .collect();
        let index: HashMap<&str, usize> = gens
            .iter()
            .enumerate()
            .map(|(i, (n, _))| (n.as_str(), i))
            .collect();
        let mut relations = Vec::new();
        for rel in &file.relations {
            let mut monomials = Vec::new();
            for names in rel {
                let mut m = vec![0u32; gens.len()];
                for name in names {
                    let &i = index.get(name.as_str()).ok_or_else(|| {
                        Error::InvalidPresentation(format!("unknown generator \"{name}\""))
                    })?;
                    m[i] += 1;
                }
                monomials.push(m);
            }
            relations.push(monomials);
        }
        GradedPresentation::new(gens, relations)
    }

    pub fn to_json_string(&self) -> String {
        let file = PresentationFile {
            generators: self
                .gens
                .iter()
                .map(|(name, degree)| GeneratorDecl {
                    name: name.clone(),
                    degree: *degree,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|rel| {
                    rel.iter()
                        .map(|m| {
                            let mut names = Vec::new();
                            for (i, &e) in m.iter().enumerate() {
                                for _ in 0..e {
                                    names.push(self.gens[i].0.clone());
                                }
                            }
                            names
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("presentation serializes")
    }

    pub fn generators(&self) -> &[(String, i64)] {
        &self.gens
    }

    pub fn relations(&self) -> &[Vec<Monomial>] {
        &self.relations
    }

    pub fn degree_of(&self, m: &Monomial) -> i64 {
        m.iter()
            .zip(&self.gens)
            .map(|(&e, (_, d))| e as i64 * d)
            .sum()
    }

    pub fn length_of(&self, m: &Monomial) -> u32 {
        m.iter().sum()
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        if self.length_of(m) == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.gens[i].0.clone()),
                _ => parts.push(format!("{}^{}", self.gens[i].0, e)),
            }
        }
        parts.join("*")
    }

    fn render_relation(&self, rel: &[Monomial]) -> String {
        rel.iter()
            .map(|m| self.render_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// All exponent vectors of total length `<= cap`.
fn enumerate_by_length(ngens: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; ngens];
    fn go(i: usize, left: u32, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[i] = e;
            go(i + 1, left - e, current, out);
        }
        current[i] = 0;
    }
    go(0, cap, &mut current, &mut out);
    out
}

/// Per-degree dimensions at one word cap, for degrees in `[lo, hi]`.
fn dims_at_cap(
    p: &GradedPresentation,
    lo: i64,
    hi: i64,
    cap: u32,
) -> BTreeMap<i64, usize> {
    let all = enumerate_by_length(p.gens.len(), cap);
    // Column bases, one per degree in the window.
    let mut columns: BTreeMap<i64, HashMap<Monomial, usize>> = BTreeMap::new();
    for m in &all {
        let d = p.degree_of(m);
        if lo <= d && d <= hi {
            let cols = columns.entry(d).or_default();
            let next = cols.len();
            cols.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows: BTreeMap<i64, Vec<gf2::Gf2Row>> = BTreeMap::new();
    for rel in &p.relations {
        let rel_deg = p.degree_of(&rel[0]);
        let max_len = rel.iter().map(|m| p.length_of(m)).max().unwrap_or(0);
        if max_len > cap {
            continue;
        }
        for mult in &all {
            if p.length_of(mult) + max_len > cap {
                continue;
            }
            let d = rel_deg + p.degree_of(mult);
            if d < lo || d > hi {
                continue;
            }
            let cols = &columns[&d];
            let mut row = gf2::Gf2Row::zero(cols.len());
            for m in rel {
                let product: Monomial = m.iter().zip(mult).map(|(&a, &b)| a + b).collect();
                row.set(cols[&product]);
            }
            rows.entry(d).or_default().push(row);
        }
    }
    let mut dims = BTreeMap::new();
    for d in lo..=hi {
        let ncols = columns.get(&d).map_or(0, |c| c.len());
        let rank = rows.remove(&d).map_or(0, gf2::rank);
        dims.insert(d, ncols - rank);
    }
    dims
}

/// Hilbert-function values with the stabilization flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertResult {
    pub dims: BTreeMap<i64, usize>,
    pub word_cap: u32,
    /// Whether the window agreed between word caps `word_cap` and
    /// `word_cap + 1`. Unconverged values must not be trusted downstream.
    pub converged: bool,
    /// Degrees where the two caps disagreed.
    pub unstable_degrees: Vec<i64>,
}

/// Per-degree GF(2) dimensions of the presentation over `[lo, hi]`,
/// computed at word caps `word_cap` and `word_cap + 1` and flagged as
/// converged when both agree on the whole window. The reported values are
/// the ones from the larger cap.
pub fn hilbert_function(
    p: &GradedPresentation,
    lo: i64,
    hi: i64,
    word_cap: u32,
) -> Result<HilbertResult> {
    if word_cap < 1 {
        return Err(Error::InvalidPresentation("word cap must be >= 1".into()));
    }
    let first = dims_at_cap(p, lo, hi, word_cap);
    let second = dims_at_cap(p, lo, hi, word_cap + 1);
    let unstable_degrees: Vec<i64> = (lo..=hi).filter(|d| first[d] != second[d]).collect();
    Ok(HilbertResult {
        dims: second,
        word_cap,
        converged: unstable_degrees.is_empty(),
        unstable_degrees,
    })
}

/// Per-degree dimensions of a monomial quotient (every relation a single
/// monomial) by direct enumeration of standard monomials. Agrees with
/// `hilbert_function` on such inputs and needs no cap.
pub fn monomial_quotient_dims(
    p: &GradedPresentation,
    lo: i64,
    hi: i64,
) -> Result<BTreeMap<i64, usize>> {
    for (index, rel) in p.relations.iter().enumerate() {
        if rel.len() != 1 {
            return Err(Error::MultiTermRelation {
                index,
                terms: rel.len(),
            });
        }
    }
    let ngens = p.gens.len();
    let rel_monomials: Vec<&Monomial> = p.relations.iter().map(|r| &r[0]).collect();

    // A generator is bounded if a pure power of it is a relation.
    let mut bound: Vec<Option<u32>> = vec![None; ngens];
    for m in &rel_monomials {
        if let Some(i) = single_support(m) {
            let b = m[i] - 1;
            bound[i] = Some(bound[i].map_or(b, |cur| cur.min(b)));
        }
    }
    let unbounded_pos = (0..ngens).any(|i| bound[i].is_none() && p.gens[i].1 > 0);
    let unbounded_neg = (0..ngens).any(|i| bound[i].is_none() && p.gens[i].1 < 0);
    let unbounded_zero: Vec<String> = (0..ngens)
        .filter(|&i| bound[i].is_none() && p.gens[i].1 == 0)
        .map(|i| p.gens[i].0.clone())
        .collect();
    if !unbounded_zero.is_empty() || (unbounded_pos && unbounded_neg) {
        let mut gens: Vec<String> = unbounded_zero;
        if unbounded_pos && unbounded_neg {
            gens.extend(
                (0..ngens)
                    .filter(|&i| bound[i].is_none())
                    .map(|i| p.gens[i].0.clone()),
            );
        }
        return Err(Error::NonTerminatingEnumeration { gens });
    }

    // Suffix bounds on the degree still reachable from generator i onward;
    // i128 sentinels stand in for +/- infinity.
    const INF: i128 = i128::MAX / 4;
    let mut min_rest = vec![0i128; ngens + 1];
    let mut max_rest = vec![0i128; ngens + 1];
    for i in (0..ngens).rev() {
        let d = p.gens[i].1 as i128;
        let (gmin, gmax) = match bound[i] {
            Some(b) => {
                let full = d * b as i128;
                (full.min(0), full.max(0))
            }
            None => {
                if d > 0 {
                    (0, INF)
                } else {
                    (-INF, 0)
                }
            }
        };
        min_rest[i] = (min_rest[i + 1] + gmin).max(-INF);
        max_rest[i] = (max_rest[i + 1] + gmax).min(INF);
    }

    let mut dims: BTreeMap<i64, usize> = (lo..=hi).map(|d| (d, 0)).collect();
    let mut exps = vec![0u32; ngens];
    count_standard(
        p,
        &rel_monomials,
        &bound,
        &min_rest,
        &max_rest,
        lo,
        hi,
        0,
        0,
        &mut exps,
        &mut dims,
    );
    Ok(dims)
}

fn single_support(m: &Monomial) -> Option<usize> {
    let mut found = None;
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn count_standard(
    p: &GradedPresentation,
    rels: &[&Monomial],
    bound: &[Option<u32>],
    min_rest: &[i128],
    max_rest: &[i128],
    lo: i64,
    hi: i64,
    i: usize,
    degree: i128,
    exps: &mut Monomial,
    dims: &mut BTreeMap<i64, usize>,
) {
    // Prune once a relation monomial supported on the assigned prefix
    // divides the current exponents.
    if rels.iter().any(|m| {
        m.iter().take(i).zip(exps.iter()).all(|(&r, &e)| r <= e)
            && m.iter().skip(i).all(|&r| r == 0)
    }) {
        return;
    }
    if degree + min_rest[i] > hi as i128 || degree + max_rest[i] < lo as i128 {
        return;
    }
    if i == p.gens.len() {
        let d = degree as i64;
        if lo <= d && d <= hi {
            *dims.get_mut(&d).unwrap() += 1;
        }
        return;
    }
    let d_i = p.gens[i].1 as i128;
    let mut e = 0u32;
    loop {
        if let Some(b) = bound[i] {
            if e > b {
                break;
            }
        }
        let new_degree = degree + d_i * e as i128;
        // Unbounded generators have nonzero degree, so this drifts
        // monotonically out of the window and the loop terminates.
        if new_degree + min_rest[i + 1] > hi as i128 {
            if d_i > 0 {
                break;
            }
        }
        if new_degree + max_rest[i + 1] < lo as i128 {
            if d_i < 0 {
                break;
            }
        }
        exps[i] = e;
        count_standard(
            p, rels, bound, min_rest, max_rest, lo, hi, i + 1, new_degree, exps, dims,
        );
        e += 1;
    }
    exps[i] = 0;
}

/// One per-degree mismatch between an algebra and a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeDiff {
    pub degree: i64,
    pub module_dim: usize,
    pub algebra_dim: usize,
}

/// Structured per-degree comparison of a presentation against graded module
/// dimensions. An empty diff means the two agree on the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub window: (i64, i64),
    pub word_cap: u32,
    pub diffs: Vec<DegreeDiff>,
}

impl CompareReport {
    pub fn is_consistent(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Compares the presentation's Hilbert function against per-degree module
/// dimensions (absent degrees count as zero). Nonconvergence is an error,
/// never a silent mismatch.
pub fn compare_to_module(
    p: &GradedPresentation,
    module_dims: &BTreeMap<i64, usize>,
    lo: i64,
    hi: i64,
    word_cap: u32,
) -> Result<CompareReport> {
    let hilbert = hilbert_function(p, lo, hi, word_cap)?;
    if !hilbert.converged {
        return Err(Error::Unconverged {
            cap: word_cap,
            next: word_cap + 1,
            degrees: hilbert.unstable_degrees,
        });
    }
    let diffs = (lo..=hi)
        .filter_map(|degree| {
            let module_dim = module_dims.get(&degree).copied().unwrap_or(0);
            let algebra_dim = hilbert.dims[&degree];
            (module_dim != algebra_dim).then_some(DegreeDiff {
                degree,
                module_dim,
                algebra_dim,
            })
        })
        .collect();
    Ok(CompareReport {
        window: (lo, hi),
        word_cap,
        diffs,
    })
}
