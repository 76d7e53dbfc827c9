//! Builders for the graded rings this tool cross-checks against, plus the
//! free-module encoding used by the module comparisons.

use super::{GradedPresentation, Monomial};
use crate::error::{Error, Result};

/// Builds a presentation from generator names/degrees and relations given as
/// one or two monomials (each a list of generator names with multiplicity).
pub(crate) fn try_build(
    gens: &[(&str, i64)],
    rels: Vec<(Vec<&str>, Option<Vec<&str>>)>,
) -> Result<GradedPresentation> {
    let names: Vec<&str> = gens.iter().map(|(n, _)| *n).collect();
    let monomial = |words: &[&str]| -> Monomial {
        let mut m = vec![0u32; names.len()];
        for w in words {
            let i = names
                .iter()
                .position(|n| n == w)
                .unwrap_or_else(|| panic!("unknown generator {w}"));
            m[i] += 1;
        }
        m
    };
    let relations = rels
        .into_iter()
        .map(|(first, second)| {
            let mut rel = vec![monomial(&first)];
            if let Some(second) = second {
                rel.push(monomial(&second));
            }
            rel
        })
        .collect();
    GradedPresentation::new(
        gens.iter().map(|(n, d)| (n.to_string(), *d)).collect(),
        relations,
    )
}

pub(crate) fn build(
    gens: &[(&str, i64)],
    rels: Vec<(Vec<&str>, Option<Vec<&str>>)>,
) -> GradedPresentation {
    try_build(gens, rels).expect("valid presentation")
}

/// GF(2) loop-space homology of the n-sphere in the product grading:
/// `GF(2)[a, u] / (a^2)` with `|a| = -n`, `|u| = n - 1`.
pub fn loop_homology_sphere(n: i64) -> GradedPresentation {
    build(
        &[("a", -n), ("u", n - 1)],
        vec![(vec!["a", "a"], None)],
    )
}

/// The full ring on the unit cotangent bundle of the n-sphere:
/// `GF(2)[a, u, u^-1] / (a^2)` with `|a| = -n`, `|u| = n - 1`.
pub fn rfh_ring_sphere(n: i64) -> GradedPresentation {
    build(
        &[("a", -n), ("u", n - 1), ("u_inv", -(n - 1))],
        vec![
            (vec!["a", "a"], None),
            (vec!["u", "u_inv"], Some(vec![])),
        ],
    )
}

/// Symplectic homology ring of the A_k surface singularity filling, `k >= 2`.
///
/// Generators `s_1..s_k` in degree -2, `t1` in degree -1, `t0` in degree 0
/// and `tm2` in degree 2; for odd `k` there is an extra generator `um1` in
/// degree 1 and the constants `alpha = beta = 1` exactly when `4 | (k + 1)`.
pub fn ak_surface_sh(k: i64) -> Result<GradedPresentation> {
    if k < 2 {
        return Err(Error::InvalidPresentation(format!(
            "A_k surface rings need k >= 2, got {k}"
        )));
    }
    let k = k as usize;
    let s_names: Vec<String> = (1..=k).map(|i| format!("s{i}")).collect();
    let mut gens: Vec<(&str, i64)> = s_names.iter().map(|n| (n.as_str(), -2)).collect();
    gens.push(("t1", -1));
    gens.push(("t0", 0));
    let even = k.is_multiple_of(2);
    if !even {
        gens.push(("um1", 1));
    }
    gens.push(("tm2", 2));

    let mut rels: Vec<(Vec<&str>, Option<Vec<&str>>)> = Vec::new();
    for i in 0..k {
        for j in i..k {
            rels.push((vec![&s_names[i], &s_names[j]], None));
        }
    }
    let t0_pow = |count: usize| -> Vec<&str> { vec!["t0"; count] };
    if even {
        for s in &s_names {
            for t in ["t1", "t0", "tm2"] {
                rels.push((vec![s.as_str(), t], None));
            }
        }
        rels.push((vec!["t1", "t1"], None));
        rels.push((t0_pow(k), None));
    } else {
        for s in &s_names {
            rels.push((vec![s.as_str(), "t1"], None));
            rels.push((vec![s.as_str(), "t0"], None));
        }
        rels.push((vec!["t1", "t1"], None));
        for s in &s_names {
            let mut rhs = t0_pow(k - 1);
            rhs.push("t1");
            rels.push((vec![s.as_str(), "um1"], Some(rhs)));
        }
        for s in &s_names {
            rels.push((vec![s.as_str(), "tm2"], Some(t0_pow(k))));
        }
        rels.push((vec!["t0", "um1"], Some(vec!["t1", "tm2"])));
        let unit_constants = (k + 1).is_multiple_of(4);
        if unit_constants {
            rels.push((vec!["t1", "um1"], Some(t0_pow(k))));
            let mut rhs = t0_pow(k - 1);
            rhs.push("tm2");
            rels.push((vec!["um1", "um1"], Some(rhs)));
        } else {
            rels.push((vec!["t1", "um1"], None));
            rels.push((vec!["um1", "um1"], None));
        }
    }
    try_build(&gens, rels)
}

/// The free module on the degree multiset `degrees` over the Laurent ring
/// whose variable has degree `shift`, encoded as a commutative algebra: the
/// degree-0 unit represents one generator (so `degrees` must contain 0) and
/// the remaining generators pairwise multiply to zero.
pub fn free_module_ring(degrees: &[i64], shift: i64) -> Result<GradedPresentation> {
    if shift == 0 {
        return Err(Error::InvalidPresentation(
            "free-module encoding needs a nonzero shift".into(),
        ));
    }
    let mut rest = degrees.to_vec();
    let unit = rest
        .iter()
        .position(|&d| d == 0)
        .ok_or_else(|| Error::InvalidPresentation("degree multiset must contain 0".into()))?;
    rest.remove(unit);

    let g_names: Vec<String> = rest.iter().enumerate().map(|(i, _)| format!("g{i}")).collect();
    let mut gens: Vec<(&str, i64)> = vec![("s", shift), ("s_inv", -shift)];
    for (name, &d) in g_names.iter().zip(&rest) {
        gens.push((name.as_str(), d));
    }
    let mut rels: Vec<(Vec<&str>, Option<Vec<&str>>)> =
        vec![(vec!["s", "s_inv"], Some(vec![]))];
    for i in 0..g_names.len() {
        for j in i..g_names.len() {
            rels.push((vec![&g_names[i], &g_names[j]], None));
        }
    }
    try_build(&gens, rels)
}
