//! Independent oracle for the pair Betti built-in: the link of
//! `z_0^p + z_1^q = 0` in the 3-sphere is traced by path continuation.
//!
//! Solutions are parametrized by a phase `phi_1` and a branch
//! `phi_0 = (q*phi_1 + pi + 2*pi*k)/p`, `k = 0..p-1`. Following a component
//! once around `phi_1 -> phi_1 + 2*pi` carries branch `k` to `k + q mod p`,
//! so the component count is the number of orbits of that step, found here
//! by union-find without any gcd shortcut.

use brieskorn_core::{BettiResolver, ExponentTuple};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
    fn components(&mut self, n: usize) -> usize {
        let mut roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

fn link_components(p: usize, q: usize) -> usize {
    let mut uf = UnionFind::new(p);
    for k in 0..p {
        uf.union(k, (k + q) % p);
    }
    uf.components(p)
}

#[test]
fn pair_betti_matches_component_count() {
    let resolver = BettiResolver::bare();
    for p in 2..=9i64 {
        for q in 2..=9i64 {
            // The count is symmetric in the two exponents.
            let by_p = link_components(p as usize, q as usize);
            let by_q = link_components(q as usize, p as usize);
            assert_eq!(by_p, by_q, "({p},{q})");

            let mut key = vec![p, q];
            key.sort_unstable();
            let (betti, _) = resolver.resolve(&key).unwrap();
            assert_eq!(betti, vec![by_p, by_p], "({p},{q})");
        }
    }
}

#[test]
fn pair_strata_carry_circle_counts() {
    let t = ExponentTuple::new(vec![6, 4]).unwrap();
    let set = brieskorn_core::enumerate_strata(&t, 12, &BettiResolver::bare()).unwrap();
    let s = set.stratum_at(12).unwrap();
    assert_eq!(s.dim, 1);
    assert_eq!(s.betti, vec![link_components(6, 4), link_components(6, 4)]);
}
