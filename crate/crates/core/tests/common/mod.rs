//! Shared oracles and generators for the integration test suites.
//!
//! Every oracle here is an independent implementation of the quantity
//! under test, written against plain data structures rather than the
//! semiring machinery, so agreement is meaningful.

#![allow(dead_code)]

use pathalgebra::matrix::{SemiringMatrix, ShapeHint};
use pathalgebra::semiring::{Elem, Finite, MaxPlus, Phi, Semiring};
use rand::rngs::StdRng;
use rand::Rng;

/// The eight semiring axiom families on one sampled triple, plus the
/// star fixed point for every star that succeeds.
pub fn check_semiring_laws<S: Semiring>(s: S, a: Elem<S>, b: Elem<S>, c: Elem<S>) {
    let eq = |x: Elem<S>, y: Elem<S>| s.elem_eq(&x, &y);
    let dot = |x: Elem<S>, y: Elem<S>| s.odot(x, y).expect("samples stay in range");

    assert!(eq(s.oplus(a, b), s.oplus(b, a)), "oplus commutative");
    assert!(
        eq(s.oplus(s.oplus(a, b), c), s.oplus(a, s.oplus(b, c))),
        "oplus associative"
    );
    assert!(eq(s.oplus(a, a), a), "oplus idempotent");
    assert!(eq(s.oplus(s.zero(), a), a), "phi neutral for oplus");
    assert!(eq(dot(dot(a, b), c), dot(a, dot(b, c))), "odot associative");
    assert!(
        eq(dot(a, s.oplus(b, c)), s.oplus(dot(a, b), dot(a, c))),
        "left distributivity"
    );
    assert!(
        eq(dot(s.oplus(b, c), a), s.oplus(dot(b, a), dot(c, a))),
        "right distributivity"
    );
    assert!(
        eq(dot(s.zero(), a), s.zero()) && eq(dot(a, s.zero()), s.zero()),
        "phi annihilates odot"
    );
    assert!(
        eq(dot(s.one(), a), a) && eq(dot(a, s.one()), a),
        "e is the odot identity"
    );
    for v in [a, b, c] {
        if let Ok(st) = s.star(v) {
            assert!(
                eq(st, s.oplus(s.one(), dot(v, st))),
                "star fixed point for {v:?}"
            );
        }
    }
}

/// Longest strictly increasing subsequence by checking all 2^n index
/// subsets. Exponential; callers keep n small.
pub fn lis_by_enumeration(keys: &[i64]) -> usize {
    let n = keys.len();
    assert!(n <= 20, "enumeration oracle is exponential");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let picked: Vec<i64> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| keys[i])
            .collect();
        if picked.windows(2).all(|w| w[0] < w[1]) {
            best = best.max(picked.len());
        }
    }
    best
}

/// All-pairs shortest distances by repeated edge relaxation from every
/// source. `None` marks unreachable pairs; the diagonal starts at 0.
/// Callers supply nonnegative weights, so no negative-cycle handling.
pub fn bellman_ford(n: usize, edges: &[(usize, usize, i64)]) -> Vec<Vec<Option<i64>>> {
    let mut dist = vec![vec![None; n]; n];
    for (s, row) in dist.iter_mut().enumerate() {
        row[s] = Some(0);
        for _ in 0..n.saturating_sub(1) {
            let mut changed = false;
            for &(u, v, w) in edges {
                if let Some(du) = row[u] {
                    let candidate = du + w;
                    if row[v].is_none_or(|dv| candidate < dv) {
                        row[v] = Some(candidate);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
    dist
}

/// Reflexive-transitive reachability by depth-first search from every
/// vertex.
pub fn dfs_reachability(n: usize, edges: &[(usize, usize, i64)]) -> Vec<Vec<bool>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v, _) in edges {
        adj[u].push(v);
    }
    let mut reach = vec![vec![false; n]; n];
    for s in 0..n {
        let mut stack = vec![s];
        reach[s][s] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !reach[s][v] {
                    reach[s][v] = true;
                    stack.push(v);
                }
            }
        }
    }
    reach
}

/// Widest-bottleneck values by enumerating every simple path with a
/// depth-first walk. `None` marks unreachable pairs; the diagonal is
/// the empty path, reported as `i64::MAX`. Exponential; callers keep
/// n small.
pub fn bottleneck_by_enumeration(n: usize, edges: &[(usize, usize, i64)]) -> Vec<Vec<Option<i64>>> {
    assert!(n <= 8, "path enumeration is exponential");
    let mut best = vec![vec![None; n]; n];
    for s in 0..n {
        best[s][s] = Some(i64::MAX);
        let mut on_path = vec![false; n];
        on_path[s] = true;
        walk(s, i64::MAX, &mut on_path, &mut best[s], edges);
    }
    return best;

    fn walk(
        u: usize,
        cap: i64,
        on_path: &mut Vec<bool>,
        best: &mut Vec<Option<i64>>,
        edges: &[(usize, usize, i64)],
    ) {
        for &(a, b, w) in edges {
            if a != u || on_path[b] {
                continue;
            }
            let through = cap.min(w);
            if best[b].is_none_or(|cur| through > cur) {
                best[b] = Some(through);
            }
            on_path[b] = true;
            walk(b, through, on_path, best, edges);
            on_path[b] = false;
        }
    }
}

/// Closure by its definition: ⊕-fold of A⁰ … A^{N−1}. Valid for
/// nilpotent (strictly upper triangular) inputs where the series stops.
pub fn closure_by_power_sum(a: &SemiringMatrix<MaxPlus>) -> SemiringMatrix<MaxPlus> {
    let n = a.rows();
    let mut sum = SemiringMatrix::identity(a.semiring(), n);
    for k in 1..n {
        sum = sum.madd(&a.mpow(k).unwrap()).unwrap();
    }
    sum
}

/// Random strictly upper triangular max-plus matrix with entries drawn
/// from {φ, 0, 1, 2}.
pub fn random_sut(rng: &mut StdRng, n: usize) -> SemiringMatrix<MaxPlus> {
    SemiringMatrix::from_fn(MaxPlus, n, n, |i, j| {
        if i < j {
            random_small_elem(rng)
        } else {
            Phi
        }
    })
    .with_shape_hint(ShapeHint::StrictlyUpperTriangular)
}

/// One draw from {φ, 0, 1, 2}, uniformly.
pub fn random_small_elem(rng: &mut StdRng) -> Elem<MaxPlus> {
    match rng.gen_range(0..4) {
        0 => Phi,
        v => Finite(v - 1),
    }
}

/// Random directed graph as an edge list: up to `max_edges` edges with
/// weights in 0..=max_weight, self-loops and parallel edges allowed.
pub fn random_edges(
    rng: &mut StdRng,
    n: usize,
    max_edges: usize,
    max_weight: i64,
) -> Vec<(usize, usize, i64)> {
    let m = rng.gen_range(0..=max_edges);
    (0..m)
        .map(|_| {
            (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..=max_weight),
            )
        })
        .collect()
}

/// Interpret a max-plus element as the integer it carries.
pub fn as_int(e: Elem<MaxPlus>) -> Option<i64> {
    e.into_finite()
}
