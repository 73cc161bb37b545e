//! Longest increasing subsequence through max-plus linear algebra.
//!
//! A sequence of mutually comparable keys induces a DAG on positions:
//! an edge i→j exists exactly when i < j and key_i < key_j, so chains
//! in the DAG are strictly increasing subsequences. Over the max-plus
//! semiring the DAG's incidence matrix A (edge entries 1, rest φ) turns
//! path length into arithmetic: entry (i,j) of Aᵏ is k exactly when a
//! k-edge chain i→…→j exists. Three routes to the answer follow:
//!
//! - [`lis_matrix_power`]: the last k with Aᵏ ≠ Φ is the edge count of
//!   the longest chain; length is k+1.
//! - [`lis_backsub`]: x = A⊙x ⊕ U with U all-e solves to x_i = longest
//!   edge count of a chain starting at i; length is (⊕-fold of x) + 1.
//!   A is strictly upper triangular, so back substitution solves it in
//!   at most N(N+1)/2 products.
//! - [`lis_dp`] and [`lis_patience`]: the classical quadratic dynamic
//!   program and the O(N log N) patience method, kept as independent
//!   oracles.
//!
//! All four agree on the length; witnesses are recovered separately and
//! validated structurally, since optimal witnesses are rarely unique.

use crate::error::Error;
use crate::matrix::{OpCount, SemiringMatrix, SemiringVector, ShapeHint};
use crate::semiring::{Elem, Finite, MaxPlus, Phi};

/// An ordered list of mutually comparable keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence<K> {
    keys: Vec<K>,
}

impl<K> Sequence<K> {
    pub fn new(keys: Vec<K>) -> Self {
        Self { keys }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }
}

impl<K> From<Vec<K>> for Sequence<K> {
    fn from(keys: Vec<K>) -> Self {
        Self::new(keys)
    }
}

/// Parse a sequence of integer keys: tokens separated by whitespace or
/// commas, `#` starts a comment, blank lines allowed. Positions in
/// errors are 1-based.
pub fn parse_int_sequence(input: &str) -> Result<Sequence<i64>, Error> {
    let mut keys = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        for (start, token) in sequence_tokens(raw) {
            let key = token.parse::<i64>().map_err(|_| {
                Error::parse(
                    lineno + 1,
                    start + 1,
                    format!("invalid integer key `{token}`"),
                )
            })?;
            keys.push(key);
        }
    }
    Ok(Sequence::new(keys))
}

/// Parse a sequence of string keys under the same token rules; compared
/// byte-lexicographically. Cannot fail: any token is a key.
pub fn parse_string_sequence(input: &str) -> Sequence<String> {
    let mut keys = Vec::new();
    for raw in input.lines() {
        for (_, token) in sequence_tokens(raw) {
            keys.push(token.to_string());
        }
    }
    Sequence::new(keys)
}

/// Tokens of one line with 0-based byte offsets; strips `#` comments and
/// treats commas as separators.
fn sequence_tokens(raw: &str) -> impl Iterator<Item = (usize, &str)> + '_ {
    let line = match raw.find('#') {
        Some(pos) => &raw[..pos],
        None => raw,
    };
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(move |tok| {
            let start = tok.as_ptr() as usize - line.as_ptr() as usize;
            (start, tok)
        })
}

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Dp,
    Backsub,
    Power,
    Patience,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Dp, Method::Backsub, Method::Power, Method::Patience];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Backsub => "backsub",
            Method::Power => "power",
            Method::Patience => "patience",
        }
    }
}

/// Outcome of one LIS computation.
///
/// `length` counts keys, not edges: it is 0 only for the empty input.
/// `witness`, when present, lists (index, key) pairs with both indices
/// and keys strictly increasing and exactly `length` entries. The
/// counters record ⊕/⊙ applications in the algebraic methods and are 0
/// for the classical oracles, which do no semiring work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LisResult<K> {
    pub length: usize,
    pub witness: Option<Vec<(usize, K)>>,
    pub method: Method,
    pub oplus_count: u64,
    pub odot_count: u64,
}

/// Incidence matrix of the strict-increase DAG: entry (i,j) is 1 when
/// i < j and key_i < key_j, φ otherwise. Strictly upper triangular by
/// construction; duplicates never connect.
pub fn build_incidence<K: Ord>(s: &Sequence<K>) -> SemiringMatrix<MaxPlus> {
    let keys = s.keys();
    let n = keys.len();
    SemiringMatrix::from_fn(MaxPlus, n, n, |i, j| {
        if i < j && keys[i] < keys[j] {
            Finite(1)
        } else {
            Phi
        }
    })
    .with_shape_hint(ShapeHint::StrictlyUpperTriangular)
}

/// Classical quadratic dynamic program; the primary oracle.
///
/// ending[j] is the longest strictly increasing run ending at j; an
/// empty predecessor set contributes 0, so ending[j] is at least 1.
pub fn lis_dp<K: Ord + Clone>(s: &Sequence<K>) -> LisResult<K> {
    let keys = s.keys();
    let n = keys.len();
    let mut ending = vec![0usize; n];
    let mut pred = vec![usize::MAX; n];
    for j in 0..n {
        let mut best = 0;
        for i in 0..j {
            // Strict > keeps the smallest index among equally good
            // predecessors, so witnesses are deterministic.
            if keys[i] < keys[j] && ending[i] > best {
                best = ending[i];
                pred[j] = i;
            }
        }
        ending[j] = best + 1;
    }
    let length = ending.iter().copied().max().unwrap_or(0);
    let witness = if n == 0 {
        Vec::new()
    } else {
        let mut j = ending.iter().position(|&l| l == length).unwrap();
        let mut chain = vec![j];
        while pred[j] != usize::MAX {
            j = pred[j];
            chain.push(j);
        }
        chain.reverse();
        chain.into_iter().map(|i| (i, keys[i].clone())).collect()
    };
    LisResult {
        length,
        witness: Some(witness),
        method: Method::Dp,
        oplus_count: 0,
        odot_count: 0,
    }
}

/// Max-plus back substitution: solve x = A⊙x ⊕ U with U all-e, then
/// length = (⊕-fold of x) + 1. The witness is recovered from x.
pub fn lis_backsub<K: Ord + Clone>(s: &Sequence<K>) -> LisResult<K> {
    let n = s.len();
    let a = build_incidence(s);
    let b = SemiringVector::ones(MaxPlus, n);
    let (x, solve_count) = a
        .solve_triangular_counted(&b)
        .expect("incidence matrix is strictly upper triangular by construction");
    let best = x.fold_oplus();
    let length = match best {
        Phi => 0,
        Finite(v) => v as usize + 1,
    };
    let witness = recover_witness(s, &x)
        .expect("solution from back substitution is self-consistent");
    LisResult {
        length,
        witness: Some(witness),
        method: Method::Backsub,
        oplus_count: solve_count.oplus + n as u64,
        odot_count: solve_count.odot,
    }
}

/// Matrix powers: the last k with Aᵏ ≠ Φ is the longest chain's edge
/// count; length is k+1, or 0 for the empty input. Each power reuses
/// the previous one, quartic scalar work in the worst case; this method
/// exists for cross-validation, not speed.
pub fn lis_matrix_power<K: Ord>(s: &Sequence<K>) -> LisResult<K> {
    let n = s.len();
    if n == 0 {
        return LisResult {
            length: 0,
            witness: None,
            method: Method::Power,
            oplus_count: 0,
            odot_count: 0,
        };
    }
    let a = build_incidence(s);
    let mut count = OpCount::default();
    let mut last_nonzero = 0u64;
    let mut power = a.clone();
    // Strict upper triangularity bounds the loop: A^n = Φ.
    while !power.is_all_phi() {
        last_nonzero += 1;
        let (next, c) = power
            .mmul_counted(&a)
            .expect("powers of a square matrix stay conformable");
        power = next;
        count += c;
    }
    LisResult {
        length: last_nonzero as usize + 1,
        witness: None,
        method: Method::Power,
        oplus_count: count.oplus,
        odot_count: count.odot,
    }
}

/// Patience sorting on pile tops with binary search; strict increase
/// uses find-first-not-less replacement. Independent O(N log N) oracle.
pub fn lis_patience<K: Ord + Clone>(s: &Sequence<K>) -> LisResult<K> {
    let keys = s.keys();
    let mut top_key: Vec<&K> = Vec::new();
    let mut top_idx: Vec<usize> = Vec::new();
    let mut pred = vec![usize::MAX; keys.len()];
    for (i, key) in keys.iter().enumerate() {
        let pile = top_key.partition_point(|&t| t < key);
        if pile > 0 {
            pred[i] = top_idx[pile - 1];
        }
        if pile == top_key.len() {
            top_key.push(key);
            top_idx.push(i);
        } else {
            top_key[pile] = key;
            top_idx[pile] = i;
        }
    }
    let length = top_key.len();
    let witness = match top_idx.last() {
        None => Vec::new(),
        Some(&last) => {
            let mut chain = vec![last];
            let mut i = last;
            while pred[i] != usize::MAX {
                i = pred[i];
                chain.push(i);
            }
            chain.reverse();
            chain.into_iter().map(|i| (i, keys[i].clone())).collect()
        }
    };
    LisResult {
        length,
        witness: Some(witness),
        method: Method::Patience,
        oplus_count: 0,
        odot_count: 0,
    }
}

/// Recover one maximal chain from the back-substitution solution x,
/// where x_i is the longest edge count of a chain starting at i.
///
/// Greedy and deterministic: start at the smallest index attaining the
/// maximal x_i, then repeatedly step to the smallest j > i with
/// key_i < key_j and x_j = x_i − 1. A corrupted x (wrong values, no
/// successor where one is promised) is reported, never masked.
pub fn recover_witness<K: Ord + Clone>(
    s: &Sequence<K>,
    x: &SemiringVector<MaxPlus>,
) -> Result<Vec<(usize, K)>, Error> {
    let keys = s.keys();
    let n = keys.len();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            left_rows: n,
            left_cols: 1,
            right_rows: x.len(),
            right_cols: 1,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let level = |e: Elem<MaxPlus>| -> Option<i64> {
        match e {
            Finite(v) if v >= 0 => Some(v),
            _ => None,
        }
    };
    let best = x.fold_oplus();
    let start = (0..n)
        .find(|&i| x.get(i) == best)
        .expect("fold maximum is attained");
    let mut cur = level(x.get(start)).ok_or(Error::InconsistentSolution { index: start })?;
    let mut i = start;
    let mut chain = vec![(start, keys[start].clone())];
    while cur > 0 {
        let next = (i + 1..n)
            .find(|&j| keys[i] < keys[j] && x.get(j) == Finite(cur - 1))
            .ok_or(Error::InconsistentSolution { index: i })?;
        chain.push((next, keys[next].clone()));
        i = next;
        cur -= 1;
    }
    Ok(chain)
}

/// Structural witness check: exactly `length` entries, indices strictly
/// increasing and matching the sequence, keys strictly increasing.
pub fn is_valid_witness<K: Ord>(s: &Sequence<K>, witness: &[(usize, K)], length: usize) -> bool {
    if witness.len() != length {
        return false;
    }
    let keys = s.keys();
    for (w, (idx, key)) in witness.iter().enumerate() {
        if *idx >= keys.len() || keys[*idx] != *key {
            return false;
        }
        if w > 0 {
            let (prev_idx, prev_key) = &witness[w - 1];
            if prev_idx >= idx || prev_key >= key {
                return false;
            }
        }
    }
    true
}
