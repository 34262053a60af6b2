//! Independent generate-and-filter enumeration for small ranks.
//!
//! Shares nothing with the pruned enumerator beyond the matrix type: labels
//! range over every `(p, q)` with `1 <= p, q <= 4` (no product bound assumed),
//! matrices are generated labeled (not up to isomorphism) one vertex pair at a
//! time, determinants come from cofactor expansion, and isomorphism classes
//! are found by trying every relabeling. The only rejection applied before a
//! matrix is complete is the definition itself: once the subdiagram on the
//! decided vertices is fixed and still proper, each of its connected
//! components must be finite or affine.

use std::collections::BTreeSet;

use crate::catalog::canonical::canonical_form_bruteforce;
use crate::gcm::CartanMatrix;

/// Largest rank the oracle accepts.
pub const MAX_ORACLE_RANK: usize = 5;

const MAX_LABEL: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Finite,
    Affine,
    Other,
}

fn laplace(m: &[i64], n: usize) -> i128 {
    match n {
        0 => 1,
        1 => m[0] as i128,
        2 => m[0] as i128 * m[3] as i128 - m[1] as i128 * m[2] as i128,
        _ => {
            let mut total = 0i128;
            let mut minor = Vec::with_capacity((n - 1) * (n - 1));
            for c in 0..n {
                if m[c] == 0 {
                    continue;
                }
                minor.clear();
                for r in 1..n {
                    for cc in 0..n {
                        if cc != c {
                            minor.push(m[r * n + cc]);
                        }
                    }
                }
                let sign = if c % 2 == 0 { 1 } else { -1 };
                total += sign * m[c] as i128 * laplace(&minor, n - 1);
            }
            total
        }
    }
}

fn minor(e: &[i64], n: usize, idx: &[usize]) -> i128 {
    let k = idx.len();
    let mut sub = Vec::with_capacity(k * k);
    for &i in idx {
        for &j in idx {
            sub.push(e[i * n + j]);
        }
    }
    laplace(&sub, k)
}

fn subsets(idx: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u32..(1 << idx.len())).map(move |mask| {
        idx.iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Verdict for the (assumed connected) principal submatrix on `idx`.
fn verdict(e: &[i64], n: usize, idx: &[usize]) -> Verdict {
    let mut proper_positive = true;
    for s in subsets(idx) {
        if s.len() == idx.len() {
            continue;
        }
        if minor(e, n, &s) <= 0 {
            proper_positive = false;
            break;
        }
    }
    if !proper_positive {
        return Verdict::Other;
    }
    match minor(e, n, idx) {
        d if d > 0 => Verdict::Finite,
        0 => Verdict::Affine,
        _ => Verdict::Other,
    }
}

fn connected(e: &[i64], n: usize, idx: &[usize]) -> bool {
    let mut reached = vec![idx[0]];
    let mut frontier = vec![idx[0]];
    while let Some(v) = frontier.pop() {
        for &w in idx {
            if !reached.contains(&w) && e[v * n + w] != 0 {
                reached.push(w);
                frontier.push(w);
            }
        }
    }
    reached.len() == idx.len()
}

fn component_of(e: &[i64], n: usize, within: &[usize], start: usize) -> Vec<usize> {
    let mut comp = vec![start];
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for &w in within {
            if !comp.contains(&w) && e[v * n + w] != 0 {
                comp.push(w);
                frontier.push(w);
            }
        }
    }
    comp.sort_unstable();
    comp
}

/// Hyperbolic by the definition: indefinite, every proper connected subset
/// finite or affine.
fn hyperbolic(e: &[i64], n: usize) -> bool {
    let all: Vec<usize> = (0..n).collect();
    if !connected(e, n, &all) {
        return false;
    }
    for s in subsets(&all) {
        if s.len() < n && connected(e, n, &s) && verdict(e, n, &s) == Verdict::Other {
            return false;
        }
    }
    // indefinite: neither finite nor affine
    let proper_positive = subsets(&all)
        .filter(|s| s.len() < n)
        .all(|s| minor(e, n, &s) > 0);
    let det = minor(e, n, &all);
    !(proper_positive && det >= 0)
}

struct Generator {
    n: usize,
    e: Vec<i64>,
    pairs: Vec<(usize, usize)>,
    found: BTreeSet<CartanMatrix>,
}

impl Generator {
    fn run(&mut self, step: usize) {
        if step == self.pairs.len() {
            if hyperbolic(&self.e, self.n) {
                let m = CartanMatrix::from_flat(self.n, self.e.clone())
                    .expect("generated entries satisfy the axioms");
                self.found.insert(canonical_form_bruteforce(&m));
            }
            return;
        }
        let (i, v) = self.pairs[step];
        let n = self.n;
        let mut options = vec![(0, 0)];
        for p in 1..=MAX_LABEL {
            for q in 1..=MAX_LABEL {
                options.push((p, q));
            }
        }
        for (p, q) in options {
            self.e[i * n + v] = -p;
            self.e[v * n + i] = -q;
            // after pair (i, v) the subdiagram on {0..=i} + {v} is decided
            let decided: Vec<usize> = (0..=i).chain(std::iter::once(v)).collect();
            let touched = (0..=i).any(|w| self.e[v * n + w] != 0);
            if touched && decided.len() < n {
                let comp = component_of(&self.e, n, &decided, v);
                if verdict(&self.e, n, &comp) == Verdict::Other {
                    continue;
                }
            }
            self.run(step + 1);
        }
        self.e[i * n + v] = 0;
        self.e[v * n + i] = 0;
    }
}

/// Canonical forms (lexicographically least relabeling) of all hyperbolic
/// diagrams of exactly `rank` vertices, for `rank` in `3..=5`.
pub fn enumerate_unpruned(rank: usize) -> Option<Vec<CartanMatrix>> {
    if !(3..=MAX_ORACLE_RANK).contains(&rank) {
        return None;
    }
    let mut pairs = Vec::new();
    for v in 1..rank {
        for i in 0..v {
            pairs.push((i, v));
        }
    }
    let mut g = Generator {
        n: rank,
        e: CartanMatrix::diagonal(rank).entries().to_vec(),
        pairs,
        found: BTreeSet::new(),
    };
    g.run(0);
    Some(g.found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplace_small() {
        assert_eq!(laplace(&[2, -1, -1, 2], 2), 3);
        assert_eq!(laplace(&[2, -1, 0, -1, 2, -1, 0, -1, 2], 3), 4);
    }

    #[test]
    fn verdicts() {
        let a2 = [2, -1, -1, 2];
        assert_eq!(verdict(&a2, 2, &[0, 1]), Verdict::Finite);
        let aff = [2, -2, -2, 2];
        assert_eq!(verdict(&aff, 2, &[0, 1]), Verdict::Affine);
        let hyp = [2, -3, -2, 2];
        assert_eq!(verdict(&hyp, 2, &[0, 1]), Verdict::Other);
        assert!(hyperbolic(&hyp, 2));
    }

    #[test]
    fn range_guard() {
        assert!(enumerate_unpruned(2).is_none());
        assert!(enumerate_unpruned(6).is_none());
    }
}
