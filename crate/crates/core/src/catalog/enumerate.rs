//! Vertex-by-vertex enumeration of hyperbolic diagrams.
//!
//! Every hyperbolic diagram on `n` vertices contains a connected subdiagram on
//! `n - 1` vertices, which is finite or affine; every connected finite or
//! affine diagram on `k` vertices likewise contains a connected finite one on
//! `k - 1` vertices. So the search keeps, level by level, the isomorphism
//! classes of connected finite and affine diagrams, and grows each class by
//! one vertex. An affine class on `k` vertices is only ever grown to `k + 1`
//! vertices: a proper connected affine subdiagram of a hyperbolic diagram has
//! exactly one vertex fewer than the whole.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::canonical::canonical_form;
use crate::classify::{is_hyperbolic, Kind, SubsetKinds};
use crate::gcm::{CartanMatrix, EdgeLabel, VertexSet};

/// Largest rank the enumerator accepts. Rank 11 is admitted only to confirm
/// that it produces nothing.
pub const MAX_ENUM_RANK: usize = 11;

/// Every label `(p, q)` with `p q <= 4`.
pub const EDGE_LABELS: [EdgeLabel; 8] = [
    EdgeLabel { p: 1, q: 1 },
    EdgeLabel { p: 1, q: 2 },
    EdgeLabel { p: 2, q: 1 },
    EdgeLabel { p: 1, q: 3 },
    EdgeLabel { p: 3, q: 1 },
    EdgeLabel { p: 1, q: 4 },
    EdgeLabel { p: 4, q: 1 },
    EdgeLabel { p: 2, q: 2 },
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("rank range {min}..={max} is outside 3..={limit}", limit = MAX_ENUM_RANK)]
    BadRange { min: usize, max: usize },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// Canonical forms produced by growing one base diagram.
#[derive(Default)]
struct Grown {
    finite: Vec<CartanMatrix>,
    affine: Vec<CartanMatrix>,
    hyperbolic: Vec<CartanMatrix>,
}

impl Grown {
    fn merge(mut self, other: Grown) -> Grown {
        self.finite.extend(other.finite);
        self.affine.extend(other.affine);
        self.hyperbolic.extend(other.hyperbolic);
        self
    }
}

/// Kind of the connected component containing `x` in the matrix `e` (size `m`).
fn component_kind(e: &[i64], m: usize, x: usize) -> (Kind, usize) {
    let mut comp = VertexSet::singleton(x);
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for w in 0..m {
            if !comp.contains(w) && e[v * m + w] != 0 {
                comp.insert(w);
                stack.push(w);
            }
        }
    }
    let idx = comp.to_vec();
    let k = idx.len();
    let sub: Vec<i64> = idx
        .iter()
        .flat_map(|&i| idx.iter().map(move |&j| e[i * m + j]))
        .collect();
    let sub = CartanMatrix::from_flat_unchecked(k, sub);
    let kinds = SubsetKinds::new(&sub).expect("component rank within minor bound");
    (kinds.kind(VertexSet::full(k)), k)
}

struct Grower<'a> {
    base: &'a CartanMatrix,
    k: usize,
    choices: Vec<Option<EdgeLabel>>,
    keep_levels: bool,
    out: Grown,
}

impl Grower<'_> {
    /// Matrix on old vertices `0..=j` plus the new vertex (last).
    fn partial(&self, j: usize) -> (Vec<i64>, usize) {
        let m = j + 2;
        let x = m - 1;
        let mut e = vec![0i64; m * m];
        for r in 0..=j {
            for c in 0..=j {
                e[r * m + c] = self.base.get(r, c);
            }
        }
        e[x * m + x] = 2;
        for (i, ch) in self.choices[..=j].iter().enumerate() {
            if let Some(l) = ch {
                // new vertex x: a[i][x] = -p, a[x][i] = -q
                e[i * m + x] = -(l.p as i64);
                e[x * m + i] = -(l.q as i64);
            }
        }
        (e, m)
    }

    fn search(&mut self, j: usize) {
        if j == self.k {
            self.leaf();
            return;
        }
        for label in std::iter::once(None).chain(EDGE_LABELS.map(Some)) {
            self.choices[j] = label;
            let touched = self.choices[..=j].iter().any(Option::is_some);
            if touched && j + 1 < self.k {
                let (e, m) = self.partial(j);
                let (kind, size) = component_kind(&e, m, m - 1);
                // the component is a proper subdiagram of the final diagram
                let ok = match kind {
                    Kind::Finite => true,
                    Kind::Affine => size == self.k,
                    Kind::Indefinite => false,
                };
                if !ok {
                    continue;
                }
            }
            self.search(j + 1);
        }
        self.choices[j] = None;
    }

    fn leaf(&mut self) {
        if self.choices.iter().all(Option::is_none) {
            return;
        }
        let (e, m) = self.partial(self.k - 1);
        let full = CartanMatrix::from_flat_unchecked(m, e);
        let kinds = SubsetKinds::new(&full).expect("rank within minor bound");
        match kinds.kind(VertexSet::full(m)) {
            Kind::Finite if self.keep_levels => {
                self.out.finite.push(canonical_form(&full).into_matrix())
            }
            Kind::Affine if self.keep_levels => {
                self.out.affine.push(canonical_form(&full).into_matrix())
            }
            Kind::Indefinite if is_hyperbolic(&full).expect("connected rank >= 2") => {
                self.out.hyperbolic.push(canonical_form(&full).into_matrix())
            }
            _ => {}
        }
    }
}

fn grow(base: &CartanMatrix, keep_levels: bool) -> Grown {
    let k = base.rank();
    let mut g = Grower {
        base,
        k,
        choices: vec![None; k],
        keep_levels,
        out: Grown::default(),
    };
    g.search(0);
    g.out
}

/// Canonical forms of all hyperbolic diagrams with rank in `min..=max`,
/// sorted by rank then row-major entries.
pub fn enumerate_hyperbolic_matrices(min: usize, max: usize) -> Result<Vec<CartanMatrix>, EnumError> {
    if !(3 <= min && min <= max && max <= MAX_ENUM_RANK) {
        return Err(EnumError::BadRange { min, max });
    }
    let mut finite: Vec<CartanMatrix> = vec![CartanMatrix::diagonal(1)];
    let mut affine: Vec<CartanMatrix> = Vec::new();
    let mut found: BTreeSet<CartanMatrix> = BTreeSet::new();
    for k in 1..max {
        // bases on k vertices grow to k + 1
        let keep_levels = k + 1 < max;
        let bases: Vec<&CartanMatrix> = finite.iter().chain(affine.iter()).collect();
        let grown = bases
            .par_iter()
            .map(|b| grow(b, keep_levels))
            .reduce(Grown::default, Grown::merge);
        if k + 1 >= min {
            found.extend(grown.hyperbolic);
        }
        finite = grown.finite.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        affine = grown.affine.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    }
    Ok(found.into_iter().collect())
}

/// As [`enumerate_hyperbolic_matrices`], on a pool of `jobs` worker threads
/// (`0` picks the default).
pub fn enumerate_hyperbolic_matrices_with_jobs(
    min: usize,
    max: usize,
    jobs: usize,
) -> Result<Vec<CartanMatrix>, EnumError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| EnumError::ThreadPool(e.to_string()))?;
    pool.install(|| enumerate_hyperbolic_matrices(min, max))
}

/// Connected finite-type and affine-type classes on exactly `rank` vertices
/// reachable with the label set, as `(finite, affine)`.
pub fn finite_and_affine_classes(rank: usize) -> (Vec<CartanMatrix>, Vec<CartanMatrix>) {
    let mut finite: Vec<CartanMatrix> = vec![CartanMatrix::diagonal(1)];
    let mut affine = Vec::new();
    for _ in 1..rank {
        let grown = finite
            .par_iter()
            .map(|b| grow(b, true))
            .reduce(Grown::default, Grown::merge);
        finite = grown.finite.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        affine = grown.affine.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    }
    (finite, affine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::canonical::canonical_form;
    use crate::standard;

    #[test]
    fn rejects_bad_ranges() {
        assert!(enumerate_hyperbolic_matrices(2, 4).is_err());
        assert!(enumerate_hyperbolic_matrices(5, 4).is_err());
        assert!(enumerate_hyperbolic_matrices(3, 12).is_err());
    }

    #[test]
    fn low_rank_finite_and_affine_classes() {
        // rank 2: A2, B2 (self-dual up to relabeling), G2; affine A1^(1), A2^(2)
        let (f, a) = finite_and_affine_classes(2);
        assert_eq!(f.len(), 3);
        assert_eq!(a.len(), 2);
        // rank 4 finite: A4, B4, C4, D4, F4
        let (f, _) = finite_and_affine_classes(4);
        assert_eq!(f.len(), 5);
        for fixture in [standard::a(4), standard::b(4), standard::c(4), standard::d(4), standard::f4()] {
            assert!(f.contains(canonical_form(&fixture).matrix()));
        }
    }

    #[test]
    fn rank_three_contains_overextended_a1() {
        let found = enumerate_hyperbolic_matrices(3, 3).unwrap();
        let h = CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]]).unwrap();
        assert!(found.contains(canonical_form(&h).matrix()));
        assert!(found.iter().all(|m| m.rank() == 3));
    }
}
