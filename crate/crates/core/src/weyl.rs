//! Simple reflections on root coordinates, real-root closure and Weyl orbits.
//!
//! Pairing convention: `a[i][j] = <alpha_j, alpha_i^vee>`, so the simple
//! reflection `r_i` sends `beta = sum k_j alpha_j` to
//! `beta - (sum_j a[i][j] k_j) alpha_i`. With `B = D A` this gives
//! `B[i][j] = (alpha_i | alpha_j)` and `(alpha_i | alpha_i) = 2 d_i`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify_indecomposable, ClassifyError, Kind};
use crate::gcm::{CartanMatrix, DynkinDiagram};
use crate::symmetrize::{symmetrizer_any, SymmetrizeError};

/// Default cap on the number of roots a closure may hold.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("root closure exceeded the budget of {budget} roots")]
    BudgetExceeded { budget: usize },
    #[error("matrix is not of finite type")]
    NotFinite,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Symmetrize(#[from] SymmetrizeError),
    #[error("root has {got} coordinates, matrix has rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },
}

/// Coefficients of a root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector { coords }
    }

    /// The simple root `alpha_i` in rank `n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1;
        RootVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&k| k >= 0) && self.coords.iter().any(|&k| k > 0)
    }

    /// Index of the simple root this equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &k) in self.coords.iter().enumerate() {
            match k {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Canonical order: height, then coordinates lexicographically.
    fn sort_key(&self) -> (i64, &[i64]) {
        (self.height(), &self.coords)
    }
}

/// `height, k_1, .., k_n` as a comma-separated record.
impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.height())?;
        for k in &self.coords {
            write!(f, ", {k}")?;
        }
        Ok(())
    }
}

/// Sorts roots into the canonical order used for serialization.
pub fn sort_roots(roots: &mut [RootVector]) {
    roots.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
}

/// Line-delimited serialization: one `height, coords..` record per root.
pub fn write_roots(roots: &[RootVector]) -> String {
    let mut sorted = roots.to_vec();
    sort_roots(&mut sorted);
    sorted.iter().map(|r| format!("{r}\n")).collect()
}

/// Disjoint vertex blocks covering `0..n`, each sorted, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Normalizes block order. Does not check disjointness.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        OrbitPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Whether the blocks are nonempty, disjoint and cover `0..n`.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for b in &self.blocks {
            if b.is_empty() {
                return false;
            }
            for &i in b {
                if i >= n || seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&i))
    }

    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|i| i + 1).collect())
            .collect()
    }

    pub fn from_one_based(blocks: Vec<Vec<usize>>) -> Option<Self> {
        let zero: Option<Vec<Vec<usize>>> = blocks
            .into_iter()
            .map(|b| b.into_iter().map(|i| i.checked_sub(1)).collect())
            .collect();
        zero.map(OrbitPartition::new)
    }
}

/// Renders 1-based, e.g. `{1,2} {3}`.
impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let inner: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

/// Same vertices, only the `(1,1)` edges.
pub fn simply_laced_skeleton(d: &DynkinDiagram) -> DynkinDiagram {
    d.simply_laced_skeleton()
}

/// Connected components of the simply laced skeleton.
pub fn orbit_partition(d: &DynkinDiagram) -> OrbitPartition {
    OrbitPartition::new(d.simply_laced_skeleton().components())
}

/// `r_i(beta)`.
pub fn reflect(a: &CartanMatrix, i: usize, beta: &RootVector) -> RootVector {
    let mut coords = beta.coords.clone();
    let pairing: i64 = (0..a.rank()).map(|j| a.get(i, j) * beta.coords[j]).sum();
    coords[i] -= pairing;
    RootVector { coords }
}

/// Positive real roots reachable from the simple roots within a height window,
/// plus, for each, its index and the indices of its in-window reflections.
struct Closure {
    roots: Vec<RootVector>,
    edges: Vec<(usize, usize)>,
}

fn closure(a: &CartanMatrix, max_height: i64, budget: usize) -> Result<Closure, WeylError> {
    let n = a.rank();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut roots = Vec::new();
    let mut edges = Vec::new();
    for i in 0..n {
        let r = RootVector::simple(n, i);
        index.insert(r.coords.clone(), roots.len());
        roots.push(r);
    }
    let mut head = 0;
    while head < roots.len() {
        let beta = roots[head].clone();
        for i in 0..n {
            let image = reflect(a, i, &beta);
            if !image.is_positive() || image.height() > max_height {
                continue;
            }
            let id = match index.get(&image.coords) {
                Some(&id) => id,
                None => {
                    if roots.len() >= budget {
                        return Err(WeylError::BudgetExceeded { budget });
                    }
                    let id = roots.len();
                    index.insert(image.coords.clone(), id);
                    roots.push(image);
                    id
                }
            };
            if head < id {
                edges.push((head, id));
            }
        }
        head += 1;
    }
    Ok(Closure { roots, edges })
}

/// Positive real roots of height at most `max_height`, canonically sorted.
pub fn real_roots_up_to_height(
    a: &CartanMatrix,
    max_height: i64,
    budget: usize,
) -> Result<Vec<RootVector>, WeylError> {
    let mut roots = closure(a, max_height, budget)?.roots;
    sort_roots(&mut roots);
    Ok(roots)
}

/// For each simple root `alpha_i`, the positive roots of height at most
/// `max_height` reachable from it by simple reflections without leaving that
/// window. Classes of different simple roots are either equal or disjoint.
pub fn window_classes(
    a: &CartanMatrix,
    max_height: i64,
    budget: usize,
) -> Result<Vec<Vec<RootVector>>, WeylError> {
    let c = closure(a, max_height, budget)?;
    let mut parent: Vec<usize> = (0..c.roots.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(x, y) in &c.edges {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx != ry {
            parent[rx.max(ry)] = rx.min(ry);
        }
    }
    let mut members: HashMap<usize, Vec<RootVector>> = HashMap::new();
    for id in 0..c.roots.len() {
        let r = find(&mut parent, id);
        members.entry(r).or_default().push(c.roots[id].clone());
    }
    // simple roots occupy ids 0..n
    let classes = (0..a.rank())
        .map(|i| {
            let mut class = members[&find(&mut parent, i)].clone();
            sort_roots(&mut class);
            class
        })
        .collect();
    Ok(classes)
}

/// `i ~ j` iff `alpha_j` is reachable from `alpha_i` by simple reflections
/// without leaving the positive roots of height at most `max_height`.
pub fn orbit_partition_bruteforce(
    a: &CartanMatrix,
    max_height: i64,
    budget: usize,
) -> Result<OrbitPartition, WeylError> {
    let classes = window_classes(a, max_height, budget)?;
    let n = a.rank();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut placed = vec![false; n];
    for i in 0..n {
        if placed[i] {
            continue;
        }
        let block: Vec<usize> = (i..n)
            .filter(|&j| classes[i].contains(&RootVector::simple(n, j)))
            .collect();
        for &j in &block {
            placed[j] = true;
        }
        blocks.push(block);
    }
    Ok(OrbitPartition::new(blocks))
}

/// Brute-force partition, doubling the height window until it matches the
/// skeleton partition or `max_height` is passed. Returns the last partition
/// computed and the window it used.
pub fn orbit_partition_with_retry(
    a: &CartanMatrix,
    start_height: i64,
    max_height: i64,
    budget: usize,
) -> Result<(OrbitPartition, i64), WeylError> {
    let expected = orbit_partition(&a.to_diagram());
    let mut h = start_height.max(1);
    loop {
        let got = orbit_partition_bruteforce(a, h, budget)?;
        if got == expected || h * 2 > max_height {
            return Ok((got, h));
        }
        h *= 2;
    }
}

/// `(beta | beta)` under the normalized symmetrization.
pub fn root_norm(a: &CartanMatrix, beta: &RootVector) -> Result<i64, WeylError> {
    if beta.coords.len() != a.rank() {
        return Err(WeylError::DimensionMismatch {
            got: beta.coords.len(),
            rank: a.rank(),
        });
    }
    let sym = symmetrizer_any(a)?;
    Ok(norm_with(a, sym.d(), beta))
}

pub(crate) fn norm_with(a: &CartanMatrix, d: &[i64], beta: &RootVector) -> i64 {
    let n = a.rank();
    let mut total = 0;
    for i in 0..n {
        for j in 0..n {
            total += beta.coords[i] * d[i] * a.get(i, j) * beta.coords[j];
        }
    }
    total
}

/// Every positive root of a finite-type indecomposable matrix.
pub fn positive_roots(a: &CartanMatrix) -> Result<Vec<RootVector>, WeylError> {
    if classify_indecomposable(a)?.kind != Kind::Finite {
        return Err(WeylError::NotFinite);
    }
    real_roots_up_to_height(a, i64::MAX, DEFAULT_BUDGET)
}

/// The unique positive root of maximal height of a finite-type matrix.
pub fn highest_root(a: &CartanMatrix) -> Result<RootVector, WeylError> {
    let roots = positive_roots(a)?;
    Ok(roots.last().cloned().expect("a root system has simple roots"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    fn m(rows: &[&[i64]]) -> CartanMatrix {
        CartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rv(c: &[i64]) -> RootVector {
        RootVector::new(c.to_vec())
    }

    #[test]
    fn reflections_in_a2() {
        let a2 = standard::a(2);
        assert_eq!(reflect(&a2, 0, &rv(&[1, 0])), rv(&[-1, 0]));
        assert_eq!(reflect(&a2, 0, &rv(&[0, 1])), rv(&[1, 1]));
        let beta = rv(&[3, -2]);
        assert_eq!(reflect(&a2, 1, &reflect(&a2, 1, &beta)), beta);
    }

    #[test]
    fn closures() {
        let a2 = standard::a(2);
        let roots = real_roots_up_to_height(&a2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(roots, vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]);

        let g2 = m(&[&[2, -1], &[-3, 2]]);
        assert_eq!(real_roots_up_to_height(&g2, 5, DEFAULT_BUDGET).unwrap().len(), 6);

        let aff = m(&[&[2, -2], &[-2, 2]]);
        let roots = real_roots_up_to_height(&aff, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(roots, vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 2]), rv(&[2, 1])]);
    }

    #[test]
    fn budget_is_enforced() {
        let aff = m(&[&[2, -2], &[-2, 2]]);
        assert_eq!(
            real_roots_up_to_height(&aff, 100, 10).unwrap_err(),
            WeylError::BudgetExceeded { budget: 10 }
        );
    }

    #[test]
    fn skeleton_partitions() {
        let e10 = standard::e10();
        assert_eq!(orbit_partition(&e10.to_diagram()).blocks(), &[(0..10).collect::<Vec<_>>()]);
        let aff = m(&[&[2, -2], &[-2, 2]]);
        assert_eq!(orbit_partition(&aff.to_diagram()).blocks(), &[vec![0], vec![1]]);
        // labels (1,2), (1,2), (2,1): no single edges at all
        let tri = m(&[&[2, -1, -1], &[-2, 2, -2], &[-2, -1, 2]]);
        assert_eq!(orbit_partition(&tri.to_diagram()).len(), 3);
        let chain = m(&[&[2, -1, 0], &[-1, 2, -2], &[0, -1, 2]]);
        assert_eq!(orbit_partition(&chain.to_diagram()).to_string(), "{1,2} {3}");
    }

    #[test]
    fn bruteforce_partitions() {
        let a2 = standard::a(2);
        assert_eq!(orbit_partition_bruteforce(&a2, 2, DEFAULT_BUDGET).unwrap().len(), 1);
        let aff = m(&[&[2, -2], &[-2, 2]]);
        assert_eq!(orbit_partition_bruteforce(&aff, 4, DEFAULT_BUDGET).unwrap().len(), 2);
        let twisted = m(&[&[2, -1], &[-4, 2]]);
        assert_eq!(orbit_partition_bruteforce(&twisted, 4, DEFAULT_BUDGET).unwrap().len(), 2);
    }

    #[test]
    fn norms() {
        let a2 = standard::a(2);
        assert_eq!(root_norm(&a2, &rv(&[1, 0])).unwrap(), 2);
        let twisted = m(&[&[2, -1], &[-4, 2]]);
        assert_eq!(root_norm(&twisted, &rv(&[1, 0])).unwrap(), 8);
        assert_eq!(root_norm(&twisted, &rv(&[0, 1])).unwrap(), 2);
        let beta = rv(&[2, 3]);
        for i in 0..2 {
            assert_eq!(
                root_norm(&twisted, &reflect(&twisted, i, &beta)).unwrap(),
                root_norm(&twisted, &beta).unwrap()
            );
        }
        let tri = m(&[&[2, -1, -1], &[-2, 2, -2], &[-2, -1, 2]]);
        assert!(matches!(
            root_norm(&tri, &rv(&[1, 0, 0])),
            Err(WeylError::Symmetrize(_))
        ));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(&standard::a(2)).unwrap(), rv(&[1, 1]));
        assert_eq!(highest_root(&standard::g2()).unwrap().height(), 5);
        let e8 = standard::e(8);
        assert_eq!(positive_roots(&e8).unwrap().len(), 120);
        assert_eq!(highest_root(&e8).unwrap(), rv(&[2, 3, 4, 6, 5, 4, 3, 2]));
        assert_eq!(
            highest_root(&m(&[&[2, -2], &[-2, 2]])).unwrap_err(),
            WeylError::NotFinite
        );
    }

    #[test]
    fn root_records() {
        let out = write_roots(&[rv(&[1, 1]), rv(&[0, 1]), rv(&[1, 0])]);
        assert_eq!(out, "1, 0, 1\n1, 1, 0\n2, 1, 1\n");
        assert_eq!(rv(&[0, 1, 0]).simple_index(), Some(1));
        assert_eq!(rv(&[1, 1, 0]).simple_index(), None);
    }
}
