//! Canonical relabeling: the simultaneous row/column permutation whose
//! row-major entry sequence is lexicographically least.
//!
//! The search fixes positions one at a time. After position `k` receives a
//! vertex, the not-yet-placed vertices are kept as an ordered partition whose
//! cells agree on every fixed row; splitting each cell by the new row (in
//! increasing order) is forced by minimality, and it pins rows `0..=k`
//! completely. Branching therefore only happens between vertices that tie on
//! everything seen so far, and any branch whose fixed rows already exceed the
//! best sequence is cut.

use crate::gcm::CartanMatrix;

/// A matrix in canonical form together with the relabeling that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    matrix: CartanMatrix,
    perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn matrix(&self) -> &CartanMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CartanMatrix {
        self.matrix
    }

    /// Vertex `perm[k]` of the input sits at position `k`.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }
}

struct Search<'a> {
    a: &'a CartanMatrix,
    n: usize,
    best: Option<(Vec<i64>, Vec<usize>)>,
    cur: Vec<i64>,
}

impl Search<'_> {
    /// `cells` is the ordered partition; the first `k` cells are the fixed singletons.
    fn descend(&mut self, k: usize, cells: &[Vec<usize>]) {
        let n = self.n;
        let front = &cells[k];
        for (ci, &v) in front.iter().enumerate() {
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            next.extend_from_slice(&cells[..k]);
            next.push(vec![v]);
            let rest: Vec<usize> = front
                .iter()
                .enumerate()
                .filter(|&(cj, _)| cj != ci)
                .map(|(_, &w)| w)
                .collect();
            let tail = std::iter::once(&rest).chain(cells[k + 1..].iter());
            for cell in tail {
                if cell.is_empty() {
                    continue;
                }
                let mut sorted = cell.clone();
                sorted.sort_by_key(|&w| self.a.get(v, w));
                let mut start = 0;
                while start < sorted.len() {
                    let val = self.a.get(v, sorted[start]);
                    let mut end = start + 1;
                    while end < sorted.len() && self.a.get(v, sorted[end]) == val {
                        end += 1;
                    }
                    next.push(sorted[start..end].to_vec());
                    start = end;
                }
            }

            // row k is now determined
            let mut col = 0;
            for cell in &next {
                for _ in 0..cell.len() {
                    self.cur[k * n + col] = self.a.get(v, cell[0]);
                    col += 1;
                }
            }
            // columns before k are fixed singletons, so cell[0] is exact there
            let prefix = (k + 1) * n;
            if let Some((best, _)) = &self.best {
                match self.cur[..prefix].cmp(&best[..prefix]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less | std::cmp::Ordering::Equal => {}
                }
            }
            if k + 1 == n {
                let better = match &self.best {
                    None => true,
                    Some((best, _)) => self.cur < *best,
                };
                if better {
                    let perm = next.iter().map(|c| c[0]).collect();
                    self.best = Some((self.cur.clone(), perm));
                }
            } else {
                self.descend(k + 1, &next);
            }
        }
    }
}

/// Lexicographically least row-major relabeling of `a`.
pub fn canonical_form(a: &CartanMatrix) -> CanonicalForm {
    let n = a.rank();
    let mut s = Search {
        a,
        n,
        best: None,
        cur: vec![0; n * n],
    };
    s.descend(0, &[(0..n).collect()]);
    let (_, perm) = s.best.expect("nonempty matrix has a relabeling");
    CanonicalForm {
        matrix: a.permuted(&perm),
        perm,
    }
}

/// Exhaustive minimum over all `n!` relabelings. For cross-checking only.
pub fn canonical_form_bruteforce(a: &CartanMatrix) -> CartanMatrix {
    let n = a.rank();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = a.permuted(&perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let cand = a.permuted(&perm);
            if cand.entries() < best.entries() {
                best = cand;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}
