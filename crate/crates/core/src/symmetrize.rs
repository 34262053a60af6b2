//! Symmetrizability, symmetrizers and root-length data.
//!
//! A matrix is symmetrizable exactly when every cycle of its diagram is
//! balanced, i.e. the product of edge multiplicities `a[j][i] / a[i][j]`
//! around the cycle is 1. Balance of the fundamental cycles of a spanning
//! forest implies balance of all cycles, so a single traversal decides it.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gcm::CartanMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetrizeError {
    #[error("matrix is not symmetrizable: {0}")]
    NotSymmetrizable(UnbalancedCycle),
    #[error("matrix is decomposable; symmetrize each component separately")]
    Decomposable,
    #[error("rank {rank} exceeds the cycle-enumeration bound {max}")]
    RankTooLarge { rank: usize, max: usize },
}

/// A cycle whose forward and reverse entry products differ.
///
/// `cycle` is 0-based and closed (first vertex repeated at the end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbalancedCycle {
    pub cycle: Vec<usize>,
    /// `a[i1][i2] a[i2][i3] ... a[ik][i1]`
    pub forward_product: i64,
    /// `a[i2][i1] a[i3][i2] ... a[i1][ik]`
    pub reverse_product: i64,
}

impl UnbalancedCycle {
    fn from_cycle(a: &CartanMatrix, cycle: Vec<usize>) -> Self {
        let (mut fwd, mut rev) = (1i64, 1i64);
        for w in cycle.windows(2) {
            fwd *= a.get(w[0], w[1]);
            rev *= a.get(w[1], w[0]);
        }
        UnbalancedCycle {
            cycle,
            forward_product: fwd,
            reverse_product: rev,
        }
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.cycle.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for UnbalancedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(
            f,
            "cycle ({}) has forward product {} and reverse product {}",
            verts.join(","),
            self.forward_product,
            self.reverse_product
        )
    }
}

/// Positive coprime integers `d` with `d[i] a[i][j] == d[j] a[j][i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symmetrization {
    d: Vec<i64>,
}

impl Symmetrization {
    /// Checks positivity, coprimality and that `d` symmetrizes `a`.
    pub fn verify(a: &CartanMatrix, d: Vec<i64>) -> Option<Self> {
        let ok = d.len() == a.rank()
            && d.iter().all(|&x| x > 0)
            && d.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
            && (0..a.rank())
                .all(|i| (0..a.rank()).all(|j| d[i] * a.get(i, j) == d[j] * a.get(j, i)));
        ok.then_some(Symmetrization { d })
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.d
    }

    /// Number of distinct entries, i.e. distinct real-root lengths.
    pub fn distinct_count(&self) -> usize {
        self.d.iter().collect::<BTreeSet<_>>().len()
    }
}

/// Rational potentials `d` propagated over a BFS spanning forest, and the
/// non-tree edges that disagree with them.
struct Forest {
    d: Vec<Ratio<i128>>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    unbalanced: Option<(usize, usize)>,
}

fn spanning_forest(a: &CartanMatrix) -> Forest {
    let n = a.rank();
    let mut d = vec![Ratio::from_integer(0i128); n];
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut unbalanced = None;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        d[root] = Ratio::from_integer(1);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in a.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    // d_u a_uv = d_v a_vu
                    d[v] = d[u] * Ratio::new(a.get(u, v) as i128, a.get(v, u) as i128);
                    parent[v] = Some(u);
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    'scan: for i in 0..n {
        for j in i + 1..n {
            if a.is_adjacent(i, j)
                && d[i] * Ratio::from_integer(a.get(i, j) as i128)
                    != d[j] * Ratio::from_integer(a.get(j, i) as i128)
            {
                unbalanced = Some((i, j));
                break 'scan;
            }
        }
    }
    Forest {
        d,
        parent,
        depth,
        unbalanced,
    }
}

/// Fundamental cycle of the non-tree edge `(u, v)`: from their common
/// ancestor down to `u`, across to `v`, and back up.
fn fundamental_cycle(forest: &Forest, u: usize, v: usize) -> Vec<usize> {
    let (mut x, mut y) = (u, v);
    let mut up_u = vec![x];
    let mut up_v = vec![y];
    while forest.depth[x] > forest.depth[y] {
        x = forest.parent[x].expect("deeper vertex has a parent");
        up_u.push(x);
    }
    while forest.depth[y] > forest.depth[x] {
        y = forest.parent[y].expect("deeper vertex has a parent");
        up_v.push(y);
    }
    while x != y {
        x = forest.parent[x].expect("distinct vertices below a common root");
        y = forest.parent[y].expect("distinct vertices below a common root");
        up_u.push(x);
        up_v.push(y);
    }
    // up_u: u .. lca, up_v: v .. lca
    let mut cycle: Vec<usize> = up_u.iter().rev().copied().collect();
    cycle.extend_from_slice(&up_v[..up_v.len() - 1]);
    cycle.push(cycle[0]);
    cycle
}

/// Balanced-cycle test. On failure returns an unbalanced fundamental cycle.
pub fn is_symmetrizable(a: &CartanMatrix) -> Result<(), UnbalancedCycle> {
    let forest = spanning_forest(a);
    match forest.unbalanced {
        None => Ok(()),
        Some((u, v)) => Err(UnbalancedCycle::from_cycle(
            a,
            fundamental_cycle(&forest, u, v),
        )),
    }
}

/// Largest rank accepted by [`kac_cycle_oracle`].
pub const MAX_ORACLE_RANK: usize = 8;

/// Symmetrizability by comparing forward and reverse entry products over
/// every simple cycle of length at least 3. Exponential; small ranks only.
pub fn kac_cycle_oracle(a: &CartanMatrix) -> Result<bool, SymmetrizeError> {
    let n = a.rank();
    if n > MAX_ORACLE_RANK {
        return Err(SymmetrizeError::RankTooLarge {
            rank: n,
            max: MAX_ORACLE_RANK,
        });
    }
    fn walk(a: &CartanMatrix, start: usize, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        for next in 0..a.rank() {
            if next == last || a.get(last, next) == 0 {
                continue;
            }
            if next == start && path.len() >= 3 {
                let mut fwd = 1i128;
                let mut rev = 1i128;
                for k in 0..path.len() {
                    let (x, y) = (path[k], path[(k + 1) % path.len()]);
                    fwd *= a.get(x, y) as i128;
                    rev *= a.get(y, x) as i128;
                }
                if fwd != rev {
                    return false;
                }
            } else if next > start && !used[next] {
                used[next] = true;
                path.push(next);
                let ok = walk(a, start, path, used);
                path.pop();
                used[next] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut used = vec![false; n];
    for start in 0..n {
        used[start] = true;
        let ok = walk(a, start, &mut vec![start], &mut used);
        used[start] = false;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique normalized symmetrizer of an indecomposable symmetrizable matrix.
pub fn symmetrizer(a: &CartanMatrix) -> Result<Symmetrization, SymmetrizeError> {
    if !a.is_indecomposable() {
        return Err(SymmetrizeError::Decomposable);
    }
    symmetrizer_any(a)
}

/// Normalizes over the whole matrix without the indecomposability check.
/// For decomposable input the relative scale between components is arbitrary.
pub(crate) fn symmetrizer_any(a: &CartanMatrix) -> Result<Symmetrization, SymmetrizeError> {
    let forest = spanning_forest(a);
    if let Some((u, v)) = forest.unbalanced {
        return Err(SymmetrizeError::NotSymmetrizable(UnbalancedCycle::from_cycle(
            a,
            fundamental_cycle(&forest, u, v),
        )));
    }
    let lcm = forest.d.iter().fold(1i128, |l, x| l.lcm(x.denom()));
    let ints: Vec<i128> = forest.d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i128, |g, x| g.gcd(x));
    let d: Vec<i64> = ints
        .iter()
        .map(|x| i64::try_from(x / g).expect("symmetrizer entries fit in i64"))
        .collect();
    let sym = Symmetrization::verify(a, d)
        .expect("balanced spanning forest always yields a symmetrizer");
    Ok(sym)
}

/// Symmetric iff every edge label has `p == q`.
pub fn is_symmetric(a: &CartanMatrix) -> bool {
    a.is_symmetric()
}

/// Number of distinct real-root lengths.
pub fn root_length_count(a: &CartanMatrix) -> Result<usize, SymmetrizeError> {
    Ok(symmetrizer(a)?.distinct_count())
}

/// `B = D A`, with `B[i][j] = (alpha_i | alpha_j)` and `B[i][i] = 2 d_i`.
pub fn bilinear_form(a: &CartanMatrix) -> Result<Vec<Vec<i64>>, SymmetrizeError> {
    let sym = symmetrizer_any(a)?;
    Ok(bilinear_form_with(a, &sym))
}

pub(crate) fn bilinear_form_with(a: &CartanMatrix, sym: &Symmetrization) -> Vec<Vec<i64>> {
    (0..a.rank())
        .map(|i| (0..a.rank()).map(|j| sym.d[i] * a.get(i, j)).collect())
        .collect()
}
