//! Generalized Cartan matrices and their Dynkin diagrams.
//!
//! Indices are 0-based throughout the Rust API. Everything that is shown to a
//! user or written to disk (error messages, subsets, cycles, catalog records)
//! is 1-based.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

/// Errors raised while building or querying a generalized Cartan matrix.
///
/// Positions in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcmError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("diagonal entry {value} at ({i},{i}), expected 2", i = .i + 1)]
    Diagonal { i: usize, value: i64 },
    #[error("positive off-diagonal entry {value} at ({},{})", .i + 1, .j + 1)]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error(
        "zero-symmetry axiom violated at ({},{}): entry is 0 but its transpose is {transpose}",
        .i + 1, .j + 1
    )]
    ZeroSymmetry { i: usize, j: usize, transpose: i64 },
    #[error("vertex index {index} out of range for rank {rank}", index = .index + 1)]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vertices {} and {} are not adjacent", .i + 1, .j + 1)]
    NotAdjacent { i: usize, j: usize },
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("rank {rank} exceeds the supported bound {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("invalid diagram edge ({}, {}): {reason}", .i + 1, .j + 1)]
    InvalidEdge {
        i: usize,
        j: usize,
        reason: &'static str,
    },
}

/// Maximum rank a [`VertexSet`] can address.
pub const MAX_SET_RANK: usize = 32;

/// A subset of vertex indices stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_SET_RANK);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members as 1-based indices.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders 1-based, e.g. `{1,3}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// A square integer matrix with 2 on the diagonal, non-positive entries off
/// it, and `a[i][j] == 0` exactly when `a[j][i] == 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates a row-major array of rows.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, GcmError> {
        let n = rows.len();
        if n == 0 {
            return Err(GcmError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GcmError::NotSquare {
                    row: row + 1,
                    len: r.len(),
                    expected: n,
                });
            }
            entries.extend_from_slice(r);
        }
        Self::from_flat(n, entries)
    }

    /// Validates a flat row-major entry vector of length `rank * rank`.
    pub fn from_flat(rank: usize, entries: Vec<i64>) -> Result<Self, GcmError> {
        if rank == 0 {
            return Err(GcmError::Empty);
        }
        if entries.len() != rank * rank {
            return Err(GcmError::NotSquare {
                row: entries.len() / rank + 1,
                len: entries.len() % rank,
                expected: rank,
            });
        }
        for i in 0..rank {
            for j in 0..rank {
                let v = entries[i * rank + j];
                if i == j {
                    if v != 2 {
                        return Err(GcmError::Diagonal { i, value: v });
                    }
                } else if v > 0 {
                    return Err(GcmError::PositiveOffDiagonal { i, j, value: v });
                } else if v == 0 && entries[j * rank + i] != 0 {
                    return Err(GcmError::ZeroSymmetry {
                        i,
                        j,
                        transpose: entries[j * rank + i],
                    });
                }
            }
        }
        Ok(CartanMatrix { rank, entries })
    }

    /// Builds without checking the axioms. Callers guarantee validity.
    pub(crate) fn from_flat_unchecked(rank: usize, entries: Vec<i64>) -> Self {
        debug_assert!(Self::from_flat(rank, entries.clone()).is_ok());
        CartanMatrix { rank, entries }
    }

    /// The `n x n` matrix with no edges.
    pub fn diagonal(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 2;
        }
        CartanMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j) != 0
    }

    /// Neighbours of `i` in increasing order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.is_adjacent(i, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    fn check_index(&self, i: usize) -> Result<(), GcmError> {
        if i >= self.rank {
            Err(GcmError::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Multiplicity `a[j][i] / a[i][j]` of the oriented edge `(i, j)`.
    pub fn edge_multiplicity(&self, i: usize, j: usize) -> Result<Ratio<i64>, GcmError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if !self.is_adjacent(i, j) {
            return Err(GcmError::NotAdjacent { i, j });
        }
        Ok(Ratio::new(self.get(j, i), self.get(i, j)))
    }

    /// The transpose, i.e. the diagram with every arrow reversed.
    pub fn dual(&self) -> CartanMatrix {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        CartanMatrix { rank: n, entries }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Connected components of the diagram, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether the vertices of `s` induce a connected subdiagram. The empty set is not connected.
    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        let Some(start) = s.iter().next() else {
            return false;
        };
        let mut reached = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in s.iter() {
                if !reached.contains(w) && self.get(v, w) != 0 {
                    reached.insert(w);
                    stack.push(w);
                }
            }
        }
        reached == s
    }

    /// Principal submatrix on `indices`, reindexed in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Result<CartanMatrix, GcmError> {
        if indices.is_empty() {
            return Err(GcmError::EmptySubset);
        }
        for &i in indices {
            self.check_index(i)?;
        }
        let k = indices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                entries.push(self.get(i, j));
            }
        }
        // A repeated index would put a 2 off the diagonal.
        CartanMatrix::from_flat(k, entries)
    }

    /// Principal submatrix on the members of `s`, reindexed in increasing order.
    pub fn induced_subdiagram(&self, s: VertexSet) -> Result<CartanMatrix, GcmError> {
        if s.is_empty() {
            return Err(GcmError::EmptySubset);
        }
        self.submatrix(&s.to_vec())
    }

    /// `P A P^T` where vertex `perm[k]` of `self` becomes vertex `k`.
    pub fn permuted(&self, perm: &[usize]) -> CartanMatrix {
        assert_eq!(perm.len(), self.rank);
        let n = self.rank;
        let mut entries = Vec::with_capacity(n * n);
        for &i in perm {
            for &j in perm {
                entries.push(self.get(i, j));
            }
        }
        CartanMatrix { rank: n, entries }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &CartanMatrix) -> CartanMatrix {
        let n = self.rank + other.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = if i < self.rank && j < self.rank {
                    self.get(i, j)
                } else if i >= self.rank && j >= self.rank {
                    other.get(i - self.rank, j - self.rank)
                } else {
                    0
                };
            }
        }
        CartanMatrix { rank: n, entries }
    }

    pub fn to_diagram(&self) -> DynkinDiagram {
        let mut edges = BTreeMap::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.get(i, j) != 0 {
                    edges.insert(
                        (i, j),
                        EdgeLabel {
                            p: (-self.get(i, j)) as u32,
                            q: (-self.get(j, i)) as u32,
                        },
                    );
                }
            }
        }
        DynkinDiagram {
            rank: self.rank,
            edges,
        }
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanMatrix{:?}", self.rows())
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.entries.chunks(self.rank).enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// How an edge is drawn. Derived from the label, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderClass {
    Single,
    Arrow2,
    Arrow3,
    Arrow4,
    DoubleHeaded,
    Labeled,
}

impl RenderClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RenderClass::Single => "single",
            RenderClass::Arrow2 => "arrow2",
            RenderClass::Arrow3 => "arrow3",
            RenderClass::Arrow4 => "arrow4",
            RenderClass::DoubleHeaded => "double_headed",
            RenderClass::Labeled => "labeled",
        }
    }
}

/// Edge `{i, j}` with `i < j` carries `p = -a[i][j]` and `q = -a[j][i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    pub p: u32,
    pub q: u32,
}

impl EdgeLabel {
    pub fn new(p: u32, q: u32) -> Self {
        EdgeLabel { p, q }
    }

    pub fn is_symmetric(self) -> bool {
        self.p == self.q
    }

    pub fn product(self) -> u32 {
        self.p * self.q
    }

    pub fn reversed(self) -> Self {
        EdgeLabel {
            p: self.q,
            q: self.p,
        }
    }

    pub fn render_class(self) -> RenderClass {
        match (self.p.min(self.q), self.p.max(self.q)) {
            (1, 1) => RenderClass::Single,
            (1, 2) => RenderClass::Arrow2,
            (1, 3) => RenderClass::Arrow3,
            (1, 4) => RenderClass::Arrow4,
            (2, 2) => RenderClass::DoubleHeaded,
            _ => RenderClass::Labeled,
        }
    }
}

/// Vertices `0..rank` plus labeled edges keyed by `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    rank: usize,
    edges: BTreeMap<(usize, usize), EdgeLabel>,
}

impl DynkinDiagram {
    /// Edges may be given in either orientation; `(j, i, (p, q))` is stored as `(i, j, (q, p))`.
    pub fn new(
        rank: usize,
        edges: impl IntoIterator<Item = (usize, usize, EdgeLabel)>,
    ) -> Result<Self, GcmError> {
        if rank == 0 {
            return Err(GcmError::Empty);
        }
        let mut map = BTreeMap::new();
        for (i, j, label) in edges {
            if i >= rank || j >= rank {
                return Err(GcmError::IndexOutOfRange {
                    index: i.max(j),
                    rank,
                });
            }
            if i == j {
                return Err(GcmError::InvalidEdge {
                    i,
                    j,
                    reason: "self-loop",
                });
            }
            if label.p == 0 || label.q == 0 {
                return Err(GcmError::InvalidEdge {
                    i,
                    j,
                    reason: "labels must be positive",
                });
            }
            let (key, label) = if i < j {
                ((i, j), label)
            } else {
                ((j, i), label.reversed())
            };
            if map.insert(key, label).is_some() {
                return Err(GcmError::InvalidEdge {
                    i,
                    j,
                    reason: "duplicate edge",
                });
            }
        }
        Ok(DynkinDiagram { rank, edges: map })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeLabel)> + '_ {
        self.edges.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Label oriented from `i` to `j`.
    pub fn label(&self, i: usize, j: usize) -> Option<EdgeLabel> {
        if i < j {
            self.edges.get(&(i, j)).copied()
        } else {
            self.edges.get(&(j, i)).map(|l| l.reversed())
        }
    }

    pub fn to_matrix(&self) -> CartanMatrix {
        let n = self.rank;
        let mut m = CartanMatrix::diagonal(n);
        for (&(i, j), l) in &self.edges {
            m.entries[i * n + j] = -(l.p as i64);
            m.entries[j * n + i] = -(l.q as i64);
        }
        m
    }

    /// Keeps only the `(1,1)` edges.
    pub fn simply_laced_skeleton(&self) -> DynkinDiagram {
        DynkinDiagram {
            rank: self.rank,
            edges: self
                .edges
                .iter()
                .filter(|(_, l)| l.p == 1 && l.q == 1)
                .map(|(&k, &l)| (k, l))
                .collect(),
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.values().all(|l| l.p == 1 && l.q == 1)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.to_matrix().components()
    }
}
