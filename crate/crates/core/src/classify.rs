//! Finite / affine / indefinite classification and the hyperbolic tests.
//!
//! An indecomposable matrix is finite exactly when all of its principal minors
//! are positive, and affine exactly when its determinant vanishes while every
//! proper principal minor is positive. Everything here is derived from the
//! table of all principal minors, computed exactly.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::det::principal_det;
use crate::gcm::{CartanMatrix, VertexSet};

/// Largest rank for which all `2^n - 1` principal minors are tabulated.
pub const MAX_MINOR_RANK: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("rank {rank} exceeds the supported bound {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("matrix is decomposable")]
    Decomposable,
    #[error("matrix is hyperbolic; no witness exists")]
    Hyperbolic,
    #[error("hyperbolicity needs rank at least 2")]
    RankTooSmall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Finite => "finite",
            Kind::Affine => "affine",
            Kind::Indefinite => "indefinite",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification verdict for one indecomposable matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub kind: Kind,
    pub hyperbolic: bool,
    pub compact_hyperbolic: bool,
}

/// Exact determinant of every principal submatrix, indexed by subset bitmask.
///
/// Entry 0 (the empty subset) is 1.
#[derive(Debug, Clone)]
pub struct PrincipalMinors {
    rank: usize,
    dets: Vec<i128>,
}

impl PrincipalMinors {
    pub fn compute(a: &CartanMatrix) -> Result<Self, ClassifyError> {
        let n = a.rank();
        if n > MAX_MINOR_RANK {
            return Err(ClassifyError::RankTooLarge {
                rank: n,
                max: MAX_MINOR_RANK,
            });
        }
        let mut dets = vec![1i128; 1 << n];
        let mut idx = Vec::with_capacity(n);
        for (mask, slot) in dets.iter_mut().enumerate().skip(1) {
            idx.clear();
            idx.extend(VertexSet::from_bits(mask as u32).iter());
            *slot = principal_det(a.entries(), n, &idx);
        }
        Ok(PrincipalMinors { rank: n, dets })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, s: VertexSet) -> i128 {
        self.dets[s.bits() as usize]
    }

    pub fn full(&self) -> i128 {
        self.dets[self.dets.len() - 1]
    }

    /// `(subset, determinant)` for every nonempty subset.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, i128)> + '_ {
        self.dets
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, &d)| (VertexSet::from_bits(m as u32), d))
    }

    /// For every subset, whether all of its principal minors are positive.
    fn positive_table(&self) -> Vec<bool> {
        let mut pos = vec![false; self.dets.len()];
        pos[0] = true;
        for m in 1..self.dets.len() {
            if self.dets[m] <= 0 {
                continue;
            }
            let s = VertexSet::from_bits(m as u32);
            pos[m] = s.iter().all(|i| pos[s.without(i).bits() as usize]);
        }
        pos
    }
}

/// All principal minors of `a`.
pub fn principal_minors(a: &CartanMatrix) -> Result<PrincipalMinors, ClassifyError> {
    PrincipalMinors::compute(a)
}

/// Per-subset kinds of a matrix, answered from its minor table.
///
/// Only meaningful for subsets that induce a connected subdiagram.
pub struct SubsetKinds {
    minors: PrincipalMinors,
    positive: Vec<bool>,
}

impl SubsetKinds {
    pub fn new(a: &CartanMatrix) -> Result<Self, ClassifyError> {
        let minors = PrincipalMinors::compute(a)?;
        let positive = minors.positive_table();
        Ok(SubsetKinds { minors, positive })
    }

    pub fn minors(&self) -> &PrincipalMinors {
        &self.minors
    }

    pub fn kind(&self, s: VertexSet) -> Kind {
        let m = s.bits() as usize;
        if self.positive[m] {
            Kind::Finite
        } else if self.minors.dets[m] == 0 && s.iter().all(|i| self.positive[s.without(i).bits() as usize])
        {
            Kind::Affine
        } else {
            Kind::Indefinite
        }
    }
}

/// Full hyperbolicity analysis of one indecomposable matrix.
struct Analysis {
    kind: Kind,
    hyperbolic: bool,
    compact: bool,
    /// Smallest proper connected indefinite subset, if any.
    witness: Option<VertexSet>,
}

fn analyze(a: &CartanMatrix) -> Result<Analysis, ClassifyError> {
    let n = a.rank();
    if n > MAX_MINOR_RANK {
        return Err(ClassifyError::RankTooLarge {
            rank: n,
            max: MAX_MINOR_RANK,
        });
    }
    if !a.is_indecomposable() {
        return Err(ClassifyError::Decomposable);
    }
    let kinds = SubsetKinds::new(a)?;
    let full = VertexSet::full(n);
    let kind = kinds.kind(full);
    let mut witness: Option<VertexSet> = None;
    let mut all_finite = true;
    for m in 1..(1u32 << n) - 1 {
        let s = VertexSet::from_bits(m);
        if !a.is_connected_subset(s) {
            continue;
        }
        match kinds.kind(s) {
            Kind::Finite => {}
            Kind::Affine => all_finite = false,
            Kind::Indefinite => {
                all_finite = false;
                let better = match witness {
                    None => true,
                    Some(w) => (s.len(), s) < (w.len(), w),
                };
                if better {
                    witness = Some(s);
                }
            }
        }
    }
    let hyperbolic = kind == Kind::Indefinite && witness.is_none() && n >= 2;
    Ok(Analysis {
        kind,
        hyperbolic,
        compact: hyperbolic && all_finite,
        witness,
    })
}

/// Kind of an indecomposable matrix, with the hyperbolic flags filled in.
pub fn classify_indecomposable(a: &CartanMatrix) -> Result<CartanType, ClassifyError> {
    let r = analyze(a)?;
    Ok(CartanType {
        kind: r.kind,
        hyperbolic: r.hyperbolic,
        compact_hyperbolic: r.compact,
    })
}

/// Indefinite, and every proper connected subdiagram is finite or affine.
pub fn is_hyperbolic(a: &CartanMatrix) -> Result<bool, ClassifyError> {
    if a.rank() < 2 {
        return Err(ClassifyError::RankTooSmall);
    }
    Ok(analyze(a)?.hyperbolic)
}

/// Hyperbolic, and every proper connected subdiagram is finite.
pub fn is_compact_hyperbolic(a: &CartanMatrix) -> Result<bool, ClassifyError> {
    if a.rank() < 2 {
        return Ok(false);
    }
    Ok(analyze(a)?.compact)
}

/// Why an indecomposable matrix fails to be hyperbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// A proper connected subset whose subdiagram is indefinite.
    Subdiagram(VertexSet),
    /// The matrix itself is finite or affine.
    NotIndefinite(Kind),
}

/// Explains why `a` is not hyperbolic. The subset returned is the smallest
/// (then bitmask-least) proper connected indefinite one.
pub fn hyperbolicity_witness(a: &CartanMatrix) -> Result<Witness, ClassifyError> {
    let r = analyze(a)?;
    if r.kind != Kind::Indefinite {
        return Ok(Witness::NotIndefinite(r.kind));
    }
    match r.witness {
        Some(s) => Ok(Witness::Subdiagram(s)),
        None => Err(ClassifyError::Hyperbolic),
    }
}

/// One connected component and its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentType {
    pub vertices: Vec<usize>,
    pub cartan_type: CartanType,
}

/// Classifies every connected component.
pub fn classify(a: &CartanMatrix) -> Result<Vec<ComponentType>, ClassifyError> {
    a.components()
        .into_iter()
        .map(|vertices| {
            let sub = a
                .submatrix(&vertices)
                .expect("component indices are in range");
            Ok(ComponentType {
                cartan_type: classify_indecomposable(&sub)?,
                vertices,
            })
        })
        .collect()
}
