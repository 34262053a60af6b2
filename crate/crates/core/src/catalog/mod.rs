//! The catalog of hyperbolic diagrams: enumeration, per-entry data,
//! persistence and the property harness.

pub mod canonical;
pub mod enumerate;
pub mod io;
pub mod oracle;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::is_compact_hyperbolic;
use crate::gcm::CartanMatrix;
use crate::symmetrize::{symmetrizer, Symmetrization};
use crate::weyl::{orbit_partition, OrbitPartition};

use self::canonical::canonical_form;
use self::enumerate::{enumerate_hyperbolic_matrices_with_jobs, EnumError};

/// Whether the skeleton partition is claimed to be the Weyl-orbit partition
/// of the simple roots. The claim is made exactly for symmetrizable entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitSemantics {
    Verified,
    Unverified,
}

impl OrbitSemantics {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitSemantics::Verified => "verified",
            OrbitSemantics::Unverified => "unverified",
        }
    }
}

impl fmt::Display for OrbitSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One isomorphism class of hyperbolic diagrams.
///
/// `symmetrizer`, `root_lengths` are `Some` exactly when `symmetrizable`, and
/// `orbit_semantics` is `Verified` exactly then too. Vertices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub canonical_id: String,
    pub rank: usize,
    pub matrix: CartanMatrix,
    pub compact: bool,
    pub symmetrizable: bool,
    pub symmetrizer: Option<Symmetrization>,
    pub root_lengths: Option<usize>,
    pub orbit_blocks: OrbitPartition,
    pub orbit_semantics: OrbitSemantics,
    pub dual_id: String,
}

impl CatalogEntry {
    fn compute(canonical_id: String, matrix: CartanMatrix) -> Result<Self, CatalogError> {
        let compact = is_compact_hyperbolic(&matrix).map_err(|e| CatalogError::Invariant {
            id: canonical_id.clone(),
            reason: e.to_string(),
        })?;
        let symmetrizer = symmetrizer(&matrix).ok();
        let symmetrizable = symmetrizer.is_some();
        Ok(CatalogEntry {
            rank: matrix.rank(),
            compact,
            symmetrizable,
            root_lengths: symmetrizer.as_ref().map(Symmetrization::distinct_count),
            symmetrizer,
            orbit_blocks: orbit_partition(&matrix.to_diagram()),
            orbit_semantics: if symmetrizable {
                OrbitSemantics::Verified
            } else {
                OrbitSemantics::Unverified
            },
            dual_id: String::new(),
            canonical_id,
            matrix,
        })
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error("entry {id}: {reason}")]
    Invariant { id: String, reason: String },
    #[error("entry {id}: transpose class is not in the catalog")]
    MissingDual { id: String },
    #[error("duplicate entry {id}")]
    Duplicate { id: String },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("missing catalog header line")]
    MissingHeader,
    #[error("unsupported catalog format `{found}`, expected `{}`", io::FORMAT)]
    VersionMismatch { found: String },
}

/// `"<rank>-<ordinal>"` with a 1-based ordinal padded to three digits.
pub fn format_id(rank: usize, ordinal: usize) -> String {
    format!("{rank}-{ordinal:03}")
}

/// An ordered list of entries, sorted by rank then matrix entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Builds entries for isomorphism classes given by arbitrary representatives.
    /// Every transpose class must be present.
    pub fn from_matrices(matrices: impl IntoIterator<Item = CartanMatrix>) -> Result<Self, CatalogError> {
        let mut canon: Vec<CartanMatrix> = matrices
            .into_iter()
            .map(|m| canonical_form(&m).into_matrix())
            .collect();
        canon.sort_by(|a, b| (a.rank(), a.entries()).cmp(&(b.rank(), b.entries())));
        let mut ids: BTreeMap<CartanMatrix, String> = BTreeMap::new();
        let mut entries = Vec::with_capacity(canon.len());
        let mut ordinal = 0;
        let mut prev_rank = 0;
        for m in canon {
            ordinal = if m.rank() == prev_rank { ordinal + 1 } else { 1 };
            prev_rank = m.rank();
            let id = format_id(m.rank(), ordinal);
            if ids.insert(m.clone(), id.clone()).is_some() {
                return Err(CatalogError::Duplicate { id });
            }
            entries.push(CatalogEntry::compute(id, m)?);
        }
        for e in &mut entries {
            let dual = canonical_form(&e.matrix.dual()).into_matrix();
            e.dual_id = ids
                .get(&dual)
                .cloned()
                .ok_or_else(|| CatalogError::MissingDual {
                    id: e.canonical_id.clone(),
                })?;
        }
        Ok(Catalog { entries })
    }

    /// Enumerates ranks `min..=max` on `jobs` threads (`0`: default pool size).
    pub fn enumerate(min: usize, max: usize, jobs: usize) -> Result<Self, CatalogError> {
        Catalog::from_matrices(enumerate_hyperbolic_matrices_with_jobs(min, max, jobs)?)
    }

    /// Wraps entries as given, without recomputing anything.
    pub fn from_entries(entries: Vec<CatalogEntry>) -> Self {
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Vec<CatalogEntry> {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<CatalogEntry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.canonical_id == id)
    }

    pub fn symmetrizable_count(&self) -> usize {
        self.entries.iter().filter(|e| e.symmetrizable).count()
    }

    /// Entry counts indexed by rank.
    pub fn rank_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.rank).or_insert(0) += 1;
        }
        counts
    }

    /// The entry isomorphic to `a`, if any.
    pub fn find_class(&self, a: &CartanMatrix) -> Option<&CatalogEntry> {
        let c = canonical_form(a).into_matrix();
        self.entries.iter().find(|e| e.matrix == c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    #[test]
    fn rank_three_catalog() {
        let cat = Catalog::enumerate(3, 3, 0).unwrap();
        assert_eq!(cat.len(), 123);
        assert_eq!(cat.entries()[0].canonical_id, "3-001");
        assert_eq!(cat.entries()[122].canonical_id, "3-123");
        for e in cat.entries() {
            assert_eq!(e.symmetrizer.is_some(), e.symmetrizable);
            assert_eq!(e.root_lengths.is_some(), e.symmetrizable);
            let dual = cat.get(&e.dual_id).unwrap();
            assert_eq!(dual.dual_id, e.canonical_id);
        }
    }

    #[test]
    fn missing_dual_is_an_error() {
        // 1 -(1,4)- 2 - 3 without its transpose
        let a = CartanMatrix::new(vec![vec![2, -1, 0], vec![-4, 2, -1], vec![0, -1, 2]]).unwrap();
        assert!(matches!(
            Catalog::from_matrices([a]),
            Err(CatalogError::MissingDual { .. })
        ));
    }

    #[test]
    fn e10_is_present_and_self_dual() {
        let cat = Catalog::enumerate(10, 10, 0).unwrap();
        let e = cat.find_class(&standard::e10()).unwrap();
        assert_eq!(e.dual_id, e.canonical_id);
        assert_eq!(e.symmetrizer.as_ref().unwrap().d(), &[1; 10]);
        assert_eq!(e.orbit_blocks.len(), 1);
    }
}
