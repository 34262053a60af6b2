//! Line-delimited JSON persistence.
//!
//! The first line is a header object naming the format version; every
//! following line is one entry. Vertex indices inside `orbit_blocks` are
//! 1-based, matrix rows and columns follow vertex order. Output depends only
//! on the catalog, so equal catalogs serialize to identical bytes.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{Catalog, CatalogEntry, CatalogError, OrbitSemantics};
use crate::gcm::CartanMatrix;
use crate::symmetrize::Symmetrization;
use crate::weyl::OrbitPartition;

pub const FORMAT: &str = "dynkin-catalog/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    format: String,
    indices: String,
    entries: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    canonical_id: String,
    rank: usize,
    matrix: Vec<Vec<i64>>,
    compact: bool,
    symmetrizable: bool,
    symmetrizer: Option<Vec<i64>>,
    root_lengths: Option<usize>,
    orbit_blocks: Vec<Vec<usize>>,
    orbit_semantics: OrbitSemantics,
    dual_id: String,
}

impl From<&CatalogEntry> for Record {
    fn from(e: &CatalogEntry) -> Self {
        Record {
            canonical_id: e.canonical_id.clone(),
            rank: e.rank,
            matrix: e.matrix.rows(),
            compact: e.compact,
            symmetrizable: e.symmetrizable,
            symmetrizer: e.symmetrizer.as_ref().map(|s| s.d().to_vec()),
            root_lengths: e.root_lengths,
            orbit_blocks: e.orbit_blocks.to_one_based(),
            orbit_semantics: e.orbit_semantics,
            dual_id: e.dual_id.clone(),
        }
    }
}

fn parse_id(id: &str) -> Option<(usize, usize)> {
    let (rank, ordinal) = id.split_once('-')?;
    let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(rank) || ordinal.len() < 3 || !all_digits(ordinal) {
        return None;
    }
    Some((rank.parse().ok()?, ordinal.parse().ok()?))
}

impl Record {
    fn into_entry(self, line: usize) -> Result<CatalogEntry, CatalogError> {
        let bad = |reason: String| CatalogError::Malformed { line, reason };
        match parse_id(&self.canonical_id) {
            Some((rank, ordinal)) if rank == self.rank && ordinal >= 1 => {}
            _ => return Err(bad(format!("bad canonical_id `{}`", self.canonical_id))),
        }
        if parse_id(&self.dual_id).is_none() {
            return Err(bad(format!("bad dual_id `{}`", self.dual_id)));
        }
        if self.matrix.len() != self.rank {
            return Err(bad(format!(
                "rank {} but matrix has {} rows",
                self.rank,
                self.matrix.len()
            )));
        }
        let matrix = CartanMatrix::new(self.matrix).map_err(|e| bad(e.to_string()))?;
        if self.symmetrizer.is_some() != self.symmetrizable {
            return Err(bad(format!(
                "symmetrizable={} disagrees with symmetrizer presence",
                self.symmetrizable
            )));
        }
        if self.root_lengths.is_some() != self.symmetrizable {
            return Err(bad(format!(
                "symmetrizable={} disagrees with root_lengths presence",
                self.symmetrizable
            )));
        }
        let expected = if self.symmetrizable {
            OrbitSemantics::Verified
        } else {
            OrbitSemantics::Unverified
        };
        if self.orbit_semantics != expected {
            return Err(bad(format!(
                "orbit_semantics {} requires symmetrizable={}",
                self.orbit_semantics, !self.symmetrizable
            )));
        }
        let symmetrizer = match self.symmetrizer {
            None => None,
            Some(d) => Some(
                Symmetrization::verify(&matrix, d.clone())
                    .ok_or_else(|| bad(format!("{d:?} is not a normalized symmetrizer")))?,
            ),
        };
        if let (Some(s), Some(rho)) = (&symmetrizer, self.root_lengths) {
            if s.distinct_count() != rho {
                return Err(bad(format!(
                    "root_lengths {rho} but symmetrizer has {} distinct entries",
                    s.distinct_count()
                )));
            }
        }
        let orbit_blocks = OrbitPartition::from_one_based(self.orbit_blocks)
            .filter(|p| p.is_partition_of(self.rank))
            .ok_or_else(|| bad(format!("orbit_blocks do not partition 1..{}", self.rank)))?;
        Ok(CatalogEntry {
            canonical_id: self.canonical_id,
            rank: self.rank,
            matrix,
            compact: self.compact,
            symmetrizable: self.symmetrizable,
            symmetrizer,
            root_lengths: self.root_lengths,
            orbit_blocks,
            orbit_semantics: self.orbit_semantics,
            dual_id: self.dual_id,
        })
    }
}

impl Catalog {
    /// The full file contents.
    pub fn to_jsonl(&self) -> String {
        let mut out = Vec::new();
        self.write_jsonl(&mut out).expect("writing to memory cannot fail");
        String::from_utf8(out).expect("serde_json emits UTF-8")
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<(), CatalogError> {
        let header = Header {
            format: FORMAT.to_string(),
            indices: "1-based".to_string(),
            entries: self.entries.len(),
        };
        writeln!(w, "{}", serde_json::to_string(&header).expect("header serializes"))?;
        for e in &self.entries {
            let rec = Record::from(e);
            writeln!(w, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
        }
        w.flush()?;
        Ok(())
    }

    /// Parses a catalog, enforcing the per-record invariants, id uniqueness
    /// and that every `dual_id` names an entry. Mathematical properties
    /// (hyperbolicity, canonical form, dual correctness) are left to
    /// [`verify`](super::verify).
    pub fn read_jsonl<R: BufRead>(r: R) -> Result<Catalog, CatalogError> {
        let mut lines = r.lines().enumerate().filter_map(|(k, l)| match l {
            Ok(s) if s.trim().is_empty() => None,
            other => Some((k + 1, other)),
        });
        let (hline, header) = lines.next().ok_or(CatalogError::MissingHeader)?;
        let header: Header =
            serde_json::from_str(&header?).map_err(|_| CatalogError::MissingHeader)?;
        if header.format != FORMAT {
            return Err(CatalogError::VersionMismatch {
                found: header.format,
            });
        }
        if header.indices != "1-based" {
            return Err(CatalogError::Malformed {
                line: hline,
                reason: format!("unsupported indices `{}`", header.indices),
            });
        }
        let mut entries = Vec::new();
        let mut ids = BTreeSet::new();
        for (line, text) in lines {
            let rec: Record = serde_json::from_str(&text?).map_err(|e| CatalogError::Malformed {
                line,
                reason: e.to_string(),
            })?;
            let entry = rec.into_entry(line)?;
            if !ids.insert(entry.canonical_id.clone()) {
                return Err(CatalogError::Duplicate {
                    id: entry.canonical_id,
                });
            }
            entries.push(entry);
        }
        if entries.len() != header.entries {
            return Err(CatalogError::Malformed {
                line: hline,
                reason: format!("header announces {} entries, found {}", header.entries, entries.len()),
            });
        }
        if let Some(e) = entries.iter().find(|e| !ids.contains(&e.dual_id)) {
            return Err(CatalogError::MissingDual {
                id: e.canonical_id.clone(),
            });
        }
        Ok(Catalog { entries })
    }

    pub fn from_jsonl(text: &str) -> Result<Catalog, CatalogError> {
        Catalog::read_jsonl(text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Catalog {
        Catalog::enumerate(3, 4, 0).unwrap()
    }

    #[test]
    fn round_trip_is_lossless_and_byte_stable() {
        let cat = small();
        let text = cat.to_jsonl();
        let back = Catalog::from_jsonl(&text).unwrap();
        assert_eq!(back, cat);
        assert_eq!(back.to_jsonl(), text);
    }

    #[test]
    fn record_key_order() {
        let text = small().to_jsonl();
        let first = text.lines().nth(1).unwrap();
        let keys = [
            "canonical_id",
            "rank",
            "matrix",
            "compact",
            "symmetrizable",
            "symmetrizer",
            "root_lengths",
            "orbit_blocks",
            "orbit_semantics",
            "dual_id",
        ];
        let positions: Vec<usize> = keys
            .iter()
            .map(|k| first.find(&format!("\"{k}\":")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{first}");
        assert!(text.starts_with("{\"format\":\"dynkin-catalog/1\",\"indices\":\"1-based\""));
    }

    #[test]
    fn empty_catalog() {
        let text = Catalog::default().to_jsonl();
        assert_eq!(text.lines().count(), 1);
        assert!(Catalog::from_jsonl(&text).unwrap().is_empty());
    }

    #[test]
    fn symmetrizable_without_symmetrizer_is_rejected() {
        let text = small().to_jsonl();
        let line = text
            .lines()
            .find(|l| l.contains("\"symmetrizable\":true"))
            .unwrap();
        let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
        v["symmetrizer"] = serde_json::Value::Null;
        let edited = text.replace(line, &v.to_string());
        assert!(matches!(
            Catalog::from_jsonl(&edited),
            Err(CatalogError::Malformed { .. })
        ));
    }

    #[test]
    fn header_checks() {
        assert!(matches!(Catalog::from_jsonl(""), Err(CatalogError::MissingHeader)));
        let text = small().to_jsonl().replacen("dynkin-catalog/1", "dynkin-catalog/2", 1);
        assert!(matches!(
            Catalog::from_jsonl(&text),
            Err(CatalogError::VersionMismatch { .. })
        ));
    }

    #[test]
    fn ids() {
        assert_eq!(parse_id("3-001"), Some((3, 1)));
        assert_eq!(parse_id("10-004"), Some((10, 4)));
        assert_eq!(parse_id("3-1"), None);
        assert_eq!(parse_id("x-001"), None);
    }
}
