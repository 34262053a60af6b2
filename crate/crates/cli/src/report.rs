//! Result records for the single-matrix subcommands, with text and JSON
//! renderings. Vertex indices are 1-based in both.

use std::fmt::Write as _;

use dynkin_core::catalog::OrbitSemantics;
use dynkin_core::classify::{classify, ClassifyError};
use dynkin_core::symmetrize::{bilinear_form, is_symmetrizable, symmetrizer, SymmetrizeError};
use dynkin_core::weyl::orbit_partition;
use dynkin_core::{CartanMatrix, Kind};
use serde::{Deserialize, Serialize};

/// Placeholder for symmetrizer data of a non-symmetrizable matrix in
/// human-readable output.
pub const NOT_SYMMETRIZABLE: &str = "N.S.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub vertices: Vec<usize>,
    pub kind: Kind,
    pub hyperbolic: bool,
    pub compact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    pub indecomposable: bool,
    /// `None` when decomposable; see `components`.
    pub kind: Option<Kind>,
    pub hyperbolic: bool,
    pub compact: bool,
    pub components: Vec<ComponentRecord>,
    pub symmetrizable: bool,
    pub symmetrizer: Option<Vec<i64>>,
    pub root_lengths: Option<usize>,
    pub orbit_blocks: Vec<Vec<usize>>,
    pub orbit_semantics: OrbitSemantics,
}

fn semantics(symmetrizable: bool) -> OrbitSemantics {
    if symmetrizable {
        OrbitSemantics::Verified
    } else {
        OrbitSemantics::Unverified
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn blocks_text(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

impl ClassifyRecord {
    pub fn compute(a: &CartanMatrix) -> Result<Self, ClassifyError> {
        let comps = classify(a)?;
        let indecomposable = comps.len() == 1;
        let top = indecomposable.then(|| comps[0].cartan_type);
        let sym = if indecomposable {
            symmetrizer(a).ok().map(|s| s.into_vec())
        } else {
            None
        };
        let symmetrizable = is_symmetrizable(a).is_ok();
        Ok(ClassifyRecord {
            rank: a.rank(),
            matrix: a.rows(),
            indecomposable,
            kind: top.map(|t| t.kind),
            hyperbolic: top.is_some_and(|t| t.hyperbolic),
            compact: top.is_some_and(|t| t.compact_hyperbolic),
            components: comps
                .iter()
                .map(|c| ComponentRecord {
                    vertices: c.vertices.iter().map(|v| v + 1).collect(),
                    kind: c.cartan_type.kind,
                    hyperbolic: c.cartan_type.hyperbolic,
                    compact: c.cartan_type.compact_hyperbolic,
                })
                .collect(),
            symmetrizable,
            root_lengths: sym
                .as_ref()
                .map(|d| d.iter().collect::<std::collections::BTreeSet<_>>().len()),
            symmetrizer: sym,
            orbit_blocks: orbit_partition(&a.to_diagram()).to_one_based(),
            orbit_semantics: semantics(symmetrizable),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "rank: {}", self.rank);
        match self.kind {
            Some(k) => {
                let _ = writeln!(s, "kind: {k}");
            }
            None => {
                let _ = writeln!(s, "kind: decomposable");
                for c in &self.components {
                    let _ = writeln!(
                        s,
                        "component {}: {}{}",
                        blocks_text(std::slice::from_ref(&c.vertices)),
                        c.kind,
                        if c.compact {
                            ", compact hyperbolic"
                        } else if c.hyperbolic {
                            ", hyperbolic"
                        } else {
                            ""
                        }
                    );
                }
            }
        }
        let _ = writeln!(s, "hyperbolic: {}", self.hyperbolic);
        let _ = writeln!(s, "compact: {}", self.compact);
        let _ = writeln!(s, "symmetrizable: {}", self.symmetrizable);
        match (&self.symmetrizer, self.symmetrizable) {
            (Some(d), _) => {
                let _ = writeln!(s, "symmetrizer: diag({})", d.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
                let _ = writeln!(s, "root_lengths: {}", self.root_lengths.unwrap_or_default());
            }
            (None, false) => {
                let _ = writeln!(s, "symmetrizer: {NOT_SYMMETRIZABLE}");
            }
            // decomposable and symmetrizable: scale between components is free
            (None, true) => {}
        }
        let _ = writeln!(s, "orbit_blocks: {}", blocks_text(&self.orbit_blocks));
        let _ = writeln!(s, "orbit_semantics: {}", self.orbit_semantics);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub cycle: Vec<usize>,
    pub forward_product: i64,
    pub reverse_product: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizeRecord {
    pub symmetrizable: bool,
    pub symmetrizer: Option<Vec<i64>>,
    pub bilinear_form: Option<Vec<Vec<i64>>>,
    pub witness: Option<WitnessRecord>,
}

impl SymmetrizeRecord {
    /// `Err` only for inputs the operation rejects outright (decomposable).
    pub fn compute(a: &CartanMatrix) -> Result<Self, SymmetrizeError> {
        match symmetrizer(a) {
            Ok(d) => Ok(SymmetrizeRecord {
                symmetrizable: true,
                symmetrizer: Some(d.into_vec()),
                bilinear_form: Some(bilinear_form(a)?),
                witness: None,
            }),
            Err(SymmetrizeError::NotSymmetrizable(w)) => Ok(SymmetrizeRecord {
                symmetrizable: false,
                symmetrizer: None,
                bilinear_form: None,
                witness: Some(WitnessRecord {
                    cycle: w.one_based(),
                    forward_product: w.forward_product,
                    reverse_product: w.reverse_product,
                }),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let (Some(d), Some(b)) = (&self.symmetrizer, &self.bilinear_form) {
            let _ = writeln!(s, "d: {}", join(d));
            let _ = writeln!(s, "B = D A:");
            for row in b {
                let _ = writeln!(s, "{}", join(row));
            }
        }
        if let Some(w) = &self.witness {
            let cycle = w.cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(s, "{NOT_SYMMETRIZABLE}");
            let _ = writeln!(
                s,
                "cycle ({cycle}) has forward product {} and reverse product {}",
                w.forward_product, w.reverse_product
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsRecord {
    pub orbit_blocks: Vec<Vec<usize>>,
    pub orbit_semantics: OrbitSemantics,
}

impl OrbitsRecord {
    pub fn compute(a: &CartanMatrix) -> Self {
        OrbitsRecord {
            orbit_blocks: orbit_partition(&a.to_diagram()).to_one_based(),
            orbit_semantics: semantics(is_symmetrizable(a).is_ok()),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}\norbit_semantics: {}\n",
            blocks_text(&self.orbit_blocks),
            self.orbit_semantics
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
}

impl MatrixRecord {
    pub fn new(a: &CartanMatrix) -> Self {
        MatrixRecord {
            rank: a.rank(),
            matrix: a.rows(),
        }
    }

    /// Rows in the input text format.
    pub fn to_text(&self) -> String {
        self.matrix.iter().map(|r| format!("{}\n", join(r))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> CartanMatrix {
        CartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rank_two_hyperbolic() {
        let r = ClassifyRecord::compute(&m(&[&[2, -3], &[-2, 2]])).unwrap();
        assert_eq!(r.kind, Some(Kind::Indefinite));
        assert!(r.hyperbolic && r.compact);
        assert_eq!(r.symmetrizer, Some(vec![2, 3]));
        assert!(r.to_text().contains("symmetrizer: diag(2,3)"));
    }

    #[test]
    fn decomposable_components() {
        let r = ClassifyRecord::compute(&m(&[&[2, -1, 0], &[-1, 2, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(r.kind, None);
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[0].vertices, vec![1, 2]);
        assert!(r.components.iter().all(|c| c.kind == Kind::Finite));
        assert!(r.to_text().contains("component {3}: finite"));
    }

    #[test]
    fn non_symmetrizable_text_uses_placeholder() {
        let a = m(&[&[2, -1, -1], &[-2, 2, -2], &[-2, -1, 2]]);
        let r = ClassifyRecord::compute(&a).unwrap();
        assert!(r.to_text().contains("symmetrizer: N.S."));
        assert_eq!(r.orbit_semantics, OrbitSemantics::Unverified);
        let s = SymmetrizeRecord::compute(&a).unwrap();
        let w = s.witness.unwrap();
        assert_eq!(w.cycle, vec![1, 2, 3, 1]);
        assert_eq!((w.forward_product, w.reverse_product), (-4, -2));
    }

    #[test]
    fn bilinear_form_of_twisted_affine() {
        let s = SymmetrizeRecord::compute(&m(&[&[2, -1], &[-4, 2]])).unwrap();
        assert_eq!(s.symmetrizer, Some(vec![4, 1]));
        assert_eq!(s.bilinear_form, Some(vec![vec![8, -4], vec![-4, 2]]));
    }
}
