//! Property harness run over a whole catalog.
//!
//! Each property recomputes what it needs from the stored matrices rather
//! than trusting the stored flags, and reports the ids of offending entries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canonical::canonical_form;
use super::{format_id, Catalog, CatalogEntry, OrbitSemantics};
use crate::classify::{is_compact_hyperbolic, is_hyperbolic, Kind, SubsetKinds};
use crate::extend::overextend_affine;
use crate::gcm::{CartanMatrix, RenderClass, VertexSet};
use crate::standard;
use crate::symmetrize::{is_symmetrizable, kac_cycle_oracle, symmetrizer};
use crate::weyl::{norm_with, orbit_partition, orbit_partition_with_retry, window_classes, DEFAULT_BUDGET};

/// Class counts of the complete catalog of ranks 3 to 10.
pub const EXPECTED_TOTAL: usize = 238;
pub const EXPECTED_SYMMETRIZABLE: usize = 142;
pub const EXPECTED_RANK_COUNTS: [(usize, usize); 8] =
    [(3, 123), (4, 53), (5, 22), (6, 22), (7, 4), (8, 5), (9, 5), (10, 4)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Starting height window for the reflection oracle.
    pub height: i64,
    /// The window doubles up to this height before a mismatch is reported.
    pub max_height: i64,
    pub budget: usize,
    /// Largest rank on which the reflection oracle runs.
    pub orbit_max_rank: usize,
    pub seed: u64,
    /// Random matrices for the symmetrizability-criteria comparison.
    pub random_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            height: 8,
            max_height: 64,
            budget: DEFAULT_BUDGET,
            orbit_max_rank: 5,
            seed: 0,
            random_samples: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Ids of entries violating the property (or matrices, for checks that
    /// are not about entries).
    pub counterexamples: Vec<String>,
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)?;
        if !self.counterexamples.is_empty() {
            const SHOWN: usize = 10;
            let shown: Vec<&str> = self.counterexamples.iter().take(SHOWN).map(String::as_str).collect();
            write!(f, " [{}", shown.join(", "))?;
            if self.counterexamples.len() > SHOWN {
                write!(f, ", +{} more", self.counterexamples.len() - SHOWN)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub properties: Vec<PropertyResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        let passed = self.properties.iter().filter(|p| p.passed).count();
        write!(f, "{passed}/{} properties passed", self.properties.len())
    }
}

/// Names of the structural properties of hyperbolic diagrams checked by
/// [`verify_catalog`]: the affine-pair equivalence and its two
/// consequences, the size of affine subdiagrams, and corank-one
/// connectivity.
pub const STRUCTURAL_PROPERTIES: [&str; 5] = [
    "affine_pair_iff_rank3_noncompact",
    "affine_pair_criteria_agree",
    "pairs_finite_above_rank3",
    "affine_subdiagrams_corank_one",
    "connected_corank_one_subdiagram",
];

fn check<'a>(
    name: &'static str,
    entries: &'a [CatalogEntry],
    detail: impl FnOnce(usize) -> String,
    mut bad: impl FnMut(&'a CatalogEntry) -> bool,
) -> PropertyResult {
    let counterexamples: Vec<String> = entries
        .iter()
        .filter(|e| bad(e))
        .map(|e| e.canonical_id.clone())
        .collect();
    PropertyResult {
        name,
        passed: counterexamples.is_empty(),
        detail: detail(counterexamples.len()),
        counterexamples,
    }
}

fn fact(name: &'static str, passed: bool, detail: String) -> PropertyResult {
    PropertyResult {
        name,
        passed,
        detail,
        counterexamples: Vec::new(),
    }
}

/// Per-entry data recomputed from the matrix alone.
struct Derived {
    hyperbolic: bool,
    compact: bool,
    symmetrizer: Option<Vec<i64>>,
    kinds: Option<SubsetKinds>,
}

impl Derived {
    fn of(a: &CartanMatrix) -> Derived {
        Derived {
            hyperbolic: is_hyperbolic(a).unwrap_or(false),
            compact: is_compact_hyperbolic(a).unwrap_or(false),
            symmetrizer: symmetrizer(a).ok().map(|s| s.into_vec()),
            kinds: SubsetKinds::new(a).ok(),
        }
    }

    fn proper_connected_affine(&self, a: &CartanMatrix) -> Vec<VertexSet> {
        let Some(kinds) = &self.kinds else {
            return Vec::new();
        };
        let n = a.rank();
        (1u32..(1 << n) - 1)
            .map(VertexSet::from_bits)
            .filter(|&s| a.is_connected_subset(s) && kinds.kind(s) == Kind::Affine)
            .collect()
    }
}

fn pair_products(a: &CartanMatrix) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
    let n = a.rank();
    (0..n).flat_map(move |i| {
        (i + 1..n)
            .filter(move |&j| a.is_adjacent(i, j))
            .map(move |j| (i, j, a.get(i, j) * a.get(j, i)))
    })
}

/// A simple cycle through every vertex: connected, all degrees 2.
fn is_cycle(a: &CartanMatrix) -> bool {
    a.rank() >= 3 && a.is_indecomposable() && (0..a.rank()).all(|i| a.degree(i) == 2)
}

/// Runs every catalog property. The counts property assumes the catalog is
/// meant to cover ranks 3 to 10 completely.
pub fn verify_catalog(cat: &Catalog, opts: &VerifyOptions) -> VerificationReport {
    let entries = cat.entries();
    // keyed by address: ids in a damaged catalog need not be unique
    let derived: BTreeMap<*const CatalogEntry, Derived> = entries
        .iter()
        .map(|e| (e as *const CatalogEntry, Derived::of(&e.matrix)))
        .collect();
    let d = |e: &CatalogEntry| &derived[&(e as *const CatalogEntry)];
    let mut props = Vec::new();

    props.push(check(
        "hyperbolic",
        entries,
        |bad| format!("{} entries hyperbolic, {bad} not", entries.len() - bad),
        |e| !d(e).hyperbolic,
    ));
    props.push(check(
        "canonical_form",
        entries,
        |bad| format!("{bad} matrices differ from their canonical form"),
        |e| canonical_form(&e.matrix).matrix() != &e.matrix,
    ));
    {
        let mut seen_m = BTreeSet::new();
        let mut seen_id = BTreeSet::new();
        props.push(check(
            "distinct_classes",
            entries,
            |bad| format!("{bad} repeated matrices or ids"),
            |e| !seen_m.insert(e.matrix.clone()) | !seen_id.insert(e.canonical_id.clone()),
        ));
    }
    {
        let mut prev: Option<&CatalogEntry> = None;
        let mut ordinal = 0;
        props.push(check(
            "ordering",
            entries,
            |bad| format!("{bad} entries out of (rank, matrix) order or misnumbered"),
            |e| {
                let in_order = prev.is_none_or(|p| {
                    (p.rank, p.matrix.entries()) < (e.rank, e.matrix.entries())
                });
                ordinal = match prev {
                    Some(p) if p.rank == e.rank => ordinal + 1,
                    _ => 1,
                };
                prev = Some(e);
                !in_order || e.canonical_id != format_id(e.rank, ordinal)
            },
        ));
    }
    props.push(check(
        "rank_bound",
        entries,
        |bad| format!("{bad} entries outside ranks 3..=10"),
        |e| !(3..=10).contains(&e.rank) || e.rank != e.matrix.rank(),
    ));
    {
        let total = entries.len();
        let sym = entries.iter().filter(|e| d(e).symmetrizer.is_some()).count();
        let counts = cat.rank_counts();
        let split_ok = counts.len() == EXPECTED_RANK_COUNTS.len()
            && EXPECTED_RANK_COUNTS
                .iter()
                .all(|(r, c)| counts.get(r) == Some(c));
        let split: Vec<String> = counts.iter().map(|(r, c)| format!("{r}:{c}")).collect();
        props.push(fact(
            "counts",
            total == EXPECTED_TOTAL && sym == EXPECTED_SYMMETRIZABLE && split_ok,
            format!("total={total} symmetrizable={sym} by rank {}", split.join(" ")),
        ));
    }
    props.push(check(
        "stored_flags",
        entries,
        |bad| format!("{bad} entries whose stored data disagrees with recomputation"),
        |e| {
            let x = d(e);
            let sym = x.symmetrizer.is_some();
            e.compact != x.compact
                || e.symmetrizable != sym
                || e.symmetrizer.as_ref().map(|s| s.d().to_vec()) != x.symmetrizer
                || e.root_lengths
                    != x.symmetrizer
                        .as_ref()
                        .map(|v| v.iter().collect::<BTreeSet<_>>().len())
                || e.orbit_blocks != orbit_partition(&e.matrix.to_diagram())
                || (e.orbit_semantics == OrbitSemantics::Verified) != sym
        },
    ));
    props.push(check(
        "symmetrizer_soundness",
        entries,
        |bad| format!("{bad} symmetrizers fail D A = (D A)^T with coprime positive d"),
        |e| {
            let Some(dv) = &d(e).symmetrizer else {
                return false;
            };
            let n = e.rank;
            let symmetric = (0..n).all(|i| {
                (0..n).all(|j| dv[i] * e.matrix.get(i, j) == dv[j] * e.matrix.get(j, i))
            });
            let g = dv.iter().fold(0i64, |g, &x| g.gcd(&x));
            !(symmetric && g == 1 && dv.iter().all(|&x| x > 0))
        },
    ));
    props.push(compact_bounds(entries, &d));
    props.push(check(
        "high_rank_symmetrizable",
        entries,
        |bad| format!("{bad} entries of rank 7..=10 not symmetrizable"),
        |e| (7..=10).contains(&e.rank) && d(e).symmetrizer.is_none(),
    ));

    props.push(check(
        STRUCTURAL_PROPERTIES[0],
        entries,
        |bad| format!("{bad} symmetrizable entries break: 2-vertex affine subdiagram iff rank 3 and non-compact"),
        |e| {
            let x = d(e);
            if x.symmetrizer.is_none() {
                return false;
            }
            let affine_pair = x
                .proper_connected_affine(&e.matrix)
                .iter()
                .any(|s| s.len() == 2);
            affine_pair != (e.rank == 3 && !x.compact)
        },
    ));
    props.push(check(
        STRUCTURAL_PROPERTIES[1],
        entries,
        |bad| format!("{bad} rank-3 non-compact symmetrizable entries where the two affine-pair criteria disagree"),
        |e| {
            let x = d(e);
            if !(e.rank == 3 && x.symmetrizer.is_some() && !x.compact) {
                return false;
            }
            // by edge label: A1^(1) is (2,2), A2^(2) is (1,4) either way round
            let by_label = e
                .matrix
                .to_diagram()
                .edges()
                .any(|(_, _, l)| matches!((l.p, l.q), (2, 2) | (1, 4) | (4, 1)));
            // by classification: some proper affine block containing a product-4 pair
            let by_kind = x.proper_connected_affine(&e.matrix).iter().any(|s| {
                let v = s.to_vec();
                v.iter().any(|&i| {
                    v.iter()
                        .any(|&j| i != j && e.matrix.get(i, j) * e.matrix.get(j, i) == 4)
                })
            });
            by_label != by_kind
        },
    ));
    props.push(check(
        STRUCTURAL_PROPERTIES[2],
        entries,
        |bad| format!("{bad} symmetrizable entries of rank >= 4 with a non-finite 2-vertex subdiagram"),
        |e| {
            d(e).symmetrizer.is_some()
                && e.rank >= 4
                && pair_products(&e.matrix).any(|(_, _, p)| p > 3)
        },
    ));
    props.push(check(
        STRUCTURAL_PROPERTIES[3],
        entries,
        |bad| format!("{bad} entries with a proper connected affine subdiagram not of size rank-1"),
        |e| {
            d(e).proper_connected_affine(&e.matrix)
                .iter()
                .any(|s| s.len() + 1 != e.rank)
        },
    ));
    props.push(check(
        STRUCTURAL_PROPERTIES[4],
        entries,
        |bad| format!("{bad} entries with no connected subdiagram on rank-1 vertices"),
        |e| {
            let full = VertexSet::full(e.rank);
            !(0..e.rank).any(|v| e.matrix.is_connected_subset(full.without(v)))
        },
    ));

    {
        let rhos: Vec<(&CatalogEntry, usize)> = entries
            .iter()
            .filter_map(|e| {
                d(e).symmetrizer
                    .as_ref()
                    .map(|v| (e, v.iter().collect::<BTreeSet<_>>().len()))
            })
            .collect();
        let max = rhos.iter().map(|&(_, r)| r).max().unwrap_or(0);
        let at_four: Vec<String> = rhos
            .iter()
            .filter(|&&(_, r)| r == 4)
            .map(|(e, _)| e.canonical_id.clone())
            .collect();
        props.push(PropertyResult {
            name: "root_length_bound",
            passed: max <= 4 && at_four.len() == 1,
            detail: format!("max rho={max}, {} entries with rho=4: {}", at_four.len(), at_four.join(" ")),
            counterexamples: rhos
                .iter()
                .filter(|&&(_, r)| r > 4)
                .map(|(e, _)| e.canonical_id.clone())
                .collect(),
        });
    }
    {
        let blocks: Vec<usize> = entries
            .iter()
            .map(|e| orbit_partition(&e.matrix.to_diagram()).len())
            .collect();
        let max = blocks.iter().copied().max().unwrap_or(0);
        let at_max = blocks.iter().filter(|&&b| b == max).count();
        props.push(fact(
            "orbit_block_bound",
            max == 4,
            format!("max skeleton blocks={max} ({at_max} entries)"),
        ));
    }
    {
        let exhibits: Vec<String> = entries
            .iter()
            .filter(|e| {
                let Some(dv) = &d(e).symmetrizer else {
                    return false;
                };
                let p = orbit_partition(&e.matrix.to_diagram());
                (0..e.rank).any(|i| {
                    (i + 1..e.rank).any(|j| dv[i] == dv[j] && p.block_of(i) != p.block_of(j))
                })
            })
            .map(|e| e.canonical_id.clone())
            .collect();
        props.push(fact(
            "same_norm_distinct_orbits",
            !exhibits.is_empty(),
            format!(
                "{} symmetrizable entries have equal-norm simple roots in different blocks{}",
                exhibits.len(),
                exhibits.first().map(|id| format!(", e.g. {id}")).unwrap_or_default()
            ),
        ));
    }
    props.extend(orbit_checks(entries, &d, opts));

    {
        let by_id: BTreeMap<&str, &CatalogEntry> =
            entries.iter().map(|e| (e.canonical_id.as_str(), e)).collect();
        props.push(check(
            "dual_involution",
            entries,
            |bad| format!("{bad} entries whose dual's dual is not themselves"),
            |e| {
                by_id
                    .get(e.dual_id.as_str())
                    .is_none_or(|f| f.dual_id != e.canonical_id)
            },
        ));
        let by_matrix: BTreeMap<&CartanMatrix, &str> = entries
            .iter()
            .map(|e| (&e.matrix, e.canonical_id.as_str()))
            .collect();
        props.push(check(
            "dual_closure",
            entries,
            |bad| format!("{bad} entries whose transpose class is missing or misreferenced"),
            |e| {
                let t = canonical_form(&e.matrix.dual()).into_matrix();
                by_matrix.get(&t) != Some(&e.dual_id.as_str())
            },
        ));
    }
    props.push(membership(cat));
    props.push(criteria_agreement_property(opts));

    VerificationReport { properties: props }
}

fn compact_bounds<'a>(
    entries: &'a [CatalogEntry],
    d: &impl Fn(&'a CatalogEntry) -> &'a Derived,
) -> PropertyResult {
    let compact: Vec<&CatalogEntry> = entries.iter().filter(|e| d(e).compact).collect();
    let max_rank = compact.iter().map(|e| e.rank).max().unwrap_or(0);
    let max_sym_rank = compact
        .iter()
        .filter(|e| d(e).symmetrizer.is_some())
        .map(|e| e.rank)
        .max()
        .unwrap_or(0);
    let rank5: Vec<&CatalogEntry> = compact.iter().copied().filter(|e| e.rank == 5).collect();
    let shape_ok = match rank5.as_slice() {
        [e] => {
            let arrow2 = e
                .matrix
                .to_diagram()
                .edges()
                .filter(|(_, _, l)| l.render_class() == RenderClass::Arrow2)
                .count();
            is_cycle(&e.matrix) && arrow2 == 1 && d(e).symmetrizer.is_none()
        }
        _ => false,
    };
    PropertyResult {
        name: "compact_bounds",
        passed: max_rank == 5 && max_sym_rank == 4 && shape_ok,
        detail: format!(
            "{} compact entries, max rank {max_rank}, max symmetrizable rank {max_sym_rank}, \
             {} of rank 5 (non-symmetrizable cycle with one double arrow: {shape_ok})",
            compact.len(),
            rank5.len()
        ),
        counterexamples: compact
            .iter()
            .filter(|e| e.rank > 5 || (e.rank == 5 && d(e).symmetrizer.is_some()))
            .map(|e| e.canonical_id.clone())
            .collect(),
    }
}

fn orbit_checks<'a>(
    entries: &'a [CatalogEntry],
    d: &impl Fn(&'a CatalogEntry) -> &'a Derived,
    opts: &VerifyOptions,
) -> [PropertyResult; 2] {
    let mut checked = 0;
    let mut max_window = 0;
    let mut mismatched = Vec::new();
    let mut norm_bad = Vec::new();
    for e in entries {
        let Some(dv) = &d(e).symmetrizer else {
            continue;
        };
        if e.rank > opts.orbit_max_rank {
            continue;
        }
        checked += 1;
        let skeleton = orbit_partition(&e.matrix.to_diagram());
        match orbit_partition_with_retry(&e.matrix, opts.height, opts.max_height, opts.budget) {
            Ok((p, h)) => {
                max_window = max_window.max(h);
                if p != skeleton {
                    mismatched.push(format!("{} (h={h}: {p} vs {skeleton})", e.canonical_id));
                }
            }
            Err(err) => mismatched.push(format!("{} ({err})", e.canonical_id)),
        }
        // every root reachable from alpha_i keeps the norm 2 d_i
        match window_classes(&e.matrix, opts.height, opts.budget) {
            Ok(classes) => {
                let ok = classes.iter().enumerate().all(|(i, class)| {
                    class.iter().all(|r| norm_with(&e.matrix, dv, r) == 2 * dv[i])
                });
                if !ok {
                    norm_bad.push(e.canonical_id.clone());
                }
            }
            Err(err) => norm_bad.push(format!("{} ({err})", e.canonical_id)),
        }
    }
    [
        PropertyResult {
            name: "orbit_oracle",
            passed: mismatched.is_empty(),
            detail: format!(
                "{checked} symmetrizable entries of rank <= {}: skeleton vs reflection closure, \
                 windows {}..={max_window}",
                opts.orbit_max_rank, opts.height
            ),
            counterexamples: mismatched,
        },
        PropertyResult {
            name: "norm_separation",
            passed: norm_bad.is_empty(),
            detail: format!("{checked} entries: reflection classes preserve simple-root norms at height {}", opts.height),
            counterexamples: norm_bad,
        },
    ]
}

fn membership(cat: &Catalog) -> PropertyResult {
    let a1_affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).expect("valid");
    let overextended = overextend_affine(&a1_affine, 1).expect("A1^(1) is affine");
    let mut missing = Vec::new();
    for (name, m) in [("E10", standard::e10()), ("A1^(1) overextended", overextended)] {
        if cat.find_class(&m).is_none() {
            missing.push(name.to_string());
        }
    }
    let rank_two = cat.entries().iter().filter(|e| e.rank < 3).count();
    PropertyResult {
        name: "membership",
        passed: missing.is_empty() && rank_two == 0,
        detail: format!("E10 and overextended A1^(1) present; {rank_two} entries below rank 3"),
        counterexamples: missing,
    }
}

fn criteria_agreement_property(opts: &VerifyOptions) -> PropertyResult {
    let r = symmetrizability_agreement(opts.seed, opts.random_samples);
    PropertyResult {
        name: "symmetrizability_criteria",
        passed: r.disagreements.is_empty(),
        detail: format!(
            "balanced-cycle test vs cycle products: {} exhaustive rank-3, {} random ranks 4..=6 \
             ({} symmetrizable), seed {}",
            r.exhaustive, r.random, r.random_symmetrizable, opts.seed
        ),
        counterexamples: r.disagreements.iter().map(|m| format!("{:?}", m.rows())).collect(),
    }
}

/// Outcome of comparing the balanced-cycle test with the cycle-product
/// criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementReport {
    pub exhaustive: usize,
    pub random: usize,
    pub random_symmetrizable: usize,
    pub disagreements: Vec<CartanMatrix>,
}

/// Every rank-3 matrix with off-diagonal entries in `-4..=0`, as labeled
/// matrices (4913 of them).
pub fn rank_three_gcms() -> Vec<CartanMatrix> {
    let mut choices = vec![(0, 0)];
    for p in 1..=4 {
        for q in 1..=4 {
            choices.push((p, q));
        }
    }
    let mut out = Vec::with_capacity(choices.len().pow(3));
    for &(p01, q01) in &choices {
        for &(p02, q02) in &choices {
            for &(p12, q12) in &choices {
                let m = CartanMatrix::new(vec![
                    vec![2, -p01, -p02],
                    vec![-q01, 2, -p12],
                    vec![-q02, -q12, 2],
                ])
                .expect("zero-symmetric by construction");
                out.push(m);
            }
        }
    }
    out
}

/// A random GCM of rank `n`. Half the time it is built symmetrizable from a
/// random `d` (so both outcomes are well represented); otherwise each pair
/// gets an independent label with `1 <= p, q <= 4`.
pub fn random_gcm<R: Rng>(rng: &mut R, n: usize) -> CartanMatrix {
    let mut e = vec![0i64; n * n];
    let density = rng.random_range(0.3..0.9);
    let by_symmetrizer = rng.random_bool(0.5);
    let d: Vec<i64> = (0..n).map(|_| rng.random_range(1..=4)).collect();
    for i in 0..n {
        e[i * n + i] = 2;
        for j in i + 1..n {
            if !rng.random_bool(density) {
                continue;
            }
            let (p, q) = if by_symmetrizer {
                // d_i a_ij = d_j a_ji = -t lcm(d_i, d_j)
                let b = rng.random_range(1..=2) * d[i].lcm(&d[j]);
                (b / d[i], b / d[j])
            } else {
                (rng.random_range(1..=4), rng.random_range(1..=4))
            };
            e[i * n + j] = -p;
            e[j * n + i] = -q;
        }
    }
    CartanMatrix::from_flat(n, e).expect("zero-symmetric by construction")
}

/// Compares [`is_symmetrizable`] with [`kac_cycle_oracle`] on every rank-3
/// matrix with entries `>= -4` and on `random_samples` seeded random
/// matrices of ranks 4 to 6.
pub fn symmetrizability_agreement(seed: u64, random_samples: usize) -> AgreementReport {
    let mut disagreements = Vec::new();
    let agrees = |m: &CartanMatrix| {
        is_symmetrizable(m).is_ok() == kac_cycle_oracle(m).expect("rank within oracle bound")
    };
    let exhaustive = rank_three_gcms();
    for m in &exhaustive {
        if !agrees(m) {
            disagreements.push(m.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_symmetrizable = 0;
    for _ in 0..random_samples {
        let n = rng.random_range(4..=6);
        let m = random_gcm(&mut rng, n);
        if is_symmetrizable(&m).is_ok() {
            random_symmetrizable += 1;
        }
        if !agrees(&m) {
            disagreements.push(m);
        }
    }
    AgreementReport {
        exhaustive: exhaustive.len(),
        random: random_samples,
        random_symmetrizable,
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_three_universe_size() {
        assert_eq!(rank_three_gcms().len(), 17usize.pow(3));
    }

    #[test]
    fn random_gcms_cover_both_outcomes() {
        let r = symmetrizability_agreement(7, 500);
        assert!(r.disagreements.is_empty());
        assert!(r.random_symmetrizable > 100 && r.random_symmetrizable < 500);
    }

    #[test]
    fn low_rank_catalog_structural_properties() {
        let cat = Catalog::enumerate(3, 5, 0).unwrap();
        let opts = VerifyOptions {
            random_samples: 100,
            ..VerifyOptions::default()
        };
        let report = verify_catalog(&cat, &opts);
        for name in STRUCTURAL_PROPERTIES {
            assert!(report.get(name).unwrap().passed, "{}", report.get(name).unwrap());
        }
        assert!(report.get("orbit_oracle").unwrap().passed);
        assert!(report.get("dual_closure").unwrap().passed);
        // a partial catalog fails the global counts
        assert!(!report.get("counts").unwrap().passed);
    }
}
