use std::sync::OnceLock;

use dynkin_core::catalog::verify::{verify_catalog, VerificationReport, VerifyOptions};
use dynkin_core::catalog::{Catalog, CatalogError};
use dynkin_core::symmetrize::Symmetrization;
use dynkin_core::{standard, OrbitPartition};

fn full() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::enumerate(3, 10, 0).unwrap())
}

fn report(cat: &Catalog) -> VerificationReport {
    verify_catalog(cat, &VerifyOptions::default())
}

fn failed(r: &VerificationReport) -> Vec<&'static str> {
    r.properties.iter().filter(|p| !p.passed).map(|p| p.name).collect()
}

#[test]
fn enumerated_catalog_verifies() {
    let r = report(full());
    assert!(r.all_passed(), "{r}");
}

#[test]
fn jsonl_round_trip_verifies() {
    let text = full().to_jsonl();
    let back = Catalog::from_jsonl(&text).unwrap();
    assert_eq!(back.to_jsonl(), text);
    assert!(report(&back).all_passed());
}

#[test]
fn fabricated_rank_eleven_entry_fails_rank_bound() {
    let mut cat = full().clone();
    let mut e = cat.entries().last().unwrap().clone();
    let m = standard::e_series(11);
    e.canonical_id = "11-001".into();
    e.dual_id = "11-001".into();
    e.rank = 11;
    e.symmetrizer = Some(Symmetrization::verify(&m, vec![1; 11]).unwrap());
    e.root_lengths = Some(1);
    e.orbit_blocks = OrbitPartition::new(vec![(0..11).collect()]);
    e.matrix = m;
    cat.entries_mut().push(e);

    // structurally sound, so it survives a round trip through the file format
    let cat = Catalog::from_jsonl(&cat.to_jsonl()).unwrap();
    let r = report(&cat);
    let bad = failed(&r);
    assert!(bad.contains(&"rank_bound"), "{r}");
    assert!(bad.contains(&"hyperbolic"), "{r}");
    assert!(bad.contains(&"counts"), "{r}");
}

#[test]
fn transposed_matrix_keeps_dual_ids_but_fails_verification() {
    let mut cat = full().clone();
    let k = cat
        .entries()
        .iter()
        .position(|e| e.dual_id != e.canonical_id)
        .unwrap();
    let e = &mut cat.entries_mut()[k];
    e.matrix = e.matrix.dual();
    let r = report(&cat);
    assert!(r.get("dual_involution").unwrap().passed, "{r}");
    assert!(!r.all_passed(), "{r}");
    assert!(!failed(&r).is_empty());
}

#[test]
fn flipped_compact_flag_is_caught() {
    let mut cat = full().clone();
    let e = &mut cat.entries_mut()[0];
    e.compact = !e.compact;
    let r = report(&cat);
    assert_eq!(failed(&r), vec!["stored_flags"], "{r}");
}

#[test]
fn dangling_dual_id_fails_to_load() {
    let text = full().to_jsonl();
    let first = text.lines().nth(1).unwrap();
    let v: serde_json::Value = serde_json::from_str(first).unwrap();
    let dual = v["dual_id"].as_str().unwrap().to_string();
    let broken = text.replacen(
        &format!("\"dual_id\":\"{dual}\""),
        "\"dual_id\":\"3-999\"",
        1,
    );
    assert!(Catalog::from_jsonl(&broken).is_err());
}

#[test]
fn symmetrizable_record_without_symmetrizer_fails_to_load() {
    let cat = full();
    let e = cat.entries().iter().find(|e| e.symmetrizable).unwrap();
    let text = cat.to_jsonl();
    let line = text
        .lines()
        .find(|l| l.contains(&format!("\"canonical_id\":\"{}\"", e.canonical_id)))
        .unwrap();
    let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
    v["symmetrizer"] = serde_json::Value::Null;
    let broken = text.replacen(line, &serde_json::to_string(&v).unwrap(), 1);
    assert!(matches!(
        Catalog::from_jsonl(&broken),
        Err(CatalogError::Malformed { .. })
    ));
}

#[test]
fn truncated_catalog_fails_to_load() {
    let text = full().to_jsonl();
    let cut: String = text.lines().take(10).map(|l| format!("{l}\n")).collect();
    assert!(Catalog::from_jsonl(&cut).is_err());
}
