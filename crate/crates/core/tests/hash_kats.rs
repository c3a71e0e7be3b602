//! Bit-exact conformance for all four hashing variants against the frozen
//! known-answer files covering message lengths 0..=1024.

use std::path::PathBuf;

use skyseal_core::kat;
use skyseal_core::registry::hash_by_name;

fn kat_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../testdata/kat")
        .join(name)
}

fn run_file(name: &str) {
    let algo = hash_by_name(name).expect("registered variant");
    let records = kat::load_hash(&kat_path(&format!("{name}.txt"))).expect("kat file parses");
    assert_eq!(records.len(), 1025);
    for (i, rec) in records.iter().enumerate() {
        assert_eq!(rec.count, (i + 1) as u64);
        assert_eq!(rec.msg.len(), i);
        assert_eq!(rec.md.len(), 32);
    }
    let outcomes = kat::verify_hash(&records, algo);
    let failures: Vec<_> = outcomes.iter().filter(|o| !o.ok).collect();
    assert!(failures.is_empty(), "{name}: {failures:?}");
}

#[test]
fn asconhash_matches_reference() {
    run_file("asconhash");
}

#[test]
fn asconhasha_matches_reference() {
    run_file("asconhasha");
}

#[test]
fn asconxof_matches_reference() {
    run_file("asconxof");
}

#[test]
fn asconxofa_matches_reference() {
    run_file("asconxofa");
}

#[test]
fn aes_block_records_match_reference() {
    let records = kat::load_block(&kat_path("aes128_block.txt")).expect("kat file parses");
    assert_eq!(records.len(), 18);
    let outcomes = kat::verify_block(&records);
    assert!(outcomes.iter().all(|o| o.ok), "{outcomes:?}");
}
