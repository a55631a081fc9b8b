use std::path::{Path, PathBuf};

use eulerpair::dsl::{format_spec, parse_spec, SpecSource};
use eulerpair::recurrence::catalog::{catalog, EntryKind};

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[test]
fn every_single_recurrence_has_a_corpus_file() {
    for entry in catalog().into_iter().filter(|e| e.kind == EntryKind::Single) {
        let path = corpus().join(format!("{}.eurec", entry.name));
        let src = SpecSource::from_file(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let parsed = parse_spec(&src).unwrap_or_else(|d| panic!("{:?}", d));
        assert_eq!(parsed.name, entry.name);
        assert_eq!(&parsed.spec, entry.single().unwrap(), "{}", entry.name);
        // the warning flags exactly the recurrences without a dual pair system
        assert_eq!(parsed.warnings.is_empty(), parsed.spec.derive_pair().is_ok(), "{}", entry.name);
        // formatting is a fixed point after one pass
        let canonical = format_spec(&parsed.name, &parsed.spec);
        let again = parse_spec(&SpecSource::new("canonical", canonical.clone())).unwrap();
        assert_eq!(format_spec(&again.name, &again.spec), canonical);
    }
}

#[test]
fn malformed_files_are_diagnosed_in_place() {
    let expected = [
        ("quadratic", "2:15: error: coefficient not affine in n"),
        ("bad_token", "3:14: error: unexpected character '$'"),
        ("missing_semicolon", "3:5: error: expected ';', found 'beta'"),
        ("implicit_product", "2:18: error: implicit multiplication is not allowed; write '*'"),
        ("init_uses_n", "4:16: error: initial polynomial must not depend on n"),
        ("unknown_variable", "2:17: error: unknown identifier 'y'; only 'n' and 'x' are variables"),
    ];
    for (name, tail) in expected {
        let src = SpecSource::new(format!("{name}.eurec"), std::fs::read_to_string(corpus().join("malformed").join(format!("{name}.eurec"))).unwrap());
        let diags = parse_spec(&src).unwrap_err();
        assert_eq!(diags[0].render(&src.name), format!("{name}.eurec:{tail}"));
    }
}
