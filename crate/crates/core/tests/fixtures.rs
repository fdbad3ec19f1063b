use defshadow::dsl::{parse_document, print_document};
use defshadow::suite::{resolve_target, run_suite, Options, Suite};
use defshadow::Status;

const FIXTURES: [&str; 5] = ["example-so41", "dfr-limit", "corrupted-tau", "truncated-gamma", "non-jacobi"];

fn path(name: &str) -> String {
    format!("{}/../../fixtures/{name}.alg", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn printing_is_a_parse_fixpoint() {
    for name in FIXTURES {
        let doc = parse_document(&std::fs::read_to_string(path(name)).unwrap()).unwrap();
        let printed = print_document(&doc);
        let again = parse_document(&printed).unwrap();
        assert_eq!(again, doc, "{name}");
        assert_eq!(print_document(&again), printed, "{name}");
    }
}

#[test]
fn shipped_documents_reproduce_builtin_reports() {
    let o = Options::default();
    for name in ["example-so41", "dfr-limit"] {
        let file = resolve_target(&path(name)).unwrap();
        let builtin = resolve_target(name).unwrap();
        for suite in [Suite::Center, Suite::Crossed] {
            let a = run_suite(&file, suite, &o).unwrap();
            let b = run_suite(&builtin, suite, &o).unwrap();
            assert_eq!(a.input_digest, b.input_digest, "{name}");
            assert_eq!(a.checks, b.checks, "{name} {}", suite.name());
            assert!(a.passed());
        }
    }
}

#[test]
fn negative_controls_fail_only_where_expected() {
    let o = Options::default();
    let t = resolve_target(&path("corrupted-tau")).unwrap();
    let r = run_suite(&t, Suite::Validate, &o).unwrap();
    assert!(r.passed(), "the algebra itself is fine");
    let r = run_suite(&t, Suite::Crossed, &o).unwrap();
    let failing: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    assert!(failing.contains(&"tau-first-order"), "{failing:?}");
    assert!(!failing.contains(&"tau-identity"));

    let t = resolve_target(&path("truncated-gamma")).unwrap();
    let r = run_suite(&t, Suite::Crossed, &o).unwrap();
    let failing: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    assert_eq!(failing, ["gamma-cocycle", "gamma-reality"]);
}
