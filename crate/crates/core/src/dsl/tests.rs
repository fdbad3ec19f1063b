use proptest::prelude::*;

use super::*;
use crate::coeffring::rational;
use crate::models::{dfr, example};

const SU2: &str = "\
algebra su2
generators a b c
relation [b, a] = i*kappa*c
relation [c, a] = -i*kappa*b
relation [c, b] = i*kappa*a
casimir cas = a^2 + b^2 + c^2
";

#[test]
fn parses_a_small_algebra() {
    let doc = parse_document(SU2).unwrap();
    assert_eq!(doc.name, "su2");
    assert_eq!(doc.relations.len(), 3);
    let spec = doc.spec().unwrap();
    let (a, b) = (spec.gen("a"), spec.gen("b"));
    let want = spec.gen("c").scale(&(&Scalar::i() * &Scalar::kappa()));
    assert_eq!(spec.commutator(&b, &a), want);
    let cas = &doc.casimirs[0].1;
    assert!(spec.commutator(cas, &a).is_zero());
}

#[test]
fn templates_and_families_expand() {
    let text = "\
algebra t
antisymmetric Q
for a, b in 0..2 if a < b:
  generators Q{a}{b}
end
generators y
for a, b in 0..2 if a != b:
  central c{a}{b} = Q{b}{a} + Q{a}{b}
end
center-probe sum(m, g(m, m)*k{m})
";
    let doc = parse_document(text).unwrap();
    let names: Vec<_> = doc.generators.iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, ["Q01", "Q02", "Q12", "y"]);
    assert_eq!(doc.central.len(), 6);
    assert!(doc.central.iter().all(|(_, e)| e.is_zero()));
    let probe = &doc.center_probes[0];
    let k = |n: &str| Scalar::sym(n);
    let want = &(&(&k("k1") + &k("k2")) + &k("k3")) - &k("k0");
    assert_eq!(*probe, Element::scalar(want));
}

#[test]
fn located_errors() {
    let unknown = parse_document("algebra x\ngenerators a b\nrelation [b, a] = 2*zz").unwrap_err();
    assert_eq!(unknown.kind(), &Error::UnknownSymbol("zz".into()));
    assert!(matches!(unknown, Error::At { line: 3, col: 21, .. }));

    let dup = parse_document("algebra x\ngenerators a b\nrelation [b, a] = a\nrelation [a, b] = a").unwrap_err();
    assert!(matches!(dup.kind(), Error::DuplicateRelation(..)));
    assert!(matches!(dup, Error::At { line: 4, .. }));

    let shape = parse_document("algebra x\ngenerators a b\nrelation [a, b] = 1").unwrap_err();
    assert!(matches!(shape.kind(), Error::RuleShape(..)));
    let high = parse_document("algebra x\ngenerators a b\nrelation [b, a] = b*b").unwrap_err();
    assert!(matches!(high.kind(), Error::RuleShape(..)));

    assert!(matches!(parse_document("generators a"), Err(Error::Syntax { .. })));
    assert!(matches!(
        parse_document("algebra x\ngenerators k0"),
        Err(Error::Syntax { line: 2, col: 12, .. })
    ));
    let idx = parse_document("algebra x\ngenerators a\ncenter-probe g(0, 4)*a").unwrap_err();
    assert!(matches!(idx, Error::Syntax { line: 3, .. }));
}

#[test]
fn zero_relations_are_dropped() {
    let doc = parse_document("algebra x\ngenerators a b\nrelation [b, a] = 0").unwrap();
    assert!(doc.relations.is_empty());
}

#[test]
fn builtin_models_round_trip() {
    for m in [example::build(), dfr::build()] {
        let doc = Document::from_model(&m);
        let text = print_document(&doc);
        assert_eq!(parse_document(&text).unwrap(), doc, "{}", m.name);
    }
}

fn arb_document() -> impl Strategy<Value = Document> {
    let coeff = (-3i64..=3, 1i64..=3, -1i64..=1, 0u32..=1, 0u32..=2).prop_map(|(n, d, im, ek, ek0)| {
        let c = crate::coeffring::gaussian(rational(n, d), rational(im, 1));
        &(&c * &Scalar::kappa().pow(ek)) * &Scalar::sym("k0").pow(ek0)
    });
    let rhs = prop::collection::vec((coeff.clone(), 0usize..4), 0..3);
    (prop::collection::vec(rhs, 6), prop::collection::vec(coeff, 0..3)).prop_map(|(rhss, cs)| {
        let mut doc = Document {
            name: "random".into(),
            generators: ["a", "b", "c", "d"].into_iter().map(Generator::hermitian).collect(),
            ..Document::default()
        };
        let pairs = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)];
        for ((l, r), terms) in pairs.into_iter().zip(rhss) {
            // single generators below the pair keep the rule well-shaped
            let mut e = Element::zero();
            for (c, g) in terms {
                e.add_term(smallvec_word(g % 4), c);
            }
            if !e.is_zero() {
                doc.relations.push(RewriteRule { left: l, right: r, rhs: e });
            }
        }
        for (n, c) in cs.into_iter().enumerate() {
            doc.central.push((format!("z{n}"), Element::scalar(c)));
        }
        doc.center_probes.push(Element::generator(0));
        doc
    })
}

fn smallvec_word(g: usize) -> crate::ncalg::Word {
    Element::generator(g as GenId).into_terms().into_keys().next().unwrap()
}

proptest! {
    #[test]
    fn printed_documents_parse_back(doc in arb_document()) {
        let text = print_document(&doc);
        prop_assert_eq!(parse_document(&text).unwrap(), doc);
    }
}

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}.alg", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn fixture_files_match_builtin_models() {
    for m in [example::build(), dfr::build()] {
        let mut parsed = parse_document(&fixture(&m.name)).unwrap();
        parsed.families.clear();
        let want = Document::from_model(&m);
        assert_eq!(parsed.generators, want.generators);
        assert_eq!(parsed.relations, want.relations, "{}", m.name);
        assert_eq!(parsed.data, want.data, "{}", m.name);
        assert_eq!(parsed, want, "{}", m.name);
    }
}
