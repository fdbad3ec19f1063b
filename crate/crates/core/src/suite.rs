//! Named groups of checks run against a model.

use std::str::FromStr;
use std::time::Instant;

use crate::bicomplex::{check_bicomplex_axioms, check_total_cocycle, data_cochains};
use crate::check::{combine, Check};
use crate::dsl::{parse_document, print_document, Document};
use crate::error::{Error, Result};
use crate::models::lorentz::LorentzMatrix;
use crate::models::{builtin, Model};
use crate::ncalg::{check_associativity, Element, GenId};
use crate::report::{digest, Entry, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Validate,
    Deformation,
    Center,
    Crossed,
    Bicomplex,
    Casimir,
    Poincare,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "validate",
        "deformation",
        "center",
        "crossed",
        "bicomplex",
        "casimir",
        "poincare",
        "all",
    ];

    const PARTS: [Suite; 7] = [
        Suite::Validate,
        Suite::Deformation,
        Suite::Center,
        Suite::Crossed,
        Suite::Bicomplex,
        Suite::Casimir,
        Suite::Poincare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Validate => "validate",
            Suite::Deformation => "deformation",
            Suite::Center => "center",
            Suite::Crossed => "crossed",
            Suite::Bicomplex => "bicomplex",
            Suite::Casimir => "casimir",
            Suite::Poincare => "poincare",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Longest random word in the associativity sample.
    pub degree_bound: usize,
    /// Number of random word triples in the associativity sample.
    pub random_triples: usize,
    pub poincare_samples: usize,
    pub seed: u64,
    /// Record elapsed time per check. Off by default so reports are
    /// reproducible byte for byte.
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            degree_bound: 3,
            random_triples: 40,
            poincare_samples: 20,
            seed: 0x00de_f5ad,
            timings: false,
        }
    }
}

/// A resolved target: the document (for the digest) and its model.
pub struct Target {
    pub id: String,
    pub document: Document,
    pub model: Model,
}

/// A built-in fixture name, or a path to an `.alg` document.
pub fn resolve_target(target: &str) -> Result<Target> {
    if let Some(model) = builtin(target) {
        return Ok(Target {
            id: target.to_string(),
            document: Document::from_model(&model),
            model,
        });
    }
    let path = std::path::Path::new(target);
    if !path.exists() {
        return Err(Error::UnknownTarget(target.to_string()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{target}: {e}")))?;
    let document = parse_document(&text)?;
    let model = document.to_model()?;
    Ok(Target {
        id: target.to_string(),
        document,
        model,
    })
}

fn generators(m: &Model) -> Vec<GenId> {
    (0..m.family.spec.num_generators() as GenId).collect()
}

/// Generators the cochain checks run on: those with λ data, else the
/// invariant ones.
fn cochain_generators(m: &Model) -> Vec<GenId> {
    if m.data.lambda.is_empty() {
        m.invariant.iter().copied().collect()
    } else {
        m.data.lambda.keys().copied().collect()
    }
}

fn validate(m: &Model, o: &Options) -> Vec<Check> {
    let spec = &m.family.spec;
    let report = check_associativity(spec, o.degree_bound, o.random_triples, o.seed);
    let mut generator_triples = Vec::new();
    let mut random = Vec::new();
    for f in &report.failures {
        let [a, b, c] = &f.words;
        let label = format!("({}, {}, {})", spec.render_word(a), spec.render_word(b), spec.render_word(c));
        let part = (label, Check::zero("", spec, &(&f.left - &f.right)));
        if f.words.iter().all(|w| w.len() == 1) {
            generator_triples.push(part);
        } else {
            random.push(part);
        }
    }
    let involution = report
        .involution_failures
        .iter()
        .map(|(a, b, r)| (format!("({}, {})", spec.name(*a), spec.name(*b)), Check::zero("", spec, r)));
    let generator_note = match generator_triples.len() {
        0 => format!("{} generator triples", report.triples_checked),
        n => format!("{n} of {} generator triples fail", report.triples_checked),
    };
    let random_note = match random.len() {
        0 => format!("{} random triples up to length {}", report.random_checked, o.degree_bound),
        n => format!("{n} of {} random triples fail", report.random_checked),
    };
    vec![
        combine("associativity-generators", generator_triples).with_note(generator_note),
        combine("associativity-random", random).with_note(random_note),
        combine("involution-compatibility", involution),
    ]
}

fn deformation(m: &Model) -> Result<Vec<Check>> {
    let tests: Vec<Element> = generators(m).into_iter().map(Element::generator).collect();
    let mut out = vec![m.family.check_hochschild_cocycle(&tests)?];
    out.extend(m.family.check_reality_c(&tests)?);
    out.push(m.check_expected_brackets()?);
    Ok(out)
}

fn center(m: &Model) -> Result<Vec<Check>> {
    let mut out = vec![m.check_central("central-elements", &m.central)];
    if m.center_candidates.is_empty() {
        out.push(Check::not_applicable("center-structure", "no center candidates listed"));
    } else {
        out.extend(m.family.check_center_structure(&m.center_candidates, &m.center_probes)?);
    }
    out.push(m.check_nested_translation_brackets()?);
    Ok(out)
}

fn crossed(m: &Model) -> Result<Vec<Check>> {
    let x = m.crossed();
    let samples = LorentzMatrix::samples();
    let mut out = x.check_tau();
    out.extend(x.check_group_cocycle()?);
    out.push(x.check_gamma_reality()?);
    out.push(x.check_gamma_leading()?);
    out.push(x.check_gamma_equivariance(&samples)?);
    out.extend(x.check_lambda_relations(&samples)?);
    out.extend(x.check_cinv(&samples)?);
    out.push(x.check_mixed()?);
    Ok(out)
}

fn bicomplex(m: &Model) -> Result<Vec<Check>> {
    let x = m.crossed();
    let mut out = check_bicomplex_axioms(x, &data_cochains(x), &cochain_generators(m))?;
    out.extend(check_total_cocycle(x)?);
    Ok(out)
}

fn casimir(m: &Model) -> Result<Vec<Check>> {
    let mut out = vec![m.check_central("casimir-central", &m.casimirs), m.check_casimir_limits()];
    out.extend(m.check_contraction_family()?);
    Ok(out)
}

fn poincare(m: &Model, o: &Options) -> Result<Vec<Check>> {
    let mut out = m.check_poincare(o.poincare_samples, o.seed)?;
    out.extend(m.crossed().check_lorentz_compatibility(&LorentzMatrix::samples()));
    Ok(out)
}

/// Runs one part, stamping each resulting check with the part's wall time
/// when timings are on.
fn run_part(part: Suite, m: &Model, o: &Options) -> Result<Vec<Entry>> {
    let start = Instant::now();
    let checks = match part {
        Suite::Validate => validate(m, o),
        Suite::Deformation => deformation(m)?,
        Suite::Center => center(m)?,
        Suite::Crossed => crossed(m)?,
        Suite::Bicomplex => bicomplex(m)?,
        Suite::Casimir => casimir(m)?,
        Suite::Poincare => poincare(m, o)?,
        Suite::All => unreachable!("expanded by the caller"),
    };
    let elapsed = o.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    Ok(checks
        .into_iter()
        .map(|c| Entry::new(part.name(), c, elapsed))
        .collect())
}

/// Runs a suite. The parts of `all` run on separate threads and are
/// reported in their fixed order.
pub fn run_suite(target: &Target, suite: Suite, o: &Options) -> Result<Report> {
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        s => vec![s],
    };
    let results: Vec<Result<Vec<Entry>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = parts
            .iter()
            .map(|&p| scope.spawn(move || run_part(p, &target.model, o)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    // Family declarations only abbreviate names, so they stay out of the digest.
    let canonical = Document {
        families: Vec::new(),
        ..target.document.clone()
    };
    Ok(Report::new(suite.name(), &target.id, digest(&print_document(&canonical)), checks))
}
