//! Noncommutative *-algebras presented by generators and swap-plus-lower
//! rewrite rules, with exact normal forms.

mod element;
mod spec;

pub use element::{is_normal, Element, GenId, Word};
pub use spec::{render_element, word_order, AlgebraSpec, Generator, RewriteRule};

pub(crate) use element::word_of;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Outcome of a centrality test.
#[derive(Clone, Debug, PartialEq)]
pub struct Centrality {
    /// Generators whose commutator with the element does not vanish, with the
    /// commutator.
    pub witnesses: Vec<(GenId, Element)>,
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        self.witnesses.is_empty()
    }
}

pub fn is_central(e: &Element, spec: &AlgebraSpec) -> Centrality {
    let witnesses = (0..spec.num_generators() as GenId)
        .filter_map(|g| {
            let r = spec.commutator(e, &Element::generator(g));
            (!r.is_zero()).then_some((g, r))
        })
        .collect();
    Centrality { witnesses }
}

/// Words whose two bracketings normalize differently.
#[derive(Clone, Debug, PartialEq)]
pub struct OverlapFailure {
    pub words: [Word; 3],
    pub left: Element,
    pub right: Element,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct AssociativityReport {
    pub triples_checked: usize,
    pub random_checked: usize,
    pub failures: Vec<OverlapFailure>,
    /// Generator pairs (a, b) where normalizing a·b does not commute with the
    /// involution, with the residual `(ab)* - b*a*`.
    pub involution_failures: Vec<(GenId, GenId, Element)>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.involution_failures.is_empty()
    }

    pub fn describe_first(&self, spec: &AlgebraSpec) -> Option<String> {
        if let Some(f) = self.failures.first() {
            let [a, b, c] = &f.words;
            return Some(format!(
                "({}, {}, {}): (ab)c = {}, a(bc) = {}",
                spec.render_word(a),
                spec.render_word(b),
                spec.render_word(c),
                spec.render(&f.left),
                spec.render(&f.right)
            ));
        }
        self.involution_failures.first().map(|(a, b, r)| {
            format!(
                "({}, {}): (ab)* - b*a* = {}",
                spec.name(*a),
                spec.name(*b),
                spec.render(r)
            )
        })
    }
}

fn bracketings(spec: &AlgebraSpec, a: &[GenId], b: &[GenId], c: &[GenId]) -> Option<OverlapFailure> {
    let (ea, eb, ec) = (Element::word(a), Element::word(b), Element::word(c));
    let left = spec.multiply(&spec.multiply(&ea, &eb), &ec);
    let right = spec.multiply(&ea, &spec.multiply(&eb, &ec));
    (left != right).then(|| OverlapFailure {
        words: [word_of(a), word_of(b), word_of(c)],
        left,
        right,
    })
}

/// Overlap scan: every generator triple, then `random_samples` triples of
/// random normal monomials of length up to `degree_bound`, plus involution
/// compatibility on generator pairs.
pub fn check_associativity(
    spec: &AlgebraSpec,
    degree_bound: usize,
    random_samples: usize,
    seed: u64,
) -> AssociativityReport {
    let n = spec.num_generators() as GenId;
    let mut report = AssociativityReport::default();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                report.triples_checked += 1;
                if let Some(f) = bracketings(spec, &[a], &[b], &[c]) {
                    report.failures.push(f);
                }
            }
        }
    }
    if n > 0 && degree_bound > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..random_samples {
            let w: [Word; 3] = std::array::from_fn(|_| random_normal_word(&mut rng, n, degree_bound));
            report.random_checked += 1;
            if let Some(f) = bracketings(spec, &w[0], &w[1], &w[2]) {
                report.failures.push(f);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = spec.multiply(&Element::generator(a), &Element::generator(b));
            let lhs = spec.involution(&ab);
            let rhs = spec.multiply(spec.star_image(b), spec.star_image(a));
            let r = &lhs - &rhs;
            if !r.is_zero() {
                report.involution_failures.push((a, b, r));
            }
        }
    }
    report
}

pub fn random_normal_word(rng: &mut impl Rng, n: GenId, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let mut w: Word = (0..len).map(|_| rng.gen_range(0..n)).collect();
    w.sort_unstable();
    w
}

impl AlgebraSpec {
    /// Builds a spec and rejects it unless the overlap scan passes.
    pub fn validated(
        generators: Vec<Generator>,
        rules: Vec<RewriteRule>,
        star: std::collections::BTreeMap<GenId, Element>,
    ) -> Result<Self> {
        let spec = AlgebraSpec::new(generators, rules, star)?;
        let report = check_associativity(&spec, 0, 0, 0);
        match report.describe_first(&spec) {
            None => Ok(spec),
            Some(w) => Err(Error::InvalidSpec(format!("relations are not associative at {w}"))),
        }
    }
}
