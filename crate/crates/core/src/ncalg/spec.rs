use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use super::element::{is_normal, word_of, Element, GenId, Word};
use crate::coeffring::{Scalar, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub name: String,
    pub hermitian: bool,
}

impl Generator {
    pub fn hermitian(name: impl Into<String>) -> Self {
        Generator {
            name: name.into(),
            hermitian: true,
        }
    }
}

/// `left·right = right·left + rhs`, stored only for `left > right`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub left: GenId,
    pub right: GenId,
    pub rhs: Element,
}

/// Length first, then lexicographic by precedence.
pub fn word_order(a: &[GenId], b: &[GenId]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A presented *-algebra: generators in precedence order, swap-plus-lower
/// rewrite rules, and the generator involution table.
pub struct AlgebraSpec {
    generators: Vec<Generator>,
    index: HashMap<String, GenId>,
    rules: HashMap<(GenId, GenId), Element>,
    star: Vec<Element>,
    cache: RwLock<HashMap<Word, Arc<Element>>>,
}

impl Clone for AlgebraSpec {
    fn clone(&self) -> Self {
        AlgebraSpec {
            generators: self.generators.clone(),
            index: self.index.clone(),
            rules: self.rules.clone(),
            star: self.star.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraSpec")
            .field("generators", &self.generators)
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl AlgebraSpec {
    /// Builds a spec, checking the rule shape (which guarantees termination)
    /// and that the involution table squares to the identity.
    ///
    /// `star` overrides the involution image of individual generators;
    /// hermitian generators default to themselves.
    pub fn new(
        generators: Vec<Generator>,
        rules: Vec<RewriteRule>,
        star: BTreeMap<GenId, Element>,
    ) -> Result<Self> {
        let n = generators.len();
        if n > GenId::MAX as usize {
            return Err(Error::InvalidSpec("too many generators".into()));
        }
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.name.clone(), i as GenId).is_some() {
                return Err(Error::InvalidSpec(format!("duplicate generator `{}`", g.name)));
            }
        }
        let name = |g: GenId| generators[g as usize].name.clone();
        let mut rule_map = HashMap::new();
        for r in rules {
            if r.left as usize >= n || r.right as usize >= n {
                return Err(Error::InvalidSpec("rule refers to unknown generator".into()));
            }
            if r.left <= r.right {
                return Err(Error::RuleShape(
                    name(r.left),
                    name(r.right),
                    "left generator must have higher precedence".into(),
                ));
            }
            let lead = [r.left, r.right];
            for (w, _) in r.rhs.terms() {
                if w.iter().any(|&g| g as usize >= n) {
                    return Err(Error::InvalidSpec("rule refers to unknown generator".into()));
                }
                if w.len() > 2 || word_order(w, &lead) != std::cmp::Ordering::Less {
                    return Err(Error::RuleShape(
                        name(r.left),
                        name(r.right),
                        "right-hand side must lie strictly below the rewritten word".into(),
                    ));
                }
            }
            if rule_map.insert((r.left, r.right), r.rhs).is_some() {
                return Err(Error::DuplicateRelation(name(r.left), name(r.right)));
            }
        }
        let mut star_table = Vec::with_capacity(n);
        for (i, g) in generators.iter().enumerate() {
            let img = match star.get(&(i as GenId)) {
                Some(e) => e.clone(),
                None if g.hermitian => Element::generator(i as GenId),
                None => {
                    return Err(Error::InvalidSpec(format!(
                        "generator `{}` is not hermitian and has no involution image",
                        g.name
                    )))
                }
            };
            star_table.push(img);
        }
        let spec = AlgebraSpec {
            generators,
            index,
            rules: rule_map,
            star: star_table,
            cache: RwLock::new(HashMap::new()),
        };
        for g in 0..n as GenId {
            let back = spec.involution(&spec.star[g as usize].clone());
            if back != Element::generator(g) {
                return Err(Error::InvalidSpec(format!(
                    "involution does not square to the identity on `{}`",
                    spec.name(g)
                )));
            }
        }
        Ok(spec)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn name(&self, g: GenId) -> &str {
        &self.generators[g as usize].name
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.index.get(name).copied()
    }

    /// The generator named `name`; panics if absent (fixture construction).
    pub fn gen(&self, name: &str) -> Element {
        Element::generator(
            self.lookup(name)
                .unwrap_or_else(|| panic!("no generator named `{name}`")),
        )
    }

    pub fn rule(&self, left: GenId, right: GenId) -> Option<&Element> {
        self.rules.get(&(left, right))
    }

    /// Rules sorted by (left, right) for deterministic iteration.
    pub fn rules(&self) -> Vec<RewriteRule> {
        let mut out: Vec<_> = self
            .rules
            .iter()
            .map(|(&(left, right), rhs)| RewriteRule {
                left,
                right,
                rhs: rhs.clone(),
            })
            .collect();
        out.sort_by_key(|r| (r.left, r.right));
        out
    }

    pub fn star_image(&self, g: GenId) -> &Element {
        &self.star[g as usize]
    }

    pub fn star_table(&self) -> BTreeMap<GenId, Element> {
        self.generators
            .iter()
            .enumerate()
            .filter(|(i, g)| !g.hermitian || self.star[*i] != Element::generator(*i as GenId))
            .map(|(i, _)| (i as GenId, self.star[i].clone()))
            .collect()
    }

    /// A copy with the coefficient indeterminates of every rule substituted,
    /// e.g. κ ↦ 0 for the undeformed algebra.
    pub fn specialize(&self, bindings: &BTreeMap<Var, Scalar>) -> Result<AlgebraSpec> {
        let rules = self
            .rules()
            .into_iter()
            .map(|r| RewriteRule {
                rhs: r.rhs.substitute(bindings),
                ..r
            })
            .collect();
        let star = (0..self.num_generators() as GenId)
            .map(|g| (g, self.star[g as usize].substitute(bindings)))
            .collect();
        AlgebraSpec::new(self.generators.clone(), rules, star)
    }

    pub fn at_kappa(&self, value: Scalar) -> Result<AlgebraSpec> {
        self.specialize(&BTreeMap::from([(Var::Kappa, value)]))
    }

    /// True when no rule coefficient mentions κ.
    pub fn is_kappa_free(&self) -> bool {
        self.rules.values().all(|r| !r.contains_kappa())
    }

    /// Normal form of a single word.
    pub fn normal_word(&self, w: &[GenId]) -> Arc<Element> {
        if is_normal(w) {
            return Arc::new(Element::word(w));
        }
        if let Some(hit) = self.cache.read().get(w) {
            return hit.clone();
        }
        let i = w
            .windows(2)
            .position(|p| p[0] > p[1])
            .expect("non-normal word has a descent");
        let (a, b) = (w[i], w[i + 1]);
        let mut swapped = word_of(w);
        swapped.swap(i, i + 1);
        let mut out = (*self.normal_word(&swapped)).clone();
        if let Some(rhs) = self.rules.get(&(a, b)) {
            for (rw, c) in rhs.terms() {
                let mut nw = Word::with_capacity(w.len());
                nw.extend_from_slice(&w[..i]);
                nw.extend_from_slice(rw);
                nw.extend_from_slice(&w[i + 2..]);
                out.add_scaled(&self.normal_word(&nw), c);
            }
        }
        let out = Arc::new(out);
        self.cache.write().insert(word_of(w), out.clone());
        out
    }

    pub fn normal_form(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.normal_word(w), c);
        }
        out
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        let mut buf = Word::new();
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                buf.clear();
                buf.extend_from_slice(w1);
                buf.extend_from_slice(w2);
                out.add_scaled(&self.normal_word(&buf), &(c1 * c2));
            }
        }
        out
    }

    /// Product of a list of factors, left to right.
    pub fn product(&self, factors: &[&Element]) -> Element {
        factors
            .iter()
            .fold(Element::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.multiply(a, b) - &self.multiply(b, a)
    }

    /// Antilinear antihomomorphism extending the generator table.
    pub fn involution(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let mut acc = Element::scalar(c.conj());
            for &g in w.iter().rev() {
                acc = self.multiply(&acc, &self.star[g as usize]);
            }
            out += &acc;
        }
        out
    }

    /// Human-readable rendering in the DSL expression syntax.
    pub fn render(&self, e: &Element) -> String {
        render_element(e, &|g| self.name(g).to_string())
    }

    pub fn render_word(&self, w: &[GenId]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&g| self.name(g))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Renders an element as `coef*w1*w2 + ...` with a caller-supplied name map.
pub fn render_element(e: &Element, name: &dyn Fn(GenId) -> String) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (w, c)) in e.terms().enumerate() {
        let word = w.iter().map(|&g| name(g)).collect::<Vec<_>>().join("*");
        let (neg, body) = if c.len() == 1 {
            let text = c.to_string();
            match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            }
        } else {
            (false, format!("({c})"))
        };
        match (n, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if w.is_empty() {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&word);
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(&word);
        }
    }
    out
}
