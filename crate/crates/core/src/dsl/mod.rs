//! The `.alg` document format: a header, generators in precedence order,
//! commutation relations, and optional translation, Lorentz and cocycle
//! data. `for` blocks and `sum(...)` expand index templates such as
//! `I{mu}{nu}` before evaluation.
//!
//! ```text
//! algebra su2
//! generators a b c
//! relation [b, a] = -i*kappa*c
//! for mu in 0..3:
//!   central z{mu} = sum(a, g({mu}, a)*k{a})
//! end
//! ```

mod print;
mod syntax;

pub use print::print_document;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::ToPrimitive;

use crate::coeffring::{is_momentum_symbol, levi_civita, metric, Scalar};
use crate::crossed::{CocycleData, TauAction};
use crate::deformation::Family;
use crate::error::{Error, Result};
use crate::models::lorentz::{inv_symbol, shift_symbol, LorentzAction};
use crate::models::{Contraction, Model};
use crate::ncalg::{word_order, AlgebraSpec, Element, GenId, Generator, RewriteRule};

use syntax::{syntax, CmpOp, Cond, Expr, Line, NameRef, Stmt};

/// A fully expanded and evaluated document.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Document {
    pub name: String,
    pub generators: Vec<Generator>,
    /// Prefixes whose two-index names are antisymmetric, e.g. `I10 = -I01`.
    pub families: Vec<String>,
    pub star: BTreeMap<GenId, Element>,
    /// Sorted by `(left, right)`; zero right-hand sides are dropped.
    pub relations: Vec<RewriteRule>,
    pub invariant: Option<Vec<GenId>>,
    pub translations: Option<[GenId; 4]>,
    pub tau: BTreeMap<GenId, Element>,
    pub lorentz: BTreeMap<GenId, Element>,
    pub data: CocycleData,
    pub central: Vec<(String, Element)>,
    pub casimirs: Vec<(String, Element)>,
    pub center_candidates: Vec<Element>,
    pub center_probes: Vec<Element>,
    pub expected_brackets: Vec<(Element, Element, Element)>,
    pub contraction: Option<Contraction>,
}

type Env = Vec<(String, i64)>;

fn lookup(env: &Env, name: &str) -> Option<i64> {
    env.iter().rev().find(|(n, _)| n == name).map(|(_, v)| *v)
}

#[derive(Clone, Copy)]
enum Ring<'a> {
    Free,
    Spec(&'a AlgebraSpec),
}

struct Evaluator<'a> {
    index: &'a HashMap<String, GenId>,
    families: &'a [String],
    ring: Ring<'a>,
    line: usize,
}

impl Evaluator<'_> {
    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        syntax(self.line, col, msg)
    }

    fn subst(&self, text: &str, col: usize, env: &Env) -> Result<String> {
        let mut out = String::new();
        let mut rest = text;
        while let Some(open) = rest.find('{') {
            out.push_str(&rest[..open]);
            let close = rest[open..].find('}').unwrap() + open;
            let var = &rest[open + 1..close];
            let v = lookup(env, var).ok_or_else(|| self.err(col, format!("unbound index `{var}`")))?;
            out.push_str(&v.to_string());
            rest = &rest[close + 1..];
        }
        out.push_str(rest);
        Ok(out)
    }

    fn generator(&self, n: &NameRef, env: &Env) -> Result<GenId> {
        let name = self.subst(&n.text, n.col, env)?;
        self.index
            .get(&name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name).at(self.line, n.col))
    }

    fn generators(&self, ns: &[NameRef], env: &Env) -> Result<Vec<GenId>> {
        ns.iter().map(|n| self.generator(n, env)).collect()
    }

    fn index_value(&self, e: &Expr, env: &Env) -> Result<i64> {
        Ok(match e {
            Expr::Num(n) if n.is_integer() => n.to_integer().to_i64().ok_or_else(|| self.err(0, "index too large"))?,
            Expr::Name { text, col } => {
                let s = self.subst(text, *col, env)?;
                match s.parse::<i64>() {
                    Ok(v) => v,
                    Err(_) => lookup(env, &s).ok_or_else(|| self.err(*col, format!("`{s}` is not an index")))?,
                }
            }
            Expr::Neg(a) => -self.index_value(a, env)?,
            Expr::Add(a, b) => self.index_value(a, env)? + self.index_value(b, env)?,
            Expr::Sub(a, b) => self.index_value(a, env)? - self.index_value(b, env)?,
            Expr::Mul(a, b) => self.index_value(a, env)? * self.index_value(b, env)?,
            _ => return Err(self.err(expr_col(e), "expected an index expression")),
        })
    }

    fn component(&self, e: &Expr, env: &Env) -> Result<usize> {
        let v = self.index_value(e, env)?;
        usize::try_from(v)
            .ok()
            .filter(|&v| v < 4)
            .ok_or_else(|| self.err(expr_col(e), format!("index {v} is outside 0..3")))
    }

    fn name(&self, text: &str, col: usize, env: &Env) -> Result<Element> {
        let s = self.subst(text, col, env)?;
        if let Some(v) = lookup(env, &s) {
            return Ok(Element::scalar(Scalar::from_int(v)));
        }
        match s.as_str() {
            "i" => return Ok(Element::scalar(Scalar::i())),
            "kappa" => return Ok(Element::scalar(Scalar::kappa())),
            _ => {}
        }
        if let Some(&g) = self.index.get(&s) {
            return Ok(Element::generator(g));
        }
        if is_momentum_symbol(&s) {
            return Ok(Element::scalar(Scalar::sym(&s)));
        }
        for fam in self.families {
            let Some(digits) = s.strip_prefix(fam.as_str()) else { continue };
            let d: Vec<char> = digits.chars().collect();
            if d.len() != 2 || !d.iter().all(|c| c.is_ascii_digit()) {
                continue;
            }
            if d[0] == d[1] {
                return Ok(Element::zero());
            }
            let swapped = format!("{fam}{}{}", d[1], d[0]);
            if let Some(&g) = self.index.get(&swapped) {
                return Ok(-Element::generator(g));
            }
        }
        Err(Error::UnknownSymbol(s).at(self.line, col))
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        match self.ring {
            Ring::Free => a.concat(b),
            Ring::Spec(s) => s.multiply(a, b),
        }
    }

    fn eval(&self, e: &Expr, env: &Env) -> Result<Element> {
        Ok(match e {
            Expr::Num(n) => Element::scalar(Scalar::from_rational(n.clone())),
            Expr::Name { text, col } => self.name(text, *col, env)?,
            Expr::Neg(a) => -self.eval(a, env)?,
            Expr::Add(a, b) => &self.eval(a, env)? + &self.eval(b, env)?,
            Expr::Sub(a, b) => &self.eval(a, env)? - &self.eval(b, env)?,
            Expr::Mul(a, b) => self.mul(&self.eval(a, env)?, &self.eval(b, env)?),
            Expr::Pow(a, n) => {
                let base = self.eval(a, env)?;
                let mut acc = Element::one();
                for _ in 0..*n {
                    acc = self.mul(&acc, &base);
                }
                acc
            }
            Expr::Call { name, args, col } => self.call(name, args, *col, env)?,
        })
    }

    fn call(&self, name: &str, args: &[Expr], col: usize, env: &Env) -> Result<Element> {
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(self.err(col, format!("`{name}` takes {n} argument(s)")))
            }
        };
        let scalar = |v: i64| Element::scalar(Scalar::from_int(v));
        Ok(match name {
            "g" => {
                arity(2)?;
                scalar(metric(self.component(&args[0], env)?, self.component(&args[1], env)?))
            }
            "eps" => {
                arity(4)?;
                let mut idx = [0; 4];
                for (slot, a) in idx.iter_mut().zip(args) {
                    *slot = self.component(a, env)?;
                }
                scalar(levi_civita(idx))
            }
            "inv" => {
                arity(2)?;
                let (a, b) = (self.component(&args[0], env)?, self.component(&args[1], env)?);
                Element::scalar(Scalar::var(inv_symbol(a, b)))
            }
            "shift" => {
                arity(1)?;
                Element::scalar(Scalar::var(shift_symbol(self.component(&args[0], env)?)))
            }
            "conj" => {
                arity(1)?;
                self.eval(&args[0], env)?.conj_coefficients()
            }
            "star" => {
                arity(1)?;
                match self.ring {
                    Ring::Spec(s) => s.involution(&self.eval(&args[0], env)?),
                    Ring::Free => return Err(self.err(col, "`star` is not available inside relations")),
                }
            }
            "sum" => {
                arity(2)?;
                let Expr::Name { text: var, .. } = &args[0] else {
                    return Err(self.err(col, "`sum` needs an index name first"));
                };
                let mut out = Element::zero();
                let mut inner = env.clone();
                inner.push((var.clone(), 0));
                for v in 0..4 {
                    inner.last_mut().unwrap().1 = v;
                    out += &self.eval(&args[1], &inner)?;
                }
                out
            }
            _ => return Err(Error::UnknownSymbol(format!("{name}(...)")).at(self.line, col)),
        })
    }

    fn holds(&self, c: &Cond, env: &Env) -> Result<bool> {
        let (a, b) = (self.index_value(&c.lhs, env)?, self.index_value(&c.rhs, env)?);
        Ok(match c.op {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Gt => a > b,
            CmpOp::Ge => a >= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
        })
    }
}

fn expr_col(e: &Expr) -> usize {
    match e {
        Expr::Name { col, .. } | Expr::Call { col, .. } => *col,
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) => expr_col(a),
        Expr::Num(_) => 0,
    }
}

/// Flattens `for` blocks into `(line, statement, bindings)` triples.
fn expand<'l>(lines: &'l [Line], env: &Env, ev: &mut Evaluator<'_>, out: &mut Vec<(usize, &'l Stmt, Env)>) -> Result<()> {
    for l in lines {
        match &l.stmt {
            Stmt::For {
                vars,
                lo,
                hi,
                conds,
                body,
            } => {
                let mut assignments: Vec<Env> = vec![env.clone()];
                for v in vars {
                    assignments = assignments
                        .into_iter()
                        .flat_map(|e| {
                            (*lo..=*hi).map(move |x| {
                                let mut e = e.clone();
                                e.push((v.clone(), x));
                                e
                            })
                        })
                        .collect();
                }
                ev.line = l.line;
                for a in assignments {
                    let mut ok = true;
                    for c in conds {
                        ok &= ev.holds(c, &a)?;
                    }
                    if ok {
                        expand(body, &a, ev, out)?;
                    }
                }
            }
            s => out.push((l.line, s, env.clone())),
        }
    }
    Ok(())
}

fn duplicate(line: usize, col: usize, what: &str) -> Error {
    Error::InvalidSpec(format!("duplicate {what}")).at(line, col)
}

/// Parses and evaluates a document.
pub fn parse_document(text: &str) -> Result<Document> {
    let lines = syntax::parse_lines(text)?;
    let empty = HashMap::new();
    let mut flat = Vec::new();
    {
        let mut ev = Evaluator {
            index: &empty,
            families: &[],
            ring: Ring::Free,
            line: 0,
        };
        expand(&lines, &Env::new(), &mut ev, &mut flat)?;
    }

    let mut doc = Document::default();
    let mut index = HashMap::new();
    let mut have_name = false;
    for (line, stmt, env) in &flat {
        match stmt {
            Stmt::Algebra(n) => {
                if have_name {
                    return Err(duplicate(*line, 1, "algebra name"));
                }
                doc.name = n.clone();
                have_name = true;
            }
            Stmt::Generators(ns) => {
                for n in ns {
                    let ev = Evaluator {
                        index: &index,
                        families: &[],
                        ring: Ring::Free,
                        line: *line,
                    };
                    let name = ev.subst(&n.text, n.col, env)?;
                    if matches!(name.as_str(), "i" | "kappa") || is_momentum_symbol(&name) {
                        return Err(syntax(*line, n.col, format!("`{name}` is reserved")));
                    }
                    if index.insert(name.clone(), doc.generators.len() as GenId).is_some() {
                        return Err(duplicate(*line, n.col, &format!("generator `{name}`")));
                    }
                    doc.generators.push(Generator::hermitian(name));
                }
            }
            Stmt::Antisymmetric(ns) => doc.families.extend(ns.iter().map(|n| n.text.clone())),
            _ => {}
        }
    }
    if !have_name {
        return Err(syntax(1, 1, "missing `algebra <name>` header"));
    }

    // Relations and the involution live in the free algebra.
    let families = doc.families.clone();
    let mut seen = BTreeSet::new();
    for (line, stmt, env) in &flat {
        let ev = Evaluator {
            index: &index,
            families: &families,
            ring: Ring::Free,
            line: *line,
        };
        match stmt {
            Stmt::Relation(a, b, rhs) => {
                let (l, r) = (ev.generator(a, env)?, ev.generator(b, env)?);
                let name = |g: GenId| doc.generators[g as usize].name.clone();
                if !seen.insert((l.min(r), l.max(r))) {
                    return Err(Error::DuplicateRelation(name(l), name(r)).at(*line, a.col));
                }
                if l <= r {
                    let why = "the left generator must come later in the generator order";
                    return Err(Error::RuleShape(name(l), name(r), why.into()).at(*line, a.col));
                }
                let rhs = ev.eval(rhs, env)?;
                for (w, _) in rhs.terms() {
                    if w.len() > 2 || word_order(w, &[l, r]) != std::cmp::Ordering::Less {
                        let why = format!("right-hand side word `{}` is not below `{}*{}`", words(&doc, w), name(l), name(r));
                        return Err(Error::RuleShape(name(l), name(r), why).at(*line, a.col));
                    }
                }
                if !rhs.is_zero() {
                    doc.relations.push(RewriteRule { left: l, right: r, rhs });
                }
            }
            Stmt::Star(g, e) => {
                let id = ev.generator(g, env)?;
                if doc.star.insert(id, ev.eval(e, env)?).is_some() {
                    return Err(duplicate(*line, g.col, "star image"));
                }
                doc.generators[id as usize].hermitian = false;
            }
            _ => {}
        }
    }
    doc.relations.sort_by_key(|r| (r.left, r.right));
    let spec = doc.spec()?;
    let spec0 = spec.at_kappa(Scalar::zero())?;

    for (line, stmt, env) in &flat {
        let (line, env) = (*line, env);
        let full = Evaluator {
            index: &index,
            families: &families,
            ring: Ring::Spec(&spec),
            line,
        };
        let undeformed = Evaluator {
            ring: Ring::Spec(&spec0),
            ..full
        };
        match stmt {
            Stmt::Invariant(ns) => doc.invariant.get_or_insert_with(Vec::new).extend(full.generators(ns, env)?),
            Stmt::Translations(ns) => {
                let gs = full.generators(ns, env)?;
                let arr: [GenId; 4] = gs
                    .try_into()
                    .map_err(|_| syntax(line, 1, "`translations` needs exactly four generators"))?;
                if doc.translations.replace(arr).is_some() {
                    return Err(duplicate(line, 1, "translations"));
                }
            }
            Stmt::Tau(g, e) => insert_once(&mut doc.tau, full.generator(g, env)?, undeformed.eval(e, env)?, line, g.col, "tau")?,
            Stmt::Lorentz(g, e) => {
                insert_once(&mut doc.lorentz, full.generator(g, env)?, full.eval(e, env)?, line, g.col, "lorentz")?
            }
            Stmt::Gamma(e) => {
                if doc.data.gamma.replace(undeformed.eval(e, env)?).is_some() {
                    return Err(duplicate(line, 1, "gamma"));
                }
            }
            Stmt::Lambda(g, e) => {
                insert_once(&mut doc.data.lambda, full.generator(g, env)?, undeformed.eval(e, env)?, line, g.col, "lambda")?
            }
            Stmt::Mixed(g, e) => {
                insert_once(&mut doc.data.mixed, full.generator(g, env)?, undeformed.eval(e, env)?, line, g.col, "mixed")?
            }
            Stmt::Cinv(a, b, e) => {
                let key = (full.generator(a, env)?, full.generator(b, env)?);
                insert_once(&mut doc.data.cinv, key, undeformed.eval(e, env)?, line, a.col, "cinv")?
            }
            Stmt::Central(n, e) => doc.central.push((full.subst(&n.text, n.col, env)?, full.eval(e, env)?)),
            Stmt::Casimir(n, e) => doc.casimirs.push((full.subst(&n.text, n.col, env)?, full.eval(e, env)?)),
            Stmt::CenterCandidate(e) => doc.center_candidates.push(full.eval(e, env)?),
            Stmt::CenterProbe(e) => doc.center_probes.push(full.eval(e, env)?),
            Stmt::ExpectBracket(f, g, h) => {
                doc.expected_brackets
                    .push((full.eval(f, env)?, full.eval(g, env)?, full.eval(h, env)?))
            }
            Stmt::ContractionSpan(ns) => doc
                .contraction
                .get_or_insert_with(empty_contraction)
                .span
                .extend(full.generators(ns, env)?),
            Stmt::ContractionAbelian(ns) => doc
                .contraction
                .get_or_insert_with(empty_contraction)
                .abelian_at_zero
                .extend(full.generators(ns, env)?),
            _ => {}
        }
    }
    Ok(doc)
}

fn empty_contraction() -> Contraction {
    Contraction {
        span: Vec::new(),
        abelian_at_zero: Vec::new(),
    }
}

fn insert_once<K: Ord>(map: &mut BTreeMap<K, Element>, k: K, v: Element, line: usize, col: usize, what: &str) -> Result<()> {
    if map.insert(k, v).is_some() {
        return Err(duplicate(line, col, what));
    }
    Ok(())
}

fn words(doc: &Document, w: &[GenId]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&g| doc.generators[g as usize].name.as_str())
        .collect::<Vec<_>>()
        .join("*")
}

impl Document {
    pub fn spec(&self) -> Result<AlgebraSpec> {
        AlgebraSpec::new(self.generators.clone(), self.relations.clone(), self.star.clone())
    }

    /// Builds the model; the invariant subalgebra defaults to everything
    /// but the translations.
    pub fn to_model(&self) -> Result<Model> {
        let family = Family::new(self.spec()?)?;
        let n = self.generators.len() as GenId;
        let invariant: BTreeSet<GenId> = match (&self.invariant, &self.translations) {
            (Some(v), _) => v.iter().copied().collect(),
            (None, Some(xs)) => (0..n).filter(|g| !xs.contains(g)).collect(),
            (None, None) => (0..n).collect(),
        };
        Ok(Model {
            name: self.name.clone(),
            family,
            invariant,
            translations: self.translations,
            tau: TauAction { table: self.tau.clone() },
            lorentz: (!self.lorentz.is_empty()).then(|| LorentzAction {
                table: self.lorentz.clone(),
            }),
            data: self.data.clone(),
            central: self.central.clone(),
            casimirs: self.casimirs.clone(),
            center_candidates: self.center_candidates.clone(),
            center_probes: self.center_probes.clone(),
            expected_brackets: self.expected_brackets.clone(),
            contraction: self.contraction.clone(),
        })
    }

    /// The document describing a model, without antisymmetric families.
    pub fn from_model(m: &Model) -> Document {
        let spec = &m.family.spec;
        let star = spec.star_table();
        Document {
            name: m.name.clone(),
            generators: spec.generators().to_vec(),
            families: Vec::new(),
            star,
            relations: spec.rules(),
            invariant: Some(m.invariant.iter().copied().collect()),
            translations: m.translations,
            tau: m.tau.table.clone(),
            lorentz: m.lorentz.as_ref().map(|l| l.table.clone()).unwrap_or_default(),
            data: m.data.clone(),
            central: m.central.clone(),
            casimirs: m.casimirs.clone(),
            center_candidates: m.center_candidates.clone(),
            center_probes: m.center_probes.clone(),
            expected_brackets: m.expected_brackets.clone(),
            contraction: m.contraction.clone(),
        }
    }
}

#[cfg(test)]
mod tests;
