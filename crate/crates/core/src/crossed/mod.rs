//! Crossed-product presentation of the undeformed algebra: the invariant
//! subalgebra, the dual translation action τ, plane waves u(k), and the
//! cocycle data (γ, λ, c^I) with the identities tying them together.

mod element;

pub use element::CrossedElement;

use std::collections::{BTreeMap, BTreeSet};

use crate::check::{combine, Check};
use crate::coeffring::{Momentum, Scalar, Var};
use crate::deformation::{symmetric, Family, Identification};
use crate::error::{Error, Result};
use crate::models::lorentz::{LorentzAction, LorentzMatrix};
use crate::ncalg::{AlgebraSpec, Element, GenId, Word};

/// τ_k on the invariant generators, given as elements over the symbols
/// `k0..k3`. Generators absent from the table are fixed.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct TauAction {
    pub table: BTreeMap<GenId, Element>,
}

impl TauAction {
    pub fn trivial() -> Self {
        TauAction::default()
    }

    pub fn image(&self, p: &Momentum, g: GenId) -> Element {
        match self.table.get(&g) {
            Some(e) => e.substitute(&p.bindings_for("k")),
            None => Element::generator(g),
        }
    }

    /// Multiplicative extension inside `spec0`.
    pub fn apply(&self, spec0: &AlgebraSpec, p: &Momentum, e: &Element) -> Element {
        let images: BTreeMap<GenId, Element> = e.generators().into_iter().map(|g| (g, self.image(p, g))).collect();
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let mut acc = Element::scalar(c.clone());
            for g in w {
                acc = spec0.multiply(&acc, &images[g]);
            }
            out += &acc;
        }
        out
    }
}

/// First-order data of the cocycle in the crossed-product picture.
///
/// `gamma` is over `k*`, `l*`; `lambda` and `mixed` over `k*`. `mixed` holds
/// μ with `c(f, u(k)) = μ(f,k) u(k)` on generators; it is only needed to
/// assemble the full cocycle.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct CocycleData {
    pub gamma: Option<Element>,
    pub lambda: BTreeMap<GenId, Element>,
    pub cinv: BTreeMap<(GenId, GenId), Element>,
    pub mixed: BTreeMap<GenId, Element>,
}

/// Everything needed to compute in the crossed product.
#[derive(Clone, Copy)]
pub struct Crossed<'a> {
    pub family: &'a Family,
    pub invariant: &'a BTreeSet<GenId>,
    pub tau: &'a TauAction,
    pub data: &'a CocycleData,
    pub lorentz: Option<&'a LorentzAction>,
    /// The coordinate generators `x^0..x^3`, when present.
    pub translations: Option<[GenId; 4]>,
}

fn momenta() -> (Momentum, Momentum, Momentum) {
    (Momentum::symbolic("k"), Momentum::symbolic("l"), Momentum::symbolic("m"))
}

impl<'a> Crossed<'a> {
    pub fn spec0(&self) -> &'a AlgebraSpec {
        &self.family.spec0
    }

    pub fn render(&self, e: &Element) -> String {
        self.family.spec.render(e)
    }

    fn zero_check(&self, id: &str, r: &Element) -> Check {
        Check::zero(id, &self.family.spec, r)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.spec0().multiply(a, b)
    }

    pub fn star(&self, a: &Element) -> Element {
        self.spec0().involution(a)
    }

    pub fn require_invariant(&self, e: &Element) -> Result<()> {
        match e.generators().into_iter().find(|g| !self.invariant.contains(g)) {
            Some(g) => Err(Error::NotInvariant(self.family.spec.name(g).to_string())),
            None => Ok(()),
        }
    }

    pub fn tau(&self, p: &Momentum, e: &Element) -> Element {
        self.tau.apply(self.spec0(), p, e)
    }

    pub fn gamma(&self, p: &Momentum, q: &Momentum) -> Result<Element> {
        let g = self.data.gamma.as_ref().ok_or_else(|| Error::MissingData("gamma".into()))?;
        let mut b = p.bindings_for("k");
        b.extend(q.bindings_for("l"));
        Ok(g.substitute(&b))
    }

    fn lambda_word(&self, w: &[GenId], p: &Momentum) -> Result<Element> {
        match w.len() {
            0 => Ok(Element::zero()),
            1 => self
                .data
                .lambda
                .get(&w[0])
                .map(|e| e.substitute(&p.bindings_for("k")))
                .ok_or_else(|| Error::MissingData(format!("lambda on {}", self.family.spec.name(w[0])))),
            _ => {
                // λ(g·r) = g λ(r) + λ(g) r - c(g,r) + τ_p c(τ_{-p} g, τ_{-p} r)
                let g = Element::generator(w[0]);
                let r = Element::word(&w[1..]);
                let neg = -p;
                let mut out = self.mul(&g, &self.lambda_word(&w[1..], p)?);
                out += &self.mul(&self.lambda_word(&w[..1], p)?, &r);
                out -= &self.cinv(&g, &r)?;
                out += &self.tau(p, &self.cinv(&self.tau(&neg, &g), &self.tau(&neg, &r))?);
                Ok(out)
            }
        }
    }

    /// λ(f, p), extended from generators by the rule the λ/c^I compatibility
    /// relation forces on products whose factors are already ordered.
    pub fn lambda(&self, f: &Element, p: &Momentum) -> Result<Element> {
        if p.is_zero() {
            return Ok(Element::zero());
        }
        let f = self.spec0().normal_form(f);
        let mut out = Element::zero();
        for (w, c) in f.terms() {
            out.add_scaled(&self.lambda_word(w, p)?, c);
        }
        Ok(out)
    }

    fn cinv_words(&self, a: &Word, b: &Word) -> Result<Element> {
        if a.is_empty() || b.is_empty() {
            return Ok(Element::zero());
        }
        if a.len() == 1 && b.len() == 1 {
            if let Some(e) = self.data.cinv.get(&(a[0], b[0])) {
                return Ok(e.clone());
            }
        }
        if !symmetric::is_lie_type(&self.family.spec) {
            return Err(Error::MissingData(format!(
                "cinv on ({}, {})",
                self.family.spec.render_word(a),
                self.family.spec.render_word(b)
            )));
        }
        self.family.extract_c_with(&Element::word(a), &Element::word(b), Identification::Symmetric)
    }

    /// c^I(f, g): the supplied table on generator pairs, otherwise the
    /// symmetric-identification cocycle of the family.
    pub fn cinv(&self, f: &Element, g: &Element) -> Result<Element> {
        let f = self.spec0().normal_form(f);
        let g = self.spec0().normal_form(g);
        let mut out = Element::zero();
        for (w1, c1) in f.terms() {
            for (w2, c2) in g.terms() {
                out.add_scaled(&self.cinv_words(w1, w2)?, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// μ(f, p) with `c(f, u(p)) = μ(f,p) u(p)`; defined on scalars and on
    /// the generators carried by the data.
    pub fn mixed(&self, f: &Element, p: &Momentum) -> Result<Element> {
        if p.is_zero() {
            return Ok(Element::zero());
        }
        let f = self.spec0().normal_form(f);
        let mut out = Element::zero();
        for (w, c) in f.terms() {
            match w.len() {
                0 => {}
                1 => {
                    let e = self.data.mixed.get(&w[0]).ok_or_else(|| {
                        Error::MissingData(format!(
                            "restriction of c to invariant x translation on {}",
                            self.family.spec.name(w[0])
                        ))
                    })?;
                    out.add_scaled(&e.substitute(&p.bindings_for("k")), c);
                }
                _ => {
                    return Err(Error::MissingData(format!(
                        "restriction of c to invariant x translation on {}",
                        self.family.spec.render_word(w)
                    )))
                }
            }
        }
        Ok(out)
    }

    /// X with `c(u(p), h) = X u(p)`, obtained from μ by the reality
    /// condition: `c(u(p), h) = c(h*, u(-p))*`.
    pub fn mixed_left(&self, p: &Momentum, h: &Element) -> Result<Element> {
        let m = self.mixed(&self.star(h), &-p)?;
        Ok(self.tau(p, &self.star(&m)))
    }

    pub fn alpha(&self, l: &LorentzMatrix, e: &Element) -> Option<Element> {
        self.lorentz.map(|a| a.apply_lorentz(self.spec0(), l, e))
    }

    fn invariant_gens(&self) -> Vec<GenId> {
        self.invariant.iter().copied().collect()
    }

    fn name(&self, g: GenId) -> &str {
        self.family.spec.name(g)
    }

    // ---- crossed product ----

    pub fn multiply(&self, a: &CrossedElement, b: &CrossedElement) -> CrossedElement {
        let mut out = CrossedElement::zero();
        for (k, x) in a.terms() {
            for (l, y) in b.terms() {
                out.add_term(k + l, self.mul(x, &self.tau(k, y)));
            }
        }
        out
    }

    /// `(a u(k))* = τ_{-k}(a*) u(-k)`.
    pub fn involution(&self, a: &CrossedElement) -> CrossedElement {
        let mut out = CrossedElement::zero();
        for (k, x) in a.terms() {
            let nk = -k;
            out.add_term(nk.clone(), self.tau(&nk, &self.star(x)));
        }
        out
    }

    /// The full cocycle on `(f u(k), u(l) g)` assembled from its
    /// restrictions.
    pub fn assemble_c(&self, f: &Element, k: &Momentum, l: &Momentum, g: &Element) -> Result<CrossedElement> {
        self.require_invariant(f)?;
        self.require_invariant(g)?;
        let kl = k + l;
        let tg = self.tau(&kl, g);
        let wave = |a: Element, p: &Momentum| CrossedElement::term(p.clone(), a);
        let inv = |a: &Element| CrossedElement::term(Momentum::zero(), a.clone());

        let mut first = self.mul(&self.mul(f, &self.gamma(k, l)?), &tg);
        first += &self.cinv(f, &tg)?;
        let mut out = wave(first, &kl);
        out += &wave(self.mixed(&self.mul(f, &tg), &kl)?, &kl);
        let fu = wave(f.clone(), k);
        out -= &self.multiply(&fu, &wave(self.mixed_left(l, g)?, l));
        let cfu = wave(self.mixed(f, k)?, k);
        out -= &self.multiply(&self.multiply(&cfu, &wave(Element::one(), l)), &inv(g));
        out += &wave(self.mul(f, &self.mixed_left(&kl, g)?), &kl);
        out -= &wave(self.mul(f, &self.mixed(&tg, &kl)?), &kl);
        Ok(out)
    }

    // ---- checks ----

    /// The τ action: identity at zero, group law, relation preservation,
    /// compatibility with the involution, invariance of the subalgebra, and
    /// agreement with `i k_μ [x^μ, ·]` at first order.
    pub fn check_tau(&self) -> Vec<Check> {
        let (k, l, _) = momenta();
        let gens = self.invariant_gens();
        let spec0 = self.spec0();
        let mut closure = Vec::new();
        for r in spec0.rules() {
            if self.invariant.contains(&r.left) && self.invariant.contains(&r.right) {
                let ok = self.require_invariant(&r.rhs).is_ok();
                let c = if ok {
                    Check::pass("")
                } else {
                    Check::fail("", spec0.render(&r.rhs), r.rhs.len())
                };
                closure.push((format!("[{}, {}]", self.name(r.left), self.name(r.right)), c));
            }
        }
        for &g in &gens {
            let img = self.tau.image(&k, g);
            let c = match self.require_invariant(&img) {
                Ok(()) => Check::pass(""),
                Err(_) => Check::fail("", self.render(&img), img.len()),
            };
            closure.push((format!("tau({})", self.name(g)), c));
        }

        let mut ident = Vec::new();
        let mut hom = Vec::new();
        let mut star = Vec::new();
        for &g in &gens {
            let e = Element::generator(g);
            let r = &self.tau(&Momentum::zero(), &e) - &e;
            ident.push((self.name(g).to_string(), self.zero_check("", &r)));
            let r = &self.tau(&k, &self.tau(&l, &e)) - &self.tau(&(&k + &l), &e);
            hom.push((self.name(g).to_string(), self.zero_check("", &r)));
            let r = &self.tau(&k, &self.star(&e)) - &self.star(&self.tau(&k, &e));
            star.push((self.name(g).to_string(), self.zero_check("", &r)));
        }

        let mut auto = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let ab = self.mul(&Element::generator(a), &Element::generator(b));
                let lhs = self.tau(&k, &ab);
                let rhs = self.mul(&self.tau.image(&k, a), &self.tau.image(&k, b));
                auto.push((format!("({}, {})", self.name(a), self.name(b)), self.zero_check("", &(&lhs - &rhs))));
            }
        }

        let first = match self.translations {
            None => Check::not_applicable("tau-first-order", "no coordinate generators"),
            Some(xs) => {
                let mut parts = Vec::new();
                for &g in &gens {
                    let e = Element::generator(g);
                    let linear = momentum_degree_part(&self.tau(&k, &e), "k", 1);
                    let mut expect = Element::zero();
                    for (mu, &x) in xs.iter().enumerate() {
                        let comm = spec0.commutator(&Element::generator(x), &e);
                        expect.add_scaled(&comm, &(&Scalar::i() * &k.0[mu]));
                    }
                    parts.push((self.name(g).to_string(), self.zero_check("", &(&linear - &expect))));
                }
                combine("tau-first-order", parts)
            }
        };

        vec![
            combine("tau-invariant-closure", closure),
            combine("tau-identity", ident),
            combine("tau-homomorphism", hom),
            combine("tau-automorphism", auto),
            combine("tau-involution", star),
            first,
        ]
    }

    fn gamma_present(&self, id: &str) -> Option<Check> {
        self.data
            .gamma
            .is_none()
            .then(|| Check::not_applicable(id, "no gamma supplied"))
    }

    pub fn group_cocycle_residual(&self, k: &Momentum, l: &Momentum, m: &Momentum) -> Result<Element> {
        let mut r = self.tau(k, &self.gamma(l, m)?);
        r -= &self.gamma(&(k + l), m)?;
        r += &self.gamma(k, &(l + m))?;
        r -= &self.gamma(k, l)?;
        Ok(r)
    }

    /// γ is a normalized group 2-cocycle for τ.
    pub fn check_group_cocycle(&self) -> Result<Vec<Check>> {
        if let Some(c) = self.gamma_present("gamma-cocycle") {
            return Ok(vec![c, Check::not_applicable("gamma-normalized", "no gamma supplied")]);
        }
        let (k, l, m) = momenta();
        let r = self.group_cocycle_residual(&k, &l, &m)?;
        let z = Momentum::zero();
        let norm = &self.gamma(&k, &z)? + &self.gamma(&z, &k)?.scale(&Scalar::i());
        Ok(vec![self.zero_check("gamma-cocycle", &r), self.zero_check("gamma-normalized", &norm)])
    }

    pub fn gamma_reality_residual(&self, twisted: bool) -> Result<Element> {
        let (k, l, _) = momenta();
        let lhs = self.star(&self.gamma(&k, &l)?);
        let g = self.gamma(&-&l, &-&k)?;
        let rhs = if twisted { self.tau(&(&k + &l), &g) } else { g };
        Ok(&lhs - &rhs)
    }

    /// `γ(k,l)* = τ_{k+l} γ(-l,-k)`.
    pub fn check_gamma_reality(&self) -> Result<Check> {
        if let Some(c) = self.gamma_present("gamma-reality") {
            return Ok(c);
        }
        Ok(self.zero_check("gamma-reality", &self.gamma_reality_residual(true)?))
    }

    /// The part of γ(k,l) bilinear in the momenta is `-k_μ l_ν c(x^μ, x^ν)`
    /// with the symmetric identification.
    pub fn check_gamma_leading(&self) -> Result<Check> {
        let id = "gamma-leading-order";
        if let Some(c) = self.gamma_present(id) {
            return Ok(c);
        }
        let Some(xs) = self.translations else {
            return Ok(Check::not_applicable(id, "no coordinate generators"));
        };
        if !symmetric::is_lie_type(&self.family.spec) {
            return Ok(Check::not_applicable(id, "relations are not length-lowering"));
        }
        let (k, l, _) = momenta();
        let g = self.gamma(&k, &l)?;
        let bilinear = momentum_degree_part(&momentum_degree_part(&g, "k", 1), "l", 1);
        let mut expect = Element::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                let (a, b) = (Element::generator(xs[mu]), Element::generator(xs[nu]));
                let c = self.family.extract_c_with(&a, &b, Identification::Symmetric)?;
                expect.add_scaled(&c, &-(&k.0[mu] * &l.0[nu]));
            }
        }
        Ok(self.zero_check(id, &(&bilinear - &expect)))
    }

    fn lorentz_missing(&self, id: &str) -> Option<Check> {
        self.lorentz
            .is_none()
            .then(|| Check::not_applicable(id, "no Lorentz action supplied"))
    }

    /// `α_Λ γ(k,l) = γ(Λk, Λl)` for each sample matrix.
    pub fn check_gamma_equivariance(&self, samples: &[(String, LorentzMatrix)]) -> Result<Check> {
        let id = "gamma-lorentz";
        if let Some(c) = self.gamma_present(id).or_else(|| self.lorentz_missing(id)) {
            return Ok(c);
        }
        let (k, l, _) = momenta();
        let mut parts = Vec::new();
        for (name, lm) in samples {
            let lhs = self.alpha(lm, &self.gamma(&k, &l)?).unwrap();
            let rhs = self.gamma(&lm.act_momentum(&k), &lm.act_momentum(&l))?;
            parts.push((name.clone(), self.zero_check("", &(&lhs - &rhs))));
        }
        Ok(combine(id, parts))
    }

    fn lambda_set(&self) -> Vec<GenId> {
        self.data.lambda.keys().copied().collect()
    }

    /// The λ relations on the generators that carry λ: Lorentz covariance
    /// (per sample), normalization, reality, the γ/λ relation and the
    /// λ/c^I relation.
    pub fn check_lambda_relations(&self, samples: &[(String, LorentzMatrix)]) -> Result<Vec<Check>> {
        let ids = ["lambda-lorentz", "lambda-normalized", "lambda-reality", "gamma-lambda", "lambda-cinv"];
        let set = self.lambda_set();
        if set.is_empty() {
            return Ok(ids.iter().map(|id| Check::not_applicable(*id, "no lambda supplied")).collect());
        }
        let (k, l, _) = momenta();
        let label = |gs: &[GenId]| {
            let n: Vec<_> = gs.iter().map(|g| self.name(*g)).collect();
            format!("({})", n.join(", "))
        };

        let lorentz = match self.lorentz_missing(ids[0]) {
            Some(c) => c,
            None => {
                let mut parts = Vec::new();
                for (name, lm) in samples {
                    for &g in &set {
                        let f = Element::generator(g);
                        let lhs = self.alpha(lm, &self.lambda(&f, &k)?).unwrap();
                        let rhs = self.lambda(&self.alpha(lm, &f).unwrap(), &lm.act_momentum(&k))?;
                        parts.push((format!("{name} {}", label(&[g])), self.zero_check("", &(&lhs - &rhs))));
                    }
                }
                combine(ids[0], parts)
            }
        };

        let mut norm = Vec::new();
        let unit = self.lambda(&Element::one(), &k)?;
        norm.push(("unit".to_string(), self.zero_check("", &unit)));
        for &g in &set {
            let f = Element::generator(g);
            let direct = self.data.lambda[&g].substitute(&Momentum::zero().bindings_for("k"));
            norm.push((label(&[g]), self.zero_check("", &direct)));
            norm.push((label(&[g]), self.zero_check("", &self.lambda(&f, &Momentum::zero())?)));
        }

        let mut real = Vec::new();
        let mut eq29 = Vec::new();
        for &g in &set {
            let f = Element::generator(g);
            let lhs = self.star(&self.lambda(&f, &k)?);
            let inner = self.lambda(&self.tau(&-&k, &self.star(&f)), &-&k)?;
            let rhs = -self.tau(&k, &inner);
            real.push((label(&[g]), self.zero_check("", &(&lhs - &rhs))));
            if self.data.gamma.is_some() {
                eq29.push((label(&[g]), self.zero_check("", &self.gamma_lambda_residual(&f, &k, &l)?)));
            }
        }
        let eq29 = if self.data.gamma.is_some() {
            combine(ids[3], eq29)
        } else {
            Check::not_applicable(ids[3], "no gamma supplied")
        };

        let mut eq30 = Vec::new();
        for &a in &set {
            for &b in &set {
                let (f, g) = (Element::generator(a), Element::generator(b));
                eq30.push((label(&[a, b]), self.zero_check("", &self.lambda_cinv_residual(&f, &g, &k)?)));
            }
        }

        Ok(vec![
            lorentz,
            combine(ids[1], norm),
            combine(ids[2], real),
            eq29,
            combine(ids[4], eq30),
        ])
    }

    /// `fγ(k,l) - γ(k,l)f - τ_k λ(τ_{-k} f, l) + λ(f, k+l) - λ(f, k)`.
    pub fn gamma_lambda_residual(&self, f: &Element, k: &Momentum, l: &Momentum) -> Result<Element> {
        let g = self.gamma(k, l)?;
        let mut r = &self.mul(f, &g) - &self.mul(&g, f);
        r -= &self.tau(k, &self.lambda(&self.tau(&-k, f), l)?);
        r += &self.lambda(f, &(k + l))?;
        r -= &self.lambda(f, k)?;
        Ok(r)
    }

    /// `c(f,g) - τ_k c(τ_{-k}f, τ_{-k}g) - fλ(g,k) + λ(fg,k) - λ(f,k)g`.
    pub fn lambda_cinv_residual(&self, f: &Element, g: &Element, k: &Momentum) -> Result<Element> {
        let nk = -k;
        let mut r = self.cinv(f, g)?;
        r -= &self.tau(k, &self.cinv(&self.tau(&nk, f), &self.tau(&nk, g))?);
        r -= &self.mul(f, &self.lambda(g, k)?);
        r += &self.lambda(&self.mul(f, g), k)?;
        r -= &self.mul(&self.lambda(f, k)?, g);
        Ok(r)
    }

    /// The supplied c^I table: agreement with the family's own first-order
    /// term, Lorentz invariance, and reality.
    pub fn check_cinv(&self, samples: &[(String, LorentzMatrix)]) -> Result<Vec<Check>> {
        let ids = ["cinv-extraction", "cinv-lorentz", "cinv-reality"];
        if self.data.cinv.is_empty() {
            return Ok(ids.iter().map(|id| Check::not_applicable(*id, "no cinv supplied")).collect());
        }
        let pairs: Vec<(GenId, GenId)> = self.data.cinv.keys().copied().collect();
        let label = |a: GenId, b: GenId| format!("({}, {})", self.name(a), self.name(b));

        let extraction = if symmetric::is_lie_type(&self.family.spec) {
            let mut parts = Vec::new();
            for &(a, b) in &pairs {
                let (f, g) = (Element::generator(a), Element::generator(b));
                let c = self.family.extract_c_with(&f, &g, Identification::Symmetric)?;
                parts.push((label(a, b), self.zero_check("", &(&self.data.cinv[&(a, b)] - &c))));
            }
            combine(ids[0], parts)
        } else {
            Check::not_applicable(ids[0], "relations are not length-lowering")
        };

        let lorentz = match self.lorentz_missing(ids[1]) {
            Some(c) => c,
            None => {
                let mut parts = Vec::new();
                for (name, lm) in samples {
                    for &(a, b) in &pairs {
                        let (f, g) = (Element::generator(a), Element::generator(b));
                        let lhs = self.alpha(lm, &self.cinv(&f, &g)?).unwrap();
                        let rhs = self.cinv(&self.alpha(lm, &f).unwrap(), &self.alpha(lm, &g).unwrap())?;
                        parts.push((format!("{name} {}", label(a, b)), self.zero_check("", &(&lhs - &rhs))));
                    }
                }
                combine(ids[1], parts)
            }
        };

        let mut real = Vec::new();
        for &(a, b) in &pairs {
            let (f, g) = (Element::generator(a), Element::generator(b));
            let lhs = self.star(&self.cinv(&f, &g)?);
            let rhs = self.cinv(&self.star(&g), &self.star(&f))?;
            real.push((label(a, b), self.zero_check("", &(&lhs - &rhs))));
        }
        Ok(vec![extraction, lorentz, combine(ids[2], real)])
    }

    /// μ(f,k) - X(k, τ_{-k} f) = λ(f,k), where `c(u(k), h) = X(k,h) u(k)`.
    pub fn check_mixed(&self) -> Result<Check> {
        let id = "mixed-lambda";
        if self.data.mixed.is_empty() {
            return Ok(Check::not_applicable(id, "no mixed restriction supplied"));
        }
        let (k, _, _) = momenta();
        let mut parts = Vec::new();
        for &g in self.data.mixed.keys() {
            let f = Element::generator(g);
            let mut r = self.mixed(&f, &k)?;
            r -= &self.mixed_left(&k, &self.tau(&-&k, &f))?;
            r -= &self.lambda(&f, &k)?;
            parts.push((self.name(g).to_string(), self.zero_check("", &r)));
        }
        Ok(combine(id, parts))
    }

    /// `α_Λ ∘ τ_k = τ_{Λk} ∘ α_Λ` and `α_Λ ∘ X^μ = Λ^{-1μ}_ν X^ν ∘ α_Λ` on
    /// invariant generators.
    pub fn check_lorentz_compatibility(&self, samples: &[(String, LorentzMatrix)]) -> Vec<Check> {
        let ids = ["lorentz-tau", "lorentz-derivations"];
        if let Some(c) = self.lorentz_missing(ids[0]) {
            return vec![c, self.lorentz_missing(ids[1]).unwrap()];
        }
        let k = Momentum::symbolic("k");
        let spec0 = self.spec0();
        let mut tau_parts = Vec::new();
        let mut der_parts = Vec::new();
        for (name, lm) in samples {
            let inv = lm.inverse();
            for &g in self.invariant.iter() {
                let e = Element::generator(g);
                let lhs = self.alpha(lm, &self.tau(&k, &e)).unwrap();
                let rhs = self.tau(&lm.act_momentum(&k), &self.alpha(lm, &e).unwrap());
                tau_parts.push((format!("{name} {}", self.name(g)), self.zero_check("", &(&lhs - &rhs))));
                if let Some(xs) = self.translations {
                    let ae = self.alpha(lm, &e).unwrap();
                    for mu in 0..4 {
                        let lhs = self.alpha(lm, &spec0.commutator(&Element::generator(xs[mu]), &e)).unwrap();
                        let mut rhs = Element::zero();
                        for nu in 0..4 {
                            let c = Scalar::from_rational(inv.entry(mu, nu).clone());
                            rhs.add_scaled(&spec0.commutator(&Element::generator(xs[nu]), &ae), &c);
                        }
                        der_parts.push((
                            format!("{name} mu={mu} {}", self.name(g)),
                            self.zero_check("", &(&lhs - &rhs)),
                        ));
                    }
                }
            }
        }
        let der = if self.translations.is_some() {
            combine(ids[1], der_parts)
        } else {
            Check::not_applicable(ids[1], "no coordinate generators")
        };
        vec![combine(ids[0], tau_parts), der]
    }
}

/// The part of `e` whose coefficients have total degree `deg` in the
/// momentum symbols with the given prefix.
pub fn momentum_degree_part(e: &Element, prefix: &str, deg: u32) -> Element {
    e.map_coefficients(|c| {
        Scalar::from_terms(
            c.terms()
                .filter(|(m, _)| {
                    m.factors()
                        .filter(|(v, _)| matches!(v, Var::Sym(s) if s.starts_with(prefix) && crate::coeffring::is_momentum_symbol(s)))
                        .map(|(_, e)| e)
                        .sum::<u32>()
                        == deg
                })
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    })
}
