//! Built-in fixtures and the checks that depend on a whole model rather
//! than on one layer of it.

pub mod dfr;
pub mod example;
pub mod lorentz;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check::{combine, Check};
use crate::coeffring::{Momentum, Scalar};
use crate::crossed::{CocycleData, Crossed, TauAction};
use crate::deformation::{symmetric, Family, Identification};
use crate::error::{Error, Result};
use crate::ncalg::{is_central, Element, GenId};

use lorentz::{LorentzAction, LorentzMatrix, PhasedWave, PoincareElement};

/// Generators whose span should close as a Lie algebra at κ = ±1, 0, and
/// the subset that becomes abelian at κ = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Contraction {
    pub span: Vec<GenId>,
    pub abelian_at_zero: Vec<GenId>,
}

/// A deformation family together with its translation structure and the
/// claims made about it.
#[derive(Clone)]
pub struct Model {
    pub name: String,
    pub family: Family,
    pub invariant: BTreeSet<GenId>,
    pub translations: Option<[GenId; 4]>,
    pub tau: TauAction,
    pub lorentz: Option<LorentzAction>,
    pub data: CocycleData,
    /// Elements claimed central in the deformed algebra.
    pub central: Vec<(String, Element)>,
    pub casimirs: Vec<(String, Element)>,
    /// Central elements of the limit on which the Poisson structure is tested.
    pub center_candidates: Vec<Element>,
    pub center_probes: Vec<Element>,
    /// `(f, g, h)` with the claim `{f, g} = h`.
    pub expected_brackets: Vec<(Element, Element, Element)>,
    pub contraction: Option<Contraction>,
}

pub fn builtin(name: &str) -> Option<Model> {
    match name {
        "example-so41" => Some(example::build()),
        "dfr-limit" => Some(dfr::build()),
        _ => None,
    }
}

pub const BUILTIN_NAMES: [&str; 2] = ["example-so41", "dfr-limit"];

impl Model {
    pub fn crossed(&self) -> Crossed<'_> {
        Crossed {
            family: &self.family,
            invariant: &self.invariant,
            tau: &self.tau,
            data: &self.data,
            lorentz: self.lorentz.as_ref(),
            translations: self.translations,
        }
    }

    fn render(&self, e: &Element) -> String {
        self.family.spec.render(e)
    }

    /// Every listed central element commutes with every generator.
    pub fn check_central(&self, id: &str, list: &[(String, Element)]) -> Check {
        if list.is_empty() {
            return Check::not_applicable(id, "no elements listed");
        }
        let spec = &self.family.spec;
        let parts = list.iter().map(|(name, z)| {
            let c = is_central(z, spec);
            let res = c.witnesses.first().map(|w| w.1.clone()).unwrap_or_default();
            (name.clone(), Check::zero("", spec, &res))
        });
        combine(id, parts)
    }

    /// Lowest-order parts of the Casimirs stay central in the limit.
    pub fn check_casimir_limits(&self) -> Check {
        let id = "casimir-limit";
        if self.casimirs.is_empty() {
            return Check::not_applicable(id, "no Casimirs listed");
        }
        let spec0 = &self.family.spec0;
        let parts = self.casimirs.iter().map(|(name, z)| {
            let c = is_central(&lowest_kappa_part(z), spec0);
            let res = c.witnesses.first().map(|w| w.1.clone()).unwrap_or_default();
            (name.clone(), Check::zero("", spec0, &res))
        });
        combine(id, parts)
    }

    /// `{f, g} = h` for every listed triple, through both identifications
    /// and the commutator.
    pub fn check_expected_brackets(&self) -> Result<Check> {
        let id = "bracket-values";
        if self.expected_brackets.is_empty() {
            return Ok(Check::not_applicable(id, "no bracket values listed"));
        }
        let mut parts = Vec::new();
        for (f, g, h) in &self.expected_brackets {
            let label = format!("{{{}, {}}}", self.render(f), self.render(g));
            let from_comm = self.family.bracket_from_commutator(f, g)?;
            parts.push((format!("{label} commutator"), Check::zero("", &self.family.spec, &(&from_comm - h))));
            let ordered = self.family.bracket_with(f, g, Identification::Ordered)?;
            parts.push((format!("{label} ordered"), Check::zero("", &self.family.spec, &(&ordered - h))));
            if symmetric::is_lie_type(&self.family.spec) {
                let sym = self.family.bracket_with(f, g, Identification::Symmetric)?;
                parts.push((format!("{label} symmetric"), Check::zero("", &self.family.spec, &(&sym - h))));
            }
        }
        Ok(combine(id, parts))
    }

    /// `{x^λ, {x^μ, x^ν}} = 0`, expected whenever the translations act
    /// trivially on the invariant algebra.
    pub fn check_nested_translation_brackets(&self) -> Result<Check> {
        let id = "translation-nested-bracket";
        let Some(xs) = self.translations else {
            return Ok(Check::not_applicable(id, "no coordinate generators"));
        };
        if !self.tau.table.is_empty() {
            return Ok(Check::not_applicable(id, "translation action on the invariant algebra is nontrivial"));
        }
        let mut parts = Vec::new();
        for l in 0..4 {
            for m in 0..4 {
                for n in (m + 1)..4 {
                    let x = |i: usize| Element::generator(xs[i]);
                    let inner = self.family.bracket(&x(m), &x(n))?;
                    let outer = self.family.bracket(&x(l), &inner)?;
                    parts.push((format!("({l},{m},{n})"), Check::zero("", &self.family.spec, &outer)));
                }
            }
        }
        Ok(combine(id, parts))
    }

    /// At κ = 1, -1, 0 the listed span closes under commutators; at κ = 0
    /// the listed subset commutes.
    pub fn check_contraction_family(&self) -> Result<Vec<Check>> {
        let ids = ["contraction-closure", "contraction-abelian"];
        let Some(c) = &self.contraction else {
            return Ok(ids.iter().map(|id| Check::not_applicable(*id, "no contraction listed")).collect());
        };
        let span: BTreeSet<GenId> = c.span.iter().copied().collect();
        let mut closure = Vec::new();
        for value in [1, -1, 0] {
            let s = self.family.spec.at_kappa(Scalar::from_int(value))?;
            for &a in &c.span {
                for &b in &c.span {
                    let comm = s.commutator(&Element::generator(a), &Element::generator(b));
                    let outside: Element = comm
                        .terms()
                        .filter(|(w, _)| !(w.len() == 1 && span.contains(&w[0])))
                        .map(|(w, s)| (w.clone(), s.clone()))
                        .collect();
                    let label = format!("kappa={value} [{}, {}]", s.name(a), s.name(b));
                    closure.push((label, Check::zero("", &s, &outside)));
                }
            }
        }
        let s0 = &self.family.spec0;
        let mut abelian = Vec::new();
        for &a in &c.abelian_at_zero {
            for &b in &c.abelian_at_zero {
                let comm = s0.commutator(&Element::generator(a), &Element::generator(b));
                abelian.push((format!("[{}, {}]", s0.name(a), s0.name(b)), Check::zero("", s0, &comm)));
            }
        }
        Ok(vec![combine(ids[0], closure), combine(ids[1], abelian)])
    }

    /// The Poincaré action: automorphism property on random elements, the
    /// group law, plane-wave transformation laws, and covariance of the
    /// first-order term on the coordinates.
    pub fn check_poincare(&self, samples: usize, seed: u64) -> Result<Vec<Check>> {
        let ids = [
            "poincare-relations",
            "poincare-involution",
            "poincare-group-law",
            "poincare-plane-waves",
            "poincare-cocycle-covariance",
        ];
        let Some(action) = &self.lorentz else {
            return Ok(ids.iter().map(|id| Check::not_applicable(*id, "no Lorentz action supplied")).collect());
        };
        let spec = &self.family.spec;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elements: Vec<PoincareElement> = (0..samples).map(|_| PoincareElement::random(&mut rng)).collect();
        let gens: Vec<GenId> = (0..spec.num_generators() as GenId).collect();

        let mut rel = Vec::new();
        let mut inv = Vec::new();
        for (i, p) in elements.iter().enumerate() {
            for r in spec.rules() {
                let (a, b) = (action.image(p, r.left), action.image(p, r.right));
                let mut res = spec.commutator(&a, &b);
                res -= &action.apply(spec, p, &r.rhs);
                rel.push((format!("#{i} [{}, {}]", spec.name(r.left), spec.name(r.right)), Check::zero("", spec, &res)));
            }
            for &g in &gens {
                let lhs = action.apply(spec, p, spec.star_image(g));
                let rhs = spec.involution(&action.image(p, g));
                inv.push((format!("#{i} {}", spec.name(g)), Check::zero("", spec, &(&lhs - &rhs))));
            }
        }

        let mut law = Vec::new();
        let mut waves = Vec::new();
        let k = Momentum::symbolic("k");
        let l = Momentum::symbolic("l");
        for (i, pair) in elements.windows(2).enumerate() {
            let (p, q) = (&pair[0], &pair[1]);
            let pq = p.compose(q);
            for &g in &gens {
                let lhs = action.apply(spec, p, &action.image(q, g));
                let rhs = action.image(&pq, g);
                law.push((format!("#{i} {}", spec.name(g)), Check::zero("", spec, &(&lhs - &rhs))));
            }
            let (u, v) = (PhasedWave::plain(k.clone()), PhasedWave::plain(l.clone()));
            let composed = u.transform(q).transform(p) == u.transform(&pq);
            let mult = u.mul(&v).transform(p) == u.transform(p).mul(&v.transform(p));
            let star = u.star().transform(p) == u.transform(p).star();
            for (what, ok) in [("composition", composed), ("product", mult), ("involution", star)] {
                let c = if ok { Check::pass("") } else { Check::fail("", format!("{what} law broken"), 1) };
                waves.push((format!("#{i} {what}"), c));
            }
        }

        let covariance = match self.translations {
            Some(xs) if symmetric::is_lie_type(spec) => {
                let mut parts = Vec::new();
                let spec0 = &self.family.spec0;
                for (name, lm) in LorentzMatrix::samples() {
                    let inverse = lm.inverse();
                    for mu in 0..4 {
                        for nu in 0..4 {
                            let x = |i: usize| Element::generator(xs[i]);
                            let c = self.family.extract_c_with(&x(mu), &x(nu), Identification::Symmetric)?;
                            let lhs = action.apply_lorentz(spec0, &lm, &c);
                            let mut rhs = Element::zero();
                            for a in 0..4 {
                                for b in 0..4 {
                                    let w = Scalar::from_rational(inverse.entry(mu, a) * inverse.entry(nu, b));
                                    if !w.is_zero() {
                                        let cab = self.family.extract_c_with(&x(a), &x(b), Identification::Symmetric)?;
                                        rhs.add_scaled(&cab, &w);
                                    }
                                }
                            }
                            parts.push((format!("{name} ({mu},{nu})"), Check::zero("", spec0, &(&lhs - &rhs))));
                        }
                    }
                }
                combine(ids[4], parts)
            }
            Some(_) => Check::not_applicable(ids[4], "needs the symmetric identification"),
            None => Check::not_applicable(ids[4], "no coordinate generators"),
        };

        Ok(vec![
            combine(ids[0], rel),
            combine(ids[1], inv),
            combine(ids[2], law),
            combine(ids[3], waves),
            covariance,
        ])
    }

    pub fn require_generator(&self, name: &str) -> Result<GenId> {
        self.family
            .spec
            .lookup(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }
}

/// The coefficient of the lowest power of κ present in `e`.
pub fn lowest_kappa_part(e: &Element) -> Element {
    (0..)
        .map(|n| e.kappa_coefficient(n))
        .take(16)
        .find(|p| !p.is_zero())
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        for n in BUILTIN_NAMES {
            assert_eq!(builtin(n).unwrap().name, n);
        }
        assert!(builtin("nope").is_none());
    }
}
