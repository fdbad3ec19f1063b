//! The double complex of cochains on the invariant algebra with values in
//! group cochains of the dual translations, evaluated pointwise.

use std::rc::Rc;

use crate::check::{combine, Check};
use crate::coeffring::{Momentum, MOMENTUM_PREFIXES};
use crate::crossed::Crossed;
use crate::error::{Error, Result};
use crate::ncalg::{AlgebraSpec, Element, GenId};

type Eval<'a> = Rc<dyn Fn(&[Element], &[Momentum]) -> Result<Element> + 'a>;

/// A cochain of bidegree `(r, s)`: `r` algebra arguments, `s` momenta.
#[derive(Clone)]
pub struct Cochain<'a> {
    pub name: String,
    pub r: usize,
    pub s: usize,
    eval: Eval<'a>,
}

impl<'a> Cochain<'a> {
    pub fn new(
        name: impl Into<String>,
        r: usize,
        s: usize,
        f: impl Fn(&[Element], &[Momentum]) -> Result<Element> + 'a,
    ) -> Self {
        Cochain {
            name: name.into(),
            r,
            s,
            eval: Rc::new(f),
        }
    }

    pub fn zero(r: usize, s: usize) -> Self {
        Cochain::new("0", r, s, |_, _| Ok(Element::zero()))
    }

    pub fn eval(&self, fs: &[Element], ks: &[Momentum]) -> Result<Element> {
        if fs.len() != self.r || ks.len() != self.s {
            return Err(Error::InvalidSpec(format!(
                "{} has bidegree ({}, {}), called with ({}, {})",
                self.name,
                self.r,
                self.s,
                fs.len(),
                ks.len()
            )));
        }
        (self.eval)(fs, ks)
    }

    pub fn add(&self, other: &Cochain<'a>) -> Cochain<'a> {
        assert_eq!((self.r, self.s), (other.r, other.s), "bidegrees must agree");
        let (a, b) = (self.clone(), other.clone());
        Cochain::new(format!("{} + {}", self.name, other.name), self.r, self.s, move |fs, ks| {
            Ok(&a.eval(fs, ks)? + &b.eval(fs, ks)?)
        })
    }
}

/// `(δω)(f_0..f_r) = f_0 ω(f_1..f_r) + Σ (-1)^{i+1} ω(.., f_i f_{i+1}, ..)
/// + (-1)^{r+1} ω(f_0..f_{r-1}) f_r`.
pub fn hochschild_diff<'a>(w: &Cochain<'a>, spec0: &'a AlgebraSpec) -> Cochain<'a> {
    let w = w.clone();
    let r = w.r;
    Cochain::new(format!("dH({})", w.name), r + 1, w.s, move |fs, ks| {
        let mut out = spec0.multiply(&fs[0], &w.eval(&fs[1..], ks)?);
        for i in 0..r {
            let mut args: Vec<Element> = fs[..i].to_vec();
            args.push(spec0.multiply(&fs[i], &fs[i + 1]));
            args.extend_from_slice(&fs[i + 2..]);
            let term = w.eval(&args, ks)?;
            if i % 2 == 0 {
                out -= &term;
            } else {
                out += &term;
            }
        }
        let last = spec0.multiply(&w.eval(&fs[..r], ks)?, &fs[r]);
        if r.is_multiple_of(2) {
            out -= &last;
        } else {
            out += &last;
        }
        Ok(out)
    })
}

/// `(-1)^r` times the group differential for the action
/// `τ_k(ω)(f..) = τ_k(ω(τ_{-k} f..))`.
pub fn group_diff<'a>(w: &Cochain<'a>, x: Crossed<'a>) -> Cochain<'a> {
    let w = w.clone();
    let (r, s) = (w.r, w.s);
    Cochain::new(format!("dG({})", w.name), r, s + 1, move |fs, ks| {
        let k1 = &ks[0];
        let moved: Vec<Element> = fs.iter().map(|f| x.tau(&-k1, f)).collect();
        let mut out = x.tau(k1, &w.eval(&moved, &ks[1..])?);
        for i in 1..=s {
            let mut args: Vec<Momentum> = ks[..i - 1].to_vec();
            args.push(&ks[i - 1] + &ks[i]);
            args.extend_from_slice(&ks[i + 1..]);
            let term = w.eval(fs, &args)?;
            if i % 2 == 1 {
                out -= &term;
            } else {
                out += &term;
            }
        }
        let last = w.eval(fs, &ks[..s])?;
        if (s + 1) % 2 == 1 {
            out -= &last;
        } else {
            out += &last;
        }
        Ok(if r % 2 == 1 { -out } else { out })
    })
}

/// The three pieces of the example's total cochain as evaluators.
pub fn cinv_cochain<'a>(x: Crossed<'a>) -> Cochain<'a> {
    Cochain::new("cinv", 2, 0, move |fs, _| x.cinv(&fs[0], &fs[1]))
}

pub fn lambda_cochain<'a>(x: Crossed<'a>) -> Cochain<'a> {
    Cochain::new("lambda", 1, 1, move |fs, ks| x.lambda(&fs[0], &ks[0]))
}

pub fn gamma_cochain<'a>(x: Crossed<'a>) -> Cochain<'a> {
    Cochain::new("gamma", 0, 2, move |_, ks| x.gamma(&ks[0], &ks[1]))
}

/// Symbolic momenta `k, l, m, n` for the momentum slots.
pub fn symbolic_momenta(s: usize) -> Vec<Momentum> {
    assert!(s <= MOMENTUM_PREFIXES.len(), "at most four symbolic momenta");
    MOMENTUM_PREFIXES[..s].iter().map(|p| Momentum::symbolic(p)).collect()
}

/// All `r`-tuples of the given generators, thinned to at most `cap` by a
/// fixed stride.
pub fn generator_tuples(gens: &[GenId], r: usize, cap: usize) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|t| {
                gens.iter().map(move |&g| {
                    let mut t = t.clone();
                    t.push(Element::generator(g));
                    t
                })
            })
            .collect();
    }
    if out.len() > cap {
        let stride = out.len().div_ceil(cap);
        out = out.into_iter().step_by(stride).collect();
    }
    out
}

fn label(spec: &AlgebraSpec, fs: &[Element]) -> String {
    let names: Vec<_> = fs.iter().map(|f| spec.render(f)).collect();
    format!("({})", names.join(", "))
}

/// Evaluates `w` on every tuple with symbolic momenta and requires zero.
pub fn vanishes(id: &str, w: &Cochain<'_>, gens: &[GenId], spec: &AlgebraSpec, cap: usize) -> Result<Check> {
    let ks = symbolic_momenta(w.s);
    let mut parts = Vec::new();
    for fs in generator_tuples(gens, w.r, cap) {
        let v = w.eval(&fs, &ks)?;
        parts.push((label(spec, &fs), Check::zero("", spec, &v)));
    }
    Ok(combine(id, parts))
}

/// Tuple cap for the squared differentials, which raise arity by two.
const AXIOM_TUPLES: usize = 24;

/// δ^(1,0)² = 0, δ^(0,1)² = 0 and their anticommutator vanishes, pointwise on
/// each sample; differentials preserve normalization; samples are additive
/// in their first algebra slot.
pub fn check_bicomplex_axioms(x: Crossed<'_>, samples: &[Cochain<'_>], gens: &[GenId]) -> Result<Vec<Check>> {
    let spec = &x.family.spec;
    let spec0 = x.spec0();
    let mut hh = Vec::new();
    let mut gg = Vec::new();
    let mut anti = Vec::new();
    let mut norm = Vec::new();
    let mut lin = Vec::new();
    for w in samples {
        let dh = hochschild_diff(w, spec0);
        let dg = group_diff(w, x);
        hh.push((w.name.clone(), vanishes("", &hochschild_diff(&dh, spec0), gens, spec, AXIOM_TUPLES)?));
        gg.push((w.name.clone(), vanishes("", &group_diff(&dg, x), gens, spec, AXIOM_TUPLES)?));
        let a = hochschild_diff(&dg, spec0).add(&group_diff(&dh, x));
        anti.push((w.name.clone(), vanishes("", &a, gens, spec, AXIOM_TUPLES)?));

        for d in [&dh, &dg] {
            let ks = symbolic_momenta(d.s);
            for fs in generator_tuples(gens, d.r, 4) {
                for i in 0..d.r {
                    let mut args = fs.clone();
                    args[i] = Element::one();
                    let v = d.eval(&args, &ks)?;
                    norm.push((format!("{} unit in slot {i}", d.name), Check::zero("", spec, &v)));
                }
                for j in 0..d.s {
                    let mut moms = ks.clone();
                    moms[j] = Momentum::zero();
                    let v = d.eval(&fs, &moms)?;
                    norm.push((format!("{} zero momentum in slot {j}", d.name), Check::zero("", spec, &v)));
                }
            }
        }

        if w.r > 0 && gens.len() >= 2 {
            let ks = symbolic_momenta(w.s);
            for fs in generator_tuples(gens, w.r, 4) {
                let (a, b) = (Element::generator(gens[0]), Element::generator(gens[1]));
                let eval_first = |f: Element| -> Result<Element> {
                    let mut args = fs.clone();
                    args[0] = f;
                    w.eval(&args, &ks)
                };
                let lhs = eval_first(&a + &b.scale_int(2))?;
                let rhs = &eval_first(a.clone())? + &eval_first(b.clone())?.scale_int(2);
                lin.push((format!("{} {}", w.name, label(spec, &fs)), Check::zero("", spec, &(&lhs - &rhs))));
            }
        }
    }
    Ok(vec![
        combine("bicomplex-hochschild-square", hh),
        combine("bicomplex-group-square", gg),
        combine("bicomplex-anticommute", anti),
        combine("bicomplex-normalized", norm),
        combine("cochain-multilinear", lin),
    ])
}

/// The four bidegree components of δ(c^I + λ + γ): (3,0) the cocycle
/// identity of c^I, (2,1) the λ/c^I relation, (1,2) the γ/λ relation,
/// (0,3) the group cocycle identity.
pub fn check_total_cocycle(x: Crossed<'_>) -> Result<Vec<Check>> {
    let ids = ["total-cocycle-(3,0)", "total-cocycle-(2,1)", "total-cocycle-(1,2)", "total-cocycle-(0,3)"];
    let spec = &x.family.spec;
    let spec0 = x.spec0();
    let gens: Vec<GenId> = if x.data.lambda.is_empty() {
        x.invariant.iter().copied().collect()
    } else {
        x.data.lambda.keys().copied().collect()
    };
    let c = cinv_cochain(x);
    let lam = lambda_cochain(x);
    let gam = gamma_cochain(x);
    let have_lambda = !x.data.lambda.is_empty();
    let have_gamma = x.data.gamma.is_some();

    let c30 = vanishes(ids[0], &hochschild_diff(&c, spec0), &gens, spec, usize::MAX)?;
    let c21 = if have_lambda {
        let w = group_diff(&c, x).add(&hochschild_diff(&lam, spec0));
        vanishes(ids[1], &w, &gens, spec, usize::MAX)?
    } else {
        Check::not_applicable(ids[1], "no lambda supplied")
    };
    let c12 = if have_lambda && have_gamma {
        let w = group_diff(&lam, x).add(&hochschild_diff(&gam, spec0));
        vanishes(ids[2], &w, &gens, spec, usize::MAX)?
    } else {
        Check::not_applicable(ids[2], "needs lambda and gamma")
    };
    let c03 = if have_gamma {
        vanishes(ids[3], &group_diff(&gam, x), &gens, spec, usize::MAX)?
    } else {
        Check::not_applicable(ids[3], "no gamma supplied")
    };
    Ok(vec![c30, c21, c12, c03])
}

/// The default sample set: the data cochains that are present.
pub fn data_cochains<'a>(x: Crossed<'a>) -> Vec<Cochain<'a>> {
    let mut out = vec![cinv_cochain(x)];
    if !x.data.lambda.is_empty() {
        out.push(lambda_cochain(x));
    }
    if x.data.gamma.is_some() {
        out.push(gamma_cochain(x));
    }
    out
}

#[cfg(test)]
mod tests;
