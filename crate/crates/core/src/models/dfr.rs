//! Commuting tensor `Q^{μν}` with `[x^μ, x^ν] = iκ Q^{μν}`: the translations
//! act trivially on the invariant algebra.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeffring::{gaussian, levi_civita, metric, rational, Momentum, Scalar};
use crate::crossed::{CocycleData, TauAction};
use crate::deformation::Family;
use crate::ncalg::{AlgebraSpec, Element, GenId, Generator, RewriteRule};

use super::example::I_PAIRS;
use super::lorentz::{inv_symbol, shift_symbol, LorentzAction};
use super::Model;

fn q_id(mu: usize, nu: usize) -> GenId {
    I_PAIRS.iter().position(|&p| p == (mu, nu)).expect("mu < nu") as GenId
}

fn x_id(mu: usize) -> GenId {
    6 + mu as GenId
}

/// `Q^{μν}`, antisymmetric.
pub fn q_gen(mu: usize, nu: usize) -> Element {
    match mu.cmp(&nu) {
        std::cmp::Ordering::Less => Element::generator(q_id(mu, nu)),
        std::cmp::Ordering::Greater => -Element::generator(q_id(nu, mu)),
        std::cmp::Ordering::Equal => Element::zero(),
    }
}

pub fn build_dfr_algebra() -> AlgebraSpec {
    let mut gens: Vec<Generator> = I_PAIRS.iter().map(|(a, b)| Generator::hermitian(format!("Q{a}{b}"))).collect();
    gens.extend((0..4).map(|m| Generator::hermitian(format!("x{m}"))));
    let ik = &Scalar::i() * &Scalar::kappa();
    let mut rules = Vec::new();
    for a in 0..4 {
        for b in 0..a {
            rules.push(RewriteRule {
                left: x_id(a),
                right: x_id(b),
                rhs: q_gen(a, b).scale(&ik),
            });
        }
    }
    AlgebraSpec::validated(gens, rules, BTreeMap::new()).expect("DFR relations are consistent")
}

/// `g_{μμ'} g_{νν'} Q^{μν} Q^{μ'ν'}` and `ε_{αβγδ} Q^{αβ} Q^{γδ}`.
pub fn invariant_scalars(spec: &AlgebraSpec) -> (Element, Element) {
    let mut s = Element::zero();
    let mut p = Element::zero();
    for a in 0..4 {
        for b in 0..4 {
            let w = metric(a, a) * metric(b, b);
            s.add_scaled(&spec.multiply(&q_gen(a, b), &q_gen(a, b)), &Scalar::from_int(w));
            for c in 0..4 {
                for d in 0..4 {
                    let e = levi_civita([a, b, c, d]);
                    if e != 0 {
                        p.add_scaled(&spec.multiply(&q_gen(a, b), &q_gen(c, d)), &Scalar::from_int(e));
                    }
                }
            }
        }
    }
    (s, p)
}

/// `γ(k, l) = -(i/2) k_μ l_ν Q^{μν}`.
pub fn gamma() -> Element {
    let (k, l) = (Momentum::symbolic("k"), Momentum::symbolic("l"));
    let mut e = Element::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            e.add_scaled(&q_gen(mu, nu), &(&k.0[mu] * &l.0[nu]));
        }
    }
    e.scale(&gaussian(rational(0, 1), rational(-1, 2)))
}

pub fn lorentz_action() -> LorentzAction {
    let inv = |m, n| Scalar::var(inv_symbol(m, n));
    let mut table = BTreeMap::new();
    for mu in 0..4 {
        let mut x = Element::zero();
        for nu in 0..4 {
            let shifted = &Element::generator(x_id(nu)) - &Element::scalar(Scalar::var(shift_symbol(nu)));
            x.add_scaled(&shifted, &inv(mu, nu));
        }
        table.insert(x_id(mu), x);
    }
    for &(mu, nu) in &I_PAIRS {
        let mut e = Element::zero();
        for a in 0..4 {
            for b in 0..4 {
                e.add_scaled(&q_gen(a, b), &(&inv(mu, a) * &inv(nu, b)));
            }
        }
        table.insert(q_id(mu, nu), e);
    }
    LorentzAction { table }
}

pub fn build() -> Model {
    let spec = build_dfr_algebra();
    let (s, p) = invariant_scalars(&spec);
    let family = Family::new(spec).expect("DFR family");
    let qs: Vec<(String, Element)> = I_PAIRS
        .iter()
        .map(|&(a, b)| (format!("Q{a}{b}"), q_gen(a, b)))
        .collect();
    let mut central = qs.clone();
    central.push(("QQ".into(), s.clone()));
    central.push(("epsQQ".into(), p.clone()));
    let x = |m| Element::generator(x_id(m));
    Model {
        name: "dfr-limit".into(),
        invariant: (0..6).collect::<BTreeSet<_>>(),
        translations: Some(std::array::from_fn(x_id)),
        tau: TauAction::trivial(),
        lorentz: Some(lorentz_action()),
        data: CocycleData {
            gamma: Some(gamma()),
            ..Default::default()
        },
        central,
        casimirs: vec![("QQ".into(), s), ("epsQQ".into(), p)],
        center_candidates: qs.iter().map(|(_, e)| e.clone()).collect(),
        center_probes: (0..4).map(x).collect(),
        expected_brackets: I_PAIRS.iter().map(|&(a, b)| (x(a), x(b), -q_gen(a, b))).collect(),
        contraction: None,
        family,
    }
}
