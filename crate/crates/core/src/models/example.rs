//! The de Sitter-type example: coordinates `x^μ`, a vector `L^μ` and an
//! antisymmetric tensor `I^{μν}` closing on so(4,1) / so(3,2) / Poincaré
//! depending on the sign of κ.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeffring::{levi_civita, metric, rational, Momentum, Scalar};
use crate::crossed::{CocycleData, TauAction};
use crate::deformation::Family;
use crate::ncalg::{AlgebraSpec, Element, GenId, Generator, RewriteRule};

use super::lorentz::{inv_symbol, shift_symbol, LorentzAction};
use super::{Contraction, Model};

/// Index pairs of the independent `I^{μν}`, in generator order.
pub const I_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn i_id(mu: usize, nu: usize) -> GenId {
    I_PAIRS.iter().position(|&p| p == (mu, nu)).expect("mu < nu") as GenId
}

pub fn l_id(mu: usize) -> GenId {
    6 + mu as GenId
}

pub fn x_id(mu: usize) -> GenId {
    10 + mu as GenId
}

/// `I^{μν}` with `I^{νμ} = -I^{μν}` and `I^{μμ} = 0`.
pub fn i_gen(mu: usize, nu: usize) -> Element {
    match mu.cmp(&nu) {
        std::cmp::Ordering::Less => Element::generator(i_id(mu, nu)),
        std::cmp::Ordering::Greater => -Element::generator(i_id(nu, mu)),
        std::cmp::Ordering::Equal => Element::zero(),
    }
}

fn l_gen(mu: usize) -> Element {
    Element::generator(l_id(mu))
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn frac(n: i64, d: i64) -> Scalar {
    Scalar::from_rational(rational(n, d))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Gen {
    I(usize, usize),
    L(usize),
    X(usize),
}

fn gen_of(id: GenId) -> Gen {
    match id {
        0..=5 => {
            let (a, b) = I_PAIRS[id as usize];
            Gen::I(a, b)
        }
        6..=9 => Gen::L(id as usize - 6),
        _ => Gen::X(id as usize - 10),
    }
}

/// `i (g^{λν} V^μ - g^{λμ} V^ν)` for a vector generator `V`.
fn vector_rotation(lambda: usize, mu: usize, nu: usize, v: impl Fn(usize) -> Element) -> Element {
    let mut e = v(mu).scale(&int(metric(lambda, nu)));
    e -= &v(nu).scale(&int(metric(lambda, mu)));
    e.scale(&Scalar::i())
}

/// `[a, b]` for `a` above `b` in the generator order.
fn commutator(a: Gen, b: Gen) -> Element {
    let ik = &Scalar::i() * &Scalar::kappa();
    match (a, b) {
        (Gen::X(m), Gen::X(n)) | (Gen::X(m), Gen::L(n)) | (Gen::L(m), Gen::L(n)) => i_gen(m, n).scale(&ik),
        (Gen::X(l), Gen::I(m, n)) | (Gen::L(l), Gen::I(m, n)) => vector_rotation(l, m, n, l_gen),
        (Gen::I(l, r), Gen::I(m, n)) => {
            let g = |a, b| int(metric(a, b));
            let mut e = i_gen(m, r).scale(&g(l, n));
            e -= &i_gen(m, l).scale(&g(r, n));
            e += &i_gen(n, l).scale(&g(r, m));
            e -= &i_gen(n, r).scale(&g(l, m));
            e.scale(&Scalar::i())
        }
        _ => unreachable!("pair not in descending order"),
    }
}

fn names() -> Vec<Generator> {
    let mut out: Vec<Generator> = I_PAIRS.iter().map(|(a, b)| Generator::hermitian(format!("I{a}{b}"))).collect();
    out.extend((0..4).map(|m| Generator::hermitian(format!("L{m}"))));
    out.extend((0..4).map(|m| Generator::hermitian(format!("x{m}"))));
    out
}

pub fn build_example_algebra() -> AlgebraSpec {
    let mut rules = Vec::new();
    for a in 0..14u16 {
        for b in 0..a {
            let rhs = commutator(gen_of(a), gen_of(b));
            if !rhs.is_zero() {
                rules.push(RewriteRule { left: a, right: b, rhs });
            }
        }
    }
    AlgebraSpec::validated(names(), rules, BTreeMap::new()).expect("example relations are consistent")
}

/// `k^μ L^ν - k^ν L^μ`.
fn wedge_l(k: &Momentum, mu: usize, nu: usize) -> Element {
    &l_gen(nu).scale(&k.upper(mu)) - &l_gen(mu).scale(&k.upper(nu))
}

/// `k_μ L^μ`.
fn contract_l(k: &Momentum) -> Element {
    let mut e = Element::zero();
    for mu in 0..4 {
        e.add_scaled(&l_gen(mu), &k.0[mu]);
    }
    e
}

pub fn tau_action() -> TauAction {
    let k = Momentum::symbolic("k");
    let table = I_PAIRS
        .iter()
        .map(|&(m, n)| (i_id(m, n), &i_gen(m, n) + &wedge_l(&k, m, n)))
        .collect();
    TauAction { table }
}

pub fn lorentz_action() -> LorentzAction {
    let inv = |m, n| Scalar::var(inv_symbol(m, n));
    let mut table = BTreeMap::new();
    for mu in 0..4 {
        let mut l = Element::zero();
        let mut x = Element::zero();
        for nu in 0..4 {
            l.add_scaled(&l_gen(nu), &inv(mu, nu));
            let shifted = &Element::generator(x_id(nu)) - &Element::scalar(Scalar::var(shift_symbol(nu)));
            x.add_scaled(&shifted, &inv(mu, nu));
        }
        table.insert(l_id(mu), l);
        table.insert(x_id(mu), x);
    }
    for &(mu, nu) in &I_PAIRS {
        let mut e = Element::zero();
        for a in 0..4 {
            for b in 0..4 {
                e.add_scaled(&i_gen(a, b), &(&inv(mu, a) * &inv(nu, b)));
            }
        }
        table.insert(i_id(mu, nu), e);
    }
    LorentzAction { table }
}

/// γ(k, l) over the symbols `k*`, `l*`.
pub fn gamma() -> Element {
    let (k, l) = (Momentum::symbolic("k"), Momentum::symbolic("l"));
    let (kl, kk, ll) = (k.dot(&l), k.dot(&k), l.dot(&l));
    let mut e = Element::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            e.add_scaled(&i_gen(mu, nu), &(&k.0[mu] * &l.0[nu]));
        }
    }
    let a = &(&kl * &frac(2, 3)) + &(&ll * &frac(1, 3));
    let b = &(&kl * &frac(1, 3)) + &(&kk * &frac(2, 3));
    e -= &contract_l(&k).scale(&a);
    e += &contract_l(&l).scale(&b);
    e.scale(&gaussian_half_neg_i())
}

fn gaussian_half_neg_i() -> Scalar {
    crate::coeffring::gaussian(rational(0, 1), rational(-1, 2))
}

/// `λ(L^μ, k) = -k_ν (I^{μν} + (k^μ L^ν - k^ν L^μ)/2)`.
pub fn lambda_table() -> BTreeMap<GenId, Element> {
    let k = Momentum::symbolic("k");
    (0..4)
        .map(|mu| {
            let mut e = Element::zero();
            for nu in 0..4 {
                let inner = &i_gen(mu, nu) + &wedge_l(&k, mu, nu).scale(&frac(1, 2));
                e.add_scaled(&inner, &-&k.0[nu]);
            }
            (l_id(mu), e)
        })
        .collect()
}

/// `μ(L^μ, k) = -k_ν (I^{μν}/2 + (k^μ L^ν - k^ν L^μ)/3)`: the restriction
/// `c(L^μ, u(k)) = μ(L^μ,k) u(k)`, fixed by the λ data and reality.
pub fn mixed_table() -> BTreeMap<GenId, Element> {
    let k = Momentum::symbolic("k");
    (0..4)
        .map(|mu| {
            let mut e = Element::zero();
            for nu in 0..4 {
                let inner = &i_gen(mu, nu).scale(&frac(1, 2)) + &wedge_l(&k, mu, nu).scale(&frac(1, 3));
                e.add_scaled(&inner, &-&k.0[nu]);
            }
            (l_id(mu), e)
        })
        .collect()
}

/// `c^I(L^μ, L^ν) = (i/2) I^{μν}`.
pub fn cinv_table() -> BTreeMap<(GenId, GenId), Element> {
    let half_i = crate::coeffring::gaussian(rational(0, 1), rational(1, 2));
    let mut out = BTreeMap::new();
    for mu in 0..4 {
        for nu in 0..4 {
            out.insert((l_id(mu), l_id(nu)), i_gen(mu, nu).scale(&half_i));
        }
    }
    out
}

pub fn cocycle_data() -> CocycleData {
    CocycleData {
        gamma: Some(gamma()),
        lambda: lambda_table(),
        cinv: cinv_table(),
        mixed: mixed_table(),
    }
}

/// `κ g_{λμ} g_{ρν} I^{λρ} I^{μν} + 2 g_{αβ} L^α L^β` and
/// `g^{ρρ'} ε_{ρλμν} L^λ I^{μν} ε_{ρ'λ'μ'ν'} L^{λ'} I^{μ'ν'}`.
pub fn casimirs(spec: &AlgebraSpec) -> (Element, Element) {
    let mut c2 = Element::zero();
    for a in 0..4 {
        for b in 0..4 {
            let g = metric(a, a) * metric(b, b);
            let ii = spec.multiply(&i_gen(a, b), &i_gen(a, b));
            c2.add_scaled(&ii, &(&Scalar::kappa() * &int(g)));
        }
        let ll = spec.multiply(&l_gen(a), &l_gen(a));
        c2.add_scaled(&ll, &int(2 * metric(a, a)));
    }
    // W_ρ = ε_{ρλμν} L^λ I^{μν}
    let w: Vec<Element> = (0..4)
        .map(|rho| {
            let mut e = Element::zero();
            for l in 0..4 {
                for m in 0..4 {
                    for n in 0..4 {
                        let eps = levi_civita([rho, l, m, n]);
                        if eps != 0 {
                            e.add_scaled(&spec.multiply(&l_gen(l), &i_gen(m, n)), &int(eps));
                        }
                    }
                }
            }
            e
        })
        .collect();
    let mut c4 = Element::zero();
    for rho in 0..4 {
        c4.add_scaled(&spec.multiply(&w[rho], &w[rho]), &int(metric(rho, rho)));
    }
    (c2, c4)
}

/// `ε_{αβγδ} I^{αβ} I^{γδ}`.
pub fn tensor_pseudoscalar(spec: &AlgebraSpec) -> Element {
    let mut p = Element::zero();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let e = levi_civita([a, b, c, d]);
                    if e != 0 {
                        p.add_scaled(&spec.multiply(&i_gen(a, b), &i_gen(c, d)), &int(e));
                    }
                }
            }
        }
    }
    p
}

/// The quartic Casimir of the deformed algebra. The contracted square of
/// `ε L I` alone is only central at κ = 0; the κ-dependent square of the
/// pseudoscalar `ε I I` restores centrality for all κ.
pub fn quartic_casimir(spec: &AlgebraSpec) -> Element {
    let (_, w2) = casimirs(spec);
    let p = tensor_pseudoscalar(spec);
    let correction = spec.multiply(&p, &p).scale(&(&Scalar::kappa() * &frac(1, 16)));
    &w2 + &correction
}

pub fn build() -> Model {
    let spec = build_example_algebra();
    let (c2, _) = casimirs(&spec);
    let c4 = quartic_casimir(&spec);
    let family = Family::new(spec).expect("example family");
    let xs: [GenId; 4] = std::array::from_fn(x_id);
    let spec = &family.spec;
    let center: Vec<(String, Element)> = (0..4)
        .map(|mu| (format!("x{mu}-L{mu}"), &Element::generator(x_id(mu)) - &l_gen(mu)))
        .collect();
    let mut brackets = Vec::new();
    for &(mu, nu) in &I_PAIRS {
        brackets.push((
            Element::generator(x_id(mu)),
            Element::generator(x_id(nu)),
            -i_gen(mu, nu),
        ));
    }
    let invariant: BTreeSet<GenId> = (0..10).collect();
    let probes = (0..spec.num_generators() as GenId).map(Element::generator).collect();
    Model {
        name: "example-so41".into(),
        invariant,
        translations: Some(xs),
        tau: tau_action(),
        lorentz: Some(lorentz_action()),
        data: cocycle_data(),
        center_candidates: center.iter().map(|(_, e)| e.clone()).collect(),
        center_probes: probes,
        central: center,
        casimirs: vec![("c2".into(), c2), ("c4".into(), c4)],
        expected_brackets: brackets,
        contraction: Some(Contraction {
            span: (0..10).collect(),
            abelian_at_zero: (6..10).collect(),
        }),
        family,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::is_central;

    fn spec() -> AlgebraSpec {
        build_example_algebra()
    }

    fn ik(s: i64) -> Scalar {
        &(&Scalar::i() * &Scalar::kappa()) * &int(s)
    }

    #[test]
    fn sample_commutators() {
        let s = spec();
        let x = |m| Element::generator(x_id(m));
        assert_eq!(s.commutator(&x(0), &l_gen(1)), i_gen(0, 1).scale(&ik(1)));
        assert!(s.commutator(&i_gen(0, 1), &i_gen(2, 3)).is_zero());
        // [I01, I12] = i(g^{11} I^{20}) = -i I02
        assert_eq!(s.commutator(&i_gen(0, 1), &i_gen(1, 2)), i_gen(0, 2).scale(&-Scalar::i()));
        // L0 I01 = I01 L0 + i(g^{01} L^0 - g^{00} L^1) = I01 L0 + i L1
        let want = &Element::word(&[i_id(0, 1), l_id(0)]) + &l_gen(1).scale(&Scalar::i());
        assert_eq!(s.multiply(&l_gen(0), &i_gen(0, 1)), want);
        // x1 x0 = x0 x1 - iκ I01
        let want = &Element::word(&[x_id(0), x_id(1)]) + &i_gen(0, 1).scale(&ik(-1));
        assert_eq!(s.multiply(&x(1), &x(0)), want);
    }

    #[test]
    fn center_and_casimirs() {
        let s = spec();
        for mu in 0..4 {
            let z = &Element::generator(x_id(mu)) - &l_gen(mu);
            assert!(is_central(&z, &s).is_central());
        }
        let (c2, w2) = casimirs(&s);
        assert!(is_central(&c2, &s).is_central());
        assert!(is_central(&quartic_casimir(&s), &s).is_central());
        // the bare contraction fails at first order in κ but not in the limit
        assert!(!is_central(&w2, &s).is_central());
        let s0 = s.at_kappa(Scalar::zero()).unwrap();
        assert!(is_central(&w2.at_kappa_zero(), &s0).is_central());
        assert_eq!(quartic_casimir(&s).at_kappa_zero(), w2.at_kappa_zero());
    }

    #[test]
    fn quadratic_casimir_limit() {
        let s = spec();
        let (c2, _) = casimirs(&s);
        let mut want = Element::zero();
        for a in 0..4 {
            want.add_scaled(&Element::word(&[l_id(a), l_id(a)]), &int(2 * metric(a, a)));
        }
        assert_eq!(c2.at_kappa_zero(), want);
    }

    #[test]
    fn lorentz_length_is_central_only_undeformed() {
        let s = spec();
        let s0 = s.at_kappa(Scalar::zero()).unwrap();
        let mut ll = Element::zero();
        for a in 0..4 {
            ll.add_scaled(&Element::word(&[l_id(a), l_id(a)]), &int(metric(a, a)));
        }
        assert!(is_central(&ll, &s0).is_central());
        assert!(!is_central(&ll, &s).is_central());
    }

    #[test]
    fn tau_matches_first_order_translation() {
        let k = Momentum::symbolic("k");
        let t = tau_action();
        let s0 = spec().at_kappa(Scalar::zero()).unwrap();
        let img = t.apply(&s0, &k, &i_gen(0, 1));
        // k^0 L^1 - k^1 L^0 with k^0 = -k_0
        let want = &(&i_gen(0, 1) - &l_gen(1).scale(&Scalar::sym("k0"))) - &l_gen(0).scale(&Scalar::sym("k1"));
        assert_eq!(img, want);
    }

    #[test]
    fn derivation_product_rule_depends_on_identification() {
        use crate::deformation::Identification;
        let m = build();
        let fam = &m.family;
        let (z, w) = (&m.center_candidates[0], &m.center_candidates[1]);
        let f = i_gen(0, 2);
        let zw = fam.spec0.multiply(z, w);
        let defect = |ident| {
            let mut r = fam.bracket_with(&zw, &f, ident).unwrap();
            r -= &fam.spec0.multiply(z, &fam.bracket_with(w, &f, ident).unwrap());
            r -= &fam.spec0.multiply(w, &fam.bracket_with(z, &f, ident).unwrap());
            r
        };
        assert!(defect(Identification::Symmetric).is_zero());
        // ordered: c(x0 - L0, x1 - L1) = -c(x0, L1) = -i I01, not central
        let czw = fam.extract_c(z, w).unwrap();
        assert_eq!(czw, i_gen(0, 1).scale(&-Scalar::i()));
        let ordered = defect(Identification::Ordered);
        assert!(!ordered.is_zero());
        assert_eq!(ordered, fam.spec0.commutator(&f, &czw).scale(&Scalar::i()));
        let checks = fam.check_center_structure(&m.center_candidates, &m.center_probes).unwrap();
        assert!(checks.iter().all(|c| c.passed()), "{checks:?}");
    }
}
