use std::sync::OnceLock;

use super::*;
use crate::check::Status;
use crate::coeffring::Scalar;
use crate::models::{dfr, example, Model};

fn so41() -> &'static Model {
    static M: OnceLock<Model> = OnceLock::new();
    M.get_or_init(example::build)
}

fn l_gens() -> Vec<GenId> {
    (6..10).collect()
}

#[test]
fn components_match_direct_residuals() {
    let x = so41().crossed();
    let spec0 = x.spec0();
    let ks = symbolic_momenta(3);
    let (c, lam, gam) = (cinv_cochain(x), lambda_cochain(x), gamma_cochain(x));

    let d03 = group_diff(&gam, x).eval(&[], &ks).unwrap();
    assert_eq!(d03, x.group_cocycle_residual(&ks[0], &ks[1], &ks[2]).unwrap());

    let f = Element::generator(6);
    let g = Element::generator(7);
    let d12 = group_diff(&lam, x).add(&hochschild_diff(&gam, spec0));
    assert_eq!(
        d12.eval(std::slice::from_ref(&f), &ks[..2]).unwrap(),
        x.gamma_lambda_residual(&f, &ks[0], &ks[1]).unwrap()
    );

    let d21 = group_diff(&c, x).add(&hochschild_diff(&lam, spec0));
    assert_eq!(
        d21.eval(&[g.clone(), f.clone()], &ks[..1]).unwrap(),
        -x.lambda_cinv_residual(&g, &f, &ks[0]).unwrap()
    );
}

#[test]
fn total_cocycle_vanishes() {
    let checks = check_total_cocycle(so41().crossed()).unwrap();
    assert_eq!(checks.len(), 4);
    for c in &checks {
        assert_eq!(c.status, Status::Pass, "{c:?}");
    }
}

#[test]
fn axioms_on_example_data() {
    let x = so41().crossed();
    let checks = check_bicomplex_axioms(x, &data_cochains(x), &l_gens()).unwrap();
    for c in &checks {
        assert_eq!(c.status, Status::Pass, "{c:?}");
    }
}

#[test]
fn inner_derivation_is_a_cocycle() {
    let x = so41().crossed();
    let spec0 = x.spec0();
    let a = Element::generator(0);
    let inner = Cochain::new("inner", 1, 0, move |fs, _| Ok(spec0.commutator(&fs[0], &a)));
    let check = vanishes("inner", &hochschild_diff(&inner, spec0), &(0..10).collect::<Vec<_>>(), spec0, 200).unwrap();
    assert_eq!(check.status, Status::Pass);
    assert!(vanishes("zero", &Cochain::zero(2, 1), &[0, 1], spec0, 10).unwrap().passed());
}

#[test]
fn hochschild_square_on_sandwich() {
    let x = so41().crossed();
    let spec0 = x.spec0();
    let a = Element::generator(7);
    let w = Cochain::new("sandwich", 2, 0, move |fs, _| Ok(spec0.product(&[&fs[0], &a, &fs[1]])));
    let dd = hochschild_diff(&hochschild_diff(&w, spec0), spec0);
    assert!(vanishes("dd", &dd, &[0, 6, 9], spec0, 100).unwrap().passed());
    // f·g·a is not a cocycle: its differential is f g [h, a]
    let a = Element::generator(7);
    let v = Cochain::new("right", 2, 0, move |fs, _| Ok(spec0.product(&[&fs[0], &fs[1], &a])));
    assert!(!vanishes("d", &hochschild_diff(&v, spec0), &[0, 6, 9], spec0, 100).unwrap().passed());
}

#[test]
fn coboundaries_are_cocycles() {
    let x = so41().crossed();
    let spec0 = x.spec0();
    // β^(1,0)(f; k) = k_0 f L1 and β^(0,1)(;k) = k_1 I01 are arbitrary 1-cochains
    let b10 = Cochain::new("b10", 1, 0, move |fs, _| Ok(spec0.multiply(&fs[0], &Element::generator(7))));
    let b01 = Cochain::new("b01", 0, 1, |_, ks| Ok(Element::generator(0).scale(&ks[0].0[1])));
    // δβ has components (2,0), (1,1), (0,2)
    let c20 = hochschild_diff(&b10, spec0);
    let c11 = group_diff(&b10, x).add(&hochschild_diff(&b01, spec0));
    let c02 = group_diff(&b01, x);
    let gens = [6, 7, 0];
    let comps = [
        hochschild_diff(&c20, spec0),
        group_diff(&c20, x).add(&hochschild_diff(&c11, spec0)),
        group_diff(&c11, x).add(&hochschild_diff(&c02, spec0)),
        group_diff(&c02, x),
    ];
    for c in &comps {
        assert!(vanishes("ddb", c, &gens, spec0, 30).unwrap().passed(), "{}", c.name);
    }
}

#[test]
fn trivial_action_telescopes() {
    let m = dfr::build();
    let x = m.crossed();
    let w = Cochain::new("const", 0, 2, |_, _| Ok(Element::generator(0)));
    let d = group_diff(&w, x);
    assert!(d.eval(&[], &symbolic_momenta(3)).unwrap().is_zero());
    let checks = check_total_cocycle(x).unwrap();
    assert_eq!(checks[0].status, Status::Pass);
    assert_eq!(checks[1].status, Status::NotApplicable);
    assert_eq!(checks[3].status, Status::Pass);
}

#[test]
fn arity_is_enforced() {
    let w = Cochain::zero(1, 1);
    assert!(w.eval(&[], &[]).is_err());
    assert!(w.eval(&[Element::one()], &[Momentum::zero()]).unwrap().is_zero());
    let _ = Scalar::one();
}
