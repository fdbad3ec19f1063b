//! Symmetrization map between commutative polynomials in the generators and
//! an algebra of Lie type, and its inverse.
//!
//! A commutative monomial is stored as a sorted word. Symmetrizing it averages
//! all distinct orderings of the letters inside the algebra.

use std::collections::BTreeSet;

use crate::coeffring::{rational, Scalar};
use crate::error::{Error, Result};
use crate::ncalg::{AlgebraSpec, Element, GenId, Word};

/// True when every relation lowers length, i.e. the relations are those of
/// an enveloping algebra. Symmetrization is only defined in that case.
pub fn is_lie_type(spec: &AlgebraSpec) -> bool {
    spec.rules()
        .iter()
        .all(|r| r.rhs.max_word_len() <= 1)
}

fn distinct_permutations(w: &[GenId]) -> Vec<Word> {
    fn go(rest: &mut Vec<GenId>, cur: &mut Word, out: &mut Vec<Word>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        let letters: BTreeSet<GenId> = rest.iter().copied().collect();
        for g in letters {
            let pos = rest.iter().position(|&x| x == g).unwrap();
            rest.remove(pos);
            cur.push(g);
            go(rest, cur, out);
            cur.pop();
            rest.insert(pos, g);
        }
    }
    let mut out = Vec::new();
    go(&mut w.to_vec(), &mut Word::new(), &mut out);
    out
}

/// Symmetrization of a linear combination of commutative monomials.
pub fn symmetrize(spec: &AlgebraSpec, e: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        let mut sorted = w.clone();
        sorted.sort_unstable();
        let perms = distinct_permutations(&sorted);
        let weight = Scalar::from_rational(rational(1, perms.len() as i64));
        let mut acc = Element::zero();
        for p in perms {
            acc += &spec.normal_word(&p);
        }
        out.add_scaled(&acc, &(c * &weight));
    }
    out
}

/// Inverse of [`symmetrize`]: peels off the longest words, whose
/// symmetrization agrees with them up to shorter terms.
pub fn desymmetrize(spec: &AlgebraSpec, e: &Element) -> Result<Element> {
    if !is_lie_type(spec) {
        return Err(Error::Unsupported(
            "symmetric identification needs length-lowering relations".into(),
        ));
    }
    let mut rest = spec.normal_form(e);
    let mut out = Element::zero();
    while !rest.is_zero() {
        let top = rest.homogeneous_part(rest.max_word_len());
        rest -= &symmetrize(spec, &top);
        out += &top;
    }
    Ok(out)
}

/// The first-order term of the product transported to commutative polynomials
/// through symmetrization, read back in the undeformed algebra.
pub fn symmetric_cocycle(spec: &AlgebraSpec, spec0: &AlgebraSpec, f: &Element, g: &Element) -> Result<Element> {
    let pf = desymmetrize(spec0, f)?;
    let pg = desymmetrize(spec0, g)?;
    let prod = spec.multiply(&symmetrize(spec, &pf), &symmetrize(spec, &pg));
    let back = desymmetrize(spec, &prod)?;
    Ok(symmetrize(spec0, &back.kappa_coefficient(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::testing::su2;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[0, 0, 1]).len(), 3);
        assert_eq!(distinct_permutations(&[0, 1, 2]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    #[test]
    fn roundtrip() {
        let s = su2();
        let e = &Element::word(&[0, 1, 2]) + &Element::word(&[1, 1]).scale_int(3);
        let sym = symmetrize(&s, &e);
        assert_eq!(desymmetrize(&s, &sym).unwrap(), e);
        let back = symmetrize(&s, &desymmetrize(&s, &e).unwrap());
        assert_eq!(back, e);
    }

    #[test]
    fn symmetric_cocycle_is_half_commutator() {
        let s = su2();
        let s0 = s.at_kappa(Scalar::zero()).unwrap();
        // a·b = sym(ab) + (1/2)[a,b] = sym(ab) + (i/2)κ c
        let got = symmetric_cocycle(&s, &s0, &Element::generator(0), &Element::generator(1)).unwrap();
        let want = Element::generator(2).scale(&Scalar::i().scale(&crate::coeffring::GaussianRational::new(
            rational(1, 2),
            rational(0, 1),
        )));
        assert_eq!(got, want);
    }
}
