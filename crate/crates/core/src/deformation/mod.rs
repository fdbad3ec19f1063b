//! First-order structure of a deformed family: the 2-cocycle, the bracket,
//! and the Poisson structure on the center of the undeformed algebra.

pub mod symmetric;

use crate::check::{combine, Check};
use crate::coeffring::{Scalar, Var};
use crate::error::{Error, Result};
use crate::ncalg::{is_central, AlgebraSpec, Element};

/// How the underlying vector spaces of the family are identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identification {
    /// Normal (sorted) words.
    Ordered,
    /// Symmetrized words; needs length-lowering relations.
    Symmetric,
}

/// A deformed family together with its κ = 0 member.
#[derive(Clone, Debug)]
pub struct Family {
    pub spec: AlgebraSpec,
    pub spec0: AlgebraSpec,
}

impl Family {
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        let spec0 = spec.at_kappa(Scalar::zero())?;
        Ok(Family { spec, spec0 })
    }

    fn undeformed(&self, e: &Element, what: &str) -> Result<Element> {
        if e.coefficient_vars().contains(&Var::Kappa) {
            return Err(Error::KappaInInput(format!("{what} = {}", self.spec.render(e))));
        }
        Ok(self.spec0.normal_form(e))
    }

    /// The κ¹ coefficient of `f·g` in the deformed algebra.
    pub fn extract_c(&self, f: &Element, g: &Element) -> Result<Element> {
        self.extract_c_with(f, g, Identification::Ordered)
    }

    pub fn extract_c_with(&self, f: &Element, g: &Element, ident: Identification) -> Result<Element> {
        let f = self.undeformed(f, "f")?;
        let g = self.undeformed(g, "g")?;
        match ident {
            Identification::Ordered => Ok(self.spec.multiply(&f, &g).kappa_coefficient(1)),
            Identification::Symmetric => symmetric::symmetric_cocycle(&self.spec, &self.spec0, &f, &g),
        }
    }

    /// `{f,g} = i(c(f,g) - c(g,f))`.
    pub fn bracket(&self, f: &Element, g: &Element) -> Result<Element> {
        self.bracket_with(f, g, Identification::Ordered)
    }

    pub fn bracket_with(&self, f: &Element, g: &Element, ident: Identification) -> Result<Element> {
        let d = &self.extract_c_with(f, g, ident)? - &self.extract_c_with(g, f, ident)?;
        Ok(d.scale(&Scalar::i()))
    }

    /// `{f,g}` read off the commutator: `[f,g]_κ = [f,g]_0 - iκ{f,g} + O(κ²)`.
    pub fn bracket_from_commutator(&self, f: &Element, g: &Element) -> Result<Element> {
        let f = self.undeformed(f, "f")?;
        let g = self.undeformed(g, "g")?;
        Ok(self.spec.commutator(&f, &g).kappa_coefficient(1).scale(&Scalar::i()))
    }

    fn mul0(&self, a: &Element, b: &Element) -> Element {
        self.spec0.multiply(a, b)
    }

    /// `f c(g,h) - c(fg,h) + c(f,gh) - c(f,g) h`, products in the undeformed algebra.
    pub fn hochschild_residual(&self, f: &Element, g: &Element, h: &Element) -> Result<Element> {
        let mut r = self.mul0(f, &self.extract_c(g, h)?);
        r -= &self.extract_c(&self.mul0(f, g), h)?;
        r += &self.extract_c(f, &self.mul0(g, h))?;
        r -= &self.mul0(&self.extract_c(f, g)?, h);
        Ok(r)
    }

    pub fn check_hochschild_cocycle(&self, tests: &[Element]) -> Result<Check> {
        let mut parts = Vec::new();
        for f in tests {
            for g in tests {
                for h in tests {
                    let r = self.hochschild_residual(f, g, h)?;
                    let label = format!(
                        "({}, {}, {})",
                        self.spec.render(f),
                        self.spec.render(g),
                        self.spec.render(h)
                    );
                    parts.push((label, Check::zero("", &self.spec, &r)));
                }
            }
        }
        Ok(combine("hochschild-cocycle", parts))
    }

    /// The Poisson-center statement, in order: candidates central in the
    /// limit, closure, Jacobi, Leibniz, the product rule for `δ_{zz'}`, and
    /// the product rule's inner-derivation defect for the ordered cocycle.
    pub fn check_center_structure(&self, candidates: &[Element], probes: &[Element]) -> Result<Vec<Check>> {
        let spec = &self.spec;
        let label = |es: &[&Element]| {
            let names: Vec<_> = es.iter().map(|e| spec.render(e)).collect();
            format!("({})", names.join(", "))
        };
        let mut pre = Vec::new();
        let mut cands = Vec::new();
        for z in candidates {
            let z0 = self.undeformed(z, "candidate")?;
            let c = is_central(&z0, &self.spec0);
            let res = c.witnesses.first().map(|w| w.1.clone()).unwrap_or_default();
            pre.push((label(&[&z0]), Check::zero("", &self.spec0, &res)));
            cands.push(z0);
        }
        let probes: Vec<Element> = probes
            .iter()
            .map(|p| self.undeformed(p, "probe"))
            .collect::<Result<_>>()?;

        let mut closure = Vec::new();
        for a in &cands {
            for b in &cands {
                let br = self.bracket(a, b)?;
                let c = is_central(&br, &self.spec0);
                let res = c.witnesses.first().map(|w| w.1.clone()).unwrap_or_default();
                closure.push((label(&[a, b]), Check::zero("", &self.spec0, &res)));
            }
        }

        let mut jacobi = Vec::new();
        for f in &cands {
            for g in &cands {
                for h in &cands {
                    let lhs = self.bracket(&self.bracket(f, g)?, h)?;
                    let rhs = &self.bracket(&self.bracket(f, h)?, g)? + &self.bracket(f, &self.bracket(g, h)?)?;
                    jacobi.push((label(&[f, g, h]), Check::zero("", spec, &(&lhs - &rhs))));
                }
            }
        }

        let mut leibniz = Vec::new();
        for h in &cands {
            for f in &probes {
                for g in &probes {
                    let mut r = self.mul0(f, &self.bracket(h, g)?);
                    r -= &self.bracket(h, &self.mul0(f, g))?;
                    r += &self.mul0(&self.bracket(h, f)?, g);
                    leibniz.push((label(&[h, f, g]), Check::zero("", spec, &r)));
                }
            }
        }

        // With a general cocycle, δ_{zw} - zδ_w - wδ_z is the inner derivation
        // i[·, c(z, w)]. It vanishes when c(z, w) is central, which the
        // symmetric identification gives for linear center elements.
        let literal = if symmetric::is_lie_type(spec) {
            Identification::Symmetric
        } else {
            Identification::Ordered
        };
        let mut product = Vec::new();
        let mut inner = Vec::new();
        for z in &cands {
            for w in &cands {
                let zw = self.mul0(z, w);
                let czw = self.extract_c(z, w)?;
                for f in &probes {
                    let defect = |ident| -> Result<Element> {
                        let mut r = self.bracket_with(&zw, f, ident)?;
                        r -= &self.mul0(z, &self.bracket_with(w, f, ident)?);
                        r -= &self.mul0(w, &self.bracket_with(z, f, ident)?);
                        Ok(r)
                    };
                    product.push((label(&[z, w, f]), Check::zero("", spec, &defect(literal)?)));
                    let mut r = defect(Identification::Ordered)?;
                    r -= &self.spec0.commutator(f, &czw).scale(&Scalar::i());
                    inner.push((label(&[z, w, f]), Check::zero("", spec, &r)));
                }
            }
        }

        Ok(vec![
            combine("center-candidates", pre),
            combine("center-closure", closure),
            combine("center-jacobi", jacobi),
            combine("center-leibniz", leibniz),
            combine("center-derivation-product", product),
            combine("center-derivation-inner", inner),
        ])
    }

    /// `c(f,g)* = c(g*,f*)` and `{f,g}* = {f*,g*}` on all pairs, with the
    /// symmetric identification (the ordered one does not commute with the
    /// involution).
    pub fn check_reality_c(&self, tests: &[Element]) -> Result<Vec<Check>> {
        if !symmetric::is_lie_type(&self.spec) {
            let why = "reality needs a *-compatible identification; relations are not length-lowering";
            return Ok(vec![
                Check::not_applicable("reality-cocycle", why),
                Check::not_applicable("reality-bracket", why),
            ]);
        }
        let id = Identification::Symmetric;
        let star = |e: &Element| self.spec0.involution(e);
        let mut c_parts = Vec::new();
        let mut b_parts = Vec::new();
        for f in tests {
            for g in tests {
                let label = format!("({}, {})", self.spec.render(f), self.spec.render(g));
                let lhs = star(&self.extract_c_with(f, g, id)?);
                let rhs = self.extract_c_with(&star(g), &star(f), id)?;
                c_parts.push((label.clone(), Check::zero("", &self.spec, &(&lhs - &rhs))));
                let lhs = star(&self.bracket_with(f, g, id)?);
                let rhs = self.bracket_with(&star(f), &star(g), id)?;
                b_parts.push((label, Check::zero("", &self.spec, &(&lhs - &rhs))));
            }
        }
        Ok(vec![combine("reality-cocycle", c_parts), combine("reality-bracket", b_parts)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{rational, GaussianRational};
    use crate::ncalg::testing::su2;
    use crate::ncalg::word_of;
    use proptest::prelude::*;

    fn fam() -> Family {
        Family::new(su2()).unwrap()
    }

    fn gen(g: u16) -> Element {
        Element::generator(g)
    }

    #[test]
    fn extraction_reads_the_kappa_coefficient() {
        let f = fam();
        assert!(f.extract_c(&gen(0), &gen(1)).unwrap().is_zero());
        assert_eq!(f.extract_c(&gen(1), &gen(0)).unwrap(), gen(2).scale(&-Scalar::i()));
        assert_eq!(f.bracket(&gen(0), &gen(1)).unwrap(), gen(2).scale_int(-1));
        assert!(f.extract_c(&Element::one(), &gen(2)).unwrap().is_zero());
    }

    #[test]
    fn kappa_input_is_rejected() {
        let f = fam();
        let k = gen(0).scale(&Scalar::kappa());
        assert!(matches!(f.extract_c(&k, &gen(1)), Err(Error::KappaInInput(_))));
    }

    #[test]
    fn cocycle_identity_on_generators() {
        let f = fam();
        let tests = vec![gen(0), gen(1), gen(2), Element::word(&[0, 1])];
        assert!(f.check_hochschild_cocycle(&tests).unwrap().passed());
    }

    #[test]
    fn center_of_abelian_limit() {
        // At κ = 0 every element is central; the bracket is the su(2) Lie bracket
        // up to sign, so Jacobi and Leibniz are real statements here.
        let f = fam();
        let cands = vec![gen(0), gen(1), gen(2), Element::one()];
        let probes = vec![gen(0), gen(1)];
        let checks = f.check_center_structure(&cands, &probes).unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:?}");
    }

    #[test]
    fn reality_holds_symmetrically() {
        let f = fam();
        let tests = vec![gen(0), gen(1), gen(2), Element::word(&[0, 1])];
        let checks = f.check_reality_c(&tests).unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:?}");
    }

    #[test]
    fn ordered_identification_is_not_star_compatible() {
        let f = fam();
        let star = |e: &Element| f.spec0.involution(e);
        let (a, b) = (gen(0), gen(1));
        let lhs = star(&f.extract_c(&a, &b).unwrap());
        let rhs = f.extract_c(&star(&b), &star(&a)).unwrap();
        assert_ne!(lhs, rhs);
    }

    fn arb_element() -> impl Strategy<Value = Element> {
        let term = (prop::collection::vec(0u16..3, 0..=3), -3i64..=3, -2i64..=2).prop_map(|(w, re, im)| {
            let c = Scalar::constant(GaussianRational::new(rational(re, 1), rational(im, 1)));
            Element::term(word_of(&w), c)
        });
        prop::collection::vec(term, 0..3).prop_map(|ts| ts.into_iter().fold(Element::zero(), |a, t| a + t))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn extraction_is_consistent(a in arb_element(), b in arb_element()) {
            let f = fam();
            let (a, b) = (f.spec0.normal_form(&a), f.spec0.normal_form(&b));
            let full = f.spec.multiply(&a, &b);
            let c = f.extract_c(&a, &b).unwrap();
            let rest = &(&full - &f.spec0.multiply(&a, &b)) - &c.scale(&Scalar::kappa());
            prop_assert!(rest.kappa_coefficient(1).is_zero());
            prop_assert!(rest.kappa_coefficient(0).is_zero());
        }

        #[test]
        fn bracket_matches_commutator(a in arb_element(), b in arb_element()) {
            let f = fam();
            prop_assert_eq!(f.bracket(&a, &b).unwrap(), f.bracket_from_commutator(&a, &b).unwrap());
            prop_assert!(f.bracket(&a, &a).unwrap().is_zero());
        }

        #[test]
        fn bilinear(a in arb_element(), b in arb_element(), c in arb_element()) {
            let f = fam();
            let lhs = f.extract_c(&(&a + &b), &c).unwrap();
            let rhs = &f.extract_c(&a, &c).unwrap() + &f.extract_c(&b, &c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn cocycle_identity(a in arb_element(), b in arb_element(), c in arb_element()) {
            let f = fam();
            prop_assert!(f.hochschild_residual(&a, &b, &c).unwrap().is_zero());
        }
    }
}
