//! Canonical multivariate polynomials over an exact coefficient field.
//!
//! Indeterminates are the deformation parameter κ and named commuting
//! symbols (momentum components, Lorentz/translation placeholders). The
//! representation is expanded, with monomials kept in a `BTreeMap`, so two
//! polynomials are equal exactly when their maps are equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::coeff::{write_coefficient, Coefficient};

/// A commuting indeterminate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Kappa,
    Sym(Arc<str>),
}

impl Var {
    pub fn sym(name: &str) -> Var {
        Var::Sym(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        match self {
            Var::Kappa => "kappa",
            Var::Sym(s) => s,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Product of powers of indeterminates, sorted by variable, no zero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 3]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        let mut m = SmallVec::new();
        m.push((v, 1));
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Var, u32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    /// The monomial with `v` removed entirely.
    fn without(&self, v: &Var) -> Monomial {
        Monomial(self.0.iter().filter(|(w, _)| w != v).cloned().collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.0[i..].iter().cloned());
        out.extend(other.0[j..].iter().cloned());
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Expanded polynomial `Σ c_m m`.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coefficient> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::constant(C::from_rational(r))
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), C::one());
        Poly { terms }
    }

    pub fn kappa() -> Self {
        Self::var(Var::Kappa)
    }

    pub fn sym(name: &str) -> Self {
        Self::var(Var::sym(name))
    }

    /// The imaginary unit; panics for real coefficient fields.
    pub fn i() -> Self {
        Self::constant(C::imaginary_unit().expect("coefficient field has no imaginary unit"))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value, if this polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient-wise conjugation; indeterminates are real.
    pub fn conj(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The coefficient of `v^n`, as a polynomial free of `v`.
    pub fn coefficient_of(&self, v: &Var, n: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == n)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Simultaneous substitution of indeterminates.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly<C>>) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = Self::constant(c.clone());
            for (v, e) in m.factors() {
                match bindings.get(v) {
                    Some(p) => acc = &acc * &p.pow(e),
                    None => {
                        let mut single = SmallVec::new();
                        single.push((v.clone(), e));
                        kept = kept.mul(&Monomial(single));
                    }
                }
            }
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&kept), ac);
            }
        }
        out
    }
}

impl<C: Coefficient> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<'a, C: Coefficient> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Poly<C> {
    type Output = Poly<C>;

    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += &rhs;
        self
    }
}

impl<'a, C: Coefficient> AddAssign<&'a Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &'a Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a, C: Coefficient> SubAssign<&'a Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &'a Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a, C: Coefficient> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for Poly<C> {
    type Output = Poly<C>;

    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -self.clone()
    }
}

impl<'a, C: Coefficient> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    /// Renders in the DSL expression syntax, e.g. `1/2*i*kappa*k0^2 - l1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = write_coefficient(c, !m.is_one());
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&body)?;
            } else if body.is_empty() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{body}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::coeff::GaussianRational;

    type P = Poly<GaussianRational>;

    #[test]
    fn binomial_expansion() {
        let s = &P::kappa() + &P::sym("k1");
        let sq = s.pow(2);
        let expected = &(&P::kappa().pow(2) + &P::kappa().scale(&GaussianRational::from_int(2)).mul(P::sym("k1")))
            + &P::sym("k1").pow(2);
        assert_eq!(sq, expected);
    }

    #[test]
    fn kappa_commutes_with_momenta() {
        assert_eq!(
            &P::kappa() * &P::sym("k0"),
            &P::sym("k0") * &P::kappa()
        );
    }

    #[test]
    fn conj_flips_i_only() {
        let p = &P::i() * &P::kappa();
        assert_eq!(p.conj(), -&p);
        assert_eq!(P::from_int(3).conj(), P::from_int(3));
    }

    #[test]
    fn substitution_is_simultaneous() {
        // k1 -> k1 + l1 and l1 -> k1 at the same time.
        let mut b = BTreeMap::new();
        b.insert(Var::sym("k1"), &P::sym("k1") + &P::sym("l1"));
        b.insert(Var::sym("l1"), P::sym("k1"));
        let p = &P::sym("k1") * &P::sym("l1");
        let expected = &(&P::sym("k1") + &P::sym("l1")) * &P::sym("k1");
        assert_eq!(p.substitute(&b), expected);
    }

    #[test]
    fn coefficient_extraction() {
        let p = &(&P::kappa() * &P::sym("k0")) + &P::kappa().pow(2);
        assert_eq!(p.coefficient_of(&Var::Kappa, 1), P::sym("k0"));
        assert_eq!(p.coefficient_of(&Var::Kappa, 2), P::one());
        assert!(p.coefficient_of(&Var::Kappa, 0).is_zero());
    }

    #[test]
    fn display_is_dsl_syntax() {
        let p = &(&P::i() * &P::kappa()).scale(&GaussianRational::from_rational(
            crate::coeffring::coeff::rational(-1, 2),
        )) + &P::sym("k0").pow(2);
        assert_eq!(p.to_string(), "-1/2*i*kappa + k0^2");
    }
}
