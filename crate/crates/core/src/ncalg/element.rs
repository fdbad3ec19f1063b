use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use smallvec::SmallVec;

use crate::coeffring::{GaussianRational, Scalar, Var};

/// Generator index. Indices double as precedence: smaller sorts first.
pub type GenId = u16;

/// A word in the generators; the empty word is the unit.
pub type Word = SmallVec<[GenId; 8]>;

/// True when every adjacent pair is nondecreasing in precedence.
pub fn is_normal(w: &[GenId]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// Finite linear combination of words with Scalar coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(Word::new(), s)
    }

    pub fn generator(g: GenId) -> Self {
        Self::word(&[g])
    }

    pub fn word(w: &[GenId]) -> Self {
        Self::term(Word::from_slice(w), Scalar::one())
    }

    pub fn term(w: Word, s: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(w, s);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[GenId]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &s;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `s * other` in place.
    pub fn add_scaled(&mut self, other: &Element, s: &Scalar) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn scale_int(&self, n: i64) -> Element {
        self.scale(&Scalar::from_int(n))
    }

    /// Concatenation product in the free algebra (no rewriting).
    pub fn concat(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Conjugates every coefficient (i ↦ -i); words untouched.
    pub fn conj_coefficients(&self) -> Element {
        self.map_coefficients(Scalar::conj)
    }

    pub fn substitute(&self, bindings: &BTreeMap<Var, Scalar>) -> Element {
        self.map_coefficients(|c| c.substitute(bindings))
    }

    /// The coefficient of κ^n, as an element with κ-free coefficients.
    pub fn kappa_coefficient(&self, n: u32) -> Element {
        self.map_coefficients(|c| c.coefficient_of(&Var::Kappa, n))
    }

    pub fn at_kappa_zero(&self) -> Element {
        self.kappa_coefficient(0)
    }

    pub fn contains_kappa(&self) -> bool {
        self.terms.values().any(|c| c.contains_var(&Var::Kappa))
    }

    pub fn coefficient_vars(&self) -> BTreeSet<Var> {
        self.terms.values().flat_map(|c| c.vars()).collect()
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Generators appearing in any word.
    pub fn generators(&self) -> BTreeSet<GenId> {
        self.terms.keys().flat_map(|w| w.iter().copied()).collect()
    }

    /// The part made of words of exactly `len` letters.
    pub fn homogeneous_part(&self, len: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    /// The Gaussian constant when this element is a scalar multiple of the unit
    /// with no indeterminates.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::new(Default::default(), Default::default())),
            1 => self.terms.get(&Word::new()).and_then(Scalar::as_constant),
            _ => None,
        }
    }
}

impl FromIterator<(Word, Scalar)> for Element {
    fn from_iter<T: IntoIterator<Item = (Word, Scalar)>>(iter: T) -> Self {
        let mut e = Element::zero();
        for (w, s) in iter {
            e.add_term(w, s);
        }
        e
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;

    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

pub(crate) fn word_of(slice: &[GenId]) -> Word {
    SmallVec::from_slice(slice)
}
