use std::ops::{AddAssign, SubAssign};

use crate::coeffring::Momentum;
use crate::ncalg::Element;

/// Finite sum `Σ a_i u(k_i)` with invariant coefficients on the left.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct CrossedElement(Vec<(Momentum, Element)>);

impl CrossedElement {
    pub fn zero() -> Self {
        CrossedElement(Vec::new())
    }

    pub fn term(k: Momentum, a: Element) -> Self {
        let mut out = Self::zero();
        out.add_term(k, a);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Momentum, &Element)> {
        self.0.iter().map(|(k, a)| (k, a))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of `u(k)`.
    pub fn coefficient(&self, k: &Momentum) -> Element {
        self.0.iter().find(|(m, _)| m == k).map(|(_, a)| a.clone()).unwrap_or_default()
    }

    pub fn add_term(&mut self, k: Momentum, a: Element) {
        if a.is_zero() {
            return;
        }
        match self.0.iter().position(|(m, _)| *m == k) {
            Some(i) => {
                self.0[i].1 += &a;
                if self.0[i].1.is_zero() {
                    self.0.remove(i);
                }
            }
            None => self.0.push((k, a)),
        }
    }
}

impl AddAssign<&CrossedElement> for CrossedElement {
    fn add_assign(&mut self, rhs: &CrossedElement) {
        for (k, a) in rhs.terms() {
            self.add_term(k.clone(), a.clone());
        }
    }
}

impl SubAssign<&CrossedElement> for CrossedElement {
    fn sub_assign(&mut self, rhs: &CrossedElement) {
        for (k, a) in rhs.terms() {
            self.add_term(k.clone(), -a);
        }
    }
}
