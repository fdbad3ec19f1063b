//! Exact rational Lorentz matrices, Poincaré elements, and their action on
//! algebras through per-generator tables.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::coeffring::{metric, rational, Momentum, Scalar, Var};
use crate::error::{Error, Result};
use crate::ncalg::{AlgebraSpec, Element, GenId};

/// Placeholder symbol for the entry `Λ^{-1 μ}_ν` inside action tables.
pub fn inv_symbol(mu: usize, nu: usize) -> Var {
    Var::sym(&format!("inv({mu},{nu})"))
}

/// Placeholder symbol for the translation component `a^μ`.
pub fn shift_symbol(mu: usize) -> Var {
    Var::sym(&format!("shift({mu})"))
}

pub fn is_placeholder(v: &Var) -> bool {
    matches!(v, Var::Sym(s) if s.starts_with("inv(") || s.starts_with("shift("))
}

/// `Λ^μ_ν` stored row-major, with `Λᵀ g Λ = g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LorentzMatrix([[BigRational; 4]; 4]);

impl LorentzMatrix {
    pub fn new(m: [[BigRational; 4]; 4]) -> Result<Self> {
        for a in 0..4 {
            for b in 0..4 {
                let mut s = BigRational::zero();
                for c in 0..4 {
                    s += &m[c][a] * &m[c][b] * BigRational::from_integer(metric(c, c).into());
                }
                if s != BigRational::from_integer(metric(a, b).into()) {
                    return Err(Error::NotLorentz(format!("(Λᵀ g Λ)[{a}][{b}] = {s}")));
                }
            }
        }
        Ok(LorentzMatrix(m))
    }

    pub fn identity() -> Self {
        LorentzMatrix(std::array::from_fn(|a| {
            std::array::from_fn(|b| if a == b { BigRational::one() } else { BigRational::zero() })
        }))
    }

    fn embed(plane: (usize, usize), block: [[BigRational; 2]; 2]) -> Result<Self> {
        let mut m = Self::identity().0;
        let (p, q) = plane;
        m[p][p] = block[0][0].clone();
        m[p][q] = block[0][1].clone();
        m[q][p] = block[1][0].clone();
        m[q][q] = block[1][1].clone();
        Self::new(m)
    }

    /// Boost in the `(0, axis)` plane with `cosh = 5/4`, `sinh = 3/4`.
    pub fn boost(axis: usize) -> Self {
        let (c, s) = (rational(5, 4), rational(3, 4));
        Self::embed((0, axis), [[c.clone(), s.clone()], [s, c]]).expect("5/4, 3/4 boost")
    }

    /// Rotation in the `(p, q)` spatial plane with `cos = 3/5`, `sin = 4/5`.
    pub fn rotation(p: usize, q: usize) -> Self {
        let (c, s) = (rational(3, 5), rational(4, 5));
        Self::embed((p, q), [[c.clone(), -s.clone()], [s, c]]).expect("3-4-5 rotation")
    }

    pub fn entry(&self, mu: usize, nu: usize) -> &BigRational {
        &self.0[mu][nu]
    }

    pub fn mul(&self, other: &LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(std::array::from_fn(|a| {
            std::array::from_fn(|b| (0..4).map(|c| &self.0[a][c] * &other.0[c][b]).sum())
        }))
    }

    /// `Λ^{-1} = g Λᵀ g`.
    pub fn inverse(&self) -> LorentzMatrix {
        LorentzMatrix(std::array::from_fn(|a| {
            std::array::from_fn(|b| &self.0[b][a] * BigRational::from_integer((metric(a, a) * metric(b, b)).into()))
        }))
    }

    /// Covariant momentum transform `(Λk)_μ = k_ν Λ^{-1 ν}_μ`.
    pub fn act_momentum(&self, k: &Momentum) -> Momentum {
        let inv = self.inverse();
        Momentum(std::array::from_fn(|mu| {
            let mut acc = Scalar::zero();
            for nu in 0..4 {
                acc += &k.0[nu].scale(&crate::coeffring::GaussianRational::new(
                    inv.0[nu][mu].clone(),
                    BigRational::zero(),
                ));
            }
            acc
        }))
    }

    /// Contravariant vector transform `(Λa)^μ = Λ^μ_ν a^ν`.
    pub fn act_vector(&self, a: &[Scalar; 4]) -> [Scalar; 4] {
        std::array::from_fn(|mu| {
            let mut acc = Scalar::zero();
            for nu in 0..4 {
                acc += &(&a[nu] * &Scalar::from_rational(self.0[mu][nu].clone()));
            }
            acc
        })
    }

    /// Named samples: identity, the 0-1 boost, the 1-2 rotation, and products.
    pub fn samples() -> Vec<(String, LorentzMatrix)> {
        let b = Self::boost(1);
        let r = Self::rotation(1, 2);
        vec![
            ("identity".into(), Self::identity()),
            ("boost01".into(), b.clone()),
            ("rotation12".into(), r.clone()),
            ("boost01*rotation12".into(), b.mul(&r)),
            ("rotation12*boost01".into(), r.mul(&b)),
        ]
    }
}

impl fmt::Display for LorentzMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(crate::coeffring::coeff::format_rational).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `(Λ, a)` acting by `x ↦ Λ^{-1}(x - a)`.
#[derive(Clone, PartialEq, Debug)]
pub struct PoincareElement {
    pub lambda: LorentzMatrix,
    pub shift: [Scalar; 4],
}

impl PoincareElement {
    pub fn lorentz(lambda: LorentzMatrix) -> Self {
        PoincareElement {
            lambda,
            shift: std::array::from_fn(|_| Scalar::zero()),
        }
    }

    /// `(Λ,a)(Λ',a') = (ΛΛ', a + Λa')`, so that the action composes as
    /// `α_p ∘ α_{p'} = α_{pp'}`.
    pub fn compose(&self, other: &PoincareElement) -> PoincareElement {
        let moved = self.lambda.act_vector(&other.shift);
        PoincareElement {
            lambda: self.lambda.mul(&other.lambda),
            shift: std::array::from_fn(|mu| &self.shift[mu] + &moved[mu]),
        }
    }

    /// Product of a random word in boosts and rotations along each axis,
    /// with a random small rational translation.
    pub fn random(rng: &mut impl Rng) -> Self {
        let pool = [
            LorentzMatrix::boost(1),
            LorentzMatrix::boost(2),
            LorentzMatrix::boost(3),
            LorentzMatrix::rotation(1, 2),
            LorentzMatrix::rotation(1, 3),
            LorentzMatrix::rotation(2, 3),
            LorentzMatrix::boost(1).inverse(),
            LorentzMatrix::rotation(1, 2).inverse(),
        ];
        let len = rng.gen_range(0..=3);
        let mut m = LorentzMatrix::identity();
        for _ in 0..len {
            m = m.mul(&pool[rng.gen_range(0..pool.len())]);
        }
        let shift = std::array::from_fn(|_| Scalar::from_rational(rational(rng.gen_range(-4..=4), rng.gen_range(1..=3))));
        PoincareElement { lambda: m, shift }
    }

    fn bindings(&self) -> BTreeMap<Var, Scalar> {
        let inv = self.lambda.inverse();
        let mut b = BTreeMap::new();
        for mu in 0..4 {
            for nu in 0..4 {
                b.insert(inv_symbol(mu, nu), Scalar::from_rational(inv.0[mu][nu].clone()));
            }
            b.insert(shift_symbol(mu), self.shift[mu].clone());
        }
        b
    }
}

/// Poincaré action given by the image of each generator as an element whose
/// coefficients involve the `inv(μ,ν)` and `shift(μ)` placeholders.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct LorentzAction {
    pub table: BTreeMap<GenId, Element>,
}

impl LorentzAction {
    pub fn image(&self, p: &PoincareElement, g: GenId) -> Element {
        match self.table.get(&g) {
            Some(e) => e.substitute(&p.bindings()),
            None => Element::generator(g),
        }
    }

    /// Extends the generator images multiplicatively inside `spec`.
    pub fn apply(&self, spec: &AlgebraSpec, p: &PoincareElement, e: &Element) -> Element {
        let images: BTreeMap<GenId, Element> = e
            .generators()
            .into_iter()
            .map(|g| (g, self.image(p, g)))
            .collect();
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let mut acc = Element::scalar(c.clone());
            for g in w {
                acc = spec.multiply(&acc, &images[g]);
            }
            out += &acc;
        }
        out
    }

    /// The Lorentz part `α_(Λ,0)`.
    pub fn apply_lorentz(&self, spec: &AlgebraSpec, l: &LorentzMatrix, e: &Element) -> Element {
        self.apply(spec, &PoincareElement::lorentz(l.clone()), e)
    }
}

/// A plane wave `u(k)·exp(i·phase)` with the phase exponent kept symbolic.
#[derive(Clone, PartialEq, Debug)]
pub struct PhasedWave {
    pub momentum: Momentum,
    pub phase: Scalar,
}

impl PhasedWave {
    pub fn plain(k: Momentum) -> Self {
        PhasedWave {
            momentum: k,
            phase: Scalar::zero(),
        }
    }

    /// `α_(Λ,a) u(k) = u(Λk) exp(-i (Λk)_μ a^μ)`.
    pub fn transform(&self, p: &PoincareElement) -> PhasedWave {
        let k = p.lambda.act_momentum(&self.momentum);
        let mut phase = self.phase.clone();
        for mu in 0..4 {
            phase -= &(&k.0[mu] * &p.shift[mu]);
        }
        PhasedWave { momentum: k, phase }
    }

    pub fn mul(&self, other: &PhasedWave) -> PhasedWave {
        PhasedWave {
            momentum: &self.momentum + &other.momentum,
            phase: &self.phase + &other.phase,
        }
    }

    /// `(u(k) e^{iφ})* = u(-k) e^{-iφ}`.
    pub fn star(&self) -> PhasedWave {
        PhasedWave {
            momentum: -&self.momentum,
            phase: -&self.phase,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn samples_are_lorentz() {
        for (_, m) in LorentzMatrix::samples() {
            assert!(LorentzMatrix::new(m.0.clone()).is_ok());
            assert_eq!(m.mul(&m.inverse()), LorentzMatrix::identity());
        }
    }

    #[test]
    fn rejects_non_lorentz() {
        let mut m = LorentzMatrix::identity().0;
        m[0][1] = rational(1, 2);
        assert!(matches!(LorentzMatrix::new(m), Err(Error::NotLorentz(_))));
    }

    #[test]
    fn boost_moves_momentum() {
        let k = Momentum::symbolic("k");
        let moved = LorentzMatrix::boost(1).act_momentum(&k);
        // Λ^{-1} is the opposite boost; column 0 is (5/4, -3/4, 0, 0).
        let want = &k.0[0].scale(&Scalar::from_rational(rational(5, 4)).as_constant().unwrap())
            + &k.0[1].scale(&Scalar::from_rational(rational(-3, 4)).as_constant().unwrap());
        assert_eq!(moved.0[0], want);
    }

    #[test]
    fn momentum_action_is_a_homomorphism() {
        let k = Momentum::symbolic("k");
        let (a, b) = (LorentzMatrix::boost(1), LorentzMatrix::rotation(1, 2));
        assert_eq!(a.act_momentum(&b.act_momentum(&k)), a.mul(&b).act_momentum(&k));
        assert_eq!(a.act_momentum(&k).dot(&a.act_momentum(&k)), k.dot(&k));
    }

    #[test]
    fn phase_group_law() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let k = PhasedWave::plain(Momentum::symbolic("k"));
        for _ in 0..5 {
            let (p, q) = (PoincareElement::random(&mut rng), PoincareElement::random(&mut rng));
            assert_eq!(k.transform(&q).transform(&p), k.transform(&p.compose(&q)));
        }
    }
}
