//! Momenta of the dual translation group and the fixed Minkowski metric.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;

use super::poly::Var;
use super::{Coefficient, Scalar};
use crate::error::{Error, Result};

/// Diagonal Minkowski metric `diag(-1, 1, 1, 1)`; upper and lower components agree.
pub fn metric(mu: usize, nu: usize) -> i64 {
    match (mu, nu) {
        (0, 0) => -1,
        (a, b) if a == b && a < 4 => 1,
        _ => 0,
    }
}

/// Totally antisymmetric symbol with `eps(0,1,2,3) = 1`.
pub fn levi_civita(idx: [usize; 4]) -> i64 {
    if idx.iter().any(|&i| i > 3) {
        return 0;
    }
    let mut v = idx;
    let mut sign = 1;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if v[i] == v[j] {
                return 0;
            }
        }
    }
    // bubble sort, counting transpositions
    for i in 0..4 {
        for j in 0..(3 - i) {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// Prefixes accepted for momentum symbols (`k0..k3`, `l0..l3`, ...).
pub const MOMENTUM_PREFIXES: [&str; 4] = ["k", "l", "m", "n"];

/// True for names of the form `<prefix><digit>` with a momentum prefix and digit 0..3.
pub fn is_momentum_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    let (Some(p), Some(d), None) = (chars.next(), chars.next(), chars.next()) else {
        return false;
    };
    MOMENTUM_PREFIXES.iter().any(|x| x.starts_with(p)) && ('0'..='3').contains(&d)
}

/// A covariant four-momentum `k_μ` with Scalar components.
#[derive(Clone, PartialEq, Debug)]
pub struct Momentum(pub [Scalar; 4]);

impl Momentum {
    pub fn zero() -> Self {
        Momentum(std::array::from_fn(|_| Scalar::zero()))
    }

    /// The fully symbolic momentum `(p0, p1, p2, p3)` for prefix `p`.
    pub fn symbolic(prefix: &str) -> Self {
        Momentum(std::array::from_fn(|mu| Scalar::sym(&format!("{prefix}{mu}"))))
    }

    pub fn from_rationals(v: [BigRational; 4]) -> Self {
        Momentum(v.map(Scalar::from_rational))
    }

    pub fn lower(&self, mu: usize) -> &Scalar {
        &self.0[mu]
    }

    /// Contravariant component `k^μ = g^{μν} k_ν`.
    pub fn upper(&self, mu: usize) -> Scalar {
        self.0[mu].scale(&crate::coeffring::GaussianRational::from_int(metric(mu, mu)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Minkowski product `k_μ g^{μν} l_ν`.
    pub fn dot(&self, other: &Momentum) -> Scalar {
        let mut acc = Scalar::zero();
        for mu in 0..4 {
            acc += &(&self.upper(mu) * &other.0[mu]);
        }
        acc
    }

    /// Bindings `p_μ ↦ self_μ` for the symbolic momentum with prefix `p`.
    pub fn bindings_for(&self, prefix: &str) -> BTreeMap<Var, Scalar> {
        (0..4)
            .map(|mu| (Var::sym(&format!("{prefix}{mu}")), self.0[mu].clone()))
            .collect()
    }

    pub fn substitute(&self, bindings: &BTreeMap<Var, Scalar>) -> Momentum {
        Momentum(std::array::from_fn(|mu| self.0[mu].substitute(bindings)))
    }
}

impl Add for &Momentum {
    type Output = Momentum;

    fn add(self, rhs: &Momentum) -> Momentum {
        Momentum(std::array::from_fn(|mu| &self.0[mu] + &rhs.0[mu]))
    }
}

impl Sub for &Momentum {
    type Output = Momentum;

    fn sub(self, rhs: &Momentum) -> Momentum {
        Momentum(std::array::from_fn(|mu| &self.0[mu] - &rhs.0[mu]))
    }
}

impl Neg for &Momentum {
    type Output = Momentum;

    fn neg(self) -> Momentum {
        Momentum(std::array::from_fn(|mu| -&self.0[mu]))
    }
}

impl fmt::Display for Momentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Substitutes momentum symbols simultaneously. Every key must be a momentum
/// symbol; κ and placeholder symbols are rejected.
pub fn momentum_substitute(s: &Scalar, bindings: &BTreeMap<String, Scalar>) -> Result<Scalar> {
    let mut vars = BTreeMap::new();
    for (name, value) in bindings {
        if !is_momentum_symbol(name) {
            return Err(Error::UnknownSymbol(name.clone()));
        }
        vars.insert(Var::sym(name), value.clone());
    }
    Ok(s.substitute(&vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::coeff::rational;
    use crate::coeffring::Coefficient;

    #[test]
    fn metric_squares_to_identity() {
        for mu in 0..4 {
            for nu in 0..4 {
                let sq: i64 = (0..4).map(|r| metric(mu, r) * metric(r, nu)).sum();
                assert_eq!(sq, i64::from(mu == nu));
                assert_eq!(metric(mu, nu), metric(nu, mu));
            }
        }
    }

    #[test]
    fn epsilon_is_antisymmetric() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1);
        assert_eq!(levi_civita([3, 2, 1, 0]), 1);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0);
    }

    #[test]
    fn substitute_zero_component() {
        let s = &Scalar::kappa() * &Scalar::sym("k0");
        let b = BTreeMap::from([("k0".to_string(), Scalar::zero())]);
        assert!(momentum_substitute(&s, &b).unwrap().is_zero());
    }

    #[test]
    fn substitute_shift() {
        let s = Scalar::sym("k1").pow(2);
        let b = BTreeMap::from([("k1".to_string(), &Scalar::sym("k1") + &Scalar::sym("l1"))]);
        let expected = &(&Scalar::sym("k1").pow(2)
            + &(&Scalar::sym("k1") * &Scalar::sym("l1")).scale(&crate::coeffring::GaussianRational::from_int(2)))
            + &Scalar::sym("l1").pow(2);
        assert_eq!(momentum_substitute(&s, &b).unwrap(), expected);
    }

    #[test]
    fn substitute_boost() {
        // (Λk)_0 = k_ν Λ^{-1ν}_0 with Λ^{-1} the inverse 0-1 boost (5/4, -3/4).
        let k = Momentum::symbolic("k");
        let c = |n, d| Scalar::from_rational(rational(n, d));
        let boosted0 = &(&k.0[0] * &c(5, 4)) + &(&k.0[1] * &c(-3, 4));
        let b = BTreeMap::from([("k0".to_string(), boosted0.clone())]);
        let got = momentum_substitute(&Scalar::sym("k0"), &b).unwrap();
        assert_eq!(got, boosted0);
    }

    #[test]
    fn rejects_non_momentum_bindings() {
        let b = BTreeMap::from([("kappa".to_string(), Scalar::zero())]);
        assert!(matches!(
            momentum_substitute(&Scalar::kappa(), &b),
            Err(Error::UnknownSymbol(_))
        ));
    }

    #[test]
    fn symbol_names() {
        assert!(is_momentum_symbol("k0"));
        assert!(is_momentum_symbol("l3"));
        assert!(!is_momentum_symbol("k4"));
        assert!(!is_momentum_symbol("x0"));
        assert!(!is_momentum_symbol("kappa"));
    }
}
