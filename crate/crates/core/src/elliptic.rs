//! Elliptic curves over an abstract field: standard invariants and
//! j-invariants, Jacobians of quartics, and modular-polynomial isogeny
//! tests.

use crate::error::Error;
use crate::modpoly::ModularPolyStore;
use crate::rat::Rat;
use crate::traits::{Field, Ring};
use crate::unipoly::UniPoly;
use crate::Result;

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
#[derive(Clone, PartialEq, Debug)]
pub struct EllipticModel<K: Field> {
    pub a1: K,
    pub a2: K,
    pub a3: K,
    pub a4: K,
    pub a6: K,
}

impl<K: Field> EllipticModel<K> {
    pub fn short(a2: K, a4: K, a6: K) -> Self {
        EllipticModel { a1: K::zero(), a2, a3: K::zero(), a4, a6 }
    }

    pub fn b_invariants(&self) -> (K, K, K, K) {
        let b2 = self.a1.mul(&self.a1).add(&self.a2.scale(&Rat::from_int(4)));
        let b4 = self.a1.mul(&self.a3).add(&self.a4.scale(&Rat::from_int(2)));
        let b6 = self.a3.mul(&self.a3).add(&self.a6.scale(&Rat::from_int(4)));
        // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
        let b8 = self
            .a1
            .mul(&self.a1)
            .mul(&self.a6)
            .add(&self.a2.mul(&self.a6).scale(&Rat::from_int(4)))
            .sub(&self.a1.mul(&self.a3).mul(&self.a4))
            .add(&self.a2.mul(&self.a3).mul(&self.a3))
            .sub(&self.a4.mul(&self.a4));
        (b2, b4, b6, b8)
    }

    pub fn c_invariants(&self) -> (K, K) {
        let (b2, b4, b6, _) = self.b_invariants();
        let c4 = b2.mul(&b2).sub(&b4.scale(&Rat::from_int(24)));
        let c6 = b2
            .mul(&b2)
            .mul(&b2)
            .neg()
            .add(&b2.mul(&b4).scale(&Rat::from_int(36)))
            .sub(&b6.scale(&Rat::from_int(216)));
        (c4, c6)
    }

    pub fn discriminant(&self) -> K {
        let (b2, b4, b6, b8) = self.b_invariants();
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        b2.mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&b4.mul(&b4).mul(&b4).scale(&Rat::from_int(8)))
            .sub(&b6.mul(&b6).scale(&Rat::from_int(27)))
            .add(&b2.mul(&b4).mul(&b6).scale(&Rat::from_int(9)))
    }

    pub fn is_degenerate(&self) -> bool {
        self.discriminant().is_zero()
    }
}

/// j = c4^3 / Delta; errors on degenerate curves.
pub fn j_invariant<K: Field>(e: &EllipticModel<K>) -> Result<K> {
    let disc = e.discriminant();
    if disc.is_zero() {
        return Err(Error::Degenerate { witness: "discriminant = 0".into() });
    }
    let (c4, _) = e.c_invariants();
    Ok(c4.mul(&c4).mul(&c4).div(&disc))
}

/// y^2 = q(t) with q squarefree of degree 3 or 4.
#[derive(Clone, PartialEq, Debug)]
pub struct QuarticModel<K: Field> {
    pub q: UniPoly<K>,
}

impl<K: Field> QuarticModel<K> {
    pub fn new(q: UniPoly<K>) -> Result<Self> {
        if q.is_zero() || q.degree() < 3 || q.degree() > 4 {
            return Err(Error::OutOfRange(format!(
                "quartic model needs degree 3 or 4, got {}",
                q.degree()
            )));
        }
        Ok(QuarticModel { q })
    }

    /// Classical invariants I, J of the binary quartic
    /// a t^4 + b t^3 + c t^2 + d t + e.
    pub fn invariants(&self) -> (K, K) {
        let a = self.q.coeff(4);
        let b = self.q.coeff(3);
        let c = self.q.coeff(2);
        let d = self.q.coeff(1);
        let e = self.q.coeff(0);
        // I = 12ae - 3bd + c^2
        let i = a
            .mul(&e)
            .scale(&Rat::from_int(12))
            .sub(&b.mul(&d).scale(&Rat::from_int(3)))
            .add(&c.mul(&c));
        // J = 72ace - 27ad^2 - 27b^2e + 9bcd - 2c^3
        let j = a
            .mul(&c)
            .mul(&e)
            .scale(&Rat::from_int(72))
            .sub(&a.mul(&d).mul(&d).scale(&Rat::from_int(27)))
            .sub(&b.mul(&b).mul(&e).scale(&Rat::from_int(27)))
            .add(&b.mul(&c).mul(&d).scale(&Rat::from_int(9)))
            .sub(&c.mul(&c).mul(&c).scale(&Rat::from_int(2)));
        (i, j)
    }
}

/// Jacobian of a squarefree quartic: y^2 = x^3 - 27 I x - 27 J.
pub fn quartic_jacobian<K: Field>(q: &QuarticModel<K>) -> Result<EllipticModel<K>> {
    if !q.q.is_squarefree() {
        return Err(Error::Degenerate { witness: "quartic not squarefree".into() });
    }
    let (i, j) = q.invariants();
    Ok(EllipticModel::short(
        K::zero(),
        i.scale(&Rat::from_int(-27)),
        j.scale(&Rat::from_int(-27)),
    ))
}

/// Exact modular-polynomial isogeny test: Phi_N(j1, j2) = 0.
///
/// N = 1 is the convention j1 = j2.
pub fn isogenous_via_modular_poly(
    store: &ModularPolyStore,
    j1: &Rat,
    j2: &Rat,
    n: u32,
) -> Result<bool> {
    if n == 1 {
        return Ok(j1 == j2);
    }
    let phi = store.get(n)?;
    Ok(phi.eval(j1, j2).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qrat(v: &[i64]) -> QuarticModel<Rat> {
        QuarticModel::new(UniPoly::from_ints(v)).unwrap()
    }

    #[test]
    fn j_of_standard_curves() {
        // y^2 = x^3 + x -> j = 1728
        let e = EllipticModel::short(Rat::zero(), Rat::one(), Rat::zero());
        assert_eq!(j_invariant(&e).unwrap(), Rat::from_int(1728));
        // y^2 = x^3 + 1 -> j = 0
        let e = EllipticModel::short(Rat::zero(), Rat::zero(), Rat::one());
        assert_eq!(j_invariant(&e).unwrap(), Rat::zero());
        // degenerate
        let e = EllipticModel::short(Rat::zero(), Rat::zero(), Rat::zero());
        assert!(j_invariant(&e).is_err());
    }

    #[test]
    fn printed_cubic_has_expected_j() {
        // y^2 = x^3 + 4900x^2 + 7031500x + 2401000000
        let e = EllipticModel::short(
            Rat::from_int(4900),
            Rat::from_int(7031500),
            Rat::from_int(2401000000),
        );
        let j = j_invariant(&e).unwrap();
        assert_eq!(j, Rat::from_int(-32 * 7 * 17 * 17 * 17));
    }

    #[test]
    fn quartic_t4_plus_1_gives_j_1728() {
        let q = qrat(&[1, 0, 0, 0, 1]);
        let (i, j) = q.invariants();
        assert_eq!(i, Rat::from_int(12));
        assert_eq!(j, Rat::zero());
        let e = quartic_jacobian(&q).unwrap();
        assert_eq!(j_invariant(&e).unwrap(), Rat::from_int(1728));
    }

    #[test]
    fn quartic_j_invariant_under_translation() {
        // y^2 = (t^2+1)(t^2+4); substitute t -> t+1 and compare j
        let q1: UniPoly<Rat> =
            UniPoly::from_ints(&[1, 0, 1]).mul(&UniPoly::from_ints(&[4, 0, 1]));
        let e1 = quartic_jacobian(&QuarticModel::new(q1.clone()).unwrap()).unwrap();
        let shifted = q1.compose(&UniPoly::from_ints(&[1, 1]));
        let e2 = quartic_jacobian(&QuarticModel::new(shifted).unwrap()).unwrap();
        assert_eq!(j_invariant(&e1).unwrap(), j_invariant(&e2).unwrap());
    }

    #[test]
    fn non_squarefree_quartic_rejected() {
        let q: UniPoly<Rat> =
            UniPoly::from_ints(&[1, 2, 1]).mul(&UniPoly::from_ints(&[0, 0, 1]));
        assert!(quartic_jacobian(&QuarticModel::new(q).unwrap()).is_err());
    }
}
