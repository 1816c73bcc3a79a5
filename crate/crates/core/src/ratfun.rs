//! Multivariate rational functions over the rationals.
//!
//! Canonical form: numerator and denominator coprime, denominator primitive
//! with integer coefficients and positive leading coefficient under the
//! graded-lex order.

use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use crate::traits::{Field, Ring};
use crate::vars::VarId;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFun { num, den };
        rf.reduce();
        rf
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFun { num: p, den: MultiPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn variable(v: VarId) -> Self {
        Self::from_poly(MultiPoly::variable(v))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        let g = MultiPoly::gcd(&self.num, &self.den);
        if !g.is_constant() {
            self.num = self.num.div_exact(&g).expect("gcd divides num");
            self.den = self.den.div_exact(&g).expect("gcd divides den");
        }
        // denominator: primitive integer, positive leading coefficient
        let (c, prim) = self.den.primitive();
        self.den = prim;
        self.num = self.num.scale(&c.recip().unwrap());
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<MultiPoly> {
        if self.is_poly() {
            let c = self.den.as_constant().unwrap();
            Some(self.num.scale(&c.recip().unwrap()))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut v = self.num.vars().to_vec();
        for w in self.den.vars() {
            if !v.contains(w) {
                v.push(*w);
            }
        }
        v.sort();
        v
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("zero to a negative power").pow(-e);
        }
        RatFun::new(self.num.pow(e as u32), self.den.pow(e as u32))
    }

    /// Evaluate at a full assignment; `None` when the denominator vanishes.
    pub fn eval(&self, assign: &[(VarId, Rat)]) -> Option<Rat> {
        let d = self.den.eval(assign)?;
        if d.is_zero() {
            return None;
        }
        let n = self.num.eval(assign)?;
        Some(&n / &d)
    }

    /// Substitute a rational for one variable; `None` when the denominator
    /// vanishes identically after the substitution.
    pub fn specialize(&self, v: VarId, x: &Rat) -> Option<Self> {
        let d = self.den.specialize(v, x);
        if d.is_zero() {
            return None;
        }
        Some(RatFun::new(self.num.specialize(v, x), d))
    }

    /// Substitute rational functions for variables (simultaneous).
    pub fn subst(&self, map: &[(VarId, RatFun)]) -> Self {
        let n = subst_poly(&self.num, map);
        let d = subst_poly(&self.den, map);
        assert!(!d.is_zero(), "substitution makes denominator vanish identically");
        n.mul(&d.inv().expect("denominator zero after substitution"))
    }

    /// Exact square root, if `self` is a square in the rational function
    /// field.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.num.is_zero() {
            return Some(Self::zero());
        }
        // num/den = (num*den)/den^2; a square iff num*den is a square poly
        let prod = self.num.mul(&self.den);
        let r = prod.sqrt_exact()?;
        Some(RatFun::new(r, self.den.clone()))
    }
}

/// Substitute rational functions for the variables of a polynomial.
pub fn subst_poly(p: &MultiPoly, map: &[(VarId, RatFun)]) -> RatFun {
    if p.is_zero() {
        return RatFun::zero();
    }
    let vars: Vec<VarId> = p.vars().to_vec();
    let images: Vec<RatFun> = vars
        .iter()
        .map(|v| {
            map.iter()
                .find(|(w, _)| w == v)
                .map(|(_, f)| f.clone())
                .unwrap_or_else(|| RatFun::variable(*v))
        })
        .collect();
    let degs: Vec<usize> = vars.iter().map(|v| p.degree_in(*v)).collect();
    // cached powers of numerators and denominators
    let mut npows: Vec<Vec<MultiPoly>> = Vec::new();
    let mut dpows: Vec<Vec<MultiPoly>> = Vec::new();
    for (i, f) in images.iter().enumerate() {
        let mut np = vec![MultiPoly::one()];
        let mut dp = vec![MultiPoly::one()];
        for k in 1..=degs[i] {
            np.push(np[k - 1].mul(f.num()));
            dp.push(dp[k - 1].mul(f.den()));
        }
        npows.push(np);
        dpows.push(dp);
    }
    let mut acc_num = MultiPoly::zero();
    for (expv, c) in p.terms() {
        let mut term = MultiPoly::constant(c.clone());
        for (i, &e) in expv.iter().enumerate() {
            let e = e as usize;
            term = term.mul(&npows[i][e]).mul(&dpows[i][degs[i] - e]);
        }
        acc_num = acc_num.add(&term);
    }
    let mut full_den = MultiPoly::one();
    for (i, dp) in dpows.iter().enumerate() {
        full_den = full_den.mul(&dp[degs[i]]);
    }
    RatFun::new(acc_num, full_den)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.as_poly().unwrap())
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(n))
    }
    fn add(&self, other: &Self) -> Self {
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        // cross-reduce before multiplying to keep intermediates small
        let g1 = MultiPoly::gcd(&self.num, &other.den);
        let g2 = MultiPoly::gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFun::new(n1.mul(&n2), d1.mul(&d2))
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()))
        }
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }
    fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RatFun { num: self.num.scale(k), den: self.den.clone() }
    }
}

impl Field for RatFun {}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::from_int(n)
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.as_constant().and_then(|c| c.recip()).map(MultiPoly::constant)
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }
    fn scale(&self, k: &Rat) -> Self {
        MultiPoly::scale(self, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_ratfun};
    use crate::vars::var;

    #[test]
    fn normalization_is_canonical() {
        let f = RatFun::new(parse_poly("2*r^2 - 2*s^2").unwrap(), parse_poly("4*r + 4*s").unwrap());
        assert_eq!(f.to_string(), "1/2*r - 1/2*s");
        let g = RatFun::new(parse_poly("r").unwrap(), parse_poly("-2*s").unwrap());
        assert_eq!(g.den().to_string(), "s");
        assert_eq!(g.num().to_string(), "-1/2*r");
        let idempotent = RatFun::new(g.num().clone(), g.den().clone());
        assert_eq!(g, idempotent);
    }

    #[test]
    fn field_ops() {
        let f = parse_ratfun("(r + s)/(r - s)").unwrap();
        let g = f.inv().unwrap();
        assert!(f.mul(&g).is_one());
        let h = f.sub(&f);
        assert!(h.is_zero());
    }

    #[test]
    fn square_root() {
        let f = parse_ratfun("(r^2 + 2*r*s + s^2)/(4*r^2)").unwrap();
        let r = f.sqrt_exact().unwrap();
        assert_eq!(r.mul(&r), f);
        assert!(parse_ratfun("r").unwrap().sqrt_exact().is_none());
    }

    #[test]
    fn substitution() {
        // r -> t^2, s -> 1/t in r*s^2 gives 1 at any t... no: t^2 * t^-2 = 1
        let p = parse_poly("r*s^2").unwrap();
        let map = [
            (var("r"), parse_ratfun("t^2").unwrap()),
            (var("s"), parse_ratfun("1/t").unwrap()),
        ];
        let out = subst_poly(&p, &map);
        assert!(out.is_one());
    }
}
