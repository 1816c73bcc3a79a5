//! Ring and field abstractions used by the generic containers
//! (`UniPoly`, `TruncatedSeries`, rational function fields).

use crate::rat::Rat;
use std::fmt::{Debug, Display};

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, when the element is a unit.
    fn inv(&self) -> Option<Self>;
    /// Exact square root, when one exists in the ring.
    fn sqrt(&self) -> Option<Self>;
    /// Multiplication by an exact rational scalar (all our rings are
    /// Q-algebras).
    fn scale(&self, k: &Rat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Optional fast polynomial gcd on dense coefficient vectors
    /// (low-to-high) over this ring, returning a monic gcd. The generic
    /// monic Euclidean algorithm suffers severe coefficient growth over Q,
    /// so `Rat` overrides this with an integer primitive remainder
    /// sequence.
    fn slice_gcd(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>>
    where
        Self: Sized,
    {
        None
    }
}

/// Marker for rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_int(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn sqrt(&self) -> Option<Self> {
        Rat::sqrt(self)
    }
    fn scale(&self, k: &Rat) -> Self {
        self * k
    }
    fn slice_gcd(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        Some(rat_poly_gcd(a, b))
    }
}

impl Field for Rat {}

/// Monic gcd of rational polynomials via a primitive pseudo-remainder
/// sequence over the integers.
fn rat_poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;

    fn clear(v: &[Rat]) -> Vec<BigInt> {
        let mut lcm = BigInt::from(1);
        for c in v {
            lcm = lcm.lcm(c.denom());
        }
        let mut out: Vec<BigInt> = v
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        while out.last().map_or(false, |c| c.is_zero()) {
            out.pop();
        }
        // primitive part
        let mut g = BigInt::zero();
        for c in &out {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            for c in out.iter_mut() {
                *c = &*c / &g;
            }
        }
        out
    }

    fn prim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        let mut g = BigInt::zero();
        for c in &v {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            for c in v.iter_mut() {
                *c = &*c / &g;
            }
        }
        v
    }

    // pseudo-remainder: lc(b)^(da-db+1) * a mod b
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let lb = b.last().unwrap().clone();
        let mut r = a.to_vec();
        let mut k = da as i64 - db as i64 + 1;
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            if dr < db {
                break;
            }
            let lead = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c = &*c * &lb;
            }
            for i in 0..=db {
                let t = &r[dr - db + i] - &(&lead * &b[i]);
                r[dr - db + i] = t;
            }
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
            k -= 1;
        }
        let _ = k;
        r
    }

    let mut x = clear(a);
    let mut y = clear(b);
    if x.is_empty() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.is_empty() {
        // monic normalization of x
        if x.is_empty() {
            return Vec::new();
        }
        let lead = Rat::from_bigint(x.last().unwrap().clone());
        return x
            .iter()
            .map(|c| &Rat::from_bigint(c.clone()) / &lead)
            .collect();
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = prim(prem(&x, &y));
        if r.is_empty() {
            let lead = Rat::from_bigint(y.last().unwrap().clone());
            return y
                .iter()
                .map(|c| &Rat::from_bigint(c.clone()) / &lead)
                .collect();
        }
        x = y;
        y = r;
    }
}

/// Quadratic extension Q(sqrt(d)) represented as a + b*sqrt(d).
///
/// `d = 0` denotes a plain rational (the extension tag is adopted from the
/// other operand on mixed arithmetic), so constants like `zero()` work
/// without carrying a context.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    pub d: i64,
}

impl QuadExt {
    pub fn rational(a: Rat) -> Self {
        QuadExt { a, b: Rat::zero(), d: 0 }
    }

    pub fn new(a: Rat, b: Rat, d: i64) -> Self {
        let d = if b.is_zero() { 0 } else { d };
        QuadExt { a, b, d }
    }

    pub fn sqrt_d(d: i64) -> Self {
        QuadExt { a: Rat::zero(), b: Rat::one(), d }
    }

    fn join(&self, other: &Self) -> i64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d1, d2) => {
                assert_eq!(d1, d2, "mixed quadratic extensions");
                d1
            }
        }
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Norm a^2 - d b^2 down to Q.
    pub fn norm(&self) -> Rat {
        &(&self.a * &self.a) - &(&Rat::from_int(self.d) * &(&self.b * &self.b))
    }
}

impl Display for QuadExt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }
    fn one() -> Self {
        QuadExt::rational(Rat::one())
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::rational(Rat::from_int(n))
    }
    fn add(&self, other: &Self) -> Self {
        QuadExt::new(&self.a + &other.a, &self.b + &other.b, self.join(other))
    }
    fn sub(&self, other: &Self) -> Self {
        QuadExt::new(&self.a - &other.a, &self.b - &other.b, self.join(other))
    }
    fn mul(&self, other: &Self) -> Self {
        let d = self.join(other);
        let dd = Rat::from_int(d);
        QuadExt::new(
            &(&self.a * &other.a) + &(&dd * &(&self.b * &other.b)),
            &(&self.a * &other.b) + &(&self.b * &other.a),
            d,
        )
    }
    fn neg(&self) -> Self {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        let ninv = n.recip()?;
        Some(QuadExt::new(&self.a * &ninv, -&(&self.b * &ninv), self.d))
    }
    fn sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt() {
                return Some(QuadExt::rational(r));
            }
            if self.d != 0 && !self.a.is_zero() {
                // a = d*c^2 gives sqrt = c*sqrt(d)
                let q = &self.a / &Rat::from_int(self.d);
                if let Some(c) = q.sqrt() {
                    return Some(QuadExt::new(Rat::zero(), c, self.d));
                }
            }
            return None;
        }
        // (x + y sqrt(d))^2 = a + b sqrt(d): x^2 = (a +- sqrt(a^2 - d b^2))/2
        let disc = self.norm().sqrt()?;
        for sgn in [Rat::one(), -Rat::one()] {
            let x2 = &(&self.a + &(&sgn * &disc)) / &Rat::from_int(2);
            if let Some(x) = x2.sqrt() {
                if !x.is_zero() {
                    let y = &self.b / &(&Rat::from_int(2) * &x);
                    return Some(QuadExt::new(x, y, self.d));
                }
            }
        }
        None
    }
    fn scale(&self, k: &Rat) -> Self {
        QuadExt { a: &self.a * k, b: &self.b * k, d: self.d }
    }
}

impl Field for QuadExt {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_ext_arithmetic() {
        let s = QuadExt::sqrt_d(-3);
        let x = s.mul(&s);
        assert_eq!(x, QuadExt::from_i64(-3));
        let y = QuadExt::new(Rat::from_int(2), Rat::from_int(5), -3);
        let yi = y.inv().unwrap();
        assert!(y.mul(&yi).is_one());
    }
}
