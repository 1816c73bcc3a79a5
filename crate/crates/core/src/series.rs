//! Truncated formal power series over an abstract commutative ring.
//!
//! A series carries its truncation order: `coeffs[i]` is the coefficient of
//! x^i for i < order, and arithmetic results carry the minimum order of the
//! operands.

use crate::error::Error;
use crate::rat::Rat;
use crate::traits::Ring;
use crate::Result;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    pub fn x(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// Truncation order (number of known coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> R {
        assert!(i < self.order(), "coefficient beyond truncation order");
        self.coeffs[i].clone()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::new(self.coeffs[..order].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Order of vanishing; `None` if zero to the truncation order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..n).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect();
        Self::new(coeffs, n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..n).map(|i| self.coeffs[i].sub(&other.coeffs[i])).collect();
        Self::new(coeffs, n)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n];
        for i in 0..n.min(self.coeffs.len()) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..(n - i).min(other.coeffs.len()) {
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Self::new(out, n)
    }

    pub fn mul_k(&self, k: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(k)).collect(), self.order())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect(), self.order())
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        let c0i = c0
            .inv()
            .ok_or_else(|| Error::NotASquare("series constant term not invertible".into()))?;
        let n = self.order();
        let mut out = vec![R::zero(); n];
        out[0] = c0i.clone();
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.neg().mul(&c0i);
        }
        Ok(Self::new(out, n))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Square root with result^2 = self to the truncation order.
    /// The constant term must be a nonzero square with invertible root.
    pub fn sqrt(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::NotASquare("series constant term is zero".into()));
        }
        let r0 = c0
            .sqrt()
            .ok_or_else(|| Error::NotASquare(format!("constant term {c0} is not a square")))?;
        let n = self.order();
        let two_r0_inv = r0
            .add(&r0)
            .inv()
            .ok_or_else(|| Error::NotASquare("2*sqrt(c0) not invertible".into()))?;
        let mut out = vec![R::zero(); n];
        out[0] = r0;
        for k in 1..n {
            // coefficient of x^k in out^2 must equal self[k]
            let mut conv = R::zero();
            for j in 1..k {
                conv = conv.add(&out[j].mul(&out[k - j]));
            }
            let rhs = self.coeffs[k].sub(&conv);
            out[k] = rhs.mul(&two_r0_inv);
        }
        Ok(Self::new(out, n))
    }

    /// Formal derivative (order drops by one).
    pub fn derivative(&self) -> Self {
        if self.order() <= 1 {
            return Self::zero(0);
        }
        let coeffs = (1..self.order())
            .map(|i| self.coeffs[i].scale(&Rat::from_int(i as i64)))
            .collect();
        Self::new(coeffs, self.order() - 1)
    }

    /// Formal antiderivative with zero constant term (order grows by one).
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rat::from_frac(1, (i + 1) as i64)));
        }
        Self::new(coeffs, self.order() + 1)
    }

    /// Composition self(inner); `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeff(0).is_zero(),
            "composition requires zero constant term"
        );
        let n = self.order().min(inner.order());
        let mut acc = Self::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(&inner.truncate(n));
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        acc
    }

    /// Compositional inverse: returns g with self(g(x)) = x to the
    /// truncation order. Requires zero constant term and invertible linear
    /// coefficient.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NotASquare(
                "reversion requires zero constant term".into(),
            ));
        }
        let n = self.order();
        if n < 2 {
            return Err(Error::OutOfRange("reversion needs order >= 2".into()));
        }
        let c1 = self.coeff(1);
        let c1i = c1
            .inv()
            .ok_or_else(|| Error::NotASquare("linear coefficient not invertible".into()))?;
        // build g degree by degree: g = sum g_k x^k with g_1 = 1/c1
        let mut g = Self::zero(n);
        g.coeffs[1] = c1i.clone();
        for k in 2..n {
            // coefficient of x^k in f(g) must vanish; it is
            // c1 * g_k + (terms from higher f-coefficients using g_1..g_{k-1})
            let partial = self
                .truncate(k + 1)
                .compose(&g.truncate(k).extend(k + 1));
            // partial agrees with x up to x^{k-1}; next discrepancy at x^k
            let delta = partial.coeff(k);
            g.coeffs[k] = delta.neg().mul(&c1i);
        }
        Ok(g)
    }

    /// Extend with zero coefficients (the added coefficients are only valid
    /// when the series is known to be polynomial up to the new order; used
    /// internally for triangular solves).
    fn extend(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, R::zero());
        Self::new(coeffs, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncatedSeries<Rat>;

    fn geom(n: usize) -> S {
        // 1/(1-x) = 1 + x + x^2 + ...
        S::new(vec![Rat::one(); n], n)
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let f = S::new(vec![Rat::one(), -Rat::one()], 8);
        assert_eq!(f.inv().unwrap(), geom(8));
    }

    #[test]
    fn sqrt_of_one_plus_2x() {
        let f = S::new(vec![Rat::one(), Rat::from_int(2)], 6);
        let r = f.sqrt().unwrap();
        assert_eq!(r.mul(&r), f);
        // 1 + x - x^2/2 + x^3/2 ...
        assert_eq!(r.coeff(1), Rat::one());
        assert_eq!(r.coeff(2), Rat::from_frac(-1, 2));
        assert_eq!(r.coeff(3), Rat::from_frac(1, 2));
    }

    #[test]
    fn sqrt_of_one_is_one() {
        let f = S::one(5);
        assert_eq!(f.sqrt().unwrap(), S::one(5));
    }

    #[test]
    fn reversion_of_x_minus_x2() {
        let f = S::new(vec![Rat::zero(), Rat::one(), -Rat::one()], 6);
        let g = f.reversion().unwrap();
        // x + x^2 + 2x^3 + 5x^4 + 14 x^5 (Catalan numbers)
        assert_eq!(g.coeff(1), Rat::one());
        assert_eq!(g.coeff(2), Rat::one());
        assert_eq!(g.coeff(3), Rat::from_int(2));
        assert_eq!(g.coeff(4), Rat::from_int(5));
        assert_eq!(g.coeff(5), Rat::from_int(14));
        // composition check
        let comp = f.compose(&g);
        assert_eq!(comp, S::x(6));
        let id = S::x(6);
        assert_eq!(g.compose(&f.truncate(6)), id);
    }

    #[test]
    fn reversion_of_x_is_x() {
        let f = S::x(5);
        assert_eq!(f.reversion().unwrap(), S::x(5));
    }

    #[test]
    fn integral_then_derivative() {
        let f = S::new(vec![Rat::from_int(3), Rat::from_int(5)], 4);
        let g = f.integral().derivative();
        assert_eq!(g.truncate(4), f);
    }
}
