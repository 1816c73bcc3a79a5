//! Dense univariate polynomials over an abstract coefficient ring, and the
//! univariate rational function field built on top of them.

use crate::rat::Rat;
use crate::traits::{Field, Ring};
use std::fmt;

/// Dense univariate polynomial, coefficients low-to-high, leading
/// coefficient nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq)]
pub struct UniPoly<K: Ring> {
    coeffs: Vec<K>,
}

impl<K: Ring> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![K::one()] }
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![K::zero(), K::one()] }
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&n| K::from_i64(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn constant_term(&self) -> K {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn mul_k(&self, k: &K) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Multiply by x^n.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.scale(&Rat::from_int(i as i64)));
        }
        Self::new(out)
    }

    /// Coefficients reversed: x^n * p(1/x) for n = deg p.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<K: Field> UniPoly<K> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().inv().unwrap();
        self.mul_k(&inv)
    }

    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.degree() < divisor.degree() || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let dlead_inv = divisor.leading().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut quot = vec![K::zero(); self.degree() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&dlead_inv);
            quot[i - dd] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].sub(&q.mul(dc));
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        if let Some(g) = K::slice_gcd(self.coeffs(), other.coeffs()) {
            return Self::new(g);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) monic with u*self + v*other = g.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let ns = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = ns;
            let nt = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let linv = r0.leading().inv().unwrap();
        (r0.mul_k(&linv), s0.mul_k(&linv), t0.mul_k(&linv))
    }

    /// Squarefree part (monic).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Resultant via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> K {
        let mut a = self.clone();
        let mut b = other.clone();
        if a.is_zero() || b.is_zero() {
            return K::zero();
        }
        let mut acc = K::one();
        let mut sign_flips = 0usize;
        while b.degree() > 0 {
            let r = a.rem(&b);
            if r.is_zero() {
                return K::zero();
            }
            let da = a.degree();
            let db = b.degree();
            let dr = r.degree();
            // res(a,b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
            sign_flips += da * db;
            let mut lc_pow = K::one();
            for _ in 0..(da - dr) {
                lc_pow = lc_pow.mul(&b.leading());
            }
            acc = acc.mul(&lc_pow);
            a = b;
            b = r;
        }
        // b is a nonzero constant: res(a, c) = c^deg(a)
        let mut cpow = K::one();
        for _ in 0..a.degree() {
            cpow = cpow.mul(&b.leading());
        }
        acc = acc.mul(&cpow);
        if sign_flips % 2 == 1 {
            acc = acc.neg();
        }
        acc
    }

    /// disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f).
    pub fn discriminant(&self) -> K {
        let d = self.degree();
        if d == 0 {
            return K::zero();
        }
        let res = self.resultant(&self.derivative());
        let lead_inv = self.leading().inv().unwrap();
        let mut out = res.mul(&lead_inv);
        if (d * (d - 1) / 2) % 2 == 1 {
            out = out.neg();
        }
        out
    }

    /// Exact square root when the polynomial is a perfect square (leading
    /// coefficient must have a square root in K).
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = self.degree();
        if d % 2 != 0 {
            return None;
        }
        let lead = self.leading().sqrt()?;
        let half = d / 2;
        // Solve coefficientwise from the top.
        let mut root = vec![K::zero(); half + 1];
        root[half] = lead;
        let two = K::from_i64(2);
        let top_inv = root[half].mul(&two).inv()?;
        for i in (0..half).rev() {
            // coefficient of x^(i+half) in root^2 must match self;
            // convolution over known entries j,k > i with j + k = i + half
            let mut acc = self.coeff(i + half);
            let mut conv = K::zero();
            let target = i + half;
            for j in (i + 1)..=half {
                if target < j {
                    continue;
                }
                let k = target - j;
                if k <= i || k > half {
                    continue;
                }
                if k < j {
                    continue;
                }
                let prod = root[j].mul(&root[k]);
                if j == k {
                    conv = conv.add(&prod);
                } else {
                    conv = conv.add(&prod.mul(&two));
                }
            }
            acc = acc.sub(&conv);
            root[i] = acc.mul(&top_inv);
        }
        let cand = Self::new(root);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }

    /// Render with a chosen variable name (canonical text form for K = Rat).
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = format!("{}", c);
            let neg = s.starts_with('-');
            let mag = if neg { s[1..].to_string() } else { s };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let needs_coeff = i == 0 || mag != "1";
            let wrap = mag.contains(['+', '-', ' ', '/'].as_ref()) && i > 0 && mag != "1";
            if needs_coeff {
                if wrap {
                    out.push('(');
                    out.push_str(&mag);
                    out.push(')');
                } else {
                    out.push_str(&mag);
                }
            }
            if i > 0 {
                if needs_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }
}

impl UniPoly<Rat> {
    /// Positive rational content and primitive integer part.
    pub fn primitive(&self) -> (Rat, UniPoly<Rat>) {
        if self.is_zero() {
            return (Rat::zero(), Self::zero());
        }
        let mut c = Rat::zero();
        for coef in &self.coeffs {
            c = c.gcd(coef);
        }
        if self.leading().is_negative() {
            c = -c;
        }
        let inv = c.recip().unwrap();
        (c, self.scale(&inv))
    }
}

impl<K: Ring> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*X^{}", c, i)?;
            }
        }
        Ok(())
    }
}

impl<K: Ring> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Univariate rational function over a field: numerator / monic-normalized
/// denominator in lowest terms.
#[derive(Clone, PartialEq)]
pub struct RatFun1<K: Field> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Field> RatFun1<K> {
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = RatFun1 { num, den };
        out.reduce();
        out
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        RatFun1 { num: p, den: UniPoly::one() }
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 {
            self.num = self.num.div_exact(&g).unwrap();
            self.den = self.den.div_exact(&g).unwrap();
        }
        let linv = self.den.leading().inv().unwrap();
        self.num = self.num.mul_k(&linv);
        self.den = self.den.mul_k(&linv);
    }

    pub fn num(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<K> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == 0
    }

    pub fn as_poly(&self) -> Option<UniPoly<K>> {
        if self.is_poly() {
            Some(self.num.mul_k(&self.den.leading().inv().unwrap()))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        let n = self.num.eval(x);
        d.inv().map(|di| n.mul(&di))
    }

    /// Substitute a rational function for the variable.
    pub fn compose_rf(&self, inner: &RatFun1<K>) -> RatFun1<K> {
        let dn = self.num.degree().max(self.den.degree());
        // p(n/d) * d^dn  homogenization
        let hom = |p: &UniPoly<K>| -> UniPoly<K> {
            let mut acc = UniPoly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = inner.num.pow(i as u32).mul(&inner.den.pow((dn - i) as u32));
                acc = acc.add(&t.mul_k(c));
            }
            acc
        };
        RatFun1::new(hom(&self.num), hom(&self.den))
    }

    pub fn derivative(&self) -> RatFun1<K> {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RatFun1::new(n, self.den.mul(&self.den))
    }
}

impl<K: Field> fmt::Display for RatFun1<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<K: Field> fmt::Debug for RatFun1<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<K: Field> Ring for RatFun1<K> {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(UniPoly::constant(K::from_i64(n)))
    }
    fn add(&self, other: &Self) -> Self {
        RatFun1::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun1::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun1::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFun1 { num: self.num.neg(), den: self.den.clone() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun1::new(self.den.clone(), self.num.clone()))
        }
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // factor out squarefree structure of num and den separately
        let n = self.num.sqrt_exact();
        let d = self.den.sqrt_exact();
        match (n, d) {
            (Some(n), Some(d)) => Some(RatFun1::new(n, d)),
            _ => {
                // allow a unit adjustment: num/den = (n1/d1)^2 * c with c in K
                sqrt_general(self)
            }
        }
    }
    fn scale(&self, k: &Rat) -> Self {
        RatFun1 { num: self.num.scale(k), den: self.den.clone() }
    }
}

/// Square root of a univariate rational function via squarefree
/// decomposition over K.
fn sqrt_general<K: Field>(f: &RatFun1<K>) -> Option<RatFun1<K>> {
    let decompose = |p: &UniPoly<K>| -> Option<(K, UniPoly<K>)> {
        // p = c * (squarefree factors to powers); extract sqrt of the even part
        let mut rest = p.monic();
        let c = p.leading();
        let mut root = UniPoly::<K>::one();
        loop {
            if rest.degree() == 0 {
                return Some((c, root));
            }
            let g = rest.gcd(&rest.derivative());
            if g.degree() == 0 {
                // squarefree remainder must be trivial for a perfect square
                return if rest.degree() == 0 { Some((c, root)) } else { None };
            }
            // rest = g * (rest/g); a perfect square iff g^2 | rest and
            // rest/g^2 is a perfect square (recursively handled by loop)
            let g2 = g.mul(&g);
            match rest.div_exact(&g2) {
                Some(q) => {
                    root = root.mul(&g);
                    rest = q;
                }
                None => return None,
            }
        }
    };
    let (cn, rn) = decompose(f.num())?;
    let (cd, rd) = decompose(f.den())?;
    let unit = cn.mul(&cd.inv()?);
    let us = unit.sqrt()?;
    let cand = RatFun1::new(rn.mul_k(&us), rd);
    // verify
    let sq = cand.mul(&cand);
    if sq == *f {
        Some(cand)
    } else {
        None
    }
}

impl<K: Field> Field for RatFun1<K> {}

#[cfg(test)]
mod tests {
    use super::*;

    type P = UniPoly<Rat>;

    #[test]
    fn divrem_and_gcd() {
        let f = P::from_ints(&[-1, 0, 1]); // x^2 - 1
        let g = P::from_ints(&[1, 1]); // x + 1
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, P::from_ints(&[-1, 1]));
        assert_eq!(f.gcd(&g), g.monic());
    }

    #[test]
    fn discriminant_of_quadratic() {
        // ax^2 + bx + c -> b^2 - 4ac
        let f = P::from_ints(&[5, -3, 2]);
        assert_eq!(f.discriminant(), Rat::from_int(9 - 40));
    }

    #[test]
    fn sqrt_exact_poly() {
        let f = P::from_ints(&[1, 2, 1]); // (x+1)^2
        assert_eq!(f.sqrt_exact().unwrap(), P::from_ints(&[1, 1]));
        let g = P::from_ints(&[0, 0, 9]);
        assert_eq!(g.sqrt_exact().unwrap(), P::from_ints(&[0, 3]));
        assert!(P::from_ints(&[1, 1]).sqrt_exact().is_none());
    }

    #[test]
    fn ratfun1_square_root() {
        let f = RatFun1::new(P::from_ints(&[1, 2, 1]), P::from_ints(&[0, 0, 4]));
        let r = f.sqrt().unwrap();
        assert_eq!(r.mul(&r), f);
        let not_sq = RatFun1::new(P::from_ints(&[0, 1]), P::one());
        assert!(not_sq.sqrt().is_none());
    }

    #[test]
    fn resultant_known_value() {
        // res(x^2 - 1, x - 2) = value of x^2-1 at 2 => 3
        let f = P::from_ints(&[-1, 0, 1]);
        let g = P::from_ints(&[-2, 1]);
        assert_eq!(f.resultant(&g), Rat::from_int(3));
    }
}
