//! Arithmetic in the completion of Q(t) at a finite place p(t): elements
//! are represented by polynomial representatives modulo p^N for a fixed
//! working precision N, with valuations recovered by exact division.

use crate::factor::factor_rational;
use crate::rat::Rat;
use crate::traits::{Field, Ring};
use crate::unipoly::{RatFun1, UniPoly};

type P = UniPoly<Rat>;

pub struct LocalCtx {
    /// monic irreducible uniformizer
    pub p: P,
    /// working precision: elements live mod p^prec
    pub prec: usize,
    pn: P,
}

impl LocalCtx {
    pub fn new(p: P, prec: usize) -> Self {
        assert!(prec >= 2);
        let pn = p.pow(prec as u32);
        LocalCtx { p, prec, pn }
    }

    pub fn deg(&self) -> usize {
        self.p.degree()
    }

    pub fn red(&self, f: &P) -> P {
        f.rem(&self.pn)
    }

    pub fn mul(&self, a: &P, b: &P) -> P {
        self.red(&a.mul(b))
    }

    /// Valuation of a nonzero element given by a polynomial representative;
    /// `None` when the representative vanishes mod p^prec.
    pub fn val(&self, f: &P) -> Option<usize> {
        let mut g = self.red(f);
        if g.is_zero() {
            return None;
        }
        let mut v = 0;
        loop {
            match g.div_exact(&self.p) {
                Some(q) => {
                    v += 1;
                    g = q;
                    if g.is_zero() {
                        return None;
                    }
                }
                None => return Some(v),
            }
        }
    }

    /// Exact division by p^k.
    pub fn div_pk(&self, f: &P, k: usize) -> P {
        let mut g = f.clone();
        for _ in 0..k {
            g = g.div_exact(&self.p).expect("division by p of a unit");
        }
        g
    }

    pub fn residue(&self, f: &P) -> P {
        f.rem(&self.p)
    }

    /// Inverse of a residue (mod p) via the extended Euclidean algorithm.
    pub fn res_inv(&self, f: &P) -> Option<P> {
        let r = self.residue(f);
        if r.is_zero() {
            return None;
        }
        let (g, u, _) = r.xgcd(&self.p);
        if g.degree() != 0 {
            return None;
        }
        // g is monic constant 1
        Some(u.rem(&self.p))
    }

    /// Inverse of a unit mod p^prec (Newton lifting from the residue).
    pub fn unit_inv(&self, u: &P) -> Option<P> {
        let mut z = self.res_inv(u)?;
        let two = P::constant(Rat::from_int(2));
        let mut k = 1;
        while k < self.prec {
            // z <- z (2 - u z)
            z = self.mul(&z, &two.sub(&self.mul(u, &z)));
            k *= 2;
        }
        Some(self.red(&z))
    }

    /// Split a rational function into (valuation, unit representative).
    /// `None` when the function is zero.
    pub fn of_ratfun(&self, f: &RatFun1<Rat>) -> Option<(i64, P)> {
        if f.is_zero() {
            return None;
        }
        let (vn, un) = self.split_poly(f.num());
        let (vd, ud) = self.split_poly(f.den());
        let inv = self.unit_inv(&ud).expect("denominator unit invertible");
        Some((vn as i64 - vd as i64, self.mul(&un, &inv)))
    }

    /// Value of a rational function with nonnegative valuation, as a
    /// representative mod p^prec. `None` on poles.
    pub fn value(&self, f: &RatFun1<Rat>) -> Option<P> {
        if f.is_zero() {
            return Some(P::zero());
        }
        let (v, u) = self.of_ratfun(f)?;
        if v < 0 {
            return None;
        }
        Some(self.red(&self.p.pow(v as u32).mul(&u)))
    }

    fn split_poly(&self, f: &P) -> (usize, P) {
        let mut g = f.clone();
        let mut v = 0;
        while let Some(q) = g.div_exact(&self.p) {
            g = q;
            v += 1;
            if g.is_zero() {
                break;
            }
        }
        (v, self.red(&g))
    }

    /// Square root of a residue class, if one exists in F = Q[t]/p.
    ///
    /// Trager's method: factor the norm of z^2 - a over Q (shifting
    /// z -> z + s*t until the norm is squarefree), then pull a linear
    /// factor back through a gcd over F.
    pub fn res_sqrt(&self, a: &P) -> Option<P> {
        let a = self.residue(a);
        if a.is_zero() {
            return Some(P::zero());
        }
        if self.deg() == 1 {
            // F = Q: evaluate at the root of the linear place
            let root = -&(&self.p.coeff(0) / &self.p.coeff(1));
            let val = a.eval(&root);
            return val.sqrt().map(P::constant);
        }
        for s in 0..16i64 {
            // G_s(z) = (z + s t)^2 - a = z^2 + 2 s t z + (s^2 t^2 - a)
            let st = P::from_ints(&[0, s]);
            let lin = st.scale(&Rat::from_int(2));
            let cst = st.mul(&st).sub(&a);
            // norm over Q: Res_t(p(t), G_s viewed as polynomial in t)
            let m = self.norm_of_quadratic(&lin, &cst);
            if m.is_zero() || !m.is_squarefree() {
                continue;
            }
            let fac = factor_rational(&m).ok()?;
            for (h, _) in &fac.factors {
                if h.degree() > self.deg() {
                    continue;
                }
                // gcd over F of G_s and h(z)
                let g_s = vec![self.residue(&cst), self.residue(&lin), P::one()];
                let hh: Vec<P> = h.coeffs().iter().map(|c| P::constant(c.clone())).collect();
                if let Some(g) = self.fz_gcd(&g_s, &hh) {
                    if poly_deg(&g) == 1 {
                        let inv = self.res_inv(&g[1])?;
                        let gamma = self.residue(&g[0].neg().mul(&inv));
                        let beta = self.residue(&gamma.add(&st));
                        if self.residue(&beta.mul(&beta).sub(&a)).is_zero() {
                            return Some(beta);
                        }
                    }
                }
            }
            return None; // squarefree norm with no linear factor over F
        }
        None
    }

    /// Res_t(p(t), z^2 + lin(t) z + cst(t)) as a polynomial in z.
    fn norm_of_quadratic(&self, lin: &P, cst: &P) -> P {
        let p_in_t: UniPoly<RatFun1<Rat>> = UniPoly::new(
            self.p
                .coeffs()
                .iter()
                .map(|c| RatFun1::constant(c.clone()))
                .collect(),
        );
        // G as a polynomial in t: coefficients are polynomials in z
        let zpoly = |c0: Rat, c1: Rat, c2: Rat| -> RatFun1<Rat> {
            RatFun1::from_poly(UniPoly::new(vec![c0, c1, c2]))
        };
        let deg = lin.degree().max(cst.degree());
        let mut coeffs: Vec<RatFun1<Rat>> = Vec::new();
        for i in 0..=deg {
            let c = zpoly(
                cst.coeff(i),
                lin.coeff(i),
                if i == 0 { Rat::one() } else { Rat::zero() },
            );
            coeffs.push(c);
        }
        let g_in_t: UniPoly<RatFun1<Rat>> = UniPoly::new(coeffs);
        let res = p_in_t.resultant(&g_in_t);
        res.as_poly().expect("resultant of polynomials")
    }

    /// gcd in F[z], F = Q[t]/p, coefficients as residue representatives.
    fn fz_gcd(&self, a: &[P], b: &[P]) -> Option<Vec<P>> {
        let norm = |v: &[P]| -> Vec<P> {
            let mut out: Vec<P> = v.iter().map(|c| self.residue(c)).collect();
            while out.last().map_or(false, |c| c.is_zero()) {
                out.pop();
            }
            out
        };
        let mut g0 = norm(a);
        let mut g1 = norm(b);
        while !g1.is_empty() {
            let r = self.fz_rem(&g0, &g1)?;
            g0 = g1;
            g1 = norm(&r);
        }
        Some(g0)
    }

    /// Remainder of polynomial division in F[z], F = Q[t]/p.
    fn fz_rem(&self, a: &[P], b: &[P]) -> Option<Vec<P>> {
        let db = poly_deg(b);
        let linv = self.res_inv(&b[db])?;
        let mut rem: Vec<P> = a.iter().map(|c| self.residue(c)).collect();
        while poly_deg(&rem) >= db && !rem.iter().all(|c| c.is_zero()) {
            let dr = poly_deg(&rem);
            if dr < db {
                break;
            }
            let q = self.residue(&rem[dr].mul(&linv));
            if q.is_zero() {
                rem.truncate(dr);
                if rem.is_empty() {
                    break;
                }
                continue;
            }
            for i in 0..=db {
                let t = self.residue(&rem[dr - db + i].sub(&q.mul(&b[i])));
                rem[dr - db + i] = t;
            }
            rem.truncate(dr);
            while rem.last().map_or(false, |c| self.residue(c).is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        Some(rem)
    }

    /// Hensel lift of a simple root: given poly g (coefficients mod p^prec)
    /// and a residue r0 with g(r0) = 0 mod p and g'(r0) a unit, lift to a
    /// root mod p^prec.
    pub fn hensel_root(&self, g: &[P], r0: &P) -> P {
        let dg: Vec<P> = (1..g.len())
            .map(|i| g[i].scale(&Rat::from_int(i as i64)))
            .collect();
        let eval = |c: &[P], x: &P| -> P {
            let mut acc = P::zero();
            for ci in c.iter().rev() {
                acc = self.red(&acc.mul(x).add(ci));
            }
            acc
        };
        let mut x = self.residue(r0);
        let mut k = 1;
        while k < self.prec {
            let fx = eval(g, &x);
            let dfx = eval(&dg, &x);
            let inv = self.unit_inv(&dfx).expect("simple root: derivative unit");
            x = self.red(&x.sub(&self.mul(&fx, &inv)));
            k *= 2;
        }
        x
    }

    /// Square root of a unit with square residue, mod p^prec.
    pub fn sqrt_unit(&self, u: &P) -> Option<P> {
        let r0 = self.res_sqrt(u)?;
        if self.residue(&r0).is_zero() {
            return None;
        }
        // Newton: x <- (x + u/x)/2
        let mut x = r0;
        let half = Rat::from_frac(1, 2);
        let mut k = 1;
        while k < self.prec {
            let xinv = self.unit_inv(&x)?;
            x = self.red(&x.add(&self.mul(u, &xinv)).scale(&half));
            k *= 2;
        }
        Some(x)
    }
}

fn poly_deg(v: &[UniPoly<Rat>]) -> usize {
    let mut d = 0;
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            d = i;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> P {
        P::from_ints(coeffs)
    }

    #[test]
    fn valuations_and_units() {
        // place t^2 + 1
        let ctx = LocalCtx::new(p(&[1, 0, 1]), 6);
        let f = p(&[1, 0, 1]).pow(3).mul(&p(&[7, 1]));
        assert_eq!(ctx.val(&f), Some(3));
        let u = p(&[3, 2]);
        let ui = ctx.unit_inv(&u).unwrap();
        assert_eq!(ctx.red(&u.mul(&ui)), P::one());
    }

    #[test]
    fn residue_sqrt_linear_place() {
        let ctx = LocalCtx::new(p(&[-2, 1]), 4); // t = 2
        // t^2 has residue 4, sqrt = 2
        let s = ctx.res_sqrt(&p(&[0, 0, 1])).unwrap();
        assert_eq!(s, P::constant(Rat::from_int(2)));
        assert!(ctx.res_sqrt(&p(&[0, 1])).is_none()); // residue 2 not square
    }

    #[test]
    fn residue_sqrt_quadratic_place() {
        // F = Q[t]/(t^2 - 2); residue of 2 has sqrt t
        let ctx = LocalCtx::new(p(&[-2, 0, 1]), 4);
        let s = ctx.res_sqrt(&p(&[2])).unwrap();
        // s = ±t
        let ok = s == p(&[0, 1]) || s == p(&[0, -1]);
        assert!(ok, "got {:?}", s);
        // 3 is not a square in Q(sqrt 2)
        assert!(ctx.res_sqrt(&p(&[3])).is_none());
    }

    #[test]
    fn hensel_sqrt() {
        // sqrt of 1 + t around the place t (should match the binomial series)
        let ctx = LocalCtx::new(p(&[0, 1]), 8);
        let s = ctx.sqrt_unit(&p(&[1, 1])).unwrap();
        let sq = ctx.red(&s.mul(&s));
        assert_eq!(sq, ctx.red(&p(&[1, 1])));
        assert_eq!(s.coeff(0), Rat::from_int(1));
        assert_eq!(s.coeff(1), Rat::from_frac(1, 2));
        assert_eq!(s.coeff(2), Rat::from_frac(-1, 8));
    }

    #[test]
    fn hensel_root_of_cubic() {
        // root of x^2 - (1+t) near x = 1 at place t
        let ctx = LocalCtx::new(p(&[0, 1]), 8);
        let g = vec![p(&[-1, -1]), P::zero(), P::one()];
        let r = ctx.hensel_root(&g, &P::one());
        let check = ctx.red(&r.mul(&r).sub(&p(&[1, 1])));
        assert!(check.is_zero());
    }
}
