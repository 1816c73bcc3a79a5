//! Elliptic surfaces y^2 = x^3 + a2(t) x^2 + a4(t) x + a6(t) over a
//! rational function field: singular-fiber classification by the
//! characteristic-zero valuation table, Euler numbers, section
//! verification, Shioda height pairings and Mordell-Weil summaries.

pub mod height;
pub mod local;

use crate::error::Error;
use crate::factor::factor_rational;
use crate::rat::Rat;
use crate::traits::{Field, Ring};  // Ring supplies coefficient ops
use crate::unipoly::{RatFun1, UniPoly};
use crate::Result;
use std::fmt;

/// Weierstrass model over K(t) with coefficient degree bounds
/// deg(a_i) <= i*chi.
#[derive(Clone, Debug)]
pub struct EllipticSurface<K: Field> {
    pub a2: UniPoly<K>,
    pub a4: UniPoly<K>,
    pub a6: UniPoly<K>,
    pub chi: usize,
}

impl<K: Field> EllipticSurface<K> {
    pub fn new(a2: UniPoly<K>, a4: UniPoly<K>, a6: UniPoly<K>, chi: usize) -> Result<Self> {
        if a2.degree() > 2 * chi || a4.degree() > 4 * chi || a6.degree() > 6 * chi {
            return Err(Error::OutOfRange(format!(
                "coefficient degrees ({}, {}, {}) exceed the chi = {chi} bounds",
                a2.degree(),
                a4.degree(),
                a6.degree()
            )));
        }
        Ok(EllipticSurface { a2, a4, a6, chi })
    }

    pub fn c4(&self) -> UniPoly<K> {
        // c4 = 16 a2^2 - 48 a4
        self.a2
            .mul(&self.a2)
            .scale(&Rat::from_int(16))
            .sub(&self.a4.scale(&Rat::from_int(48)))
    }

    pub fn c6(&self) -> UniPoly<K> {
        // c6 = -64 a2^3 + 288 a2 a4 - 864 a6
        self.a2
            .mul(&self.a2)
            .mul(&self.a2)
            .scale(&Rat::from_int(-64))
            .add(&self.a2.mul(&self.a4).scale(&Rat::from_int(288)))
            .sub(&self.a6.scale(&Rat::from_int(864)))
    }

    pub fn delta(&self) -> UniPoly<K> {
        // (c4^3 - c6^2)/1728
        let c4 = self.c4();
        let c6 = self.c6();
        c4.mul(&c4)
            .mul(&c4)
            .sub(&c6.mul(&c6))
            .scale(&Rat::from_frac(1, 1728))
    }

    /// Right-hand side x^3 + a2 x^2 + a4 x + a6 evaluated at a rational
    /// function.
    pub fn rhs(&self, x: &RatFun1<K>) -> RatFun1<K> {
        let lift = |p: &UniPoly<K>| RatFun1::from_poly(p.clone());
        let x2 = x.mul(x);
        let x3 = x2.mul(x);
        x3.add(&lift(&self.a2).mul(&x2))
            .add(&lift(&self.a4).mul(x))
            .add(&lift(&self.a6))
    }

    /// Chart at infinity: t = 1/u, x -> x/u^(2chi), y -> y/u^(3chi).
    pub fn flip(&self) -> EllipticSurface<K> {
        let fl = |p: &UniPoly<K>, w: usize| -> UniPoly<K> {
            // u^w * p(1/u)
            let mut coeffs = vec![K::zero(); w + 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                coeffs[w - i] = c.clone();
            }
            UniPoly::new(coeffs)
        };
        EllipticSurface {
            a2: fl(&self.a2, 2 * self.chi),
            a4: fl(&self.a4, 4 * self.chi),
            a6: fl(&self.a6, 6 * self.chi),
            chi: self.chi,
        }
    }
}

/// A section given by rational-function coordinates. The actual
/// y-coordinate is `y * sqrt(twist)`; `twist = 1` for ordinary sections.
#[derive(Clone, Debug)]
pub struct SurfaceSection<K: Field> {
    pub x: RatFun1<K>,
    pub y: RatFun1<K>,
    pub twist: Rat,
}

impl<K: Field> SurfaceSection<K> {
    pub fn new(x: RatFun1<K>, y: RatFun1<K>) -> Self {
        SurfaceSection { x, y, twist: Rat::one() }
    }

    pub fn with_twist(x: RatFun1<K>, y: RatFun1<K>, twist: Rat) -> Self {
        SurfaceSection { x, y, twist }
    }

    /// Chart change matching `EllipticSurface::flip`.
    pub fn flip(&self, chi: usize) -> SurfaceSection<K> {
        let u_inv = RatFun1::new(UniPoly::one(), UniPoly::x());
        let xf = self.x.compose_rf(&u_inv);
        let yf = self.y.compose_rf(&u_inv);
        let u = RatFun1::<K>::x();
        let mut u2 = RatFun1::one();
        for _ in 0..2 * chi {
            u2 = u2.mul(&u);
        }
        let mut u3 = RatFun1::one();
        for _ in 0..3 * chi {
            u3 = u3.mul(&u);
        }
        SurfaceSection { x: xf.mul(&u2), y: yf.mul(&u3), twist: self.twist.clone() }
    }
}

/// twist * y^2 = rhs(x), exactly.
pub fn verify_section<K: Field>(s: &EllipticSurface<K>, p: &SurfaceSection<K>) -> bool {
    let lhs = p.y.mul(&p.y).scale(&p.twist);
    lhs == s.rhs(&p.x)
}

/// Kodaira symbol of a singular fiber.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kodaira {
    I(usize),
    II,
    III,
    IV,
    IStar(usize),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    pub fn euler(&self) -> usize {
        match self {
            Kodaira::I(n) => *n,
            Kodaira::II => 2,
            Kodaira::III => 3,
            Kodaira::IV => 4,
            Kodaira::IStar(n) => 6 + n,
            Kodaira::IVStar => 8,
            Kodaira::IIIStar => 9,
            Kodaira::IIStar => 10,
        }
    }

    pub fn components(&self) -> usize {
        match self {
            Kodaira::I(n) => (*n).max(1),
            Kodaira::II => 1,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::IStar(n) => 5 + n,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    /// Order of the component group (simple components).
    pub fn group_order(&self) -> usize {
        match self {
            Kodaira::I(n) => (*n).max(1),
            Kodaira::II => 1,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::IStar(_) => 4,
            Kodaira::IVStar => 3,
            Kodaira::IIIStar => 2,
            Kodaira::IIStar => 1,
        }
    }

    /// Parse the notation used by catalog data files: I3, I4*, IV, II*, ...
    pub fn parse(s: &str) -> Result<Kodaira> {
        let s = s.trim();
        let out = match s {
            "II" => Kodaira::II,
            "III" => Kodaira::III,
            "IV" => Kodaira::IV,
            "II*" => Kodaira::IIStar,
            "III*" => Kodaira::IIIStar,
            "IV*" => Kodaira::IVStar,
            _ => {
                let (body, star) = match s.strip_suffix('*') {
                    Some(b) => (b, true),
                    None => (s, false),
                };
                let n: usize = body
                    .strip_prefix('I')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad Kodaira symbol `{s}`")))?;
                if star {
                    Kodaira::IStar(n)
                } else {
                    Kodaira::I(n)
                }
            }
        };
        Ok(out)
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{}", n),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::IStar(n) => write!(f, "I{}*", n),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

/// Location of a fiber: a monic irreducible polynomial, or infinity.
#[derive(Clone, PartialEq, Debug)]
pub enum Place {
    Finite(UniPoly<Rat>),
    Infinity,
}

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree(),
            Place::Infinity => 1,
        }
    }

    pub fn canonical_string(&self) -> String {
        match self {
            Place::Finite(p) => p.to_string_var("t"),
            Place::Infinity => "inf".to_string(),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

#[derive(Clone, Debug)]
pub struct FiberData {
    pub place: Place,
    pub kodaira: Kodaira,
    pub v_delta: usize,
    pub components: usize,
    pub euler: usize,
    /// rank contribution per geometric point
    pub rank: usize,
    pub group_order: usize,
}

/// Classify the singular fibers from valuations of (c4, c6, Delta).
///
/// Minimality holds for all catalog data; a non-minimal place in user input
/// is reported as an error.
pub fn classify_fibers(s: &EllipticSurface<Rat>) -> Result<Vec<FiberData>> {
    let delta = s.delta();
    if delta.is_zero() {
        return Err(Error::Degenerate { witness: "discriminant identically zero".into() });
    }
    let c4 = s.c4();
    let c6 = s.c6();
    let mut fibers = Vec::new();
    let fac = factor_rational(&delta)?;
    for (p, mult) in &fac.factors {
        let vd = *mult as usize;
        let vc4 = valuation(&c4, p);
        let vc6 = valuation(&c6, p);
        let kod = kodaira_from_valuations(vc4, vc6, vd)
            .ok_or_else(|| Error::NonMinimal { place: p.to_string_var("t") })?;
        fibers.push(make_fiber(Place::Finite(p.clone()), kod, vd));
    }
    // infinity chart
    let flipped = s.flip();
    let dinf = flipped.delta();
    let u = UniPoly::from_ints(&[0, 1]);
    let vd = valuation(&dinf, &u).unwrap_or(0);
    if vd > 0 {
        let vc4 = valuation(&flipped.c4(), &u);
        let vc6 = valuation(&flipped.c6(), &u);
        let kod = kodaira_from_valuations(vc4, vc6, vd)
            .ok_or_else(|| Error::NonMinimal { place: "inf".into() })?;
        fibers.push(make_fiber(Place::Infinity, kod, vd));
    }
    Ok(fibers)
}

fn make_fiber(place: Place, kodaira: Kodaira, v_delta: usize) -> FiberData {
    FiberData {
        place,
        kodaira,
        v_delta,
        components: kodaira.components(),
        euler: kodaira.euler(),
        rank: kodaira.components() - 1,
        group_order: kodaira.group_order(),
    }
}

pub fn valuation(f: &UniPoly<Rat>, p: &UniPoly<Rat>) -> Option<usize> {
    if f.is_zero() {
        return None; // infinite
    }
    let mut g = f.clone();
    let mut v = 0;
    while let Some(q) = g.div_exact(p) {
        g = q;
        v += 1;
    }
    Some(v)
}

/// Characteristic-zero Kodaira table; `None` when the triple is not
/// minimal.
fn kodaira_from_valuations(
    vc4: Option<usize>,
    vc6: Option<usize>,
    v_delta: usize,
) -> Option<Kodaira> {
    let ge = |v: Option<usize>, k: usize| v.map_or(true, |x| x >= k);
    let eq = |v: Option<usize>, k: usize| v == Some(k);
    if ge(vc4, 4) && ge(vc6, 6) && v_delta >= 12 {
        return None; // not minimal at this place
    }
    if eq(vc4, 0) {
        return Some(Kodaira::I(v_delta));
    }
    // additive
    if ge(vc4, 2) && eq(vc6, 3) && v_delta > 6 {
        return Some(Kodaira::IStar(v_delta - 6));
    }
    match v_delta {
        2 => Some(Kodaira::II),
        3 => Some(Kodaira::III),
        4 => Some(Kodaira::IV),
        6 => Some(Kodaira::IStar(0)),
        8 => Some(Kodaira::IVStar),
        9 => Some(Kodaira::IIIStar),
        10 => Some(Kodaira::IIStar),
        _ => None,
    }
}

/// Euler total and trivial-lattice rank (geometric points counted with the
/// degree of their place).
pub fn euler_and_trivial_rank(fibers: &[FiberData]) -> (usize, usize) {
    let e: usize = fibers.iter().map(|f| f.euler * f.place.degree()).sum();
    let r: usize = 2 + fibers
        .iter()
        .map(|f| f.rank * f.place.degree())
        .sum::<usize>();
    (e, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol(v: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(v)
    }

    #[test]
    fn small_chi_one_surface() {
        // y^2 = x^3 + t x + 1 over chi = 1: fibers sum to 12
        let s = EllipticSurface::new(UniPoly::zero(), pol(&[0, 1]), pol(&[1]), 1).unwrap();
        let fibers = classify_fibers(&s).unwrap();
        let (e, _) = euler_and_trivial_rank(&fibers);
        assert_eq!(e, 12);
    }

    #[test]
    fn verify_section_and_perturbation() {
        // y^2 = x^3 - t^2 x; section (t, 0)... use (-t, 0) too
        let s =
            EllipticSurface::new(UniPoly::zero(), pol(&[0, 0, -1]), UniPoly::zero(), 1).unwrap();
        let p = SurfaceSection::new(
            RatFun1::from_poly(pol(&[0, 1])),
            RatFun1::from_poly(UniPoly::zero()),
        );
        assert!(verify_section(&s, &p));
        let bad = SurfaceSection::new(p.x.clone(), RatFun1::from_poly(UniPoly::one()));
        assert!(!verify_section(&s, &bad));
    }

    #[test]
    fn twisted_section_verification() {
        // y^2 = x^3 - 3 t^2 x: the point (2t, sqrt(-3)*... ) no; use
        // x = -t: rhs = -t^3 + 3t^3 = 2t^3, not twisted-square.
        // Simpler: y^2 = x^3 + a with section x = t^2, y = t^3 sqrt(1 + a/t^6)
        // is not rational; test the twist bookkeeping directly:
        // -3 * y^2 = rhs with rhs = -3 t^2 and y = t: x^3+a4 x = -3t^2
        // pick a4 = -3t^2/x ... construct: x = 1 (constant), a2=0,
        // a4 = -3t^2 - 1, a6 = 0: rhs(1) = 1 - 3t^2 - 1 = -3t^2
        let s = EllipticSurface::new(UniPoly::zero(), pol(&[-1, 0, -3]), UniPoly::zero(), 1)
            .unwrap();
        let p = SurfaceSection::with_twist(
            RatFun1::from_poly(UniPoly::one()),
            RatFun1::from_poly(pol(&[0, 1])),
            Rat::from_int(-3),
        );
        assert!(verify_section(&s, &p));
    }

    #[test]
    fn kodaira_table_spot_checks() {
        assert_eq!(kodaira_from_valuations(Some(0), Some(0), 3), Some(Kodaira::I(3)));
        assert_eq!(kodaira_from_valuations(Some(1), Some(1), 2), Some(Kodaira::II));
        assert_eq!(kodaira_from_valuations(Some(2), Some(3), 7), Some(Kodaira::IStar(1)));
        assert_eq!(kodaira_from_valuations(Some(2), Some(3), 6), Some(Kodaira::IStar(0)));
        assert_eq!(kodaira_from_valuations(Some(3), Some(5), 9), Some(Kodaira::IIIStar));
        assert_eq!(kodaira_from_valuations(Some(4), Some(5), 10), Some(Kodaira::IIStar));
        assert_eq!(kodaira_from_valuations(Some(4), Some(6), 12), None);
        assert_eq!(Kodaira::parse("I4*").unwrap(), Kodaira::IStar(4));
        assert_eq!(Kodaira::parse("III*").unwrap(), Kodaira::IIIStar);
        assert_eq!(Kodaira::parse("I10").unwrap(), Kodaira::I(10));
    }
}
