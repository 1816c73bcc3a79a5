//! Genus-2 curve models y^2 = f(x) with deg f in {5, 6}, and their
//! Igusa-Clebsch invariants (I2, I4, I6, I10) of weights (2, 4, 6, 10).
//!
//! The invariants are computed from the classical Clebsch invariants
//! (A, B, C, D) of the binary sextic, obtained by transvection. A degree-5
//! model is the specialization of the sextic with a root at infinity.

use crate::error::Error;
use crate::rat::Rat;
use crate::traits::Field;
use crate::unipoly::UniPoly;
use crate::Result;

/// A genus-2 curve y^2 = f(x), deg f in {5, 6}.
#[derive(Clone, PartialEq, Debug)]
pub struct Genus2Curve<K: Field> {
    f: UniPoly<K>,
}

impl<K: Field> Genus2Curve<K> {
    pub fn new(f: UniPoly<K>) -> Result<Self> {
        if f.is_zero() || f.degree() < 5 || f.degree() > 6 {
            return Err(Error::OutOfRange(format!(
                "genus-2 model needs a quintic or sextic, got degree {}",
                f.degree()
            )));
        }
        Ok(Genus2Curve { f })
    }

    pub fn sextic(&self) -> &UniPoly<K> {
        &self.f
    }

    pub fn is_degenerate(&self) -> bool {
        // repeated root (including the degree-5 model picking up a double
        // root at infinity when deg drops below 5)
        self.f.discriminant().is_zero()
    }

    /// Substitute x -> 1/x, y -> y/x^3 (coefficient reversal, padded to 6).
    pub fn invert_x(&self) -> Self {
        let mut coeffs: Vec<K> = (0..=6).map(|i| self.f.coeff(i)).collect();
        coeffs.reverse();
        Genus2Curve { f: UniPoly::new(coeffs) }
    }
}

/// Igusa-Clebsch invariants, regarded up to weighted scaling
/// (I2, I4, I6, I10) ~ (t I2, t^2 I4, t^3 I6, t^5 I10) for t = lambda^2.
#[derive(Clone, PartialEq, Debug)]
pub struct IgusaClebsch<K: Field> {
    pub i2: K,
    pub i4: K,
    pub i6: K,
    pub i10: K,
}

impl<K: Field> IgusaClebsch<K> {
    pub const WEIGHTS: [u32; 4] = [2, 4, 6, 10];

    pub fn as_array(&self) -> [K; 4] {
        [self.i2.clone(), self.i4.clone(), self.i6.clone(), self.i10.clone()]
    }

    /// Apply the weighted scaling with lambda^2 = t.
    pub fn scale_sq(&self, t: &K) -> Self {
        let t2 = t.mul(t);
        let t3 = t2.mul(t);
        let t5 = t3.mul(&t2);
        IgusaClebsch {
            i2: self.i2.mul(t),
            i4: self.i4.mul(&t2),
            i6: self.i6.mul(&t3),
            i10: self.i10.mul(&t5),
        }
    }
}

impl IgusaClebsch<Rat> {
    /// Canonical JSON rendering: four rational strings plus weights.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "invariants": [
                self.i2.to_string(),
                self.i4.to_string(),
                self.i6.to_string(),
                self.i10.to_string(),
            ],
            "weights": [2, 4, 6, 10],
        })
    }
}

// ---------------------------------------------------------------------------
// binary forms and transvectants

/// Homogeneous binary form of degree d: coeffs[i] is the coefficient of
/// x^i z^(d-i).
#[derive(Clone, Debug)]
struct BinForm<K> {
    deg: usize,
    coeffs: Vec<K>,
}

impl<K: Field> BinForm<K> {
    fn from_poly(f: &UniPoly<K>, deg: usize) -> Self {
        let coeffs = (0..=deg).map(|i| f.coeff(i)).collect();
        BinForm { deg, coeffs }
    }

    fn dx(&self) -> Self {
        if self.deg == 0 {
            return BinForm { deg: 0, coeffs: vec![K::zero()] };
        }
        let coeffs = (1..=self.deg)
            .map(|i| self.coeffs[i].scale(&Rat::from_int(i as i64)))
            .collect();
        BinForm { deg: self.deg - 1, coeffs }
    }

    fn dz(&self) -> Self {
        if self.deg == 0 {
            return BinForm { deg: 0, coeffs: vec![K::zero()] };
        }
        let coeffs = (0..self.deg)
            .map(|i| self.coeffs[i].scale(&Rat::from_int((self.deg - i) as i64)))
            .collect();
        BinForm { deg: self.deg - 1, coeffs }
    }

    fn mul(&self, other: &Self) -> Self {
        let deg = self.deg + other.deg;
        let mut coeffs = vec![K::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        BinForm { deg, coeffs }
    }

    fn add_scaled(&mut self, other: &Self, k: &Rat) {
        debug_assert_eq!(self.deg, other.deg);
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] = self.coeffs[i].add(&c.scale(k));
        }
    }

    fn constant_value(&self) -> K {
        debug_assert_eq!(self.deg, 0);
        self.coeffs[0].clone()
    }
}

fn factorial(n: usize) -> Rat {
    let mut acc = Rat::one();
    for k in 2..=n {
        acc = &acc * &Rat::from_int(k as i64);
    }
    acc
}

fn binomial(n: usize, k: usize) -> Rat {
    &factorial(n) / &(&factorial(k) * &factorial(n - k))
}

/// k-th transvectant of binary forms of degrees m and n.
fn transvectant<K: Field>(f: &BinForm<K>, g: &BinForm<K>, k: usize) -> BinForm<K> {
    let (m, n) = (f.deg, g.deg);
    assert!(k <= m && k <= n);
    let scale = &(&factorial(m - k) * &factorial(n - k)) / &(&factorial(m) * &factorial(n));
    // iterated partials: fx[j] = d^k f / dx^(k-j) dz^j
    let mut fpart = Vec::with_capacity(k + 1);
    let mut base = f.clone();
    for _ in 0..k {
        base = base.dx();
    }
    fpart.push(base);
    for j in 1..=k {
        // replace one dx with dz: recompute from f
        let mut cur = f.clone();
        for _ in 0..(k - j) {
            cur = cur.dx();
        }
        for _ in 0..j {
            cur = cur.dz();
        }
        fpart.push(cur);
    }
    let mut gpart = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut cur = g.clone();
        for _ in 0..j {
            cur = cur.dx();
        }
        for _ in 0..(k - j) {
            cur = cur.dz();
        }
        gpart.push(cur);
    }
    let deg = m + n - 2 * k;
    let mut acc = BinForm { deg, coeffs: vec![K::zero(); deg + 1] };
    for j in 0..=k {
        let term = fpart[j].mul(&gpart[j]);
        let mut c = binomial(k, j);
        if j % 2 == 1 {
            c = -c;
        }
        acc.add_scaled(&term, &c);
    }
    for c in acc.coeffs.iter_mut() {
        *c = c.scale(&scale);
    }
    acc
}

/// Clebsch invariants (A, B, C, D) of a binary sextic.
pub fn clebsch_invariants<K: Field>(f: &UniPoly<K>) -> (K, K, K, K) {
    let fb = BinForm::from_poly(f, 6);
    let i = transvectant(&fb, &fb, 4); // degree 4
    let delta = transvectant(&i, &i, 2); // degree 4
    let y1 = transvectant(&fb, &i, 4); // degree 2
    let y2 = transvectant(&i, &y1, 2); // degree 2
    let y3 = transvectant(&i, &y2, 2); // degree 2
    let a = transvectant(&fb, &fb, 6).constant_value();
    let b = transvectant(&i, &i, 4).constant_value();
    let c = transvectant(&i, &delta, 4).constant_value();
    let d = transvectant(&y3, &y1, 2).constant_value();
    (a, b, c, d)
}

/// Igusa-Clebsch invariants of a genus-2 curve.
///
/// Degenerate (non-squarefree) input is accepted; it is flagged by I10 = 0.
pub fn igusa_clebsch<K: Field>(curve: &Genus2Curve<K>) -> IgusaClebsch<K> {
    let (a, b, c, d) = clebsch_invariants(curve.sextic());
    let a2 = a.mul(&a);
    let a3 = a2.mul(&a);
    let a5 = a3.mul(&a2);
    let i2 = a.scale(&Rat::from_int(-120));
    let i4 = a2.scale(&Rat::from_int(-720)).add(&b.scale(&Rat::from_int(6750)));
    let i6 = a3
        .scale(&Rat::from_int(8640))
        .add(&a.mul(&b).scale(&Rat::from_int(-108000)))
        .add(&c.scale(&Rat::from_int(202500)));
    let i10 = a5
        .scale(&Rat::from_int(-62208))
        .add(&a3.mul(&b).scale(&Rat::from_int(972000)))
        .add(&a2.mul(&c).scale(&Rat::from_int(1620000)))
        .add(&a.mul(&b).mul(&b).scale(&Rat::from_int(-3037500)))
        .add(&b.mul(&c).scale(&Rat::from_int(-6075000)))
        .add(&d.scale(&Rat::from_int(-4556250)));
    IgusaClebsch { i2, i4, i6, i10 }
}

/// Result of a successful weighted-projective comparison.
#[derive(Clone, Debug)]
pub struct WeightedScale<K: Field> {
    /// lambda with b = lambda-scaling of a, when lambda lies in K (it is
    /// only determined up to sign).
    pub lambda: Option<K>,
    /// lambda^2, whenever it is determined by the data.
    pub lambda_sq: Option<K>,
}

/// Compare two invariant tuples up to weighted scaling; returns the scaling
/// data if they agree, `None` otherwise.
pub fn ic_weighted_equal<K: Field>(
    a: &IgusaClebsch<K>,
    b: &IgusaClebsch<K>,
) -> Option<WeightedScale<K>> {
    // half-weights of (I2, I4, I6, I10)
    let hw: [usize; 4] = [1, 2, 3, 5];
    let av = a.as_array();
    let bv = b.as_array();
    let mut ratios: Vec<(usize, K)> = Vec::new();
    for i in 0..4 {
        match (av[i].is_zero(), bv[i].is_zero()) {
            (true, true) => {}
            (false, false) => ratios.push((hw[i], bv[i].div(&av[i]))),
            _ => return None,
        }
    }
    // pairwise consistency: t_i^{h_j} = t_j^{h_i}
    for x in 0..ratios.len() {
        for y in (x + 1)..ratios.len() {
            let (hi, ti) = (&ratios[x].0, &ratios[x].1);
            let (hj, tj) = (&ratios[y].0, &ratios[y].1);
            if pow_k(ti, *hj as u32) != pow_k(tj, *hi as u32) {
                return None;
            }
        }
    }
    // derive lambda^2 where possible
    let find = |h: usize| ratios.iter().find(|(g, _)| *g == h).map(|(_, t)| t.clone());
    let lambda_sq = if let Some(t) = find(1) {
        Some(t)
    } else if let (Some(t4), Some(t6)) = (find(2), find(3)) {
        Some(t6.div(&t4))
    } else if let (Some(t4), Some(t10)) = (find(2), find(5)) {
        Some(t10.div(&pow_k(&t4, 2)))
    } else if let (Some(t6), Some(t10)) = (find(3), find(5)) {
        Some(pow_k(&t6, 2).div(&t10))
    } else {
        // at most one invariant pair is nonzero: equal, scale undetermined
        None
    };
    let lambda = lambda_sq.as_ref().and_then(|m| m.sqrt());
    Some(WeightedScale { lambda, lambda_sq })
}

fn pow_k<K: Field>(x: &K, e: u32) -> K {
    let mut acc = K::one();
    for _ in 0..e {
        acc = acc.mul(x);
    }
    acc
}

/// Absolute invariants (I4/I2^2, I2*I4/I6, I4*I6/I10); invariant under
/// weighted scaling.
pub fn absolute_invariants<K: Field>(ic: &IgusaClebsch<K>) -> Result<(K, K, K)> {
    if ic.i2.is_zero() {
        return Err(Error::VanishingInvariant("I2"));
    }
    if ic.i6.is_zero() {
        return Err(Error::VanishingInvariant("I6"));
    }
    if ic.i10.is_zero() {
        return Err(Error::VanishingInvariant("I10"));
    }
    let a1 = ic.i4.div(&ic.i2.mul(&ic.i2));
    let a2 = ic.i2.mul(&ic.i4).div(&ic.i6);
    let a3 = ic.i4.mul(&ic.i6).div(&ic.i10);
    Ok((a1, a2, a3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(v: &[i64]) -> Genus2Curve<Rat> {
        Genus2Curve::new(UniPoly::from_ints(v)).unwrap()
    }

    #[test]
    fn i10_is_the_discriminant() {
        // Igusa's normalization: I10 = disc(f) for a sextic
        for v in [
            vec![-1i64, 0, 0, 0, 0, 0, 1],
            vec![1, 2, 0, -3, 1, 0, 2],
            vec![5, -1, 1, 1, 1, 1, 1],
        ] {
            let c = curve(&v);
            let ic = igusa_clebsch(&c);
            let disc = c.sextic().discriminant();
            assert_eq!(ic.i10, disc, "I10 != disc for {:?}", v);
        }
    }

    #[test]
    fn repeated_root_gives_i10_zero() {
        // (x-1)^2 * (x^4 + x + 3)
        let f: UniPoly<Rat> =
            UniPoly::from_ints(&[1, -2, 1]).mul(&UniPoly::from_ints(&[3, 1, 0, 0, 1]));
        let c = Genus2Curve::new(f).unwrap();
        assert!(c.is_degenerate());
        let ic = igusa_clebsch(&c);
        assert!(ic.i10.is_zero());
        assert!(!igusa_clebsch(&curve(&[-1, 0, 0, 0, 0, 0, 1])).i10.is_zero());
    }

    #[test]
    fn x6_minus_1_matches_root_based_oracle() {
        // Oracle: the root-symmetric-function definitions evaluated exactly
        // in Q(zeta_6) for f = x^6 - 1 (roots are the sixth roots of unity).
        // With differences d_ij = r_i - r_j:
        //   A' = sum over 15 pairings of d^2 d^2 d^2,
        //   B' = sum over 10 triple-splits, C' = sum over 60, D = prod d_ij^2.
        let (a_p, b_p, c_p, d_p) = oracle_x6_minus_1();
        let c = curve(&[-1, 0, 0, 0, 0, 0, 1]);
        let ic = igusa_clebsch(&c);
        assert_eq!(ic.i2, a_p);
        assert_eq!(ic.i4, b_p);
        assert_eq!(ic.i6, c_p);
        assert_eq!(ic.i10, d_p);
    }

    // Exact arithmetic in Q(zeta_6): x + y*w with w^2 = w - 1.
    #[derive(Clone, Copy, Debug, PartialEq)]
    struct Cyc(i64, i64);
    impl Cyc {
        fn mul(self, o: Cyc) -> Cyc {
            // (a + b w)(c + d w) = ac + (ad + bc) w + bd (w - 1)
            Cyc(
                self.0 * o.0 - self.1 * o.1,
                self.0 * o.1 + self.1 * o.0 + self.1 * o.1,
            )
        }
        fn sub(self, o: Cyc) -> Cyc {
            Cyc(self.0 - o.0, self.1 - o.1)
        }
        fn square(self) -> Cyc {
            self.mul(self)
        }
    }

    fn oracle_x6_minus_1() -> (Rat, Rat, Rat, Rat) {
        // roots of x^6 - 1: +-1, +-w, +-(w - 1)  since w = zeta_6
        let w = Cyc(0, 1);
        let roots = [
            Cyc(1, 0),
            Cyc(-1, 0),
            w,
            Cyc(0, -1),
            Cyc(-1, 1),
            Cyc(1, -1),
        ];
        let d2 = |i: usize, j: usize| roots[i].sub(roots[j]).square();
        // I2: 15 ways to partition {0..5} into three pairs
        let mut i2 = Cyc(0, 0);
        let mut i4 = Cyc(0, 0);
        let mut i6 = Cyc(0, 0);
        let pairings = pairings_of_six();
        for p in &pairings {
            let v = d2(p[0], p[1]).mul(d2(p[2], p[3])).mul(d2(p[4], p[5]));
            i2 = Cyc(i2.0 + v.0, i2.1 + v.1);
        }
        // I4: 10 splits into two unordered triples {i,j,k},{l,m,n}:
        // prod of the three differences squared within each triple
        let triples = triple_splits();
        for (t1, t2) in &triples {
            let tri = |t: &[usize; 3]| {
                d2(t[0], t[1]).mul(d2(t[0], t[2])).mul(d2(t[1], t[2]))
            };
            let v = tri(t1).mul(tri(t2));
            i4 = Cyc(i4.0 + v.0, i4.1 + v.1);
        }
        // I6: over splits AND bijections between the two triples
        for (t1, t2) in &triples {
            let tri = |t: &[usize; 3]| {
                d2(t[0], t[1]).mul(d2(t[0], t[2])).mul(d2(t[1], t[2]))
            };
            let base = tri(t1).mul(tri(t2));
            for perm in permutations3() {
                let mut v = base;
                for k in 0..3 {
                    v = v.mul(d2(t1[k], t2[perm[k]]));
                }
                i6 = Cyc(i6.0 + v.0, i6.1 + v.1);
            }
        }
        // I10 = disc = prod_{i<j} d2(i,j)
        let mut i10 = Cyc(1, 0);
        for i in 0..6 {
            for j in (i + 1)..6 {
                i10 = i10.mul(d2(i, j));
            }
        }
        for v in [&i2, &i4, &i6, &i10] {
            assert_eq!(v.1, 0, "oracle value not rational");
        }
        (
            Rat::from_int(i2.0),
            Rat::from_int(i4.0),
            Rat::from_int(i6.0),
            Rat::from_int(i10.0),
        )
    }

    fn pairings_of_six() -> Vec<[usize; 6]> {
        let mut out = Vec::new();
        let items: Vec<usize> = (0..6).collect();
        fn rec(rem: Vec<usize>, acc: Vec<usize>, out: &mut Vec<[usize; 6]>) {
            if rem.is_empty() {
                out.push([acc[0], acc[1], acc[2], acc[3], acc[4], acc[5]]);
                return;
            }
            let first = rem[0];
            for k in 1..rem.len() {
                let mut nrem = rem.clone();
                let second = nrem.remove(k);
                nrem.remove(0);
                let mut nacc = acc.clone();
                nacc.push(first);
                nacc.push(second);
                rec(nrem, nacc, out);
            }
        }
        rec(items, Vec::new(), &mut out);
        assert_eq!(out.len(), 15);
        out
    }

    fn triple_splits() -> Vec<([usize; 3], [usize; 3])> {
        let mut out = Vec::new();
        for a in 1..6usize {
            for b in (a + 1)..6 {
                let t1 = [0, a, b];
                let t2: Vec<usize> = (1..6).filter(|x| *x != a && *x != b).collect();
                out.push((t1, [t2[0], t2[1], t2[2]]));
            }
        }
        assert_eq!(out.len(), 10);
        out
    }

    fn permutations3() -> [[usize; 3]; 6] {
        [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ]
    }

    #[test]
    fn weighted_equality() {
        let c = curve(&[1, 2, 0, -3, 1, 0, 2]);
        let ic = igusa_clebsch(&c);
        let scaled = ic.scale_sq(&Rat::from_int(4)); // lambda = 2
        let ws = ic_weighted_equal(&ic, &scaled).unwrap();
        assert_eq!(ws.lambda, Some(Rat::from_int(2)));
        assert_eq!(ws.lambda_sq, Some(Rat::from_int(4)));
        // perturbation breaks equality
        let mut bad = scaled.clone();
        bad.i4 = &bad.i4 + &Rat::one();
        assert!(ic_weighted_equal(&ic, &bad).is_none());
    }

    #[test]
    fn scaling_transformation_is_weighted_trivial() {
        // g(x) = lambda^{-6} f(lambda x) corresponds to (x,y) -> (lx, l^3 y)
        let c = curve(&[1, 2, 0, -3, 1, 0, 2]);
        let lam = Rat::from_frac(3, 2);
        let mut coeffs = Vec::new();
        for (i, a) in c.sextic().coeffs().iter().enumerate() {
            coeffs.push(a * &lam.pow(i as i64 - 6));
        }
        let g = Genus2Curve::new(UniPoly::new(coeffs)).unwrap();
        let w = ic_weighted_equal(&igusa_clebsch(&c), &igusa_clebsch(&g)).unwrap();
        assert!(w.lambda_sq.is_some());
    }

    #[test]
    fn inversion_is_weighted_trivial() {
        let c = curve(&[1, 2, 0, -3, 1, 0, 2]);
        let g = c.invert_x();
        assert!(ic_weighted_equal(&igusa_clebsch(&c), &igusa_clebsch(&g)).is_some());
    }

    #[test]
    fn absolute_invariants_scale_free() {
        let c = curve(&[1, 2, 0, -3, 1, 0, 2]);
        let ic = igusa_clebsch(&c);
        let s = ic.scale_sq(&Rat::from_frac(7, 3));
        assert_eq!(
            absolute_invariants(&ic).unwrap(),
            absolute_invariants(&s).unwrap()
        );
        let mut zero2 = ic.clone();
        zero2.i2 = Rat::zero();
        assert!(matches!(
            absolute_invariants(&zero2),
            Err(Error::VanishingInvariant("I2"))
        ));
    }
}
