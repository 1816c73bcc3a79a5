//! Univariate factorization over the rationals: Yun squarefree
//! decomposition followed by Zassenhaus (factorization modulo a small
//! prime, Hensel lifting, subset recombination).

use crate::error::Error;
use crate::rat::Rat;
use crate::unipoly::UniPoly;
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `content * prod factors[i].0 ^ factors[i].1` reconstructs the input;
/// factors are monic and irreducible over Q, sorted for determinism.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub content: Rat,
    pub factors: Vec<(UniPoly<Rat>, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> UniPoly<Rat> {
        let mut acc = UniPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }
}

pub fn factor_rational(p: &UniPoly<Rat>) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() > 64 {
        return Err(Error::OutOfRange(format!(
            "degree {} exceeds the supported bound 64",
            p.degree()
        )));
    }
    if p.degree() == 0 {
        return Ok(Factorization { content: p.leading(), factors: Vec::new() });
    }
    let lead = p.leading();
    let monic = p.mul_k(&lead.recip().unwrap());
    let mut content = lead;
    let mut factors: Vec<(UniPoly<Rat>, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(&monic) {
        if part.degree() == 0 {
            continue;
        }
        let (c, prim) = part.primitive();
        // part is monic: c = 1/lc(prim)
        let _ = c;
        for g in factor_squarefree_primitive(&to_int_poly(&prim)) {
            let gq = from_int_poly(&g);
            factors.push((gq.monic(), mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0)))
    });
    Ok(Factorization { content, factors })
}

/// Monic squarefree decomposition (Yun): f = prod a_i^i.
pub fn yun_squarefree(f: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut b = f.div_exact(&g).unwrap();
    let mut c = df.div_exact(&g).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1u32;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

fn to_int_poly(p: &UniPoly<Rat>) -> Vec<BigInt> {
    p.coeffs().iter().map(|c| {
        debug_assert!(c.is_integer());
        c.numer().clone()
    }).collect()
}

fn from_int_poly(v: &[BigInt]) -> UniPoly<Rat> {
    UniPoly::new(v.iter().map(|c| Rat::from_bigint(c.clone())).collect())
}

fn deg(v: &[BigInt]) -> usize {
    v.len().saturating_sub(1)
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn primitive_int(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = int_content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials; `None` if not divisible over Z.
fn div_exact_int(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if num.is_empty() {
        return Some(Vec::new());
    }
    if den.is_empty() {
        return None;
    }
    let mut rem = num.to_vec();
    let dd = deg(den);
    let dl = den.last().unwrap().clone();
    if deg(&rem) < dd {
        return None;
    }
    let mut quot = vec![BigInt::zero(); deg(&rem) - dd + 1];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (q, r) = rem[i].div_rem(&dl);
        if !r.is_zero() {
            return None;
        }
        quot[i - dd] = q.clone();
        for (j, dc) in den.iter().enumerate() {
            let v = &rem[i - dd + j] - &(&q * dc);
            rem[i - dd + j] = v;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(trim(quot))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// arithmetic over F_p (p small) and Z/m (m = p^k)

fn fp_norm(x: i64, p: i64) -> i64 {
    ((x % p) + p) % p
}

fn fp_inv(a: i64, p: i64) -> i64 {
    // extended Euclid
    let (mut r0, mut r1) = (p, fp_norm(a, p));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        let nr = r0 - q * r1;
        r0 = r1;
        r1 = nr;
        let nt = t0 - q * t1;
        t0 = t1;
        t1 = nt;
    }
    assert_eq!(r0, 1, "not invertible mod p");
    fp_norm(t0, p)
}

type FpPoly = Vec<i64>;

fn fp_trim(mut v: FpPoly) -> FpPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_mul(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_sub(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0i64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = fp_norm(x - y, p);
    }
    fp_trim(out)
}

fn fp_divrem(a: &[i64], b: &[i64], p: i64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty(), "division by zero");
    let mut rem: FpPoly = fp_trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let linv = fp_inv(*b.last().unwrap(), p);
    let mut quot = vec![0i64; rem.len() - b.len() + 1];
    for i in (b.len() - 1..rem.len()).rev() {
        let c = fp_norm(rem[i], p);
        if c == 0 {
            continue;
        }
        let q = (c * linv) % p;
        quot[i - (b.len() - 1)] = q;
        for (j, &bc) in b.iter().enumerate() {
            let idx = i - (b.len() - 1) + j;
            rem[idx] = fp_norm(rem[idx] - q * bc, p);
        }
    }
    (fp_trim(quot), fp_trim(rem))
}

fn fp_gcd(a: &[i64], b: &[i64], p: i64) -> FpPoly {
    let mut x = fp_trim(a.to_vec());
    let mut y = fp_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = fp_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return x;
    }
    let linv = fp_inv(*x.last().unwrap(), p);
    fp_trim(x.iter().map(|&c| (c * linv) % p).collect())
}

fn fp_xgcd(a: &[i64], b: &[i64], p: i64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1i64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1i64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
        let ns = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = s1;
        s1 = ns;
        let nt = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = t1;
        t1 = nt;
    }
    let linv = fp_inv(*r0.last().unwrap(), p);
    let norm = |v: &[i64]| fp_trim(v.iter().map(|&c| (c * linv) % p).collect());
    (norm(&r0), norm(&s0), norm(&t0))
}

fn fp_pow_mod(base: &[i64], mut e: u64, modulus: &[i64], p: i64) -> FpPoly {
    let mut acc = vec![1i64];
    let mut sq = fp_divrem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_divrem(&fp_mul(&acc, &sq, p), modulus, p).1;
        }
        e >>= 1;
        if e > 0 {
            sq = fp_divrem(&fp_mul(&sq, &sq, p), modulus, p).1;
        }
    }
    acc
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
fn berlekamp(f: &[i64], p: i64) -> Vec<FpPoly> {
    let n = f.len().saturating_sub(1);
    if n <= 1 {
        return vec![fp_trim(f.to_vec())];
    }
    // Q matrix: rows are x^(p*i) mod f
    let xp = fp_pow_mod(&[0, 1], p as u64, f, p);
    let mut rows: Vec<FpPoly> = Vec::with_capacity(n);
    let mut cur = vec![1i64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // build (Q - I)^T and compute kernel basis of v (Q - I) = 0,
    // i.e. kernel of M where M[i][j] = Q[j][i] - delta(i,j)
    let mut m = vec![vec![0i64; n]; n];
    for (j, row) in rows.iter().enumerate() {
        for i in 0..n {
            let q = row.get(i).copied().unwrap_or(0);
            m[i][j] = fp_norm(q - if i == j { 1 } else { 0 }, p);
        }
    }
    let kernel = fp_kernel(&mut m, n, p);
    let r = kernel.len();
    let mut factors: Vec<FpPoly> = vec![fp_trim(f.to_vec())];
    if r == 1 {
        return factors;
    }
    'outer: for v in &kernel {
        let vpoly = fp_trim(v.clone());
        if vpoly.len() <= 1 {
            continue; // constant vector (the trivial kernel element)
        }
        let mut next: Vec<FpPoly> = Vec::new();
        for f_i in factors.drain(..) {
            if f_i.len() <= 2 {
                next.push(f_i);
                continue;
            }
            let mut pieces = vec![f_i];
            for c in 0..p {
                let mut new_pieces = Vec::new();
                for piece in pieces.drain(..) {
                    if piece.len() <= 2 {
                        new_pieces.push(piece);
                        continue;
                    }
                    let shifted = fp_sub(&vpoly, &[c], p);
                    let g = fp_gcd(&piece, &shifted, p);
                    if g.len() > 1 && g.len() < piece.len() {
                        let (q, _) = fp_divrem(&piece, &g, p);
                        new_pieces.push(g);
                        new_pieces.push(q);
                    } else {
                        new_pieces.push(piece);
                    }
                }
                pieces = new_pieces;
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors
}

fn fp_kernel(m: &mut [Vec<i64>], n: usize, p: i64) -> Vec<Vec<i64>> {
    // Gaussian elimination; returns basis of the kernel
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let mut piv = None;
        for r in row..n {
            if m[r][col] % p != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.swap(row, piv);
        let inv = fp_inv(m[row][col], p);
        for c in 0..n {
            m[row][c] = (m[row][c] * inv) % p;
        }
        for r in 0..n {
            if r != row && m[r][col] % p != 0 {
                let factor = m[r][col];
                for c in 0..n {
                    m[r][c] = fp_norm(m[r][c] - factor * m[row][c], p);
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0i64; n];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = fp_norm(-m[r][free], p);
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Z/m polynomial helpers (m a prime power)

fn zm_norm(v: &mut [BigInt], m: &BigInt) {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
}

fn zm_trim(mut v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    zm_norm(&mut v, m);
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_trim(mul_int(a, b), m)
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out[i] = x + y;
    }
    zm_trim(out, m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out[i] = x - y;
    }
    zm_trim(out, m)
}

fn bigint_inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let nr = &r0 - &(&q * &r1);
        r0 = r1;
        r1 = nr;
        let nt = &t0 - &(&q * &t1);
        t0 = t1;
        t1 = nt;
    }
    assert!(r0.is_one(), "not invertible in Z/m");
    t0.mod_floor(m)
}

/// Division with remainder in Z/m[x]; the divisor's leading coefficient
/// must be invertible mod m.
fn zm_divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let b = zm_trim(b.to_vec(), m);
    assert!(!b.is_empty(), "division by zero");
    let mut rem = zm_trim(a.to_vec(), m);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let linv = bigint_inv_mod(b.last().unwrap(), m);
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for i in (b.len() - 1..rem.len()).rev() {
        let c = rem[i].mod_floor(m);
        if c.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        let q = (&c * &linv).mod_floor(m);
        for (j, bc) in b.iter().enumerate() {
            let idx = i - (b.len() - 1) + j;
            let v = (&rem[idx] - &(&q * bc)).mod_floor(m);
            rem[idx] = v;
        }
        quot[i - (b.len() - 1)] = q;
    }
    (zm_trim(quot, m), zm_trim(rem, m))
}

fn centered(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    trim(
        v.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// to the same congruences mod m^2.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = zm_sub(f, &zm_mul(g, h, &m2), &m2);
    let se = zm_mul(s, &e, &m2);
    let (q, r) = zm_divrem(&se, h, &m2);
    let gstar = zm_add(&zm_add(g, &zm_mul(t, &e, &m2), &m2), &zm_mul(&q, g, &m2), &m2);
    let hstar = zm_add(h, &r, &m2);
    // lift the Bezout pair
    let one = vec![BigInt::one()];
    let err = zm_sub(&zm_add(&zm_mul(s, &gstar, &m2), &zm_mul(t, &hstar, &m2), &m2), &one, &m2);
    let serr = zm_mul(s, &err, &m2);
    let (q2, r2) = zm_divrem(&serr, &hstar, &m2);
    let sstar = zm_sub(s, &r2, &m2);
    let tstar = zm_sub(
        &zm_sub(t, &zm_mul(t, &err, &m2), &m2),
        &zm_mul(&q2, &gstar, &m2),
        &m2,
    );
    (gstar, hstar, sstar, tstar)
}

/// Lift the factorization f = lc * prod(ms) (mod p) to mod p^K, K chosen by
/// the caller via `target`. The polynomials in `ms` are monic mod p.
fn hensel_lift_tree(
    f: &[BigInt],
    ms: &[FpPoly],
    p: i64,
    target: &BigInt,
) -> Vec<Vec<BigInt>> {
    if ms.len() == 1 {
        return vec![zm_trim(f.to_vec(), target)];
    }
    let half = ms.len() / 2;
    let (left, right) = ms.split_at(half);
    let pbig = BigInt::from(p);
    // left factor absorbs lc(f)
    let lc = f.last().unwrap().mod_floor(&pbig);
    let lc_i64 = i64::try_from(&lc).unwrap();
    let mut g0: FpPoly = vec![fp_norm(lc_i64, p)];
    for fac in left {
        g0 = fp_mul(&g0, fac, p);
    }
    let mut h0: FpPoly = vec![1];
    for fac in right {
        h0 = fp_mul(&h0, fac, p);
    }
    let (gcd, s0, t0) = fp_xgcd(&g0, &h0, p);
    assert_eq!(gcd, vec![1], "lift factors not coprime");
    let to_big = |v: &[i64]| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
    let mut g = to_big(&g0);
    let mut h = to_big(&h0);
    let mut s = to_big(&s0);
    let mut t = to_big(&t0);
    let mut modulus = BigInt::from(p);
    while &modulus < target {
        let (gs, hs, ss, ts) = hensel_step(f, &g, &h, &s, &t, &modulus);
        modulus = &modulus * &modulus;
        g = gs;
        h = hs;
        s = ss;
        t = ts;
    }
    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}

/// Factor a primitive squarefree integer polynomial with positive leading
/// coefficient into primitive irreducible integer polynomials.
pub fn factor_squarefree_primitive(g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let g = trim(g.to_vec());
    let d = deg(&g);
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![g];
    }
    let lc = g.last().unwrap().clone();
    // choose a prime keeping g squarefree, with few modular factors
    const PRIMES: &[i64] = &[
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97, 101, 103, 107, 109, 113,
    ];
    let mut best: Option<(i64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (&lc % p).is_zero() {
            continue;
        }
        let gp: FpPoly = fp_trim(
            g.iter()
                .map(|c| i64::try_from(&c.mod_floor(&BigInt::from(p))).unwrap())
                .collect(),
        );
        let dgp = fp_trim(
            gp.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (c * (i as i64 % p)) % p)
                .collect(),
        );
        if fp_gcd(&gp, &dgp, p).len() != 1 {
            continue; // not squarefree mod p
        }
        let linv = fp_inv(*gp.last().unwrap(), p);
        let monic: FpPoly = gp.iter().map(|&c| (c * linv) % p).collect();
        let factors = berlekamp(&monic, p);
        match &best {
            None => best = Some((p, factors)),
            Some((_, bf)) if factors.len() < bf.len() => best = Some((p, factors)),
            _ => {}
        }
        tried += 1;
        if tried >= 4 || best.as_ref().map_or(false, |(_, f)| f.len() == 1) {
            break;
        }
    }
    let (p, modular) = best.expect("no usable prime found");
    if modular.len() == 1 {
        return vec![g]; // irreducible mod p, hence over Z
    }
    // Landau-Mignotte bound for factors of g (including lc adjustment)
    let height = g.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::one() << (d + 1)) * &height * &lc * BigInt::from((d as u64) + 1);
    let two_bound = &bound * 2;
    let mut target = BigInt::from(p);
    while target <= two_bound {
        target = &target * &target;
    }
    let lifted = hensel_lift_tree(&g, &modular, p, &target);
    // the modulus actually used is `target` (a power of p^2^j >= 2*bound)
    recombine(&g, lifted, &target)
}

fn recombine(g: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rem = trim(g.to_vec());
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let idxs: Vec<usize> = (0..pool.len()).collect();
        let mut found = None;
        'subsets: for subset in subsets_of_size(&idxs, size) {
            let lc = rem.last().unwrap().clone();
            let mut cand = vec![lc.mod_floor(modulus)];
            for &i in &subset {
                cand = zm_mul(&cand, &pool[i], modulus);
            }
            let cand = primitive_int(&centered(&cand, modulus));
            if cand.len() <= 1 {
                continue;
            }
            if let Some(q) = div_exact_int(&rem, &cand) {
                out.push(cand);
                rem = q;
                found = Some(subset);
                break 'subsets;
            }
        }
        match found {
            Some(subset) => {
                let mut keep = Vec::new();
                for (i, f) in pool.drain(..).enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f);
                    }
                }
                pool = keep;
                // size stays: try same cardinality again
            }
            None => size += 1,
        }
    }
    if deg(&rem) > 0 {
        out.push(primitive_int(&rem));
    }
    out
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(v)
    }

    #[test]
    fn factors_difference_of_squares() {
        let f = poly(&[-1, 0, 1]);
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.reconstruct(), f);
    }

    #[test]
    fn detects_irreducible_cubic() {
        // t^3 - 3t^2 - 3t - 1 (irreducible: no rational root, and
        // irreducible mod 5)
        let f = poly(&[-1, -3, -3, 1]);
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].1, 1);
        assert_eq!(fac.factors[0].0.degree(), 3);
    }

    #[test]
    fn multiplicities_and_content() {
        // 6 * (x-1)^2 * (x+2)^3
        let f = poly(&[-1, 1]).pow(2).mul(&poly(&[2, 1]).pow(3)).scale(&Rat::from_int(6));
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.content, Rat::from_int(6));
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.reconstruct(), f);
    }

    #[test]
    fn factors_with_leading_coefficient() {
        // (2x + 1)(3x - 5)(x^2 + x + 1)
        let f = poly(&[1, 2]).mul(&poly(&[-5, 3])).mul(&poly(&[1, 1, 1]));
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.reconstruct(), f);
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(fac.content, Rat::from_int(6));
    }

    #[test]
    fn cyclotomic_like_products() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let mut c = vec![0i64; 7];
        c[0] = -1;
        c[6] = 1;
        let f = poly(&c);
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.reconstruct(), f);
    }

    #[test]
    fn zero_poly_is_an_error() {
        assert!(factor_rational(&UniPoly::zero()).is_err());
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // (x^2 - 2)(x^2 - 3): factors mod many primes split further,
        // forcing genuine recombination
        let f = poly(&[-2, 0, 1]).mul(&poly(&[-3, 0, 1]));
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        for (g, _) in &fac.factors {
            assert_eq!(g.degree(), 2);
        }
    }
}
