//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are keyed by exponent vectors aligned with a sorted variable list;
//! the monomial order used for leading terms and printing is graded
//! lexicographic with respect to the fixed global variable order.

use crate::rat::Rat;
use crate::traits::Ring;
use crate::unipoly::UniPoly;
use crate::vars::{var_name, VarId};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    /// Variables actually appearing, ascending in the global order.
    vars: Vec<VarId>,
    /// Exponent vector -> nonzero coefficient.
    terms: BTreeMap<Vec<u16>, Rat>,
}

/// Graded lexicographic comparison of exponent vectors (same variable list).
pub fn grlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rat::from_int(n))
    }

    pub fn variable(v: VarId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rat::one());
        MultiPoly { vars: vec![v], terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rat)> {
        self.terms.iter()
    }

    /// Remove variables that no longer occur.
    fn trim(mut self) -> Self {
        if self.terms.is_empty() {
            self.vars.clear();
            return self;
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for expv in self.terms.keys() {
            for (i, &e) in expv.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        let vars: Vec<VarId> = keep.iter().map(|&i| self.vars[i]).collect();
        let mut terms = BTreeMap::new();
        for (expv, c) in self.terms {
            let nv: Vec<u16> = keep.iter().map(|&i| expv[i]).collect();
            terms.insert(nv, c);
        }
        MultiPoly { vars, terms }
    }

    /// Re-express the polynomial on a superset of its variables.
    fn embed(&self, vars: &[VarId]) -> BTreeMap<Vec<u16>, Rat> {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("embed: missing variable"))
            .collect();
        let mut out = BTreeMap::new();
        for (expv, c) in &self.terms {
            let mut nv = vec![0u16; vars.len()];
            for (i, &e) in expv.iter().enumerate() {
                nv[pos[i]] = e;
            }
            out.insert(nv, c.clone());
        }
        out
    }

    fn merged_vars(&self, other: &Self) -> Vec<VarId> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(*v);
            }
        }
        vars.sort();
        vars
    }

    pub fn add(&self, other: &Self) -> Self {
        let vars = self.merged_vars(other);
        let mut terms = self.embed(&vars);
        for (expv, c) in other.embed(&vars) {
            let entry = terms.entry(expv).or_insert_with(Rat::zero);
            *entry = &*entry + &c;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms }.trim()
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.merged_vars(other);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut terms: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let ev: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                let entry = terms.entry(ev).or_insert_with(Rat::zero);
                *entry = &*entry + &c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms }.trim()
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
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

    pub fn degree_in(&self, v: VarId) -> usize {
        match self.vars.iter().position(|w| *w == v) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i] as usize).max().unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Leading (grlex-maximal) term.
    pub fn leading(&self) -> Option<(Vec<u16>, Rat)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c).unwrap_or_else(Rat::zero)
    }

    pub fn derivative(&self, v: VarId) -> Self {
        let i = match self.vars.iter().position(|w| *w == v) {
            None => return Self::zero(),
            Some(i) => i,
        };
        let mut terms = BTreeMap::new();
        for (expv, c) in &self.terms {
            if expv[i] == 0 {
                continue;
            }
            let mut nv = expv.clone();
            nv[i] -= 1;
            terms.insert(nv, c * &Rat::from_int(expv[i] as i64));
        }
        MultiPoly { vars: self.vars.clone(), terms }.trim()
    }

    /// Substitute a rational for one variable.
    pub fn specialize(&self, v: VarId, value: &Rat) -> Self {
        let i = match self.vars.iter().position(|w| *w == v) {
            None => return self.clone(),
            Some(i) => i,
        };
        let maxe = self.degree_in(v);
        let mut powers = Vec::with_capacity(maxe + 1);
        powers.push(Rat::one());
        for k in 1..=maxe {
            powers.push(&powers[k - 1] * value);
        }
        let mut terms: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
        for (expv, c) in &self.terms {
            let mut nv = expv.clone();
            let e = nv.remove(i) as usize;
            let c = c * &powers[e];
            let entry = terms.entry(nv).or_insert_with(Rat::zero);
            *entry = &*entry + &c;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut vars = self.vars.clone();
        vars.remove(i);
        MultiPoly { vars, terms }.trim()
    }

    /// Evaluate fully; all remaining variables must be assigned.
    pub fn eval(&self, assign: &[(VarId, Rat)]) -> Option<Rat> {
        let mut p = self.clone();
        for (v, x) in assign {
            p = p.specialize(*v, x);
        }
        p.as_constant()
    }

    /// View as a dense univariate polynomial in `v` with `MultiPoly`
    /// coefficients (in the remaining variables).
    pub fn coeffs_in(&self, v: VarId) -> Vec<MultiPoly> {
        let i = match self.vars.iter().position(|w| *w == v) {
            None => return vec![self.clone()],
            Some(i) => i,
        };
        let deg = self.degree_in(v);
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out: Vec<BTreeMap<Vec<u16>, Rat>> = vec![BTreeMap::new(); deg + 1];
        for (expv, c) in &self.terms {
            let mut nv = expv.clone();
            let e = nv.remove(i) as usize;
            out[e].insert(nv, c.clone());
        }
        out.into_iter()
            .map(|terms| MultiPoly { vars: vars.clone(), terms }.trim())
            .collect()
    }

    /// Inverse of `coeffs_in`.
    pub fn from_coeffs_in(v: VarId, coeffs: &[MultiPoly]) -> MultiPoly {
        let xv = MultiPoly::variable(v);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(&xv).add(c);
        }
        acc
    }

    /// Convert to a dense univariate polynomial over Q. Fails if more than
    /// one variable occurs.
    pub fn to_unipoly(&self) -> Option<UniPoly<Rat>> {
        if self.vars.len() > 1 {
            return None;
        }
        if self.vars.is_empty() {
            return Some(UniPoly::constant(self.as_constant().unwrap_or_else(Rat::zero)));
        }
        let deg = self.terms.keys().map(|e| e[0] as usize).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_unipoly(v: VarId, p: &UniPoly<Rat>) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![i as u16], c.clone());
            }
        }
        MultiPoly { vars: vec![v], terms }.trim()
    }

    /// Rational content: positive gcd of all coefficients.
    pub fn content(&self) -> Rat {
        let mut c = Rat::zero();
        for coef in self.terms.values() {
            c = c.gcd(coef);
            if c.is_one() {
                break;
            }
        }
        c
    }

    /// `self = content * primitive`, with primitive having integer coprime
    /// coefficients and positive leading coefficient; returns
    /// (signed content, primitive part).
    pub fn primitive(&self) -> (Rat, MultiPoly) {
        if self.is_zero() {
            return (Rat::zero(), MultiPoly::zero());
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        let inv = c.recip().unwrap();
        (c, self.scale(&inv))
    }

    /// Exact multivariate division; `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip().unwrap()));
        }
        let vars = self.merged_vars(divisor);
        let mut rem = MultiPoly { vars: vars.clone(), terms: self.embed(&vars) };
        let dterms = divisor.embed(&vars);
        let (dlead, dcoef) = dterms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut qterms: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
        while !rem.terms.is_empty() {
            let (rlead, rcoef) = rem
                .terms
                .iter()
                .max_by(|a, b| grlex_cmp(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            // monomial divisibility
            let mut q = vec![0u16; vars.len()];
            for i in 0..vars.len() {
                if rlead[i] < dlead[i] {
                    return None;
                }
                q[i] = rlead[i] - dlead[i];
            }
            let qc = &rcoef / &dcoef;
            // rem -= qc * X^q * divisor
            let mut sub = BTreeMap::new();
            for (e, c) in &dterms {
                let ev: Vec<u16> = e.iter().zip(&q).map(|(x, y)| x + y).collect();
                sub.insert(ev, c * &qc);
            }
            for (e, c) in sub {
                let entry = rem.terms.entry(e).or_insert_with(Rat::zero);
                *entry = &*entry - &c;
            }
            rem.terms.retain(|_, c| !c.is_zero());
            qterms.insert(q, qc);
        }
        Some(MultiPoly { vars, terms: qterms }.trim())
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Primitive positive gcd.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive().1;
        }
        if b.is_zero() {
            return a.primitive().1;
        }
        if a.is_constant() || b.is_constant() {
            return MultiPoly::one();
        }
        let pa = a.primitive().1;
        let pb = b.primitive().1;
        let vars = pa.merged_vars(&pb);
        let g = if vars.len() == 1 {
            let ua = pa.to_unipoly().unwrap();
            let ub = pb.to_unipoly().unwrap();
            let g = ua.gcd(&ub);
            MultiPoly::from_unipoly(vars[0], &g)
        } else if vars.len() == 2 {
            gcd_bivariate(&pa, &pb, &vars)
        } else {
            gcd_prs(&pa, &pb)
        };
        g.primitive().1
    }

    /// Squarefree decomposition with respect to one variable combined with
    /// recursion on the content; returns the exact square root when `self`
    /// is a perfect square.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = self.as_constant() {
            return c.sqrt().map(MultiPoly::constant);
        }
        let v = *self.vars.last().unwrap();
        let coeffs = self.coeffs_in(v);
        let mut cont = MultiPoly::zero();
        for c in &coeffs {
            cont = MultiPoly::gcd(&cont, c);
        }
        let pp = self.div_exact(&cont).expect("content division");
        let sc = sqrt_primitive_in(&pp, v)?;
        let scont = cont.sqrt_exact()?;
        let cand = sc.mul(&scont);
        // candidate may be off by a rational unit; fix by comparing one term
        let cand2 = cand.mul(&cand);
        if &cand2 == self {
            return Some(cand);
        }
        // try rational correction factor
        let (lead_self, cself) = self.leading()?;
        let (lead_c2, cc2) = cand2.leading()?;
        if lead_self == lead_c2 {
            let ratio = &cself / &cc2;
            if let Some(u) = ratio.sqrt() {
                let fixed = cand.scale(&u);
                if fixed.mul(&fixed) == *self {
                    return Some(fixed);
                }
            }
        }
        None
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_exact().is_some()
    }
}

/// Square root of a polynomial primitive w.r.t. `v`, via Yun's squarefree
/// decomposition in `v`.
fn sqrt_primitive_in(p: &MultiPoly, v: VarId) -> Option<MultiPoly> {
    let dp = p.derivative(v);
    if dp.is_zero() {
        // constant in v; recurse on a different variable
        return p.sqrt_exact();
    }
    let mut g = MultiPoly::gcd(p, &dp);
    if g.is_constant() {
        // squarefree and nonconstant: not a square (unless constant overall)
        return None;
    }
    // p = g * h with h squarefree-ish; square root must be g-part only when
    // h is constant; otherwise recurse: sqrt(p) = sqrt(g^2 * (p/g^2)) pattern
    // via the classic: if p = s^2 then gcd(p, p') = s * gcd(s, s') ...
    // Simpler robust route: candidate s = g * sqrt(p / g^2) when g^2 | p,
    // else p is not a square.
    let g2 = g.mul(&g);
    if let Some(q) = p.div_exact(&g2) {
        let sq = q.sqrt_exact()?;
        g = g.mul(&sq);
        Some(g)
    } else {
        // gcd contains square factors unevenly; fall back on dividing once
        let q = p.div_exact(&g)?;
        // p = g*q; a square iff g = q * u^2 ... handle recursively
        let qq = MultiPoly::gcd(&g, &q);
        if qq.is_constant() {
            return None;
        }
        let r = p.div_exact(&qq.mul(&qq))?;
        let sr = r.sqrt_exact()?;
        Some(qq.mul(&sr))
    }
}

/// Bivariate gcd by evaluation/interpolation with exact-division
/// verification.
fn gcd_bivariate(a: &MultiPoly, b: &MultiPoly, vars: &[VarId]) -> MultiPoly {
    let xv = vars[1]; // main variable: the later one in global order
    let yv = vars[0];
    let ca = content_in(a, xv);
    let cb = content_in(b, xv);
    let cont = MultiPoly::gcd(&ca, &cb);
    let pa = a.div_exact(&ca).unwrap();
    let pb = b.div_exact(&cb).unwrap();

    let la = lc_in(&pa, xv);
    let lb = lc_in(&pb, xv);
    let lcg = MultiPoly::gcd(&la, &lb);

    let ydeg_bound = pa.degree_in(yv).min(pb.degree_in(yv)) + lcg.degree_in(yv) + 1;

    'retry: for attempt in 0..8 {
        let mut nodes: Vec<Rat> = Vec::new();
        let mut values: Vec<UniPoly<Rat>> = Vec::new();
        let mut target_deg: Option<usize> = None;
        let mut k: i64 = -(attempt as i64) * 37;
        while values.len() < ydeg_bound + 1 {
            let y = Rat::from_int(k);
            k += 1;
            if k > 10_000 {
                break 'retry;
            }
            if la.eval(&[(yv, y.clone())]).map_or(true, |c| c.is_zero()) {
                continue;
            }
            if lb.eval(&[(yv, y.clone())]).map_or(true, |c| c.is_zero()) {
                continue;
            }
            let ua = pa.specialize(yv, &y).to_unipoly().unwrap();
            let ub = pb.specialize(yv, &y).to_unipoly().unwrap();
            let g = ua.gcd(&ub);
            match target_deg {
                None => target_deg = Some(g.degree()),
                Some(d) if g.degree() < d => {
                    // earlier nodes were unlucky; restart with the lower degree
                    nodes.clear();
                    values.clear();
                    target_deg = Some(g.degree());
                }
                Some(d) if g.degree() > d => continue, // unlucky node
                _ => {}
            }
            let scale = lcg.eval(&[(yv, y.clone())]).unwrap();
            values.push(g.monic().scale(&scale));
            nodes.push(y);
        }
        if target_deg == Some(0) {
            return cont;
        }
        // Newton interpolation with UniPoly<Rat> values
        let h = newton_interp(&nodes, &values, yv, vars[1]);
        let (_, hpp) = {
            let c = content_in(&h, xv);
            (c.clone(), h.div_exact(&c).unwrap())
        };
        if hpp.divides(&pa) && hpp.divides(&pb) {
            return cont.mul(&hpp);
        }
    }
    // fall back to PRS (always correct)
    cont.mul(&gcd_prs(&pa, &pb))
}

fn newton_interp(nodes: &[Rat], values: &[UniPoly<Rat>], yv: VarId, xv: VarId) -> MultiPoly {
    // divided differences over Q[x]
    let n = nodes.len();
    let mut dd: Vec<UniPoly<Rat>> = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = &nodes[i] - &nodes[i - j];
            dd[i] = num.scale(&den.recip().unwrap());
        }
    }
    // assemble sum dd[i] * prod_{k<i} (y - y_k)
    let y = MultiPoly::variable(yv);
    let mut acc = MultiPoly::zero();
    let mut basis = MultiPoly::one();
    for i in 0..n {
        let coef = MultiPoly::from_unipoly(xv, &dd[i]);
        acc = acc.add(&coef.mul(&basis));
        let lin = y.sub(&MultiPoly::constant(nodes[i].clone()));
        basis = basis.mul(&lin);
    }
    acc
}

fn content_in(p: &MultiPoly, v: VarId) -> MultiPoly {
    let mut c = MultiPoly::zero();
    for q in p.coeffs_in(v) {
        c = MultiPoly::gcd(&c, &q);
        if c.is_one() {
            break;
        }
    }
    if c.is_zero() {
        MultiPoly::one()
    } else {
        c
    }
}

fn lc_in(p: &MultiPoly, v: VarId) -> MultiPoly {
    p.coeffs_in(v).pop().unwrap_or_else(MultiPoly::zero)
}

/// Primitive pseudo-remainder sequence gcd; used for three or more
/// variables, where the catalog degrees stay small.
fn gcd_prs(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let vars = a.merged_vars(b);
    let v = *vars.last().unwrap();
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let cf = content_in(&f, v);
    let cg = content_in(&g, v);
    let cont = MultiPoly::gcd(&cf, &cg);
    f = f.div_exact(&cf).unwrap();
    g = g.div_exact(&cg).unwrap();
    loop {
        if g.is_zero() {
            let pf = f.div_exact(&content_in(&f, v)).unwrap();
            return cont.mul(&pf).primitive().1;
        }
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = match r {
            None => MultiPoly::zero(),
            Some(r) => {
                if r.is_zero() {
                    MultiPoly::zero()
                } else {
                    r.div_exact(&content_in(&r, v)).unwrap()
                }
            }
        };
    }
}

/// Pseudo-remainder of f by g in variable v: lc(g)^(df-dg+1) * f mod g.
fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, v: VarId) -> Option<MultiPoly> {
    let df = f.degree_in(v);
    let dg = g.degree_in(v);
    if df < dg {
        return Some(f.clone());
    }
    let gc = g.coeffs_in(v);
    let lg = gc.last().unwrap().clone();
    let xv = MultiPoly::variable(v);
    let mut r = f.clone();
    let mut dr = df;
    while !r.is_zero() && dr >= dg {
        let rc = r.coeffs_in(v);
        let lr = rc.last().unwrap().clone();
        // r = lg * r - lr * x^(dr-dg) * g
        let shift = xv.pow((dr - dg) as u32);
        r = lg.mul(&r).sub(&lr.mul(&shift).mul(g));
        let ndr = r.degree_in(v);
        if !r.is_zero() && ndr >= dr {
            return None; // no progress; should not happen
        }
        dr = ndr;
    }
    Some(r)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut items: Vec<(&Vec<u16>, &Rat)> = self.terms.iter().collect();
        items.sort_by(|a, b| grlex_cmp(b.0, a.0));
        let mut first = true;
        for (expv, c) in items {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_mono = expv.iter().all(|&e| e == 0);
            let mut wrote = false;
            if !mag.is_one() || is_const_mono {
                write!(f, "{}", mag)?;
                wrote = true;
            }
            for (i, &e) in expv.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", var_name(self.vars[i]))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::var;

    fn p(s: &str) -> MultiPoly {
        crate::parse::parse_poly(s).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let r = MultiPoly::variable(var("r"));
        let s = MultiPoly::variable(var("s"));
        let f = r.add(&s).mul(&r.sub(&s));
        let g = r.mul(&r).sub(&s.mul(&s));
        assert_eq!(f, g);
        assert_eq!(f.total_degree(), 2);
    }

    #[test]
    fn trim_removes_cancelled_variables() {
        let f = p("r + s").sub(&p("s"));
        assert_eq!(f, p("r"));
        assert_eq!(f.vars().len(), 1);
    }

    #[test]
    fn exact_division() {
        let f = p("r^2 - s^2");
        let g = p("r - s");
        assert_eq!(f.div_exact(&g), Some(p("r + s")));
        assert_eq!(f.div_exact(&p("r + 1")), None);
    }

    #[test]
    fn bivariate_gcd() {
        let a = p("(r + s)^2 * (r - 2*s)");
        let b = p("(r + s) * (r + 3*s^2)");
        let g = MultiPoly::gcd(&a, &b);
        assert_eq!(g, p("r + s"));
    }

    #[test]
    fn trivariate_gcd_prs() {
        let a = p("(r + s + t)^2 * (r - t)");
        let b = p("(r + s + t) * (s + t^2)");
        let g = MultiPoly::gcd(&a, &b);
        assert_eq!(g, p("r + s + t"));
    }

    #[test]
    fn sqrt_of_squares() {
        let f = p("(2*r + 3*s - 1)^2 * (r - s)^4");
        let r = f.sqrt_exact().unwrap();
        assert_eq!(r.mul(&r), f);
        assert!(p("r^2 - s").sqrt_exact().is_none());
        assert_eq!(p("9/4").sqrt_exact().unwrap(), p("3/2"));
    }

    #[test]
    fn specialize_and_eval() {
        let f = p("r^2*s - 3*s + 1/2");
        let g = f.specialize(var("r"), &Rat::from_int(2));
        assert_eq!(g, p("s + 1/2"));
        let v = f
            .eval(&[(var("r"), Rat::from_int(2)), (var("s"), Rat::from_frac(1, 2))])
            .unwrap();
        assert_eq!(v, Rat::from_int(1));
    }
}
