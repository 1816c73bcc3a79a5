//! Classical modular polynomials Phi_N.
//!
//! Levels 2, 3, 5, 7 are compiled in; other levels load from data files in
//! a directory given explicitly or via the SPLITJAC_MODPOLY_DIR environment
//! variable. File format: first line N, then `i j c` rows with i >= j
//! (the symmetric closure is implied).

use crate::error::Error;
use crate::rat::Rat;
use crate::Result;
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Mutex;

/// A symmetric bivariate integer polynomial Phi_N(X, Y).
#[derive(Clone, Debug)]
pub struct ModularPolynomial {
    pub level: u32,
    /// coefficient of X^i Y^j for i >= j only.
    terms: Vec<(u32, u32, Rat)>,
}

impl ModularPolynomial {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let level: u32 = lines
            .next()
            .ok_or_else(|| Error::Parse("empty modular polynomial file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad level line".into()))?;
        let mut terms = Vec::new();
        let mut seen = BTreeMap::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (i, j, c) = match (it.next(), it.next(), it.next()) {
                (Some(i), Some(j), Some(c)) => (i, j, c),
                _ => return Err(Error::Parse(format!("bad row `{line}`"))),
            };
            let i: u32 = i.parse().map_err(|_| Error::Parse("bad exponent".into()))?;
            let j: u32 = j.parse().map_err(|_| Error::Parse("bad exponent".into()))?;
            if i < j {
                return Err(Error::Parse(format!(
                    "row ({i},{j}) violates the i >= j convention"
                )));
            }
            let c: Rat = c.parse()?;
            if seen.insert((i, j), ()).is_some() {
                return Err(Error::Parse(format!("duplicate entry ({i},{j})")));
            }
            terms.push((i, j, c));
        }
        let phi = ModularPolynomial { level, terms };
        phi.check_shape()?;
        Ok(phi)
    }

    /// Symmetry holds by the storage convention; check the degree
    /// N * prod (1 + 1/p) in X.
    fn check_shape(&self) -> Result<()> {
        let mut expected: u32 = self.level;
        let mut m = self.level;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                expected += expected / p;
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            expected += expected / m;
        }
        let degx = self.terms.iter().map(|(i, _, _)| *i).max().unwrap_or(0);
        if degx != expected {
            return Err(Error::Parse(format!(
                "Phi_{} has X-degree {degx}, expected {expected}",
                self.level
            )));
        }
        Ok(())
    }

    /// Exact evaluation of the symmetric closure.
    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let degree = self.terms.iter().map(|(i, _, _)| *i).max().unwrap_or(0) as usize;
        let mut xp = Vec::with_capacity(degree + 1);
        let mut yp = Vec::with_capacity(degree + 1);
        xp.push(Rat::one());
        yp.push(Rat::one());
        for k in 1..=degree {
            xp.push(&xp[k - 1] * x);
            yp.push(&yp[k - 1] * y);
        }
        let mut acc = Rat::zero();
        for (i, j, c) in &self.terms {
            let (i, j) = (*i as usize, *j as usize);
            let mut t = &xp[i] * &yp[j];
            if i != j {
                t = &t + &(&xp[j] * &yp[i]);
            }
            acc = &acc + &(c * &t);
        }
        acc
    }

    /// Evaluate at X = x, leaving a univariate polynomial in Y.
    pub fn eval_partial(&self, x: &Rat) -> crate::unipoly::UniPoly<Rat> {
        let degree = self.terms.iter().map(|(i, _, _)| *i).max().unwrap_or(0) as usize;
        let mut xp = Vec::with_capacity(degree + 1);
        xp.push(Rat::one());
        for k in 1..=degree {
            xp.push(&xp[k - 1] * x);
        }
        let mut coeffs = vec![Rat::zero(); degree + 1];
        for (i, j, c) in &self.terms {
            let (i, j) = (*i as usize, *j as usize);
            coeffs[j] = &coeffs[j] + &(c * &xp[i]);
            if i != j {
                coeffs[i] = &coeffs[i] + &(c * &xp[j]);
            }
        }
        crate::unipoly::UniPoly::new(coeffs)
    }
}

const EMBEDDED: &[(u32, &str)] = &[
    (2, include_str!("modpoly_data/phi_2.txt")),
    (3, include_str!("modpoly_data/phi_3.txt")),
    (5, include_str!("modpoly_data/phi_5.txt")),
    (7, include_str!("modpoly_data/phi_7.txt")),
];

/// Read-only store; embedded levels plus an optional data directory.
pub struct ModularPolyStore {
    dir: Option<PathBuf>,
    cache: Mutex<BTreeMap<u32, &'static ModularPolynomial>>,
}

static EMBEDDED_PARSED: Lazy<Vec<ModularPolynomial>> = Lazy::new(|| {
    EMBEDDED
        .iter()
        .map(|(n, text)| {
            let phi = ModularPolynomial::parse(text).expect("embedded data parses");
            assert_eq!(phi.level, *n);
            phi
        })
        .collect()
});

impl ModularPolyStore {
    /// Store with the data directory from SPLITJAC_MODPOLY_DIR, if set.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("SPLITJAC_MODPOLY_DIR").map(PathBuf::from);
        ModularPolyStore { dir, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn with_dir(dir: Option<PathBuf>) -> Self {
        ModularPolyStore { dir, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn available(&self, level: u32) -> bool {
        self.get(level).is_ok()
    }

    pub fn get(&self, level: u32) -> Result<&'static ModularPolynomial> {
        if let Some(phi) = EMBEDDED_PARSED.iter().find(|p| p.level == level) {
            // the Lazy never drops, so the reference is effectively static
            let ptr: &'static ModularPolynomial =
                unsafe { std::mem::transmute::<&ModularPolynomial, _>(phi) };
            return Ok(ptr);
        }
        let mut cache = self.cache.lock().unwrap();
        if let Some(phi) = cache.get(&level) {
            return Ok(phi);
        }
        let dir = self
            .dir
            .clone()
            .ok_or(Error::ModularPolyUnavailable(level))?;
        let path = dir.join(format!("phi_{level}.txt"));
        let text =
            std::fs::read_to_string(&path).map_err(|_| Error::ModularPolyUnavailable(level))?;
        let phi = ModularPolynomial::parse(&text)?;
        if phi.level != level {
            return Err(Error::Parse(format!(
                "file {} declares level {}",
                path.display(),
                phi.level
            )));
        }
        let leaked: &'static ModularPolynomial = Box::leak(Box::new(phi));
        cache.insert(level, leaked);
        Ok(leaked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_rational;

    #[test]
    fn embedded_levels_parse() {
        let store = ModularPolyStore::with_dir(None);
        for n in [2u32, 3, 5, 7] {
            assert!(store.available(n), "phi_{n} missing");
        }
        assert!(!store.available(11));
    }

    #[test]
    fn phi2_vanishes_on_the_1728_pair() {
        // the curve 2-isogenous to y^2 = x^3 + x has j = 66^3; both roots of
        // Phi_2(1728, Y) over Q are CM values, 66^3 among them
        let store = ModularPolyStore::with_dir(None);
        let phi2 = store.get(2).unwrap();
        let j1 = Rat::from_int(1728);
        let jprime = Rat::from_int(66 * 66 * 66);
        assert!(phi2.eval(&j1, &jprime).is_zero());
        // and via the factorization of the specialized polynomial
        let uni = phi2.eval_partial(&j1);
        let fac = factor_rational(&uni).unwrap();
        let has_root = fac
            .factors
            .iter()
            .any(|(f, _)| f.degree() == 1 && f.coeff(0) == -jprime.clone());
        assert!(has_root);
    }

    #[test]
    fn phi3_on_known_cm_pair() {
        // j = 0 (CM by -3) and j = -12288000 (CM by -27) are 3-isogenous
        let store = ModularPolyStore::with_dir(None);
        let phi3 = store.get(3).unwrap();
        assert!(phi3
            .eval(&Rat::zero(), &Rat::from_int(-12288000))
            .is_zero());
        // j = 54000 (CM by -12, class number 1) is 3-isogenous to itself
        assert!(phi3
            .eval(&Rat::from_int(54000), &Rat::from_int(54000))
            .is_zero());
        assert!(!phi3.eval(&Rat::from_int(1), &Rat::from_int(2)).is_zero());
    }

    #[test]
    fn symmetry_of_evaluation() {
        let store = ModularPolyStore::with_dir(None);
        for n in [2u32, 3, 5, 7] {
            let phi = store.get(n).unwrap();
            let a = Rat::from_frac(22, 7);
            let b = Rat::from_int(-13);
            assert_eq!(phi.eval(&a, &b), phi.eval(&b, &a));
        }
    }
}
