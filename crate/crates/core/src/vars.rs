//! Variable names and the fixed global variable order.
//!
//! All multivariate objects use one global ordering so that printing and
//! monomial comparison are deterministic: the alphabet below comes first
//! (r < s < t < m < d < e < u < v < w < z < ...), any other legal
//! identifier sorts after it alphabetically.

use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// Interned variable identifier. Ordering of `VarId`s is the global
/// variable order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u16);

const FIXED: &[&str] = &[
    "r", "s", "t", "m", "d", "e", "u", "v", "w", "z", "g", "h", "a", "b", "c", "f", "k", "l",
    "n", "o", "p", "q", "x", "y", "F", "G", "H", "T", "X", "Y",
];

struct VarTable {
    names: Vec<String>,
    ids: HashMap<String, u16>,
}

static TABLE: Lazy<Mutex<VarTable>> = Lazy::new(|| {
    let mut names = Vec::new();
    let mut ids = HashMap::new();
    for (i, n) in FIXED.iter().enumerate() {
        names.push(n.to_string());
        ids.insert(n.to_string(), i as u16);
    }
    Mutex::new(VarTable { names, ids })
});

/// Look up (or intern) a variable by name.
///
/// Names outside the fixed alphabet are appended in first-use order; to keep
/// the global order deterministic across runs, catalog data and tests only
/// use the fixed alphabet.
pub fn var(name: &str) -> VarId {
    let mut t = TABLE.lock().unwrap();
    if let Some(&id) = t.ids.get(name) {
        return VarId(id);
    }
    let id = t.names.len() as u16;
    t.names.push(name.to_string());
    t.ids.insert(name.to_string(), id);
    VarId(id)
}

pub fn var_name(id: VarId) -> String {
    TABLE.lock().unwrap().names[id.0 as usize].clone()
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", var_name(*self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_alphabet_order() {
        assert!(var("r") < var("s"));
        assert!(var("s") < var("t"));
        assert!(var("z") < var("g"));
        assert!(var("w") < var("z"));
    }
}
