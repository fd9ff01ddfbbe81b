use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Polynomial in `q` and `t` with nonnegative integer coefficients, keyed by
/// `(q exponent, t exponent)`. Serializes as a list of `[q, t, coeff]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, usize, u64)>", from = "Vec<(usize, usize, u64)>")]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), u64>,
}

impl BiPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, q_exp: usize, t_exp: usize, coeff: u64) {
        if coeff == 0 {
            return;
        }
        *self.terms.entry((q_exp, t_exp)).or_insert(0) += coeff;
    }

    pub fn coeff(&self, q_exp: usize, t_exp: usize) -> u64 {
        self.terms.get(&(q_exp, t_exp)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.terms.iter().map(|(&(q, t), &c)| (q, t, c))
    }

    /// Sum of all coefficients, i.e. the value at `q = t = 1`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn merge(&mut self, other: &BiPoly) {
        for (q, t, c) in other.terms() {
            self.add_term(q, t, c);
        }
    }
}

impl From<BiPoly> for Vec<(usize, usize, u64)> {
    fn from(p: BiPoly) -> Self {
        p.terms().collect()
    }
}

impl From<Vec<(usize, usize, u64)>> for BiPoly {
    fn from(terms: Vec<(usize, usize, u64)>) -> Self {
        let mut poly = BiPoly::new();
        for (q, t, c) in terms {
            poly.add_term(q, t, c);
        }
        poly
    }
}

impl FromIterator<(usize, usize)> for BiPoly {
    /// Counts each `(q exponent, t exponent)` pair as one unit term.
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut poly = BiPoly::new();
        for (q, t) in iter {
            poly.add_term(q, t, 1);
        }
        poly
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, var: char, exp: usize) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        e => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (q, t, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 || (q == 0 && t == 0) {
                write!(f, "{c}")?;
            }
            write_var(f, 'q', q)?;
            write_var(f, 't', t)?;
        }
        Ok(())
    }
}
