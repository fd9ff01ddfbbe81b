//! Sorting-based reflection factorizations of permutations.
//!
//! Straight selection sort repeatedly moves the largest misplaced value home
//! with one transposition. Recording the swapped positions (right
//! multiplication) gives the sorting index; choosing, at each step, the cheaper
//! of the left and right labels gives a factorization of minimal depth.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::perm::{Permutation, Transposition};
use crate::stats;

/// Which side of the accumulated product a factor was multiplied onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// Left multiplication: exchanges two values.
    Left,
    /// Right multiplication: exchanges two positions.
    Right,
}

impl Side {
    fn tag(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortStep {
    pub before: Permutation,
    pub transposition: Transposition,
    pub side: Side,
    pub after: Permutation,
}

/// A run of a sorting procedure, ending at the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortTrace {
    pub steps: Vec<SortStep>,
}

impl SortTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn labels(&self) -> Vec<Transposition> {
        self.steps.iter().map(|s| s.transposition).collect()
    }
}

impl fmt::Display for SortTrace {
    /// One line per step: `<window> --(i j)[L|R]--> <window>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(
                f,
                "{} --{}[{}]--> {}",
                step.before,
                step.transposition,
                step.side.tag(),
                step.after
            )?;
        }
        Ok(())
    }
}

/// Straight selection sort by right multiplication: each step swaps the
/// position of the largest misplaced value with that value's home position.
pub fn selection_sort_trace(w: &Permutation) -> SortTrace {
    let mut current = w.clone();
    let mut steps = Vec::new();
    for value in (1..=w.n()).rev() {
        let pos = current.inverse().get(value);
        if pos == value {
            continue;
        }
        let t = Transposition::new(pos, value).expect("distinct positions");
        let after = current
            .apply_transposition_right(t)
            .expect("positions within range");
        steps.push(SortStep {
            before: current,
            transposition: t,
            side: Side::Right,
            after: after.clone(),
        });
        current = after;
    }
    SortTrace { steps }
}

/// Total positional distance of the selection-sort transpositions.
pub fn sorting_index(w: &Permutation) -> usize {
    selection_sort_trace(w)
        .steps
        .iter()
        .map(|s| s.transposition.weight())
        .sum()
}

/// A factorization `w = u · v` into transpositions, `u` and `v` kept apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    n: usize,
    left: Vec<Transposition>,
    right: Vec<Transposition>,
}

impl Factorization {
    pub fn new(n: usize, left: Vec<Transposition>, right: Vec<Transposition>) -> Self {
        Self { n, left, right }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Factors of `u`, in product order.
    pub fn left(&self) -> &[Transposition] {
        &self.left
    }

    /// Factors of `v`, in product order.
    pub fn right(&self) -> &[Transposition] {
        &self.right
    }

    pub fn factors(&self) -> impl Iterator<Item = Transposition> + '_ {
        self.left.iter().chain(&self.right).copied()
    }

    pub fn side_tags(&self) -> Vec<Side> {
        std::iter::repeat_n(Side::Left, self.left.len())
            .chain(std::iter::repeat_n(Side::Right, self.right.len()))
            .collect()
    }

    pub fn depth_weights(&self) -> Vec<usize> {
        self.factors().map(|t| t.weight()).collect()
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total_weight(&self) -> usize {
        self.factors().map(|t| t.weight()).sum()
    }

    pub fn product(&self) -> Result<Permutation> {
        let mut acc = Permutation::identity(self.n);
        for t in self.factors() {
            acc = acc.apply_transposition_right(t)?;
        }
        Ok(acc)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, word: &[Transposition]) -> fmt::Result {
    if word.is_empty() {
        return f.write_str("e");
    }
    for t in word {
        write!(f, "{t}")?;
    }
    Ok(())
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("u = ")?;
        write_word(f, &self.left)?;
        f.write_str("; v = ")?;
        write_word(f, &self.right)?;
        write!(f, "; weight {}", self.total_weight())
    }
}

/// The selection-sort factorization `w = t_k ⋯ t_1`, every factor on the
/// right.
pub fn selection_factorization(w: &Permutation) -> Factorization {
    let mut right = selection_sort_trace(w).labels();
    right.reverse();
    Factorization::new(w.n(), Vec::new(), right)
}

/// Minimal-depth factorization together with its sorting trace.
///
/// For `m = n, n-1, ..., 2` with `a = w(m) < m` and `j = w⁻¹(m)`, the value
/// `m` is sent home. When `a < j` the step is recorded on the right as
/// `t_{j m}`; otherwise (including the tie `a = j`) it is recorded on the left
/// as `t_{a m}`. Either way the cost is `m - max(a, j)`.
pub fn shallow_decomp_traced(w: &Permutation) -> (Factorization, SortTrace) {
    let mut current = w.clone();
    let mut left = Vec::new();
    let mut right_rev = Vec::new();
    let mut steps = Vec::new();
    for m in (2..=w.n()).rev() {
        let a = current.get(m);
        if a == m {
            continue;
        }
        let j = current.inverse().get(m);
        let (t, side) = if a < j {
            (Transposition::new(j, m), Side::Right)
        } else {
            (Transposition::new(a, m), Side::Left)
        };
        let t = t.expect("distinct points");
        let after = match side {
            Side::Right => current.apply_transposition_right(t),
            Side::Left => current.apply_transposition_left(t),
        }
        .expect("within range");
        match side {
            Side::Right => right_rev.push(t),
            Side::Left => left.push(t),
        }
        steps.push(SortStep {
            before: current,
            transposition: t,
            side,
            after: after.clone(),
        });
        current = after;
    }
    right_rev.reverse();
    (
        Factorization::new(w.n(), left, right_rev),
        SortTrace { steps },
    )
}

pub fn shallow_decomp(w: &Permutation) -> Factorization {
    shallow_decomp_traced(w).0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub expected: String,
    pub found: String,
}

/// Certificate check of a factorization against `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Recomputes the product, the factor count against `ℓ'(w)` and the total
/// weight against `dep(w)`.
pub fn verify_factorization(w: &Permutation, f: &Factorization) -> VerificationReport {
    let product = f.product();
    let product_check = Check {
        name: "product",
        passed: product.as_ref().is_ok_and(|p| p == w),
        expected: w.to_string(),
        found: match &product {
            Ok(p) => p.to_string(),
            Err(e) => e.to_string(),
        },
    };
    let rl = stats::reflection_length(w);
    let count_check = Check {
        name: "reflection_length",
        passed: f.len() == rl,
        expected: rl.to_string(),
        found: f.len().to_string(),
    };
    let dep = stats::depth(w);
    let weight_check = Check {
        name: "depth",
        passed: f.total_weight() == dep,
        expected: dep.to_string(),
        found: f.total_weight().to_string(),
    };
    VerificationReport {
        checks: vec![product_check, count_check, weight_check],
    }
}
