//! A bijection of `S_n` carrying `(des, drop)` to `(exc, dep)`, and the map
//! from permutations to Dyck paths through their left-right maxima.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Builds `v` value by value: for each `j`, if `w(j)` exceeds some later
/// entry then `v(w(j+1)) = w(j)`; otherwise, with `i < j` maximal such that
/// `w(i) < w(j)` (and `w(0) = 0`), `v(w(i+1)) = w(j)`.
pub fn steingrimsson_phi(w: &Permutation) -> Permutation {
    let n = w.n();
    let win = w.window();
    let mut v = vec![0usize; n];
    // suffix_min[j] = min of win[j..]
    let mut suffix_min = vec![usize::MAX; n + 1];
    for j in (0..n).rev() {
        suffix_min[j] = suffix_min[j + 1].min(win[j]);
    }
    for j in 0..n {
        let value = win[j];
        let target = if suffix_min[j + 1] < value {
            win[j + 1]
        } else {
            let i = (0..j).rev().find(|&i| win[i] < value).map_or(0, |i| i + 1);
            win[i]
        };
        assert_eq!(
            v[target - 1],
            0,
            "placement collision at v({target}) for {w}"
        );
        v[target - 1] = value;
    }
    Permutation::from_window_unchecked(v)
}

/// Inverse of [`steingrimsson_phi`]: each cycle of `v`, read backwards from
/// its minimum `c` as `v^{k-1}(c) ⋯ v(c) c`, is one block of `w`, and blocks
/// are concatenated in increasing order of their minima.
pub fn steingrimsson_phi_inverse(v: &Permutation) -> Permutation {
    let mut window = Vec::with_capacity(v.n());
    for cycle in v.cycle_decomposition().cycles() {
        let min = cycle[0];
        let mut block = vec![min];
        let mut x = v.get(min);
        while x != min {
            block.push(x);
            x = v.get(x);
        }
        block.reverse();
        window.extend(block);
    }
    Permutation::from_window_unchecked(window)
}

/// Pairs `(i, w(i))` where `w(i)` exceeds every earlier value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftRightMaxima {
    pub pairs: Vec<(usize, usize)>,
}

pub fn lr_maxima(w: &Permutation) -> LeftRightMaxima {
    let mut best = 0;
    let mut pairs = Vec::new();
    for (k, &v) in w.window().iter().enumerate() {
        if v > best {
            best = v;
            pairs.push((k + 1, v));
        }
    }
    LeftRightMaxima { pairs }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

/// Lattice path from `(0,0)` to `(n,n)` never going below `y = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidDyckPath("empty path".into()));
        }
        let mut height = 0i64;
        for (k, s) in steps.iter().enumerate() {
            height += if *s == Step::N { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!(
                    "goes below the diagonal at step {}",
                    k + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath("unequal numbers of N and E".into()));
        }
        Ok(Self { steps })
    }

    /// The staircase `NENE⋯NE`.
    pub fn staircase(n: usize) -> Self {
        Self {
            steps: (0..n).flat_map(|_| [Step::N, Step::E]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Points `(x, y)` where a north step is followed by an east step.
    pub fn outer_corners(&self) -> Vec<(usize, usize)> {
        let (mut x, mut y) = (0, 0);
        let mut corners = Vec::new();
        for (k, s) in self.steps.iter().enumerate() {
            match s {
                Step::N => {
                    y += 1;
                    if self.steps.get(k + 1) == Some(&Step::E) {
                        corners.push((x, y));
                    }
                }
                Step::E => x += 1,
            }
        }
        corners
    }

    /// All Dyck paths of semilength `n`, in lexicographic order (`N < E`).
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn grow(
            n: usize,
            ups: usize,
            downs: usize,
            prefix: &mut Vec<Step>,
            out: &mut Vec<DyckPath>,
        ) {
            if downs == n {
                out.push(DyckPath {
                    steps: prefix.clone(),
                });
                return;
            }
            if ups < n {
                prefix.push(Step::N);
                grow(n, ups + 1, downs, prefix, out);
                prefix.pop();
            }
            if downs < ups {
                prefix.push(Step::E);
                grow(n, ups, downs + 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            grow(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
        }
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let steps = text
            .trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(Error::InvalidDyckPath(format!(
                    "unexpected symbol `{other}`"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(text: String) -> Result<Self> {
        text.parse()
    }
}

impl From<DyckPath> for String {
    fn from(p: DyckPath) -> Self {
        p.to_string()
    }
}

/// The Dyck path whose outer corners are `(i-1, w(i))` for the left-right
/// maxima `(i, w(i))` of `w`.
pub fn dyck_of_perm(w: &Permutation) -> DyckPath {
    let n = w.n();
    let (mut x, mut y) = (0, 0);
    let mut steps = Vec::with_capacity(2 * n);
    for (i, value) in lr_maxima(w).pairs {
        steps.extend(std::iter::repeat_n(Step::E, i - 1 - x));
        steps.extend(std::iter::repeat_n(Step::N, value - y));
        x = i - 1;
        y = value;
    }
    steps.extend(std::iter::repeat_n(Step::E, n - x));
    DyckPath::new(steps).expect("left-right maxima lie on or above the diagonal")
}

/// The unique 321-avoiding permutation over `p`: left-right maxima at the
/// corners, every other value filled in increasing order.
pub fn minimal_fiber_rep(p: &DyckPath) -> Permutation {
    let n = p.n();
    let mut window = vec![0usize; n];
    let mut used = vec![false; n + 1];
    for (x, y) in p.outer_corners() {
        window[x] = y;
        used[y] = true;
    }
    let mut rest = (1..=n).filter(|&v| !used[v]);
    for slot in window.iter_mut().filter(|v| **v == 0) {
        *slot = rest.next().expect("one free value per free position");
    }
    Permutation::from_window_unchecked(window)
}
