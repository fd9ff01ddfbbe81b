//! Permutations of `[n]` in one-line notation.
//!
//! Every public index and value is 1-based: `w.get(i)` is `w(i)`. Products
//! follow `(a·b)(i) = a(b(i))`, so right multiplication by a transposition
//! swaps positions and left multiplication swaps values.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line window, checking that it is a
    /// rearrangement of `1..=n`.
    pub fn new(window: Vec<usize>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::Empty);
        }
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange { value: v as i64, n });
            }
            if seen[v] {
                return Err(Error::RepeatedValue(v as i64));
            }
            seen[v] = true;
        }
        Ok(Self { window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<usize>) -> Self {
        debug_assert!(Self::new(window.clone()).is_ok());
        Self { window }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "a permutation needs n >= 1");
        Self {
            window: (1..=n).collect(),
        }
    }

    /// The decreasing permutation `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "a permutation needs n >= 1");
        Self {
            window: (1..=n).rev().collect(),
        }
    }

    /// Product of simple reflections `s_{k1} s_{k2} ...` in `S_n`.
    pub fn from_simple_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &k in word {
            let t = Transposition::new(k, k + 1)?;
            w = w.apply_transposition_right(t)?;
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let window = other.window.iter().map(|&b| self.window[b - 1]).collect();
        Ok(Self { window })
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.n()];
        for (k, &v) in self.window.iter().enumerate() {
            window[v - 1] = k + 1;
        }
        Self { window }
    }

    /// `w · t`: exchanges the entries in positions `t.i()` and `t.j()`.
    pub fn apply_transposition_right(&self, t: Transposition) -> Result<Permutation> {
        self.check_bounds(t)?;
        let mut window = self.window.clone();
        window.swap(t.i() - 1, t.j() - 1);
        Ok(Self { window })
    }

    /// `t · w`: exchanges the values `t.i()` and `t.j()` wherever they sit.
    pub fn apply_transposition_left(&self, t: Transposition) -> Result<Permutation> {
        self.check_bounds(t)?;
        let window = self
            .window
            .iter()
            .map(|&v| {
                if v == t.i() {
                    t.j()
                } else if v == t.j() {
                    t.i()
                } else {
                    v
                }
            })
            .collect();
        Ok(Self { window })
    }

    fn check_bounds(&self, t: Transposition) -> Result<()> {
        if t.j() > self.n() {
            return Err(Error::TranspositionOutOfRange {
                i: t.i(),
                j: t.j(),
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut x = self.get(start);
            while x != start {
                visited[x] = true;
                cycle.push(x);
                x = self.get(x);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }

    /// A reduced word `[k1, k2, ...]` with `w = s_{k1} s_{k2} ...`, found by
    /// bubble sorting.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut window = self.window.clone();
        let mut sorting = Vec::new();
        while let Some(k) = (0..window.len().saturating_sub(1)).find(|&k| window[k] > window[k + 1])
        {
            window.swap(k, k + 1);
            sorting.push(k + 1);
        }
        sorting.reverse();
        sorting
    }

    /// Position of this permutation in the lexicographic order of `S_n`,
    /// computed from its Lehmer code.
    pub fn lex_rank(&self) -> u64 {
        let n = self.n();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_after = self.window[i + 1..]
                .iter()
                .filter(|&&v| v < self.window[i])
                .count() as u64;
            rank = rank * (n - i) as u64 + smaller_after;
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let total = factorial(n).ok_or(Error::OverCap {
            what: "n",
            value: n,
            cap: 20,
        })?;
        if rank >= total {
            return Err(Error::OverCap {
                what: "rank",
                value: rank as usize,
                cap: total as usize - 1,
            });
        }
        let mut code = vec![0usize; n];
        for i in (0..n).rev() {
            let radix = (n - i) as u64;
            code[i] = (rank % radix) as usize;
            rank /= radix;
        }
        let mut remaining: Vec<usize> = (1..=n).collect();
        let window = code.into_iter().map(|c| remaining.remove(c)).collect();
        Ok(Self { window })
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: (n >= 1).then(|| (1..=n).collect()),
        }
    }
}

pub(crate) fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Advances `slice` to its lexicographic successor; returns `false` (leaving
/// the slice untouched) when it is already the last arrangement.
pub fn next_lex<T: Ord>(slice: &mut [T]) -> bool {
    let Some(i) = (1..slice.len()).rev().find(|&i| slice[i - 1] < slice[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (i..slice.len())
        .rev()
        .find(|&j| slice[j] > slice[pivot])
        .expect("a larger element exists right of the pivot");
    slice.swap(pivot, j);
    slice[i..].reverse();
    true
}

#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { window: current })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts contiguous digits (`2431756`, one value per digit) or integers
    /// separated by commas and/or whitespace (`10,2,3,4,5,6,7,8,9,1`).
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Empty);
        }
        let separated = text.contains(|c: char| c == ',' || c.is_whitespace());
        let values: Vec<i64> = if separated {
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| Error::MalformedToken(tok.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| Error::MalformedToken(c.to_string()))
                })
                .collect::<Result<_>>()?
        };
        let n = values.len();
        if let Some(&bad) = values.iter().find(|&&v| v < 1 || v > n as i64) {
            return Err(Error::ValueOutOfRange { value: bad, n });
        }
        let mut seen = HashSet::new();
        if let Some(&dup) = values.iter().find(|&&v| !seen.insert(v)) {
            return Err(Error::RepeatedValue(dup));
        }
        Ok(Self {
            window: values.into_iter().map(|v| v as usize).collect(),
        })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(window: Vec<usize>) -> Result<Self> {
        Self::new(window)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.window
    }
}

/// The transposition `t_{ij}` exchanging `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    /// Accepts the two points in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::DegenerateTransposition(a, b));
        }
        Ok(Self {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// `j - i`, the depth of `t_{ij}` in `S_n`.
    pub fn weight(&self) -> usize {
        self.j - self.i
    }

    pub fn is_simple(&self) -> bool {
        self.weight() == 1
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::identity(n.max(1)).apply_transposition_right(*self)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

/// Disjoint cycles of a permutation, fixed points included. Each cycle starts
/// at its minimum and cycles are ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn product(&self) -> Permutation {
        let mut window = vec![0; self.n];
        for cycle in &self.cycles {
            for (k, &x) in cycle.iter().enumerate() {
                window[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation { window }
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            let parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            Permutation::identity(4).compose(&p("3412")).unwrap(),
            p("3412")
        );
        let t45 = Transposition::new(4, 5).unwrap().to_permutation(7).unwrap();
        assert_eq!(p("2431756").compose(&t45).unwrap(), p("2437156"));
        assert_eq!(p("2134").compose(&p("2134")).unwrap(), p("1234"));
        assert!(matches!(
            p("12").compose(&p("123")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("3715246").inverse(), p("3516472"));
        let t = Transposition::new(2, 5).unwrap().to_permutation(6).unwrap();
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn inverse_exhaustive() {
        for n in 1..=7 {
            for w in Permutation::all(n) {
                assert!(w.compose(&w.inverse()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn cycles() {
        let c = p("2431756").cycle_decomposition();
        assert_eq!(c.cycles(), &[vec![1, 2, 4], vec![3], vec![5, 7, 6]]);
        assert_eq!(c.to_string(), "(1 2 4)(3)(5 7 6)");
        assert_eq!(Permutation::identity(5).cycle_decomposition().count(), 5);
        assert_eq!(
            p("3412").cycle_decomposition().cycles(),
            &[vec![1, 3], vec![2, 4]]
        );
        for w in Permutation::all(6) {
            let c = w.cycle_decomposition();
            assert_eq!(c.product(), w);
            let mut all: Vec<usize> = c.cycles().concat();
            all.sort();
            assert_eq!(all, (1..=6).collect::<Vec<_>>());
        }
    }

    #[test]
    fn transposition_actions() {
        let t56 = Transposition::new(5, 6).unwrap();
        assert_eq!(
            p("2431756").apply_transposition_right(t56).unwrap(),
            p("2431576")
        );
        let t13 = Transposition::new(1, 3).unwrap();
        assert_eq!(
            Permutation::identity(4)
                .apply_transposition_right(t13)
                .unwrap(),
            p("3214")
        );
        let t45 = Transposition::new(4, 5).unwrap();
        assert_eq!(
            p("3715246").apply_transposition_right(t45).unwrap(),
            p("3712546")
        );
        let t67 = Transposition::new(6, 7).unwrap();
        assert_eq!(
            p("3715246").apply_transposition_left(t67).unwrap(),
            p("3615247")
        );
        let t15 = Transposition::new(1, 5).unwrap();
        assert!(matches!(
            p("2134").apply_transposition_right(t15),
            Err(Error::TranspositionOutOfRange { .. })
        ));
        assert!(Transposition::new(3, 3).is_err());
        assert_eq!(
            Transposition::new(5, 2).unwrap(),
            Transposition::new(2, 5).unwrap()
        );
    }

    #[test]
    fn parse_rules() {
        assert_eq!(p("2431756").window(), &[2, 4, 3, 1, 7, 5, 6]);
        let long = p("10,2,3,4,5,6,7,8,9,1");
        assert_eq!(long.n(), 10);
        assert_eq!(long.to_string(), "10,2,3,4,5,6,7,8,9,1");
        assert_eq!(p("3 1 2"), p("312"));
        assert_eq!("1123".parse::<Permutation>(), Err(Error::RepeatedValue(1)));
        assert!(matches!(
            "12a".parse::<Permutation>(),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            "1,x,2".parse::<Permutation>(),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            "124".parse::<Permutation>(),
            Err(Error::ValueOutOfRange { value: 4, n: 3 })
        ));
        assert_eq!("".parse::<Permutation>(), Err(Error::Empty));
    }

    #[test]
    fn format_round_trip_s6() {
        for w in Permutation::all(6) {
            assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_ranked() {
        let all: Vec<_> = Permutation::all(5).collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (r, w) in all.iter().enumerate() {
            assert_eq!(w.lex_rank(), r as u64);
            assert_eq!(&Permutation::from_lex_rank(5, r as u64).unwrap(), w);
        }
        assert!(Permutation::from_lex_rank(5, 120).is_err());
    }

    #[test]
    fn reduced_word_products() {
        assert_eq!(p("2431756").reduced_word().len(), 6);
        for w in Permutation::all(5) {
            let word = w.reduced_word();
            assert_eq!(Permutation::from_simple_word(5, &word).unwrap(), w);
        }
    }

    #[test]
    fn serde_validates() {
        let w: Permutation = serde_json::from_str("[3,1,2]").unwrap();
        assert_eq!(w, p("312"));
        assert!(serde_json::from_str::<Permutation>("[3,3,2]").is_err());
    }
}
