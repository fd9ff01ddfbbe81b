//! Closed-form statistics on `S_n`.

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, Transposition};

/// Largest `n` accepted by the counting formulas below.
pub const MAX_FORMULA_N: usize = 20;

/// Coxeter length, i.e. the number of inversions.
pub fn length(w: &Permutation) -> usize {
    let win = w.window();
    (0..win.len())
        .map(|i| win[i + 1..].iter().filter(|&&b| b < win[i]).count())
        .sum()
}

/// Reflection length `n - c(w)`.
pub fn reflection_length(w: &Permutation) -> usize {
    w.n() - w.cycle_decomposition().count()
}

/// Sum of the excedance sizes `w(i) - i` over positions with `w(i) > i`.
pub fn depth(w: &Permutation) -> usize {
    w.window()
        .iter()
        .enumerate()
        .map(|(k, &v)| v.saturating_sub(k + 1))
        .sum()
}

/// Sum of `w(i) - w(i+1)` over descents.
pub fn descent_drop(w: &Permutation) -> usize {
    w.window()
        .windows(2)
        .map(|pair| pair[0].saturating_sub(pair[1]))
        .sum()
}

pub fn descents(w: &Permutation) -> usize {
    w.window()
        .windows(2)
        .filter(|pair| pair[0] > pair[1])
        .count()
}

pub fn excedances(w: &Permutation) -> usize {
    w.window()
        .iter()
        .enumerate()
        .filter(|&(k, &v)| v > k + 1)
        .count()
}

/// Depth of `w · t_{ij}` predicted from `w` alone, valid when `i < j` and
/// `w(i) < w(j)`.
pub fn depth_after_transposition(w: &Permutation, i: usize, j: usize) -> Result<usize> {
    let t = Transposition::new(i, j)?;
    if i > j {
        return Err(Error::DegenerateTransposition(i, j));
    }
    if t.j() > w.n() {
        return Err(Error::TranspositionOutOfRange { i, j, n: w.n() });
    }
    let (wi, wj) = (w.get(i), w.get(j));
    if wi > wj {
        return Err(Error::NotAnAscent { i, j, wi, wj });
    }
    let base = depth(w);
    if j <= wi || wj < i {
        Ok(base)
    } else {
        Ok(base + wj.min(j) - wi.max(i))
    }
}

/// `⌊n²/4⌋`, the largest depth in `S_n`.
pub fn max_depth_bound(n: usize) -> usize {
    n * n / 4
}

/// Number of permutations in `S_n` of depth `⌊n²/4⌋`: `(k!)²` for `n = 2k`
/// and `n (k!)²` for `n = 2k + 1`.
pub fn max_depth_count(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::UnderMin {
            what: "n",
            value: 0,
            min: 1,
        });
    }
    if n > MAX_FORMULA_N {
        return Err(Error::OverCap {
            what: "n",
            value: n,
            cap: MAX_FORMULA_N,
        });
    }
    let k = n / 2;
    let kf = factorial(k).expect("k <= 10");
    let square = kf * kf;
    Ok(if n.is_multiple_of(2) {
        square
    } else {
        n as u64 * square
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_values() {
        assert_eq!(length(&p("2431756")), 6);
        assert_eq!(length(&p("4321")), 6);
        assert_eq!(length(&Permutation::identity(6)), 0);

        assert_eq!(reflection_length(&p("2431756")), 4);
        assert_eq!(reflection_length(&p("3412")), 2);
        assert_eq!(reflection_length(&Permutation::identity(3)), 0);

        assert_eq!(depth(&p("2431756")), 5);
        assert_eq!(depth(&p("3412")), 4);
        assert_eq!(depth(&p("3715246")), 8);
        assert_eq!(depth(&p("3241")), 3);

        assert_eq!(descent_drop(&p("3241")), 4);
        assert_eq!(descent_drop(&p("7213645")), 8);
        assert_eq!(descent_drop(&Permutation::identity(4)), 0);

        assert_eq!(descents(&p("7213645")), 3);
        assert_eq!(excedances(&p("2736541")), 3);
        assert_eq!(depth(&p("2736541")), 8);
        assert_eq!(excedances(&p("3241")), 2);
        assert_eq!(descents(&Permutation::identity(4)), 0);
        assert_eq!(excedances(&Permutation::identity(4)), 0);
    }

    #[test]
    fn transposition_delta_examples() {
        let e = Permutation::identity(4);
        assert_eq!(depth_after_transposition(&e, 1, 3).unwrap(), 2);
        assert_eq!(depth_after_transposition(&e, 1, 2).unwrap(), 1);
        // w(i) < w(j) < i < j leaves the excedance set alone.
        let w = p("3412");
        assert_eq!(depth_after_transposition(&w, 3, 4).unwrap(), depth(&w));
        assert!(matches!(
            depth_after_transposition(&p("2134"), 1, 2),
            Err(Error::NotAnAscent { .. })
        ));
        assert!(depth_after_transposition(&e, 3, 5).is_err());
    }

    #[test]
    fn transposition_delta_never_decreases() {
        for n in 2..=6 {
            for w in Permutation::all(n) {
                for i in 1..n {
                    for j in i + 1..=n {
                        if w.get(i) < w.get(j) {
                            let predicted = depth_after_transposition(&w, i, j).unwrap();
                            assert!(predicted >= depth(&w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extremal_values() {
        assert_eq!((max_depth_bound(8), max_depth_count(8).unwrap()), (16, 576));
        assert_eq!((max_depth_bound(5), max_depth_count(5).unwrap()), (6, 20));
        assert_eq!((max_depth_bound(1), max_depth_count(1).unwrap()), (0, 1));
        assert!(max_depth_count(21).is_err());
        assert!(max_depth_count(0).is_err());
        // w_0 attains the bound.
        for n in 1..=12 {
            assert_eq!(depth(&Permutation::longest(n)), max_depth_bound(n));
        }
    }

    #[test]
    fn bounds_and_coincidences_exhaustive() {
        for n in 1..=8 {
            let mut maximal = 0u64;
            for w in Permutation::all(n) {
                let (lp, d, l) = (reflection_length(&w), depth(&w), length(&w));
                assert!(lp <= d && d <= l, "{w}");
                assert_eq!(d == lp, l == lp, "{w}");
                assert!(d <= max_depth_bound(n));
                if d == max_depth_bound(n) {
                    maximal += 1;
                }
            }
            assert_eq!(maximal, max_depth_count(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn left_right_maximum_inversion_bound() {
        for n in 1..=7 {
            for w in Permutation::all(n) {
                let win = w.window();
                for i in 1..=n {
                    let wi = w.get(i);
                    if wi <= i {
                        continue;
                    }
                    let below_after = win[i..].iter().filter(|&&b| b < wi).count();
                    let is_lr_max = win[..i - 1].iter().all(|&a| a < wi);
                    assert!(below_after >= wi - i);
                    assert_eq!(below_after == wi - i, is_lr_max, "{w} at {i}");
                }
            }
        }
    }

    #[test]
    fn depth_is_inverse_invariant() {
        for n in 1..=7 {
            for w in Permutation::all(n) {
                assert_eq!(depth(&w), depth(&w.inverse()));
            }
        }
    }
}
