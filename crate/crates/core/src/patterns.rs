//! Pattern containment and the classes it characterizes.

use crate::perm::Permutation;

/// Positions `i_1 < ... < i_k` (1-based) of the lexicographically least
/// occurrence of `pattern` in `w`, or `None` if `w` avoids it.
pub fn contains_pattern(w: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > w.n() {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    search(w.window(), pattern.window(), 0, &mut chosen)
        .then(|| chosen.iter().map(|&i| i + 1).collect())
}

fn search(win: &[usize], pat: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == pat.len() {
        return true;
    }
    // leave room for the remaining pattern letters
    let last = win.len() - (pat.len() - depth);
    for pos in from..=last {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(d, &c)| (win[c] < win[pos]) == (pat[d] < pat[depth]));
        if consistent {
            chosen.push(pos);
            if search(win, pat, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn avoids(w: &Permutation, pattern: &Permutation) -> bool {
    contains_pattern(w, pattern).is_none()
}

fn avoids_all(w: &Permutation, patterns: &[&[usize]]) -> bool {
    patterns.iter().all(|p| {
        let p = Permutation::from_window_unchecked(p.to_vec());
        avoids(w, &p)
    })
}

/// 321-avoiding, equivalently fully commutative, equivalently `dep = ℓ`.
pub fn is_fc(w: &Permutation) -> bool {
    avoids_all(w, &[&[3, 2, 1]])
}

/// Avoids 321 and 3412, equivalently `ℓ = ℓ'`.
pub fn is_boolean(w: &Permutation) -> bool {
    avoids_all(w, &[&[3, 2, 1], &[3, 4, 1, 2]])
}

/// Avoids 231, 312 and 321: the support has no two adjacent generators.
pub fn is_free(w: &Permutation) -> bool {
    avoids_all(w, &[&[2, 3, 1], &[3, 1, 2], &[3, 2, 1]])
}

/// Whether every cycle's values form an interval of integers.
pub fn cycles_are_intervals(w: &Permutation) -> bool {
    w.cycle_decomposition().cycles().iter().all(|c| {
        let lo = c.iter().min().expect("nonempty cycle");
        let hi = c.iter().max().expect("nonempty cycle");
        hi - lo + 1 == c.len()
    })
}

/// Indices `k` of the simple reflections `s_k` occurring in reduced words of
/// `w`: those `k` for which `w(1..=k)` is not `{1..=k}`.
pub fn support(w: &Permutation) -> Vec<usize> {
    let mut prefix_max = 0;
    let mut out = Vec::new();
    for (k, &v) in w.window().iter().enumerate().take(w.n().saturating_sub(1)) {
        prefix_max = prefix_max.max(v);
        if prefix_max > k + 1 {
            out.push(k + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{depth, length, reflection_length};
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert_eq!(
            contains_pattern(&p("3241576"), &p("1234")),
            Some(vec![1, 3, 5, 6])
        );
        assert_eq!(contains_pattern(&p("3241576"), &p("4321")), None);
        for q in ["1", "21", "3412", "2431756"] {
            let q = p(q);
            assert_eq!(contains_pattern(&q, &q), Some((1..=q.n()).collect()));
        }
        assert_eq!(contains_pattern(&p("12"), &p("123")), None);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        for w in Permutation::all(6) {
            for pat in Permutation::all(3) {
                let brute = (1..=6usize)
                    .flat_map(|a| {
                        (a + 1..=6).flat_map(move |b| (b + 1..=6).map(move |c| vec![a, b, c]))
                    })
                    .find(|idx| {
                        let vals: Vec<usize> = idx.iter().map(|&i| w.get(i)).collect();
                        (0..3).all(|x| {
                            (0..3)
                                .all(|y| (vals[x] < vals[y]) == (pat.window()[x] < pat.window()[y]))
                        })
                    });
                assert_eq!(contains_pattern(&w, &pat), brute, "{w} {pat}");
            }
        }
    }

    #[test]
    fn class_examples() {
        assert!(is_fc(&p("3412")));
        assert!(!is_fc(&p("321")));
        assert!(is_fc(&Permutation::identity(4)));
        assert!(!is_boolean(&p("3412")));
        assert!(!is_boolean(&p("4231")));
        assert!(is_boolean(&p("2341")));
        assert!(is_free(&p("213")));
        assert!(!is_free(&p("231")));
        assert!(is_free(&Permutation::identity(3)));
        assert!(cycles_are_intervals(&p("2341")));
        assert!(!cycles_are_intervals(&p("3412")));
        assert!(support(&Permutation::identity(4)).is_empty());
        assert_eq!(support(&p("2143")), vec![1, 3]);
        assert_eq!(support(&p("2341")), vec![1, 2, 3]);
    }

    #[test]
    fn characterizations_exhaustive() {
        for n in 1..=7 {
            let mut interval_not_boolean = false;
            for w in Permutation::all(n) {
                let (rl, d, l) = (reflection_length(&w), depth(&w), length(&w));
                assert_eq!(is_fc(&w), d == l, "{w}");
                assert_eq!(is_boolean(&w), l == rl, "{w}");
                assert_eq!(is_boolean(&w), d == rl, "{w}");
                let supp = support(&w);
                assert_eq!(is_boolean(&w), l == supp.len(), "{w}");
                if is_boolean(&w) {
                    assert!(cycles_are_intervals(&w), "{w}");
                } else if cycles_are_intervals(&w) {
                    interval_not_boolean = true;
                }
                if is_free(&w) {
                    assert!(is_boolean(&w));
                    assert!(supp.windows(2).all(|k| k[1] - k[0] > 1), "{w}");
                }
                assert_eq!(
                    is_free(&w),
                    is_boolean(&w) && supp.windows(2).all(|k| k[1] - k[0] > 1),
                    "{w}"
                );
            }
            // the converse of "boolean ⇒ intervals" fails from n = 4 on (3421)
            assert_eq!(interval_not_boolean, n >= 4);
        }
    }

    #[test]
    fn support_matches_reduced_words() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let letters: BTreeSet<usize> = w.reduced_word().into_iter().collect();
                assert_eq!(support(&w), letters.into_iter().collect::<Vec<_>>(), "{w}");
            }
        }
    }
}
