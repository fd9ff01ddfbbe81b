//! Depth and reflection length straight from their definitions, as shortest
//! paths in the Cayley graph of a group with respect to all reflections.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::groups::GroupBackend;

/// Longest factorization [`enumerate_min_factorizations`] will search for.
pub const MAX_FACTORIZATION_BUDGET: usize = 6;
/// Largest group (`|S_6|`) [`enumerate_min_factorizations`] will search in.
pub const MAX_FACTORIZATION_ORDER: usize = 720;

/// Dial's bucket queue for small nonnegative integer keys.
#[derive(Debug)]
struct BucketQueue {
    buckets: Vec<Vec<usize>>,
    cursor: usize,
    len: usize,
}

impl BucketQueue {
    fn new() -> Self {
        Self {
            buckets: Vec::new(),
            cursor: 0,
            len: 0,
        }
    }

    fn push(&mut self, key: usize, item: usize) {
        debug_assert!(key >= self.cursor, "keys are monotone");
        if key >= self.buckets.len() {
            self.buckets.resize_with(key + 1, Vec::new);
        }
        self.buckets[key].push(item);
        self.len += 1;
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        if self.len == 0 {
            return None;
        }
        while self.buckets[self.cursor].is_empty() {
            self.cursor += 1;
        }
        self.len -= 1;
        let item = self.buckets[self.cursor].pop().expect("nonempty bucket");
        Some((self.cursor, item))
    }
}

/// `dep(g)` for every element: the least total reflection depth over all
/// factorizations into reflections, computed by Dijkstra from the identity
/// with edges `g → g·t` of weight `(ℓ(t)+1)/2`.
pub fn depth_oracle(backend: &GroupBackend) -> Vec<usize> {
    let weights: Vec<usize> = (0..backend.reflections().len())
        .map(|slot| backend.reflection_depth_at(slot))
        .collect();
    let mut dist = vec![usize::MAX; backend.order()];
    let mut settled = vec![false; backend.order()];
    let mut queue = BucketQueue::new();
    dist[backend.identity()] = 0;
    queue.push(0, backend.identity());
    while let Some((d, g)) = queue.pop() {
        if settled[g] {
            continue;
        }
        settled[g] = true;
        for (slot, &w) in weights.iter().enumerate() {
            let h = backend.right_multiply_reflection(g, slot);
            let candidate = d + w;
            if candidate < dist[h] {
                dist[h] = candidate;
                queue.push(candidate, h);
            }
        }
    }
    dist
}

/// `ℓ'(g)` for every element: unweighted distance from the identity in the
/// reflection Cayley graph.
pub fn reflection_length_oracle(backend: &GroupBackend) -> Vec<usize> {
    let mut dist = vec![usize::MAX; backend.order()];
    dist[backend.identity()] = 0;
    let mut queue = VecDeque::from([backend.identity()]);
    while let Some(g) = queue.pop_front() {
        for slot in 0..backend.reflections().len() {
            let h = backend.right_multiply_reflection(g, slot);
            if dist[h] == usize::MAX {
                dist[h] = dist[g] + 1;
                queue.push_back(h);
            }
        }
    }
    dist
}

/// Every sequence of exactly `budget` reflections `t_1 ⋯ t_k` whose product is
/// `g`, as lists of slots into [`GroupBackend::reflections`], sorted
/// lexicographically.
pub fn enumerate_min_factorizations(
    backend: &GroupBackend,
    g: usize,
    budget: usize,
) -> Result<Vec<Vec<usize>>> {
    if budget > MAX_FACTORIZATION_BUDGET {
        return Err(Error::OverCap {
            what: "budget",
            value: budget,
            cap: MAX_FACTORIZATION_BUDGET,
        });
    }
    if backend.order() > MAX_FACTORIZATION_ORDER {
        return Err(Error::OverCap {
            what: "group order",
            value: backend.order(),
            cap: MAX_FACTORIZATION_ORDER,
        });
    }
    if g >= backend.order() {
        return Err(Error::ForeignElement);
    }
    let rl = reflection_length_oracle(backend);
    let mut out = Vec::new();
    let mut suffix = Vec::with_capacity(budget);
    // Peel factors off the right: g = (g·t) · t with ℓ'(g·t) ≤ remaining.
    extend_factorizations(backend, &rl, g, budget, &mut suffix, &mut out);
    out.sort();
    Ok(out)
}

fn extend_factorizations(
    backend: &GroupBackend,
    rl: &[usize],
    target: usize,
    remaining: usize,
    suffix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        if target == backend.identity() {
            out.push(suffix.iter().rev().copied().collect());
        }
        return;
    }
    for slot in 0..backend.reflections().len() {
        let rest = backend.right_multiply_reflection(target, slot);
        if rl[rest] < remaining {
            suffix.push(slot);
            extend_factorizations(backend, rl, rest, remaining - 1, suffix, out);
            suffix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Element, GroupKind};
    use crate::perm::Permutation;
    use crate::stats;

    fn a(n: usize) -> GroupBackend {
        GroupBackend::build(GroupKind::A(n)).unwrap()
    }

    fn index_of(g: &GroupBackend, w: &str) -> usize {
        g.rank_of(&Element::Perm(w.parse().unwrap())).unwrap()
    }

    #[test]
    fn depth_examples() {
        let a7 = a(7);
        let dep = depth_oracle(&a7);
        assert_eq!(dep[index_of(&a7, "2431756")], 5);
        assert_eq!(dep[a7.identity()], 0);

        let b3 = GroupBackend::build(GroupKind::B(3)).unwrap();
        let mut dist = vec![0u64; 7];
        for d in depth_oracle(&b3) {
            dist[d] += 1;
        }
        assert_eq!(dist, [1, 3, 8, 13, 14, 8, 1]);
    }

    #[test]
    fn reflection_length_examples() {
        let a4 = a(4);
        let rl = reflection_length_oracle(&a4);
        assert_eq!(rl[index_of(&a4, "3412")], 2);
        assert_eq!(rl[index_of(&a4, "4231")], 1);
        assert_eq!(rl[a4.identity()], 0);
    }

    #[test]
    fn oracles_agree_with_formulas_in_type_a() {
        for n in 1..=6 {
            let g = a(n);
            let dep = depth_oracle(&g);
            let rl = reflection_length_oracle(&g);
            for (k, w) in Permutation::all(n).enumerate() {
                assert_eq!(dep[k], stats::depth(&w), "{w}");
                assert_eq!(rl[k], n - w.cycle_decomposition().count(), "{w}");
            }
        }
    }

    #[test]
    fn factorizations_of_231() {
        let a3 = a(3);
        let g = index_of(&a3, "231");
        let found = enumerate_min_factorizations(&a3, g, 2).unwrap();
        let slot = |w: &str| a3.reflection_slot(index_of(&a3, w)).unwrap();
        let (s1, s2, t13) = (slot("213"), slot("132"), slot("321"));
        assert!(found.contains(&vec![s1, s2]));
        assert!(found.contains(&vec![t13, s1]));
        assert!(found.windows(2).all(|p| p[0] < p[1]));

        let e = enumerate_min_factorizations(&a3, a3.identity(), 0).unwrap();
        assert_eq!(e, vec![Vec::<usize>::new()]);

        let only = enumerate_min_factorizations(&a3, index_of(&a3, "213"), 1).unwrap();
        assert_eq!(only, vec![vec![s1]]);
    }

    #[test]
    fn factorization_caps() {
        let a3 = a(3);
        assert!(enumerate_min_factorizations(&a3, 0, 7).is_err());
        assert!(enumerate_min_factorizations(&a(7), 0, 2).is_err());
        assert!(enumerate_min_factorizations(&a3, 6, 1).is_err());
    }

    #[test]
    fn every_factorization_multiplies_out() {
        let a4 = a(4);
        for g in 0..a4.order() {
            for f in enumerate_min_factorizations(&a4, g, 3).unwrap() {
                let product = f.iter().fold(a4.identity(), |acc, &slot| {
                    a4.right_multiply_reflection(acc, slot)
                });
                assert_eq!(product, g);
            }
        }
    }
}
