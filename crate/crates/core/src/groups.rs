//! Finite Coxeter groups of types `A`, `B` and `I₂(m)`, enumerated in full.
//!
//! A [`GroupBackend`] indexes every element by a perfect rank, computes Coxeter
//! lengths by breadth-first search over the simple generators, and collects
//! the reflections as conjugates of the simple generators.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, Transposition};
use crate::poly::BiPoly;

pub const MAX_A: usize = 8;
pub const MAX_B: usize = 5;
pub const MIN_DIHEDRAL: usize = 2;
pub const MAX_DIHEDRAL: usize = 12;

/// Group type. `A(n)` is the symmetric group `S_n` (Coxeter type `A_{n-1}`),
/// `B(n)` the signed permutations of `[n]`, `I2(m)` the dihedral group of
/// order `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    A(usize),
    B(usize),
    I2(usize),
}

impl GroupKind {
    pub fn family(&self) -> &'static str {
        match self {
            GroupKind::A(_) => "A",
            GroupKind::B(_) => "B",
            GroupKind::I2(_) => "I2",
        }
    }

    /// `n` for `A`/`B`, `m` for `I2`.
    pub fn parameter(&self) -> usize {
        match *self {
            GroupKind::A(n) | GroupKind::B(n) | GroupKind::I2(n) => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (what, value, min, cap) = match *self {
            GroupKind::A(n) => ("A(n)", n, 1, MAX_A),
            GroupKind::B(n) => ("B(n)", n, 1, MAX_B),
            GroupKind::I2(m) => ("I2(m)", m, MIN_DIHEDRAL, MAX_DIHEDRAL),
        };
        if value < min {
            return Err(Error::UnderMin { what, value, min });
        }
        if value > cap {
            return Err(Error::OverCap { what, value, cap });
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        match *self {
            GroupKind::A(n) => factorial(n).expect("small n") as usize,
            GroupKind::B(n) => (factorial(n).expect("small n") as usize) << n,
            GroupKind::I2(m) => 2 * m,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family(), self.parameter())
    }
}

/// Element of the hyperoctahedral group in window notation: `w(i)` for
/// `i = 1..=n`, with `w(-i) = -w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::Empty);
        }
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::ValueOutOfRange { value: v as i64, n });
            }
            if seen[a] {
                return Err(Error::RepeatedValue(v as i64));
            }
            seen[a] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i` in `±1..=±n`.
    pub fn get(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            window: other.window.iter().map(|&b| self.get(b)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.n()];
        for (k, &v) in self.window.iter().enumerate() {
            let pos = k as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        Self { window }
    }

    /// Lexicographic rank of the underlying unsigned permutation times `2^n`,
    /// plus the bitmask of negative positions.
    pub fn rank(&self) -> usize {
        let abs = Permutation::from_window_unchecked(
            self.window
                .iter()
                .map(|v| v.unsigned_abs() as usize)
                .collect(),
        );
        let mask = self
            .window
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < 0)
            .fold(0usize, |m, (k, _)| m | (1 << k));
        ((abs.lex_rank() as usize) << self.n()) | mask
    }

    pub fn from_rank(n: usize, rank: usize) -> Result<Self> {
        let mask = rank & ((1 << n) - 1);
        let abs = Permutation::from_lex_rank(n, (rank >> n) as u64)?;
        let window = abs
            .window()
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                if mask & (1 << k) != 0 {
                    -(v as i32)
                } else {
                    v as i32
                }
            })
            .collect();
        Ok(Self { window })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Space-separated signed integers, e.g. `-2 1 -3`.
    fn from_str(text: &str) -> Result<Self> {
        let values = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::MalformedToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

/// `ρ^rotation σ^flip` in `I₂(m)`, with `s₁ = σ` and `s₂ = ρσ` (so `ρ = s₂s₁`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralElement {
    m: usize,
    rotation: usize,
    flip: bool,
}

impl DihedralElement {
    pub fn new(m: usize, rotation: usize, flip: bool) -> Self {
        Self {
            m,
            rotation: rotation % m,
            flip,
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::new(m, 0, false)
    }

    /// `s₁` for `which = 1`, `s₂` for `which = 2`.
    pub fn simple(m: usize, which: usize) -> Result<Self> {
        match which {
            1 => Ok(Self::new(m, 0, true)),
            2 => Ok(Self::new(m, 1, true)),
            _ => Err(Error::ForeignElement),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn is_flip(&self) -> bool {
        self.flip
    }

    pub fn compose(&self, other: &Self) -> Self {
        let turned = if self.flip {
            self.m - other.rotation
        } else {
            other.rotation
        };
        Self::new(self.m, self.rotation + turned, self.flip ^ other.flip)
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            Self::new(self.m, self.m - self.rotation, false)
        }
    }

    /// Coxeter length from the closed form for dihedral groups.
    pub fn length(&self) -> usize {
        let (m, r) = (self.m, self.rotation);
        if self.flip {
            if r == 0 {
                1
            } else {
                (2 * r - 1).min(2 * (m - r) + 1)
            }
        } else {
            2 * r.min(m - r)
        }
    }

    pub fn rank(&self) -> usize {
        self.rotation + if self.flip { self.m } else { 0 }
    }

    pub fn from_rank(m: usize, rank: usize) -> Self {
        Self::new(m, rank % m, rank >= m)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r^{}", self.rotation)?;
        if self.flip {
            f.write_str("s")?;
        }
        Ok(())
    }
}

/// An element of one of the supported groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Element {
    Perm(Permutation),
    Signed(SignedPermutation),
    Dihedral(DihedralElement),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(w) => w.fmt(f),
            Element::Signed(w) => write!(f, "[{w}]"),
            Element::Dihedral(w) => w.fmt(f),
        }
    }
}

fn unrank(kind: GroupKind, rank: usize) -> Element {
    match kind {
        GroupKind::A(n) => {
            Element::Perm(Permutation::from_lex_rank(n, rank as u64).expect("rank below order"))
        }
        GroupKind::B(n) => {
            Element::Signed(SignedPermutation::from_rank(n, rank).expect("rank below order"))
        }
        GroupKind::I2(m) => Element::Dihedral(DihedralElement::from_rank(m, rank)),
    }
}

fn compose(a: &Element, b: &Element) -> Element {
    match (a, b) {
        (Element::Perm(x), Element::Perm(y)) => Element::Perm(x.compose(y).expect("same group")),
        (Element::Signed(x), Element::Signed(y)) => {
            Element::Signed(x.compose(y).expect("same group"))
        }
        (Element::Dihedral(x), Element::Dihedral(y)) => Element::Dihedral(x.compose(y)),
        _ => unreachable!("elements of one backend share a type"),
    }
}

fn inverse(a: &Element) -> Element {
    match a {
        Element::Perm(x) => Element::Perm(x.inverse()),
        Element::Signed(x) => Element::Signed(x.inverse()),
        Element::Dihedral(x) => Element::Dihedral(x.inverse()),
    }
}

fn simple_generators(kind: GroupKind) -> Vec<Element> {
    match kind {
        GroupKind::A(n) => (1..n)
            .map(|k| {
                Element::Perm(
                    Transposition::new(k, k + 1)
                        .and_then(|t| t.to_permutation(n))
                        .expect("k + 1 <= n"),
                )
            })
            .collect(),
        GroupKind::B(n) => {
            let mut gens = Vec::with_capacity(n);
            let mut s0 = SignedPermutation::identity(n);
            s0.window[0] = -1;
            gens.push(Element::Signed(s0));
            for k in 1..n {
                let mut s = SignedPermutation::identity(n);
                s.window.swap(k - 1, k);
                gens.push(Element::Signed(s));
            }
            gens
        }
        GroupKind::I2(m) => vec![
            Element::Dihedral(DihedralElement::simple(m, 1).expect("s1")),
            Element::Dihedral(DihedralElement::simple(m, 2).expect("s2")),
        ],
    }
}

/// Fully enumerated finite Coxeter group.
#[derive(Debug, Clone)]
pub struct GroupBackend {
    kind: GroupKind,
    elements: Vec<Element>,
    simple: Vec<usize>,
    reflections: Vec<usize>,
    reflection_slot: Vec<Option<usize>>,
    lengths: Vec<usize>,
    // order × |T|, entry = rank(g · t)
    right_by_reflection: Vec<u32>,
}

impl GroupBackend {
    pub fn build(kind: GroupKind) -> Result<Self> {
        kind.validate()?;
        let order = kind.order();
        let elements: Vec<Element> = (0..order).map(|r| unrank(kind, r)).collect();
        let gens = simple_generators(kind);
        let mut backend = Self {
            kind,
            simple: Vec::new(),
            reflections: Vec::new(),
            reflection_slot: vec![None; order],
            lengths: Vec::new(),
            right_by_reflection: Vec::new(),
            elements,
        };
        backend.simple = gens
            .iter()
            .map(|g| backend.rank_of(g))
            .collect::<Result<_>>()?;

        // Lengths: BFS from the identity over right multiplication by S.
        let identity = backend.identity();
        let mut lengths = vec![usize::MAX; order];
        lengths[identity] = 0;
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for &s in &backend.simple {
                let h = backend.multiply(g, s);
                if lengths[h] == usize::MAX {
                    lengths[h] = lengths[g] + 1;
                    queue.push_back(h);
                }
            }
        }
        assert!(
            lengths.iter().all(|&l| l != usize::MAX),
            "simple generators must generate {kind}"
        );
        backend.lengths = lengths;

        // Reflections: conjugates g s g⁻¹.
        let mut found = BTreeSet::new();
        for g in 0..order {
            let g_inv = backend.rank_of(&inverse(&backend.elements[g]))?;
            for &s in &backend.simple {
                found.insert(backend.multiply(backend.multiply(g, s), g_inv));
            }
        }
        let mut reflections: Vec<usize> = found.into_iter().collect();
        reflections.sort_by_key(|&t| (backend.lengths[t], t));
        for (slot, &t) in reflections.iter().enumerate() {
            backend.reflection_slot[t] = Some(slot);
        }
        backend.reflections = reflections;

        let mut table = Vec::with_capacity(order * backend.reflections.len());
        for g in 0..order {
            for &t in &backend.reflections {
                table.push(backend.multiply(g, t) as u32);
            }
        }
        backend.right_by_reflection = table;
        Ok(backend)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Element {
        &self.elements[index]
    }

    /// The identity has rank 0 in every family.
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `g`, which must belong to this group.
    pub fn rank_of(&self, g: &Element) -> Result<usize> {
        let rank = match (self.kind, g) {
            (GroupKind::A(n), Element::Perm(w)) if w.n() == n => w.lex_rank() as usize,
            (GroupKind::B(n), Element::Signed(w)) if w.n() == n => w.rank(),
            (GroupKind::I2(m), Element::Dihedral(w)) if w.m() == m => w.rank(),
            _ => return Err(Error::ForeignElement),
        };
        Ok(rank)
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.rank_of(&compose(&self.elements[a], &self.elements[b]))
            .expect("closed under products")
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.rank_of(&inverse(&self.elements[a]))
            .expect("closed under inverses")
    }

    pub fn simple_generators(&self) -> &[usize] {
        &self.simple
    }

    /// Simple generator by its conventional label: `s_k = (k k+1)` with
    /// `k = 1..n-1` in type A, `s_0` (negate position 1) and `s_1..s_{n-1}` in
    /// type B, `s_1, s_2` in `I₂(m)`.
    pub fn simple_by_label(&self, label: usize) -> Result<usize> {
        let slot = match self.kind {
            GroupKind::B(_) => Some(label),
            _ => label.checked_sub(1),
        };
        slot.and_then(|k| self.simple.get(k).copied())
            .ok_or(Error::ForeignElement)
    }

    /// Product of simple generators given by label.
    pub fn element_from_word(&self, word: &[usize]) -> Result<usize> {
        word.iter().try_fold(self.identity(), |acc, &label| {
            Ok(self.multiply(acc, self.simple_by_label(label)?))
        })
    }

    /// Reflections sorted by length, then rank.
    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    /// Position of `g` in [`Self::reflections`], if it is a reflection.
    pub fn reflection_slot(&self, g: usize) -> Option<usize> {
        self.reflection_slot[g]
    }

    pub fn length(&self, g: usize) -> usize {
        self.lengths[g]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `g · t` where `t = reflections()[slot]`.
    pub fn right_multiply_reflection(&self, g: usize, slot: usize) -> usize {
        self.right_by_reflection[g * self.reflections.len() + slot] as usize
    }

    /// Depth of the reflection at `slot`: `(ℓ(t) + 1) / 2`.
    pub fn reflection_depth_at(&self, slot: usize) -> usize {
        self.lengths[self.reflections[slot]].div_ceil(2)
    }
}

/// `(ℓ(t) + 1) / 2` for a reflection `t`.
pub fn reflection_depth(backend: &GroupBackend, t: &Element) -> Result<usize> {
    let rank = backend.rank_of(t)?;
    let slot = backend.reflection_slot(rank).ok_or(Error::NotAReflection)?;
    Ok(backend.reflection_depth_at(slot))
}

/// Depth in `I₂(m)` from length alone: `(ℓ+1)/2` for odd `ℓ`, `ℓ/2 + 1` for
/// even `ℓ > 0`.
pub fn dihedral_depth_formula(w: &DihedralElement) -> usize {
    let l = w.length();
    if l == 0 {
        0
    } else if l % 2 == 1 {
        l.div_ceil(2)
    } else {
        l / 2 + 1
    }
}

/// `Σ q^ℓ(w) t^dep(w)` over `I₂(m)`, from the even/odd case formulas.
pub fn dihedral_gf(m: usize) -> Result<BiPoly> {
    GroupKind::I2(m).validate()?;
    let mut gf = BiPoly::new();
    gf.add_term(0, 0, 1);
    gf.add_term(1, 1, 2);
    let upper = if m.is_multiple_of(2) {
        gf.add_term(m, m / 2 + 1, 1);
        m / 2 - 1
    } else {
        // q^{m-1} t^{(m+1)/2} (2 + q)
        gf.add_term(m - 1, m.div_ceil(2), 2);
        gf.add_term(m, m.div_ceil(2), 1);
        (m - 3) / 2
    };
    // 2(1+q) t Σ q^{2i} t^i
    for i in 1..=upper {
        gf.add_term(2 * i, i + 1, 2);
        gf.add_term(2 * i + 1, i + 1, 2);
    }
    Ok(gf)
}

/// `Σ q^ℓ(w) t^dep(w)` over `I₂(m)`, summing the per-element depth formula.
pub fn dihedral_gf_by_elements(m: usize) -> Result<BiPoly> {
    GroupKind::I2(m).validate()?;
    Ok((0..2 * m)
        .map(|r| {
            let w = DihedralElement::from_rank(m, r);
            (w.length(), dihedral_depth_formula(&w))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn backend_sizes() {
        let a3 = GroupBackend::build(GroupKind::A(3)).unwrap();
        assert_eq!(a3.order(), 6);
        assert_eq!(a3.reflections().len(), 3);
        assert_eq!(a3.lengths().iter().max(), Some(&3));

        let b2 = GroupBackend::build(GroupKind::B(2)).unwrap();
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.reflections().len(), 4);
        assert_eq!(b2.lengths().iter().max(), Some(&4));

        let g2 = GroupBackend::build(GroupKind::I2(6)).unwrap();
        assert_eq!(g2.order(), 12);
        assert_eq!(g2.reflections().len(), 6);
        assert_eq!(g2.lengths().iter().max(), Some(&6));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            GroupBackend::build(GroupKind::A(9)),
            Err(Error::OverCap { .. })
        ));
        assert!(GroupBackend::build(GroupKind::B(6)).is_err());
        assert!(GroupBackend::build(GroupKind::I2(13)).is_err());
        assert!(matches!(
            GroupBackend::build(GroupKind::I2(1)),
            Err(Error::UnderMin { .. })
        ));
        assert!(GroupBackend::build(GroupKind::A(0)).is_err());
    }

    #[test]
    fn reflection_invariants() {
        let kinds = (1..=6)
            .map(GroupKind::A)
            .chain((1..=4).map(GroupKind::B))
            .chain((2..=12).map(GroupKind::I2));
        for kind in kinds {
            let g = GroupBackend::build(kind).unwrap();
            let e = g.identity();
            for &t in g.reflections() {
                assert_eq!(g.multiply(t, t), e, "{kind}");
                assert_eq!(g.length(t) % 2, 1, "{kind}");
            }
            for &s in g.simple_generators() {
                let slot = g.reflection_slot(s).unwrap();
                assert_eq!(g.reflection_depth_at(slot), 1);
            }
            // conjugation-closed
            for x in 0..g.order() {
                let xi = g.inverse_of(x);
                for &t in g.reflections() {
                    let c = g.multiply(g.multiply(x, t), xi);
                    assert!(g.reflection_slot(c).is_some());
                }
            }
        }
    }

    #[test]
    fn type_a_reflections_are_transpositions() {
        for n in 2..=6 {
            let g = GroupBackend::build(GroupKind::A(n)).unwrap();
            assert_eq!(g.reflections().len(), n * (n - 1) / 2);
            for i in 1..n {
                for j in i + 1..=n {
                    let t = Transposition::new(i, j).unwrap().to_permutation(n).unwrap();
                    assert_eq!(reflection_depth(&g, &Element::Perm(t)).unwrap(), j - i);
                }
            }
            for (k, elem) in g.elements().iter().enumerate() {
                let Element::Perm(w) = elem else {
                    unreachable!()
                };
                assert_eq!(g.length(k), crate::stats::length(w));
            }
        }
    }

    #[test]
    fn reflection_depth_examples() {
        let a7 = GroupBackend::build(GroupKind::A(7)).unwrap();
        let t13 = Transposition::new(1, 3).unwrap().to_permutation(7).unwrap();
        assert_eq!(reflection_depth(&a7, &Element::Perm(t13)).unwrap(), 2);
        let not_reflection: Permutation = "2314567".parse().unwrap();
        assert_eq!(
            reflection_depth(&a7, &Element::Perm(not_reflection)),
            Err(Error::NotAReflection)
        );
        let wrong_size = Element::Perm(Permutation::identity(3));
        assert_eq!(
            reflection_depth(&a7, &wrong_size),
            Err(Error::ForeignElement)
        );

        let g2 = GroupBackend::build(GroupKind::I2(6)).unwrap();
        let s121 = g2.element_from_word(&[1, 2, 1]).unwrap();
        assert_eq!(reflection_depth(&g2, g2.element(s121)).unwrap(), 2);
    }

    #[test]
    fn signed_permutations() {
        let w: SignedPermutation = "-2 1 -3".parse().unwrap();
        assert_eq!(w.to_string(), "-2 1 -3");
        assert_eq!(w.get(-1), 2);
        assert_eq!(
            w.compose(&w.inverse()).unwrap(),
            SignedPermutation::identity(3)
        );
        assert!("1 -1".parse::<SignedPermutation>().is_err());
        assert!("1 3".parse::<SignedPermutation>().is_err());
        assert!("1 x".parse::<SignedPermutation>().is_err());
        for r in 0..GroupKind::B(3).order() {
            assert_eq!(SignedPermutation::from_rank(3, r).unwrap().rank(), r);
        }
        // right multiplication by s0 negates the first entry
        let b3 = GroupBackend::build(GroupKind::B(3)).unwrap();
        let s0 = b3.simple_by_label(0).unwrap();
        let g = b3.rank_of(&Element::Signed(w.clone())).unwrap();
        assert_eq!(
            b3.element(b3.multiply(g, s0)),
            &Element::Signed("2 1 -3".parse().unwrap())
        );
    }

    #[test]
    fn dihedral_closed_form_lengths_match_bfs() {
        for m in 2..=12 {
            let g = GroupBackend::build(GroupKind::I2(m)).unwrap();
            for (k, elem) in g.elements().iter().enumerate() {
                let Element::Dihedral(d) = elem else {
                    unreachable!()
                };
                assert_eq!(d.length(), g.length(k), "m = {m}, {d}");
            }
        }
    }

    #[test]
    fn dihedral_depth_examples() {
        let g2 = GroupBackend::build(GroupKind::I2(6)).unwrap();
        let w = g2.element_from_word(&[1, 2, 1, 2, 1]).unwrap();
        let Element::Dihedral(d) = g2.element(w) else {
            unreachable!()
        };
        assert_eq!(d.length(), 5);
        assert_eq!(dihedral_depth_formula(d), 3);
        assert_eq!(dihedral_depth_formula(&DihedralElement::identity(6)), 0);
    }

    #[test]
    fn dihedral_gf_examples() {
        // 1 + 2qt + q⁶t⁴ + 2(1+q)t(q²t + q⁴t²)
        let mut expected = BiPoly::new();
        for (q, t, c) in [
            (0, 0, 1),
            (1, 1, 2),
            (6, 4, 1),
            (2, 2, 2),
            (3, 2, 2),
            (4, 3, 2),
            (5, 3, 2),
        ] {
            expected.add_term(q, t, c);
        }
        assert_eq!(dihedral_gf(6).unwrap(), expected);
        assert_eq!(dihedral_gf(2).unwrap().to_string(), "1 + 2qt + q^2t^2");
        assert_eq!(
            dihedral_gf(3).unwrap().to_string(),
            "1 + 2qt + 2q^2t^2 + q^3t^2"
        );
        for m in 2..=12 {
            assert_eq!(dihedral_gf(m).unwrap(), dihedral_gf_by_elements(m).unwrap());
            assert_eq!(dihedral_gf(m).unwrap().total(), 2 * m as u64);
        }
    }
}
