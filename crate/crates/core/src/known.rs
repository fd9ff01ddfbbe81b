//! Published depth distributions used as fixtures.

/// `|{w ∈ S_n : dep(w) = k}|` for `n = 1..=8` (OEIS A062869).
pub const SYMMETRIC_DEPTH: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 2, 3],
    &[1, 3, 7, 9, 4],
    &[1, 4, 12, 24, 35, 24, 20],
    &[1, 5, 18, 46, 93, 137, 148, 136, 100, 36],
    &[1, 6, 25, 76, 187, 366, 591, 744, 884, 832, 716, 360, 252],
    &[
        1, 7, 33, 115, 327, 765, 1523, 2553, 3696, 4852, 5708, 5892, 5452, 4212, 2844, 1764, 576,
    ],
];

/// Reference rows for `|{w ∈ B_n : dep(w) = k}|`, `n = 1..=5`, kept for
/// comparison. They do not agree with the definitional shortest-path depth
/// from `n = 2` on: `B_2 ≅ I₂(4)` has depth distribution `1 2 4 1`.
pub const HYPEROCTAHEDRAL_DEPTH: [&[u64]; 5] = [
    &[1, 1],
    &[1, 2, 3, 2],
    &[1, 3, 7, 12, 16, 8, 1],
    &[1, 4, 12, 28, 53, 70, 89, 54, 60, 12, 1],
    &[
        1, 5, 18, 51, 118, 215, 347, 456, 594, 558, 505, 466, 325, 164, 16, 1,
    ],
];

pub fn symmetric_depth_row(n: usize) -> Option<&'static [u64]> {
    n.checked_sub(1)
        .and_then(|k| SYMMETRIC_DEPTH.get(k))
        .copied()
}

pub fn hyperoctahedral_depth_row(n: usize) -> Option<&'static [u64]> {
    n.checked_sub(1)
        .and_then(|k| HYPEROCTAHEDRAL_DEPTH.get(k))
        .copied()
}
