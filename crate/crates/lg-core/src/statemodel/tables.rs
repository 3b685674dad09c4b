//! Embedded state-model parameter tables for `LG^m`, `m = 1..4`.
//!
//! Each braid-generator coefficient is kept in the structured form it is
//! usually written in:
//!
//! ```text
//! sign * Delta^dpow * q^{ax*alpha + q2/2} * prod A_i^{z_i} * extra(q) * inner
//! ```
//!
//! where `A_i = [alpha + i]_q` and `inner` is a per-cell monomial or small
//! polynomial in `q`. Index cells `[a, b, c, d]` stand for the component
//! `e^{a b}_{c d}`; a group marked `sym` also contains the transposed cell
//! `e^{c d}_{a b}` for every listed cell. All `q` exponents are stored
//! doubled (`Q = q^{1/2}` units) so half-integer powers stay integral.
//!
//! Keeping the tables structural rather than pre-expanded lets the loader
//! audit every entry (variable-conversion round trip, root-degree parity,
//! nonzero counts) before any computation uses them.

/// One displayed coefficient group of a braid-generator table.
pub(crate) struct SigmaGroup {
    pub sign: i8,
    /// Power of `Delta` in front.
    pub dpow: u8,
    /// `x` in the `q^{x*alpha}` factor.
    pub ax: i8,
    /// Exponent of the plain `q` power, in `Q` units (i.e. doubled).
    pub q2: i16,
    /// Offsets `i` with a factor `A_i^{1/2}`.
    pub half: &'static [u8],
    /// Offsets `i` with a factor `A_i`.
    pub full: &'static [u8],
    /// Extra Laurent-polynomial factor in `q`, as `(coef, Q-exponent)` pairs.
    pub extra: &'static [(i8, i16)],
    /// Whether every cell implies its transpose as well.
    pub sym: bool,
    /// Cells taking the group coefficient verbatim.
    pub cells: &'static [[u8; 4]],
    /// Cells taking the group coefficient times an inner factor.
    pub subs: &'static [SigmaSub],
}

/// An inner subgroup: `sign * q^{q2/2} * poly(q)` applied to its cells.
pub(crate) struct SigmaSub {
    pub sign: i8,
    pub q2: i16,
    pub poly: &'static [(i8, i16)],
    pub cells: &'static [[u8; 4]],
}

/// A diagonal handle table: `q^{ax*alpha + q2/2}` times per-cell `sign * q^{cq2/2}`.
pub(crate) struct HandleTable {
    pub ax: i8,
    pub q2: i16,
    /// `(state index, sign, Q-exponent of the inner q power)`.
    pub cells: &'static [(u8, i8, i16)],
}

/// Scaling factors `kappa_sigma = kappa_C = q^{-m*alpha}` shipped with every model.
pub(crate) const fn kappa_alpha_exponent(m: u8) -> i8 {
    -(m as i8)
}

const G: SigmaGroup = SigmaGroup {
    sign: 1,
    dpow: 0,
    ax: 0,
    q2: 0,
    half: &[],
    full: &[],
    extra: &[],
    sym: false,
    cells: &[],
    subs: &[],
};

/// `q^{-2} - q^{2}` in `Q` units.
const QBAR2_MINUS_Q2: &[(i8, i16)] = &[(1, -4), (-1, 4)];

// ---------------------------------------------------------------------------
// LG^1: braid generator with 5 nonzero components.
// ---------------------------------------------------------------------------

pub(crate) static SIGMA_M1: &[SigmaGroup] = &[
    // q^{-alpha}
    SigmaGroup { ax: -1, cells: &[[1, 1, 1, 1]], ..G },
    // - q^{alpha}
    SigmaGroup { sign: -1, ax: 1, cells: &[[2, 2, 2, 2]], ..G },
    // - Delta [alpha]
    SigmaGroup { sign: -1, dpow: 1, full: &[0], cells: &[[2, 1, 2, 1]], ..G },
    // 1
    SigmaGroup { sym: true, cells: &[[1, 2, 2, 1]], ..G },
];

pub(crate) static HANDLE_M1: HandleTable = HandleTable {
    ax: -1,
    q2: 0,
    cells: &[(1, 1, 0), (2, -1, 0)],
};

// ---------------------------------------------------------------------------
// LG^2: braid generator with 26 nonzero components.
// ---------------------------------------------------------------------------

pub(crate) static SIGMA_M2: &[SigmaGroup] = &[
    // q^{-2 alpha}
    SigmaGroup { ax: -2, cells: &[[1, 1, 1, 1]], ..G },
    // - 1
    SigmaGroup { sign: -1, cells: &[[2, 2, 2, 2], [3, 3, 3, 3]], ..G },
    // q^{2 alpha + 2}
    SigmaGroup { ax: 2, q2: 4, cells: &[[4, 4, 4, 4]], ..G },
    // - Delta q^{-alpha} [alpha]
    SigmaGroup {
        sign: -1, dpow: 1, ax: -1, full: &[0],
        cells: &[[2, 1, 2, 1], [3, 1, 3, 1]],
        ..G
    },
    // Delta^2 q [alpha][alpha+1]
    SigmaGroup { dpow: 2, q2: 2, full: &[0, 1], cells: &[[4, 1, 4, 1]], ..G },
    // Delta q^{alpha+1} [alpha+1]
    SigmaGroup {
        dpow: 1, ax: 1, q2: 2, full: &[1],
        cells: &[[4, 2, 4, 2], [4, 3, 4, 3]],
        ..G
    },
    // Delta q
    SigmaGroup { dpow: 1, q2: 2, cells: &[[3, 2, 3, 2]], ..G },
    // 1
    SigmaGroup { sym: true, cells: &[[1, 4, 4, 1]], ..G },
    // - q
    SigmaGroup { sign: -1, q2: 2, sym: true, cells: &[[2, 3, 3, 2]], ..G },
    // q^{-alpha}
    SigmaGroup { ax: -1, sym: true, cells: &[[1, 2, 2, 1], [1, 3, 3, 1]], ..G },
    // q^{alpha+1}
    SigmaGroup { ax: 1, q2: 2, sym: true, cells: &[[2, 4, 4, 2], [3, 4, 4, 3]], ..G },
    // Delta q [alpha]^{1/2} [alpha+1]^{1/2} { -q^{-1/2} ..., +q^{1/2} ... }
    SigmaGroup {
        dpow: 1, q2: 2, half: &[0, 1], sym: true,
        subs: &[
            SigmaSub { sign: -1, q2: -1, poly: &[], cells: &[[2, 3, 4, 1]] },
            SigmaSub { sign: 1, q2: 1, poly: &[], cells: &[[3, 2, 4, 1]] },
        ],
        ..G
    },
];

pub(crate) static HANDLE_M2: HandleTable = HandleTable {
    ax: -2,
    q2: -2,
    cells: &[(1, 1, 2), (2, -1, 2), (3, -1, -2), (4, 1, -2)],
};

// ---------------------------------------------------------------------------
// LG^3: braid generator with 139 nonzero components.
// ---------------------------------------------------------------------------

pub(crate) static SIGMA_M3: &[SigmaGroup] = &[
    // q^{-3 alpha}
    SigmaGroup { ax: -3, cells: &[[1, 1, 1, 1]], ..G },
    // - q^{-alpha}
    SigmaGroup {
        sign: -1, ax: -1,
        cells: &[[2, 2, 2, 2], [3, 3, 3, 3], [4, 4, 4, 4]],
        ..G
    },
    // q^{alpha + 2}
    SigmaGroup {
        ax: 1, q2: 4,
        cells: &[[5, 5, 5, 5], [6, 6, 6, 6], [7, 7, 7, 7]],
        ..G
    },
    // - q^{3 alpha + 6}
    SigmaGroup { sign: -1, ax: 3, q2: 12, cells: &[[8, 8, 8, 8]], ..G },
    // - Delta q^{-2 alpha} [alpha]
    SigmaGroup {
        sign: -1, dpow: 1, ax: -2, full: &[0],
        cells: &[[2, 1, 2, 1], [3, 1, 3, 1], [4, 1, 4, 1]],
        ..G
    },
    // Delta^2 q^{-alpha + 1} [alpha][alpha+1]
    SigmaGroup {
        dpow: 2, ax: -1, q2: 2, full: &[0, 1],
        cells: &[[5, 1, 5, 1], [6, 1, 6, 1], [7, 1, 7, 1]],
        ..G
    },
    // - Delta q^{2 alpha + 4} [alpha+2]
    SigmaGroup {
        sign: -1, dpow: 1, ax: 2, q2: 8, full: &[2],
        cells: &[[8, 7, 8, 7], [8, 6, 8, 6], [8, 5, 8, 5]],
        ..G
    },
    // - Delta^2 q^{alpha + 3} [alpha+1][alpha+2]
    SigmaGroup {
        sign: -1, dpow: 2, ax: 1, q2: 6, full: &[1, 2],
        cells: &[[8, 4, 8, 4], [8, 3, 8, 3], [8, 2, 8, 2]],
        ..G
    },
    // Delta q [alpha+1]
    SigmaGroup {
        dpow: 1, q2: 2, full: &[1],
        cells: &[[5, 2, 5, 2], [5, 3, 5, 3], [6, 2, 6, 2], [6, 4, 6, 4], [7, 3, 7, 3], [7, 4, 7, 4]],
        ..G
    },
    // Delta q^{-alpha + 1}
    SigmaGroup {
        dpow: 1, ax: -1, q2: 2,
        cells: &[[3, 2, 3, 2], [4, 2, 4, 2], [4, 3, 4, 3]],
        ..G
    },
    // - Delta q^{alpha + 3}
    SigmaGroup {
        sign: -1, dpow: 1, ax: 1, q2: 6,
        cells: &[[6, 5, 6, 5], [7, 5, 7, 5], [7, 6, 7, 6]],
        ..G
    },
    // Delta q^2 [alpha+1] { -Delta e^{63}_{63}, q(q^{-2} - q^2) e^{72}_{72} }
    SigmaGroup {
        dpow: 1, q2: 4, full: &[1],
        subs: &[
            SigmaSub { sign: -1, q2: 0, poly: &[(1, 2), (-1, -2)], cells: &[[6, 3, 6, 3]] },
            SigmaSub { sign: 1, q2: 2, poly: QBAR2_MINUS_Q2, cells: &[[7, 2, 7, 2]] },
        ],
        ..G
    },
    // - Delta^3 q^3 [alpha][alpha+1][alpha+2]
    SigmaGroup {
        sign: -1, dpow: 3, q2: 6, full: &[0, 1, 2],
        cells: &[[8, 1, 8, 1]],
        ..G
    },
    // q^{-2 alpha}
    SigmaGroup {
        ax: -2, sym: true,
        cells: &[[1, 2, 2, 1], [1, 3, 3, 1], [1, 4, 4, 1]],
        ..G
    },
    // q^{-alpha}
    SigmaGroup {
        ax: -1, sym: true,
        cells: &[[1, 5, 5, 1], [1, 6, 6, 1], [1, 7, 7, 1]],
        ..G
    },
    // q^{2 alpha + 4}
    SigmaGroup {
        ax: 2, q2: 8, sym: true,
        cells: &[[8, 5, 5, 8], [8, 6, 6, 8], [8, 7, 7, 8]],
        ..G
    },
    // - q^{alpha + 2}
    SigmaGroup {
        sign: -1, ax: 1, q2: 4, sym: true,
        cells: &[[8, 2, 2, 8], [8, 3, 3, 8], [8, 4, 4, 8]],
        ..G
    },
    // - q^{-alpha + 1}
    SigmaGroup {
        sign: -1, ax: -1, q2: 2, sym: true,
        cells: &[[2, 3, 3, 2], [2, 4, 4, 2], [3, 4, 4, 3]],
        ..G
    },
    // q^{alpha + 3}
    SigmaGroup {
        ax: 1, q2: 6, sym: true,
        cells: &[[5, 6, 6, 5], [5, 7, 7, 5], [6, 7, 7, 6]],
        ..G
    },
    // q
    SigmaGroup {
        q2: 2, sym: true,
        cells: &[[2, 5, 5, 2], [2, 6, 6, 2], [3, 5, 5, 3], [3, 7, 7, 3], [4, 6, 6, 4], [4, 7, 7, 4]],
        ..G
    },
    // q^2
    SigmaGroup {
        q2: 4, sym: true,
        cells: &[[2, 7, 7, 2], [4, 5, 5, 4], [3, 6, 6, 3]],
        ..G
    },
    // 1
    SigmaGroup { sym: true, cells: &[[1, 8, 8, 1]], ..G },
    // - Delta q^2 { +1, -q, +1 }
    SigmaGroup {
        sign: -1, dpow: 1, q2: 4, sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: 0, poly: &[], cells: &[[4, 5, 6, 3]] },
            SigmaSub { sign: -1, q2: 2, poly: &[], cells: &[[4, 5, 7, 2]] },
            SigmaSub { sign: 1, q2: 0, poly: &[], cells: &[[3, 6, 7, 2]] },
        ],
        ..G
    },
    // Delta q^3 [alpha+1] { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 1, q2: 6, full: &[1], sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: -2, poly: &[], cells: &[[5, 4, 6, 3]] },
            SigmaSub { sign: -1, q2: 0, poly: &[], cells: &[[5, 4, 7, 2]] },
            SigmaSub { sign: 1, q2: 2, poly: &[], cells: &[[6, 3, 7, 2]] },
        ],
        ..G
    },
    // Delta q^2 [alpha]^{1/2} [alpha+2]^{1/2} { -q^{-1}, +1, -q }
    SigmaGroup {
        dpow: 1, q2: 4, half: &[0, 2], sym: true,
        subs: &[
            SigmaSub { sign: -1, q2: -2, poly: &[], cells: &[[2, 7, 8, 1]] },
            SigmaSub { sign: 1, q2: 0, poly: &[], cells: &[[3, 6, 8, 1]] },
            SigmaSub { sign: -1, q2: 2, poly: &[], cells: &[[4, 5, 8, 1]] },
        ],
        ..G
    },
    // Delta q^{-alpha + 1} [alpha]^{1/2} [alpha+1]^{1/2} { -q^{-1/2}, +q^{1/2} }
    SigmaGroup {
        dpow: 1, ax: -1, q2: 2, half: &[0, 1], sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -1, poly: &[],
                cells: &[[2, 3, 5, 1], [2, 4, 6, 1], [3, 4, 7, 1]],
            },
            SigmaSub {
                sign: 1, q2: 1, poly: &[],
                cells: &[[3, 2, 5, 1], [4, 2, 6, 1], [4, 3, 7, 1]],
            },
        ],
        ..G
    },
    // Delta q^{alpha + 3} [alpha+1]^{1/2} [alpha+2]^{1/2} { -q^{-1/2}, +q^{1/2} }
    SigmaGroup {
        dpow: 1, ax: 1, q2: 6, half: &[1, 2], sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -1, poly: &[],
                cells: &[[5, 6, 8, 2], [5, 7, 8, 3], [6, 7, 8, 4]],
            },
            SigmaSub {
                sign: 1, q2: 1, poly: &[],
                cells: &[[6, 5, 8, 2], [7, 5, 8, 3], [7, 6, 8, 4]],
            },
        ],
        ..G
    },
    // Delta^2 q^3 [alpha]^{1/2} [alpha+1] [alpha+2]^{1/2} { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 2, q2: 6, half: &[0, 2], full: &[1], sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: -2, poly: &[], cells: &[[5, 4, 8, 1]] },
            SigmaSub { sign: -1, q2: 0, poly: &[], cells: &[[6, 3, 8, 1]] },
            SigmaSub { sign: 1, q2: 2, poly: &[], cells: &[[7, 2, 8, 1]] },
        ],
        ..G
    },
];

pub(crate) static HANDLE_M3: HandleTable = HandleTable {
    ax: -3,
    q2: -6,
    cells: &[
        (1, 1, 6),
        (2, -1, 6),
        (3, -1, 2),
        (4, -1, -2),
        (5, 1, 2),
        (6, 1, -2),
        (7, 1, -6),
        (8, -1, -6),
    ],
};

// ---------------------------------------------------------------------------
// LG^4: braid generator with 758 nonzero components.
// ---------------------------------------------------------------------------

pub(crate) static SIGMA_M4: &[SigmaGroup] = &[
    // q^{-4 alpha}
    SigmaGroup { ax: -4, cells: &[[1, 1, 1, 1]], ..G },
    // q^2
    SigmaGroup {
        q2: 4,
        cells: &[
            [6, 6, 6, 6], [7, 7, 7, 7], [8, 8, 8, 8],
            [9, 9, 9, 9], [10, 10, 10, 10], [11, 11, 11, 11],
        ],
        ..G
    },
    // q^{4 alpha + 12}
    SigmaGroup { ax: 4, q2: 24, cells: &[[16, 16, 16, 16]], ..G },
    // - q^{-2 alpha}
    SigmaGroup {
        sign: -1, ax: -2,
        cells: &[[2, 2, 2, 2], [3, 3, 3, 3], [4, 4, 4, 4], [5, 5, 5, 5]],
        ..G
    },
    // - q^{2 alpha + 6}
    SigmaGroup {
        sign: -1, ax: 2, q2: 12,
        cells: &[[15, 15, 15, 15], [14, 14, 14, 14], [13, 13, 13, 13], [12, 12, 12, 12]],
        ..G
    },
    // - Delta q^{-3 alpha} A_0
    SigmaGroup {
        sign: -1, dpow: 1, ax: -3, full: &[0],
        cells: &[[2, 1, 2, 1], [3, 1, 3, 1], [4, 1, 4, 1], [5, 1, 5, 1]],
        ..G
    },
    // Delta q^{3 alpha + 9} A_3
    SigmaGroup {
        dpow: 1, ax: 3, q2: 18, full: &[3],
        cells: &[[16, 12, 16, 12], [16, 13, 16, 13], [16, 14, 16, 14], [16, 15, 16, 15]],
        ..G
    },
    // - Delta q^3
    SigmaGroup {
        sign: -1, dpow: 1, q2: 6,
        cells: &[
            [7, 6, 7, 6], [8, 6, 8, 6], [8, 7, 8, 7], [9, 6, 9, 6],
            [9, 7, 9, 7], [10, 6, 10, 6], [10, 8, 10, 8], [10, 9, 10, 9],
            [11, 7, 11, 7], [11, 8, 11, 8], [11, 9, 11, 9], [11, 10, 11, 10],
        ],
        ..G
    },
    // Delta q^{-2 alpha + 1}
    SigmaGroup {
        dpow: 1, ax: -2, q2: 2,
        cells: &[[3, 2, 3, 2], [4, 2, 4, 2], [4, 3, 4, 3], [5, 2, 5, 2], [5, 3, 5, 3], [5, 4, 5, 4]],
        ..G
    },
    // Delta q^{2 alpha + 7}
    SigmaGroup {
        dpow: 1, ax: 2, q2: 14,
        cells: &[
            [13, 12, 13, 12], [14, 12, 14, 12], [14, 13, 14, 13],
            [15, 12, 15, 12], [15, 13, 15, 13], [15, 14, 15, 14],
        ],
        ..G
    },
    // Delta q^{-alpha + 1} A_1
    SigmaGroup {
        dpow: 1, ax: -1, q2: 2, full: &[1],
        cells: &[
            [6, 2, 6, 2], [6, 3, 6, 3], [7, 2, 7, 2], [7, 4, 7, 4],
            [8, 2, 8, 2], [8, 5, 8, 5], [9, 3, 9, 3], [9, 4, 9, 4],
            [10, 3, 10, 3], [10, 5, 10, 5], [11, 4, 11, 4], [11, 5, 11, 5],
        ],
        ..G
    },
    // Delta q^{-alpha + 3} (q^{-2} - q^2) A_1
    SigmaGroup {
        dpow: 1, ax: -1, q2: 6, full: &[1], extra: QBAR2_MINUS_Q2,
        cells: &[[9, 2, 9, 2], [10, 2, 10, 2], [11, 2, 11, 2], [11, 3, 11, 3]],
        ..G
    },
    // Delta^2 q^{-2 alpha + 1} A_0 A_1
    SigmaGroup {
        dpow: 2, ax: -2, q2: 2, full: &[0, 1],
        cells: &[[6, 1, 6, 1], [7, 1, 7, 1], [8, 1, 8, 1], [9, 1, 9, 1], [10, 1, 10, 1], [11, 1, 11, 1]],
        ..G
    },
    // - Delta q^{alpha + 4} A_2
    SigmaGroup {
        sign: -1, dpow: 1, ax: 1, q2: 8, full: &[2],
        cells: &[
            [12, 6, 12, 6], [12, 7, 12, 7], [12, 9, 12, 9], [13, 6, 13, 6],
            [13, 8, 13, 8], [13, 10, 13, 10], [14, 7, 14, 7], [14, 8, 14, 8],
            [14, 11, 14, 11], [15, 9, 15, 9], [15, 10, 15, 10], [15, 11, 15, 11],
        ],
        ..G
    },
    // - Delta^2 q^{-alpha + 2} A_1
    SigmaGroup {
        sign: -1, dpow: 2, ax: -1, q2: 4, full: &[1],
        cells: &[[7, 3, 7, 3], [8, 3, 8, 3], [8, 4, 8, 4], [10, 4, 10, 4]],
        ..G
    },
    // Delta^2 q^{alpha + 5} A_2
    SigmaGroup {
        dpow: 2, ax: 1, q2: 10, full: &[2],
        cells: &[[13, 7, 13, 7], [13, 9, 13, 9], [14, 9, 14, 9], [14, 10, 14, 10]],
        ..G
    },
    // - Delta q^{alpha + 6} (q^{-2} - q^2) A_2
    SigmaGroup {
        sign: -1, dpow: 1, ax: 1, q2: 12, full: &[2], extra: QBAR2_MINUS_Q2,
        cells: &[[14, 6, 14, 6], [15, 6, 15, 6], [15, 7, 15, 7], [15, 8, 15, 8]],
        ..G
    },
    // - Delta^2 q^3 A_1 A_2
    SigmaGroup {
        sign: -1, dpow: 2, q2: 6, full: &[1, 2],
        cells: &[
            [12, 2, 12, 2], [12, 3, 12, 3], [12, 4, 12, 4], [13, 2, 13, 2],
            [13, 3, 13, 3], [13, 5, 13, 5], [14, 2, 14, 2], [14, 4, 14, 4],
            [14, 5, 14, 5], [15, 3, 15, 3], [15, 4, 15, 4], [15, 5, 15, 5],
        ],
        ..G
    },
    // - Delta^3 q^{-alpha + 3} A_0 A_1 A_2
    SigmaGroup {
        sign: -1, dpow: 3, ax: -1, q2: 6, full: &[0, 1, 2],
        cells: &[[12, 1, 12, 1], [13, 1, 13, 1], [14, 1, 14, 1], [15, 1, 15, 1]],
        ..G
    },
    // Delta^2 q^{2 alpha + 7} A_2 A_3
    SigmaGroup {
        dpow: 2, ax: 2, q2: 14, full: &[2, 3],
        cells: &[
            [16, 6, 16, 6], [16, 7, 16, 7], [16, 8, 16, 8],
            [16, 9, 16, 9], [16, 10, 16, 10], [16, 11, 16, 11],
        ],
        ..G
    },
    // Delta^3 q^{alpha + 6} A_1 A_2 A_3
    SigmaGroup {
        dpow: 3, ax: 1, q2: 12, full: &[1, 2, 3],
        cells: &[[16, 2, 16, 2], [16, 3, 16, 3], [16, 4, 16, 4], [16, 5, 16, 5]],
        ..G
    },
    // Delta^3 q^6 (q^{-2} + 1 + q^2) A_1 A_2
    SigmaGroup {
        dpow: 3, q2: 12, full: &[1, 2], extra: &[(1, -4), (1, 0), (1, 4)],
        cells: &[[15, 2, 15, 2]],
        ..G
    },
    // Delta^2 q^4
    SigmaGroup { dpow: 2, q2: 8, cells: &[[10, 7, 10, 7]], ..G },
    // Delta^2 q^5 (q + q^{-1})
    SigmaGroup {
        dpow: 2, q2: 10, extra: &[(1, 2), (1, -2)],
        cells: &[[11, 6, 11, 6]],
        ..G
    },
    // Delta^3 q^4 A_1 A_2
    SigmaGroup { dpow: 3, q2: 8, full: &[1, 2], cells: &[[13, 4, 13, 4]], ..G },
    // - Delta^2 q^5 (q^{-2} - q^2) A_1 A_2
    SigmaGroup {
        sign: -1, dpow: 2, q2: 10, full: &[1, 2], extra: QBAR2_MINUS_Q2,
        cells: &[[14, 3, 14, 3]],
        ..G
    },
    // Delta^4 q^6 A_0 A_1 A_2 A_3
    SigmaGroup {
        dpow: 4, q2: 12, full: &[0, 1, 2, 3],
        cells: &[[16, 1, 16, 1]],
        ..G
    },
    // q^{-3 alpha}
    SigmaGroup {
        ax: -3, sym: true,
        cells: &[[1, 2, 2, 1], [1, 3, 3, 1], [1, 4, 4, 1], [1, 5, 5, 1]],
        ..G
    },
    // q^{2 alpha + 6}
    SigmaGroup {
        ax: 2, q2: 12, sym: true,
        cells: &[
            [11, 16, 16, 11], [10, 16, 16, 10], [9, 16, 16, 9],
            [8, 16, 16, 8], [7, 16, 16, 7], [6, 16, 16, 6],
        ],
        ..G
    },
    // q^{3 alpha + 9}
    SigmaGroup {
        ax: 3, q2: 18, sym: true,
        cells: &[[16, 15, 15, 16], [16, 14, 14, 16], [16, 13, 13, 16], [16, 12, 12, 16]],
        ..G
    },
    // q^{-2 alpha}
    SigmaGroup {
        ax: -2, sym: true,
        cells: &[
            [1, 6, 6, 1], [1, 7, 7, 1], [1, 8, 8, 1],
            [1, 9, 9, 1], [1, 10, 10, 1], [1, 11, 11, 1],
        ],
        ..G
    },
    // q^{-alpha}
    SigmaGroup {
        ax: -1, sym: true,
        cells: &[[1, 12, 12, 1], [1, 13, 13, 1], [1, 14, 14, 1], [1, 15, 15, 1]],
        ..G
    },
    // - q^{-2 alpha + 1}
    SigmaGroup {
        sign: -1, ax: -2, q2: 2, sym: true,
        cells: &[
            [2, 3, 3, 2], [2, 4, 4, 2], [2, 5, 5, 2],
            [3, 4, 4, 3], [3, 5, 5, 3], [4, 5, 5, 4],
        ],
        ..G
    },
    // q^{alpha + 3}
    SigmaGroup {
        ax: 1, q2: 6, sym: true,
        cells: &[[5, 16, 16, 5], [4, 16, 16, 4], [3, 16, 16, 3], [2, 16, 16, 2]],
        ..G
    },
    // - q^{2 alpha + 7}
    SigmaGroup {
        sign: -1, ax: 2, q2: 14, sym: true,
        cells: &[
            [15, 14, 14, 15], [15, 13, 13, 15], [15, 12, 12, 15],
            [14, 13, 13, 14], [14, 12, 12, 14], [13, 12, 12, 13],
        ],
        ..G
    },
    // q^{-alpha + 1}
    SigmaGroup {
        ax: -1, q2: 2, sym: true,
        cells: &[
            [2, 6, 6, 2], [2, 7, 7, 2], [2, 8, 8, 2], [3, 6, 6, 3],
            [3, 9, 9, 3], [3, 10, 10, 3], [4, 7, 7, 4], [4, 9, 9, 4],
            [4, 11, 11, 4], [5, 8, 8, 5], [5, 10, 10, 5], [5, 11, 11, 5],
        ],
        ..G
    },
    // q^{alpha + 4}
    SigmaGroup {
        ax: 1, q2: 8, sym: true,
        cells: &[
            [15, 10, 10, 15], [15, 11, 11, 15], [15, 9, 9, 15], [14, 11, 11, 14],
            [14, 8, 8, 14], [14, 7, 7, 14], [13, 10, 10, 13], [13, 8, 8, 13],
            [13, 6, 6, 13], [12, 9, 9, 12], [12, 7, 7, 12], [12, 6, 6, 12],
        ],
        ..G
    },
    // q^{-alpha + 2}
    SigmaGroup {
        ax: -1, q2: 4, sym: true,
        cells: &[
            [2, 9, 9, 2], [2, 10, 10, 2], [2, 11, 11, 2], [3, 7, 7, 3],
            [3, 8, 8, 3], [3, 11, 11, 3], [4, 6, 6, 4], [4, 8, 8, 4],
            [4, 10, 10, 4], [5, 6, 6, 5], [5, 7, 7, 5], [5, 9, 9, 5],
        ],
        ..G
    },
    // q^3
    SigmaGroup {
        q2: 6, sym: true,
        cells: &[
            [6, 7, 7, 6], [6, 8, 8, 6], [6, 9, 9, 6], [6, 10, 10, 6],
            [7, 8, 8, 7], [7, 9, 9, 7], [7, 11, 11, 7], [8, 10, 10, 8],
            [8, 11, 11, 8], [9, 10, 10, 9], [9, 11, 11, 9], [10, 11, 11, 10],
        ],
        ..G
    },
    // 1
    SigmaGroup { sym: true, cells: &[[1, 16, 16, 1]], ..G },
    // - q^3
    SigmaGroup {
        sign: -1, q2: 6, sym: true,
        cells: &[[2, 15, 15, 2], [3, 14, 14, 3], [4, 13, 13, 4], [5, 12, 12, 5]],
        ..G
    },
    // q^4
    SigmaGroup {
        q2: 8, sym: true,
        cells: &[[6, 11, 11, 6], [7, 10, 10, 7], [8, 9, 9, 8]],
        ..G
    },
    // q^{alpha + 5}
    SigmaGroup {
        ax: 1, q2: 10, sym: true,
        cells: &[
            [6, 14, 14, 6], [6, 15, 15, 6], [7, 13, 13, 7], [7, 15, 15, 7],
            [8, 12, 12, 8], [8, 15, 15, 8], [9, 13, 13, 9], [9, 14, 14, 9],
            [10, 12, 12, 10], [10, 14, 14, 10], [11, 12, 12, 11], [11, 13, 13, 11],
        ],
        ..G
    },
    // - q^2
    SigmaGroup {
        sign: -1, q2: 4, sym: true,
        cells: &[
            [2, 12, 12, 2], [2, 13, 13, 2], [2, 14, 14, 2], [3, 12, 12, 3],
            [3, 13, 13, 3], [3, 15, 15, 3], [4, 12, 12, 4], [4, 14, 14, 4],
            [4, 15, 15, 4], [5, 13, 13, 5], [5, 14, 14, 5], [5, 15, 15, 5],
        ],
        ..G
    },
    // Delta q^4 { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 1, q2: 8, sym: true,
        subs: &[
            SigmaSub {
                sign: 1, q2: -2, poly: &[],
                cells: &[[3, 14, 15, 2], [4, 13, 14, 3], [5, 12, 13, 4]],
            },
            SigmaSub {
                sign: -1, q2: 0, poly: &[],
                cells: &[[4, 13, 15, 2], [5, 12, 14, 3]],
            },
            SigmaSub { sign: 1, q2: 2, poly: &[], cells: &[[5, 12, 15, 2]] },
        ],
        ..G
    },
    // Delta q^5 { -q^{-1}, +1, -q }
    SigmaGroup {
        dpow: 1, q2: 10, sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -2, poly: &[],
                cells: &[[7, 10, 11, 6], [8, 9, 10, 7], [9, 8, 10, 7]],
            },
            SigmaSub {
                sign: 1, q2: 0, poly: &[],
                cells: &[[8, 9, 11, 6], [9, 8, 11, 6]],
            },
            SigmaSub { sign: -1, q2: 2, poly: &[], cells: &[[10, 7, 11, 6]] },
        ],
        ..G
    },
    // - Delta q^{-alpha + 2}
    SigmaGroup {
        sign: -1, dpow: 1, ax: -1, q2: 4, sym: true,
        cells: &[
            [3, 7, 9, 2], [3, 8, 10, 2], [4, 6, 7, 3], [4, 8, 11, 2],
            [4, 10, 11, 3], [5, 6, 8, 3], [5, 7, 8, 4], [5, 9, 10, 4],
        ],
        ..G
    },
    // - Delta q^{alpha + 5}
    SigmaGroup {
        sign: -1, dpow: 1, ax: 1, q2: 10, sym: true,
        cells: &[
            [7, 13, 14, 6], [8, 12, 13, 7], [9, 13, 15, 6], [9, 14, 15, 7],
            [10, 12, 13, 9], [10, 14, 15, 8], [11, 12, 14, 9], [11, 13, 14, 10],
        ],
        ..G
    },
    // Delta q^{-alpha + 3}
    SigmaGroup {
        dpow: 1, ax: -1, q2: 6, sym: true,
        cells: &[[4, 6, 9, 2], [5, 6, 10, 2], [5, 7, 11, 2], [5, 9, 11, 3]],
        ..G
    },
    // Delta q^{alpha + 6}
    SigmaGroup {
        dpow: 1, ax: 1, q2: 12, sym: true,
        cells: &[[8, 12, 14, 6], [10, 12, 15, 6], [11, 12, 15, 7], [11, 13, 15, 8]],
        ..G
    },
    // - Delta q^{-2 alpha + 1/2} A_0^{1/2} A_1^{1/2}
    SigmaGroup {
        sign: -1, dpow: 1, ax: -2, q2: 1, half: &[0, 1], sym: true,
        cells: &[
            [2, 3, 6, 1], [2, 4, 7, 1], [2, 5, 8, 1],
            [3, 4, 9, 1], [3, 5, 10, 1], [4, 5, 11, 1],
        ],
        ..G
    },
    // Delta q^{-2 alpha + 3/2} A_0^{1/2} A_1^{1/2}
    SigmaGroup {
        dpow: 1, ax: -2, q2: 3, half: &[0, 1], sym: true,
        cells: &[
            [3, 2, 6, 1], [4, 2, 7, 1], [5, 2, 8, 1],
            [4, 3, 9, 1], [5, 3, 10, 1], [5, 4, 11, 1],
        ],
        ..G
    },
    // Delta q^{-alpha + 3} A_1 { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 1, ax: -1, q2: 6, full: &[1], sym: true,
        subs: &[
            SigmaSub {
                sign: 1, q2: -2, poly: &[],
                cells: &[[6, 4, 7, 3], [6, 5, 8, 3], [7, 5, 8, 4], [9, 5, 10, 4]],
            },
            SigmaSub {
                sign: -1, q2: 0, poly: &[],
                cells: &[[6, 4, 9, 2], [6, 5, 10, 2], [7, 5, 11, 2], [9, 5, 11, 3]],
            },
            SigmaSub {
                sign: 1, q2: 2, poly: &[],
                cells: &[[7, 3, 9, 2], [8, 3, 10, 2], [8, 4, 11, 2], [10, 4, 11, 3]],
            },
        ],
        ..G
    },
    // Delta q^{alpha + 6} A_2 { -q^{-1}, +1, -q }
    SigmaGroup {
        dpow: 1, ax: 1, q2: 12, full: &[2], sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -2, poly: &[],
                cells: &[[12, 8, 13, 7], [12, 10, 13, 9], [12, 11, 14, 9], [13, 11, 14, 10]],
            },
            SigmaSub {
                sign: 1, q2: 0, poly: &[],
                cells: &[[12, 8, 14, 6], [12, 10, 15, 6], [12, 11, 15, 7], [13, 11, 15, 8]],
            },
            SigmaSub {
                sign: -1, q2: 2, poly: &[],
                cells: &[[13, 7, 14, 6], [13, 9, 15, 6], [14, 9, 15, 7], [14, 10, 15, 8]],
            },
        ],
        ..G
    },
    // Delta q^{-alpha + 2} A_0^{1/2} A_2^{1/2} { -q^{-1}, +1, -q }
    SigmaGroup {
        dpow: 1, ax: -1, q2: 4, half: &[0, 2], sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -2, poly: &[],
                cells: &[[2, 9, 12, 1], [2, 10, 13, 1], [2, 11, 14, 1], [3, 11, 15, 1]],
            },
            SigmaSub {
                sign: 1, q2: 0, poly: &[],
                cells: &[[3, 7, 12, 1], [3, 8, 13, 1], [4, 8, 14, 1], [4, 10, 15, 1]],
            },
            SigmaSub {
                sign: -1, q2: 2, poly: &[],
                cells: &[[4, 6, 12, 1], [5, 6, 13, 1], [5, 7, 14, 1], [5, 9, 15, 1]],
            },
        ],
        ..G
    },
    // Delta q^{alpha + 5} A_1^{1/2} A_3^{1/2} { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 1, ax: 1, q2: 10, half: &[1, 3], sym: true,
        subs: &[
            SigmaSub {
                sign: 1, q2: -2, poly: &[],
                cells: &[[6, 14, 16, 2], [6, 15, 16, 3], [7, 15, 16, 4], [8, 15, 16, 5]],
            },
            SigmaSub {
                sign: -1, q2: 0, poly: &[],
                cells: &[[7, 13, 16, 2], [9, 13, 16, 3], [9, 14, 16, 4], [10, 14, 16, 5]],
            },
            SigmaSub {
                sign: 1, q2: 2, poly: &[],
                cells: &[[8, 12, 16, 2], [10, 12, 16, 3], [11, 12, 16, 4], [11, 13, 16, 5]],
            },
        ],
        ..G
    },
    // Delta^2 q^{-alpha + 3} A_0^{1/2} A_1 A_2^{1/2} { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 2, ax: -1, q2: 6, half: &[0, 2], full: &[1], sym: true,
        subs: &[
            SigmaSub {
                sign: 1, q2: -2, poly: &[],
                cells: &[[6, 4, 12, 1], [6, 5, 13, 1], [7, 5, 14, 1], [9, 5, 15, 1]],
            },
            SigmaSub {
                sign: -1, q2: 0, poly: &[],
                cells: &[[7, 3, 12, 1], [8, 3, 13, 1], [8, 4, 14, 1], [10, 4, 15, 1]],
            },
            SigmaSub {
                sign: 1, q2: 2, poly: &[],
                cells: &[[9, 2, 12, 1], [10, 2, 13, 1], [11, 2, 14, 1], [11, 3, 15, 1]],
            },
        ],
        ..G
    },
    // Delta^2 q^{alpha + 6} A_1^{1/2} A_2 A_3^{1/2} { +q^{-1}, -1, +q }
    SigmaGroup {
        dpow: 2, ax: 1, q2: 12, half: &[1, 3], full: &[2], sym: true,
        subs: &[
            SigmaSub {
                sign: 1, q2: -2, poly: &[],
                cells: &[[12, 8, 16, 2], [12, 10, 16, 3], [12, 11, 16, 4], [13, 11, 16, 5]],
            },
            SigmaSub {
                sign: -1, q2: 0, poly: &[],
                cells: &[[13, 7, 16, 2], [13, 9, 16, 3], [14, 9, 16, 4], [14, 10, 16, 5]],
            },
            SigmaSub {
                sign: 1, q2: 2, poly: &[],
                cells: &[[14, 6, 16, 2], [15, 6, 16, 3], [15, 7, 16, 4], [15, 8, 16, 5]],
            },
        ],
        ..G
    },
    // - Delta q^{5/2} A_1^{1/2} A_2^{1/2}
    SigmaGroup {
        sign: -1, dpow: 1, q2: 5, half: &[1, 2], sym: true,
        cells: &[
            [6, 7, 12, 2], [6, 8, 13, 2], [6, 9, 12, 3], [6, 10, 13, 3],
            [7, 8, 14, 2], [7, 9, 12, 4], [7, 11, 14, 4], [8, 10, 13, 5],
            [8, 11, 14, 5], [9, 10, 15, 3], [9, 11, 15, 4], [10, 11, 15, 5],
        ],
        ..G
    },
    // Delta q^{7/2} A_1^{1/2} A_2^{1/2}
    SigmaGroup {
        dpow: 1, q2: 7, half: &[1, 2], sym: true,
        cells: &[
            [7, 6, 12, 2], [8, 6, 13, 2], [8, 7, 14, 2], [9, 6, 12, 3],
            [9, 7, 12, 4], [10, 6, 13, 3], [10, 8, 13, 5], [10, 9, 15, 3],
            [11, 7, 14, 4], [11, 8, 14, 5], [11, 9, 15, 4], [11, 10, 15, 5],
        ],
        ..G
    },
    // Delta q^4 A_1^{1/2} A_2^{1/2} { -q^{-1/2}, +q^{1/2} }
    SigmaGroup {
        dpow: 1, q2: 8, half: &[1, 2], sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -1, poly: &[],
                cells: &[[6, 11, 14, 3], [7, 10, 13, 4], [8, 9, 12, 5]],
            },
            SigmaSub {
                sign: 1, q2: 1, poly: &[],
                cells: &[[9, 8, 13, 4], [10, 7, 12, 5], [6, 11, 15, 2]],
            },
        ],
        ..G
    },
    // Delta q^6 A_1^{1/2} A_2^{1/2} { -q^{-1/2}, +q^{1/2} }
    SigmaGroup {
        dpow: 1, q2: 12, half: &[1, 2], sym: true,
        subs: &[
            SigmaSub {
                sign: -1, q2: -1, poly: &[],
                cells: &[[9, 8, 14, 3], [7, 10, 15, 2], [11, 6, 12, 5]],
            },
            SigmaSub {
                sign: 1, q2: 1, poly: &[],
                cells: &[[11, 6, 13, 4], [10, 7, 14, 3], [8, 9, 15, 2]],
            },
        ],
        ..G
    },
    // Delta^2 q^4 A_1^{1/2} A_2^{1/2} { +q^{-1/2}, -q^{1/2} }
    SigmaGroup {
        dpow: 2, q2: 8, half: &[1, 2], sym: true,
        subs: &[
            SigmaSub {
                sign: 1, q2: -1, poly: &[],
                cells: &[[7, 10, 14, 3], [8, 9, 13, 4]],
            },
            SigmaSub {
                sign: -1, q2: 1, poly: &[],
                cells: &[[8, 9, 14, 3], [10, 7, 13, 4]],
            },
        ],
        ..G
    },
    // Delta^2 q^{11/2} (q^{-2} - q^2) A_1^{1/2} A_2^{1/2} { -q^{-1}, +1, -q }
    SigmaGroup {
        dpow: 2, q2: 11, half: &[1, 2], extra: QBAR2_MINUS_Q2, sym: true,
        subs: &[
            SigmaSub { sign: -1, q2: -2, poly: &[], cells: &[[9, 8, 15, 2]] },
            SigmaSub {
                sign: 1, q2: 0, poly: &[],
                cells: &[[10, 7, 15, 2], [11, 6, 14, 3]],
            },
            SigmaSub { sign: -1, q2: 2, poly: &[], cells: &[[11, 6, 15, 2]] },
        ],
        ..G
    },
    // Delta^2 q^6 A_1 A_2 { q^{-2}, -q^{-1}, 1, -q, q^2 }
    SigmaGroup {
        dpow: 2, q2: 12, full: &[1, 2], sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: -4, poly: &[], cells: &[[12, 5, 13, 4]] },
            SigmaSub { sign: -1, q2: -2, poly: &[], cells: &[[12, 5, 14, 3]] },
            SigmaSub {
                sign: 1, q2: 0, poly: &[],
                cells: &[[12, 5, 15, 2], [13, 4, 14, 3]],
            },
            SigmaSub { sign: -1, q2: 2, poly: &[], cells: &[[13, 4, 15, 2]] },
            SigmaSub { sign: 1, q2: 4, poly: &[], cells: &[[14, 3, 15, 2]] },
        ],
        ..G
    },
    // Delta^2 q^5 A_0^{1/2} A_1^{1/2} A_2^{1/2} A_3^{1/2} { q^{-2}, -q^{-1}, 1, -q, q^2 }
    SigmaGroup {
        dpow: 2, q2: 10, half: &[0, 1, 2, 3], sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: -4, poly: &[], cells: &[[6, 11, 16, 1]] },
            SigmaSub { sign: -1, q2: -2, poly: &[], cells: &[[7, 10, 16, 1]] },
            SigmaSub {
                sign: 1, q2: 0, poly: &[],
                cells: &[[8, 9, 16, 1], [9, 8, 16, 1]],
            },
            SigmaSub { sign: -1, q2: 2, poly: &[], cells: &[[10, 7, 16, 1]] },
            SigmaSub { sign: 1, q2: 4, poly: &[], cells: &[[11, 6, 16, 1]] },
        ],
        ..G
    },
    // - Delta q^3 A_0^{1/2} A_3^{1/2} { +q^{-3/2}, -q^{-1/2}, +q^{1/2}, -q^{3/2} }
    SigmaGroup {
        sign: -1, dpow: 1, q2: 6, half: &[0, 3], sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: -3, poly: &[], cells: &[[2, 15, 16, 1]] },
            SigmaSub { sign: -1, q2: -1, poly: &[], cells: &[[3, 14, 16, 1]] },
            SigmaSub { sign: 1, q2: 1, poly: &[], cells: &[[4, 13, 16, 1]] },
            SigmaSub { sign: -1, q2: 3, poly: &[], cells: &[[5, 12, 16, 1]] },
        ],
        ..G
    },
    // - Delta^3 q^6 A_0^{1/2} A_1 A_2 A_3^{1/2} { +q^{-3/2}, -q^{-1/2}, +q^{1/2}, -q^{3/2} }
    SigmaGroup {
        sign: -1, dpow: 3, q2: 12, half: &[0, 3], full: &[1, 2], sym: true,
        subs: &[
            SigmaSub { sign: 1, q2: -3, poly: &[], cells: &[[12, 5, 16, 1]] },
            SigmaSub { sign: -1, q2: -1, poly: &[], cells: &[[13, 4, 16, 1]] },
            SigmaSub { sign: 1, q2: 1, poly: &[], cells: &[[14, 3, 16, 1]] },
            SigmaSub { sign: -1, q2: 3, poly: &[], cells: &[[15, 2, 16, 1]] },
        ],
        ..G
    },
    // - Delta q^{2 alpha + 13/2} A_2^{1/2} A_3^{1/2}
    SigmaGroup {
        sign: -1, dpow: 1, ax: 2, q2: 13, half: &[2, 3], sym: true,
        cells: &[
            [12, 13, 16, 6], [12, 14, 16, 7], [13, 14, 16, 8],
            [12, 15, 16, 9], [13, 15, 16, 10], [14, 15, 16, 11],
        ],
        ..G
    },
    // Delta q^{2 alpha + 15/2} A_2^{1/2} A_3^{1/2}
    SigmaGroup {
        dpow: 1, ax: 2, q2: 15, half: &[2, 3], sym: true,
        cells: &[
            [13, 12, 16, 6], [14, 12, 16, 7], [14, 13, 16, 8],
            [15, 12, 16, 9], [15, 13, 16, 10], [15, 14, 16, 11],
        ],
        ..G
    },
];

pub(crate) static HANDLE_M4: HandleTable = HandleTable {
    ax: -4,
    q2: -12,
    cells: &[
        (1, 1, 12),
        (2, -1, 12),
        (3, -1, 8),
        (4, -1, 4),
        (5, -1, 0),
        (6, 1, 8),
        (7, 1, 4),
        (8, 1, 0),
        (9, 1, 0),
        (10, 1, -4),
        (11, 1, -8),
        (15, -1, -12),
        (14, -1, -8),
        (13, -1, -4),
        (12, -1, 0),
        (16, 1, -12),
    ],
};

pub(crate) fn sigma_table(m: u8) -> &'static [SigmaGroup] {
    match m {
        1 => SIGMA_M1,
        2 => SIGMA_M2,
        3 => SIGMA_M3,
        4 => SIGMA_M4,
        _ => panic!("no table for m = {}", m),
    }
}

pub(crate) fn handle_table(m: u8) -> &'static HandleTable {
    match m {
        1 => &HANDLE_M1,
        2 => &HANDLE_M2,
        3 => &HANDLE_M3,
        4 => &HANDLE_M4,
        _ => panic!("no table for m = {}", m),
    }
}

/// Expected nonzero braid-generator component counts per model.
pub(crate) const SIGMA_COUNTS: [(u8, usize); 4] = [(1, 5), (2, 26), (3, 139), (4, 758)];
