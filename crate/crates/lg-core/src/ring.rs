//! Exact coefficient arithmetic for the state models.
//!
//! Every tensor entry and every intermediate contraction value lives in one
//! ring: Laurent polynomials over `Z` in the internal variables `Q = q^{1/2}`
//! and `p = q^{alpha + (m-n)/2}`, extended by the formal bracket-root symbols
//! `s_0 .. s_3` (with `s_i^2 = q^{alpha+i} - q^{-alpha-i}`), and localized at
//! `Delta = q - q^{-1} = Q^2 - Q^{-2}`.
//!
//! An element is stored as an integer-coefficient numerator over the
//! denominator `Delta^dpow`. Reduction is lazy: exact division by `Delta` is
//! attempted whenever the denominator is nontrivial, so a stored element is
//! always in the canonical form where either `dpow = 0` or the numerator is
//! not divisible by `Delta`. Equality is plain structural equality of
//! canonical forms.
//!
//! Root symbols never survive a squaring: `s_i^2` is rewritten on the fly to
//! its binomial expansion in `Q` and `p`, so each monomial carries each `s_i`
//! with exponent 0 or 1 only.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors surfaced by ring operations with genuine failure modes.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    /// `invert_vars` was asked to invert a term carrying a root symbol.
    #[error("cannot invert variables of a term carrying root symbols (smask {smask:#06b})")]
    RootInversion { smask: u8 },
    /// Conversion to link-invariant variables hit a non-polynomial element.
    #[error("not a Laurent polynomial in (q, p): {reason}")]
    NotPolynomial { reason: String },
    /// A table entry produced a non-integral `Q` exponent.
    #[error("malformed entry: exponent {num}/2 of q maps to a non-integral Q power")]
    NonIntegralExponent { num: i64 },
}

/// Evaluation context: fixes `m` and `n`, and with them the exponent shift
/// used when eliminating `alpha` (`q^{x*alpha+y} = p^x q^{y - x(m-n)/2}`).
///
/// All elements of a computation must share one context; mixing contexts in
/// arithmetic is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct RingCtx {
    m: u8,
    n: u8,
}

impl RingCtx {
    pub fn new(m: u8, n: u8) -> Self {
        assert!(m >= 1 && n >= 1, "m and n must be positive");
        RingCtx { m, n }
    }

    /// Context for the shipped models `LG^m = LG^{m,1}`.
    pub fn lg(m: u8) -> Self {
        Self::new(m, 1)
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// `m - n`: twice the alpha-shift, measured in `Q`-exponent units.
    #[inline]
    pub(crate) fn shift_q(&self) -> i32 {
        self.m as i32 - self.n as i32
    }
}

/// A monomial `Q^eq * p^ep * prod_{i in smask} s_i` of the coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial {
    /// Exponent of `Q = q^{1/2}`.
    pub eq: i32,
    /// Exponent of `p`.
    pub ep: i32,
    /// Root symbols present, bit `i` for `s_i`; exponents are always 0 or 1.
    pub smask: u8,
}

impl Monomial {
    pub const fn new(eq: i32, ep: i32) -> Self {
        Monomial { eq, ep, smask: 0 }
    }

    pub const fn with_roots(eq: i32, ep: i32, smask: u8) -> Self {
        Monomial { eq, ep, smask }
    }

    pub const ONE: Monomial = Monomial::new(0, 0);

    /// Formal inverse; only valid for root-free monomials.
    pub fn inverse(&self) -> Monomial {
        debug_assert_eq!(self.smask, 0);
        Monomial::new(-self.eq, -self.ep)
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.smask & other.smask, 0);
        Monomial::with_roots(self.eq + other.eq, self.ep + other.ep, self.smask | other.smask)
    }
}

/// A term of the link-invariant presentation: `c * q^eq * p^ep`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiTerm {
    /// Exponent of `q` (not `Q`).
    pub eq: i32,
    /// Exponent of `p`.
    pub ep: i32,
    pub c: BigInt,
}

/// An exact ring element: `terms / Delta^dpow`, kept in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElem {
    ctx: RingCtx,
    dpow: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl RingElem {
    pub fn zero(ctx: RingCtx) -> Self {
        RingElem { ctx, dpow: 0, terms: BTreeMap::new() }
    }

    pub fn one(ctx: RingCtx) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: RingCtx, k: i64) -> Self {
        Self::monomial(ctx, Monomial::ONE, BigInt::from(k))
    }

    pub fn monomial(ctx: RingCtx, m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RingElem { ctx, dpow: 0, terms }
    }

    /// `Delta = Q^2 - Q^{-2}` as a denominator-free element.
    pub fn delta(ctx: RingCtx) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(2, 0), BigInt::one());
        terms.insert(Monomial::new(-2, 0), -BigInt::one());
        RingElem { ctx, dpow: 0, terms }
    }

    /// The bracket `[alpha + i]_q` in internal variables:
    /// `(p q^{i - (m-n)/2} - p^{-1} q^{(m-n)/2 - i}) / Delta`.
    pub fn bracket(ctx: RingCtx, i: i32) -> Self {
        let mut e = Self::bracket_numerator(ctx, i);
        e.dpow = 1;
        e.canonicalize();
        e
    }

    /// Numerator of the bracket, i.e. `Delta * [alpha + i]_q` expanded:
    /// this is also the reduction of the root square `s_i^2`.
    pub(crate) fn bracket_numerator(ctx: RingCtx, i: i32) -> Self {
        let a = 2 * i - ctx.shift_q();
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(a, 1), BigInt::one());
        terms.insert(Monomial::new(-a, -1), -BigInt::one());
        RingElem { ctx, dpow: 0, terms }
    }

    /// The bare root symbol `s_i` as an element.
    pub fn root(ctx: RingCtx, i: u8) -> Self {
        assert!(i < 4);
        Self::monomial(ctx, Monomial::with_roots(0, 0, 1 << i), BigInt::one())
    }

    /// `q^{x*alpha + y}` converted to internal variables. `y2` is the
    /// exponent `y` in `Q` units (i.e. `2y`), so half-integer powers of `q`
    /// stay integral.
    pub fn to_int(ctx: RingCtx, x: i32, y2: i32) -> Monomial {
        Monomial::new(y2 - x * ctx.shift_q(), x)
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.dpow == 0
            && self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Denominator exponent of the canonical form.
    pub fn denominator_pow(&self) -> u32 {
        self.dpow
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn assert_ctx(&self, other: &RingElem) {
        assert_eq!(self.ctx, other.ctx, "mixing ring contexts");
    }

    pub fn neg(&self) -> RingElem {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        RingElem { ctx: self.ctx, dpow: self.dpow, terms }
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        self.assert_ctx(other);
        let dpow = self.dpow.max(other.dpow);
        let mut terms = lift_terms(&self.terms, dpow - self.dpow);
        for (m, c) in lift_terms(&other.terms, dpow - other.dpow) {
            add_term(&mut terms, m, c);
        }
        let mut out = RingElem { ctx: self.ctx, dpow, terms };
        out.canonicalize();
        out
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElem) -> RingElem {
        self.assert_ctx(other);
        let sh = self.ctx.shift_q();
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let coef = ca * cb;
                let smask = ma.smask ^ mb.smask;
                let squared = ma.smask & mb.smask;
                // Expand every squared root s_i^2 into its binomial.
                let mut partial: Vec<(i32, i32, BigInt)> =
                    vec![(ma.eq + mb.eq, ma.ep + mb.ep, coef)];
                for i in 0..4u8 {
                    if squared & (1 << i) == 0 {
                        continue;
                    }
                    let a = 2 * i as i32 - sh;
                    let mut next = Vec::with_capacity(partial.len() * 2);
                    for (eq, ep, c) in partial {
                        next.push((eq + a, ep + 1, c.clone()));
                        next.push((eq - a, ep - 1, -c));
                    }
                    partial = next;
                }
                for (eq, ep, c) in partial {
                    add_term(&mut terms, Monomial::with_roots(eq, ep, smask), c);
                }
            }
        }
        let mut out = RingElem { ctx: self.ctx, dpow: self.dpow + other.dpow, terms };
        out.canonicalize();
        out
    }

    /// Multiply by a signed monomial without building a full element.
    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> RingElem {
        if c.is_zero() {
            return RingElem::zero(self.ctx);
        }
        if m.smask == 0 {
            let terms = self
                .terms
                .iter()
                .map(|(t, k)| (Monomial::with_roots(t.eq + m.eq, t.ep + m.ep, t.smask), k * c))
                .collect();
            return RingElem { ctx: self.ctx, dpow: self.dpow, terms };
        }
        self.mul(&RingElem::monomial(self.ctx, *m, c.clone()))
    }

    /// Divide by `Delta^k` (i.e. raise the denominator), re-canonicalizing.
    pub fn div_delta_pow(&self, k: u32) -> RingElem {
        let mut out = self.clone();
        out.dpow += k;
        out.canonicalize();
        out
    }

    /// Invert the internal variables: `Q -> Q^{-1}`, `p -> p^{-1}`.
    ///
    /// The denominator transforms as `Delta -> -Delta`, so a global sign
    /// `(-1)^dpow` keeps the stored denominator literally `Delta^dpow`.
    /// Root symbols are rejected: they only occur inside pre-built model
    /// entries, which are inverted structurally at the table level.
    pub fn invert_vars(&self) -> Result<RingElem, RingError> {
        let sign = if self.dpow % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.smask != 0 {
                return Err(RingError::RootInversion { smask: m.smask });
            }
            terms.insert(m.inverse(), c * &sign);
        }
        // Divisibility by Delta is preserved under inversion (Delta maps to
        // an associate of itself), so the result is already canonical.
        Ok(RingElem { ctx: self.ctx, dpow: self.dpow, terms })
    }

    /// Variable inversion extended to even products of root symbols.
    ///
    /// On the subring of even root degree the inversion is the ring map
    /// `Q -> Q^{-1}`, `p -> p^{-1}`, `s_i -> i^{2i+1} s_i` (which squares
    /// to the forced `s_i^2 -> -s_i^2`); a monomial with root set `S` picks
    /// up the real sign `(-1)^{|S|/2 + sum(S)}`. Used for inverting model
    /// entries; odd root degree has no image in the ring.
    pub(crate) fn invert_vars_rooted(&self) -> RingElem {
        let dsign = if self.dpow % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            assert!(m.smask.count_ones() % 2 == 0, "odd root degree is not invertible");
            let mut flips = m.smask.count_ones() / 2;
            for i in 0..4 {
                if m.smask & (1 << i) != 0 {
                    flips += i;
                }
            }
            let sign = if flips % 2 == 0 { c * &dsign } else { -(c * &dsign) };
            terms.insert(Monomial::with_roots(-m.eq, -m.ep, m.smask), sign);
        }
        RingElem { ctx: self.ctx, dpow: self.dpow, terms }
    }

    /// Convert a finished invariant value to link-invariant terms `(q, p, c)`,
    /// sorted by `(p, q)`.
    pub fn to_li(&self) -> Result<Vec<LiTerm>, RingError> {
        if self.dpow != 0 {
            return Err(RingError::NotPolynomial {
                reason: format!("denominator Delta^{} did not cancel", self.dpow),
            });
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.smask != 0 {
                return Err(RingError::NotPolynomial {
                    reason: format!("root symbols survived (smask {:#06b})", m.smask),
                });
            }
            if m.eq % 2 != 0 {
                return Err(RingError::NotPolynomial {
                    reason: format!("odd power Q^{} has no q expression", m.eq),
                });
            }
            out.push(LiTerm { eq: m.eq / 2, ep: m.ep, c: c.clone() });
        }
        out.sort_by_key(|t| (t.ep, t.eq));
        Ok(out)
    }

    /// Decompose a root-free element into representation-variable exponent
    /// pairs `(x, y2, c)` meaning `c * q^{x*alpha + y2/2}`.
    pub fn rep_exponents(&self) -> Result<Vec<(i32, i32, BigInt)>, RingError> {
        let sh = self.ctx.shift_q();
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.smask != 0 {
                return Err(RingError::RootInversion { smask: m.smask });
            }
            out.push((m.ep, m.eq + m.ep * sh, c.clone()));
        }
        Ok(out)
    }

    /// Rebuild an element from representation-variable exponent pairs.
    pub fn from_rep_exponents(ctx: RingCtx, pairs: &[(i32, i32, BigInt)]) -> RingElem {
        let mut terms = BTreeMap::new();
        for (x, y2, c) in pairs {
            add_term(&mut terms, Self::to_int(ctx, *x, *y2), c.clone());
        }
        let mut out = RingElem { ctx, dpow: 0, terms };
        out.canonicalize();
        out
    }

    /// Largest total `s`-degree over the stored monomials.
    pub fn max_root_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.smask.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// True when every monomial carries an even number of root symbols.
    pub fn root_degree_even(&self) -> bool {
        self.terms.keys().all(|m| m.smask.count_ones() % 2 == 0)
    }

    fn canonicalize(&mut self) {
        while self.dpow > 0 {
            match try_div_delta(&self.terms) {
                Some(reduced) => {
                    self.terms = reduced;
                    self.dpow -= 1;
                }
                None => break,
            }
        }
        if self.terms.is_empty() {
            self.dpow = 0;
        }
    }
}

fn add_term(map: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Multiply a numerator by `Delta^k`.
fn lift_terms(terms: &BTreeMap<Monomial, BigInt>, k: u32) -> BTreeMap<Monomial, BigInt> {
    let mut cur = terms.clone();
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (m, c) in &cur {
            add_term(&mut next, Monomial::with_roots(m.eq + 2, m.ep, m.smask), c.clone());
            add_term(&mut next, Monomial::with_roots(m.eq - 2, m.ep, m.smask), -c);
        }
        cur = next;
    }
    cur
}

/// Attempt exact division of a numerator by `Delta = Q^2 - Q^{-2}`.
///
/// Division goes slice by slice: monomials sharing `(ep, smask)` form a
/// Laurent polynomial in `Q` which is divided synthetically from the top.
/// Any nonzero remainder anywhere aborts the whole attempt.
fn try_div_delta(terms: &BTreeMap<Monomial, BigInt>) -> Option<BTreeMap<Monomial, BigInt>> {
    let mut slices: BTreeMap<(i32, u8), BTreeMap<i32, BigInt>> = BTreeMap::new();
    for (m, c) in terms {
        slices
            .entry((m.ep, m.smask))
            .or_default()
            .insert(m.eq, c.clone());
    }
    let mut out = BTreeMap::new();
    for ((ep, smask), mut slice) in slices {
        let low = *slice.keys().next().expect("nonempty slice");
        while let Some((&high, _)) = slice.iter().next_back() {
            if high < low + 4 {
                return None;
            }
            let c = slice.remove(&high).expect("present");
            add_term(&mut out, Monomial::with_roots(high - 2, ep, smask), c.clone());
            // f - c Q^{high-2} * Delta = f - c Q^high + c Q^{high-4}
            use std::collections::btree_map::Entry;
            match slice.entry(high - 4) {
                Entry::Vacant(v) => {
                    v.insert(c);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }
    Some(out)
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.eq != 0 {
                factors.push(format!("Q^{}", m.eq));
            }
            if m.ep != 0 {
                factors.push(format!("p^{}", m.ep));
            }
            for i in 0..4 {
                if m.smask & (1 << i) != 0 {
                    factors.push(format!("s{}", i));
                }
            }
            if factors.is_empty() || !mag.is_one() {
                write!(f, "{}", mag)?;
                if !factors.is_empty() {
                    write!(f, " ")?;
                }
            }
            write!(f, "{}", factors.join(" "))?;
        }
        if self.dpow > 0 {
            write!(f, " / D^{}", self.dpow)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c1() -> RingCtx {
        RingCtx::lg(1)
    }

    fn mono(ctx: RingCtx, eq: i32, ep: i32, c: i64) -> RingElem {
        RingElem::monomial(ctx, Monomial::new(eq, ep), BigInt::from(c))
    }

    #[test]
    fn bracket_examples() {
        // [alpha] for m=1: (p - p^-1)/Delta
        let b = RingElem::bracket(c1(), 0);
        assert_eq!(b.denominator_pow(), 1);
        let expect = mono(c1(), 0, 1, 1).add(&mono(c1(), 0, -1, -1)).div_delta_pow(1);
        assert_eq!(b, expect);

        // [alpha] for m=2: (p Q^-1 - p^-1 Q)/Delta
        let ctx = RingCtx::lg(2);
        let b = RingElem::bracket(ctx, 0);
        let expect = mono(ctx, -1, 1, 1).add(&mono(ctx, 1, -1, -1)).div_delta_pow(1);
        assert_eq!(b, expect);

        // [alpha+3] for m=4: (p Q^3 - p^-1 Q^-3)/Delta
        let ctx = RingCtx::lg(4);
        let b = RingElem::bracket(ctx, 3);
        let expect = mono(ctx, 3, 1, 1).add(&mono(ctx, -3, -1, -1)).div_delta_pow(1);
        assert_eq!(b, expect);
    }

    #[test]
    fn to_int_examples() {
        // q^{-2 alpha} at m=2 -> p^-2 Q^2
        assert_eq!(RingElem::to_int(RingCtx::lg(2), -2, 0), Monomial::new(2, -2));
        // q^alpha at m=1 -> p
        assert_eq!(RingElem::to_int(RingCtx::lg(1), 1, 0), Monomial::new(0, 1));
        // q^{4 alpha + 12} at m=4 -> p^4 Q^12
        assert_eq!(RingElem::to_int(RingCtx::lg(4), 4, 24), Monomial::new(12, 4));
    }

    #[test]
    fn root_square_reduces() {
        // s_0 * s_0 at m=1 -> p - p^-1
        let s = RingElem::root(c1(), 0);
        let sq = s.mul(&s);
        let expect = mono(c1(), 0, 1, 1).add(&mono(c1(), 0, -1, -1));
        assert_eq!(sq, expect);
    }

    #[test]
    fn delta_cancellation() {
        // (Q - Q^-1)(Q + Q^-1) / Delta = 1
        let a = mono(c1(), 1, 0, 1).add(&mono(c1(), -1, 0, -1));
        let b = mono(c1(), 1, 0, 1).add(&mono(c1(), -1, 0, 1));
        let prod = a.mul(&b).div_delta_pow(1);
        assert!(prod.is_one(), "got {}", prod);

        // bracket * Delta telescopes to the bracket numerator
        let t = RingElem::bracket(c1(), 0).mul(&RingElem::delta(c1()));
        assert_eq!(t.denominator_pow(), 0);
        assert_eq!(t, RingElem::bracket_numerator(c1(), 0));
    }

    #[test]
    fn invert_examples() {
        // Q^2 p -> Q^-2 p^-1
        let a = mono(c1(), 2, 1, 1);
        assert_eq!(a.invert_vars().unwrap(), mono(c1(), -2, -1, 1));
        // the bracket is invariant
        let b = RingElem::bracket(c1(), 0);
        assert_eq!(b.invert_vars().unwrap(), b);
        // constants are fixed
        let k = RingElem::from_int(c1(), 7);
        assert_eq!(k.invert_vars().unwrap(), k);
        // roots are rejected
        assert!(RingElem::root(c1(), 1).invert_vars().is_err());
    }

    #[test]
    fn invert_is_involution() {
        let e = mono(c1(), 3, -2, 5)
            .add(&mono(c1(), -1, 0, -4))
            .div_delta_pow(2);
        let twice = e.invert_vars().unwrap().invert_vars().unwrap();
        assert_eq!(twice, e);
    }

    #[test]
    fn to_li_examples() {
        // Q^4 p^2 -> q^2 P
        let a = mono(c1(), 4, 2, 1);
        let li = a.to_li().unwrap();
        assert_eq!(li, vec![LiTerm { eq: 2, ep: 2, c: BigInt::one() }]);

        // -1 + p^-2 + p^2 sorted by (p, q)
        let e = mono(c1(), 0, 0, -1)
            .add(&mono(c1(), 0, -2, 1))
            .add(&mono(c1(), 0, 2, 1));
        let li = e.to_li().unwrap();
        let expect: Vec<LiTerm> = vec![
            LiTerm { eq: 0, ep: -2, c: BigInt::one() },
            LiTerm { eq: 0, ep: 0, c: BigInt::from(-1) },
            LiTerm { eq: 0, ep: 2, c: BigInt::one() },
        ];
        assert_eq!(li, expect);

        // odd Q power is rejected
        assert!(mono(c1(), 3, 0, 1).to_li().is_err());
        // uncancelled denominator is rejected
        assert!(mono(c1(), 0, 1, 1).div_delta_pow(1).to_li().is_err());
    }

    #[test]
    fn rep_round_trip() {
        let ctx = RingCtx::lg(3);
        let e = RingElem::monomial(ctx, RingElem::to_int(ctx, -2, 5), BigInt::from(3))
            .add(&RingElem::monomial(ctx, RingElem::to_int(ctx, 1, -4), BigInt::from(-2)));
        let pairs = e.rep_exponents().unwrap();
        assert_eq!(RingElem::from_rep_exponents(ctx, &pairs), e);
    }
}
