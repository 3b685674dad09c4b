//! State models for the invariants `LG^m`, `m = 1..4`.
//!
//! A model consists of the braid generator `sigma` (a sparse rank-4 tensor on
//! the two-strand space), its inverse, the diagonal handle `C` and its
//! inverse, and the scaling factors that relate the ambient-isotopy pair
//! `(sigma, C)` back to the bare pair `(R, S)`. Everything is compiled from
//! the embedded tables in [`tables`] and validated before use.

mod tables;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::ring::{Monomial, RingCtx, RingElem};

use tables::{HandleTable, SigmaGroup, SigmaSub};

/// Index of a two-strand basis state, components in `1..=N`.
pub type PairIdx = (u8, u8);

/// Sparse map on the two-strand space, keyed `(row, column)`.
pub type PairMap = BTreeMap<(PairIdx, PairIdx), RingElem>;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("table corruption in LG^{m}: {detail}")]
    TableCorruption { m: u8, detail: String },
    #[error("model inconsistency in LG^{m}: {detail}")]
    Inconsistency { m: u8, detail: String },
    #[error("scaling failure: {detail}")]
    NotScalable { detail: String },
    #[error("dimension mismatch: {detail}")]
    DimensionMismatch { detail: String },
}

/// A compiled state model for one value of `m`.
pub struct StateModel {
    ctx: RingCtx,
    dim: usize,
    sigma: PairMap,
    sigma_inv: PairMap,
    /// Braid-generator entries grouped by column pair, for crossing application.
    sigma_by_col: Vec<Vec<(PairIdx, RingElem)>>,
    sigma_inv_by_col: Vec<Vec<(PairIdx, RingElem)>>,
    /// Diagonal handle entries, index `a-1`, each a signed monomial.
    handle: Vec<RingElem>,
    handle_inv: Vec<RingElem>,
    kappa_sigma: Monomial,
    kappa_c: Monomial,
}

impl StateModel {
    /// Compile and validate the model for `m` in `1..=4`.
    pub fn build(m: u8) -> Result<StateModel, ModelError> {
        assert!((1..=4).contains(&m), "shipped models cover m = 1..4");
        let ctx = RingCtx::lg(m);
        let dim = 1usize << m;

        let sigma = compile_sigma(ctx, m, false)?;
        let sigma_inv = compile_sigma(ctx, m, true)?;
        let handle = compile_handle(ctx, tables::handle_table(m));
        let handle_inv = handle
            .iter()
            .map(|e| e.invert_vars().expect("handle entries are root-free"))
            .collect::<Vec<_>>();

        let expected = tables::SIGMA_COUNTS[(m - 1) as usize].1;
        if sigma.len() != expected {
            return Err(ModelError::TableCorruption {
                m,
                detail: format!("sigma has {} nonzero components, expected {}", sigma.len(), expected),
            });
        }
        if sigma_inv.len() != expected {
            return Err(ModelError::TableCorruption {
                m,
                detail: format!(
                    "inverse sigma has {} nonzero components, expected {}",
                    sigma_inv.len(),
                    expected
                ),
            });
        }
        if handle.len() != dim {
            return Err(ModelError::TableCorruption {
                m,
                detail: format!("handle has {} components, expected {}", handle.len(), dim),
            });
        }

        let model = StateModel {
            ctx,
            dim,
            sigma_by_col: group_by_col(&sigma, dim),
            sigma_inv_by_col: group_by_col(&sigma_inv, dim),
            sigma,
            sigma_inv,
            handle,
            handle_inv,
            kappa_sigma: RingElem::to_int(ctx, tables::kappa_alpha_exponent(m) as i32, 0),
            kappa_c: RingElem::to_int(ctx, tables::kappa_alpha_exponent(m) as i32, 0),
        };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<(), ModelError> {
        let m = self.ctx.m();

        // Every entry must be denominator-free with paired roots.
        for (key, v) in &self.sigma {
            if v.denominator_pow() != 0 {
                return Err(ModelError::TableCorruption {
                    m,
                    detail: format!("entry {:?} kept a Delta denominator: {}", key, v),
                });
            }
            if !v.root_degree_even() {
                return Err(ModelError::TableCorruption {
                    m,
                    detail: format!("entry {:?} has odd root degree: {}", key, v),
                });
            }
        }

        // tr(C) = 0 exactly.
        let mut trace = RingElem::zero(self.ctx);
        for e in &self.handle {
            trace = trace.add(e);
        }
        if !trace.is_zero() {
            return Err(ModelError::Inconsistency {
                m,
                detail: format!("tr(C) = {} is nonzero", trace),
            });
        }

        // C C^{-1} = I entrywise.
        for (a, (e, f)) in self.handle.iter().zip(&self.handle_inv).enumerate() {
            if !e.mul(f).is_one() {
                return Err(ModelError::Inconsistency {
                    m,
                    detail: format!("C^{0}_{0} * Cbar^{0}_{0} != 1", a + 1),
                });
            }
        }

        // sigma sigma^{-1} = sigma^{-1} sigma = I on the pair space.
        for (lhs, rhs, label) in [
            (&self.sigma, &self.sigma_inv, "sigma * sigmabar"),
            (&self.sigma_inv, &self.sigma, "sigmabar * sigma"),
        ] {
            let prod = pair_mul(self.ctx, lhs, rhs);
            if let Some(detail) = identity_defect(self.ctx, &prod, self.dim) {
                return Err(ModelError::Inconsistency {
                    m,
                    detail: format!("{} != I: {}", label, detail),
                });
            }
        }

        Ok(())
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn m(&self) -> u8 {
        self.ctx.m()
    }

    /// Local state-space dimension `N = 2^m`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &PairMap {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &PairMap {
        &self.sigma_inv
    }

    /// Braid-generator entries sharing the column pair `(c, d)`.
    pub fn sigma_column(&self, positive: bool, c: u8, d: u8) -> &[(PairIdx, RingElem)] {
        let table = if positive { &self.sigma_by_col } else { &self.sigma_inv_by_col };
        &table[self.col_index(c, d)]
    }

    fn col_index(&self, c: u8, d: u8) -> usize {
        (c as usize - 1) * self.dim + (d as usize - 1)
    }

    /// Positive-handle weight `C^a_a`.
    pub fn handle(&self, a: u8) -> &RingElem {
        &self.handle[a as usize - 1]
    }

    /// Negative-handle weight `(C^{-1})^a_a`.
    pub fn handle_inv(&self, a: u8) -> &RingElem {
        &self.handle_inv[a as usize - 1]
    }

    pub fn handle_diag(&self) -> &[RingElem] {
        &self.handle
    }

    pub fn kappa_sigma(&self) -> Monomial {
        self.kappa_sigma
    }

    pub fn kappa_c(&self) -> Monomial {
        self.kappa_c
    }

    /// The unscaled pair `(R, R^{-1}, S)` with `R = kappa_sigma^{-1} sigma`
    /// and `S = kappa_C^{-1} C`, used to exercise the scaling computation.
    pub fn unscaled_pair(&self) -> (PairMap, PairMap, Vec<RingElem>) {
        let ks_inv = self.kappa_sigma.inverse();
        let one = BigInt::one();
        let rcheck = self
            .sigma
            .iter()
            .map(|(k, v)| (*k, v.mul_monomial(&ks_inv, &one)))
            .collect();
        let rcheck_inv = self
            .sigma_inv
            .iter()
            .map(|(k, v)| (*k, v.mul_monomial(&self.kappa_sigma, &one)))
            .collect();
        let s = self
            .handle
            .iter()
            .map(|e| e.mul_monomial(&self.kappa_c.inverse(), &one))
            .collect();
        (rcheck, rcheck_inv, s)
    }
}

/// Diagnostic constructor skipping the inverse validation (temporary).
#[doc(hidden)]
pub fn build_unvalidated(m: u8) -> StateModel {
    let ctx = RingCtx::lg(m);
    let dim = 1usize << m;
    let sigma = compile_sigma(ctx, m, false).unwrap();
    let sigma_inv = compile_sigma(ctx, m, true).unwrap();
    let handle = compile_handle(ctx, tables::handle_table(m));
    let handle_inv = handle
        .iter()
        .map(|e| e.invert_vars().expect("handle entries are root-free"))
        .collect::<Vec<_>>();
    StateModel {
        ctx,
        dim,
        sigma_by_col: group_by_col(&sigma, dim),
        sigma_inv_by_col: group_by_col(&sigma_inv, dim),
        sigma,
        sigma_inv,
        handle,
        handle_inv,
        kappa_sigma: RingElem::to_int(ctx, tables::kappa_alpha_exponent(m) as i32, 0),
        kappa_c: RingElem::to_int(ctx, tables::kappa_alpha_exponent(m) as i32, 0),
    }
}

/// Diagnostic table export (temporary).
#[doc(hidden)]
pub fn export_tables_json(m: u8) -> String {
    let mut groups = Vec::new();
    for g in tables::sigma_table(m) {
        let mut subs = Vec::new();
        if !g.cells.is_empty() {
            subs.push(serde_json::json!({
                "sign": 1, "q2": 0, "poly": Vec::<(i8, i16)>::new(), "cells": g.cells,
            }));
        }
        for s in g.subs {
            subs.push(serde_json::json!({
                "sign": s.sign, "q2": s.q2, "poly": s.poly, "cells": s.cells,
            }));
        }
        groups.push(serde_json::json!({
            "sign": g.sign, "dpow": g.dpow, "ax": g.ax, "q2": g.q2,
            "half": g.half, "full": g.full, "extra": g.extra, "sym": g.sym,
            "subs": subs,
        }));
    }
    serde_json::to_string(&groups).unwrap()
}

fn group_by_col(map: &PairMap, dim: usize) -> Vec<Vec<(PairIdx, RingElem)>> {
    let mut out = vec![Vec::new(); dim * dim];
    for (((a, b), (c, d)), v) in map {
        out[(*c as usize - 1) * dim + (*d as usize - 1)].push(((*a, *b), v.clone()));
    }
    out
}

/// Sparse product of two maps on the pair space.
pub fn pair_mul(ctx: RingCtx, a: &PairMap, b: &PairMap) -> PairMap {
    let mut a_by_col: BTreeMap<PairIdx, Vec<(PairIdx, &RingElem)>> = BTreeMap::new();
    for ((r, k), v) in a {
        a_by_col.entry(*k).or_default().push((*r, v));
    }
    let mut out = PairMap::new();
    for ((k, c), bv) in b {
        if let Some(rows) = a_by_col.get(k) {
            for (r, av) in rows {
                let term = av.mul(bv);
                if term.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match out.entry((*r, *c)) {
                    Entry::Vacant(e) => {
                        e.insert(term);
                    }
                    Entry::Occupied(mut e) => {
                        let sum = e.get().add(&term);
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
    }
    let _ = ctx;
    out
}

/// Returns a description of the first defect if `map` is not the identity.
fn identity_defect(ctx: RingCtx, map: &PairMap, dim: usize) -> Option<String> {
    let n = dim as u8;
    for ((r, c), v) in map {
        if r != c {
            return Some(format!("off-diagonal entry at ({:?}, {:?}) = {}", r, c, v));
        }
        if !v.is_one() {
            return Some(format!("diagonal entry at {:?} = {}", r, v));
        }
    }
    let expected = (dim * dim) as usize;
    if map.len() != expected {
        for a in 1..=n {
            for b in 1..=n {
                if !map.contains_key(&((a, b), (a, b))) {
                    return Some(format!("missing diagonal entry at ({}, {})", a, b));
                }
            }
        }
    }
    let _ = ctx;
    None
}

/// Compile a braid-generator table, optionally as its inverse.
///
/// The inverse comes from the same table through the relation
/// `sigmabar^{a c}_{b d} = sigma^{c a}_{d b}|_{q -> 1/q}`: swap the members
/// of both index pairs and invert the variables of the compiled entry (with
/// the root-pair branch handled by `invert_vars_rooted`).
fn compile_sigma(ctx: RingCtx, m: u8, invert: bool) -> Result<PairMap, ModelError> {
    let mut out = PairMap::new();
    for group in tables::sigma_table(m) {
        let mut insert = |cells: &[[u8; 4]], value: &RingElem| -> Result<(), ModelError> {
            for cell in cells {
                let mut keys = vec![*cell];
                if group.sym {
                    keys.push([cell[2], cell[3], cell[0], cell[1]]);
                }
                for k in keys {
                    let key = if invert {
                        ((k[1], k[0]), (k[3], k[2]))
                    } else {
                        ((k[0], k[1]), (k[2], k[3]))
                    };
                    if out.insert(key, value.clone()).is_some() {
                        return Err(ModelError::TableCorruption {
                            m,
                            detail: format!("duplicate cell {:?}", key),
                        });
                    }
                }
            }
            Ok(())
        };

        if !group.cells.is_empty() {
            let value = compile_coefficient(ctx, group, None, invert);
            insert(group.cells, &value)?;
        }
        for sub in group.subs {
            let value = compile_coefficient(ctx, group, Some(sub), invert);
            insert(sub.cells, &value)?;
        }
    }
    Ok(out)
}

/// Expand one printed coefficient into a ring element.
fn compile_coefficient(
    ctx: RingCtx,
    group: &SigmaGroup,
    sub: Option<&SigmaSub>,
    invert: bool,
) -> RingElem {
    let mut sign = group.sign as i64;
    let mut q2 = group.q2 as i32;
    let ax = group.ax as i32;
    if let Some(s) = sub {
        sign *= s.sign as i64;
        q2 += s.q2 as i32;
    }

    let mut smask = 0u8;
    for &i in group.half {
        smask |= 1 << i;
    }
    debug_assert!(group.half.len() % 2 == 0, "bracket roots must pair up");

    let base = Monomial::with_roots(RingElem::to_int(ctx, ax, q2).eq, ax, smask);
    let mut e = RingElem::monomial(ctx, base, BigInt::from(sign));

    for _ in 0..group.dpow {
        e = e.mul(&RingElem::delta(ctx));
    }
    for &i in group.full {
        e = e.mul(&RingElem::bracket_numerator(ctx, i as i32));
    }
    if !group.extra.is_empty() {
        e = e.mul(&laurent(ctx, group.extra));
    }
    if let Some(s) = sub {
        if !s.poly.is_empty() {
            e = e.mul(&laurent(ctx, s.poly));
        }
    }
    // The denominator implied by the bracket factors.
    let denom = group.full.len() as u32 + group.half.len() as u32 / 2;
    let e = e.div_delta_pow(denom);
    if invert {
        e.invert_vars_rooted()
    } else {
        e
    }
}

fn laurent(ctx: RingCtx, poly: &[(i8, i16)]) -> RingElem {
    let mut e = RingElem::zero(ctx);
    for (c, q2) in poly {
        e = e.add(&RingElem::monomial(ctx, Monomial::new(*q2 as i32, 0), BigInt::from(*c)));
    }
    e
}

fn compile_handle(ctx: RingCtx, table: &HandleTable) -> Vec<RingElem> {
    let mut cells: Vec<(u8, RingElem)> = table
        .cells
        .iter()
        .map(|(idx, sign, q2)| {
            let mono = RingElem::to_int(ctx, table.ax as i32, table.q2 as i32 + *q2 as i32);
            (*idx, RingElem::monomial(ctx, mono, BigInt::from(*sign as i64)))
        })
        .collect();
    cells.sort_by_key(|(idx, _)| *idx);
    cells.into_iter().map(|(_, e)| e).collect()
}

/// Exponents of the Cartan generators `K_i` in `q^{h_rho}` (length `m + n`):
/// `m - i` for `i <= m` and `(m + 1) - i` for `i > m`. With `doubled` set the
/// exponents are those appearing in `S = pi(q^{2 h_rho})`.
pub fn hrho_exponents(m: u8, n: u8, doubled: bool) -> Vec<i64> {
    assert!(m >= 1 && n >= 1);
    let scale = if doubled { 2 } else { 1 };
    (1..=(m as i64 + n as i64))
        .map(|i| {
            let e = if i <= m as i64 { m as i64 - i } else { (m as i64 + 1) - i };
            scale * e
        })
        .collect()
}

/// Assemble `S` from supplied Cartan matrix diagonals: the entrywise product
/// `prod_i pi(K_i)^{2 e_i}` with the basis grading stripped (each odd state
/// picks up a `-1`).
pub fn compose_s(
    ctx: RingCtx,
    kmats: &[Vec<Monomial>],
    parities: &[u8],
    exponents: &[i64],
) -> Result<Vec<RingElem>, ModelError> {
    if kmats.len() != exponents.len() {
        return Err(ModelError::DimensionMismatch {
            detail: format!(
                "{} Cartan diagonals supplied for {} exponents",
                kmats.len(),
                exponents.len()
            ),
        });
    }
    let dim = parities.len();
    for (i, k) in kmats.iter().enumerate() {
        if k.len() != dim {
            return Err(ModelError::DimensionMismatch {
                detail: format!("K_{} has {} entries, expected {}", i + 1, k.len(), dim),
            });
        }
    }
    let mut out = Vec::with_capacity(dim);
    for state in 0..dim {
        let mut eq = 0i32;
        let mut ep = 0i32;
        for (k, e) in kmats.iter().zip(exponents) {
            let mono = k[state];
            eq += mono.eq * (*e as i32);
            ep += mono.ep * (*e as i32);
        }
        let sign = if parities[state] % 2 == 0 { 1 } else { -1 };
        out.push(RingElem::monomial(ctx, Monomial::new(eq, ep), BigInt::from(sign)));
    }
    Ok(out)
}

/// Recover the ambient-isotopy scalings from an unscaled pair `(R, S)`.
///
/// `X_1 = sum_c S^c_c R^{c1}_{c1}` and `X_2 = sum_c S^c_c (R^{-1})^{c1}_{c1}`
/// must each collapse to a single monomial with unit coefficient; the
/// returned factors are the positive monomial square roots of
/// `X_1^{-1} X_2` and `(X_1 X_2)^{-1}`.
pub fn compute_scalings(
    ctx: RingCtx,
    rcheck: &PairMap,
    rcheck_inv: &PairMap,
    s: &[RingElem],
) -> Result<(Monomial, Monomial), ModelError> {
    let x1 = corner_sum(ctx, rcheck, s);
    let x2 = corner_sum(ctx, rcheck_inv, s);
    let (s1, m1) = single_monomial(&x1, "X1")?;
    let (s2, m2) = single_monomial(&x2, "X2")?;
    if s1 != s2 {
        return Err(ModelError::NotScalable {
            detail: format!("X1 and X2 have opposite signs ({} vs {})", x1, x2),
        });
    }
    let kappa_sigma = monomial_sqrt(&Monomial::new(m2.eq - m1.eq, m2.ep - m1.ep), "X1^-1 X2")?;
    let kappa_c = monomial_sqrt(&Monomial::new(-(m1.eq + m2.eq), -(m1.ep + m2.ep)), "(X1 X2)^-1")?;
    Ok((kappa_sigma, kappa_c))
}

fn corner_sum(ctx: RingCtx, r: &PairMap, s: &[RingElem]) -> RingElem {
    let mut sum = RingElem::zero(ctx);
    for (c, weight) in s.iter().enumerate() {
        let c = (c + 1) as u8;
        if let Some(v) = r.get(&((c, 1), (c, 1))) {
            sum = sum.add(&weight.mul(v));
        }
    }
    sum
}

fn single_monomial(e: &RingElem, label: &str) -> Result<(i8, Monomial), ModelError> {
    if e.denominator_pow() != 0 || e.num_terms() != 1 {
        return Err(ModelError::NotScalable {
            detail: format!("{} = {} is not a monomial", label, e),
        });
    }
    let (m, c) = e.terms().next().expect("one term");
    if m.smask != 0 {
        return Err(ModelError::NotScalable {
            detail: format!("{} = {} carries root symbols", label, e),
        });
    }
    if c == &BigInt::one() {
        Ok((1, *m))
    } else if c == &(-BigInt::one()) {
        Ok((-1, *m))
    } else {
        Err(ModelError::NotScalable {
            detail: format!("{} = {} does not have unit coefficient", label, e),
        })
    }
}

fn monomial_sqrt(m: &Monomial, label: &str) -> Result<Monomial, ModelError> {
    if m.eq % 2 != 0 || m.ep % 2 != 0 {
        return Err(ModelError::NotScalable {
            detail: format!("{} has odd exponents (Q^{} p^{})", label, m.eq, m.ep),
        });
    }
    Ok(Monomial::new(m.eq / 2, m.ep / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonzero_counts() {
        for (m, expected) in tables::SIGMA_COUNTS {
            let model = StateModel::build(m).unwrap();
            assert_eq!(model.sigma().len(), expected, "m = {}", m);
            assert_eq!(model.handle_diag().len(), 1 << m as usize);
        }
    }

    #[test]
    fn handle_m1_is_diag_pbar() {
        let model = StateModel::build(1).unwrap();
        let ctx = model.ctx();
        let pbar = RingElem::monomial(ctx, Monomial::new(0, -1), BigInt::one());
        assert_eq!(model.handle(1), &pbar);
        assert_eq!(model.handle(2), &pbar.neg());
    }

    #[test]
    fn inverse_generator_m1_examples() {
        let model = StateModel::build(1).unwrap();
        let ctx = model.ctx();
        // sigmabar^{11}_{11} = q^alpha = p
        let p = RingElem::monomial(ctx, Monomial::new(0, 1), BigInt::one());
        assert_eq!(model.sigma_inv().get(&((1, 1), (1, 1))), Some(&p));
        // sigmabar^{12}_{12} = Delta [alpha] = p - p^-1
        let expect = p.sub(&RingElem::monomial(ctx, Monomial::new(0, -1), BigInt::one()));
        assert_eq!(model.sigma_inv().get(&((1, 2), (1, 2))), Some(&expect));
    }

    #[test]
    fn scalings_recover_kappa() {
        for m in 1..=4u8 {
            let model = StateModel::build(m).unwrap();
            let (rcheck, rcheck_inv, s) = model.unscaled_pair();
            let (ks, kc) = compute_scalings(model.ctx(), &rcheck, &rcheck_inv, &s).unwrap();
            let expect = RingElem::to_int(model.ctx(), -(m as i32), 0);
            assert_eq!(ks, expect, "kappa_sigma for m = {}", m);
            assert_eq!(kc, expect, "kappa_C for m = {}", m);
            assert_eq!(ks, model.kappa_sigma());
            assert_eq!(kc, model.kappa_c());
        }
    }

    #[test]
    fn hrho_examples() {
        assert_eq!(hrho_exponents(2, 1, false), vec![1, 0, 0]);
        assert_eq!(hrho_exponents(1, 1, false), vec![0, 0]);
        assert_eq!(hrho_exponents(2, 2, false), vec![1, 0, 0, -1]);
        assert_eq!(hrho_exponents(2, 1, true), vec![2, 0, 0]);
    }

    #[test]
    fn compose_s_matches_model_m1() {
        let model = StateModel::build(1).unwrap();
        let ctx = model.ctx();
        // pi(K_1) = diag(1, q^-1), pi(K_2) = diag(q^-alpha, q^-alpha-1),
        // states graded (even, odd).
        let k1 = vec![Monomial::new(0, 0), Monomial::new(-2, 0)];
        let k2 = vec![
            RingElem::to_int(ctx, -1, 0),
            RingElem::to_int(ctx, -1, -2),
        ];
        let s = compose_s(ctx, &[k1, k2], &[0, 1], &hrho_exponents(1, 1, true)).unwrap();
        let (_, _, expect) = model.unscaled_pair();
        assert_eq!(s, expect);
    }

    #[test]
    fn compose_s_matches_model_m2() {
        let model = StateModel::build(2).unwrap();
        let ctx = model.ctx();
        let k1 = vec![
            Monomial::new(0, 0),
            Monomial::new(0, 0),
            Monomial::new(-2, 0),
            Monomial::new(-2, 0),
        ];
        let k2 = vec![
            Monomial::new(0, 0),
            Monomial::new(-2, 0),
            Monomial::new(0, 0),
            Monomial::new(-2, 0),
        ];
        let k3 = vec![
            RingElem::to_int(ctx, -1, 0),
            RingElem::to_int(ctx, -1, -2),
            RingElem::to_int(ctx, -1, -2),
            RingElem::to_int(ctx, -1, -4),
        ];
        let s = compose_s(ctx, &[k1, k2, k3], &[0, 1, 1, 0], &hrho_exponents(2, 1, true)).unwrap();
        let (_, _, expect) = model.unscaled_pair();
        assert_eq!(s, expect);
    }

    #[test]
    fn compose_s_rejects_bad_lengths() {
        let ctx = RingCtx::lg(1);
        let err = compose_s(ctx, &[vec![Monomial::new(0, 0)]], &[0], &[0, 0]);
        assert!(err.is_err());
    }

    #[test]
    fn rep_round_trip_all_entries() {
        let mut total = 0usize;
        for m in 1..=4u8 {
            let model = StateModel::build(m).unwrap();
            for v in model.sigma().values() {
                assert!(v.root_degree_even());
                // Root-free part of every entry survives the rep <-> int
                // round trip; rooted entries are audited through their
                // root-free square.
                let audit = if v.max_root_degree() > 0 { v.mul(v) } else { v.clone() };
                let pairs = audit.rep_exponents().unwrap();
                assert_eq!(RingElem::from_rep_exponents(model.ctx(), &pairs), audit);
                total += 1;
            }
        }
        assert_eq!(total, 5 + 26 + 139 + 758);
    }
}
