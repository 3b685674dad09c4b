//! Sparse symbolic linear algebra on the `w`-strand space.
//!
//! A braid on `w` strands acts on the `N^w`-dimensional product of local
//! state spaces. The frontier operator of a partially processed braid word
//! is kept as a sparse map from packed row/column multi-indices to ring
//! elements; crossings are applied by streaming over stored entries against
//! the sparse braid-generator block, never materializing anything dense.
//! Iteration order is deterministic (sorted keys) so failures reproduce.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ring::RingElem;
use crate::statemodel::StateModel;

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("crossing position {pos} out of range for {strands} strands")]
    PositionOutOfRange { pos: usize, strands: usize },
    #[error("open strand {open} out of range for {strands} strands")]
    OpenStrandOutOfRange { open: usize, strands: usize },
    #[error("closure is not a scalar multiple of the identity: {detail}")]
    NotScalar { detail: String },
}

/// Sparse operator on the `w`-strand space. Multi-indices are packed into a
/// `u64` with strand 1 as the most significant digit, base `N`.
pub struct SparseOperator {
    strands: usize,
    dim: usize,
    entries: BTreeMap<(u64, u64), RingElem>,
}

impl SparseOperator {
    pub fn identity(model: &StateModel, strands: usize) -> SparseOperator {
        let dim = model.dim();
        let total = (dim as u64).pow(strands as u32);
        let one = RingElem::one(model.ctx());
        let entries = (0..total).map(|i| ((i, i), one.clone())).collect();
        SparseOperator { strands, dim, entries }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u64, u64), &RingElem)> {
        self.entries.iter()
    }

    /// Digit of `packed` at strand `slot` (1-based).
    #[inline]
    fn digit(&self, packed: u64, slot: usize) -> u8 {
        let n = self.dim as u64;
        ((packed / n.pow((self.strands - slot) as u32)) % n) as u8 + 1
    }

    /// Replace the digits at `slot`, `slot + 1` of `packed`.
    #[inline]
    fn with_pair(&self, packed: u64, slot: usize, a: u8, b: u8) -> u64 {
        let n = self.dim as u64;
        let lo = n.pow((self.strands - slot - 1) as u32);
        let old_pair = (packed / lo) % (n * n);
        let new_pair = (a as u64 - 1) * n + (b as u64 - 1);
        packed - old_pair * lo + new_pair * lo
    }

    /// Left-multiply by `I^(pos-1) (x) sigma^{+/-1} (x) I^(w-pos-1)`.
    ///
    /// Only stored entries are visited: for each entry the generator column
    /// matching the two digits at `pos` is streamed in, and cancellations
    /// drop out immediately.
    pub fn apply_crossing(
        &self,
        pos: usize,
        positive: bool,
        model: &StateModel,
    ) -> Result<SparseOperator, TensorError> {
        if pos < 1 || pos >= self.strands {
            return Err(TensorError::PositionOutOfRange { pos, strands: self.strands });
        }
        let mut entries: BTreeMap<(u64, u64), RingElem> = BTreeMap::new();
        for ((row, col), value) in &self.entries {
            let x = self.digit(*row, pos);
            let y = self.digit(*row, pos + 1);
            for ((a, b), weight) in model.sigma_column(positive, x, y) {
                let new_row = self.with_pair(*row, pos, *a, *b);
                let term = weight.mul(value);
                if term.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match entries.entry((new_row, *col)) {
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
        Ok(SparseOperator { strands: self.strands, dim: self.dim, entries })
    }

    /// Close every strand except `open` (1-based), weighting each closed
    /// slot by a handle: the positive handle left of the open strand, the
    /// negative handle right of it. Only entries diagonal in every closed
    /// slot contribute. The result is the `N x N` map on the open strand.
    pub fn close_to_tangle(
        &self,
        model: &StateModel,
        open: usize,
    ) -> Result<BTreeMap<(u8, u8), RingElem>, TensorError> {
        if open < 1 || open > self.strands {
            return Err(TensorError::OpenStrandOutOfRange { open, strands: self.strands });
        }
        let mut out: BTreeMap<(u8, u8), RingElem> = BTreeMap::new();
        'entry: for ((row, col), value) in &self.entries {
            let mut weight = RingElem::one(model.ctx());
            let mut open_pair = (0u8, 0u8);
            for slot in 1..=self.strands {
                let r = self.digit(*row, slot);
                let c = self.digit(*col, slot);
                if slot == open {
                    open_pair = (r, c);
                    continue;
                }
                if r != c {
                    continue 'entry;
                }
                let handle = if slot < open { model.handle(r) } else { model.handle_inv(r) };
                weight = weight.mul(handle);
            }
            let term = value.mul(&weight);
            if term.is_zero() {
                continue;
            }
            use std::collections::btree_map::Entry;
            match out.entry(open_pair) {
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
        Ok(out)
    }

    pub fn equals(&self, other: &SparseOperator) -> bool {
        self.strands == other.strands && self.dim == other.dim && self.entries == other.entries
    }

    /// First entry where the two operators differ, if any.
    pub fn first_difference(&self, other: &SparseOperator) -> Option<(u64, u64)> {
        for (key, value) in &self.entries {
            if other.entries.get(key) != Some(value) {
                return Some(*key);
            }
        }
        for key in other.entries.keys() {
            if !self.entries.contains_key(key) {
                return Some(*key);
            }
        }
        None
    }
}

/// Build the frontier operator of a whole braid word.
pub fn word_operator(
    model: &StateModel,
    strands: usize,
    letters: &[i32],
    positive_is_sigma: bool,
) -> Result<SparseOperator, TensorError> {
    let mut z = SparseOperator::identity(model, strands);
    for &letter in letters {
        let pos = letter.unsigned_abs() as usize;
        let positive = (letter > 0) == positive_is_sigma;
        z = z.apply_crossing(pos, positive, model)?;
    }
    Ok(z)
}

/// Assert that the closed tangle is `lambda * I` and return `lambda`.
pub fn extract_scalar(
    model: &StateModel,
    t: &BTreeMap<(u8, u8), RingElem>,
) -> Result<RingElem, TensorError> {
    for ((a, b), v) in t {
        if a != b && !v.is_zero() {
            return Err(TensorError::NotScalar {
                detail: format!("off-diagonal entry T^{}_{} = {}", a, b, v),
            });
        }
    }
    let n = model.dim() as u8;
    let zero = RingElem::zero(model.ctx());
    let lambda = t.get(&(1, 1)).unwrap_or(&zero).clone();
    for a in 2..=n {
        let entry = t.get(&(a, a)).unwrap_or(&zero);
        if entry != &lambda {
            return Err(TensorError::NotScalar {
                detail: format!("T^1_1 = {} but T^{}_{} = {}", lambda, a, a, entry),
            });
        }
    }
    Ok(lambda)
}

/// Apply the positive-handle contraction of a single curl:
/// `sum_c C^c_c sigma^{c a}_{c b}`, used by the curl checks.
pub fn curl_closure(model: &StateModel, positive: bool) -> BTreeMap<(u8, u8), RingElem> {
    let n = model.dim() as u8;
    let mut out = BTreeMap::new();
    for c in 1..=n {
        for a in 1..=n {
            for b in 1..=n {
                let source = if positive { model.sigma() } else { model.sigma_inv() };
                if let Some(v) = source.get(&((c, a), (c, b))) {
                    let term = v.mul(model.handle(c));
                    use std::collections::btree_map::Entry;
                    match out.entry((a, b)) {
                        Entry::Vacant(e) => {
                            if !term.is_zero() {
                                e.insert(term);
                            }
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
    }
    out
}

/// Whether the closed tangle is exactly the identity map.
pub fn is_identity_map(model: &StateModel, t: &BTreeMap<(u8, u8), RingElem>) -> bool {
    t.len() == model.dim() && t.iter().all(|((a, b), v)| a == b && v.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statemodel::StateModel;

    #[test]
    fn identity_times_sigma_is_sigma() {
        let model = StateModel::build(1).unwrap();
        let z = SparseOperator::identity(&model, 2)
            .apply_crossing(1, true, &model)
            .unwrap();
        assert_eq!(z.num_entries(), model.sigma().len());
        for (((a, b), (c, d)), v) in model.sigma() {
            let row = ((*a as u64 - 1) * 2) + (*b as u64 - 1);
            let col = ((*c as u64 - 1) * 2) + (*d as u64 - 1);
            assert_eq!(z.entries.get(&(row, col)), Some(v));
        }
    }

    #[test]
    fn positive_then_negative_is_identity() {
        for m in 1..=3u8 {
            let model = StateModel::build(m).unwrap();
            let z = word_operator(&model, 2, &[1, -1], true).unwrap();
            let id = SparseOperator::identity(&model, 2);
            assert!(z.equals(&id), "m = {}", m);
        }
    }

    #[test]
    fn braid_relation_on_three_strands() {
        for m in 1..=2u8 {
            let model = StateModel::build(m).unwrap();
            let lhs = word_operator(&model, 3, &[1, 2, 1], true).unwrap();
            let rhs = word_operator(&model, 3, &[2, 1, 2], true).unwrap();
            assert!(lhs.equals(&rhs), "m = {}", m);
        }
    }

    #[test]
    fn curl_closures_are_identity() {
        for m in 1..=3u8 {
            let model = StateModel::build(m).unwrap();
            for positive in [true, false] {
                let t = curl_closure(&model, positive);
                assert!(is_identity_map(&model, &t), "m = {} positive = {}", m, positive);
            }
        }
    }

    #[test]
    fn closure_of_identity_vanishes() {
        let model = StateModel::build(1).unwrap();
        let z = SparseOperator::identity(&model, 2);
        let t = z.close_to_tangle(&model, 2).unwrap();
        assert!(t.is_empty(), "tr(C) = 0 forces the zero map");
        let scalar = extract_scalar(&model, &t).unwrap();
        assert!(scalar.is_zero());
    }

    #[test]
    fn closure_of_single_crossing_is_identity() {
        for m in 1..=3u8 {
            let model = StateModel::build(m).unwrap();
            for positive in [true, false] {
                let z = word_operator(&model, 2, &[if positive { 1 } else { -1 }], true).unwrap();
                // open strand on the right: closed slot uses the positive handle
                let t = z.close_to_tangle(&model, 2).unwrap();
                assert!(is_identity_map(&model, &t), "right-open, m = {}", m);
                // open strand on the left: closed slot uses the negative handle
                let t = z.close_to_tangle(&model, 1).unwrap();
                assert!(is_identity_map(&model, &t), "left-open, m = {}", m);
            }
        }
    }

    #[test]
    fn scalar_extraction_rejects_non_scalar() {
        let model = StateModel::build(1).unwrap();
        let mut t = BTreeMap::new();
        t.insert((1, 1), RingElem::one(model.ctx()));
        assert!(extract_scalar(&model, &t).is_err());
        t.insert((2, 2), RingElem::one(model.ctx()));
        assert!(extract_scalar(&model, &t).is_ok());
        t.insert((1, 2), RingElem::one(model.ctx()));
        assert!(extract_scalar(&model, &t).is_err());
    }
}
