//! The end-to-end pipeline: braid word -> frontier operator -> one-open-strand
//! closure -> scalar -> Laurent polynomial in `(q, p)`, plus renderers.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::ring::LiTerm;
use crate::statemodel::{ModelError, StateModel};
use crate::tensor::{extract_scalar, word_operator, TensorError};

/// Whether a positive braid letter maps to the tabulated generator (rather
/// than its inverse). Fixed once for the whole artifact by matching the
/// tabulated trefoil value of `LG^3` and applied uniformly after that.
pub(crate) const POSITIVE_IS_SIGMA: bool = true;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("internal inconsistency: {0}")]
    Ring(#[from] crate::ring::RingError),
}

/// Symmetry class of a term list under `p -> p^{-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    Neither,
}

/// A computed invariant value.
#[derive(Clone, Debug)]
pub struct InvariantResult {
    pub m: u8,
    pub word: BraidWord,
    pub link: Option<String>,
    pub components: usize,
    /// Terms `c * q^eq * p^ep`, sorted by `(ep, eq)`, no zero coefficients.
    pub terms: Vec<LiTerm>,
    pub symmetry: Symmetry,
}

/// Compute `LG^m` of the closure of `word`, building a fresh model.
pub fn compute(m: u8, word: &BraidWord, open_strand: Option<usize>) -> Result<InvariantResult, InvariantError> {
    let model = StateModel::build(m)?;
    compute_with_model(&model, word, open_strand)
}

/// Compute `LG^m` of the closure of `word` with a prebuilt model.
///
/// The open strand defaults to the rightmost one. Errors indicate internal
/// inconsistency (a broken model or closure convention), never bad input.
pub fn compute_with_model(
    model: &StateModel,
    word: &BraidWord,
    open_strand: Option<usize>,
) -> Result<InvariantResult, InvariantError> {
    let strands = word.strands();
    let open = open_strand.unwrap_or(strands);
    let z = word_operator(model, strands, word.letters(), POSITIVE_IS_SIGMA)?;
    let t = z.close_to_tangle(model, open)?;
    let lambda = extract_scalar(model, &t)?;
    let terms = lambda.to_li()?;
    let symmetry = classify_symmetry(&terms);
    Ok(InvariantResult {
        m: model.m(),
        word: word.clone(),
        link: None,
        components: word.components(),
        terms,
        symmetry,
    })
}

/// Classify a sorted term list under `p -> p^{-1}`.
pub fn classify_symmetry(terms: &[LiTerm]) -> Symmetry {
    let flipped_matches = |negate: bool| {
        terms.iter().all(|t| {
            terms
                .iter()
                .find(|u| u.eq == t.eq && u.ep == -t.ep)
                .map(|u| if negate { u.c == -t.c.clone() } else { u.c == t.c })
                .unwrap_or(false)
        })
    };
    if flipped_matches(false) {
        Symmetry::Symmetric
    } else if flipped_matches(true) {
        Symmetry::Antisymmetric
    } else {
        Symmetry::Neither
    }
}

impl InvariantResult {
    pub fn named(mut self, link: &str) -> Self {
        self.link = Some(link.to_string());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with every exponent pair negated: the value of the mirror link.
    pub fn negated_exponents(&self) -> Vec<LiTerm> {
        let mut out: Vec<LiTerm> = self
            .terms
            .iter()
            .map(|t| LiTerm { eq: -t.eq, ep: -t.ep, c: t.c.clone() })
            .collect();
        out.sort_by_key(|t| (t.ep, t.eq));
        out
    }

    /// Render in the tabulated style: groups by `|p|`-exponent, written
    /// `sign (P^-i+P^i)(q-polynomial)` for values invariant under
    /// `p -> p^{-1}` (in `P = p^2`), `sign (p^-i-p^i)(...)` for
    /// antisymmetric values, with the `q`-polynomial listed term by term.
    pub fn render_paper(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let all_even = self.terms.iter().all(|t| t.ep % 2 == 0);
        match self.symmetry {
            Symmetry::Symmetric if all_even => self.render_groups(false),
            Symmetry::Antisymmetric => self.render_groups(true),
            _ => self.render_flat(),
        }
    }

    fn render_groups(&self, anti: bool) -> String {
        let mut exps: Vec<i32> = self.terms.iter().map(|t| t.ep.abs()).collect();
        exps.sort_unstable();
        exps.dedup();
        let mut groups = Vec::new();
        for i in exps {
            // The polynomial attached to the p^{-i} side (and, for i = 0,
            // the whole group).
            let poly: Vec<(i32, BigInt)> = {
                let side = if i == 0 { 0 } else { -i };
                let mut v: Vec<(i32, BigInt)> = self
                    .terms
                    .iter()
                    .filter(|t| t.ep == side)
                    .map(|t| (t.eq, t.c.clone()))
                    .collect();
                v.sort_by_key(|(e, _)| *e);
                v
            };
            if poly.is_empty() {
                continue;
            }
            let uniform_sign = if poly.iter().all(|(_, c)| c.is_positive()) {
                Some('+')
            } else if poly.iter().all(|(_, c)| c.is_negative()) {
                Some('-')
            } else {
                None
            };
            let (sign, body) = match uniform_sign {
                Some(s) => (s, render_qpoly(&poly, true)),
                None => ('+', render_qpoly(&poly, false)),
            };
            let p_part = if i == 0 {
                String::new()
            } else if anti {
                format!("(p^-{}-p^{})", i, i)
            } else {
                format!("(P^-{}+P^{})", i / 2, i / 2)
            };
            groups.push(format!("{} {}({})", sign, p_part, body));
        }
        groups.join(", ")
    }

    fn render_flat(&self) -> String {
        let body = self
            .terms
            .iter()
            .map(|t| {
                let mut s = format!("{}", t.c);
                if t.eq != 0 {
                    s.push_str(&format!(" q^{}", t.eq));
                }
                if t.ep != 0 {
                    s.push_str(&format!(" p^{}", t.ep));
                }
                s
            })
            .collect::<Vec<_>>()
            .join(", ");
        format!("[mixed] {}", body)
    }

    /// Machine-readable record (used by the CLI JSON output).
    pub fn render_machine(&self) -> String {
        serde_json::to_string(&MachineRecord::from(self)).expect("serializable")
    }
}

fn render_qpoly(poly: &[(i32, BigInt)], strip_sign: bool) -> String {
    poly.iter()
        .map(|(e, c)| {
            let c = if strip_sign { c.abs() } else { c.clone() };
            match (*e, c == BigInt::from(1)) {
                (0, _) => format!("{}", c),
                (_, true) => format!("q^{}", e),
                (_, false) => format!("{} q^{}", c, e),
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Serialize)]
struct MachineInput {
    letters: Vec<i32>,
    strands: usize,
}

#[derive(Serialize)]
struct MachineTerm {
    q: i32,
    p: i32,
    c: i64,
}

#[derive(Serialize)]
struct MachineRecord {
    m: u8,
    input: MachineInput,
    link: Option<String>,
    components: usize,
    terms: Vec<MachineTerm>,
    symmetry: Symmetry,
    paper: String,
}

impl From<&InvariantResult> for MachineRecord {
    fn from(r: &InvariantResult) -> Self {
        MachineRecord {
            m: r.m,
            input: MachineInput { letters: r.word.letters().to_vec(), strands: r.word.strands() },
            link: r.link.clone(),
            components: r.components,
            terms: r
                .terms
                .iter()
                .map(|t| MachineTerm {
                    q: t.eq,
                    p: t.ep,
                    c: i64::try_from(&t.c).expect("invariant coefficients fit in i64"),
                })
                .collect(),
            symmetry: r.symmetry,
            paper: r.render_paper(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use num_bigint::BigInt;

    fn li(eq: i32, ep: i32, c: i64) -> LiTerm {
        LiTerm { eq, ep, c: BigInt::from(c) }
    }

    #[test]
    fn alexander_conway_of_trefoil() {
        let word = BraidWord::parse("1 1 1", None).unwrap();
        let r = compute(1, &word, None).unwrap();
        assert_eq!(r.terms, vec![li(0, -2, 1), li(0, 0, -1), li(0, 2, 1)]);
        assert_eq!(r.symmetry, Symmetry::Symmetric);
        assert_eq!(r.render_paper(), "- (1), + (P^-1+P^1)(1)");
    }

    #[test]
    fn alexander_conway_of_figure_eight() {
        let word = BraidWord::parse("1 -2 1 -2", None).unwrap();
        let r = compute(1, &word, None).unwrap();
        assert_eq!(r.terms, vec![li(0, -2, -1), li(0, 0, 3), li(0, 2, -1)]);
        assert_eq!(r.render_paper(), "+ (3), - (P^-1+P^1)(1)");
    }

    #[test]
    fn split_identity_closure_is_zero() {
        for m in 1..=3u8 {
            let word = BraidWord::parse("", Some(2)).unwrap();
            let r = compute(m, &word, None).unwrap();
            assert!(r.is_zero(), "m = {}", m);
            assert_eq!(r.render_paper(), "0");
        }
    }

    #[test]
    fn single_curl_is_one() {
        for m in 1..=3u8 {
            for letters in ["1", "-1"] {
                let word = BraidWord::parse(letters, None).unwrap();
                let r = compute(m, &word, None).unwrap();
                assert_eq!(r.terms, vec![li(0, 0, 1)], "m = {}, word = {}", m, letters);
            }
        }
    }

    #[test]
    fn machine_record_round_trips() {
        let word = BraidWord::parse("1 1 1", None).unwrap();
        let r = compute(1, &word, None).unwrap().named("3_1");
        let json = r.render_machine();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["m"], 1);
        assert_eq!(v["link"], "3_1");
        assert_eq!(v["components"], 1);
        assert_eq!(v["symmetry"], "symmetric");
        assert_eq!(v["terms"][0]["p"], -2);
        assert_eq!(v["terms"][0]["c"], 1);
    }
}
