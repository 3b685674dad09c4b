//! The golden corpus: tabulated invariant values transcribed as structured
//! term-group lists, one entry per `(m, link)` pair.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::ring::LiTerm;

/// One tabulated polynomial.
#[derive(Clone, Debug, Deserialize)]
pub struct GoldenEntry {
    pub m: u8,
    pub link: String,
    /// Names the display the entry was transcribed from.
    pub source: String,
    pub groups: Vec<GoldenGroup>,
}

/// One sign group of a tabulated polynomial.
///
/// With `anti` unset the group reads `sign * (P^-i + P^i) * poly(q)` where
/// `p = 2i` (the constant group has `p = 0`); with `anti` set it reads
/// `sign * (p^-p - p^p) * poly(q)`.
#[derive(Clone, Debug, Deserialize)]
pub struct GoldenGroup {
    pub sign: i8,
    pub p: i32,
    pub anti: bool,
    pub poly: Vec<(i64, i32)>,
}

static CORPUS_JSON: &str = include_str!("golden.json");

/// Load the shipped corpus.
pub fn corpus() -> Vec<GoldenEntry> {
    serde_json::from_str(CORPUS_JSON).expect("shipped golden corpus is valid")
}

/// All corpus entries for one `m`.
pub fn corpus_for(m: u8) -> Vec<GoldenEntry> {
    corpus().into_iter().filter(|e| e.m == m).collect()
}

impl GoldenEntry {
    /// Expand the sign groups into a term list sorted by `(ep, eq)`.
    pub fn terms(&self) -> Vec<LiTerm> {
        let mut out = Vec::new();
        for g in &self.groups {
            for (c, eq) in &g.poly {
                let c = BigInt::from(*c * g.sign as i64);
                if g.p == 0 {
                    out.push(LiTerm { eq: *eq, ep: 0, c });
                } else if g.anti {
                    out.push(LiTerm { eq: *eq, ep: -g.p, c: c.clone() });
                    out.push(LiTerm { eq: *eq, ep: g.p, c: -c });
                } else {
                    out.push(LiTerm { eq: *eq, ep: -g.p, c: c.clone() });
                    out.push(LiTerm { eq: *eq, ep: g.p, c });
                }
            }
        }
        out.sort_by_key(|t| (t.ep, t.eq));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_loads_and_covers_every_display() {
        let corpus = corpus();
        // 1 per m for the trefoil (4), 3 for the figure-eight,
        // 16 LG^3 entries (trefoil and figure-eight shared with the body),
        // 5 LG^4 entries (trefoil shared with the body).
        assert_eq!(corpus.len(), 4 + 3 + 14 + 4);
        let mut keys: Vec<(u8, &str)> =
            corpus.iter().map(|e| (e.m, e.link.as_str())).collect();
        keys.sort();
        let before = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), before, "each (m, link) appears exactly once");
        assert_eq!(corpus_for(3).len(), 16);
        assert_eq!(corpus_for(4).len(), 5);
    }

    #[test]
    fn trefoil_terms_expand() {
        let corpus = corpus();
        let e = corpus.iter().find(|e| e.m == 1 && e.link == "3_1").unwrap();
        let terms = e.terms();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].ep, -2);
        assert_eq!(terms[1].c, BigInt::from(-1));
    }
}
