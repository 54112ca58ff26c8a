//! The m-versus-z comparison: per-string theorem check, the extended-domain
//! partition behind it, the lower-bound family, and exhaustive search.

mod family;
mod search;

use serde::Serialize;

use crate::domain::compute_domain;
use crate::error::{Error, Result};
use crate::lyndon::{lyndon_factorize, LyndonFactorization};
use crate::lz::{lz_factorize, LzFactorization};
use crate::text::{Span, Text};

pub use family::{
    expected_counts, expected_lz_phrases, family_block, family_block_ranges, generate_family, FamilyCounts,
};
pub use search::{exhaustive_search, LengthSummary, SearchConfig, SearchRecord, SearchSummary, DEFAULT_SEARCH_CAP};

/// One part `extdom_1(F_{i_h})` of the right-to-left partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionPart {
    /// `i_h`.
    pub run: usize,
    pub span: Span,
    /// Size of `dom_1(F_{i_h})`.
    pub k: usize,
    /// Phrase starts inside `span`.
    pub boundaries: usize,
}

impl PartitionPart {
    pub fn holds(&self) -> bool {
        let needed = self.k.div_ceil(2) + 1;
        self.boundaries >= needed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub parts: Vec<PartitionPart>,
}

impl Partition {
    pub fn t(&self) -> usize {
        self.parts.len()
    }
}

fn partition_of(lf: &LyndonFactorization, lz: &LzFactorization) -> Result<Partition> {
    let mut parts = Vec::new();
    let mut last = lf.m();
    while last >= 1 {
        let dom = compute_domain(lf, last, 1)?;
        let span = dom.extended();
        parts.push(PartitionPart {
            run: last,
            span,
            k: dom.size(),
            boundaries: lz.count_boundaries(span),
        });
        last = dom.j - 1;
    }
    parts.reverse();
    Ok(Partition { parts })
}

/// `s = extdom_1(F_{i_1}) ⋯ extdom_1(F_{i_t})` with `i_t = m`, obtained by
/// repeatedly stripping `extdom_1` of the last remaining run.
pub fn extdom_partition(s: &Text) -> Result<Partition> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    partition_of(&lyndon_factorize(s), &lz_factorize(s))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub m: usize,
    pub z: usize,
    pub t: usize,
    /// `m < 2z`.
    pub passes: bool,
    /// `2z − m`.
    pub slack: i64,
    /// `z ≥ ⌈(m + t)/2⌉`.
    pub partition_bound_holds: bool,
    /// Every part holds at least `⌈k_h/2⌉ + 1` phrase starts, and the parts tile `s`.
    pub parts_hold: bool,
    pub partition: Partition,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        self.passes && self.partition_bound_holds && self.parts_hold
    }
}

pub(crate) fn theorem_report(lf: &LyndonFactorization, lz: &LzFactorization) -> Result<TheoremReport> {
    let partition = partition_of(lf, lz)?;
    let (m, z, t) = (lf.m(), lz.z(), partition.t());
    let tiles = partition
        .parts
        .iter()
        .skip(1)
        .try_fold(partition.parts[0].span, |acc, p| acc.join(p.span))
        == Some(Span::new(1, lf.text().len()));
    Ok(TheoremReport {
        m,
        z,
        t,
        passes: m < 2 * z,
        slack: 2 * z as i64 - m as i64,
        partition_bound_holds: z >= (m + t).div_ceil(2),
        parts_hold: tiles && partition.parts.iter().all(PartitionPart::holds),
        partition,
    })
}

/// Both factorizations, the partition, and the `m < 2z` verdict.
pub fn check_theorem(s: &Text) -> Result<TheoremReport> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    theorem_report(&lyndon_factorize(s), &lz_factorize(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_and_sample_verdicts() {
        let r = check_theorem(&generate_family(2)).unwrap();
        assert_eq!((r.m, r.z, r.passes), (5, 5, true));
        let r = check_theorem(&generate_family(3)).unwrap();
        assert_eq!((r.m, r.z, r.passes), (8, 7, true));
        let r = check_theorem(&Text::from("abbabbababbababbbababbaba")).unwrap();
        assert_eq!((r.m, r.z, r.passes, r.slack), (5, 8, true, 11));
        assert!(r.all_hold());
        assert_eq!(check_theorem(&Text::default()), Err(Error::EmptyInput));
    }

    #[test]
    fn partition_examples() {
        let p = extdom_partition(&Text::from("ba")).unwrap();
        assert_eq!(p.t(), 2);
        assert_eq!(
            p.parts.iter().map(|x| x.span).collect::<Vec<_>>(),
            vec![Span::new(1, 1), Span::new(2, 2)]
        );

        let p = extdom_partition(&Text::from("abbabbababbababbbababbaba")).unwrap();
        assert_eq!(p.t(), 1);
        assert_eq!((p.parts[0].span, p.parts[0].k), (Span::new(1, 25), 4));

        let r = check_theorem(&generate_family(2)).unwrap();
        assert!(r.z >= (r.m + r.t).div_ceil(2));
        assert!(r.all_hold());
    }
}
