//! Exhaustive enumeration of all strings over a small alphabet.
//!
//! Each length is split into fixed-size index blocks that rayon workers
//! process independently. Block results are merged left to right, so record
//! order and every reported witness are the same for any worker count.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use super::theorem_report;
use crate::domain::{verify_lemmas, LemmaReport};
use crate::error::{Error, Result};
use crate::lyndon::lyndon_factorize;
use crate::lz::lz_factorize;
use crate::text::Text;

/// Upper limit on the number of strings a single search may enumerate.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 28;

const BLOCK: u64 = 4096;
const BLOCKS_PER_WAVE: u64 = 256;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub sigma: usize,
    pub min_len: usize,
    pub max_len: usize,
    /// Keep only strings whose used symbols are exactly the smallest letters.
    pub dedupe: bool,
    /// Also run the lemma verifier and the partition check on every string.
    pub verify: bool,
    /// Worker count; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
    pub cap: u128,
}

impl SearchConfig {
    pub fn new(sigma: usize, max_len: usize) -> Self {
        SearchConfig {
            sigma,
            min_len: 1,
            max_len,
            dedupe: false,
            verify: false,
            jobs: None,
            cap: DEFAULT_SEARCH_CAP,
        }
    }

    /// Number of strings the enumeration visits before deduplication.
    pub fn string_count(&self) -> Option<u128> {
        (self.min_len..=self.max_len).try_fold(0u128, |acc, n| {
            (self.sigma as u128)
                .checked_pow(n as u32)
                .and_then(|c| acc.checked_add(c))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub sigma: usize,
    pub n: usize,
    #[serde(serialize_with = "crate::report::serialize_text")]
    pub string: Text,
    pub m: usize,
    pub z: usize,
}

impl SearchRecord {
    /// `2z − m`.
    pub fn slack(&self) -> i64 {
        2 * self.z as i64 - self.m as i64
    }

    /// `m − z`.
    pub fn difference(&self) -> i64 {
        self.m as i64 - self.z as i64
    }

    pub fn ratio(&self) -> f64 {
        self.m as f64 / self.z as f64
    }

    /// `sigma  n  string  m  z  slack`, tab separated.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.sigma,
            self.n,
            self.string,
            self.m,
            self.z,
            self.slack()
        )
    }

    fn ratio_cmp(&self, other: &SearchRecord) -> Ordering {
        (self.m * other.z).cmp(&(other.m * self.z))
    }
}

/// Extremes over all strings of one length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LengthSummary {
    pub n: usize,
    pub strings: u64,
    pub max_difference: i64,
    pub max_difference_witness: SearchRecord,
    pub max_ratio: f64,
    pub max_ratio_witness: SearchRecord,
}

impl LengthSummary {
    fn single(rec: &SearchRecord) -> Self {
        LengthSummary {
            n: rec.n,
            strings: 1,
            max_difference: rec.difference(),
            max_difference_witness: rec.clone(),
            max_ratio: rec.ratio(),
            max_ratio_witness: rec.clone(),
        }
    }

    /// Associative merge; ties keep the left (earlier) witness.
    fn merge(mut self, other: LengthSummary) -> Self {
        self.strings += other.strings;
        if other.max_difference > self.max_difference {
            self.max_difference = other.max_difference;
            self.max_difference_witness = other.max_difference_witness;
        }
        if other.max_ratio_witness.ratio_cmp(&self.max_ratio_witness) == Ordering::Greater {
            self.max_ratio = other.max_ratio;
            self.max_ratio_witness = other.max_ratio_witness;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchSummary {
    pub sigma: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub dedupe: bool,
    pub strings: u64,
    /// First string found with `m >= 2z`; the search stops there.
    pub violation: Option<SearchRecord>,
    pub lengths: Vec<LengthSummary>,
    /// Present when the search ran with `verify`.
    pub lemma_report: Option<LemmaReport>,
    pub partition_checks: u64,
    pub partition_failures: u64,
    pub first_partition_failure: Option<String>,
}

impl SearchSummary {
    /// No theorem violation and, if verified, no lemma or partition failure.
    pub fn passed(&self) -> bool {
        self.violation.is_none()
            && self.partition_failures == 0
            && self.lemma_report.as_ref().is_none_or(LemmaReport::passed)
    }
}

#[derive(Default)]
struct BlockResult {
    records: Vec<SearchRecord>,
    summary: Option<LengthSummary>,
    lemma: Option<LemmaReport>,
    partition_checks: u64,
    partition_failures: u64,
    first_partition_failure: Option<String>,
}

impl BlockResult {
    fn merge(mut self, other: BlockResult) -> Self {
        self.records.extend(other.records);
        self.summary = match (self.summary, other.summary) {
            (Some(a), Some(b)) => Some(a.merge(b)),
            (a, b) => a.or(b),
        };
        match (&mut self.lemma, other.lemma) {
            (Some(a), Some(b)) => a.absorb(&b),
            (a @ None, b) => *a = b,
            _ => {}
        }
        self.partition_checks += other.partition_checks;
        self.partition_failures += other.partition_failures;
        if self.first_partition_failure.is_none() {
            self.first_partition_failure = other.first_partition_failure;
        }
        self
    }
}

fn decode(mut index: u64, n: usize, sigma: usize, buf: &mut [u8]) {
    for slot in buf[..n].iter_mut().rev() {
        *slot = b'a' + (index % sigma as u64) as u8;
        index /= sigma as u64;
    }
}

fn is_canonical(s: &[u8]) -> bool {
    let mut seen = [false; 256];
    let mut top = 0u8;
    for &c in s {
        seen[c as usize] = true;
        top = top.max(c);
    }
    (b'a'..=top).all(|c| seen[c as usize])
}

fn run_block(
    cfg: &SearchConfig,
    n: usize,
    range: std::ops::Range<u64>,
) -> std::result::Result<BlockResult, SearchRecord> {
    let mut out = BlockResult::default();
    let mut buf = vec![0u8; n];
    for index in range {
        decode(index, n, cfg.sigma, &mut buf);
        if cfg.dedupe && !is_canonical(&buf) {
            continue;
        }
        let text = Text::from(buf.as_slice());
        let lf = lyndon_factorize(&text);
        let lz = lz_factorize(&text);
        let rec = SearchRecord {
            sigma: cfg.sigma,
            n,
            string: text.clone(),
            m: lf.m(),
            z: lz.z(),
        };
        if rec.m >= 2 * rec.z {
            return Err(rec);
        }
        if cfg.verify {
            let report = verify_lemmas(&text);
            match &mut out.lemma {
                Some(acc) => acc.absorb(&report),
                None => out.lemma = Some(report),
            }
            out.partition_checks += 1;
            let ok = theorem_report(&lf, &lz).map(|r| r.all_hold());
            if ok != Ok(true) {
                out.partition_failures += 1;
                out.first_partition_failure
                    .get_or_insert_with(|| format!("{text}: {ok:?}"));
            }
        }
        let single = LengthSummary::single(&rec);
        out.summary = Some(match out.summary.take() {
            Some(s) => s.merge(single),
            None => single,
        });
        out.records.push(rec);
    }
    Ok(out)
}

/// Enumerates every string of length `min_len..=max_len` over the first
/// `sigma` letters (`a`, `b`, ...), hands each record to `sink` in
/// lexicographic order within each length, and returns per-length extremes.
pub fn exhaustive_search(cfg: &SearchConfig, mut sink: impl FnMut(&SearchRecord)) -> Result<SearchSummary> {
    if cfg.sigma == 0 || cfg.sigma > 26 {
        return Err(Error::InvalidParameter(format!(
            "alphabet size {} outside 1..=26",
            cfg.sigma
        )));
    }
    if cfg.min_len == 0 || cfg.min_len > cfg.max_len {
        return Err(Error::InvalidParameter(format!(
            "length range {}..={} must be non-empty and start at 1 or more",
            cfg.min_len, cfg.max_len
        )));
    }
    let count = cfg.string_count().unwrap_or(u128::MAX);
    if count > cfg.cap {
        return Err(Error::InfeasibleBudget { count, cap: cfg.cap });
    }

    let pool = match cfg.jobs {
        Some(jobs) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?,
        ),
        None => None,
    };
    let run = |n: usize, blocks: std::ops::Range<u64>, total: u64| {
        let work = || {
            blocks
                .into_par_iter()
                .map(|b| run_block(cfg, n, b * BLOCK..((b + 1) * BLOCK).min(total)))
                .collect::<std::result::Result<Vec<_>, _>>()
        };
        match &pool {
            Some(pool) => pool.install(work),
            None => work(),
        }
    };

    let mut summary = SearchSummary {
        sigma: cfg.sigma,
        min_len: cfg.min_len,
        max_len: cfg.max_len,
        dedupe: cfg.dedupe,
        strings: 0,
        violation: None,
        lengths: Vec::new(),
        lemma_report: cfg.verify.then(LemmaReport::empty),
        partition_checks: 0,
        partition_failures: 0,
        first_partition_failure: None,
    };

    for n in cfg.min_len..=cfg.max_len {
        let total = (cfg.sigma as u64).pow(n as u32);
        let blocks = total.div_ceil(BLOCK);
        let mut length_summary: Option<LengthSummary> = None;
        let mut wave = 0;
        while wave < blocks {
            let upto = (wave + BLOCKS_PER_WAVE).min(blocks);
            let results = match run(n, wave..upto, total) {
                Ok(results) => results,
                Err(witness) => {
                    summary.violation = Some(witness);
                    return Ok(summary);
                }
            };
            let merged = results.into_iter().fold(BlockResult::default(), BlockResult::merge);
            for rec in &merged.records {
                sink(rec);
            }
            summary.strings += merged.records.len() as u64;
            length_summary = match (length_summary, merged.summary) {
                (Some(a), Some(b)) => Some(a.merge(b)),
                (a, b) => a.or(b),
            };
            if let (Some(acc), Some(r)) = (&mut summary.lemma_report, &merged.lemma) {
                acc.absorb(r);
            }
            summary.partition_checks += merged.partition_checks;
            summary.partition_failures += merged.partition_failures;
            if summary.first_partition_failure.is_none() {
                summary.first_partition_failure = merged.first_partition_failure;
            }
            wave = upto;
        }
        summary.lengths.extend(length_summary);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unary_strings() {
        let mut seen = Vec::new();
        let summary = exhaustive_search(&SearchConfig::new(1, 5), |r| seen.push(r.clone())).unwrap();
        assert_eq!(summary.strings, 5);
        assert!(seen.iter().all(|r| r.m == 1 && r.slack() > 0));
        let zs: Vec<usize> = seen.iter().map(|r| r.z).collect();
        // a, a.a, a.a.a, a.a.aa, a.a.aa.a
        assert_eq!(zs, vec![1, 2, 3, 3, 4]);
    }

    #[test]
    fn binary_counts_and_order() {
        let mut seen = Vec::new();
        let summary = exhaustive_search(&SearchConfig::new(2, 3), |r| seen.push(r.string.to_string())).unwrap();
        assert_eq!(summary.strings, 2 + 4 + 8);
        assert_eq!(&seen[..6], ["a", "b", "aa", "ab", "ba", "bb"]);
        assert!(summary.passed());
        assert_eq!(summary.lengths.len(), 3);
    }

    #[test]
    fn dedupe_keeps_canonical_forms() {
        let mut seen = Vec::new();
        let mut cfg = SearchConfig::new(3, 2);
        cfg.dedupe = true;
        exhaustive_search(&cfg, |r| seen.push(r.string.to_string())).unwrap();
        assert_eq!(seen, ["a", "aa", "ab", "ba"]);
    }

    #[test]
    fn budget_cap() {
        let mut cfg = SearchConfig::new(4, 20);
        cfg.cap = 1000;
        assert!(matches!(
            exhaustive_search(&cfg, |_| {}),
            Err(Error::InfeasibleBudget { .. })
        ));
        assert!(exhaustive_search(&SearchConfig::new(0, 3), |_| {}).is_err());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let collect = |jobs| {
            let mut cfg = SearchConfig::new(2, 13);
            cfg.jobs = Some(jobs);
            let mut lines = Vec::new();
            let summary = exhaustive_search(&cfg, |r| lines.push(r.to_tsv())).unwrap();
            (lines, serde_json::to_string(&summary).unwrap())
        };
        assert_eq!(collect(1), collect(4));
    }

    #[test]
    fn tsv_shape() {
        let rec = SearchRecord {
            sigma: 2,
            n: 2,
            string: Text::from("ba"),
            m: 2,
            z: 2,
        };
        assert_eq!(rec.to_tsv(), "2\t2\tba\t2\t2\t2");
    }
}
