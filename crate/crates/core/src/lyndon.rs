//! Lyndon factorization `s = f_1^{e_1} ... f_m^{e_m}` with runs `F_i = f_i^{e_i}`.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::{is_lyndon, lex_compare, Span, Text};

/// Default length limit for [`oracle_lyndon_dp`].
pub const ORACLE_LYNDON_BOUND: usize = 24;

/// One Lyndon run: `exponent` consecutive copies of the factor at `factor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LyndonRun {
    /// First period of the run.
    pub factor: Span,
    pub exponent: usize,
    /// The whole run, `factor.len() * exponent` symbols long.
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    text: Text,
    runs: Vec<LyndonRun>,
}

impl LyndonFactorization {
    /// Builds a factorization from `(factor_len, exponent)` pairs, laid out left to right.
    fn from_periods(text: Text, periods: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut runs = Vec::new();
        let mut pos = 1;
        for (len, exponent) in periods {
            runs.push(LyndonRun {
                factor: Span::with_len(pos, len),
                exponent,
                span: Span::with_len(pos, len * exponent),
            });
            pos += len * exponent;
        }
        debug_assert_eq!(pos, text.len() + 1);
        LyndonFactorization { text, runs }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    /// Number of runs.
    pub fn m(&self) -> usize {
        self.runs.len()
    }

    pub fn runs(&self) -> &[LyndonRun] {
        &self.runs
    }

    /// Run `F_i`, 1-based.
    pub fn run(&self, i: usize) -> &LyndonRun {
        &self.runs[i - 1]
    }

    /// The factor `f_i` as bytes.
    pub fn factor_bytes(&self, i: usize) -> &[u8] {
        self.text.slice(self.run(i).factor)
    }

    /// The run `F_i` as bytes.
    pub fn run_bytes(&self, i: usize) -> &[u8] {
        self.text.slice(self.run(i).span)
    }

    /// Span of `F_first ... F_last`; empty (anchored at `F_first`) when `last < first`.
    pub fn runs_span(&self, first: usize, last: usize) -> Span {
        let start = if first <= self.m() {
            self.run(first).span.start()
        } else {
            self.text.len() + 1
        };
        if last < first {
            return Span::empty(start);
        }
        Span::new(start, self.run(last).span.end())
    }

    pub fn runs_bytes(&self, first: usize, last: usize) -> &[u8] {
        self.text.slice(self.runs_span(first, last))
    }

    /// Index of the run starting exactly at `pos`, if any.
    pub fn run_starting_at(&self, pos: usize) -> Option<usize> {
        self.runs
            .binary_search_by(|r| r.span.start().cmp(&pos))
            .ok()
            .map(|i| i + 1)
    }

    /// Concatenates every factor `exponent` times.
    pub fn reassemble(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.text.len());
        for r in &self.runs {
            for _ in 0..r.exponent {
                out.extend_from_slice(self.text.slice(r.factor));
            }
        }
        out
    }

    /// `(factor, exponent)` pairs as owned byte strings; convenient for comparisons.
    pub fn factor_list(&self) -> Vec<(Vec<u8>, usize)> {
        self.runs
            .iter()
            .map(|r| (self.text.slice(r.factor).to_vec(), r.exponent))
            .collect()
    }
}

/// Duval's linear-time factorization.
pub fn lyndon_factorize(s: &Text) -> LyndonFactorization {
    let b = s.as_bytes();
    let n = b.len();
    let mut periods: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && b[k] <= b[j] {
            if b[k] < b[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            match periods.last_mut() {
                Some((len, e)) if *len == period && b[i - period..i] == b[i..i + period] => *e += 1,
                _ => periods.push((period, 1)),
            }
            i += period;
        }
    }
    LyndonFactorization::from_periods(s.clone(), periods)
}

/// Brute-force reference: tries every cut sequence into Lyndon words that are
/// non-increasing left to right and requires exactly one to exist.
pub fn oracle_lyndon_dp(s: &Text) -> Result<LyndonFactorization> {
    oracle_lyndon_dp_bounded(s, ORACLE_LYNDON_BOUND)
}

pub fn oracle_lyndon_dp_bounded(s: &Text, bound: usize) -> Result<LyndonFactorization> {
    if s.len() > bound {
        return Err(Error::InputTooLong { len: s.len(), bound });
    }
    let mut search = CutSearch {
        s: s.as_bytes(),
        memo: HashMap::new(),
    };
    let found = search.count(0, None);
    if found != 1 {
        return Err(Error::UniquenessViolated { found });
    }

    let mut factors: Vec<(usize, usize)> = Vec::new();
    let (mut pos, mut prev) = (0, None);
    while pos < s.len() {
        let end = search.memo[&(pos, prev)].1.expect("counted path exists");
        factors.push((pos, end));
        prev = Some(pos);
        pos = end;
    }

    let b = s.as_bytes();
    let mut periods: Vec<(usize, usize)> = Vec::new();
    let mut last: Option<&[u8]> = None;
    for (start, end) in factors {
        let f = &b[start..end];
        match (last, periods.last_mut()) {
            (Some(l), Some((_, e))) if l == f => *e += 1,
            _ => periods.push((f.len(), 1)),
        }
        last = Some(f);
    }
    Ok(LyndonFactorization::from_periods(s.clone(), periods))
}

struct CutSearch<'a> {
    s: &'a [u8],
    /// `(pos, start of previous factor)` -> (completions, first successful cut end)
    memo: HashMap<(usize, Option<usize>), (usize, Option<usize>)>,
}

impl CutSearch<'_> {
    fn count(&mut self, pos: usize, prev: Option<usize>) -> usize {
        if pos == self.s.len() {
            return 1;
        }
        if let Some(&(c, _)) = self.memo.get(&(pos, prev)) {
            return c;
        }
        let mut total = 0usize;
        let mut first = None;
        for end in pos + 1..=self.s.len() {
            let cand = &self.s[pos..end];
            if let Some(p) = prev {
                // once a candidate exceeds the previous factor every extension does too
                if lex_compare(cand, &self.s[p..pos]) == Ordering::Greater {
                    break;
                }
            }
            if !is_lyndon(cand).expect("non-empty") {
                continue;
            }
            let c = self.count(end, Some(pos));
            if c > 0 && first.is_none() {
                first = Some(end);
            }
            total = total.saturating_add(c);
        }
        self.memo.insert((pos, prev), (total, first));
        total
    }
}
