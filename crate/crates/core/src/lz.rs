//! Non-overlapping LZ factorization `s = p_1 ... p_z`.
//!
//! Each phrase is either the first occurrence of a letter or the longest
//! prefix of the remaining suffix that occurs entirely inside the already
//! parsed prefix `p_1 ... p_{i-1}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::{leftmost_occurrence, Span, Text};

/// Default length limit for [`oracle_lz_naive`].
pub const ORACLE_LZ_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LzFactorization {
    phrases: Vec<Span>,
    #[serde(skip)]
    text_len: usize,
}

impl LzFactorization {
    fn from_lengths(text_len: usize, lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut pos = 1;
        let phrases = lengths
            .into_iter()
            .map(|len| {
                let span = Span::with_len(pos, len);
                pos += len;
                span
            })
            .collect();
        LzFactorization { phrases, text_len }
    }

    pub fn phrases(&self) -> &[Span] {
        &self.phrases
    }

    pub fn z(&self) -> usize {
        self.phrases.len()
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    /// Sorted phrase start positions.
    pub fn boundary_positions(&self) -> Vec<usize> {
        self.phrases.iter().map(Span::start).collect()
    }

    /// Number of phrase starts inside `window`.
    pub fn count_boundaries(&self, window: Span) -> usize {
        let lo = self.phrases.partition_point(|p| p.start() < window.start());
        let hi = self.phrases.partition_point(|p| p.start() <= window.end());
        hi.saturating_sub(lo)
    }

    /// True iff some phrase starts inside `window`.
    pub fn contains_boundary(&self, window: Span) -> Result<bool> {
        if window.is_empty() {
            return Err(Error::SpanOutOfRange {
                start: window.start(),
                end: window.end(),
                len: self.text_len,
            });
        }
        window.check_within(self.text_len)?;
        Ok(self.count_boundaries(window) > 0)
    }

    pub fn phrase_bytes<'a>(&self, text: &'a Text) -> Vec<&'a [u8]> {
        self.phrases.iter().map(|&p| text.slice(p)).collect()
    }
}

/// Greedy parse driven by an online suffix automaton of the parsed prefix.
///
/// The automaton recognizes exactly the substrings of `s[..pos]`, so walking
/// it from the root along `s[pos..]` stops at the longest prefix with a fully
/// non-overlapping earlier occurrence. Total work is linear in `|s|`.
pub fn lz_factorize(s: &Text) -> LzFactorization {
    let b = s.as_bytes();
    let mut sam = SuffixAutomaton::with_capacity(b.len());
    let mut lengths = Vec::new();
    let mut pos = 0;
    while pos < b.len() {
        let mut state = 0;
        let mut len = 0;
        while pos + len < b.len() {
            match sam.next(state, b[pos + len]) {
                Some(t) => {
                    state = t;
                    len += 1;
                }
                None => break,
            }
        }
        let len = len.max(1);
        for &c in &b[pos..pos + len] {
            sam.extend(c);
        }
        lengths.push(len);
        pos += len;
    }
    LzFactorization::from_lengths(b.len(), lengths)
}

/// Literal transcription of the greedy rule using only leftmost-occurrence
/// search over the parsed prefix.
pub fn oracle_lz_naive(s: &Text) -> Result<LzFactorization> {
    oracle_lz_naive_bounded(s, ORACLE_LZ_BOUND)
}

pub fn oracle_lz_naive_bounded(s: &Text, bound: usize) -> Result<LzFactorization> {
    if s.len() > bound {
        return Err(Error::InputTooLong { len: s.len(), bound });
    }
    let b = s.as_bytes();
    let mut lengths = Vec::new();
    let mut pos = 0;
    while pos < b.len() {
        let prefix = &b[..pos];
        let mut len = 0;
        while pos + len < b.len() && leftmost_occurrence(prefix, &b[pos..=pos + len])?.is_some() {
            len += 1;
        }
        let len = len.max(1);
        lengths.push(len);
        pos += len;
    }
    Ok(LzFactorization::from_lengths(b.len(), lengths))
}

/// Outgoing transitions sorted by symbol. Most states have few, so a flat
/// vector beats a tree.
#[derive(Debug, Default, Clone)]
struct Transitions(Vec<(u8, usize)>);

impl Transitions {
    fn get(&self, c: u8) -> Option<usize> {
        self.0.binary_search_by_key(&c, |&(k, _)| k).ok().map(|i| self.0[i].1)
    }

    fn insert(&mut self, c: u8, to: usize) {
        match self.0.binary_search_by_key(&c, |&(k, _)| k) {
            Ok(i) => self.0[i].1 = to,
            Err(i) => self.0.insert(i, (c, to)),
        }
    }
}

#[derive(Debug, Default)]
struct SamState {
    len: usize,
    link: Option<usize>,
    next: Transitions,
}

#[derive(Debug)]
struct SuffixAutomaton {
    states: Vec<SamState>,
    last: usize,
}

impl SuffixAutomaton {
    fn with_capacity(n: usize) -> Self {
        let mut states = Vec::with_capacity(2 * n + 1);
        states.push(SamState::default());
        SuffixAutomaton { states, last: 0 }
    }

    fn next(&self, state: usize, c: u8) -> Option<usize> {
        self.states[state].next.get(c)
    }

    fn extend(&mut self, c: u8) {
        let cur = self.states.len();
        self.states.push(SamState {
            len: self.states[self.last].len + 1,
            ..Default::default()
        });
        let mut p = Some(self.last);
        while let Some(q) = p {
            if self.states[q].next.get(c).is_some() {
                break;
            }
            self.states[q].next.insert(c, cur);
            p = self.states[q].link;
        }
        match p {
            None => self.states[cur].link = Some(0),
            Some(p) => {
                let q = self.states[p]
                    .next
                    .get(c)
                    .expect("walk stopped on an existing transition");
                if self.states[p].len + 1 == self.states[q].len {
                    self.states[cur].link = Some(q);
                } else {
                    let clone = self.states.len();
                    self.states.push(SamState {
                        len: self.states[p].len + 1,
                        link: self.states[q].link,
                        next: self.states[q].next.clone(),
                    });
                    let mut r = Some(p);
                    while let Some(x) = r {
                        if self.states[x].next.get(c) != Some(q) {
                            break;
                        }
                        self.states[x].next.insert(c, clone);
                        r = self.states[x].link;
                    }
                    self.states[q].link = Some(clone);
                    self.states[cur].link = Some(clone);
                }
            }
        }
        self.last = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phrases(s: &str) -> Vec<String> {
        let t = Text::from(s);
        lz_factorize(&t)
            .phrase_bytes(&t)
            .into_iter()
            .map(|p| String::from_utf8(p.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn family_two_and_three() {
        assert_eq!(phrases("babaababaaba"), ["b", "a", "ba", "aba", "baaba"]);
        assert_eq!(
            phrases("babaababaabaaababaaabaabaaaba"),
            ["b", "a", "ba", "aba", "baaba", "aababaa", "abaabaaaba"]
        );
    }

    #[test]
    fn repeated_letter() {
        assert_eq!(phrases("aaaa"), ["a", "a", "aa"]);
        assert_eq!(phrases("ba"), ["b", "a"]);
        assert!(phrases("").is_empty());
    }

    #[test]
    fn sample_boundaries() {
        let lz = lz_factorize(&Text::from("abbabbababbababbbababbaba"));
        assert_eq!(lz.z(), 8);
        assert_eq!(lz.boundary_positions(), vec![1, 2, 3, 4, 7, 9, 14, 17]);
        assert!(lz.contains_boundary(Span::new(10, 14)).unwrap());
        assert!(lz.contains_boundary(Span::new(1, 1)).unwrap());
        assert!(!lz.contains_boundary(Span::new(10, 13)).unwrap());
        assert_eq!(lz.count_boundaries(Span::new(1, 25)), 8);
        assert_eq!(lz.count_boundaries(Span::new(15, 25)), 1);
    }

    #[test]
    fn boundary_window_errors() {
        let lz = lz_factorize(&Text::from("babaababaaba"));
        assert_eq!(lz.boundary_positions(), vec![1, 2, 3, 5, 8]);
        assert!(!lz.contains_boundary(Span::new(9, 12)).unwrap());
        assert!(lz.contains_boundary(Span::new(8, 9)).unwrap());
        assert!(lz.contains_boundary(Span::new(10, 13)).is_err());
        assert!(lz.contains_boundary(Span::empty(3)).is_err());
    }

    #[test]
    fn oracle_examples() {
        for s in ["ba", "aaaa", "babaababaaba", "abbabbababbababbbababbaba", ""] {
            let t = Text::from(s);
            assert_eq!(oracle_lz_naive(&t).unwrap(), lz_factorize(&t), "{s}");
        }
        assert!(oracle_lz_naive_bounded(&Text::from("abc"), 2).is_err());
    }
}
