//! Byte strings, 1-based spans, and the handful of comparisons every other
//! module is built from.
//!
//! Symbols are ordered by their unsigned byte value. Positions reported to
//! callers are 1-based and inclusive: `s[i..j]` covers the i-th through j-th
//! symbols.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An immutable byte string.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Text(Vec<u8>);

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text(bytes.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bytes covered by `span`. Panics if the span lies outside the text.
    pub fn slice(&self, span: Span) -> &[u8] {
        &self.0[span.range()]
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text(s.to_vec())
    }
}

impl From<Vec<u8>> for Text {
    fn from(s: Vec<u8>) -> Self {
        Text(s)
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", escape_bytes(&self.0))
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&escape_bytes(&self.0))
    }
}

/// Renders printable ASCII as-is and every other byte as `\xHH`.
pub fn escape_bytes(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len());
    for &b in bytes {
        if (0x20..0x7f).contains(&b) && b != b'\\' {
            out.push(b as char);
        } else {
            out.push_str(&format!("\\x{b:02x}"));
        }
    }
    out
}

/// A 1-based inclusive range of positions.
///
/// An empty span keeps its anchor in `start` and has `end == start - 1`, so
/// `s[start..start-1]` denotes the empty string sitting just before `start`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    start: usize,
    len: usize,
}

impl Span {
    /// Inclusive `start..=end`, 1-based. Panics when `start == 0` or `end < start - 1`.
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start >= 1, "spans are 1-based");
        assert!(end + 1 >= start, "span end {end} before start {start}");
        Span {
            start,
            len: end + 1 - start,
        }
    }

    pub fn with_len(start: usize, len: usize) -> Self {
        assert!(start >= 1, "spans are 1-based");
        Span { start, len }
    }

    pub fn empty(anchor: usize) -> Self {
        Span::with_len(anchor, 0)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Last covered position; `start - 1` for an empty span.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// 0-based half-open range for slicing.
    pub fn range(&self) -> Range<usize> {
        self.start - 1..self.start - 1 + self.len
    }

    pub fn contains_pos(&self, pos: usize) -> bool {
        pos >= self.start && pos < self.start + self.len
    }

    /// True when `other` lies inside `self`. Empty spans are contained
    /// wherever their anchor is.
    pub fn contains_span(&self, other: Span) -> bool {
        other.start >= self.start && other.start + other.len <= self.start + self.len
    }

    pub fn overlaps(&self, other: Span) -> bool {
        !self.is_empty()
            && !other.is_empty()
            && self.start < other.start + other.len
            && other.start < self.start + self.len
    }

    /// `self` immediately followed by `other`.
    pub fn join(&self, other: Span) -> Option<Span> {
        (self.start + self.len == other.start).then(|| Span::with_len(self.start, self.len + other.len))
    }

    pub fn check_within(&self, text_len: usize) -> Result<()> {
        if self.start + self.len > text_len + 1 {
            return Err(Error::SpanOutOfRange {
                start: self.start,
                end: self.end(),
                len: text_len,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end())
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end())
    }
}

impl Serialize for Span {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Span", 2)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("end", &self.end())?;
        st.end()
    }
}

/// Lexicographic order: a proper prefix is smaller, otherwise the first
/// mismatch decides.
pub fn lex_compare(u: &[u8], v: &[u8]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    u.len().cmp(&v.len())
}

/// A word is Lyndon when it is strictly smaller than each of its non-empty
/// proper suffixes.
pub fn is_lyndon(w: &[u8]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..w.len()).all(|k| lex_compare(w, &w[k..]) == Ordering::Less))
}

/// Smallest 1-based position at which `pattern` occurs in `s`.
pub fn leftmost_occurrence(s: &[u8], pattern: &[u8]) -> Result<Option<usize>> {
    leftmost_occurrence_from(s, pattern, 1)
}

/// Like [`leftmost_occurrence`] but ignores occurrences starting before `from`.
pub fn leftmost_occurrence_from(s: &[u8], pattern: &[u8], from: usize) -> Result<Option<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if pattern.len() > s.len() {
        return Ok(None);
    }
    let from = from.max(1);
    let last = s.len() - pattern.len();
    Ok((from - 1..=last)
        .find(|&p| &s[p..p + pattern.len()] == pattern)
        .map(|p| p + 1))
}
